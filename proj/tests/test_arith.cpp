#include <cstdint>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "prymtopo/arith.hpp"
#include "prymtopo/errors.hpp"

using namespace prymtopo;

namespace {

std::int64_t sigma1_brute(std::int64_t n) {
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            s += d;
        }
    }
    return s;
}

// Legendre symbol for an odd prime by listing the squares mod p.
int legendre_brute(std::int64_t a, std::int64_t p) {
    const std::int64_t r = ((a % p) + p) % p;
    if (r == 0) {
        return 0;
    }
    for (std::int64_t x = 1; x < p; ++x) {
        if (x * x % p == r) {
            return 1;
        }
    }
    return -1;
}

bool is_prime(std::int64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST(ParseDiscriminant, RejectsNonDiscriminants) {
    EXPECT_THROW(parse_discriminant(7), NotADiscriminant);
    EXPECT_THROW(parse_discriminant(0), NotADiscriminant);
    EXPECT_THROW(parse_discriminant(-3), NotADiscriminant);
    EXPECT_THROW(parse_discriminant(10), NotADiscriminant);
}

TEST(ParseDiscriminant, ConductorDecomposition) {
    const Discriminant d45 = parse_discriminant(45);
    EXPECT_EQ(d45.conductor(), 3);
    EXPECT_EQ(d45.fundamental(), 5);
    EXPECT_FALSE(d45.is_square());

    const Discriminant d8 = parse_discriminant(8);
    EXPECT_EQ(d8.conductor(), 1);
    EXPECT_EQ(d8.fundamental(), 8);

    const Discriminant d200 = parse_discriminant(200);
    EXPECT_EQ(d200.conductor(), 5);
    EXPECT_EQ(d200.fundamental(), 8);

    const Discriminant d48 = parse_discriminant(48);
    EXPECT_EQ(d48.conductor(), 2);
    EXPECT_EQ(d48.fundamental(), 12);

    const Discriminant d36 = parse_discriminant(36);
    EXPECT_TRUE(d36.is_square());
    EXPECT_EQ(d36.conductor(), 6);
}

TEST(ParseDiscriminant, DecompositionPropertyUpTo20000) {
    for (std::int64_t n = 1; n <= 20000; ++n) {
        if (n % 4 == 2 || n % 4 == 3) {
            continue;
        }
        const Discriminant d = parse_discriminant(n);
        ASSERT_EQ(d.conductor() * d.conductor() * d.fundamental(), n) << n;
        ASSERT_TRUE(is_fundamental_discriminant(d.fundamental())) << n;
        ASSERT_EQ(d.is_square(), is_square(n)) << n;
        ASSERT_EQ(d.residue(), n % 4);
    }
}

TEST(FundamentalDiscriminant, Predicate) {
    EXPECT_TRUE(is_fundamental_discriminant(5));
    EXPECT_TRUE(is_fundamental_discriminant(8));
    EXPECT_TRUE(is_fundamental_discriminant(12));
    EXPECT_TRUE(is_fundamental_discriminant(-4));
    EXPECT_FALSE(is_fundamental_discriminant(20));
    EXPECT_FALSE(is_fundamental_discriminant(16));
    EXPECT_FALSE(is_fundamental_discriminant(45));
}

TEST(Sigma1, Examples) {
    EXPECT_EQ(sigma1(1), 1);
    EXPECT_EQ(sigma1(6), 12);
    EXPECT_EQ(sigma1(12), sigma1_brute(12));
    EXPECT_EQ(sigma1(12), 28);
    EXPECT_THROW(sigma1(0), DomainError);
    EXPECT_THROW(sigma1(-4), DomainError);
}

TEST(Sigma1, MatchesDivisorLoop) {
    for (std::int64_t n = 1; n <= 3000; ++n) {
        ASSERT_EQ(sigma1(n), sigma1_brute(n)) << n;
    }
}

TEST(Sigma1, MultiplicativeOnCoprimePairs) {
    for (std::int64_t n = 1; n <= 150; ++n) {
        for (std::int64_t m = 1; m <= 150; ++m) {
            if (std::gcd(n, m) == 1) {
                ASSERT_EQ(sigma1(n * m), sigma1(n) * sigma1(m)) << n << " " << m;
            }
        }
    }
}

TEST(Kronecker, Examples) {
    EXPECT_EQ(kronecker(5, 2), -1);
    EXPECT_EQ(kronecker(5, 3), -1);
    EXPECT_EQ(kronecker(8, 2), 0);
    EXPECT_EQ(kronecker(17, 2), 1);
    EXPECT_EQ(kronecker(13, 2), -1);
    for (std::int64_t a = -20; a <= 20; ++a) {
        EXPECT_EQ(kronecker(a, 1), 1);
    }
}

TEST(Kronecker, TwoTable) {
    for (std::int64_t a = -40; a <= 40; ++a) {
        const std::int64_t r = ((a % 8) + 8) % 8;
        const int expected = a % 2 == 0 ? 0 : (r == 1 || r == 7 ? 1 : -1);
        EXPECT_EQ(kronecker(a, 2), expected) << a;
    }
}

TEST(Kronecker, MatchesLegendreAtOddPrimes) {
    for (std::int64_t p = 3; p < 200; ++p) {
        if (!is_prime(p)) {
            continue;
        }
        for (std::int64_t a = -50; a <= 250; ++a) {
            ASSERT_EQ(kronecker(a, p), legendre_brute(a, p)) << a << " " << p;
        }
    }
}

TEST(Kronecker, MultiplicativeInDenominator) {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> as(-500, 500);
    std::uniform_int_distribution<std::int64_t> ns(1, 400);
    for (int t = 0; t < 5000; ++t) {
        const std::int64_t a = as(rng);
        const std::int64_t n = ns(rng);
        const std::int64_t m = ns(rng);
        ASSERT_EQ(kronecker(a, n * m), kronecker(a, n) * kronecker(a, m)) << a << " " << n << " " << m;
    }
}

TEST(Isqrt, Examples) {
    EXPECT_EQ(isqrt(0), 0);
    EXPECT_EQ(isqrt(195), 13);
    EXPECT_EQ(isqrt(196), 14);
    EXPECT_TRUE(is_square(196));
    EXPECT_FALSE(is_square(195));
    EXPECT_THROW(isqrt(-1), DomainError);
    EXPECT_THROW(is_square(-4), DomainError);
}

TEST(Isqrt, ExactNearLargeSquares) {
    for (std::int64_t r : {std::int64_t{1} << 20, std::int64_t{3037000499}, std::int64_t{99999999}}) {
        EXPECT_EQ(isqrt(r * r), r);
        EXPECT_EQ(isqrt(r * r - 1), r - 1);
        EXPECT_EQ(isqrt(r * r + 1), r);
    }
}

TEST(PrimeDivisors, Examples) {
    EXPECT_EQ(prime_divisors(1), std::vector<std::int64_t>{});
    EXPECT_EQ(prime_divisors(360), (std::vector<std::int64_t>{2, 3, 5}));
    EXPECT_EQ(prime_divisors(97), std::vector<std::int64_t>{97});
}

TEST(Rat, CanonicalForm) {
    const Rat r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rat(10, 5).str(), "2");
    EXPECT_EQ(Rat(1, 3) + Rat(1, 6), Rat(1, 2));
    EXPECT_THROW(Rat(1, 0), DomainError);
    EXPECT_THROW(Rat(1) / Rat(0), DomainError);
}

TEST(Rat, SumsStayReduced) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> nums(-100000, 100000);
    std::uniform_int_distribution<std::int64_t> dens(1, 100000);
    for (int t = 0; t < 1000; ++t) {
        const Rat a(nums(rng), dens(rng));
        const Rat b(nums(rng), dens(rng));
        const Rat s = a + b;
        ASSERT_EQ(gcd(s.num(), s.den()), 1);
        ASSERT_GT(s.den(), 0);
        ASSERT_EQ(s - b, a);
    }
}
