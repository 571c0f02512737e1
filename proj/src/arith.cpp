#include "prymtopo/arith.hpp"

#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "prymtopo/errors.hpp"

namespace prymtopo {

Rat::Rat(const Int& num, const Int& den) : q_(num, den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    q_.canonicalize();
}

Rat::Rat(std::int64_t num, std::int64_t den) : Rat(Int(static_cast<long>(num)), Int(static_cast<long>(den))) {}

Rat& Rat::operator/=(const Rat& o) {
    if (o.q_ == 0) {
        throw DomainError("division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::string Rat::str() const {
    if (is_integer()) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) {
        throw DomainError("isqrt of negative number " + std::to_string(n));
    }
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    // Correct the floating point estimate in either direction; squares near
    // the top of the range need 128 bits.
    auto sq = [](std::int64_t x) { return static_cast<__int128>(x) * x; };
    while (r > 0 && sq(r) > n) {
        --r;
    }
    while (sq(r + 1) <= n) {
        ++r;
    }
    return r;
}

bool is_square(std::int64_t n) {
    if (n < 0) {
        throw DomainError("is_square of negative number " + std::to_string(n));
    }
    const std::int64_t r = isqrt(n);
    return r * r == n;
}

bool is_squarefree(std::int64_t n) {
    if (n < 0) {
        n = -n;
    }
    if (n == 0) {
        return false;
    }
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return false;
            }
        }
    }
    return true;
}

bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 1) {
        return true;
    }
    const std::int64_t r = ((d % 4) + 4) % 4;
    if (r == 1) {
        return is_squarefree(d);
    }
    if (r == 0) {
        const std::int64_t m = d / 4;
        const std::int64_t mr = ((m % 4) + 4) % 4;
        return (mr == 2 || mr == 3) && is_squarefree(m);
    }
    return false;
}

Discriminant parse_discriminant(std::int64_t n) {
    if (n <= 0) {
        throw NotADiscriminant(std::to_string(n) + " is not a discriminant: must be positive");
    }
    if (n % 4 == 2 || n % 4 == 3) {
        throw NotADiscriminant(std::to_string(n) + " is not a discriminant: must be 0 or 1 mod 4");
    }
    // Strip square factors p^2 as long as the cofactor stays a discriminant.
    std::int64_t f = 1;
    std::int64_t d0 = n;
    for (std::int64_t p = 2; p * p <= d0; ++p) {
        while (d0 % (p * p) == 0) {
            const std::int64_t q = d0 / (p * p);
            if (q % 4 != 0 && q % 4 != 1) {
                break;
            }
            d0 = q;
            f *= p;
        }
    }
    if (!is_fundamental_discriminant(d0)) {
        throw InternalError("conductor decomposition of " + std::to_string(n) +
                            " left a non-fundamental part " + std::to_string(d0));
    }
    return Discriminant(n, f, d0);
}

std::int64_t sigma1(std::int64_t n) {
    if (n < 1) {
        throw DomainError("sigma1 requires n >= 1, got " + std::to_string(n));
    }
    std::int64_t result = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        std::int64_t term = 1;
        std::int64_t pk = 1;
        while (n % p == 0) {
            n /= p;
            pk *= p;
            term += pk;
        }
        result *= term;
    }
    if (n > 1) {
        result *= n + 1;
    }
    return result;
}

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) {
        return (a == 1 || a == -1) ? 1 : 0;
    }
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) {
            sign = -1;
        }
    }
    // Factor out powers of two from n using the (a/2) table.
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (a % 2 == 0) {
            return 0;
        }
        const std::int64_t r = ((a % 8) + 8) % 8;
        if ((twos & 1) && (r == 3 || r == 5)) {
            sign = -sign;
        }
    }
    // Jacobi symbol (a/n) for odd positive n.
    std::int64_t x = ((a % n) + n) % n;
    std::int64_t m = n;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            const std::int64_t r = m % 8;
            if (r == 3 || r == 5) {
                sign = -sign;
            }
        }
        std::swap(x, m);
        if (x % 4 == 3 && m % 4 == 3) {
            sign = -sign;
        }
        x %= m;
    }
    return m == 1 ? sign : 0;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    if (n < 1) {
        throw DomainError("prime_divisors requires n >= 1");
    }
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

} // namespace prymtopo
