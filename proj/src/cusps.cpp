#include "prymtopo/cusps.hpp"

#include <numeric>
#include <string>

#include "prymtopo/errors.hpp"

namespace prymtopo {

namespace {

void require_nonsquare(const Discriminant& D) {
    if (D.is_square()) {
        throw SquareDiscriminant("square discriminant " + std::to_string(D.value()) +
                                 " is out of scope");
    }
}

// Divisors of m in increasing order.
std::vector<std::int64_t> divisors(std::int64_t m) {
    std::vector<std::int64_t> low;
    std::vector<std::int64_t> high;
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            low.push_back(d);
            if (d * d != m) {
                high.push_back(m / d);
            }
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

template <typename Visit>
void for_each_prototype(std::int64_t D, Visit&& visit) {
    const std::int64_t emax = isqrt(D);
    for (std::int64_t e = -emax; e <= emax; ++e) {
        const std::int64_t rest = D - e * e;
        if (rest <= 0 || rest % 4 != 0) {
            continue;
        }
        const std::int64_t m = rest / 4;
        for (const std::int64_t b : divisors(m)) {
            const std::int64_t c = m / b;
            if (c + e >= b) {
                continue;
            }
            const std::int64_t g = std::gcd(b, c);
            const std::int64_t ge = std::gcd(g, e);
            for (std::int64_t a = 0; a < g; ++a) {
                if (std::gcd(a, ge) == 1) {
                    visit(Prototype{a, b, c, e});
                }
            }
        }
    }
}

} // namespace

bool operator==(const Prototype& x, const Prototype& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.e == y.e;
}

bool is_prototype(std::int64_t D, const Prototype& p) {
    return D == p.e * p.e + 4 * p.b * p.c && p.b > 0 && p.c > 0 && p.c + p.e < p.b &&
           p.a >= 0 && p.a < std::gcd(p.b, p.c) &&
           std::gcd(std::gcd(p.a, p.b), std::gcd(p.c, p.e)) == 1;
}

std::vector<Prototype> list_prototypes(const Discriminant& D) {
    require_nonsquare(D);
    std::vector<Prototype> out;
    for_each_prototype(D.value(), [&](const Prototype& p) { out.push_back(p); });
    return out;
}

std::int64_t count_cusps(const Discriminant& D) {
    require_nonsquare(D);
    std::int64_t n = 0;
    for_each_prototype(D.value(), [&](const Prototype&) { ++n; });
    return n;
}

} // namespace prymtopo
