#include "prymtopo/orbifold.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "prymtopo/class_numbers.hpp"
#include "prymtopo/errors.hpp"

namespace prymtopo {

namespace {

// Calls visit(a, i, j) for each primitive solution, ordered by (j, a, i).
template <typename Visit>
void for_each_e3_solution(std::int64_t D, Visit&& visit) {
    const std::int64_t jmax = isqrt(D / 3);
    for (std::int64_t j = -jmax; j <= jmax; ++j) {
        const std::int64_t rest = D - 3 * j * j;
        const std::int64_t amax = isqrt(rest);
        for (std::int64_t a = -amax; a <= amax; ++a) {
            const std::int64_t t = rest - a * a;
            const std::int64_t s = isqrt(t);
            if (s * s != t) {
                continue;
            }
            // 2i - j = +-s needs s and j of equal parity.
            if (((s + j) & 1) != 0) {
                continue;
            }
            for (const std::int64_t u : {-s, s}) {
                const std::int64_t i = (u + j) / 2;
                if (std::gcd(std::gcd(a, i), j) == 1) {
                    visit(a, i, j);
                }
                if (s == 0) {
                    break;
                }
            }
        }
    }
}

} // namespace

std::int64_t e2(const Discriminant& D) {
    const std::int64_t d = D.value();
    if (d <= 4) {
        throw DomainError("e2 requires D > 4, got " + std::to_string(d));
    }
    if (d % 2 == 1) {
        return 0;
    }
    // At D = 12 one of the two order-2 points is the order-6 point.
    if (d == 8 || d == 12) {
        return 1;
    }
    if (d % 16 == 12) {
        return h_neg(d) + h_neg(d / 4);
    }
    return h_neg(d);
}

std::int64_t e3_raw(const Discriminant& D) {
    std::int64_t count = 0;
    for_each_e3_solution(D.value(), [&](std::int64_t, std::int64_t, std::int64_t) { ++count; });
    return count;
}

std::vector<E3Solution> e3_solutions(const Discriminant& D) {
    std::vector<E3Solution> out;
    for_each_e3_solution(D.value(), [&](std::int64_t a, std::int64_t i, std::int64_t j) {
        out.push_back({a, i, j});
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t e3(const Discriminant& D) {
    if (D.value() == 12) {
        return 0;
    }
    const std::int64_t raw = e3_raw(D);
    if (raw % 12 != 0) {
        throw InternalError("e3 count " + std::to_string(raw) + " for D = " +
                            std::to_string(D.value()) + " is not divisible by 12");
    }
    return raw / 12;
}

std::int64_t e5(const Discriminant& D) {
    return D.value() == 5 ? 1 : 0;
}

std::int64_t e6(const Discriminant& D) {
    return D.value() == 12 ? 1 : 0;
}

} // namespace prymtopo
