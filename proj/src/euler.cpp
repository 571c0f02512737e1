#include "prymtopo/euler.hpp"

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

} // namespace

Rat zeta_m1(std::int64_t D0) {
    if (D0 <= 1 || !is_fundamental_discriminant(D0)) {
        throw DomainError(std::to_string(D0) + " is not a fundamental discriminant > 1");
    }
    std::int64_t sum = 0;
    const std::int64_t bmax = isqrt(D0);
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
        if (b * b >= D0 || ((D0 - b) & 1) != 0) {
            continue;
        }
        sum += sigma1((D0 - b * b) / 4);
    }
    return Rat(sum, 60);
}

Rat F_correction(const Discriminant& D) {
    require_nonsquare(D);
    Rat F(1);
    for (const std::int64_t p : prime_divisors(D.conductor())) {
        F *= Rat(1) - Rat(kronecker(D.fundamental(), p), p * p);
    }
    return F;
}

ChiBreakdown chi_breakdown(const Discriminant& D) {
    require_nonsquare(D);
    ChiBreakdown out;
    out.zeta_m1 = zeta_m1(D.fundamental());
    out.F = F_correction(D);
    const std::int64_t f = D.conductor();
    out.chi_X = Rat(2 * f * f * f) * out.zeta_m1 * out.F;
    out.chi_W = Rat(-7) * out.chi_X;
    return out;
}

} // namespace prymtopo
