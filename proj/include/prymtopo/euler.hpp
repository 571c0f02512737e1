#pragma once

#include <cstdint>

#include "prymtopo/arith.hpp"

namespace prymtopo {

// Exact ingredients of the orbifold Euler characteristic of W_D.
struct ChiBreakdown {
    Rat zeta_m1;   // value at -1 of the Dedekind zeta function of Q(sqrt(D0))
    Rat F;         // Euler product over the primes dividing the conductor
    Rat chi_X;     // Hilbert modular surface, 2 f^3 zeta_m1 F
    Rat chi_W;     // Teichmueller curve, -7 chi_X
};

// Siegel's divisor sum (1/60) * sum over b^2 < D0, b = D0 (mod 2) of
// sigma1((D0 - b^2) / 4). Throws DomainError unless D0 > 1 is fundamental.
Rat zeta_m1(std::int64_t D0);

// Product over primes p | f of (1 - (D0/p) p^-2). Throws SquareDiscriminant.
Rat F_correction(const Discriminant& D);

// Throws SquareDiscriminant for square D.
ChiBreakdown chi_breakdown(const Discriminant& D);

} // namespace prymtopo
