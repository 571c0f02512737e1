#pragma once

#include <cstdint>
#include <vector>

#include "prymtopo/arith.hpp"

namespace prymtopo {

/*
 * Splitting prototype (a, b, c, e) for a cusp of the genus two Weierstrass
 * curve of discriminant D:
 *   D = e^2 + 4bc,  b > 0,  c > 0,  c + e < b,  0 <= a < gcd(b, c),
 *   gcd(a, b, c, e) = 1.
 * W_D(6) has the same number of cusps.
 */
struct Prototype {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t e = 0;
};

bool operator==(const Prototype& x, const Prototype& y);

bool is_prototype(std::int64_t D, const Prototype& p);

// All prototypes sorted by (e, b, c, a). Throws SquareDiscriminant.
std::vector<Prototype> list_prototypes(const Discriminant& D);

std::int64_t count_cusps(const Discriminant& D);

} // namespace prymtopo
