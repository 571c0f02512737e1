#pragma once

#include <cstdint>
#include <vector>

#include "prymtopo/arith.hpp"

namespace prymtopo {

// A primitive solution of a^2 + 3j^2 + (2i - j)^2 = D.
struct E3Solution {
    std::int64_t a = 0;
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend auto operator<=>(const E3Solution&, const E3Solution&) = default;
};

// Number of orbifold points of order 2. Requires D > 4.
std::int64_t e2(const Discriminant& D);

// Count of integer triples (a, i, j) with a^2 + 3j^2 + (2i - j)^2 = D and
// gcd(a, i, j) = 1.
std::int64_t e3_raw(const Discriminant& D);

// The triples counted by e3_raw, sorted by (a, i, j).
std::vector<E3Solution> e3_solutions(const Discriminant& D);

// Number of orbifold points of order 3: e3_raw / 12, and 0 for D = 12.
// Throws InternalError if the raw count is not divisible by 12.
std::int64_t e3(const Discriminant& D);

std::int64_t e5(const Discriminant& D);
std::int64_t e6(const Discriminant& D);

} // namespace prymtopo
