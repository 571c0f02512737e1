#pragma once

#include <cstdint>
#include <vector>

#include "prymtopo/arith.hpp"
#include "prymtopo/euler.hpp"

namespace prymtopo {

/**
 * Topological type of W_D(6): connected components, orbifold Euler
 * characteristic, cusps, orbifold points of each order and the genus
 * solved from
 *
 *     2 h0 - 2 g = chi + C + sum_d e_d (1 - 1/d).
 */
struct InvariantRecord {
    std::int64_t D = 0;
    std::int64_t h0 = 1;  // W_D(6) is always connected
    Rat chi;
    std::int64_t C = 0;
    std::int64_t e2 = 0;
    std::int64_t e3 = 0;
    std::int64_t e5 = 0;
    std::int64_t e6 = 0;
    std::int64_t genus = 0;

    friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

// Right hand side of the orbifold Euler formula for the given counts.
Rat euler_formula_rhs(const Rat& chi, std::int64_t C, std::int64_t e2, std::int64_t e3,
                      std::int64_t e5, std::int64_t e6);

// Solves for the genus; throws NonIntegralGenus if the result is not a
// nonnegative integer.
std::int64_t solve_genus(std::int64_t D, std::int64_t h0, const Rat& rhs);

// Requires a nonsquare discriminant D >= 5 (SquareDiscriminant otherwise).
InvariantRecord invariants(const Discriminant& D);

// Same as invariants() but also returns the Euler characteristic breakdown.
InvariantRecord invariants(const Discriminant& D, ChiBreakdown& breakdown);

struct BoundsReport {
    std::int64_t D = 0;
    double genus_upper = 0;  // 1 + D^{3/2} 35 / (48 pi^2)
    double genus_lower = 0;  // 3/200 D^{3/2} - D/6 - D^{3/4} - 150
    double cusp_bound = 0;   // D^{3/4} + 150 + 5/4 chi(X_D), bounds C/2
    bool upper_ok = false;
    bool lower_ok = false;
    bool cusp_ok = false;
    bool e2_ok = false;      // e2 < D/2
    bool e3_ok = false;      // e3 < D/6

    bool all_ok() const { return upper_ok && lower_ok && cusp_ok && e2_ok && e3_ok; }
};

inline constexpr double kBoundMargin = 1e-6;

BoundsReport check_bounds(const Discriminant& D, const InvariantRecord& rec);

// Nonsquare discriminants D <= max whose curve has genus zero.
std::vector<std::int64_t> genus_zero_classification(std::int64_t max, unsigned jobs = 1);

// Nonsquare discriminants in [from, to], ascending.
std::vector<std::int64_t> nonsquare_discriminants(std::int64_t from, std::int64_t to);

// Invariant records for every nonsquare discriminant in [from, to], sorted
// by D. The result does not depend on the number of workers.
std::vector<InvariantRecord> sweep(std::int64_t from, std::int64_t to, unsigned jobs);

} // namespace prymtopo
