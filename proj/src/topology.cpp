#include "prymtopo/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "prymtopo/cusps.hpp"
#include "prymtopo/errors.hpp"
#include "prymtopo/orbifold.hpp"
#include "prymtopo/parallel.hpp"

namespace prymtopo {

Rat euler_formula_rhs(const Rat& chi, std::int64_t C, std::int64_t e2, std::int64_t e3,
                      std::int64_t e5, std::int64_t e6) {
    return chi + Rat(C) + Rat(e2, 2) + Rat(2 * e3, 3) + Rat(4 * e5, 5) + Rat(5 * e6, 6);
}

std::int64_t solve_genus(std::int64_t D, std::int64_t h0, const Rat& rhs) {
    const Rat genus = (Rat(2 * h0) - rhs) / Rat(2);
    if (!genus.is_integer() || genus.sign() < 0) {
        throw NonIntegralGenus("D = " + std::to_string(D) + ": orbifold Euler formula gives genus " +
                               genus.str());
    }
    return genus.num().get_si();
}

InvariantRecord invariants(const Discriminant& D, ChiBreakdown& breakdown) {
    if (D.is_square()) {
        throw SquareDiscriminant("square discriminant " + std::to_string(D.value()) +
                                 " is out of scope");
    }
    breakdown = chi_breakdown(D);
    InvariantRecord rec;
    rec.D = D.value();
    rec.chi = breakdown.chi_W;
    rec.C = count_cusps(D);
    rec.e2 = e2(D);
    rec.e3 = e3(D);
    rec.e5 = e5(D);
    rec.e6 = e6(D);
    rec.genus = solve_genus(rec.D, rec.h0,
                            euler_formula_rhs(rec.chi, rec.C, rec.e2, rec.e3, rec.e5, rec.e6));
    return rec;
}

InvariantRecord invariants(const Discriminant& D) {
    ChiBreakdown unused;
    return invariants(D, unused);
}

BoundsReport check_bounds(const Discriminant& D, const InvariantRecord& rec) {
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    const double d = static_cast<double>(D.value());
    const double d32 = std::pow(d, 1.5);
    const double d34 = std::pow(d, 0.75);
    const double chi_X = (rec.chi / Rat(-7)).to_double();
    const double g = static_cast<double>(rec.genus);

    BoundsReport r;
    r.D = D.value();
    r.genus_upper = 1.0 + d32 * 35.0 / (48.0 * pi2);
    r.genus_lower = 3.0 / 200.0 * d32 - d / 6.0 - d34 - 150.0;
    r.cusp_bound = d34 + 150.0 + 1.25 * chi_X;
    r.upper_ok = g < r.genus_upper + kBoundMargin;
    r.lower_ok = g + kBoundMargin >= r.genus_lower;
    r.cusp_ok = static_cast<double>(rec.C) / 2.0 <= r.cusp_bound + kBoundMargin;
    r.e2_ok = 2 * rec.e2 < rec.D;
    r.e3_ok = 6 * rec.e3 < rec.D;
    return r;
}

std::vector<std::int64_t> nonsquare_discriminants(std::int64_t from, std::int64_t to) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = std::max<std::int64_t>(from, 1); d <= to; ++d) {
        if ((d % 4 == 0 || d % 4 == 1) && !is_square(d)) {
            out.push_back(d);
        }
    }
    return out;
}

std::vector<InvariantRecord> sweep(std::int64_t from, std::int64_t to, unsigned jobs) {
    const std::vector<std::int64_t> ds = nonsquare_discriminants(from, to);
    std::vector<InvariantRecord> out(ds.size());
    parallel_for(ds.size(), jobs, [&](std::size_t k) {
        out[k] = invariants(parse_discriminant(ds[k]));
    });
    return out;
}

std::vector<std::int64_t> genus_zero_classification(std::int64_t max, unsigned jobs) {
    std::vector<std::int64_t> out;
    for (const InvariantRecord& rec : sweep(5, max, jobs)) {
        if (rec.genus == 0) {
            out.push_back(rec.D);
        }
    }
    return out;
}

} // namespace prymtopo
