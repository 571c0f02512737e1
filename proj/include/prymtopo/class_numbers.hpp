#pragma once

#include <cstdint>
#include <vector>

namespace prymtopo {

/*
 * A primitive positive definite binary quadratic form a x^2 + b xy + c y^2
 * of discriminant b^2 - 4ac = -C in reduced position:
 * |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
 */
struct ReducedForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }

    friend auto operator<=>(const ReducedForm&, const ReducedForm&) = default;
};

bool is_reduced(const ReducedForm& f);
bool is_primitive(const ReducedForm& f);

// One reduced representative per class of primitive forms of discriminant
// -C, ordered by (a, b, c). Throws NotADiscriminant unless C > 0 and
// C = 0 or 3 (mod 4).
std::vector<ReducedForm> list_reduced_forms(std::int64_t C);

// Class number h(-C) of the imaginary quadratic order of discriminant -C.
std::int64_t h_neg(std::int64_t C);

} // namespace prymtopo
