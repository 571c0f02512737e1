#include "prymtopo/class_numbers.hpp"

#include <numeric>
#include <string>

#include "prymtopo/errors.hpp"

namespace prymtopo {

namespace {

void require_negative_discriminant(std::int64_t C) {
    if (C <= 0 || (C % 4 != 0 && C % 4 != 3)) {
        throw NotADiscriminant("-" + std::to_string(C) + " is not a negative discriminant");
    }
}

} // namespace

bool is_reduced(const ReducedForm& f) {
    const std::int64_t ab = f.b < 0 ? -f.b : f.b;
    if (f.a < 1 || ab > f.a || f.a > f.c) {
        return false;
    }
    if ((ab == f.a || f.a == f.c) && f.b < 0) {
        return false;
    }
    return true;
}

bool is_primitive(const ReducedForm& f) {
    return std::gcd(std::gcd(f.a, f.b), f.c) == 1;
}

std::vector<ReducedForm> list_reduced_forms(std::int64_t C) {
    require_negative_discriminant(C);
    std::vector<ReducedForm> forms;
    // 3a^2 <= 4ac - b^2 = C for a reduced form.
    for (std::int64_t a = 1; 3 * a * a <= C; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b + C;
            if (num % (4 * a) != 0) {
                continue;
            }
            const ReducedForm f{a, b, num / (4 * a)};
            if (is_reduced(f) && is_primitive(f)) {
                forms.push_back(f);
            }
        }
    }
    return forms;
}

std::int64_t h_neg(std::int64_t C) {
    return static_cast<std::int64_t>(list_reduced_forms(C).size());
}

} // namespace prymtopo
