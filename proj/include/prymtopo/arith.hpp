#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace prymtopo {

// Arbitrary precision integer. Discriminant-scale quantities (D, counts,
// divisor sums) fit comfortably in 64 bits for every D up to 10^8 and use
// std::int64_t directly.
using Int = mpz_class;

/**
 * Exact rational number, always kept in lowest terms with a positive
 * denominator. Equality is value equality.
 */
class Rat {
public:
    Rat() = default;
    Rat(long n) : q_(n) {}                // NOLINT(google-explicit-constructor)
    Rat(const Int& n) : q_(n) {}          // NOLINT(google-explicit-constructor)
    Rat(const Int& num, const Int& den);
    Rat(std::int64_t num, std::int64_t den);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    // "p/q", or "p" when the denominator is one.
    std::string str() const;

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { Rat r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class q_;
};

/**
 * A validated positive discriminant D = f^2 * D0, where D0 is the
 * discriminant of the maximal order of Q(sqrt(D)) and f the conductor.
 * For square D the fundamental part is 1.
 */
class Discriminant {
public:
    std::int64_t value() const { return value_; }
    int residue() const { return static_cast<int>(value_ % 4); }
    bool is_square() const { return fundamental_ == 1; }
    std::int64_t conductor() const { return conductor_; }
    std::int64_t fundamental() const { return fundamental_; }

    friend Discriminant parse_discriminant(std::int64_t n);

private:
    Discriminant(std::int64_t v, std::int64_t f, std::int64_t d0)
        : value_(v), conductor_(f), fundamental_(d0) {}

    std::int64_t value_;
    std::int64_t conductor_;
    std::int64_t fundamental_;
};

// Throws NotADiscriminant if n <= 0 or n = 2, 3 (mod 4).
Discriminant parse_discriminant(std::int64_t n);

// True if d is 1 or a fundamental discriminant of a quadratic field.
bool is_fundamental_discriminant(std::int64_t d);

bool is_squarefree(std::int64_t n);

std::int64_t isqrt(std::int64_t n);
bool is_square(std::int64_t n);

// Sum of the positive divisors of n; DomainError for n < 1.
std::int64_t sigma1(std::int64_t n);

// Kronecker symbol (a/n) for arbitrary integers.
int kronecker(std::int64_t a, std::int64_t n);

// Distinct prime divisors of n >= 1 in increasing order.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

} // namespace prymtopo
