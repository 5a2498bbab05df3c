#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cigenera {

/// Exact arbitrary-precision rational scalar, the number type of every
/// genus computation. Always held in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. Values are immutable in spirit
/// (all operators return fresh values) and safe to share across threads.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(static_cast<long int>(value)) {}
    Rational(int value) : q_(value) {}
    explicit Rational(const mpz_class& value) : q_(value) {}

    /// num/den, canonicalized. Throws std::domain_error on den == 0.
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Adopts an mpq value, canonicalizing it.
    explicit Rational(const mpq_class& q);

    // Rationals are exact; nothing is ever built from a float.
    Rational(double) = delete;
    Rational(float) = delete;

    /// Parses "p", "-p", or "p/q" (whitespace-free, base 10).
    static Rational from_string(const std::string& text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_), already_canonical{}); }
    Rational abs() const { return Rational(mpq_class(::abs(q_)), already_canonical{}); }

    /// Integer power. Throws std::domain_error on 0^e with e < 0.
    Rational pow(long exponent) const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ + b.q_), already_canonical{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ - b.q_), already_canonical{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.q_ * b.q_), already_canonical{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_), already_canonical{});
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    /// "p/q", or just "p" when integral.
    std::string to_string() const { return q_.get_str(); }

private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : q_(std::move(q)) {}

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cigenera
