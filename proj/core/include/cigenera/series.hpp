#pragma once

#include <string>
#include <vector>

#include "cigenera/rational.hpp"

namespace cigenera {

/// Formal power series in one variable over Rational, truncated at a fixed
/// order (inclusive). The truncation order is set at construction and never
/// silently extended; combining series of different orders throws. All
/// operations return new values, so series can be shared freely.
class TruncatedSeries {
public:
    /// order+1 coefficients, coefficient m at index m.
    explicit TruncatedSeries(std::vector<Rational> coefficients);

    static TruncatedSeries constant(const Rational& value, int order);
    static TruncatedSeries zero(int order) { return constant(Rational(0), order); }
    static TruncatedSeries one(int order) { return constant(Rational(1), order); }

    /// e^{a x}: coefficient m is a^m / m!.
    static TruncatedSeries exp_linear(const Rational& a, int order);

    /// (1 + x)^a for rational a: coefficient m is C(a, m).
    static TruncatedSeries binomial_power(const Rational& a, int order);

    int order() const { return static_cast<int>(coefficients_.size()) - 1; }

    /// Coefficient of x^m; throws std::out_of_range unless 0 <= m <= order.
    const Rational& coefficient(int m) const;

    const std::vector<Rational>& coefficients() const { return coefficients_; }

    friend TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t);
    friend TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t);

    /// Cauchy product truncated at the common order.
    friend TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t);

    /// Multiplicative inverse to the truncation order; requires a nonzero
    /// constant term (throws std::domain_error otherwise).
    TruncatedSeries inverse() const;

    /// Substitutes x -> d*x: coefficient m becomes d^m * s_m.
    TruncatedSeries dilate(const Rational& d) const;

    /// s^e for integer e, negative e via inverse(). s^0 = 1.
    TruncatedSeries pow_int(long e) const;

    bool operator==(const TruncatedSeries&) const = default;

    /// Diagnostic rendering, e.g. "1 + 1/2*x + 1/12*x^2".
    std::string to_string() const;

private:
    std::vector<Rational> coefficients_;
};

}  // namespace cigenera
