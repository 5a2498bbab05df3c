#include "cigenera/series.hpp"

#include <sstream>
#include <stdexcept>

#include "cigenera/binomial.hpp"

namespace cigenera {

namespace {

void require_same_order(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (s.order() != t.order())
        throw std::invalid_argument("TruncatedSeries: order mismatch (" +
                                    std::to_string(s.order()) + " vs " +
                                    std::to_string(t.order()) + ")");
}

void require_order(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty())
        throw std::invalid_argument("TruncatedSeries: at least the constant coefficient is required");
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, int order) {
    require_order(order);
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::exp_linear(const Rational& a, int order) {
    require_order(order);
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    c[0] = Rational(1);
    for (int m = 1; m <= order; ++m) c[m] = c[m - 1] * a / Rational(m);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::binomial_power(const Rational& a, int order) {
    require_order(order);
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) c[m] = binomial_general(a, m);
    return TruncatedSeries(std::move(c));
}

const Rational& TruncatedSeries::coefficient(int m) const {
    if (m < 0 || m > order())
        throw std::out_of_range("TruncatedSeries: coefficient index " + std::to_string(m) +
                                " outside truncation order " + std::to_string(order()));
    return coefficients_[static_cast<size_t>(m)];
}

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_order(s, t);
    std::vector<Rational> c(s.coefficients_);
    for (size_t m = 0; m < c.size(); ++m) c[m] += t.coefficients_[m];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_order(s, t);
    std::vector<Rational> c(s.coefficients_);
    for (size_t m = 0; m < c.size(); ++m) c[m] -= t.coefficients_[m];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) {
    require_same_order(s, t);
    const size_t n = s.coefficients_.size();
    std::vector<Rational> c(n, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (s.coefficients_[i].is_zero()) continue;
        for (size_t j = 0; i + j < n; ++j)
            c[i + j] += s.coefficients_[i] * t.coefficients_[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coefficients_[0].is_zero())
        throw std::domain_error("TruncatedSeries: inverse of a series with zero constant term");
    const size_t n = coefficients_.size();
    std::vector<Rational> b(n, Rational(0));
    b[0] = Rational(1) / coefficients_[0];
    for (size_t m = 1; m < n; ++m) {
        Rational acc(0);
        for (size_t i = 1; i <= m; ++i) acc += coefficients_[i] * b[m - i];
        b[m] = -acc / coefficients_[0];
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries TruncatedSeries::dilate(const Rational& d) const {
    std::vector<Rational> c(coefficients_);
    Rational power(1);
    for (size_t m = 1; m < c.size(); ++m) {
        power *= d;
        c[m] *= power;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::pow_int(long e) const {
    if (e == 0) return one(order());
    if (e < 0) return inverse().pow_int(-e);
    TruncatedSeries result = one(order());
    TruncatedSeries base = *this;
    for (unsigned long exp = static_cast<unsigned long>(e); exp != 0; exp >>= 1) {
        if (exp & 1) result = result * base;
        if (exp > 1) base = base * base;
    }
    return result;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int m = 0; m <= order(); ++m) {
        const Rational& c = coefficients_[static_cast<size_t>(m)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << c.to_string();
        if (m == 1) os << "*x";
        if (m > 1) os << "*x^" << m;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace cigenera
