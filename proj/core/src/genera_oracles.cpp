#include "cigenera/genera_oracles.hpp"

#include <sstream>
#include <stdexcept>

namespace cigenera {

namespace {

// (e^{ax} - 1) / (ax): coefficient m is a^m / (m+1)!. Unit constant term.
TruncatedSeries exp_difference_quotient(const Rational& a, int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    c[0] = Rational(1);
    Rational power(1);
    Rational fact(1);
    for (int m = 1; m <= order; ++m) {
        power *= a;
        fact *= Rational(m + 1);
        c[static_cast<size_t>(m)] = power / fact;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries todd_q(int order) {
    // x / (1 - e^{-x}) = ((1 - e^{-x})/x)^{-1} = ((e^{-x} - 1)/(-x))^{-1}
    return exp_difference_quotient(Rational(-1), order).inverse();
}

// 1 + c*z as a series of the requested order.
TruncatedSeries linear(const Rational& c, int order) {
    std::vector<Rational> v(static_cast<size_t>(order) + 1, Rational(0));
    v[0] = Rational(1);
    if (order >= 1) v[1] = c;
    return TruncatedSeries(std::move(v));
}

std::vector<Rational> interpolate_through(const std::vector<Rational>& xs,
                                          const std::vector<Rational>& ys) {
    // Newton divided differences, then expansion to monomial coefficients.
    const size_t n = xs.size();
    std::vector<Rational> divided(ys);
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level]);

    std::vector<Rational> coeffs(n, Rational(0));
    std::vector<Rational> basis(n, Rational(0));  // prod_{j<i} (y - x_j)
    basis[0] = Rational(1);
    size_t basis_degree = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t m = 0; m <= basis_degree; ++m) coeffs[m] += divided[i] * basis[m];
        if (i + 1 < n) {
            // basis *= (y - x_i)
            for (size_t m = basis_degree + 1; m > 0; --m)
                basis[m] = basis[m - 1] - xs[i] * basis[m];
            basis[0] = -xs[i] * basis[0];
            ++basis_degree;
        }
    }
    return coeffs;
}

}  // namespace

CharacteristicSeries todd_q_series(int order) {
    return {"todd", todd_q(order)};
}

CharacteristicSeries ahat_q_series(int order) {
    return {"ahat", TruncatedSeries::exp_linear(Rational(-1, 2), order) * todd_q(order)};
}

CharacteristicSeries ak_q_series(long k, int order) {
    if (k < 1) throw std::invalid_argument("ak_q_series: k must be >= 1");
    // k x e^x / (e^{kx} - 1) = e^x * ((e^{kx} - 1)/(kx))^{-1}
    TruncatedSeries q = TruncatedSeries::exp_linear(Rational(1), order) *
                        exp_difference_quotient(Rational(k), order).inverse();
    return {"ak(" + std::to_string(k) + ")", std::move(q)};
}

CharacteristicSeries level_q_series(int k, int level, int order) {
    if (level < 1) throw std::invalid_argument("level_q_series: level N must be >= 1");
    TruncatedSeries q = TruncatedSeries::exp_linear(Rational(-k, level), order) * todd_q(order);
    return {"levelN(" + std::to_string(k) + "," + std::to_string(level) + ")", std::move(q)};
}

GenusValue genus_chern_root(const CompleteIntersection& ci, const CharacteristicSeries& cs) {
    const int n = ci.dimension();
    if (cs.q.order() < n)
        throw std::invalid_argument("genus_chern_root: series order " +
                                    std::to_string(cs.q.order()) + " below dimension " +
                                    std::to_string(n));
    TruncatedSeries klass = cs.q.pow_int(n + ci.codimension() + 1);
    for (int d : ci.degrees()) klass = klass * cs.q.dilate(Rational(d)).inverse();
    return klass.coefficient(n) * Rational(ci.total_degree());
}

GenusValue todd_genfun(const CompleteIntersection& ci) {
    return chi_twist_genfun(ci, 0);
}

GenusValue chi_twist_genfun(const CompleteIntersection& ci, long m) {
    const int top = ci.dimension() + ci.codimension();
    const TruncatedSeries one_minus_z = linear(Rational(-1), top);
    TruncatedSeries product = one_minus_z.pow_int(-(m + 1));
    const TruncatedSeries one = TruncatedSeries::one(top);
    for (int d : ci.degrees()) product = product * (one - one_minus_z.pow_int(d));
    return product.coefficient(top);
}

GenusValue ak_genfun(const CompleteIntersection& ci, long k) {
    if (k < 1) throw std::invalid_argument("ak_genfun: k must be >= 1");
    const int top = ci.dimension() + ci.codimension();
    const TruncatedSeries one_plus_z = linear(Rational(1), top);
    const TruncatedSeries one = TruncatedSeries::one(top);
    TruncatedSeries product =
        TruncatedSeries::binomial_power(Rational(ci.first_chern(), k), top) *
        one_plus_z.inverse();
    for (int d : ci.degrees()) product = product * (one_plus_z.pow_int(d) - one);
    return Rational(k).pow(ci.dimension()) * product.coefficient(top);
}

ChiYPolynomial::ChiYPolynomial(std::vector<Rational> chi_p) : chi_p_(std::move(chi_p)) {
    if (chi_p_.empty())
        throw std::invalid_argument("ChiYPolynomial: needs at least chi^0");
}

const Rational& ChiYPolynomial::chi_p(int p) const {
    if (p < 0 || p >= static_cast<int>(chi_p_.size()))
        throw std::out_of_range("ChiYPolynomial: p out of range");
    return chi_p_[static_cast<size_t>(p)];
}

Rational ChiYPolynomial::evaluate(const Rational& y) const {
    Rational value(0);
    for (size_t p = chi_p_.size(); p-- > 0;) value = value * y + chi_p_[p];
    return value;
}

std::string ChiYPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t p = 0; p < chi_p_.size(); ++p) {
        if (chi_p_[p].is_zero()) continue;
        if (!first) os << " + ";
        os << chi_p_[p].to_string();
        if (p == 1) os << "*y";
        if (p > 1) os << "*y^" << p;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Rational chi_y_series_value(const CompleteIntersection& ci, long twist, const Rational& y) {
    if (y == Rational(-1))
        throw std::invalid_argument("chi_y_series_value: y = -1 is a pole of the factor "
                                    "denominators; evaluate the polynomial instead");
    const int top = ci.dimension() + ci.codimension();
    const TruncatedSeries one_plus_zy = linear(y, top);
    const TruncatedSeries one_minus_z = linear(Rational(-1), top);

    TruncatedSeries product =
        one_plus_zy.pow_int(twist - 1) * one_minus_z.pow_int(-(twist + 1));
    const TruncatedSeries y_const = TruncatedSeries::constant(y, top);
    for (int d : ci.degrees()) {
        const TruncatedSeries up = one_plus_zy.pow_int(d);
        const TruncatedSeries down = one_minus_z.pow_int(d);
        // Numerator vanishes at z=0; denominator has constant term 1+y != 0.
        product = product * (up - down) * (up + y_const * down).inverse();
    }
    return product.coefficient(top);
}

ChiYPolynomial chi_y_polynomial(const CompleteIntersection& ci, long twist) {
    const int n = ci.dimension();
    std::vector<Rational> xs, ys;
    xs.reserve(static_cast<size_t>(n) + 2);
    ys.reserve(static_cast<size_t>(n) + 2);
    for (int i = 0; i <= n + 1; ++i) {
        xs.emplace_back(i);
        ys.push_back(chi_y_series_value(ci, twist, Rational(i)));
    }
    std::vector<Rational> coeffs = interpolate_through(xs, ys);
    if (!coeffs.back().is_zero())
        throw std::logic_error("chi_y_polynomial: interpolant has degree n+1; "
                               "the series samples are inconsistent");
    coeffs.pop_back();
    return ChiYPolynomial(std::move(coeffs));
}

GenusValue euler_characteristic(const CompleteIntersection& ci) {
    return chi_y_polynomial(ci, 0).evaluate(Rational(-1));
}

GenusValue signature(const CompleteIntersection& ci) {
    return chi_y_polynomial(ci, 0).evaluate(Rational(1));
}

}  // namespace cigenera
