#pragma once

#include <string>
#include <vector>

#include "cigenera/complete_intersection.hpp"
#include "cigenera/genera_closed.hpp"
#include "cigenera/rational.hpp"
#include "cigenera/series.hpp"

namespace cigenera {

/// A Hirzebruch genus presented by its characteristic power series Q(x),
/// expanded to a fixed order. Q always has constant term 1.
struct CharacteristicSeries {
    std::string label;  // "todd", "ahat", "ak(3)", "levelN(1,2)"
    TruncatedSeries q;
};

/// Q(x) = x / (1 - e^{-x}), built as the inverse of (1 - e^{-x}) / x.
CharacteristicSeries todd_q_series(int order);

/// Q(x) = (x/2) / sinh(x/2) = e^{-x/2} * x / (1 - e^{-x}).
CharacteristicSeries ahat_q_series(int order);

/// Q(x) = k x e^x / (e^{kx} - 1), the A_k genus (k >= 1).
CharacteristicSeries ak_q_series(long k, int order);

/// Q(x) = e^{-(k/N) x} * x / (1 - e^{-x}), the level-N cusp genus
/// chi(., K^{k/N}); k = 0 degenerates to the Todd series.
CharacteristicSeries level_q_series(int k, int level, int order);

/// Evaluates a genus on X_n(d) through formal Chern roots:
///   value = [x^n] ( Q(x)^{n+r+1} * prod_i Q(d_i x)^{-1} ) * prod_i d_i.
/// Requires cs.q.order() >= n.
GenusValue genus_chern_root(const CompleteIntersection& ci, const CharacteristicSeries& cs);

/// Todd genus as the z^{n+r} coefficient of
///   (1-z)^{-1} * prod_i (1 - (1-z)^{d_i}).
GenusValue todd_genfun(const CompleteIntersection& ci);

/// chi(X_n(d), gamma^m), the holomorphic Euler characteristic of the m-th
/// hyperplane power, as the z^{n+r} coefficient of
///   (1-z)^{-(m+1)} * prod_i (1 - (1-z)^{d_i}).
/// For N | c1, chi(X, K^{k/N}) is the m = -c1*k/N instance.
GenusValue chi_twist_genfun(const CompleteIntersection& ci, long m);

/// A_k genus as the z^{n+r} coefficient of
///   k^n (1+z)^{c1/k} (1+z)^{-1} * prod_i ((1+z)^{d_i} - 1),  k >= 1.
GenusValue ak_genfun(const CompleteIntersection& ci, long k);

/// The chi_y genus as an exact polynomial: coefficient p holds
/// chi^p(X, gamma^twist), p = 0..n.
class ChiYPolynomial {
public:
    explicit ChiYPolynomial(std::vector<Rational> chi_p);

    int dimension() const { return static_cast<int>(chi_p_.size()) - 1; }
    const Rational& chi_p(int p) const;
    const std::vector<Rational>& coefficients() const { return chi_p_; }

    Rational evaluate(const Rational& y) const;

    bool operator==(const ChiYPolynomial&) const = default;
    std::string to_string() const;  // e.g. "1 - 4*y + y^2"

private:
    std::vector<Rational> chi_p_;
};

/// One sample of the chi_y generating function: the z^{n+r} coefficient of
///   (1+zy)^{t-1} / (1-z)^{t+1} * prod_i ((1+zy)^{d_i} - (1-z)^{d_i})
///                                      / ((1+zy)^{d_i} + y (1-z)^{d_i})
/// at a fixed rational y (t = twist). y = -1 makes the factor denominators
/// non-invertible and is rejected; reach it by evaluating the interpolated
/// polynomial instead.
Rational chi_y_series_value(const CompleteIntersection& ci, long twist, const Rational& y);

/// Interpolates the full chi_y polynomial from n+2 samples at
/// y = 0, 1, ..., n+1.
ChiYPolynomial chi_y_polynomial(const CompleteIntersection& ci, long twist);

/// chi_y at y = -1 and y = +1.
GenusValue euler_characteristic(const CompleteIntersection& ci);
GenusValue signature(const CompleteIntersection& ci);

}  // namespace cigenera
