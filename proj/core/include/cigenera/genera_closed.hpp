#pragma once

#include "cigenera/complete_intersection.hpp"
#include "cigenera/rational.hpp"

namespace cigenera {

/// Genus values are exact rationals; they are integers exactly when the
/// relevant integrality hypotheses hold.
using GenusValue = Rational;

/// Todd genus as an alternating sum of generalized binomial coefficients
/// over the 2^r sub-multidegrees:
///   sum_{j} (-1)^{n+r+j} sum_{k1<...<kj} C(-1 + d_{k1}+...+d_{kj}, n+r).
GenusValue todd_closed(const CompleteIntersection& ci);

/// chi(X, K^{k/N}), the value of the level-N elliptic genus at a cusp:
///   sum_{j} (-1)^{n+r+j} sum C((k/N)c1 - 1 + d_{k1}+...+d_{kj}, n+r).
/// (k/N)c1 may be non-integral, in which case the result is the formal
/// (generally non-integral) genus.
GenusValue chi_K_closed(const TwistedGenusQuery& query);
GenusValue chi_K_closed(const CompleteIntersection& ci, int k, int level);

/// A-hat genus, chi(X, K^{1/2}).
GenusValue ahat_closed(const CompleteIntersection& ci);

/// A_k genus, k >= 1 (A_1 is the Todd genus):
///   k^n sum_{j} (-1)^{r-j} sum C(c1/k - 1 + d_{k1}+...+d_{kj}, n+r).
GenusValue ak_closed(const CompleteIntersection& ci, long k);

/// Todd genus by the degree recurrence
///   Td(X_n(d)) = sum_{l=0}^{n} (-1)^{n-l} C(d_r, n-l+1) Td(X_l(d minus d_r)),
/// peeling the smallest degree at every step down to projective space.
/// Requires r >= 1.
GenusValue todd_recurrence(const CompleteIntersection& ci);

/// A_k genus through lower-dimensional Todd genera:
///   k^n sum_{l=0}^{n} C(c1/k, n-l) (-1)^l Td(X_l(d)).
/// Requires k >= 1.
GenusValue ak_from_todd(const CompleteIntersection& ci, long k);

namespace detail {

/// The shared alternating subset kernel
///   S(n, d, t) = sum_{j=0}^{r} (-1)^{n+r+j}
///                sum_{k1<...<kj} C(t - 1 + d_{k1}+...+d_{kj}, n+r),
/// valid for any dimension n >= 0. r is capped at 20 (2^r enumeration).
Rational signed_subset_sum(int n, const std::vector<int>& degrees, const Rational& t);

/// Closed-form Todd genus at arbitrary dimension n >= 0. Dimension 0
/// (a finite point set) occurs inside recursions only; the public type
/// requires n >= 1.
Rational todd_closed_at(int n, const std::vector<int>& degrees);

}  // namespace detail

}  // namespace cigenera
