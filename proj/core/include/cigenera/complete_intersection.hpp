#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace cigenera {

/// A smooth complete intersection of multidegree (d_1, ..., d_r) in
/// CP^{n+r}, identified by its complex dimension n and normalized
/// multidegree: degree-1 factors dropped, remaining degrees >= 2 and
/// sorted descending. r = 0 is projective space CP^n.
class CompleteIntersection {
public:
    /// Normalizes the raw multidegree. Throws std::invalid_argument on
    /// dimension < 1 or any raw degree < 1.
    CompleteIntersection(int dimension, std::vector<int> raw_degrees);

    /// Accepts the compact form "X3(5,2,2)" (empty parentheses for CP^n)
    /// or the flag form "n=3 d=5,2,2".
    static CompleteIntersection parse(const std::string& text);

    int dimension() const { return n_; }                       // n
    int codimension() const { return static_cast<int>(degrees_.size()); }  // r
    const std::vector<int>& degrees() const { return degrees_; }

    /// c1 = n + r + 1 - sum(d_i), the coefficient of the first Chern class
    /// on the hyperplane generator.
    long first_chern() const;

    /// prod(d_i); 1 for projective space.
    mpz_class total_degree() const;

    /// Compact form, e.g. "X3(5,2,2)"; "X2()" for CP^2.
    std::string to_string() const;

    bool operator==(const CompleteIntersection&) const = default;

private:
    int n_;
    std::vector<int> degrees_;  // sorted descending, all >= 2
};

/// A cusp-value query chi(X, K^{k/N}): the complete intersection together
/// with the twist parameter 0 <= k <= N of a level-N elliptic genus.
struct TwistedGenusQuery {
    TwistedGenusQuery(CompleteIntersection ci_, int k_, int level_);

    CompleteIntersection ci;
    int k;
    int level;  // N
};

}  // namespace cigenera
