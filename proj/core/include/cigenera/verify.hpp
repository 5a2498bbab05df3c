#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cigenera/complete_intersection.hpp"
#include "cigenera/rational.hpp"

namespace cigenera::verify {

struct IntRange {
    int lo;
    int hi;  // inclusive
};

/// Sweep bounds and check selection. Defaults are the desk-scale ranges
/// every check is expected to clear with zero violations.
struct SweepConfig {
    int n_min = 1;
    int n_max = 8;
    int r_max = 3;
    int d_max = 6;                              // degrees range over [2, d_max]
    std::vector<int> levels = {2, 3, 4, 5, 6};  // N; every 0 <= k <= N is swept
    std::vector<long> ak = {2, 3, 4};           // A_k indices
    IntRange binom_a{-10, 15};
    IntRange binom_b{-10, 15};
    IntRange binom_n{1, 12};
    std::vector<std::string> checks;  // empty means all, in canonical order
};

/// Canonical check identifiers in execution order:
/// todd, chik, ak, four-term, binomial, oracles.
const std::vector<std::string>& all_check_ids();

/// One failed exact comparison. Sweeps never throw on violations; they
/// collect them so a single bug produces a full picture.
struct ViolationRecord {
    std::string check_id;
    std::string subject;   // complete intersection, or the integer tuple
    std::string params;    // e.g. "k=1 N=2"
    std::string relation;  // the expected relation, human-readable
    std::string left;      // exact value, as a string
    std::string right;
};

struct SweepReport {
    std::string check_id;
    std::string description;
    long instances = 0;   // sweep points visited
    long assertions = 0;  // exact comparisons made
    std::vector<ViolationRecord> violations;

    bool passed() const { return violations.empty(); }
};

/// Enumerates canonical multidegrees (non-increasing, entries in
/// [2, d_max], length 0..r_max) in ascending lexicographic order.
void for_each_multidegree(int r_max, int d_max,
                          const std::function<void(const std::vector<int>&)>& fn);

/// Enumerates the sweep grid in the report ordering: n ascending, then r,
/// then the multidegree.
void for_each_ci(const SweepConfig& cfg,
                 const std::function<void(const CompleteIntersection&)>& fn);

/// Todd genus trichotomy: 1 for c1 > 0, 1 + (-1)^n for c1 = 0, and for
/// c1 < 0 both lower bounds (-1)^n Td >= n + r and
/// (-1)^n Td >= C(n+1-c1, n+1) + (-1)^n.
SweepReport check_theorem_todd(const SweepConfig& cfg);

/// Cusp values chi(X, K^{k/N}) for N | c1: the closed values for
/// c1 >= 0, both half-interval lower bounds for c1 < 0, the vanishing at
/// k/N = 1/2 for odd n, integrality, and chi(k) = (-1)^n chi(N-k).
SweepReport check_theorem_chiK(const SweepConfig& cfg);

/// A_k values for k | c1, the bridges A_k = k^n chi(K^{(k-1)/k}) and
/// A_2 = 2^n A-hat on every instance, and A_1 = Todd.
SweepReport check_theorem_ak(const SweepConfig& cfg);

/// Four-term identity between cusp values of neighbouring multidegrees:
///   chi(d1, d2, d3, ...) - chi(d1+1, d2-1, d3, ...)
///     = chi(d1, d2-1+d3, ...) - chi(d2-1, d1+d3, ...),
/// swept over a deterministic grid with r in {3, 4}.
SweepReport check_four_term_identity(const SweepConfig& cfg);

/// Brute-force check of C(a+1,n) + C(b-1,n) >= C(a,n) + C(b,n) for
/// integers a >= b, a+b >= n-1, n > 0, with equality when a+b = n-1 and
/// n is odd.
SweepReport check_binomial_inequality(IntRange a_range, IntRange b_range, IntRange n_range);

/// Cross-validation harness: every genus computed along every route must
/// agree exactly (closed form, generating function, Chern roots, degree
/// recurrence, Todd expansion), plus the chi_y polynomial invariants.
SweepReport check_oracle_agreement(const SweepConfig& cfg);

/// Runs cfg.checks (all when empty) in canonical order. Throws
/// std::invalid_argument on unknown check ids.
std::vector<SweepReport> run_checks(const SweepConfig& cfg);

}  // namespace cigenera::verify
