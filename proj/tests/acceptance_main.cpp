// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// criteria hold. Every comparison is exact rational equality; inequalities
// are exact as well. No tolerances anywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cigenera/binomial.hpp"
#include "cigenera/genera_closed.hpp"
#include "cigenera/genera_oracles.hpp"
#include "cigenera/report.hpp"
#include "cigenera/series.hpp"
#include "cigenera/verify.hpp"

using namespace cigenera;
using verify::SweepConfig;
using verify::SweepReport;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool report_clean(const SweepReport& report, std::ostream& detail) {
    if (report.passed()) {
        detail << report.instances << " instances, " << report.assertions << " assertions";
        return true;
    }
    detail << report.violations.size() << " violations; first: ";
    const verify::ViolationRecord& v = report.violations.front();
    detail << v.subject << " [" << v.params << "] expected " << v.relation << ", left=" << v.left
           << " right=" << v.right;
    return false;
}

// 1. Todd genus along all four routes, exactly equal, n <= 8, r <= 3, d <= 6.
bool criterion_todd_oracles(std::ostream& detail) {
    const auto start = std::chrono::steady_clock::now();
    const SweepConfig cfg;
    long instances = 0, mismatches = 0;
    std::string first;
    verify::for_each_ci(cfg, [&](const CompleteIntersection& ci) {
        ++instances;
        const Rational closed = todd_closed(ci);
        const Rational genfun = todd_genfun(ci);
        const Rational chern = genus_chern_root(ci, todd_q_series(ci.dimension()));
        bool ok = closed == genfun && closed == chern;
        if (ci.codimension() >= 1) ok = ok && closed == todd_recurrence(ci);
        if (!ok && ++mismatches == 1) first = ci.to_string();
    });
    const double elapsed = seconds_since(start);
    detail << instances << " spaces, " << mismatches << " mismatches, " << elapsed << "s";
    if (mismatches > 0) detail << ", first at " << first;
    return mismatches == 0 && elapsed < 30.0;
}

// 2. Cusp values along all three routes for N | c1, integral, symmetric.
bool criterion_cusp_oracles(std::ostream& detail) {
    const auto start = std::chrono::steady_clock::now();
    const SweepConfig cfg;
    long triples = 0, failures = 0;
    std::string first;
    verify::for_each_ci(cfg, [&](const CompleteIntersection& ci) {
        const long c1 = ci.first_chern();
        const int n = ci.dimension();
        const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        for (int level = 2; level <= 6; ++level) {
            if (c1 % level != 0) continue;
            std::vector<Rational> values;
            for (int k = 0; k <= level; ++k) values.push_back(chi_K_closed(ci, k, level));
            for (int k = 0; k <= level; ++k) {
                ++triples;
                const Rational& v = values[static_cast<size_t>(k)];
                const bool ok = v == chi_twist_genfun(ci, -(c1 / level) * k) &&
                                v == genus_chern_root(ci, level_q_series(k, level, n)) &&
                                v.is_integer() &&
                                v == sign * values[static_cast<size_t>(level - k)];
                if (!ok && ++failures == 1)
                    first = ci.to_string() + " k=" + std::to_string(k) +
                            " N=" + std::to_string(level);
            }
        }
    });
    const double elapsed = seconds_since(start);
    detail << triples << " (X,k,N) triples, " << failures << " failures, " << elapsed << "s";
    if (failures > 0) detail << ", first at " << first;
    return failures == 0 && elapsed < 60.0;
}

// 3. Todd trichotomy and lower bounds.
bool criterion_todd_theorem(std::ostream& detail) {
    return report_clean(verify::check_theorem_todd(SweepConfig{}), detail);
}

// 4. Cusp-value theorem, plus the saturating instance X_2(6), N=2, k=1.
bool criterion_cusp_theorem(std::ostream& detail) {
    const CompleteIntersection sextic(2, {6});
    const Rational value = chi_K_closed(sextic, 1, 2);
    const Rational bound = binomial_general(Rational(3) - Rational(1, 2) * Rational(-2), 3) +
                           binomial_general(Rational(3) - Rational(1, 2) * Rational(-2), 3);
    if (!(value == Rational(8) && bound == Rational(8))) {
        detail << "X2(6) N=2 k=1: value " << value.to_string() << ", bound "
               << bound.to_string() << " (expected both 8)";
        return false;
    }
    return report_clean(verify::check_theorem_chiK(SweepConfig{}), detail);
}

// 5. A_k theorem with the bridges A_1 = Td, A_2 = 2^n A-hat,
//    A_k = k^n chi(K^{(k-1)/k}).
bool criterion_ak_theorem(std::ostream& detail) {
    return report_clean(verify::check_theorem_ak(SweepConfig{}), detail);
}

// 6. Golden values.
bool criterion_golden_values(std::ostream& detail) {
    long failures = 0;
    auto expect = [&](const Rational& got, const Rational& want, const std::string& what) {
        if (!(got == want)) {
            ++failures;
            detail << what << ": got " << got.to_string() << ", want " << want.to_string()
                   << "; ";
        }
    };
    expect(todd_closed(CompleteIntersection(2, {4})), Rational(2), "Td(X2(4))");
    expect(todd_closed(CompleteIntersection(3, {5})), Rational(0), "Td(X3(5))");
    expect(ahat_closed(CompleteIntersection(2, {4})), Rational(2), "Ahat(X2(4))");
    expect(signature(CompleteIntersection(2, {2, 2})), Rational(-4), "sign(X2(2,2))");
    for (int m = 1; m <= 3; ++m)
        expect(signature(CompleteIntersection(2 * m, {})), Rational(1),
               "sign(CP" + std::to_string(2 * m) + ")");
    expect(signature(CompleteIntersection(2, {2})), Rational(0), "sign(X2(2))");
    expect(euler_characteristic(CompleteIntersection(1, {3})), Rational(0), "Euler(X1(3))");

    // (-1)^n Euler >= 0 whenever the total degree exceeds 2, criterion-1 range.
    const SweepConfig cfg;
    long positivity_checked = 0;
    verify::for_each_ci(cfg, [&](const CompleteIntersection& ci) {
        if (ci.total_degree() <= 2) return;
        ++positivity_checked;
        const Rational sign = ci.dimension() % 2 == 0 ? Rational(1) : Rational(-1);
        const Rational euler = chi_y_polynomial(ci, 0).evaluate(Rational(-1));
        if (sign * euler < Rational(0)) {
            ++failures;
            detail << "Euler positivity fails at " << ci.to_string() << "; ";
        }
    });
    detail << "golden values plus " << positivity_checked << " Euler positivity instances, "
           << failures << " failures";
    return failures == 0;
}

// 7. Four-term virtual-genus identity on >= 100 sampled instances.
bool criterion_four_term(std::ostream& detail) {
    const SweepReport report = verify::check_four_term_identity(SweepConfig{});
    const bool clean = report_clean(report, detail);
    if (report.instances < 100) {
        detail << "; only " << report.instances << " instances (< 100)";
        return false;
    }
    return clean;
}

// 8. Binomial inequality brute force, -10 <= b <= a <= 15, 1 <= n <= 12.
bool criterion_binomial(std::ostream& detail) {
    return report_clean(
        verify::check_binomial_inequality({-10, 15}, {-10, 15}, {1, 12}), detail);
}

// 9. Property suites: Pascal + reflection (>= 10^4 randomized cases), series
//    ring laws and homomorphisms (randomized, order <= 12), chi_y palindrome
//    and degree-1 normalization invariance on every sweep instance.
bool criterion_properties(std::ostream& detail) {
    long failures = 0;

    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 24);
    std::uniform_int_distribution<long> lower(0, 30);
    for (int i = 0; i < 10000; ++i) {
        const Rational a(num(rng), den(rng));
        const long k = lower(rng);
        if (k >= 1 && !(binomial_general(a, k) ==
                        binomial_general(a - 1, k) + binomial_general(a - 1, k - 1)))
            ++failures;
        if (!binomial_reflect_check(a, k)) ++failures;
    }

    std::uniform_int_distribution<int> order_dist(0, 12);
    std::uniform_int_distribution<long> coeff(-9, 9);
    auto random_series = [&](int order, bool unit) {
        std::vector<Rational> c;
        for (int m = 0; m <= order; ++m) c.emplace_back(coeff(rng), den(rng));
        if (unit && c[0].is_zero()) c[0] = Rational(1);
        return TruncatedSeries(std::move(c));
    };
    for (int i = 0; i < 400; ++i) {
        const int order = order_dist(rng);
        const TruncatedSeries s = random_series(order, false);
        const TruncatedSeries t = random_series(order, false);
        const TruncatedSeries u = random_series(order, false);
        if (!((s + t) + u == s + (t + u))) ++failures;
        if (!(s * t == t * s)) ++failures;
        if (!((s * t) * u == s * (t * u))) ++failures;
        if (!(s * (t + u) == s * t + s * u)) ++failures;
        const TruncatedSeries v = random_series(order, true);
        if (!(v * v.inverse() == TruncatedSeries::one(order))) ++failures;
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        if (!(TruncatedSeries::exp_linear(a, order) * TruncatedSeries::exp_linear(b, order) ==
              TruncatedSeries::exp_linear(a + b, order)))
            ++failures;
        if (!(TruncatedSeries::binomial_power(a, order) *
                  TruncatedSeries::binomial_power(b, order) ==
              TruncatedSeries::binomial_power(a + b, order)))
            ++failures;
        if (!(s.dilate(a).dilate(b) == s.dilate(a * b))) ++failures;
    }

    const SweepConfig cfg;
    long instances = 0;
    verify::for_each_ci(cfg, [&](const CompleteIntersection& ci) {
        ++instances;
        const int n = ci.dimension();
        const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        const ChiYPolynomial poly = chi_y_polynomial(ci, 0);
        for (int p = 0; p <= n; ++p)
            if (!(poly.chi_p(p) == sign * poly.chi_p(n - p))) ++failures;
        std::vector<int> padded = ci.degrees();
        padded.push_back(1);
        padded.insert(padded.begin(), 1);
        const CompleteIntersection repadded(n, padded);
        if (!(repadded == ci)) ++failures;
        if (!(todd_closed(repadded) == todd_closed(ci))) ++failures;
        if (!(chi_K_closed(repadded, 1, 2) == chi_K_closed(ci, 1, 2))) ++failures;
    });

    detail << "10000 binomial cases, 400 series cases, " << instances
           << " chi_y/normalization instances, " << failures << " failures";
    return failures == 0;
}

// 10. Byte-identical JSON from two full default sweeps.
bool criterion_determinism(std::ostream& detail) {
    const SweepConfig cfg;
    const std::string first = reports_to_json(verify::run_checks(cfg), cfg);
    const std::string second = reports_to_json(verify::run_checks(cfg), cfg);
    detail << first.size() << " bytes each";
    if (first != second) {
        detail << "; reports differ";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::ostream&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "Todd genus agrees along closed form, generating function, Chern roots, recurrence",
         criterion_todd_oracles},
        {2, "cusp values agree along all routes, integral and symmetric", criterion_cusp_oracles},
        {3, "Todd value/bound sweep is violation-free", criterion_todd_theorem},
        {4, "cusp-value sweep is violation-free and X2(6),N=2,k=1 saturates its bound at 8",
         criterion_cusp_theorem},
        {5, "A_k sweep with bridges is violation-free", criterion_ak_theorem},
        {6, "golden values and Euler positivity hold exactly", criterion_golden_values},
        {7, "four-term identity holds on every sampled instance (>= 100)", criterion_four_term},
        {8, "binomial inequality brute force is violation-free", criterion_binomial},
        {9, "property suites hold (binomial identities, series laws, chi_y palindrome, "
            "normalization)",
         criterion_properties},
        {10, "full default sweep is byte-deterministic", criterion_determinism},
    };

    bool all_passed = true;
    for (const Criterion& criterion : criteria) {
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail << "exception: " << e.what();
        }
        all_passed = all_passed && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
                  << criterion.name << " (" << detail.str() << ")\n";
    }
    std::cout << (all_passed ? "ACCEPTANCE: all criteria passed"
                             : "ACCEPTANCE: criteria failed")
              << "\n";
    return all_passed ? 0 : 1;
}
