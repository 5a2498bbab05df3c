#include "cigenera/verify.hpp"

#include <map>
#include <stdexcept>

#include "cigenera/binomial.hpp"
#include "cigenera/genera_closed.hpp"
#include "cigenera/genera_oracles.hpp"

namespace cigenera::verify {

namespace {

Rational parity_sign(int n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

// Collects exact comparisons into a report; failures become records, never
// exceptions, so a sweep always runs to completion.
class Checker {
public:
    Checker(SweepReport& report, std::string subject, std::string params)
        : report_(report), subject_(std::move(subject)), params_(std::move(params)) {}

    void equal(const Rational& left, const Rational& right, const std::string& relation) {
        ++report_.assertions;
        if (!(left == right)) record(relation, left.to_string(), right.to_string());
    }

    void at_least(const Rational& left, const Rational& right, const std::string& relation) {
        ++report_.assertions;
        if (left < right) record(relation, left.to_string(), right.to_string());
    }

    void integral(const Rational& value, const std::string& relation) {
        ++report_.assertions;
        if (!value.is_integer()) record(relation, value.to_string(), "an integer");
    }

    void require(bool condition, const std::string& relation,
                 const std::string& left, const std::string& right) {
        ++report_.assertions;
        if (!condition) record(relation, left, right);
    }

private:
    void record(const std::string& relation, std::string left, std::string right) {
        report_.violations.push_back(
            {report_.check_id, subject_, params_, relation, std::move(left), std::move(right)});
    }

    SweepReport& report_;
    std::string subject_;
    std::string params_;
};

std::string kn_params(int k, int level) {
    return "k=" + std::to_string(k) + " N=" + std::to_string(level);
}

// Lower bound of the cusp-value theorem: C(n+1 - u*c1, n+1) + (-1)^n C(n+1 - v*c1, n+1).
Rational cusp_lower_bound(int n, long c1, const Rational& u, const Rational& v) {
    const Rational top(n + 1);
    return binomial_general(top - u * Rational(c1), n + 1) +
           parity_sign(n) * binomial_general(top - v * Rational(c1), n + 1);
}

}  // namespace

namespace {

void validate(const SweepConfig& cfg) {
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max)
        throw std::invalid_argument("sweep: need 1 <= n_min <= n_max");
    if (cfg.r_max < 0) throw std::invalid_argument("sweep: r_max must be >= 0");
    if (cfg.d_max < 2) throw std::invalid_argument("sweep: d_max must be >= 2");
    for (int level : cfg.levels)
        if (level < 1) throw std::invalid_argument("sweep: levels must be >= 1");
    for (long k : cfg.ak)
        if (k < 1) throw std::invalid_argument("sweep: A_k indices must be >= 1");
}

}  // namespace

const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids = {"todd", "chik", "ak",
                                                 "four-term", "binomial", "oracles"};
    return ids;
}

void for_each_multidegree(int r_max, int d_max,
                          const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> tuple;
    auto extend = [&](auto&& self, int remaining, int max_d) -> void {
        if (remaining == 0) {
            fn(tuple);
            return;
        }
        for (int d = 2; d <= max_d; ++d) {
            tuple.push_back(d);
            self(self, remaining - 1, d);
            tuple.pop_back();
        }
    };
    for (int r = 0; r <= r_max; ++r) extend(extend, r, d_max);
}

void for_each_ci(const SweepConfig& cfg,
                 const std::function<void(const CompleteIntersection&)>& fn) {
    validate(cfg);
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        for_each_multidegree(cfg.r_max, cfg.d_max, [&](const std::vector<int>& degrees) {
            fn(CompleteIntersection(n, degrees));
        });
}

SweepReport check_theorem_todd(const SweepConfig& cfg) {
    SweepReport report;
    report.check_id = "todd";
    report.description =
        "Todd genus: 1 for c1>0, 1+(-1)^n for c1=0, two lower bounds for c1<0";
    for_each_ci(cfg, [&](const CompleteIntersection& ci) {
        ++report.instances;
        Checker check(report, ci.to_string(), "");
        const int n = ci.dimension();
        const long c1 = ci.first_chern();
        const Rational td = todd_closed(ci);
        if (c1 > 0) {
            check.equal(td, Rational(1), "Td == 1 when c1 > 0");
        } else if (c1 == 0) {
            check.equal(td, Rational(1) + parity_sign(n), "Td == 1 + (-1)^n when c1 = 0");
        } else {
            const Rational signed_td = parity_sign(n) * td;
            check.at_least(signed_td, Rational(n + ci.codimension()),
                           "(-1)^n Td >= n + r when c1 < 0");
            const Rational sharper =
                binomial_general(Rational(n + 1 - c1), n + 1) + parity_sign(n);
            check.at_least(signed_td, sharper,
                           "(-1)^n Td >= C(n+1-c1, n+1) + (-1)^n when c1 < 0");
        }
    });
    return report;
}

SweepReport check_theorem_chiK(const SweepConfig& cfg) {
    SweepReport report;
    report.check_id = "chik";
    report.description =
        "cusp values chi(X, K^{k/N}) for N | c1: closed values, half-interval "
        "bounds, odd-n vanishing at k/N=1/2, integrality, k <-> N-k symmetry";
    for_each_ci(cfg, [&](const CompleteIntersection& ci) {
        const int n = ci.dimension();
        const long c1 = ci.first_chern();
        const Rational td = todd_closed(ci);
        for (int level : cfg.levels) {
            if (c1 % level != 0) continue;
            ++report.instances;
            std::vector<Rational> value;
            for (int k = 0; k <= level; ++k) value.push_back(chi_K_closed(ci, k, level));
            for (int k = 0; k <= level; ++k) {
                Checker check(report, ci.to_string(), kn_params(k, level));
                const Rational& v = value[static_cast<size_t>(k)];
                check.integral(v, "chi(X, K^{k/N}) is integral when N | c1");
                if (c1 > 0) {
                    if (k == 0)
                        check.equal(v, Rational(1), "chi == 1 when c1 > 0, k = 0");
                    else if (k == level)
                        check.equal(v, parity_sign(n), "chi == (-1)^n when c1 > 0, k = N");
                    else
                        check.equal(v, Rational(0), "chi == 0 when c1 > 0, 0 < k < N");
                } else if (c1 == 0) {
                    check.equal(v, Rational(1) + parity_sign(n), "chi == 1 + (-1)^n when c1 = 0");
                } else {
                    if (2 * k <= level)
                        check.at_least(parity_sign(n) * v,
                                       cusp_lower_bound(n, c1, Rational(level - k, level),
                                                        Rational(k, level)),
                                       "(-1)^n chi >= C(n+1-((N-k)/N)c1, n+1) + "
                                       "(-1)^n C(n+1-(k/N)c1, n+1) for k/N <= 1/2");
                    if (2 * k >= level)
                        check.at_least(v,
                                       cusp_lower_bound(n, c1, Rational(k, level),
                                                        Rational(level - k, level)),
                                       "chi >= C(n+1-(k/N)c1, n+1) + "
                                       "(-1)^n C(n+1-((N-k)/N)c1, n+1) for k/N >= 1/2");
                    if (2 * k == level && n % 2 == 1)
                        check.equal(v, Rational(0), "chi == 0 at k/N = 1/2 for odd n");
                }
                if (2 * k <= level)
                    check.equal(v, parity_sign(n) * value[static_cast<size_t>(level - k)],
                                "chi(k) == (-1)^n chi(N-k)");
            }
            Checker boundary(report, ci.to_string(), "N=" + std::to_string(level));
            boundary.equal(value.front(), td, "chi(k=0) == Td");
            boundary.equal(value.back(), parity_sign(n) * td, "chi(k=N) == (-1)^n Td");
        }
    });
    return report;
}

SweepReport check_theorem_ak(const SweepConfig& cfg) {
    SweepReport report;
    report.check_id = "ak";
    report.description =
        "A_k genus for k | c1: 0 for c1>0, k^n(1+(-1)^n) for c1=0, lower bound "
        "for c1<0; bridges A_1 = Td, A_2 = 2^n A-hat, A_k = k^n chi(K^{(k-1)/k})";
    for_each_ci(cfg, [&](const CompleteIntersection& ci) {
        ++report.instances;
        const int n = ci.dimension();
        const long c1 = ci.first_chern();
        {
            Checker check(report, ci.to_string(), "k=1");
            check.equal(ak_closed(ci, 1), todd_closed(ci), "A_1 == Td");
        }
        {
            Checker check(report, ci.to_string(), "k=2");
            check.equal(ak_closed(ci, 2), Rational(2).pow(n) * ahat_closed(ci),
                        "A_2 == 2^n A-hat");
        }
        for (long k : cfg.ak) {
            Checker check(report, ci.to_string(), "k=" + std::to_string(k));
            const Rational value = ak_closed(ci, k);
            check.equal(value,
                        Rational(k).pow(n) *
                            chi_K_closed(ci, static_cast<int>(k) - 1, static_cast<int>(k)),
                        "A_k == k^n chi(K^{(k-1)/k})");
            if (c1 % k != 0) continue;
            if (c1 > 0) {
                check.equal(value, Rational(0), "A_k == 0 when c1 > 0, k | c1");
            } else if (c1 == 0) {
                check.equal(value, Rational(k).pow(n) * (Rational(1) + parity_sign(n)),
                            "A_k == k^n (1 + (-1)^n) when c1 = 0");
            } else {
                const Rational bound =
                    Rational(k).pow(n) *
                    cusp_lower_bound(n, c1, Rational(k - 1, k), Rational(1, k));
                check.at_least(value, bound,
                               "A_k >= k^n [C(n+1-((k-1)/k)c1, n+1) + "
                               "(-1)^n C(n+1-c1/k, n+1)] when c1 < 0, k | c1");
            }
        }
    });
    return report;
}

SweepReport check_four_term_identity(const SweepConfig& cfg) {
    SweepReport report;
    report.check_id = "four-term";
    report.description =
        "chi(d1,d2,d3,...) - chi(d1+1,d2-1,d3,...) == "
        "chi(d1,d2-1+d3,...) - chi(d2-1,d1+d3,...) for every k/N";
    auto run_tuple = [&](int n, const std::vector<int>& degrees) {
        const int d1 = degrees[0], d2 = degrees[1], d3 = degrees[2];
        std::vector<int> rest(degrees.begin() + 3, degrees.end());
        auto with_rest = [&](std::vector<int> head) {
            head.insert(head.end(), rest.begin(), rest.end());
            return head;
        };
        const CompleteIntersection base(n, degrees);
        const CompleteIntersection bumped(n, with_rest({d1 + 1, d2 - 1, d3}));
        const CompleteIntersection merged_right(n, with_rest({d1, d2 - 1 + d3}));
        const CompleteIntersection merged_left(n, with_rest({d2 - 1, d1 + d3}));
        std::string subject = "X" + std::to_string(n) + "(";
        for (size_t i = 0; i < degrees.size(); ++i)
            subject += (i ? "," : "") + std::to_string(degrees[i]);
        subject += ")";
        for (int level : cfg.levels) {
            for (int k = 0; k <= level; ++k) {
                ++report.instances;
                Checker check(report, subject, kn_params(k, level));
                const Rational lhs =
                    chi_K_closed(base, k, level) - chi_K_closed(bumped, k, level);
                const Rational rhs = chi_K_closed(merged_right, k, level) -
                                     chi_K_closed(merged_left, k, level);
                check.equal(lhs, rhs, "four-term cusp-value identity");
            }
        }
    };
    // Deterministic grid; positions matter, so tuples are not sorted.
    const int cap3 = std::min(cfg.d_max, 4);
    for (int n = std::max(1, cfg.n_min); n <= std::min(cfg.n_max, 4); ++n)
        for (int d1 = 2; d1 <= cap3; ++d1)
            for (int d2 = 2; d2 <= cap3; ++d2)
                for (int d3 = 2; d3 <= cap3; ++d3) run_tuple(n, {d1, d2, d3});
    const int cap4 = std::min(cfg.d_max, 3);
    for (int n = std::max(1, cfg.n_min); n <= std::min(cfg.n_max, 3); ++n)
        for (int d1 = 2; d1 <= cap4; ++d1)
            for (int d2 = 2; d2 <= cap4; ++d2)
                for (int d3 = 2; d3 <= cap4; ++d3)
                    for (int d4 = 2; d4 <= cap4; ++d4) run_tuple(n, {d1, d2, d3, d4});
    return report;
}

SweepReport check_binomial_inequality(IntRange a_range, IntRange b_range, IntRange n_range) {
    SweepReport report;
    report.check_id = "binomial";
    report.description =
        "C(a+1,n) + C(b-1,n) >= C(a,n) + C(b,n) for a >= b, a+b >= n-1, n > 0; "
        "equality when a+b = n-1 and n odd";
    for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
        for (int b = b_range.lo; b <= b_range.hi; ++b) {
            for (int a = std::max(b, a_range.lo); a <= a_range.hi; ++a) {
                if (a + b < n - 1) continue;
                ++report.instances;
                const std::string subject = "a=" + std::to_string(a) + " b=" +
                                            std::to_string(b) + " n=" + std::to_string(n);
                Checker check(report, subject, "");
                const Rational lhs =
                    binomial_general(Rational(a + 1), n) + binomial_general(Rational(b - 1), n);
                const Rational rhs =
                    binomial_general(Rational(a), n) + binomial_general(Rational(b), n);
                check.at_least(lhs, rhs, "C(a+1,n) + C(b-1,n) >= C(a,n) + C(b,n)");
                if (a + b == n - 1 && n % 2 == 1)
                    check.equal(lhs, rhs, "equality at a+b = n-1 with n odd");
            }
        }
    }
    return report;
}

SweepReport check_oracle_agreement(const SweepConfig& cfg) {
    SweepReport report;
    report.check_id = "oracles";
    report.description =
        "exact agreement of closed forms, generating functions, Chern-root "
        "series, degree recurrence and Todd expansion; chi_y invariants";
    std::map<int, CharacteristicSeries> todd_q, ahat_q;
    std::map<std::pair<long, int>, CharacteristicSeries> ak_q;
    auto todd_series = [&](int n) -> const CharacteristicSeries& {
        auto it = todd_q.find(n);
        if (it == todd_q.end()) it = todd_q.emplace(n, todd_q_series(n)).first;
        return it->second;
    };
    auto ahat_series = [&](int n) -> const CharacteristicSeries& {
        auto it = ahat_q.find(n);
        if (it == ahat_q.end()) it = ahat_q.emplace(n, ahat_q_series(n)).first;
        return it->second;
    };
    auto ak_series = [&](long k, int n) -> const CharacteristicSeries& {
        auto it = ak_q.find({k, n});
        if (it == ak_q.end()) it = ak_q.emplace(std::make_pair(k, n), ak_q_series(k, n)).first;
        return it->second;
    };

    for_each_ci(cfg, [&](const CompleteIntersection& ci) {
        ++report.instances;
        const int n = ci.dimension();
        const long c1 = ci.first_chern();
        const Rational sign = parity_sign(n);
        Checker check(report, ci.to_string(), "");

        // Todd along all four routes.
        const Rational td = todd_closed(ci);
        check.equal(td, todd_genfun(ci), "Td closed == Td generating function");
        check.equal(td, genus_chern_root(ci, todd_series(n)), "Td closed == Td Chern roots");
        if (ci.codimension() >= 1)
            check.equal(td, todd_recurrence(ci), "Td closed == Td degree recurrence");

        // Normalization: degree-1 factors change nothing.
        std::vector<int> padded = ci.degrees();
        padded.push_back(1);
        padded.insert(padded.begin(), 1);
        const CompleteIntersection repadded(n, padded);
        check.require(repadded == ci, "degree-1 factors normalize away",
                      repadded.to_string(), ci.to_string());
        check.equal(todd_closed(repadded), td, "Td invariant under degree-1 padding");

        // A-hat.
        const Rational ah = ahat_closed(ci);
        check.equal(ah, genus_chern_root(ci, ahat_series(n)), "A-hat closed == A-hat Chern roots");
        if (n % 2 == 1) check.equal(ah, Rational(0), "A-hat == 0 in odd dimension");

        // A_k along all four routes.
        for (long k : cfg.ak) {
            Checker ak_check(report, ci.to_string(), "k=" + std::to_string(k));
            const Rational value = ak_closed(ci, k);
            ak_check.equal(value, ak_genfun(ci, k), "A_k closed == A_k generating function");
            ak_check.equal(value, genus_chern_root(ci, ak_series(k, n)),
                           "A_k closed == A_k Chern roots");
            ak_check.equal(value, ak_from_todd(ci, k), "A_k closed == A_k Todd expansion");
        }

        // Cusp values along all three routes, when integral.
        for (int level : cfg.levels) {
            if (c1 % level != 0) continue;
            std::vector<Rational> value;
            for (int k = 0; k <= level; ++k) value.push_back(chi_K_closed(ci, k, level));
            for (int k = 0; k <= level; ++k) {
                Checker kn_check(report, ci.to_string(), kn_params(k, level));
                const Rational& v = value[static_cast<size_t>(k)];
                const long twist = -(c1 / level) * k;
                kn_check.equal(v, chi_twist_genfun(ci, twist),
                               "chi(K^{k/N}) closed == twisted generating function");
                kn_check.equal(v, genus_chern_root(ci, level_q_series(k, level, n)),
                               "chi(K^{k/N}) closed == level-N Chern roots");
                kn_check.integral(v, "chi(K^{k/N}) integral when N | c1");
                if (2 * k <= level)
                    kn_check.equal(v, sign * value[static_cast<size_t>(level - k)],
                                   "chi(k) == (-1)^n chi(N-k)");
            }
        }

        // chi_y polynomial invariants.
        const ChiYPolynomial poly = chi_y_polynomial(ci, 0);
        for (int p = 0; p <= n; ++p) {
            check.equal(poly.chi_p(p), sign * poly.chi_p(n - p), "chi^p == (-1)^n chi^{n-p}");
            check.integral(poly.chi_p(p), "chi^p integral");
        }
        check.equal(poly.chi_p(0), td, "chi_y at y=0 == Td");
        check.equal(poly.evaluate(Rational(n + 2)), chi_y_series_value(ci, 0, Rational(n + 2)),
                    "interpolated chi_y reproduces a held-out series sample");
        if (ci.total_degree() > 2)
            check.at_least(sign * poly.evaluate(Rational(-1)), Rational(0),
                           "(-1)^n Euler >= 0 for total degree > 2");
    });
    return report;
}

std::vector<SweepReport> run_checks(const SweepConfig& cfg) {
    validate(cfg);
    std::vector<std::string> wanted = cfg.checks.empty() ? all_check_ids() : cfg.checks;
    for (const std::string& id : wanted) {
        bool known = false;
        for (const std::string& candidate : all_check_ids()) known |= (candidate == id);
        if (!known) throw std::invalid_argument("unknown check id '" + id + "'");
    }
    auto selected = [&](const std::string& id) {
        for (const std::string& w : wanted)
            if (w == id) return true;
        return false;
    };
    std::vector<SweepReport> reports;
    if (selected("todd")) reports.push_back(check_theorem_todd(cfg));
    if (selected("chik")) reports.push_back(check_theorem_chiK(cfg));
    if (selected("ak")) reports.push_back(check_theorem_ak(cfg));
    if (selected("four-term")) reports.push_back(check_four_term_identity(cfg));
    if (selected("binomial"))
        reports.push_back(check_binomial_inequality(cfg.binom_a, cfg.binom_b, cfg.binom_n));
    if (selected("oracles")) reports.push_back(check_oracle_agreement(cfg));
    return reports;
}

}  // namespace cigenera::verify
