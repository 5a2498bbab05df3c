#include "cigenera/genera_closed.hpp"

#include <optional>
#include <stdexcept>

#include "cigenera/binomial.hpp"

namespace cigenera {

namespace detail {

Rational signed_subset_sum(int n, const std::vector<int>& degrees, const Rational& t) {
    const int r = static_cast<int>(degrees.size());
    if (r > 20)
        throw std::invalid_argument("signed_subset_sum: more than 20 degrees (2^r enumeration)");
    const long top = static_cast<long>(n) + r;
    Rational total(0);
    for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
        long subset_sum = 0;
        for (int i = 0; i < r; ++i)
            if (mask & (1UL << i)) subset_sum += degrees[static_cast<size_t>(i)];
        const int j = __builtin_popcountl(mask);
        const Rational term = binomial_general(t - 1 + Rational(subset_sum), top);
        if ((n + r + j) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

Rational todd_closed_at(int n, const std::vector<int>& degrees) {
    return signed_subset_sum(n, degrees, Rational(0));
}

}  // namespace detail

GenusValue todd_closed(const CompleteIntersection& ci) {
    return detail::todd_closed_at(ci.dimension(), ci.degrees());
}

GenusValue chi_K_closed(const TwistedGenusQuery& query) {
    const Rational t = Rational(query.k, query.level) * Rational(query.ci.first_chern());
    return detail::signed_subset_sum(query.ci.dimension(), query.ci.degrees(), t);
}

GenusValue chi_K_closed(const CompleteIntersection& ci, int k, int level) {
    return chi_K_closed(TwistedGenusQuery(ci, k, level));
}

GenusValue ahat_closed(const CompleteIntersection& ci) {
    return chi_K_closed(ci, 1, 2);
}

GenusValue ak_closed(const CompleteIntersection& ci, long k) {
    if (k < 1) throw std::invalid_argument("ak_closed: k must be >= 1");
    const Rational t = Rational(ci.first_chern(), k);
    // A_k carries sign (-1)^{r-j} = (-1)^n (-1)^{n+r+j}, so reuse the kernel
    // with a global (-1)^n.
    const Rational kernel = detail::signed_subset_sum(ci.dimension(), ci.degrees(), t);
    const Rational sign = (ci.dimension() % 2 == 0) ? Rational(1) : Rational(-1);
    return Rational(k).pow(ci.dimension()) * sign * kernel;
}

GenusValue todd_recurrence(const CompleteIntersection& ci) {
    if (ci.codimension() < 1)
        throw std::invalid_argument("todd_recurrence: needs at least one degree to peel");
    const std::vector<int>& degrees = ci.degrees();
    const int n = ci.dimension();
    const int r = ci.codimension();

    // memo[len][l] = Td(X_l(degrees[0..len-1])); len = 0 is CP^l with Td = 1.
    std::vector<std::vector<std::optional<Rational>>> memo(
        static_cast<size_t>(r) + 1,
        std::vector<std::optional<Rational>>(static_cast<size_t>(n) + 1));

    auto todd = [&](auto&& self, int l, int len) -> Rational {
        if (len == 0) return Rational(1);
        auto& slot = memo[static_cast<size_t>(len)][static_cast<size_t>(l)];
        if (slot) return *slot;
        const Rational peeled(degrees[static_cast<size_t>(len) - 1]);
        Rational total(0);
        for (int m = 0; m <= l; ++m) {
            Rational term = binomial_general(peeled, l - m + 1) * self(self, m, len - 1);
            if ((l - m) % 2 != 0) term = -term;
            total += term;
        }
        slot = total;
        return total;
    };
    return todd(todd, n, r);
}

GenusValue ak_from_todd(const CompleteIntersection& ci, long k) {
    if (k < 1) throw std::invalid_argument("ak_from_todd: k must be >= 1");
    const int n = ci.dimension();
    const Rational c1_over_k = Rational(ci.first_chern(), k);
    Rational total(0);
    for (int l = 0; l <= n; ++l) {
        Rational term = binomial_general(c1_over_k, n - l) * detail::todd_closed_at(l, ci.degrees());
        if (l % 2 != 0) term = -term;
        total += term;
    }
    return Rational(k).pow(n) * total;
}

}  // namespace cigenera
