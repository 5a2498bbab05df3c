#include "cigenera/binomial.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace cigenera {

mpz_class factorial(unsigned long k) {
    static std::mutex mutex;
    static std::vector<mpz_class> cache{1_mpz};  // cache[i] = i!
    std::lock_guard<std::mutex> lock(mutex);
    while (cache.size() <= k) cache.push_back(cache.back() * mpz_class(cache.size()));
    return cache[k];
}

Rational binomial_general(const Rational& a, long k) {
    if (k < 0) return Rational(0);
    if (k == 0) return Rational(1);
    mpq_class acc(1);
    const mpq_class& base = a.raw();
    for (long i = 0; i < k; ++i) acc *= base - i;
    acc /= mpq_class(factorial(static_cast<unsigned long>(k)));
    return Rational(acc);
}

bool binomial_reflect_check(const Rational& a, long k) {
    if (k < 0) throw std::invalid_argument("binomial_reflect_check: k must be >= 0");
    const Rational lhs = (k % 2 == 0) ? binomial_general(a, k) : -binomial_general(a, k);
    return lhs == binomial_general(Rational(k - 1) - a, k);
}

}  // namespace cigenera
