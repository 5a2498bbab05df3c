#pragma once

#include "cigenera/rational.hpp"

namespace cigenera {

/// k!, computed iteratively and cached for the life of the process.
/// Safe to call from multiple threads.
mpz_class factorial(unsigned long k);

/// Generalized binomial coefficient C(a, k) = a(a-1)...(a-k+1) / k!
/// for arbitrary rational a. C(a, 0) = 1; C(a, k) = 0 for k < 0.
Rational binomial_general(const Rational& a, long k);

/// Checks the reflection identity (-1)^k C(a, k) = C(k-1-a, k), both
/// sides evaluated independently. Requires k >= 0. Always true; exists
/// as a self-test hook.
bool binomial_reflect_check(const Rational& a, long k);

}  // namespace cigenera
