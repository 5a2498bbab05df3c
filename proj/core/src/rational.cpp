#include "cigenera/rational.hpp"

#include <ostream>

namespace cigenera {

namespace {

mpq_class canonicalized(mpq_class q) {
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    mpq_canonicalize(q.get_mpq_t());
    return q;
}

}  // namespace

Rational::Rational(long num, long den)
    : q_(canonicalized(mpq_class(mpz_class(num), mpz_class(den)))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den)
    : q_(canonicalized(mpq_class(num, den))) {}

Rational::Rational(const mpq_class& q) : q_(canonicalized(q)) {}

Rational Rational::from_string(const std::string& text) {
    mpq_class q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    return Rational(canonicalized(q), already_canonical{});
}

Rational Rational::pow(long exponent) const {
    if (exponent == 0) return Rational(1);
    const bool invert = exponent < 0;
    if (invert && is_zero()) throw std::domain_error("Rational: 0 to a negative power");
    const auto e = static_cast<unsigned long>(invert ? -exponent : exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), e);
    return invert ? Rational(den, num) : Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace cigenera
