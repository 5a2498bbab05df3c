#include "doctest.h"

#include "cigenera/genera_closed.hpp"

using namespace cigenera;

namespace {
const CompleteIntersection k3(2, {4});            // c1 = 0
const CompleteIntersection quintic3(3, {5});      // c1 = 0, n odd
const CompleteIntersection biquadric(2, {2, 2});  // c1 = 1
const CompleteIntersection quartic_curve(1, {4}); // c1 = -1
const CompleteIntersection sextic_surface(2, {6});// c1 = -2
}  // namespace

TEST_CASE("Todd closed form") {
    CHECK_EQ(todd_closed(biquadric), Rational(1));
    CHECK_EQ(todd_closed(k3), Rational(2));
    CHECK_EQ(todd_closed(quintic3), Rational(0));
    // genus-3 plane quartic: Td = 1 - g = -2
    CHECK_EQ(todd_closed(quartic_curve), Rational(-2));
    for (int n = 1; n <= 6; ++n) CHECK_EQ(todd_closed(CompleteIntersection(n, {})), Rational(1));
}

TEST_CASE("Todd boundary case of the c1 < 0 bound") {
    // (-1)^n Td(X_1(4)) = 2 = n + r exactly
    CHECK_EQ(-todd_closed(quartic_curve), Rational(2));
}

TEST_CASE("cusp values chi(X, K^{k/N})") {
    CHECK_EQ(chi_K_closed(biquadric, 1, 1), Rational(1));  // k = N, n even
    // c1 > 0 with N | c1, 0 < k < N
    const CompleteIntersection quadric3(3, {2});  // c1 = 3
    CHECK_EQ(chi_K_closed(quadric3, 1, 3), Rational(0));
    CHECK_EQ(chi_K_closed(quadric3, 2, 3), Rational(0));
    const CompleteIntersection cp3(3, {});  // c1 = 4
    CHECK_EQ(chi_K_closed(cp3, 1, 2), Rational(0));
    for (int k = 1; k <= 3; ++k) CHECK_EQ(chi_K_closed(cp3, k, 4), Rational(0));
    CHECK_EQ(chi_K_closed(cp3, 4, 4), Rational(-1));  // k = N, n odd
    // c1 = 0, n odd: every k gives 1 + (-1)^n = 0
    for (int k = 0; k <= 5; ++k) CHECK_EQ(chi_K_closed(quintic3, k, 5), Rational(0));
    // c1 = -2: the k/N = 1/2 value saturating the cusp bound
    CHECK_EQ(chi_K_closed(sextic_surface, 1, 2), Rational(8));
    // boundaries
    CHECK_EQ(chi_K_closed(sextic_surface, 0, 3), todd_closed(sextic_surface));
    CHECK_EQ(chi_K_closed(quartic_curve, 1, 1), -todd_closed(quartic_curve));
}

TEST_CASE("cusp value symmetry chi(k) == (-1)^n chi(N-k)") {
    for (const CompleteIntersection& ci :
         {sextic_surface, quartic_curve, biquadric, CompleteIntersection(3, {3, 2})}) {
        const Rational sign = ci.dimension() % 2 == 0 ? Rational(1) : Rational(-1);
        for (int level = 1; level <= 4; ++level)
            for (int k = 0; k <= level; ++k)
                CHECK_EQ(chi_K_closed(ci, k, level),
                         sign * chi_K_closed(ci, level - k, level));
    }
}

TEST_CASE("A-hat closed form") {
    CHECK_EQ(ahat_closed(k3), Rational(2));
    // c1 = 1 is odd, so the even-c1 vanishing does not apply; the formal
    // value is 1/2 (hand evaluation, confirmed by the Chern-root route).
    CHECK_EQ(ahat_closed(biquadric), Rational(1, 2));
    CHECK_EQ(ahat_closed(quintic3), Rational(0));
    // n odd: vanishes by the k/N = 1/2 symmetry, for any c1
    CHECK_EQ(ahat_closed(CompleteIntersection(3, {9})), Rational(0));
    CHECK_EQ(ahat_closed(CompleteIntersection(3, {2})), Rational(0));
}

TEST_CASE("A_k closed form") {
    for (const CompleteIntersection& ci : {k3, quintic3, biquadric, sextic_surface})
        CHECK_EQ(ak_closed(ci, 1), todd_closed(ci));
    CHECK_EQ(ak_closed(quintic3, 5), Rational(0));
    CHECK_EQ(ak_closed(k3, 2), Rational(8));  // 2^n * A-hat = 4 * 2
    CHECK_EQ(ak_closed(k3, 2), Rational(2).pow(2) * ahat_closed(k3));
    CHECK_THROWS_AS(ak_closed(k3, 0), std::invalid_argument);
}

TEST_CASE("A_k bridges to the cusp values") {
    for (const CompleteIntersection& ci :
         {k3, quintic3, biquadric, sextic_surface, CompleteIntersection(4, {3, 2})}) {
        for (long k = 2; k <= 4; ++k)
            CHECK_EQ(ak_closed(ci, k),
                     Rational(k).pow(ci.dimension()) *
                         chi_K_closed(ci, static_cast<int>(k) - 1, static_cast<int>(k)));
    }
}

TEST_CASE("Todd recurrence") {
    CHECK_EQ(todd_recurrence(k3), Rational(2));
    CHECK_EQ(todd_recurrence(CompleteIntersection(1, {2, 2})), Rational(0));
    for (int d = 2; d <= 6; ++d)
        for (int n = 1; n <= 5; ++n)
            CHECK_EQ(todd_recurrence(CompleteIntersection(n, {d})),
                     todd_closed(CompleteIntersection(n, {d})));
    CHECK_EQ(todd_recurrence(CompleteIntersection(3, {4, 3, 2})),
             todd_closed(CompleteIntersection(3, {4, 3, 2})));
    CHECK_THROWS_AS(todd_recurrence(CompleteIntersection(3, {})), std::invalid_argument);
}

TEST_CASE("A_k from the Todd expansion") {
    // frozen by evaluating both routes by hand
    CHECK_EQ(ak_from_todd(CompleteIntersection(2, {3}), 2), Rational(5, 2));
    CHECK_EQ(ak_closed(CompleteIntersection(2, {3}), 2), Rational(5, 2));
    CHECK_EQ(ak_from_todd(CompleteIntersection(3, {2, 2}), 3), Rational(-11, 3));
    CHECK_EQ(ak_closed(CompleteIntersection(3, {2, 2}), 3), Rational(-11, 3));
    // c1/k = 0 collapses to k^n Td
    CHECK_EQ(ak_from_todd(quintic3, 5), Rational(5).pow(3) * todd_closed(quintic3));
    CHECK_THROWS_AS(ak_from_todd(k3, 0), std::invalid_argument);
}

TEST_CASE("subset enumeration is capped") {
    CHECK_THROWS_AS(todd_closed(CompleteIntersection(1, std::vector<int>(21, 2))),
                    std::invalid_argument);
}

TEST_CASE("genus values are invariant under degree-1 padding") {
    const CompleteIntersection padded(2, {6, 1, 1});
    CHECK_EQ(todd_closed(padded), todd_closed(sextic_surface));
    CHECK_EQ(chi_K_closed(padded, 1, 2), chi_K_closed(sextic_surface, 1, 2));
    CHECK_EQ(ak_closed(padded, 2), ak_closed(sextic_surface, 2));
}
