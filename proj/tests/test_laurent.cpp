#include <catch2/catch_amalgamated.hpp>

#include "knotflow/laurent.hpp"

using knotflow::LaurentPolynomial;

TEST_CASE("laurent basic arithmetic") {
    const auto t = LaurentPolynomial::monomial(1, 1);
    const auto one = LaurentPolynomial::one();
    const auto p = t * t - t + one;  // t^2 - t + 1

    CHECK(p.lowest() == 0);
    CHECK(p.coeffs() == std::vector<long long>{1, -1, 1});
    CHECK(p.eval_one() == 1);
    CHECK(p.eval_minus_one() == 3);

    const auto q = p * LaurentPolynomial::monomial(-2, -3);
    CHECK(q.lowest() == -3);
    CHECK(q.coeffs() == std::vector<long long>{-2, 2, -2});
    CHECK((q + (-q)).is_zero());
}

TEST_CASE("laurent trims zero padding") {
    const LaurentPolynomial p(-2, {0, 0, 3, 0, 1, 0, 0});
    CHECK(p.lowest() == 0);
    CHECK(p.coeffs() == std::vector<long long>{3, 0, 1});
    CHECK(LaurentPolynomial(0, {0, 0, 0}).is_zero());
}

TEST_CASE("laurent exact division") {
    const LaurentPolynomial cyc(0, {1, 1, 1});       // 1 + t + t^2
    const LaurentPolynomial num(0, {1, 0, 0, -1});   // 1 - t^3... sign: 1 - t^3 has coeffs {1,0,0,-1}
    const auto q = num.divide_exact(cyc);
    CHECK(q == LaurentPolynomial(0, {1, -1}));

    const LaurentPolynomial shifted = num.shifted(-2);
    CHECK(shifted.divide_exact(cyc) == LaurentPolynomial(-2, {1, -1}));

    CHECK_THROWS_AS(LaurentPolynomial(0, {1, 1}).divide_exact(cyc), std::logic_error);
}

TEST_CASE("laurent units and symmetric normalization") {
    const LaurentPolynomial trefoil(0, {1, -1, 1});
    const auto shifted = trefoil.shifted(4);
    const auto negated = -shifted;
    CHECK(LaurentPolynomial::equal_up_to_units(trefoil, shifted));
    CHECK(LaurentPolynomial::equal_up_to_units(trefoil, negated));
    CHECK_FALSE(LaurentPolynomial::equal_up_to_units(trefoil, LaurentPolynomial(0, {1, -3, 1})));

    CHECK(negated.normalized_symmetric() == LaurentPolynomial(-1, {1, -1, 1}));
    CHECK(trefoil.normalized_symmetric().lowest() == -1);
}

TEST_CASE("laurent mirror and power substitution") {
    const LaurentPolynomial p(-1, {1, -3, 1});
    CHECK(p.mirrored() == p);  // palindromic and symmetric
    const LaurentPolynomial q(0, {2, 0, -1});
    CHECK(q.compose_power(2) == LaurentPolynomial(0, {2, 0, 0, 0, -1}));

    // random-ish property: mirror twice is the identity
    const LaurentPolynomial r(-3, {4, 0, -2, 7});
    CHECK(r.mirrored().mirrored() == r);
}
