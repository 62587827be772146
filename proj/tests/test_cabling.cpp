#include <catch2/catch_amalgamated.hpp>

#include "knotflow/cabling.hpp"

using namespace knotflow;

namespace {

// satellite oracle: Delta_cable(t) = Delta_base(t^p) * Delta_torus(p,q)(t)
void check_satellite_identity(const BraidWord& base, long long p, long long q) {
    const auto cable = cable_braid(base, p, q);
    const auto lhs = alexander_from_braid(cable);
    const auto base_delta =
        base.strands == 1 ? LaurentPolynomial::one() : alexander_from_braid(base);
    const auto rhs =
        (base_delta.compose_power(p) * alexander_from_braid(torus_braid(p, q)))
            .normalized_symmetric();
    CHECK(lhs == rhs);
}

}  // namespace

TEST_CASE("descriptor validation") {
    CHECK(validate_descriptor({{{2, 3}}, 1}).empty());
    CHECK(validate_descriptor({{{2, 3}, {3, 2}}, 1}).empty());  // later stages unrestricted
    CHECK_FALSE(validate_descriptor({{{2, 4}}, 1}).empty());    // gcd 2
    CHECK_FALSE(validate_descriptor({{{3, 2}}, 1}).empty());    // first stage needs p < q
    CHECK_FALSE(validate_descriptor({{{1, 5}}, 1}).empty());    // p >= 2
    CHECK(validate_descriptor({{}, 1}).empty());
}

TEST_CASE("cable of the unknot is the torus braid") {
    const BraidWord unknot{1, {}};
    const auto tre = cable_braid(unknot, 2, 3);
    CHECK(tre.strands == 2);
    CHECK(tre.algebraic_length() == 3);
    CHECK(alexander_from_braid(tre) == LaurentPolynomial(-1, {1, -1, 1}));

    const auto t34 = cable_braid(unknot, 3, 4);
    CHECK(t34.strands == 3);
    CHECK(t34.algebraic_length() == 8);
    CHECK(alexander_from_braid(t34) == alexander_from_braid(torus_braid(3, 4)));
}

TEST_CASE("cable word accounting for the trefoil base") {
    const auto trefoil = torus_braid(2, 3);
    const auto c = cable_braid(trefoil, 2, 13);
    CHECK(c.strands == 4);
    // parallel copy contributes p^2 per letter, correction q - p*w = 13 - 6 = 7
    CHECK(static_cast<long long>(c.letters.size()) == 4 * 3 + 7);
    CHECK(c.algebraic_length() == 19);
    CHECK(c.positive());
    CHECK(closure_components(c) == 1);
}

TEST_CASE("satellite identity holds for the oracle set") {
    const BraidWord unknot{1, {}};
    const auto trefoil = torus_braid(2, 3);
    check_satellite_identity(unknot, 2, 3);
    check_satellite_identity(unknot, 3, 4);
    check_satellite_identity(trefoil, 2, 7);
    check_satellite_identity(trefoil, 2, 13);
}

TEST_CASE("cable braid rejections") {
    const BraidWord unknot{1, {}};
    CHECK_THROWS_AS(cable_braid(unknot, 2, 4), std::invalid_argument);   // gcd 2
    CHECK_THROWS_AS(cable_braid(unknot, 1, 3), std::invalid_argument);   // p < 2
    CHECK_THROWS_AS(cable_braid(torus_braid(2, 2), 2, 3), std::domain_error);  // link base
}

TEST_CASE("iterated cables") {
    CHECK(iterated_cable({{}, 1}) == BraidWord{1, {}});
    CHECK(iterated_cable({{{2, 3}}, 1}) == torus_braid(2, 3));

    const auto two_stage = iterated_cable({{{2, 3}, {2, 13}}, 1});
    CHECK(two_stage == cable_braid(torus_braid(2, 3), 2, 13));

    const auto mirrored = iterated_cable({{{2, 3}}, -1});
    CHECK(mirrored == torus_braid(2, 3).mirrored());

    CHECK_THROWS_AS(iterated_cable({{{2, 4}}, 1}), std::invalid_argument);
}

TEST_CASE("iterated cables stay in the iterated-torus class") {
    // none of the descriptor-generated knots is the figure-eight
    const LaurentPolynomial fig8(-1, {1, -3, 1});
    const std::vector<CableDescriptor> ds = {
        {{{2, 3}}, 1}, {{{2, 5}}, 1}, {{{3, 4}}, 1}, {{{2, 3}, {2, 13}}, 1},
        {{{2, 3}, {3, 2}}, 1}};
    for (const auto& d : ds) {
        const auto k = iterated_cable(d);
        CHECK(closure_components(k) == 1);
        CHECK(alexander_from_braid(k) != fig8);
    }
}

TEST_CASE("positivity when corrections stay nonnegative") {
    // q > p*w at each stage keeps every emitted letter positive
    const auto k = iterated_cable({{{2, 3}, {2, 7}}, 1});
    CHECK(k.positive());
}

TEST_CASE("curve class normalization") {
    CHECK(normalize_curve_class({3, 2}) == TorusCurveClass{1, 2});
    CHECK(normalize_curve_class({0, 0}) == TorusCurveClass{0, 0});
    CHECK(normalize_curve_class({7, 3}) == TorusCurveClass{1, 3});
    CHECK(normalize_curve_class({4, 2}) == TorusCurveClass{0, 1});
    CHECK(normalize_curve_class({-1, 3}) == TorusCurveClass{2, 3});
}
