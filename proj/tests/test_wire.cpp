#include <catch2/catch_amalgamated.hpp>

#include "knotflow/wire.hpp"

using namespace knotflow;
using nlohmann::json;

TEST_CASE("braid word wire round trip") {
    const auto trefoil = wire::braid_from_json(json::parse(R"({"n":2,"w":[1,1,1]})"));
    CHECK(trefoil == torus_braid(2, 3));
    CHECK(wire::to_json(trefoil) == json::parse(R"({"n":2,"w":[1,1,1]})"));

    const BraidWord mixed{3, {{1, 1}, {2, -1}, {1, 1}, {2, -1}}};
    CHECK(wire::braid_from_json(wire::to_json(mixed)) == mixed);

    CHECK_THROWS_AS(wire::braid_from_json(json::parse(R"({"n":2,"w":[0]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(wire::braid_from_json(json::parse(R"({"n":2,"w":[5]})")),
                    std::invalid_argument);
}

TEST_CASE("polynomial wire round trip") {
    const LaurentPolynomial p(-1, {1, -3, 1});
    CHECK(wire::to_json(p) == json::parse(R"({"coeffs":[1,-3,1],"lowest":-1})"));
    CHECK(wire::laurent_from_json(wire::to_json(p)) == p);
    CHECK(wire::laurent_from_json(wire::to_json(LaurentPolynomial::zero())) ==
          LaurentPolynomial::zero());
}

TEST_CASE("matrix wire round trips") {
    const MatZ m{2, 1, 1, 1};
    CHECK(wire::matz_from_json(wire::to_json(m)) == m);
    CHECK(wire::to_json(m)["ring"] == "Z");

    const MatE e{{1, 0}, {0, 0}, {0, -1}, {1, 0}};
    CHECK(wire::mate_from_json(wire::to_json(e)) == e);
    CHECK(wire::to_json(e)["ring"] == "Z[w]");
    // bare integers promote to the real axis of the ring
    const auto promoted = wire::mate_from_json(json::parse(R"({"ring":"Z[w]","m":[[1,0],[0,1]]})"));
    CHECK(promoted == MatE::identity());

    CHECK_THROWS_AS(wire::matz_from_json(wire::to_json(e)), std::invalid_argument);
}

TEST_CASE("framed link wire round trip") {
    FramedLink link;
    link.labels = {"a", "b"};
    link.matrix = {{0, 1}, {1, 0}};
    const auto back = wire::framed_link_from_json(wire::to_json(link));
    CHECK(back.labels == link.labels);
    CHECK(back.matrix == link.matrix);

    CHECK_THROWS_AS(
        wire::framed_link_from_json(json::parse(R"({"labels":["a"],"matrix":[[0,1],[1,0]]})")),
        std::invalid_argument);
}

TEST_CASE("cable descriptor wire round trip") {
    CableDescriptor d{{{2, 3}, {2, 13}}, -1};
    const auto back = wire::descriptor_from_json(wire::to_json(d));
    CHECK(back.stages.size() == 2);
    CHECK(back.stages[1].q == 13);
    CHECK(back.orientation == -1);

    const auto bare = wire::descriptor_from_json(json::parse(R"([[2,3]])"));
    CHECK(bare.stages.size() == 1);
    CHECK(bare.orientation == 1);
}
