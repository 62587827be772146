// End-to-end checks of the command-line tool: wire contracts, exit codes,
// and byte-level determinism.

#include <array>
#include <cstdio>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(KNOTFLOW_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli braid alexander matches the wire contract") {
    const auto r = run_cli(R"(braid alexander --word '{"n":2,"w":[1,1,1]}')");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("version").is_string());
    CHECK(doc.at("inputs_echo").at("word") == json::parse(R"({"n":2,"w":[1,1,1]})"));
    CHECK(doc.at("result").at("alexander") ==
          json::parse(R"({"coeffs":[1,-1,1],"lowest":-1})"));
    CHECK(doc.at("result").at("delta_at_1") == 1);
}

TEST_CASE("cli markov geodesic pins the closed-geodesic length") {
    const auto r = run_cli("markov geodesic --trace 3");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(std::fabs(doc.at("result").at("length").get<double>() - 1.9248473002) < 1e-10);
    CHECK(doc.contains("tolerances"));
}

TEST_CASE("cli flow check reports the contact contract") {
    const auto r = run_cli("flow check --point 1,0,0,0");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("result").at("alpha").get<double>() == 1.0);
    CHECK(doc.at("result").at("defect").get<double>() == 0.0);
    CHECK(doc.at("result").at("omega_pairing").get<double>() == 1.0);
}

TEST_CASE("cli is byte-deterministic for a fixed seed") {
    const std::string cmd = "flow check --point 1,0,0,0 --sweep 64 --seed 7";
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    const auto c = run_cli("lorenz encode --r 24 --x0 1,1,1 --steps 20000 --eps 0.8");
    const auto d = run_cli("lorenz encode --r 24 --x0 1,1,1 --steps 20000 --eps 0.8");
    REQUIRE(c.exit_code == 0);
    CHECK(c.output == d.output);
}

TEST_CASE("cli exit codes separate usage from domain errors") {
    CHECK(run_cli("braid alexander --word 'not json'").exit_code == 2);
    CHECK(run_cli("braid alexander --no-such-flag 1").exit_code == 2);
    // two-component closure is a module domain error
    CHECK(run_cli(R"(braid alexander --word '{"n":2,"w":[]}')").exit_code == 1);
    // blow-down with framing 0 violates the move precondition
    CHECK(run_cli(R"(kirby apply --link '{"labels":["a"],"matrix":[[0]]}' )"
                  R"(--moves '[{"op":"blow_down","i":0}]')")
              .exit_code == 1);
}

TEST_CASE("cli cable build reports the satellite data") {
    const auto r = run_cli(R"(cable build --descriptor '[[2,3],[2,13]]')");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("result").at("braid").at("n") == 4);
    CHECK(doc.at("result").at("invariants").at("e") == 19);
    CHECK(doc.at("result").at("invariants").at("components") == 1);

    const auto bad = run_cli(R"(cable validate --descriptor '[[2,4]]')");
    REQUIRE(bad.exit_code == 0);
    CHECK_FALSE(json::parse(bad.output).at("result").at("ok").get<bool>());
}

TEST_CASE("cli lorenz template emits a positive braid") {
    const auto r = run_cli("lorenz template --word LLRLR");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("result").at("positive").get<bool>());
    CHECK(doc.at("result").at("invariants").at("genus") == 1);
    CHECK(doc.at("result").at("alexander") ==
          json::parse(R"({"coeffs":[1,-1,1],"lowest":-1})"));
}

TEST_CASE("cli group checks") {
    const auto tre = run_cli("group check --preset trefoil-quotient");
    REQUIRE(tre.exit_code == 0);
    for (const auto& rel : json::parse(tre.output).at("result").at("relators"))
        CHECK(rel.at("passes").get<bool>());

    const auto fig8 = run_cli("group check --preset figure8");
    REQUIRE(fig8.exit_code == 0);
    for (const auto& rel : json::parse(fig8.output).at("result").at("relators"))
        CHECK(rel.at("passes").get<bool>());

    const auto xyz = run_cli("group check --preset figure8-xyz");
    REQUIRE(xyz.exit_code == 0);
    const auto rels = json::parse(xyz.output).at("result").at("relators");
    CHECK(rels.at(0).at("passes").get<bool>());        // corrected
    CHECK_FALSE(rels.at(1).at("passes").get<bool>());  // misprint
    CHECK(rels.at(2).at("passes").get<bool>());
}

TEST_CASE("cli kirby apply walks the move log") {
    const auto r = run_cli(
        R"(kirby apply --link '{"labels":["a"],"matrix":[[0]]}' )"
        R"(--moves '[{"op":"blow_up","sign":1},{"op":"slide","i":0,"j":1}]')");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("result").at("link").at("matrix") == json::parse("[[1,1],[1,1]]"));
    CHECK(doc.at("result").at("det") == 0);
}

TEST_CASE("cli flow trace exports plot-ready text") {
    const auto r = run_cli("flow trace --point 1,0,0,0 --steps 10 --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("# t x1 y1 x2 y2 h F", 0) == 0);
    // header plus one line per sample (stride 1, steps+1 samples)
    int lines = 0;
    for (char ch : r.output)
        if (ch == '\n') ++lines;
    CHECK(lines >= 12);
}
