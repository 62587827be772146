#include <cmath>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "knotflow/lorenz.hpp"

using namespace knotflow;

TEST_CASE("lorenz integration basics") {
    const LorenzParams p{10.0, 8.0 / 3.0, 24.0};

    const auto fixed = integrate_lorenz(p, {0, 0, 0}, 1e-3, 1000);
    for (const auto& s : fixed.states) {
        CHECK(s[0] == 0.0);
        CHECK(s[1] == 0.0);
        CHECK(s[2] == 0.0);
    }

    CHECK_THROWS_AS(integrate_lorenz(p, {1, 1, 1}, 0.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(integrate_lorenz(p, {1, 1, 1}, -1e-3, 10), std::invalid_argument);

    // deterministic for fixed inputs
    const auto a = integrate_lorenz(p, {1, 1, 1}, 1e-3, 500);
    const auto b = integrate_lorenz(p, {1, 1, 1}, 1e-3, 500);
    CHECK(a.states == b.states);
}

TEST_CASE("lorenz trajectories stay in the absorbing region at r=24") {
    const LorenzParams p{10.0, 8.0 / 3.0, 24.0};
    const auto traj = integrate_lorenz(p, {1, 1, 1}, 1e-3, 1000000);
    double max_abs_z = 0;
    for (const auto& s : traj.states) max_abs_z = std::max(max_abs_z, std::fabs(s[2]));
    CHECK(max_abs_z < 60.0);
}

TEST_CASE("subcritical rayleigh number collapses to the origin") {
    const LorenzParams p{10.0, 8.0 / 3.0, 0.5};
    const auto traj = integrate_lorenz(p, {1, 1, 1}, 1e-3, 50000);
    const auto& last = traj.states.back();
    CHECK(std::hypot(last[0], last[1], last[2]) < 1e-8);
    CHECK(lobe_encoding(traj).symbols.size() <= 2);  // at most a transient maximum
}

TEST_CASE("symbol words") {
    SymbolWord w{"RLLR"};
    CHECK(w.canonical().symbols == "LLRR");
    CHECK(w.primitive());
    CHECK(SymbolWord{"LRLR"}.minimal_period() == 2);
    CHECK_FALSE(SymbolWord{"LRLR"}.primitive());
    CHECK(SymbolWord{"LLR"}.mirrored().symbols == "RRL");
    CHECK_THROWS_AS(SymbolWord{"LXR"}.validate(), std::invalid_argument);
}

TEST_CASE("lobe encoding around the spiral fixed points") {
    const double r = 15.0;
    const double c = std::sqrt(8.0 / 3.0 * (r - 1.0));
    const LorenzParams p{10.0, 8.0 / 3.0, r};

    const auto right = integrate_lorenz(p, {c + 0.5, c + 0.5, r - 1.0 + 0.5}, 1e-3, 40000);
    const auto wr = lobe_encoding(right);
    REQUIRE(wr.symbols.size() > 5);
    CHECK(wr.symbols.find('L') == std::string::npos);

    // the (x,y) -> (-x,-y) symmetry swaps the lobes
    const auto left = integrate_lorenz(p, {-(c + 0.5), -(c + 0.5), r - 1.0 + 0.5}, 1e-3, 40000);
    const auto wl = lobe_encoding(left);
    CHECK(wl.symbols == wr.mirrored().symbols);
}

TEST_CASE("close returns on a synthetic periodic signal") {
    // closed loop alternating between the lobes, period 2 pi
    LorenzTrajectory traj;
    traj.dt = 1e-3;
    const double period = 2.0 * M_PI;
    for (int k = 0; k <= 3 * 6284; ++k) {
        const double t = traj.dt * k;
        traj.states.push_back({std::sin(t), std::cos(t), 2.0 + std::sin(2.0 * t)});
    }
    const auto cands = close_return_candidates(traj, 1e-2);
    REQUIRE_FALSE(cands.empty());
    CHECK(cands.front().period == Catch::Approx(period).margin(5e-3));
    // two z-maxima per loop, one in x > 0 and one in x < 0
    CHECK(cands.front().word.symbols == "LR");

    const auto none = close_return_candidates(traj, 1e-12);
    CHECK(none.empty());
    CHECK_THROWS_AS(close_return_candidates(traj, 0.0), std::invalid_argument);
}

TEST_CASE("close returns on the chaotic attractor re-encode consistently") {
    const LorenzParams p{10.0, 8.0 / 3.0, 24.0};
    const auto traj = integrate_lorenz(p, {1, 1, 1}, 1e-3, 400000);
    const auto cands = close_return_candidates(traj, 0.5);
    REQUIRE_FALSE(cands.empty());
    for (std::size_t k = 0; k < std::min<std::size_t>(cands.size(), 10); ++k) {
        const auto& cand = cands[k];
        // the window between the section points re-encodes to the same word
        LorenzTrajectory segment;
        segment.dt = traj.dt;
        for (std::size_t i = cand.start_index - 1; i < cand.end_index; ++i)
            segment.states.push_back(traj.states[i]);
        const auto resym = lobe_encoding(segment);
        CHECK(resym.canonical().symbols == cand.word.symbols);
    }
}

TEST_CASE("template braid of LR is one positive crossing") {
    const auto tb = template_braid(SymbolWord{"LR"});
    CHECK(tb.primitive);
    CHECK(tb.braid.strands == 2);
    REQUIRE(tb.braid.letters.size() == 1);
    CHECK(tb.braid.letters[0] == BraidLetter{1, 1});
    CHECK(closure_components(tb.braid) == 1);
    CHECK(alexander_from_braid(tb.braid) == LaurentPolynomial::one());
}

TEST_CASE("template braid of a single symbol is the trivial braid") {
    const auto tb = template_braid(SymbolWord{"L"});
    CHECK(tb.braid.strands == 1);
    CHECK(tb.braid.letters.empty());
}

TEST_CASE("template braid of LLR") {
    const auto tb = template_braid(SymbolWord{"LLR"});
    CHECK(tb.primitive);
    CHECK(tb.braid.strands == 3);
    CHECK(tb.braid.positive());
    CHECK(closure_components(tb.braid) == 1);
    CHECK(alexander_from_braid(tb.braid) == LaurentPolynomial::one());  // unknot
}

TEST_CASE("the shortest trefoil word on the template") {
    const auto tb = template_braid(SymbolWord{"LLRLR"});
    CHECK(closure_components(tb.braid) == 1);
    CHECK(alexander_from_braid(tb.braid) == LaurentPolynomial(-1, {1, -1, 1}));
    const auto inv = lorenz_invariants(SymbolWord{"LLRLR"});
    CHECK(inv.genus == 1);
    CHECK(inv.trip == 2);
}

TEST_CASE("all primitive words up to length 8 give positive permutation braids") {
    int checked = 0;
    for (int len = 1; len <= 8; ++len) {
        for (int mask = 0; mask < (1 << len); ++mask) {
            SymbolWord w;
            for (int k = 0; k < len; ++k) w.symbols += (mask >> k) & 1 ? 'R' : 'L';
            if (!w.primitive()) continue;
            if (w.canonical().symbols != w.symbols) continue;  // one per rotation class
            ++checked;
            const auto tb = template_braid(w);
            CHECK(tb.primitive);
            CHECK(tb.braid.positive());

            // permutation braid: each strand pair crosses at most once
            std::vector<int> pos(static_cast<std::size_t>(tb.braid.strands));
            for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = static_cast<int>(i);
            std::set<std::pair<int, int>> crossed;
            bool repeat = false;
            for (const auto& l : tb.braid.letters) {
                const int a = pos[static_cast<std::size_t>(l.index - 1)];
                const int b = pos[static_cast<std::size_t>(l.index)];
                if (!crossed.insert({std::min(a, b), std::max(a, b)}).second) repeat = true;
                std::swap(pos[static_cast<std::size_t>(l.index - 1)],
                          pos[static_cast<std::size_t>(l.index)]);
            }
            CHECK_FALSE(repeat);

            // words touching both lobes close to a single component
            if (w.symbols.find('L') != std::string::npos &&
                w.symbols.find('R') != std::string::npos)
                CHECK(closure_components(tb.braid) == 1);

            // template symmetry: mirrored words share all invariants
            const auto inv = lorenz_invariants(w);
            const auto minv = lorenz_invariants(w.mirrored());
            CHECK(inv.e == minv.e);
            CHECK(inv.n == minv.n);
            CHECK(inv.beta == minv.beta);
            CHECK(inv.components == minv.components);
        }
    }
    CHECK(checked == 71);
}

TEST_CASE("non-primitive words are flagged and close to links") {
    const auto tb = template_braid(SymbolWord{"LRLR"});
    CHECK_FALSE(tb.primitive);
    CHECK(tb.multiplicity == 2);
    CHECK(closure_components(tb.braid) == 2);
}

TEST_CASE("lorenz invariants") {
    const auto inv = lorenz_invariants(SymbolWord{"LR"});
    CHECK(inv.e == 1);
    CHECK(inv.n == 2);
    CHECK(inv.beta == -1);
    CHECK(inv.genus == 0);
    CHECK(inv.trip == 1);
    CHECK(inv.positive_braid);
}
