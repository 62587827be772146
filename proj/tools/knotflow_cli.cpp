// Command-line front end: deterministic JSON in, JSON (or plot-ready text)
// out. Exit codes: 0 success, 1 domain error from a module, 2 usage error.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotflow/braid.hpp"
#include "knotflow/cabling.hpp"
#include "knotflow/exterior3.hpp"
#include "knotflow/kirby.hpp"
#include "knotflow/knotalg.hpp"
#include "knotflow/lorenz.hpp"
#include "knotflow/s3flow.hpp"
#include "knotflow/version.hpp"
#include "knotflow/wire.hpp"

using nlohmann::json;
using namespace knotflow;

namespace {

struct Output {
    std::string path;    // empty = stdout
    std::string format = "json";
};

void emit(const Output& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out.path);
        if (!f) throw std::runtime_error("cannot open output file: " + out.path);
        f << text << "\n";
    }
}

json envelope(const std::string& command, json inputs, json result,
              json tolerances = json::object()) {
    json doc;
    doc["version"] = version_string;
    doc["command"] = command;
    doc["inputs_echo"] = std::move(inputs);
    doc["result"] = std::move(result);
    if (!tolerances.empty()) doc["tolerances"] = std::move(tolerances);
    return doc;
}

std::vector<double> parse_csv_doubles(const std::string& s, std::size_t expect) {
    std::vector<double> vals;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    if (vals.size() != expect)
        throw CLI::ValidationError("expected " + std::to_string(expect) +
                                   " comma-separated numbers, got '" + s + "'");
    return vals;
}

json invariants_json(const TransverseInvariants& inv) {
    return {{"e", inv.e},
            {"n", inv.n},
            {"beta", inv.beta},
            {"writhe", inv.writhe},
            {"components", inv.components}};
}

std::string trajectory_text(const TrajectoryS3& traj, long long stride) {
    std::string out = "# t x1 y1 x2 y2 h F\n";
    char line[256];
    for (std::size_t k = 0; k < traj.points.size();
         k += static_cast<std::size_t>(stride)) {
        const auto& p = traj.points[k];
        std::snprintf(line, sizeof line, "%.17g %.17g %.17g %.17g %.17g %.17g %.17g\n",
                      traj.times[k], p.x1, p.y1, p.x2, p.y2, traj.energy[k], traj.bott[k]);
        out += line;
    }
    return out;
}

json trajectory_json(const TrajectoryS3& traj, long long stride) {
    json samples = json::array();
    for (std::size_t k = 0; k < traj.points.size();
         k += static_cast<std::size_t>(stride)) {
        const auto& p = traj.points[k];
        samples.push_back({traj.times[k], p.x1, p.y1, p.x2, p.y2, traj.energy[k],
                           traj.bott[k]});
    }
    return {{"columns", {"t", "x1", "y1", "x2", "y2", "h", "F"}},
            {"samples", std::move(samples)}};
}

json lorenz_text_free_json(const LorenzTrajectory& traj, long long stride) {
    json samples = json::array();
    for (std::size_t k = 0; k < traj.states.size();
         k += static_cast<std::size_t>(stride)) {
        const auto& s = traj.states[k];
        samples.push_back({traj.time_at(k), s[0], s[1], s[2]});
    }
    return {{"columns", {"t", "x", "y", "z"}}, {"samples", std::move(samples)}};
}

json group_preset_report(const std::string& preset) {
    json result;
    if (preset == "trefoil-quotient") {
        const MatZ ihat = twist_matrix(TwistLetter::I);
        const MatZ a = ihat * twist_matrix(TwistLetter::R);
        Presentation pres;
        pres.generators = {"a", "b"};
        pres.relators = {{{0, 3}}, {{1, 2}}};
        const auto reports = presentation_check(pres, std::vector<MatZ>{a, ihat}, true);
        result["projective"] = true;
        result["assignment"] = {{"a", wire::to_json(a)}, {"b", wire::to_json(ihat)}};
        json rel = json::array();
        for (const auto& r : reports) rel.push_back({{"relator", r.relator}, {"passes", r.passes}});
        result["relators"] = std::move(rel);
        return result;
    }
    const Eisenstein w{0, 1};
    const MatE a{{1, 0}, {1, 0}, {0, 0}, {1, 0}};
    const MatE b{{1, 0}, {0, 0}, -w, {1, 0}};
    if (preset == "figure8") {
        const MatE wm = a.inverse() * b * a * b.inverse();
        Presentation pres;
        pres.generators = {"a", "b", "w"};
        pres.relators = {{{2, 1}, {0, 1}, {2, -1}, {1, -1}},
                         {{2, 1}, {1, 1}, {0, -1}, {1, -1}, {0, 1}}};
        const auto reports = presentation_check(pres, std::vector<MatE>{a, b, wm}, false);
        result["projective"] = false;
        result["assignment"] = {{"a", wire::to_json(a)},
                                {"b", wire::to_json(b)},
                                {"w", wire::to_json(wm)}};
        json rel = json::array();
        for (const auto& r : reports) rel.push_back({{"relator", r.relator}, {"passes", r.passes}});
        result["relators"] = std::move(rel);
        return result;
    }
    if (preset == "figure8-xyz") {
        // corrected vs misprinted first relator of the three-generator form
        const MatE c = b.inverse() * a * b;
        const MatE d = a.inverse() * b * a;
        const MatE x = c.inverse(), y = d, z = b.inverse();
        Presentation pres;
        pres.generators = {"x", "y", "z"};
        pres.relators = {{{2, 1}, {0, -1}, {1, 1}, {0, 1}, {2, -1}, {0, 1}},
                         {{2, 1}, {0, -1}, {1, 1}, {2, -1}, {0, 1}},
                         {{0, 1}, {1, -1}, {2, -1}, {1, 1}}};
        const auto reports = presentation_check(pres, std::vector<MatE>{x, y, z}, false);
        result["projective"] = false;
        json rel = json::array();
        const char* names[] = {"corrected first relator", "misprinted first relator",
                               "second relator"};
        for (std::size_t k = 0; k < reports.size(); ++k)
            rel.push_back({{"relator", reports[k].relator},
                           {"name", names[k]},
                           {"passes", reports[k].passes}});
        result["relators"] = std::move(rel);
        return result;
    }
    if (preset == "dihedral-d2") {
        const MatZ t{-1, 0, 0, 1};
        const MatZ s{1, 0, 0, -1};
        Presentation pres;
        pres.generators = {"t", "s"};
        pres.relators = {{{0, 2}}, {{1, 2}}, {{0, 1}, {1, 1}, {0, 1}, {1, 1}}};
        const auto reports = presentation_check(pres, std::vector<MatZ>{t, s}, false);
        result["projective"] = false;
        json rel = json::array();
        for (const auto& r : reports) rel.push_back({{"relator", r.relator}, {"passes", r.passes}});
        result["relators"] = std::move(rel);
        return result;
    }
    throw std::invalid_argument("unknown preset: " + preset);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knotflow: knots and links from flows on the 3-sphere"};
    app.fallthrough();  // global flags may appear after the subcommand
    app.require_subcommand(1);

    Output out;
    long long seed = 0;
    app.add_option("--out", out.path, "write the result to a file instead of stdout");
    app.add_option("--format", out.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", seed, "seed for randomized scans (echoed for determinism)");

    // ---- flow ----
    auto* flow = app.add_subcommand("flow", "flows on the unit 3-sphere");
    flow->require_subcommand(1);

    std::string point_csv = "1,0,0,0";
    std::string field_name = "standard";
    double r1 = 1.0, r2 = 1.0, dt = 1e-3;
    long long steps = 1000, stride = 1, sweep = 0, max_den = 100;
    double eps = 1e-3, omega1 = 1.0, omega2 = 1.0;

    auto* flow_trace = flow->add_subcommand("trace", "integrate and export a trajectory");
    flow_trace->add_option("--point", point_csv, "start point x1,y1,x2,y2");
    flow_trace->add_option("--field", field_name, "standard | weighted")
        ->check(CLI::IsMember({"standard", "weighted"}));
    flow_trace->add_option("--r1", r1, "first weight (weighted field)");
    flow_trace->add_option("--r2", r2, "second weight (weighted field)");
    flow_trace->add_option("--dt", dt, "integrator step");
    flow_trace->add_option("--steps", steps, "step count");
    flow_trace->add_option("--stride", stride, "sample export stride");
    flow_trace->add_option("--eps", eps, "closed-orbit detection tolerance");

    auto* flow_check = flow->add_subcommand("check", "contact-form conditions at a point");
    flow_check->add_option("--point", point_csv, "point x1,y1,x2,y2");
    flow_check->add_option("--sweep", sweep, "also check this many seeded random unit points");

    auto* flow_knot = flow->add_subcommand("knot-type", "rational frequency classification");
    flow_knot->add_option("--omega1", omega1, "first frequency")->required();
    flow_knot->add_option("--omega2", omega2, "second frequency")->required();
    flow_knot->add_option("--max-den", max_den, "largest denominator tried");

    // ---- braid ----
    auto* braid = app.add_subcommand("braid", "braid word algebra");
    braid->require_subcommand(1);
    std::string word_json;
    long long budget = 20000;
    auto* braid_inv = braid->add_subcommand("invariants", "closure invariants of a word");
    braid_inv->add_option("--word", word_json, "braid word as {\"n\":..,\"w\":[..]}")->required();
    auto* braid_alex = braid->add_subcommand("alexander", "Alexander polynomial of a knot closure");
    braid_alex->add_option("--word", word_json, "braid word JSON")->required();
    auto* braid_reduce = braid->add_subcommand("reduce", "bounded unlink-certification search");
    braid_reduce->add_option("--word", word_json, "braid word JSON")->required();
    braid_reduce->add_option("--budget", budget, "search budget (visited states)");

    // ---- cable ----
    auto* cable = app.add_subcommand("cable", "iterated torus knots");
    cable->require_subcommand(1);
    std::string descriptor_json;
    auto* cable_build = cable->add_subcommand("build", "braid word of an iterated cable");
    cable_build->add_option("--descriptor", descriptor_json, "stages [[p,q],..]")->required();
    auto* cable_validate = cable->add_subcommand("validate", "descriptor diagnostics");
    cable_validate->add_option("--descriptor", descriptor_json, "stages [[p,q],..]")->required();

    // ---- lorenz ----
    auto* lorenz = app.add_subcommand("lorenz", "Lorenz dynamics and template words");
    lorenz->require_subcommand(1);
    std::string x0_csv = "1,1,1";
    std::string lr_word;
    double rayleigh = 24.0;
    std::string params_csv;
    auto* lorenz_sim = lorenz->add_subcommand("simulate", "integrate the Lorenz system");
    lorenz_sim->add_option("--r", rayleigh, "Rayleigh number");
    lorenz_sim->add_option("--params", params_csv, "full coefficient triple sigma,b,r");
    lorenz_sim->add_option("--x0", x0_csv, "start point x,y,z");
    lorenz_sim->add_option("--dt", dt, "integrator step");
    lorenz_sim->add_option("--steps", steps, "step count");
    lorenz_sim->add_option("--stride", stride, "sample export stride");
    auto* lorenz_enc = lorenz->add_subcommand("encode", "symbolic lobe word of a trajectory");
    lorenz_enc->add_option("--r", rayleigh, "Rayleigh number");
    lorenz_enc->add_option("--params", params_csv, "full coefficient triple sigma,b,r");
    lorenz_enc->add_option("--x0", x0_csv, "start point x,y,z");
    lorenz_enc->add_option("--dt", dt, "integrator step");
    lorenz_enc->add_option("--steps", steps, "step count");
    lorenz_enc->add_option("--eps", eps, "close-return tolerance (0 disables the scan)");
    auto* lorenz_tpl = lorenz->add_subcommand("template", "braid of a periodic LR-word");
    lorenz_tpl->add_option("--word", lr_word, "cyclic word over {L,R}")->required();

    // ---- markov ----
    auto* markov = app.add_subcommand("markov", "Markov triples and trace geometry");
    markov->require_subcommand(1);
    int depth = 3;
    std::string traces_csv = "3,3,3";
    double trace_value = 3.0;
    auto* markov_tree_cmd = markov->add_subcommand("tree", "orbit of (1,1,1) under the involutions");
    markov_tree_cmd->add_option("--depth", depth, "breadth-first depth");
    auto* markov_mat = markov->add_subcommand("matrices", "matrices from a trace triple");
    markov_mat->add_option("--traces", traces_csv, "x,y,z with x^2+y^2+z^2 = xyz");
    auto* markov_geo = markov->add_subcommand("geodesic", "geodesic length of a trace");
    markov_geo->add_option("--trace", trace_value, "trace value, |tr| > 2")->required();

    // ---- group ----
    auto* group = app.add_subcommand("group", "presentation checks");
    group->require_subcommand(1);
    std::string preset = "trefoil-quotient";
    auto* group_check = group->add_subcommand("check", "verify a named presentation");
    group_check->add_option("--preset", preset,
                            "trefoil-quotient | figure8 | figure8-xyz | dihedral-d2")
        ->check(CLI::IsMember({"trefoil-quotient", "figure8", "figure8-xyz", "dihedral-d2"}));

    // ---- kirby ----
    auto* kirby = app.add_subcommand("kirby", "framed-link moves on linking matrices");
    kirby->require_subcommand(1);
    std::string link_json, moves_json;
    auto* kirby_apply = kirby->add_subcommand("apply", "apply a sequence of moves");
    kirby_apply->add_option("--link", link_json, "framed link {labels, matrix}")->required();
    kirby_apply->add_option("--moves", moves_json,
                            "move list [{\"op\":\"blow_up\",\"sign\":1}, ...]")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err{{"error", {{"type", "usage"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    }

    try {
        json doc;

        auto lorenz_params = [&]() {
            LorenzParams lp{10.0, 8.0 / 3.0, rayleigh};
            if (!params_csv.empty()) {
                const auto v = parse_csv_doubles(params_csv, 3);
                lp = {v[0], v[1], v[2]};
            }
            return lp;
        };

        if (flow_trace->parsed()) {
            const auto v = parse_csv_doubles(point_csv, 4);
            const PointR4 x0{v[0], v[1], v[2], v[3]};
            const auto field = field_name == "standard" ? FlowField::standard()
                                                        : FlowField::weighted(r1, r2);
            const auto traj = integrate_flow(x0, field, dt, steps);
            if (out.format == "text") {
                emit(out, trajectory_text(traj, stride));
                return 0;
            }
            json result = trajectory_json(traj, stride);
            const auto period = detect_closed_orbit(traj, eps);
            result["closed_orbit_period"] = period ? json(*period) : json(nullptr);
            const auto freq = field.frequencies();
            const auto type = field.kind == FlowField::Kind::weighted
                                  ? torus_knot_type(freq[0], freq[1], max_den)
                                  : torus_knot_type(1.0, 1.0, max_den);
            if (type) result["torus_knot_type"] = {{"p", type->p}, {"q", type->q}};
            doc = envelope("flow trace",
                           {{"point", v}, {"field", field_name}, {"r1", r1}, {"r2", r2},
                            {"dt", dt}, {"steps", steps}, {"stride", stride}, {"seed", seed}},
                           std::move(result), {{"closed_orbit_eps", eps}});
        } else if (flow_check->parsed()) {
            const auto v = parse_csv_doubles(point_csv, 4);
            const auto c = check_reeb_conditions({v[0], v[1], v[2], v[3]});
            json result{{"alpha", c.alpha_value},
                        {"defect", c.d_alpha_defect},
                        {"omega_pairing", omega_pairing({v[0], v[1], v[2], v[3]})}};
            if (sweep > 0) {
                std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
                std::normal_distribution<double> g(0.0, 1.0);
                double worst_alpha = 0, worst_defect = 0, worst_pairing = 0;
                for (long long k = 0; k < sweep; ++k) {
                    PointR4 p{g(rng), g(rng), g(rng), g(rng)};
                    p = p.scaled(1.0 / p.norm());
                    const auto ck = check_reeb_conditions(p);
                    worst_alpha = std::max(worst_alpha, std::fabs(ck.alpha_value - 1.0));
                    worst_defect = std::max(worst_defect, ck.d_alpha_defect);
                    worst_pairing = std::max(worst_pairing, std::fabs(omega_pairing(p) - 1.0));
                }
                result["sweep"] = {{"points", sweep},
                                   {"max_alpha_error", worst_alpha},
                                   {"max_defect", worst_defect},
                                   {"max_pairing_error", worst_pairing}};
            }
            doc = envelope("flow check", {{"point", v}, {"sweep", sweep}, {"seed", seed}},
                           std::move(result), {{"on_sphere", 1e-9}, {"contract", 1e-12}});
        } else if (flow_knot->parsed()) {
            const auto type = torus_knot_type(omega1, omega2, max_den);
            json result;
            if (type) {
                result["type"] = {{"p", type->p}, {"q", type->q}};
                const auto b = torus_braid(type->p, type->q);
                result["braid"] = wire::to_json(b);
                if (closure_components(b) == 1)
                    result["alexander"] = wire::to_json(alexander_from_braid(b));
            } else {
                result["type"] = nullptr;
            }
            doc = envelope("flow knot-type",
                           {{"omega1", omega1}, {"omega2", omega2}, {"max_den", max_den},
                            {"seed", seed}},
                           std::move(result), {{"rational_match", 1e-9}});
        } else if (braid_inv->parsed()) {
            const auto b = wire::braid_from_json(json::parse(word_json));
            doc = envelope("braid invariants", {{"word", json::parse(word_json)}, {"seed", seed}},
                           invariants_json(transverse_invariants(b)));
        } else if (braid_alex->parsed()) {
            const auto b = wire::braid_from_json(json::parse(word_json));
            const auto delta = alexander_from_braid(b);
            json result{{"alexander", wire::to_json(delta)},
                        {"delta_at_1", delta.eval_one()},
                        {"determinant", std::llabs(delta.eval_minus_one())}};
            doc = envelope("braid alexander", {{"word", json::parse(word_json)}, {"seed", seed}},
                           std::move(result));
        } else if (braid_reduce->parsed()) {
            const auto b = wire::braid_from_json(json::parse(word_json));
            const auto r = exchange_reduce(b, budget);
            json result{{"word", wire::to_json(r.word)},
                        {"moves", r.moves},
                        {"budget_exhausted", r.budget_exhausted},
                        {"unlink_certified",
                         r.word.letters.empty()
                             ? json(static_cast<long long>(r.word.strands))
                             : json(nullptr)}};
            doc = envelope("braid reduce",
                           {{"word", json::parse(word_json)}, {"budget", budget}, {"seed", seed}},
                           std::move(result));
        } else if (cable_build->parsed()) {
            const auto d = wire::descriptor_from_json(json::parse(descriptor_json));
            const auto k = iterated_cable(d);
            json result{{"braid", wire::to_json(k)},
                        {"invariants", invariants_json(transverse_invariants(k))}};
            if (closure_components(k) == 1)
                result["alexander"] = wire::to_json(alexander_from_braid(k));
            doc = envelope("cable build",
                           {{"descriptor", json::parse(descriptor_json)}, {"seed", seed}},
                           std::move(result));
        } else if (cable_validate->parsed()) {
            const auto d = wire::descriptor_from_json(json::parse(descriptor_json));
            const auto violations = validate_descriptor(d);
            doc = envelope("cable validate",
                           {{"descriptor", json::parse(descriptor_json)}, {"seed", seed}},
                           {{"ok", violations.empty()}, {"violations", violations}});
        } else if (lorenz_sim->parsed()) {
            const auto v = parse_csv_doubles(x0_csv, 3);
            const auto traj = integrate_lorenz(lorenz_params(),
                                               {v[0], v[1], v[2]}, dt, steps);
            if (out.format == "text") {
                std::string text = "# t x y z\n";
                char line[160];
                for (std::size_t k = 0; k < traj.states.size();
                     k += static_cast<std::size_t>(stride)) {
                    std::snprintf(line, sizeof line, "%.17g %.17g %.17g %.17g\n",
                                  traj.time_at(k), traj.states[k][0], traj.states[k][1],
                                  traj.states[k][2]);
                    text += line;
                }
                emit(out, text);
                return 0;
            }
            const auto lp = lorenz_params();
            doc = envelope("lorenz simulate",
                           {{"params", {lp.sigma, lp.b, lp.r}}, {"x0", v}, {"dt", dt},
                            {"steps", steps}, {"stride", stride}, {"seed", seed}},
                           lorenz_text_free_json(traj, stride));
        } else if (lorenz_enc->parsed()) {
            const auto v = parse_csv_doubles(x0_csv, 3);
            const auto traj = integrate_lorenz(lorenz_params(),
                                               {v[0], v[1], v[2]}, dt, steps);
            const auto word = lobe_encoding(traj);
            json result{{"word", word.symbols},
                        {"canonical", word.canonical().symbols},
                        {"length", word.symbols.size()}};
            if (eps > 0) {
                const auto cands = close_return_candidates(traj, eps);
                json arr = json::array();
                for (std::size_t k = 0; k < std::min<std::size_t>(cands.size(), 32); ++k)
                    arr.push_back({{"start_time", cands[k].start_time},
                                   {"period", cands[k].period},
                                   {"word", cands[k].word.symbols}});
                result["close_returns"] = std::move(arr);
            }
            const auto lp = lorenz_params();
            doc = envelope("lorenz encode",
                           {{"params", {lp.sigma, lp.b, lp.r}}, {"x0", v}, {"dt", dt},
                            {"steps", steps}, {"eps", eps}, {"seed", seed}},
                           std::move(result), {{"close_return_eps", eps}});
        } else if (lorenz_tpl->parsed()) {
            const SymbolWord w{lr_word};
            const auto tb = template_braid(w);
            const auto inv = lorenz_invariants(w);
            json result{{"braid", wire::to_json(tb.braid)},
                        {"primitive", tb.primitive},
                        {"multiplicity", tb.multiplicity},
                        {"positive", inv.positive_braid},
                        {"invariants", {{"e", inv.e},
                                        {"n", inv.n},
                                        {"beta", inv.beta},
                                        {"components", inv.components},
                                        {"genus", inv.genus},
                                        {"trip", inv.trip}}}};
            if (inv.components == 1)
                result["alexander"] = wire::to_json(alexander_from_braid(tb.braid));
            doc = envelope("lorenz template", {{"word", lr_word}, {"seed", seed}},
                           std::move(result));
        } else if (markov_tree_cmd->parsed()) {
            const auto tree = markov_tree(depth);
            json triples = json::array();
            for (const auto& t : tree) triples.push_back(t);
            const auto nums = markov_numbers(tree);
            doc = envelope("markov tree", {{"depth", depth}, {"seed", seed}},
                           {{"triples", std::move(triples)},
                            {"markov_numbers", std::vector<long long>(nums.begin(), nums.end())}});
        } else if (markov_mat->parsed()) {
            const auto v = parse_csv_doubles(traces_csv, 3);
            const long long x = static_cast<long long>(v[0]);
            const long long y = static_cast<long long>(v[1]);
            const long long z = static_cast<long long>(v[2]);
            const auto pair = traces_to_matrices(x, y, z);
            auto q = [](const Rational& r) {
                return r.is_integer() ? json(r.num) : json(r.str());
            };
            auto matj = [&](const MatQ& m) {
                return json{{q(m.a), q(m.b)}, {q(m.c), q(m.d)}};
            };
            const auto comm = pair.a.commutator_with(pair.b);
            doc = envelope("markov matrices",
                           {{"traces", {x, y, z}}, {"seed", seed}},
                           {{"a", matj(pair.a)},
                            {"b", matj(pair.b)},
                            {"integral", pair.integral},
                            {"trace_a", q(pair.a.trace())},
                            {"trace_b", q(pair.b.trace())},
                            {"trace_ab", q((pair.a * pair.b).trace())},
                            {"trace_commutator", q(comm.trace())}});
        } else if (markov_geo->parsed()) {
            const double l = geodesic_length(trace_value);
            doc = envelope("markov geodesic", {{"trace", trace_value}, {"seed", seed}},
                           {{"length", l}}, {{"value", 1e-10}});
        } else if (group_check->parsed()) {
            doc = envelope("group check", {{"preset", preset}, {"seed", seed}},
                           group_preset_report(preset));
        } else if (kirby_apply->parsed()) {
            auto link = wire::framed_link_from_json(json::parse(link_json));
            const json moves = json::parse(moves_json);
            json log = json::array();
            for (const auto& mv : moves) {
                const std::string op = mv.at("op").get<std::string>();
                if (op == "blow_up") {
                    link = blow_up(link, mv.at("sign").get<int>());
                } else if (op == "blow_down") {
                    link = blow_down(link, mv.at("i").get<std::size_t>());
                } else if (op == "slide") {
                    link = handle_slide(link, mv.at("i").get<std::size_t>(),
                                        mv.at("j").get<std::size_t>(),
                                        mv.value("orientation", 1));
                } else {
                    throw std::invalid_argument("unknown kirby move: " + op);
                }
                log.push_back({{"op", op},
                               {"det", linking_matrix_det(link.matrix)},
                               {"signature", signature(link.matrix)}});
            }
            doc = envelope("kirby apply",
                           {{"link", json::parse(link_json)},
                            {"moves", json::parse(moves_json)}, {"seed", seed}},
                           {{"link", wire::to_json(link)},
                            {"det", linking_matrix_det(link.matrix)},
                            {"signature", signature(link.matrix)},
                            {"log", std::move(log)}});
        } else {
            std::cerr << app.help() << "\n";
            return 2;
        }

        emit(out, doc.dump(2));
        return 0;
    } catch (const json::exception& e) {
        json err{{"error", {{"type", "parse"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        json err{{"error", {{"type", "usage"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        json err{{"error", {{"type", "parameter"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        json err{{"error", {{"type", "domain"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", {{"type", "internal"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
}
