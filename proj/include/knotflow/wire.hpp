#pragma once

// JSON wire formats: braid words as {"n": strands, "w": [signed indices]},
// Laurent polynomials as {"lowest", "coeffs"}, 2x2 matrices with a ring tag,
// framed links as labels plus a row-major symmetric matrix, and cable
// descriptors as [p, q] stage lists.

#include <string>

#include <json.hpp>

#include "knotflow/braid.hpp"
#include "knotflow/cabling.hpp"
#include "knotflow/kirby.hpp"
#include "knotflow/laurent.hpp"
#include "knotflow/mat2.hpp"

namespace knotflow::wire {

using nlohmann::json;

// ---- braid words: sigma_i -> +i, sigma_i^{-1} -> -i ----

inline json to_json(const BraidWord& b) {
    json w = json::array();
    for (const auto& l : b.letters) w.push_back(static_cast<long long>(l.sign) * l.index);
    return json{{"n", b.strands}, {"w", std::move(w)}};
}

inline BraidWord braid_from_json(const json& j) {
    BraidWord b;
    b.strands = j.at("n").get<int>();
    for (const auto& item : j.at("w")) {
        const long long v = item.get<long long>();
        if (v == 0) throw std::invalid_argument("braid letter 0 is not a generator");
        b.letters.push_back({static_cast<int>(std::llabs(v)), v > 0 ? 1 : -1});
    }
    b.validate();
    return b;
}

// ---- Laurent polynomials ----

inline json to_json(const LaurentPolynomial& p) {
    return json{{"lowest", p.lowest()}, {"coeffs", p.coeffs()}};
}

inline LaurentPolynomial laurent_from_json(const json& j) {
    return LaurentPolynomial(j.at("lowest").get<long long>(),
                             j.at("coeffs").get<std::vector<long long>>());
}

// ---- 2x2 matrices over Z and Z[w] ----

inline json to_json(const MatZ& m) {
    return json{{"ring", "Z"}, {"m", {{m.a, m.b}, {m.c, m.d}}}};
}

inline json to_json(const MatE& m) {
    auto e = [](const Eisenstein& z) { return json::array({z.u, z.v}); };
    return json{{"ring", "Z[w]"}, {"m", {{e(m.a), e(m.b)}, {e(m.c), e(m.d)}}}};
}

inline MatZ matz_from_json(const json& j) {
    if (j.at("ring").get<std::string>() != "Z")
        throw std::invalid_argument("expected an integer-ring matrix");
    const auto& m = j.at("m");
    return {m.at(0).at(0).get<long long>(), m.at(0).at(1).get<long long>(),
            m.at(1).at(0).get<long long>(), m.at(1).at(1).get<long long>()};
}

inline MatE mate_from_json(const json& j) {
    if (j.at("ring").get<std::string>() != "Z[w]")
        throw std::invalid_argument("expected an Eisenstein-ring matrix");
    auto e = [](const json& v) -> Eisenstein {
        if (v.is_array()) return {v.at(0).get<long long>(), v.at(1).get<long long>()};
        return {v.get<long long>(), 0};
    };
    const auto& m = j.at("m");
    return {e(m.at(0).at(0)), e(m.at(0).at(1)), e(m.at(1).at(0)), e(m.at(1).at(1))};
}

// ---- framed links ----

inline json to_json(const FramedLink& link) {
    return json{{"labels", link.labels}, {"matrix", link.matrix}};
}

inline FramedLink framed_link_from_json(const json& j) {
    FramedLink link;
    link.labels = j.at("labels").get<std::vector<std::string>>();
    link.matrix = j.at("matrix").get<std::vector<std::vector<long long>>>();
    link.validate();
    return link;
}

// ---- cable descriptors ----

inline json to_json(const CableDescriptor& d) {
    json stages = json::array();
    for (const auto& s : d.stages) stages.push_back({s.p, s.q});
    return json{{"stages", std::move(stages)}, {"orientation", d.orientation}};
}

inline CableDescriptor descriptor_from_json(const json& j) {
    CableDescriptor d;
    if (j.is_array()) {  // bare stage list
        for (const auto& s : j) d.stages.push_back({s.at(0).get<long long>(), s.at(1).get<long long>()});
        return d;
    }
    for (const auto& s : j.at("stages"))
        d.stages.push_back({s.at(0).get<long long>(), s.at(1).get<long long>()});
    if (j.contains("orientation")) d.orientation = j.at("orientation").get<int>();
    return d;
}

}  // namespace knotflow::wire
