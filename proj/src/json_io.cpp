#include "polydyn/json_io.hpp"

namespace polydyn {

using nlohmann::json;

json to_json(cplx z) { return json::array({std::real(z), std::imag(z)}); }

cplx cplx_from_json(const json& j) {
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2)
        return {j[0].get<double>(), j[1].get<double>()};
    throw Error("cplx_from_json: expected number or [re, im]");
}

json to_json(const ProjPoint& p) {
    if (p.is_infinite())
        return "inf";
    return to_json(p.affine());
}

ProjPoint projpoint_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf")
            return ProjPoint::infinity();
        throw Error("projpoint_from_json: unknown keyword '" + j.get<std::string>() + "'");
    }
    return {cplx_from_json(j)};
}

json to_json(const Mobius& m) {
    return json::array({json::array({to_json(m.a), to_json(m.b)}),
                        json::array({to_json(m.c), to_json(m.d)})});
}

Mobius mobius_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
        throw Error("mobius_from_json: expected a 2x2 matrix");
    return {cplx_from_json(j[0][0]), cplx_from_json(j[0][1]), cplx_from_json(j[1][0]),
            cplx_from_json(j[1][1])};
}

json to_json(const TwistedPolygon& P) {
    json verts = json::array();
    for (const auto& p : P.window())
        verts.push_back(to_json(p));
    return {{"n", P.n()}, {"vertices", verts}, {"monodromy", to_json(P.monodromy())}};
}

TwistedPolygon polygon_from_json(const json& j) {
    std::vector<ProjPoint> verts;
    for (const auto& v : j.at("vertices"))
        verts.push_back(projpoint_from_json(v));
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(verts.size()))
        throw Error("polygon_from_json: n does not match the vertex count");
    Mobius m = j.contains("monodromy") ? mobius_from_json(j.at("monodromy")) : Mobius::identity();
    return {std::move(verts), m};
}

namespace {

const char* kind_name(MobiusKind k) {
    switch (k) {
    case MobiusKind::Identity:
        return "identity";
    case MobiusKind::Parabolic:
        return "parabolic";
    case MobiusKind::Elliptic:
        return "elliptic";
    case MobiusKind::Loxodromic:
        return "loxodromic";
    }
    return "?";
}

} // namespace

json to_json(const MobiusClass& c) {
    json fixed = json::array();
    for (const auto& p : c.fixed_points)
        fixed.push_back(to_json(p));
    json out = {{"kind", kind_name(c.kind)}, {"fixed_points", fixed}, {"multiplier", to_json(c.multiplier)}};
    if (c.attracting)
        out["attracting"] = to_json(*c.attracting);
    if (c.repelling)
        out["repelling"] = to_json(*c.repelling);
    return out;
}

json to_json(const CollapsePrediction& p) {
    json roots = json::array();
    for (const auto& r : p.candidates.roots)
        roots.push_back(to_json(r));
    json out = {{"candidates", roots},
                {"double_root", p.candidates.double_root},
                {"I", to_json(p.im.I)},
                {"J", to_json(p.im.J)},
                {"K", to_json(p.im.K)},
                {"Delta", to_json(p.im.Delta)},
                {"classification", to_json(p.mobius_class)}};
    if (p.attracting_index >= 0)
        out["attracting_index"] = p.attracting_index;
    if (p.repelling_index >= 0)
        out["repelling_index"] = p.repelling_index;
    return out;
}

json to_json(const CollapseReport& r) {
    json out = {{"system", r.system.name()},
                {"prediction", to_json(r.prediction)},
                {"verdict", verdict_name(r.verdict)},
                {"iterations", r.trace.empty() ? 0 : r.trace.back().iteration},
                {"final_distance", r.final_distance},
                {"max_invariant_drift", r.max_invariant_drift},
                {"invalid", r.invalid}};
    if (r.collapsed_candidate >= 0)
        out["collapsed_candidate"] = r.collapsed_candidate;
    if (!r.note.empty())
        out["note"] = r.note;
    return out;
}

json to_json(const ScanSummary& s) {
    return {{"trials", s.trials},
            {"degenerate", s.degenerate},
            {"invalid", s.invalid},
            {"collapsed", s.collapsed},
            {"candidate_counts", s.candidate_counts},
            {"fraction_collapsed", s.fraction_collapsed},
            {"max_invariant_drift", s.max_invariant_drift},
            {"worst_final_distance", s.worst_final_distance},
            {"warning", s.warning}};
}

json to_json(const SpecialReport& s) {
    json out = {{"n", s.n},
                {"q", to_json(s.q)},
                {"lambda", to_json(s.lambda)},
                {"placement", s.placement},
                {"worst_error", s.worst_error},
                {"orbit_type", s.orbit_type},
                {"realized", to_json(s.realized)},
                {"realized_class", to_json(s.realized_class)},
                {"expected_class", to_json(s.expected_class)},
                {"qn_residual", s.qn_residual}};
    if (!s.qn_roots.empty()) {
        json roots = json::array();
        for (cplx r : s.qn_roots)
            roots.push_back(to_json(r));
        out["qn_roots"] = roots;
        out["palindrome_error"] = s.palindrome_error;
    }
    return out;
}

json to_json(const RelationsReport& r) {
    return {{"n", r.n},
            {"trials", r.trials},
            {"worst_involution", r.worst_involution},
            {"worst_commutation", r.worst_commutation},
            {"worst_braid", r.worst_braid},
            {"pass", r.pass}};
}

} // namespace polydyn
