#ifndef ZONECX_REPORT_JSON_HPP
#define ZONECX_REPORT_JSON_HPP

#include <json.hpp>

#include "zonecx/analysis.hpp"
#include "zonecx/discharging.hpp"
#include "zonecx/generators.hpp"
#include "zonecx/search.hpp"
#include "zonecx/zones.hpp"

namespace zonecx {

using Json = nlohmann::ordered_json;

inline Json histogram_json(const FaceSizeHistogram& h) {
    Json j = Json::object();
    for (auto [k, c] : h) j[std::to_string(k)] = c;
    return j;
}

inline Json multiset_json(const ZoneMultiset& k) { return Json::array({k[0], k[1], k[2], k[3]}); }

inline Json rational_json(const Rational& q) { return format_rational(q); }

inline Json counts_json(const Analysis& a) {
    Json j;
    j["n"] = a.n;
    j["sphere"] = {{"V", a.sphere_vertices}, {"E", a.sphere_edges}, {"F", a.sphere_faces},
                   {"face_sizes", histogram_json(a.sphere_histogram)}};
    j["projective"] = {{"V", a.projective_vertices}, {"E", a.projective_edges}, {"F", a.projective_faces},
                       {"face_sizes", histogram_json(a.projective_histogram)}};
    j["adjacent_triangles"] = a.adjacent_triangles;
    return j;
}

inline Json identities_json(const std::vector<IdentityResult>& ids) {
    Json arr = Json::array();
    for (const auto& r : ids)
        arr.push_back({{"name", r.name}, {"formula", r.formula}, {"ok", r.ok}, {"failures", r.failures}});
    return arr;
}

inline Json line_zones_json(const ZoneReport& rep) {
    Json arr = Json::array();
    for (const auto& l : rep.lines)
        arr.push_back({{"line", l.line},
                       {"C", l.zone.complexity},
                       {"ratio", rational_json(ratio(l.zone.complexity, rep.n - 1))},
                       {"r", l.min_vertex_complexity},
                       {"zone_faces", l.zone.distinct_faces},
                       {"supported_face_sum", l.supported_face_sum}});
    return arr;
}

inline Json vertex_zones_json(const ZoneReport& rep) {
    Json arr = Json::array();
    for (const auto& v : rep.vertices)
        arr.push_back({{"vertex", v.vertex},
                       {"lines", {v.lines[0], v.lines[1]}},
                       {"K", multiset_json(v.sizes)},
                       {"C", v.complexity}});
    return arr;
}

inline Json zone_report_json(const ZoneReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["C_L"] = rep.min_vertex_complexity;
    j["lines"] = line_zones_json(rep);
    j["identities"] = identities_json(rep.identities);
    j["zone_theorem_ok"] = rep.zone_theorem_ok;
    j["line_minimum_ok"] = rep.line_minimum_ok;
    j["theorem_ok"] = rep.theorem_ok;
    j["max_segments_per_face"] = rep.max_segments_per_face;
    return j;
}

inline Json discharge_json(const DischargeReport& d) {
    Json j;
    j["totals"] = {{"w1", rational_json(d.total_w1)},
                   {"w2", rational_json(d.total_w2)},
                   {"w3", rational_json(d.total_w3)},
                   {"euler", rational_json(d.euler_total)}};
    j["conserved"] = d.conserved();
    j["faces_emptied"] = d.faces_emptied;
    int negative = 0;
    for (const auto& c : d.classes.vertices) negative += c.negative;
    j["negative_w2_vertices"] = negative;
    j["equivalence_checked"] = d.classes.equivalence_checked;
    j["equivalence_violations"] = d.classes.equivalence_violations;
    j["witnesses"] = d.classes.witnesses;
    j["negative_outside_hypothesis"] = d.classes.negative_outside_hypothesis;
    j["donors"] = d.donors;
    j["min_w2"] = rational_json(d.w2.min_vertex_charge());
    j["min_w3"] = rational_json(d.min_w3);
    return j;
}

inline Json lemma_json(const std::vector<MultisetClass>& list, int cap) {
    Json j;
    j["cap"] = cap;
    Json arr = Json::array();
    for (const auto& m : list) arr.push_back({{"K", multiset_json(m.sizes)}, {"deficiency", rational_json(m.deficiency)}});
    j["multisets"] = arr;
    return j;
}

inline Json search_record_json(const SearchRecord& r) {
    Json j;
    j["label"] = r.label;
    if (r.seed) j["seed"] = *r.seed;
    j["n"] = r.n;
    j["C_L"] = r.min_vertex_complexity;
    j["f_vector"] = histogram_json(r.f_vector);
    j["best_known"] = r.best_known;
    Json ratios = Json::array();
    for (const auto& q : r.line_ratios()) ratios.push_back(rational_json(q));
    j["line_ratios"] = ratios;
    if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
    return j;
}

inline Json question1_json(const Question1Stats& s) {
    Json j;
    j["n"] = s.n;
    j["trials"] = s.trials;
    j["mean"] = rational_json(s.mean);
    j["mean_approx"] = s.mean.get_d();
    j["max"] = rational_json(s.max);
    j["max_line_ratio"] = rational_json(s.max_line_ratio);
    j["zone_bound_violations"] = s.zone_bound_violations;
    Json h = Json::array();
    for (const auto& [q, c] : s.histogram) h.push_back({{"ratio", rational_json(q)}, {"count", c}});
    j["histogram"] = h;
    return j;
}

}  // namespace zonecx

#endif  // ZONECX_REPORT_JSON_HPP
