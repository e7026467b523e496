#ifndef ZONECX_ZONES_HPP
#define ZONECX_ZONES_HPP

#include <algorithm>
#include <array>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "zonecx/arrangement.hpp"
#include "zonecx/errors.hpp"

namespace zonecx {

/// Sorted sizes of the four faces around a vertex.
using ZoneMultiset = std::array<int, 4>;

inline int multiset_sum(const ZoneMultiset& k) { return k[0] + k[1] + k[2] + k[3]; }

inline std::string to_string(const ZoneMultiset& k) {
    return "{" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + "," +
           std::to_string(k[3]) + "}";
}

template <ExactRing S>
LineSet<S> without_lines(const LineSet<S>& lines, std::initializer_list<int> removed) {
    LineSet<S> out;
    out.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (std::find(removed.begin(), removed.end(), static_cast<int>(i)) == removed.end()) out.push_back(lines[i]);
    return out;
}

/// K_v for a sphere vertex.
template <ExactRing S>
ZoneMultiset vertex_zone(const SphereArrangement<S>& A, Id v) {
    ZoneMultiset k{};
    auto fs = A.faces_around(v);
    for (std::size_t i = 0; i < 4; ++i) k[i] = A.faces()[static_cast<std::size_t>(fs[i])].size;
    std::sort(k.begin(), k.end());
    return k;
}

/// K_v for a projective vertex.
template <ExactRing S>
ZoneMultiset vertex_zone(const ProjectiveArrangement<S>& A, Id v) {
    return vertex_zone(A.sphere(), A.vertex_preimages(v)[0]);
}

/// C(v) for a sphere vertex: size of the face of the arrangement without the
/// two lines through v that contains v's position.
template <ExactRing S>
int vertex_zone_complexity(const SphereArrangement<S>& A, Id v) {
    if (A.line_count() < 4) throw std::invalid_argument("vertex zone complexity needs n >= 4");
    const auto& vr = A.vertices()[static_cast<std::size_t>(v)];
    auto reduced = build_sphere(without_lines(A.lines(), {vr.lines[0], vr.lines[1]}));
    try {
        return reduced.faces()[static_cast<std::size_t>(reduced.locate_face(vr.point))].size;
    } catch (const OnBoundary& e) {
        throw ConsistencyFailure(std::string("vertex lies on a remaining line: ") + e.what());
    }
}

template <ExactRing S>
int vertex_zone_complexity(const ProjectiveArrangement<S>& A, Id v) {
    return vertex_zone_complexity(A.sphere(), A.vertex_preimages(v)[0]);
}

/// Same quantity, located in the projective quotient of the reduced
/// arrangement instead of on the sphere.
template <ExactRing S>
int vertex_zone_complexity_projective(const ProjectiveArrangement<S>& A, Id v) {
    if (A.line_count() < 4) throw std::invalid_argument("vertex zone complexity needs n >= 4");
    auto lines = A.vertex_lines(v);
    auto reduced = build_projective(without_lines(A.lines(), {lines[0], lines[1]}));
    const auto& p = A.sphere().vertices()[static_cast<std::size_t>(A.vertex_preimages(v)[1])].point;
    return reduced.face_size(reduced.locate_face(p));
}

struct LineZone {
    int complexity = 0;        // C(l)
    int segments = 0;          // n - 1
    int distinct_faces = 0;    // faces of A(L \ l) met by l
    int max_segments_per_face = 0;
    int multiplicity_sum = 0;  // sum of sizes counted once per segment
};

/// C(l): faces of the arrangement without l that contain a segment of l,
/// found by locating an interior point of each segment; each face counted
/// once.
template <ExactRing S>
LineZone line_zone(const ProjectiveArrangement<S>& A, int line) {
    const int n = A.line_count();
    if (n < 3) throw std::invalid_argument("line zone complexity needs n >= 3");
    auto reduced = build_projective(without_lines(A.lines(), {line}));
    std::map<Id, int> hits;
    LineZone z;
    // arcs 0..n-2 of the circle cover each projective segment exactly once
    for (int k = 0; k < n - 1; ++k) {
        auto mid = A.sphere().arc_midpoint(line, k);
        Id f;
        try {
            f = reduced.locate_face(mid);
        } catch (const OnBoundary& e) {
            throw ConsistencyFailure(std::string("segment midpoint on a line: ") + e.what());
        }
        ++hits[f];
        z.multiplicity_sum += reduced.face_size(f);
    }
    z.segments = n - 1;
    z.distinct_faces = static_cast<int>(hits.size());
    for (auto [f, c] : hits) {
        z.complexity += reduced.face_size(f);
        z.max_segments_per_face = std::max(z.max_segments_per_face, c);
    }
    return z;
}

template <ExactRing S>
int line_zone_complexity(const ProjectiveArrangement<S>& A, int line) {
    return line_zone(A, line).complexity;
}

/// Projective vertices on line l (one per antipodal pair).
template <ExactRing S>
std::vector<Id> vertices_on_line(const ProjectiveArrangement<S>& A, int line) {
    auto circ = A.sphere().circle(line);
    std::vector<Id> vs;
    for (std::size_t k = 0; k < circ.size() / 2; ++k) vs.push_back(A.vertex_of(circ[k]));
    return vs;
}

/// Faces of A(L) supported by l (the two sides of each of its edges).
template <ExactRing S>
std::vector<Id> faces_along_line(const ProjectiveArrangement<S>& A, int line) {
    const auto& sp = A.sphere();
    std::set<Id> fs;
    for (int k = 0; k < A.line_count() - 1; ++k) {
        Id h = sp.arc_halfedge(line, k);
        fs.insert(A.face_of(sp.halfedges()[static_cast<std::size_t>(h)].face));
        fs.insert(A.face_of(sp.halfedges()[static_cast<std::size_t>(h + 1)].face));
    }
    return {fs.begin(), fs.end()};
}

struct VertexZoneEntry {
    Id vertex;
    std::array<int, 2> lines;
    ZoneMultiset sizes;
    int complexity;  // C(v)
};

struct LineZoneEntry {
    int line;
    LineZone zone;
    int supported_face_sum;      // sum of |f| over faces of A(L) on l
    int vertex_zone_sum;         // sum over v on l of sum of |f| in Z(v)
    int vertex_complexity_sum;   // sum over v on l of C(v)
    int min_vertex_complexity;   // r(l)
};

struct IdentityResult {
    std::string name;
    std::string formula;
    bool ok = true;
    std::vector<std::string> failures;
};

struct ZoneReport {
    int n = 0;
    std::vector<LineZoneEntry> lines;
    std::vector<VertexZoneEntry> vertices;
    int min_vertex_complexity = 0;  // C(L)
    std::vector<IdentityResult> identities;
    bool zone_theorem_ok = true;   // 2 C(l) <= 11 (n-1) - 2 for every l
    bool line_minimum_ok = true;   // r(l) <= 7 for every l
    bool theorem_ok = true;        // C(L) <= 5
    int max_segments_per_face = 0;

    bool identities_ok() const {
        return std::all_of(identities.begin(), identities.end(), [](const auto& r) { return r.ok; });
    }
};

template <ExactRing S>
int min_vertex_complexity(const ProjectiveArrangement<S>& A) {
    int best = std::numeric_limits<int>::max();
    for (Id v = 0; v < static_cast<Id>(A.vertex_count()); ++v) best = std::min(best, vertex_zone_complexity(A, v));
    return best;
}

/// r(l) = min over the vertices on l of C(v).
template <ExactRing S>
int min_on_line(const ProjectiveArrangement<S>& A, int line) {
    int best = std::numeric_limits<int>::max();
    for (Id v : vertices_on_line(A, line)) best = std::min(best, vertex_zone_complexity(A, v));
    return best;
}

namespace detail {

inline void check(IdentityResult& r, bool cond, const std::string& what) {
    if (!cond) {
        r.ok = false;
        r.failures.push_back(what);
    }
}

}  // namespace detail

/// Recomputes the five counting identities from the report's raw sums.
inline std::vector<IdentityResult> verify_identities(const ZoneReport& rep) {
    IdentityResult double_count{"double_count", "sum_{v on l} sum_{f in Z(v)} |f| = 2 sum_{f in Z(l)} |f|", true, {}};
    IdentityResult vertex_zone_sum{"vertex_zone_sum", "sum_{f in Z(v)} |f| = C(v) + 12", true, {}};
    IdentityResult line_vertex_sum{"line_vertex_sum", "sum_{v on l} sum_{f in Z(v)} |f| = sum_{v on l} C(v) + 12(n-1)", true, {}};
    IdentityResult line_zone_sum{"line_zone_sum", "sum_{f in Z(l)} |f| = C(l) + 4(n-1)", true, {}};
    IdentityResult line_vertex_relation{"line_vertex_relation", "C(l) = 1/2 sum_{v on l} C(v) + 2(n-1)", true, {}};
    const int n1 = rep.n - 1;
    for (const auto& v : rep.vertices)
        detail::check(vertex_zone_sum, multiset_sum(v.sizes) == v.complexity + 12, "vertex " + std::to_string(v.vertex));
    for (const auto& l : rep.lines) {
        std::string tag = "line " + std::to_string(l.line);
        detail::check(double_count, l.vertex_zone_sum == 2 * l.supported_face_sum, tag);
        detail::check(line_vertex_sum, l.vertex_zone_sum == l.vertex_complexity_sum + 12 * n1, tag);
        detail::check(line_zone_sum, l.supported_face_sum == l.zone.complexity + 4 * n1, tag);
        detail::check(line_vertex_relation, 2 * l.zone.complexity == l.vertex_complexity_sum + 4 * n1, tag);
    }
    return {double_count, vertex_zone_sum, line_vertex_sum, line_zone_sum, line_vertex_relation};
}

/// Every zone quantity of one arrangement plus the identity checks. n >= 4.
template <ExactRing S>
ZoneReport zone_report(const ProjectiveArrangement<S>& A) {
    const int n = A.line_count();
    if (n < 4) throw std::invalid_argument("zone report needs n >= 4");
    ZoneReport rep;
    rep.n = n;
    for (Id v = 0; v < static_cast<Id>(A.vertex_count()); ++v)
        rep.vertices.push_back({v, A.vertex_lines(v), vertex_zone(A, v), vertex_zone_complexity(A, v)});
    rep.min_vertex_complexity = std::numeric_limits<int>::max();
    for (const auto& v : rep.vertices) rep.min_vertex_complexity = std::min(rep.min_vertex_complexity, v.complexity);

    for (int l = 0; l < n; ++l) {
        LineZoneEntry e{l, line_zone(A, l), 0, 0, 0, std::numeric_limits<int>::max()};
        for (Id f : faces_along_line(A, l)) e.supported_face_sum += A.face_size(f);
        for (Id v : vertices_on_line(A, l)) {
            const auto& ve = rep.vertices[static_cast<std::size_t>(v)];
            e.vertex_zone_sum += multiset_sum(ve.sizes);
            e.vertex_complexity_sum += ve.complexity;
            e.min_vertex_complexity = std::min(e.min_vertex_complexity, ve.complexity);
        }
        rep.zone_theorem_ok = rep.zone_theorem_ok && 2 * e.zone.complexity <= 11 * (n - 1) - 2;
        rep.line_minimum_ok = rep.line_minimum_ok && e.min_vertex_complexity <= 7;
        rep.max_segments_per_face = std::max(rep.max_segments_per_face, e.zone.max_segments_per_face);
        rep.lines.push_back(e);
    }
    rep.theorem_ok = rep.min_vertex_complexity <= 5;
    rep.identities = verify_identities(rep);
    return rep;
}

/// Throws ConsistencyFailure listing every failed identity.
inline void require_identities(const ZoneReport& rep) {
    std::string msg;
    for (const auto& r : rep.identities)
        if (!r.ok) msg += r.name + " failed on " + std::to_string(r.failures.size()) + " item(s); ";
    if (!msg.empty()) throw ConsistencyFailure(msg);
}

}  // namespace zonecx

#endif  // ZONECX_ZONES_HPP
