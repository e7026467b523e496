#ifndef ZONECX_ARRANGEMENT_HPP
#define ZONECX_ARRANGEMENT_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zonecx/errors.hpp"
#include "zonecx/exact_scalar.hpp"
#include "zonecx/projective.hpp"

namespace zonecx {

using Id = std::int32_t;

/// One sign per line, never zero. Stored as a '+'/'-' string so it can key
/// hash maps directly.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::string signs) : s_(std::move(signs)) {}

    std::size_t size() const { return s_.size(); }
    int operator[](std::size_t i) const { return s_[i] == '+' ? 1 : -1; }
    const std::string& str() const { return s_; }

    SignVector negated() const {
        std::string t = s_;
        for (char& c : t) c = c == '+' ? '-' : '+';
        return SignVector(std::move(t));
    }

    /// Representative of {s, -s} whose first entry is positive.
    SignVector projective_canonical() const {
        return (!s_.empty() && s_[0] == '-') ? negated() : *this;
    }

    friend bool operator==(const SignVector&, const SignVector&) = default;

private:
    std::string s_;
};

struct SignVectorHash {
    std::size_t operator()(const SignVector& s) const { return std::hash<std::string>{}(s.str()); }
};

/// Sign vector of p against every line; throws OnBoundary if p is incident to
/// any of them.
template <ExactRing S>
SignVector sign_vector_of(const HomogeneousPoint<S>& p, const LineSet<S>& lines) {
    std::string s(lines.size(), '?');
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int o = orient(p, lines[i]);
        if (o == 0) throw OnBoundary("point lies on line " + std::to_string(i));
        s[i] = o > 0 ? '+' : '-';
    }
    return SignVector(std::move(s));
}

template <ExactRing S>
struct VertexRecord {
    HomogeneousPoint<S> point;  // actual sphere position
    std::array<int, 2> lines;   // the two circles through it, ascending
    Id antipode;
    Id halfedge;  // one outgoing half-edge
};

struct HalfEdge {
    Id origin;
    Id twin;
    Id next;  // counterclockwise around the left face, seen from outside
    Id face;  // left face
    int line;
    int arc;       // index of the arc on its circle
    bool forward;  // oriented counterclockwise about the line's normal
};

struct FaceRecord {
    Id id;
    int size;
    Id halfedge;
    Id antipode;
    SignVector signs;
};

/// Histogram k -> f_k.
using FaceSizeHistogram = std::map<int, int>;

template <ExactRing S>
class SphereArrangement;

template <ExactRing S>
SphereArrangement<S> build_sphere(LineSet<S> lines);

/// Arrangement of great circles on the sphere as a half-edge complex.
///
/// Vertex 2p and 2p+1 are the two crossings of the p-th line pair (antipodes
/// of each other). On circle i the half-edges of arc k are
/// 2 * (i * m + k) (forward) and its twin, with m = 2(n-1) arcs per circle.
/// A forward half-edge has the positive side of its line on the left.
template <ExactRing S>
class SphereArrangement {
public:
    int line_count() const { return static_cast<int>(lines_.size()); }
    const LineSet<S>& lines() const { return lines_; }
    const std::vector<VertexRecord<S>>& vertices() const { return vertices_; }
    const std::vector<HalfEdge>& halfedges() const { return halfedges_; }
    const std::vector<FaceRecord>& faces() const { return faces_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return halfedges_.size() / 2; }
    std::size_t face_count() const { return faces_.size(); }

    int arcs_per_circle() const { return 2 * (line_count() - 1); }

    /// Vertices on circle i in counterclockwise order about its normal.
    std::span<const Id> circle(int i) const { return circles_[static_cast<std::size_t>(i)]; }

    /// Forward half-edge of arc k on circle i.
    Id arc_halfedge(int i, int k) const { return 2 * (i * arcs_per_circle() + k); }

    /// The half-edge covering -h, with the same direction of travel.
    Id antipodal_halfedge(Id h) const {
        const auto& e = halfedges_[static_cast<std::size_t>(h)];
        int m = arcs_per_circle();
        Id fwd = arc_halfedge(e.line, (e.arc + m / 2) % m);
        return e.forward ? fwd : fwd + 1;
    }

    Id destination(Id h) const { return halfedges_[static_cast<std::size_t>(twin(h))].origin; }
    Id twin(Id h) const { return h ^ 1; }

    /// The four outgoing half-edges of v in counterclockwise order.
    std::array<Id, 4> outgoing(Id v) const { return rotation_[static_cast<std::size_t>(v)]; }

    /// The four faces containing v, in counterclockwise order.
    std::array<Id, 4> faces_around(Id v) const {
        std::array<Id, 4> r{};
        auto out = outgoing(v);
        for (std::size_t k = 0; k < 4; ++k) r[k] = halfedges_[static_cast<std::size_t>(out[k])].face;
        return r;
    }

    std::vector<Id> boundary_halfedges(Id f) const {
        std::vector<Id> hs;
        Id start = faces_[static_cast<std::size_t>(f)].halfedge, h = start;
        do {
            hs.push_back(h);
            h = halfedges_[static_cast<std::size_t>(h)].next;
        } while (h != start);
        return hs;
    }

    std::vector<Id> boundary_vertices(Id f) const {
        std::vector<Id> vs;
        for (Id h : boundary_halfedges(f)) vs.push_back(halfedges_[static_cast<std::size_t>(h)].origin);
        return vs;
    }

    std::optional<Id> find_face(const SignVector& s) const {
        auto it = face_index_.find(s);
        if (it == face_index_.end()) return std::nullopt;
        return it->second;
    }

    /// The face containing p. Throws OnBoundary if p lies on a circle.
    Id locate_face(const HomogeneousPoint<S>& p) const {
        auto f = find_face(sign_vector_of(p, lines_));
        if (!f) throw ConsistencyFailure("locate_face: sign vector has no face");
        return *f;
    }

    /// Strictly interior point of face f: the sum of its boundary vertices.
    /// Needs n >= 3 (faces of two circles are lunes with antipodal corners).
    HomogeneousPoint<S> interior_point(Id f) const {
        if (line_count() < 3) throw std::invalid_argument("interior_point needs at least 3 lines");
        Triple<S> sum{S(0), S(0), S(0)};
        for (Id v : boundary_vertices(f)) sum = add(sum, vertices_[static_cast<std::size_t>(v)].point.coords);
        return {sum};
    }

    /// Point interior to arc k of circle i (sum of its endpoints). Needs n >= 3
    /// so that consecutive vertices are less than a half-turn apart.
    HomogeneousPoint<S> arc_midpoint(int i, int k) const {
        if (line_count() < 3) throw std::invalid_argument("arc_midpoint needs at least 3 lines");
        auto c = circle(i);
        std::size_t m = c.size();
        const auto& a = vertices_[static_cast<std::size_t>(c[static_cast<std::size_t>(k) % m])].point;
        const auto& b = vertices_[static_cast<std::size_t>(c[(static_cast<std::size_t>(k) + 1) % m])].point;
        return {add(a.coords, b.coords)};
    }

    FaceSizeHistogram face_sizes() const {
        FaceSizeHistogram h;
        for (const auto& f : faces_) ++h[f.size];
        return h;
    }

private:
    friend SphereArrangement build_sphere<S>(LineSet<S> lines);

    LineSet<S> lines_;
    std::vector<VertexRecord<S>> vertices_;
    std::vector<HalfEdge> halfedges_;
    std::vector<FaceRecord> faces_;
    std::vector<std::vector<Id>> circles_;
    std::vector<std::array<Id, 4>> rotation_;
    std::unordered_map<SignVector, Id, SignVectorHash> face_index_;
};

namespace detail {

/// Exact counterclockwise sort of points on the circle with normal c. No
/// angles: half-circle class relative to a reference point, then the sign of
/// det(c, p, q) inside each class.
template <ExactRing S>
void sort_around_circle(const Triple<S>& c, std::vector<std::pair<Id, Triple<S>>>& pts) {
    if (pts.empty()) return;
    const Triple<S> ref = pts.front().second;
    auto half_class = [&](const Triple<S>& p) {
        int s = sign(det3(c, ref, p));
        if (s > 0) return 1;
        if (s < 0) return 3;
        return sign(dot(ref, p)) > 0 ? 0 : 2;
    };
    std::vector<int> cls(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) cls[i] = half_class(pts[i].second);
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (cls[a] != cls[b]) return cls[a] < cls[b];
        if (a == b) return false;
        return sign(det3(c, pts[a].second, pts[b].second)) > 0;
    });
    std::vector<std::pair<Id, Triple<S>>> sorted;
    sorted.reserve(pts.size());
    for (auto i : order) sorted.push_back(std::move(pts[i]));
    pts = std::move(sorted);
}

inline Id pair_index(int i, int j, int n) {
    // index of (i, j), i < j, in lexicographic enumeration of pairs
    return static_cast<Id>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

}  // namespace detail

/// Builds the half-edge complex of a simple set of n >= 2 great circles.
/// Throws DegenerateInput if the lines are not in general position.
template <ExactRing S>
SphereArrangement<S> build_sphere(LineSet<S> lines) {
    const int n = static_cast<int>(lines.size());
    if (n < 2) throw DegenerateInput("an arrangement needs at least 2 lines");
    require_general_position(lines);

    SphereArrangement<S> A;
    A.lines_ = std::move(lines);
    const auto& L = A.lines_;
    const int m = 2 * (n - 1);
    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;

    A.vertices_.resize(2 * pairs);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Id v = 2 * detail::pair_index(i, j, n);
            auto p = intersect(L[static_cast<std::size_t>(i)], L[static_cast<std::size_t>(j)]);
            A.vertices_[static_cast<std::size_t>(v)] = {p, {i, j}, v + 1, -1};
            A.vertices_[static_cast<std::size_t>(v + 1)] = {-p, {i, j}, v, -1};
        }

    // position of each vertex on its two circles, indexed like lines[]
    std::vector<std::array<int, 2>> pos(A.vertices_.size(), {-1, -1});
    A.circles_.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<Id, Triple<S>>> pts;
        pts.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            Id v = 2 * detail::pair_index(std::min(i, j), std::max(i, j), n);
            pts.emplace_back(v, A.vertices_[static_cast<std::size_t>(v)].point.coords);
            pts.emplace_back(v + 1, A.vertices_[static_cast<std::size_t>(v + 1)].point.coords);
        }
        detail::sort_around_circle(L[static_cast<std::size_t>(i)].coeffs, pts);
        auto& circ = A.circles_[static_cast<std::size_t>(i)];
        for (int k = 0; k < m; ++k) {
            Id v = pts[static_cast<std::size_t>(k)].first;
            circ.push_back(v);
            const auto& vr = A.vertices_[static_cast<std::size_t>(v)];
            pos[static_cast<std::size_t>(v)][vr.lines[0] == i ? 0 : 1] = k;
        }
        for (int k = 0; k < m; ++k)
            if ((circ[static_cast<std::size_t>(k)] ^ 1) != circ[static_cast<std::size_t>((k + m / 2) % m)])
                throw ConsistencyFailure("circle order is not antipodally symmetric");
    }

    A.halfedges_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(2 * m));
    for (int i = 0; i < n; ++i) {
        const auto& circ = A.circles_[static_cast<std::size_t>(i)];
        for (int k = 0; k < m; ++k) {
            Id h = A.arc_halfedge(i, k);
            Id a = circ[static_cast<std::size_t>(k)], b = circ[static_cast<std::size_t>((k + 1) % m)];
            A.halfedges_[static_cast<std::size_t>(h)] = {a, h + 1, -1, -1, i, k, true};
            A.halfedges_[static_cast<std::size_t>(h + 1)] = {b, h, -1, -1, i, k, false};
        }
    }

    // Rotation system: outgoing half-edges in counterclockwise order, then
    // next(twin(out[k+1])) = out[k].
    A.rotation_.resize(A.vertices_.size());
    for (std::size_t v = 0; v < A.vertices_.size(); ++v) {
        auto& vr = A.vertices_[v];
        int li = vr.lines[0], lj = vr.lines[1];
        int pi = pos[v][0], pj = pos[v][1];
        Id fi = A.arc_halfedge(li, pi), bi = A.arc_halfedge(li, (pi + m - 1) % m) + 1;
        Id fj = A.arc_halfedge(lj, pj), bj = A.arc_halfedge(lj, (pj + m - 1) % m) + 1;
        int s = sign(det3(L[static_cast<std::size_t>(li)].coeffs, L[static_cast<std::size_t>(lj)].coeffs,
                          vr.point.coords));
        std::array<Id, 4> out = s > 0 ? std::array<Id, 4>{fi, fj, bi, bj} : std::array<Id, 4>{fi, bj, bi, fj};
        A.rotation_[v] = out;
        vr.halfedge = out[0];
        for (std::size_t k = 0; k < 4; ++k) A.halfedges_[static_cast<std::size_t>(out[(k + 1) % 4] ^ 1)].next = out[k];
    }

    // Faces are the next-cycles.
    const std::size_t H = A.halfedges_.size();
    for (std::size_t h0 = 0; h0 < H; ++h0) {
        if (A.halfedges_[h0].face != -1) continue;
        Id f = static_cast<Id>(A.faces_.size());
        std::string signs(static_cast<std::size_t>(n), '?');
        int size = 0;
        Id h = static_cast<Id>(h0);
        do {
            auto& he = A.halfedges_[static_cast<std::size_t>(h)];
            if (he.face != -1 || static_cast<std::size_t>(size) > H)
                throw ConsistencyFailure("half-edge next-cycles do not partition");
            he.face = f;
            signs[static_cast<std::size_t>(he.line)] = he.forward ? '+' : '-';
            ++size;
            h = he.next;
        } while (h != static_cast<Id>(h0));
        // Lines not on the boundary: any boundary vertex decides, all must agree.
        h = static_cast<Id>(h0);
        do {
            const auto& he = A.halfedges_[static_cast<std::size_t>(h)];
            const auto& p = A.vertices_[static_cast<std::size_t>(he.origin)].point;
            for (int l = 0; l < n; ++l) {
                int o = orient(p, L[static_cast<std::size_t>(l)]);
                if (o == 0) continue;
                char c = o > 0 ? '+' : '-';
                char& slot = signs[static_cast<std::size_t>(l)];
                if (slot == '?') slot = c;
                else if (slot != c) throw ConsistencyFailure("face boundary vertices disagree on a side");
            }
            h = he.next;
        } while (h != static_cast<Id>(h0));
        SignVector sv(signs);
        if (!A.face_index_.emplace(sv, f).second) throw ConsistencyFailure("two faces share a sign vector");
        A.faces_.push_back({f, size, static_cast<Id>(h0), -1, std::move(sv)});
    }
    for (auto& fr : A.faces_) {
        auto anti = A.find_face(fr.signs.negated());
        if (!anti || *anti == fr.id) throw ConsistencyFailure("face without antipodal partner");
        fr.antipode = *anti;
    }

    const std::size_t V = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1);
    if (A.vertex_count() != V || A.edge_count() != 2 * V || A.face_count() != V + 2)
        throw ConsistencyFailure("sphere arrangement counts violate Euler's formula");
    return A;
}

/// Antipodal quotient of a sphere arrangement: the arrangement of the same
/// lines in the real projective plane. Keeps the sphere complex; projective
/// elements are antipodal orbits.
template <ExactRing S>
class ProjectiveArrangement {
public:
    explicit ProjectiveArrangement(SphereArrangement<S> sphere) : sphere_(std::move(sphere)) {
        const auto& S_ = sphere_;
        const std::size_t sv = S_.vertex_count();
        for (std::size_t v = 0; v < sv; v += 2) {
            if (S_.vertices()[v].antipode != static_cast<Id>(v + 1))
                throw ConsistencyFailure("vertex antipode is not its orbit partner");
            vertex_preimages_.push_back({static_cast<Id>(v), static_cast<Id>(v + 1)});
        }
        std::vector<Id> edge_map(S_.edge_count(), -1);
        for (std::size_t e = 0; e < S_.edge_count(); ++e) {
            if (edge_map[e] != -1) continue;
            Id anti = S_.antipodal_halfedge(static_cast<Id>(2 * e)) / 2;
            if (anti == static_cast<Id>(e)) throw ConsistencyFailure("edge fixed by the antipodal map");
            Id pe = static_cast<Id>(edge_preimages_.size());
            edge_map[e] = edge_map[static_cast<std::size_t>(anti)] = pe;
            edge_preimages_.push_back({static_cast<Id>(e), anti});
        }
        sphere_face_to_projective_.assign(S_.face_count(), -1);
        for (const auto& f : S_.faces()) {
            if (sphere_face_to_projective_[static_cast<std::size_t>(f.id)] != -1) continue;
            if (f.antipode == f.id) throw ConsistencyFailure("face fixed by the antipodal map");
            const auto& g = S_.faces()[static_cast<std::size_t>(f.antipode)];
            if (g.size != f.size) throw ConsistencyFailure("antipodal faces differ in size");
            Id pf = static_cast<Id>(face_preimages_.size());
            sphere_face_to_projective_[static_cast<std::size_t>(f.id)] = pf;
            sphere_face_to_projective_[static_cast<std::size_t>(g.id)] = pf;
            // preimage[0] carries the canonical (first sign positive) vector
            bool f_canonical = f.signs[0] > 0;
            face_preimages_.push_back(f_canonical ? std::array<Id, 2>{f.id, g.id} : std::array<Id, 2>{g.id, f.id});
            face_sizes_.push_back(f.size);
        }
        const std::size_t n = static_cast<std::size_t>(S_.line_count());
        if (vertex_count() != n * (n - 1) / 2 || edge_count() != n * (n - 1) || face_count() != n * (n - 1) / 2 + 1)
            throw ConsistencyFailure("projective counts violate Euler's formula");
    }

    const SphereArrangement<S>& sphere() const { return sphere_; }
    int line_count() const { return sphere_.line_count(); }
    const LineSet<S>& lines() const { return sphere_.lines(); }

    std::size_t vertex_count() const { return vertex_preimages_.size(); }
    std::size_t edge_count() const { return edge_preimages_.size(); }
    std::size_t face_count() const { return face_preimages_.size(); }

    const std::array<Id, 2>& vertex_preimages(Id v) const { return vertex_preimages_[static_cast<std::size_t>(v)]; }
    const std::array<Id, 2>& edge_preimages(Id e) const { return edge_preimages_[static_cast<std::size_t>(e)]; }
    const std::array<Id, 2>& face_preimages(Id f) const { return face_preimages_[static_cast<std::size_t>(f)]; }

    Id vertex_of(Id sphere_vertex) const { return sphere_vertex / 2; }
    Id face_of(Id sphere_face) const { return sphere_face_to_projective_[static_cast<std::size_t>(sphere_face)]; }

    int face_size(Id f) const { return face_sizes_[static_cast<std::size_t>(f)]; }

    /// The two lines through projective vertex v.
    std::array<int, 2> vertex_lines(Id v) const {
        return sphere_.vertices()[static_cast<std::size_t>(vertex_preimages(v)[0])].lines;
    }

    /// Canonical (first sign positive) sign vector of face f.
    const SignVector& face_signs(Id f) const {
        return sphere_.faces()[static_cast<std::size_t>(face_preimages(f)[0])].signs;
    }

    Id locate_face(const HomogeneousPoint<S>& p) const {
        auto s = sign_vector_of(p, lines()).projective_canonical();
        auto f = sphere_.find_face(s);
        if (!f) throw ConsistencyFailure("locate_face: sign vector has no face");
        return face_of(*f);
    }

    FaceSizeHistogram face_sizes() const {
        FaceSizeHistogram h;
        for (int s : face_sizes_) ++h[s];
        return h;
    }

private:
    SphereArrangement<S> sphere_;
    std::vector<std::array<Id, 2>> vertex_preimages_;
    std::vector<std::array<Id, 2>> edge_preimages_;
    std::vector<std::array<Id, 2>> face_preimages_;
    std::vector<Id> sphere_face_to_projective_;
    std::vector<int> face_sizes_;
};

template <ExactRing S>
ProjectiveArrangement<S> quotient_projective(SphereArrangement<S> sphere) {
    return ProjectiveArrangement<S>(std::move(sphere));
}

template <ExactRing S>
ProjectiveArrangement<S> build_projective(LineSet<S> lines) {
    return quotient_projective(build_sphere(std::move(lines)));
}

}  // namespace zonecx

#endif  // ZONECX_ARRANGEMENT_HPP
