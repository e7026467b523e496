#ifndef ZONECX_DISCHARGING_HPP
#define ZONECX_DISCHARGING_HPP

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "zonecx/arrangement.hpp"
#include "zonecx/exact_scalar.hpp"
#include "zonecx/zones.hpp"

namespace zonecx {

/// (k - 3) / k, the share a face of size k sends to each of its corners.
inline Rational face_share(int k) { return ratio(k - 3, k); }

/// Sum of (k_i - 3) / k_i over a 4-multiset.
inline Rational deficiency(const ZoneMultiset& k) {
    Rational d = 0;
    for (int x : k) d += face_share(x);
    return d;
}

/// The five 4-multisets with deficiency < 1 under the constraints k_i >= 3,
/// at most two 3s, and sum >= 18.
inline const std::vector<ZoneMultiset>& negative_multisets() {
    static const std::vector<ZoneMultiset> list{
        {3, 3, 4, 8}, {3, 3, 4, 9}, {3, 3, 4, 10}, {3, 3, 4, 11}, {3, 3, 5, 7}};
    return list;
}

inline bool is_negative_multiset(const ZoneMultiset& k) {
    const auto& l = negative_multisets();
    return std::find(l.begin(), l.end(), k) != l.end();
}

struct MultisetClass {
    ZoneMultiset sizes;
    Rational deficiency;
    bool qualifies;  // deficiency < 1
};

/// Every sorted 4-multiset with entries in [3, cap], at most two 3s and sum
/// >= 18, whose deficiency is below 1. Any such multiset has k1 = k2 = 3 and
/// then 1/k3 + 1/k4 > 1/3 bounds k4 <= 11, so cap = 12 is already complete.
inline std::vector<MultisetClass> enumerate_lemma_multisets(int cap) {
    if (cap < 12) throw std::invalid_argument("lemma enumeration needs cap >= 12");
    std::vector<MultisetClass> out;
    for (int a = 3; a <= cap; ++a)
        for (int b = a; b <= cap; ++b)
            for (int c = b; c <= cap; ++c)
                for (int d = c; d <= cap; ++d) {
                    ZoneMultiset k{a, b, c, d};
                    if (std::count(k.begin(), k.end(), 3) > 2 || multiset_sum(k) < 18) continue;
                    Rational def = deficiency(k);
                    if (def < 1) out.push_back({k, def, true});
                }
    return out;
}

enum class ChargeStage { w1, w2, w3 };

inline const char* to_string(ChargeStage s) {
    switch (s) {
        case ChargeStage::w1: return "w1";
        case ChargeStage::w2: return "w2";
        case ChargeStage::w3: return "w3";
    }
    return "?";
}

/// Exact charges on the faces and vertices of a sphere arrangement.
struct ChargeState {
    ChargeStage stage = ChargeStage::w1;
    std::vector<Rational> face_charge;
    std::vector<Rational> vertex_charge;

    Rational total() const {
        Rational t = 0;
        for (const auto& q : face_charge) t += q;
        for (const auto& q : vertex_charge) t += q;
        return t;
    }

    Rational min_vertex_charge() const {
        return vertex_charge.empty() ? Rational(0) : *std::min_element(vertex_charge.begin(), vertex_charge.end());
    }
};

/// Faces get k - 3, vertices get -1.
template <ExactRing S>
ChargeState initial_charges(const SphereArrangement<S>& A) {
    ChargeState st;
    st.stage = ChargeStage::w1;
    for (const auto& f : A.faces()) st.face_charge.emplace_back(f.size - 3);
    st.vertex_charge.assign(A.vertex_count(), Rational(-1));
    return st;
}

/// Each face of size k sends (k - 3) / k to every corner.
template <ExactRing S>
ChargeState discharge_faces(const ChargeState& w1, const SphereArrangement<S>& A) {
    if (w1.stage != ChargeStage::w1) throw std::invalid_argument("discharge_faces expects a w1 state");
    ChargeState st = w1;
    st.stage = ChargeStage::w2;
    for (const auto& f : A.faces()) {
        auto& fc = st.face_charge[static_cast<std::size_t>(f.id)];
        Rational share = fc / f.size;
        for (Id v : A.boundary_vertices(f.id)) {
            st.vertex_charge[static_cast<std::size_t>(v)] += share;
            fc -= share;
        }
    }
    return st;
}

struct VertexClassification {
    Id vertex;
    bool negative;         // w2(v) < 0
    ZoneMultiset sizes;    // K_v
    int size_sum;
    bool hypothesis;       // sum of |f| over Z(v) >= 18
    int triangles;
    bool listed;           // K_v is one of the five negative multisets
};

struct ClassificationSummary {
    std::vector<VertexClassification> vertices;
    int equivalence_checked = 0;     // vertices inside the hypothesis
    int equivalence_violations = 0;  // negative != listed there
    int witnesses = 0;               // sum <= 17, i.e. C(v) <= 5
    int negative_outside_hypothesis = 0;
};

/// Per-vertex sign of w2 with K_v, and the negative <=> listed equivalence
/// checked where sum |f| >= 18 and at most two triangles meet v.
template <ExactRing S>
ClassificationSummary classify_negative(const ChargeState& w2, const SphereArrangement<S>& A) {
    if (w2.stage != ChargeStage::w2) throw std::invalid_argument("classify_negative expects a w2 state");
    ClassificationSummary sum;
    for (Id v = 0; v < static_cast<Id>(A.vertex_count()); ++v) {
        VertexClassification c;
        c.vertex = v;
        c.negative = w2.vertex_charge[static_cast<std::size_t>(v)] < 0;
        c.sizes = vertex_zone(A, v);
        c.size_sum = multiset_sum(c.sizes);
        c.hypothesis = c.size_sum >= 18;
        c.triangles = static_cast<int>(std::count(c.sizes.begin(), c.sizes.end(), 3));
        c.listed = is_negative_multiset(c.sizes);
        if (c.hypothesis && c.triangles <= 2) {
            ++sum.equivalence_checked;
            if (c.negative != c.listed) ++sum.equivalence_violations;
        }
        if (!c.hypothesis) {
            ++sum.witnesses;
            if (c.negative) ++sum.negative_outside_hypothesis;
        }
        sum.vertices.push_back(c);
    }
    return sum;
}

/// Vertices opposite u in the size-4 faces around u.
template <ExactRing S>
std::vector<Id> quad_opposites(const SphereArrangement<S>& A, Id u) {
    std::vector<Id> out;
    for (Id h : A.outgoing(u)) {
        const auto& he = A.halfedges()[static_cast<std::size_t>(h)];
        if (A.faces()[static_cast<std::size_t>(he.face)].size != 4) continue;
        Id second = A.halfedges()[static_cast<std::size_t>(he.next)].next;
        out.push_back(A.halfedges()[static_cast<std::size_t>(second)].origin);
    }
    return out;
}

/// V^-_u: vertices with negative w2 that are neighbors of u or opposite to u
/// in a face of size 4. Requires w2(u) >= 0.
template <ExactRing S>
std::vector<Id> v_minus(const ChargeState& w2, const SphereArrangement<S>& A, Id u) {
    if (w2.stage != ChargeStage::w2) throw std::invalid_argument("v_minus expects a w2 state");
    if (w2.vertex_charge[static_cast<std::size_t>(u)] < 0)
        throw std::invalid_argument("v_minus called on a vertex with negative w2");
    std::set<Id> cand;
    for (Id h : A.outgoing(u)) cand.insert(A.destination(h));
    for (Id v : quad_opposites(A, u)) cand.insert(v);
    std::vector<Id> out;
    for (Id v : cand)
        if (w2.vertex_charge[static_cast<std::size_t>(v)] < 0) out.push_back(v);
    return out;
}

/// Every u with w2(u) >= 0 and nonempty V^-_u sends w2(u) / |V^-_u| to each
/// member. Donors with w2(u) = 0 send 0.
template <ExactRing S>
ChargeState discharge_vertices(const ChargeState& w2, const SphereArrangement<S>& A) {
    if (w2.stage != ChargeStage::w2) throw std::invalid_argument("discharge_vertices expects a w2 state");
    ChargeState st = w2;
    st.stage = ChargeStage::w3;
    for (Id u = 0; u < static_cast<Id>(A.vertex_count()); ++u) {
        const Rational& wu = w2.vertex_charge[static_cast<std::size_t>(u)];
        if (wu < 0) continue;
        auto targets = v_minus(w2, A, u);
        if (targets.empty()) continue;
        Rational share = wu / static_cast<long>(targets.size());
        for (Id v : targets) {
            st.vertex_charge[static_cast<std::size_t>(v)] += share;
            st.vertex_charge[static_cast<std::size_t>(u)] -= share;
        }
    }
    return st;
}

struct DischargeReport {
    ChargeState w1, w2, w3;
    Rational total_w1, total_w2, total_w3;
    Rational euler_total;  // -V + sum (k - 3) f_k from the face histogram
    bool faces_emptied = true;
    ClassificationSummary classes;
    int donors = 0;
    Rational min_w3;

    bool conserved() const {
        return total_w1 == -6 && total_w2 == -6 && total_w3 == -6 && euler_total == -6;
    }
};

/// Steps 1-3 on the sphere plus every audit: conservation, the recomputed
/// Euler total, the conditional equivalence and the witness count.
template <ExactRing S>
DischargeReport run_discharging(const SphereArrangement<S>& A) {
    if (A.line_count() < 4) throw std::invalid_argument("discharging needs n >= 4");
    DischargeReport r;
    r.w1 = initial_charges(A);
    r.w2 = discharge_faces(r.w1, A);
    r.w3 = discharge_vertices(r.w2, A);
    r.total_w1 = r.w1.total();
    r.total_w2 = r.w2.total();
    r.total_w3 = r.w3.total();
    r.euler_total = -static_cast<long>(A.vertex_count());
    for (auto [k, count] : A.face_sizes()) r.euler_total += (k - 3) * count;
    r.faces_emptied = std::all_of(r.w2.face_charge.begin(), r.w2.face_charge.end(),
                                  [](const Rational& q) { return q == 0; });
    r.classes = classify_negative(r.w2, A);
    for (Id u = 0; u < static_cast<Id>(A.vertex_count()); ++u)
        if (r.w2.vertex_charge[static_cast<std::size_t>(u)] >= 0 && !v_minus(r.w2, A, u).empty()) ++r.donors;
    r.min_w3 = r.w3.min_vertex_charge();
    return r;
}

}  // namespace zonecx

#endif  // ZONECX_DISCHARGING_HPP
