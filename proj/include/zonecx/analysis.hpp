#ifndef ZONECX_ANALYSIS_HPP
#define ZONECX_ANALYSIS_HPP

#include <limits>
#include <optional>
#include <type_traits>

#include "zonecx/arrangement.hpp"
#include "zonecx/discharging.hpp"
#include "zonecx/exact_scalar.hpp"
#include "zonecx/zones.hpp"

namespace zonecx {

/// Integer copy of the lines if every coefficient is an integer of modest
/// size, so that the CheckedInt fast path applies.
inline std::optional<LineSet<CheckedInt>> as_integer_lines(const LineSet<ExactScalar>& lines) {
    static const mpz_class limit = mpz_class(1) << 31;
    LineSet<CheckedInt> out;
    for (const auto& l : lines) {
        GreatCircleLine<CheckedInt> li;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& c = l.coeffs[k];
            if (!c.is_integer()) return std::nullopt;
            mpz_class z = c.rational_part().get_num();
            if (abs(z) >= limit) return std::nullopt;
            li.coeffs[k] = z.get_si();
        }
        out.push_back(li);
    }
    return out;
}

inline LineSet<ExactScalar> to_exact_lines(const LineSet<CheckedInt>& lines) {
    LineSet<ExactScalar> out;
    for (const auto& l : lines)
        out.push_back({{ExactScalar(Rational(static_cast<long>(l.coeffs[0].value()))),
                        ExactScalar(Rational(static_cast<long>(l.coeffs[1].value()))),
                        ExactScalar(Rational(static_cast<long>(l.coeffs[2].value())))}});
    return out;
}

/// Runs f on the cheapest exact ring that represents the lines: CheckedInt
/// when possible, falling back to ExactScalar if int64 overflows.
template <class F>
auto with_best_ring(const LineSet<ExactScalar>& lines, F&& f) {
    if (auto ints = as_integer_lines(lines)) {
        try {
            return f(*ints);
        } catch (const ArithmeticOverflow&) {
        }
    }
    return f(lines);
}

template <class F>
auto with_best_ring(const LineSet<CheckedInt>& lines, F&& f) {
    try {
        return f(lines);
    } catch (const ArithmeticOverflow&) {
    }
    return f(to_exact_lines(lines));
}

struct Analysis {
    int n = 0;
    std::size_t sphere_vertices = 0, sphere_edges = 0, sphere_faces = 0;
    std::size_t projective_vertices = 0, projective_edges = 0, projective_faces = 0;
    FaceSizeHistogram sphere_histogram, projective_histogram;
    bool adjacent_triangles = false;
    ZoneReport zones;
    DischargeReport discharge;
};

/// Two faces of size 3 sharing an edge anywhere in the arrangement?
template <ExactRing S>
bool has_adjacent_triangles(const SphereArrangement<S>& A) {
    for (std::size_t h = 0; h < A.halfedges().size(); h += 2) {
        const auto& a = A.faces()[static_cast<std::size_t>(A.halfedges()[h].face)];
        const auto& b = A.faces()[static_cast<std::size_t>(A.halfedges()[h + 1].face)];
        if (a.size == 3 && b.size == 3) return true;
    }
    return false;
}

/// Build, zone report and discharging for one simple line set with n >= 4.
template <ExactRing S>
Analysis analyze(const LineSet<S>& lines) {
    auto P = build_projective(lines);
    const auto& sp = P.sphere();
    Analysis a;
    a.n = P.line_count();
    a.sphere_vertices = sp.vertex_count();
    a.sphere_edges = sp.edge_count();
    a.sphere_faces = sp.face_count();
    a.projective_vertices = P.vertex_count();
    a.projective_edges = P.edge_count();
    a.projective_faces = P.face_count();
    a.sphere_histogram = sp.face_sizes();
    a.projective_histogram = P.face_sizes();
    a.adjacent_triangles = has_adjacent_triangles(sp);
    a.zones = zone_report(P);
    a.discharge = run_discharging(sp);
    return a;
}

inline Analysis analyze_exact(const LineSet<ExactScalar>& lines) {
    return with_best_ring(lines, [](const auto& ls) { return analyze(ls); });
}

}  // namespace zonecx

#endif  // ZONECX_ANALYSIS_HPP
