#ifndef ZONECX_GENERATORS_HPP
#define ZONECX_GENERATORS_HPP

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "zonecx/analysis.hpp"
#include "zonecx/projective.hpp"

namespace zonecx {

/// Random sampling gave up before reaching general position.
class GenerationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// n lines with integer coefficients uniform in [-bound, bound]^3 (zero
/// triple excluded), each candidate rejected until the set stays simple.
/// Deterministic in the seed.
inline LineSet<CheckedInt> random_arrangement(int n, int coeff_bound, std::uint64_t seed,
                                              int max_rejections = 10000) {
    if (n < 3) throw std::invalid_argument("random_arrangement needs n >= 3");
    if (coeff_bound < 1) throw std::invalid_argument("random_arrangement needs coeff_bound >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coeff(-coeff_bound, coeff_bound);
    LineSet<CheckedInt> lines;
    int rejected = 0;
    while (static_cast<int>(lines.size()) < n) {
        GreatCircleLine<CheckedInt> c{{coeff(rng), coeff(rng), coeff(rng)}};
        if (is_zero(c.coeffs)) continue;
        c = canonicalize(c);
        if (extends_general_position(lines, c)) {
            lines.push_back(c);
            continue;
        }
        if (++rejected > max_rejections)
            throw GenerationFailure("random_arrangement: gave up after " + std::to_string(max_rejections) +
                                    " rejections with " + std::to_string(lines.size()) + " of " +
                                    std::to_string(n) + " lines placed (bound " + std::to_string(coeff_bound) +
                                    ")");
    }
    return lines;
}

/// The 10 great circles whose poles are the face axes of the regular
/// icosahedron: the 4 classes of (+-1, +-1, +-1) and the 6 classes of cyclic
/// shifts of (0, +-1, phi^2), all in canonical form.
inline LineSet<ExactScalar> icosahedral_lines() {
    const ExactScalar one(1), zero(0), phi2 = golden_ratio() * golden_ratio();
    LineSet<ExactScalar> lines{
        {{one, one, one}}, {{one, one, -one}}, {{one, -one, one}}, {{one, -one, -one}},
    };
    for (const ExactScalar& s : {one, -one}) {
        lines.push_back({{zero, s, phi2}});
        lines.push_back({{s, phi2, zero}});
        lines.push_back({{phi2, zero, s}});
    }
    for (auto& l : lines) l = canonicalize(l);
    return lines;
}

struct IcosahedralCensus {
    std::size_t vertices = 0;
    FaceSizeHistogram faces;
    std::map<ZoneMultiset, int> vertex_types;
    std::map<ZoneMultiset, std::map<int, int>> complexity_by_type;
    int min_vertex_complexity = 0;

    bool matches_expected() const {
        return vertices == 45 && faces == FaceSizeHistogram{{3, 30}, {5, 6}, {6, 10}} &&
               vertex_types == std::map<ZoneMultiset, int>{{{3, 3, 5, 6}, 30}, {{3, 3, 6, 6}, 15}} &&
               complexity_by_type == std::map<ZoneMultiset, std::map<int, int>>{
                                         {{3, 3, 5, 6}, {{5, 30}}}, {{3, 3, 6, 6}, {{6, 15}}}} &&
               min_vertex_complexity == 5;
    }

    std::string describe() const {
        std::string s = "vertices=" + std::to_string(vertices) + " faces={";
        for (auto [k, c] : faces) s += std::to_string(k) + ":" + std::to_string(c) + " ";
        s += "} types={";
        for (const auto& [k, c] : vertex_types) s += to_string(k) + ":" + std::to_string(c) + " ";
        return s + "} C(L)=" + std::to_string(min_vertex_complexity);
    }
};

class VerificationMismatch : public std::runtime_error {
public:
    VerificationMismatch(const std::string& what, IcosahedralCensus census)
        : std::runtime_error(what), census_(std::move(census)) {}
    const IcosahedralCensus& census() const { return census_; }

private:
    IcosahedralCensus census_;
};

template <ExactRing S>
IcosahedralCensus census_of(const LineSet<S>& lines) {
    auto P = build_projective(lines);
    IcosahedralCensus c;
    c.vertices = P.vertex_count();
    c.faces = P.face_sizes();
    auto rep = zone_report(P);
    for (const auto& v : rep.vertices) {
        ++c.vertex_types[v.sizes];
        ++c.complexity_by_type[v.sizes][v.complexity];
    }
    c.min_vertex_complexity = rep.min_vertex_complexity;
    return c;
}

/// The 10-line tight example, accepted only after the engine verifies its
/// census (45 vertices, f3=30 f5=6 f6=10, 30 x {3,3,5,6} with C(v)=5,
/// 15 x {3,3,6,6} with C(v)=6, C(L)=5).
inline LineSet<ExactScalar> icosahedral_example() {
    auto lines = icosahedral_lines();
    if (auto v = check_general_position(lines))
        throw VerificationMismatch("icosahedral lines not in general position: " + v->describe(), {});
    auto c = census_of(lines);
    if (!c.matches_expected()) throw VerificationMismatch("icosahedral census mismatch: " + c.describe(), c);
    return lines;
}

}  // namespace zonecx

#endif  // ZONECX_GENERATORS_HPP
