#ifndef ZONECX_SVG_HPP
#define ZONECX_SVG_HPP

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zonecx/arrangement.hpp"

namespace zonecx {

struct SvgOptions {
    int size = 600;
    bool tint_faces = true;
    /// C(v) per projective vertex; drawn next to each vertex when present.
    std::optional<std::vector<int>> vertex_labels;
};

namespace detail::svg {

using P3 = std::array<double, 3>;

inline P3 normalized(P3 p) {
    double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    return {p[0] / r, p[1] / r, p[2] / r};
}

template <ExactRing S>
P3 to_unit(const Triple<S>& t) {
    return normalized({to_double(t[0]), to_double(t[1]), to_double(t[2])});
}

inline P3 lerp(const P3& a, const P3& b, double t) {
    return normalized({a[0] * (1 - t) + b[0] * t, a[1] * (1 - t) + b[1] * t, a[2] * (1 - t) + b[2] * t});
}

inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

struct Canvas {
    double center, radius;
    std::string xy(const P3& p) const { return num(center + radius * p[0]) + "," + num(center - radius * p[1]); }
};

inline const char* fill_for(int size) {
    static const std::map<int, const char*> palette{{2, "#f0f0f0"}, {3, "#fde0c5"}, {4, "#fff6bf"},
                                                    {5, "#c9e7c3"}, {6, "#c6dbef"}, {7, "#dadaeb"}};
    auto it = palette.find(size);
    return it == palette.end() ? "#e5e5e5" : it->second;
}

/// Samples along the shorter equator arc from a to b (both with z = 0).
inline void equator_arc(const P3& a, const P3& b, std::vector<P3>& out) {
    double ta = std::atan2(a[1], a[0]), tb = std::atan2(b[1], b[0]);
    double d = tb - ta;
    while (d > M_PI) d -= 2 * M_PI;
    while (d < -M_PI) d += 2 * M_PI;
    for (int s = 1; s < 16; ++s) {
        double t = ta + d * s / 16.0;
        out.push_back({std::cos(t), std::sin(t), 0.0});
    }
}

/// Part of a convex spherical polygon (closed sampled outline) with z >= 0.
inline std::vector<P3> clip_upper(const std::vector<P3>& ring) {
    std::vector<P3> out;
    std::optional<P3> exit_point;
    std::optional<P3> first_entry;
    const std::size_t m = ring.size();
    for (std::size_t i = 0; i < m; ++i) {
        const P3& a = ring[i];
        const P3& b = ring[(i + 1) % m];
        bool ina = a[2] >= 0, inb = b[2] >= 0;
        if (ina) out.push_back(a);
        if (ina != inb) {
            double wa = std::fabs(b[2]), wb = std::fabs(a[2]);
            P3 x = normalized({a[0] * wa + b[0] * wb, a[1] * wa + b[1] * wb, 0.0});
            if (ina) {
                out.push_back(x);
                exit_point = x;
            } else {
                if (exit_point) equator_arc(*exit_point, x, out);
                else first_entry = x;
                out.push_back(x);
                exit_point.reset();
            }
        }
    }
    if (exit_point && first_entry) equator_arc(*exit_point, *first_entry, out);
    return out;
}

}  // namespace detail::svg

/// Deterministic SVG of the projective arrangement in the hemisphere disk
/// model: each point is drawn at its z >= 0 sphere representative projected
/// onto the xy-plane, so every line becomes a half-ellipse across the disk.
template <ExactRing S>
std::string render_svg(const ProjectiveArrangement<S>& A, const SvgOptions& opt = {}) {
    using namespace detail::svg;
    const auto& sp = A.sphere();
    Canvas cv{opt.size / 2.0, opt.size / 2.0 - 20.0};
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(opt.size) +
           "\" height=\"" + std::to_string(opt.size) + "\" viewBox=\"0 0 " + std::to_string(opt.size) + " " +
           std::to_string(opt.size) + "\">\n";
    out += "<circle class=\"boundary\" cx=\"" + num(cv.center) + "\" cy=\"" + num(cv.center) + "\" r=\"" +
           num(cv.radius) + "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";

    if (opt.tint_faces && A.line_count() >= 3) {
        for (Id f = 0; f < static_cast<Id>(A.face_count()); ++f) {
            for (Id sf : A.face_preimages(f)) {
                std::vector<P3> ring;
                auto vs = sp.boundary_vertices(sf);
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    P3 a = to_unit(sp.vertices()[static_cast<std::size_t>(vs[i])].point.coords);
                    P3 b = to_unit(sp.vertices()[static_cast<std::size_t>(vs[(i + 1) % vs.size()])].point.coords);
                    for (int s = 0; s < 16; ++s) ring.push_back(lerp(a, b, s / 16.0));
                }
                auto part = clip_upper(ring);
                if (part.size() < 3) continue;
                std::string d = "M" + cv.xy(part[0]);
                for (std::size_t i = 1; i < part.size(); ++i) d += " L" + cv.xy(part[i]);
                out += "<path class=\"face\" data-size=\"" + std::to_string(A.face_size(f)) + "\" d=\"" + d +
                       " Z\" fill=\"" + fill_for(A.face_size(f)) + "\" stroke=\"none\"/>\n";
            }
        }
    }

    for (int l = 0; l < A.line_count(); ++l) {
        P3 c = to_unit(A.lines()[static_cast<std::size_t>(l)].coeffs);
        std::string d;
        if (std::fabs(c[0]) < 1e-12 && std::fabs(c[1]) < 1e-12) {
            // the equator itself: the disk boundary
            for (int s = 0; s <= 128; ++s) {
                double t = 2 * M_PI * s / 128.0;
                d += (s == 0 ? "M" : " L") + cv.xy({std::cos(t), std::sin(t), 0});
            }
        } else {
            P3 u = normalized({c[1], -c[0], 0.0});  // c x e_z, on the equator
            P3 w{c[1] * u[2] - c[2] * u[1], c[2] * u[0] - c[0] * u[2], c[0] * u[1] - c[1] * u[0]};
            if (w[2] < 0) w = {-w[0], -w[1], -w[2]};
            for (int s = 0; s <= 64; ++s) {
                double t = M_PI * s / 64.0;
                P3 p{u[0] * std::cos(t) + w[0] * std::sin(t), u[1] * std::cos(t) + w[1] * std::sin(t),
                     u[2] * std::cos(t) + w[2] * std::sin(t)};
                d += (s == 0 ? "M" : " L") + cv.xy(p);
            }
        }
        out += "<path class=\"line\" data-line=\"" + std::to_string(l) + "\" d=\"" + d +
               "\" fill=\"none\" stroke=\"#222\" stroke-width=\"1.5\"/>\n";
    }

    for (Id v = 0; v < static_cast<Id>(A.vertex_count()); ++v) {
        const auto& pts = A.vertex_preimages(v);
        P3 p = to_unit(sp.vertices()[static_cast<std::size_t>(pts[0])].point.coords);
        if (p[2] < 0) p = {-p[0], -p[1], -p[2]};
        out += "<circle class=\"vertex\" cx=\"" + num(cv.center + cv.radius * p[0]) + "\" cy=\"" +
               num(cv.center - cv.radius * p[1]) + "\" r=\"3\" fill=\"#000\"/>\n";
        if (opt.vertex_labels && static_cast<std::size_t>(v) < opt.vertex_labels->size())
            out += "<text class=\"label\" x=\"" + num(cv.center + cv.radius * p[0] + 4) + "\" y=\"" +
                   num(cv.center - cv.radius * p[1] - 4) + "\" font-size=\"10\">" +
                   std::to_string((*opt.vertex_labels)[static_cast<std::size_t>(v)]) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace zonecx

#endif  // ZONECX_SVG_HPP
