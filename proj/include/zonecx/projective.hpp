#ifndef ZONECX_PROJECTIVE_HPP
#define ZONECX_PROJECTIVE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zonecx/errors.hpp"
#include "zonecx/exact_scalar.hpp"

namespace zonecx {

template <ExactRing S>
using Triple = std::array<S, 3>;

template <ExactRing S>
S dot(const Triple<S>& u, const Triple<S>& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

template <ExactRing S>
Triple<S> cross(const Triple<S>& u, const Triple<S>& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

/// det(u, v, w) = u . (v x w).
template <ExactRing S>
S det3(const Triple<S>& u, const Triple<S>& v, const Triple<S>& w) {
    return dot(u, cross(v, w));
}

template <ExactRing S>
Triple<S> add(const Triple<S>& u, const Triple<S>& v) {
    return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}

template <ExactRing S>
Triple<S> negate(const Triple<S>& u) {
    return {-u[0], -u[1], -u[2]};
}

template <ExactRing S>
bool is_zero(const Triple<S>& u) {
    return sign(u[0]) == 0 && sign(u[1]) == 0 && sign(u[2]) == 0;
}

/// A point of the unit sphere up to positive scaling. Its projective point is
/// the antipodal class {p, -p}.
template <ExactRing S>
struct HomogeneousPoint {
    Triple<S> coords;

    HomogeneousPoint operator-() const { return {negate(coords)}; }

    /// Representative of the antipodal class with first nonzero coordinate > 0.
    HomogeneousPoint projective_representative() const {
        for (const auto& c : coords) {
            int s = sign(c);
            if (s > 0) return *this;
            if (s < 0) return -*this;
        }
        return *this;
    }

    friend bool operator==(const HomogeneousPoint& p, const HomogeneousPoint& q) {
        return p.coords == q.coords;
    }
};

/// The great circle {p : coeffs . p = 0}, i.e. a projective line.
template <ExactRing S>
struct GreatCircleLine {
    Triple<S> coeffs;

    friend bool operator==(const GreatCircleLine& a, const GreatCircleLine& b) {
        return a.coeffs == b.coeffs;
    }
};

/// True iff the two lines are the same projective line.
template <ExactRing S>
bool same_line(const GreatCircleLine<S>& a, const GreatCircleLine<S>& b) {
    return is_zero(cross(a.coeffs, b.coeffs));
}

/// Crossing point of two distinct great circles. The other crossing is the
/// negation of the result.
template <ExactRing S>
HomogeneousPoint<S> intersect(const GreatCircleLine<S>& l1, const GreatCircleLine<S>& l2) {
    auto p = cross(l1.coeffs, l2.coeffs);
    if (is_zero(p)) throw DegenerateInput("intersect: identical lines");
    return {p};
}

/// Side of the circle: sign(c . p), zero iff p lies on l.
template <ExactRing S>
int orient(const HomogeneousPoint<S>& p, const GreatCircleLine<S>& l) {
    return sign(dot(l.coeffs, p.coords));
}

template <ExactRing S>
using LineSet = std::vector<GreatCircleLine<S>>;

struct GeneralPositionViolation {
    enum class Kind { duplicate, concurrent };
    Kind kind;
    std::vector<std::size_t> indices;  // offending pair or triple, ascending

    std::string describe() const {
        std::string s = kind == Kind::duplicate ? "duplicate lines" : "concurrent lines";
        for (std::size_t i = 0; i < indices.size(); ++i)
            s += (i == 0 ? " " : ", ") + std::to_string(indices[i]);
        return s;
    }
};

/// Empty optional means the set is simple: pairwise distinct, no three
/// concurrent (all 3x3 determinants nonzero).
template <ExactRing S>
std::optional<GeneralPositionViolation> check_general_position(const LineSet<S>& lines) {
    const std::size_t n = lines.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (same_line(lines[i], lines[j]))
                return GeneralPositionViolation{GeneralPositionViolation::Kind::duplicate, {i, j}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto p = cross(lines[i].coeffs, lines[j].coeffs);
            for (std::size_t k = j + 1; k < n; ++k)
                if (sign(dot(lines[k].coeffs, p)) == 0)
                    return GeneralPositionViolation{GeneralPositionViolation::Kind::concurrent,
                                                    {i, j, k}};
        }
    return std::nullopt;
}

/// Would appending `candidate` keep `lines` simple? Assumes `lines` already is.
template <ExactRing S>
bool extends_general_position(const LineSet<S>& lines, const GreatCircleLine<S>& candidate) {
    for (const auto& l : lines)
        if (same_line(l, candidate)) return false;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (sign(det3(lines[i].coeffs, lines[j].coeffs, candidate.coeffs)) == 0) return false;
    return true;
}

template <ExactRing S>
void require_general_position(const LineSet<S>& lines) {
    if (auto v = check_general_position(lines)) throw DegenerateInput(v->describe());
}

/// Canonical form over Q(sqrt5): scale so the first nonzero coefficient is 1,
/// clear all denominators, then divide out the integer content. Two triples
/// describe the same line iff their canonical forms are equal.
inline GreatCircleLine<ExactScalar> canonicalize(const GreatCircleLine<ExactScalar>& line) {
    const auto& c = line.coeffs;
    std::size_t lead = 0;
    while (lead < 3 && c[lead].is_zero()) ++lead;
    if (lead == 3) throw DegenerateInput("line with all-zero coefficients");
    ExactScalar inv = c[lead].inverse();
    Triple<ExactScalar> t{c[0] * inv, c[1] * inv, c[2] * inv};
    mpz_class den = 1;
    for (const auto& x : t) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.rational_part().get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.sqrt5_part().get_den_mpz_t());
    }
    mpz_class content = 0;
    for (auto& x : t) {
        x = x * ExactScalar(Rational(den));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.rational_part().get_num_mpz_t());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.sqrt5_part().get_num_mpz_t());
    }
    for (auto& x : t) x = x.divided_by(Rational(content));
    return {t};
}

/// Integer canonical form: divide by the gcd, first nonzero coefficient > 0.
inline GreatCircleLine<CheckedInt> canonicalize(const GreatCircleLine<CheckedInt>& line) {
    std::int64_t g = 0;
    for (const auto& x : line.coeffs) g = std::gcd(g, x.value());
    if (g == 0) throw DegenerateInput("line with all-zero coefficients");
    std::size_t lead = 0;
    while (line.coeffs[lead].value() == 0) ++lead;
    if (line.coeffs[lead].value() < 0) g = -g;
    Triple<CheckedInt> t;
    for (std::size_t i = 0; i < 3; ++i) t[i] = line.coeffs[i].value() / g;
    return {t};
}

template <ExactRing S>
std::ostream& operator<<(std::ostream& os, const Triple<S>& t) {
    return os << '(' << t[0] << ", " << t[1] << ", " << t[2] << ')';
}

}  // namespace zonecx

#endif  // ZONECX_PROJECTIVE_HPP
