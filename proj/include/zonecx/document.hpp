#ifndef ZONECX_DOCUMENT_HPP
#define ZONECX_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "zonecx/errors.hpp"
#include "zonecx/exact_scalar.hpp"
#include "zonecx/projective.hpp"

namespace zonecx {

enum class Ring { rational, q_sqrt5 };

inline const char* ring_tag(Ring r) { return r == Ring::rational ? "rational" : "q-sqrt5"; }

/// A line set as exchanged on disk: JSON with string-encoded exact numbers.
///
///     {"ring": "rational", "name": "...", "seed": 1, "notes": "...",
///      "lines": [["1/1", "0/1", "-2/3"], ...]}
///
/// In the q-sqrt5 ring each coefficient is {"a": "p/q", "b": "r/s"} for
/// a + b*sqrt5.
struct ArrangementDocument {
    Ring ring = Ring::rational;
    LineSet<ExactScalar> lines;
    std::optional<std::string> name;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> notes;
};

class DocumentError : public FormatError {
public:
    enum class Kind { malformed_document, malformed_number, wrong_ring };

    DocumentError(Kind kind, std::optional<std::size_t> line, const std::string& what)
        : FormatError(line ? "line " + std::to_string(*line) + ": " + what : what), kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    std::optional<std::size_t> line() const { return line_; }

private:
    Kind kind_;
    std::optional<std::size_t> line_;
};

namespace detail {

inline ExactScalar parse_coefficient(const nlohmann::ordered_json& j, Ring ring, std::size_t line) {
    using K = DocumentError::Kind;
    auto number = [&](const nlohmann::ordered_json& s) {
        if (!s.is_string()) throw DocumentError(K::malformed_number, line, "coefficient must be a string");
        try {
            return parse_rational(s.get<std::string>());
        } catch (const FormatError& e) {
            throw DocumentError(K::malformed_number, line, e.what());
        }
    };
    if (ring == Ring::rational) {
        if (j.is_object()) throw DocumentError(K::wrong_ring, line, "rational document holds a q-sqrt5 coefficient");
        return ExactScalar(number(j));
    }
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || j.size() != 2)
        throw DocumentError(K::wrong_ring, line, "q-sqrt5 coefficient must be {\"a\": ..., \"b\": ...}");
    return ExactScalar(number(j.at("a")), number(j.at("b")));
}

inline nlohmann::ordered_json format_coefficient(const ExactScalar& x, Ring ring) {
    if (ring == Ring::rational) return format_rational(x.rational_part());
    nlohmann::ordered_json o;
    o["a"] = format_rational(x.rational_part());
    o["b"] = format_rational(x.sqrt5_part());
    return o;
}

}  // namespace detail

/// Parses and validates a document. Malformed input throws DocumentError;
/// a non-simple line set throws DegenerateInput naming the offending indices.
inline ArrangementDocument parse_document(const std::string& text) {
    using K = DocumentError::Kind;
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(K::malformed_document, std::nullopt, e.what());
    }
    if (!j.is_object()) throw DocumentError(K::malformed_document, std::nullopt, "document must be a JSON object");
    ArrangementDocument doc;
    if (!j.contains("ring") || !j["ring"].is_string())
        throw DocumentError(K::malformed_document, std::nullopt, "missing \"ring\"");
    auto tag = j["ring"].get<std::string>();
    if (tag == "rational") doc.ring = Ring::rational;
    else if (tag == "q-sqrt5") doc.ring = Ring::q_sqrt5;
    else throw DocumentError(K::wrong_ring, std::nullopt, "unknown ring '" + tag + "'");

    if (j.contains("name")) {
        if (!j["name"].is_string()) throw DocumentError(K::malformed_document, std::nullopt, "\"name\" must be a string");
        doc.name = j["name"].get<std::string>();
    }
    if (j.contains("notes")) {
        if (!j["notes"].is_string()) throw DocumentError(K::malformed_document, std::nullopt, "\"notes\" must be a string");
        doc.notes = j["notes"].get<std::string>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned())
            throw DocumentError(K::malformed_document, std::nullopt, "\"seed\" must be a nonnegative integer");
        doc.seed = j["seed"].get<std::uint64_t>();
    }
    if (!j.contains("lines") || !j["lines"].is_array())
        throw DocumentError(K::malformed_document, std::nullopt, "missing \"lines\" array");
    const auto& arr = j["lines"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_array() || arr[i].size() != 3)
            throw DocumentError(K::malformed_document, i, "a line must be a triple of coefficients");
        GreatCircleLine<ExactScalar> l;
        for (std::size_t k = 0; k < 3; ++k) l.coeffs[k] = detail::parse_coefficient(arr[i][k], doc.ring, i);
        if (is_zero(l.coeffs)) throw DegenerateInput("line " + std::to_string(i) + ": all coefficients are zero");
        doc.lines.push_back(l);
    }
    if (auto v = check_general_position(doc.lines)) {
        std::string which = v->kind == GeneralPositionViolation::Kind::duplicate ? "duplicate" : "concurrent";
        std::string idx;
        for (auto i : v->indices) idx += (idx.empty() ? "" : ", ") + std::to_string(i);
        throw DegenerateInput("lines " + idx + ": " + which);
    }
    return doc;
}

/// Canonical text: lines in canonical form, fixed key order, two-space indent.
inline std::string serialize_document(const ArrangementDocument& doc) {
    nlohmann::ordered_json j;
    j["ring"] = ring_tag(doc.ring);
    if (doc.name) j["name"] = *doc.name;
    if (doc.seed) j["seed"] = *doc.seed;
    if (doc.notes) j["notes"] = *doc.notes;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& l : doc.lines) {
        auto c = canonicalize(l);
        if (doc.ring == Ring::rational && !(c.coeffs[0].is_rational() && c.coeffs[1].is_rational() &&
                                           c.coeffs[2].is_rational()))
            throw DocumentError(DocumentError::Kind::wrong_ring, std::nullopt,
                                "irrational coefficient in a rational document");
        auto t = nlohmann::ordered_json::array();
        for (const auto& x : c.coeffs) t.push_back(detail::format_coefficient(x, doc.ring));
        arr.push_back(t);
    }
    j["lines"] = arr;
    return j.dump(2) + "\n";
}

/// Document for an integer line set (random generators).
inline ArrangementDocument make_document(const LineSet<CheckedInt>& lines, std::optional<std::string> name = {},
                                         std::optional<std::uint64_t> seed = {}) {
    ArrangementDocument doc;
    doc.ring = Ring::rational;
    doc.name = std::move(name);
    doc.seed = seed;
    for (const auto& l : lines)
        doc.lines.push_back({{ExactScalar(static_cast<long>(l.coeffs[0].value())),
                              ExactScalar(static_cast<long>(l.coeffs[1].value())),
                              ExactScalar(static_cast<long>(l.coeffs[2].value()))}});
    return doc;
}

}  // namespace zonecx

#endif  // ZONECX_DOCUMENT_HPP
