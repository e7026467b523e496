#include <fstream>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace zonecx;

namespace {

int count(const std::string& text, const std::string& needle) {
    int c = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++c;
    return c;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(RandomArrangement, Deterministic) {
    auto a = random_arrangement(6, 50, 1), b = random_arrangement(6, 50, 1), c = random_arrangement(6, 50, 2);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    EXPECT_FALSE(check_general_position(a));
    for (const auto& l : a) {
        EXPECT_EQ(canonicalize(l), l);
        for (const auto& x : l.coeffs) EXPECT_LE(std::abs(x.value()), 50);
    }
}

TEST(RandomArrangement, GivesUp) {
    EXPECT_THROW(random_arrangement(20, 1, 1), GenerationFailure);
    EXPECT_THROW(random_arrangement(2, 10, 1), std::invalid_argument);
    EXPECT_THROW(random_arrangement(5, 0, 1), std::invalid_argument);
}

TEST(Icosahedral, Census) {
    auto lines = icosahedral_example();
    ASSERT_EQ(lines.size(), 10u);
    EXPECT_FALSE(check_general_position(lines));
    auto c = census_of(lines);
    EXPECT_EQ(c.vertices, 45u);
    EXPECT_EQ(c.faces, (FaceSizeHistogram{{3, 30}, {5, 6}, {6, 10}}));
    EXPECT_EQ(c.vertex_types.at({3, 3, 5, 6}), 30);
    EXPECT_EQ(c.vertex_types.at({3, 3, 6, 6}), 15);
    EXPECT_EQ(c.min_vertex_complexity, 5);
    EXPECT_TRUE(c.matches_expected());
    // poles really are the face axes: each line makes the same angle with its
    // nearest neighbours, i.e. every pole has equal |c.d|^2 / |c|^2 |d|^2
    // with exactly three others
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::map<double, int> cosines;
        for (std::size_t j = 0; j < lines.size(); ++j) {
            if (i == j) continue;
            auto d = dot(lines[i].coeffs, lines[j].coeffs);
            double c2 = to_double(d * d) / (to_double(dot(lines[i].coeffs, lines[i].coeffs)) *
                                            to_double(dot(lines[j].coeffs, lines[j].coeffs)));
            ++cosines[std::round(c2 * 1e9) / 1e9];
        }
        EXPECT_EQ(cosines.size(), 2u);
        for (auto [c2, m] : cosines) EXPECT_TRUE(m == 3 || m == 6);
    }
}

TEST(Documents, RoundTrip) {
    auto doc = make_document(random_arrangement(7, 30, 5), "seven", 5);
    auto text = serialize_document(doc);
    auto back = parse_document(text);
    EXPECT_EQ(back.lines, doc.lines);
    EXPECT_EQ(back.name, doc.name);
    EXPECT_EQ(back.seed, doc.seed);
    EXPECT_EQ(serialize_document(back), text);

    // non-canonical input serializes to the canonical form
    auto raw = parse_document(R"({"ring":"rational","lines":[["-2/4","1","0"],["0","3","6"],["1","1","1"]]})");
    auto canon = parse_document(serialize_document(raw));
    EXPECT_EQ(format_rational(canon.lines[0].coeffs[0].rational_part()), "1/1");
    EXPECT_EQ(format_rational(canon.lines[0].coeffs[1].rational_part()), "-2/1");
    EXPECT_EQ(format_rational(canon.lines[1].coeffs[2].rational_part()), "2/1");
    EXPECT_NE(serialize_document(raw).find("\"ring\": \"rational\""), std::string::npos);
}

TEST(Documents, Errors) {
    auto expect_doc_error = [](const std::string& text, DocumentError::Kind kind) {
        try {
            parse_document(text);
            ADD_FAILURE() << "accepted: " << text;
        } catch (const DocumentError& e) {
            EXPECT_EQ(e.kind(), kind) << e.what();
        }
    };
    using K = DocumentError::Kind;
    expect_doc_error("not json", K::malformed_document);
    expect_doc_error(R"({"lines":[]})", K::malformed_document);
    expect_doc_error(R"({"ring":"complex","lines":[]})", K::wrong_ring);
    expect_doc_error(R"({"ring":"rational","lines":[["1","0"]]})", K::malformed_document);
    expect_doc_error(R"({"ring":"rational","lines":[["1","0","1/0"]]})", K::malformed_number);
    expect_doc_error(R"({"ring":"rational","lines":[[1,0,0]]})", K::malformed_number);
    expect_doc_error(R"({"ring":"rational","lines":[[{"a":"1","b":"0"},"0","0"]]})", K::wrong_ring);
    expect_doc_error(R"({"ring":"q-sqrt5","lines":[["1","0","0"]]})", K::wrong_ring);

    try {
        parse_document(R"({"ring":"rational","lines":[["1","0","0"],["0","1","0"],["2","0","0"]]})");
        ADD_FAILURE();
    } catch (const DegenerateInput& e) {
        EXPECT_EQ(std::string(e.what()), "lines 0, 2: duplicate");
    }
    try {
        parse_document(R"({"ring":"rational","lines":[["1","0","0"],["0","1","0"],["0","0","1"],["1","-1","0"]]})");
        ADD_FAILURE();
    } catch (const DegenerateInput& e) {
        EXPECT_EQ(std::string(e.what()), "lines 0, 1, 3: concurrent");
    }
    try {
        DocumentError e(K::malformed_number, 4, "bad");
        EXPECT_EQ(e.line(), 4u);
        throw e;
    } catch (const FormatError& e) {
        EXPECT_EQ(std::string(e.what()), "line 4: bad");
    }
}

TEST(Documents, IcosahedralGolden) {
    auto doc = parse_document(slurp(ZONECX_DATA_DIR "/icosahedral.json"));
    EXPECT_EQ(doc.ring, Ring::q_sqrt5);
    EXPECT_EQ(doc.lines, icosahedral_lines());
    EXPECT_TRUE(census_of(doc.lines).matches_expected());
}

TEST(Svg, Triangle) {
    using L = GreatCircleLine<CheckedInt>;
    auto P = build_projective(LineSet<CheckedInt>{L{{1, 0, 0}}, L{{0, 1, 0}}, L{{0, 0, 1}}});
    SvgOptions plain;
    plain.tint_faces = false;
    auto svg = render_svg(P, plain);
    EXPECT_EQ(count(svg, "class=\"line\""), 3);
    EXPECT_EQ(count(svg, "class=\"vertex\""), 3);
    EXPECT_EQ(count(svg, "class=\"face\""), 0);
    EXPECT_EQ(svg, render_svg(P, plain));
    EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}

TEST(Svg, TintAndLabels) {
    auto P = build_projective(random_arrangement(6, 20, 4));
    SvgOptions opt;
    std::vector<int> labels;
    for (Id v = 0; v < static_cast<Id>(P.vertex_count()); ++v) labels.push_back(vertex_zone_complexity(P, v));
    opt.vertex_labels = labels;
    auto svg = render_svg(P, opt);
    EXPECT_EQ(count(svg, "class=\"label\""), 15);
    EXPECT_GE(count(svg, "class=\"face\""), static_cast<int>(P.face_count()));
    EXPECT_EQ(svg, render_svg(P, opt));
    EXPECT_EQ(svg.find("nan"), std::string::npos);
}

TEST(Svg, IcosahedralTriangles) {
    auto P = build_projective(icosahedral_lines());
    auto svg = render_svg(P);
    EXPECT_GE(count(svg, "data-size=\"3\""), 30);
    EXPECT_EQ(count(svg, "class=\"line\""), 10);
    EXPECT_EQ(count(svg, "class=\"vertex\""), 45);
}

TEST(Search, FiveLinesForced) {
    SearchOptions opt;
    opt.n = 5;
    opt.trials = 8;
    opt.climb_steps = 3;
    std::vector<SearchRecord> recs;
    auto s = search_max_cl(opt, [&](const SearchRecord& r) { recs.push_back(r); });
    ASSERT_EQ(recs.size(), 8u);
    for (const auto& r : recs) {
        EXPECT_EQ(r.min_vertex_complexity, 3);
        EXPECT_FALSE(r.runtime_ms);
        for (const auto& q : r.line_ratios()) EXPECT_EQ(q, ratio(14, 4));
    }
    EXPECT_EQ(s.max_min_vertex_complexity, 3);
    ASSERT_TRUE(s.witness);
    EXPECT_EQ(*recs[3].seed, opt.seed + 3);
}

TEST(Search, IcosahedralSeedAndDeterminism) {
    SearchOptions opt;
    opt.n = 10;
    opt.trials = 3;
    opt.climb_steps = 4;
    opt.include_icosahedral = true;
    std::vector<std::string> first, second;
    auto s = search_max_cl(opt, [&](const SearchRecord& r) { first.push_back(search_record_json(r).dump()); });
    search_max_cl(opt, [&](const SearchRecord& r) { second.push_back(search_record_json(r).dump()); });
    EXPECT_EQ(first, second);
    EXPECT_EQ(s.max_min_vertex_complexity, 5);
    EXPECT_EQ(s.records, 4);
    ASSERT_TRUE(s.witness);
    EXPECT_EQ(s.witness->ring, Ring::q_sqrt5);
    EXPECT_THROW(search_max_cl({3}, [](const SearchRecord&) {}), std::invalid_argument);
}

TEST(Stats, ForcedRatios) {
    auto s5 = question1_stats(5, 6, 1);
    EXPECT_EQ(s5.mean, ratio(7, 2));
    EXPECT_EQ(s5.max, ratio(7, 2));
    EXPECT_EQ(s5.histogram.size(), 1u);
    auto s4 = question1_stats(4, 6, 1);
    EXPECT_EQ(s4.mean, 3);
    for (int n : {6, 9, 12}) {
        auto s = question1_stats(n, 5, 2);
        EXPECT_EQ(s.zone_bound_violations, 0);
        EXPECT_LE(s.max_line_ratio, Rational(11, 2) - ratio(1, n - 1));
        EXPECT_EQ(static_cast<int>(s.ratios.size()), 5);
    }
}

TEST(ReportJson, Shapes) {
    auto a = analyze_exact(to_exact_lines(random_arrangement(6, 20, 8)));
    auto z = zone_report_json(a.zones);
    EXPECT_EQ(z["n"], 6);
    EXPECT_EQ(z["lines"].size(), 6u);
    EXPECT_EQ(z["identities"].size(), 5u);
    auto d = discharge_json(a.discharge);
    EXPECT_EQ(d["totals"]["w3"], "-6/1");
    auto l = lemma_json(enumerate_lemma_multisets(12), 12);
    EXPECT_EQ(l["multisets"].size(), 5u);
    EXPECT_EQ(l["multisets"][4]["deficiency"], "34/35");
}
