#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace zonecx;

namespace {

/// deficiency = 4 - 3 sum 1/k, so deficiency < 1 iff sum 1/k > 1.
std::vector<ZoneMultiset> lemma_oracle(int cap) {
    std::vector<ZoneMultiset> out;
    for (int a = 3; a <= cap; ++a)
        for (int b = 3; b <= cap; ++b)
            for (int c = 3; c <= cap; ++c)
                for (int d = 3; d <= cap; ++d) {
                    if (!(a <= b && b <= c && c <= d)) continue;
                    if ((a == 3) + (b == 3) + (c == 3) + (d == 3) > 2 || a + b + c + d < 18) continue;
                    Rational s = ratio(1, a) + ratio(1, b) + ratio(1, c) + ratio(1, d);
                    if (s > 1) out.push_back({a, b, c, d});
                }
    return out;
}

Rational w2_of(const ZoneMultiset& k) {
    Rational w = -1;
    for (int x : k) w += ratio(x - 3, x);
    return w;
}

}  // namespace

TEST(NegativeMultisets, Enumeration) {
    const std::vector<ZoneMultiset> expected{{3, 3, 4, 8}, {3, 3, 4, 9}, {3, 3, 4, 10}, {3, 3, 4, 11}, {3, 3, 5, 7}};
    for (int cap : {12, 13, 30}) {
        auto list = enumerate_lemma_multisets(cap);
        std::vector<ZoneMultiset> got;
        for (const auto& m : list) {
            got.push_back(m.sizes);
            EXPECT_LT(m.deficiency, 1);
            EXPECT_EQ(m.deficiency, deficiency(m.sizes));
        }
        EXPECT_EQ(got, expected) << "cap " << cap;
    }
    EXPECT_EQ(lemma_oracle(24), expected);
    EXPECT_EQ(negative_multisets(), expected);
    EXPECT_THROW(enumerate_lemma_multisets(11), std::invalid_argument);
}

TEST(Charges, FaceShareValues) {
    EXPECT_EQ(face_share(3), 0);
    EXPECT_EQ(face_share(4), ratio(1, 4));
    EXPECT_EQ(face_share(6), ratio(1, 2));
    EXPECT_EQ(w2_of({3, 3, 4, 8}), ratio(-1, 8));
    EXPECT_EQ(w2_of({3, 3, 5, 7}), ratio(-1, 35));
    EXPECT_EQ(w2_of({3, 3, 6, 6}), 0);
    EXPECT_EQ(w2_of({3, 3, 5, 6}), ratio(-1, 10));
    EXPECT_EQ(w2_of({3, 4, 4, 7}), ratio(1, 14));
    for (const auto& k : negative_multisets()) EXPECT_EQ(deficiency(k) - 1, w2_of(k));
}

TEST(Charges, SmallTotals) {
    auto A = build_sphere(LineSet<CheckedInt>{{{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}}, {{1, 1, 1}}});
    auto w1 = initial_charges(A);
    Rational faces = 0;
    for (const auto& q : w1.face_charge) faces += q;
    EXPECT_EQ(faces, 6);
    EXPECT_EQ(w1.total(), -6);
    auto r = run_discharging(A);
    EXPECT_TRUE(r.conserved());
    EXPECT_TRUE(r.faces_emptied);
}

TEST(Charges, W2MatchesCornerOracle) {
    for (int n = 4; n <= 10; ++n)
        for (const auto& ls : oracle::corpus(n, 6, 3)) {
            auto A = build_sphere(ls);
            auto sizes = oracle::corner_counts(ls);
            auto w2 = discharge_faces(initial_charges(A), A);
            for (Id v = 0; v < static_cast<Id>(A.vertex_count()); ++v) {
                const auto& vr = A.vertices()[static_cast<std::size_t>(v)];
                std::string base;
                for (int k = 0; k < n; ++k) {
                    int o = orient(vr.point, ls[static_cast<std::size_t>(k)]);
                    base += o > 0 ? '+' : o < 0 ? '-' : '?';
                }
                Rational expected = -1;
                for (char si : {'+', '-'})
                    for (char sj : {'+', '-'}) {
                        std::string s = base;
                        s[static_cast<std::size_t>(vr.lines[0])] = si;
                        s[static_cast<std::size_t>(vr.lines[1])] = sj;
                        expected += ratio(sizes.at(s) - 3, sizes.at(s));
                    }
                ASSERT_EQ(w2.vertex_charge[static_cast<std::size_t>(v)], expected);
            }
        }
}

TEST(Charges, ConservationAndSymmetry) {
    for (int n = 4; n <= 12; ++n)
        for (const auto& ls : oracle::corpus(n, 10, 21)) {
            auto A = build_sphere(ls);
            auto r = run_discharging(A);
            ASSERT_TRUE(r.conserved());
            ASSERT_TRUE(r.faces_emptied);
            ASSERT_EQ(r.classes.equivalence_violations, 0);
            for (Id v = 0; v < static_cast<Id>(A.vertex_count()); ++v) {
                Id a = A.vertices()[static_cast<std::size_t>(v)].antipode;
                ASSERT_EQ(r.w2.vertex_charge[static_cast<std::size_t>(v)], r.w2.vertex_charge[static_cast<std::size_t>(a)]);
                ASSERT_EQ(r.w3.vertex_charge[static_cast<std::size_t>(v)], r.w3.vertex_charge[static_cast<std::size_t>(a)]);
                if (r.w2.vertex_charge[static_cast<std::size_t>(v)] >= 0) {
                    auto vm = v_minus(r.w2, A, v);
                    for (Id u : vm) ASSERT_LT(r.w2.vertex_charge[static_cast<std::size_t>(u)], 0);
                    // donors never go negative
                    ASSERT_GE(r.w3.vertex_charge[static_cast<std::size_t>(v)], 0);
                } else {
                    ASSERT_THROW(v_minus(r.w2, A, v), std::invalid_argument);
                }
            }
        }
}

TEST(Charges, StageChecks) {
    auto A = build_sphere(oracle::corpus(5, 1)[0]);
    auto w1 = initial_charges(A);
    EXPECT_THROW(discharge_vertices(w1, A), std::invalid_argument);
    auto w2 = discharge_faces(w1, A);
    EXPECT_THROW(discharge_faces(w2, A), std::invalid_argument);
    EXPECT_EQ(to_string(discharge_vertices(w2, A).stage), std::string("w3"));
}

TEST(Charges, Icosahedral) {
    auto A = build_sphere(icosahedral_lines());
    auto w1 = initial_charges(A);
    Rational faces = 0;
    for (const auto& q : w1.face_charge) faces += q;
    EXPECT_EQ(faces, 84);
    auto r = run_discharging(A);
    EXPECT_TRUE(r.conserved());
    EXPECT_EQ(r.min_w3, ratio(-1, 10));
    int donors = 0;
    for (Id v = 0; v < static_cast<Id>(A.vertex_count()); ++v) {
        auto k = vertex_zone(A, v);
        const auto& w2v = r.w2.vertex_charge[static_cast<std::size_t>(v)];
        if (k == ZoneMultiset{3, 3, 6, 6}) {
            EXPECT_EQ(w2v, 0);
            EXPECT_TRUE(quad_opposites(A, v).empty());
            auto vm = v_minus(r.w2, A, v);
            std::set<Id> nbrs;
            for (Id h : A.outgoing(v)) nbrs.insert(A.destination(h));
            for (Id u : vm) EXPECT_TRUE(nbrs.count(u));
            donors += !vm.empty();
        } else {
            EXPECT_EQ(w2v, ratio(-1, 10));
        }
        EXPECT_EQ(r.w3.vertex_charge[static_cast<std::size_t>(v)], w2v);
    }
    EXPECT_EQ(donors, r.donors);
    EXPECT_EQ(donors, 30);
    // every vertex has sum 17 or 18; the 18s are {3,3,6,6} and not negative
    EXPECT_EQ(r.classes.equivalence_checked, 30);
    EXPECT_EQ(r.classes.equivalence_violations, 0);
    EXPECT_EQ(r.classes.witnesses, 60);
    EXPECT_EQ(r.classes.negative_outside_hypothesis, 60);
}
