#ifndef ZONECX_SEARCH_HPP
#define ZONECX_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zonecx/analysis.hpp"
#include "zonecx/document.hpp"
#include "zonecx/generators.hpp"
#include "zonecx/zones.hpp"

namespace zonecx {

struct SearchOptions {
    int n = 10;
    int trials = 10;
    std::uint64_t seed = 1;
    int bound = 50;
    int climb_steps = 0;               // hill-climbing moves per trial
    bool include_icosahedral = false;  // evaluate the 10-line example first (n = 10 only)
    bool timing = false;               // record wall time (makes output nondeterministic)
};

struct SearchRecord {
    std::string label;
    std::optional<std::uint64_t> seed;
    int n = 0;
    int min_vertex_complexity = 0;  // C(L)
    FaceSizeHistogram f_vector;     // projective
    bool best_known = false;        // C(L) >= every earlier record
    std::vector<int> line_complexities;
    std::optional<double> runtime_ms;

    /// C(l) / (n - 1) per line.
    std::vector<Rational> line_ratios() const {
        std::vector<Rational> r;
        for (int c : line_complexities) r.push_back(ratio(c, n - 1));
        return r;
    }
};

struct SearchSummary {
    int records = 0;
    int max_min_vertex_complexity = 0;
    std::optional<ArrangementDocument> witness;
};

namespace detail {

struct Evaluation {
    int min_vertex_complexity;
    FaceSizeHistogram f_vector;
    std::vector<int> line_complexities;
};

template <ExactRing S>
Evaluation evaluate(const LineSet<S>& lines) {
    auto P = build_projective(lines);
    auto rep = zone_report(P);
    require_identities(rep);
    Evaluation e{rep.min_vertex_complexity, P.face_sizes(), {}};
    for (const auto& l : rep.lines) e.line_complexities.push_back(l.zone.complexity);
    return e;
}

template <class Lines>
Evaluation evaluate_best(const Lines& lines) {
    return with_best_ring(lines, [](const auto& ls) { return evaluate(ls); });
}

}  // namespace detail

/// Random search for arrangements with large C(L), optionally improved by
/// hill climbing: nudge one coefficient by +-1 and keep the move if the set
/// stays simple and C(L) does not drop. Records are streamed in trial order.
/// A record with C(L) > 5 is streamed and then raised as TheoremViolation.
inline SearchSummary search_max_cl(const SearchOptions& opt, const std::function<void(const SearchRecord&)>& sink) {
    if (opt.n < 4) throw std::invalid_argument("search needs n >= 4");
    SearchSummary summary;
    auto emit = [&](SearchRecord rec, const ArrangementDocument& doc) {
        rec.best_known = summary.records == 0 || rec.min_vertex_complexity >= summary.max_min_vertex_complexity;
        if (summary.records == 0 || rec.min_vertex_complexity > summary.max_min_vertex_complexity) {
            summary.max_min_vertex_complexity = rec.min_vertex_complexity;
            summary.witness = doc;
        }
        ++summary.records;
        sink(rec);
        if (rec.min_vertex_complexity > 5)
            throw TheoremViolation("C(L) = " + std::to_string(rec.min_vertex_complexity) + " > 5 for " + rec.label);
    };
    using clock = std::chrono::steady_clock;

    if (opt.include_icosahedral && opt.n == 10) {
        auto t0 = clock::now();
        auto lines = icosahedral_lines();
        auto ev = detail::evaluate_best(lines);
        SearchRecord rec{"icosahedral", std::nullopt, 10, ev.min_vertex_complexity, ev.f_vector, false,
                         ev.line_complexities, std::nullopt};
        if (opt.timing) rec.runtime_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        ArrangementDocument doc;
        doc.ring = Ring::q_sqrt5;
        doc.name = "icosahedral";
        doc.lines = lines;
        emit(rec, doc);
    }

    for (int t = 0; t < opt.trials; ++t) {
        auto t0 = clock::now();
        const std::uint64_t trial_seed = opt.seed + static_cast<std::uint64_t>(t);
        auto lines = random_arrangement(opt.n, opt.bound, trial_seed);
        auto ev = detail::evaluate_best(lines);
        std::mt19937_64 rng(trial_seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<int> pick_line(0, opt.n - 1), pick_coeff(0, 2), pick_dir(0, 1);
        for (int s = 0; s < opt.climb_steps; ++s) {
            auto cand = lines;
            auto& c = cand[static_cast<std::size_t>(pick_line(rng))].coeffs[static_cast<std::size_t>(pick_coeff(rng))];
            c = c + CheckedInt(pick_dir(rng) == 0 ? -1 : 1);
            if (check_general_position(cand)) continue;
            auto ce = detail::evaluate_best(cand);
            if (ce.min_vertex_complexity >= ev.min_vertex_complexity) {
                lines = std::move(cand);
                ev = std::move(ce);
            }
        }
        SearchRecord rec{"trial " + std::to_string(t), trial_seed, opt.n, ev.min_vertex_complexity, ev.f_vector,
                         false, ev.line_complexities, std::nullopt};
        if (opt.timing) rec.runtime_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        emit(rec, make_document(lines, "search n=" + std::to_string(opt.n), trial_seed));
    }
    return summary;
}

struct Question1Stats {
    int n = 0;
    int trials = 0;
    std::vector<Rational> ratios;          // (1/n) sum_l C(l) / (n - 1), per arrangement
    std::map<Rational, int> histogram;
    Rational mean = 0;
    Rational max = 0;
    Rational max_line_ratio = 0;           // largest C(l) / (n - 1) seen
    int zone_bound_violations = 0;         // lines with C(l) > 5.5 (n - 1) - 1
};

/// Empirical distribution of the average line-zone ratio.
inline Question1Stats question1_stats(int n, int trials, std::uint64_t seed, int bound = 50) {
    if (n < 4) throw std::invalid_argument("stats need n >= 4");
    Question1Stats st;
    st.n = n;
    st.trials = trials;
    for (int t = 0; t < trials; ++t) {
        auto lines = random_arrangement(n, bound, seed + static_cast<std::uint64_t>(t));
        auto ev = detail::evaluate_best(lines);
        long total = 0;
        for (int c : ev.line_complexities) {
            total += c;
            Rational lr = ratio(c, n - 1);
            if (lr > st.max_line_ratio) st.max_line_ratio = lr;
            if (2 * c > 11 * (n - 1) - 2) ++st.zone_bound_violations;
        }
        Rational r = ratio(total, static_cast<long>(n) * (n - 1));
        st.ratios.push_back(r);
        ++st.histogram[r];
        st.mean += r;
        if (t == 0 || r > st.max) st.max = r;
    }
    if (trials > 0) st.mean /= trials;
    return st;
}

}  // namespace zonecx

#endif  // ZONECX_SEARCH_HPP
