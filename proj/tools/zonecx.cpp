// zonecx: command-line front end for the arrangement engine.
//
// Exit codes: 0 ok, 1 usage / malformed input, 2 degenerate input,
// 3 internal consistency failure, 4 C(L) > 5 observed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zonecx/zonecx.hpp"

namespace {

using namespace zonecx;

enum Exit { ok = 0, usage = 1, degenerate = 2, inconsistent = 3, headline = 4 };

struct Common {
    std::string format = "table";
    std::string out;
};

struct Input {
    std::string doc_path;
    int n = 0;
    int bound = 50;
    std::uint64_t seed = 1;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("input", "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ArrangementDocument load(const Input& in) {
    if (!in.doc_path.empty()) return parse_document(read_file(in.doc_path));
    if (in.n <= 0) throw CLI::ValidationError("input", "give a document path or --n for a random arrangement");
    return make_document(random_arrangement(in.n, in.bound, in.seed), "random n=" + std::to_string(in.n), in.seed);
}

void add_input(CLI::App* cmd, Input& in) {
    cmd->add_option("document", in.doc_path, "arrangement document (JSON)");
    cmd->add_option("--n", in.n, "number of lines of a random arrangement");
    cmd->add_option("--bound", in.bound, "coefficient bound of a random arrangement")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", in.seed, "seed of a random arrangement");
}

void require_n(const ArrangementDocument& doc, int min_n) {
    if (static_cast<int>(doc.lines.size()) < min_n)
        throw CLI::ValidationError("input", "this command needs at least " + std::to_string(min_n) + " lines");
}

std::string hist_str(const FaceSizeHistogram& h) {
    std::string s = "{";
    for (auto [k, c] : h) s += (s.size() > 1 ? ", " : "") + std::to_string(k) + ":" + std::to_string(c);
    return s + "}";
}

int cmd_build(const Common& c, const Input& in) {
    auto doc = load(in);
    require_n(doc, 3);
    Json j = with_best_ring(doc.lines, [](const auto& lines) {
        auto P = build_projective(lines);
        const auto& sp = P.sphere();
        Json r;
        r["n"] = P.line_count();
        r["sphere"] = {{"V", sp.vertex_count()}, {"E", sp.edge_count()}, {"F", sp.face_count()},
                       {"face_sizes", histogram_json(sp.face_sizes())}};
        r["projective"] = {{"V", P.vertex_count()}, {"E", P.edge_count()}, {"F", P.face_count()},
                           {"face_sizes", histogram_json(P.face_sizes())}};
        return r;
    });
    Output out(c.out);
    if (c.format == "json") {
        out.os() << j.dump(2) << "\n";
    } else {
        out.os() << "n = " << j["n"] << "\n"
                 << "sphere:     V=" << j["sphere"]["V"] << " E=" << j["sphere"]["E"] << " F=" << j["sphere"]["F"]
                 << " sizes=" << j["sphere"]["face_sizes"].dump() << "\n"
                 << "projective: V=" << j["projective"]["V"] << " E=" << j["projective"]["E"]
                 << " F=" << j["projective"]["F"] << " sizes=" << j["projective"]["face_sizes"].dump() << "\n";
    }
    return ok;
}

ZoneReport report_for(const ArrangementDocument& doc) {
    return with_best_ring(doc.lines, [](const auto& lines) { return zone_report(build_projective(lines)); });
}

int cmd_zones(const Common& c, const Input& in) {
    auto doc = load(in);
    require_n(doc, 4);
    auto rep = report_for(doc);
    Output out(c.out);
    if (c.format == "json") {
        out.os() << zone_report_json(rep).dump(2) << "\n";
    } else {
        out.os() << "line  C(l)  C(l)/(n-1)  r(l)\n";
        for (const auto& l : rep.lines)
            out.os() << l.line << "  " << l.zone.complexity << "  " << format_rational(ratio(l.zone.complexity, rep.n - 1))
                     << "  " << l.min_vertex_complexity << "\n";
        out.os() << "C(L) = " << rep.min_vertex_complexity << "\n";
        for (const auto& r : rep.identities) out.os() << (r.ok ? "ok    " : "FAIL  ") << r.name << "\n";
    }
    return rep.identities_ok() ? ok : inconsistent;
}

int cmd_vertex_zones(const Common& c, const Input& in) {
    auto doc = load(in);
    require_n(doc, 4);
    auto rep = report_for(doc);
    Output out(c.out);
    if (c.format == "json") {
        Json j;
        j["n"] = rep.n;
        j["C_L"] = rep.min_vertex_complexity;
        j["vertices"] = vertex_zones_json(rep);
        out.os() << j.dump(2) << "\n";
    } else {
        out.os() << "vertex  lines  K_v  C(v)\n";
        for (const auto& v : rep.vertices)
            out.os() << v.vertex << "  " << v.lines[0] << "," << v.lines[1] << "  " << to_string(v.sizes) << "  "
                     << v.complexity << "\n";
        out.os() << "C(L) = " << rep.min_vertex_complexity << "\n";
    }
    return ok;
}

int cmd_discharge(const Common& c, const Input& in) {
    auto doc = load(in);
    require_n(doc, 4);
    auto d = with_best_ring(doc.lines, [](const auto& lines) { return run_discharging(build_sphere(lines)); });
    Json j = discharge_json(d);
    Output out(c.out);
    if (c.format == "json") {
        out.os() << j.dump(2) << "\n";
    } else {
        out.os() << "total w1=" << j["totals"]["w1"].get<std::string>() << " w2=" << j["totals"]["w2"].get<std::string>()
                 << " w3=" << j["totals"]["w3"].get<std::string>()
                 << " (Euler count " << j["totals"]["euler"].get<std::string>() << ")\n"
                 << "negative w2 vertices: " << j["negative_w2_vertices"] << ", donors: " << d.donors << "\n"
                 << "equivalence checked on " << d.classes.equivalence_checked << " vertices, violations "
                 << d.classes.equivalence_violations << "\n"
                 << "witnesses (C(v) <= 5): " << d.classes.witnesses << ", negative among them "
                 << d.classes.negative_outside_hypothesis << "\n"
                 << "min w2 = " << format_rational(d.w2.min_vertex_charge()) << ", min w3 = " << format_rational(d.min_w3)
                 << "\n";
    }
    if (!d.conserved() || !d.faces_emptied || d.classes.equivalence_violations > 0) return inconsistent;
    return ok;
}

int cmd_lemma(const Common& c, int cap) {
    auto list = enumerate_lemma_multisets(cap);
    Output out(c.out);
    if (c.format == "json") {
        out.os() << lemma_json(list, cap).dump(2) << "\n";
    } else {
        for (const auto& m : list) out.os() << to_string(m.sizes) << "  " << format_rational(m.deficiency) << "\n";
    }
    return ok;
}

int cmd_verify(const Common& c, const Input& in) {
    auto doc = load(in);
    require_n(doc, 4);
    auto a = analyze_exact(doc.lines);
    const auto n = static_cast<std::size_t>(a.n);
    bool structural = a.sphere_vertices == n * (n - 1) && a.sphere_edges == 2 * n * (n - 1) &&
                      a.sphere_faces == n * (n - 1) + 2 && 2 * a.projective_vertices == a.sphere_vertices &&
                      2 * a.projective_faces == a.sphere_faces && !a.adjacent_triangles;
    Json j;
    j["counts"] = counts_json(a);
    j["structural_ok"] = structural;
    j["identities"] = identities_json(a.zones.identities);
    j["zone_theorem_ok"] = a.zones.zone_theorem_ok;
    j["line_minimum_ok"] = a.zones.line_minimum_ok;
    j["C_L"] = a.zones.min_vertex_complexity;
    j["theorem_ok"] = a.zones.theorem_ok;
    j["discharging"] = discharge_json(a.discharge);
    Output out(c.out);
    if (c.format == "json") {
        out.os() << j.dump(2) << "\n";
    } else {
        auto line = [&](bool good, const std::string& what) { out.os() << (good ? "ok    " : "FAIL  ") << what << "\n"; };
        line(structural, "structure (Euler counts, degree 4, no adjacent triangles)");
        for (const auto& r : a.zones.identities) line(r.ok, r.name + ": " + r.formula);
        line(a.zones.zone_theorem_ok, "C(l) <= 5.5(n-1) - 1 on every line");
        line(a.zones.line_minimum_ok, "r(l) <= 7 on every line");
        line(a.discharge.conserved(), "charge total -6 at w1, w2, w3");
        line(a.discharge.classes.equivalence_violations == 0, "negative w2 <=> listed multiset (sum >= 18)");
        line(a.zones.theorem_ok, "C(L) = " + std::to_string(a.zones.min_vertex_complexity) + " <= 5");
    }
    if (!a.zones.theorem_ok) return headline;
    if (!structural || !a.zones.identities_ok() || !a.discharge.conserved() ||
        a.discharge.classes.equivalence_violations > 0 || !a.zones.zone_theorem_ok || !a.zones.line_minimum_ok)
        return inconsistent;
    return ok;
}

int cmd_search(const Common& c, const SearchOptions& opt) {
    Output out(c.out);
    auto summary = search_max_cl(opt, [&](const SearchRecord& r) {
        if (c.format == "json") {
            out.os() << search_record_json(r).dump() << "\n";
        } else {
            out.os() << r.label << "  C(L)=" << r.min_vertex_complexity << "  f=" << hist_str(r.f_vector)
                     << (r.best_known ? "  *" : "");
            if (r.runtime_ms) out.os() << "  " << *r.runtime_ms << " ms";
            out.os() << "\n";
        }
    });
    if (c.format == "json") {
        Json s;
        s["summary"] = {{"records", summary.records}, {"max_C_L", summary.max_min_vertex_complexity}};
        if (summary.witness) s["summary"]["witness"] = Json::parse(serialize_document(*summary.witness));
        out.os() << s.dump() << "\n";
    } else {
        out.os() << "max C(L) = " << summary.max_min_vertex_complexity << " over " << summary.records << " records\n";
        if (summary.witness) out.os() << "witness: " << Json::parse(serialize_document(*summary.witness)).dump() << "\n";
    }
    return ok;
}

int cmd_stats(const Common& c, int n, int trials, std::uint64_t seed, int bound) {
    auto st = question1_stats(n, trials, seed, bound);
    Output out(c.out);
    if (c.format == "json") {
        out.os() << question1_json(st).dump(2) << "\n";
    } else {
        out.os() << "n = " << n << ", trials = " << trials << "\n"
                 << "mean (1/n) sum C(l)/(n-1) = " << format_rational(st.mean) << " ~ " << st.mean.get_d() << "\n"
                 << "max = " << format_rational(st.max) << ", max single-line ratio = "
                 << format_rational(st.max_line_ratio) << "\n"
                 << "lines above 5.5(n-1) - 1: " << st.zone_bound_violations << "\n";
        for (const auto& [q, k] : st.histogram) out.os() << "  " << format_rational(q) << "  " << k << "\n";
    }
    return st.zone_bound_violations == 0 ? ok : inconsistent;
}

int cmd_example(const Common& c, const std::string& which, const std::string& doc_out) {
    if (which != "icosahedral") throw CLI::ValidationError("example", "unknown example '" + which + "'");
    LineSet<ExactScalar> lines;
    try {
        lines = icosahedral_example();
    } catch (const VerificationMismatch& e) {
        std::cerr << e.what() << "\n";
        return inconsistent;
    }
    auto census = census_of(lines);
    ArrangementDocument doc;
    doc.ring = Ring::q_sqrt5;
    doc.name = "icosahedral";
    doc.notes = "poles at the 10 face axes of the regular icosahedron";
    doc.lines = lines;
    if (!doc_out.empty()) {
        std::ofstream f(doc_out);
        f << serialize_document(doc);
    }
    Output out(c.out);
    if (c.format == "json") {
        Json j;
        j["vertices"] = census.vertices;
        j["face_sizes"] = histogram_json(census.faces);
        Json types = Json::array();
        for (const auto& [k, cnt] : census.vertex_types) {
            Json cs = Json::object();
            for (auto [cv, m] : census.complexity_by_type.at(k)) cs[std::to_string(cv)] = m;
            types.push_back({{"K", multiset_json(k)}, {"count", cnt}, {"C", cs}});
        }
        j["vertex_types"] = types;
        j["C_L"] = census.min_vertex_complexity;
        j["verified"] = census.matches_expected();
        j["document"] = Json::parse(serialize_document(doc));
        out.os() << j.dump(2) << "\n";
    } else {
        out.os() << "vertices: " << census.vertices << "\n"
                 << "face sizes: " << hist_str(census.faces) << "\n";
        for (const auto& [k, cnt] : census.vertex_types) {
            out.os() << "K_v = " << to_string(k) << ": " << cnt << " vertices, C(v) =";
            for (auto [cv, m] : census.complexity_by_type.at(k)) out.os() << " " << cv << " (x" << m << ")";
            out.os() << "\n";
        }
        out.os() << "C(L) = " << census.min_vertex_complexity << "\n"
                 << "verified: " << (census.matches_expected() ? "yes" : "no") << "\n";
    }
    return ok;
}

int cmd_render(const Common& c, const Input& in, bool labels, bool no_tint) {
    auto doc = load(in);
    require_n(doc, 2);
    std::string svg = with_best_ring(doc.lines, [&](const auto& lines) {
        auto P = build_projective(lines);
        SvgOptions opt;
        opt.tint_faces = !no_tint;
        if (labels && P.line_count() >= 4) {
            std::vector<int> cs;
            for (Id v = 0; v < static_cast<Id>(P.vertex_count()); ++v) cs.push_back(vertex_zone_complexity(P, v));
            opt.vertex_labels = cs;
        }
        return render_svg(P, opt);
    });
    Output out(c.out);
    out.os() << svg;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zonecx: exact zone complexities and discharging for line arrangements"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--out", common.out, "write output to PATH");
    };

    Input input;
    auto* build = app.add_subcommand("build", "build the arrangement and print its counts");
    auto* zones = app.add_subcommand("zones", "line zone complexities and identity checks");
    auto* vzones = app.add_subcommand("vertex-zones", "K_v and C(v) for every vertex");
    auto* discharge = app.add_subcommand("discharge", "run the three discharging steps");
    auto* verify = app.add_subcommand("verify", "all identities, structural invariants and C(L) <= 5");
    auto* render = app.add_subcommand("render", "SVG drawing of the projective arrangement");
    for (auto* cmd : {build, zones, vzones, discharge, verify, render}) {
        add_input(cmd, input);
        add_common(cmd);
    }
    bool labels = false, no_tint = false;
    render->add_flag("--labels", labels, "label vertices with C(v)");
    render->add_flag("--no-tint", no_tint, "do not tint faces by size");

    int cap = 12;
    auto* lemma = app.add_subcommand("lemma", "enumerate 4-multisets with deficiency < 1");
    lemma->add_option("--cap", cap, "largest face size enumerated")->check(CLI::Range(12, 1000));
    add_common(lemma);

    SearchOptions sopt;
    auto* search = app.add_subcommand("search", "random search for large C(L)");
    search->add_option("--n", sopt.n, "number of lines")->required();
    search->add_option("--trials", sopt.trials, "number of random arrangements");
    search->add_option("--seed", sopt.seed, "first seed");
    search->add_option("--bound", sopt.bound, "coefficient bound")->check(CLI::PositiveNumber);
    search->add_option("--climb", sopt.climb_steps, "hill-climbing moves per trial");
    search->add_flag("--include-icosahedral", sopt.include_icosahedral, "evaluate the icosahedral example first");
    search->add_flag("--timing", sopt.timing, "record wall time per trial");
    add_common(search);

    int qn = 10, qtrials = 10, qbound = 50;
    std::uint64_t qseed = 1;
    auto* stats = app.add_subcommand("stats-q1", "distribution of the average line zone ratio");
    stats->add_option("--n", qn, "number of lines")->required();
    stats->add_option("--trials", qtrials, "number of random arrangements");
    stats->add_option("--seed", qseed, "first seed");
    stats->add_option("--bound", qbound, "coefficient bound")->check(CLI::PositiveNumber);
    add_common(stats);

    std::string which, doc_out;
    auto* example = app.add_subcommand("example", "reproduce a named construction");
    example->add_option("name", which, "construction name (icosahedral)")->required();
    example->add_option("--document", doc_out, "also write the verified document to PATH");
    add_common(example);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*build) return cmd_build(common, input);
        if (*zones) return cmd_zones(common, input);
        if (*vzones) return cmd_vertex_zones(common, input);
        if (*discharge) return cmd_discharge(common, input);
        if (*verify) return cmd_verify(common, input);
        if (*render) return cmd_render(common, input, labels, no_tint);
        if (*lemma) return cmd_lemma(common, cap);
        if (*search) return cmd_search(common, sopt);
        if (*stats) return cmd_stats(common, qn, qtrials, qseed, qbound);
        if (*example) return cmd_example(common, which, doc_out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return degenerate;
    } catch (const GenerationFailure& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return degenerate;
    } catch (const FormatError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return usage;
    } catch (const ConsistencyFailure& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return inconsistent;
    } catch (const TheoremViolation& e) {
        std::cerr << "C(L) bound violated: " << e.what() << "\n";
        return headline;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
