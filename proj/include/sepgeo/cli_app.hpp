#pragma once

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepgeo/division.hpp"
#include "sepgeo/exposure.hpp"
#include "sepgeo/fit.hpp"
#include "sepgeo/graph.hpp"
#include "sepgeo/json_io.hpp"
#include "sepgeo/separator.hpp"

namespace sepgeo::cli {

// Exit codes (stable): 0 ok, 1 parse error, 2 usage, 3 expansion violation,
// 4 oracle breach, 5 validation failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitExpansionViolation = 3;
inline constexpr int kExitOracleBreach = 4;
inline constexpr int kExitValidationFailed = 5;

struct CommonOpts {
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "json";
    int threads = 1;
    bool no_self_check = false;
};

namespace detail {

inline Graph graph_from_flags(const std::string& graph_path, const std::string& grid_spec) {
    if (!graph_path.empty() && !grid_spec.empty())
        throw CLI::ValidationError("--graph and --grid are mutually exclusive");
    if (!graph_path.empty()) return load_graph(graph_path);
    if (!grid_spec.empty()) {
        auto x = grid_spec.find('x');
        if (x == std::string::npos)
            throw CLI::ValidationError("--grid expects ROWSxCOLS, e.g. 16x16");
        int rows = std::stoi(grid_spec.substr(0, x));
        int cols = std::stoi(grid_spec.substr(x + 1));
        return grid_graph(rows, cols);
    }
    throw CLI::ValidationError("one of --graph or --grid is required");
}

inline void emit(const CommonOpts& common, std::ostream& out, const std::string& payload) {
    if (!common.out_path.empty()) {
        std::ofstream f(common.out_path);
        if (!f) throw ParseError("cannot open output file: " + common.out_path);
        f << payload;
    } else {
        out << payload;
    }
}

inline SeparatorOracle oracle_from_name(const std::string& name) {
    if (name == "grid-median") return oracle_grid_median();
    if (name == "bfs-level") return oracle_bfs_level();
    if (name == "cheat") return oracle_cheat();
    if (name.rfind("prs:", 0) == 0) {
        auto comma = name.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--oracle prs wants prs:L,H");
        int l = std::stoi(name.substr(4, comma - 4));
        int h = std::stoi(name.substr(comma + 1));
        return oracle_prs(l, h);
    }
    throw CLI::ValidationError("unknown oracle '" + name +
                               "' (grid-median, bfs-level, prs:L,H, cheat)");
}

/// Defaults for the hereditary size bound when the user does not override:
/// grid-median honors c_sep=1 (the cut is at most sqrt of the piece on
/// rectangles), bfs-level gets c_sep=2 for grid-like inputs.
inline void default_oracle_params(const std::string& name, DivisionParams& p, bool c_sep_set) {
    if (!c_sep_set && name == "bfs-level") p.c_sep = 2.0;
    if (!c_sep_set && name.rfind("prs:", 0) == 0) p.c_sep = 4.0;
}

template <int D>
inline json expose_payload(const std::vector<Segment<D>>& segs, double sigma,
                           std::optional<int> k, bool partition) {
    json j;
    j["sigma"] = sigma;
    j["objects"] = segs.size();
    auto rep = is_exposed(segs, sigma);
    j["exposed"] = rep.exposed;
    if (!rep.exposed)
        j["offender"] = json::array({rep.shadower, rep.shadowed});
    else
        j["offender"] = nullptr;
    if (k) {
        auto krep = is_k_exposed(segs, sigma, *k);
        j["k"] = *k;
        j["k_exposed"] = krep.ok;
        j["shadow_counts"] = krep.shadow_counts;
    }
    if (partition) {
        auto sg = build_shadow_graph(segs, sigma);
        auto parts = degeneracy_partition(sg);
        json parts_json = json::array();
        bool all_exposed = true;
        for (const auto& part : parts) {
            std::vector<Segment<D>> sub;
            for (int idx : part) sub.push_back(segs[static_cast<std::size_t>(idx)]);
            if (!is_exposed(sub, sigma).exposed) all_exposed = false;
            parts_json.push_back(part);
        }
        j["degeneracy"] = sg.degeneracy;
        j["parts"] = parts_json;
        j["parts_exposed"] = all_exposed;
    }
    return j;
}

template <int D>
inline json density_payload(const std::vector<Segment<D>>& segs) {
    auto cert = density_lower_bound(segs);
    json j = to_json(cert);
    j["objects"] = segs.size();
    return j;
}

inline std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        if (!cell.empty()) out.push_back(std::stod(cell));
    }
    return out;
}

inline std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    for (double d : parse_double_list(csv)) out.push_back(static_cast<int>(d));
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Command bodies
// ---------------------------------------------------------------------------

struct SeparateArgs {
    std::string graph_path, grid_spec, expansion;
    int l = 0, h = 0;
};

inline int cmd_separate(const SeparateArgs& a, const CommonOpts& common, std::ostream& out,
                        std::ostream& err) {
    Graph g = detail::graph_from_flags(a.graph_path, a.grid_spec);
    json j;
    int code = kExitOk;
    PrsOutcome outcome;
    if (!a.expansion.empty()) {
        ExpansionParams params;
        if (std::sscanf(a.expansion.c_str(), "c=%lf,k=%d", &params.c, &params.k) != 2)
            throw CLI::ValidationError("--expansion wants c=<real>,k=<int>");
        ExpansionOutcome ex = expansion_separate(g, params);
        outcome = ex.prs;
        j = to_json(ex.prs);
        j["schedule"] = to_json(ex.schedule);
        j["violation"] = ex.violation();
        if (ex.violation()) {
            code = kExitExpansionViolation;
            err << "expansion assumption violated: K_" << ex.schedule.h
                << " appears as a shallow minor, so the declared (c,k) density bound cannot hold\n";
        }
    } else {
        if (a.l < 1 || a.h < 2)
            throw CLI::ValidationError("separate needs --l >= 1 and --h >= 2 (or --expansion)");
        outcome = prs_separate(g, a.l, a.h);
        j = to_json(outcome);
    }

    if (!common.no_self_check) {
        CheckReport check =
            outcome.is_minor()
                ? validate_minor(g, outcome.minor())
                : validate_separator(g, VertexSet::full(g.vertex_count()), outcome.separator());
        if (!check.all_pass()) {
            err << "self-check failed on emitted certificate\n";
            code = kExitValidationFailed;
        }
    }

    if (common.format == "text") {
        std::ostringstream os;
        if (outcome.is_minor())
            os << "minor: K_" << outcome.minor().h() << " depth " << outcome.minor().depth << "\n";
        else
            os << "separator: |S|=" << outcome.separator().S.size()
               << " |A|=" << outcome.separator().A.size()
               << " |B|=" << outcome.separator().B.size() << " bound=" << outcome.meta.bound
               << " ratio=" << outcome.meta.ratio << "\n";
        detail::emit(common, out, os.str());
    } else {
        detail::emit(common, out, j.dump(2) + "\n");
    }
    return code;
}

struct DivideArgs {
    std::string graph_path, grid_spec;
    std::string oracle = "grid-median";
    DivisionParams params;
    double b_override = 0.0;
    bool c_sep_set = false;
};

inline int cmd_divide(DivideArgs a, const CommonOpts& common, std::ostream& out,
                      std::ostream& err) {
    Graph g = detail::graph_from_flags(a.graph_path, a.grid_spec);
    detail::default_oracle_params(a.oracle, a.params, a.c_sep_set);
    if (a.b_override > 0) a.params.b_override = a.b_override;
    SeparatorOracle oracle = detail::oracle_from_name(a.oracle);

    DivisionResult res;
    try {
        res = build_division(g, a.params, oracle);
    } catch (const OracleBreach& breach) {
        err << "oracle breach: " << breach.what() << "\n";
        return kExitOracleBreach;
    }

    CheckReport validation = validate_division(g, res.division, res.schedule.b);
    CheckReport whf = weakly_hyperfinite_check(g, res.division, res.schedule.b);
    int code = kExitOk;
    if (!common.no_self_check && !(validation.all_pass() && whf.all_pass())) {
        err << "self-check failed on emitted division\n";
        code = kExitValidationFailed;
    }

    if (common.format == "text") {
        std::ostringstream os;
        os << "division: b=" << res.schedule.b << " clusters=" << res.division.clusters.size()
           << " total_excess=" << res.division.total_excess << " (allowed "
           << a.params.eps * g.vertex_count() << ") valid="
           << (validation.all_pass() ? "yes" : "no") << "\n";
        detail::emit(common, out, os.str());
    } else {
        json j = to_json(res.division, res.schedule, a.params.eps, res.levels);
        j["validation"] = to_json(validation);
        j["weakly_hyperfinite"] = to_json(whf);
        detail::emit(common, out, j.dump(2) + "\n");
    }
    return code;
}

struct ExposeArgs {
    std::string segments_path;
    double sigma = 0.5;
    int k = -1;
    bool partition = false;
};

inline int cmd_expose(const ExposeArgs& a, const CommonOpts& common, std::ostream& out,
                      std::ostream& /*err*/) {
    SegmentFile f = load_segments(a.segments_path);
    std::optional<int> k;
    if (a.k >= 0) k = a.k;
    json j;
    if (f.dim == 1)
        j = detail::expose_payload(f.segs1, a.sigma, k, a.partition);
    else if (f.dim == 2)
        j = detail::expose_payload(f.segs2, a.sigma, k, a.partition);
    else
        j = detail::expose_payload(f.segs3, a.sigma, k, a.partition);

    if (common.format == "text") {
        std::ostringstream os;
        os << "objects=" << j["objects"].get<std::size_t>()
           << " exposed=" << (j["exposed"].get<bool>() ? "yes" : "no");
        if (!j["exposed"].get<bool>())
            os << " offender=(" << j["offender"][0].get<int>() << " shadows "
               << j["offender"][1].get<int>() << ")";
        os << "\n";
        detail::emit(common, out, os.str());
    } else {
        detail::emit(common, out, j.dump(2) + "\n");
    }
    return kExitOk;
}

struct DensityArgs {
    std::string segments_path;
};

inline int cmd_density(const DensityArgs& a, const CommonOpts& common, std::ostream& out,
                       std::ostream& /*err*/) {
    SegmentFile f = load_segments(a.segments_path);
    json j;
    if (f.dim == 1)
        j = detail::density_payload(f.segs1);
    else if (f.dim == 2)
        j = detail::density_payload(f.segs2);
    else
        j = detail::density_payload(f.segs3);
    if (common.format == "text") {
        std::ostringstream os;
        os << "density_lb=" << j["density_lb"].get<std::size_t>()
           << " radius=" << j["radius"].get<double>() << "\n";
        detail::emit(common, out, os.str());
    } else {
        detail::emit(common, out, j.dump(2) + "\n");
    }
    return kExitOk;
}

struct GenerateArgs {
    std::string family = "exposed-segments";
    std::string grid_spec;
    int n_target = 10;
    double sigma = 0.5;
    int d = 2;
    double len_min = 0.05, len_max = 1.0;
    double cone = 0.0;  // 0: unrestricted
};

inline int cmd_generate(const GenerateArgs& a, const CommonOpts& common, std::ostream& out,
                        std::ostream& /*err*/) {
    std::ostringstream os;
    if (a.family == "grid") {
        Graph g = detail::graph_from_flags("", a.grid_spec.empty() ? "8x8" : a.grid_spec);
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v : g.neighbors(u))
                if (u < v) os << u << " " << v << "\n";
        detail::emit(common, out, os.str());
        return kExitOk;
    }

    GenerateOptions opt;
    opt.n_target = static_cast<std::size_t>(a.n_target);
    opt.sigma = a.sigma;
    opt.seed = common.seed;
    opt.len_min = a.len_min;
    opt.len_max = a.len_max;
    if (a.cone > 0) opt.cone_half_angle = a.cone;
    if (a.family == "point-cover-intervals") {
        opt.through_origin = true;
        auto segs = generate_exposed<1>(opt);
        write_segments(os, segs);
    } else if (a.family == "exposed-intervals") {
        auto segs = generate_exposed<1>(opt);
        write_segments(os, segs);
    } else if (a.family == "exposed-segments") {
        if (a.d == 2) {
            auto segs = generate_exposed<2>(opt);
            write_segments(os, segs);
        } else if (a.d == 3) {
            auto segs = generate_exposed<3>(opt);
            write_segments(os, segs);
        } else if (a.d == 1) {
            auto segs = generate_exposed<1>(opt);
            write_segments(os, segs);
        } else {
            throw CLI::ValidationError("--d must be 1, 2 or 3");
        }
    } else {
        throw CLI::ValidationError("unknown family '" + a.family + "'");
    }
    detail::emit(common, out, os.str());
    return kExitOk;
}

struct BenchArgs {
    std::string family = "grid";
    std::string sizes = "16,32,64,128";
    std::string sigmas = "0.5,0.2,0.1";
    int trials = 3;
    double eps = 0.5;  // threshold small enough that every benched grid splits
    std::string oracle = "grid-median";
};

inline json bench_grid(const BenchArgs& a, const CommonOpts& common) {
    json samples = json::array();
    std::vector<std::pair<double, double>> pts;
    for (int side : detail::parse_int_list(a.sizes)) {
        Graph g = grid_graph(side, side);
        DivisionParams params;
        params.eps = a.eps;
        std::size_t first_sep = 0;
        bool captured = false;
        SeparatorOracle inner = detail::oracle_from_name(a.oracle);
        SeparatorOracle probe = [&](const Graph& piece) {
            SeparatorCertificate cert = inner(piece);
            if (!captured) {
                first_sep = cert.S.size();
                captured = true;
            }
            return cert;
        };
        auto res = build_division(g, params, probe);
        json s{{"n", g.vertex_count()},
               {"separator_size", first_sep},
               {"total_excess", res.division.total_excess},
               {"clusters", res.division.clusters.size()},
               {"b", res.schedule.b}};
        samples.push_back(s);
        if (captured) pts.emplace_back(static_cast<double>(g.vertex_count()),
                                       static_cast<double>(first_sep));
    }
    FitResult fit = loglog_fit(pts);
    json j{{"family", "grid"}, {"seed", common.seed}, {"samples", samples}};
    if (fit.ok)
        j["fit"] = json{{"exponent", fit.exponent},
                        {"intercept", fit.intercept},
                        {"residual_rms", fit.residual_rms},
                        {"points", fit.points}};
    else
        j["fit"] = json{{"insufficient_points", true}};
    return j;
}

/// Mean saturated family size (intervals) or density lower bound (segments)
/// per sigma; trials run concurrently and merge in trial order.
inline json bench_exposure(const BenchArgs& a, const CommonOpts& common, bool intervals) {
    json samples = json::array();
    std::vector<std::pair<double, double>> pts;
    for (double sigma : detail::parse_double_list(a.sigmas)) {
        auto run_trial = [&](int t) -> double {
            GenerateOptions opt;
            opt.sigma = sigma;
            opt.seed = common.seed * 1000003ULL + static_cast<std::uint64_t>(t);
            if (intervals) {
                opt.through_origin = true;
                opt.n_target = 100000;
                opt.max_attempts = 20000;
                opt.len_min = 1e-6;
                auto segs = generate_exposed<1>(opt);
                return static_cast<double>(segs.size());
            }
            opt.n_target = 64;
            opt.max_attempts = 6000;
            opt.len_min = 0.02;
            auto segs = generate_exposed<2>(opt);
            return static_cast<double>(density_lower_bound(segs).density_lb());
        };
        std::vector<double> vals(static_cast<std::size_t>(a.trials));
        if (common.threads > 1) {
            std::vector<std::future<double>> futs;
            for (int t = 0; t < a.trials; ++t)
                futs.push_back(std::async(std::launch::async, run_trial, t));
            for (int t = 0; t < a.trials; ++t) vals[static_cast<std::size_t>(t)] = futs[static_cast<std::size_t>(t)].get();
        } else {
            for (int t = 0; t < a.trials; ++t) vals[static_cast<std::size_t>(t)] = run_trial(t);
        }
        double mean = 0;
        for (double v : vals) mean += v;
        mean /= std::max(1, a.trials);
        samples.push_back(json{{"sigma", sigma}, {"mean", mean}, {"trials", vals}});
        pts.emplace_back(1.0 / sigma, mean);
    }
    FitResult fit = loglog_fit(pts);
    json j{{"family", intervals ? "random-exposed-intervals" : "random-exposed-segments"},
           {"seed", common.seed},
           {"samples", samples}};
    if (fit.ok)
        j["fit"] = json{{"exponent", fit.exponent},
                        {"intercept", fit.intercept},
                        {"residual_rms", fit.residual_rms},
                        {"points", fit.points}};
    else
        j["fit"] = json{{"insufficient_points", true}};
    return j;
}

inline int cmd_bench(const BenchArgs& a, const CommonOpts& common, std::ostream& out,
                     std::ostream& /*err*/) {
    json j;
    if (a.family == "grid")
        j = bench_grid(a, common);
    else if (a.family == "random-exposed-intervals")
        j = bench_exposure(a, common, true);
    else if (a.family == "random-exposed-segments")
        j = bench_exposure(a, common, false);
    else
        throw CLI::ValidationError("unknown bench family '" + a.family + "'");

    if (common.format == "text") {
        std::ostringstream os;
        os << "family=" << j["family"].get<std::string>() << "\n";
        for (const auto& s : j["samples"]) os << "  " << s.dump() << "\n";
        if (j["fit"].contains("exponent"))
            os << "fit exponent=" << j["fit"]["exponent"].get<double>()
               << " residual_rms=" << j["fit"]["residual_rms"].get<double>() << "\n";
        else
            os << "fit: insufficient points\n";
        detail::emit(common, out, os.str());
    } else {
        detail::emit(common, out, j.dump(2) + "\n");
    }
    return kExitOk;
}

struct ValidateArgs {
    std::string graph_path, grid_spec, certificate_path;
};

inline int cmd_validate(const ValidateArgs& a, const CommonOpts& common, std::ostream& out,
                        std::ostream& /*err*/) {
    Graph g = detail::graph_from_flags(a.graph_path, a.grid_spec);
    std::ifstream in(a.certificate_path);
    if (!in) throw ParseError("cannot open certificate file: " + a.certificate_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("bad certificate JSON: " + std::string(e.what()));
    }
    std::string type = j.value("type", "");
    CheckReport report;
    if (type == "separator") {
        report = validate_separator(g, VertexSet::full(g.vertex_count()),
                                    separator_certificate_from_json(j));
    } else if (type == "minor") {
        report = validate_minor(g, minor_certificate_from_json(j));
    } else if (type == "division" || j.contains("clusters")) {
        report = validate_division(g, division_from_json(j, g.vertex_count()),
                                   j.at("b").get<double>());
    } else {
        throw ParseError("certificate JSON lacks a recognizable type");
    }

    if (common.format == "text") {
        std::ostringstream os;
        for (const auto& e : report.entries)
            os << (e.pass ? "PASS " : "FAIL ") << e.name
               << (e.detail.empty() ? "" : "  (" + e.detail + ")") << "\n";
        detail::emit(common, out, os.str());
    } else {
        detail::emit(common, out, to_json(report).dump(2) + "\n");
    }
    return report.all_pass() ? kExitOk : kExitValidationFailed;
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graph separators, divisions, and exposed-segment density"};
    app.require_subcommand(1);
    // --h is a domain flag on `separate`, so help is long-form only
    app.set_help_flag("--help", "print help");

    CommonOpts common;
    app.add_option("--seed", common.seed, "random seed (default 0)");
    app.add_option("--out", common.out_path, "write the result to a file instead of stdout");
    app.add_option("--format", common.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--threads", common.threads, "worker threads for bench trials");
    app.add_flag("--no-self-check", common.no_self_check,
                 "skip re-validating emitted certificates");

    auto add_command = [&app](const std::string& name, const std::string& desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help");
        sub->fallthrough();  // global flags may appear after the subcommand
        return sub;
    };

    SeparateArgs sep;
    auto* c_sep = add_command("separate", "balanced separator or shallow clique minor");
    c_sep->add_option("--graph", sep.graph_path, "edge-list file");
    c_sep->add_option("--grid", sep.grid_spec, "ROWSxCOLS in-process grid");
    c_sep->add_option("--l", sep.l, "locality parameter (>= 1)");
    c_sep->add_option("--h", sep.h, "clique order to exclude (>= 2)");
    c_sep->add_option("--expansion", sep.expansion, "derive l,h from c=<real>,k=<int>");

    DivideArgs div;
    auto* c_div = add_command("divide", "build a division from a separator oracle");
    c_div->add_option("--graph", div.graph_path, "edge-list file");
    c_div->add_option("--grid", div.grid_spec, "ROWSxCOLS in-process grid");
    c_div->add_option("--eps", div.params.eps, "target excess fraction in (0,1)");
    c_div->add_option("--alpha", div.params.alpha, "oracle exponent (default 0.5)");
    c_div->add_option("--beta", div.params.beta, "oracle log exponent (default 0)");
    auto* csep_opt = c_div->add_option("--c-sep", div.params.c_sep, "oracle size constant");
    c_div->add_option("--c-dd", div.params.c_dd, "threshold constant (default 4)");
    c_div->add_option("--b", div.b_override, "explicit piece-size threshold");
    c_div->add_option("--oracle", div.oracle, "grid-median | bfs-level | prs:L,H | cheat");
    c_div->callback([&div, csep_opt] { div.c_sep_set = csep_opt->count() > 0; });

    ExposeArgs exp;
    auto* c_exp = add_command("expose", "check sigma-exposure of a segment file");
    c_exp->add_option("--segments", exp.segments_path, "segment/interval CSV")->required();
    c_exp->add_option("--sigma", exp.sigma, "exposure parameter")->required();
    c_exp->add_option("--k", exp.k, "also check (sigma,k)-exposure");
    c_exp->add_flag("--partition", exp.partition, "emit shadow-graph degeneracy partition");

    DensityArgs den;
    auto* c_den = add_command("density", "candidate-ball density lower bound");
    c_den->add_option("--segments", den.segments_path, "segment/interval CSV")->required();

    GenerateArgs gen;
    auto* c_gen = add_command("generate", "emit test families");
    c_gen->add_option("--family", gen.family,
                      "grid | exposed-segments | exposed-intervals | point-cover-intervals");
    c_gen->add_option("--grid", gen.grid_spec, "ROWSxCOLS (family=grid)");
    c_gen->add_option("--n", gen.n_target, "target object count");
    c_gen->add_option("--sigma", gen.sigma, "exposure parameter");
    c_gen->add_option("--d", gen.d, "dimension for exposed-segments");
    c_gen->add_option("--len-min", gen.len_min, "log-uniform length lower end");
    c_gen->add_option("--len-max", gen.len_max, "log-uniform length upper end");
    c_gen->add_option("--cone", gen.cone, "restrict directions to a cone (radians)");

    BenchArgs ben;
    auto* c_ben = add_command("bench", "scaling reports with log-log fits");
    c_ben->add_option("--family", ben.family,
                      "grid | random-exposed-intervals | random-exposed-segments");
    c_ben->add_option("--sizes", ben.sizes, "grid sides, comma separated");
    c_ben->add_option("--sigmas", ben.sigmas, "sigma values, comma separated");
    c_ben->add_option("--trials", ben.trials, "trials per point");
    c_ben->add_option("--eps", ben.eps, "division eps for the grid family");
    c_ben->add_option("--oracle", ben.oracle, "oracle for the grid family");

    ValidateArgs val;
    auto* c_val = add_command("validate", "validate a certificate JSON against a graph");
    c_val->add_option("--graph", val.graph_path, "edge-list file");
    c_val->add_option("--grid", val.grid_spec, "ROWSxCOLS in-process grid");
    c_val->add_option("--certificate", val.certificate_path, "certificate JSON")->required();

    std::vector<const char*> argv;
    argv.push_back("sepgeo");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream osout, oserr;
        int rc = app.exit(e, osout, oserr);
        out << osout.str();
        err << oserr.str();
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_sep->parsed()) return cmd_separate(sep, common, out, err);
        if (c_div->parsed()) return cmd_divide(div, common, out, err);
        if (c_exp->parsed()) return cmd_expose(exp, common, out, err);
        if (c_den->parsed()) return cmd_density(den, common, out, err);
        if (c_gen->parsed()) return cmd_generate(gen, common, out, err);
        if (c_ben->parsed()) return cmd_bench(ben, common, out, err);
        if (c_val->parsed()) return cmd_validate(val, common, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const OracleBreach& e) {
        err << "oracle breach: " << e.what() << "\n";
        return kExitOracleBreach;
    } catch (const CLI::ValidationError& e) {
        err << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace sepgeo::cli
