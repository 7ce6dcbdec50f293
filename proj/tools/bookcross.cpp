// bookcross: construct, count, enumerate and verify k-page book drawings of
// complete bipartite graphs.
//
// Exit codes: 0 success / proven, 1 refuted, 2 inconclusive, 64 usage
// error, 65 malformed or invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bookcross/bounds.hpp"
#include "bookcross/coloring.hpp"
#include "bookcross/constructions.hpp"
#include "bookcross/drawing_io.hpp"
#include "bookcross/enumeration.hpp"
#include "bookcross/oracle.hpp"
#include "bookcross/render.hpp"

namespace {

using namespace bookcross;
using nlohmann::json;

constexpr int exit_refuted = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_usage = 64;
constexpr int exit_data = 65;

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

json record_to_json(const LayoutRecord& r) {
    return {{"canonical_string", r.canonical}, {"verdict", to_string(r.verdict)}, {"nodes", r.nodes}, {"millis", r.millis}};
}

std::vector<LayoutRecord> read_log(const std::string& path) {
    std::vector<LayoutRecord> records;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto doc = json::parse(line, nullptr, false);
        if (doc.is_discarded() || !doc.is_object()) continue;  // tolerate a torn last line
        records.push_back({doc.value("canonical_string", ""), verdict_from_string(doc.value("verdict", "")),
                           doc.value("nodes", std::uint64_t{0}), doc.value("millis", 0.0)});
    }
    return records;
}

json rational_json(const Rational& r) {
    if (denominator(r) == 1) return json(numerator(r).str());
    return json(numerator(r).str() + "/" + denominator(r).str());
}

json entry_to_json(const ScanEntry& e) {
    return {{"k", e.k},
            {"m", e.m},
            {"n", e.n},
            {"formula", e.formula},
            {"kind", e.is_lower ? "lower" : "upper"},
            {"value", rational_json(e.bound.value)},
            {"approx", e.bound.approx()},
            {"valid", e.bound.valid}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-page book drawings of complete bipartite graphs"};
    app.require_subcommand(1);

    // count-drawings
    int cd_m = 0, cd_n = 0;
    bool cd_check = false;
    auto* count_cmd = app.add_subcommand("count-drawings", "number of distinct circular drawings of K_{m,n}");
    count_cmd->add_option("m", cd_m)->required()->check(CLI::PositiveNumber);
    count_cmd->add_option("n", cd_n)->required()->check(CLI::PositiveNumber);
    count_cmd->add_flag("--check", cd_check, "also enumerate and compare");

    // enumerate
    int en_m = 0, en_n = 0;
    std::string en_emit = "text";
    auto* enum_cmd = app.add_subcommand("enumerate", "canonical layout strings of K_{m,n}, one per dihedral orbit");
    enum_cmd->add_option("m", en_m)->required()->check(CLI::PositiveNumber);
    enum_cmd->add_option("n", en_n)->required()->check(CLI::PositiveNumber);
    enum_cmd->add_option("--emit", en_emit, "text or json")->check(CLI::IsMember({"text", "json"}));

    // construct
    std::string co_out;
    auto* construct_cmd = app.add_subcommand("construct", "build a drawing family");
    construct_cmd->add_option("-o,--output", co_out, "output file (default stdout)");
    construct_cmd->require_subcommand(1);
    int cb_k = 0;
    auto* c_balanced = construct_cmd->add_subcommand("balanced", "balanced k-page embedding of K_{k+1,floor((k+1)^2/4)}");
    c_balanced->add_option("k", cb_k)->required()->check(CLI::PositiveNumber);
    int cu_k = 0, cu_n = 0;
    auto* c_blowup = construct_cmd->add_subcommand("blowup", "blow-up of the balanced embedding to K_{k+1,n}");
    c_blowup->add_option("k", cu_k)->required()->check(CLI::PositiveNumber);
    c_blowup->add_option("n", cu_n)->required()->check(CLI::PositiveNumber);
    int cc_m = 0, cc_n = 0, cc_k = 0;
    auto* c_cyclic = construct_cmd->add_subcommand("block-cyclic", "block-cyclic k-page drawing of K_{m,n}");
    c_cyclic->add_option("m", cc_m)->required()->check(CLI::PositiveNumber);
    c_cyclic->add_option("n", cc_n)->required()->check(CLI::PositiveNumber);
    c_cyclic->add_option("k", cc_k)->required()->check(CLI::PositiveNumber);
    int cr_m = 0, cr_n = 0;
    auto* c_riskin = construct_cmd->add_subcommand("riskin", "one-page drawing with evenly spread black vertices");
    c_riskin->add_option("m", cr_m)->required()->check(CLI::PositiveNumber);
    c_riskin->add_option("n", cr_n)->required()->check(CLI::PositiveNumber);

    for (auto* sub : {c_balanced, c_blowup, c_cyclic, c_riskin}) sub->fallthrough();

    // crossings
    std::string cx_file;
    auto* cross_cmd = app.add_subcommand("crossings", "count crossings of a drawing ('-' reads stdin)");
    cross_cmd->add_option("file", cx_file)->required();

    // verify-pagenumber
    int vp_m = 0, vp_n = 0, vp_k = 0;
    std::uint64_t vp_budget = SearchBudget{}.max_nodes;
    long vp_time = 0;
    unsigned vp_jobs = 0;
    std::string vp_cnf_dir, vp_log, vp_witness;
    bool vp_resume = false, vp_all = false;
    auto* verify_cmd = app.add_subcommand("verify-pagenumber", "decide nu_k(K_{m,n}) > 0 over all circular layouts");
    verify_cmd->add_option("m", vp_m)->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("n", vp_n)->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("k", vp_k)->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--budget", vp_budget, "search nodes per layout");
    verify_cmd->add_option("--time-limit", vp_time, "milliseconds per layout (0: none)");
    verify_cmd->add_option("--jobs", vp_jobs, "worker threads (0: all cores)");
    verify_cmd->add_option("--export-cnf", vp_cnf_dir, "write one DIMACS file per layout into this directory");
    verify_cmd->add_option("--log", vp_log, "append per-layout JSON lines to this file");
    verify_cmd->add_flag("--resume", vp_resume, "reuse not_colorable verdicts already in --log");
    verify_cmd->add_option("--witness", vp_witness, "write the embedding found on refutation");
    verify_cmd->add_flag("--all", vp_all, "keep checking layouts after a refutation");

    // bounds
    std::vector<int> bo_args;
    bool bo_scan = false;
    std::int64_t bo_construct = 5000;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate closed-form bounds: bounds k [m] n");
    bounds_cmd->add_option("args", bo_args, "k [m] n")->required()->expected(2, 3)->check(CLI::PositiveNumber);
    bounds_cmd->add_flag("--scan", bo_scan, "scan K_{k+1,n'} for n' = 1..n and report lower > upper");
    bounds_cmd->add_option("--construct-limit", bo_construct, "build drawings with at most this many edges (0: off)");

    // oracle
    int or_m = 0, or_n = 0, or_k = 0;
    OracleLimits or_limits;
    bool or_unseeded = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive nu_k(K_{m,n}) on tiny instances");
    oracle_cmd->add_option("m", or_m)->required()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("n", or_n)->required()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("k", or_k)->required()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--max-vertices", or_limits.max_vertices);
    oracle_cmd->add_option("--max-pages", or_limits.max_pages);
    oracle_cmd->add_option("--max-nodes", or_limits.max_nodes);
    oracle_cmd->add_flag("--unseeded", or_unseeded, "do not start from constructed drawings");

    // render
    std::string re_file, re_out;
    RenderSpec re_spec;
    auto* render_cmd = app.add_subcommand("render", "SVG of a drawing, one circle per page");
    render_cmd->add_option("file", re_file)->required();
    render_cmd->add_option("-o,--output", re_out, "output SVG file (default stdout)");
    render_cmd->add_option("--columns", re_spec.columns);
    render_cmd->add_option("--radius", re_spec.radius);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (count_cmd->parsed()) {
            const auto value = count_formula(cd_m, cd_n);
            if (cd_check) {
                const auto listed = enumerate_classes(cd_m, cd_n).size();
                std::cout << json{{"m", cd_m}, {"n", cd_n}, {"formula", value}, {"enumerated", listed}}.dump() << "\n";
                return listed == value ? 0 : exit_inconclusive;
            }
            std::cout << value << "\n";
            return 0;
        }

        if (enum_cmd->parsed()) {
            const auto classes = enumerate_classes(en_m, en_n);
            if (en_emit == "json") {
                json arr = json::array();
                for (const auto& c : classes) arr.push_back(c.canonical);
                std::cout << arr.dump() << "\n";
            } else {
                for (const auto& c : classes) std::cout << c.canonical << "\n";
            }
            return 0;
        }

        if (construct_cmd->parsed()) {
            std::optional<BookDrawing> d;
            if (c_balanced->parsed()) d = balanced_embedding(cb_k);
            if (c_blowup->parsed()) d = blowup(balanced_embedding(cu_k), cu_n);
            if (c_cyclic->parsed()) d = block_cyclic(cc_m, cc_n, cc_k);
            if (c_riskin->parsed()) {
                if (cr_n % cr_m != 0)
                    std::cerr << "note: " << cr_m << " does not divide " << cr_n
                              << "; black vertices spread as evenly as possible\n";
                d = riskin_drawing(cr_m, cr_n);
            }
            write_output(co_out, dump_drawing(*d));
            return 0;
        }

        if (cross_cmd->parsed()) {
            const auto d = parse_drawing(read_input(cx_file));
            const auto report = count_crossings(d);
            std::cout << json{{"total", report.total}, {"per_page", report.per_page}}.dump() << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (!vp_cnf_dir.empty()) {
                std::filesystem::create_directories(vp_cnf_dir);
                for (const auto& c : enumerate_classes(vp_m, vp_n)) {
                    std::ofstream out(std::filesystem::path(vp_cnf_dir) / (c.canonical + ".cnf"));
                    out << export_cnf(conflict_graph(CircularLayout::from_bits(c.canonical)), vp_k);
                }
            }
            VerifyOptions options;
            options.budget.max_nodes = vp_budget;
            options.budget.max_time = std::chrono::milliseconds(vp_time);
            options.jobs = vp_jobs;
            options.stop_on_refutation = !vp_all;
            if (vp_resume && !vp_log.empty()) options.resume = read_log(vp_log);
            std::ofstream log_stream;
            if (!vp_log.empty()) {
                log_stream.open(vp_log, std::ios::app);
                if (!log_stream) throw InputError("cannot open log '" + vp_log + "'");
            }
            std::set<std::string> already;
            for (const auto& r : options.resume) already.insert(r.canonical);
            options.on_record = [&](const LayoutRecord& r) {
                if (log_stream.is_open() && !already.count(r.canonical))
                    log_stream << record_to_json(r).dump() << "\n" << std::flush;
            };

            const auto result = verify_positive_crossing(vp_m, vp_n, vp_k, options);
            json log = json::array();
            for (const auto& r : result.log) log.push_back(record_to_json(r));
            json summary{{"m", vp_m},
                         {"n", vp_n},
                         {"k", vp_k},
                         {"verdict", to_string(result.verdict)},
                         {"layouts", count_formula(vp_m, vp_n)},
                         {"log", log},
                         {"unfinished", result.unfinished}};
            if (result.witness) {
                summary["witness"] = drawing_to_json(*result.witness);
                if (!vp_witness.empty()) write_output(vp_witness, dump_drawing(*result.witness));
            }
            std::cout << summary.dump(2) << "\n";
            switch (result.verdict) {
                case PipelineVerdict::proven: return 0;
                case PipelineVerdict::refuted: return exit_refuted;
                case PipelineVerdict::inconclusive: return exit_inconclusive;
            }
        }

        if (bounds_cmd->parsed()) {
            const int k = bo_args[0];
            const int m = bo_args.size() == 3 ? bo_args[1] : k + 1;
            const int n = bo_args.back();
            if (bo_scan) {
                if (m != k + 1) throw InputError("--scan covers the K_{k+1,n} family; omit m");
                const auto report = consistency_scan(k, k, 1, n, bo_construct);
                json violations = json::array();
                for (const auto& v : report.violations)
                    violations.push_back({{"k", v.k},
                                          {"n", v.n},
                                          {"lower", v.lower_source},
                                          {"lower_value", rational_json(v.lower)},
                                          {"upper", v.upper_source},
                                          {"upper_value", rational_json(v.upper)}});
                json table = json::array();
                for (const auto& e : report.entries) table.push_back(entry_to_json(e));
                std::cout << json{{"table", table}, {"violations", violations}}.dump(1) << "\n";
            } else {
                json table = json::array();
                for (const auto& e : evaluate_bounds(k, m, n, bo_construct)) table.push_back(entry_to_json(e));
                table.push_back({{"k", k},
                                 {"m", m},
                                 {"n", n},
                                 {"formula", "nonembeddable_width"},
                                 {"kind", "width"},
                                 {"value", std::to_string(nonembeddable_width(k))},
                                 {"approx", static_cast<double>(nonembeddable_width(k))},
                                 {"valid", true}});
                std::cout << table.dump(1) << "\n";
            }
            return 0;
        }

        if (oracle_cmd->parsed()) {
            const auto r = brute_force_nu(or_m, or_n, or_k, or_limits, !or_unseeded);
            std::cout << json{{"m", or_m}, {"n", or_n}, {"k", or_k}, {"value", r.value}, {"nodes", r.nodes},
                              {"millis", r.millis}}
                             .dump()
                      << "\n";
            return 0;
        }

        if (render_cmd->parsed()) {
            const auto d = parse_drawing(read_input(re_file));
            write_output(re_out, render_svg(d, re_spec));
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_data;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return exit_usage;
}
