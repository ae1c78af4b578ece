#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "graphlines/catalog.hpp"
#include "graphlines/errors.hpp"
#include "graphlines/graph6.hpp"
#include "graphlines/io.hpp"
#include "graphlines/report.hpp"
#include "graphlines/search.hpp"
#include "graphlines/verify.hpp"

namespace graphlines::cli {

namespace {

constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kUsage = 2;

/// Input graph given as a file/"-" positional, --g6 or --name.
struct GraphSource {
    std::string path;
    std::string g6;
    std::string name;

    void attach(CLI::App &cmd)
    {
        cmd.add_option("input", path, "graph6 or edge-list file, '-' for stdin");
        cmd.add_option("--g6", g6, "graph6 record");
        cmd.add_option("--name", name, "catalog entry (e.g. C4, K6', B7)");
    }

    auto load(std::istream &in) const -> Graph
    {
        const int given = !path.empty() + !g6.empty() + !name.empty();
        if (given != 1)
            throw std::invalid_argument("give exactly one of INPUT, --g6 or --name");
        if (!g6.empty())
            return parse_graph6(g6);
        if (!name.empty())
            return catalog_entry(name).graph;
        std::string text;
        if (path == "-") {
            text.assign(std::istreambuf_iterator<char>(in), {});
        } else {
            std::ifstream file(path);
            if (!file)
                throw std::invalid_argument("cannot open " + path);
            text.assign(std::istreambuf_iterator<char>(file), {});
        }
        return read_graph_text(text);
    }
};

void print_summary(std::ostream &err, const SuiteReport &r)
{
    const int fails = r.count(Status::fails);
    err << r.suite << ": " << r.verdicts.size() << " verdicts, " << r.count(Status::holds) << " hold, " << fails
        << " fail (" << (fails - r.unexpected_failures()) << " known exceptions), " << r.count(Status::not_applicable)
        << " n.a.";
    if (r.generated)
        err << "; cases generated " << r.generated << ", duplicates " << r.duplicates << ", skipped " << r.skipped;
    if (r.seed)
        err << "; seed " << *r.seed;
    err << '\n';
    for (const auto &note : r.notes)
        err << "  " << note << '\n';
}

auto parse_conjecture_set(const std::string &which) -> ConjectureSet
{
    if (which == "main")
        return ConjectureSet::main;
    if (which == "pendant" || which == "conj2")
        return ConjectureSet::pendant;
    if (which == "ul" || which == "conj3")
        return ConjectureSet::ul;
    if (which == "chen" || which == "chen_chvatal")
        return ConjectureSet::chen_chvatal;
    if (which == "all")
        return ConjectureSet::all;
    throw std::invalid_argument("unknown --which '" + which + "' (main, pendant, ul, chen, all)");
}

/// Applicable failure of the chosen inequality not explained by the catalog.
auto unexplained_failure(const AnalysisRecord &r, Inequality which) -> bool
{
    switch (which) {
    case Inequality::main:
        return r.main_ok == Tri::fails;
    case Inequality::conj2:
        return r.conj2_ok == Tri::fails && r.family == "none";
    case Inequality::conj3:
        return r.conj3_ok == Tri::fails;
    }
    return false;
}

void print_scan_summary(std::ostream &err, const ScanSummary &s, std::size_t violations, const std::optional<Inequality> &which)
{
    auto tri = [&](const char *name, const std::size_t (&c)[3]) {
        err << "  " << name << ": holds " << c[0] << ", fails " << c[1] << ", n.a. " << c[2] << '\n';
    };
    err << "records: " << s.records << ", errors: " << s.errors << '\n';
    tri("main_ok", s.main);
    tri("conj2_ok", s.conj2);
    tri("conj3_ok", s.conj3);
    if (which)
        err << "violations (" << to_string(*which) << "): " << violations << '\n';
}

} // namespace

auto run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) -> int
{
    CLI::App app{"Lines in graph metrics: analysis, verification suites and exhaustive search", "graphlines"};
    app.require_subcommand(1);

    GraphSource analyze_src;
    auto *analyze = app.add_subcommand("analyze", "Report lines, structure and verdicts for one graph (JSON)");
    analyze_src.attach(*analyze);

    std::string suite;
    int nmax = 0;
    std::string which = "all";
    std::uint64_t seed = 20240607;
    int gluings = 200;
    auto *verify = app.add_subcommand("verify", "Run a verification suite (JSONL verdicts)");
    verify->add_option("suite", suite, "lemma31, lemma32, claims, conjectures or universal")->required();
    verify->add_option("--nmax", nmax, "largest order for exhaustive suites (<= 7)");
    verify->add_option("--which", which, "conjectures: main, pendant, ul, chen or all");
    verify->add_option("--seed", seed, "seed for randomised gluings (claims)");
    verify->add_option("--gluings", gluings, "number of randomised gluings (claims)");

    int search_nmax = 0;
    bool from_stdin = false;
    std::string inequality_name;
    std::string format = "csv";
    std::string output;
    int jobs = 1;
    bool emit_all = false;
    auto *search = app.add_subcommand("search", "Scan connected graphs for violations (CSV or JSONL)");
    search->add_option("--nmax", search_nmax, "enumerate connected graphs with 2 <= n <= nmax (<= 7)");
    search->add_flag("--stdin", from_stdin, "read graph6 lines from standard input");
    search->add_option("--inequality", inequality_name, "main, conj2 or conj3");
    search->add_option("--out", format, "csv or jsonl");
    search->add_option("--output", output, "output file (default stdout)");
    search->add_option("--jobs", jobs, "worker threads");
    search->add_flag("--all", emit_all, "emit every record, not only violations");

    GraphSource render_src;
    std::string render_output;
    auto *render = app.add_subcommand("render", "Graphviz DOT of the line classes");
    render_src.attach(*render);
    render->add_option("-o,--output", render_output, "output file (default stdout)");

    std::string catalog_format = "g6";
    auto *catalog_cmd = app.add_subcommand("catalog", "Dump the reference graphs");
    catalog_cmd->add_option("--format", catalog_format, "g6 or edgelist");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*analyze) {
            const Graph g = analyze_src.load(in);
            if (g.order() < 2) {
                err << "error: analyze needs at least two vertices\n";
                return kUsage;
            }
            out << analysis_json(g).dump(2) << '\n';
            return kOk;
        }

        if (*verify) {
            SuiteReport report;
            if (suite == "lemma31") {
                report = lemma31_suite();
            } else if (suite == "lemma32") {
                report = lemma32_pendant_suite();
                report.suite = "lemma32";
                report.append(lemma32_twin_suite());
                report.append(lemma32_module_scan());
            } else if (suite == "claims") {
                report = claims_suite(nmax ? nmax : 6, seed, gluings);
            } else if (suite == "conjectures") {
                report = conjectures_suite(nmax ? nmax : 7, parse_conjecture_set(which));
            } else if (suite == "universal") {
                report = universal_line_suite(nmax ? nmax : 6);
            } else {
                err << "error: unknown suite '" << suite << "' (lemma31, lemma32, claims, conjectures, universal)\n";
                return kUsage;
            }
            for (const auto &v : report.verdicts)
                out << to_json(v).dump() << '\n';
            print_summary(err, report);
            return report.unexpected_failures() ? kClaimFailed : kOk;
        }

        if (*search) {
            std::optional<Inequality> ineq;
            if (!inequality_name.empty()) {
                ineq = parse_inequality(inequality_name);
                if (!ineq) {
                    err << "error: unknown inequality '" << inequality_name << "' (main, conj2, conj3)\n";
                    return kUsage;
                }
            }
            if (format != "csv" && format != "jsonl") {
                err << "error: --out must be csv or jsonl\n";
                return kUsage;
            }
            if (from_stdin == (search_nmax != 0)) {
                err << "error: give exactly one of --nmax or --stdin\n";
                return kUsage;
            }
            if (search_nmax > kMaxEnumerationOrder)
                throw CapabilityError("built-in enumeration stops at n = 7; use --stdin with an external generator");
            std::ofstream file;
            if (!output.empty()) {
                file.open(output);
                if (!file) {
                    err << "error: cannot write " << output << '\n';
                    return kUsage;
                }
            }
            std::ostream &sink = output.empty() ? out : file;
            if (format == "csv")
                sink << csv_header() << '\n';

            ScanSummary summary;
            std::size_t violations = 0;
            bool failed = false;
            auto emit = [&](const ScanItem &item) {
                if (!item.record) {
                    ++summary.errors;
                    err << "line " << item.line << ": " << item.error << '\n';
                    if (format == "jsonl")
                        sink << Json{{"line", item.line}, {"error", item.error}}.dump() << '\n';
                    return;
                }
                const AnalysisRecord &r = *item.record;
                summary.add(r);
                const bool hit = ineq && violates(r, *ineq);
                violations += hit;
                failed = failed || (ineq && unexplained_failure(r, *ineq));
                if (emit_all || !ineq || hit)
                    sink << (format == "csv" ? to_csv(r) : to_json(r).dump()) << '\n';
            };

            if (from_stdin) {
                scan_stream(in, ScanFilters{}, jobs, emit);
            } else {
                std::size_t index = 0;
                for (int n = 2; n <= search_nmax; ++n)
                    for (const auto &r : scan(enumerate_connected(n), ScanFilters{}, jobs)) {
                        ScanItem item;
                        item.index = index++;
                        item.record = r;
                        emit(item);
                    }
            }
            print_scan_summary(err, summary, violations, ineq);
            if (summary.errors)
                return kUsage;
            return failed ? kClaimFailed : kOk;
        }

        if (*render) {
            const Graph g = render_src.load(in);
            if (g.order() < 2 || !is_connected(g)) {
                err << "error: render needs a connected graph with at least two vertices\n";
                return kUsage;
            }
            const std::string dot = render_dot(g, render_src.name.empty() ? to_graph6(g) : render_src.name);
            if (render_output.empty()) {
                out << dot;
            } else {
                std::ofstream file(render_output);
                if (!file) {
                    err << "error: cannot write " << render_output << '\n';
                    return kUsage;
                }
                file << dot;
            }
            return kOk;
        }

        if (*catalog_cmd) {
            if (catalog_format == "g6")
                write_catalog(out, CatalogFormat::graph6);
            else if (catalog_format == "edgelist")
                write_catalog(out, CatalogFormat::edge_list);
            else {
                err << "error: --format must be g6 or edgelist\n";
                return kUsage;
            }
            return kOk;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace graphlines::cli
