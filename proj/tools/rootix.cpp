// rootix: polynomials, root-indices and family statistics from the command line.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "rootix/report.hpp"
#include "rootix/rootix.hpp"

namespace {

using namespace rootix;
using report::json;

enum class Format { pretty, csv, json };

struct RunConfig {
    std::string family = "trees";
    std::vector<int> n;
    std::vector<std::string> indices;
    std::vector<std::string> pairs;
    Format format = Format::pretty;
    std::string out;
    unsigned workers = default_workers();
    double eps_eq = kDefaultEpsEq;
    std::string input;
    std::uint64_t seed = 1;
    bool count = false;
    bool inject_fault = false;
};

void progress(const std::string& msg) { std::cerr << "rootix: " << msg << std::endl; }

std::string read_all(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// An edge list starts with two integers "n m"; anything else is read as
// graph6, one graph per line.
std::vector<Graph> read_graphs(const std::string& path)
{
    const std::string text = read_all(path);
    std::istringstream probe(text);
    long n = 0, m = 0;
    std::string first;
    std::getline(probe, first);
    std::istringstream head(first);
    if (head >> n >> m)
        return {parse_edge_list(text)};
    std::vector<Graph> out;
    std::istringstream in(text);
    for_each_graph6(in, [&](const Graph& g) { out.push_back(g); });
    if (out.empty())
        throw InputError(path + ": no graphs");
    return out;
}

struct Family {
    std::string label;
    std::vector<Graph> graphs;
};

std::vector<Family> load_families(const RunConfig& cfg)
{
    std::vector<Family> out;
    if (cfg.family == "graph6") {
        if (cfg.input.empty())
            throw InputError("--family graph6 needs --input");
        FamilySpec spec{FamilySpec::Kind::graph6_file, 0, cfg.input};
        out.push_back({cfg.input == "-" ? "stdin" : spec.label(), read_graphs(cfg.input)});
        return out;
    }
    if (cfg.n.empty())
        throw InputError("--n is required for --family " + cfg.family);
    for (int n : cfg.n) {
        const FamilySpec spec = cfg.family == "trees" ? trees(n) : connected_graphs(n);
        progress("enumerating " + spec.label());
        out.push_back({spec.label(), enumerate_all(spec)});
        progress(spec.label() + ": " + std::to_string(out.back().graphs.size()) + " graphs");
    }
    return out;
}

std::vector<IndexId> selected_indices(const RunConfig& cfg, std::span<const IndexId> fallback)
{
    if (cfg.indices.empty())
        return {fallback.begin(), fallback.end()};
    std::vector<IndexId> ids;
    for (const auto& name : cfg.indices) {
        if (name == "roots") {
            ids.insert(ids.end(), std::begin(kRootIndices), std::end(kRootIndices));
        } else if (name == "classic") {
            ids.insert(ids.end(), std::begin(kClassicIndices), std::end(kClassicIndices));
        } else if (auto id = parse_index(name)) {
            ids.push_back(*id);
        } else {
            throw InputError("unknown index: " + name);
        }
    }
    return ids;
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_)
                throw InputError("cannot write " + path);
        }
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }

    void write_json(const json& j) { stream() << j.dump(2) << '\n'; }

private:
    std::unique_ptr<std::ofstream> file_;
};

FamilyResult evaluate(const Family& f, const RunConfig& cfg)
{
    progress("evaluating " + f.label + " with " + std::to_string(cfg.workers) + " worker(s)");
    return evaluate_family(f.label, f.graphs, cfg.workers);
}

// ---------------------------------------------------------------------------

int cmd_compute(const RunConfig& cfg)
{
    if (cfg.input.empty())
        throw InputError("compute needs --input");
    const std::vector<Graph> graphs = read_graphs(cfg.input);
    std::vector<PolyKind> kinds;
    for (IndexId id : selected_indices(cfg, kRootIndices))
        if (std::find(kinds.begin(), kinds.end(), source_kind(id)) == kinds.end())
            kinds.push_back(source_kind(id));

    Output out(cfg.out);
    json all = json::array();
    bool header = true;
    for (const Graph& g : graphs) {
        if (g.order() < 2 || !is_connected(g))
            throw InputError("compute needs a connected graph with at least two vertices");
        std::vector<report::PolynomialEntry> entries;
        for (auto& e : report::graph_entries(g))
            if (std::find(kinds.begin(), kinds.end(), e.kind) != kinds.end())
                entries.push_back(std::move(e));
        switch (cfg.format) {
        case Format::pretty: report::graph_pretty(out.stream(), g, entries); break;
        case Format::csv:
            report::graph_csv(out.stream(), entries, header);
            header = false;
            break;
        case Format::json: all.push_back(report::graph_json(g, entries)); break;
        }
    }
    if (cfg.format == Format::json)
        out.write_json(all.size() == 1 ? all[0] : json{{"graphs", all}});
    return 0;
}

int cmd_discriminate(const RunConfig& cfg)
{
    if (!(cfg.eps_eq >= 0.0))
        throw InputError("--eps-eq must be nonnegative");
    std::vector<IndexId> default_ids(std::begin(kRootIndices), std::end(kRootIndices));
    default_ids.insert(default_ids.end(), std::begin(kClassicIndices), std::end(kClassicIndices));
    const auto ids = selected_indices(cfg, default_ids);

    std::vector<report::DiscriminationRow> rows;
    for (const Family& f : load_families(cfg)) {
        const FamilyResult res = evaluate(f, cfg);
        for (IndexId id : ids) {
            const std::vector<double> col = res.defined_column(id);
            if (col.empty())
                throw InputError(std::string(to_string(id)) + " is undefined on every graph of " + f.label);
            report::DiscriminationRow row{f.label, id, discrimination(col, value_kind(id), cfg.eps_eq), {}};
            if (value_kind(id) == ValueKind::real)
                for (double e : kStabilityEps)
                    row.stability.emplace_back(e, discrimination(col, ValueKind::real, e).nd);
            rows.push_back(std::move(row));
        }
    }
    Output out(cfg.out);
    switch (cfg.format) {
    case Format::pretty: report::discrimination_pretty(out.stream(), rows); break;
    case Format::csv: report::discrimination_csv(out.stream(), rows); break;
    case Format::json: out.write_json(report::discrimination_json(rows, cfg.eps_eq)); break;
    }
    return 0;
}

int cmd_correlate(const RunConfig& cfg)
{
    std::vector<std::pair<IndexId, IndexId>> pairs;
    for (const auto& p : cfg.pairs) {
        const auto colon = p.find(':');
        const auto a = parse_index(p.substr(0, colon));
        const auto b = colon == std::string::npos ? std::nullopt : parse_index(p.substr(colon + 1));
        if (!a || !b)
            throw InputError("bad --pair (want A:B with index names): " + p);
        pairs.emplace_back(*a, *b);
    }
    if (pairs.empty()) {
        const auto ids = selected_indices(cfg, kRootIndices);
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                pairs.emplace_back(ids[i], ids[j]);
    }
    if (pairs.empty())
        throw InputError("correlate needs at least two indices or one --pair");

    std::vector<report::CorrelationRow> rows;
    for (const Family& f : load_families(cfg)) {
        const FamilyResult res = evaluate(f, cfg);
        for (auto [a, b] : pairs) {
            const auto [xs, ys] = res.defined_pair(a, b);
            rows.push_back({f.label, a, b, pearson(xs, ys)});
        }
    }
    Output out(cfg.out);
    switch (cfg.format) {
    case Format::pretty: report::correlation_pretty(out.stream(), rows); break;
    case Format::csv: report::correlation_csv(out.stream(), rows); break;
    case Format::json: out.write_json(report::correlation_json(rows)); break;
    }
    return 0;
}

int cmd_sensitivity(const RunConfig& cfg)
{
    const auto ids = selected_indices(cfg, kRootIndices);
    std::vector<report::SensitivityReportRow> rows;
    auto run = [&](const std::string& label, std::span<const Graph> graphs) {
        progress("edge-addition neighborhoods for " + label + " with " + std::to_string(cfg.workers) +
                 " worker(s)");
        const FamilySensitivity fs = family_sensitivity(graphs, ids, cfg.workers);
        for (std::size_t j = 0; j < ids.size(); ++j)
            rows.push_back({label, ids[j], fs.evaluated, fs.skipped, fs.rows[j]});
    };
    if (!cfg.input.empty() && cfg.family != "graph6") {
        const std::vector<Graph> graphs = read_graphs(cfg.input);
        run(cfg.input == "-" ? "stdin" : std::filesystem::path(cfg.input).filename().string(), graphs);
    } else {
        for (const Family& f : load_families(cfg))
            run(f.label, f.graphs);
    }
    Output out(cfg.out);
    switch (cfg.format) {
    case Format::pretty: report::sensitivity_pretty(out.stream(), rows); break;
    case Format::csv: report::sensitivity_csv(out.stream(), rows); break;
    case Format::json: out.write_json(report::sensitivity_json(rows)); break;
    }
    return 0;
}

int cmd_enumerate(const RunConfig& cfg)
{
    if (cfg.family == "graph6")
        throw InputError("enumerate supports --family trees|conn");
    if (cfg.n.empty())
        throw InputError("--n is required");
    Output out(cfg.out);
    json counts = json::array();
    bool csv_header = true;
    for (int n : cfg.n) {
        const FamilySpec spec = cfg.family == "trees" ? trees(n) : connected_graphs(n);
        std::size_t c = 0;
        enumerate(spec, [&](const Graph& g) {
            ++c;
            if (!cfg.count)
                out.stream() << write_graph6(g) << '\n';
        });
        progress(spec.label() + ": " + std::to_string(c) + " graphs");
        if (!cfg.count)
            continue;
        if (cfg.format == Format::json)
            counts.push_back({{"family", spec.label()}, {"n", n}, {"count", c}});
        else if (cfg.format == Format::csv)
            out.stream() << (std::exchange(csv_header, false) ? "family,n,count\n" : "") << spec.label() << ','
                         << n << ',' << c << '\n';
        else
            out.stream() << spec.label() << ": " << c << '\n';
    }
    if (cfg.count && cfg.format == Format::json)
        out.write_json(counts);
    return 0;
}

int cmd_selftest(const RunConfig& cfg)
{
    selftest::Options opt;
    opt.seed = cfg.seed;
    opt.inject_fault = cfg.inject_fault;
    Output out(cfg.out);
    const bool ok = selftest::print_summary(out.stream(), selftest::run_all(opt));
    return ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Distance polynomials, root-indices and their discrimination, correlation and sensitivity"};
    app.require_subcommand(1);
    RunConfig cfg;

    const std::map<std::string, Format> formats{
        {"pretty", Format::pretty}, {"csv", Format::csv}, {"json", Format::json}};
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "pretty, csv or json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family, "trees, conn or graph6")
            ->check(CLI::IsMember({"trees", "conn", "graph6"}));
        sub->add_option("--n", cfg.n, "family order (repeatable)")->check(CLI::PositiveNumber);
        sub->add_option("--workers", cfg.workers, "worker threads (default $ROOTIX_WORKERS or 1)")
            ->check(CLI::Range(1U, 1024U));
    };
    auto add_indices = [&](CLI::App* sub) {
        sub->add_option("--index", cfg.indices,
                        "delta-H, delta-He, delta-Sc, delta-Gut, W, We, Sc, Gut, roots or classic (repeatable)");
    };

    auto* compute = app.add_subcommand("compute", "polynomials and root-indices of one graph");
    compute->add_option("--input", cfg.input, "edge-list or graph6 file, - for stdin")->required();
    add_indices(compute);
    add_output(compute);

    auto* discriminate = app.add_subcommand("discriminate", "ND and Dis over enumerated families");
    add_family(discriminate);
    add_indices(discriminate);
    add_output(discriminate);
    discriminate->add_option("--eps-eq", cfg.eps_eq, "collision tolerance for root-indices (default 0)");
    discriminate->add_option("--input", cfg.input, "graph6 file for --family graph6");

    auto* correlate = app.add_subcommand("correlate", "Pearson correlations over enumerated families");
    add_family(correlate);
    add_indices(correlate);
    add_output(correlate);
    correlate->add_option("--pair", cfg.pairs, "index pair A:B (repeatable)");
    correlate->add_option("--input", cfg.input, "graph6 file for --family graph6");

    auto* sensitivity = app.add_subcommand("sensitivity", "structure sensitivity, abruptness and SA");
    add_family(sensitivity);
    add_indices(sensitivity);
    add_output(sensitivity);
    sensitivity->add_option("--input", cfg.input, "single graph (edge list or graph6) or graph6 family file");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "graph6 dump or counts of a family");
    add_family(enumerate_cmd);
    add_output(enumerate_cmd);
    enumerate_cmd->add_flag("--count", cfg.count, "print counts instead of graphs");

    auto* selftest_cmd = app.add_subcommand("selftest", "built-in oracle suites");
    selftest_cmd->add_option("--seed", cfg.seed, "seed for the randomized suite");
    selftest_cmd->add_flag("--inject-fault", cfg.inject_fault, "corrupt one coefficient to exercise failure");
    add_output(selftest_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*compute)
            return cmd_compute(cfg);
        if (*discriminate)
            return cmd_discriminate(cfg);
        if (*correlate)
            return cmd_correlate(cfg);
        if (*sensitivity)
            return cmd_sensitivity(cfg);
        if (*enumerate_cmd)
            return cmd_enumerate(cfg);
        if (*selftest_cmd)
            return cmd_selftest(cfg);
    } catch (const InputError& e) {
        std::cerr << "rootix: error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "rootix: internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
