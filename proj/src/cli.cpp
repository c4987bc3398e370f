#include "hfactor/cli.hpp"

#include "hfactor/collapse.hpp"
#include "hfactor/corpus.hpp"
#include "hfactor/density.hpp"
#include "hfactor/diagnostics.hpp"
#include "hfactor/factor.hpp"
#include "hfactor/random_models.hpp"
#include "hfactor/threshold.hpp"
#include "hfactor/two_phase.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hfactor::cli {

namespace {

using nlohmann::json;

constexpr std::string_view kCorpusPrefix = "corpus:";

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw GraphError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string num(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string join(const std::vector<int>& xs, char sep = ' ')
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string role_list(const PatternGraph& h, VertexMask mask)
{
    std::string s;
    for (int v : mask_vertices(mask))
        s += (s.empty() ? "" : ",") + h.role_name(v);
    return "{" + s + "}";
}

std::string descriptor_text(const ThresholdDescriptor& t)
{
    std::string s = "n^(" + to_string(t.density_exponent) + ")";
    if (t.log_exponent != 0)
        s += " (log n)^(" + to_string(t.log_exponent) + ")";
    return s;
}

struct Globals {
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultNodeBudget;
    std::string format = "text";
};

void print_factor(std::ostream& out, const PatternGraph& h, const FactorAssignment& a)
{
    for (const auto& copy : a.copies) {
        out << "copy";
        for (int x = 0; x < h.vertex_count(); ++x)
            out << ' ' << h.role_name(x) << ':' << copy[x];
        out << '\n';
    }
    if (!a.uncovered.empty())
        out << "uncovered " << join(a.uncovered) << '\n';
}

json factor_json(const PatternGraph& h, const FactorAssignment& a)
{
    json copies = json::array();
    for (const auto& copy : a.copies) {
        json c = json::object();
        for (int x = 0; x < h.vertex_count(); ++x)
            c[h.role_name(x)] = copy[x];
        copies.push_back(c);
    }
    return {{"copies", copies}, {"uncovered", a.uncovered}};
}

// --- analyze -----------------------------------------------------------------

void cmd_analyze(const std::string& path, const Globals& g, std::ostream& out)
{
    auto h = load_pattern(path);
    auto rep = density_report(h);
    std::optional<ThresholdDescriptor> t;
    if (rep.m != 0)
        t = threshold_descriptor(rep, h);

    if (g.format == "json") {
        json j = {{"vertices", h.vertex_count()},
                  {"edges", h.total_multiplicity()},
                  {"d", to_string(rep.d)},
                  {"m", to_string(rep.m)},
                  {"m_witness", mask_vertices(rep.m_witness)},
                  {"class", to_string(rep.balance_class)},
                  {"balanced", rep.balanced},
                  {"digest", report_digest(rep)}};
        j["s"] = rep.s ? json(*rep.s) : json(nullptr);
        json local = json::array();
        for (int v = 0; v < h.vertex_count(); ++v)
            local.push_back({{"role", h.role_name(v)},
                             {"m", to_string(rep.per_vertex_m[v].density)},
                             {"s", rep.s_per_vertex[v] ? json(*rep.s_per_vertex[v]) : json(nullptr)}});
        j["per_vertex"] = local;
        if (t)
            j["threshold"] = {{"density_exponent", to_string(t->density_exponent)},
                              {"log_exponent", to_string(t->log_exponent)},
                              {"status", to_string(t->status)}};
        out << j.dump(2) << '\n';
        return;
    }
    out << "vertices " << h.vertex_count() << '\n'
        << "edges " << h.total_multiplicity() << '\n'
        << "d = " << to_string(rep.d) << '\n'
        << "m = " << to_string(rep.m) << "  witness " << role_list(h, rep.m_witness) << '\n'
        << "class " << to_string(rep.balance_class) << '\n'
        << "balanced " << (rep.balanced ? "yes" : "no") << '\n'
        << "s = " << (rep.s ? std::to_string(*rep.s) : std::string("-")) << '\n';
    for (int v = 0; v < h.vertex_count(); ++v) {
        out << "  m(" << h.role_name(v) << ") = " << to_string(rep.per_vertex_m[v].density);
        if (rep.s_per_vertex[v])
            out << "  s = " << *rep.s_per_vertex[v];
        out << '\n';
    }
    if (t)
        out << "threshold " << descriptor_text(*t) << "  [" << to_string(t->status) << "]\n";
    else
        out << "threshold undefined (no edges)\n";
}

// --- collapse ----------------------------------------------------------------

void cmd_collapse(const std::string& path, std::optional<std::uint64_t> random_seed, const Globals& g,
                  std::ostream& out)
{
    auto h = load_pattern(path);
    CollapseOptions opts;
    opts.random_seed = random_seed;
    auto trace = collapse_full(h, opts);
    std::optional<Rational> m_terminal;
    if (trace.terminal.vertex_count() >= 2)
        m_terminal = max_density(trace.terminal).density;

    if (g.format == "json") {
        json steps = json::array();
        for (const auto& s : trace.steps)
            steps.push_back({{"witness", s.witness}, {"result", serialize(s.result)}});
        json clusters = json::array();
        for (const auto& c : trace.clusters())
            clusters.push_back(c);
        json j = {{"m", to_string(trace.m)},
                  {"steps", steps},
                  {"terminal", serialize(trace.terminal)},
                  {"h_prime", serialize(trace.h_prime)},
                  {"cluster_map", trace.cluster_map},
                  {"clusters", clusters},
                  {"degenerate", trace.degenerate}};
        j["m_terminal"] = m_terminal ? json(to_string(*m_terminal)) : json(nullptr);
        out << j.dump(2) << '\n';
        return;
    }
    out << "m(H) = " << to_string(trace.m) << '\n';
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        out << "step " << i + 1 << ": contract {" << join(s.witness, ',') << "} -> "
            << s.result.role_name(s.result.vertex_count() - 1) << '\n';
    }
    out << "terminal " << trace.terminal.vertex_count() << " vertices, " << trace.terminal.total_multiplicity()
        << " edges";
    if (m_terminal)
        out << ", m = " << to_string(*m_terminal);
    out << (trace.degenerate ? ", degenerate" : "") << '\n';
    for (const auto& e : trace.terminal.edges())
        out << "  " << trace.terminal.role_name(e.u) << " -- " << trace.terminal.role_name(e.v)
            << (e.multiplicity > 1 ? "  x" + std::to_string(e.multiplicity) : "") << '\n';
    out << "clusters\n";
    auto clusters = trace.clusters();
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        out << "  " << trace.terminal.role_name(static_cast<int>(c)) << ":";
        for (int v : clusters[c])
            out << ' ' << h.role_name(v);
        out << '\n';
    }
    out << "H' edges " << trace.h_prime.total_multiplicity() << '\n';
    for (const auto& e : trace.h_prime.edges())
        out << "  " << h.role_name(e.u) << " -- " << h.role_name(e.v) << '\n';
}

// --- gen ---------------------------------------------------------------------

struct GenArgs {
    std::string model = "gnp";
    std::string pattern;
    int n = 0;
    int r = 0;
    double p = 0.5;
    std::string out_path;
};

void cmd_gen(const GenArgs& a, const Globals& g, std::ostream& out)
{
    SampleSpec spec;
    spec.model = parse_model(a.model);
    spec.p = a.p;
    spec.seed = g.seed;
    if (spec.model == Model::partitioned) {
        if (a.pattern.empty())
            throw SampleError("the partitioned model needs --pattern");
        spec.pattern = load_pattern(a.pattern);
        spec.size = a.r;
    } else {
        spec.size = a.n;
    }
    HostGraph host = sample(spec);
    if (!a.pattern.empty() && spec.model == Model::digraph) {
        auto pattern = load_pattern(a.pattern);
        if (a.r <= 0)
            throw SampleError("orienting a digraph sample needs --r");
        if (a.r * pattern.vertex_count() != host.vertex_count())
            throw SampleError("--n must equal r times the pattern's vertex count");
        std::vector<std::vector<int>> classes(pattern.vertex_count());
        for (int v = 0; v < host.vertex_count(); ++v)
            classes[v / a.r].push_back(v);
        host = orient_restrict(host, pattern, classes);
    }
    std::string text = serialize(host);
    if (a.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(a.out_path, std::ios::binary);
    if (!f)
        throw GraphError("cannot write '" + a.out_path + "'");
    f << text;
}

// --- factor / count ----------------------------------------------------------

struct FactorArgs {
    std::string host;
    std::string pattern;
    bool count = false;
    double partial = 0.0;
    bool two_phase = false;
    std::string split = "disjoint";
    double p = 0.0;
};

void cmd_factor(const FactorArgs& a, const Globals& g, std::ostream& out)
{
    auto host = load_host(a.host);
    auto h = load_pattern(a.pattern);
    SearchOptions search;
    search.node_budget = g.budget;

    if (a.count) {
        auto phi = count_factors(host, h);
        if (g.format == "json")
            out << json{{"phi", phi.str()}}.dump(2) << '\n';
        else
            out << phi.str() << '\n';
        return;
    }

    std::optional<FactorAssignment> found;
    SearchStatus status = SearchStatus::absent;
    json extra = json::object();
    if (a.partial > 0.0) {
        PartialOptions opts;
        opts.node_budget = g.budget;
        auto r = partial_factor(host, h, a.partial, g.seed, opts);
        found = r.assignment;
        status = r.target_met ? SearchStatus::found : (r.budget_exhausted ? SearchStatus::budget : SearchStatus::absent);
        extra["target_met"] = r.target_met;
    } else if (a.two_phase) {
        TwoPhaseOptions opts;
        opts.search = search;
        opts.split = a.split == "overlapping" ? ShareSplit::overlapping : ShareSplit::disjoint;
        if (a.split != "overlapping" && a.split != "disjoint")
            throw FactorError("--split takes disjoint or overlapping");
        opts.p = a.p;
        auto r = two_phase_factor(host, h, g.seed, opts);
        status = r.status;
        found = r.factor;
        extra["phase"] = r.phase;
    } else {
        auto r = find_factor(host, h, search);
        status = r.status;
        found = r.factor;
        extra["nodes"] = r.nodes;
    }

    if (g.format == "json") {
        json j = {{"status", std::string(to_string(status))}};
        j.update(extra);
        if (found)
            j["factor"] = factor_json(h, *found);
        out << j.dump(2) << '\n';
        return;
    }
    if (a.partial > 0.0) {
        print_factor(out, h, *found);
        out << (status == SearchStatus::found ? "target met" : std::string(to_string(status))) << '\n';
        return;
    }
    if (status == SearchStatus::found) {
        print_factor(out, h, *found);
        return;
    }
    out << to_string(status);
    if (extra.contains("phase") && !extra["phase"].get<std::string>().empty())
        out << " (" << extra["phase"].get<std::string>() << ")";
    out << '\n';
}

// --- diagnose ----------------------------------------------------------------

void cmd_diagnose(const std::string& host_path, const std::string& pattern_path, double p,
                  std::optional<int> shearer_class, const Globals& g, std::ostream& out)
{
    auto host = load_host(host_path);
    auto h = load_pattern(pattern_path);
    auto rep = property_report_parallel(host, h, p);
    std::optional<ShearerCheck> sh;
    if (shearer_class)
        sh = shearer_check(host, h, *shearer_class);

    if (g.format == "json") {
        json viol = json::array();
        for (const auto& v : rep.C_violations)
            viol.push_back({{"y", v.y}, {"missing_class", v.missing_class}, {"max_w", v.max_w.str()},
                            {"median_w", v.median_w.str()}});
        json j = {{"phi", rep.phi.str()},
                  {"log_phi", rep.log_phi},
                  {"A_reference", rep.A_reference},
                  {"D_p", rep.D_p},
                  {"D_deviation_max", rep.D_deviation_max},
                  {"C_violations", viol},
                  {"weight_sum", rep.weight_sum.str()}};
        j["maxr_w"] = rep.maxr_w ? json(*rep.maxr_w) : json(nullptr);
        if (sh)
            j["shearer"] = {{"lhs", sh->lhs}, {"rhs", sh->rhs}, {"holds", sh->holds}};
        out << j.dump(2) << '\n';
        return;
    }
    out << "phi " << rep.phi.str() << '\n'
        << "log_phi " << num(rep.log_phi) << '\n'
        << "A_reference " << num(rep.A_reference) << '\n'
        << "gap " << num(rep.log_phi - rep.A_reference) << '\n'
        << "D_p " << num(rep.D_p) << '\n'
        << "D_deviation_max " << num(rep.D_deviation_max) << '\n'
        << "maxr_w " << (rep.maxr_w ? num(*rep.maxr_w) : std::string("-")) << '\n'
        << "weight_sum " << rep.weight_sum.str() << '\n'
        << "C_violations " << rep.C_violations.size() << '\n';
    for (const auto& v : rep.C_violations)
        out << "  Y {" << join(v.y, ',') << "} missing " << v.missing_class << " max " << v.max_w.str() << " median "
            << v.median_w.str() << '\n';
    if (sh)
        out << "shearer lhs " << num(sh->lhs) << " rhs " << num(sh->rhs) << (sh->holds ? " holds" : " FAILS")
            << '\n';
}

// --- simulate / scaling ------------------------------------------------------

struct SimArgs {
    std::string pattern;
    std::string model = "gnp";
    std::vector<int> n_list;
    std::vector<double> p_list;
    std::int64_t trials = 200;
    int depth = kDefaultBisectionDepth;
    bool two_phase = false;
    std::string split = "disjoint";
    std::string out_path;
};

const char* kCsvHeader = "n,p,trials,successes,budget,phat,lo,hi";

std::string csv_row(const CurveRow& r)
{
    return std::to_string(r.n) + ',' + num(r.p) + ',' + std::to_string(r.trials) + ',' +
           std::to_string(r.successes) + ',' + std::to_string(r.budget_exhausted) + ',' + num(r.p_hat) + ',' +
           num(r.interval.lo) + ',' + num(r.interval.hi);
}

SimulationSpec sim_spec(const SimArgs& a, const Globals& g)
{
    SimulationSpec spec;
    spec.pattern = load_pattern(a.pattern);
    spec.model = parse_model(a.model);
    spec.trials = a.trials;
    spec.master_seed = g.seed;
    spec.search.node_budget = g.budget;
    spec.two_phase = a.two_phase;
    if (a.split != "overlapping" && a.split != "disjoint")
        throw FactorError("--split takes disjoint or overlapping");
    spec.split = a.split == "overlapping" ? ShareSplit::overlapping : ShareSplit::disjoint;
    return spec;
}

json metadata(const SimulationSpec& spec, const SimArgs& a, const Globals& g)
{
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(pattern_hash(spec.pattern)));
    return {{"version", kVersion},
            {"pattern", a.pattern},
            {"pattern_hash", hash},
            {"model", a.model},
            {"seed", g.seed},
            {"budget", g.budget},
            {"trials", a.trials},
            {"two_phase", a.two_phase}};
}

void emit(const std::vector<CurveRow>& rows, json meta, const SimArgs& a, const Globals& g, std::ostream& out)
{
    std::ostringstream csv;
    csv << kCsvHeader << '\n';
    for (const auto& r : rows)
        csv << csv_row(r) << '\n';

    if (!a.out_path.empty()) {
        std::ofstream f(a.out_path, std::ios::binary);
        std::ofstream side(a.out_path + ".json", std::ios::binary);
        if (!f || !side)
            throw GraphError("cannot write '" + a.out_path + "'");
        f << csv.str();
        side << meta.dump(2) << '\n';
    }
    if (g.format == "json") {
        json rj = json::array();
        for (const auto& r : rows)
            rj.push_back({{"n", r.n}, {"p", r.p}, {"trials", r.trials}, {"successes", r.successes},
                          {"budget", r.budget_exhausted}, {"phat", r.p_hat}, {"lo", r.interval.lo},
                          {"hi", r.interval.hi}});
        meta["rows"] = rj;
        out << meta.dump(2) << '\n';
    } else if (a.out_path.empty()) {
        out << csv.str();
    }
}

void cmd_simulate(const SimArgs& a, const Globals& g, std::ostream& out)
{
    auto spec = sim_spec(a, g);
    std::vector<CurveRow> rows;
    for (int n : a.n_list)
        for (double p : a.p_list)
            rows.push_back(estimate_success_prob(spec, n, p));
    emit(rows, metadata(spec, a, g), a, g, out);
}

void cmd_scaling(const SimArgs& a, const Globals& g, std::ostream& out)
{
    auto spec = sim_spec(a, g);
    auto study = scaling_study(spec, a.n_list, a.depth);
    std::vector<CurveRow> rows;
    json summary = json::array();
    for (std::size_t i = 0; i < study.n_list.size(); ++i) {
        const auto& hp = study.half_points[i];
        rows.insert(rows.end(), hp.probes.begin(), hp.probes.end());
        summary.push_back({{"n", study.n_list[i]},
                           {"p50", hp.p50},
                           {"bracket", {hp.bracket.lo, hp.bracket.hi}},
                           {"confidence_bracket", {hp.confidence_bracket.lo, hp.confidence_bracket.hi}},
                           {"lower_bound", hp.lower_bound},
                           {"ratio", study.ratio[i]},
                           {"ratio_no_log", study.ratio_no_log[i]}});
    }
    auto meta = metadata(spec, a, g);
    meta["depth"] = a.depth;
    meta["half_points"] = summary;
    meta["slope"] = study.fit ? json(study.fit->slope) : json(nullptr);
    emit(rows, meta, a, g, out);
}

// --- corpus ------------------------------------------------------------------

void cmd_corpus(const std::string& name, bool check, const Globals& g, std::ostream& out)
{
    if (check) {
        int bad = 0;
        for (const auto& e : corpus()) {
            auto digest = report_digest(density_report(parse_pattern(e.text)));
            bool ok = digest == e.digest;
            bad += !ok;
            out << (ok ? "ok   " : "FAIL ") << e.name << "  " << digest << '\n';
        }
        if (bad)
            throw GraphError(std::to_string(bad) + " corpus digests differ");
        return;
    }
    if (name.empty()) {
        if (g.format == "json") {
            json j = json::array();
            for (const auto& e : corpus())
                j.push_back({{"name", e.name}, {"note", e.note}, {"digest", e.digest}});
            out << j.dump(2) << '\n';
            return;
        }
        for (const auto& e : corpus())
            out << e.name << "  " << e.note << '\n';
        return;
    }
    out << corpus_entry(name).text;
}

}  // namespace

PatternGraph load_pattern(const std::string& path)
{
    if (path.rfind(kCorpusPrefix, 0) == 0)
        return corpus_pattern(path.substr(kCorpusPrefix.size()));
    return parse_pattern(read_file(path));
}

HostGraph load_host(const std::string& path)
{
    if (path.rfind(kCorpusPrefix, 0) == 0)
        return parse_host(corpus_entry(path.substr(kCorpusPrefix.size())).text);
    return parse_host(read_file(path));
}

std::uint64_t pattern_hash(const PatternGraph& h)
{
    std::uint64_t x = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize(h)) {
        x ^= c;
        x *= 0x100000001b3ULL;
    }
    return x;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"H-factor lab: densities, collapsing, random models, factor search and threshold simulation",
                 "hfactor"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    Globals g;
    app.add_option("--seed", g.seed, "Master random seed")->capture_default_str();
    app.add_option("--budget", g.budget, "Search node budget")->capture_default_str();
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    std::string pattern_path, host_path;

    auto* analyze = app.add_subcommand("analyze", "Densities, balance class and threshold shape of a pattern");
    analyze->add_option("pattern", pattern_path, "Pattern file or corpus:<name>")->required();

    std::optional<std::uint64_t> collapse_seed;
    auto* collapse = app.add_subcommand("collapse", "Run the collapsing process on a pattern");
    collapse->add_option("pattern", pattern_path, "Pattern file or corpus:<name>")->required();
    collapse->add_option("--random-order", collapse_seed, "Pick witnesses uniformly with this seed");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Sample a random host graph as an edge list");
    gen->add_option("--model", gen_args.model, "gnp, partitioned or digraph")
        ->check(CLI::IsMember({"gnp", "partitioned", "digraph"}))
        ->capture_default_str();
    gen->add_option("--pattern", gen_args.pattern,
                    "Pattern for the partitioned model; directed pattern to orient a digraph sample");
    gen->add_option("--n", gen_args.n, "Vertex count (gnp, digraph)");
    gen->add_option("--r", gen_args.r, "Class size (partitioned, oriented digraph)");
    gen->add_option("--p", gen_args.p, "Edge probability")->capture_default_str();
    gen->add_option("--out", gen_args.out_path, "Write to this file instead of stdout");

    FactorArgs factor_args;
    auto* factor = app.add_subcommand("factor", "Find an H-factor (or count, partial, two-phase)");
    factor->add_option("host", factor_args.host, "Host file or corpus:<name>")->required();
    factor->add_option("pattern", factor_args.pattern, "Pattern file or corpus:<name>")->required();
    factor->add_flag("--count", factor_args.count, "Print the number of factors instead");
    factor->add_option("--partial", factor_args.partial, "Allow this fraction of vertices uncovered");
    factor->add_flag("--two-phase", factor_args.two_phase, "Use the collapse-based two-phase construction");
    factor->add_option("--split", factor_args.split, "Two-phase edge sharing: disjoint or overlapping")
        ->capture_default_str();
    factor->add_option("--p", factor_args.p, "Host edge probability (overlapping split)");

    FactorArgs count_args;
    auto* count = app.add_subcommand("count", "Count H-factors exactly");
    count->add_option("host", count_args.host, "Host file or corpus:<name>")->required();
    count->add_option("pattern", count_args.pattern, "Pattern file or corpus:<name>")->required();

    double diag_p = 1.0;
    std::optional<int> shearer_class;
    auto* diagnose = app.add_subcommand("diagnose", "Exact factor-weight diagnostics on a partitioned host");
    diagnose->add_option("host", host_path, "Partitioned host file")->required();
    diagnose->add_option("pattern", pattern_path, "Pattern file or corpus:<name>")->required();
    diagnose->add_option("--p", diag_p, "Edge probability used for the expectations")->capture_default_str();
    diagnose->add_option("--shearer", shearer_class, "Also run the entropy check on this class");

    SimArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Estimate factor probabilities by Monte Carlo");
    simulate->add_option("--pattern", sim_args.pattern, "Pattern file or corpus:<name>")->required();
    simulate->add_option("--model", sim_args.model, "gnp or partitioned")
        ->check(CLI::IsMember({"gnp", "partitioned"}))
        ->capture_default_str();
    simulate->add_option("--n", sim_args.n_list, "Host vertex counts")->required()->delimiter(',');
    simulate->add_option("--p", sim_args.p_list, "Edge probabilities")->required()->delimiter(',');
    simulate->add_option("--trials", sim_args.trials, "Trials per (n, p)")->capture_default_str();
    simulate->add_flag("--two-phase", sim_args.two_phase, "Use the two-phase construction");
    simulate->add_option("--split", sim_args.split, "Two-phase edge sharing")->capture_default_str();
    simulate->add_option("--out", sim_args.out_path, "CSV file; metadata goes to <out>.json");

    SimArgs scale_args;
    auto* scaling = app.add_subcommand("scaling", "Half-point bisection across n with a log-log fit");
    scaling->add_option("--pattern", scale_args.pattern, "Pattern file or corpus:<name>")->required();
    scaling->add_option("--model", scale_args.model, "gnp or partitioned")
        ->check(CLI::IsMember({"gnp", "partitioned"}))
        ->capture_default_str();
    scaling->add_option("--n", scale_args.n_list, "Increasing host vertex counts")->required()->delimiter(',');
    scaling->add_option("--trials", scale_args.trials, "Trials per probe")->capture_default_str();
    scaling->add_option("--depth", scale_args.depth, "Bisection steps")->capture_default_str();
    scaling->add_flag("--two-phase", scale_args.two_phase, "Use the two-phase construction");
    scaling->add_option("--split", scale_args.split, "Two-phase edge sharing")->capture_default_str();
    scaling->add_option("--out", scale_args.out_path, "CSV file; metadata goes to <out>.json");

    std::string corpus_name;
    bool corpus_check = false;
    auto* corpus_cmd = app.add_subcommand("corpus", "List bundled graphs or print one");
    corpus_cmd->add_option("name", corpus_name, "Graph to print");
    corpus_cmd->add_flag("--check", corpus_check, "Verify every golden digest");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return 2;
    }

    try {
        if (*analyze)
            cmd_analyze(pattern_path, g, out);
        else if (*collapse)
            cmd_collapse(pattern_path, collapse_seed, g, out);
        else if (*gen)
            cmd_gen(gen_args, g, out);
        else if (*factor)
            cmd_factor(factor_args, g, out);
        else if (*count) {
            count_args.count = true;
            cmd_factor(count_args, g, out);
        } else if (*diagnose)
            cmd_diagnose(host_path, pattern_path, diag_p, shearer_class, g, out);
        else if (*simulate)
            cmd_simulate(sim_args, g, out);
        else if (*scaling)
            cmd_scaling(scale_args, g, out);
        else if (*corpus_cmd)
            cmd_corpus(corpus_name, corpus_check, g, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace hfactor::cli
