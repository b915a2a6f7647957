// Command-line front end: family generation, C_k / γ_k / d_k computation,
// partition validation, the domatic construction, and the theorem harness.

#include <kcoal/coalition.hpp>
#include <kcoal/domatic.hpp>
#include <kcoal/domination.hpp>
#include <kcoal/error.hpp>
#include <kcoal/families.hpp>
#include <kcoal/verifier.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace kcoal;

namespace {

struct Args {
    std::string graph, output, partition_file, theorem, k_spec;
    int k = 1;
    bool oracle = false, certificate = false, deterministic = false, trust = false, show_partition = false,
         json = false;
    int max_vertices = 14;
    std::uint64_t node_limit = 1'000'000'000;
    std::optional<int> max_n;
    unsigned jobs = 0;
};

Partition load_partition(const std::string & path, int n)
{
    std::ifstream in(path);
    if (! in)
        throw InvalidArgument("cannot open partition file \"" + path + "\"");
    return read_partition(in, n);
}

/// "K" or "MIN..MAX".
std::pair<int, int> parse_k_range(const std::string & text)
{
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int k = std::stoi(text);
            return {k, k};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    }
    catch (const std::exception &) {
        throw InvalidArgument("--k expects K or MIN..MAX, got \"" + text + "\"");
    }
}

int run_gen(const Args & a)
{
    std::string text = to_edge_list(generate(parse_family(a.graph)));
    if (a.output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(a.output);
    if (! (out << text))
        throw InvalidArgument("cannot write \"" + a.output + "\"");
    return 0;
}

int run_cnum(const Args & a)
{
    Graph g = load_graph(a.graph);
    SolverOptions options;
    options.max_vertices = a.max_vertices;
    options.node_limit = a.node_limit;
    options.trust_paper_bounds = a.trust;
    SolveResult r = a.oracle ? coalition_number_oracle(g, a.k) : coalition_number(g, a.k, options);
    if (! r.value) {
        std::cout << "undefined\n";
        std::cerr << "note: no k-coalition partition exists (a k-dominating block needs exactly k vertices, "
                     "every other block a coalition partner)\n";
        return 0;
    }
    std::cout << *r.value << "\n";
    if (a.certificate)
        std::cout << certificate_json(*r.witness, *r.certificate) << "\n";
    return 0;
}

int run_gamma(const Args & a)
{
    std::cout << gamma_k(load_graph(a.graph), a.k) << "\n";
    return 0;
}

int run_domatic(const Args & a)
{
    Partition p = find_max_domatic_partition(load_graph(a.graph), a.k);
    std::cout << p.size() << "\n";
    if (a.show_partition)
        std::cout << to_partition_text(p);
    return 0;
}

int run_validate(const Args & a)
{
    Graph g = load_graph(a.graph);
    Partition p = load_partition(a.partition_file, g.order());
    ValidationResult v = validate_partition(g, p, a.k);
    if (v) {
        std::cout << certificate_json(p, *v.certificate) << "\n";
        return 0;
    }
    std::cout << "invalid: block " << v.failing_block << " " << p[v.failing_block].to_string() << ": " << v.reason
              << "\n";
    return 2;
}

int run_construct(const Args & a)
{
    ConstructionResult r = construct_from_domatic(load_graph(a.graph), a.k);
    std::cout << certificate_json(r.partition, r.certificate) << "\n";
    return 0;
}

int run_cgraph(const Args & a)
{
    Graph g = load_graph(a.graph);
    Partition p = load_partition(a.partition_file, g.order());
    std::cout << to_edge_list(coalition_graph(g, p, a.k));
    return 0;
}

int run_verify(const Args & a)
{
    VerifyOptions o;
    o.max_n = a.max_n;
    o.jobs = a.deterministic ? 1 : a.jobs;
    o.solver.max_vertices = a.max_vertices;
    o.solver.node_limit = a.node_limit;
    if (! a.k_spec.empty()) {
        auto [lo, hi] = parse_k_range(a.k_spec);
        o.k_min = lo;
        o.k_max = hi;
    }
    std::vector<VerificationReport> reports;
    if (a.theorem == "all")
        reports = verify_all(o);
    else
        reports.push_back(verify(a.theorem, o));
    if (a.deterministic)
        for (auto & r : reports)
            r.elapsed = {};

    if (a.json)
        std::cout << (a.theorem == "all" ? reports_json(reports) : report_json(reports.front())) << "\n";
    else
        for (auto & r : reports)
            std::cout << report_text(r);
    for (auto & r : reports)
        if (r.budget_exceeded > 0)
            std::cerr << "budget: " << r.theorem_id << " skipped " << r.budget_exceeded
                      << " instances over the solver budget\n";
    return exit_code(reports);
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Exact k-coalition numbers of small graphs"};
    app.require_subcommand(1);
    Args a;

    auto graph_arg = [&](CLI::App * sub) {
        sub->add_option("graph", a.graph, "edge-list file, or family spec such as cycle:6")->required();
    };
    auto k_opt = [&](CLI::App * sub) {
        sub->add_option("-k", a.k, "domination multiplicity k >= 1")->required()->check(CLI::PositiveNumber);
    };
    auto budget_opts = [&](CLI::App * sub) {
        sub->add_option("--max-vertices", a.max_vertices, "solver vertex budget");
        sub->add_option("--node-limit", a.node_limit, "solver node budget");
    };

    auto gen = app.add_subcommand("gen", "emit the canonical edge list of a family instance");
    gen->add_option("family", a.graph, "family spec")->required();
    gen->add_option("-o", a.output, "output file");

    auto cnum = app.add_subcommand("cnum", "k-coalition number C_k(G)");
    k_opt(cnum);
    cnum->add_flag("--oracle", a.oracle, "use exhaustive enumeration (n <= 11)");
    cnum->add_flag("--certificate", a.certificate, "print the witness and its certificate as JSON");
    cnum->add_flag("--deterministic", a.deterministic, "sequential search, lexicographically first optimum");
    cnum->add_flag("--trust-paper-bounds", a.trust, "stop at the published upper bounds");
    budget_opts(cnum);
    graph_arg(cnum);

    auto gamma = app.add_subcommand("gamma", "k-domination number");
    k_opt(gamma);
    graph_arg(gamma);

    auto domatic = app.add_subcommand("domatic", "k-domatic number");
    k_opt(domatic);
    domatic->add_flag("--partition", a.show_partition, "also print a maximum k-domatic partition");
    graph_arg(domatic);

    auto validate = app.add_subcommand("validate", "check a k-coalition partition");
    k_opt(validate);
    validate->add_option("--partition", a.partition_file, "partition file")->required();
    graph_arg(validate);

    auto construct = app.add_subcommand("construct", "k-coalition partition built from a maximum k-domatic partition");
    k_opt(construct);
    graph_arg(construct);

    auto cgraph = app.add_subcommand("cgraph", "coalition graph of a k-coalition partition, as an edge list");
    k_opt(cgraph);
    cgraph->add_option("--partition", a.partition_file, "partition file")->required();
    graph_arg(cgraph);

    auto verify = app.add_subcommand("verify", "check a registered claim over its corpus");
    verify->add_option("theorem", a.theorem, "theorem id or 'all'")->required();
    verify->add_option("--max-n", a.max_n, "corpus size parameter");
    verify->add_option("--k", a.k_spec, "K or MIN..MAX");
    verify->add_flag("--json", a.json, "emit JSON");
    verify->add_option("--jobs", a.jobs, "worker threads (0 = all cores)");
    verify->add_flag("--deterministic", a.deterministic, "single worker, zeroed timings");
    budget_opts(verify);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*gen) return run_gen(a);
        if (*cnum) return run_cnum(a);
        if (*gamma) return run_gamma(a);
        if (*domatic) return run_domatic(a);
        if (*validate) return run_validate(a);
        if (*construct) return run_construct(a);
        if (*cgraph) return run_cgraph(a);
        if (*verify) return run_verify(a);
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 1;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
