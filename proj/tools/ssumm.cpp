// Command-line front end: summarize a graph under a bit budget, evaluate a
// stored summary against its graph, or benchmark runtime on node samples.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ssumm/engine.hpp>
#include <ssumm/eval.hpp>
#include <ssumm/graph.hpp>
#include <ssumm/summary_io.hpp>

namespace {

ssumm::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ssumm::Error("cannot open graph file: " + path);
    ssumm::IngestStats stats;
    ssumm::Graph g = ssumm::load_edge_list(in, &stats);
    if (stats.self_loops_dropped > 0 || stats.duplicates_dropped > 0)
        std::cerr << "note: " << path << ": dropped " << stats.self_loops_dropped
                  << " self-loop(s) and " << stats.duplicates_dropped << " duplicate edge(s)\n";
    return g;
}

void write_metrics(const std::string& path, const ssumm::MetricsRecord& m) {
    std::ofstream out(path);
    if (!out) throw ssumm::Error("cannot open metrics file for writing: " + path);
    out << ssumm::metrics_to_json(m).dump(2) << '\n';
    if (!out) throw ssumm::Error("failed writing metrics file: " + path);
}

void print_metrics(const ssumm::MetricsRecord& m) {
    std::cout << std::setprecision(17);
    std::cout << "size_bits  " << m.size_bits << '\n'
              << "size_ratio " << m.size_ratio << '\n'
              << "re1_norm   " << m.re1_norm << '\n'
              << "re2_norm   " << m.re2_norm << '\n';
}

struct SummarizeArgs {
    std::string input, output, metrics;
    double target_bits = 0.0;
    double target_ratio = 0.0;
    bool have_bits = false, have_ratio = false;
    std::uint32_t iterations = 20;
    std::uint64_t seed = 0;
    int norm = 1;
    std::string cost_mode = "tight";
    bool trace = false;
};

int run_summarize(const SummarizeArgs& a) {
    ssumm::Graph g = load_graph(a.input);
    ssumm::EngineConfig cfg;
    if (a.have_ratio) {
        if (!(a.target_ratio > 0.0) || a.target_ratio > 1.0)
            throw ssumm::InvalidArgument("--target-ratio must be in (0, 1]");
        cfg.target_bits = a.target_ratio * ssumm::input_size_bits(g);
    } else {
        cfg.target_bits = a.target_bits;
    }
    cfg.iterations = a.iterations;
    cfg.seed = a.seed;
    cfg.norm = a.norm;
    cfg.cost_mode = a.cost_mode == "theory" ? ssumm::CostMode::theory : ssumm::CostMode::tight;
    cfg.record_error_trace = a.trace;

    auto [summary, rep] = ssumm::summarize(g, cfg);

    {
        std::ofstream out(a.output);
        if (!out) throw ssumm::Error("cannot open summary file for writing: " + a.output);
        ssumm::write_summary(summary, g, out);
        if (!out) throw ssumm::Error("failed writing summary file: " + a.output);
    }
    ssumm::MetricsRecord m = ssumm::make_metrics(g, rep, cfg);
    if (!a.metrics.empty()) write_metrics(a.metrics, m);

    std::cout << std::setprecision(17);
    std::cout << "k          " << cfg.target_bits << '\n';
    print_metrics(m);
    std::cout << "runtime_ms " << m.runtime_ms << '\n'
              << "supernodes " << summary.num_supernodes() << '\n'
              << "superedges " << summary.num_superedges() << '\n'
              << "dropped    " << rep.superedges_dropped << '\n';
    if (a.trace) {
        std::cout << "t,threshold,merges,size_bits,error\n";
        for (const auto& row : rep.iterations)
            std::cout << row.t << ',' << row.threshold << ',' << row.merges << ','
                      << row.size_bits << ',' << row.error << '\n';
    }
    return 0;
}

int run_evaluate(const std::string& input, const std::string& summary_path,
                 const std::string& metrics_path) {
    ssumm::Graph g = load_graph(input);
    std::ifstream in(summary_path);
    if (!in) throw ssumm::Error("cannot open summary file: " + summary_path);
    ssumm::SummaryFileData data = ssumm::read_summary(in);
    ssumm::SummaryGraph s = ssumm::bind_summary(g, data);
    ssumm::MetricsRecord m = ssumm::evaluate_summary(g, s);
    if (!metrics_path.empty()) write_metrics(metrics_path, m);
    print_metrics(m);
    return 0;
}

struct BenchArgs {
    std::string input, output;
    std::vector<double> fractions{0.125, 0.25, 0.5, 1.0};
    double target_ratio = 0.5;
    std::uint32_t iterations = 20;
    std::uint64_t seed = 0;
    int norm = 1;
    std::string cost_mode = "tight";
};

int run_bench(const BenchArgs& a) {
    ssumm::Graph g = load_graph(a.input);
    ssumm::EngineConfig cfg;
    cfg.target_bits = 1.0;  // placeholder, per-sample budgets are set from the ratio
    cfg.iterations = a.iterations;
    cfg.seed = a.seed;
    cfg.norm = a.norm;
    cfg.cost_mode = a.cost_mode == "theory" ? ssumm::CostMode::theory : ssumm::CostMode::tight;
    auto points = ssumm::node_sample_scaling(g, a.fractions, cfg, a.target_ratio, &std::cerr);

    std::ostringstream csv;
    csv << std::setprecision(17);
    csv << "nodes,edges,runtime_ms,size_bits\n";
    for (const auto& p : points)
        csv << p.nodes << ',' << p.edges << ',' << p.runtime_ms << ',' << p.size_bits << '\n';
    if (!a.output.empty()) {
        std::ofstream out(a.output);
        if (!out) throw ssumm::Error("cannot open output file for writing: " + a.output);
        out << csv.str();
        if (!out) throw ssumm::Error("failed writing output file: " + a.output);
    }
    std::cout << csv.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lossy graph summarization under a size budget"};
    app.require_subcommand(1);

    SummarizeArgs sa;
    CLI::App* sum = app.add_subcommand("summarize", "Summarize a graph to a target bit size");
    sum->add_option("-i,--input", sa.input, "input edge list")->required();
    sum->add_option("-o,--output", sa.output, "output summary file")->required();
    sum->add_option("-m,--metrics", sa.metrics, "write metrics as JSON to this path");
    CLI::Option* bits = sum->add_option("--target-bits", sa.target_bits, "bit budget k");
    CLI::Option* ratio =
        sum->add_option("--target-ratio", sa.target_ratio, "budget as a fraction of input size");
    bits->excludes(ratio);
    ratio->excludes(bits);
    sum->add_option("--iterations", sa.iterations, "merge rounds")->capture_default_str();
    sum->add_option("--seed", sa.seed, "random seed")->capture_default_str();
    sum->add_option("--norm", sa.norm, "error norm (1 or 2)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    sum->add_option("--cost-mode", sa.cost_mode, "merge-cost constants")
        ->check(CLI::IsMember({"theory", "tight"}))
        ->capture_default_str();
    sum->add_flag("--trace", sa.trace, "print per-round progress after the run");

    std::string ev_input, ev_summary, ev_metrics;
    CLI::App* ev = app.add_subcommand("evaluate", "Recompute metrics of a stored summary");
    ev->add_option("-i,--input", ev_input, "input edge list")->required();
    ev->add_option("-s,--summary", ev_summary, "summary file to evaluate")->required();
    ev->add_option("-m,--metrics", ev_metrics, "write metrics as JSON to this path");

    BenchArgs ba;
    CLI::App* bench = app.add_subcommand("bench", "Time summarization on node-sampled subgraphs");
    bench->add_option("-i,--input", ba.input, "input edge list")->required();
    bench->add_option("-o,--output", ba.output, "also write the CSV to this path");
    bench->add_option("--fractions", ba.fractions, "node fractions to sample")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--target-ratio", ba.target_ratio, "budget as a fraction of each sample")
        ->capture_default_str();
    bench->add_option("--iterations", ba.iterations, "merge rounds")->capture_default_str();
    bench->add_option("--seed", ba.seed, "random seed")->capture_default_str();
    bench->add_option("--norm", ba.norm, "error norm (1 or 2)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    bench->add_option("--cost-mode", ba.cost_mode, "merge-cost constants")
        ->check(CLI::IsMember({"theory", "tight"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*sum) {
            sa.have_bits = bits->count() > 0;
            sa.have_ratio = ratio->count() > 0;
            if (!sa.have_bits && !sa.have_ratio) {
                std::cerr << "error: summarize needs exactly one of --target-bits or"
                             " --target-ratio\n";
                return 1;
            }
            return run_summarize(sa);
        }
        if (*ev) return run_evaluate(ev_input, ev_summary, ev_metrics);
        if (*bench) return run_bench(ba);
    } catch (const ssumm::BudgetInfeasible& e) {
        std::cerr << std::setprecision(17);
        std::cerr << "error: " << e.what() << "\n       smallest representable size is "
                  << e.floor_bits << " bits, budget was " << e.target_bits << " bits\n";
        return 2;
    } catch (const ssumm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
