#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "engine.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "random.hpp"
#include "summary.hpp"

namespace ssumm {

/// One run's results in the shape reports and plots consume.  re1_norm and
/// re2_norm divide the reconstruction error by |V|(|V|-1), the number of
/// off-diagonal matrix entries, so values are comparable across graphs.
struct MetricsRecord {
    double size_bits = 0.0;
    double size_ratio = 0.0;
    double re1_norm = 0.0;
    double re2_norm = 0.0;
    double runtime_ms = 0.0;
    std::uint64_t seed = 0;
    std::uint32_t T = 0;       ///< merge rounds the run was configured with
    double k = 0.0;            ///< bit budget the run was configured with
};

inline double normalized_error(const Graph& g, double raw_error) {
    double denom = double(g.num_nodes()) * (double(g.num_nodes()) - 1.0);
    return raw_error / denom;
}

/// Metrics of a finished summarize run.
inline MetricsRecord make_metrics(const Graph& g, const SummarizeReport& rep,
                                  const EngineConfig& cfg) {
    MetricsRecord m;
    m.size_bits = rep.summary_bits;
    m.size_ratio = rep.summary_bits / rep.input_bits;
    m.re1_norm = normalized_error(g, rep.error_l1);
    m.re2_norm = normalized_error(g, rep.error_l2);
    m.runtime_ms = rep.runtime_ms;
    m.seed = cfg.seed;
    m.T = cfg.iterations;
    m.k = cfg.target_bits;
    return m;
}

/// Metrics recomputed from a stored summary (no run parameters available).
inline MetricsRecord evaluate_summary(const Graph& g, const SummaryGraph& s) {
    MetricsRecord m;
    m.size_bits = s.size_bits();
    m.size_ratio = m.size_bits / input_size_bits(g);
    m.re1_norm = normalized_error(g, reconstruction_error(g, s, 1));
    m.re2_norm = normalized_error(g, reconstruction_error(g, s, 2));
    return m;
}

inline nlohmann::ordered_json metrics_to_json(const MetricsRecord& m) {
    return {{"size_bits", m.size_bits}, {"size_ratio", m.size_ratio},
            {"re1_norm", m.re1_norm},   {"re2_norm", m.re2_norm},
            {"runtime_ms", m.runtime_ms}, {"seed", m.seed},
            {"T", m.T},                 {"k", m.k}};
}

inline MetricsRecord metrics_from_json(const nlohmann::json& j) {
    MetricsRecord m;
    m.size_bits = j.at("size_bits").get<double>();
    m.size_ratio = j.at("size_ratio").get<double>();
    m.re1_norm = j.at("re1_norm").get<double>();
    m.re2_norm = j.at("re2_norm").get<double>();
    m.runtime_ms = j.at("runtime_ms").get<double>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.T = j.at("T").get<std::uint32_t>();
    m.k = j.at("k").get<double>();
    return m;
}

inline std::string metrics_csv_header() {
    return "size_bits,size_ratio,re1_norm,re2_norm,runtime_ms,seed,T,k";
}

inline std::string metrics_csv_row(const MetricsRecord& m) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%llu,%u,%.17g", m.size_bits,
                  m.size_ratio, m.re1_norm, m.re2_norm, m.runtime_ms,
                  (unsigned long long)m.seed, m.T, m.k);
    return buf;
}

/// Distance of every record to the ideal corner (smallest size, smallest
/// error) after min-max normalizing size_bits and re1_norm across the set.
/// A dimension in which all records agree contributes nothing.
inline std::vector<double> quality_distance(const std::vector<MetricsRecord>& records) {
    if (records.size() < 2)
        throw InvalidArgument("quality_distance: needs at least two records to compare");
    auto axis = [&](auto get) {
        double lo = get(records[0]), hi = lo;
        for (const auto& r : records) {
            lo = std::min(lo, get(r));
            hi = std::max(hi, get(r));
        }
        std::vector<double> out;
        out.reserve(records.size());
        for (const auto& r : records) out.push_back(hi > lo ? (get(r) - lo) / (hi - lo) : 0.0);
        return out;
    };
    std::vector<double> ns = axis([](const MetricsRecord& r) { return r.size_bits; });
    std::vector<double> ne = axis([](const MetricsRecord& r) { return r.re1_norm; });
    std::vector<double> dist(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) dist[i] = std::hypot(ns[i], ne[i]);
    return dist;
}

struct ScalePoint {
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
    double runtime_ms = 0.0;
    double size_bits = 0.0;
};

/// Runtime scaling probe: summarize node-induced subgraphs of growing size.
/// Each fraction samples ceil(f |V|) nodes uniformly; the budget scales with
/// the subgraph (target_ratio of its plain size).  Fraction 1.0 runs the full
/// graph unchanged, so it matches a direct summarize call with the same seed.
/// Subgraphs that end up edgeless are skipped with a note to `warnings`.
inline std::vector<ScalePoint> node_sample_scaling(const Graph& g,
                                                   const std::vector<double>& fractions,
                                                   EngineConfig cfg, double target_ratio,
                                                   std::ostream* warnings = nullptr) {
    if (!(target_ratio > 0.0) || target_ratio > 1.0)
        throw InvalidArgument("node_sample_scaling: target_ratio must be in (0, 1]");
    Rng sampler(cfg.seed);
    std::vector<ScalePoint> points;
    for (double f : fractions) {
        if (!(f > 0.0) || f > 1.0)
            throw InvalidArgument("node_sample_scaling: fractions must be in (0, 1]");
        Graph sub;
        if (f == 1.0) {
            sub = g;
        } else {
            std::vector<NodeId> ids(g.num_nodes());
            for (NodeId u = 0; u < g.num_nodes(); ++u) ids[u] = u;
            sampler.shuffle(ids);
            ids.resize(NodeId(std::ceil(f * double(g.num_nodes()))));
            sub = g.induced_subgraph(std::move(ids));
        }
        if (sub.num_edges() == 0) {
            if (warnings)
                *warnings << "note: fraction " << f << " induced an edgeless subgraph, skipped\n";
            continue;
        }
        EngineConfig run = cfg;
        run.target_bits = target_ratio * input_size_bits(sub);
        auto [summary, rep] = summarize(sub, run);
        points.push_back({sub.num_nodes(), sub.num_edges(), rep.runtime_ms, rep.summary_bits});
    }
    return points;
}

struct ConvergenceRow {
    double target_bits = 0.0;
    std::uint32_t t = 0;
    double error = 0.0;
};

/// Error after each merge round, for a list of budgets.  Rounds the run never
/// reached (early exit once the budget was met) repeat the last observed
/// error, so every budget contributes exactly cfg.iterations rows.
inline std::vector<ConvergenceRow> convergence_trace(const Graph& g,
                                                     const std::vector<double>& budgets,
                                                     EngineConfig cfg) {
    std::vector<ConvergenceRow> rows;
    for (double k : budgets) {
        EngineConfig run = cfg;
        run.target_bits = k;
        run.record_error_trace = true;
        auto [summary, rep] = summarize(g, run);
        double final_error = cfg.norm == 2 ? rep.error_l2 : rep.error_l1;
        double last = final_error;
        for (std::uint32_t t = 1; t <= run.iterations; ++t) {
            if (t <= rep.iterations.size()) last = rep.iterations[t - 1].error;
            rows.push_back({k, t, last});
        }
    }
    return rows;
}

}  // namespace ssumm
