#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cost.hpp"
#include "error.hpp"
#include "random.hpp"
#include "shingle.hpp"
#include "summary.hpp"

namespace ssumm {

struct EngineConfig {
    double target_bits = 0.0;             ///< bit budget for the finished summary
    std::uint32_t iterations = 20;        ///< merge rounds (T)
    std::uint64_t seed = 0;
    int norm = 1;                         ///< error norm p, 1 or 2
    CostMode cost_mode = CostMode::tight;
    std::uint32_t max_candidate_size = 500;
    std::uint32_t max_shingle_depth = 10;
    bool record_error_trace = false;      ///< compute the error after every round

    void validate() const {
        if (!(target_bits > 0.0)) throw InvalidArgument("config: target_bits must be positive");
        if (iterations == 0) throw InvalidArgument("config: iterations must be >= 1");
        if (norm != 1 && norm != 2) throw InvalidArgument("config: norm must be 1 or 2");
        if (max_candidate_size < 2) throw InvalidArgument("config: max_candidate_size must be >= 2");
        if (max_shingle_depth == 0) throw InvalidArgument("config: max_shingle_depth must be >= 1");
    }
};

struct IterationTrace {
    std::uint32_t t = 0;
    double threshold = 0.0;
    std::uint64_t merges = 0;
    double size_bits = 0.0;
    double error = -1.0;  ///< reconstruction error after the round, -1 if not recorded
};

struct SummarizeReport {
    double input_bits = 0.0;
    double summary_bits = 0.0;
    double error_l1 = 0.0;
    double error_l2 = 0.0;
    std::uint64_t merges = 0;
    std::uint64_t superedges_dropped = 0;
    double runtime_ms = 0.0;
    std::vector<IterationTrace> iterations;
};

struct MergeEvent {
    std::uint32_t lhs = 0;
    std::uint32_t rhs = 0;
    std::uint32_t merged = 0;
    double reduction = 0.0;
    std::uint32_t iteration = 0;
};

/// Optional hooks into the main loop; used by tests and tracing.
struct EngineObservers {
    /// After every accepted merge, with the state already updated.
    std::function<void(const SummaryGraph&, const MergeEvent&, const CostConstants&)> on_merge;
    /// At the start of every round, after the cost constants were fixed.
    std::function<void(std::uint32_t, const CostConstants&, const SummaryGraph&)> on_iteration;
};

/// Scratch space reused across merge evaluations.
struct MergeWorkspace {
    std::unordered_map<std::uint32_t, std::uint64_t> combined;
};

/// Acceptance bar for round t of T: 1/(1+t), except 0 in the final round so
/// that any strictly positive saving is taken.
inline double merge_threshold(std::uint32_t t, std::uint32_t total_rounds) {
    if (t < 1 || t > total_rounds) throw InvalidArgument("merge_threshold: round out of range");
    return t == total_rounds ? 0.0 : 1.0 / (1.0 + double(t));
}

/// Fraction of the description length attributed to a and b that a merge would
/// save.  0 when nothing is attributed to them (both isolated).
inline double relative_reduction(const SummaryGraph& s, std::uint32_t a, std::uint32_t b,
                                 const CostConstants& c, MergeWorkspace* ws = nullptr) {
    if (a == b) throw InvalidArgument("relative_reduction: needs two distinct supernodes");
    double before = supernode_cost(s, a, c) + supernode_cost(s, b, c) -
                    pair_cost(s.capacity(a, b), s.pair_count(a, b), c).chosen;

    MergeWorkspace local;
    auto& combined = (ws ? *ws : local).combined;
    combined.clear();
    std::uint64_t self = 0;
    for (const auto& [n, info] : s.pair_map(a)) {
        if (n == a || n == b)
            self += info.count;
        else
            combined[n] += info.count;
    }
    for (const auto& [n, info] : s.pair_map(b)) {
        if (n == a) continue;  // counted from a's side
        if (n == b)
            self += info.count;
        else
            combined[n] += info.count;
    }
    std::uint64_t sz = std::uint64_t(s.supernode_size(a)) + s.supernode_size(b);
    detail::Accumulator after;
    after.add(pair_cost(sz * (sz - 1) / 2, self, c).chosen);
    for (const auto& [n, count] : combined)
        after.add(pair_cost(sz * s.supernode_size(n), count, c).chosen);

    if (before == 0.0) return 0.0;
    return 1.0 - after.value() / before;
}

/// Merge a and b, then decide superedges for the merged supernode's pairs: a
/// pair keeps one only if the summarized encoding is strictly cheaper and
/// keeping it does not increase the reconstruction error.  Under the L1 norm
/// that means at least half the pair's capacity is present; under L2 a kept
/// pair never hurts.  Returns the surviving id.
inline std::uint32_t merge_and_sparsify(SummaryGraph& s, std::uint32_t a, std::uint32_t b,
                                        const CostConstants& c, int norm) {
    if (norm != 1 && norm != 2) throw InvalidArgument("merge_and_sparsify: norm must be 1 or 2");
    std::uint32_t merged = s.merge(a, b);
    for (const auto& [n, info] : s.pair_map(merged)) {
        bool error_safe = norm == 2 || 2 * info.count >= s.capacity(merged, n);
        if (error_safe && pair_cost(s.capacity(merged, n), info.count, c).superedge)
            s.set_superedge(merged, n, true);
    }
    return merged;
}

/// Randomized greedy pass over one candidate set: repeatedly sample a few
/// pairs, merge the best one if its relative reduction clears the round's
/// threshold, and stop after enough consecutive failures.  The set shrinks in
/// place as members merge.  Returns the number of merges performed.
inline std::uint64_t process_candidate_set(SummaryGraph& s, CandidateSet& cand, std::uint32_t t,
                                           std::uint32_t total_rounds, const CostConstants& c,
                                           int norm, Rng& rng,
                                           const EngineObservers* obs = nullptr,
                                           MergeWorkspace* ws = nullptr) {
    double theta = merge_threshold(t, total_rounds);
    std::uint64_t merges = 0;
    std::uint32_t num_skips = 0;
    while (cand.size() >= 2 &&
           double(num_skips) < std::max(std::log2(double(cand.size())), 1.0)) {
        std::uint32_t samples =
            std::max<std::uint32_t>(std::uint32_t(std::bit_width(cand.size() - 1)), 1);
        std::uint32_t best_a = 0, best_b = 0;
        double best = 0.0;
        bool have = false;
        for (std::uint32_t k = 0; k < samples; ++k) {
            std::uint64_t i = rng.bounded(cand.size());
            std::uint64_t j;
            do {
                j = rng.bounded(cand.size());
            } while (j == i);
            std::uint32_t x = cand[std::min(i, j)], y = cand[std::max(i, j)];
            double r = relative_reduction(s, x, y, c, ws);
            if (!have || r > best ||
                (r == best && std::make_pair(x, y) < std::make_pair(best_a, best_b))) {
                best = r;
                best_a = x;
                best_b = y;
                have = true;
            }
        }
        if (best > theta) {
            std::uint32_t merged = merge_and_sparsify(s, best_a, best_b, c, norm);
            std::uint32_t gone = merged == best_a ? best_b : best_a;
            cand.erase(std::lower_bound(cand.begin(), cand.end(), gone));
            ++merges;
            num_skips = 0;
            if (obs && obs->on_merge)
                obs->on_merge(s, MergeEvent{best_a, best_b, merged, best, t}, c);
        } else {
            ++num_skips;
        }
    }
    return merges;
}

/// How much the error grows if a superedge with weight e over capacity pi is
/// dropped, counting each unordered node pair once (double it for the full
/// matrix).  For the L2 norm this is the growth of the squared error.  Used
/// only for ranking, where the constant factor is irrelevant.
inline double drop_increase(std::uint64_t e, std::uint64_t pi, int norm) {
    if (norm == 1) return (2.0 * double(e) / double(pi) - 1.0) * double(e);
    if (norm == 2) return double(e) * double(e) / double(pi);
    throw InvalidArgument("drop_increase: norm must be 1 or 2");
}

/// Number of superedges that must go to close the gap to the budget, assuming
/// each one frees the current per-superedge bit cost.
inline std::uint64_t sparsify_batch_size(double size_bits, double target_bits,
                                         std::uint32_t num_supernodes, std::uint64_t max_weight) {
    if (size_bits <= target_bits) return 0;
    double per_edge = 2.0 * std::log2(double(num_supernodes)) +
                      std::log2(double(std::max<std::uint64_t>(max_weight, 1)));
    if (!(per_edge > 0.0))
        throw InvalidArgument("sparsify_batch_size: superedges are free, nothing to gain");
    return std::uint64_t(std::ceil((size_bits - target_bits) / per_edge));
}

/// Drop superedges in batches, cheapest error increase first, until the
/// summary fits the budget.  Throws BudgetInfeasible if even the edge-free
/// summary is too large (the node assignment alone exceeds the budget).
inline std::uint64_t further_sparsify(SummaryGraph& s, double target_bits, int norm) {
    if (!(target_bits > 0.0)) throw InvalidArgument("further_sparsify: budget must be positive");
    std::uint64_t dropped = 0;
    while (true) {
        double size = s.size_bits();
        if (size <= target_bits) break;
        if (s.num_superedges() == 0)
            throw BudgetInfeasible(
                "budget of " + std::to_string(target_bits) +
                    " bits is below the node-assignment floor of " + std::to_string(size) +
                    " bits; no summary of this graph fits",
                size, target_bits);
        std::uint64_t batch = sparsify_batch_size(size, target_bits, s.num_supernodes(),
                                                  s.max_weight());
        auto edges = s.superedges();
        if (batch >= edges.size()) {
            for (auto& [a, b, w] : edges) s.set_superedge(a, b, false);
            dropped += edges.size();
            continue;
        }
        std::vector<double> keys(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto& [a, b, w] = edges[i];
            keys[i] = drop_increase(w, s.capacity(a, b), norm);
        }
        std::vector<double> order = keys;
        std::nth_element(order.begin(), order.begin() + std::ptrdiff_t(batch - 1), order.end());
        double cutoff = order[batch - 1];
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (keys[i] <= cutoff) {
                auto& [a, b, w] = edges[i];
                s.set_superedge(a, b, false);
                ++dropped;
            }
    }
    return dropped;
}

/// Full pipeline: start from the one-node-per-supernode summary, run up to
/// cfg.iterations randomized merge rounds with a decaying acceptance bar, then
/// sparsify down to the bit budget if the merges alone did not reach it.
inline std::pair<SummaryGraph, SummarizeReport> summarize(const Graph& g, const EngineConfig& cfg,
                                                          const EngineObservers* obs = nullptr) {
    cfg.validate();
    auto started = std::chrono::steady_clock::now();
    SummaryGraph s = SummaryGraph::singleton(g);
    Rng rng(cfg.seed);
    MergeWorkspace ws;
    SummarizeReport rep;
    rep.input_bits = input_size_bits(g);

    for (std::uint32_t t = 1; t <= cfg.iterations; ++t) {
        if (s.size_bits() <= cfg.target_bits) break;
        CostConstants consts =
            cfg.cost_mode == CostMode::theory
                ? CostConstants::theory(g.num_nodes(), g.num_edges())
                : CostConstants::tight(g.num_nodes(), s.num_supernodes(), s.max_weight());
        if (obs && obs->on_iteration) obs->on_iteration(t, consts, s);
        auto sets = generate_candidates(s, g, rng, {cfg.max_candidate_size, cfg.max_shingle_depth});
        std::uint64_t merges = 0;
        for (CandidateSet& cand : sets)
            merges += process_candidate_set(s, cand, t, cfg.iterations, consts, cfg.norm, rng,
                                            obs, &ws);
        rep.merges += merges;
        IterationTrace tr{t, merge_threshold(t, cfg.iterations), merges, s.size_bits(), -1.0};
        if (cfg.record_error_trace) tr.error = s.reconstruction_error(cfg.norm);
        rep.iterations.push_back(tr);
    }

    if (s.size_bits() > cfg.target_bits)
        rep.superedges_dropped = further_sparsify(s, cfg.target_bits, cfg.norm);
    rep.summary_bits = s.size_bits();
    rep.error_l1 = s.reconstruction_error(1);
    rep.error_l2 = s.reconstruction_error(2);
    rep.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return {std::move(s), std::move(rep)};
}

}  // namespace ssumm
