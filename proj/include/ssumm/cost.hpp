#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "error.hpp"
#include "summary.hpp"

namespace ssumm {

/// How the per-pair encoding overhead is charged.  theory uses fixed bounds
/// from the input graph; tight re-reads the current summary shape each
/// iteration, charging what the output format actually needs.
enum class CostMode { theory, tight };

/// Constants shared by every pair-cost evaluation in one pass.
struct CostConstants {
    double pair_overhead;  ///< bits to record one kept pair (endpoints + weight)
    double log2_nodes;     ///< log2 |V|, the per-endpoint cost of listing an edge

    static CostConstants theory(std::uint64_t num_nodes, std::uint64_t num_edges) {
        if (num_nodes < 2 || num_edges == 0)
            throw InvalidArgument("cost constants need at least 2 nodes and 1 edge");
        double lv = std::log2(double(num_nodes));
        return {2.0 * lv + std::log2(double(num_edges)), lv};
    }

    static CostConstants tight(std::uint64_t num_nodes, std::uint64_t num_supernodes,
                               std::uint64_t max_weight) {
        if (num_nodes < 2 || num_supernodes == 0)
            throw InvalidArgument("cost constants need at least 2 nodes and 1 supernode");
        std::uint64_t w = std::max<std::uint64_t>(max_weight, 1);
        return {2.0 * std::log2(double(num_supernodes)) + std::log2(double(w)),
                std::log2(double(num_nodes))};
    }
};

/// Bits to correct a uniform reconstruction of a pair with capacity pi and e
/// present edges: pi times the binary entropy of e/pi.
inline double entropy_cost(std::uint64_t pi, std::uint64_t e) {
    if (e > pi) throw InvalidArgument("entropy_cost: more edges than node pairs");
    if (pi == 0 || e == 0 || e == pi) return 0.0;
    double s = double(e) / double(pi);
    return -double(pi) * (s * std::log2(s) + (1.0 - s) * std::log2(1.0 - s));
}

/// Bits to list e edges verbatim, two endpoints each.
inline double listing_cost(std::uint64_t e, std::uint64_t num_nodes) {
    return 2.0 * double(e) * std::log2(double(num_nodes));
}

/// Cost of one supernode pair under both encodings.
struct PairCost {
    double summarized;  ///< keep the pair: overhead plus entropy correction
    double listed;      ///< drop the pair and list its edges one by one
    double chosen;      ///< min of the two
    bool superedge;     ///< summarized strictly cheaper (ties go to listing)
};

inline PairCost pair_cost(std::uint64_t pi, std::uint64_t e, const CostConstants& c) {
    if (e > pi) throw InvalidArgument("pair_cost: more edges than node pairs");
    if (pi == 0) return {0.0, 0.0, 0.0, false};
    PairCost pc;
    pc.summarized = c.pair_overhead + entropy_cost(pi, e);
    pc.listed = 2.0 * double(e) * c.log2_nodes;
    pc.superedge = pc.summarized < pc.listed;
    pc.chosen = pc.superedge ? pc.summarized : pc.listed;
    return pc;
}

/// Sum of chosen pair costs over every pair involving a, self pair included.
inline double supernode_cost(const SummaryGraph& s, std::uint32_t a, const CostConstants& c) {
    detail::Accumulator acc;
    for (const auto& [b, info] : s.pair_map(a))
        acc.add(pair_cost(s.capacity(a, b), info.count, c).chosen);
    return acc.value();
}

/// Description length of the whole summary: node-assignment bits plus the
/// cheaper encoding of every supernode pair.  Pairs without crossing edges
/// cost nothing.
inline double total_cost(const Graph& g, const SummaryGraph& s, const CostConstants& c) {
    if (g.num_nodes() != s.num_nodes() || g.num_edges() != s.num_subedges())
        throw InvalidArgument("total_cost: summary does not match graph");
    detail::Accumulator acc;
    acc.add(double(s.num_nodes()) * std::log2(double(s.num_nodes())));
    s.for_each_pair([&](std::uint32_t a, std::uint32_t b, const PairInfo& info) {
        acc.add(pair_cost(s.capacity(a, b), info.count, c).chosen);
    });
    return acc.value();
}

}  // namespace ssumm
