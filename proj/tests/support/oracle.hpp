#pragma once

// Brute-force reference implementations used only by tests.  Everything here
// recomputes from first principles: costs enumerate every supernode pair and
// count crossing edges by scanning the whole edge set, errors materialize the
// reconstructed adjacency matrix entry by entry.  None of it shares code with
// the library's incremental bookkeeping, so agreement is meaningful.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <utility>
#include <vector>

#include <ssumm/graph.hpp>

namespace oracle {

using ssumm::Graph;
using ssumm::NodeId;

struct Consts {
    double overhead;  // bits charged per kept pair
    double log2v;     // bits per listed edge endpoint
};

inline Consts theory_consts(std::uint64_t num_nodes, std::uint64_t num_edges) {
    return {2.0 * std::log2(double(num_nodes)) + std::log2(double(num_edges)),
            std::log2(double(num_nodes))};
}

inline Consts tight_consts(std::uint64_t num_nodes, std::uint64_t num_supernodes,
                           std::uint64_t max_weight) {
    if (max_weight < 1) max_weight = 1;
    return {2.0 * std::log2(double(num_supernodes)) + std::log2(double(max_weight)),
            std::log2(double(num_nodes))};
}

inline double entropy_bits(std::uint64_t pi, std::uint64_t e) {
    if (pi == 0 || e == 0 || e == pi) return 0.0;
    double p = double(e) / double(pi);
    return double(pi) * (-(p * std::log2(p)) - (1.0 - p) * std::log2(1.0 - p));
}

inline double keep_bits(std::uint64_t pi, std::uint64_t e, const Consts& c) {
    return c.overhead + entropy_bits(pi, e);
}

inline double list_bits(std::uint64_t e, const Consts& c) { return 2.0 * double(e) * c.log2v; }

inline double pair_bits(std::uint64_t pi, std::uint64_t e, const Consts& c) {
    if (pi == 0) return 0.0;
    return std::min(keep_bits(pi, e, c), list_bits(e, c));
}

inline std::uint64_t pair_capacity(std::uint64_t sa, std::uint64_t sb, bool same) {
    return same ? sa * (sa - 1) / 2 : sa * sb;
}

/// Edges with one endpoint in A and the other in B (A == B allowed), counted
/// by scanning every edge of the graph.
inline std::uint64_t cross_edges(const Graph& g, const std::vector<NodeId>& A,
                                 const std::vector<NodeId>& B) {
    std::vector<char> in_a(g.num_nodes(), 0), in_b(g.num_nodes(), 0);
    for (NodeId u : A) in_a[u] = 1;
    for (NodeId u : B) in_b[u] = 1;
    std::uint64_t count = 0;
    for (auto [u, v] : g.edges())
        if ((in_a[u] && in_b[v]) || (in_a[v] && in_b[u])) ++count;
    return count;
}

/// Largest edge count between any two blocks (self pairs included).
inline std::uint64_t brute_max_weight(const Graph& g,
                                      const std::vector<std::vector<NodeId>>& blocks) {
    std::uint64_t w = 0;
    for (std::uint32_t a = 0; a < blocks.size(); ++a)
        for (std::uint32_t b = a; b < blocks.size(); ++b)
            w = std::max(w, cross_edges(g, blocks[a], blocks[b]));
    return w;
}

struct CostBreakdown {
    double total = 0.0;
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> pair_bits;  // key a <= b
    std::vector<double> supernode_bits;
};

/// Description length of a partition, every block pair enumerated.
inline CostBreakdown brute_total_cost(const Graph& g,
                                      const std::vector<std::vector<NodeId>>& blocks,
                                      const Consts& c) {
    CostBreakdown out;
    out.total = double(g.num_nodes()) * std::log2(double(g.num_nodes()));
    out.supernode_bits.assign(blocks.size(), 0.0);
    for (std::uint32_t a = 0; a < blocks.size(); ++a)
        for (std::uint32_t b = a; b < blocks.size(); ++b) {
            std::uint64_t pi = pair_capacity(blocks[a].size(), blocks[b].size(), a == b);
            std::uint64_t e = cross_edges(g, blocks[a], blocks[b]);
            double bits = pair_bits(pi, e, c);
            out.total += bits;
            out.pair_bits[{a, b}] = bits;
            out.supernode_bits[a] += bits;
            if (b != a) out.supernode_bits[b] += bits;
        }
    return out;
}

/// A plain description of a summary for the error oracle: which block every
/// node is in, block sizes, and the kept pairs with their weights.
struct FlatSummary {
    std::vector<std::uint32_t> membership;
    std::vector<std::uint64_t> block_sizes;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> kept;  // key a <= b
};

/// Lp error computed entry by entry over the full off-diagonal matrix.
inline double brute_re(const Graph& g, const FlatSummary& s, int p) {
    double sum = 0.0;
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        for (NodeId v = 0; v < g.num_nodes(); ++v) {
            if (u == v) continue;
            std::uint32_t a = s.membership[u], b = s.membership[v];
            auto key = std::make_pair(std::min(a, b), std::max(a, b));
            double w = 0.0;
            auto it = s.kept.find(key);
            if (it != s.kept.end()) {
                std::uint64_t pi = pair_capacity(s.block_sizes[a], s.block_sizes[b], a == b);
                w = double(it->second) / double(pi);
            }
            double diff = std::abs((g.has_edge(u, v) ? 1.0 : 0.0) - w);
            sum += p == 1 ? diff : diff * diff;
        }
    return p == 1 ? sum : std::sqrt(sum);
}

struct ReductionResult {
    double absolute = 0.0;  // bits attributed to A and B minus bits after merging them
    double relative = 0.0;  // absolute over the attributed bits; 0 when nothing is attributed
    double cost_a = 0.0;
    double cost_b = 0.0;
};

/// Saving of merging blocks ia and ib, recomputed from scratch.  Only pairs
/// involving the two blocks are enumerated; all other pair costs are unchanged
/// by the merge and cancel out.
inline ReductionResult brute_reduction(const Graph& g,
                                       const std::vector<std::vector<NodeId>>& blocks,
                                       std::uint32_t ia, std::uint32_t ib, const Consts& c) {
    auto block_pair = [&](const std::vector<NodeId>& x, const std::vector<NodeId>& y, bool same) {
        return pair_bits(pair_capacity(x.size(), y.size(), same), cross_edges(g, x, y), c);
    };
    ReductionResult r;
    for (std::uint32_t x = 0; x < blocks.size(); ++x) {
        r.cost_a += block_pair(blocks[ia], blocks[x], x == ia);
        r.cost_b += block_pair(blocks[ib], blocks[x], x == ib);
    }
    double shared = block_pair(blocks[ia], blocks[ib], false);
    double before = r.cost_a + r.cost_b - shared;

    std::vector<NodeId> merged = blocks[ia];
    merged.insert(merged.end(), blocks[ib].begin(), blocks[ib].end());
    double after = block_pair(merged, merged, true);
    for (std::uint32_t x = 0; x < blocks.size(); ++x)
        if (x != ia && x != ib) after += block_pair(merged, blocks[x], false);

    r.absolute = before - after;
    r.relative = before == 0.0 ? 0.0 : 1.0 - after / before;
    return r;
}

/// Fewest hops between any node of A and any node of B; -1 if disconnected.
inline int supernode_distance(const Graph& g, const std::vector<NodeId>& A,
                              const std::vector<NodeId>& B) {
    std::vector<int> dist(g.num_nodes(), -1);
    std::deque<NodeId> queue;
    for (NodeId u : A) {
        dist[u] = 0;
        queue.push_back(u);
    }
    std::vector<char> target(g.num_nodes(), 0);
    for (NodeId u : B) target[u] = 1;
    for (NodeId u : A)
        if (target[u]) return 0;
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (NodeId v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                if (target[v]) return dist[v];
                queue.push_back(v);
            }
    }
    return -1;
}

}  // namespace oracle
