#pragma once

// Deterministic graph builders for tests.  Every generator is a pure function
// of its arguments, so frozen expectations stay valid across runs.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include <ssumm/graph.hpp>
#include <ssumm/random.hpp>

namespace gen {

using ssumm::Graph;
using ssumm::NodeId;
using ssumm::Rng;

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

inline Graph path(NodeId n) {
    EdgeList e;
    for (NodeId u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph::from_edges(n, e);
}

/// Node 0 joined to nodes 1..leaves.
inline Graph star(NodeId leaves) {
    EdgeList e;
    for (NodeId u = 1; u <= leaves; ++u) e.emplace_back(0, u);
    return Graph::from_edges(leaves + 1, e);
}

inline Graph clique(NodeId n) {
    EdgeList e;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

/// Uniform random graph with exactly m distinct edges.
inline Graph gnm(NodeId n, std::uint64_t m, std::uint64_t seed) {
    std::uint64_t cap = std::uint64_t(n) * (n - 1) / 2;
    if (n < 2 || m < 1 || m > cap) throw std::invalid_argument("gnm: bad shape");
    Rng rng(seed);
    EdgeList edges;
    if (m * 2 > cap) {  // dense: enumerate and subsample
        EdgeList all;
        all.reserve(cap);
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v) all.emplace_back(u, v);
        rng.shuffle(all);
        all.resize(m);
        edges = std::move(all);
    } else {
        std::unordered_set<std::uint64_t> used;
        used.reserve(m * 2);
        while (edges.size() < m) {
            NodeId u = NodeId(rng.bounded(n)), v = NodeId(rng.bounded(n));
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            if (used.insert(std::uint64_t(u) * n + v).second) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

/// Skewed-degree random graph with exactly m edges: preferential attachment by
/// endpoint sampling, then random edges or removals to hit m on the nose.
inline Graph scale_free(NodeId n, std::uint64_t m, std::uint64_t seed) {
    std::uint64_t cap = std::uint64_t(n) * (n - 1) / 2;
    if (n < 2 || m < 1 || m > cap) throw std::invalid_argument("scale_free: bad shape");
    Rng rng(seed);
    std::unordered_set<std::uint64_t> used;
    used.reserve(m * 2);
    EdgeList edges;
    edges.reserve(m + n);
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * m + 2);
    auto add = [&](NodeId u, NodeId v) {
        if (u > v) std::swap(u, v);
        if (!used.insert(std::uint64_t(u) * n + v).second) return false;
        edges.emplace_back(u, v);
        endpoints.push_back(u);
        endpoints.push_back(v);
        return true;
    };
    add(0, 1);
    for (NodeId u = 2; u < n; ++u) {
        auto want = std::uint64_t(std::llround(double(m - edges.size()) / double(n - u)));
        std::uint64_t attached = 0;
        for (std::uint64_t k = 0; k < want; ++k)
            for (int attempt = 0; attempt < 5; ++attempt) {
                NodeId v = endpoints[rng.bounded(endpoints.size())];
                if (v != u && add(u, v)) {
                    ++attached;
                    break;
                }
            }
        if (attached == 0) add(u, NodeId(rng.bounded(u)));
    }
    while (edges.size() < m) {
        NodeId u = NodeId(rng.bounded(n)), v = NodeId(rng.bounded(n));
        if (u != v) add(u, v);
    }
    if (edges.size() > m) {
        rng.shuffle(edges);
        edges.resize(m);
    }
    return Graph::from_edges(n, edges);
}

/// Random partition of the nodes of g into at most max_blocks nonempty blocks.
inline std::vector<std::vector<NodeId>> random_partition(const Graph& g, std::uint32_t max_blocks,
                                                         std::uint64_t seed) {
    Rng rng(seed);
    std::uint32_t want = 1 + std::uint32_t(rng.bounded(std::min<std::uint64_t>(max_blocks,
                                                                               g.num_nodes())));
    std::vector<NodeId> order(g.num_nodes());
    for (NodeId u = 0; u < g.num_nodes(); ++u) order[u] = u;
    rng.shuffle(order);
    std::vector<std::vector<NodeId>> blocks(want);
    for (std::uint32_t i = 0; i < want; ++i) blocks[i].push_back(order[i]);  // each block nonempty
    for (std::uint64_t i = want; i < order.size(); ++i)
        blocks[rng.bounded(want)].push_back(order[i]);
    return blocks;
}

}  // namespace gen
