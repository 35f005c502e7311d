#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace ssumm {

using NodeId = std::uint32_t;

/// Counters collected while reading an edge list.
struct IngestStats {
    std::uint64_t lines_read = 0;
    std::uint64_t comment_lines = 0;
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicates_dropped = 0;
};

/// Simple undirected graph: no self-loops, no parallel edges, unweighted.
/// Nodes are dense ids 0..|V|-1; the label each id carried in the input file is
/// kept in original_ids(). Adjacency is CSR with sorted neighbor lists.
class Graph {
public:
    Graph() = default;

    /// Build from an explicit edge set. Edges are canonicalized, sorted and
    /// deduplicated; self-loops are rejected. original ids default to identity.
    static Graph from_edges(NodeId num_nodes, std::vector<std::pair<NodeId, NodeId>> edges,
                            std::vector<std::uint64_t> original_ids = {}) {
        for (auto& [u, v] : edges) {
            if (u == v) throw InvalidArgument("from_edges: self-loop on node " + std::to_string(u));
            if (u >= num_nodes || v >= num_nodes)
                throw InvalidArgument("from_edges: node id out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        Graph g;
        g.num_nodes_ = num_nodes;
        g.num_edges_ = edges.size();
        if (original_ids.empty()) {
            g.original_ids_.resize(num_nodes);
            for (NodeId u = 0; u < num_nodes; ++u) g.original_ids_[u] = u;
        } else {
            if (original_ids.size() != num_nodes)
                throw InvalidArgument("from_edges: original id table has wrong length");
            g.original_ids_ = std::move(original_ids);
        }
        g.build_adjacency(edges);
        return g;
    }

    NodeId num_nodes() const { return num_nodes_; }
    std::uint64_t num_edges() const { return num_edges_; }

    std::uint32_t degree(NodeId u) const { return std::uint32_t(offsets_[u + 1] - offsets_[u]); }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const {
        if (u == v) return false;
        if (degree(u) > degree(v)) std::swap(u, v);
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Label the node carried in the input file (== u for built graphs).
    std::uint64_t original_id(NodeId u) const { return original_ids_[u]; }
    const std::vector<std::uint64_t>& original_ids() const { return original_ids_; }

    /// Edges in canonical order (u < v, lexicographic).
    std::vector<std::pair<NodeId, NodeId>> edges() const {
        std::vector<std::pair<NodeId, NodeId>> out;
        out.reserve(num_edges_);
        for (NodeId u = 0; u < num_nodes_; ++u)
            for (NodeId v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Subgraph induced by a set of nodes (dense ids). The subset is sorted
    /// internally, so the result does not depend on its order; passing all
    /// nodes reproduces this graph exactly.
    Graph induced_subgraph(std::vector<NodeId> nodes) const {
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        std::vector<NodeId> to_sub(num_nodes_, kNoNode);
        std::vector<std::uint64_t> labels(nodes.size());
        for (NodeId i = 0; i < nodes.size(); ++i) {
            if (nodes[i] >= num_nodes_) throw InvalidArgument("induced_subgraph: node out of range");
            to_sub[nodes[i]] = i;
            labels[i] = original_ids_[nodes[i]];
        }
        std::vector<std::pair<NodeId, NodeId>> sub_edges;
        for (NodeId u : nodes)
            for (NodeId v : neighbors(u))
                if (u < v && to_sub[v] != kNoNode)
                    sub_edges.emplace_back(to_sub[u], to_sub[v]);
        return from_edges(NodeId(nodes.size()), std::move(sub_edges), std::move(labels));
    }

private:
    static constexpr NodeId kNoNode = ~NodeId(0);

    void build_adjacency(const std::vector<std::pair<NodeId, NodeId>>& edges) {
        offsets_.assign(std::size_t(num_nodes_) + 1, 0);
        for (auto [u, v] : edges) {
            ++offsets_[u + 1];
            ++offsets_[v + 1];
        }
        for (std::size_t i = 1; i <= num_nodes_; ++i) offsets_[i] += offsets_[i - 1];
        adj_.resize(2 * edges.size());
        std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for (auto [u, v] : edges) {
            adj_[cursor[u]++] = v;
            adj_[cursor[v]++] = u;
        }
        // edges arrive sorted by (u, v), so each neighbor list is already sorted
        // except for the reverse direction; sort per node to be safe.
        for (NodeId u = 0; u < num_nodes_; ++u)
            std::sort(adj_.begin() + std::ptrdiff_t(offsets_[u]),
                      adj_.begin() + std::ptrdiff_t(offsets_[u + 1]));
    }

    NodeId num_nodes_ = 0;
    std::uint64_t num_edges_ = 0;
    std::vector<std::uint64_t> offsets_;
    std::vector<NodeId> adj_;
    std::vector<std::uint64_t> original_ids_;
};

namespace detail {

inline bool parse_uint(std::string_view tok, std::uint64_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace detail

/// Read a whitespace-separated edge list: one "u v" pair per line, lines
/// starting with '#' or '%' ignored.  Self-loops and duplicate edges are
/// dropped (but their endpoints still count as nodes).  Node labels are
/// remapped to dense ids in first-seen order.
inline Graph load_edge_list(std::istream& in, IngestStats* stats = nullptr) {
    IngestStats local;
    std::unordered_map<std::uint64_t, NodeId> remap;
    std::vector<std::uint64_t> labels;
    std::vector<std::pair<NodeId, NodeId>> edges;

    auto intern = [&](std::uint64_t label) {
        auto [it, fresh] = remap.emplace(label, NodeId(labels.size()));
        if (fresh) labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        ++local.lines_read;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') {
            ++local.comment_lines;
            continue;
        }
        std::uint64_t vals[2];
        std::size_t pos = start;
        for (int k = 0; k < 2; ++k) {
            std::size_t end = line.find_first_of(" \t\r", pos);
            std::string_view tok(line.data() + pos, (end == std::string::npos ? line.size() : end) - pos);
            if (tok.empty() || !detail::parse_uint(tok, vals[k]))
                throw ParseError("edge list line " + std::to_string(lineno) + ": expected two integers");
            pos = line.find_first_not_of(" \t\r", end);
            if (k == 0 && pos == std::string::npos)
                throw ParseError("edge list line " + std::to_string(lineno) + ": expected two integers");
        }
        if (pos != std::string::npos)
            throw ParseError("edge list line " + std::to_string(lineno) + ": trailing tokens");
        NodeId u = intern(vals[0]);
        NodeId v = intern(vals[1]);
        if (u == v) {
            ++local.self_loops_dropped;
            continue;
        }
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }

    std::sort(edges.begin(), edges.end());
    std::size_t before = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    local.duplicates_dropped = before - edges.size();

    if (edges.empty()) throw ParseError("edge list contains no usable edges");

    NodeId num_nodes = NodeId(labels.size());
    Graph g = Graph::from_edges(num_nodes, std::move(edges), std::move(labels));
    if (stats) *stats = local;
    return g;
}

/// Write the graph back as an edge list using original labels.  Isolated nodes
/// (possible when the input contained self-loops) are emitted as "u u" lines so
/// that re-loading reproduces the node set as well as the edge set.
inline void write_edge_list(const Graph& g, std::ostream& out) {
    std::vector<bool> touched(g.num_nodes(), false);
    for (auto [u, v] : g.edges()) {
        touched[u] = touched[v] = true;
        out << g.original_id(u) << ' ' << g.original_id(v) << '\n';
    }
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        if (!touched[u]) out << g.original_id(u) << ' ' << g.original_id(u) << '\n';
}

/// Bits needed to store the graph as a plain adjacency list: 2|E| log2 |V|.
inline double input_size_bits(const Graph& g) {
    if (g.num_nodes() < 2)
        throw InvalidArgument("input_size_bits: graph needs at least 2 nodes");
    if (g.num_edges() == 0)
        throw InvalidArgument("input_size_bits: graph has no edges");
    return 2.0 * double(g.num_edges()) * std::log2(double(g.num_nodes()));
}

}  // namespace ssumm
