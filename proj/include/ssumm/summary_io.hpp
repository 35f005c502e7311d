#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "summary.hpp"

namespace ssumm {

/// Parsed but not yet graph-checked content of a summary file.
struct SummaryFileData {
    std::uint64_t num_nodes = 0;
    std::uint64_t num_supernodes = 0;
    std::uint64_t num_superedges = 0;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> nodes;  ///< (original label, supernode)
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> edges;  ///< a <= b, weight
};

/// Text format, integers only:
///   SSUMM 1 <num_nodes> <num_supernodes> <num_superedges>
///   N <original_node_id> <supernode_id>     (one line per node)
///   E <a> <b> <weight>                      (one line per superedge, a <= b)
/// Supernode ids are renumbered densely in order of first appearance over the
/// node lines, so equal summaries serialize to identical bytes.
inline void write_summary(const SummaryGraph& s, const Graph& g, std::ostream& out) {
    if (g.num_nodes() != s.num_nodes() || g.num_edges() != s.num_subedges())
        throw InvalidArgument("write_summary: summary does not match graph");
    constexpr std::uint32_t kUnset = ~std::uint32_t(0);
    std::vector<std::uint32_t> file_id(s.membership().size(), kUnset);
    std::uint32_t next = 0;
    for (NodeId u = 0; u < s.num_nodes(); ++u) {
        std::uint32_t& fid = file_id[s.supernode_of(u)];
        if (fid == kUnset) fid = next++;
    }
    out << "SSUMM 1 " << s.num_nodes() << ' ' << s.num_supernodes() << ' ' << s.num_superedges()
        << '\n';
    for (NodeId u = 0; u < s.num_nodes(); ++u)
        out << "N " << g.original_id(u) << ' ' << file_id[s.supernode_of(u)] << '\n';
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> lines;
    lines.reserve(s.num_superedges());
    for (auto& [a, b, w] : s.superedges()) {
        std::uint32_t x = file_id[a], y = file_id[b];
        lines.emplace_back(std::min(x, y), std::max(x, y), w);
    }
    std::sort(lines.begin(), lines.end());
    for (auto& [a, b, w] : lines) out << "E " << a << ' ' << b << ' ' << w << '\n';
}

inline SummaryFileData read_summary(std::istream& in) {
    SummaryFileData d;
    std::string line;
    std::uint64_t lineno = 0;
    auto fail = [&](const std::string& why) {
        throw ParseError("summary line " + std::to_string(lineno) + ": " + why);
    };

    if (!std::getline(in, line)) throw ParseError("summary file is empty");
    lineno = 1;
    {
        std::istringstream hdr(line);
        std::string magic;
        std::uint64_t version = 0;
        if (!(hdr >> magic >> version) || magic != "SSUMM") fail("expected 'SSUMM <version>' header");
        if (version != 1) fail("unsupported version " + std::to_string(version));
        if (!(hdr >> d.num_nodes >> d.num_supernodes >> d.num_superedges)) fail("bad header counts");
        std::string rest;
        if (hdr >> rest) fail("trailing tokens in header");
    }
    if (d.num_nodes == 0 || d.num_supernodes == 0) fail("empty summaries are not representable");
    if (d.num_supernodes > d.num_nodes) fail("more supernodes than nodes");

    std::unordered_set<std::uint64_t> labels_seen;
    std::vector<bool> supernode_used(d.num_supernodes, false);
    for (std::uint64_t i = 0; i < d.num_nodes; ++i) {
        if (!std::getline(in, line)) {
            ++lineno;
            fail("expected " + std::to_string(d.num_nodes) + " node lines");
        }
        ++lineno;
        std::istringstream ls(line);
        std::string tag, rest;
        std::uint64_t label = 0, sid = 0;
        if (!(ls >> tag >> label >> sid) || tag != "N" || (ls >> rest))
            fail("expected 'N <node> <supernode>'");
        if (sid >= d.num_supernodes) fail("supernode id " + std::to_string(sid) + " out of range");
        if (!labels_seen.insert(label).second)
            fail("node " + std::to_string(label) + " assigned twice");
        supernode_used[sid] = true;
        d.nodes.emplace_back(label, std::uint32_t(sid));
    }
    for (std::uint64_t sid = 0; sid < d.num_supernodes; ++sid)
        if (!supernode_used[sid])
            throw ParseError("summary: supernode " + std::to_string(sid) + " has no members");

    std::unordered_set<std::uint64_t> pairs_seen;
    for (std::uint64_t i = 0; i < d.num_superedges; ++i) {
        if (!std::getline(in, line)) {
            ++lineno;
            fail("expected " + std::to_string(d.num_superedges) + " superedge lines");
        }
        ++lineno;
        std::istringstream ls(line);
        std::string tag, rest;
        std::uint64_t a = 0, b = 0;
        std::int64_t w = 0;
        if (!(ls >> tag >> a >> b >> w) || tag != "E" || (ls >> rest))
            fail("expected 'E <a> <b> <weight>'");
        if (a >= d.num_supernodes || b >= d.num_supernodes) fail("superedge endpoint out of range");
        if (a > b) fail("superedge endpoints must satisfy a <= b");
        if (w <= 0) fail("superedge weight must be positive");
        if (!pairs_seen.insert(a * d.num_supernodes + b).second) fail("duplicate superedge");
        d.edges.emplace_back(std::uint32_t(a), std::uint32_t(b), std::uint64_t(w));
    }
    ++lineno;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) fail("trailing content");
        ++lineno;
    }
    return d;
}

/// Attach parsed summary data to its graph: map labels back to dense ids,
/// recount the edges behind every superedge, and verify the declared weights.
inline SummaryGraph bind_summary(const Graph& g, const SummaryFileData& d) {
    if (d.num_nodes != g.num_nodes())
        throw ParseError("summary lists " + std::to_string(d.num_nodes) + " nodes but graph has " +
                         std::to_string(g.num_nodes()));
    std::unordered_map<std::uint64_t, NodeId> dense;
    dense.reserve(g.num_nodes());
    for (NodeId u = 0; u < g.num_nodes(); ++u) dense.emplace(g.original_id(u), u);

    std::vector<std::vector<NodeId>> blocks(d.num_supernodes);
    for (auto& [label, sid] : d.nodes) {
        auto it = dense.find(label);
        if (it == dense.end())
            throw ParseError("summary mentions node " + std::to_string(label) +
                             " which is not in the graph");
        blocks[sid].push_back(it->second);
    }
    // same node count plus no duplicate labels means the other direction holds too
    SummaryGraph s = SummaryGraph::from_partition(g, blocks, /*with_superedges=*/false);
    for (auto& [a, b, w] : d.edges) {
        std::uint64_t have = s.pair_count(a, b);
        if (have != w)
            throw ParseError("superedge " + std::to_string(a) + "-" + std::to_string(b) +
                             " declares weight " + std::to_string(w) + " but the graph has " +
                             std::to_string(have) + " crossing edges");
        s.set_superedge(a, b, true);
    }
    return s;
}

}  // namespace ssumm
