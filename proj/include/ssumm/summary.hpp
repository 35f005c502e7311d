#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace ssumm {

namespace detail {

/// Neumaier compensated summation: keeps RE and cost totals reproducible to a
/// few ulps regardless of accumulation order.
class Accumulator {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace detail

/// Aggregated view of one supernode pair: how many original edges cross it and
/// whether the summary currently keeps a superedge for it.  Pairs with no
/// crossing edges are never stored.
struct PairInfo {
    std::uint64_t count = 0;  ///< number of original edges between the two groups
    bool superedge = false;   ///< kept in the output? weight equals count when kept
};

/// A summary of a graph: a partition of the nodes into supernodes plus a set of
/// weighted superedges.  Supernode ids are stable handles; merging two
/// supernodes keeps the id of the larger side (ties keep the smaller id) and
/// retires the other.  Edge counts between supernode pairs are maintained
/// incrementally; all bit sizes and errors derive from them on demand.
class SummaryGraph {
public:
    using PairMap = std::unordered_map<std::uint32_t, PairInfo>;

    /// One supernode per node, one superedge per edge (weight 1).
    static SummaryGraph singleton(const Graph& g) {
        SummaryGraph s;
        s.init_ids(g.num_nodes(), g.num_nodes(), g.num_edges());
        for (NodeId u = 0; u < g.num_nodes(); ++u) {
            s.membership_[u] = u;
            s.sizes_[u] = 1;
            s.members_[u] = {u};
        }
        for (NodeId u = 0; u < g.num_nodes(); ++u)
            for (NodeId v : g.neighbors(u))
                if (u < v) {
                    s.pairs_[u].emplace(v, PairInfo{1, true});
                    s.pairs_[v].emplace(u, PairInfo{1, true});
                    ++s.num_superedges_;
                }
        if (s.num_superedges_ > 0) s.weight_hist_[1] = s.num_superedges_;
        return s;
    }

    /// Build from an explicit partition (block index == supernode id).  When
    /// with_superedges is set, every pair with at least one crossing edge gets
    /// a superedge weighted by its edge count.
    static SummaryGraph from_partition(const Graph& g,
                                       const std::vector<std::vector<NodeId>>& blocks,
                                       bool with_superedges = true) {
        SummaryGraph s;
        s.init_ids(g.num_nodes(), std::uint32_t(blocks.size()), g.num_edges());
        std::vector<bool> seen(g.num_nodes(), false);
        for (std::uint32_t b = 0; b < blocks.size(); ++b) {
            for (NodeId u : blocks[b]) {
                if (u >= g.num_nodes() || seen[u])
                    throw InvalidArgument("from_partition: blocks do not partition the nodes");
                seen[u] = true;
                s.membership_[u] = b;
            }
            s.members_[b] = blocks[b];
            std::sort(s.members_[b].begin(), s.members_[b].end());
            s.sizes_[b] = std::uint32_t(blocks[b].size());
            if (blocks[b].empty()) throw InvalidArgument("from_partition: empty block");
        }
        if (std::uint64_t(std::count(seen.begin(), seen.end(), true)) != g.num_nodes())
            throw InvalidArgument("from_partition: blocks do not cover all nodes");
        for (NodeId u = 0; u < g.num_nodes(); ++u)
            for (NodeId v : g.neighbors(u)) {
                if (u >= v) continue;
                std::uint32_t a = s.membership_[u], b = s.membership_[v];
                s.bump_pair(a, b);
            }
        if (with_superedges)
            for (std::uint32_t a = 0; a < s.pairs_.size(); ++a)
                for (auto& [b, info] : s.pairs_[a])
                    if (b >= a && !info.superedge) s.set_superedge(a, b, true);
        return s;
    }

    std::uint32_t num_nodes() const { return num_nodes_; }
    std::uint64_t num_subedges() const { return num_subedges_; }
    std::uint32_t num_supernodes() const { return num_supernodes_; }
    std::uint64_t num_superedges() const { return num_superedges_; }

    bool is_alive(std::uint32_t a) const { return a < sizes_.size() && sizes_[a] > 0; }

    std::uint32_t supernode_size(std::uint32_t a) const {
        check_alive(a);
        return sizes_[a];
    }

    std::uint32_t supernode_of(NodeId u) const {
        if (u >= num_nodes_) throw InvalidArgument("supernode_of: node out of range");
        return membership_[u];
    }

    const std::vector<std::uint32_t>& membership() const { return membership_; }

    /// Nodes assigned to a, in no particular order.
    const std::vector<NodeId>& members(std::uint32_t a) const {
        check_alive(a);
        return members_[a];
    }

    /// Live supernode ids in ascending order.
    std::vector<std::uint32_t> live_supernodes() const {
        std::vector<std::uint32_t> out;
        out.reserve(num_supernodes_);
        for (std::uint32_t a = 0; a < sizes_.size(); ++a)
            if (sizes_[a] > 0) out.push_back(a);
        return out;
    }

    /// All stored pairs incident to a (self pair keyed by a itself).
    const PairMap& pair_map(std::uint32_t a) const {
        check_alive(a);
        return pairs_[a];
    }

    /// Number of original edges between a and b (0 when the pair is not stored).
    std::uint64_t pair_count(std::uint32_t a, std::uint32_t b) const {
        check_alive(a);
        check_alive(b);
        auto it = pairs_[a].find(b);
        return it == pairs_[a].end() ? 0 : it->second.count;
    }

    bool has_superedge(std::uint32_t a, std::uint32_t b) const {
        check_alive(a);
        check_alive(b);
        auto it = pairs_[a].find(b);
        return it != pairs_[a].end() && it->second.superedge;
    }

    /// Node pairs available between a and b: |A||B| across, C(|A|,2) within.
    std::uint64_t capacity(std::uint32_t a, std::uint32_t b) const {
        check_alive(a);
        check_alive(b);
        std::uint64_t sa = sizes_[a], sb = sizes_[b];
        return a == b ? sa * (sa - 1) / 2 : sa * sb;
    }

    /// Largest superedge weight, 0 when there are no superedges.  Served from a
    /// weight histogram kept in step with the superedge flags, so asking every
    /// round stays cheap.
    std::uint64_t max_weight() const {
        return weight_hist_.empty() ? 0 : weight_hist_.rbegin()->first;
    }

    /// Visit every stored pair once, self pairs included, as f(a, b, info)
    /// with a <= b.
    template <typename F>
    void for_each_pair(F&& f) const {
        for (std::uint32_t a = 0; a < sizes_.size(); ++a) {
            if (sizes_[a] == 0) continue;
            for (const auto& [b, info] : pairs_[a])
                if (b >= a) f(a, b, info);
        }
    }

    /// Superedges as (a, b, weight) with a <= b, sorted.
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> superedges() const {
        std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> out;
        out.reserve(num_superedges_);
        for_each_pair([&](std::uint32_t a, std::uint32_t b, const PairInfo& info) {
            if (info.superedge) out.emplace_back(a, b, info.count);
        });
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Keep or drop the superedge of a stored pair.  No-op if already in the
    /// requested state.
    void set_superedge(std::uint32_t a, std::uint32_t b, bool on) {
        check_alive(a);
        check_alive(b);
        auto it = pairs_[a].find(b);
        if (it == pairs_[a].end())
            throw InvalidArgument("set_superedge: pair has no crossing edges");
        if (it->second.superedge == on) return;
        it->second.superedge = on;
        if (a != b) pairs_[b].find(a)->second.superedge = on;
        num_superedges_ += on ? 1 : std::uint64_t(-1);
        if (on)
            hist_add(it->second.count);
        else
            hist_remove(it->second.count);
    }

    /// Merge supernodes a and b.  All superedges incident to either side are
    /// removed; edge counts are combined.  Returns the surviving id.
    std::uint32_t merge(std::uint32_t a, std::uint32_t b) {
        check_alive(a);
        check_alive(b);
        if (a == b) throw InvalidArgument("merge: cannot merge a supernode with itself");
        std::uint32_t keep = a, drop = b;
        if (sizes_[drop] > sizes_[keep] ||
            (sizes_[drop] == sizes_[keep] && drop < keep)) std::swap(keep, drop);

        PairMap pa = std::move(pairs_[a]);
        PairMap pb = std::move(pairs_[b]);
        pairs_[a] = {};
        pairs_[b] = {};

        PairMap merged;
        merged.reserve(pa.size() + pb.size());
        std::uint64_t self = 0;
        auto absorb = [&](const PairMap& src, std::uint32_t owner, std::uint32_t twin) {
            for (const auto& [n, info] : src) {
                if (n == twin && owner == b) continue;  // {a,b} handled from a's side
                if (info.superedge) {
                    --num_superedges_;
                    hist_remove(info.count);
                }
                if (n == owner || n == twin)
                    self += info.count;
                else
                    merged[n].count += info.count;
            }
        };
        absorb(pa, a, b);
        absorb(pb, b, a);
        if (self > 0) merged[keep] = PairInfo{self, false};

        for (auto& [n, info] : merged) {
            info.superedge = false;
            if (n == keep) continue;
            pairs_[n].erase(drop);
            pairs_[n][keep] = info;  // overwrites n's old entry for keep, if any
        }
        pairs_[keep] = std::move(merged);

        auto& mk = members_[keep];
        auto& md = members_[drop];
        mk.insert(mk.end(), md.begin(), md.end());
        for (NodeId u : md) membership_[u] = keep;
        members_[drop] = {};
        sizes_[keep] += sizes_[drop];
        sizes_[drop] = 0;
        --num_supernodes_;
        return keep;
    }

    /// Adjacency-reconstruction entry for a node pair: weight over capacity if
    /// the covering pair keeps a superedge, else 0.
    double reconstructed_weight(NodeId u, NodeId v) const {
        if (u >= num_nodes_ || v >= num_nodes_)
            throw InvalidArgument("reconstructed_weight: node out of range");
        if (u == v) throw InvalidArgument("reconstructed_weight: diagonal entries are not modeled");
        std::uint32_t a = membership_[u], b = membership_[v];
        auto it = pairs_[a].find(b);
        if (it == pairs_[a].end() || !it->second.superedge) return 0.0;
        return double(it->second.count) / double(capacity(a, b));
    }

    /// L_p error between the original adjacency matrix and its reconstruction,
    /// diagonal excluded, each unordered node pair counted in both directions.
    /// Supports p = 1 and p = 2.
    double reconstruction_error(int p) const {
        if (p != 1 && p != 2)
            throw InvalidArgument("reconstruction_error: norm must be 1 or 2");
        detail::Accumulator acc;
        for_each_pair([&](std::uint32_t a, std::uint32_t b, const PairInfo& info) {
            double e = double(info.count);
            if (!info.superedge) {
                acc.add(2.0 * e);  // |1-0|^p summed over present pairs
                return;
            }
            double cap = double(capacity(a, b));
            double w = e / cap;
            if (p == 1)
                acc.add(2.0 * (e * (1.0 - w) + (cap - e) * w));
            else
                acc.add(2.0 * (e * (1.0 - w) * (1.0 - w) + (cap - e) * w * w));
        });
        double total = acc.value();
        return p == 1 ? total : std::sqrt(total);
    }

    /// Bits needed to store this summary: per-superedge endpoints and weight
    /// plus the node-to-supernode assignment.
    double size_bits() const {
        double bits_per_edge = 0.0;
        if (num_superedges_ > 0)
            bits_per_edge = 2.0 * std::log2(double(num_supernodes_)) + std::log2(double(max_weight()));
        return double(num_superedges_) * bits_per_edge +
               double(num_nodes_) * std::log2(double(num_supernodes_));
    }

    /// Recompute everything from scratch against g and compare with the
    /// maintained state.  Test hook; throws on any mismatch.
    void debug_validate(const Graph& g) const {
        if (g.num_nodes() != num_nodes_ || g.num_edges() != num_subedges_)
            throw Error("validate: graph shape mismatch");
        std::uint64_t live = 0, members_total = 0;
        for (std::uint32_t a = 0; a < sizes_.size(); ++a) {
            if (sizes_[a] == 0) {
                if (!pairs_[a].empty() || !members_[a].empty())
                    throw Error("validate: retired supernode still has state");
                continue;
            }
            ++live;
            members_total += sizes_[a];
            if (members_[a].size() != sizes_[a]) throw Error("validate: size/member mismatch");
            for (NodeId u : members_[a])
                if (membership_[u] != a) throw Error("validate: membership mismatch");
        }
        if (live != num_supernodes_) throw Error("validate: supernode count drifted");
        if (members_total != num_nodes_) throw Error("validate: partition does not cover nodes");

        std::unordered_map<std::uint64_t, std::uint64_t> expect;
        auto key = [](std::uint32_t a, std::uint32_t b) {
            return (std::uint64_t(std::min(a, b)) << 32) | std::max(a, b);
        };
        for (NodeId u = 0; u < g.num_nodes(); ++u)
            for (NodeId v : g.neighbors(u))
                if (u < v) ++expect[key(membership_[u], membership_[v])];
        std::uint64_t stored = 0, flagged = 0;
        for (std::uint32_t a = 0; a < sizes_.size(); ++a) {
            if (sizes_[a] == 0) continue;
            for (const auto& [b, info] : pairs_[a]) {
                if (info.count == 0) throw Error("validate: stored pair with zero count");
                auto sym = pairs_[b].find(a);
                if (sym == pairs_[b].end() || sym->second.count != info.count ||
                    sym->second.superedge != info.superedge)
                    throw Error("validate: pair storage not symmetric");
                if (b < a) continue;
                ++stored;
                if (info.superedge) ++flagged;
                auto it = expect.find(key(a, b));
                if (it == expect.end() || it->second != info.count)
                    throw Error("validate: pair count drifted for " + std::to_string(a) + "," +
                                std::to_string(b));
                if (info.count > capacity(a, b)) throw Error("validate: count exceeds capacity");
            }
        }
        if (stored != expect.size()) throw Error("validate: missing pair entries");
        if (flagged != num_superedges_) throw Error("validate: superedge count drifted");

        std::map<std::uint64_t, std::uint64_t> hist;
        for (std::uint32_t a = 0; a < sizes_.size(); ++a) {
            if (sizes_[a] == 0) continue;
            for (const auto& [b, info] : pairs_[a])
                if (b >= a && info.superedge) ++hist[info.count];
        }
        if (hist != weight_hist_) throw Error("validate: weight histogram drifted");
    }

private:
    void init_ids(std::uint32_t num_nodes, std::uint32_t id_space, std::uint64_t num_subedges) {
        if (num_nodes == 0) throw InvalidArgument("summary of an empty graph");
        num_nodes_ = num_nodes;
        num_subedges_ = num_subedges;
        num_supernodes_ = id_space;
        membership_.assign(num_nodes, 0);
        sizes_.assign(id_space, 0);
        members_.assign(id_space, {});
        pairs_.assign(id_space, {});
    }

    void bump_pair(std::uint32_t a, std::uint32_t b) {
        ++pairs_[a][b].count;
        if (a != b) ++pairs_[b][a].count;
    }

    void hist_add(std::uint64_t w) { ++weight_hist_[w]; }

    void hist_remove(std::uint64_t w) {
        auto it = weight_hist_.find(w);
        if (it == weight_hist_.end()) throw Error("weight histogram out of sync");
        if (--it->second == 0) weight_hist_.erase(it);
    }

    void check_alive(std::uint32_t a) const {
        if (!is_alive(a))
            throw InvalidArgument("supernode " + std::to_string(a) + " is not alive");
    }

    std::uint32_t num_nodes_ = 0;
    std::uint64_t num_subedges_ = 0;
    std::uint32_t num_supernodes_ = 0;
    std::uint64_t num_superedges_ = 0;
    std::vector<std::uint32_t> membership_;
    std::vector<std::uint32_t> sizes_;
    std::vector<std::vector<NodeId>> members_;
    std::vector<PairMap> pairs_;
    std::map<std::uint64_t, std::uint64_t> weight_hist_;  ///< kept weight -> multiplicity
};

/// Free-function form; checks that the summary belongs to this graph.
inline double reconstruction_error(const Graph& g, const SummaryGraph& s, int p) {
    if (g.num_nodes() != s.num_nodes())
        throw InvalidArgument("reconstruction_error: summary does not match graph");
    return s.reconstruction_error(p);
}

}  // namespace ssumm
