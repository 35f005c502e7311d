#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "random.hpp"
#include "summary.hpp"

namespace ssumm {

struct CandidateConfig {
    std::uint32_t max_set_size = 500;  ///< largest group handed to the merge loop
    std::uint32_t max_depth = 10;      ///< shingle refinement levels before random splitting
};

using CandidateSet = std::vector<std::uint32_t>;

/// Min-hash over closed neighborhoods.  Two supernodes sharing a shingle value
/// share a witness node adjacent to (or inside) both, so they are within two
/// hops of each other.
class ShingleHasher {
public:
    ShingleHasher(const Graph& g, Rng& rng) : ShingleHasher(g, rng.permutation(g.num_nodes())) {}

    /// Explicit permutation form. hash[u] must be a bijection onto {1..|V|}.
    ShingleHasher(const Graph& g, std::vector<std::uint32_t> hash) {
        if (hash.size() != g.num_nodes())
            throw InvalidArgument("shingle: permutation length must equal node count");
        node_min_.resize(g.num_nodes());
        for (NodeId u = 0; u < g.num_nodes(); ++u) {
            std::uint32_t m = hash[u];
            for (NodeId v : g.neighbors(u)) m = std::min(m, hash[v]);
            node_min_[u] = m;
        }
    }

    /// Smallest hash in u's closed neighborhood.
    std::uint32_t node_value(NodeId u) const { return node_min_[u]; }

    /// Shingle of a node group: smallest hash reachable within one hop.
    std::uint32_t shingle(const std::vector<NodeId>& members) const {
        std::uint32_t m = ~std::uint32_t(0);
        for (NodeId u : members) m = std::min(m, node_min_[u]);
        return m;
    }

private:
    std::vector<std::uint32_t> node_min_;
};

namespace detail {

inline std::vector<CandidateSet> split_by_shingle(const ShingleHasher& h, const SummaryGraph& s,
                                                  const CandidateSet& group) {
    std::unordered_map<std::uint32_t, CandidateSet> buckets;
    for (std::uint32_t a : group) buckets[h.shingle(s.members(a))].push_back(a);
    std::vector<CandidateSet> out;
    out.reserve(buckets.size());
    for (auto& [val, set] : buckets) out.push_back(std::move(set));
    std::sort(out.begin(), out.end(),
              [](const CandidateSet& x, const CandidateSet& y) { return x.front() < y.front(); });
    return out;
}

}  // namespace detail

/// Partition the live supernodes into candidate sets of bounded size.  Groups
/// are refined by fresh shingle functions until they fit; groups still too
/// large after max_depth levels are split uniformly at random.  Singleton
/// groups are kept.  The result is a partition: every live supernode appears
/// in exactly one set.
inline std::vector<CandidateSet> generate_candidates(const SummaryGraph& s, const Graph& g,
                                                     Rng& rng, CandidateConfig cfg = {}) {
    if (cfg.max_set_size < 2) throw InvalidArgument("candidates: max_set_size must be >= 2");
    if (cfg.max_depth == 0) throw InvalidArgument("candidates: max_depth must be >= 1");

    std::vector<CandidateSet> done;
    std::vector<CandidateSet> pending{s.live_supernodes()};
    for (std::uint32_t depth = 0; depth < cfg.max_depth && !pending.empty(); ++depth) {
        ShingleHasher hasher(g, rng);
        std::vector<CandidateSet> next;
        for (const CandidateSet& group : pending)
            for (CandidateSet& piece : detail::split_by_shingle(hasher, s, group))
                (piece.size() <= cfg.max_set_size ? done : next).push_back(std::move(piece));
        pending = std::move(next);
    }

    // whatever shingles could not separate gets chopped up at random
    std::sort(pending.begin(), pending.end(),
              [](const CandidateSet& x, const CandidateSet& y) { return x.front() < y.front(); });
    for (CandidateSet& group : pending) {
        rng.shuffle(group);
        for (std::size_t off = 0; off < group.size(); off += cfg.max_set_size) {
            CandidateSet piece(group.begin() + std::ptrdiff_t(off),
                               group.begin() + std::ptrdiff_t(std::min(off + cfg.max_set_size,
                                                                       group.size())));
            std::sort(piece.begin(), piece.end());
            done.push_back(std::move(piece));
        }
    }

    std::sort(done.begin(), done.end(),
              [](const CandidateSet& x, const CandidateSet& y) { return x.front() < y.front(); });
    return done;
}

}  // namespace ssumm
