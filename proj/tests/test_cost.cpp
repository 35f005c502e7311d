#include <catch2/catch_amalgamated.hpp>

#include <ssumm/cost.hpp>

#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace ssumm;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("entropy correction bits", "[cost]") {
    CHECK_THAT(entropy_cost(8, 3), WithinRel(7.6354720233997197, 1e-12));
    CHECK(entropy_cost(0, 0) == 0.0);
    CHECK(entropy_cost(5, 0) == 0.0);
    CHECK(entropy_cost(5, 5) == 0.0);
    CHECK_THROWS_AS(entropy_cost(3, 4), InvalidArgument);

    SECTION("symmetric in present and absent pairs, peaked in the middle") {
        for (std::uint64_t pi : {2ULL, 7ULL, 64ULL, 1000ULL}) {
            double peak = entropy_cost(pi, pi / 2);
            for (std::uint64_t e = 0; e <= pi; e += 1 + pi / 13) {
                CHECK_THAT(entropy_cost(pi, e), WithinAbs(entropy_cost(pi, pi - e), 1e-9));
                CHECK(entropy_cost(pi, e) <= peak + 1e-9);
            }
        }
    }
}

TEST_CASE("listing bits", "[cost]") {
    CHECK(listing_cost(3, 16) == 24.0);
    CHECK(listing_cost(0, 999) == 0.0);
}

TEST_CASE("a pair is encoded the cheaper of the two ways", "[cost]") {
    CostConstants theory = CostConstants::theory(16, 32);
    CHECK(theory.pair_overhead == 13.0);
    PairCost pc = pair_cost(8, 3, theory);
    CHECK_THAT(pc.summarized, WithinRel(20.635472023399720, 1e-12));
    CHECK(pc.listed == 24.0);
    CHECK(pc.chosen == pc.summarized);
    CHECK(pc.superedge);

    // a single edge between singletons is cheaper to list than to keep
    CostConstants small = CostConstants::theory(4, 4);
    PairCost single = pair_cost(1, 1, small);
    CHECK(single.summarized == 6.0);
    CHECK(single.listed == 4.0);
    CHECK(single.chosen == 4.0);
    CHECK_FALSE(single.superedge);

    // exact ties go to listing
    PairCost tie = pair_cost(2, 2, CostConstants{8.0, 2.0});
    CHECK(tie.summarized == tie.listed);
    CHECK_FALSE(tie.superedge);

    // nothing between the supernodes costs nothing
    CHECK(pair_cost(0, 0, theory).chosen == 0.0);
    CHECK(pair_cost(6, 0, theory).chosen == 0.0);
    CHECK_FALSE(pair_cost(6, 0, theory).superedge);
    CHECK_THROWS_AS(pair_cost(3, 4, theory), InvalidArgument);
}

TEST_CASE("tight constants read the current summary shape", "[cost]") {
    CostConstants c = CostConstants::tight(16, 4, 4);
    CHECK(c.pair_overhead == 6.0);
    CHECK(c.log2_nodes == 4.0);
    // no superedges yet: weight bound clamps to 1
    CHECK(CostConstants::tight(16, 4, 0).pair_overhead == 4.0);
}

TEST_CASE("pair cost matches the reference on random shapes", "[cost]") {
    gen::Rng rng(42);
    CostConstants c = CostConstants::theory(1000, 5000);
    oracle::Consts oc = oracle::theory_consts(1000, 5000);
    for (int trial = 0; trial < 2000; ++trial) {
        std::uint64_t pi = 1 + rng.bounded(1'000'000);
        std::uint64_t e = rng.bounded(pi + 1);
        CHECK_THAT(pair_cost(pi, e, c).chosen, WithinRel(oracle::pair_bits(pi, e, oc), 1e-9));
    }
}

TEST_CASE("whole-summary description length", "[cost]") {
    // complete graph on 4 nodes in one supernode: assignment bits plus one pair
    Graph k4 = gen::clique(4);
    SummaryGraph one = SummaryGraph::from_partition(k4, {{0, 1, 2, 3}});
    CostConstants c = CostConstants::theory(4, 6);
    CHECK_THAT(total_cost(k4, one, c), WithinRel(14.584962500721156, 1e-12));

    SECTION("matches the brute-force enumeration on random partitions") {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            NodeId n = NodeId(5 + seed % 26);
            Graph g = gen::gnm(n, 1 + (std::uint64_t(n) * (n - 1) / 2) / 3, seed);
            auto blocks = gen::random_partition(g, 8, seed * 31 + 1);
            SummaryGraph s = SummaryGraph::from_partition(g, blocks);

            std::uint64_t wmax = oracle::brute_max_weight(g, blocks);
            CHECK(s.max_weight() == wmax);

            for (bool tight : {false, true}) {
                CostConstants cc = tight ? CostConstants::tight(n, s.num_supernodes(), wmax)
                                         : CostConstants::theory(n, g.num_edges());
                oracle::Consts oc = tight
                                        ? oracle::tight_consts(n, s.num_supernodes(), wmax)
                                        : oracle::theory_consts(n, g.num_edges());
                auto brute = oracle::brute_total_cost(g, blocks, oc);
                CHECK_THAT(total_cost(g, s, cc), WithinRel(brute.total, 1e-9));
                for (std::uint32_t b = 0; b < blocks.size(); ++b)
                    CHECK_THAT(supernode_cost(s, b, cc),
                               WithinAbs(brute.supernode_bits[b], 1e-9 * (1 + brute.total)));
            }
        }
    }
}
