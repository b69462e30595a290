#include <doctest.h>

#include <random>

#include "builders.hpp"
#include "mdim/distance_regular.hpp"
#include "mdim/resolving.hpp"
#include "mdim/spectrum.hpp"
#include "oracles.hpp"

using namespace mdim;

// Randomised property corpus: >= 200 connected graphs of order <= 12 with a
// fixed seed, shared by the suites below.
namespace {

const std::vector<Graph>& corpus() {
    static const std::vector<Graph> graphs = [] {
        std::mt19937 rng(987654321);
        std::vector<Graph> out;
        const double densities[] = {0.15, 0.3, 0.45, 0.6, 0.75};
        for (int i = 0; i < 220; ++i) {
            const int order = 4 + i % 9;  // 4..12
            out.push_back(builders::random_connected(order, densities[i % 5], rng));
        }
        return out;
    }();
    return graphs;
}

VertexSet random_superset(const VertexSet& base, int order, std::mt19937& rng) {
    std::vector<int> members = base.members();
    std::vector<int> rest;
    for (int v = 0; v < order; ++v)
        if (!base.contains(v)) rest.push_back(v);
    std::shuffle(rest.begin(), rest.end(), rng);
    const int extra = std::uniform_int_distribution<int>(1, static_cast<int>(rest.size()))(rng);
    members.insert(members.end(), rest.begin(), rest.begin() + extra);
    return VertexSet(members, order);
}

}  // namespace

TEST_CASE("distance matrix axioms hold on the corpus") {
    for (const Graph& g : corpus()) {
        const DistanceMatrix d = all_pairs_distances(g);
        for (int u = 0; u < g.order(); ++u) {
            CHECK(d.at(u, u) == 0);
            for (int v = 0; v < g.order(); ++v) {
                CHECK(d.at(u, v) == d.at(v, u));
                CHECK((d.at(u, v) == 1) == g.adjacent(u, v));
                for (int w = 0; w < g.order(); ++w)
                    CHECK(d.at(u, w) <= d.at(u, v) + d.at(v, w));
            }
        }
    }
}

TEST_CASE("complement is an involution and union counts add up") {
    for (const Graph& g : corpus()) {
        const Graph cc = complement(complement(g));
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) CHECK(cc.adjacent(u, v) == g.adjacent(u, v));
        CHECK(complement(g).edge_count() + g.edge_count() ==
              static_cast<long long>(g.order()) * (g.order() - 1) / 2);
    }
    const Graph& a = corpus()[0];
    const Graph& b = corpus()[1];
    const Graph u = disjoint_union(a, b);
    CHECK(u.order() == a.order() + b.order());
    CHECK(u.edge_count() == a.edge_count() + b.edge_count());
}

TEST_CASE("spectrum identities hold on the corpus") {
    for (const Graph& g : corpus()) {
        const Polynomial p = characteristic_polynomial(g);
        const int n = g.order();
        CHECK(p[n] == 1);
        CHECK(p[n - 1] == 0);
        CHECK(p[n - 2] == -BigInt(g.edge_count()));

        const SpectrumReport s = integer_spectrum(g);
        int total = poly::degree(s.residual) >= 1 ? poly::degree(s.residual) : 0;
        for (auto [value, multiplicity] : s.roots) {
            total += multiplicity;
            BigInt rem;
            Polynomial probe = p;
            for (int i = 0; i < multiplicity; ++i) {
                probe = poly::synthetic_divide(probe, value, rem);
                CHECK(rem == 0);  // each reported root exactly divides
            }
        }
        CHECK(total == n);
    }
}

TEST_CASE("monotonicity: supersets of passing sets pass") {
    std::mt19937 rng(5150);
    int tested = 0;
    for (std::size_t i = 0; i < corpus().size(); i += 7) {
        const Graph& g = corpus()[i];
        const DistanceMatrix d = all_pairs_distances(g);

        const VertexSet beta_set = metric_dimension(g).optimal_set;
        REQUIRE(is_resolving(d, beta_set).verdict);
        if (beta_set.size() < g.order())
            CHECK(is_resolving(d, random_superset(beta_set, g.order(), rng)).verdict);

        const VertexSet psi_set = min_doubly_resolving(g).optimal_set;
        REQUIRE(is_doubly_resolving(d, psi_set).verdict);
        if (psi_set.size() < g.order())
            CHECK(is_doubly_resolving(d, random_superset(psi_set, g.order(), rng)).verdict);

        const VertexSet sdim_set = strong_metric_dimension(g).optimal_set;
        REQUIRE(is_strong_resolving(d, sdim_set).verdict);
        if (sdim_set.size() < g.order())
            CHECK(is_strong_resolving(d, random_superset(sdim_set, g.order(), rng)).verdict);
        ++tested;
    }
    CHECK(tested >= 30);
}

TEST_CASE("doubly resolving and strong resolving sets are resolving") {
    std::mt19937 rng(6174);
    for (std::size_t i = 0; i < corpus().size(); i += 3) {
        const Graph& g = corpus()[i];
        const DistanceMatrix d = all_pairs_distances(g);
        for (int trial = 0; trial < 12; ++trial) {
            const int size = std::uniform_int_distribution<int>(2, g.order())(rng);
            std::vector<int> pool(g.order());
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), rng);
            const VertexSet set(std::vector<int>(pool.begin(), pool.begin() + size), g.order());
            if (is_doubly_resolving(d, set).verdict) CHECK(is_resolving(d, set).verdict);
            if (is_strong_resolving(d, set).verdict) CHECK(is_resolving(d, set).verdict);
        }
    }
}

TEST_CASE("failing verdicts carry independently failing witnesses") {
    std::mt19937 rng(31337);
    for (std::size_t i = 0; i < corpus().size(); i += 5) {
        const Graph& g = corpus()[i];
        const DistanceMatrix d = all_pairs_distances(g);
        for (int trial = 0; trial < 8; ++trial) {
            const int size = std::uniform_int_distribution<int>(2, std::max(2, g.order() / 2))(rng);
            std::vector<int> pool(g.order());
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), rng);
            const VertexSet set(std::vector<int>(pool.begin(), pool.begin() + size), g.order());

            const ResolutionReport res = is_resolving(d, set);
            if (!res.verdict) {
                const auto [u, v] = *res.witness;
                for (int r : set.members()) CHECK(d.at(u, r) == d.at(v, r));
            }
            const ResolutionReport dbl = is_doubly_resolving(d, set);
            if (!dbl.verdict) {
                const auto [u, v] = *dbl.witness;
                for (int x : set.members())
                    for (int y : set.members())
                        if (x < y) CHECK(!doubly_resolves(d, x, y, u, v));
            }
            const ResolutionReport str = is_strong_resolving(d, set);
            if (!str.verdict) {
                const auto [u, v] = *str.witness;
                for (int w : set.members()) CHECK(!strongly_resolves(d, w, u, v));
            }
        }
    }
}

TEST_CASE("both strong-dimension algorithms agree across the corpus") {
    // strong_metric_dimension internally runs the subset search next to the
    // vertex-cover reduction for order <= 16 and throws on disagreement
    for (const Graph& g : corpus()) {
        const DimensionResult r = strong_metric_dimension(g);
        CHECK(r.dimension >= 1);
        CHECK(r.dimension < g.order());
    }
}

TEST_CASE("distance-regular corpus graphs have diameter+1 distinct eigenvalues") {
    int regular_seen = 0;
    for (const Graph& g : corpus()) {
        if (g.regular_valency() < 0) continue;
        ++regular_seen;
        const auto drg = distance_regularity_check(g);
        if (drg.verdict) {
            const auto check = distinct_eigenvalue_count_vs_diameter(g);
            CHECK(check.consistent_with_distance_regularity);
        }
    }
    // the necessary condition itself, on graphs that are certainly DRG
    CHECK(distance_regularity_check(builders::cycle(8)).verdict);
    CHECK(distinct_eigenvalue_count_vs_diameter(builders::cycle(8))
              .consistent_with_distance_regularity);
    (void)regular_seen;
}

TEST_CASE("dimension searches agree with the bitmask oracles on a sample") {
    for (std::size_t i = 0; i < corpus().size(); i += 23) {
        const Graph& g = corpus()[i];
        if (g.order() > 10) continue;
        CHECK(metric_dimension(g).dimension == oracle::min_resolving_size(g));
        CHECK(min_doubly_resolving(g).dimension == oracle::min_doubly_size(g));
        CHECK(strong_metric_dimension(g).dimension == oracle::min_strong_size(g));
    }
}
