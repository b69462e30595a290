#include <doctest.h>

#include <set>
#include <stdexcept>

#include "builders.hpp"
#include "mdim/dihedral.hpp"
#include "mdim/distance.hpp"
#include "mdim/families.hpp"
#include "mdim/graph.hpp"
#include "oracles.hpp"

using namespace mdim;

namespace {

int component_count(const Graph& g) {
    std::vector<int> mark(g.order(), -1);
    int components = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (mark[s] != -1) continue;
        ++components;
        std::vector<int> stack{s};
        mark[s] = components;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            g.row(v).for_each_set([&](int w) {
                if (mark[w] == -1) {
                    mark[w] = components;
                    stack.push_back(w);
                }
            });
        }
    }
    return components;
}

}  // namespace

TEST_CASE("dihedral element arithmetic") {
    const int n = 6;
    const auto a = DihedralElement::rotation(1, n);
    const auto b = DihedralElement::reflection(0, n);

    // b * a = a^(n-1) * b
    CHECK(b.multiply(a, n) == DihedralElement::reflection(n - 1, n));

    // a^n = identity, b^2 = identity
    DihedralElement power = DihedralElement::identity();
    for (int i = 0; i < n; ++i) power = power.multiply(a, n);
    CHECK(power == DihedralElement::identity());
    CHECK(b.multiply(b, n) == DihedralElement::identity());

    for (int i = 0; i < n; ++i) {
        const auto rot = DihedralElement::rotation(i, n);
        const auto refl = DihedralElement::reflection(i, n);
        CHECK(rot.multiply(rot.inverse(n), n) == DihedralElement::identity());
        CHECK(refl.multiply(refl.inverse(n), n) == DihedralElement::identity());
        CHECK(refl.inverse(n) == refl);
    }
    CHECK(DihedralElement::rotation(2, n).inverse(n) == DihedralElement::rotation(4, n));
}

TEST_CASE("dihedral Cayley graph construction") {
    const Graph g6 = dihedral_cayley(6);
    CHECK(g6.order() == 12);
    CHECK(g6.regular_valency() == 7);
    CHECK(g6.edge_count() == 42);

    const Graph g4 = dihedral_cayley(4);
    CHECK(g4.order() == 8);
    CHECK(g4.regular_valency() == 5);
    CHECK(all_pairs_distances(g4).diameter() == 2);

    // a^3 and a^6 are adjacent to every reflection
    const int a3 = g6.vertex_by_label("a^3");
    const int a6 = g6.vertex_by_label("a^6");
    for (int i = 0; i < 6; ++i) {
        CHECK(g6.adjacent(a3, 6 + i));
        CHECK(g6.adjacent(a6, 6 + i));
    }

    CHECK_THROWS_AS(dihedral_cayley(5), std::invalid_argument);
    CHECK_THROWS_AS(dihedral_cayley(2), std::invalid_argument);
    CHECK_THROWS_AS(dihedral_cayley(-4), std::invalid_argument);
}

TEST_CASE("dihedral Cayley adjacency structure and true twins") {
    for (int n = 4; n <= 12; n += 2) {
        const Graph g = dihedral_cayley(n);
        REQUIRE(g.is_connected());
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const bool half_apart = ((i - j) % n + n) % n == n / 2;
                CHECK(g.adjacent(i, j) == half_apart);          // rotations
                CHECK(g.adjacent(n + i, n + j) == half_apart);  // reflections
            }
            for (int j = 0; j < n; ++j) CHECK(g.adjacent(i, n + j));  // across
        }
    }

    for (int n : {4, 6, 8}) {
        const Graph g = dihedral_cayley(n);
        auto closed_row = [&](int v) {
            BitRow row = g.row(v);
            row.set(v);
            return row;
        };
        for (int i = 0; i < n; ++i) {
            CHECK(closed_row(i) == closed_row((i + n / 2) % n));
            CHECK(closed_row(n + i) == closed_row(n + (i + n / 2) % n));
        }
    }
}

TEST_CASE("toeplitz graphs") {
    const Graph t = toeplitz(8, {1, 3, 5, 7, 4});
    CHECK(t.order() == 8);
    // independent degree recount straight from the window definition
    for (int i = 0; i < 8; ++i) {
        int expected = 0;
        for (int j = 0; j < 8; ++j)
            if (j != i && (std::abs(i - j) == 4 || std::abs(i - j) % 2 == 1)) ++expected;
        CHECK(t.degree(i) == expected);
        CHECK(t.degree(i) == 5);
    }

    const Graph p4 = toeplitz(4, {1});
    CHECK(p4.edge_count() == 3);
    CHECK(all_pairs_distances(p4).at(0, 3) == 3);

    const Graph k4 = toeplitz(4, {1, 2, 3});
    CHECK(k4.edge_count() == 6);

    CHECK_THROWS_AS(toeplitz(4, {0}), std::invalid_argument);
    CHECK_THROWS_AS(toeplitz(4, {4}), std::invalid_argument);
    CHECK_THROWS_AS(toeplitz(4, {}), std::invalid_argument);
}

TEST_CASE("circulant graphs") {
    const Graph c4 = circulant(4, {1, 3});
    CHECK(c4.regular_valency() == 2);
    CHECK(c4.is_connected());
    CHECK(c4.edge_count() == 4);

    const Graph c = circulant(6, {1, 5, 2, 4});
    CHECK(c.regular_valency() == 4);

    // 2 is its own negation mod 4, so {2} is closed; {1} is not.
    CHECK(circulant(4, {2}).edge_count() == 2);
    CHECK_THROWS_AS(circulant(4, {1}), std::invalid_argument);
    CHECK_THROWS_AS(circulant(4, {0, 2}), std::invalid_argument);
}

TEST_CASE("cocktail party graphs") {
    const Graph cp2 = cocktail_party(2);
    CHECK(cp2.order() == 4);
    CHECK(cp2.regular_valency() == 2);
    CHECK(cp2.is_connected());  // the 4-cycle

    const Graph cp3 = cocktail_party(3);
    CHECK(cp3.order() == 6);
    CHECK(cp3.regular_valency() == 4);
    CHECK(cp3.edge_count() == 12);

    const Graph cp1 = cocktail_party(1);
    CHECK(cp1.order() == 2);
    CHECK(cp1.edge_count() == 0);

    CHECK_THROWS_AS(cocktail_party(0), std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(complement(builders::complete(4)).edge_count() == 0);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = builders::random_connected(8, 0.4, rng);
        const Graph cc = complement(complement(g));
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v) CHECK(cc.adjacent(u, v) == g.adjacent(u, v));
    }

    const Graph cl6 = complement(dihedral_cayley(6));
    CHECK(component_count(cl6) == 2);
    CHECK(cl6.regular_valency() == 4);
}

TEST_CASE("disjoint union") {
    const Graph two = disjoint_union(Graph(1), Graph(1));
    CHECK(two.order() == 2);
    CHECK(two.edge_count() == 0);

    const Graph cp3 = cocktail_party(3);
    const Graph u = disjoint_union(cp3, cp3);
    CHECK(u.order() == 12);
    CHECK(u.edge_count() == 24);
    CHECK(component_count(u) == 2);
    // no cross edges
    for (int a = 0; a < 6; ++a)
        for (int b = 6; b < 12; ++b) CHECK(!u.adjacent(a, b));
}

TEST_CASE("all pairs distances") {
    const Graph g6 = dihedral_cayley(6);
    const DistanceMatrix d = all_pairs_distances(g6);
    // a^3 and a^6 differ by n/2, hence are adjacent (true twins)
    CHECK(d.at(g6.vertex_by_label("a^3"), g6.vertex_by_label("a^6")) == 1);
    CHECK(d.at(g6.vertex_by_label("a"), g6.vertex_by_label("a^2")) == 2);
    for (int v = 0; v < g6.order(); ++v) CHECK(d.at(v, v) == 0);

    const DistanceMatrix dp = all_pairs_distances(builders::path(4));
    CHECK(dp.at(0, 3) == 3);

    const DistanceMatrix dd = all_pairs_distances(disjoint_union(Graph(1), Graph(1)));
    CHECK(dd.at(0, 1) == DistanceMatrix::kInfinite);
    CHECK(dd.diameter() == DistanceMatrix::kInfinite);
}

TEST_CASE("distance matrix matches Floyd-Warshall oracle") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = builders::random_connected(4 + trial % 8, 0.3, rng);
        const DistanceMatrix d = all_pairs_distances(g);
        const auto ref = oracle::distances_floyd(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) CHECK(d.at(u, v) == ref[u][v]);
    }
}

TEST_CASE("profile") {
    for (int n = 4; n <= 12; n += 2) {
        const Graph g = dihedral_cayley(n);
        CHECK(g.is_connected());
        const GraphProfile p = profile(g);
        CHECK(p.diameter == 2);
        CHECK(!p.bipartite);
        CHECK(p.regular_valency == n + 1);
        CHECK(p.clique_number == 4);
        CHECK(p.edge_count == n * (n + 1));
    }

    const GraphProfile c4 = profile(builders::cycle(4));
    CHECK(c4.diameter == 2);
    CHECK(c4.bipartite);
    CHECK(c4.regular_valency == 2);
    CHECK(c4.clique_number == 2);

    const GraphProfile cp3 = profile(cocktail_party(3));
    CHECK(cp3.diameter == 2);
    CHECK(cp3.clique_number == oracle::clique_number(cocktail_party(3)));
    CHECK(cp3.clique_number == 3);
}

TEST_CASE("max clique agrees with subset oracle") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = builders::random_connected(5 + trial % 8, 0.5, rng);
        const auto clique = max_clique(g);
        CHECK(static_cast<int>(clique.size()) == oracle::clique_number(g));
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                CHECK(g.adjacent(clique[i], clique[j]));
    }
    CHECK(oracle::clique_number(dihedral_cayley(6)) == 4);
}

TEST_CASE("graph invariants enforced") {
    CHECK_THROWS_AS(Graph(2, {"x", "x"}), std::invalid_argument);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    g.add_edge(0, 1);
    CHECK(g.adjacent(1, 0));
}
