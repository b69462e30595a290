#ifndef MDIM_DISTANCE_REGULAR_HPP
#define MDIM_DISTANCE_REGULAR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Distance-regularity verdict. For every ordered pair (u, v) at distance r
/// the counts b_r = |{w : w ~ u, d(v,w) = r+1}| and c_r = |{w : w ~ u,
/// d(v,w) = r-1}| must depend on r alone.
struct DistanceRegularityReport {
    bool verdict = false;

    // Present when the verdict is true: b_0..b_{d-1} and c_1..c_d.
    std::vector<int> b;
    std::vector<int> c;

    // Two pairs at the same distance r whose b- or c-count differ.
    struct CountWitness {
        int r;
        int u1, v1;  // pair that fixed the expected count
        int u2, v2;  // pair that contradicts it
    };
    std::optional<CountWitness> witness;

    // Two vertices of different degree, when the graph is not even regular.
    std::optional<std::pair<int, int>> degree_witness;
};

/// Requires a connected graph; an irregular graph yields verdict false with a
/// degree witness.
DistanceRegularityReport distance_regularity_check(const Graph& g);

}  // namespace mdim

#endif
