#include "mdim/distance_regular.hpp"

#include <stdexcept>

#include "mdim/distance.hpp"

namespace mdim {

DistanceRegularityReport distance_regularity_check(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("distance_regularity_check requires a connected graph");

    DistanceRegularityReport report;
    if (g.regular_valency() < 0) {
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (g.degree(u) != g.degree(v)) {
                    report.degree_witness = {u, v};
                    return report;
                }
    }

    const DistanceMatrix dist = all_pairs_distances(g);
    const int diameter = dist.diameter();

    // First ordered pair seen at each distance pins the expected counts.
    std::vector<int> expected_b(diameter + 1, -1), expected_c(diameter + 1, -1);
    std::vector<std::pair<int, int>> representative(diameter + 1, {-1, -1});

    for (int u = 0; u < g.order(); ++u) {
        for (int v = 0; v < g.order(); ++v) {
            const int r = dist.at(u, v);
            int b = 0, c = 0;
            g.row(u).for_each_set([&](int w) {
                if (dist.at(v, w) == r + 1) ++b;
                if (r >= 1 && dist.at(v, w) == r - 1) ++c;
            });
            if (expected_b[r] == -1) {
                expected_b[r] = b;
                expected_c[r] = c;
                representative[r] = {u, v};
            } else if (b != expected_b[r] || c != expected_c[r]) {
                report.witness = DistanceRegularityReport::CountWitness{
                    r, representative[r].first, representative[r].second, u, v};
                return report;
            }
        }
    }

    report.verdict = true;
    for (int r = 0; r < diameter; ++r) report.b.push_back(expected_b[r]);
    for (int r = 1; r <= diameter; ++r) report.c.push_back(expected_c[r]);
    return report;
}

}  // namespace mdim
