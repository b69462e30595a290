#include "mdim/resolving.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mdim {

VertexSet::VertexSet(std::vector<int> members, int order) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 0 || members_[i] >= order)
            throw std::out_of_range("vertex set member out of range");
        if (i > 0 && members_[i] == members_[i - 1])
            throw std::invalid_argument("vertex set members must be distinct");
    }
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

MetricVector metric_vector(const DistanceMatrix& d, int v, const VertexSet& set) {
    if (set.size() == 0) throw std::invalid_argument("metric vector needs a non-empty set");
    if (v < 0 || v >= d.order()) throw std::out_of_range("vertex out of range");
    MetricVector out(set.size());
    for (int t = 0; t < set.size(); ++t) out[t] = d.at(v, set.members()[t]);
    return out;
}

namespace {

bool vectors_equal(const DistanceMatrix& d, const std::vector<int>& set, int u, int v) {
    for (int r : set)
        if (d.at(u, r) != d.at(v, r)) return false;
    return true;
}

bool pair_doubly_resolved(const DistanceMatrix& d, const std::vector<int>& set, int u, int v) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (doubly_resolves(d, set[i], set[j], u, v)) return true;
    return false;
}

bool pair_strongly_resolved(const DistanceMatrix& d, const std::vector<int>& set, int u, int v) {
    for (int w : set)
        if (strongly_resolves(d, w, u, v)) return true;
    return false;
}

}  // namespace

ResolutionReport is_resolving(const DistanceMatrix& d, const VertexSet& set) {
    if (set.size() == 0) throw std::invalid_argument("is_resolving needs a non-empty set");
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            if (vectors_equal(d, set.members(), u, v))
                return {ResolutionKind::Resolving, false, std::pair{u, v}};
    return {ResolutionKind::Resolving, true, std::nullopt};
}

bool doubly_resolves(const DistanceMatrix& d, int x, int y, int u, int v) {
    return d.at(u, x) - d.at(u, y) != d.at(v, x) - d.at(v, y);
}

ResolutionReport is_doubly_resolving(const DistanceMatrix& d, const VertexSet& set) {
    if (set.size() < 2) throw std::invalid_argument("is_doubly_resolving needs at least two vertices");
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            if (!pair_doubly_resolved(d, set.members(), u, v))
                return {ResolutionKind::Doubly, false, std::pair{u, v}};
    return {ResolutionKind::Doubly, true, std::nullopt};
}

bool strongly_resolves(const DistanceMatrix& d, int w, int u, int v) {
    return d.at(w, u) == d.at(w, v) + d.at(v, u) || d.at(w, v) == d.at(w, u) + d.at(u, v);
}

ResolutionReport is_strong_resolving(const DistanceMatrix& d, const VertexSet& set) {
    if (set.size() == 0) throw std::invalid_argument("is_strong_resolving needs a non-empty set");
    for (int u = 0; u < d.order(); ++u)
        for (int v = u + 1; v < d.order(); ++v)
            if (!pair_strongly_resolved(d, set.members(), u, v))
                return {ResolutionKind::Strong, false, std::pair{u, v}};
    return {ResolutionKind::Strong, true, std::nullopt};
}

namespace {

// Lexicographic k-subsets of [0, n). Calls f for each subset until f returns
// true; the successful subset (if any) is returned. `checked` counts calls.
template <typename F>
std::optional<std::vector<int>> first_ksubset(int n, int k, std::uint64_t& checked, F&& f) {
    if (k > n || k <= 0) return std::nullopt;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        ++checked;
        if (f(c)) return c;
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) return std::nullopt;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

void require_connected(const Graph& g, const char* op) {
    if (!g.is_connected())
        throw std::invalid_argument(std::string(op) + " requires a connected graph");
}

}  // namespace

DimensionResult metric_dimension(const Graph& g) {
    require_connected(g, "metric_dimension");
    const DistanceMatrix d = all_pairs_distances(g);
    const int n = g.order();

    DimensionResult result;
    std::uint64_t checked_below = 0;
    for (int k = 1; k <= n; ++k) {
        std::uint64_t checked_here = 0;
        auto hit = first_ksubset(n, k, checked_here, [&](const std::vector<int>& c) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (vectors_equal(d, c, u, v)) return false;
            return true;
        });
        result.search_space_checked += checked_here;
        if (hit) {
            result.dimension = k;
            result.optimal_set = VertexSet(*hit, n);
            result.refuted_below = checked_below;
            return result;
        }
        checked_below = checked_here;
    }
    throw std::logic_error("metric_dimension: the full vertex set must resolve");
}

DimensionResult min_doubly_resolving(const Graph& g) {
    require_connected(g, "min_doubly_resolving");
    if (g.order() < 2)
        throw std::invalid_argument("min_doubly_resolving requires at least two vertices");
    const DistanceMatrix d = all_pairs_distances(g);
    const int n = g.order();

    const int beta = metric_dimension(g).dimension;
    const int floor = std::max(2, beta);

    DimensionResult result;
    auto passes = [&](const std::vector<int>& c) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!pair_doubly_resolved(d, c, u, v)) return false;
        return true;
    };

    // Safety refutation one size below the floor (psi >= beta and psi >= 2
    // hold by definition, so a hit here signals an implementation bug).
    std::uint64_t checked_below = 0;
    if (floor - 1 >= 2) {
        if (first_ksubset(n, floor - 1, checked_below, passes))
            throw std::logic_error("min_doubly_resolving: set below the floor passed");
        result.refuted_below = checked_below;
    }
    result.search_space_checked += checked_below;

    for (int k = floor; k <= n; ++k) {
        std::uint64_t checked_here = 0;
        auto hit = first_ksubset(n, k, checked_here, passes);
        result.search_space_checked += checked_here;
        if (hit) {
            result.dimension = k;
            result.optimal_set = VertexSet(*hit, n);
            if (k > floor) result.refuted_below = checked_below;
            return result;
        }
        checked_below = checked_here;
    }
    throw std::logic_error("min_doubly_resolving: the full vertex set must doubly resolve");
}

Graph strong_resolving_graph(const Graph& g) {
    require_connected(g, "strong_resolving_graph");
    const DistanceMatrix d = all_pairs_distances(g);
    Graph srg(g.order(), g.labels());
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            bool mmd = true;
            g.row(v).for_each_set([&](int w) {
                if (d.at(u, w) > d.at(u, v)) mmd = false;
            });
            if (mmd)
                g.row(u).for_each_set([&](int w) {
                    if (d.at(v, w) > d.at(v, u)) mmd = false;
                });
            if (mmd) srg.add_edge(u, v);
        }
    }
    return srg;
}

namespace {

// Branch and bound on an adjacency copy: repeatedly apply the degree-1
// reduction, prune with a greedy-matching lower bound, then branch on a
// maximum-degree vertex (take it, or take its whole neighbourhood).
class VertexCoverSearch {
public:
    explicit VertexCoverSearch(const Graph& g) : g_(g), n_(g.order()) {
        for (int v = 0; v < n_; ++v) best_.push_back(v);  // trivial cover
    }

    std::vector<int> run() {
        std::vector<BitRow> adj(n_);
        for (int v = 0; v < n_; ++v) adj[v] = g_.row(v);
        std::vector<int> chosen;
        search(adj, chosen);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void search(std::vector<BitRow> adj, std::vector<int> chosen) {
        while (true) {
            int pendant = -1;
            for (int v = 0; v < n_ && pendant < 0; ++v)
                if (adj[v].count() == 1) pendant = v;
            if (pendant < 0) break;
            take(adj, chosen, adj[pendant].first());
        }

        int max_deg = 0, pivot = -1;
        for (int v = 0; v < n_; ++v) {
            int deg = adj[v].count();
            if (deg > max_deg) {
                max_deg = deg;
                pivot = v;
            }
        }
        if (pivot < 0) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + matching_bound(adj) >= best_.size()) return;

        {
            auto adj2 = adj;
            auto chosen2 = chosen;
            take(adj2, chosen2, pivot);
            search(std::move(adj2), std::move(chosen2));
        }
        {
            std::vector<int> nbrs;
            adj[pivot].for_each_set([&](int w) { nbrs.push_back(w); });
            for (int w : nbrs) take(adj, chosen, w);
            search(std::move(adj), std::move(chosen));
        }
    }

    void take(std::vector<BitRow>& adj, std::vector<int>& chosen, int v) {
        chosen.push_back(v);
        adj[v].for_each_set([&](int w) { adj[w].reset(v); });
        adj[v] = BitRow(n_);
    }

    std::uint64_t matching_bound(const std::vector<BitRow>& adj) const {
        BitRow used(n_);
        std::uint64_t size = 0;
        for (int v = 0; v < n_; ++v) {
            if (used.test(v)) continue;
            int mate = -1;
            adj[v].for_each_set([&](int w) {
                if (mate < 0 && !used.test(w)) mate = w;
            });
            if (mate >= 0) {
                used.set(v);
                used.set(mate);
                ++size;
            }
        }
        return size;
    }

    const Graph& g_;
    int n_;
    std::vector<int> best_;
};

}  // namespace

VertexSet min_vertex_cover(const Graph& g) {
    return VertexSet(VertexCoverSearch(g).run(), g.order());
}

DimensionResult strong_metric_dimension(const Graph& g) {
    require_connected(g, "strong_metric_dimension");
    if (g.order() < 2)
        throw std::invalid_argument("strong_metric_dimension requires at least two vertices");

    const VertexSet cover = min_vertex_cover(strong_resolving_graph(g));

    DimensionResult result;
    result.dimension = cover.size();
    result.optimal_set = cover;

    if (g.order() <= 16) {
        const DistanceMatrix d = all_pairs_distances(g);
        const int n = g.order();
        auto passes = [&](const std::vector<int>& c) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!pair_strongly_resolved(d, c, u, v)) return false;
            return true;
        };
        std::uint64_t checked_below = 0;
        for (int k = 1; k <= n; ++k) {
            std::uint64_t checked_here = 0;
            auto hit = first_ksubset(n, k, checked_here, passes);
            result.search_space_checked += checked_here;
            if (hit) {
                if (k != cover.size())
                    throw std::logic_error(
                        "strong_metric_dimension: subset search and vertex-cover "
                        "reduction disagree (" + std::to_string(k) + " vs " +
                        std::to_string(cover.size()) + ")");
                result.optimal_set = VertexSet(*hit, n);
                result.refuted_below = checked_below;
                break;
            }
            checked_below = checked_here;
        }
    }
    return result;
}

}  // namespace mdim
