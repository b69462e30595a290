#include "mdim/distance.hpp"

#include <algorithm>

namespace mdim {

bool DistanceMatrix::all_finite() const {
    for (int u = 0; u < order_; ++u)
        for (int v = 0; v < order_; ++v)
            if (dist_[u][v] == kInfinite) return false;
    return true;
}

int DistanceMatrix::diameter() const {
    int best = 0;
    for (int u = 0; u < order_; ++u)
        for (int v = 0; v < order_; ++v) {
            if (dist_[u][v] == kInfinite) return kInfinite;
            best = std::max(best, dist_[u][v]);
        }
    return best;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix d(n);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        int head = 0, tail = 0;
        queue[tail++] = s;
        d.set(s, s, 0);
        while (head < tail) {
            int v = queue[head++];
            g.row(v).for_each_set([&](int w) {
                if (d.at(s, w) == DistanceMatrix::kInfinite) {
                    d.set(s, w, d.at(s, v) + 1);
                    queue[tail++] = w;
                }
            });
        }
    }
    return d;
}

bool is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            bool ok = true;
            g.row(v).for_each_set([&](int w) {
                if (colour[w] == -1) {
                    colour[w] = colour[v] ^ 1;
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    return true;
}

namespace {

// Tomita-style expansion: candidates are greedily coloured, then explored in
// descending colour order so `current + colour <= best` prunes.
class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::vector<int> run() {
        BitRow all(g_.order());
        for (int v = 0; v < g_.order(); ++v) all.set(v);
        std::vector<int> current;
        expand(all, current);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(const BitRow& candidates, std::vector<int>& current) {
        if (!candidates.any()) {
            if (current.size() > best_.size()) best_ = current;
            return;
        }
        std::vector<int> order, bound;
        colour_sort(candidates, order, bound);
        BitRow remaining = candidates;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (current.size() + bound[i] <= best_.size()) return;
            int v = order[i];
            current.push_back(v);
            expand(remaining & g_.row(v), current);
            current.pop_back();
            remaining.reset(v);
        }
    }

    // Greedy colouring of the candidate set; emits vertices grouped by colour
    // class with bound[i] = colour index + 1.
    void colour_sort(const BitRow& candidates, std::vector<int>& order, std::vector<int>& bound) {
        BitRow uncoloured = candidates;
        int colour = 0;
        while (uncoloured.any()) {
            ++colour;
            BitRow cls = uncoloured;
            while (true) {
                int v = cls.first();
                if (v < 0) break;
                order.push_back(v);
                bound.push_back(colour);
                uncoloured.reset(v);
                cls.reset(v);
                // exclude neighbours of v from this colour class
                BitRow masked(g_.order());
                cls.for_each_set([&](int w) {
                    if (!g_.adjacent(v, w)) masked.set(w);
                });
                cls = masked;
            }
        }
    }

    const Graph& g_;
    std::vector<int> best_;
};

}  // namespace

std::vector<int> max_clique(const Graph& g) {
    if (g.order() == 0) return {};
    return CliqueSearch(g).run();
}

GraphProfile profile(const Graph& g) {
    GraphProfile p;
    p.diameter = all_pairs_distances(g).diameter();
    p.regular_valency = g.regular_valency();
    p.bipartite = is_bipartite(g);
    p.clique_number = static_cast<int>(max_clique(g).size());
    p.edge_count = g.edge_count();
    return p;
}

}  // namespace mdim
