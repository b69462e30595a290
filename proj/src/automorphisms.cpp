#include "mdim/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>

namespace mdim {

namespace {

using Colouring = std::vector<int>;

bool verify_bijection_preserves_edges(const Graph& a, const Graph& b, const std::vector<int>& f) {
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.adjacent(u, v) != b.adjacent(f[u], f[v])) return false;
    return true;
}

int distinct_count(const Colouring& c) {
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Backtracking search over equitable-partition-stabilised colourings of a
// domain graph A and codomain graph B. Both colourings are refined together:
// a vertex signature is its colour plus the sorted colours of its neighbours,
// signatures are pooled across the two graphs, and the per-colour histograms
// must match or the branch dies. Individualisation assigns a fresh colour to
// one vertex on each side.
class RefinementSearch {
public:
    RefinementSearch(const Graph& a, const Graph& b) : a_(a), b_(b), n_(a.order()) {}

    // First edge-preserving bijection found, in DFS order.
    std::optional<std::vector<int>> find_isomorphism() {
        Colouring ca(n_, 0), cb(n_, 0);
        return iso_dfs(std::move(ca), std::move(cb));
    }

    // Automorphism generators of A (requires B == A). The leftmost path of
    // the search tree individualises a fixed pivot sequence; away from it the
    // search bails out at the first automorphism (a coset representative),
    // and on it sibling candidates lying in one orbit of the already-found
    // prefix-stabilising generators are pruned. The found set generates the
    // full automorphism group.
    std::vector<std::vector<int>> find_generators() {
        generators_.clear();
        path_.clear();
        Colouring c0(n_, 0);
        aut_dfs(c0, c0, true);
        return std::move(generators_);
    }

private:
    bool refine(Colouring& ca, Colouring& cb) {
        while (true) {
            const int before = distinct_count(ca);
            std::map<std::vector<int>, int> ids;
            auto signature = [](const Graph& g, const Colouring& c, int v) {
                std::vector<int> sig{c[v]};
                g.row(v).for_each_set([&](int w) { sig.push_back(c[w]); });
                std::sort(sig.begin() + 1, sig.end());
                return sig;
            };
            std::vector<std::vector<int>> sa(n_), sb(n_);
            for (int v = 0; v < n_; ++v) {
                sa[v] = signature(a_, ca, v);
                sb[v] = signature(b_, cb, v);
                ids.emplace(sa[v], 0);
                ids.emplace(sb[v], 0);
            }
            int next = 0;
            for (auto& [sig, id] : ids) id = next++;

            std::vector<int> count_a(next, 0), count_b(next, 0);
            for (int v = 0; v < n_; ++v) {
                ca[v] = ids[sa[v]];
                cb[v] = ids[sb[v]];
                ++count_a[ca[v]];
                ++count_b[cb[v]];
            }
            if (count_a != count_b) return false;
            if (next == before) return true;
        }
    }

    bool discrete(const Colouring& c) const { return distinct_count(c) == n_; }

    // Maps each A vertex to the B vertex sharing its colour.
    std::vector<int> extract_mapping(const Colouring& ca, const Colouring& cb) const {
        std::vector<int> colour_to_b(n_, -1), f(n_);
        for (int v = 0; v < n_; ++v) colour_to_b[cb[v]] = v;
        for (int v = 0; v < n_; ++v) f[v] = colour_to_b[ca[v]];
        return f;
    }

    int target_colour(const Colouring& ca) const {
        std::vector<int> count(n_ + 1, 0);
        for (int v = 0; v < n_; ++v) ++count[ca[v]];
        int best = n_ + 1;
        for (int v = 0; v < n_; ++v)
            if (count[ca[v]] >= 2) best = std::min(best, ca[v]);
        return best;
    }

    std::optional<std::vector<int>> iso_dfs(Colouring ca, Colouring cb) {
        if (!refine(ca, cb)) return std::nullopt;
        if (discrete(ca)) {
            auto f = extract_mapping(ca, cb);
            if (verify_bijection_preserves_edges(a_, b_, f)) return f;
            return std::nullopt;
        }
        const int colour = target_colour(ca);
        int pivot = -1;
        for (int v = 0; v < n_ && pivot < 0; ++v)
            if (ca[v] == colour) pivot = v;
        for (int b = 0; b < n_; ++b) {
            if (cb[b] != colour) continue;
            Colouring ca2 = ca, cb2 = cb;
            ca2[pivot] = n_;
            cb2[b] = n_;
            if (auto f = iso_dfs(std::move(ca2), std::move(cb2))) return f;
        }
        return std::nullopt;
    }

    // Returns true iff the subtree contained an automorphism (the identity
    // counts, so ancestors on the first path know the branch was alive).
    bool aut_dfs(Colouring ca, Colouring cb, bool on_first_path) {
        if (!refine(ca, cb)) return false;
        if (discrete(ca)) {
            auto f = extract_mapping(ca, cb);
            if (!verify_bijection_preserves_edges(a_, b_, f)) return false;
            bool identity = true;
            for (int v = 0; v < n_ && identity; ++v) identity = (f[v] == v);
            if (!identity) generators_.push_back(std::move(f));
            return true;
        }
        const int colour = target_colour(ca);
        int pivot = -1;
        for (int v = 0; v < n_ && pivot < 0; ++v)
            if (ca[v] == colour) pivot = v;

        auto branch = [&](int b, bool child_on_path) {
            Colouring ca2 = ca, cb2 = cb;
            ca2[pivot] = n_;
            cb2[b] = n_;
            return aut_dfs(std::move(ca2), std::move(cb2), child_on_path);
        };

        if (!on_first_path) {
            for (int b = 0; b < n_; ++b)
                if (cb[b] == colour && branch(b, false)) return true;
            return false;
        }

        path_.push_back(pivot);
        bool found = branch(pivot, true);
        path_.pop_back();

        std::vector<int> explored{pivot};
        for (int b = 0; b < n_; ++b) {
            if (cb[b] != colour || b == pivot) continue;
            if (in_prefix_stabiliser_orbit(b, explored)) continue;
            found |= branch(b, false);
            explored.push_back(b);
        }
        return found;
    }

    bool in_prefix_stabiliser_orbit(int b, const std::vector<int>& explored) {
        DisjointSet dsu(n_);
        for (const auto& g : generators_) {
            bool fixes_prefix = true;
            for (int p : path_)
                if (g[p] != p) {
                    fixes_prefix = false;
                    break;
                }
            if (!fixes_prefix) continue;
            for (int v = 0; v < n_; ++v) dsu.unite(v, g[v]);
        }
        for (int e : explored)
            if (dsu.find(e) == dsu.find(b)) return true;
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    int n_;
    std::vector<std::vector<int>> generators_;
    std::vector<int> path_;
};

BigInt closure_order(const std::vector<std::vector<int>>& gens, int n, std::uint64_t cap) {
    if (gens.empty()) return 1;
    auto key = [](const std::vector<int>& p) {
        return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(int));
    };
    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);

    std::unordered_set<std::string> seen{key(identity)};
    std::vector<std::vector<int>> frontier{identity};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier) {
            for (const auto& g : gens) {
                std::vector<int> q(n);
                for (int v = 0; v < n; ++v) q[v] = p[g[v]];
                if (seen.insert(key(q)).second) {
                    if (seen.size() > cap) throw ClosureCapExceeded(cap);
                    next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    return BigInt(seen.size());
}

bool single_orbit(const std::vector<std::vector<int>>& gens, int n) {
    if (n <= 1) return true;
    DisjointSet dsu(n);
    for (const auto& g : gens)
        for (int v = 0; v < n; ++v) dsu.unite(v, g[v]);
    for (int v = 1; v < n; ++v)
        if (dsu.find(v) != dsu.find(0)) return false;
    return true;
}

}  // namespace

AutomorphismReport automorphism_group(const Graph& g, std::uint64_t closure_cap) {
    RefinementSearch search(g, g);
    AutomorphismReport report;
    report.generators = search.find_generators();
    for (const auto& gen : report.generators)
        if (!verify_bijection_preserves_edges(g, g, gen))
            throw std::logic_error("automorphism search produced a non-automorphism");
    report.order = closure_order(report.generators, g.order(), closure_cap);
    report.transitive = single_orbit(report.generators, g.order());
    return report;
}

bool is_vertex_transitive(const Graph& g) {
    RefinementSearch search(g, g);
    return single_orbit(search.find_generators(), g.order());
}

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return std::nullopt;
    if (g.order() == 0) return std::vector<int>{};
    if (g.edge_count() != h.edge_count()) return std::nullopt;
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;

    RefinementSearch search(g, h);
    auto f = search.find_isomorphism();
    if (f && !verify_bijection_preserves_edges(g, h, *f))
        throw std::logic_error("isomorphism search produced an invalid mapping");
    return f;
}

BigInt predicted_aut_order(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("predicted_aut_order requires even n >= 4");
    const int half = n / 2;
    BigInt factorial = 1;
    for (int i = 2; i <= half; ++i) factorial *= i;
    const BigInt inner = (BigInt(1) << half) * factorial;
    return 2 * inner * inner;
}

}  // namespace mdim
