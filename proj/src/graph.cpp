#include "mdim/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace mdim {

Graph::Graph(int order, std::vector<std::string> labels)
    : order_(order), adj_(order, BitRow(order)), labels_(std::move(labels)) {
    if (order < 0) throw std::invalid_argument("graph order must be non-negative");
    if (static_cast<int>(labels_.size()) != order)
        throw std::invalid_argument("label count must equal graph order");
    std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != order)
        throw std::invalid_argument("vertex labels must be unique");
}

Graph::Graph(int order) : Graph(order, [order] {
    std::vector<std::string> ls(order);
    for (int i = 0; i < order; ++i) ls[i] = std::to_string(i);
    return ls;
}()) {}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
        throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degree(v));
    adj_[v].for_each_set([&](int w) { out.push_back(w); });
    return out;
}

int Graph::vertex_by_label(const std::string& label) const {
    for (int v = 0; v < order_; ++v)
        if (labels_[v] == label) return v;
    return -1;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < order_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> ds(order_);
    for (int v = 0; v < order_; ++v) ds[v] = degree(v);
    std::sort(ds.begin(), ds.end());
    return ds;
}

int Graph::regular_valency() const {
    if (order_ == 0) return 0;
    int k = degree(0);
    for (int v = 1; v < order_; ++v)
        if (degree(v) != k) return -1;
    return k;
}

bool Graph::is_connected() const {
    if (order_ <= 1) return true;
    std::vector<int> stack{0};
    std::vector<bool> seen(order_, false);
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        adj_[v].for_each_set([&](int w) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        });
    }
    return reached == order_;
}

Graph complement(const Graph& g) {
    Graph c(g.order(), g.labels());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::unordered_set<std::string> used(g.labels().begin(), g.labels().end());
    std::vector<std::string> labels = g.labels();
    labels.reserve(g.order() + h.order());
    for (int v = 0; v < h.order(); ++v) {
        std::string l = h.label(v);
        while (used.count(l)) l += "'";
        used.insert(l);
        labels.push_back(std::move(l));
    }
    Graph u(g.order() + h.order(), std::move(labels));
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (g.adjacent(a, b)) u.add_edge(a, b);
    for (int a = 0; a < h.order(); ++a)
        for (int b = a + 1; b < h.order(); ++b)
            if (h.adjacent(a, b)) u.add_edge(g.order() + a, g.order() + b);
    return u;
}

}  // namespace mdim
