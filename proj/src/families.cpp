#include "mdim/families.hpp"

#include <stdexcept>
#include <string>

#include "mdim/dihedral.hpp"

namespace mdim {

namespace {

std::string rotation_label(int exponent) {
    return exponent == 1 ? "a" : "a^" + std::to_string(exponent);
}

std::string reflection_label(int exponent) {
    return exponent == 1 ? "ab" : "a^" + std::to_string(exponent) + "b";
}

}  // namespace

Graph dihedral_cayley(int n) {
    if (n < 4) throw std::invalid_argument("dihedral_cayley requires n >= 4");
    if (n % 2 != 0) throw std::invalid_argument("dihedral_cayley requires even n");

    std::vector<std::string> labels(2 * n);
    std::vector<DihedralElement> vertex(2 * n);
    for (int i = 0; i < n; ++i) {
        labels[i] = rotation_label(i + 1);
        vertex[i] = DihedralElement::rotation(i + 1, n);
        labels[n + i] = reflection_label(i + 1);
        vertex[n + i] = DihedralElement::reflection(i + 1, n);
    }

    auto in_connection_set = [n](const DihedralElement& e) {
        return e.refl || e.rot == n / 2;  // every reflection, plus a^(n/2)
    };

    Graph g(2 * n, std::move(labels));
    for (int u = 0; u < 2 * n; ++u)
        for (int v = u + 1; v < 2 * n; ++v)
            if (in_connection_set(vertex[u].inverse(n).multiply(vertex[v], n)))
                g.add_edge(u, v);
    return g;
}

Graph toeplitz(int order, const std::set<int>& window) {
    if (order < 2) throw std::invalid_argument("toeplitz requires order >= 2");
    if (window.empty()) throw std::invalid_argument("toeplitz window must be non-empty");
    for (int w : window)
        if (w < 1 || w > order - 1)
            throw std::invalid_argument("toeplitz window entries must lie in [1, order-1]");

    std::vector<std::string> labels(order);
    for (int i = 0; i < order; ++i) labels[i] = std::to_string(i + 1);
    Graph g(order, std::move(labels));
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j)
            if (window.count(j - i)) g.add_edge(i, j);
    return g;
}

Graph circulant(int n, const std::set<int>& connection) {
    if (n < 3) throw std::invalid_argument("circulant requires n >= 3");
    if (connection.empty()) throw std::invalid_argument("circulant connection set must be non-empty");
    for (int s : connection) {
        if (s < 1 || s > n - 1)
            throw std::invalid_argument("circulant connection entries must lie in [1, n-1]");
        if (!connection.count(n - s))
            throw std::invalid_argument("circulant connection set must be closed under negation mod n");
    }

    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (connection.count((j - i) % n)) g.add_edge(i, j);
    return g;
}

Graph cocktail_party(int m) {
    if (m < 1) throw std::invalid_argument("cocktail_party requires m >= 1");
    Graph g(2 * m);
    for (int u = 0; u < 2 * m; ++u)
        for (int v = u + 1; v < 2 * m; ++v)
            if (!(u / 2 == v / 2)) g.add_edge(u, v);
    return g;
}

}  // namespace mdim
