#include "mdim/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

#include "mdim/distance.hpp"

namespace mdim {

namespace poly {

int degree(const Polynomial& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

BigInt evaluate(const Polynomial& p, const BigInt& x) {
    BigInt acc = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

Polynomial synthetic_divide(const Polynomial& p, long long root, BigInt& remainder) {
    const int d = degree(p);
    if (d < 1) throw std::invalid_argument("cannot divide a constant polynomial");
    Polynomial q(d);
    BigInt carry = p[d];
    for (int i = d - 1; i >= 0; --i) {
        q[i] = carry;
        carry = p[i] + carry * root;
    }
    remainder = carry;
    return q;
}

Polynomial derivative(const Polynomial& p) {
    const int d = degree(p);
    if (d <= 0) return {};
    Polynomial out(d);
    for (int i = 1; i <= d; ++i) out[i - 1] = p[i] * i;
    return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    const int da = degree(a), db = degree(b);
    if (da < 0 || db < 0) return {};
    Polynomial out(da + db + 1, 0);
    for (int i = 0; i <= da; ++i)
        for (int j = 0; j <= db; ++j) out[i + j] += a[i] * b[j];
    return out;
}

namespace {

BigInt content(const Polynomial& p) {
    BigInt c = 0;
    for (const auto& x : p) c = boost::multiprecision::gcd(c, x);
    return c;
}

Polynomial primitive(Polynomial p) {
    const int d = degree(p);
    if (d < 0) return {};
    p.resize(d + 1);
    BigInt c = content(p);
    if (p[d] < 0) c = -c;  // normalise the leading sign
    if (c != 0 && c != 1)
        for (auto& x : p) x /= c;
    return p;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
    const int db = degree(b);
    const BigInt lb = b[db];
    int da = degree(a);
    while (da >= db && da >= 0) {
        const BigInt coef = a[da];
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= coef * b[i];
        da = degree(a);
    }
    return a;
}

}  // namespace

Polynomial gcd(Polynomial a, Polynomial b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (degree(a) < degree(b)) std::swap(a, b);
    while (degree(b) >= 0) {
        Polynomial r = primitive(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace poly

Polynomial characteristic_polynomial(const Graph& g) {
    const int n = g.order();
    Polynomial c(n + 1, 0);
    c[n] = 1;
    if (n == 0) return c;

    using Matrix = std::vector<std::vector<BigInt>>;
    Matrix a(n, std::vector<BigInt>(n, 0));
    for (int u = 0; u < n; ++u)
        g.row(u).for_each_set([&](int v) { a[u][v] = 1; });

    // Faddeev-LeVerrier: M_k = A*M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A*M_k)/k.
    Matrix m(n, std::vector<BigInt>(n, 0));
    for (int k = 1; k <= n; ++k) {
        Matrix am(n, std::vector<BigInt>(n, 0));
        for (int i = 0; i < n; ++i)
            g.row(i).for_each_set([&](int l) {
                for (int j = 0; j < n; ++j) am[i][j] += m[l][j];
            });
        for (int i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
        m = std::move(am);

        BigInt trace = 0;
        for (int i = 0; i < n; ++i)
            g.row(i).for_each_set([&](int l) { trace += m[l][i]; });
        c[n - k] = -trace / k;
    }
    return c;
}

SpectrumReport integer_spectrum(const Graph& g) {
    SpectrumReport report;
    Polynomial p = characteristic_polynomial(g);
    int max_degree = 0;
    for (int v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));

    for (long long lambda = max_degree; lambda >= -max_degree; --lambda) {
        int multiplicity = 0;
        while (poly::degree(p) >= 1) {
            BigInt remainder;
            Polynomial q = poly::synthetic_divide(p, lambda, remainder);
            if (remainder != 0) break;
            p = std::move(q);
            ++multiplicity;
        }
        if (multiplicity > 0) report.roots.emplace_back(lambda, multiplicity);
    }
    if (poly::degree(p) >= 1) report.residual = std::move(p);
    return report;
}

EigenvalueDiameterCheck distinct_eigenvalue_count_vs_diameter(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("distinct_eigenvalue_count_vs_diameter requires a connected graph");

    const SpectrumReport s = integer_spectrum(g);
    int distinct = static_cast<int>(s.roots.size());
    if (poly::degree(s.residual) >= 1) {
        // Distinct residual roots = degree of the square-free part. Adjacency
        // spectra are real, so this counts distinct eigenvalues.
        const Polynomial g_ = poly::gcd(s.residual, poly::derivative(s.residual));
        distinct += poly::degree(s.residual) - poly::degree(g_);
    }

    EigenvalueDiameterCheck check;
    check.distinct_eigenvalues = distinct;
    check.diameter = all_pairs_distances(g).diameter();
    check.consistent_with_distance_regularity = (distinct == check.diameter + 1);
    return check;
}

}  // namespace mdim
