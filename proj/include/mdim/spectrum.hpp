#ifndef MDIM_SPECTRUM_HPP
#define MDIM_SPECTRUM_HPP

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mdim/graph.hpp"

namespace mdim {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients by ascending power; char polynomials are monic of degree
/// |V| with exact integer coefficients.
using Polynomial = std::vector<BigInt>;

/// det(xI - A) via the Faddeev-LeVerrier recurrence over exact integers.
Polynomial characteristic_polynomial(const Graph& g);

/// Integer eigenvalues with multiplicities, sorted by descending eigenvalue,
/// plus the monic factor that does not split over the integers (empty vector
/// when the spectrum is fully integral).
struct SpectrumReport {
    std::vector<std::pair<long long, int>> roots;
    Polynomial residual;
};

/// Finds every integer root in [-max_degree, max_degree] by exact synthetic
/// division and deflation. All real eigenvalues of an adjacency matrix lie in
/// that interval, so the residual has no integer roots at all.
SpectrumReport integer_spectrum(const Graph& g);

struct EigenvalueDiameterCheck {
    int distinct_eigenvalues;
    int diameter;
    bool consistent_with_distance_regularity;  // distinct count == diameter+1
};

/// Distinct eigenvalue count (integer roots plus the degree of the residual's
/// square-free part) against the diameter. Requires a connected graph.
EigenvalueDiameterCheck distinct_eigenvalue_count_vs_diameter(const Graph& g);

namespace poly {

BigInt evaluate(const Polynomial& p, const BigInt& x);

/// Divides p by (x - root); returns the quotient and sets `remainder`.
Polynomial synthetic_divide(const Polynomial& p, long long root, BigInt& remainder);

Polynomial derivative(const Polynomial& p);

Polynomial multiply(const Polynomial& a, const Polynomial& b);

/// Primitive, sign-normalised gcd via the primitive pseudo-remainder
/// sequence.
Polynomial gcd(Polynomial a, Polynomial b);

int degree(const Polynomial& p);

}  // namespace poly

}  // namespace mdim

#endif
