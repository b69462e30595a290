#ifndef MDIM_FAMILIES_HPP
#define MDIM_FAMILIES_HPP

#include <set>

#include "mdim/graph.hpp"

namespace mdim {

/// Cayley graph on the dihedral group of order 2n with connection set
/// {all n reflections} + {a^(n/2)}, for even n >= 4.
///
/// Vertex indexing: index i in [0, n) is the rotation a^(i+1) (so the
/// identity, written a^n, sits at index n-1); index n+i is the reflection
/// a^(i+1)*b. x ~ y iff x^-1 * y lies in the connection set.
Graph dihedral_cayley(int n);

/// Toeplitz graph on vertices 1..N (labels), i ~ j iff |i-j| is in window.
Graph toeplitz(int order, const std::set<int>& window);

/// Circulant graph on Z_n: i ~ j iff (i - j) mod n is in connection.
/// The connection set must be closed under negation mod n.
Graph circulant(int n, const std::set<int>& connection);

/// Cocktail party graph CP(m): K_{2m} minus the perfect matching
/// {(0,1), (2,3), ...}.
Graph cocktail_party(int m);

}  // namespace mdim

#endif
