#ifndef MDIM_AUTOMORPHISMS_HPP
#define MDIM_AUTOMORPHISMS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/spectrum.hpp"  // BigInt

namespace mdim {

struct AutomorphismReport {
    // Vertex permutations; each one is verified edge-preserving over all
    // vertex pairs before the report is returned.
    std::vector<std::vector<int>> generators;
    // Exact group order, obtained by closing the generators under
    // composition.
    BigInt order;
    bool transitive;
};

/// Thrown when closing the generator set would enumerate more elements than
/// the caller's cap allows.
struct ClosureCapExceeded : std::runtime_error {
    explicit ClosureCapExceeded(std::uint64_t cap)
        : std::runtime_error("automorphism closure exceeds the element cap of " +
                             std::to_string(cap)),
          cap(cap) {}
    std::uint64_t cap;
};

inline constexpr std::uint64_t kDefaultClosureCap = 4'000'000;

/// Generators found by individualization-refinement backtracking; group
/// order by exhaustive closure (throws ClosureCapExceeded beyond the cap).
AutomorphismReport automorphism_group(const Graph& g,
                                      std::uint64_t closure_cap = kDefaultClosureCap);

/// Single generator orbit covering all vertices. Does not close the group,
/// so it stays cheap even when the group is enormous.
bool is_vertex_transitive(const Graph& g);

/// An edge-preserving bijection from g to h (g index -> h index), fully
/// verified before being returned, or nullopt when none exists.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);

/// Order of Z_2 wr Sym(n/2) wr Sym(2), i.e. 2 * (2^(n/2) * (n/2)!)^2,
/// for even n >= 4.
BigInt predicted_aut_order(int n);

}  // namespace mdim

#endif
