#ifndef MDIM_CLAIMS_HPP
#define MDIM_CLAIMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdim/resolving.hpp"

namespace mdim {

enum class ClaimVerdict { Pass, Fail, Skipped };

struct Claim {
    std::string id;
    std::string statement;
    ClaimVerdict verdict;
    nlohmann::ordered_json certificate;
    double elapsed_ms = 0.0;
};

struct ClaimReport {
    int n = 0;
    std::uint64_t exhaustive_cap = 0;
    std::vector<Claim> claims;

    bool any(ClaimVerdict v) const;
    /// 0 all pass, 1 any fail, 2 skipped without fail.
    int exit_code() const;
};

/// Chosen so that the metric-dimension and doubly-resolving searches run
/// exhaustively for n in {4, 6, 8} while the brute-force strong-dimension
/// search runs only for n in {4, 6}.
inline constexpr std::uint64_t kDefaultExhaustiveCap = 30'000;

/// Runs the fixed set of sixteen claims about the dihedral Cayley graph on
/// 2n vertices. Exhaustive searches whose refutation budget exceeds the cap
/// are reported SKIPPED with the budget that was exceeded; failures carry a
/// machine-checkable certificate.
ClaimReport verify_claims(int n, std::uint64_t exhaustive_cap = kDefaultExhaustiveCap);

const std::vector<std::string>& claim_ids();

/// The two worked resolving-set examples on the graph with n = 6.
struct ExampleReport {
    std::string id;
    VertexSet set;                         // the candidate set R
    std::vector<std::string> set_labels;
    ResolutionReport report;
    // Metric vectors of every vertex outside R, in vertex order.
    std::vector<std::pair<std::string, MetricVector>> vectors;
};

/// id is "3.4" (non-resolving, witness pair) or "3.5" (resolving).
ExampleReport run_example(const std::string& id);

nlohmann::ordered_json example_json(const ExampleReport& report);

nlohmann::ordered_json claim_report_json(const ClaimReport& report, bool include_timings = false);

std::string claim_report_table(const ClaimReport& report, bool include_timings = false);

}  // namespace mdim

#endif
