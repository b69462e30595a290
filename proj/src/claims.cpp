#include "mdim/claims.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "mdim/automorphisms.hpp"
#include "mdim/distance.hpp"
#include "mdim/distance_regular.hpp"
#include "mdim/families.hpp"
#include "mdim/io.hpp"
#include "mdim/spectrum.hpp"

namespace mdim {

namespace {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Candidate sets that an ascending search must refute before reaching size
// `target`: sum of C(n, k) for k in [1, target-1].
BigInt refutation_budget(int n, int target) {
    BigInt b = 0;
    for (int k = 1; k < target; ++k) b += binomial(n, k);
    return b;
}

bool within(const BigInt& budget, std::uint64_t cap) { return budget <= BigInt(cap); }

nlohmann::ordered_json budget_certificate(const BigInt& budget, std::uint64_t cap) {
    return {{"budget", budget.str()}, {"cap", cap}};
}

// The resolving set singled out in the construction: the first n/2 rotations
// and the first n/2 reflections.
VertexSet half_half_set(int n) {
    std::vector<int> members;
    for (int i = 0; i < n / 2; ++i) members.push_back(i);
    for (int i = 0; i < n / 2; ++i) members.push_back(n + i);
    return VertexSet(std::move(members), 2 * n);
}

std::set<int> toeplitz_window(int n) {
    std::set<int> w;
    for (int odd = 1; odd <= 2 * n - 1; odd += 2) w.insert(odd);
    w.insert(n);
    return w;
}

std::set<int> circulant_connection(int n) {
    std::set<int> s;
    for (int i = 1; i <= n / 2 - 1; ++i) {
        s.insert(i);
        s.insert(n - i);
    }
    return s;
}

struct ClaimRunner {
    ClaimReport& report;

    void run(const std::string& id, const std::string& statement,
             const std::function<std::pair<ClaimVerdict, nlohmann::ordered_json>()>& body) {
        const auto start = std::chrono::steady_clock::now();
        Claim claim;
        claim.id = id;
        claim.statement = statement;
        try {
            auto [verdict, certificate] = body();
            claim.verdict = verdict;
            claim.certificate = std::move(certificate);
        } catch (const ClosureCapExceeded& e) {
            claim.verdict = ClaimVerdict::Skipped;
            claim.certificate = {{"budget", "group closure"}, {"cap", e.cap}};
        }
        claim.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        report.claims.push_back(std::move(claim));
    }
};

ClaimVerdict verdict_of(bool pass) { return pass ? ClaimVerdict::Pass : ClaimVerdict::Fail; }

}  // namespace

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = {
        "DIAMETER2",      "NONBIPARTITE",   "REGULAR",        "CLIQUE4",
        "SPECTRUM",       "FOUR_EIGENVALUES", "NOT_DRG",      "TOEPLITZ_ISO",
        "COMPLEMENT_ISO", "CIRCULANT_ISO",  "AUT_ORDER",      "VERTEX_TRANSITIVE",
        "BETA_EQ_N",      "PSI_EQ_N",       "R_NOT_STRONG",   "SDIM_EQ_2N_MINUS_2"};
    return ids;
}

bool ClaimReport::any(ClaimVerdict v) const {
    for (const auto& c : claims)
        if (c.verdict == v) return true;
    return false;
}

int ClaimReport::exit_code() const {
    if (any(ClaimVerdict::Fail)) return 1;
    if (any(ClaimVerdict::Skipped)) return 2;
    return 0;
}

ClaimReport verify_claims(int n, std::uint64_t cap) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("verify_claims requires even n >= 4");

    ClaimReport report;
    report.n = n;
    report.exhaustive_cap = cap;
    ClaimRunner runner{report};

    const Graph lambda = dihedral_cayley(n);
    const DistanceMatrix dist = all_pairs_distances(lambda);
    const GraphProfile prof = profile(lambda);
    const std::string ns = std::to_string(n);

    runner.run("DIAMETER2", "the graph has diameter 2", [&] {
        return std::pair{verdict_of(prof.diameter == 2),
                         nlohmann::ordered_json{{"diameter", prof.diameter}}};
    });

    runner.run("NONBIPARTITE", "the graph is not bipartite", [&] {
        return std::pair{verdict_of(!prof.bipartite),
                         nlohmann::ordered_json{{"bipartite", prof.bipartite}}};
    });

    runner.run("REGULAR", "the graph is (n+1)-regular", [&] {
        return std::pair{verdict_of(prof.regular_valency == n + 1),
                         nlohmann::ordered_json{{"valency", prof.regular_valency},
                                                {"expected", n + 1}}};
    });

    runner.run("CLIQUE4", "the largest clique has 4 vertices", [&] {
        auto clique = max_clique(lambda);
        return std::pair{verdict_of(static_cast<int>(clique.size()) == 4),
                         nlohmann::ordered_json{{"clique_number", clique.size()},
                                                {"clique", clique}}};
    });

    runner.run("SPECTRUM",
               "the spectrum is n+1, 1-n, 1 with multiplicity n-2, -1 with multiplicity n",
               [&] {
                   const SpectrumReport s = integer_spectrum(lambda);
                   const std::vector<std::pair<long long, int>> expected = {
                       {n + 1, 1}, {1, n - 2}, {-1, n}, {1 - n, 1}};
                   const bool pass = s.roots == expected && s.residual.empty();
                   auto cert = spectrum_json(s);
                   cert["expected_roots"] = {{n + 1, 1}, {1, n - 2}, {-1, n}, {1 - n, 1}};
                   return std::pair{verdict_of(pass), cert};
               });

    runner.run("FOUR_EIGENVALUES",
               "there are exactly 4 distinct eigenvalues, more than diameter+1",
               [&] {
                   const auto check = distinct_eigenvalue_count_vs_diameter(lambda);
                   const bool pass = check.distinct_eigenvalues == 4 &&
                                     !check.consistent_with_distance_regularity;
                   return std::pair{
                       verdict_of(pass),
                       nlohmann::ordered_json{
                           {"distinct_eigenvalues", check.distinct_eigenvalues},
                           {"diameter", check.diameter},
                           {"consistent_with_distance_regularity",
                            check.consistent_with_distance_regularity}}};
               });

    runner.run("NOT_DRG", "the graph is not distance-regular", [&] {
        const auto drg = distance_regularity_check(lambda);
        return std::pair{verdict_of(!drg.verdict && drg.witness.has_value()),
                         distance_regularity_json(drg)};
    });

    runner.run("TOEPLITZ_ISO",
               "the graph is isomorphic to the Toeplitz graph on 2n vertices with "
               "window {1, 3, ..., 2n-1} + {n}",
               [&] {
                   const Graph t = toeplitz(2 * n, toeplitz_window(n));
                   auto f = are_isomorphic(lambda, t);
                   nlohmann::ordered_json cert;
                   if (f) cert["mapping"] = *f;
                   return std::pair{verdict_of(f.has_value()), cert};
               });

    runner.run("COMPLEMENT_ISO",
               "the complement is isomorphic to two disjoint copies of the cocktail "
               "party graph CP(n/2)",
               [&] {
                   const Graph cp = cocktail_party(n / 2);
                   auto f = are_isomorphic(complement(lambda), disjoint_union(cp, cp));
                   nlohmann::ordered_json cert;
                   if (f) cert["mapping"] = *f;
                   return std::pair{verdict_of(f.has_value()), cert};
               });

    runner.run("CIRCULANT_ISO",
               "CP(n/2) is isomorphic to the circulant graph on Z_n with connection "
               "set {+-1, ..., +-(n/2-1)}",
               [&] {
                   auto f = are_isomorphic(cocktail_party(n / 2),
                                           circulant(n, circulant_connection(n)));
                   nlohmann::ordered_json cert;
                   if (f) cert["mapping"] = *f;
                   return std::pair{verdict_of(f.has_value()), cert};
               });

    runner.run("AUT_ORDER",
               "the automorphism group has order 2*(2^(n/2)*(n/2)!)^2",
               [&]() -> std::pair<ClaimVerdict, nlohmann::ordered_json> {
                   const BigInt predicted = predicted_aut_order(n);
                   // closing a group of the predicted size would blow the
                   // element cap, so skip up front instead of mid-closure
                   if (predicted > BigInt(kDefaultClosureCap))
                       return {ClaimVerdict::Skipped,
                               budget_certificate(predicted, kDefaultClosureCap)};
                   const AutomorphismReport aut = automorphism_group(lambda);
                   return {verdict_of(aut.order == predicted),
                           nlohmann::ordered_json{{"order", aut.order.str()},
                                                  {"predicted", predicted.str()},
                                                  {"generator_count", aut.generators.size()}}};
               });

    runner.run("VERTEX_TRANSITIVE", "the automorphism group is transitive on vertices", [&] {
        const bool t = is_vertex_transitive(lambda);
        return std::pair{verdict_of(t), nlohmann::ordered_json{{"transitive", t}}};
    });

    runner.run("BETA_EQ_N", "the metric dimension equals n", [&] {
        const BigInt budget = refutation_budget(2 * n, n);
        if (!within(budget, cap))
            return std::pair{ClaimVerdict::Skipped, budget_certificate(budget, cap)};
        const DimensionResult beta = metric_dimension(lambda);
        return std::pair{verdict_of(beta.dimension == n),
                         nlohmann::ordered_json{{"dimension", beta.dimension},
                                                {"set", beta.optimal_set.members()},
                                                {"checked", beta.search_space_checked},
                                                {"refuted_below", beta.refuted_below}}};
    });

    runner.run("PSI_EQ_N", "the minimum doubly resolving set has n vertices", [&] {
        const BigInt beta_budget = refutation_budget(2 * n, n);
        const BigInt psi_budget = binomial(2 * n, n - 1);
        if (!within(beta_budget, cap) || !within(psi_budget, cap))
            return std::pair{ClaimVerdict::Skipped,
                             budget_certificate(beta_budget + psi_budget, cap)};
        const VertexSet r = half_half_set(n);
        const bool r_doubly = is_doubly_resolving(dist, r).verdict;
        const DimensionResult psi = min_doubly_resolving(lambda);
        return std::pair{verdict_of(psi.dimension == n && r_doubly),
                         nlohmann::ordered_json{{"dimension", psi.dimension},
                                                {"set", psi.optimal_set.members()},
                                                {"checked", psi.search_space_checked},
                                                {"refuted_below", psi.refuted_below},
                                                {"half_half_set", r.members()},
                                                {"half_half_set_doubly_resolving", r_doubly}}};
    });

    runner.run("R_NOT_STRONG",
               "the half-rotations half-reflections resolving set of size n is not a "
               "strong resolving set",
               [&] {
                   const VertexSet r = half_half_set(n);
                   const ResolutionReport res = is_strong_resolving(dist, r);
                   auto cert = resolution_json(res);
                   cert["set"] = r.members();
                   return std::pair{verdict_of(!res.verdict && res.witness.has_value()), cert};
               });

    runner.run("SDIM_EQ_2N_MINUS_2", "the strong metric dimension equals 2n-2", [&] {
        const Graph srg = strong_resolving_graph(lambda);
        const VertexSet cover = min_vertex_cover(srg);
        const bool cover_is_strong = is_strong_resolving(dist, cover).verdict;
        bool pass = cover.size() == 2 * n - 2 && cover_is_strong;

        nlohmann::ordered_json cert{{"dimension", cover.size()},
                                    {"expected", 2 * n - 2},
                                    {"vertex_cover", cover.members()},
                                    {"cover_is_strong_resolving", cover_is_strong},
                                    {"srg_edge_count", srg.edge_count()}};

        const BigInt brute_budget = refutation_budget(2 * n, 2 * n - 2);
        if (within(brute_budget, cap)) {
            const DimensionResult brute = strong_metric_dimension(lambda);
            pass = pass && brute.dimension == 2 * n - 2;
            cert["brute_force"] = {{"dimension", brute.dimension},
                                   {"checked", brute.search_space_checked}};
        } else {
            cert["brute_force"] = "skipped (budget " + brute_budget.str() + " exceeds cap " +
                                  std::to_string(cap) + ")";
        }
        return std::pair{verdict_of(pass), cert};
    });

    // Fixed report order regardless of how the claims executed.
    std::vector<Claim> ordered;
    for (const auto& id : claim_ids())
        for (auto& c : report.claims)
            if (c.id == id) ordered.push_back(std::move(c));
    report.claims = std::move(ordered);
    return report;
}

ExampleReport run_example(const std::string& id) {
    std::vector<std::string> set_labels;
    if (id == "3.4")
        set_labels = {"a", "a^2", "ab", "a^2b", "a^3b", "a^4b"};
    else if (id == "3.5")
        set_labels = {"a", "a^2", "a^3", "ab", "a^2b", "a^3b"};
    else
        throw std::invalid_argument("unknown example id (expected \"3.4\" or \"3.5\")");

    const Graph lambda = dihedral_cayley(6);
    const DistanceMatrix dist = all_pairs_distances(lambda);

    std::vector<int> members;
    for (const auto& label : set_labels) members.push_back(lambda.vertex_by_label(label));
    const VertexSet r(members, lambda.order());

    ExampleReport ex;
    ex.id = id;
    ex.set = r;
    ex.set_labels = set_labels;
    ex.report = is_resolving(dist, r);
    for (int v = 0; v < lambda.order(); ++v)
        if (!r.contains(v)) ex.vectors.emplace_back(lambda.label(v), metric_vector(dist, v, r));
    return ex;
}

nlohmann::ordered_json example_json(const ExampleReport& ex) {
    nlohmann::ordered_json j;
    j["id"] = ex.id;
    j["set"] = ex.set.members();
    j["set_labels"] = ex.set_labels;
    j["report"] = resolution_json(ex.report);
    auto vectors = nlohmann::ordered_json::object();
    for (const auto& [label, vec] : ex.vectors) vectors[label] = vec;
    j["vectors"] = std::move(vectors);
    return j;
}

namespace {

std::string verdict_name(ClaimVerdict v) {
    switch (v) {
        case ClaimVerdict::Pass: return "PASS";
        case ClaimVerdict::Fail: return "FAIL";
        case ClaimVerdict::Skipped: return "SKIPPED";
    }
    return "?";
}

}  // namespace

nlohmann::ordered_json claim_report_json(const ClaimReport& report, bool include_timings) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["exhaustive_cap"] = report.exhaustive_cap;
    auto claims = nlohmann::ordered_json::array();
    for (const auto& c : report.claims) {
        nlohmann::ordered_json cj;
        cj["claim_id"] = c.id;
        cj["statement"] = c.statement;
        cj["verdict"] = verdict_name(c.verdict);
        cj["certificate"] = c.certificate;
        if (include_timings) cj["elapsed_ms"] = c.elapsed_ms;
        claims.push_back(std::move(cj));
    }
    j["claims"] = std::move(claims);
    j["exit_code"] = report.exit_code();
    return j;
}

std::string claim_report_table(const ClaimReport& report, bool include_timings) {
    std::ostringstream out;
    out << "claims for n = " << report.n << " (cap " << report.exhaustive_cap << ")\n";
    for (const auto& c : report.claims) {
        out << "  " << std::left << std::setw(20) << c.id << " " << std::setw(7)
            << verdict_name(c.verdict) << " " << c.statement;
        if (include_timings)
            out << "  [" << std::fixed << std::setprecision(1) << c.elapsed_ms << " ms]";
        out << "\n";
    }
    out << "exit code " << report.exit_code() << "\n";
    return out.str();
}

}  // namespace mdim
