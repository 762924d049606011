#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starlax/integrability.hpp"

namespace starlax {

enum class OutputFormat { text, json };

/// Everything that determines the outcome of a run.
struct RunConfig {
    int order = 8;
    Params params;
    std::vector<SystemId> systems{kAllSystems.begin(), kAllSystems.end()};
    std::vector<int> n_range{1, 2, 3};
    std::vector<ChiVariant> variants{ChiVariant::plain, ChiVariant::tilde};
    std::optional<RGroup> r_override;
    std::uint64_t seed = 1;
    int jobs = 1;
    /// When false, reports carry no wall-clock times (byte-identical output).
    bool timing = true;
    OutputFormat format = OutputFormat::text;
};

// --- report groups shared by the CLI and the acceptance run ---

/// CYBE for r and r~.
[[nodiscard]] std::vector<CheckReport> cybe_reports(int order);
/// QYBE for the three table R-matrices and `random` seeded f-series; isolated cubic terms.
[[nodiscard]] std::vector<CheckReport> qybe_reports(int order, const Params& params, std::uint64_t seed, int random = 5);
/// R12 R21 against the closed-form scalars and an index-level product oracle.
[[nodiscard]] std::vector<CheckReport> unitarity_reports(int order, const Params& params);
/// rho(F * G) psi = rho(F) rho(G) psi for the standard and Weyl quantizations.
[[nodiscard]] std::vector<CheckReport> representation_reports(int order, std::uint64_t seed, int triples = 100);
/// Associativity, limits, N-intertwining, conjugation and parity, representation identities.
[[nodiscard]] std::vector<CheckReport> foundation_reports(int order, std::uint64_t seed);
/// Waring identities in both directions and the round trip, n <= max_n.
[[nodiscard]] std::vector<CheckReport> waring_reports(int max_n, int order);
/// Corrected trace polynomials against the closed forms (k = 4, 5, 6) and I_k for k <= 3.
[[nodiscard]] std::vector<CheckReport> correction_reports(int n, int order, const std::vector<int>& ks);
/// Corrected quantities commute pairwise and with H (n <= max_n).
[[nodiscard]] std::vector<CheckReport> quantum_integrability_reports(int max_n, int max_k, int order, int jobs);
/// Passes iff some pair of uncorrected trace polynomials fails to star-commute.
[[nodiscard]] CheckReport asymmetry_report(int max_k, int max_n, int order);

/// The A2 matrix with U_22 = -1 (used only for labelled diagnostics).
[[nodiscard]] LaxFactory sign_corrected_a2(int order);

// --- acceptance ---

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double wall_time_ms = 0;
    double budget_ms = 0;
    std::vector<CheckReport> checks;
};

/// Runs the numbered acceptance criteria (all when `only` is empty).
[[nodiscard]] std::vector<CriterionResult> run_acceptance(std::uint64_t seed, int jobs, const std::vector<int>& only = {});

/// Labelled diagnostics that are not acceptance criteria (sign-corrected A2).
[[nodiscard]] std::vector<CheckReport> diagnostic_reports(int order, int jobs);

/// "PASS [4] RLL ... (12.3 s, budget 60 s)" plus indented failing checks.
[[nodiscard]] std::string render_criterion(const CriterionResult& c, bool timing = true);

// --- rendering ---

/// Text: one line per check, or "0 checks". JSON: array of objects with schema 1.
[[nodiscard]] std::string emit_report(const std::vector<CheckReport>& reports, const RunConfig& config);

} // namespace starlax
