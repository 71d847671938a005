#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hfam/enumeration.hpp"
#include "hfam/family.hpp"
#include "hfam/solvers.hpp"

namespace hfam {

/// pass/fail report the mathematical outcome; skipped marks a budget cut;
/// defect marks a violated proved statement, which is always a library bug.
enum class Verdict { pass, fail, skipped, defect };

std::string to_string(Verdict v);

struct CheckParams {
    std::optional<int> x;
    std::optional<int> k;
    std::optional<int> i;
    std::optional<int> j;
};

struct CheckResult {
    std::string check;
    int n = 0;
    std::string family;               // compact encoding; empty for summary rows
    std::vector<Word> family_words;   // decoded members, used for deterministic ordering
    CheckParams params;
    Verdict verdict = Verdict::pass;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();   // scalars as strings
    nlohmann::ordered_json witness;                                     // null unless fail/defect
};

struct Budgets {
    std::size_t subset_members = kSubsetScanLimit;       // cap for 2^m subset scans
    unsigned long long tuples = kDefaultTupleBudget;     // cap for naive tuple enumerations
    std::size_t samples = 10000;                         // randomized phase sample count
};

// --- proved statements (fail is impossible; violations become defects) ---

/// Compression/kernel interplay, all four clauses, against B = compress(A,i,j).
CheckResult check_complemma(const SetFamily& a, int i, int j);

/// The disjoint-pair decomposition exists and validates.
CheckResult check_berge(const SetFamily& hereditary);

/// No intersecting subfamily exceeds half the family.
CheckResult check_bergecor(const SetFamily& hereditary);

/// When all bases share x, the star at x is exactly half the family.
CheckResult check_bergeprop(const SetFamily& hereditary);

/// A family compressed with respect to x has the star property at x.
CheckResult check_snevily(const SetFamily& hereditary, int x);

/// Cross-intersecting sum/product bounds k|H|/2 and (|H|/2)^k, with
/// attainment when the bases share an element.
CheckResult check_result2(const SetFamily& hereditary, int k, const Budgets& budgets = {});

/// For compressed (H, x): |kernel(A)| + |residue(A)|/(n+1) <= |H<x>| for all
/// subfamilies A, with the documented unique equality case.
CheckResult check_mainthm2(const SetFamily& hereditary, int x, const Budgets& budgets = {},
                           std::uint64_t seed = 0);

/// For compressed (H, x) and k >= n+1: the sum optimum is k|H<x>|, the
/// product certificate |H<x>|^k, and every attaining subfamily matches one
/// of the two extremal configurations.
CheckResult check_mainthm(const SetFamily& hereditary, int x, int k, const Budgets& budgets = {});

// --- conjectures (fail means a counterexample worth publishing) ---

/// Star property for hereditary families.
CheckResult check_chvatal(const SetFamily& hereditary);

/// For k >= n+1 the all-star configuration maximizes the sum.
CheckResult check_weaksum(const SetFamily& hereditary, int k, const Budgets& budgets = {});

/// One of (H, {}, ..., {}) and all-star maximizes the sum for every k.
CheckResult check_strongsum(const SetFamily& hereditary, int k, const Budgets& budgets = {});

/// The all-star configuration maximizes the product for every k >= 2.
CheckResult check_prodconj(const SetFamily& hereditary, int k, const Budgets& budgets = {});

bool is_known_check(const std::string& name);
const std::vector<std::string>& known_checks();

/// Re-runs the recorded check on the recorded family and parameters and
/// compares verdict, values and witness. Fail records therefore carry
/// everything needed to reproduce the violation.
bool revalidate(const CheckResult& recorded, const Budgets& budgets = {});

struct SweepConfig {
    std::vector<std::string> checks;
    int n_min = 0;
    int n_max = 0;
    std::vector<int> k;  // empty: {2, 3, n+1, n+2} per ground size
    FamilyFilter filter;
    Budgets budgets;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool allow_n6 = false;
};

/// Plain-text key = value config; '#' starts a comment. Keys: checks, n, k,
/// filter, budget_subsets, budget_tuples, samples, seed, jobs, allow_n6.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig parse_sweep_config_text(const std::string& text);

struct SweepCounts {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    std::size_t defect = 0;

    std::size_t total() const { return pass + fail + skipped + defect; }
};

SweepCounts tally(const std::vector<CheckResult>& results);

/// Runs every requested check over the configured family space. Results are
/// sorted by (check, n, family, params) regardless of scheduling, and a
/// summary record is appended last.
std::vector<CheckResult> run_sweep(const SweepConfig& config);

}  // namespace hfam
