#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hfam/family.hpp"
#include "hfam/rational.hpp"

namespace hfam {

/// Exhaustive subset scans walk all 2^m subfamilies; m is capped here.
inline constexpr std::size_t kSubsetScanLimit = 24;

/// Naive cross-intersecting oracles enumerate (2^m)^k tuples.
inline constexpr unsigned long long kDefaultTupleBudget = 1ull << 24;

/// Exact pair products enumerate 2^m left families.
inline constexpr std::size_t kNaiveProductLimit = 12;

/// Branch-and-bound builds an m x m adjacency matrix beyond the scan limit.
inline constexpr std::size_t kCliqueMatrixLimit = std::size_t{1} << 14;

struct LargestIntersecting {
    std::size_t size = 0;
    SetFamily witness;  // lexicographically least attaining subfamily
};

/// Exact maximum-size intersecting subfamily. Subset scan for small
/// families, branch and bound with greedy colour bounds beyond that.
LargestIntersecting largest_intersecting(const SetFamily& family);

struct BestStar {
    std::optional<int> center;  // empty iff the support is empty
    std::size_t size = 0;
};

/// Largest star; ties broken towards the smallest center.
BestStar best_star(const SetFamily& family);

struct StarProperty {
    bool holds = false;
    std::optional<int> center;  // a star center attaining the optimum
};

/// Whether some star is a largest intersecting subfamily (vacuously true
/// when the support is empty).
StarProperty has_star_property(const SetFamily& family);

struct Pairing {
    std::vector<std::pair<Word, Word>> pairs;  // disjoint sets, smaller word first
    bool leftover_empty = false;               // true iff the family size is odd
};

/// Decomposes a hereditary family into disjoint pairs of disjoint sets,
/// leaving the empty set over when the size is odd. Existence is guaranteed
/// for hereditary input; an internal failure to pair throws defect_error.
Pairing berge_pairing(const SetFamily& hereditary);

/// The largest c <= l/|F| with |kernel(A)| + c * |residue(A)| <= l for every
/// subfamily A, where l is the largest-intersecting size. Exact rational.
Rational beta(const SetFamily& family, std::size_t member_budget = kSubsetScanLimit);

struct CrossSumOptimum {
    unsigned long long value = 0;
    int k = 0;
    SetFamily union_family;  // lexicographically least attaining subfamily A
    KernelSplit split;       // its kernel/residue partition
    // An attaining assignment: A_1 = union_family, A_2..A_k = split.kernel.
};

/// Exact maximum of the summed sizes of k cross-intersecting subfamilies,
/// computed as max over subfamilies A of k|kernel| + |residue|: no tuple can
/// beat that and the assignment above attains it.
CrossSumOptimum max_cross_sum(const SetFamily& family, int k,
                              std::size_t member_budget = kSubsetScanLimit);

/// Independent oracle: enumerates every k-tuple of subfamilies and filters
/// with are_cross_intersecting. Needs (2^m)^k <= tuple_budget.
unsigned long long naive_max_cross_sum(const SetFamily& family, int k,
                                       unsigned long long tuple_budget = kDefaultTupleBudget);

struct CrossProductOptimum {
    bool exact = false;
    unsigned long long value = 0;  // optimum when exact, else == lower
    unsigned long long lower = 0;  // attained by k copies of a largest intersecting subfamily
    Rational upper;                // proved bound; equals lower when exact
    int k = 0;
    std::optional<std::pair<SetFamily, SetFamily>> pair_witness;  // k = 2 exact mode
    std::optional<SetFamily> uniform_witness;                     // certificate mode
};

/// Exact maximum product for k = 2 on small families; for other cases a
/// certificate (value proved optimal when the sum optimum equals k times the
/// largest-intersecting size) or an explicit interval, never a silent
/// approximation.
CrossProductOptimum max_cross_product(const SetFamily& family, int k,
                                      std::size_t member_budget = kSubsetScanLimit);

namespace detail {

/// D[i] = bitmask over member indices j with member_i and member_j disjoint
/// (j == i included exactly when member_i is the empty set).
std::vector<std::uint64_t> disjointness_masks(const SetFamily& family);

/// Members selected by a bitmask over member indices.
SetFamily subfamily(const SetFamily& family, std::uint64_t member_mask);

/// Compares index masks as ascending member lists ("{0,3} before {1,2}",
/// and a list before any proper extension of it).
bool family_mask_lex_less(std::uint64_t a, std::uint64_t b) noexcept;

/// Number of selected members that intersect every selected member.
int kernel_count(const std::vector<std::uint64_t>& disjoint, std::uint64_t member_mask) noexcept;

// Both largest-intersecting strategies, exposed so tests can cross-check.
LargestIntersecting largest_intersecting_scan(const SetFamily& family);
LargestIntersecting largest_intersecting_branch_bound(const SetFamily& family);

}  // namespace detail

}  // namespace hfam
