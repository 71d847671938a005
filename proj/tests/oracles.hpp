#pragma once

// Test-only reference implementations. Everything here recomputes results by
// direct enumeration over definitions and stays independent of the solver
// code paths it is used to check.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "hfam/family.hpp"

namespace oracle {

using hfam::SetFamily;
using hfam::Word;

inline SetFamily pick(const SetFamily& family, std::uint64_t member_mask) {
    std::vector<Word> words;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if ((member_mask >> i) & 1) words.push_back(family[i]);
    }
    return SetFamily(family.ground(), std::move(words));
}

/// Largest intersecting subfamily by scanning all 2^m subfamilies.
inline std::size_t exhaustive_lstar(const SetFamily& family) {
    const std::size_t m = family.size();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const SetFamily sub = pick(family, mask);
        if (sub.size() > best && hfam::is_intersecting(sub)) best = sub.size();
    }
    return best;
}

/// Lexicographically least maximum intersecting subfamily, by full scan.
inline SetFamily exhaustive_lstar_witness(const SetFamily& family) {
    const std::size_t m = family.size();
    std::size_t best = 0;
    SetFamily witness(family.ground());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const SetFamily sub = pick(family, mask);
        if (!hfam::is_intersecting(sub)) continue;
        if (sub.size() > best ||
            (sub.size() == best && sub.size() > 0 && sub.members() < witness.members())) {
            best = sub.size();
            witness = sub;
        }
    }
    return witness;
}

struct TupleMax {
    unsigned long long sum = 0;
    unsigned long long product = 0;
};

/// Exact maxima of sum and product of sizes over all cross-intersecting
/// k-tuples of subfamilies, by complete tuple enumeration.
inline TupleMax naive_tuple_max(const SetFamily& family, int k) {
    const std::size_t m = family.size();
    const std::uint64_t count = std::uint64_t{1} << m;
    std::vector<SetFamily> subs;
    subs.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) subs.push_back(pick(family, mask));

    std::vector<std::uint64_t> index(static_cast<std::size_t>(k), 0);
    std::vector<SetFamily> tuple(static_cast<std::size_t>(k), subs[0]);
    TupleMax best;
    for (;;) {
        if (hfam::are_cross_intersecting(tuple)) {
            unsigned long long sum = 0;
            unsigned long long product = 1;
            for (const SetFamily& f : tuple) {
                sum += f.size();
                product *= f.size();
            }
            if (sum > best.sum) best.sum = sum;
            if (product > best.product) best.product = product;
        }
        std::size_t pos = 0;
        while (pos < index.size()) {
            if (++index[pos] < count) {
                tuple[pos] = subs[index[pos]];
                break;
            }
            index[pos] = 0;
            tuple[pos] = subs[0];
            ++pos;
        }
        if (pos == index.size()) break;
    }
    return best;
}

/// Maximum matching size by DP over vertex masks; adj[v] is a vertex bitmask.
inline int dp_max_matching(int n, const std::vector<std::uint64_t>& adj) {
    std::vector<int> memo(std::size_t{1} << n, 0);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const int v = std::countr_zero(mask);
        int best = memo[mask & (mask - 1)];  // leave v unmatched
        std::uint64_t partners = mask & adj[v];
        while (partners != 0) {
            const std::uint64_t low = partners & (~partners + 1);
            const int u = std::countr_zero(low);
            best = std::max(best, 1 + memo[mask & ~(std::uint64_t{1} << v) &
                                           ~(std::uint64_t{1} << u)]);
            partners ^= low;
        }
        memo[mask] = best;
    }
    return memo[(std::uint64_t{1} << n) - 1];
}

/// Number of antichains of 2^[n] by filtering every subfamily.
inline std::size_t antichain_count_bruteforce(int n) {
    const int universe = 1 << n;
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe); ++mask) {
        bool antichain = true;
        for (int a = 0; a < universe && antichain; ++a) {
            if (((mask >> a) & 1) == 0) continue;
            for (int b = 0; b < universe && antichain; ++b) {
                if (a == b || ((mask >> b) & 1) == 0) continue;
                if (hfam::subset_of(static_cast<Word>(a), static_cast<Word>(b))) antichain = false;
            }
        }
        if (antichain) ++count;
    }
    return count;
}

/// Random subfamily of 2^[n]; densify > 0 thins the family by AND-ing masks.
inline SetFamily random_family(std::mt19937_64& rng, int n, int densify = 0) {
    const int universe = 1 << n;
    std::uint64_t mask = rng();
    for (int d = 0; d < densify; ++d) mask &= rng();
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    std::vector<Word> words;
    for (int w = 0; w < universe; ++w) {
        if ((mask >> w) & 1) words.push_back(static_cast<Word>(w));
    }
    return SetFamily(hfam::GroundSet(n), std::move(words));
}

}  // namespace oracle
