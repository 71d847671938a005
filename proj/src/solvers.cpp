#include "hfam/solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "hfam/matching.hpp"

namespace hfam {

namespace detail {

std::vector<std::uint64_t> disjointness_masks(const SetFamily& family) {
    const auto& ms = family.members();
    if (ms.size() > 64) throw budget_error("member-mask machinery is limited to 64 members");
    std::vector<std::uint64_t> disjoint(ms.size(), 0);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = 0; j < ms.size(); ++j) {
            if ((ms[i] & ms[j]) == 0) disjoint[i] |= std::uint64_t{1} << j;
        }
    }
    return disjoint;
}

SetFamily subfamily(const SetFamily& family, std::uint64_t member_mask) {
    std::vector<Word> words;
    words.reserve(static_cast<std::size_t>(std::popcount(member_mask)));
    while (member_mask != 0) {
        const std::uint64_t low = member_mask & (~member_mask + 1);
        words.push_back(family[static_cast<std::size_t>(std::countr_zero(low))]);
        member_mask ^= low;
    }
    return SetFamily(family.ground(), std::move(words));
}

bool family_mask_lex_less(std::uint64_t a, std::uint64_t b) noexcept {
    while (a != 0 && b != 0) {
        const std::uint64_t la = a & (~a + 1);
        const std::uint64_t lb = b & (~b + 1);
        if (la != lb) return la < lb;
        a ^= la;
        b ^= lb;
    }
    return a == 0 && b != 0;
}

int kernel_count(const std::vector<std::uint64_t>& disjoint, std::uint64_t member_mask) noexcept {
    int count = 0;
    std::uint64_t rest = member_mask;
    while (rest != 0) {
        const std::uint64_t low = rest & (~rest + 1);
        if ((disjoint[static_cast<std::size_t>(std::countr_zero(low))] & member_mask) == 0) ++count;
        rest ^= low;
    }
    return count;
}

LargestIntersecting largest_intersecting_scan(const SetFamily& family) {
    const std::size_t m = family.size();
    const auto disjoint = disjointness_masks(family);

    // A selection is intersecting iff its top member meets all of it and the
    // rest was already intersecting, so one upward pass settles every mask.
    std::vector<bool> good(std::size_t{1} << m, false);
    good[0] = true;
    int best = 0;
    std::uint64_t best_mask = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
        const int top = 63 - std::countl_zero(s);
        if (!good[s ^ (std::uint64_t{1} << top)]) continue;
        if ((disjoint[top] & s) != 0) continue;
        good[s] = true;
        const int size = std::popcount(s);
        if (size > best || (size == best && family_mask_lex_less(s, best_mask))) {
            best = size;
            best_mask = s;
        }
    }
    return {static_cast<std::size_t>(best), subfamily(family, best_mask)};
}

namespace {

// Max clique in the intersection graph of the non-empty members, with greedy
// colour-class upper bounds. Vertices keep the canonical member order, so
// masks over them compare like member lists.
class MaxCliqueSolver {
public:
    explicit MaxCliqueSolver(const SetFamily& family) : ground_(family.ground()) {
        for (Word w : family) {
            if (w != 0) verts_.push_back(w);
        }
        m_ = static_cast<int>(verts_.size());
        words_ = (m_ + 63) / 64;
        adj_.assign(static_cast<std::size_t>(m_) * std::max(words_, 1), 0);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < m_; ++j) {
                if (i != j && (verts_[i] & verts_[j]) != 0) {
                    row(i)[j >> 6] |= std::uint64_t{1} << (j & 63);
                }
            }
        }
    }

    std::size_t best_size() {
        best_ = 0;
        auto cand = all_vertices();
        expand(cand, 0);
        return best_;
    }

    std::vector<Word> lex_least_clique(std::size_t target) {
        std::vector<Word> chosen;
        if (target == 0) return chosen;
        auto cand = all_vertices();
        int need = static_cast<int>(target);
        std::vector<std::uint64_t> child(words_);
        for (int v = 0; v < m_ && need > 0; ++v) {
            if (!test(cand, v)) continue;
            intersect_row(cand, v, child);
            if (exists(child, need - 1)) {
                chosen.push_back(verts_[v]);
                cand = child;
                --need;
            } else {
                clear(cand, v);
            }
        }
        if (need != 0) throw defect_error("failed to rebuild a maximum intersecting subfamily");
        return chosen;
    }

private:
    std::uint64_t* row(int v) { return adj_.data() + static_cast<std::size_t>(v) * words_; }

    std::vector<std::uint64_t> all_vertices() const {
        std::vector<std::uint64_t> cand(words_, 0);
        for (int v = 0; v < m_; ++v) cand[v >> 6] |= std::uint64_t{1} << (v & 63);
        return cand;
    }

    static bool test(const std::vector<std::uint64_t>& bits, int v) {
        return (bits[v >> 6] >> (v & 63)) & 1;
    }
    static void clear(std::vector<std::uint64_t>& bits, int v) {
        bits[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void intersect_row(const std::vector<std::uint64_t>& cand, int v,
                       std::vector<std::uint64_t>& out) {
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) out[w] = cand[w] & r[w];
    }

    int first_vertex(const std::vector<std::uint64_t>& bits) const {
        for (int w = 0; w < words_; ++w) {
            if (bits[w] != 0) return (w << 6) + std::countr_zero(bits[w]);
        }
        return -1;
    }

    // Greedy colouring of the candidate set; vertices come back ordered by
    // ascending colour, and colour number bounds any clique inside.
    void colour_sort(const std::vector<std::uint64_t>& cand, std::vector<int>& order,
                     std::vector<int>& bound) {
        std::vector<std::uint64_t> uncoloured = cand;
        std::vector<std::uint64_t> avail(words_);
        int colour = 0;
        while (first_vertex(uncoloured) >= 0) {
            ++colour;
            avail = uncoloured;
            for (int v = first_vertex(avail); v >= 0; v = first_vertex(avail)) {
                order.push_back(v);
                bound.push_back(colour);
                clear(uncoloured, v);
                clear(avail, v);
                const std::uint64_t* r = row(v);
                for (int w = 0; w < words_; ++w) avail[w] &= ~r[w];
            }
        }
    }

    void expand(std::vector<std::uint64_t>& cand, int clique_size) {
        std::vector<int> order, bound;
        colour_sort(cand, order, bound);
        std::vector<std::uint64_t> child(words_);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (clique_size + bound[idx] <= static_cast<int>(best_)) return;
            const int v = order[idx];
            intersect_row(cand, v, child);
            if (first_vertex(child) >= 0) {
                std::vector<std::uint64_t> branch = child;
                expand(branch, clique_size + 1);
            } else if (clique_size + 1 > static_cast<int>(best_)) {
                best_ = static_cast<std::size_t>(clique_size) + 1;
            }
            clear(cand, v);
        }
    }

    bool exists(std::vector<std::uint64_t> cand, int need) {
        if (need <= 0) return true;
        std::vector<int> order, bound;
        colour_sort(cand, order, bound);
        std::vector<std::uint64_t> child(words_);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (bound[idx] < need) return false;
            const int v = order[idx];
            intersect_row(cand, v, child);
            if (exists(child, need - 1)) return true;
            clear(cand, v);
        }
        return false;
    }

    GroundSet ground_;
    std::vector<Word> verts_;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_;
    std::size_t best_ = 0;
};

}  // namespace

LargestIntersecting largest_intersecting_branch_bound(const SetFamily& family) {
    if (family.size() > kCliqueMatrixLimit) {
        throw budget_error("family too large for exact intersecting search");
    }
    MaxCliqueSolver solver(family);
    const std::size_t best = solver.best_size();
    return {best, SetFamily(family.ground(), solver.lex_least_clique(best))};
}

}  // namespace detail

LargestIntersecting largest_intersecting(const SetFamily& family) {
    if (family.size() <= kSubsetScanLimit) return detail::largest_intersecting_scan(family);
    return detail::largest_intersecting_branch_bound(family);
}

BestStar best_star(const SetFamily& family) {
    const Word support = union_support(family);
    if (support == 0) return {};
    BestStar out;
    for (int x = 1; x <= family.n(); ++x) {
        const Word bit = Word{1} << (x - 1);
        if ((support & bit) == 0) continue;
        std::size_t count = 0;
        for (Word m : family) {
            if ((m & bit) != 0) ++count;
        }
        if (!out.center.has_value() || count > out.size) {
            out.center = x;
            out.size = count;
        }
    }
    return out;
}

StarProperty has_star_property(const SetFamily& family) {
    if (union_support(family) == 0) return {true, std::nullopt};
    const BestStar bs = best_star(family);
    if (bs.size == largest_intersecting(family).size) return {true, bs.center};
    return {false, std::nullopt};
}

Pairing berge_pairing(const SetFamily& hereditary) {
    if (!is_hereditary(hereditary)) {
        throw std::invalid_argument("berge_pairing needs a hereditary family");
    }
    Pairing out;
    if (hereditary.empty()) return out;
    out.leftover_empty = hereditary.size() % 2 == 1;

    std::vector<Word> verts;
    verts.reserve(hereditary.size());
    for (Word m : hereditary) {
        if (out.leftover_empty && m == 0) continue;  // odd size: the empty set sits out
        verts.push_back(m);
    }
    const auto mate = detail::max_matching(
        static_cast<int>(verts.size()),
        [&verts](int a, int b) { return (verts[a] & verts[b]) == 0; });
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (mate[i] < 0) {
            throw defect_error("no disjoint-pair decomposition found for a hereditary family");
        }
        if (static_cast<std::size_t>(mate[i]) > i) {
            out.pairs.emplace_back(verts[i], verts[static_cast<std::size_t>(mate[i])]);
        }
    }
    return out;
}

Rational beta(const SetFamily& family, std::size_t member_budget) {
    if (family.empty()) throw std::invalid_argument("beta is undefined for the empty family");
    const std::size_t m = family.size();
    if (m > std::min(member_budget, kSubsetScanLimit)) {
        throw budget_error("beta subset scan budget exceeded (" + std::to_string(m) + " members)");
    }
    const long long l = static_cast<long long>(largest_intersecting(family).size);
    Rational best(l, static_cast<long long>(m));
    const auto disjoint = detail::disjointness_masks(family);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
        const int kernel = detail::kernel_count(disjoint, s);
        const int residue = std::popcount(s) - kernel;
        if (residue == 0) continue;
        const Rational c(l - kernel, residue);
        if (c < best) best = c;
    }
    return best;
}

CrossSumOptimum max_cross_sum(const SetFamily& family, int k, std::size_t member_budget) {
    if (k < 2) throw std::invalid_argument("cross-intersecting optimum needs k >= 2");
    const std::size_t m = family.size();
    if (m > std::min(member_budget, kSubsetScanLimit)) {
        throw budget_error("cross-sum subset scan budget exceeded (" + std::to_string(m) +
                           " members)");
    }
    const auto disjoint = detail::disjointness_masks(family);
    unsigned long long best = 0;
    std::uint64_t best_mask = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
        const int kernel = detail::kernel_count(disjoint, s);
        const unsigned long long value =
            static_cast<unsigned long long>(std::popcount(s)) +
            static_cast<unsigned long long>(k - 1) * static_cast<unsigned long long>(kernel);
        if (value > best || (value == best && detail::family_mask_lex_less(s, best_mask))) {
            best = value;
            best_mask = s;
        }
    }
    std::uint64_t kernel_mask = 0;
    for (std::uint64_t rest = best_mask; rest != 0;) {
        const std::uint64_t low = rest & (~rest + 1);
        if ((disjoint[static_cast<std::size_t>(std::countr_zero(low))] & best_mask) == 0) {
            kernel_mask |= low;
        }
        rest ^= low;
    }
    return CrossSumOptimum{best, k, detail::subfamily(family, best_mask),
                           KernelSplit{detail::subfamily(family, kernel_mask),
                                       detail::subfamily(family, best_mask ^ kernel_mask)}};
}

unsigned long long naive_max_cross_sum(const SetFamily& family, int k,
                                       unsigned long long tuple_budget) {
    if (k < 2) throw std::invalid_argument("cross-intersecting optimum needs k >= 2");
    const std::size_t m = family.size();
    const unsigned long long bits = static_cast<unsigned long long>(m) * static_cast<unsigned>(k);
    if (bits >= 63 || (1ull << bits) > tuple_budget) {
        throw budget_error("tuple enumeration budget exceeded");
    }

    const std::uint64_t count = std::uint64_t{1} << m;
    std::vector<SetFamily> subs;
    subs.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t s = 0; s < count; ++s) subs.push_back(detail::subfamily(family, s));

    std::vector<std::uint64_t> index(static_cast<std::size_t>(k), 0);
    std::vector<SetFamily> tuple(static_cast<std::size_t>(k), subs[0]);
    unsigned long long best = 0;
    for (;;) {
        if (are_cross_intersecting(tuple)) {
            unsigned long long sum = 0;
            for (const SetFamily& f : tuple) sum += f.size();
            best = std::max(best, sum);
        }
        std::size_t pos = 0;
        while (pos < index.size()) {
            if (++index[pos] < count) {
                tuple[pos] = subs[static_cast<std::size_t>(index[pos])];
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

CrossProductOptimum max_cross_product(const SetFamily& family, int k, std::size_t member_budget) {
    if (k < 2) throw std::invalid_argument("cross-intersecting optimum needs k >= 2");
    const std::size_t m = family.size();

    if (k == 2 && m <= kNaiveProductLimit) {
        // Exact: for a fixed left family S the best partner is the full set
        // of members meeting all of S, so scanning left families suffices.
        const auto disjoint = detail::disjointness_masks(family);
        const std::uint64_t all = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
        unsigned long long best = 0;
        std::uint64_t best_left = 0;
        std::uint64_t best_right = 0;
        for (std::uint64_t s = 1; s <= all && all != 0; ++s) {
            std::uint64_t compat = all;
            for (std::uint64_t rest = s; rest != 0;) {
                const std::uint64_t low = rest & (~rest + 1);
                compat &= all & ~disjoint[static_cast<std::size_t>(std::countr_zero(low))];
                rest ^= low;
            }
            const unsigned long long value =
                static_cast<unsigned long long>(std::popcount(s)) *
                static_cast<unsigned long long>(std::popcount(compat));
            if (value > best ||
                (value == best && best != 0 && detail::family_mask_lex_less(s, best_left))) {
                best = value;
                best_left = s;
                best_right = compat;
            }
        }
        CrossProductOptimum out;
        out.exact = true;
        out.k = 2;
        out.value = best;
        out.lower = best;
        out.upper = Rational(static_cast<long long>(best));
        if (best == 0) {
            out.pair_witness = {SetFamily(family.ground()), SetFamily(family.ground())};
        } else {
            out.pair_witness = {detail::subfamily(family, best_left),
                                detail::subfamily(family, best_right)};
        }
        return out;
    }

    if (m > std::min(member_budget, kSubsetScanLimit)) {
        throw budget_error("cross-product budget exceeded (" + std::to_string(m) + " members)");
    }
    const LargestIntersecting li = largest_intersecting(family);
    const CrossSumOptimum sum = max_cross_sum(family, k, member_budget);
    const auto lower = checked_pow(static_cast<unsigned long long>(li.size),
                                   static_cast<unsigned>(k));
    if (!lower.has_value()) throw budget_error("product bound overflows 64 bits");

    CrossProductOptimum out;
    out.k = k;
    out.lower = *lower;
    out.value = *lower;
    if (sum.value == static_cast<unsigned long long>(k) * li.size) {
        // Certificate: by the mean inequality no tuple beats (sum/k)^k, and k
        // copies of the witness attain exactly that.
        if (*lower > static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
            throw budget_error("product bound overflows 64 bits");
        }
        out.exact = true;
        out.upper = Rational(static_cast<long long>(*lower));
        out.uniform_witness = li.witness;
    } else {
        out.exact = false;
        const auto up = checked_pow(Rational(static_cast<long long>(sum.value), k),
                                    static_cast<unsigned>(k));
        if (!up.has_value()) throw budget_error("product bound overflows 64 bits");
        out.upper = *up;
        out.uniform_witness = li.witness;
    }
    return out;
}

}  // namespace hfam
