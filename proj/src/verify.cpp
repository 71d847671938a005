#include "hfam/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <functional>
#include <istream>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "hfam/family_io.hpp"

namespace hfam {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
        case Verdict::defect: return "defect";
    }
    return "unknown";
}

namespace {

CheckResult base_result(std::string name, const SetFamily& family, CheckParams params = {}) {
    CheckResult r;
    r.check = std::move(name);
    r.n = family.n();
    r.family = family_to_compact(family);
    r.family_words = family.members();
    r.params = params;
    return r;
}

void put(CheckResult& r, const char* key, unsigned long long value) {
    r.values[key] = std::to_string(value);
}
void put(CheckResult& r, const char* key, std::size_t value) { r.values[key] = std::to_string(value); }
void put(CheckResult& r, const char* key, const std::string& value) { r.values[key] = value; }

void require_hereditary(const SetFamily& family, const char* who) {
    if (!is_hereditary(family)) {
        throw std::invalid_argument(std::string(who) + " needs a hereditary family");
    }
}

std::size_t scan_cap(const Budgets& budgets) {
    return std::min(budgets.subset_members, kSubsetScanLimit);
}

bool is_empty_plus_singletons(const SetFamily& family) {
    if (family.size() != static_cast<std::size_t>(family.n()) + 1) return false;
    if (family.empty() || family[0] != 0) return false;
    for (int x = 1; x <= family.n(); ++x) {
        if (!family.contains(Word{1} << (x - 1))) return false;
    }
    return true;
}

Word shared_base_element(const SetFamily& family) {
    const SetFamily bases = bases_of(family);
    if (bases.empty()) return 0;
    Word common = full_word(family.n());
    for (Word b : bases) common &= b;
    return common;
}

bool pairing_valid(const SetFamily& family, const Pairing& pairing, std::string& reason) {
    std::vector<Word> covered;
    covered.reserve(family.size());
    for (const auto& [a, b] : pairing.pairs) {
        if (a == b) {
            reason = "a pair repeats one set";
            return false;
        }
        if ((a & b) != 0) {
            reason = "a pair is not disjoint";
            return false;
        }
        covered.push_back(a);
        covered.push_back(b);
    }
    if (pairing.leftover_empty) covered.push_back(0);
    std::sort(covered.begin(), covered.end());
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
        reason = "a set is covered twice";
        return false;
    }
    if (covered != family.members()) {
        reason = "pairs do not cover the family exactly";
        return false;
    }
    if (pairing.leftover_empty != (family.size() % 2 == 1)) {
        reason = "leftover flag inconsistent with the family size parity";
        return false;
    }
    return true;
}

}  // namespace

CheckResult check_complemma(const SetFamily& a, int i, int j) {
    CheckParams params;
    params.i = i;
    params.j = j;
    CheckResult r = base_result("complemma", a, params);
    const GroundSet ground = a.ground();
    const SetFamily b = compress(a, i, j);
    const SetFamily a_kernel = split_kernel(a).kernel;
    const SetFamily b_kernel = split_kernel(b).kernel;

    auto report_defect = [&](const char* clause, Word s) {
        r.verdict = Verdict::defect;
        r.witness = nlohmann::ordered_json{{"clause", clause},
                                           {"set", set_to_string(s)},
                                           {"compressed_family", family_to_compact(b)}};
    };

    for (Word s : a_kernel) {
        if (!b_kernel.contains(delta(ground, s, i, j))) {
            report_defect("i", s);
            return r;
        }
    }
    for (Word s : a_kernel) {
        if (!b_kernel.contains(s) && a_kernel.contains(delta(ground, s, i, j))) {
            report_defect("ii", s);
            return r;
        }
    }
    for (Word s : b_kernel) {
        if (!b_kernel.contains(delta(ground, s, i, j))) {
            report_defect("iii", s);
            return r;
        }
    }
    if (a_kernel.size() > b_kernel.size()) {
        report_defect("iv", 0);
        return r;
    }
    put(r, "a_kernel", a_kernel.size());
    put(r, "b_kernel", b_kernel.size());
    return r;
}

CheckResult check_berge(const SetFamily& hereditary) {
    require_hereditary(hereditary, "check_berge");
    CheckResult r = base_result("berge", hereditary);
    try {
        const Pairing pairing = berge_pairing(hereditary);
        std::string reason;
        if (!pairing_valid(hereditary, pairing, reason)) {
            r.verdict = Verdict::defect;
            r.witness = nlohmann::ordered_json{{"reason", reason}};
            return r;
        }
        put(r, "pairs", pairing.pairs.size());
        put(r, "leftover_empty", std::string(pairing.leftover_empty ? "true" : "false"));
    } catch (const defect_error& e) {
        r.verdict = Verdict::defect;
        r.witness = nlohmann::ordered_json{{"reason", e.what()}};
    }
    return r;
}

CheckResult check_bergecor(const SetFamily& hereditary) {
    require_hereditary(hereditary, "check_bergecor");
    CheckResult r = base_result("bergecor", hereditary);
    const LargestIntersecting li = largest_intersecting(hereditary);
    put(r, "l", li.size);
    put(r, "size", hereditary.size());
    if (2 * li.size > hereditary.size()) {
        r.verdict = Verdict::defect;
        r.witness = nlohmann::ordered_json{{"intersecting_family", family_to_compact(li.witness)}};
    }
    return r;
}

CheckResult check_bergeprop(const SetFamily& hereditary) {
    require_hereditary(hereditary, "check_bergeprop");
    CheckResult r = base_result("bergeprop", hereditary);
    const Word shared = shared_base_element(hereditary);
    put(r, "shared", set_to_string(shared));
    for (int x : elements_of(shared)) {
        const std::size_t star_size = star(hereditary, x).size();
        if (2 * star_size != hereditary.size()) {
            r.verdict = Verdict::defect;
            r.witness = nlohmann::ordered_json{{"x", x},
                                               {"star_size", std::to_string(star_size)},
                                               {"size", std::to_string(hereditary.size())}};
            return r;
        }
    }
    return r;
}

CheckResult check_snevily(const SetFamily& hereditary, int x) {
    require_hereditary(hereditary, "check_snevily");
    if (!is_compressed_wrt(hereditary, x)) {
        throw std::invalid_argument("check_snevily needs a family compressed w.r.t. x");
    }
    CheckParams params;
    params.x = x;
    CheckResult r = base_result("snevily", hereditary, params);
    const std::size_t star_size = star(hereditary, x).size();
    const LargestIntersecting li = largest_intersecting(hereditary);
    put(r, "star_size", star_size);
    put(r, "l", li.size);
    if (star_size != li.size) {
        r.verdict = Verdict::defect;
        r.witness = nlohmann::ordered_json{{"larger_family", family_to_compact(li.witness)}};
    }
    return r;
}

CheckResult check_chvatal(const SetFamily& hereditary) {
    CheckResult r = base_result("chvatal", hereditary);
    const LargestIntersecting li = largest_intersecting(hereditary);
    const BestStar bs = best_star(hereditary);
    const StarProperty sp = has_star_property(hereditary);
    put(r, "hereditary", std::string(is_hereditary(hereditary) ? "true" : "false"));
    put(r, "l", li.size);
    put(r, "best_star_size", bs.size);
    put(r, "best_x", bs.center ? std::to_string(*bs.center) : std::string("none"));
    if (!sp.holds) {
        r.verdict = Verdict::fail;
        r.witness = nlohmann::ordered_json{
            {"l", std::to_string(li.size)},
            {"best_star_size", std::to_string(bs.size)},
            {"largest_intersecting", family_to_compact(li.witness)}};
    }
    return r;
}

CheckResult check_result2(const SetFamily& hereditary, int k, const Budgets& budgets) {
    require_hereditary(hereditary, "check_result2");
    if (k < 2) throw std::invalid_argument("check_result2 needs k >= 2");
    CheckParams params;
    params.k = k;
    CheckResult r = base_result("result2", hereditary, params);
    const std::size_t m = hereditary.size();
    if (m > scan_cap(budgets)) {
        r.verdict = Verdict::skipped;
        put(r, "reason", std::string("subset budget exceeded"));
        return r;
    }

    const CrossSumOptimum sum = max_cross_sum(hereditary, k, budgets.subset_members);
    put(r, "sum_max", sum.value);
    if (2 * sum.value > static_cast<unsigned long long>(k) * m) {
        r.verdict = Verdict::defect;
        r.witness = nlohmann::ordered_json{{"bound", "sum"},
                                           {"union_family", family_to_compact(sum.union_family)}};
        return r;
    }

    const Word shared = shared_base_element(hereditary);
    put(r, "shared", set_to_string(shared));
    if (shared != 0 && 2 * sum.value != static_cast<unsigned long long>(k) * m) {
        r.verdict = Verdict::defect;
        r.witness = nlohmann::ordered_json{{"bound", "sum attainment"}};
        return r;
    }

    const LargestIntersecting li = largest_intersecting(hereditary);
    CrossProductOptimum product;
    try {
        product = max_cross_product(hereditary, k, budgets.subset_members);
    } catch (const budget_error& e) {
        put(r, "product_note", std::string(e.what()));
        return r;
    }
    const std::string mode = product.exact
                                 ? (product.pair_witness ? "naive" : "certificate")
                                 : "interval";
    put(r, "product_mode", mode);
    if (product.exact) {
        put(r, "product_max", product.value);
        // product <= (|H|/2)^k, compared without large powers
        const bool bounded = mode == "naive"
                                 ? 4 * product.value <= static_cast<unsigned long long>(m) * m
                                 : 2 * li.size <= m;
        if (!bounded) {
            r.verdict = Verdict::defect;
            r.witness = nlohmann::ordered_json{{"bound", "product"}};
            return r;
        }
        if (shared != 0) {
            const bool attained = mode == "naive"
                                      ? 4 * product.value == static_cast<unsigned long long>(m) * m
                                      : 2 * li.size == m;
            if (!attained) {
                r.verdict = Verdict::defect;
                r.witness = nlohmann::ordered_json{{"bound", "product attainment"}};
                return r;
            }
        }
    } else {
        put(r, "product_lower", product.lower);
        put(r, "product_upper", product.upper.str());
        // the interval's upper bound is (sum/k)^k, already covered by the
        // sum bound above
    }
    return r;
}

CheckResult check_mainthm2(const SetFamily& hereditary, int x, const Budgets& budgets,
                           std::uint64_t seed) {
    require_hereditary(hereditary, "check_mainthm2");
    if (!is_compressed_wrt(hereditary, x)) {
        throw std::invalid_argument("check_mainthm2 needs a family compressed w.r.t. x");
    }
    CheckParams params;
    params.x = x;
    CheckResult r = base_result("mainthm2", hereditary, params);
    const std::size_t m = hereditary.size();
    if (m > 64) {
        r.verdict = Verdict::skipped;
        put(r, "reason", std::string("member-mask budget exceeded"));
        return r;
    }

    const std::size_t star_size = star(hereditary, x).size();
    const long long weight = hereditary.n() + 1;
    const long long bound = weight * static_cast<long long>(star_size);
    const bool exhaustive = m <= 22;
    const bool target_family = is_empty_plus_singletons(hereditary);
    const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    const auto disjoint = detail::disjointness_masks(hereditary);

    std::size_t scanned = 0;
    std::size_t equality_cases = 0;
    auto scan_one = [&](std::uint64_t s) -> bool {
        ++scanned;
        const int kernel = detail::kernel_count(disjoint, s);
        const int residue = std::popcount(s) - kernel;
        const long long lhs = weight * kernel + residue;
        if (lhs > bound) {
            r.verdict = Verdict::defect;
            r.witness = nlohmann::ordered_json{
                {"subfamily", family_to_compact(detail::subfamily(hereditary, s))},
                {"kernel", std::to_string(kernel)},
                {"residue", std::to_string(residue)},
                {"star_size", std::to_string(star_size)}};
            return false;
        }
        if (lhs == bound && residue > 0) {
            ++equality_cases;
            if (!(target_family && s == all)) {
                r.verdict = Verdict::defect;
                r.witness = nlohmann::ordered_json{
                    {"reason", "undocumented equality case"},
                    {"subfamily", family_to_compact(detail::subfamily(hereditary, s))}};
                return false;
            }
        }
        return true;
    };

    if (exhaustive) {
        for (std::uint64_t s = 1; s <= all && all != 0; ++s) {
            if (!scan_one(s)) return r;
        }
        if (target_family && equality_cases == 0) {
            r.verdict = Verdict::defect;
            r.witness = nlohmann::ordered_json{{"reason", "expected equality case missing"}};
            return r;
        }
    } else {
        std::mt19937_64 rng(seed);
        for (std::size_t t = 0; t < budgets.samples; ++t) {
            const std::uint64_t s = rng() & all;
            if (s == 0) continue;
            if (!scan_one(s)) return r;
        }
        put(r, "partial", std::string("true"));
        put(r, "seed", std::to_string(seed));
        put(r, "samples", budgets.samples);
    }
    put(r, "star_size", star_size);
    put(r, "scanned", scanned);
    put(r, "equality_cases", equality_cases);
    return r;
}

CheckResult check_mainthm(const SetFamily& hereditary, int x, int k, const Budgets& budgets) {
    require_hereditary(hereditary, "check_mainthm");
    if (!is_compressed_wrt(hereditary, x)) {
        throw std::invalid_argument("check_mainthm needs a family compressed w.r.t. x");
    }
    if (k < hereditary.n() + 1) {
        throw std::invalid_argument("check_mainthm needs k >= n+1");
    }
    CheckParams params;
    params.x = x;
    params.k = k;
    CheckResult r = base_result("mainthm", hereditary, params);
    const std::size_t m = hereditary.size();
    if (m > scan_cap(budgets)) {
        r.verdict = Verdict::skipped;
        put(r, "reason", std::string("subset budget exceeded"));
        return r;
    }

    const std::size_t star_size = star(hereditary, x).size();
    const LargestIntersecting li = largest_intersecting(hereditary);
    const CrossSumOptimum sum = max_cross_sum(hereditary, k, budgets.subset_members);
    const unsigned long long expected = static_cast<unsigned long long>(k) * star_size;
    put(r, "sum_max", sum.value);
    put(r, "expected", expected);
    if (sum.value != expected) {
        r.verdict = Verdict::defect;
        r.witness = nlohmann::ordered_json{{"reason", "sum optimum differs from k|H<x>|"},
                                           {"union_family", family_to_compact(sum.union_family)}};
        return r;
    }
    if (li.size != star_size) {
        r.verdict = Verdict::defect;
        r.witness = nlohmann::ordered_json{{"reason", "star at x is not a largest intersecting subfamily"}};
        return r;
    }

    // Attainment audit: every optimal subfamily is either a largest
    // intersecting family or the whole-family exception at k = n+1.
    const auto disjoint = detail::disjointness_masks(hereditary);
    const std::uint64_t all = m == 0 ? 0 : (std::uint64_t{1} << m) - 1;
    const bool exceptional_family = is_empty_plus_singletons(hereditary);
    std::size_t attaining = 0;
    std::size_t attaining_l_type = 0;
    std::size_t attaining_exception = 0;
    for (std::uint64_t s = 1; s <= all && all != 0; ++s) {
        const int kernel = detail::kernel_count(disjoint, s);
        const int residue = std::popcount(s) - kernel;
        const unsigned long long value =
            static_cast<unsigned long long>(kernel) * k + static_cast<unsigned long long>(residue);
        if (value != expected) continue;
        ++attaining;
        if (residue == 0 && static_cast<std::size_t>(kernel) == li.size) {
            ++attaining_l_type;
        } else if (k == hereditary.n() + 1 && s == all && exceptional_family && kernel == 0) {
            ++attaining_exception;
        } else {
            r.verdict = Verdict::defect;
            r.witness = nlohmann::ordered_json{
                {"reason", "optimal configuration outside the proved characterization"},
                {"subfamily", family_to_compact(detail::subfamily(hereditary, s))}};
            return r;
        }
    }
    put(r, "attaining", attaining);
    put(r, "attaining_l_type", attaining_l_type);
    put(r, "attaining_exception", attaining_exception);

    CrossProductOptimum product;
    try {
        product = max_cross_product(hereditary, k, budgets.subset_members);
    } catch (const budget_error& e) {
        // the sum and star checks above already pin the certificate base
        put(r, "product_note", std::string(e.what()));
        return r;
    }
    if (!product.exact) {
        r.verdict = Verdict::defect;
        r.witness = nlohmann::ordered_json{{"reason", "product certificate did not apply"}};
        return r;
    }
    const auto star_power = checked_pow(static_cast<unsigned long long>(star_size),
                                        static_cast<unsigned>(k));
    if (star_power.has_value()) {
        put(r, "product_max", product.value);
        if (product.value != *star_power) {
            r.verdict = Verdict::defect;
            r.witness = nlohmann::ordered_json{{"reason", "product optimum differs from |H<x>|^k"}};
            return r;
        }
    } else {
        put(r, "product_note", std::string("|H<x>|^k overflows 64 bits; certificate compared by base"));
    }
    return r;
}

namespace {

void require_conjecture_domain(const SetFamily& hereditary, const char* who) {
    require_hereditary(hereditary, who);
    if (hereditary.empty() || (hereditary.size() == 1 && hereditary[0] == 0)) {
        throw std::invalid_argument(std::string(who) +
                                    " excludes the empty family and the empty-set-only family");
    }
}

nlohmann::ordered_json sum_witness(const CrossSumOptimum& sum) {
    return nlohmann::ordered_json{
        {"union_family", family_to_compact(sum.union_family)},
        {"kernel", family_to_compact(sum.split.kernel)},
        {"residue", family_to_compact(sum.split.residue)},
        {"assignment", "A_1 = union_family, A_2..A_k = kernel"}};
}

}  // namespace

CheckResult check_weaksum(const SetFamily& hereditary, int k, const Budgets& budgets) {
    require_conjecture_domain(hereditary, "check_weaksum");
    if (k < hereditary.n() + 1) throw std::invalid_argument("check_weaksum needs k >= n+1");
    CheckParams params;
    params.k = k;
    CheckResult r = base_result("weaksum", hereditary, params);
    if (hereditary.size() > scan_cap(budgets)) {
        r.verdict = Verdict::skipped;
        put(r, "reason", std::string("subset budget exceeded"));
        return r;
    }
    const BestStar bs = best_star(hereditary);
    const CrossSumOptimum sum = max_cross_sum(hereditary, k, budgets.subset_members);
    const unsigned long long conjectured = static_cast<unsigned long long>(k) * bs.size;
    put(r, "optimum", sum.value);
    put(r, "conjectured", conjectured);
    if (sum.value > conjectured) {
        r.verdict = Verdict::fail;
        r.witness = sum_witness(sum);
    } else if (sum.value < conjectured) {
        r.verdict = Verdict::defect;
        r.witness = nlohmann::ordered_json{{"reason", "optimizer below the attainable all-star sum"}};
    }
    return r;
}

CheckResult check_strongsum(const SetFamily& hereditary, int k, const Budgets& budgets) {
    require_conjecture_domain(hereditary, "check_strongsum");
    if (k < 2) throw std::invalid_argument("check_strongsum needs k >= 2");
    CheckParams params;
    params.k = k;
    CheckResult r = base_result("strongsum", hereditary, params);
    if (hereditary.size() > scan_cap(budgets)) {
        r.verdict = Verdict::skipped;
        put(r, "reason", std::string("subset budget exceeded"));
        return r;
    }
    const BestStar bs = best_star(hereditary);
    const CrossSumOptimum sum = max_cross_sum(hereditary, k, budgets.subset_members);
    const unsigned long long all_star = static_cast<unsigned long long>(k) * bs.size;
    const unsigned long long whole = hereditary.size();
    const unsigned long long conjectured = std::max(all_star, whole);
    put(r, "optimum", sum.value);
    put(r, "conjectured", conjectured);
    put(r, "threshold", Rational(static_cast<long long>(whole), static_cast<long long>(bs.size)).str());
    put(r, "branch", std::string(all_star == whole  ? "tie"
                                 : all_star > whole ? "all-star"
                                                    : "whole-family"));
    if (sum.value > conjectured) {
        r.verdict = Verdict::fail;
        r.witness = sum_witness(sum);
    } else if (sum.value < conjectured) {
        r.verdict = Verdict::defect;
        r.witness = nlohmann::ordered_json{{"reason", "optimizer below an attainable configuration"}};
    }
    return r;
}

CheckResult check_prodconj(const SetFamily& hereditary, int k, const Budgets& budgets) {
    require_conjecture_domain(hereditary, "check_prodconj");
    if (k < 2) throw std::invalid_argument("check_prodconj needs k >= 2");
    CheckParams params;
    params.k = k;
    CheckResult r = base_result("prodconj", hereditary, params);
    const std::size_t m = hereditary.size();
    const bool exact_pairs = k == 2 && m <= kNaiveProductLimit;
    if (!exact_pairs && m > scan_cap(budgets)) {
        r.verdict = Verdict::skipped;
        put(r, "reason", std::string("subset budget exceeded"));
        return r;
    }

    const BestStar bs = best_star(hereditary);
    const auto conjectured = checked_pow(static_cast<unsigned long long>(bs.size),
                                         static_cast<unsigned>(k));
    if (!conjectured.has_value()) {
        r.verdict = Verdict::skipped;
        put(r, "reason", std::string("|S|^k overflows 64 bits"));
        return r;
    }
    put(r, "conjectured", *conjectured);

    CrossProductOptimum product;
    try {
        product = max_cross_product(hereditary, k, budgets.subset_members);
    } catch (const budget_error& e) {
        r.verdict = Verdict::skipped;
        put(r, "reason", std::string(e.what()));
        return r;
    }
    if (product.exact) {
        put(r, "optimum", product.value);
        if (product.value > *conjectured) {
            r.verdict = Verdict::fail;
            if (product.pair_witness) {
                r.witness = nlohmann::ordered_json{
                    {"a1", family_to_compact(product.pair_witness->first)},
                    {"a2", family_to_compact(product.pair_witness->second)}};
            } else {
                r.witness = nlohmann::ordered_json{
                    {"uniform", family_to_compact(*product.uniform_witness)},
                    {"assignment", "A_1 = ... = A_k = uniform"}};
            }
        } else if (product.value < *conjectured) {
            r.verdict = Verdict::defect;
            r.witness = nlohmann::ordered_json{{"reason", "optimizer below the attainable all-star product"}};
        }
        return r;
    }

    put(r, "lower", product.lower);
    put(r, "upper", product.upper.str());
    if (product.lower > *conjectured) {
        // k copies of a larger intersecting family already beat the all-star
        // configuration, so the interval suffices for a counterexample.
        r.verdict = Verdict::fail;
        r.witness = nlohmann::ordered_json{
            {"uniform", family_to_compact(*product.uniform_witness)},
            {"assignment", "A_1 = ... = A_k = uniform"}};
    } else {
        r.verdict = Verdict::skipped;
        put(r, "reason", std::string("undecided in certificate mode"));
    }
    return r;
}

// ---------------------------------------------------------------------------
// registry / revalidation
// ---------------------------------------------------------------------------

namespace {

using Runner = std::function<CheckResult(const SetFamily&, const CheckParams&, const Budgets&,
                                         std::uint64_t)>;

int required(const std::optional<int>& p, const char* what) {
    if (!p.has_value()) throw std::invalid_argument(std::string("missing parameter ") + what);
    return *p;
}

const std::map<std::string, Runner>& registry() {
    static const std::map<std::string, Runner> table = {
        {"complemma",
         [](const SetFamily& f, const CheckParams& p, const Budgets&, std::uint64_t) {
             return check_complemma(f, required(p.i, "i"), required(p.j, "j"));
         }},
        {"berge", [](const SetFamily& f, const CheckParams&, const Budgets&, std::uint64_t) {
             return check_berge(f);
         }},
        {"bergecor", [](const SetFamily& f, const CheckParams&, const Budgets&, std::uint64_t) {
             return check_bergecor(f);
         }},
        {"bergeprop", [](const SetFamily& f, const CheckParams&, const Budgets&, std::uint64_t) {
             return check_bergeprop(f);
         }},
        {"snevily", [](const SetFamily& f, const CheckParams& p, const Budgets&, std::uint64_t) {
             return check_snevily(f, required(p.x, "x"));
         }},
        {"chvatal", [](const SetFamily& f, const CheckParams&, const Budgets&, std::uint64_t) {
             return check_chvatal(f);
         }},
        {"result2", [](const SetFamily& f, const CheckParams& p, const Budgets& b, std::uint64_t) {
             return check_result2(f, required(p.k, "k"), b);
         }},
        {"mainthm2",
         [](const SetFamily& f, const CheckParams& p, const Budgets& b, std::uint64_t seed) {
             return check_mainthm2(f, required(p.x, "x"), b, seed);
         }},
        {"mainthm", [](const SetFamily& f, const CheckParams& p, const Budgets& b, std::uint64_t) {
             return check_mainthm(f, required(p.x, "x"), required(p.k, "k"), b);
         }},
        {"weaksum", [](const SetFamily& f, const CheckParams& p, const Budgets& b, std::uint64_t) {
             return check_weaksum(f, required(p.k, "k"), b);
         }},
        {"strongsum", [](const SetFamily& f, const CheckParams& p, const Budgets& b, std::uint64_t) {
             return check_strongsum(f, required(p.k, "k"), b);
         }},
        {"prodconj", [](const SetFamily& f, const CheckParams& p, const Budgets& b, std::uint64_t) {
             return check_prodconj(f, required(p.k, "k"), b);
         }},
    };
    return table;
}

}  // namespace

bool is_known_check(const std::string& name) { return registry().count(name) != 0; }

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, runner] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool revalidate(const CheckResult& recorded, const Budgets& budgets) {
    if (recorded.check == "summary") return true;
    try {
        const auto it = registry().find(recorded.check);
        if (it == registry().end()) return false;
        const SetFamily family = family_from_compact(recorded.family);
        std::uint64_t seed = 0;
        if (recorded.values.contains("seed")) {
            seed = std::stoull(recorded.values.at("seed").get<std::string>());
        }
        Budgets b = budgets;
        if (recorded.values.contains("samples")) {
            b.samples = std::stoull(recorded.values.at("samples").get<std::string>());
        }
        const CheckResult fresh = it->second(family, recorded.params, b, seed);
        return fresh.verdict == recorded.verdict && fresh.values == recorded.values &&
               fresh.witness == recorded.witness;
    } catch (const std::exception&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// sweep configuration / execution
// ---------------------------------------------------------------------------

namespace {

std::string trim_copy(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

long long config_int(const std::string& value, int line, const char* key) {
    try {
        std::size_t pos = 0;
        const long long parsed = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw parse_error(std::string("invalid integer for '") + key + "'", line);
    }
}

void validate_sweep(const SweepConfig& cfg) {
    if (cfg.checks.empty()) throw parse_error("config selects no checks");
    for (const std::string& c : cfg.checks) {
        if (!is_known_check(c)) throw parse_error("unknown check '" + c + "'");
    }
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw parse_error("invalid n range");
    if (cfg.n_max > kEnumHardMaxGround) {
        throw parse_error("n beyond " + std::to_string(kEnumHardMaxGround) + " is out of reach");
    }
    if (cfg.n_max == kEnumHardMaxGround && !cfg.allow_n6) {
        throw parse_error("n=6 sweeps need allow_n6 = true");
    }
    for (int k : cfg.k) {
        if (k < 2) throw parse_error("k values must be >= 2");
    }
    if (cfg.filter.compressed_wrt.has_value() &&
        (*cfg.filter.compressed_wrt < 1 || *cfg.filter.compressed_wrt > cfg.n_min)) {
        throw parse_error("filter compressed-wrt element outside every swept ground set");
    }
    if (cfg.jobs < 1) throw parse_error("jobs must be >= 1");
}

std::vector<int> default_k(int n) {
    std::vector<int> ks{2, 3, n + 1, n + 2};
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

SetFamily family_over(int n, std::uint64_t member_mask) {
    std::vector<Word> words;
    while (member_mask != 0) {
        const std::uint64_t low = member_mask & (~member_mask + 1);
        words.push_back(static_cast<Word>(std::countr_zero(low)));
        member_mask ^= low;
    }
    return SetFamily(GroundSet(n), std::move(words));
}

void add_complemma_tasks(std::vector<std::function<CheckResult()>>& tasks, int n,
                         const SweepConfig& cfg) {
    const int universe = 1 << n;
    if (n <= 3) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe); ++mask) {
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    tasks.push_back([n, mask, i, j] {
                        return check_complemma(family_over(n, mask), i, j);
                    });
                }
            }
        }
        return;
    }
    std::mt19937_64 rng(cfg.seed);
    const std::uint64_t all =
        universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
    for (std::size_t t = 0; t < cfg.budgets.samples; ++t) {
        std::uint64_t mask = rng();
        for (std::size_t d = 0; d < t % 3; ++d) mask &= rng();  // vary density
        mask &= all;
        const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int j = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        if (j >= i) ++j;
        tasks.push_back([n, mask, i, j] { return check_complemma(family_over(n, mask), i, j); });
    }
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig cfg;
    std::string line;
    int line_no = 0;
    bool have_n = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim_copy(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw parse_error("expected key = value", line_no);
        const std::string key = trim_copy(line.substr(0, eq));
        const std::string value = trim_copy(line.substr(eq + 1));

        if (key == "checks") {
            std::stringstream items(value);
            std::string tok;
            while (std::getline(items, tok, ',')) {
                tok = trim_copy(tok);
                if (tok.empty()) continue;
                if (!is_known_check(tok)) throw parse_error("unknown check '" + tok + "'", line_no);
                cfg.checks.push_back(tok);
            }
        } else if (key == "n") {
            const auto dots = value.find("..");
            if (dots == std::string::npos) {
                cfg.n_min = cfg.n_max = static_cast<int>(config_int(value, line_no, "n"));
            } else {
                cfg.n_min = static_cast<int>(config_int(value.substr(0, dots), line_no, "n"));
                cfg.n_max = static_cast<int>(config_int(value.substr(dots + 2), line_no, "n"));
            }
            have_n = true;
        } else if (key == "k") {
            std::stringstream items(value);
            std::string tok;
            while (std::getline(items, tok, ',')) {
                tok = trim_copy(tok);
                if (tok.empty()) continue;
                cfg.k.push_back(static_cast<int>(config_int(tok, line_no, "k")));
            }
        } else if (key == "filter") {
            try {
                cfg.filter = FamilyFilter::parse(value);
            } catch (const parse_error& e) {
                throw parse_error(e.what(), line_no);
            }
        } else if (key == "budget_subsets") {
            cfg.budgets.subset_members =
                static_cast<std::size_t>(config_int(value, line_no, "budget_subsets"));
        } else if (key == "budget_tuples") {
            cfg.budgets.tuples =
                static_cast<unsigned long long>(config_int(value, line_no, "budget_tuples"));
        } else if (key == "samples") {
            cfg.budgets.samples = static_cast<std::size_t>(config_int(value, line_no, "samples"));
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(config_int(value, line_no, "seed"));
        } else if (key == "jobs") {
            cfg.jobs = static_cast<int>(config_int(value, line_no, "jobs"));
        } else if (key == "allow_n6") {
            if (value == "true" || value == "1") {
                cfg.allow_n6 = true;
            } else if (value == "false" || value == "0") {
                cfg.allow_n6 = false;
            } else {
                throw parse_error("allow_n6 must be true or false", line_no);
            }
        } else {
            throw parse_error("unknown key '" + key + "'", line_no);
        }
    }
    if (!have_n) throw parse_error("config is missing n");
    validate_sweep(cfg);
    return cfg;
}

SweepConfig parse_sweep_config_text(const std::string& text) {
    std::istringstream in(text);
    return parse_sweep_config(in);
}

SweepCounts tally(const std::vector<CheckResult>& results) {
    SweepCounts counts;
    for (const CheckResult& r : results) {
        if (r.check == "summary") continue;
        switch (r.verdict) {
            case Verdict::pass: ++counts.pass; break;
            case Verdict::fail: ++counts.fail; break;
            case Verdict::skipped: ++counts.skipped; break;
            case Verdict::defect: ++counts.defect; break;
        }
    }
    return counts;
}

std::vector<CheckResult> run_sweep(const SweepConfig& cfg) {
    validate_sweep(cfg);

    std::vector<std::function<CheckResult()>> tasks;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        const bool need_families =
            std::any_of(cfg.checks.begin(), cfg.checks.end(),
                        [](const std::string& c) { return c != "complemma"; });
        std::vector<SetFamily> families;
        if (need_families) families = all_hereditary(n, cfg.filter, cfg.allow_n6);
        const std::vector<int> ks = cfg.k.empty() ? default_k(n) : cfg.k;
        const Budgets budgets = cfg.budgets;
        const std::uint64_t seed = cfg.seed;

        for (const std::string& check : cfg.checks) {
            if (check == "complemma") {
                add_complemma_tasks(tasks, n, cfg);
                continue;
            }
            for (const SetFamily& h : families) {
                if (check == "berge") {
                    tasks.push_back([h] { return check_berge(h); });
                } else if (check == "bergecor") {
                    tasks.push_back([h] { return check_bergecor(h); });
                } else if (check == "bergeprop") {
                    tasks.push_back([h] { return check_bergeprop(h); });
                } else if (check == "chvatal") {
                    tasks.push_back([h] { return check_chvatal(h); });
                } else if (check == "snevily" || check == "mainthm2" || check == "mainthm") {
                    for (int x = 1; x <= n; ++x) {
                        if (!is_compressed_wrt(h, x)) continue;
                        if (check == "snevily") {
                            tasks.push_back([h, x] { return check_snevily(h, x); });
                        } else if (check == "mainthm2") {
                            tasks.push_back(
                                [h, x, budgets, seed] { return check_mainthm2(h, x, budgets, seed); });
                        } else {
                            for (int k : ks) {
                                if (k < n + 1) continue;
                                tasks.push_back(
                                    [h, x, k, budgets] { return check_mainthm(h, x, k, budgets); });
                            }
                        }
                    }
                } else if (check == "result2") {
                    if (h.empty()) continue;
                    for (int k : ks) {
                        tasks.push_back([h, k, budgets] { return check_result2(h, k, budgets); });
                    }
                } else {
                    // conjecture sweeps exclude the empty and {[]} families
                    if (h.empty() || (h.size() == 1 && h[0] == 0)) continue;
                    for (int k : ks) {
                        if (check == "weaksum") {
                            if (k < n + 1) continue;
                            tasks.push_back([h, k, budgets] { return check_weaksum(h, k, budgets); });
                        } else if (check == "strongsum") {
                            tasks.push_back([h, k, budgets] { return check_strongsum(h, k, budgets); });
                        } else if (check == "prodconj") {
                            tasks.push_back([h, k, budgets] { return check_prodconj(h, k, budgets); });
                        }
                    }
                }
            }
        }
    }

    std::vector<CheckResult> results(tasks.size());
    if (cfg.jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= tasks.size()) return;
                results[i] = tasks[i]();
            }
        };
        std::vector<std::thread> pool;
        const int threads = std::min<int>(cfg.jobs, static_cast<int>(tasks.size()));
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // One fixed order no matter how the tasks were scheduled.
    std::sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.check != b.check) return a.check < b.check;
        if (a.n != b.n) return a.n < b.n;
        if (a.family_words != b.family_words) return a.family_words < b.family_words;
        const auto params = [](const CheckParams& p) {
            return std::tuple(p.x.value_or(-1), p.k.value_or(-1), p.i.value_or(-1),
                              p.j.value_or(-1));
        };
        return params(a.params) < params(b.params);
    });

    const SweepCounts counts = tally(results);
    CheckResult summary;
    summary.check = "summary";
    summary.n = cfg.n_max;
    summary.verdict = counts.defect > 0  ? Verdict::defect
                      : counts.fail > 0 ? Verdict::fail
                                        : Verdict::pass;
    put(summary, "pass", counts.pass);
    put(summary, "fail", counts.fail);
    put(summary, "skipped", counts.skipped);
    put(summary, "defect", counts.defect);
    put(summary, "total", counts.total());
    results.push_back(std::move(summary));
    return results;
}

}  // namespace hfam
