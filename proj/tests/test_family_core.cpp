#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hfam/family.hpp"
#include "oracles.hpp"

using namespace hfam;

namespace {

SetFamily fam(int n, const std::vector<std::vector<int>>& sets) { return make_family(n, sets); }

}  // namespace

TEST_CASE("make_family builds canonical families") {
    const SetFamily f = fam(3, {{}, {1}, {2}, {3}});
    CHECK_EQ(f.size(), 4);
    CHECK_EQ(f.members(), std::vector<Word>{0, 1, 2, 4});

    CHECK_EQ(fam(2, {{1}, {1}}).size(), 1);  // duplicates collapse
    CHECK_EQ(fam(3, {{3, 1, 2}}).members(), std::vector<Word>{7});

    CHECK_THROWS_AS(fam(3, {{4}}), std::out_of_range);
    CHECK_THROWS_AS(fam(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(fam(21, {}), std::invalid_argument);
    CHECK_THROWS_AS(fam(3, {{0}}), std::out_of_range);
}

TEST_CASE("word helpers") {
    CHECK_EQ(full_word(3), 7);
    CHECK_EQ(set_size(Word{0b1011}), 3);
    CHECK(subset_of(0b001, 0b011));
    CHECK_FALSE(subset_of(0b100, 0b011));
    CHECK_EQ(elements_of(0b101), std::vector<int>{1, 3});
    CHECK_EQ(set_to_string(0b101), "{1,3}");
    CHECK_EQ(set_to_string(0), "{}");
}

TEST_CASE("hereditary_closure") {
    CHECK_EQ(hereditary_closure(fam(2, {{1, 2}})), fam(2, {{}, {1}, {2}, {1, 2}}));

    const SetFamily two = hereditary_closure(fam(3, {{1, 2}, {1, 3}}));
    CHECK_EQ(two.size(), 6);
    CHECK_EQ(two, fam(3, {{}, {1}, {2}, {3}, {1, 2}, {1, 3}}));

    CHECK_EQ(hereditary_closure(SetFamily(GroundSet(3))).size(), 0);

    SUBCASE("idempotent and hereditary on random input") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 120; ++trial) {
            const SetFamily f = oracle::random_family(rng, 5, trial % 3);
            const SetFamily closed = hereditary_closure(f);
            CHECK(is_hereditary(closed));
            CHECK_EQ(hereditary_closure(closed), closed);
        }
    }
}

TEST_CASE("bases_of") {
    CHECK_EQ(bases_of(fam(2, {{}, {1}, {2}, {1, 2}})), fam(2, {{1, 2}}));
    CHECK_EQ(bases_of(fam(3, {{}, {1}, {2}, {3}, {1, 2}, {1, 3}})), fam(3, {{1, 2}, {1, 3}}));
    CHECK_EQ(bases_of(SetFamily(GroundSet(2))).size(), 0);

    SUBCASE("closure round trip") {
        std::mt19937_64 rng(12);
        for (int trial = 0; trial < 120; ++trial) {
            const SetFamily f = oracle::random_family(rng, 5, trial % 3);
            const SetFamily closed = hereditary_closure(f);
            CHECK_EQ(bases_of(closed), bases_of(f));
            CHECK_EQ(hereditary_closure(bases_of(closed)), closed);
            CHECK(is_hereditary(f) == (closed == f));
        }
    }
}

TEST_CASE("is_hereditary") {
    CHECK(is_hereditary(fam(2, {{}, {1}, {2}, {1, 2}})));
    CHECK_FALSE(is_hereditary(fam(2, {{1, 2}})));
    CHECK(is_hereditary(fam(1, {{}})));
    CHECK(is_hereditary(SetFamily(GroundSet(1))));
}

TEST_CASE("union_support and star") {
    CHECK_EQ(union_support(fam(3, {{1}, {2, 3}})), full_word(3));
    CHECK_EQ(union_support(fam(3, {{}})), 0);
    CHECK_EQ(union_support(SetFamily(GroundSet(3))), 0);

    CHECK_EQ(star(power_set(GroundSet(2)), 1), fam(2, {{1}, {1, 2}}));
    CHECK_EQ(star(fam(2, {{}, {2}}), 1).size(), 0);
    CHECK_EQ(star(fam(3, {{}, {1}, {2}, {3}}), 1), fam(3, {{1}}));
    CHECK_THROWS_AS(star(fam(2, {{1}}), 3), std::out_of_range);
}

TEST_CASE("is_intersecting and is_centred") {
    const SetFamily triangle = fam(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(is_intersecting(triangle));
    CHECK_FALSE(is_centred(triangle));

    CHECK_FALSE(is_intersecting(fam(1, {{}})));  // the empty set misses itself
    CHECK_FALSE(is_centred(fam(1, {{}})));

    CHECK(is_intersecting(fam(2, {{1}, {1, 2}})));
    CHECK(is_centred(fam(2, {{1}, {1, 2}})));

    CHECK(is_intersecting(SetFamily(GroundSet(2))));  // empty family conventions
    CHECK(is_centred(SetFamily(GroundSet(2))));

    CHECK_FALSE(is_intersecting(fam(2, {{}, {1}})));
}

TEST_CASE("are_cross_intersecting") {
    const std::vector<SetFamily> ok{fam(2, {{1}}), fam(2, {{1, 2}})};
    CHECK(are_cross_intersecting(ok));

    const std::vector<SetFamily> with_empty{fam(3, {{}, {1}, {2}, {3}}), SetFamily(GroundSet(3)),
                                            SetFamily(GroundSet(3)), SetFamily(GroundSet(3))};
    CHECK(are_cross_intersecting(with_empty));

    const std::vector<SetFamily> no{fam(2, {{1}}), fam(2, {{2}})};
    CHECK_FALSE(are_cross_intersecting(no));

    // a family may be internally non-intersecting
    const std::vector<SetFamily> internal{fam(2, {{1}, {2}}), SetFamily(GroundSet(2))};
    CHECK(are_cross_intersecting(internal));

    const std::vector<SetFamily> one{fam(2, {{1}})};
    CHECK_THROWS_AS(are_cross_intersecting(one), std::invalid_argument);
    const std::vector<SetFamily> mixed{fam(2, {{1}}), fam(3, {{1}})};
    CHECK_THROWS_AS(are_cross_intersecting(mixed), std::invalid_argument);
}

TEST_CASE("is_compressed_wrt") {
    CHECK(is_compressed_wrt(fam(3, {{}, {1}, {2}, {3}, {1, 2}, {1, 3}}), 1));
    CHECK_FALSE(is_compressed_wrt(fam(2, {{}, {2}}), 1));  // 1 outside the support
    CHECK(is_compressed_wrt(power_set(GroundSet(3)), 2));
    CHECK_FALSE(is_compressed_wrt(fam(3, {{}, {1}, {2}, {3}, {2, 3}}), 1));
    CHECK_THROWS_AS(is_compressed_wrt(fam(2, {{1}}), 0), std::out_of_range);
}

TEST_CASE("is_left_compressed") {
    CHECK(is_left_compressed(fam(2, {{}, {1}})));
    CHECK_FALSE(is_left_compressed(fam(2, {{}, {2}})));
    CHECK(is_left_compressed(power_set(GroundSet(3))));
    CHECK(is_left_compressed(SetFamily(GroundSet(2))));
}

TEST_CASE("delta") {
    const GroundSet g(3);
    const std::vector<int> e23{2, 3};
    const std::vector<int> e12{1, 2};
    const std::vector<int> e13{1, 3};
    const std::vector<int> e2{2};
    const Word s23 = word_of(e23, g);
    CHECK_EQ(delta(g, s23, 1, 3), word_of(e12, g));
    const Word s13 = word_of(e13, g);
    CHECK_EQ(delta(g, s13, 1, 3), s13);  // x already present
    const Word s2 = word_of(e2, g);
    CHECK_EQ(delta(g, s2, 1, 3), s2);  // y absent

    CHECK_THROWS_AS(delta(g, s2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(delta(g, s2, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(delta(g, s2, 1, 4), std::out_of_range);
}

TEST_CASE("compress examples") {
    CHECK_EQ(compress(fam(3, {{2}, {2, 3}}), 1, 2), fam(3, {{1}, {1, 3}}));
    CHECK_EQ(compress(fam(2, {{1}, {2}}), 1, 2), fam(2, {{1}, {2}}));
    CHECK_EQ(compress(fam(3, {{2, 3}, {2}, {1, 3}}), 1, 2), fam(3, {{2, 3}, {1}, {1, 3}}));
    CHECK_THROWS_AS(compress(fam(2, {{1}}), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(compress(fam(2, {{1}}), 1, 3), std::out_of_range);
}

TEST_CASE("compress properties over every family on [3]") {
    for (std::uint64_t mask = 0; mask < (1u << 8); ++mask) {
        std::vector<Word> words;
        for (int w = 0; w < 8; ++w) {
            if ((mask >> w) & 1) words.push_back(static_cast<Word>(w));
        }
        const SetFamily base(GroundSet(3), std::move(words));
        const bool base_intersecting = is_intersecting(base);
        for (int x = 1; x <= 3; ++x) {
            for (int y = 1; y <= 3; ++y) {
                if (x == y) continue;
                const SetFamily once = compress(base, x, y);
                CHECK_EQ(once.size(), base.size());
                CHECK_EQ(compress(once, x, y), once);  // idempotent
                if (base_intersecting) CHECK(is_intersecting(once));
            }
        }
    }
}

TEST_CASE("compressed hereditary families absorb compressions of subfamilies") {
    const SetFamily h = hereditary_closure(fam(3, {{1, 2}, {1, 3}}));
    REQUIRE(is_compressed_wrt(h, 1));
    for (std::uint64_t mask = 0; mask < (1u << 6); ++mask) {
        const SetFamily sub = oracle::pick(h, mask);
        for (int y = 2; y <= 3; ++y) {
            for (Word w : compress(sub, 1, y)) CHECK(h.contains(w));
        }
    }
    CHECK_EQ(compress(h, 1, 2), h);
    CHECK_EQ(compress(h, 1, 3), h);
}

TEST_CASE("split_kernel examples") {
    const SetFamily triangle = fam(3, {{1, 2}, {1, 3}, {2, 3}});
    const KernelSplit a = split_kernel(triangle);
    CHECK_EQ(a.kernel, triangle);
    CHECK_EQ(a.residue.size(), 0);

    const KernelSplit b = split_kernel(fam(2, {{1}, {2}, {1, 2}}));
    CHECK_EQ(b.kernel, fam(2, {{1, 2}}));
    CHECK_EQ(b.residue, fam(2, {{1}, {2}}));

    const KernelSplit c = split_kernel(fam(3, {{}, {1}, {2}, {3}}));
    CHECK_EQ(c.kernel.size(), 0);
    CHECK_EQ(c.residue.size(), 4);
}

TEST_CASE("split_kernel partitions every family on [3]") {
    for (std::uint64_t mask = 0; mask < (1u << 8); ++mask) {
        std::vector<Word> words;
        for (int w = 0; w < 8; ++w) {
            if ((mask >> w) & 1) words.push_back(static_cast<Word>(w));
        }
        const SetFamily f(GroundSet(3), std::move(words));
        const KernelSplit split = split_kernel(f);

        CHECK_EQ(split.kernel.size() + split.residue.size(), f.size());
        CHECK(is_intersecting(split.kernel));
        for (Word w : split.kernel) {
            CHECK(f.contains(w));
            CHECK_FALSE(split.residue.contains(w));
        }
        for (Word w : split.residue) {
            CHECK(f.contains(w));
            bool has_disjoint_witness = false;
            for (Word other : f) {
                if ((w & other) == 0) has_disjoint_witness = true;
            }
            CHECK(has_disjoint_witness);
        }
    }
}
