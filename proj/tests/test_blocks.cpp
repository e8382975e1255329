#include "endohecke/blocks.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace endohecke;
using testing_support::load;

namespace {

struct Sp4Example : ::testing::Test {
    RootDatum d = load("sp4.json");
    TorusCharacter L = TorusCharacter::parse("1/2,1/2");
    BlockSystem bs{d, L};
    AffWElem refl(IVec r, int m = 0) { return reflection_elem(d, d.root_index(r), m); }
};

}  // namespace

TEST_F(Sp4Example, FourBlocks) {
    for (int bound : {4, 5, 6}) EXPECT_EQ(bs.enumerate_blocks(L, L, bound).size(), 4u) << bound;
    auto blocks = bs.enumerate_blocks(L, L, 4);
    EXPECT_TRUE(blocks.front().minimal->is_identity());
    std::size_t total = 0;
    for (auto& b : blocks) total += b.members.size();
    EXPECT_EQ(total, bs.ambient().elements_up_to(4).size());
}

TEST(Blocks, TrivialCharacterSingleBlock) {
    auto d = load("sp4.json");
    auto T = TorusCharacter::trivial(2);
    BlockSystem bs(d, T);
    EXPECT_EQ(bs.enumerate_blocks(T, T, 4).size(), 1u);
}

TEST(Blocks, Sl2HalfCharacterSingletons) {
    auto d = load("sl2.json");
    auto L = TorusCharacter::parse("1/2");
    BlockSystem bs(d, L);
    auto blocks = bs.enumerate_blocks(L, L, 5);
    EXPECT_EQ(blocks.size(), bs.ambient().elements_up_to(5).size());
    for (auto& b : blocks) EXPECT_EQ(b.members.size(), 1u);
}

TEST(Blocks, LeftCharacterOutsideOrbit) {
    auto d = load("sp4.json");
    BlockSystem bs(d, TorusCharacter::parse("1/2,0"));
    EXPECT_THROW(bs.enumerate_blocks(TorusCharacter::parse("1/2,1/2"), TorusCharacter::parse("1/2,0"), 3),
                 std::invalid_argument);
    EXPECT_NO_THROW(bs.enumerate_blocks(TorusCharacter::parse("0,1/2"), TorusCharacter::parse("1/2,0"), 3));
}

TEST_F(Sp4Example, PartitionMatchesCosetRelation) {
    auto elems = bs.ambient().elements_up_to(4);
    auto& H = bs.neutral(L);
    for (auto& u : elems)
        for (auto& v : elems) {
            bool coset = neutral_membership(H, u.inverse() * v, 40).member;
            EXPECT_EQ(bs.same_block(u, v, L), coset);
            EXPECT_EQ(neutral_membership(H, u * v.inverse(), 40).member, coset);
        }
}

TEST_F(Sp4Example, MinimalElements) {
    auto blocks = bs.enumerate_blocks(L, L, 8);
    ASSERT_EQ(blocks.size(), 4u);
    for (auto& b : blocks) {
        const AffWElem& m = *b.minimal;
        EXPECT_TRUE(preserves_positive_L_roots(d, L, m));
        int count = 0;
        for (auto& w : b.members) {
            EXPECT_LE(bs.ambient().length(m), bs.ambient().length(w));
            if (preserves_positive_L_roots(d, L, w)) ++count;
        }
        EXPECT_EQ(count, 1);
    }
    auto s2 = refl({0, 2});
    auto b = bs.block_of(s2, L, 4);
    EXPECT_EQ(*b.minimal, s2);
}

TEST_F(Sp4Example, MinimalElementsMultiply) {
    auto blocks = bs.enumerate_blocks(L, L, 8);
    for (auto& g : blocks)
        for (auto& b : blocks) {
            AffWElem p = *g.minimal * *b.minimal;
            EXPECT_EQ(bs.key(p, L), p);
            EXPECT_TRUE(preserves_positive_L_roots(d, L, p));
        }
}

TEST_F(Sp4Example, BlockLength) {
    auto blocks = bs.enumerate_blocks(L, L, 6);
    auto& neutral = blocks.front();
    auto a = refl({1, 1}), c = refl({1, -1});
    EXPECT_EQ(bs.block_length(neutral, AffWElem::identity(2)), 0);
    EXPECT_EQ(bs.block_length(neutral, a), 1);
    EXPECT_EQ(bs.block_length(neutral, a * c), 2);
    for (auto& b : blocks) {
        EXPECT_EQ(bs.block_length(b, *b.minimal), 0);
        for (auto& w : b.members) EXPECT_EQ(bs.block_length(b, w), bs.neutral(L).length(w));
    }
    EXPECT_THROW(bs.block_length(neutral, refl({0, 2})), std::invalid_argument);
}

TEST_F(Sp4Example, BlockOrderImpliesAmbientOrder) {
    auto blocks = bs.enumerate_blocks(L, L, 8);
    auto& amb = bs.ambient();
    for (auto& b : blocks)
        for (auto& w : b.members) {
            if (bs.block_length(b, w) > 2) continue;
            for (auto& wp : b.members) {
                if (bs.block_length(b, wp) > 2) continue;
                if (bs.block_leq(b, w, wp)) EXPECT_TRUE(amb.leq(w, wp));
            }
        }
    auto& neutral = blocks.front();
    auto e = AffWElem::identity(2), a = refl({1, 1}), c = refl({1, -1});
    EXPECT_TRUE(bs.block_leq(neutral, e, a));
    EXPECT_TRUE(amb.leq(e, a));
    EXPECT_FALSE(bs.block_leq(neutral, a, c));
    EXPECT_FALSE(bs.block_leq(neutral, c, a));
    EXPECT_FALSE(amb.leq(a, c));
}

TEST_F(Sp4Example, PalindromicWords) {
    auto& amb = bs.ambient();
    EXPECT_EQ(palindromic_reduced(amb, amb.simple(2)), (std::vector<int>{2}));
    EXPECT_EQ(palindromic_reduced(amb, refl({1, 1})), (std::vector<int>{1, 0, 1}));
    EXPECT_THROW(palindromic_reduced(amb, AffWElem::translation({1, 0})), std::invalid_argument);
    for (std::size_t i = 0; i < d.roots.size(); ++i)
        for (int m = -2; m <= 2; ++m) {
            auto t = reflection_elem(d, static_cast<int>(i), m);
            if (amb.length(t) > 9) continue;
            auto w = palindromic_reduced(amb, t);
            EXPECT_EQ(static_cast<int>(w.size()), amb.length(t));
            EXPECT_EQ(amb.evaluate(w), t);
            EXPECT_TRUE(std::equal(w.begin(), w.end(), w.rbegin()));
        }
}

TEST(Palindrome, InfiniteDihedral) {
    auto sys = ambient_system(load("sl2.json"));
    auto s = sys.simple(0), t = sys.simple(1);
    EXPECT_EQ(palindromic_reduced(sys, s * t * s), (std::vector<int>{0, 1, 0}));
    EXPECT_EQ(palindromic_reduced(sys, t * s * t * s * t), (std::vector<int>{1, 0, 1, 0, 1}));
}

TEST_F(Sp4Example, ConjugatingElements) {
    auto& amb = bs.ambient();
    auto& H = bs.neutral(L);
    auto c = conjugating_element(bs, refl({1, 1}), L);
    EXPECT_EQ(c.x, refl({0, 2}));
    EXPECT_EQ(amb.simple(c.sigma_prime), refl({1, -1}));
    auto c0 = conjugating_element(bs, refl({1, -1}), L);
    EXPECT_TRUE(c0.x.is_identity());
    for (auto& sigma : H.simples()) {
        auto cc = conjugating_element(bs, sigma, L);
        EXPECT_EQ(cc.x.inverse() * amb.simple(cc.sigma_prime) * cc.x, sigma);
        EXPECT_EQ(amb.length(sigma), 2 * amb.length(cc.x) + 1);
        TorusCharacter xL = act_on_char(cc.x, L);
        EXPECT_EQ(char_eval(xL, d.coroots[d.root_index(amb.simple_root(cc.sigma_prime))]), 0);
        EXPECT_EQ(bs.key(cc.x, L), cc.x);
        TorusCharacter M = L;
        for (std::size_t j = 0; j + 1 < (cc.word.size() + 1) / 2; ++j) {
            int s = cc.word[j];
            EXPECT_NE(char_eval(M, d.coroots[d.root_index(amb.simple_root(s))]), 0);
            M = act_on_char(amb.simple(s), M);
        }
    }
    EXPECT_THROW(conjugating_element(bs, refl({0, 2}), L), std::invalid_argument);
}
