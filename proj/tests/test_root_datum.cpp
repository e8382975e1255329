#include "endohecke/root_datum.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace endohecke;
using testing_support::load;

TEST(RootDatum, Sp4FixtureIsValid) {
    auto d = load("sp4.json");
    EXPECT_TRUE(validate_root_datum(d).empty());
    EXPECT_EQ(d.roots.size(), 8u);
    std::set<IVec> roots(d.roots.begin(), d.roots.end());
    for (IVec r : {IVec{1, 1}, IVec{1, -1}, IVec{-1, 1}, IVec{-1, -1}, IVec{2, 0}, IVec{-2, 0}, IVec{0, 2}, IVec{0, -2}})
        EXPECT_TRUE(roots.count(r));
    // long roots carry short coroots and vice versa
    EXPECT_EQ(d.coroots[d.root_index({2, 0})], (IVec{1, 0}));
    EXPECT_EQ(d.coroots[d.root_index({1, 1})], (IVec{1, 1}));
}

TEST(RootDatum, Sl2AndA1A1Valid) {
    EXPECT_TRUE(validate_root_datum(load("sl2.json")).empty());
    EXPECT_TRUE(validate_root_datum(load("a1a1.json")).empty());
    EXPECT_TRUE(validate_root_datum(load("pgl2.json")).empty());
}

TEST(RootDatum, CorruptedCorootReported) {
    auto rep = validate_root_datum(load("sp4_bad.json"));
    ASSERT_FALSE(rep.empty());
    bool found = false;
    for (auto& s : rep)
        if (s.find("= 4 != 2") != std::string::npos) found = true;
    EXPECT_TRUE(found);
}

TEST(RootDatum, WeylGroupOrders) {
    EXPECT_EQ(weyl_group(load("sp4.json")).size(), 8u);
    EXPECT_EQ(weyl_group(load("sl2.json")).size(), 2u);
    EXPECT_EQ(weyl_group(load("a1a1.json")).size(), 4u);
}

TEST(RootDatum, WeylElementsPermuteCoroots) {
    for (auto name : {"sp4.json", "sl2.json", "a1a1.json"}) {
        auto d = load(name);
        std::set<IVec> co(d.coroots.begin(), d.coroots.end());
        auto W = weyl_group(d);
        std::set<IMat> group(W.begin(), W.end());
        for (auto& w : W) {
            std::set<IVec> img;
            for (auto& c : d.coroots) img.insert(mat_vec(w, c));
            EXPECT_EQ(img, co);
            EXPECT_TRUE(group.count(int_inverse(w)));
            for (auto& x : W) EXPECT_TRUE(group.count(mat_mul(w, x)));
        }
    }
}

TEST(Character, Evaluation) {
    auto L = TorusCharacter::parse("1/2,1/2");
    EXPECT_EQ(char_eval(L, {1, 1}), 0);
    EXPECT_EQ(char_eval(L, {0, 1}), mpq_class(1, 2));
    EXPECT_EQ(char_eval(L, {-3, 0}), mpq_class(1, 2));
    auto T = TorusCharacter::trivial(2);
    EXPECT_EQ(char_eval(T, {5, -7}), 0);
    EXPECT_EQ(L.order(), 2u);
    EXPECT_THROW(char_eval(L, {1}), std::invalid_argument);
    EXPECT_EQ(TorusCharacter::parse("3/2,-1/3").str(), "1/2,2/3");
}

TEST(Character, Additivity) {
    auto L = TorusCharacter::parse("1/3,3/4");
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
            IVec mu{a, b}, nu{b, -a};
            EXPECT_EQ(char_eval(L, {a + b, b - a}), frac_part(char_eval(L, mu) + char_eval(L, nu)));
        }
}

TEST(Character, WeylAction) {
    auto d = load("sp4.json");
    auto L = TorusCharacter::parse("1/2,1/2");
    for (auto& w : weyl_group(d)) EXPECT_EQ(char_act(w, L), L);
    auto L2 = TorusCharacter::parse("1/2,0");
    IMat swap = d.reflection(d.root_index({1, -1}));
    EXPECT_EQ(char_act(swap, L2), TorusCharacter::parse("0,1/2"));
    EXPECT_EQ(char_act(identity_matrix(2), L2), L2);
}

TEST(Character, ActionIsGroupActionAndMatchesDefinition) {
    auto d = load("sp4.json");
    auto W = weyl_group(d);
    auto L = TorusCharacter::parse("1/3,1/4");
    for (auto& w : W) {
        auto wl = char_act(w, L);
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b)
                EXPECT_EQ(char_eval(wl, {a, b}), char_eval(L, mat_vec(int_inverse(w), {a, b})));
        for (auto& x : W) EXPECT_EQ(char_act(w, char_act(x, L)), char_act(mat_mul(w, x), L));
    }
}

TEST(Character, OrbitStabilizer) {
    auto d = load("sp4.json");
    auto a = orbit_and_stabilizer(TorusCharacter::parse("1/2,1/2"), d);
    EXPECT_EQ(a.orbit.size(), 1u);
    EXPECT_EQ(a.stabilizer.size(), 8u);
    auto b = orbit_and_stabilizer(TorusCharacter::trivial(2), d);
    EXPECT_EQ(b.orbit.size(), 1u);
    EXPECT_EQ(b.stabilizer.size(), 8u);
    auto c = orbit_and_stabilizer(TorusCharacter::parse("1/2,0"), d);
    EXPECT_EQ(c.orbit.size() * c.stabilizer.size(), 8u);
    EXPECT_EQ(c.orbit.size(), 2u);
    for (auto txt : {"1/3,0", "1/4,1/3", "1/5,2/5"}) {
        auto o = orbit_and_stabilizer(TorusCharacter::parse(txt), d);
        EXPECT_EQ(o.orbit.size() * o.stabilizer.size(), 8u) << txt;
    }
}

TEST(RootDatum, Helpers) {
    auto d = load("sp4.json");
    EXPECT_EQ(d.coxeter_number(), 4);
    EXPECT_EQ(d.coroot_sum(), (IVec{3, 1}));  // (1,-1)+(0,1)+(1,1)+(1,0)
    EXPECT_EQ(load("sl2.json").coxeter_number(), 2);
}
