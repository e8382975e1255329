#include "endohecke/mono_hecke.hpp"
#include "endohecke/soergel.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace endohecke;
using testing_support::load;

namespace {

struct Env {
    RootDatum d;
    TorusCharacter L;
    MonoHecke mh;
    PolyRing R;
    Env(const std::string& file, const std::string& ch)
        : d(load(file)), L(TorusCharacter::parse(ch)), mh(BlockSystem(d, L)), R(d) {}
    const CoxeterSystem& H() const { return mh.blocks().neutral(L); }
    const CoxeterSystem& amb() const { return mh.ambient(); }
    AffWElem e() const { return AffWElem::identity(d.rank); }
    GradedBimodule atom(int i) const { return bs_atom(R, H().simple(i), H().simple_root(i)); }
};

Env& sp4() {
    static Env s("sp4.json", "1/2,1/2");
    return s;
}

Env& sl2() {
    static Env s("sl2.json", "0");
    return s;
}

bool same(const GradedBimodule& a, const GradedBimodule& b) {
    return a.level == b.level && a.degrees == b.degrees && a.right_x == b.right_x && a.zop == b.zop;
}

Poly random_poly(std::mt19937_64& rng, int nv, int maxdeg) {
    Poly p;
    for (int k = 0; k <= maxdeg; ++k)
        for (Mono m : monomials_of_degree(nv, k))
            if (rng() % 2) p += Poly::monomial(static_cast<long>(rng() % 7) - 3, m);
    return p;
}

std::vector<std::vector<int>> words_up_to(int n, int letters) {
    std::vector<std::vector<int>> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i)
        if (static_cast<int>(out[i].size()) < n)
            for (int s = 0; s < letters; ++s) {
                auto w = out[i];
                w.push_back(s);
                out.push_back(w);
            }
    return out;
}

}  // namespace

TEST(PolyRing, ActionIsHomomorphism) {
    auto& s = sp4();
    auto elems = s.amb().elements_up_to(3);
    std::vector<Poly> gens;
    for (int j = 0; j < s.R.rank(); ++j) gens.push_back(s.R.x(j));
    gens.push_back(s.R.z());
    for (auto& g : elems)
        for (auto& h : elems)
            for (auto& f : gens) EXPECT_EQ(s.R.act(g, s.R.act(h, f)), s.R.act(g * h, f));
    EXPECT_EQ(s.R.act(s.e(), s.R.z()), s.R.z());
}

TEST(PolyRing, DemazureExamples) {
    auto& s = sp4();
    AffWElem s1 = s.amb().simple(0);  // s_{L1-L2}
    IVec a = s.amb().simple_root(0);
    EXPECT_EQ(a, (IVec{1, -1}));
    Poly x1 = s.R.x(0), x2 = s.R.x(1);
    EXPECT_TRUE(s.R.demazure(s1, a, Poly(1)).is_zero());
    EXPECT_EQ(s.R.demazure(s1, a, x1), Poly(1));
    EXPECT_EQ(s.R.demazure(s1, a, x1 * x1), x1 + x2);
    EXPECT_EQ(s.R.demazure(s1, a, s.R.linear(a)), Poly(2));
}

TEST(PolyRing, DemazureSquareZeroAndTwistedLeibniz) {
    std::mt19937_64 rng(5);
    for (Env* st : {&sp4(), &sl2()}) {
        auto& H = st->H();
        std::vector<std::pair<AffWElem, IVec>> refl;
        for (std::size_t i = 0; i < H.num_simples(); ++i) refl.emplace_back(H.simple(i), H.simple_root(i));
        for (std::size_t i = 0; i < st->amb().num_simples(); ++i)
            refl.emplace_back(st->amb().simple(i), st->amb().simple_root(i));
        for (auto& [s, a] : refl)
            for (int t = 0; t < 6; ++t) {
                Poly f = random_poly(rng, st->R.nvars(), 3), g = random_poly(rng, st->R.nvars(), 2);
                EXPECT_TRUE(st->R.demazure(s, a, st->R.demazure(s, a, f)).is_zero());
                EXPECT_EQ(st->R.demazure(s, a, f * g),
                          st->R.demazure(s, a, f) * g + st->R.act(s, f) * st->R.demazure(s, a, g));
            }
    }
}

TEST(Bimodule, AtomAndValidation) {
    auto& s = sp4();
    for (std::size_t i = 0; i < s.H().num_simples(); ++i) {
        auto B = s.atom(static_cast<int>(i));
        EXPECT_TRUE(validate(s.R, B).empty());
        PMat A = act_poly(B, s.R.linear(s.H().simple_root(i)));
        // (1 (x) 1) . alpha_s = 1 (x) alpha_s
        EXPECT_TRUE(A.at(0, 0).is_zero());
        EXPECT_EQ(A.at(0, 1), Poly(1));
        EXPECT_EQ(graded_rank(B), LaurentPoly::v(-1) + LaurentPoly::v(1));
    }
    auto BS = bs_bimodule(s.R, s.H(), {3, 1, 3});
    EXPECT_EQ(BS.rank(), 8u);
    EXPECT_TRUE(validate(s.R, BS).empty());
    EXPECT_TRUE(same(bs_bimodule(s.R, s.H(), {}), regular(s.R, Level::RR)));
    GradedBimodule bad = s.atom(0);
    bad.right_x[0].at(0, 0) = s.R.z();
    EXPECT_FALSE(validate(s.R, bad).empty());
}

TEST(Bimodule, TwistedComposeAndUnit) {
    auto& s = sp4();
    EXPECT_TRUE(same(twisted(s.R, s.e(), Level::RR), regular(s.R, Level::RR)));
    EXPECT_TRUE(same(twisted(s.R, s.e(), Level::S), regular(s.R, Level::S)));
    auto elems = s.amb().elements_up_to(2);
    for (auto& u : elems)
        for (auto& v : elems) {
            auto C = conv(twisted(s.R, u, Level::RR), twisted(s.R, v, Level::RR));
            EXPECT_TRUE(same(C, twisted(s.R, u * v, Level::RR)));
            auto CS = conv(twisted(s.R, u, Level::S), twisted(s.R, v, Level::S));
            EXPECT_TRUE(same(CS, twisted(s.R, u * v, Level::S)));
        }
    auto B = s.atom(2);
    EXPECT_TRUE(same(conv(regular(s.R, Level::RR), B), B));
    EXPECT_TRUE(same(conv(B, regular(s.R, Level::RR)), B));
    // finite w: right x is the linear form w(x)
    AffWElem w = s.amb().simple(0);
    EXPECT_EQ(twisted(s.R, w, Level::RR).right_x[0].at(0, 0), s.R.x(1));
}

TEST(Bimodule, ConvIsAssociative) {
    auto& s = sp4();
    auto A = s.atom(0), B = s.atom(1), C = s.atom(3);
    auto T = twisted(s.R, s.amb().simple(2), Level::RR);
    EXPECT_TRUE(same(conv(conv(A, B), C), conv(A, conv(B, C))));
    EXPECT_TRUE(same(conv(conv(A, T), C), conv(A, conv(T, C))));
    auto As = res(s.R, A), Bs = res(s.R, B), Cs = res(s.R, C);
    EXPECT_TRUE(same(conv(conv(As, Bs), Cs), conv(As, conv(Bs, Cs))));
}

TEST(Bimodule, InductionAndRestriction) {
    auto& s = sp4();
    for (auto& w : s.amb().elements_up_to(3)) {
        EXPECT_TRUE(same(ind(s.R, twisted(s.R, w, Level::S)), twisted(s.R, w, Level::RR)));
        EXPECT_TRUE(same(res(s.R, twisted(s.R, w, Level::RR)), twisted(s.R, w, Level::S)));
    }
    auto B = s.atom(3), C = s.atom(0);
    auto Bs = res(s.R, B), Cs = res(s.R, C);
    EXPECT_TRUE(validate(s.R, Bs).empty());
    EXPECT_TRUE(same(ind(s.R, Bs), B));
    EXPECT_TRUE(same(ind(s.R, conv(Bs, Cs)), conv(B, C)));
    EXPECT_THROW(ind(s.R, B), std::invalid_argument);
}

TEST(Hom, SmallSpaces) {
    auto& s = sp4();
    auto Rg = regular(s.R, Level::RR);
    EXPECT_EQ(hom_space(Rg, Rg, 0).size(), 1u);
    EXPECT_EQ(hom_space(Rg, Rg, 2).size(), 3u);  // x1, x2, z
    EXPECT_EQ(hom_space(res(s.R, Rg), res(s.R, Rg), 2).size(), 2u);
    // End(B_s) is left-free on generators of degree 0 and 2: graded dimension (1 + v^2) dim R
    for (Env* st : {&sp4(), &sl2()})
        for (std::size_t i = 0; i < st->H().num_simples(); ++i) {
            auto B = st->atom(static_cast<int>(i));
            std::size_t nv = st->R.nvars();
            EXPECT_EQ(hom_dims(B, B, -2, 2), (std::vector<std::size_t>{0, 0, 1, 0, nv + 1}));
            auto Bs = res(st->R, B);
            EXPECT_EQ(hom_dims(Bs, Bs, -2, 2), (std::vector<std::size_t>{0, 0, 1, 0, nv}));
            for (auto& F : hom_space(B, B, 2)) EXPECT_EQ(check_map(B, B, F, 2), "");
        }
    // rank one: degrees 0 and 2 give 1 and 2
    auto Bs = res(sl2().R, sl2().atom(0));
    EXPECT_EQ(hom_dims(Bs, Bs, 0, 2), (std::vector<std::size_t>{1, 0, 2}));
}

TEST(Hom, NoMapsFromIdentityGraph) {
    auto& s = sp4();
    auto Re = twisted(s.R, s.e(), Level::RR);
    for (auto& lvl : s.amb().enumerate(3))
        for (auto& w : lvl) {
            if (w.is_identity()) continue;
            auto Rw = twisted(s.R, w, Level::RR);
            for (int d = 0; d <= 6; d += 2) EXPECT_TRUE(hom_space(Re, Rw, d).empty());
        }
}

TEST(Adjunction, CounitValuesAndTriangles) {
    for (Env* st : {&sp4(), &sl2()})
        for (std::size_t i = 0; i < st->H().num_simples(); ++i) {
            auto rep = unit_counit_check(st->R, st->H().simple(i), st->H().simple_root(i));
            EXPECT_TRUE(rep.ok()) << rep.detail;
            EXPECT_EQ(rep.counit.at(2, 0), Poly(1));  // 1 (x) alpha (x) 1 -> 1
            EXPECT_TRUE(rep.counit.at(0, 0).is_zero());  // 1 (x) 1 (x) 1 -> 0
        }
}

TEST(Adjunction, BrokenCounitIsReported) {
    auto& s = sl2();
    auto B = s.atom(0), BB = conv(B, B), Rg = regular(s.R, Level::RR);
    PMat bad(4, 1);
    bad.at(0, 0) = Poly(1);
    EXPECT_NE(check_map(BB, Rg, bad, 0), "");
}

TEST(Split, BsBsDecomposes) {
    for (Env* st : {&sp4(), &sl2()})
        for (std::size_t i = 0; i < st->H().num_simples(); ++i) {
            auto rep = split_bb(st->R, st->H().simple(i), st->H().simple_root(i));
            EXPECT_TRUE(rep.ok) << rep.detail;
        }
}

TEST(Support, GraphsAndAtoms) {
    auto& s = sp4();
    std::mt19937_64 rng(9);
    auto lvl = s.amb().enumerate(2)[2];
    for (auto& w : lvl) {
        auto Rw = twisted(s.R, w, Level::RR);
        EXPECT_TRUE(support_contains(s.R, Rw, w, 3, rng));
        for (auto& w2 : lvl)
            if (!(w2 == w)) EXPECT_FALSE(support_contains(s.R, Rw, w2, 3, rng));
    }
    for (std::size_t i = 0; i < s.H().num_simples(); ++i) {
        auto B = s.atom(static_cast<int>(i));
        AffWElem sig = s.H().simple(i);
        for (auto& M : {B, shift(B, 3)}) {
            EXPECT_TRUE(support_contains(s.R, M, s.e(), 3, rng));
            EXPECT_TRUE(support_contains(s.R, M, sig, 3, rng));
            EXPECT_FALSE(support_contains(s.R, M, s.amb().simple(1), 3, rng));  // s_{2L2} is not in W~_H
        }
        EXPECT_TRUE(support_contains(s.R, res(s.R, B), sig, 3, rng));
    }
    EXPECT_THROW(support_contains(s.R, regular(s.R, Level::RR), s.e(), 0, rng), std::invalid_argument);
}

TEST(BottSamelson, RanksAndFibersMatchHeckeProducts) {
    std::mt19937_64 rng(17);
    for (Env* st : {&sp4(), &sl2()}) {
        auto& H = st->H();
        for (auto& word : words_up_to(3, static_cast<int>(H.num_simples()))) {
            auto M = bs_bimodule(st->R, H, word);
            HeckeElt prod = st->mh.T(st->e(), st->L);
            for (int l : word) prod = st->mh.mul(prod, st->mh.b_simple(H.simple(l), st->L));
            LaurentPoly eps;
            for (auto& [u, c] : prod.terms) eps += c * LaurentPoly::q(H.length(u));
            EXPECT_EQ(graded_rank(M), eps);
            auto p = random_point(st->R, Level::RR, rng);
            for (auto& [u, c] : prod.terms)
                EXPECT_EQ(static_cast<std::int64_t>(fiber_dim(st->R, M, u, p)), c.at_one());
        }
    }
}

TEST(Summand, AffineDihedralTopSummand) {
    auto& s = sl2();
    auto& H = s.H();
    std::mt19937_64 rng(2);
    auto BS = bs_bimodule(s.R, H, {0, 1, 0});
    AffWElem x = H.evaluate(std::vector<int>{0, 1, 0});
    Summand top = top_summand(s.R, BS, x, rng);
    ASSERT_TRUE(top.split_complete);
    // b_s b_t b_s = b_sts + b_s
    auto kl = s.mh.kl_basis_neutral(s.L, 3);
    LaurentPoly eps;
    for (auto& [u, c] : kl.at(x).terms) eps += c * LaurentPoly::q(H.length(u));
    EXPECT_EQ(graded_rank(top.module), eps);
    EXPECT_EQ(graded_rank(top.module), LaurentPoly::v(3) + LaurentPoly::monomial(2, 1) +
                                           LaurentPoly::monomial(2, -1) + LaurentPoly::v(-3));
    EXPECT_EQ(hom_space(top.module, top.module, 0).size(), 1u);
    EXPECT_TRUE(support_contains(s.R, top.module, x, 3, rng));
}

TEST(ExtendedSoergel, Examples) {
    auto& s = sp4();
    auto blocks = s.mh.blocks().enumerate_blocks(s.L, s.L, 4);
    for (auto& b : blocks) {
        AffWElem wb = *b.minimal;
        auto es = extended_soergel(s.mh.blocks(), s.R, wb, s.L, 4);
        EXPECT_TRUE(es.x.is_identity());
        EXPECT_TRUE(same(es.module, twisted(s.R, wb, Level::RR)));
    }
    std::mt19937_64 rng(4);
    AffWElem wb = *blocks.back().minimal;
    const TorusCharacter Lp = act_on_char(wb, s.L);
    const CoxeterSystem& Hp = s.mh.blocks().neutral(Lp);
    for (std::size_t i = 0; i < Hp.num_simples(); ++i) {
        AffWElem w = Hp.simple(i) * wb;
        auto es = extended_soergel(s.mh.blocks(), s.R, w, s.L, 4);
        EXPECT_EQ(es.x, Hp.simple(i));
        EXPECT_TRUE(es.split_complete);
        auto expect = conv(bs_atom(s.R, Hp.simple(i), Hp.simple_root(i)), twisted(s.R, wb, Level::RR));
        EXPECT_TRUE(same(es.module, expect));
        EXPECT_EQ(hom_space(es.module, es.module, 0).size(), 1u);
        EXPECT_EQ(graded_rank(es.module), LaurentPoly::v(-1) + LaurentPoly::v(1));
        EXPECT_EQ(es.module.degrees[es.generator], -1);
        EXPECT_TRUE(support_contains(s.R, es.module, w, 3, rng));
    }
}

TEST(InductionHom, DimensionsAfterInduction) {
    auto& s = sp4();
    std::vector<GradedBimodule> mods;
    for (auto& w : s.amb().elements_up_to(1)) mods.push_back(twisted(s.R, w, Level::S));
    mods.push_back(res(s.R, s.atom(0)));
    mods.push_back(res(s.R, s.atom(3)));
    for (std::size_t a = 0; a < mods.size(); ++a)
        for (std::size_t b = 0; b < mods.size(); b += 2) {
            auto S = hom_dims(mods[a], mods[b], -4, 4);
            auto RR = hom_dims(ind(s.R, mods[a]), ind(s.R, mods[b]), -4, 4);
            for (int d = 0; d < 9; ++d) {
                std::size_t sum = 0;
                for (int k = d; k >= 0; k -= 2) sum += S[k];
                EXPECT_EQ(RR[d], sum) << a << " " << b << " degree " << d - 4;
            }
        }
}

TEST(ExtendedSoergel, RanksMatchCanonicalBasisInNeutralBlock) {
    auto& s = sp4();
    auto kl = s.mh.kl_basis_neutral(s.L, 3);
    for (auto& [w, b] : kl) {
        auto es = extended_soergel(s.mh.blocks(), s.R, w, s.L, 3, 11);
        ASSERT_TRUE(es.split_complete) << to_string(w);
        LaurentPoly eps;
        for (auto& [u, c] : b.terms) eps += c * LaurentPoly::q(s.H().length(u));
        EXPECT_EQ(graded_rank(es.module), eps) << to_string(w);
        EXPECT_EQ(hom_space(es.module, es.module, 0).size(), 1u) << to_string(w);
        EXPECT_TRUE(validate(s.R, es.module).empty());
    }
}
