#include "endohecke/mono_hecke.hpp"

#include <stdexcept>

namespace endohecke {

void HeckeElt::add(const AffWElem& w, const LaurentPoly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(w, p);
    if (fresh) return;
    it->second += p;
    if (it->second.is_zero()) terms.erase(it);
}

LaurentPoly HeckeElt::coeff(const AffWElem& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? LaurentPoly() : it->second;
}

static void require_same_chars(const HeckeElt& a, const HeckeElt& b) {
    if (!(a.left_char == b.left_char) || !(a.right_char == b.right_char))
        throw std::invalid_argument("Hecke elements live between different characters");
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
    require_same_chars(*this, o);
    for (auto& [w, p] : o.terms) add(w, p);
    return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
    require_same_chars(*this, o);
    for (auto& [w, p] : o.terms) add(w, -p);
    return *this;
}

HeckeElt HeckeElt::scaled(const LaurentPoly& p) const {
    HeckeElt r{left_char, right_char, {}};
    for (auto& [w, c] : terms) r.add(w, c * p);
    return r;
}

MonoHecke::MonoHecke(BlockSystem bs) : bs_(std::move(bs)) {}

HeckeElt MonoHecke::zero(const TorusCharacter& left, const TorusCharacter& right) const {
    return HeckeElt{left, right, {}};
}

HeckeElt MonoHecke::T(const AffWElem& w, const TorusCharacter& right) const {
    HeckeElt h{act_on_char(w, right), right, {}};
    h.add(w, LaurentPoly(1));
    return h;
}

bool MonoHecke::block_simple(int s, const TorusCharacter& M) const {
    const RootDatum& d = bs_.datum();
    return char_eval(M, d.coroots[d.root_index(ambient().simple_root(s))]) == 0;
}

Word MonoHecke::word_of(const AffWElem& w) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = words_.find(w);
        if (it != words_.end()) return it->second;
    }
    Word wd = ambient().reduced_word(w);
    std::lock_guard<std::mutex> lk(mu_);
    words_.emplace(w, wd);
    return wd;
}

void MonoHecke::right_step(std::map<AffWElem, LaurentPoly>& acc, int s, const TorusCharacter& M, bool inverse) const {
    const CoxeterSystem& amb = ambient();
    const AffWElem& g = amb.simple(s);
    const bool block = block_simple(s, M);
    std::map<AffWElem, LaurentPoly> out;
    auto put = [&out](const AffWElem& x, const LaurentPoly& p) {
        if (p.is_zero()) return;
        auto [it, fresh] = out.try_emplace(x, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (auto& [x, p] : acc) {
        AffWElem xs = x * g;
        bool down = amb.length(xs) < amb.length(x);
        if (!block) {
            put(xs, p);
            continue;
        }
        if (!inverse) {
            if (!down) {
                put(xs, p);
            } else {
                put(x, p * (LaurentPoly::q() - 1));
                put(xs, p * LaurentPoly::q());
            }
        } else {
            // T_s^{-1} = q^{-1} T_s + (q^{-1} - 1)
            if (!down) {
                put(xs, p * LaurentPoly::q(-1));
                put(x, p * (LaurentPoly::q(-1) - 1));
            } else {
                put(x, p * (LaurentPoly::q() - 1) * LaurentPoly::q(-1));
                put(xs, p);
                put(x, p * (LaurentPoly::q(-1) - 1));
            }
        }
    }
    acc = std::move(out);
}

std::map<AffWElem, LaurentPoly> MonoHecke::basis_product(const AffWElem& w, const LaurentPoly& p, const AffWElem& wp,
                                                         const TorusCharacter& right) const {
    Word wd = word_of(wp);
    const std::size_t m = wd.letters.size();
    std::vector<TorusCharacter> chars(m);
    TorusCharacter M = act_on_char(wd.omega, right);
    for (std::size_t k = m; k-- > 0;) {
        chars[k] = M;
        M = act_on_char(ambient().simple(wd.letters[k]), M);
    }
    std::map<AffWElem, LaurentPoly> acc{{w, p}};
    for (std::size_t k = 0; k < m; ++k) right_step(acc, wd.letters[k], chars[k], false);
    if (wd.omega.is_identity()) return acc;
    std::map<AffWElem, LaurentPoly> out;
    for (auto& [x, c] : acc) out.emplace(x * wd.omega, c);
    return out;
}

HeckeElt MonoHecke::mul(const HeckeElt& a, const HeckeElt& b) const {
    if (!(a.right_char == b.left_char)) throw std::invalid_argument("character mismatch in product");
    HeckeElt r{a.left_char, b.right_char, {}};
    for (auto& [wp, pp] : b.terms)
        for (auto& [w, p] : a.terms)
            for (auto& [x, c] : basis_product(w, p * pp, wp, b.right_char)) r.add(x, c);
    return r;
}

HeckeElt MonoHecke::mul_left_peel(const HeckeElt& a, const HeckeElt& b) const {
    if (!(a.right_char == b.left_char)) throw std::invalid_argument("character mismatch in product");
    const CoxeterSystem& amb = ambient();
    HeckeElt r{a.left_char, b.right_char, {}};
    for (auto& [u, pu] : a.terms) {
        Word wd = word_of(u);
        for (auto& [w, pw] : b.terms) {
            std::map<AffWElem, LaurentPoly> acc{{wd.omega * w, pu * pw}};
            for (std::size_t k = wd.letters.size(); k-- > 0;) {
                const int s = wd.letters[k];
                const AffWElem& g = amb.simple(s);
                std::map<AffWElem, LaurentPoly> out;
                auto put = [&out](const AffWElem& x, const LaurentPoly& p) {
                    auto [it, fresh] = out.try_emplace(x, p);
                    if (!fresh) it->second += p;
                };
                for (auto& [x, p] : acc) {
                    // s acts on the left character of T_x
                    TorusCharacter M = act_on_char(x, b.right_char);
                    AffWElem sx = g * x;
                    if (amb.length(sx) > amb.length(x) || !block_simple(s, M)) {
                        put(sx, p);
                    } else {
                        put(x, p * (LaurentPoly::q() - 1));
                        put(sx, p * LaurentPoly::q());
                    }
                }
                acc.clear();
                for (auto& [x, p] : out)
                    if (!p.is_zero()) acc.emplace(x, p);
            }
            for (auto& [x, c] : acc) r.add(x, c);
        }
    }
    return r;
}

HeckeElt MonoHecke::bar(const HeckeElt& h) const {
    HeckeElt r{h.left_char, h.right_char, {}};
    for (auto& [w, p] : h.terms) {
        Word wd = word_of(w);
        const std::size_t m = wd.letters.size();
        std::vector<TorusCharacter> chars(m);
        TorusCharacter M = act_on_char(wd.omega, h.right_char);
        for (std::size_t k = m; k-- > 0;) {
            chars[k] = M;
            M = act_on_char(ambient().simple(wd.letters[k]), M);
        }
        std::map<AffWElem, LaurentPoly> acc{{AffWElem::identity(w.rank), p.bar()}};
        for (std::size_t k = 0; k < m; ++k) right_step(acc, wd.letters[k], chars[k], true);
        for (auto& [x, c] : acc) r.add(x * wd.omega, c);
    }
    return r;
}

int MonoHecke::block_len(const AffWElem& w, const TorusCharacter& right) const {
    return bs_.neutral(right).length(w);
}

LaurentPoly MonoHecke::that_coeff(const HeckeElt& h, const AffWElem& u) const {
    return h.coeff(u).shifted(block_len(u, h.right_char));
}

std::map<AffWElem, LaurentPoly> MonoHecke::that_coords(const HeckeElt& h) const {
    std::map<AffWElem, LaurentPoly> out;
    for (auto& [u, p] : h.terms) out.emplace(u, p.shifted(block_len(u, h.right_char)));
    return out;
}

HeckeElt MonoHecke::b_simple(const AffWElem& sigma, const TorusCharacter& L) const {
    if (bs_.neutral(L).simple_index(sigma) < 0) throw std::invalid_argument("not a simple reflection of W~°_L");
    HeckeElt h{L, L, {}};
    h.add(sigma, LaurentPoly::v(-1));
    h.add(AffWElem::identity(sigma.rank), LaurentPoly::v(-1));
    return h;
}

HeckeElt MonoHecke::b_simple_conjugated(const AffWElem& sigma, const TorusCharacter& L) const {
    Conjugation c = conjugating_element(bs_, sigma, L);
    TorusCharacter xL = act_on_char(c.x, L);
    const AffWElem& sp = ambient().simple(c.sigma_prime);
    HeckeElt bsp{xL, xL, {}};
    bsp.add(sp, LaurentPoly::v(-1));
    bsp.add(AffWElem::identity(sp.rank), LaurentPoly::v(-1));
    return mul(mul(T(c.x.inverse(), xL), bsp), T(c.x, L));
}

std::map<AffWElem, HeckeElt> MonoHecke::kl_basis_neutral(const TorusCharacter& L, int bound) const {
    const CoxeterSystem& H = bs_.neutral(L);
    std::map<AffWElem, HeckeElt> b;
    auto levels = H.enumerate(bound);
    b.emplace(AffWElem::identity(bs_.datum().rank), T(AffWElem::identity(bs_.datum().rank), L));
    for (std::size_t k = 1; k < levels.size(); ++k)
        for (auto& w : levels[k]) {
            int s = H.left_descents(w).front();
            AffWElem sigma = H.simple(s);
            HeckeElt c = mul(b_simple(sigma, L), b.at(sigma * w));
            while (true) {
                const AffWElem* top = nullptr;
                int top_len = -1;
                LaurentPoly top_coeff;
                for (auto& [z, p] : c.terms) {
                    if (z == w) continue;
                    int lz = H.length(z);
                    LaurentPoly tc = p.shifted(lz);
                    if (tc.nonneg_part().is_zero()) continue;
                    if (lz > top_len) {
                        top = &z;
                        top_len = lz;
                        top_coeff = tc;
                    }
                }
                if (!top) break;
                AffWElem z = *top;
                c -= b.at(z).scaled(top_coeff.nonneg_symmetrized());
            }
            b.emplace(w, std::move(c));
        }
    return b;
}

std::map<AffWElem, std::int64_t> specialize_q1(const HeckeElt& h) {
    std::map<AffWElem, std::int64_t> out;
    for (auto& [w, p] : h.terms)
        if (std::int64_t c = p.at_one(); c != 0) out.emplace(w, c);
    return out;
}

HeckeElt theta_vector(const MonoHecke& mh, const Block& b, int N) {
    if (!b.minimal) throw std::invalid_argument("block without minimal element");
    const CoxeterSystem& H = mh.blocks().neutral(b.right_char);
    HeckeElt th{b.left_char, b.right_char, {}};
    for (auto& level : H.enumerate(N))
        for (auto& v : level) th.add(*b.minimal * v, LaurentPoly(1));
    return th;
}

bool theta_eigen_check(const MonoHecke& mh, const Block& b, int sigma, int N) {
    if (N < 2) throw std::invalid_argument("theta eigen check needs N >= 2");
    if (!mh.block_simple(sigma, b.right_char)) throw std::invalid_argument("sigma is not block-simple");
    HeckeElt th = theta_vector(mh, b, N);
    HeckeElt lhs = mh.mul(th, mh.T(mh.ambient().simple(sigma), b.right_char));
    lhs -= th.scaled(LaurentPoly::q());
    for (auto& [w, p] : lhs.terms)
        if (mh.block_len(w, b.right_char) < N) return false;
    return true;
}

}  // namespace endohecke

namespace endohecke {

namespace {

std::string poly_str(const LaurentPoly& p) { return p.str(); }

std::string coeff_map_str(const std::map<AffWElem, LaurentPoly>& m) {
    std::string s = "{";
    for (auto& [z, p] : m) s += " " + to_string(z) + ": " + poly_str(p) + ";";
    return s + " }";
}

}  // namespace

CompareReport compare_neutral_block(const MonoHecke& mh, const TorusCharacter& L, int bound, int product_bound) {
    CompareReport rep;
    const CoxeterSystem& Hs = mh.blocks().neutral(L);
    HeckeH hh(Hs);
    const int top = std::max(bound, 2 * product_bound);
    auto mono = mh.kl_basis_neutral(L, top);
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        if (rep.mismatches.size() < 50) rep.mismatches.push_back(std::move(msg));
    };
    auto levels = Hs.enumerate(bound);
    std::vector<AffWElem> elems;
    for (auto& lv : levels) elems.insert(elems.end(), lv.begin(), lv.end());

    // (a) canonical-basis coefficients against KL polynomials
    for (auto& w : elems) {
        const HeckeElt& bw = mono.at(w);
        for (auto& [u, p] : bw.terms)
            if (Hs.length(u) > Hs.length(w) || !neutral_membership(Hs, u, Hs.length(u)).member)
                fail("b_" + to_string(w) + " has support outside the lower neutral interval at " + to_string(u));
        for (auto& u : elems) {
            ++rep.coefficient_checks;
            LaurentPoly expect = hh.kl_poly(u, w).shifted(Hs.length(u) - Hs.length(w));
            LaurentPoly got = mh.that_coeff(bw, u);
            if (!(got == expect))
                fail("coefficient of That_" + to_string(u) + " in b_" + to_string(w) + ": " + got.str() +
                     " vs " + expect.str());
        }
    }

    // (b) structure constants, both sides decomposed in their own canonical basis (That coordinates)
    auto h_that = [&Hs](const HVec& x) {
        HVec out;
        for (auto& [u, p] : x) out.emplace(u, p.shifted(Hs.length(u)));
        return out;
    };
    auto len = [&Hs](const AffWElem& z) { return Hs.length(z); };
    std::vector<AffWElem> small;
    for (auto& w : elems)
        if (Hs.length(w) <= product_bound) small.push_back(w);
    for (auto& u : small)
        for (auto& w : small) {
            ++rep.product_checks;
            auto mono_c = triangular_decompose(
                mh.that_coords(mh.mul(mono.at(u), mono.at(w))), len,
                [&](const AffWElem& z) { return mh.that_coords(mono.at(z)); });
            auto h_c = triangular_decompose(h_that(hh.mul(hh.kl_basis(u), hh.kl_basis(w))), len,
                                            [&](const AffWElem& z) { return h_that(hh.kl_basis(z)); });
            if (mono_c != h_c)
                fail("b_" + to_string(u) + " b_" + to_string(w) + ": " + coeff_map_str(mono_c) + " vs " +
                     coeff_map_str(h_c));
        }
    return rep;
}

}  // namespace endohecke
