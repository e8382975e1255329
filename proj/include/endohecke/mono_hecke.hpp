#pragma once

#include "endohecke/blocks.hpp"
#include "endohecke/hecke_h.hpp"
#include "endohecke/laurent.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace endohecke {

// Element of the monodromic Hecke algebra from right_char to left_char; keys satisfy w . right_char = left_char.
struct HeckeElt {
    TorusCharacter left_char;
    TorusCharacter right_char;
    std::map<AffWElem, LaurentPoly> terms;

    void add(const AffWElem& w, const LaurentPoly& p);
    bool is_zero() const { return terms.empty(); }
    LaurentPoly coeff(const AffWElem& w) const;
    HeckeElt& operator+=(const HeckeElt& o);
    HeckeElt& operator-=(const HeckeElt& o);
    HeckeElt scaled(const LaurentPoly& p) const;
    friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
        return a.left_char == b.left_char && a.right_char == b.right_char && a.terms == b.terms;
    }
};

class MonoHecke {
public:
    explicit MonoHecke(BlockSystem bs);

    const BlockSystem& blocks() const { return bs_; }
    const CoxeterSystem& ambient() const { return bs_.ambient(); }

    HeckeElt zero(const TorusCharacter& left, const TorusCharacter& right) const;
    HeckeElt T(const AffWElem& w, const TorusCharacter& right) const;

    bool block_simple(int s, const TorusCharacter& M) const;  // ambient simple s acting on M lies in W~°_M

    HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;            // peels the right factor
    HeckeElt mul_left_peel(const HeckeElt& a, const HeckeElt& b) const;  // peels the left factor
    HeckeElt bar(const HeckeElt& h) const;

    // l_beta of w for the block through w with the given right character (= N_L(w)).
    int block_len(const AffWElem& w, const TorusCharacter& right) const;
    // Coefficient in the normalized basis That_u = v^{-l_beta(u)} T_u.
    LaurentPoly that_coeff(const HeckeElt& h, const AffWElem& u) const;
    std::map<AffWElem, LaurentPoly> that_coords(const HeckeElt& h) const;

    HeckeElt b_simple(const AffWElem& sigma, const TorusCharacter& L) const;
    HeckeElt b_simple_conjugated(const AffWElem& sigma, const TorusCharacter& L) const;

    // Canonical basis of the neutral block for all w with l_L(w) <= bound, by the descent recursion.
    std::map<AffWElem, HeckeElt> kl_basis_neutral(const TorusCharacter& L, int bound) const;

private:
    BlockSystem bs_;
    mutable std::mutex mu_;
    mutable std::unordered_map<AffWElem, Word, AffWElemHash> words_;

    Word word_of(const AffWElem& w) const;
    // right multiplication of every term by T_s (or T_s^{-1}), s acting with right character M
    void right_step(std::map<AffWElem, LaurentPoly>& acc, int s, const TorusCharacter& M, bool inverse) const;
    std::map<AffWElem, LaurentPoly> basis_product(const AffWElem& w, const LaurentPoly& p, const AffWElem& wp,
                                                  const TorusCharacter& right) const;
};

std::map<AffWElem, std::int64_t> specialize_q1(const HeckeElt& h);

// theta_{<=N} = sum over w in the block with l_beta(w) <= N of v^{l_beta(w)} That_w.
HeckeElt theta_vector(const MonoHecke& mh, const Block& b, int N);
// theta T_sigma - q theta is supported on l_beta >= N; sigma is an ambient simple index.
bool theta_eigen_check(const MonoHecke& mh, const Block& b, int sigma, int N);

// Neutral block against the Hecke algebra of (W~_H, S_H): canonical-basis coefficients against KL
// polynomials for l_L <= bound, and structure constants of {b_w} for l_L <= product_bound.
CompareReport compare_neutral_block(const MonoHecke& mh, const TorusCharacter& L, int bound, int product_bound);

}  // namespace endohecke
