#pragma once

#include "endohecke/endoscopy.hpp"

#include <map>
#include <optional>

namespace endohecke {

TorusCharacter act_on_char(const AffWElem& w, const TorusCharacter& L);

struct Block {
    TorusCharacter left_char;
    TorusCharacter right_char;
    AffWElem representative;
    std::optional<AffWElem> minimal;
    std::vector<AffWElem> members;  // enumerated members, ordered by (length, element)
    int bound = 0;
};

// Ambient system plus the neutral Coxeter systems (W~°_M, S_M) for every M in the W-orbit of a character.
class BlockSystem {
public:
    BlockSystem(RootDatum d, const TorusCharacter& L);

    const RootDatum& datum() const { return d_; }
    const CoxeterSystem& ambient() const { return amb_; }
    const std::vector<TorusCharacter>& orbit() const { return orbit_; }
    bool in_orbit(const TorusCharacter& M) const { return neutral_.count(M) > 0; }
    const CoxeterSystem& neutral(const TorusCharacter& M) const;

    // w^beta of the block w W~°_L, by descending right S_L-descents.
    AffWElem key(const AffWElem& w, const TorusCharacter& L) const;
    bool same_block(const AffWElem& u, const AffWElem& v, const TorusCharacter& L) const;

    std::vector<Block> enumerate_blocks(const TorusCharacter& Lp, const TorusCharacter& L, int bound) const;
    Block block_of(const AffWElem& w, const TorusCharacter& L, int bound) const;
    AffWElem minimal_element(const Block& b) const;

    AffWElem block_factor(const Block& b, const AffWElem& w) const;
    int block_length(const Block& b, const AffWElem& w) const;
    bool block_leq(const Block& b, const AffWElem& w, const AffWElem& wp) const;

private:
    RootDatum d_;
    CoxeterSystem amb_;
    std::vector<TorusCharacter> orbit_;
    std::map<TorusCharacter, CoxeterSystem> neutral_;
};

// Direct check via affine roots: w maps every positive affine root over Phi_L to a positive one.
bool preserves_positive_L_roots(const RootDatum& d, const TorusCharacter& L, const AffWElem& w);

// Lexicographically first palindromic reduced word of a reflection.  If given, `ok(outer, s)` must accept
// each outer letter s given the outer letters already chosen.
using LetterFilter = std::function<bool(const std::vector<int>& outer, int letter)>;
std::vector<int> palindromic_reduced(const CoxeterSystem& sys, const AffWElem& t, const LetterFilter& ok = {});

struct Conjugation {
    AffWElem x;
    int sigma_prime = -1;        // ambient simple index
    std::vector<int> word;       // palindromic word of sigma over ambient simples
};

// sigma = x^{-1} s' x with s' ambient simple and every outer letter outside the neutral group of its character.
Conjugation conjugating_element(const BlockSystem& bs, const AffWElem& sigma, const TorusCharacter& L);

}  // namespace endohecke
