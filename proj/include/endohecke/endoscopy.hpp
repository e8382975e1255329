#pragma once

#include "endohecke/affine_weyl.hpp"

#include <optional>

namespace endohecke {

// Indices (into d.roots) of the roots whose coroots are L-trivial.
std::vector<int> endoscopic_coroots(const RootDatum& d, const TorusCharacter& L);

// Root datum of H on the same lattices, positivity inherited from d.
RootDatum endoscopic_datum(const RootDatum& d, const TorusCharacter& L);

std::vector<AffWElem> affine_simple_system_H(const RootDatum& H);

// Coxeter system (W~_H, S_H) inside W~, length = inversion count over Phi_L with ambient signs.
CoxeterSystem endoscopic_system(const RootDatum& d, const TorusCharacter& L);

struct Membership {
    bool member = false;
    std::vector<int> certificate;  // g = s_{c_1} ... s_{c_k} over S_H when member
};

// Decides g in W~°_L by descending right S_H-descents; throws BoundExceeded if N_L(g) > bound.
Membership neutral_membership(const CoxeterSystem& H, const AffWElem& g, int bound);

// Independent test: finite part in W_H and translation in Q_H^v.
bool in_neutral_lattice(const RootDatum& d, const TorusCharacter& L, const AffWElem& g);

int endo_length(const CoxeterSystem& H, const AffWElem& g, int bound);

// Integer row span membership (Hermite normal form).
bool in_integer_span(const std::vector<IVec>& gens, const IVec& v);

// "A1xA1", "C2", ... from the irreducible components; "T" for a torus.
std::string cartan_type(const RootDatum& d);
// [Z^n : Z-span of gens], 0 if the span has lower rank.
long lattice_index(const std::vector<IVec>& gens, int n);
// |Stab_W(L)| [X_* : Z Phi_L^v] / |W_L|, the number of blocks from L to L; nullopt when infinite.
std::optional<long> block_count_formula(const RootDatum& d, const TorusCharacter& L);

}  // namespace endohecke
