#pragma once

#include "endohecke/affine_weyl.hpp"
#include "endohecke/laurent.hpp"

#include <map>

namespace endohecke {

using HVec = std::map<AffWElem, LaurentPoly>;

// Plain Iwahori-Hecke algebra of a Coxeter system: T_w T_s = T_ws or (q-1) T_w + q T_ws.
class HeckeH {
public:
    explicit HeckeH(CoxeterSystem sys) : sys_(std::move(sys)) {}

    const CoxeterSystem& system() const { return sys_; }
    HVec T(const AffWElem& w) const { return {{w, LaurentPoly(1)}}; }
    HVec mul(const HVec& a, const HVec& b) const;

    // KL polynomial P_{u,w}(q), stored with q = v^2 as a Laurent polynomial in v.
    LaurentPoly kl_poly(const AffWElem& u, const AffWElem& w) const;
    LaurentPoly mu(const AffWElem& z, const AffWElem& w) const;
    // C'_w = v^{-l(w)} sum_{x <= w} P_{x,w}(q) T_x
    HVec kl_basis(const AffWElem& w) const;

private:
    CoxeterSystem sys_;
    mutable std::map<std::pair<AffWElem, AffWElem>, LaurentPoly> memo_;
};

HVec add(HVec a, const HVec& b, const LaurentPoly& scale = LaurentPoly(1));

// Unitriangular expansion of x in a basis {c_z} with c_z = basis(z) leading at z; `len` orders the support.
template <class Len, class Basis>
std::map<AffWElem, LaurentPoly> triangular_decompose(HVec x, Len len, Basis basis) {
    std::map<AffWElem, LaurentPoly> out;
    while (!x.empty()) {
        auto top = x.begin();
        for (auto it = x.begin(); it != x.end(); ++it)
            if (len(it->first) > len(top->first)) top = it;
        AffWElem z = top->first;
        LaurentPoly c = top->second;
        out[z] = c;
        x = add(std::move(x), basis(z), -c);
    }
    return out;
}

struct CompareReport {
    bool ok = true;
    int coefficient_checks = 0;
    int product_checks = 0;
    std::vector<std::string> mismatches;
};

}  // namespace endohecke
