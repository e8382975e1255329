#include "endohecke/hecke_h.hpp"

#include <stdexcept>

namespace endohecke {

HVec add(HVec a, const HVec& b, const LaurentPoly& scale) {
    for (auto& [w, p] : b) {
        LaurentPoly c = p * scale;
        if (c.is_zero()) continue;
        auto [it, fresh] = a.try_emplace(w, c);
        if (fresh) continue;
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
    return a;
}

HVec HeckeH::mul(const HVec& a, const HVec& b) const {
    HVec r;
    for (auto& [wp, pp] : b) {
        Word wd = sys_.reduced_word(wp);
        for (auto& [w, p] : a) {
            HVec acc{{w, p * pp}};
            for (int s : wd.letters) {
                const AffWElem& g = sys_.simple(s);
                HVec out;
                for (auto& [x, c] : acc) {
                    AffWElem xs = x * g;
                    if (sys_.length(xs) > sys_.length(x)) {
                        out = add(std::move(out), {{xs, c}});
                    } else {
                        out = add(std::move(out), {{x, c * (LaurentPoly::q() - 1)}, {xs, c * LaurentPoly::q()}});
                    }
                }
                acc = std::move(out);
            }
            HVec moved;
            for (auto& [x, c] : acc) moved.emplace(x * wd.omega, c);
            r = add(std::move(r), moved);
        }
    }
    return r;
}

LaurentPoly HeckeH::kl_poly(const AffWElem& x, const AffWElem& w) const {
    auto key = std::make_pair(x, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LaurentPoly result;
    if (!sys_.leq(x, w)) {
        result = LaurentPoly();
    } else if (x == w) {
        result = LaurentPoly(1);
    } else {
        int s = sys_.left_descents(w).front();
        const AffWElem& g = sys_.simple(s);
        AffWElem v = g * w;
        AffWElem sx = g * x;
        const bool c = sys_.length(sx) < sys_.length(x);
        // P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_{z < v, sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}
        result = LaurentPoly::q(c ? 0 : 1) * kl_poly(sx, v) + LaurentPoly::q(c ? 1 : 0) * kl_poly(x, v);
        const int lw = sys_.length(w);
        for (auto& z : sys_.lower_interval(v)) {
            if (z == v || sys_.length(g * z) > sys_.length(z)) continue;
            LaurentPoly m = mu(z, v);
            if (m.is_zero()) continue;
            result -= m * LaurentPoly::v(lw - sys_.length(z)) * kl_poly(x, z);
        }
    }
    memo_.emplace(key, result);
    return result;
}

LaurentPoly HeckeH::mu(const AffWElem& z, const AffWElem& w) const {
    int d = sys_.length(w) - sys_.length(z) - 1;
    if (d < 0 || d % 2 != 0) return {};
    return LaurentPoly(kl_poly(z, w).coeff(d));
}

HVec HeckeH::kl_basis(const AffWElem& w) const {
    HVec r;
    const int lw = sys_.length(w);
    for (auto& x : sys_.lower_interval(w)) {
        LaurentPoly p = kl_poly(x, w);
        if (!p.is_zero()) r.emplace(x, p.shifted(-lw));
    }
    return r;
}

}  // namespace endohecke
