#include "endohecke/endoscopy.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace endohecke {

std::vector<int> endoscopic_coroots(const RootDatum& d, const TorusCharacter& L) {
    std::vector<int> out;
    for (std::size_t i = 0; i < d.coroots.size(); ++i)
        if (char_eval(L, d.coroots[i]) == 0) out.push_back(static_cast<int>(i));
    return out;
}

RootDatum endoscopic_datum(const RootDatum& d, const TorusCharacter& L) {
    RootDatum h;
    h.name = d.name + "_H";
    h.rank = d.rank;
    std::vector<int> idx = endoscopic_coroots(d, L);
    for (int i : idx) {
        h.roots.push_back(d.roots[i]);
        h.coroots.push_back(d.coroots[i]);
    }
    std::set<IVec> pos;
    for (int i : idx)
        if (d.positive[i]) pos.insert(d.roots[i]);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (!d.positive[idx[k]]) continue;
        const IVec& r = h.roots[k];
        bool decomposable = false;
        for (auto& a : pos) {
            IVec b(r.size());
            for (std::size_t j = 0; j < r.size(); ++j) b[j] = r[j] - a[j];
            if (pos.count(b)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) h.simple_indices.push_back(static_cast<int>(k));
    }
    h.finalize();
    return h;
}

std::vector<AffWElem> affine_simple_system_H(const RootDatum& H) {
    std::vector<AffWElem> out;
    if (H.roots.empty()) return out;
    for (auto& a : affine_simple_reflections(H)) out.push_back(a.elem);
    return out;
}

CoxeterSystem endoscopic_system(const RootDatum& d, const TorusCharacter& L) {
    RootDatum h = endoscopic_datum(d, L);
    InversionSet inv = InversionSet::of(d, endoscopic_coroots(d, L));
    std::vector<AffWElem> simples;
    std::vector<IVec> sroots;
    if (!h.roots.empty())
        for (auto& a : affine_simple_reflections(h)) {
            simples.push_back(a.elem);
            sroots.push_back(h.roots[a.root_index]);
        }
    return CoxeterSystem(inv, simples, {AffWElem::identity(d.rank)}, sroots);
}

Membership neutral_membership(const CoxeterSystem& H, const AffWElem& g, int bound) {
    Membership m;
    AffWElem cur = g;
    int l = H.length(cur);
    if (l > bound) throw BoundExceeded("membership search: N_L exceeds bound");
    std::vector<int> rev;
    while (l > 0) {
        bool found = false;
        for (std::size_t i = 0; i < H.num_simples(); ++i) {
            AffWElem n = cur * H.simple(i);
            int nl = H.length(n);
            if (nl < l) {
                rev.push_back(static_cast<int>(i));
                cur = n;
                l = nl;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no S_H descent for positive N_L");
    }
    m.member = cur.is_identity();
    if (m.member) m.certificate.assign(rev.rbegin(), rev.rend());
    return m;
}

bool in_integer_span(const std::vector<IVec>& gens, const IVec& v) {
    const int n = static_cast<int>(v.size());
    std::vector<std::vector<long long>> rows;
    for (auto& g : gens) rows.emplace_back(g.begin(), g.end());
    // Hermite-style echelon form by integer row operations.
    std::vector<std::vector<long long>> basis;
    int col = 0;
    while (col < n && !rows.empty()) {
        while (true) {
            int piv = -1;
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (piv < 0 || std::llabs(rows[i][col]) < std::llabs(rows[piv][col])))
                    piv = static_cast<int>(i);
            if (piv < 0) break;
            bool done = true;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (static_cast<int>(i) == piv || rows[i][col] == 0) continue;
                long long q = rows[i][col] / rows[piv][col];
                for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[piv][j];
                if (rows[i][col] != 0) done = false;
            }
            if (done) {
                basis.push_back(rows[piv]);
                rows.erase(rows.begin() + piv);
                break;
            }
        }
        rows.erase(std::remove_if(rows.begin(), rows.end(),
                                  [](const std::vector<long long>& r) {
                                      return std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
                                  }),
                   rows.end());
        ++col;
    }
    std::vector<long long> rem(v.begin(), v.end());
    for (auto& b : basis) {
        int lead = 0;
        while (b[lead] == 0) ++lead;
        if (rem[lead] % b[lead] != 0) return false;
        long long q = rem[lead] / b[lead];
        for (int j = 0; j < n; ++j) rem[j] -= q * b[j];
    }
    return std::all_of(rem.begin(), rem.end(), [](long long x) { return x == 0; });
}

bool in_neutral_lattice(const RootDatum& d, const TorusCharacter& L, const AffWElem& g) {
    RootDatum h = endoscopic_datum(d, L);
    if (!in_integer_span(h.coroots, g.translation_part())) return false;
    IMat w = g.finite_part();
    if (h.roots.empty()) return w == identity_matrix(d.rank);
    for (auto& x : weyl_group(h))
        if (x == w) return true;
    return false;
}

int endo_length(const CoxeterSystem& H, const AffWElem& g, int bound) {
    Membership m = neutral_membership(H, g, bound);
    if (!m.member) throw std::invalid_argument("element is not in the neutral subgroup");
    return static_cast<int>(m.certificate.size());
}

}  // namespace endohecke

namespace endohecke {

std::string cartan_type(const RootDatum& d) {
    if (d.roots.empty()) return "T";
    std::vector<std::string> parts;
    for (auto& comp : irreducible_components(d)) {
        const int n = static_cast<int>(comp.size());
        int roots = 0, shorts = 0;
        for (std::size_t i = 0; i < d.roots.size(); ++i) {
            auto c = d.simple_coords(d.roots[i]);
            bool inside = true;
            for (std::size_t k = 0; k < c.size(); ++k)
                if (c[k] != 0 && !std::binary_search(comp.begin(), comp.end(), static_cast<int>(k))) inside = false;
            if (!inside) continue;
            ++roots;
            for (std::size_t j = 0; j < d.roots.size(); ++j)
                if (j != i && d.roots[j] != d.roots[d.negative_of(static_cast<int>(i))] &&
                    std::abs(dot(d.roots[j], d.coroots[i])) >= 2) {
                    ++shorts;
                    break;
                }
        }
        std::string t;
        if (shorts == 0) {
            if (roots == n * (n + 1)) t = "A";
            else if (roots == 2 * n * (n - 1)) t = "D";
            else if (roots == 72 && n == 6) t = "E";
            else if (roots == 126 && n == 7) t = "E";
            else if (roots == 240 && n == 8) t = "E";
        } else if (n == 2 && roots == 12) {
            t = "G";
        } else if (n == 4 && roots == 48) {
            t = "F";
        } else if (roots == 2 * n * n) {
            t = (shorts == 2 * n && n != 2) ? "B" : "C";
        }
        if (t.empty()) t = "?";
        parts.push_back(t + std::to_string(n));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (auto& p : parts) out += (out.empty() ? "" : "x") + p;
    return out;
}

long lattice_index(const std::vector<IVec>& gens, int n) {
    std::vector<std::vector<long long>> rows;
    for (auto& g : gens) rows.emplace_back(g.begin(), g.end());
    long long index = 1;
    for (int col = 0; col < n; ++col) {
        // gcd-reduce column col among the remaining rows
        while (true) {
            int piv = -1;
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (piv < 0 || std::llabs(rows[i][col]) < std::llabs(rows[piv][col])))
                    piv = static_cast<int>(i);
            if (piv < 0) return 0;
            bool done = true;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (static_cast<int>(i) == piv || rows[i][col] == 0) continue;
                long long q = rows[i][col] / rows[piv][col];
                for (int j = 0; j < n; ++j) rows[i][j] -= q * rows[piv][j];
                if (rows[i][col] != 0) done = false;
            }
            if (done) {
                index *= std::llabs(rows[piv][col]);
                rows.erase(rows.begin() + piv);
                break;
            }
        }
    }
    return static_cast<long>(index);
}

std::optional<long> block_count_formula(const RootDatum& d, const TorusCharacter& L) {
    RootDatum h = endoscopic_datum(d, L);
    long idx = lattice_index(h.coroots, d.rank);
    if (idx == 0) return std::nullopt;
    long stab = static_cast<long>(orbit_and_stabilizer(L, d).stabilizer.size());
    long wh = h.roots.empty() ? 1 : static_cast<long>(weyl_group(h).size());
    return stab * idx / wh;
}

}  // namespace endohecke
