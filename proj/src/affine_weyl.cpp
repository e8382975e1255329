#include "endohecke/affine_weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace endohecke {

AffWElem AffWElem::identity(int rank) {
    if (rank < 0 || rank > kMaxRank) throw std::invalid_argument("rank exceeds kMaxRank");
    AffWElem g;
    g.rank = rank;
    for (int i = 0; i < rank; ++i) {
        g.w[i * kMaxRank + i] = 1;
        g.winv[i * kMaxRank + i] = 1;
    }
    return g;
}

AffWElem AffWElem::make(const IMat& m, const IVec& lambda) {
    const int r = static_cast<int>(m.size());
    if (r > kMaxRank) throw std::invalid_argument("rank exceeds kMaxRank");
    if (static_cast<int>(lambda.size()) != r) throw std::invalid_argument("translation of wrong dimension");
    IMat inv = int_inverse(m);
    AffWElem g;
    g.rank = r;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            g.w[i * kMaxRank + j] = m[i][j];
            g.winv[i * kMaxRank + j] = inv[i][j];
        }
        g.lam[i] = lambda[i];
    }
    return g;
}

AffWElem AffWElem::translation(const IVec& lambda) {
    AffWElem g = identity(static_cast<int>(lambda.size()));
    for (std::size_t i = 0; i < lambda.size(); ++i) g.lam[i] = lambda[i];
    return g;
}

IMat AffWElem::finite_part() const {
    IMat m(rank, IVec(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m[i][j] = at(i, j);
    return m;
}

IVec AffWElem::translation_part() const { return IVec(lam.begin(), lam.begin() + rank); }

bool AffWElem::is_identity() const { return *this == identity(rank); }

AffWElem AffWElem::operator*(const AffWElem& o) const {
    AffWElem r;
    r.rank = rank;
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            int s = 0, t = 0;
            for (int k = 0; k < rank; ++k) {
                s += w[i * kMaxRank + k] * o.w[k * kMaxRank + j];
                t += o.winv[i * kMaxRank + k] * winv[k * kMaxRank + j];
            }
            r.w[i * kMaxRank + j] = s;
            r.winv[i * kMaxRank + j] = t;
        }
        int l = lam[i];
        for (int k = 0; k < rank; ++k) l += w[i * kMaxRank + k] * o.lam[k];
        r.lam[i] = l;
    }
    return r;
}

AffWElem AffWElem::inverse() const {
    AffWElem r;
    r.rank = rank;
    r.w = winv;
    r.winv = w;
    for (int i = 0; i < rank; ++i) {
        int l = 0;
        for (int k = 0; k < rank; ++k) l -= winv[i * kMaxRank + k] * lam[k];
        r.lam[i] = l;
    }
    return r;
}

IVec AffWElem::act_linear(const IVec& v) const {
    IVec r(rank, 0);
    for (int i = 0; i < rank; ++i)
        for (int k = 0; k < rank; ++k) r[i] += at(i, k) * v[k];
    return r;
}

IVec AffWElem::act(const IVec& v) const {
    IVec r = act_linear(v);
    for (int i = 0; i < rank; ++i) r[i] += lam[i];
    return r;
}

IVec AffWElem::act_char(const IVec& mu) const {
    IVec r(rank, 0);
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < rank; ++i) r[j] += inv_at(i, j) * mu[i];
    return r;
}

std::size_t AffWElemHash::operator()(const AffWElem& g) const noexcept {
    std::size_t h = static_cast<std::size_t>(g.rank);
    auto mix = [&h](int x) { h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (int i = 0; i < g.rank; ++i) {
        for (int j = 0; j < g.rank; ++j) mix(g.w[i * kMaxRank + j]);
        mix(g.lam[i]);
    }
    return h;
}

std::string to_string(const AffWElem& g) {
    std::ostringstream os;
    os << "([";
    for (int i = 0; i < g.rank; ++i) {
        if (i) os << ";";
        for (int j = 0; j < g.rank; ++j) os << (j ? "," : "") << g.at(i, j);
    }
    os << "],(";
    for (int i = 0; i < g.rank; ++i) os << (i ? "," : "") << g.lam[i];
    os << "))";
    return os.str();
}

AffRoot aff_act(const AffWElem& g, const AffRoot& a) {
    IVec beta = g.act_char(a.root);
    int shift = 0;
    for (int i = 0; i < g.rank; ++i) shift += beta[i] * g.lam[i];
    return AffRoot{beta, a.level - shift};
}

bool aff_positive(const RootDatum& d, const AffRoot& a) {
    if (a.level != 0) return a.level > 0;
    int i = d.root_index(a.root);
    if (i < 0) throw std::invalid_argument("not a root");
    return d.positive[i];
}

InversionSet InversionSet::of(const RootDatum& ambient, const std::vector<int>& root_indices) {
    if (ambient.rank > kMaxRank) throw std::invalid_argument("rank exceeds kMaxRank");
    InversionSet s;
    s.rank = ambient.rank;
    for (int i : root_indices) {
        std::array<int, kMaxRank> r{};
        for (int k = 0; k < ambient.rank; ++k) r[k] = ambient.roots[i][k];
        s.roots.push_back(r);
        s.positive.push_back(ambient.positive[i] ? 1 : 0);
    }
    for (int k = 0; k < ambient.rank; ++k) s.regular[k] = ambient.rho2_dual[k];
    return s;
}

int InversionSet::count(const AffWElem& g) const {
    // For a = (alpha, n) positive, g a = (beta, n - <beta, lambda>) with beta = w alpha.  Negative images
    // come from n_min <= n < m, plus n = m when beta < 0.
    int total = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
        const auto& a = roots[r];
        int m = 0, sgn = 0;
        for (int j = 0; j < rank; ++j) {
            int bj = 0;
            for (int i = 0; i < rank; ++i) bj += g.winv[i * kMaxRank + j] * a[i];
            m += bj * g.lam[j];
            sgn += bj * regular[j];
        }
        int nmin = positive[r] ? 0 : 1;
        if (m > nmin) total += m - nmin;
        if (m >= nmin && sgn < 0) total += 1;
    }
    return total;
}

CoxeterSystem::CoxeterSystem(InversionSet inv, std::vector<AffWElem> simples, std::vector<AffWElem> omega,
                             std::vector<IVec> simple_roots)
    : inv_(std::move(inv)), simples_(std::move(simples)), omega_(std::move(omega)),
      simple_roots_(std::move(simple_roots)) {}

int CoxeterSystem::simple_index(const AffWElem& g) const {
    for (std::size_t i = 0; i < simples_.size(); ++i)
        if (simples_[i] == g) return static_cast<int>(i);
    return -1;
}

std::vector<int> CoxeterSystem::left_descents(const AffWElem& g) const {
    std::vector<int> out;
    int l = length(g);
    for (std::size_t i = 0; i < simples_.size(); ++i)
        if (length(simples_[i] * g) < l) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> CoxeterSystem::right_descents(const AffWElem& g) const {
    std::vector<int> out;
    int l = length(g);
    for (std::size_t i = 0; i < simples_.size(); ++i)
        if (length(g * simples_[i]) < l) out.push_back(static_cast<int>(i));
    return out;
}

Word CoxeterSystem::reduced_word(const AffWElem& g) const {
    Word wd;
    AffWElem cur = g;
    int l = length(cur);
    while (l > 0) {
        bool found = false;
        for (std::size_t i = 0; i < simples_.size(); ++i) {
            AffWElem n = simples_[i] * cur;
            int nl = length(n);
            if (nl < l) {
                wd.letters.push_back(static_cast<int>(i));
                cur = n;
                l = nl;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no descent for an element of positive length");
    }
    wd.omega = cur;
    return wd;
}

AffWElem CoxeterSystem::evaluate(const std::vector<int>& letters) const {
    AffWElem g = AffWElem::identity(inv_.rank);
    for (int i : letters) g = g * simples_.at(i);
    return g;
}

AffWElem CoxeterSystem::evaluate(const Word& w) const { return evaluate(w.letters) * w.omega; }

bool CoxeterSystem::leq(const AffWElem& u0, const AffWElem& v0) const {
    AffWElem u = u0, v = v0;
    int lu = length(u), lv = length(v);
    while (true) {
        if (lu > lv) return false;
        if (lv == 0) return u == v;
        int s = -1;
        AffWElem sv;
        for (std::size_t i = 0; i < simples_.size(); ++i) {
            sv = simples_[i] * v;
            if (length(sv) < lv) {
                s = static_cast<int>(i);
                break;
            }
        }
        if (s < 0) throw std::logic_error("no descent for an element of positive length");
        v = sv;
        --lv;
        AffWElem su = simples_[s] * u;
        int lsu = length(su);
        if (lsu < lu) {
            u = su;
            lu = lsu;
        }
    }
}

std::vector<AffWElem> CoxeterSystem::lower_interval(const AffWElem& g) const {
    Word wd = reduced_word(g);
    const std::size_t n = wd.letters.size();
    if (n > 20) throw BoundExceeded("interval enumeration beyond length 20");
    std::set<AffWElem> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        AffWElem x = AffWElem::identity(inv_.rank);
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (std::size_t{1} << k)) x = x * simples_[wd.letters[k]];
        out.insert(x * wd.omega);
    }
    return {out.begin(), out.end()};
}

std::vector<std::vector<AffWElem>> CoxeterSystem::enumerate(int bound) const {
    std::vector<std::vector<AffWElem>> levels;
    std::vector<AffWElem> cur = omega_;
    std::sort(cur.begin(), cur.end());
    levels.push_back(cur);
    for (int k = 0; k < bound; ++k) {
        std::set<AffWElem> next;
        for (auto& g : levels.back())
            for (auto& s : simples_) {
                AffWElem h = g * s;
                if (length(h) == k + 1) next.insert(h);
            }
        levels.emplace_back(next.begin(), next.end());
    }
    return levels;
}

std::vector<AffWElem> CoxeterSystem::elements_up_to(int bound) const {
    std::vector<AffWElem> out;
    for (auto& lv : enumerate(bound)) out.insert(out.end(), lv.begin(), lv.end());
    return out;
}

AffWElem reflection_elem(const RootDatum& d, int root_index, int level) {
    IVec lam = d.coroots[root_index];
    for (auto& x : lam) x *= level;
    return AffWElem::make(d.reflection(root_index), lam);
}

std::vector<std::vector<int>> irreducible_components(const RootDatum& d) {
    const int n = static_cast<int>(d.simple_indices.size());
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i}, members;
        comp[i] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            members.push_back(a);
            for (int b = 0; b < n; ++b) {
                if (comp[b] >= 0) continue;
                if (dot(d.roots[d.simple_indices[a]], d.coroots[d.simple_indices[b]]) != 0) {
                    comp[b] = comp[i];
                    stack.push_back(b);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    return out;
}

std::vector<AffineSimple> affine_simple_reflections(const RootDatum& d) {
    std::vector<AffineSimple> out;
    for (int k : d.simple_indices) out.push_back({reflection_elem(d, k, 0), k, 0});
    for (auto& comp : irreducible_components(d)) {
        int best = -1, best_h = -1;
        for (std::size_t i = 0; i < d.roots.size(); ++i) {
            if (!d.positive[i]) continue;
            auto c = d.simple_coords(d.roots[i]);
            bool inside = true;
            mpq_class h = 0;
            for (std::size_t k = 0; k < c.size(); ++k) {
                h += c[k];
                if (c[k] != 0 && !std::binary_search(comp.begin(), comp.end(), static_cast<int>(k))) inside = false;
            }
            if (inside && h.get_num().get_si() > best_h) {
                best_h = static_cast<int>(h.get_num().get_si());
                best = static_cast<int>(i);
            }
        }
        out.push_back({reflection_elem(d, best, 1), best, 1});
    }
    return out;
}

std::vector<AffWElem> omega_group(const RootDatum& d, const std::vector<AffWElem>& simples, const InversionSet& inv) {
    if (!d.is_semisimple()) throw std::invalid_argument("Omega is infinite for a non-semisimple datum");
    std::vector<IVec> basis;
    for (int i : d.simple_indices) basis.push_back(d.coroots[i]);
    // |X_* / Q^v| = |det| of the simple coroot matrix
    std::vector<std::vector<mpq_class>> m(d.rank, std::vector<mpq_class>(d.rank));
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < d.rank; ++j) m[i][j] = basis[i][j];
    mpq_class det = 1;
    for (int c = 0; c < d.rank; ++c) {
        int p = c;
        while (p < d.rank && m[p][c] == 0) ++p;
        if (p == d.rank) throw std::logic_error("coroots not independent");
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < d.rank; ++r) {
            mpq_class f = m[r][c] / m[c][c];
            for (int j = c; j < d.rank; ++j) m[r][j] -= f * m[c][j];
        }
    }
    const int n = static_cast<int>(mpq_class(abs(det)).get_num().get_si());
    std::vector<IVec> reps;
    IVec mu(d.rank, 0);
    while (true) {
        bool fresh = true;
        for (auto& r : reps) {
            IVec diff(d.rank);
            for (int i = 0; i < d.rank; ++i) diff[i] = mu[i] - r[i];
            auto c = solve_in_span(basis, diff);
            if (std::all_of(c.begin(), c.end(), [](const mpq_class& x) { return x.get_den() == 1; })) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(mu);
        if (static_cast<int>(reps.size()) == n) break;
        int k = 0;
        while (k < d.rank && ++mu[k] == n) mu[k++] = 0;
        if (k == d.rank) break;
    }
    std::set<AffWElem> out;
    for (auto& r : reps) {
        AffWElem g = AffWElem::translation(r);
        int l = inv.count(g);
        while (l > 0) {
            for (auto& s : simples) {
                AffWElem h = s * g;
                int hl = inv.count(h);
                if (hl < l) {
                    g = h;
                    l = hl;
                    break;
                }
            }
        }
        out.insert(g);
    }
    return {out.begin(), out.end()};
}

CoxeterSystem ambient_system(const RootDatum& d) {
    std::vector<int> all(d.roots.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    InversionSet inv = InversionSet::of(d, all);
    std::vector<AffWElem> simples;
    std::vector<IVec> sroots;
    for (auto& a : affine_simple_reflections(d)) {
        simples.push_back(a.elem);
        sroots.push_back(d.roots[a.root_index]);
    }
    auto omega = omega_group(d, simples, inv);
    return CoxeterSystem(inv, simples, omega, sroots);
}

bool in_M(const CoxeterSystem& sys, const AffWElem& x, const AffWElem& w, const AffWElem& wp, int bound) {
    if (sys.length(w) > bound || sys.length(wp) > bound) throw BoundExceeded("in_M: length beyond bound");
    auto lw = sys.lower_interval(w);
    auto lwp = sys.lower_interval(wp);
    for (auto& u : lw)
        for (auto& v : lwp)
            if (!sys.leq(u * v, x)) return false;
    return true;
}

}  // namespace endohecke
