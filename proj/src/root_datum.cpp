#include "endohecke/root_datum.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace endohecke {

int dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in pairing");
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IMat identity_matrix(int n) {
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat mat_mul(const IMat& a, const IMat& b) {
    const std::size_t n = a.size();
    IMat c(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

IVec mat_vec(const IMat& a, const IVec& v) {
    IVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
    return r;
}

IMat transpose(const IMat& a) {
    const std::size_t n = a.size();
    IMat t(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
    return t;
}

IMat int_inverse(const IMat& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw std::invalid_argument("singular matrix");
        std::swap(m[p], m[c]);
        mpq_class piv = m[c][c];
        for (auto& x : m[c]) x /= piv;
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            mpq_class f = m[r][c];
            for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    IMat inv(n, IVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const mpq_class& x = m[i][n + j];
            if (x.get_den() != 1) throw std::invalid_argument("matrix is not unimodular");
            inv[i][j] = static_cast<int>(x.get_num().get_si());
        }
    return inv;
}

std::vector<mpq_class> solve_in_span(const std::vector<IVec>& basis, const IVec& v) {
    const int k = static_cast<int>(basis.size());
    const int r = static_cast<int>(v.size());
    std::vector<std::vector<mpq_class>> m(r, std::vector<mpq_class>(k + 1));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = basis[j][i];
        m[i][k] = v[i];
    }
    std::vector<int> pivcol;
    int row = 0;
    for (int c = 0; c < k && row < r; ++c) {
        int p = row;
        while (p < r && m[p][c] == 0) ++p;
        if (p == r) continue;
        std::swap(m[p], m[row]);
        mpq_class piv = m[row][c];
        for (auto& x : m[row]) x /= piv;
        for (int i = 0; i < r; ++i) {
            if (i == row || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (int j = 0; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivcol.push_back(c);
        ++row;
    }
    for (int i = row; i < r; ++i)
        if (m[i][k] != 0) return {};
    std::vector<mpq_class> sol(k, 0);
    for (int i = 0; i < row; ++i) sol[pivcol[i]] = m[i][k];
    if (sol.empty()) sol.push_back(0);  // v = 0 in an empty span
    return sol;
}

namespace {

IVec reflect_char(const IVec& mu, const IVec& alpha, const IVec& alpha_v) {
    int c = dot(mu, alpha_v);
    IVec r = mu;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * alpha[i];
    return r;
}

IVec reflect_cochar(const IVec& v, const IVec& alpha, const IVec& alpha_v) {
    int c = dot(alpha, v);
    IVec r = v;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * alpha_v[i];
    return r;
}

bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

}  // namespace

void RootDatum::finalize() {
    positive.assign(roots.size(), false);
    std::vector<IVec> simples;
    for (int i : simple_indices) simples.push_back(roots[i]);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        auto c = simples.empty() ? std::vector<mpq_class>{} : solve_in_span(simples, roots[i]);
        bool pos = !c.empty() && std::all_of(c.begin(), c.end(), [](const mpq_class& x) { return x >= 0; });
        positive[i] = pos;
    }
    rho2_dual.assign(rank, 0);
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (positive[i])
            for (int j = 0; j < rank; ++j) rho2_dual[j] += coroots[i][j];
}

int RootDatum::root_index(const IVec& r) const {
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == r) return static_cast<int>(i);
    return -1;
}

int RootDatum::coroot_index(const IVec& c) const {
    for (std::size_t i = 0; i < coroots.size(); ++i)
        if (coroots[i] == c) return static_cast<int>(i);
    return -1;
}

int RootDatum::negative_of(int i) const {
    IVec n = roots[i];
    for (auto& x : n) x = -x;
    return root_index(n);
}

bool RootDatum::is_semisimple() const { return static_cast<int>(simple_indices.size()) == rank; }

std::vector<mpq_class> RootDatum::simple_coords(const IVec& root) const {
    std::vector<IVec> simples;
    for (int i : simple_indices) simples.push_back(roots[i]);
    return solve_in_span(simples, root);
}

int RootDatum::height(int i) const {
    auto c = simple_coords(roots[i]);
    mpq_class h = 0;
    for (auto& x : c) h += x;
    return static_cast<int>(h.get_num().get_si());
}

IMat RootDatum::reflection(int i) const {
    IMat m = identity_matrix(rank);
    for (int a = 0; a < rank; ++a)
        for (int b = 0; b < rank; ++b) m[a][b] -= coroots[i][a] * roots[i][b];
    return m;
}

int RootDatum::coxeter_number() const {
    if (simple_indices.empty()) return 0;
    // height of the highest root plus one; the maximum over components when reducible
    int best = 0;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (positive[i]) best = std::max(best, height(static_cast<int>(i)) + 1);
    return best;
}

IVec RootDatum::coroot_sum() const { return rho2_dual; }

RootDatum from_simple_system(const std::string& name, int rank, const std::vector<IVec>& simple_roots,
                             const std::vector<IVec>& simple_coroots) {
    if (simple_roots.size() != simple_coroots.size())
        throw std::invalid_argument("simple roots and coroots differ in number");
    for (auto& v : simple_roots)
        if (static_cast<int>(v.size()) != rank) throw std::invalid_argument("root of wrong dimension");
    for (auto& v : simple_coroots)
        if (static_cast<int>(v.size()) != rank) throw std::invalid_argument("coroot of wrong dimension");

    RootDatum d;
    d.name = name;
    d.rank = rank;
    std::set<IVec> seen;
    std::deque<std::size_t> queue;
    auto add = [&](const IVec& r, const IVec& c) {
        if (seen.count(r)) return;
        seen.insert(r);
        d.roots.push_back(r);
        d.coroots.push_back(c);
        queue.push_back(d.roots.size() - 1);
    };
    for (std::size_t i = 0; i < simple_roots.size(); ++i) add(simple_roots[i], simple_coroots[i]);
    for (std::size_t i = 0; i < simple_roots.size(); ++i) d.simple_indices.push_back(static_cast<int>(i));
    // Closure only makes sense for a genuine Cartan matrix; otherwise keep the simple data so that
    // validation can report it.
    bool cartan_ok = true;
    for (std::size_t i = 0; i < simple_roots.size(); ++i)
        for (std::size_t j = 0; j < simple_roots.size(); ++j) {
            int a = dot(simple_roots[i], simple_coroots[j]);
            int b = dot(simple_roots[j], simple_coroots[i]);
            if (i == j ? a != 2 : (a > 0 || (a == 0) != (b == 0))) cartan_ok = false;
        }
    const std::size_t cap = cartan_ok ? 600 : 0;
    while (!queue.empty() && d.roots.size() < cap) {
        std::size_t k = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < simple_roots.size(); ++i) {
            IVec r = reflect_char(d.roots[k], simple_roots[i], simple_coroots[i]);
            IVec c = reflect_cochar(d.coroots[k], simple_roots[i], simple_coroots[i]);
            add(r, c);
        }
    }
    d.finalize();
    return d;
}

RootDatum parse_root_datum(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    return from_simple_system(j.at("name").get<std::string>(), j.at("rank").get<int>(),
                              j.at("simple_roots").get<std::vector<IVec>>(),
                              j.at("simple_coroots").get<std::vector<IVec>>());
}

RootDatum load_root_datum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open datum file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_root_datum(ss.str());
}

std::string root_datum_json(const RootDatum& d) {
    nlohmann::json j;
    j["name"] = d.name;
    j["rank"] = d.rank;
    std::vector<IVec> sr, sc;
    for (int i : d.simple_indices) {
        sr.push_back(d.roots[i]);
        sc.push_back(d.coroots[i]);
    }
    j["simple_roots"] = sr;
    j["simple_coroots"] = sc;
    j["roots"] = d.roots;
    j["coroots"] = d.coroots;
    return j.dump();
}

std::vector<std::string> validate_root_datum(const RootDatum& d) {
    std::vector<std::string> report;
    auto say = [&](const std::string& s) { report.push_back(s); };
    if (d.rank <= 0) say("rank must be positive");
    if (d.roots.size() != d.coroots.size()) {
        say("roots and coroots are not in bijection");
        return report;
    }
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        if (static_cast<int>(d.roots[i].size()) != d.rank || static_cast<int>(d.coroots[i].size()) != d.rank) {
            say("root " + std::to_string(i) + " has wrong dimension");
            return report;
        }
        if (is_zero(d.roots[i])) say("root " + std::to_string(i) + " is zero");
    }
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        int p = dot(d.roots[i], d.coroots[i]);
        if (p != 2)
            say("pairing <alpha_" + std::to_string(i) + ", alpha_" + std::to_string(i) + "^v> = " + std::to_string(p) +
                " != 2");
    }
    // Cartan integrality holds automatically for integer vectors under the dot pairing.
    std::map<IVec, int> ridx, cidx;
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        ridx.emplace(d.roots[i], static_cast<int>(i));
        cidx.emplace(d.coroots[i], static_cast<int>(i));
    }
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        for (std::size_t j = 0; j < d.roots.size(); ++j) {
            auto a = ridx.find(reflect_char(d.roots[j], d.roots[i], d.coroots[i]));
            auto b = cidx.find(reflect_cochar(d.coroots[j], d.roots[i], d.coroots[i]));
            if (a == ridx.end() || b == cidx.end() || a->second != b->second) {
                say("reflection s_" + std::to_string(i) + " does not permute roots/coroots compatibly at index " +
                    std::to_string(j));
                goto permutation_done;
            }
        }
    }
permutation_done:
    {
        std::vector<IVec> simples;
        for (int i : d.simple_indices) {
            if (i < 0 || i >= static_cast<int>(d.roots.size())) {
                say("simple index out of range");
                return report;
            }
            simples.push_back(d.roots[i]);
        }
        for (std::size_t k = 0; k < simples.size(); ++k) {
            std::vector<IVec> others;
            for (std::size_t m = 0; m < simples.size(); ++m)
                if (m != k) others.push_back(simples[m]);
            if (!others.empty() && !solve_in_span(others, simples[k]).empty())
                say("simple roots are linearly dependent at simple " + std::to_string(k));
        }
        for (std::size_t i = 0; i < d.roots.size(); ++i) {
            auto c = simples.empty() ? std::vector<mpq_class>{} : solve_in_span(simples, d.roots[i]);
            if (c.empty()) {
                say("root " + std::to_string(i) + " is not in the span of the simple roots");
                continue;
            }
            bool integral = std::all_of(c.begin(), c.end(), [](const mpq_class& x) { return x.get_den() == 1; });
            bool nonneg = std::all_of(c.begin(), c.end(), [](const mpq_class& x) { return x >= 0; });
            bool nonpos = std::all_of(c.begin(), c.end(), [](const mpq_class& x) { return x <= 0; });
            if (!integral || !(nonneg || nonpos))
                say("root " + std::to_string(i) + " is not a sign-coherent integer combination of simple roots");
        }
    }
    return report;
}

IMat simple_reflection(const RootDatum& d, int k) { return d.reflection(d.simple_indices.at(k)); }

std::vector<IMat> weyl_group(const RootDatum& d, std::size_t safety_bound) {
    std::vector<IMat> gens;
    for (std::size_t k = 0; k < d.simple_indices.size(); ++k) gens.push_back(simple_reflection(d, static_cast<int>(k)));
    std::vector<IMat> elems{identity_matrix(d.rank)};
    std::set<IMat> seen(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (auto& g : gens) {
            IMat p = mat_mul(elems[i], g);
            if (seen.insert(p).second) {
                elems.push_back(p);
                if (elems.size() > safety_bound)
                    throw std::runtime_error("Weyl group generation exceeded the safety bound: invalid datum");
            }
        }
    }
    return elems;
}

mpq_class frac_part(const mpq_class& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    mpq_class r = x - mpq_class(fl);
    r.canonicalize();
    return r;
}

TorusCharacter TorusCharacter::trivial(int rank) {
    TorusCharacter L;
    L.values.assign(rank, 0);
    return L;
}

TorusCharacter TorusCharacter::parse(const std::string& text) {
    TorusCharacter L;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) throw std::invalid_argument("empty component in character '" + text + "'");
        mpq_class q;
        if (q.set_str(tok, 10) != 0) throw std::invalid_argument("bad rational '" + tok + "'");
        q.canonicalize();
        L.values.push_back(frac_part(q));
    }
    if (L.values.empty()) throw std::invalid_argument("empty character");
    return L;
}

std::string TorusCharacter::str() const {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += values[i].get_str();
    }
    return s;
}

unsigned long TorusCharacter::order() const {
    mpz_class l = 1;
    for (auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l.get_ui();
}

bool TorusCharacter::is_trivial() const {
    return std::all_of(values.begin(), values.end(), [](const mpq_class& x) { return x == 0; });
}

mpq_class char_eval(const TorusCharacter& L, const IVec& mu) {
    if (L.values.size() != mu.size()) throw std::invalid_argument("dimension mismatch in char_eval");
    mpq_class s = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) s += L.values[i] * mu[i];
    return frac_part(s);
}

TorusCharacter char_act(const IMat& w, const TorusCharacter& L) {
    // (wL)(mu) = L(w^{-1} mu), so the new values are (w^{-1})^T applied to the old ones.
    IMat winv = int_inverse(w);
    TorusCharacter r;
    const std::size_t n = L.values.size();
    r.values.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (std::size_t i = 0; i < n; ++i) s += L.values[i] * winv[i][j];
        r.values[j] = frac_part(s);
    }
    return r;
}

OrbitStabilizer orbit_and_stabilizer(const TorusCharacter& L, const RootDatum& d) {
    OrbitStabilizer out;
    std::set<TorusCharacter> seen;
    for (auto& w : weyl_group(d)) {
        TorusCharacter wl = char_act(w, L);
        if (wl == L) out.stabilizer.push_back(w);
        if (seen.insert(wl).second) out.orbit.push_back(wl);
    }
    return out;
}

}  // namespace endohecke
