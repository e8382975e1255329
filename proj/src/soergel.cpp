#include "endohecke/soergel.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace endohecke {

PolyRing::PolyRing(RootDatum d) : d_(std::move(d)) {
    if (d_.rank + 1 > kMaxVars) throw std::invalid_argument("rank too large for the polynomial ring");
    for (std::size_t i = 0; i < d_.roots.size(); ++i)
        if (d_.positive[i]) pos_.push_back(d_.roots[i]);
}

Poly PolyRing::linear(const IVec& mu) const {
    Poly p;
    for (int j = 0; j < rank(); ++j)
        if (mu[j] != 0) p += x(j) * mpq_class(mu[j]);
    return p;
}

Poly PolyRing::ell(const IVec& lambda) const {
    IVec acc(rank(), 0);
    for (auto& a : pos_) {
        int c = dot(a, lambda);
        for (int j = 0; j < rank(); ++j) acc[j] += c * a[j];
    }
    return linear(acc);
}

std::vector<Poly> PolyRing::images(const AffWElem& g) const {
    std::vector<Poly> im;
    for (int j = 0; j < rank(); ++j) {
        IVec e(rank(), 0);
        e[j] = 1;
        im.push_back(linear(g.act_char(e)));
    }
    im.push_back(z() + ell(g.translation_part()));
    return im;
}

Poly PolyRing::demazure(const AffWElem& s, const IVec& alpha, const Poly& f) const {
    auto q = (f - act(s, f)).divide_exact(linear(alpha));
    if (!q) throw std::logic_error("f - s f is not divisible by alpha_s");
    return *q;
}

std::vector<std::string> PolyRing::names() const {
    std::vector<std::string> n;
    for (int j = 0; j < rank(); ++j) n.push_back("x" + std::to_string(j + 1));
    n.push_back("z");
    return n;
}

std::vector<const PMat*> GradedBimodule::ops() const {
    std::vector<const PMat*> o;
    for (auto& m : right_x) o.push_back(&m);
    o.push_back(&zop);
    return o;
}

std::vector<std::string> validate(const PolyRing& R, const GradedBimodule& M) {
    std::vector<std::string> err;
    const std::size_t n = M.rank();
    if (static_cast<int>(M.right_x.size()) != R.rank()) err.push_back("wrong number of right x operators");
    auto ops = M.ops();
    for (std::size_t a = 0; a < ops.size(); ++a) {
        const PMat& A = *ops[a];
        if (A.rows() != n || A.cols() != n) {
            err.push_back("operator " + std::to_string(a) + " has the wrong shape");
            continue;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Poly& p = A.at(i, j);
                if (p.is_zero()) continue;
                if (!p.is_homogeneous() || 2 * p.degree() != 2 + M.degrees[i] - M.degrees[j])
                    err.push_back("operator " + std::to_string(a) + " entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") has the wrong degree");
                if (M.level == Level::S && p.involves(R.z_index()))
                    err.push_back("S-level operator entry involves z");
            }
    }
    if (!err.empty()) return err;
    for (std::size_t a = 0; a < ops.size(); ++a)
        for (std::size_t b = a + 1; b < ops.size(); ++b)
            if (!((*ops[a]) * (*ops[b]) == (*ops[b]) * (*ops[a])))
                err.push_back("operators " + std::to_string(a) + " and " + std::to_string(b) + " do not commute");
    return err;
}

GradedBimodule regular(const PolyRing& R, Level level) {
    GradedBimodule M;
    M.level = level;
    M.label = "R";
    M.degrees = {0};
    for (int j = 0; j < R.rank(); ++j) M.right_x.push_back(PMat::scalar(1, R.x(j)));
    M.zop = PMat::scalar(1, level == Level::RR ? R.z() : Poly());
    return M;
}

GradedBimodule twisted(const PolyRing& R, const AffWElem& w, Level level) {
    GradedBimodule M;
    M.level = level;
    M.label = "R(" + to_string(w) + ")";
    M.degrees = {0};
    auto im = R.images(w);
    for (int j = 0; j < R.rank(); ++j) M.right_x.push_back(PMat::scalar(1, im[j]));
    M.zop = PMat::scalar(1, level == Level::RR ? im[R.z_index()] : -R.ell(w.translation_part()));
    return M;
}

GradedBimodule bs_atom(const PolyRing& R, const AffWElem& s, const IVec& alpha) {
    GradedBimodule M;
    M.level = Level::RR;
    M.label = "B(" + to_string(s) + ")";
    M.degrees = {-1, 1};
    const Poly a = R.linear(alpha);
    const mpq_class half(1, 2);
    auto op = [&](const Poly& g) {
        PMat A(2, 2);
        Poly ag = a * g;
        A.at(0, 0) = (g + R.act(s, g)) * half;
        A.at(0, 1) = R.demazure(s, alpha, g) * half;
        A.at(1, 0) = (ag + R.act(s, ag)) * half;
        A.at(1, 1) = R.demazure(s, alpha, ag) * half;
        return A;
    };
    for (int j = 0; j < R.rank(); ++j) M.right_x.push_back(op(R.x(j)));
    M.zop = op(R.z());
    return M;
}

GradedBimodule shift(const GradedBimodule& M, int k) {
    GradedBimodule N = M;
    for (int& d : N.degrees) d -= k;
    N.label = M.label + "<" + std::to_string(k) + ">";
    return N;
}

PMat act_poly(const GradedBimodule& M, const Poly& p) {
    const std::size_t n = M.rank();
    auto ops = M.ops();
    const int zi = static_cast<int>(M.right_x.size());
    std::vector<std::vector<PMat>> pw(ops.size());
    auto power = [&](int v, int e) -> const PMat& {
        auto& c = pw[v];
        if (c.empty()) c.push_back(PMat::identity(n));
        while (static_cast<int>(c.size()) <= e) c.push_back(c.back() * (*ops[v]));
        return c[e];
    };
    PMat out(n, n);
    for (auto& [m, c] : p.terms()) {
        PMat t = PMat::scalar(n, Poly(c));
        for (int v = 0; v <= zi; ++v) {
            int e = mono_exp(m, v);
            if (e == 0) continue;
            if (v == zi && M.level == Level::S) throw std::invalid_argument("z has no right action at S level");
            t = t * power(v, e);
        }
        out = out + t;
    }
    return out;
}

GradedBimodule conv(const GradedBimodule& M, const GradedBimodule& N) {
    if (M.level != N.level || M.right_x.size() != N.right_x.size())
        throw std::invalid_argument("conv of incompatible bimodules");
    const std::size_t m = M.rank(), n = N.rank();
    GradedBimodule C;
    C.level = M.level;
    C.label = M.label + "*" + N.label;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < n; ++k) C.degrees.push_back(M.degrees[i] + N.degrees[k]);
    auto build = [&](const PMat& B) {
        PMat A(m * n, m * n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                if (B.at(k, l).is_zero()) continue;
                PMat E = act_poly(M, B.at(k, l));
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < m; ++j) A.at(i * n + k, j * n + l) = E.at(i, j);
            }
        return A;
    };
    for (auto& B : N.right_x) C.right_x.push_back(build(B));
    if (M.level == Level::RR) {
        C.zop = build(N.zop);
    } else {
        C.zop = build(N.zop);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < n; ++k) C.zop.at(i * n + k, j * n + k) += M.zop.at(i, j);
    }
    return C;
}

GradedBimodule ind(const PolyRing& R, const GradedBimodule& M) {
    if (M.level != Level::S) throw std::invalid_argument("ind expects an S-level module");
    GradedBimodule N = M;
    N.level = Level::RR;
    N.zop = PMat::scalar(M.rank(), R.z()) - M.zop;
    N.label = "Ind(" + M.label + ")";
    return N;
}

GradedBimodule res(const PolyRing& R, const GradedBimodule& M) {
    if (M.level != Level::RR) throw std::invalid_argument("res expects an RR-level module");
    GradedBimodule N = M;
    N.level = Level::S;
    N.zop = PMat::scalar(M.rank(), R.z()) - M.zop;
    for (std::size_t i = 0; i < N.rank(); ++i)
        for (std::size_t j = 0; j < N.rank(); ++j)
            if (N.zop.at(i, j).involves(R.z_index()) ||
                std::any_of(N.right_x.begin(), N.right_x.end(),
                            [&](const PMat& A) { return A.at(i, j).involves(R.z_index()); }))
                throw std::invalid_argument("module is not induced from S");
    N.label = "Res(" + M.label + ")";
    return N;
}

GradedBimodule bs_bimodule(const PolyRing& R, const CoxeterSystem& H, const std::vector<int>& word, Level level) {
    GradedBimodule M = regular(R, Level::RR);
    std::string label = "BS(";
    for (std::size_t k = 0; k < word.size(); ++k) {
        int s = word[k];
        if (s < 0 || s >= static_cast<int>(H.num_simples())) throw std::out_of_range("letter outside S_H");
        M = k == 0 ? bs_atom(R, H.simple(s), H.simple_root(s)) : conv(M, bs_atom(R, H.simple(s), H.simple_root(s)));
        label += (k ? "," : "") + std::to_string(s);
    }
    M.label = label + ")";
    return level == Level::S ? res(R, M) : M;
}

LaurentPoly graded_rank(const GradedBimodule& M) {
    LaurentPoly r;
    for (int d : M.degrees) r += LaurentPoly::v(d);
    return r;
}

namespace {

int ring_vars(const GradedBimodule& M) {
    return static_cast<int>(M.right_x.size()) + (M.level == Level::RR ? 1 : 0);
}

}  // namespace

std::vector<PMat> hom_space(const GradedBimodule& M, const GradedBimodule& N, int degree) {
    if (M.level != N.level) throw std::invalid_argument("hom_space between different levels");
    const std::size_t m = M.rank(), n = N.rank();
    const int nv = ring_vars(M);
    struct Unknown {
        std::size_t j, k;
        Mono mono;
    };
    std::vector<Unknown> unk;
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            int e = M.degrees[j] + degree - N.degrees[k];
            if (e < 0 || e % 2 != 0) continue;
            for (Mono mo : monomials_of_degree(nv, e / 2)) unk.push_back({j, k, mo});
        }
    if (unk.empty()) return {};
    auto mops = M.ops(), nops = N.ops();
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, Mono>, SparseRow> eqs;
    for (std::size_t a = 0; a < mops.size(); ++a) {
        const PMat& A = *mops[a];
        const PMat& B = *nops[a];
        for (std::size_t u = 0; u < unk.size(); ++u) {
            auto [j, k, mo] = unk[u];
            Poly x = Poly::monomial(1, mo);
            for (std::size_t i = 0; i < m; ++i) {
                if (A.at(i, j).is_zero()) continue;
                const Poly t = A.at(i, j) * x;
                for (auto& [mm, c] : t.terms()) eqs[{a, i, k, mm}][static_cast<int>(u)] += c;
            }
            for (std::size_t l = 0; l < n; ++l) {
                if (B.at(k, l).is_zero()) continue;
                const Poly t = x * B.at(k, l);
                for (auto& [mm, c] : t.terms()) eqs[{a, j, l, mm}][static_cast<int>(u)] -= c;
            }
        }
    }
    std::vector<SparseRow> rows;
    rows.reserve(eqs.size());
    for (auto& [key, r] : eqs) rows.push_back(std::move(r));
    std::vector<PMat> basis;
    for (auto& v : nullspace(static_cast<int>(unk.size()), rows)) {
        PMat F(m, n);
        for (auto& [u, c] : v) F.at(unk[u].j, unk[u].k) += Poly::monomial(c, unk[u].mono);
        basis.push_back(std::move(F));
    }
    return basis;
}

std::vector<std::size_t> hom_dims(const GradedBimodule& M, const GradedBimodule& N, int lo, int hi) {
    std::vector<std::size_t> d;
    for (int k = lo; k <= hi; ++k) d.push_back(hom_space(M, N, k).size());
    return d;
}

std::string check_map(const GradedBimodule& M, const GradedBimodule& N, const PMat& F, int degree) {
    if (F.rows() != M.rank() || F.cols() != N.rank()) return "map has the wrong shape";
    for (std::size_t i = 0; i < F.rows(); ++i)
        for (std::size_t k = 0; k < F.cols(); ++k) {
            const Poly& p = F.at(i, k);
            if (p.is_zero()) continue;
            if (!p.is_homogeneous() || 2 * p.degree() != M.degrees[i] + degree - N.degrees[k])
                return "entry (" + std::to_string(i) + "," + std::to_string(k) + ") has the wrong degree";
        }
    auto mops = M.ops(), nops = N.ops();
    for (std::size_t a = 0; a < mops.size(); ++a) {
        PMat D = (*mops[a]) * F - F * (*nops[a]);
        for (std::size_t i = 0; i < D.rows(); ++i)
            for (std::size_t k = 0; k < D.cols(); ++k)
                if (!D.at(i, k).is_zero()) {
                    std::ostringstream os;
                    os << "operator " << a << " fails to intertwine at (" << i << "," << k
                       << "): " << D.at(i, k).str();
                    return os.str();
                }
    }
    return "";
}

PMat tensor_maps(const GradedBimodule& target_left, const PMat& phi, const PMat& psi) {
    const std::size_t m = phi.rows(), mp = phi.cols(), n = psi.rows(), np = psi.cols();
    PMat T(m * n, mp * np);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < np; ++l) {
            if (psi.at(k, l).is_zero()) continue;
            PMat E = phi * act_poly(target_left, psi.at(k, l));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < mp; ++j) T.at(i * n + k, j * np + l) = E.at(i, j);
        }
    return T;
}

namespace {

// Stacked rows of Op_a(p) - c_a I for the graph of w.
QMat fiber_relations(const PolyRing& R, const GradedBimodule& M, const AffWElem& w, const std::vector<mpq_class>& p) {
    auto im = R.images(w);
    std::vector<mpq_class> c;
    for (int j = 0; j < R.rank(); ++j) c.push_back(im[j].eval(p));
    c.push_back(M.level == Level::RR ? im[R.z_index()].eval(p) : (-R.ell(w.translation_part())).eval(p));
    QMat rows;
    auto ops = M.ops();
    for (std::size_t a = 0; a < ops.size(); ++a) {
        QMat E = ops[a]->eval(p);
        for (std::size_t i = 0; i < E.size(); ++i) {
            E[i][i] -= c[a];
            rows.push_back(std::move(E[i]));
        }
    }
    return rows;
}

}  // namespace

std::size_t fiber_dim(const PolyRing& R, const GradedBimodule& M, const AffWElem& w, const std::vector<mpq_class>& p) {
    return M.rank() - static_cast<std::size_t>(rank(fiber_relations(R, M, w, p)));
}

std::vector<mpq_class> random_point(const PolyRing& R, Level level, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-1000, 1000);
    std::vector<mpq_class> p;
    int n = level == Level::RR ? R.nvars() : R.rank();
    for (int i = 0; i < n; ++i) p.emplace_back(dist(rng));
    return p;
}

bool support_contains(const PolyRing& R, const GradedBimodule& M, const AffWElem& w, int trials, std::mt19937_64& rng) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    int yes = 0;
    for (int t = 0; t < trials; ++t)
        if (fiber_dim(R, M, w, random_point(R, M.level, rng)) > 0) ++yes;
    if (2 * yes == trials) throw SupportInconsistent("support trials split evenly; increase trials");
    return 2 * yes > trials;
}

namespace {

std::optional<mpq_class> scalar_of(const PMat& F) {
    if (F.rows() != F.cols() || F.rows() == 0) return std::nullopt;
    mpq_class c = F.at(0, 0).constant_term();
    if (!(F == PMat::scalar(F.rows(), Poly(c)))) return std::nullopt;
    return c;
}

std::string first_mismatch(const PMat& A, const PMat& B) {
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!(A.at(i, j) == B.at(i, j)))
                return "(" + std::to_string(i) + "," + std::to_string(j) + "): " + A.at(i, j).str() + " vs " +
                       B.at(i, j).str();
    return "";
}

}  // namespace

AdjunctionReport unit_counit_check(const PolyRing& R, const AffWElem& s, const IVec& alpha) {
    AdjunctionReport rep;
    GradedBimodule B = bs_atom(R, s, alpha), BB = conv(B, B), Rg = regular(R, Level::RR);
    const Poly a = R.linear(alpha);
    rep.unit = PMat(1, 4);
    rep.unit.at(0, 0) = a;
    rep.unit.at(0, 1) = Poly(1);
    rep.counit = PMat(4, 1);
    rep.counit.at(2, 0) = Poly(1);
    rep.counit.at(3, 0) = a;
    std::string e1 = check_map(Rg, BB, rep.unit, 0), e2 = check_map(BB, Rg, rep.counit, 0);
    rep.unit_ok = e1.empty();
    rep.counit_ok = e2.empty();
    std::ostringstream det;
    if (!e1.empty()) det << "unit: " << e1 << "; ";
    if (!e2.empty()) det << "counit: " << e2 << "; ";
    if (!(conv(BB, B).right_x == conv(B, BB).right_x) || !(conv(BB, B).zop == conv(B, BB).zop)) {
        det << "B*(B*B) and (B*B)*B differ on the shared basis";
        rep.detail = det.str();
        return rep;
    }
    const PMat I2 = PMat::identity(2);
    PMat left = tensor_maps(BB, rep.unit, I2) * tensor_maps(B, I2, rep.counit);
    PMat right = tensor_maps(B, I2, rep.unit) * tensor_maps(Rg, rep.counit, I2);
    rep.triangle_left = left == I2;
    rep.triangle_right = right == I2;
    if (!rep.triangle_left) det << "left triangle " << first_mismatch(left, I2) << "; ";
    if (!rep.triangle_right) det << "right triangle " << first_mismatch(right, I2) << "; ";
    rep.detail = det.str();
    return rep;
}

namespace {

// From candidate inclusions and projections, a pair with p o i = id (composite = I * P).
bool pick_pair(const std::vector<PMat>& incl, const std::vector<PMat>& proj, PMat& i_out, PMat& p_out) {
    for (auto& i : incl)
        for (auto& p : proj) {
            auto c = scalar_of(i * p);
            if (c && *c != 0) {
                i_out = i;
                p_out = p.scaled(Poly(1 / *c));
                return true;
            }
        }
    return false;
}

}  // namespace

SplitReport split_bb(const PolyRing& R, const AffWElem& s, const IVec& alpha) {
    SplitReport rep;
    GradedBimodule B = bs_atom(R, s, alpha), BB = conv(B, B);
    GradedBimodule Bp = shift(B, 1), Bm = shift(B, -1);
    std::ostringstream det;
    if (!pick_pair(hom_space(Bp, BB, 0), hom_space(BB, Bp, 0), rep.i_plus, rep.p_plus)) {
        rep.detail = "no splitting of B<1> found";
        return rep;
    }
    rep.e_plus = rep.p_plus * rep.i_plus;
    const PMat I4 = PMat::identity(4);
    PMat e2 = I4 - rep.e_plus;
    std::vector<PMat> incl, proj;
    for (auto& i : hom_space(Bm, BB, 0)) incl.push_back(i * e2);
    for (auto& p : hom_space(BB, Bm, 0)) proj.push_back(e2 * p);
    if (!pick_pair(incl, proj, rep.i_minus, rep.p_minus)) {
        rep.detail = "no splitting of B<-1> found";
        return rep;
    }
    rep.e_minus = rep.p_minus * rep.i_minus;
    const PMat I2 = PMat::identity(2);
    bool ok = true;
    auto need = [&](bool c, const char* what) {
        if (!c) {
            ok = false;
            det << what << "; ";
        }
    };
    need(check_map(Bp, BB, rep.i_plus, 0).empty() && check_map(BB, Bp, rep.p_plus, 0).empty(),
         "B<1> maps are not bimodule maps");
    need(check_map(Bm, BB, rep.i_minus, 0).empty() && check_map(BB, Bm, rep.p_minus, 0).empty(),
         "B<-1> maps are not bimodule maps");
    need(rep.i_plus * rep.p_plus == I2, "p+ i+ != id");
    need(rep.i_minus * rep.p_minus == I2, "p- i- != id");
    need((rep.i_plus * rep.p_minus).is_zero() && (rep.i_minus * rep.p_plus).is_zero(), "cross terms nonzero");
    need(rep.e_plus + rep.e_minus == I4, "idempotents do not sum to id");
    need(rep.e_plus * rep.e_plus == rep.e_plus && rep.e_minus * rep.e_minus == rep.e_minus, "not idempotent");
    rep.ok = ok;
    rep.detail = det.str();
    return rep;
}

namespace {

using QPoly = std::vector<mpq_class>;  // coefficients, low degree first

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    QPoly q;
    qtrim(a);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t sh = a.size() - b.size();
        mpq_class c = a.back() / b.back();
        q[sh] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + sh] -= c * b[i];
        qtrim(a);
    }
    qtrim(q);
    return {q, a};
}

// v with u a + v b = 1 for coprime a, b.
QPoly bezout_second(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b, t0 = {}, t1 = {mpq_class(1)};
    while (!r1.empty()) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly t = qsub(t0, qmul(q, t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    if (r0.size() != 1) throw std::logic_error("polynomials are not coprime");
    for (auto& c : t0) c /= r0[0];
    return t0;
}

PMat eval_at(const QPoly& p, const PMat& c, const PMat& unit) {
    PMat acc(unit.rows(), unit.cols()), pw = unit;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0) acc = acc + pw.scaled(Poly(p[i]));
        pw = pw * c;
    }
    return acc;
}

// Coordinates of polynomial matrices in a shared monomial basis.
class Vectorizer {
public:
    SparseRow operator()(const PMat& F) {
        SparseRow r;
        for (std::size_t i = 0; i < F.rows(); ++i)
            for (std::size_t j = 0; j < F.cols(); ++j)
                for (auto& [m, c] : F.at(i, j).terms()) {
                    auto key = std::make_tuple(i, j, m);
                    auto [it, fresh] = idx_.try_emplace(key, static_cast<int>(idx_.size()));
                    r[it->second] = c;
                }
        return r;
    }

private:
    std::map<std::tuple<std::size_t, std::size_t, Mono>, int> idx_;
};

// Greedy independent subset.
std::vector<PMat> independent(const std::vector<PMat>& mats) {
    Vectorizer vec;
    std::map<int, SparseRow> piv;
    std::vector<PMat> out;
    for (auto& F : mats) {
        SparseRow r = vec(F);
        while (!r.empty()) {
            auto [c, x] = *r.begin();
            auto p = piv.find(c);
            if (p == piv.end()) break;
            mpq_class f = x;
            for (auto& [cc, y] : p->second) {
                auto [it, fresh] = r.try_emplace(cc, 0);
                it->second -= f * y;
                if (it->second == 0) r.erase(it);
            }
        }
        if (r.empty()) continue;
        mpq_class inv = 1 / r.begin()->second;
        for (auto& [cc, y] : r) y *= inv;
        piv.emplace(r.begin()->first, std::move(r));
        out.push_back(F);
    }
    return out;
}

// Minimal polynomial of c in the algebra with unit `unit`.
QPoly min_poly(const PMat& c, const PMat& unit) {
    std::vector<PMat> pw{unit};
    for (int k = 1; k < 64; ++k) {
        pw.push_back(pw.back() * c);
        Vectorizer vec;
        std::vector<SparseRow> cols;
        for (auto& F : pw) cols.push_back(vec(F));
        std::map<int, SparseRow> rows;
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (auto& [coord, x] : cols[i]) rows[coord][static_cast<int>(i)] = x;
        std::vector<SparseRow> eq;
        for (auto& [coord, r] : rows) eq.push_back(r);
        auto ns = nullspace(static_cast<int>(pw.size()), eq);
        if (ns.empty()) continue;
        QPoly m(pw.size(), 0);
        for (auto& [i, x] : ns[0]) m[i] = x;
        qtrim(m);
        for (auto& x : m) x /= m.back();
        return m;
    }
    throw std::logic_error("minimal polynomial degree too large");
}

bool nilpotent(const PMat& c) {
    PMat p = c;
    for (std::size_t k = 1; k < c.rows(); ++k) p = p * c;
    return p.is_zero();
}

std::vector<int> iota_vec(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
    return v;
}

GradedBimodule image_module(const GradedBimodule& M, const PMat& F) {
    QMat F0(F.rows(), std::vector<mpq_class>(F.cols()));
    for (std::size_t i = 0; i < F.rows(); ++i)
        for (std::size_t j = 0; j < F.cols(); ++j) F0[i][j] = F.at(i, j).constant_term();
    auto [P, Q] = pivots(F0);
    const std::size_t r = P.size();
    const std::vector<int> all = iota_vec(F.cols()), first = iota_vec(r);
    PMat G = F.submatrix(P, Q);
    QMat G0(r, std::vector<mpq_class>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) G0[i][j] = G.at(i, j).constant_term();
    QMat G0i = inverse(G0);
    PMat Ginv0(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) Ginv0.at(i, j) = Poly(G0i[i][j]);
    // G = G0 + N with G0^{-1} N nilpotent, so G^{-1} = sum_k (-G0^{-1} N)^k G0^{-1}.
    PMat Npart(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) Npart.at(i, j) = G.at(i, j) - Poly(G0[i][j]);
    PMat step = (Ginv0 * Npart).scaled(Poly(-1));
    PMat Ginv = Ginv0, term = Ginv0;
    for (std::size_t k = 0; k <= r; ++k) {
        term = step * term;
        if (term.is_zero()) break;
        Ginv = Ginv + term;
    }
    if (!(G * Ginv == PMat::identity(r))) throw std::logic_error("image basis matrix is not invertible");
    PMat rowsP = F.submatrix(P, all);
    PMat coords = F.submatrix(iota_vec(F.rows()), Q) * Ginv;
    if (!(coords * rowsP == F)) throw std::logic_error("idempotent image is not spanned by the chosen rows");
    GradedBimodule N;
    N.level = M.level;
    N.label = "summand(" + M.label + ")";
    for (int p : P) N.degrees.push_back(M.degrees[p]);
    auto proj = [&](const PMat& A) { return (A.submatrix(P, all) * F).submatrix(first, Q) * Ginv; };
    for (auto& A : M.right_x) N.right_x.push_back(proj(A));
    N.zop = proj(M.zop);
    return N;
}

}  // namespace

Summand top_summand(const PolyRing& R, const GradedBimodule& M, const AffWElem& x, std::mt19937_64& rng,
                    int max_steps) {
    Summand out;
    const std::size_t n = M.rank();
    out.module = M;
    out.idempotent = PMat::identity(n);
    auto pt = random_point(R, M.level, rng);
    QMat rel = fiber_relations(R, M, x, pt);
    std::vector<SparseRow> eq;
    for (auto& row : rel) {
        SparseRow r;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) r[static_cast<int>(j)] = row[j];
        eq.push_back(r);
    }
    auto ker = nullspace(static_cast<int>(n), eq);
    if (ker.size() != 1) return out;  // fiber over the graph of x is not a line
    std::vector<mpq_class> y(n, 0);
    for (auto& [i, c] : ker[0]) y[i] = c;
    std::size_t t = 0;
    while (y[t] == 0) ++t;
    auto chi = [&](const PMat& F) {
        QMat E = F.eval(pt);
        mpq_class s = 0;
        for (std::size_t j = 0; j < n; ++j) s += E[t][j] * y[j];
        return mpq_class(s / y[t]);
    };
    const std::vector<PMat> E = hom_space(M, M, 0);
    PMat f = PMat::identity(n);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int step = 0; step <= max_steps; ++step) {
        std::vector<PMat> corner;
        for (auto& phi : E) corner.push_back(f * phi * f);
        corner = independent(corner);
        std::vector<PMat> kerchi;
        for (auto& a : corner) kerchi.push_back(a - f.scaled(Poly(chi(a))));
        kerchi = independent(kerchi);
        std::optional<PMat> c;
        for (int attempt = 0; attempt < 3 && !c; ++attempt) {
            PMat r(n, n);
            for (auto& k : kerchi) r = r + k.scaled(Poly(mpq_class(coef(rng))));
            if (!nilpotent(r)) c = r;
        }
        for (std::size_t i = 0; i < kerchi.size() && !c; ++i)
            if (!nilpotent(kerchi[i])) c = kerchi[i];
        if (!c) {
            out.idempotent = f;
            out.module = image_module(M, f);
            out.split_complete = validate(R, out.module).empty();
            out.steps = step;
            return out;
        }
        QPoly m = min_poly(*c, f);
        std::size_t a = 0;
        while (m[a] == 0) ++a;
        QPoly g(m.begin() + static_cast<long>(a), m.end());
        QPoly ta(a + 1, 0);
        ta[a] = 1;
        QPoly v = bezout_second(ta, g);
        f = eval_at(qmul(v, g), *c, f);
        if (!(f * f == f)) throw std::logic_error("split idempotent is not idempotent");
    }
    return out;
}

ExtendedSoergel extended_soergel(const BlockSystem& bs, const PolyRing& R, const AffWElem& w,
                                 const TorusCharacter& L, int bound, std::uint64_t seed) {
    ExtendedSoergel es;
    if (bs.ambient().length(w) > bound + 64) throw BoundExceeded("element far beyond bound");
    const CoxeterSystem& HL = bs.neutral(L);
    if (HL.length(w) > bound) throw BoundExceeded("l_beta exceeds bound");
    es.minimal = bs.key(w, L);
    es.x = w * es.minimal.inverse();
    const TorusCharacter Lp = act_on_char(w, L);
    const CoxeterSystem& H = bs.neutral(Lp);
    Word wd = H.reduced_word(es.x);
    if (!wd.omega.is_identity()) throw std::logic_error("left factor is not in the neutral group");
    es.word = wd.letters;
    GradedBimodule top;
    if (es.word.empty()) {
        top = regular(R, Level::RR);
        es.split_complete = true;
    } else {
        std::mt19937_64 rng(seed);
        GradedBimodule BS = bs_bimodule(R, H, es.word);
        Summand s = top_summand(R, BS, es.x, rng);
        top = s.module;
        es.split_complete = s.split_complete;
    }
    es.module = conv(top, twisted(R, es.minimal, Level::RR));
    es.module.label = "S(" + to_string(w) + ")";
    es.generator = static_cast<int>(std::min_element(es.module.degrees.begin(), es.module.degrees.end()) -
                                    es.module.degrees.begin());
    return es;
}

}  // namespace endohecke
