#pragma once

#include "endohecke/blocks.hpp"
#include "endohecke/laurent.hpp"
#include "endohecke/poly.hpp"
#include "endohecke/qlinalg.hpp"

#include <random>
#include <stdexcept>

namespace endohecke {

// Q[x_1..x_r, z], all generators in degree 2.  x_j is the j-th coordinate character, z is variable r.
// (w, lambda) acts by x -> w.x on characters and z -> z + l(lambda), l(lambda) = sum_{alpha>0} <alpha,lambda> alpha.
class PolyRing {
public:
    explicit PolyRing(RootDatum d);

    const RootDatum& datum() const { return d_; }
    int rank() const { return d_.rank; }
    int nvars() const { return d_.rank + 1; }
    int z_index() const { return d_.rank; }
    Poly x(int j) const { return Poly::var(j); }
    Poly z() const { return Poly::var(z_index()); }
    Poly linear(const IVec& mu) const;
    Poly ell(const IVec& lambda) const;
    std::vector<Poly> images(const AffWElem& g) const;
    Poly act(const AffWElem& g, const Poly& f) const { return f.substitute(images(g)); }
    // (f - s f) / alpha_s; alpha is the finite root of the reflection s.
    Poly demazure(const AffWElem& s, const IVec& alpha, const Poly& f) const;
    std::vector<std::string> names() const;

private:
    RootDatum d_;
    std::vector<IVec> pos_;
};

// RR: left-free over R~ with right actions of x_j and z.  S: left-free over R with right x_j and one Z.
enum class Level { RR, S };

// Row convention: b_i . a = sum_j A_ij b_j.  zop is the right z at RR level and Z at S level.
struct GradedBimodule {
    Level level = Level::RR;
    std::string label;
    std::vector<int> degrees;
    std::vector<PMat> right_x;
    PMat zop;

    std::size_t rank() const { return degrees.size(); }
    std::vector<const PMat*> ops() const;
};

// Rows index the source basis, columns the target basis.
struct BimoduleMap {
    PMat matrix;
    int degree = 0;
};

std::vector<std::string> validate(const PolyRing& R, const GradedBimodule& M);

GradedBimodule regular(const PolyRing& R, Level level);
GradedBimodule twisted(const PolyRing& R, const AffWElem& w, Level level);  // R~(w) or Rbar(w)
GradedBimodule bs_atom(const PolyRing& R, const AffWElem& s, const IVec& alpha);  // B_s<1>, RR level
GradedBimodule shift(const GradedBimodule& M, int k);  // M<k>: degrees d - k
GradedBimodule conv(const GradedBimodule& M, const GradedBimodule& N);
GradedBimodule ind(const PolyRing& R, const GradedBimodule& M);
GradedBimodule res(const PolyRing& R, const GradedBimodule& M);
// B_{s1} * ... * B_{sn} over S_H letters of H.
GradedBimodule bs_bimodule(const PolyRing& R, const CoxeterSystem& H, const std::vector<int>& word,
                           Level level = Level::RR);

// Right action of a polynomial: p evaluated on the operator matrices.
PMat act_poly(const GradedBimodule& M, const Poly& p);

LaurentPoly graded_rank(const GradedBimodule& M);

std::vector<PMat> hom_space(const GradedBimodule& M, const GradedBimodule& N, int degree);
std::vector<std::size_t> hom_dims(const GradedBimodule& M, const GradedBimodule& N, int lo, int hi);
// first empty string if F is a homogeneous bimodule map of the degree, else the offending entry
std::string check_map(const GradedBimodule& M, const GradedBimodule& N, const PMat& F, int degree);
// phi : M -> M', psi : N -> N'; returns phi * psi : M*N -> M'*N'.
PMat tensor_maps(const GradedBimodule& target_left, const PMat& phi, const PMat& psi);

// Fiber of M at the point (w.p, p) of the graph of w; p has rank() coordinates, plus z at RR level.
std::size_t fiber_dim(const PolyRing& R, const GradedBimodule& M, const AffWElem& w,
                      const std::vector<mpq_class>& p);
std::vector<mpq_class> random_point(const PolyRing& R, Level level, std::mt19937_64& rng);

class SupportInconsistent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
bool support_contains(const PolyRing& R, const GradedBimodule& M, const AffWElem& w, int trials,
                      std::mt19937_64& rng);

struct AdjunctionReport {
    bool unit_ok = false;
    bool counit_ok = false;
    bool triangle_left = false;   // (unit * id) then (id * counit)
    bool triangle_right = false;  // (id * unit) then (counit * id)
    PMat unit, counit;
    std::string detail;
    bool ok() const { return unit_ok && counit_ok && triangle_left && triangle_right; }
};
AdjunctionReport unit_counit_check(const PolyRing& R, const AffWElem& s, const IVec& alpha);

// B*B = B<1> + B<-1> with explicit inclusions and projections.
struct SplitReport {
    bool ok = false;
    PMat i_plus, p_plus, i_minus, p_minus;
    PMat e_plus, e_minus;
    std::string detail;
};
SplitReport split_bb(const PolyRing& R, const AffWElem& s, const IVec& alpha);

// Summand of M whose fiber over the graph of x survives, from idempotents of End^0(M).
struct Summand {
    GradedBimodule module;
    PMat idempotent;
    bool split_complete = false;
    int steps = 0;
};
Summand top_summand(const PolyRing& R, const GradedBimodule& M, const AffWElem& x, std::mt19937_64& rng,
                    int max_steps = 16);

struct ExtendedSoergel {
    GradedBimodule module;
    AffWElem x;        // left neutral factor, w = x w^beta
    AffWElem minimal;  // w^beta
    std::vector<int> word;
    bool split_complete = false;
    int generator = 0;  // rigidified generator: basis element of lowest degree
};
ExtendedSoergel extended_soergel(const BlockSystem& bs, const PolyRing& R, const AffWElem& w,
                                 const TorusCharacter& L, int bound, std::uint64_t seed = 1);

}  // namespace endohecke
