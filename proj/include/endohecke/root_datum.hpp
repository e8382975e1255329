#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace endohecke {

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;  // row-major square matrices

int dot(const IVec& a, const IVec& b);
IMat identity_matrix(int n);
IMat mat_mul(const IMat& a, const IMat& b);
IVec mat_vec(const IMat& a, const IVec& v);
IMat transpose(const IMat& a);
IMat int_inverse(const IMat& a);  // throws unless unimodular

// Rational coordinates of v in the basis `basis` (rows); empty if v is not in the span.
std::vector<mpq_class> solve_in_span(const std::vector<IVec>& basis, const IVec& v);

// Root datum in fixed dual coordinates: pairing is the dot product.
struct RootDatum {
    std::string name;
    int rank = 0;
    std::vector<IVec> roots;
    std::vector<IVec> coroots;
    std::vector<int> simple_indices;

    // filled by finalize()
    std::vector<bool> positive;
    IVec rho2_dual;  // sum of positive coroots

    void finalize();
    int root_index(const IVec& r) const;
    int coroot_index(const IVec& c) const;
    int negative_of(int i) const;
    bool is_semisimple() const;
    std::vector<mpq_class> simple_coords(const IVec& root) const;
    int height(int i) const;
    IMat reflection(int i) const;  // on cocharacters
    int coxeter_number() const;
    IVec coroot_sum() const;
};

RootDatum from_simple_system(const std::string& name, int rank, const std::vector<IVec>& simple_roots,
                             const std::vector<IVec>& simple_coroots);
RootDatum load_root_datum(const std::string& path);
RootDatum parse_root_datum(const std::string& json_text);
std::string root_datum_json(const RootDatum& d);

std::vector<std::string> validate_root_datum(const RootDatum& d);

// Finite Weyl group as matrices on cocharacters, BFS-ordered from the identity.
std::vector<IMat> weyl_group(const RootDatum& d, std::size_t safety_bound = 100000);
IMat simple_reflection(const RootDatum& d, int k);

// Finite-order character of X_*(T), L(mu) = sum values_j mu_j mod 1.
struct TorusCharacter {
    std::vector<mpq_class> values;

    static TorusCharacter trivial(int rank);
    static TorusCharacter parse(const std::string& text);
    std::string str() const;
    unsigned long order() const;
    bool is_trivial() const;
    friend bool operator==(const TorusCharacter& a, const TorusCharacter& b) { return a.values == b.values; }
    friend bool operator<(const TorusCharacter& a, const TorusCharacter& b) { return a.values < b.values; }
};

mpq_class frac_part(const mpq_class& x);
mpq_class char_eval(const TorusCharacter& L, const IVec& mu);
TorusCharacter char_act(const IMat& w, const TorusCharacter& L);

struct OrbitStabilizer {
    std::vector<TorusCharacter> orbit;
    std::vector<IMat> stabilizer;
};
OrbitStabilizer orbit_and_stabilizer(const TorusCharacter& L, const RootDatum& d);

}  // namespace endohecke
