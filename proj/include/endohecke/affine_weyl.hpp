#pragma once

#include "endohecke/root_datum.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace endohecke {

inline constexpr int kMaxRank = 4;

// (w, lambda) in W x| X_*(T); acts on V = X_* (x) Q by v -> w v + lambda.
struct AffWElem {
    int rank = 0;
    std::array<int, kMaxRank * kMaxRank> w{};
    std::array<int, kMaxRank * kMaxRank> winv{};
    std::array<int, kMaxRank> lam{};

    static AffWElem identity(int rank);
    static AffWElem make(const IMat& w, const IVec& lambda);
    static AffWElem translation(const IVec& lambda);
    static AffWElem finite(const IMat& w) { return make(w, IVec(w.size(), 0)); }

    int at(int i, int j) const { return w[i * kMaxRank + j]; }
    int inv_at(int i, int j) const { return winv[i * kMaxRank + j]; }
    IMat finite_part() const;
    IVec translation_part() const;
    bool is_identity() const;

    AffWElem operator*(const AffWElem& o) const;
    AffWElem inverse() const;
    IVec act(const IVec& v) const;          // on cocharacters, affine
    IVec act_linear(const IVec& v) const;   // finite part on cocharacters
    IVec act_char(const IVec& mu) const;    // finite part on characters

    friend bool operator==(const AffWElem& a, const AffWElem& b) {
        return a.rank == b.rank && a.w == b.w && a.lam == b.lam;
    }
    friend std::strong_ordering operator<=>(const AffWElem& a, const AffWElem& b) {
        if (auto c = a.rank <=> b.rank; c != 0) return c;
        if (auto c = a.w <=> b.w; c != 0) return c;
        return a.lam <=> b.lam;
    }
};

struct AffWElemHash {
    std::size_t operator()(const AffWElem& g) const noexcept;
};

std::string to_string(const AffWElem& g);

// Affine function v -> <root, v> + level.
struct AffRoot {
    IVec root;
    int level = 0;
    friend bool operator==(const AffRoot&, const AffRoot&) = default;
};

AffRoot aff_act(const AffWElem& g, const AffRoot& a);
bool aff_positive(const RootDatum& d, const AffRoot& a);

// Root set over which inversions are counted; signs always come from the ambient system.
struct InversionSet {
    int rank = 0;
    std::vector<std::array<int, kMaxRank>> roots;
    std::vector<char> positive;
    std::array<int, kMaxRank> regular{};  // strictly dominant cocharacter of the ambient system

    static InversionSet of(const RootDatum& ambient, const std::vector<int>& root_indices);
    int count(const AffWElem& g) const;
};

struct Word {
    std::vector<int> letters;
    AffWElem omega;
};

// Coxeter system realized inside W~ by affine reflections, with length = inversion count.
class CoxeterSystem {
public:
    CoxeterSystem() = default;
    CoxeterSystem(InversionSet inv, std::vector<AffWElem> simples, std::vector<AffWElem> omega,
                  std::vector<IVec> simple_roots);

    int rank() const { return inv_.rank; }
    std::size_t num_simples() const { return simples_.size(); }
    const AffWElem& simple(std::size_t i) const { return simples_[i]; }
    const std::vector<AffWElem>& simples() const { return simples_; }
    const std::vector<AffWElem>& omega() const { return omega_; }
    const IVec& simple_root(std::size_t i) const { return simple_roots_[i]; }  // finite root of s_i
    const InversionSet& inversions() const { return inv_; }

    int length(const AffWElem& g) const { return inv_.count(g); }
    int simple_index(const AffWElem& g) const;  // -1 if not a simple reflection
    std::vector<int> left_descents(const AffWElem& g) const;
    std::vector<int> right_descents(const AffWElem& g) const;
    Word reduced_word(const AffWElem& g) const;
    AffWElem evaluate(const std::vector<int>& letters) const;
    AffWElem evaluate(const Word& w) const;
    AffWElem omega_part(const AffWElem& g) const { return reduced_word(g).omega; }
    bool leq(const AffWElem& u, const AffWElem& v) const;  // Bruhat order
    bool covers(const AffWElem& u, const AffWElem& v) const { return length(v) == length(u) + 1 && leq(u, v); }
    std::vector<AffWElem> lower_interval(const AffWElem& g) const;
    // all elements of length <= bound, grouped by length
    std::vector<std::vector<AffWElem>> enumerate(int bound) const;
    std::vector<AffWElem> elements_up_to(int bound) const;

private:
    InversionSet inv_;
    std::vector<AffWElem> simples_;
    std::vector<AffWElem> omega_;
    std::vector<IVec> simple_roots_;
};

// Affine simple reflections of the alcove walls of a datum: finite simples, then one (s_theta, theta^v)
// per irreducible component.  Returns (element, root index) pairs.
struct AffineSimple {
    AffWElem elem;
    int root_index;  // index of the finite root alpha in the datum (alpha_s^v = coroots[root_index])
    int level;       // m in (s_alpha, m alpha^v)
};
std::vector<AffineSimple> affine_simple_reflections(const RootDatum& d);
std::vector<std::vector<int>> irreducible_components(const RootDatum& d);  // lists of simple positions

AffWElem reflection_elem(const RootDatum& d, int root_index, int level);

// Length-zero subgroup of W~ for semisimple d.
std::vector<AffWElem> omega_group(const RootDatum& d, const std::vector<AffWElem>& simples, const InversionSet& inv);

CoxeterSystem ambient_system(const RootDatum& d);

// M(w, w'): x >= uv for all u <= w, v <= w'.
bool in_M(const CoxeterSystem& sys, const AffWElem& x, const AffWElem& w, const AffWElem& wp, int bound);

class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace endohecke
