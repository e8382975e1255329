#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace endohecke {

// Exponent vector packed 8 bits per variable, variable 0 in the top byte, so integer order is lex order.
using Mono = std::uint64_t;
inline constexpr int kMaxVars = 8;

int mono_exp(Mono m, int var);
Mono mono_var(int var, int exp = 1);
int mono_degree(Mono m);
Mono mono_mul(Mono a, Mono b);
bool mono_divides(Mono a, Mono b);  // a | b
Mono mono_div(Mono b, Mono a);
// all monomials of total degree n in the first nvars variables
std::vector<Mono> monomials_of_degree(int nvars, int n);

// Polynomial over Q in commuting variables.
class Poly {
public:
    Poly() = default;
    Poly(const mpq_class& c);  // NOLINT: constants convert implicitly
    Poly(long c) : Poly(mpq_class(c)) {}  // NOLINT
    static Poly var(int i) { return monomial(1, mono_var(i)); }
    static Poly monomial(const mpq_class& c, Mono m);

    bool is_zero() const { return t_.empty(); }
    const std::map<Mono, mpq_class>& terms() const { return t_; }
    int degree() const;  // total degree, -1 for zero
    bool is_homogeneous() const;
    bool involves(int var) const;
    mpq_class constant_term() const;
    mpq_class coeff(Mono m) const;
    Mono leading_mono() const { return t_.rbegin()->first; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const { return Poly(*this) += o; }
    Poly operator-(const Poly& o) const { return Poly(*this) -= o; }
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const mpq_class& c) const;

    mpq_class eval(const std::vector<mpq_class>& pt) const;
    // ring map sending variable i to images[i]
    Poly substitute(const std::vector<Poly>& images) const;
    std::optional<Poly> divide_exact(const Poly& d) const;

    std::string str(const std::vector<std::string>& names = {}) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

private:
    std::map<Mono, mpq_class> t_;
    void put(Mono m, const mpq_class& c);
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

// Dense matrix of polynomials.
class PMat {
public:
    PMat() = default;
    PMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static PMat identity(std::size_t n);
    static PMat scalar(std::size_t n, const Poly& p);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Poly& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    PMat operator*(const PMat& o) const;
    PMat operator+(const PMat& o) const;
    PMat operator-(const PMat& o) const;
    PMat scaled(const Poly& p) const;
    bool is_zero() const;
    std::vector<std::vector<mpq_class>> eval(const std::vector<mpq_class>& pt) const;
    PMat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    friend bool operator==(const PMat& a, const PMat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Poly> a_;
};

}  // namespace endohecke
