#include "endohecke/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace endohecke {

namespace {
constexpr int shift_of(int var) { return 56 - 8 * var; }
}  // namespace

int mono_exp(Mono m, int var) { return static_cast<int>((m >> shift_of(var)) & 0xff); }

Mono mono_var(int var, int exp) {
    if (var < 0 || var >= kMaxVars || exp < 0 || exp > 255) throw std::out_of_range("monomial out of range");
    return static_cast<Mono>(exp) << shift_of(var);
}

int mono_degree(Mono m) {
    int d = 0;
    for (int v = 0; v < kMaxVars; ++v) d += mono_exp(m, v);
    return d;
}

Mono mono_mul(Mono a, Mono b) {
    for (int v = 0; v < kMaxVars; ++v)
        if (mono_exp(a, v) + mono_exp(b, v) > 255) throw std::overflow_error("monomial exponent overflow");
    return a + b;
}

bool mono_divides(Mono a, Mono b) {
    for (int v = 0; v < kMaxVars; ++v)
        if (mono_exp(a, v) > mono_exp(b, v)) return false;
    return true;
}

Mono mono_div(Mono b, Mono a) { return b - a; }

std::vector<Mono> monomials_of_degree(int nvars, int n) {
    std::vector<Mono> out;
    if (n < 0) return out;
    if (nvars == 0) {
        if (n == 0) out.push_back(0);
        return out;
    }
    for (int e = n; e >= 0; --e)
        for (Mono rest : monomials_of_degree(nvars - 1, n - e)) out.push_back(mono_var(nvars - 1, e) + rest);
    return out;
}

Poly::Poly(const mpq_class& c) {
    mpq_class k = c;
    k.canonicalize();
    if (k != 0) t_.emplace(0, k);
}

Poly Poly::monomial(const mpq_class& c, Mono m) {
    Poly p;
    mpq_class k = c;
    k.canonicalize();
    if (k != 0) p.t_.emplace(m, k);
    return p;
}

void Poly::put(Mono m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) t_.erase(it);
}

int Poly::degree() const {
    int d = -1;
    for (auto& [m, c] : t_) d = std::max(d, mono_degree(m));
    return d;
}

bool Poly::is_homogeneous() const {
    int d = -1;
    for (auto& [m, c] : t_) {
        int e = mono_degree(m);
        if (d >= 0 && e != d) return false;
        d = e;
    }
    return true;
}

bool Poly::involves(int var) const {
    for (auto& [m, c] : t_)
        if (mono_exp(m, var) > 0) return true;
    return false;
}

mpq_class Poly::constant_term() const { return coeff(0); }

mpq_class Poly::coeff(Mono m) const {
    auto it = t_.find(m);
    return it == t_.end() ? mpq_class(0) : it->second;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.t_) put(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.t_) put(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [m, c] : t_)
        for (auto& [n, d] : o.t_) r.put(mono_mul(m, n), c * d);
    return r;
}

Poly Poly::operator*(const mpq_class& c) const {
    if (c == 0) return {};
    Poly r = *this;
    for (auto& [m, x] : r.t_) x *= c;
    return r;
}

mpq_class Poly::eval(const std::vector<mpq_class>& pt) const {
    mpq_class s = 0;
    for (auto& [m, c] : t_) {
        mpq_class x = c;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = mono_exp(m, v);
            if (e == 0) continue;
            if (v >= static_cast<int>(pt.size())) throw std::invalid_argument("evaluation point too short");
            for (int k = 0; k < e; ++k) x *= pt[v];
        }
        s += x;
    }
    return s;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    std::vector<std::vector<Poly>> pw(images.size());
    auto power = [&](int v, int e) -> const Poly& {
        auto& p = pw[v];
        if (p.empty()) p.push_back(Poly(1));
        while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * images[v]);
        return p[e];
    };
    Poly r;
    for (auto& [m, c] : t_) {
        Poly x(c);
        for (int v = 0; v < kMaxVars; ++v) {
            int e = mono_exp(m, v);
            if (e == 0) continue;
            if (v >= static_cast<int>(images.size())) throw std::invalid_argument("substitution misses a variable");
            x = x * power(v, e);
        }
        r += x;
    }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly rem = *this, quo;
    const Mono ld = d.leading_mono();
    const mpq_class lc = d.t_.rbegin()->second;
    while (!rem.is_zero()) {
        Mono lm = rem.leading_mono();
        if (!mono_divides(ld, lm)) return std::nullopt;
        Poly q = monomial(rem.t_.rbegin()->second / lc, mono_div(lm, ld));
        quo += q;
        rem -= q * d;
    }
    return quo;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        auto& [m, c] = *it;
        mpq_class a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        bool unit = (a == 1);
        if (!unit || m == 0) os << a.get_str();
        bool any = !unit || m == 0;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = mono_exp(m, v);
            if (e == 0) continue;
            if (any) os << "*";
            any = true;
            os << (v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v + 1));
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

PMat PMat::identity(std::size_t n) { return scalar(n, Poly(1)); }

PMat PMat::scalar(std::size_t n, const Poly& p) {
    PMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = p;
    return m;
}

PMat PMat::operator*(const PMat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix shapes do not match");
    PMat m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Poly& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j) {
                const Poly& y = o.at(k, j);
                if (!y.is_zero()) m.at(i, j) += x * y;
            }
        }
    return m;
}

PMat PMat::operator+(const PMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shapes do not match");
    PMat m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

PMat PMat::operator-(const PMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shapes do not match");
    PMat m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

PMat PMat::scaled(const Poly& p) const {
    PMat m = *this;
    for (auto& x : m.a_) x = x * p;
    return m;
}

bool PMat::is_zero() const {
    for (auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<std::vector<mpq_class>> PMat::eval(const std::vector<mpq_class>& pt) const {
    std::vector<std::vector<mpq_class>> m(r_, std::vector<mpq_class>(c_));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m[i][j] = at(i, j).eval(pt);
    return m;
}

PMat PMat::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    PMat m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = at(rows[i], cols[j]);
    return m;
}

}  // namespace endohecke
