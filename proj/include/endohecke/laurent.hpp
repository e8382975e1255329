#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace endohecke {

// Integer Laurent polynomial in v; dense coefficients from v^lo, trimmed, overflow-checked.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t c);  // NOLINT: constants convert implicitly
    static LaurentPoly monomial(std::int64_t c, int exp);
    static LaurentPoly v(int exp = 1) { return monomial(1, exp); }
    static LaurentPoly q(int exp = 1) { return monomial(1, 2 * exp); }
    static LaurentPoly from_map(const std::map<int, std::int64_t>& m);

    bool is_zero() const { return c_.empty(); }
    int min_exp() const;
    int max_exp() const;
    std::int64_t coeff(int exp) const;
    std::map<int, std::int64_t> terms() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator+(const LaurentPoly& o) const { return LaurentPoly(*this) += o; }
    LaurentPoly operator-(const LaurentPoly& o) const { return LaurentPoly(*this) -= o; }
    LaurentPoly operator-() const;

    LaurentPoly shifted(int k) const;  // times v^k
    LaurentPoly bar() const;           // v -> v^{-1}
    std::int64_t at_one() const;
    // Terms of exponent >= 0 made bar-symmetric: a_0 + sum_{k>0} a_k (v^k + v^-k).
    LaurentPoly nonneg_symmetrized() const;
    LaurentPoly nonneg_part() const;
    // Substitute v^2 = q into a polynomial with even exponents only; throws otherwise.
    std::vector<std::int64_t> as_q_poly() const;

    std::string str() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }

private:
    int lo_ = 0;
    std::vector<std::int64_t> c_;
    void trim();
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace endohecke
