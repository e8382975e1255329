#include "endohecke/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace endohecke {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
    return r;
}

LaurentPoly::LaurentPoly(std::int64_t c) {
    if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, int exp) {
    LaurentPoly p(c);
    if (c != 0) p.lo_ = exp;
    return p;
}

LaurentPoly LaurentPoly::from_map(const std::map<int, std::int64_t>& m) {
    LaurentPoly p;
    for (auto& [e, c] : m) p += monomial(c, e);
    return p;
}

void LaurentPoly::trim() {
    auto first = std::find_if(c_.begin(), c_.end(), [](std::int64_t x) { return x != 0; });
    if (first == c_.end()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    lo_ += static_cast<int>(first - c_.begin());
    c_.erase(c_.begin(), first);
    while (c_.back() == 0) c_.pop_back();
}

int LaurentPoly::min_exp() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no degree");
    return lo_;
}

int LaurentPoly::max_exp() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no degree");
    return lo_ + static_cast<int>(c_.size()) - 1;
}

std::int64_t LaurentPoly::coeff(int exp) const {
    if (c_.empty() || exp < lo_ || exp > max_exp()) return 0;
    return c_[exp - lo_];
}

std::map<int, std::int64_t> LaurentPoly::terms() const {
    std::map<int, std::int64_t> m;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) m[lo_ + static_cast<int>(i)] = c_[i];
    return m;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) return *this = o;
    int lo = std::min(lo_, o.lo_);
    int hi = std::max(max_exp(), o.max_exp());
    std::vector<std::int64_t> r(hi - lo + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[lo_ - lo + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[o.lo_ - lo + i] = checked_add(r[o.lo_ - lo + i], o.c_[i]);
    lo_ = lo;
    c_ = std::move(r);
    trim();
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& x : r.c_) x = checked_mul(x, -1);
    return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    LaurentPoly r;
    r.lo_ = lo_ + o.lo_;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.c_.empty()) r.lo_ += k;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    if (c_.empty()) return {};
    LaurentPoly r;
    r.lo_ = -max_exp();
    r.c_.assign(c_.rbegin(), c_.rend());
    return r;
}

std::int64_t LaurentPoly::at_one() const {
    std::int64_t s = 0;
    for (auto x : c_) s = checked_add(s, x);
    return s;
}

LaurentPoly LaurentPoly::nonneg_part() const {
    LaurentPoly r;
    for (auto& [e, c] : terms())
        if (e >= 0) r += monomial(c, e);
    return r;
}

LaurentPoly LaurentPoly::nonneg_symmetrized() const {
    LaurentPoly r;
    for (auto& [e, c] : terms()) {
        if (e < 0) continue;
        r += monomial(c, e);
        if (e > 0) r += monomial(c, -e);
    }
    return r;
}

std::vector<std::int64_t> LaurentPoly::as_q_poly() const {
    std::vector<std::int64_t> out;
    for (auto& [e, c] : terms()) {
        if (e < 0 || e % 2 != 0) throw std::domain_error("not a polynomial in q = v^2: " + str());
        if (out.size() <= static_cast<std::size_t>(e / 2)) out.resize(e / 2 + 1, 0);
        out[e / 2] = c;
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms()) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        std::int64_t a = c < 0 ? -c : c;
        if (e == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << "*";
        os << "v";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace endohecke
