#include "endohecke/qlinalg.hpp"

#include <stdexcept>

namespace endohecke {

namespace {

void axpy(SparseRow& row, const mpq_class& f, const SparseRow& piv) {
    for (auto& [c, x] : piv) {
        auto [it, fresh] = row.try_emplace(c, 0);
        it->second -= f * x;
        if (it->second == 0) row.erase(it);
    }
}

}  // namespace

std::vector<SparseRow> nullspace(int ncols, const std::vector<SparseRow>& rows) {
    std::map<int, SparseRow> piv;  // leading column -> row normalized to 1 there
    for (const SparseRow& r0 : rows) {
        SparseRow r = r0;
        for (auto it = r.begin(); it != r.end();) {
            if (it->second == 0) it = r.erase(it);
            else ++it;
        }
        while (!r.empty()) {
            auto [c, x] = *r.begin();
            auto p = piv.find(c);
            if (p == piv.end()) {
                mpq_class inv = 1 / x;
                for (auto& [cc, y] : r) y *= inv;
                piv.emplace(c, std::move(r));
                break;
            }
            mpq_class f = x;
            axpy(r, f, p->second);
        }
    }
    // back substitution to reduced form
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
        const int c = it->first;
        for (auto jt = piv.begin(); jt != piv.end() && jt->first < c; ++jt) {
            auto e = jt->second.find(c);
            if (e == jt->second.end()) continue;
            mpq_class f = e->second;
            axpy(jt->second, f, it->second);
        }
    }
    std::vector<SparseRow> basis;
    for (int f = 0; f < ncols; ++f) {
        if (piv.count(f)) continue;
        SparseRow v;
        v[f] = 1;
        for (auto& [c, r] : piv) {
            auto e = r.find(f);
            if (e != r.end()) v[c] = -e->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::pair<std::vector<int>, std::vector<int>> pivots(const QMat& m0) {
    QMat m = m0;
    std::vector<int> prow, pcol;
    const std::size_t rows = m.size();
    if (rows == 0) return {prow, pcol};
    const std::size_t cols = m[0].size();
    std::vector<int> order(rows);
    for (std::size_t i = 0; i < rows; ++i) order[i] = static_cast<int>(i);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(order[p], order[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        prow.push_back(order[r]);
        pcol.push_back(static_cast<int>(c));
        ++r;
    }
    return {prow, pcol};
}

int rank(QMat m) { return static_cast<int>(pivots(m).first.size()); }

QMat inverse(QMat m) {
    const std::size_t n = m.size();
    QMat inv(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("singular matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        mpq_class d = 1 / m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] *= d;
            inv[c][j] *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

}  // namespace endohecke
