#include "endohecke/gauge.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace endohecke {

std::vector<AffWElem> lower_covers(const CoxeterSystem& sys, const AffWElem& v) {
    Word wd = sys.reduced_word(v);
    const int l = static_cast<int>(wd.letters.size());
    std::set<AffWElem> out;
    for (int k = 0; k < l; ++k) {
        std::vector<int> del = wd.letters;
        del.erase(del.begin() + k);
        AffWElem u = sys.evaluate(del) * wd.omega;
        if (sys.length(u) == l - 1) out.insert(u);
    }
    return {out.begin(), out.end()};
}

std::pair<AffWElem, AffWElem> diamond_between(const CoxeterSystem& sys, const AffWElem& u, const AffWElem& v) {
    if (sys.length(u) != sys.length(v) + 2 || !sys.leq(v, u))
        throw std::invalid_argument("diamond needs v < u with length difference 2");
    std::vector<AffWElem> mid;
    for (auto& x : lower_covers(sys, u))
        if (sys.leq(v, x)) mid.push_back(x);
    if (mid.size() != 2) throw std::logic_error("Bruhat interval of length 2 without exactly two midpoints");
    return {mid[0], mid[1]};
}

CoverGraph build_cover_graph(const CoxeterSystem& sys, int bound) {
    CoverGraph g;
    g.sys = sys;
    g.bound = bound;
    auto levels = sys.enumerate(bound);
    for (std::size_t k = 0; k < levels.size(); ++k)
        for (auto& w : levels[k]) {
            g.index.emplace(w, static_cast<int>(g.vertices.size()));
            g.vertices.push_back(w);
            g.length.push_back(static_cast<int>(k));
        }
    g.lower.resize(g.vertices.size());
    for (std::size_t j = 0; j < g.vertices.size(); ++j)
        for (auto& u : lower_covers(sys, g.vertices[j])) {
            int i = g.index.at(u);
            g.edge_index.emplace(std::make_pair(i, static_cast<int>(j)), static_cast<int>(g.edges.size()));
            g.edges.emplace_back(i, static_cast<int>(j));
            g.lower[j].push_back(i);
        }
    for (std::size_t t = 0; t < g.vertices.size(); ++t) {
        std::set<int> bottoms;
        for (int x : g.lower[t])
            for (int b : g.lower[x]) bottoms.insert(b);
        for (int b : bottoms) {
            auto [x1, x2] = diamond_between(sys, g.vertices[t], g.vertices[b]);
            int i1 = g.index.at(x1), i2 = g.index.at(x2);
            g.diamonds.push_back({b, i1, i2, static_cast<int>(t)});
            g.diamond_edges.push_back({g.edge(b, i1), g.edge(i1, static_cast<int>(t)), g.edge(b, i2),
                                       g.edge(i2, static_cast<int>(t))});
        }
    }
    return g;
}

ConnectData connect_data(const CoxeterSystem& sys, const AffWElem& u, const AffWElem& v1, const AffWElem& v2) {
    Word wd = sys.reduced_word(u);
    if (wd.letters.empty()) throw std::invalid_argument("connect data needs l(u) >= 1");
    const AffWElem& s = sys.simple(wd.letters.front());
    ConnectData c;
    c.y = s * u;
    auto z_of = [&](const AffWElem& v) {
        for (std::size_t k = 0; k < wd.letters.size(); ++k) {
            std::vector<int> del = wd.letters;
            del.erase(del.begin() + static_cast<long>(k));
            if (!(sys.evaluate(del) * wd.omega == v)) continue;
            if (del.empty()) return v;
            // drop the first letter of the deleted word
            del.erase(del.begin());
            return sys.evaluate(del) * wd.omega;
        }
        throw std::invalid_argument("v is not obtained by deleting one letter of u");
    };
    c.z1 = z_of(v1);
    c.z2 = z_of(v2);
    return c;
}

bool connect_relations_hold(const CoxeterSystem& sys, const AffWElem& u, const AffWElem& v1, const AffWElem& v2,
                            const ConnectData& c) {
    const int lu = sys.length(u);
    auto lt = [&sys](const AffWElem& a, const AffWElem& b) { return !(a == b) && sys.leq(a, b); };
    bool ok = lt(c.y, u) && sys.length(c.y) == lu - 1;
    for (auto [v, z] : {std::pair{v1, c.z1}, std::pair{v2, c.z2}})
        ok = ok && lt(v, u) && lt(z, v) && lt(z, c.y) && sys.length(z) == lu - 2;
    return ok;
}

AntiCommFn sign_solution(const CoverGraph& g) {
    const std::size_t n = g.edges.size();
    // unknown x_e in F2 with sign (-1)^{x_e}; each diamond needs odd parity
    std::vector<boost::dynamic_bitset<>> rows;
    for (auto& de : g.diamond_edges) {
        boost::dynamic_bitset<> r(n + 1);
        for (int e : de) r.flip(static_cast<std::size_t>(e));
        r.set(n);
        rows.push_back(r);
    }
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p].test(col)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
        pivots.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r].test(n)) throw GaugeError("diamond sign system is inconsistent");
    AntiCommFn f(n, mpq_class(1));
    for (std::size_t r = 0; r < rank; ++r)
        if (rows[r].test(n)) f[pivots[r]] = -1;
    return f;
}

bool is_anticommutative(const CoverGraph& g, const AntiCommFn& f) {
    if (f.size() != g.edges.size()) throw std::invalid_argument("function does not match the graph");
    for (auto& de : g.diamond_edges)
        if (f[de[0]] * f[de[1]] + f[de[2]] * f[de[3]] != 0) return false;
    return true;
}

VertexFn gauge_fix(const CoverGraph& g, const AntiCommFn& f1, const AntiCommFn& f2) {
    if (f1.size() != g.edges.size() || f2.size() != g.edges.size())
        throw std::invalid_argument("function does not match the graph");
    for (std::size_t e = 0; e < f1.size(); ++e)
        if (f1[e] == 0 || f2[e] == 0) throw std::invalid_argument("gauge fixing needs nowhere-zero functions");
    VertexFn gv(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.length[v] == 0) {
            if (!g.vertices[v].is_identity()) throw std::invalid_argument("cover graph must start at the identity");
            gv[v] = 1;
            continue;
        }
        const auto& low = g.lower[v];
        if (low.size() >= 2) {
            ConnectData c = connect_data(g.sys, g.vertices[v], g.vertices[low[0]], g.vertices[low[1]]);
            if (!connect_relations_hold(g.sys, g.vertices[v], g.vertices[low[0]], g.vertices[low[1]], c))
                throw std::logic_error("connect relations fail at " + to_string(g.vertices[v]));
        }
        bool first = true;
        for (int u : low) {
            int e = g.edge(u, static_cast<int>(v));
            mpq_class cand = gv[u] * f2[e] / f1[e];
            if (first) {
                gv[v] = cand;
                first = false;
            } else if (cand != gv[v]) {
                throw GaugeError("gauge value at " + to_string(g.vertices[v]) + " depends on the cover used");
            }
        }
    }
    return gv;
}

AntiCommFn gauge_transform(const CoverGraph& g, const AntiCommFn& f, const VertexFn& r) {
    AntiCommFn out(f.size());
    for (std::size_t e = 0; e < f.size(); ++e) {
        auto [u, v] = g.edges[e];
        out[e] = f[e] * r[v] / r[u];
    }
    return out;
}

}  // namespace endohecke
