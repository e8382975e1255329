#pragma once

#include "endohecke/affine_weyl.hpp"

#include <gmpxx.h>

#include <array>
#include <map>
#include <utility>

namespace endohecke {

// Bruhat cover graph of a Coxeter system up to length N.  Edges point from the smaller element.
struct CoverGraph {
    CoxeterSystem sys;
    int bound = 0;
    std::vector<AffWElem> vertices;  // ordered by (length, element)
    std::vector<int> length;
    std::map<AffWElem, int> index;
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> edge_index;
    std::vector<std::vector<int>> lower;  // lower covers per vertex
    // (bottom, x1, x2, top) with the four edge ids (bottom,x1), (x1,top), (bottom,x2), (x2,top)
    std::vector<std::array<int, 4>> diamonds;
    std::vector<std::array<int, 4>> diamond_edges;

    int edge(int small, int big) const { return edge_index.at({small, big}); }
};

CoverGraph build_cover_graph(const CoxeterSystem& sys, int bound);

// Elements of length l(v)+1 obtained by deleting one letter of a reduced word of v.
std::vector<AffWElem> lower_covers(const CoxeterSystem& sys, const AffWElem& v);

// The two elements strictly between v < u when l(u) = l(v) + 2.
std::pair<AffWElem, AffWElem> diamond_between(const CoxeterSystem& sys, const AffWElem& u, const AffWElem& v);

struct ConnectData {
    AffWElem y, z1, z2;
};
ConnectData connect_data(const CoxeterSystem& sys, const AffWElem& u, const AffWElem& v1, const AffWElem& v2);
// u > v_k > z_k, u > y > z_k and l(u) = l(z_k) + 2
bool connect_relations_hold(const CoxeterSystem& sys, const AffWElem& u, const AffWElem& v1, const AffWElem& v2,
                            const ConnectData& c);

using AntiCommFn = std::vector<mpq_class>;  // one value per edge id
using VertexFn = std::vector<mpq_class>;    // one value per vertex id

AntiCommFn sign_solution(const CoverGraph& g);
bool is_anticommutative(const CoverGraph& g, const AntiCommFn& f);
// g with g(e) = 1 and f1(u,v) g(v) = g(u) f2(u,v) on every edge
VertexFn gauge_fix(const CoverGraph& g, const AntiCommFn& f1, const AntiCommFn& f2);
// f2(u,v) = f1(u,v) r(v) / r(u)
AntiCommFn gauge_transform(const CoverGraph& g, const AntiCommFn& f, const VertexFn& r);

class GaugeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace endohecke
