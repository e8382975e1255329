#include "endohecke/json_io.hpp"

namespace endohecke {

Json elem_json(const AffWElem& g) {
    Json j;
    j["w"] = g.finite_part();
    j["lambda"] = g.translation_part();
    return j;
}

AffWElem elem_from_json(const Json& j) {
    return AffWElem::make(j.at("w").get<IMat>(), j.at("lambda").get<IVec>());
}

Json word_json(const Word& w) {
    Json j;
    j["letters"] = w.letters;
    j["omega"] = elem_json(w.omega);
    return j;
}

Word word_from_json(const Json& j) {
    Word w;
    w.letters = j.at("letters").get<std::vector<int>>();
    w.omega = elem_from_json(j.at("omega"));
    return w;
}

Json laurent_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
    return j;
}

LaurentPoly laurent_from_json(const Json& j) {
    std::map<int, std::int64_t> m;
    for (auto& [k, v] : j.items()) m[std::stoi(k)] = v.get<std::int64_t>();
    return LaurentPoly::from_map(m);
}

Json hecke_json(const HeckeElt& h) {
    Json j;
    j["left_char"] = h.left_char.str();
    j["right_char"] = h.right_char.str();
    Json terms = Json::array();
    for (auto& [w, c] : h.terms) {
        Json t = elem_json(w);
        t["coeff"] = laurent_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

HeckeElt hecke_from_json(const Json& j) {
    HeckeElt h;
    h.left_char = TorusCharacter::parse(j.at("left_char").get<std::string>());
    h.right_char = TorusCharacter::parse(j.at("right_char").get<std::string>());
    for (auto& t : j.at("terms")) h.add(elem_from_json(t), laurent_from_json(t.at("coeff")));
    return h;
}

Json poly_json(const Poly& p) {
    Json j = Json::array();
    for (auto& [m, c] : p.terms()) {
        std::vector<int> e;
        int top = kMaxVars - 1;
        while (top >= 0 && mono_exp(m, top) == 0) --top;
        for (int v = 0; v <= top; ++v) e.push_back(mono_exp(m, v));
        j.push_back(Json::array({e, c.get_str()}));
    }
    return j;
}

Poly poly_from_json(const Json& j) {
    Poly p;
    for (auto& t : j) {
        Mono m = 0;
        auto e = t.at(0).get<std::vector<int>>();
        for (std::size_t v = 0; v < e.size(); ++v) m += mono_var(static_cast<int>(v), e[v]);
        p += Poly::monomial(mpq_class(t.at(1).get<std::string>()), m);
    }
    return p;
}

Json pmat_json(const PMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(poly_json(m.at(i, k)));
        rows.push_back(r);
    }
    return rows;
}

PMat pmat_from_json(const Json& j) {
    const std::size_t r = j.size(), c = r ? j.at(0).size() : 0;
    PMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < c; ++k) m.at(i, k) = poly_from_json(j.at(i).at(k));
    return m;
}

Json bimodule_json(const GradedBimodule& M) {
    Json j;
    j["level"] = M.level == Level::RR ? "RR" : "S";
    j["label"] = M.label;
    j["degrees"] = M.degrees;
    Json xs = Json::array();
    for (auto& A : M.right_x) xs.push_back(pmat_json(A));
    j["right_x"] = xs;
    j[M.level == Level::RR ? "right_z" : "Z"] = pmat_json(M.zop);
    return j;
}

GradedBimodule bimodule_from_json(const Json& j) {
    GradedBimodule M;
    M.level = j.at("level").get<std::string>() == "RR" ? Level::RR : Level::S;
    M.label = j.at("label").get<std::string>();
    M.degrees = j.at("degrees").get<std::vector<int>>();
    for (auto& A : j.at("right_x")) M.right_x.push_back(pmat_from_json(A));
    M.zop = pmat_from_json(j.at(M.level == Level::RR ? "right_z" : "Z"));
    return M;
}

Json block_json(const BlockSystem& bs, const Block& b) {
    Json j;
    j["left_char"] = b.left_char.str();
    j["right_char"] = b.right_char.str();
    j["bound"] = b.bound;
    if (b.minimal) {
        j["minimal"] = elem_json(*b.minimal);
        j["minimal_length"] = bs.ambient().length(*b.minimal);
        std::map<int, int> sizes;
        for (auto& w : b.members) ++sizes[bs.block_length(b, w)];
        Json s = Json::object();
        for (auto& [l, n] : sizes) s[std::to_string(l)] = n;
        j["sizes_by_length"] = s;
    } else {
        j["minimal"] = nullptr;
    }
    j["members"] = b.members.size();
    return j;
}

Json theta_json(const MonoHecke& mh, const Block& b, int N) {
    Json j;
    j["N"] = N;
    j["minimal"] = b.minimal ? elem_json(*b.minimal) : Json(nullptr);
    j["theta"] = hecke_json(theta_vector(mh, b, N));
    return j;
}

}  // namespace endohecke
