#pragma once

#include "endohecke/mono_hecke.hpp"
#include "endohecke/soergel.hpp"

#include <json.hpp>

namespace endohecke {

using Json = nlohmann::ordered_json;

Json elem_json(const AffWElem& g);
AffWElem elem_from_json(const Json& j);

// Letters as indices; the length-zero part is a separate "omega" element.
Json word_json(const Word& w);
Word word_from_json(const Json& j);

Json laurent_json(const LaurentPoly& p);  // {"exp": coeff}
LaurentPoly laurent_from_json(const Json& j);

Json hecke_json(const HeckeElt& h);
HeckeElt hecke_from_json(const Json& j);

Json poly_json(const Poly& p);  // [[exponents], "p/q"] pairs
Poly poly_from_json(const Json& j);
Json pmat_json(const PMat& m);
PMat pmat_from_json(const Json& j);
Json bimodule_json(const GradedBimodule& M);
GradedBimodule bimodule_from_json(const Json& j);

Json block_json(const BlockSystem& bs, const Block& b);
Json theta_json(const MonoHecke& mh, const Block& b, int N);

}  // namespace endohecke
