#pragma once

#include "endohecke/root_datum.hpp"

#include <string>

namespace testing_support {

inline std::string fixture(const std::string& name) { return std::string(ENDOHECKE_FIXTURES) + "/" + name; }

inline endohecke::RootDatum load(const std::string& name) { return endohecke::load_root_datum(fixture(name)); }

}  // namespace testing_support
