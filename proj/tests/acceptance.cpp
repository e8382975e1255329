#include "endohecke/acceptance.hpp"

#include <cstdlib>
#include <iostream>

using namespace endohecke;

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : ENDOHECKE_FIXTURES;
    AcceptanceOptions opt;
    if (const char* s = std::getenv("ENDOHECKE_SEED")) opt.seed = std::strtoull(s, nullptr, 10);
    auto results = run_acceptance(standard_fixtures(dir), opt);
    int failed = 0;
    for (auto& r : results) {
        std::cout << format_line(r) << "\n";
        failed += !r.pass();
    }
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
