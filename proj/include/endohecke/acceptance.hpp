#pragma once

#include "endohecke/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace endohecke {

struct FixtureCase {
    std::string name;
    RootDatum datum;
    TorusCharacter L;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool checks_ok = false;
    double seconds = 0;
    double limit = 0;  // seconds
    std::string witness;
    bool pass() const { return checks_ok && seconds < limit; }
};

struct AcceptanceOptions {
    int block_bound = 4;  // raised to at least 4
    std::uint64_t seed = 1;
    int gauge_trials = 100;
    int ind_pairs = 10;
};

// Sp4 with (1/2,1/2) and SL2 with the trivial character, read from a fixture directory.
std::vector<FixtureCase> standard_fixtures(const std::string& fixture_dir);

CriterionResult check_endoscopy_fixture(const std::vector<FixtureCase>& cases, const AcceptanceOptions& opt);
CriterionResult check_block_minimality(const std::vector<FixtureCase>& cases, const AcceptanceOptions& opt);
CriterionResult check_order_compatibility(const std::vector<FixtureCase>& cases, const AcceptanceOptions& opt);
CriterionResult check_hecke_soundness(const std::vector<FixtureCase>& cases, const AcceptanceOptions& opt);
CriterionResult check_decategorified(const std::vector<FixtureCase>& cases, const AcceptanceOptions& opt);
CriterionResult check_theta(const std::vector<FixtureCase>& cases, const AcceptanceOptions& opt);
CriterionResult check_diamond_gauge(const std::vector<FixtureCase>& cases, const AcceptanceOptions& opt);
CriterionResult check_soergel(const std::vector<FixtureCase>& cases, const AcceptanceOptions& opt);
CriterionResult check_induction(const std::vector<FixtureCase>& cases, const AcceptanceOptions& opt);

std::vector<CriterionResult> run_acceptance(const std::vector<FixtureCase>& cases, const AcceptanceOptions& opt);

std::string format_line(const CriterionResult& r);
Json results_json(const std::vector<CriterionResult>& rs);

}  // namespace endohecke
