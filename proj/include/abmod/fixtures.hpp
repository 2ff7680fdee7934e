#pragma once
#include <abmod/criteria.hpp>

namespace abmod {

struct FixtureRow {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail;
};

/// The quartic family x^4 + y^4 + t x^2 y^2 in two variables.
FamilyContext quartic_context(int N = 8, long budget = default_spair_budget());
/// The family x^p + y^q + z^r + t x y z in three variables.
FamilyContext tpqr_context(int p, int q, int r, int N = 4, long budget = default_spair_budget());

/// Re-derives the worked identities of the reference families and returns one
/// row per identity. Used by the `verify-paper-examples` subcommand and by the
/// acceptance suite.
std::vector<FixtureRow> run_reference_fixtures(long budget = default_spair_budget());

}  // namespace abmod
