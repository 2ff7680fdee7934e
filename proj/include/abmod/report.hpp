#pragma once
#include <abmod/fixtures.hpp>
#include <abmod/parse.hpp>
#include <json.hpp>

namespace abmod {

nlohmann::json lattice_json(const FamilyContext& ctx, const Lattice& L);
nlohmann::json matrix_json(const FamilyContext& ctx, Op op);
nlohmann::json criterion_json(const CriterionReport& rep, const std::vector<std::string>& vars);
nlohmann::json family_json(const FamilySpec& spec);
nlohmann::json staircase_json(const FamilyContext& ctx);
nlohmann::json fixtures_json(const std::vector<FixtureRow>& rows);

/// Full analysis pipeline: staircase, mu, bad_t, operator matrices, P, G and
/// the requested criterion checks.
nlohmann::json analyze_report(const FamilySpec& spec, long budget = default_spair_budget());

std::string dump_report(const nlohmann::json& j);

}  // namespace abmod
