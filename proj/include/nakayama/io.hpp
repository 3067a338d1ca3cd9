#pragma once

// Text formats and report serialization shared by the CLI and the tests.

#include <string>
#include <vector>

#include "json.hpp"
#include "nakayama/algebra.hpp"
#include "nakayama/harness.hpp"
#include "nakayama/modules.hpp"

namespace nakayama {

// "3,4,3,3,2"
Algebra parse_kupisch_text(const std::string& text);
std::string format_kupisch(const std::vector<int>& series);

// "n=5;1:3,3:3,5:2" (start:arrows pairs)
Algebra parse_relations_text(const std::string& text);
std::string format_relations(const RelationSystem& rs);

// "top=T,len=L"
UniserialModule parse_module_text(const Algebra& a, const std::string& text);

// "[2,3,4,5]" composition factors from top to socle
std::string format_factors(const Algebra& a, UniserialModule m);

nlohmann::json dim_to_json(Dim d);  // integer, or the string "inf"

// The stable single-algebra report. Keys: kupisch, rank, selfinjective,
// relations, gldim, findim, phi_dim, del, del_per_simple, op_kupisch,
// findim_op, del_op, delta_blocks, epsilon_kupisch.
nlohmann::json invariants_json(const Algebra& a);
std::string invariants_table(const Algebra& a);

nlohmann::json sweep_json(const SweepReport& report);
std::string sweep_csv(const SweepReport& report);

}  // namespace nakayama
