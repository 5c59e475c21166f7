#pragma once

#include <string>
#include <vector>

#include "treeqaoa/model.hpp"

// Published tree-angle tables (MaxCut and MIS at d = 3, 4, depths 1..8).
// Stored in ansatz convention: the published listing shows -beta, so the
// betas here are the negated listed values; display code negates them back
// and says so in a header note.

namespace treeqaoa {

// throws std::out_of_range when no table covers (kind, d, p)
const AngleSchedule& golden_angles(ProblemKind kind, int d, int p);
bool has_golden_angles(ProblemKind kind, int d, int p);
std::vector<int> golden_depths(ProblemKind kind, int d);  // available p values

struct AngleTableRow {
  int p = 0;
  AngleSchedule angles;  // ansatz convention
};

// plain-text table, one row per depth: "p= k  gamma= ...  beta= ..." with
// betas printed in the display (negated) convention
std::string angle_table_text(const std::vector<AngleTableRow>& rows, const std::string& title);
std::vector<AngleTableRow> parse_angle_table_text(const std::string& text);

// JSON form {"title":..., "beta_convention":"printed", "rows":[{"p":..,
// "gamma":[..], "beta":[..]}]}
std::string angle_table_json(const std::vector<AngleTableRow>& rows, const std::string& title);

}  // namespace treeqaoa
