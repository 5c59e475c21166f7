#include "treeqaoa/angle_table.hpp"

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace treeqaoa {

namespace {

struct RawTable {
  ProblemKind kind;
  int d;
  // row p uses the first p entries; betas are the published (negated) values
  double gammas[8][8];
  double betas[8][8];
};

// published tree angles; rows p = 1..8
const RawTable kTables[] = {
    {ProblemKind::maxcut,
     3,
     {{0.5330},
      {0.4225, 0.7776},
      {0.3653, 0.6914, 0.8114},
      {0.3540, 0.6760, 0.8557, 1.0019},
      {0.3111, 0.6115, 0.7119, 0.8697, 0.9993},
      {0.2870, 0.5591, 0.6336, 0.7248, 0.8749, 0.9763},
      {0.2682, 0.5342, 0.5960, 0.6496, 0.7426, 0.8845, 0.9750},
      {0.2537, 0.5076, 0.5674, 0.6132, 0.6619, 0.7490, 0.8892, 0.9669}},
     {{0.3927},
      {0.5549, 0.2924},
      {0.6090, 0.4596, 0.2357},
      {0.5996, 0.4343, 0.2968, 0.1590},
      {0.6317, 0.5225, 0.3901, 0.2760, 0.1493},
      {0.6359, 0.5344, 0.4633, 0.3600, 0.2585, 0.1388},
      {0.6476, 0.5531, 0.4893, 0.4448, 0.3408, 0.2444, 0.1312},
      {0.6492, 0.5555, 0.5013, 0.4690, 0.4202, 0.3195, 0.2310, 0.1229}}},
    {ProblemKind::maxcut,
     4,
     {{0.5236},
      {0.4078, 0.7397},
      {0.3545, 0.6514, 0.7543},
      {0.3150, 0.5876, 0.6732, 0.7712},
      {0.2909, 0.5468, 0.6033, 0.6872, 0.7844},
      {0.2687, 0.5128, 0.5636, 0.6141, 0.6957, 0.7867},
      {0.2537, 0.4890, 0.5317, 0.5757, 0.6214, 0.6976, 0.7885},
      {0.2405, 0.4690, 0.5113, 0.5480, 0.5851, 0.6257, 0.7221, 0.8339}},
     {{0.3927},
      {0.5341, 0.2830},
      {0.5879, 0.4232, 0.2230},
      {0.6050, 0.4778, 0.3613, 0.1875},
      {0.6225, 0.5051, 0.4167, 0.3253, 0.1628},
      {0.6293, 0.5232, 0.4528, 0.3883, 0.2981, 0.1459},
      {0.6378, 0.5327, 0.4719, 0.4325, 0.3632, 0.2778, 0.1339},
      {0.6405, 0.5385, 0.4817, 0.4526, 0.4101, 0.3452, 0.2605, 0.1198}}},
    {ProblemKind::mis,
     3,
     {{0.4299},
      {0.3678, 0.7957},
      {0.3260, 0.6720, 0.7582},
      {0.2846, 0.6045, 0.7105, 0.7419},
      {0.2722, 0.5640, 0.6536, 0.7082, 0.7908},
      {0.2537, 0.5324, 0.6102, 0.6370, 0.7164, 0.7872},
      {0.2316, 0.4843, 0.5687, 0.5937, 0.6238, 0.7266, 0.7577},
      {0.2249, 0.4734, 0.5590, 0.5833, 0.6082, 0.6697, 0.7368, 0.7882}},
     {{0.3986},
      {0.5175, 0.2642},
      {0.5777, 0.3680, 0.2103},
      {0.6046, 0.4686, 0.3396, 0.1846},
      {0.6174, 0.4776, 0.4222, 0.3088, 0.1525},
      {0.6350, 0.5082, 0.4523, 0.4136, 0.2866, 0.1533},
      {0.6337, 0.5026, 0.4636, 0.4304, 0.3718, 0.2725, 0.1410},
      {0.6428, 0.5181, 0.4779, 0.4519, 0.3974, 0.3589, 0.2566, 0.1203}}},
    {ProblemKind::mis,
     4,
     {{0.3376},
      {0.3123, 0.8352},
      {0.2756, 0.6606, 0.7660},
      {0.2405, 0.5462, 0.6808, 0.6781},
      {0.2245, 0.5178, 0.6307, 0.6445, 0.6808},
      {0.2043, 0.4545, 0.5887, 0.6121, 0.6307, 0.7054},
      {0.1981, 0.4406, 0.5595, 0.5777, 0.5887, 0.6775, 0.7116},
      {0.1765, 0.3840, 0.5239, 0.5596, 0.5595, 0.6197, 0.6817, 0.6833}},
     {{0.4240},
      {0.5169, 0.2407},
      {0.5628, 0.3024, 0.1942},
      {0.5745, 0.3541, 0.2618, 0.1563},
      {0.6138, 0.4152, 0.3412, 0.2583, 0.1410},
      {0.6162, 0.4200, 0.3845, 0.3231, 0.2229, 0.1152},
      {0.6350, 0.4475, 0.4108, 0.3828, 0.3036, 0.1984, 0.1188},
      {0.6278, 0.4452, 0.4267, 0.3991, 0.3570, 0.2689, 0.1946, 0.1085}}},
};

using Key = std::tuple<int, int, int>;  // (kind, d, p)

const std::map<Key, AngleSchedule>& table_map() {
  static const std::map<Key, AngleSchedule> map = [] {
    std::map<Key, AngleSchedule> m;
    for (const auto& t : kTables)
      for (int p = 1; p <= 8; ++p) {
        std::vector<double> g(t.gammas[p - 1], t.gammas[p - 1] + p);
        std::vector<double> b(t.betas[p - 1], t.betas[p - 1] + p);
        for (double& x : b) x = -x;  // published values are -beta
        m.emplace(Key{static_cast<int>(t.kind), t.d, p}, AngleSchedule(std::move(g), std::move(b)));
      }
    return m;
  }();
  return map;
}

}  // namespace

const AngleSchedule& golden_angles(ProblemKind kind, int d, int p) {
  const auto it = table_map().find(Key{static_cast<int>(kind), d, p});
  if (it == table_map().end())
    throw std::out_of_range("no published angles for " + to_string(kind) +
                            " d=" + std::to_string(d) + " p=" + std::to_string(p));
  return it->second;
}

bool has_golden_angles(ProblemKind kind, int d, int p) {
  return table_map().count(Key{static_cast<int>(kind), d, p}) > 0;
}

std::vector<int> golden_depths(ProblemKind kind, int d) {
  std::vector<int> out;
  for (int p = 1; p <= 8; ++p)
    if (has_golden_angles(kind, d, p)) out.push_back(p);
  return out;
}

std::string angle_table_text(const std::vector<AngleTableRow>& rows, const std::string& title) {
  std::ostringstream out;
  out << "# " << title << "\n";
  out << "# betas are shown negated (published sign convention); negate them "
         "back to feed the ansatz\n";
  char buf[32];
  for (const auto& row : rows) {
    out << "p= " << row.p << "  gamma=";
    for (const double g : row.angles.gammas) {
      std::snprintf(buf, sizeof buf, " %.4f", g);
      out << buf;
    }
    out << "  beta=";
    for (const double b : row.angles.betas) {
      std::snprintf(buf, sizeof buf, " %.4f", -b);
      out << buf;
    }
    out << "\n";
  }
  return out.str();
}

std::vector<AngleTableRow> parse_angle_table_text(const std::string& text) {
  std::vector<AngleTableRow> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    AngleTableRow row;
    if (!(ls >> tok) || tok != "p=" || !(ls >> row.p))
      throw std::invalid_argument("angle table: bad row: " + line);
    if (!(ls >> tok) || tok != "gamma=")
      throw std::invalid_argument("angle table: expected gamma=: " + line);
    std::vector<double>* target = &row.angles.gammas;
    while (ls >> tok) {
      if (tok == "beta=") {
        target = &row.angles.betas;
        continue;
      }
      target->push_back(std::stod(tok));
    }
    for (double& b : row.angles.betas) b = -b;  // text shows the published sign
    row.angles.validate();
    if (row.angles.depth() != row.p)
      throw std::invalid_argument("angle table: row length mismatch: " + line);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string angle_table_json(const std::vector<AngleTableRow>& rows, const std::string& title) {
  nlohmann::json j;
  j["title"] = title;
  j["beta_convention"] =
      "beta_printed = published sign (negated); beta_ansatz feeds the circuit directly";
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["p"] = row.p;
    r["gamma"] = row.angles.gammas;
    std::vector<double> printed = row.angles.betas;
    for (double& b : printed) b = -b;
    r["beta_printed"] = printed;
    r["beta_ansatz"] = row.angles.betas;
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

}  // namespace treeqaoa
