#include "treeqaoa/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "treeqaoa/rng.hpp"

namespace treeqaoa {

namespace {

// Published per-regularity constants: upper bounds on the optimal cut
// fraction (c_ub) and independence ratio (r_ub), and lower bounds on the
// clustering onset mu*.  Keep byte-identical to assets/bounds.json.
constexpr const char* kBoundsJson =
    R"json({
  "version": 1,
  "description": "per-d upper bounds on optimal cut fraction (c_ub) and independence ratio (r_ub), plus lower bounds on the clustering onset (mu_star_lb)",
  "bounds": {
    "3":   {"c_ub": 0.92410, "r_ub": 0.45400, "mu_star_lb": 0.9809},
    "4":   {"c_ub": 0.86824, "r_ub": 0.41635, "mu_star_lb": 0.9705},
    "5":   {"c_ub": 0.83504, "r_ub": 0.38443, "mu_star_lb": 0.9346},
    "6":   {"c_ub": 0.80500, "r_ub": 0.35799, "mu_star_lb": 0.9300},
    "7":   {"c_ub": 0.78509, "r_ub": 0.33567, "mu_star_lb": 0.9255},
    "8":   {"c_ub": 0.76585, "r_ub": 0.31652, "mu_star_lb": 0.9098},
    "9":   {"c_ub": 0.75233, "r_ub": 0.29987, "mu_star_lb": 0.9057},
    "10":  {"c_ub": 0.73877, "r_ub": 0.28521, "mu_star_lb": 0.9021},
    "20":  {"c_ub": 0.67023, "r_ub": 0.19732, "mu_star_lb": 0.8808},
    "50":  {"c_ub": 0.60820, "r_ub": 0.11079, "mu_star_lb": 0.8583},
    "100": {"c_ub": 0.57665, "r_ub": 0.06787, "mu_star_lb": 0.8427}
  }
}
)json";

}  // namespace

BoundsTable BoundsTable::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("BoundsTable: bad JSON: ") + e.what());
  }
  if (!j.contains("bounds") || !j["bounds"].is_object())
    throw std::invalid_argument("BoundsTable: missing 'bounds' object");
  BoundsTable t;
  t.source_json = json_text;
  for (const auto& [key, value] : j["bounds"].items()) {
    BoundEntry e;
    e.c_ub = value.at("c_ub").get<double>();
    e.r_ub = value.at("r_ub").get<double>();
    if (value.contains("mu_star_lb")) e.mu_star_lb = value["mu_star_lb"].get<double>();
    if (!(e.r_ub > 0.0 && e.r_ub < e.c_ub && e.c_ub < 1.0))
      throw std::invalid_argument("BoundsTable: entry for d=" + key +
                                  " violates 0 < r_ub < c_ub < 1");
    t.entries[std::stoi(key)] = e;
  }
  return t;
}

const BoundsTable& BoundsTable::embedded() {
  static const BoundsTable table = from_json(kBoundsJson);
  return table;
}

BoundsTable BoundsTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("BoundsTable: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::optional<BoundEntry> BoundsTable::find(int d) const {
  const auto it = entries.find(d);
  if (it == entries.end()) return std::nullopt;
  return it->second;
}

std::string BoundsTable::content_hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (const unsigned char c : source_json) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

double cut_fraction(double zz) {
  if (!(zz >= -1.0 - 1e-12 && zz <= 1.0 + 1e-12))
    throw std::invalid_argument("cut_fraction: zz = " + std::to_string(zz) +
                                " outside [-1, 1]");
  return (1.0 - zz) / 2.0;
}

double independence_ratio(double zz, double z, int d) {
  return -(d / 8.0) * zz + ((2.0 - d) / 4.0) * z + (4.0 - d) / 8.0;
}

bool mis_field_valid(int d, double h) { return h > d - 2.0 && h <= static_cast<double>(d); }

PerformanceRecord approximation_ratios(PerformanceRecord rec, const BoundsTable& bounds) {
  rec.mis_valid = mis_field_valid(rec.d, rec.h);
  if (const auto entry = bounds.find(rec.d)) {
    rec.alpha_mc = rec.c_p / entry->c_ub;
    rec.alpha_mis = rec.r_p / entry->r_ub;
  } else {
    rec.alpha_mc.reset();
    rec.alpha_mis.reset();
  }
  return rec;
}

PerformanceRecord performance_record(const TreeProblem& problem, double zz, double z,
                                     const BoundsTable& bounds) {
  problem.validate();
  PerformanceRecord rec;
  rec.d = problem.d;
  rec.h = problem.h;
  rec.p = problem.p;
  const double sd = std::sqrt(static_cast<double>(problem.d));
  rec.energy_density = 0.5 * sd * zz + problem.h / sd * z;
  rec.c_p = cut_fraction(zz);
  rec.r_p = independence_ratio(zz, z, problem.d);
  return approximation_ratios(rec, bounds);
}

double mis_energy(const GraphInstance& graph, const BitVector& bits, double lambda) {
  if (static_cast<int>(bits.size()) != graph.n)
    throw std::invalid_argument("mis_energy: bit vector size mismatch");
  int violated = 0;
  for (auto [u, v] : graph.edges)
    violated += bits[static_cast<std::size_t>(u)] && bits[static_cast<std::size_t>(v)];
  int selected = 0;
  for (const int b : bits) selected += b != 0;
  return lambda * violated - selected;
}

BitVector prune(const GraphInstance& graph, BitVector bits, std::uint64_t seed) {
  if (static_cast<int>(bits.size()) != graph.n)
    throw std::invalid_argument("prune: bit vector size mismatch");
  SplitMix64 rng(seed);

  if (mis_energy(graph, bits, 1.0) >= 0.0) {
    // worst case: a single vertex, preferably one that was selected
    BitVector out(bits.size(), 0);
    if (graph.n > 0) {
      std::vector<int> selected;
      for (int v = 0; v < graph.n; ++v)
        if (bits[static_cast<std::size_t>(v)]) selected.push_back(v);
      const int keep = selected.empty()
                           ? static_cast<int>(rng.below(static_cast<std::uint64_t>(graph.n)))
                           : selected[rng.below(selected.size())];
      out[static_cast<std::size_t>(keep)] = 1;
    }
    return out;
  }

  // deselecting an endpoint of a violated edge removes at least that edge's
  // penalty, so the energy never increases and -H stays a size lower bound
  while (true) {
    std::vector<std::size_t> violated;
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
      const auto [u, v] = graph.edges[i];
      if (bits[static_cast<std::size_t>(u)] && bits[static_cast<std::size_t>(v)])
        violated.push_back(i);
    }
    if (violated.empty()) break;
    const auto [u, v] = graph.edges[violated[rng.below(violated.size())]];
    bits[static_cast<std::size_t>(rng.coin() ? u : v)] = 0;
  }
  return bits;
}

double gw_guarantee_constant() {
  static const double value = [] {
    const auto f = [](double x) {
      return 2.0 * std::acos(x) / (std::numbers::pi * (1.0 - x));
    };
    // coarse scan of [-1, 1), then golden-section refinement
    double best_x = -1.0, best = f(-1.0);
    constexpr int kGrid = 40000;
    for (int i = 0; i <= kGrid; ++i) {
      const double x = -1.0 + 1.999 * i / kGrid;
      const double fx = f(x);
      if (fx < best) {
        best = fx;
        best_x = x;
      }
    }
    double lo = best_x - 1.999 / kGrid, hi = best_x + 1.999 / kGrid;
    constexpr double kInvPhi = 0.6180339887498949;
    double a = hi - kInvPhi * (hi - lo), b = lo + kInvPhi * (hi - lo);
    double fa = f(a), fb = f(b);
    for (int it = 0; it < 200; ++it) {
      if (fa < fb) {
        hi = b;
        b = a;
        fb = fa;
        a = hi - kInvPhi * (hi - lo);
        fa = f(a);
      } else {
        lo = a;
        a = b;
        fa = fb;
        b = lo + kInvPhi * (hi - lo);
        fb = f(b);
      }
    }
    return std::min(fa, fb);
  }();
  return value;
}

double greedy_guarantee(int d) {
  if (d < 3) throw std::invalid_argument("greedy_guarantee: d must be >= 3");
  return 3.0 / (d + 2);
}

}  // namespace treeqaoa
