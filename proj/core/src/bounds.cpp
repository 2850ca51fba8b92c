#include "vknot/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "vknot/families.hpp"
#include "vknot/invariants.hpp"
#include "vknot/search.hpp"

namespace vknot {

namespace {

void require_odd_p(int p, const char* what) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument(std::string(what) + ": p must be odd and >= 3");
}

int ceil_half(long long v) { return static_cast<int>((v + 1) / 2); }

}  // namespace

int generic_upper_bound(int c) {
  if (c < 0) throw std::invalid_argument("generic_upper_bound: c must be >= 0");
  if (c <= 1) return 0;
  return c * (c - 1) / 2 + (c - 1) * (c - 1) / 4;
}

int complete_upper_bound(int c, int h) {
  if (h < 1 || h > c) throw std::invalid_argument("complete_upper_bound: need 1 <= h <= c");
  return c * (c - 1) / 2 + (c - h) * (c - h) / 4;
}

int global_upper_bound(int c) {
  if (c < 0) throw std::invalid_argument("global_upper_bound: c must be >= 0");
  if (c <= 1) return 0;
  return (3 * c * c - 6 * c + 7) / 4;
}

int torus2_upper_bound(int p) {
  require_odd_p(p, "torus2_upper_bound");
  return (p * p - 1) / 2;
}

int torus2_minimal_diagram_bound(int p) {
  require_odd_p(p, "torus2_minimal_diagram_bound");
  return (5 * p * p - 4 * p - 1) / 8;
}

int twist_upper_bound(int n) {
  if (n < 1) throw std::invalid_argument("twist_upper_bound: n must be >= 1");
  return n % 2 == 1 ? 3 * n + 1 : 5 * n / 2 - 1;
}

std::pair<int, int> virtual_twist_bounds(int n) {
  if (n < 1) throw std::invalid_argument("virtual_twist_bounds: n must be >= 1");
  if (n % 2 == 1) return {(n + 1) / 2, n};
  return {n / 2, n - 1};
}

int ow_lower_bound(const GaussDiagram& d) { return ceil_half(std::abs(odd_writhe(d))); }

int owp_lower_bound(const GaussDiagram& d) { return ceil_half(odd_writhe_polynomial(d).l1_norm()); }

BoundReport best_bounds(const GaussDiagram& d, const FamilySpec* family, bool known_nontrivial) {
  BoundReport r;
  r.crossings = static_cast<int>(d.chord_count());
  r.head_run = static_cast<int>(longest_head_run(d));
  r.complete = is_complete(d);
  r.odd_writhe = odd_writhe(d);
  r.owp = odd_writhe_polynomial(d);

  if (r.odd_writhe % 2 != 0) {
    r.warnings.push_back("odd writhe " + std::to_string(r.odd_writhe) + " is not even");
  }
  if (r.owp.l1_norm() % 2 != 0) {
    r.warnings.push_back("odd writhe polynomial has odd coefficient norm " + std::to_string(r.owp.l1_norm()));
  }

  if (simplify(d).empty()) {
    r.lower_items.push_back({"unknot", 0, "R1/R2 closure is empty"});
    r.upper_items.push_back({"unknot", 0, "R1/R2 closure is empty"});
    r.lower = r.upper = 0;
    r.exact = 0;
    return r;
  }

  if (known_nontrivial) r.lower_items.push_back({"nontrivial", 1, "known nontrivial knot"});
  r.lower_items.push_back({"odd-writhe", ceil_half(std::abs(r.odd_writhe)), ""});
  r.lower_items.push_back({"owp", ceil_half(r.owp.l1_norm()), ""});

  const int c = r.crossings;
  r.upper_items.push_back({"global(c)", global_upper_bound(c), "c = diagram crossings"});
  r.upper_items.push_back({"generic(c)", generic_upper_bound(c), "c = diagram crossings"});
  if (r.complete && r.head_run >= 1) {
    r.upper_items.push_back({"complete(c,h)", complete_upper_bound(c, r.head_run), "diagram-relative"});
  }
  if (family != nullptr) {
    for (auto& item : family_lower_bounds(*family)) r.lower_items.push_back(std::move(item));
    for (auto& item : family_upper_bounds(*family)) r.upper_items.push_back(std::move(item));
  }

  r.lower = 0;
  for (const auto& item : r.lower_items) r.lower = std::max(r.lower, item.value);
  r.upper = r.upper_items.front().value;
  for (const auto& item : r.upper_items) r.upper = std::min(r.upper, item.value);
  if (r.lower > r.upper) {
    r.warnings.push_back("lower bound " + std::to_string(r.lower) + " exceeds upper bound " +
                         std::to_string(r.upper));
  }
  if (r.lower == r.upper) r.exact = r.lower;
  return r;
}

std::string interval_string(const BoundReport& r) {
  if (r.exact) return std::to_string(*r.exact);
  return std::to_string(r.lower) + "-" + std::to_string(r.upper);
}

std::string to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["crossings"] = r.crossings;
  j["head_run"] = r.head_run;
  j["complete"] = r.complete;
  j["odd_writhe"] = r.odd_writhe;
  nlohmann::ordered_json poly = nlohmann::ordered_json::object();
  for (auto it = r.owp.coefficients().rbegin(); it != r.owp.coefficients().rend(); ++it) {
    poly[std::to_string(it->first)] = it->second;
  }
  j["owp"] = poly;
  j["owp_text"] = r.owp.to_string();
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["exact"] = r.exact ? nlohmann::ordered_json(*r.exact) : nlohmann::ordered_json(nullptr);
  auto items = [](const std::vector<BoundItem>& v) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& it : v) a.push_back({{"source", it.source}, {"value", it.value}, {"note", it.note}});
    return a;
  };
  j["lower_bounds"] = items(r.lower_items);
  j["upper_bounds"] = items(r.upper_items);
  if (r.certificate) j["certificate"] = *r.certificate;
  j["warnings"] = r.warnings;
  return j.dump();
}

std::string to_text(const BoundReport& r) {
  std::ostringstream os;
  auto row = [&](const std::string& key, const std::string& value) {
    os << std::left << std::setw(14) << key << value << '\n';
  };
  row("crossings", std::to_string(r.crossings));
  row("head run", std::to_string(r.head_run));
  row("complete", r.complete ? "yes" : "no");
  row("odd writhe", std::to_string(r.odd_writhe));
  row("W(t)", r.owp.to_string());
  row("F(K)", interval_string(r));
  for (const auto& it : r.lower_items) {
    row("  lower", it.source + " = " + std::to_string(it.value) + (it.note.empty() ? "" : "  (" + it.note + ")"));
  }
  for (const auto& it : r.upper_items) {
    row("  upper", it.source + " = " + std::to_string(it.value) + (it.note.empty() ? "" : "  (" + it.note + ")"));
  }
  if (r.certificate) row("certificate", *r.certificate);
  for (const auto& w : r.warnings) row("warning", w);
  return os.str();
}

}  // namespace vknot
