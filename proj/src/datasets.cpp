#include "braidinv/datasets.hpp"

#include <map>

#include "braidinv/errors.hpp"

namespace braidinv {

namespace {

using nlohmann::json;

// The two sextic braid monodromies. Conventions: d = 3 strands, five
// labeled entries, one per non-transversal vertical line of the projection;
// the label legend and the fiber z-values of those lines travel as
// metadata. The tags pair the singularity types across the two datasets.
const char* kPaperSqrt2 = R"json({
  "format": 1,
  "kind": "monodromy",
  "strands": 3,
  "labels": [1, 2, 3, 4, 5],
  "entries": [
    [2, 2, 2, 2, 2, 2, 2, 2],
    [2, 2, 2, 2, 1, 1, -2, -2, -2, -2],
    [2, 2, 2, 1, 1, 1, -2, -2, -2],
    [2, 1, 1, 1, 1, -2],
    [-1, -1, -1, 2, 1, 1, 1]
  ],
  "metadata": {
    "name": "paper-sqrt2",
    "curve": "C_beta: sextic splitting as a quintic (E6 + A3 + A2) plus a line (A7 + A1), beta = sqrt(2)",
    "projection": "pencil of lines through the E6 point; tangent line at E6 at infinity",
    "label_legend": {"1": "A7", "2": "A1", "3": "A2", "4": "A3", "5": "A0"},
    "fiber_values": {
      "A7": "(90 + 9*beta)/98",
      "A3": "0",
      "A2": "1",
      "A1": "(18 + 27*beta)/56",
      "A0": "-(45 + 36*beta)/7"
    },
    "beta": "sqrt(2)"
  }
})json";

const char* kPaperNegSqrt2 = R"json({
  "format": 1,
  "kind": "monodromy",
  "strands": 3,
  "labels": [3, 5, 1, 4, 2],
  "entries": [
    [2, 2, 2],
    [2, -1, 2, 1, -2, 1, -2],
    [2, 1, 1, 1, 1, 1, 1, 1, 1, -2],
    [-1, -1, 2, 2, 2, 2, 1, 1],
    [-1, -1, -1, 2, 2, 1, 1, 1]
  ],
  "metadata": {
    "name": "paper-neg-sqrt2",
    "curve": "C_beta: sextic splitting as a quintic (E6 + A3 + A2) plus a line (A7 + A1), beta = -sqrt(2)",
    "projection": "pencil of lines through the E6 point; tangent line at E6 at infinity",
    "label_legend": {"1": "A7", "2": "A1", "3": "A2", "4": "A3", "5": "A0"},
    "fiber_values": {
      "A7": "(90 + 9*beta)/98",
      "A3": "0",
      "A2": "1",
      "A1": "(18 + 27*beta)/56",
      "A0": "-(45 + 36*beta)/7"
    },
    "beta": "-sqrt(2)"
  }
})json";

json sigma3_doc(const std::string& name, std::vector<std::vector<int>> entries,
                const std::string& description) {
  json j;
  j["format"] = 1;
  j["kind"] = "tuple";
  j["ambient"] = json{{"type", "sym"}, {"degree", 3}};
  j["entries"] = entries;
  j["metadata"] = json{{"name", name}, {"elements", description}};
  return j;
}

std::map<std::string, json> build_registry() {
  std::map<std::string, json> reg;
  reg["paper-sqrt2"] = json::parse(kPaperSqrt2);
  reg["paper-neg-sqrt2"] = json::parse(kPaperNegSqrt2);
  reg["sigma3-1"] = sigma3_doc("sigma3-1", {{2, 1, 3}, {3, 2, 1}, {1, 2, 3}}, "(1,2), (1,3), ()");
  reg["sigma3-2"] =
      sigma3_doc("sigma3-2", {{2, 1, 3}, {3, 2, 1}, {2, 1, 3}}, "(1,2), (1,3), (1,2)");
  reg["sigma3-3"] =
      sigma3_doc("sigma3-3", {{2, 1, 3}, {2, 3, 1}, {1, 2, 3}}, "(1,2), (1,2,3), ()");
  reg["sigma3-4"] =
      sigma3_doc("sigma3-4", {{2, 3, 1}, {2, 3, 1}, {2, 1, 3}}, "(1,2,3), (1,2,3), (1,2)");
  reg["sigma3-5"] =
      sigma3_doc("sigma3-5", {{2, 1, 3}, {2, 1, 3}, {2, 3, 1}}, "(1,2), (1,2), (1,2,3)");
  reg["sigma3-6"] =
      sigma3_doc("sigma3-6", {{2, 1, 3}, {3, 2, 1}, {2, 3, 1}}, "(1,2), (1,3), (1,2,3)");
  return reg;
}

const std::map<std::string, json>& registry() {
  static const std::map<std::string, json> reg = build_registry();
  return reg;
}

} // namespace

const std::vector<std::string>& dataset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, doc] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

json dataset(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw Error("unknown dataset '" + name + "'");
  return it->second;
}

} // namespace braidinv
