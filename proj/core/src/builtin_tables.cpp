#include <map>
#include <mutex>
#include <stdexcept>

#include "zc1/chartab.hpp"

// Built-in ordinary character tables.
//
// Character values follow the classical published tables; class order
// matches the published column order so that solution vectors print in the
// usual coordinates. "w" below denotes the primitive third root of unity
// zeta_3 (exponent 1). Class sizes and power maps are frozen from explicit
// permutation-group constructions; `tools/regen_tables` rebuilds and
// cross-checks them, and the provenance test suite re-verifies the same
// data on every run.

namespace zc1 {

namespace {

// A4 x S3, 12 classes, |G| = 72, exponent 6.
const char* kA4xS3 = R"json({
  "name": "A4xS3",
  "group_order": 72,
  "exponent": 6,
  "classes": [
    {"name": "1a", "order": 1, "size": 1,  "power_map": {"2": 0,  "3": 0}},
    {"name": "3a", "order": 3, "size": 4,  "power_map": {"2": 2,  "3": 0}},
    {"name": "3b", "order": 3, "size": 4,  "power_map": {"2": 1,  "3": 0}},
    {"name": "2a", "order": 2, "size": 3,  "power_map": {"2": 0,  "3": 3}},
    {"name": "2b", "order": 2, "size": 3,  "power_map": {"2": 0,  "3": 4}},
    {"name": "6a", "order": 6, "size": 12, "power_map": {"2": 2,  "3": 4}},
    {"name": "6b", "order": 6, "size": 12, "power_map": {"2": 1,  "3": 4}},
    {"name": "2c", "order": 2, "size": 9,  "power_map": {"2": 0,  "3": 7}},
    {"name": "3c", "order": 3, "size": 2,  "power_map": {"2": 8,  "3": 0}},
    {"name": "3d", "order": 3, "size": 8,  "power_map": {"2": 10, "3": 0}},
    {"name": "3e", "order": 3, "size": 8,  "power_map": {"2": 9,  "3": 0}},
    {"name": "6c", "order": 6, "size": 6,  "power_map": {"2": 8,  "3": 3}}
  ],
  "irreducibles": [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1],
    [1, {"order":3,"coeffs":[[1,"1"]]}, {"order":3,"coeffs":[[2,"1"]]}, 1, 1,
        {"order":3,"coeffs":[[1,"1"]]}, {"order":3,"coeffs":[[2,"1"]]}, 1, 1,
        {"order":3,"coeffs":[[1,"1"]]}, {"order":3,"coeffs":[[2,"1"]]}, 1],
    [1, {"order":3,"coeffs":[[1,"1"]]}, {"order":3,"coeffs":[[2,"1"]]}, 1, -1,
        {"order":3,"coeffs":[[1,"-1"]]}, {"order":3,"coeffs":[[2,"-1"]]}, -1, 1,
        {"order":3,"coeffs":[[1,"1"]]}, {"order":3,"coeffs":[[2,"1"]]}, 1],
    [1, {"order":3,"coeffs":[[2,"1"]]}, {"order":3,"coeffs":[[1,"1"]]}, 1, 1,
        {"order":3,"coeffs":[[2,"1"]]}, {"order":3,"coeffs":[[1,"1"]]}, 1, 1,
        {"order":3,"coeffs":[[2,"1"]]}, {"order":3,"coeffs":[[1,"1"]]}, 1],
    [1, {"order":3,"coeffs":[[2,"1"]]}, {"order":3,"coeffs":[[1,"1"]]}, 1, -1,
        {"order":3,"coeffs":[[2,"-1"]]}, {"order":3,"coeffs":[[1,"-1"]]}, -1, 1,
        {"order":3,"coeffs":[[2,"1"]]}, {"order":3,"coeffs":[[1,"1"]]}, 1],
    [2, 2, 2, 2, 0, 0, 0, 0, -1, -1, -1, -1],
    [2, {"order":3,"coeffs":[[1,"2"]]}, {"order":3,"coeffs":[[2,"2"]]}, 2, 0, 0, 0, 0, -1,
        {"order":3,"coeffs":[[1,"-1"]]}, {"order":3,"coeffs":[[2,"-1"]]}, -1],
    [2, {"order":3,"coeffs":[[2,"2"]]}, {"order":3,"coeffs":[[1,"2"]]}, 2, 0, 0, 0, 0, -1,
        {"order":3,"coeffs":[[2,"-1"]]}, {"order":3,"coeffs":[[1,"-1"]]}, -1],
    [3, 0, 0, -1, -3, 0, 0, 1, 3, 0, 0, -1],
    [3, 0, 0, -1, 3, 0, 0, -1, 3, 0, 0, -1],
    [6, 0, 0, -2, 0, 0, 0, 0, -3, 0, 0, 1]
  ]
})json";

// S4, 5 classes, |G| = 24, exponent 12.
const char* kS4 = R"json({
  "name": "S4",
  "group_order": 24,
  "exponent": 12,
  "classes": [
    {"name": "1a", "order": 1, "size": 1, "power_map": {"2": 0, "3": 0}},
    {"name": "2a", "order": 2, "size": 6, "power_map": {"2": 0, "3": 1}},
    {"name": "2b", "order": 2, "size": 3, "power_map": {"2": 0, "3": 2}},
    {"name": "3a", "order": 3, "size": 8, "power_map": {"2": 3, "3": 0}},
    {"name": "4a", "order": 4, "size": 6, "power_map": {"2": 2, "3": 4}}
  ],
  "irreducibles": [
    [1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1],
    [2, 0, 2, -1, 0],
    [3, 1, -1, 0, -1],
    [3, -1, -1, 0, 1]
  ]
})json";

// S4 x C2, 10 classes, |G| = 48, exponent 12.
const char* kS4xC2 = R"json({
  "name": "S4xC2",
  "group_order": 48,
  "exponent": 12,
  "classes": [
    {"name": "1a", "order": 1, "size": 1, "power_map": {"2": 0, "3": 0}},
    {"name": "2a", "order": 2, "size": 6, "power_map": {"2": 0, "3": 1}},
    {"name": "2b", "order": 2, "size": 1, "power_map": {"2": 0, "3": 2}},
    {"name": "3a", "order": 3, "size": 8, "power_map": {"2": 3, "3": 0}},
    {"name": "2c", "order": 2, "size": 3, "power_map": {"2": 0, "3": 4}},
    {"name": "2d", "order": 2, "size": 6, "power_map": {"2": 0, "3": 5}},
    {"name": "4a", "order": 4, "size": 6, "power_map": {"2": 4, "3": 6}},
    {"name": "6a", "order": 6, "size": 8, "power_map": {"2": 3, "3": 2}},
    {"name": "2e", "order": 2, "size": 3, "power_map": {"2": 0, "3": 8}},
    {"name": "4b", "order": 4, "size": 6, "power_map": {"2": 4, "3": 9}}
  ],
  "irreducibles": [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, -1, -1, 1, 1, 1, -1, -1, -1, 1],
    [1, -1, 1, 1, 1, -1, -1, 1, 1, -1],
    [1, 1, -1, 1, 1, -1, 1, -1, -1, -1],
    [2, 0, 2, -1, 2, 0, 0, -1, 2, 0],
    [2, 0, -2, -1, 2, 0, 0, 1, -2, 0],
    [3, -1, -3, 0, -1, 1, 1, 0, 1, -1],
    [3, -1, 3, 0, -1, -1, 1, 0, -1, 1],
    [3, 1, -3, 0, -1, -1, -1, 0, 1, 1],
    [3, 1, 3, 0, -1, 1, -1, 0, -1, -1]
  ]
})json";

// S5, 7 classes, |G| = 120, exponent 60. Ships beyond the minimum set to
// exercise the unique-class shortcut at order 5.
const char* kS5 = R"json({
  "name": "S5",
  "group_order": 120,
  "exponent": 60,
  "classes": [
    {"name": "1a", "order": 1, "size": 1,  "power_map": {"2": 0, "3": 0, "5": 0}},
    {"name": "2a", "order": 2, "size": 10, "power_map": {"2": 0, "3": 1, "5": 1}},
    {"name": "2b", "order": 2, "size": 15, "power_map": {"2": 0, "3": 2, "5": 2}},
    {"name": "3a", "order": 3, "size": 20, "power_map": {"2": 3, "3": 0, "5": 3}},
    {"name": "6a", "order": 6, "size": 20, "power_map": {"2": 3, "3": 1, "5": 4}},
    {"name": "4a", "order": 4, "size": 30, "power_map": {"2": 2, "3": 5, "5": 5}},
    {"name": "5a", "order": 5, "size": 24, "power_map": {"2": 6, "3": 6, "5": 0}}
  ],
  "irreducibles": [
    [1, 1, 1, 1, 1, 1, 1],
    [1, -1, 1, 1, -1, -1, 1],
    [4, 2, 0, 1, -1, 0, -1],
    [4, -2, 0, 1, 1, 0, -1],
    [5, 1, 1, -1, 1, -1, 0],
    [5, -1, 1, -1, -1, 1, 0],
    [6, 0, -2, 0, 0, 0, 1]
  ]
})json";

const std::map<std::string, const char*>& raw_documents() {
  static const std::map<std::string, const char*> docs = {
      {"A4xS3", kA4xS3}, {"S4", kS4}, {"S4xC2", kS4xC2}, {"S5", kS5}};
  return docs;
}

}  // namespace

const CharacterTable& builtin_table(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, CharacterTable> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto doc = raw_documents().find(name);
  if (doc == raw_documents().end())
    throw std::out_of_range("unknown built-in table '" + name + "'");
  return cache.emplace(name, parse_table(doc->second)).first->second;
}

std::vector<std::string> builtin_table_names() {
  std::vector<std::string> names;
  for (auto& [name, _] : raw_documents()) names.push_back(name);
  return names;
}

bool is_builtin_table(const std::string& name) {
  return raw_documents().count(name) != 0;
}

}  // namespace zc1
