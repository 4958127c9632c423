// Regenerates and re-verifies the derived data frozen into the built-in
// tables: class sizes, element orders, power maps, and the class fusion
// S4xC2 -> S4. Character values are the classical published ones; this tool
// covers the parts the publications leave to the reader.
//
//   regen_tables            verify everything, print a summary
//   regen_tables classes G  print brute-forced class metadata (G built-in)
//   regen_tables fusion     print the S4xC2 -> S4 fusion document

#include <cstdio>
#include <cstring>
#include <string>

#include <json.hpp>

#include "groupgen/permgroup.hpp"
#include "zc1/chartab.hpp"

namespace {

using namespace zc1;
using permgroup::Group;

permgroup::ClassStructure structure_of(const CharacterTable& t) {
  permgroup::ClassStructure s;
  for (const auto& c : t.classes) {
    s.orders.push_back(c.element_order);
    s.sizes.push_back(c.size);
    s.power_maps.push_back(c.power_map);
  }
  return s;
}

permgroup::ClassStructure structure_of(const Group& g) {
  permgroup::ClassStructure s;
  s.orders = g.data.orders;
  s.sizes = g.data.sizes;
  s.power_maps = g.data.power_maps;
  return s;
}

Group make_group(const std::string& name) {
  if (name == "S4") return permgroup::make_s4();
  if (name == "S5") return permgroup::make_s5();
  if (name == "S4xC2") return permgroup::make_s4xc2();
  if (name == "A4xS3") return permgroup::make_a4xs3();
  throw std::runtime_error("no generator construction for '" + name + "'");
}

bool verify_table(const std::string& name) {
  const CharacterTable& frozen = builtin_table(name);
  Group g = make_group(name);
  if (static_cast<std::int64_t>(g.elements.size()) != frozen.group_order) {
    std::printf("%-6s FAIL: group order %zu != %lld\n", name.c_str(), g.elements.size(),
                static_cast<long long>(frozen.group_order));
    return false;
  }
  auto bijections = permgroup::structure_bijections(structure_of(frozen), structure_of(g));
  if (bijections.empty()) {
    std::printf("%-6s FAIL: no class bijection matches orders/sizes/power maps\n",
                name.c_str());
    return false;
  }
  std::printf("%-6s ok: %lld elements, %zu classes, %zu structure bijection(s)\n",
              name.c_str(), static_cast<long long>(frozen.group_order),
              frozen.classes.size(), bijections.size());
  return true;
}

// The fusion S4xC2 -> S4 induced by forgetting the C2 coordinate. Computed
// for every admissible class bijection; they all agree because the fusion
// is invariant under the structural symmetries.
std::vector<int> compute_fusion(bool* consistent) {
  const CharacterTable& source = builtin_table("S4xC2");
  const CharacterTable& target = builtin_table("S4");
  Group big = permgroup::make_s4xc2();
  Group small = permgroup::make_s4();

  // fusion between the brute-force class lists
  std::vector<int> brute_fusion;
  for (const auto& rep : big.data.representatives) {
    permgroup::Perm image(rep.begin(), rep.begin() + 4);  // forget points 4, 5
    brute_fusion.push_back(small.class_of(image));
  }

  auto big_maps = permgroup::structure_bijections(structure_of(source), structure_of(big));
  auto small_maps = permgroup::structure_bijections(structure_of(target), structure_of(small));

  *consistent = !big_maps.empty() && !small_maps.empty();
  std::vector<int> result;
  for (const auto& bm : big_maps) {
    for (const auto& sm : small_maps) {
      std::vector<int> inv_small(sm.size());
      for (std::size_t i = 0; i < sm.size(); ++i)
        inv_small[static_cast<std::size_t>(sm[i])] = static_cast<int>(i);
      std::vector<int> fusion(bm.size());
      for (std::size_t i = 0; i < bm.size(); ++i)
        fusion[i] = inv_small[static_cast<std::size_t>(
            brute_fusion[static_cast<std::size_t>(bm[i])])];
      if (result.empty()) {
        result = fusion;
      } else if (result != fusion) {
        *consistent = false;
        return result;
      }
    }
  }
  return result;
}

int print_classes(const std::string& name) {
  Group g = make_group(name);
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.data.orders.size(); ++i) {
    nlohmann::ordered_json jc;
    jc["order"] = g.data.orders[i];
    jc["size"] = g.data.sizes[i];
    nlohmann::ordered_json pm;
    for (auto& [q, t] : g.data.power_maps[i]) pm[std::to_string(q)] = t;
    jc["power_map"] = std::move(pm);
    out.push_back(std::move(jc));
  }
  std::printf("%s\n", out.dump(2).c_str());
  return 0;
}

int print_fusion() {
  bool consistent = false;
  std::vector<int> fusion = compute_fusion(&consistent);
  if (!consistent) {
    std::fprintf(stderr, "fusion derivation is inconsistent\n");
    return 1;
  }
  ClassFusion f;
  f.source = "S4xC2";
  f.target = "S4";
  f.map = fusion;
  f.target_zc1_known = true;  // established in the literature
  std::printf("%s", serialize_fusion(f).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc >= 2 && std::strcmp(argv[1], "classes") == 0 && argc == 3)
    return print_classes(argv[2]);
  if (argc >= 2 && std::strcmp(argv[1], "fusion") == 0) return print_fusion();
  if (argc != 1) {
    std::fprintf(stderr, "usage: regen_tables [classes <table> | fusion]\n");
    return 2;
  }

  bool ok = true;
  for (const char* name : {"A4xS3", "S4", "S4xC2", "S5"}) ok &= verify_table(name);

  bool consistent = false;
  std::vector<int> fusion = compute_fusion(&consistent);
  std::printf("fusion S4xC2 -> S4:");
  for (int v : fusion) std::printf(" %d", v);
  std::printf("  (%s)\n", consistent ? "consistent" : "INCONSISTENT");
  ok &= consistent;
  return ok ? 0 : 1;
}
