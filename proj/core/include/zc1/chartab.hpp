#ifndef ZC1_CHARTAB_HPP
#define ZC1_CHARTAB_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zc1/cyclotomic.hpp"
#include "zc1/errors.hpp"

namespace zc1 {

// One conjugacy class: label, element order, cardinality and the power map
// q -> index of the class containing g^q, for every prime q dividing the
// group exponent.
struct ClassInfo {
  std::string name;
  std::int64_t element_order = 1;
  std::int64_t size = 1;
  std::map<std::int64_t, int> power_map;

  bool is_central() const { return size == 1; }

  friend bool operator==(const ClassInfo&, const ClassInfo&) = default;
};

// Ordinary character table: class metadata plus the square matrix of
// irreducible character values (row per character, column per class, the
// first column holding the degrees).
struct CharacterTable {
  std::string name;
  std::int64_t group_order = 1;
  std::int64_t exponent = 1;
  std::vector<ClassInfo> classes;
  std::vector<std::vector<Cyclotomic>> irreducibles;

  int class_count() const { return static_cast<int>(classes.size()); }
  const Cyclotomic& value(int chi, int cls) const {
    return irreducibles[static_cast<std::size_t>(chi)][static_cast<std::size_t>(cls)];
  }
  Rational degree(int chi) const { return value(chi, 0).rational_value(); }

  int class_index(const std::string& class_name) const;  // -1 if absent

  // Repeated application of the power map: class of g^e for g in `cls`.
  int power_class(int cls, std::int64_t e) const;

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

// Conjugacy-class fusion induced by a surjection G -> Q, as shipped in
// fusion data files. `target_zc1_known` records that ZC-1 is established
// for the target group in the literature, which sharpens the quotient
// filter to trivial images only.
struct ClassFusion {
  std::string source;
  std::string target;
  std::vector<int> map;
  bool target_zc1_known = false;
};

struct ValidationIssue {
  std::string what;
  int class_index = -1;
  int character_index = -1;

  std::string str() const;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  std::string str() const;
};

// Checks every table invariant: squareness, identity class, unique names,
// class sizes summing to the group order, sum of squared degrees, exponent,
// power-map consistency and row orthogonality. Returns all violations.
ValidationReport validate(const CharacterTable& table);

// Structural JSON parse only; no semantic validation.
CharacterTable parse_table_unchecked(const std::string& json_text);

// Parse and fully validate; throws ParseError on structural problems and
// TableValidationError when invariants fail.
CharacterTable parse_table(const std::string& json_text);

std::string serialize_table(const CharacterTable& table);

// Exact JSON forms of a single value, matching the table schema.
std::string serialize_cyclotomic(const Cyclotomic& value);
Cyclotomic parse_cyclotomic(const std::string& json_text);

ClassFusion parse_fusion(const std::string& json_text);
std::string serialize_fusion(const ClassFusion& fusion);

// Checks a fusion against concrete source/target tables.
ValidationReport validate_fusion(const ClassFusion& fusion,
                                 const CharacterTable& source,
                                 const CharacterTable& target);

struct TableValidationError : std::runtime_error {
  explicit TableValidationError(ValidationReport r)
      : std::runtime_error(r.str()), report(std::move(r)) {}
  ValidationReport report;
};

// Built-in tables: "A4xS3", "S4", "S4xC2", "S5".
const CharacterTable& builtin_table(const std::string& name);
std::vector<std::string> builtin_table_names();
bool is_builtin_table(const std::string& name);

// Character table of G x C2 from the table of G: classes (C,1),(C,t)
// interleaved, characters extended by the trivial and the sign character
// of the C2 factor. Power maps: squaring drops the t-coordinate, odd
// primes preserve it. Class names are regenerated as <order><letter>.
CharacterTable tensor_with_c2(const CharacterTable& table);

// For a table of the form G x C2: partner[i] = index of the class obtained
// by multiplying class i with the generator of the central C2 factor
// (located at `center_class`). Derived exactly from character values via
// chi(c*z) = chi(c) * chi(z) / chi(1). Returns nullopt if the pairing is
// inconsistent (the table is not a C2 tensor around that class).
std::optional<std::vector<int>> derive_c2_pairing(const CharacterTable& table,
                                                  int center_class);

// Central involution classes (size 1, element order 2).
std::vector<int> central_involution_classes(const CharacterTable& table);

}  // namespace zc1

#endif
