#include "zc1/chartab.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "zc1/numtheory.hpp"

namespace zc1 {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

int CharacterTable::class_index(const std::string& class_name) const {
  for (int i = 0; i < class_count(); ++i)
    if (classes[static_cast<std::size_t>(i)].name == class_name) return i;
  return -1;
}

int CharacterTable::power_class(int cls, std::int64_t e) const {
  if (e < 1) throw std::invalid_argument("power_class: exponent must be >= 1");
  int cur = cls;
  std::int64_t rest = e;
  for (std::int64_t q = 2; rest > 1; ++q) {
    while (rest % q == 0) {
      const auto& pm = classes[static_cast<std::size_t>(cur)].power_map;
      auto it = pm.find(q);
      if (it == pm.end())
        throw EngineError("power_class: no power-map entry for prime " +
                          std::to_string(q) + " at class " +
                          classes[static_cast<std::size_t>(cur)].name);
      cur = it->second;
      rest /= q;
    }
  }
  return cur;
}

std::string ValidationIssue::str() const {
  std::ostringstream os;
  os << what;
  if (class_index >= 0) os << " [class " << class_index << "]";
  if (character_index >= 0) os << " [character " << character_index << "]";
  return os.str();
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i)
    os << "violation " << (i + 1) << ": " << issues[i].str() << "\n";
  return os.str();
}

ValidationReport validate(const CharacterTable& t) {
  ValidationReport rep;
  auto issue = [&rep](std::string what, int ci = -1, int xi = -1) {
    rep.issues.push_back({std::move(what), ci, xi});
  };

  int m = t.class_count();
  if (m == 0) {
    issue("table has no conjugacy classes");
    return rep;
  }

  // identity class
  if (t.classes[0].element_order != 1 || t.classes[0].size != 1)
    issue("class 0 must be the identity class (order 1, size 1)", 0);
  for (int i = 1; i < m; ++i)
    if (t.classes[static_cast<std::size_t>(i)].element_order == 1)
      issue("second class of element order 1", i);

  // names
  std::set<std::string> names;
  for (int i = 0; i < m; ++i) {
    const auto& c = t.classes[static_cast<std::size_t>(i)];
    if (c.name.empty()) issue("empty class name", i);
    if (!names.insert(c.name).second) issue("duplicated class name '" + c.name + "'", i);
    if (c.size < 1) issue("class size must be positive", i);
    if (c.element_order < 1) issue("element order must be positive", i);
  }

  // sizes and exponent
  std::int64_t size_sum = 0;
  std::int64_t order_lcm = 1;
  for (const auto& c : t.classes) {
    size_sum += c.size;
    order_lcm = lcm_i64(order_lcm, c.element_order);
  }
  if (size_sum != t.group_order)
    issue("class sizes sum to " + std::to_string(size_sum) + ", expected group order " +
          std::to_string(t.group_order));
  if (order_lcm != t.exponent)
    issue("lcm of element orders is " + std::to_string(order_lcm) +
          ", expected exponent " + std::to_string(t.exponent));

  // power maps
  auto exp_primes = prime_factors(t.exponent);
  for (int i = 0; i < m; ++i) {
    const auto& c = t.classes[static_cast<std::size_t>(i)];
    for (std::int64_t q : exp_primes) {
      auto it = c.power_map.find(q);
      if (it == c.power_map.end()) {
        issue("missing power-map entry for prime " + std::to_string(q), i);
        continue;
      }
      if (it->second < 0 || it->second >= m) {
        issue("power-map entry for prime " + std::to_string(q) + " out of range", i);
        continue;
      }
      std::int64_t expected = c.element_order / gcd_i64(c.element_order, q);
      std::int64_t got = t.classes[static_cast<std::size_t>(it->second)].element_order;
      if (got != expected)
        issue("power map for prime " + std::to_string(q) + " lands on a class of order " +
              std::to_string(got) + ", expected order " + std::to_string(expected), i);
    }
    for (auto& [q, _] : c.power_map)
      if (t.exponent % q != 0)
        issue("power-map key " + std::to_string(q) + " does not divide the exponent", i);
  }

  // character matrix shape
  if (static_cast<int>(t.irreducibles.size()) != m)
    issue("table is not square: " + std::to_string(t.irreducibles.size()) +
          " irreducibles for " + std::to_string(m) + " classes");
  for (int r = 0; r < static_cast<int>(t.irreducibles.size()); ++r)
    if (static_cast<int>(t.irreducibles[static_cast<std::size_t>(r)].size()) != m)
      issue("character row has wrong length", -1, r);
  if (!rep.ok()) return rep;  // value checks below assume a square table

  // degrees
  Rational degree_square_sum(0);
  for (int r = 0; r < m; ++r) {
    const Cyclotomic& d = t.value(r, 0);
    if (!d.is_rational() || !d.rational_value().is_integer() ||
        d.rational_value().sign() <= 0) {
      issue("degree is not a positive rational integer", -1, r);
      continue;
    }
    degree_square_sum += d.rational_value() * d.rational_value();
  }
  if (degree_square_sum != Rational(t.group_order))
    issue("sum of squared degrees is " + degree_square_sum.str() +
          ", expected group order " + std::to_string(t.group_order));

  // row orthogonality, conjugation as the Galois map t -> -1
  for (int r = 0; r < m; ++r) {
    for (int s = r; s < m; ++s) {
      Cyclotomic acc;
      for (int j = 0; j < m; ++j)
        acc = acc + t.value(r, j) * t.value(s, j).conj() *
                        Rational(t.classes[static_cast<std::size_t>(j)].size);
      Cyclotomic expected(Rational(r == s ? t.group_order : 0));
      if (acc != expected)
        issue("row orthogonality fails for characters " + std::to_string(r) + " and " +
                  std::to_string(s) + " (inner product " + (acc / Rational(t.group_order)).str() +
                  ")",
              -1, r);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected integer or 'num/den' string, got " + j.dump());
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string())
    return Cyclotomic(rational_from_json(j));
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw ParseError("cyclotomic value must be int, string or {order, coeffs}: " + j.dump());
  std::int64_t n = j.at("order").get<std::int64_t>();
  if (n < 1) throw ParseError("cyclotomic order must be >= 1");
  const json& coeffs = j.at("coeffs");
  if (!coeffs.is_array()) throw ParseError("coeffs must be an array");
  Cyclotomic acc;
  std::set<std::int64_t> seen;
  for (const json& pair : coeffs) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("coeffs entries must be [exponent, rational] pairs");
    std::int64_t e = pair.at(0).get<std::int64_t>();
    if (e < 0 || e >= n)
      throw ParseError("coefficient exponent " + std::to_string(e) + " out of range [0, " +
                       std::to_string(n) + ")");
    if (!seen.insert(e).second)
      throw ParseError("duplicate coefficient exponent " + std::to_string(e));
    Rational c = rational_from_json(pair.at(1));
    acc = acc + Cyclotomic::root_of_unity(n, e) * c;
  }
  return acc;
}

ordered_json rational_to_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p())
    return ordered_json(static_cast<std::int64_t>(r.numerator().get_si()));
  return ordered_json(r.str());
}

ordered_json cyclotomic_to_json(const Cyclotomic& x) {
  if (x.is_rational()) return rational_to_json(x.rational_value());
  ordered_json out;
  out["order"] = x.order();
  ordered_json coeffs = ordered_json::array();
  for (auto& [e, c] : x.coefficients()) {
    ordered_json pair = ordered_json::array();
    pair.push_back(e);
    pair.push_back(c.str());
    coeffs.push_back(std::move(pair));
  }
  out["coeffs"] = std::move(coeffs);
  return out;
}

json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON document");
  return j;
}

}  // namespace

std::string serialize_cyclotomic(const Cyclotomic& value) {
  return cyclotomic_to_json(value).dump();
}

Cyclotomic parse_cyclotomic(const std::string& json_text) {
  try {
    return cyclotomic_from_json(parse_json_text(json_text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("cyclotomic: ") + e.what());
  }
}

CharacterTable parse_table_unchecked(const std::string& json_text) {
  json j = parse_json_text(json_text);
  try {
    if (!j.is_object()) throw ParseError("table document must be a JSON object");
    for (const char* key : {"name", "group_order", "exponent", "classes", "irreducibles"})
      if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");

    CharacterTable t;
    t.name = j.at("name").get<std::string>();
    t.group_order = j.at("group_order").get<std::int64_t>();
    t.exponent = j.at("exponent").get<std::int64_t>();
    if (t.group_order < 1 || t.exponent < 1)
      throw ParseError("group_order and exponent must be positive");

    const json& classes = j.at("classes");
    if (!classes.is_array() || classes.empty())
      throw ParseError("'classes' must be a non-empty array");
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const json& c = classes[i];
      for (const char* key : {"name", "order", "size", "power_map"})
        if (!c.contains(key))
          throw ParseError("class " + std::to_string(i) + ": missing field '" + key + "'");
      ClassInfo info;
      info.name = c.at("name").get<std::string>();
      info.element_order = c.at("order").get<std::int64_t>();
      info.size = c.at("size").get<std::int64_t>();
      for (auto& [key, value] : c.at("power_map").items()) {
        std::size_t pos = 0;
        std::int64_t q = std::stoll(key, &pos);
        if (pos != key.size() || q < 2)
          throw ParseError("class " + std::to_string(i) + ": bad power-map key '" + key + "'");
        info.power_map[q] = value.get<int>();
      }
      t.classes.push_back(std::move(info));
    }

    const json& rows = j.at("irreducibles");
    if (!rows.is_array()) throw ParseError("'irreducibles' must be an array");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array())
        throw ParseError("character row " + std::to_string(r) + " must be an array");
      if (rows[r].size() != classes.size())
        throw ParseError("character row " + std::to_string(r) + " has " +
                         std::to_string(rows[r].size()) + " entries, expected " +
                         std::to_string(classes.size()));
      std::vector<Cyclotomic> row;
      row.reserve(rows[r].size());
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        try {
          row.push_back(cyclotomic_from_json(rows[r][c]));
        } catch (const ParseError& e) {
          throw ParseError("character row " + std::to_string(r) + ", class " +
                           std::to_string(c) + ": " + e.what());
        }
      }
      t.irreducibles.push_back(std::move(row));
    }
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("table document: ") + e.what());
  }
}

CharacterTable parse_table(const std::string& json_text) {
  CharacterTable t = parse_table_unchecked(json_text);
  ValidationReport rep = validate(t);
  if (!rep.ok()) throw TableValidationError(std::move(rep));
  return t;
}

std::string serialize_table(const CharacterTable& t) {
  ordered_json out;
  out["name"] = t.name;
  out["group_order"] = t.group_order;
  out["exponent"] = t.exponent;
  ordered_json classes = ordered_json::array();
  for (const auto& c : t.classes) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["order"] = c.element_order;
    jc["size"] = c.size;
    ordered_json pm;
    for (auto& [q, target] : c.power_map) pm[std::to_string(q)] = target;
    jc["power_map"] = std::move(pm);
    classes.push_back(std::move(jc));
  }
  out["classes"] = std::move(classes);
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.irreducibles) {
    ordered_json jrow = ordered_json::array();
    for (const auto& v : row) jrow.push_back(cyclotomic_to_json(v));
    rows.push_back(std::move(jrow));
  }
  out["irreducibles"] = std::move(rows);
  return out.dump(2) + "\n";
}

ClassFusion parse_fusion(const std::string& json_text) {
  json j = parse_json_text(json_text);
  try {
    ClassFusion f;
    for (const char* key : {"source", "target", "map"})
      if (!j.contains(key)) throw ParseError(std::string("fusion: missing field '") + key + "'");
    f.source = j.at("source").get<std::string>();
    f.target = j.at("target").get<std::string>();
    for (const json& v : j.at("map")) f.map.push_back(v.get<int>());
    if (j.contains("target_zc1_known")) f.target_zc1_known = j.at("target_zc1_known").get<bool>();
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("fusion document: ") + e.what());
  }
}

std::string serialize_fusion(const ClassFusion& f) {
  ordered_json out;
  out["source"] = f.source;
  out["target"] = f.target;
  out["map"] = f.map;
  out["target_zc1_known"] = f.target_zc1_known;
  return out.dump(2) + "\n";
}

ValidationReport validate_fusion(const ClassFusion& f, const CharacterTable& source,
                                 const CharacterTable& target) {
  ValidationReport rep;
  auto issue = [&rep](std::string what, int ci = -1) {
    rep.issues.push_back({std::move(what), ci, -1});
  };
  if (f.source != source.name)
    issue("fusion source '" + f.source + "' does not match table '" + source.name + "'");
  if (f.target != target.name)
    issue("fusion target '" + f.target + "' does not match table '" + target.name + "'");
  if (static_cast<int>(f.map.size()) != source.class_count()) {
    issue("fusion map has " + std::to_string(f.map.size()) + " entries, expected " +
          std::to_string(source.class_count()));
    return rep;
  }
  for (int i = 0; i < source.class_count(); ++i) {
    int tgt = f.map[static_cast<std::size_t>(i)];
    if (tgt < 0 || tgt >= target.class_count()) {
      issue("fusion image out of range", i);
      continue;
    }
    std::int64_t so = source.classes[static_cast<std::size_t>(i)].element_order;
    std::int64_t to = target.classes[static_cast<std::size_t>(tgt)].element_order;
    if (so % to != 0)
      issue("image class order " + std::to_string(to) + " does not divide source order " +
                std::to_string(so),
            i);
  }
  if (!f.map.empty() && f.map[0] != 0) issue("identity must fuse to identity", 0);
  return rep;
}

// ---------------------------------------------------------------------------
// G x C2 tensor construction

namespace {

std::string order_letter_name(std::int64_t order, int seq) {
  std::string suffix;
  int v = seq;
  do {
    suffix.insert(suffix.begin(), static_cast<char>('a' + v % 26));
    v = v / 26 - 1;
  } while (v >= 0);
  return std::to_string(order) + suffix;
}

// Class of g^q for q coprime to the exponent: located by applying sigma_q
// to the whole character column of g, since chi(g^q) = sigma_q(chi(g)).
int power_class_by_galois(const CharacterTable& t, int cls, std::int64_t q) {
  int m = t.class_count();
  std::vector<Cyclotomic> want;
  want.reserve(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) want.push_back(t.value(r, cls).galois(q));
  for (int j = 0; j < m; ++j) {
    bool all = true;
    for (int r = 0; r < m && all; ++r) all = (t.value(r, j) == want[static_cast<std::size_t>(r)]);
    if (all) return j;
  }
  throw EngineError("no class matches the Galois-permuted column (inconsistent table)");
}

}  // namespace

CharacterTable tensor_with_c2(const CharacterTable& g) {
  CharacterTable t;
  t.name = g.name + "xC2";
  t.group_order = 2 * g.group_order;
  t.exponent = lcm_i64(2, g.exponent);

  int m = g.class_count();
  auto primes = prime_factors(t.exponent);

  // squaring map on G-classes, falling back to column Galois matching when
  // 2 does not divide the exponent of G
  std::vector<int> square_of(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (g.exponent % 2 == 0)
      square_of[static_cast<std::size_t>(i)] = g.classes[static_cast<std::size_t>(i)].power_map.at(2);
    else
      square_of[static_cast<std::size_t>(i)] = power_class_by_galois(g, i, 2);
  }

  std::map<std::int64_t, int> name_seq;
  for (int i = 0; i < m; ++i) {
    const ClassInfo& src = g.classes[static_cast<std::size_t>(i)];
    for (int eps = 0; eps < 2; ++eps) {
      ClassInfo c;
      c.element_order = eps == 0 ? src.element_order : lcm_i64(2, src.element_order);
      c.size = src.size;
      c.name = order_letter_name(c.element_order, name_seq[c.element_order]++);
      for (std::int64_t q : primes) {
        if (q == 2) {
          // (C, t)^2 = (C^2, 1); the t-coordinate always dies
          c.power_map[2] = 2 * square_of[static_cast<std::size_t>(i)];
        } else {
          int img = g.exponent % q == 0 ? src.power_map.at(q) : power_class_by_galois(g, i, q);
          c.power_map[q] = 2 * img + eps;  // odd powers keep the t-coordinate
        }
      }
      t.classes.push_back(std::move(c));
    }
  }

  for (int r = 0; r < m; ++r) {
    std::vector<Cyclotomic> with_triv, with_sign;
    with_triv.reserve(static_cast<std::size_t>(2 * m));
    with_sign.reserve(static_cast<std::size_t>(2 * m));
    for (int j = 0; j < m; ++j) {
      const Cyclotomic& v = g.value(r, j);
      with_triv.push_back(v);
      with_triv.push_back(v);
      with_sign.push_back(v);
      with_sign.push_back(-v);
    }
    t.irreducibles.push_back(std::move(with_triv));
    t.irreducibles.push_back(std::move(with_sign));
  }
  return t;
}

std::optional<std::vector<int>> derive_c2_pairing(const CharacterTable& t, int center_class) {
  int m = t.class_count();
  if (center_class < 0 || center_class >= m) return std::nullopt;
  const ClassInfo& z = t.classes[static_cast<std::size_t>(center_class)];
  if (!z.is_central() || z.element_order != 2) return std::nullopt;

  std::vector<int> partner(static_cast<std::size_t>(m), -1);
  for (int c = 0; c < m; ++c) {
    int found = -1;
    for (int d = 0; d < m; ++d) {
      bool all = true;
      for (int r = 0; r < m && all; ++r) {
        Cyclotomic expected = t.value(r, c) * t.value(r, center_class) / t.degree(r);
        all = (t.value(r, d) == expected);
      }
      if (all) {
        if (found >= 0) return std::nullopt;  // ambiguous
        found = d;
      }
    }
    if (found < 0 || found == c) return std::nullopt;  // no partner or fixed point
    partner[static_cast<std::size_t>(c)] = found;
  }
  for (int c = 0; c < m; ++c)
    if (partner[static_cast<std::size_t>(partner[static_cast<std::size_t>(c)])] != c)
      return std::nullopt;
  return partner;
}

std::vector<int> central_involution_classes(const CharacterTable& t) {
  std::vector<int> out;
  for (int i = 0; i < t.class_count(); ++i) {
    const auto& c = t.classes[static_cast<std::size_t>(i)];
    if (c.is_central() && c.element_order == 2) out.push_back(i);
  }
  return out;
}

}  // namespace zc1
