#include "wittnum/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace wittnum {

using nlohmann::json;

namespace {

Kodaira kodaira_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "-inf" || s == "-infinity") {
      return Kodaira::MinusInfinity;
    }
    if (s == "0") {
      return Kodaira::Zero;
    }
    if (s == "1") {
      return Kodaira::One;
    }
    if (s == "2") {
      return Kodaira::Two;
    }
  } else if (j.is_number_integer()) {
    switch (j.get<std::int64_t>()) {
      case 0:
        return Kodaira::Zero;
      case 1:
        return Kodaira::One;
      case 2:
        return Kodaira::Two;
      default:
        break;
    }
  }
  throw std::invalid_argument("kodaira must be \"-inf\", 0, 1 or 2");
}

json kodaira_to_json(Kodaira k) {
  switch (k) {
    case Kodaira::MinusInfinity:
      return json("-inf");
    case Kodaira::Zero:
      return json(0);
    case Kodaira::One:
      return json(1);
    default:
      return json(2);
  }
}

}  // namespace

json int_to_json(const Int& value) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (value >= lo && value <= hi) {
    return json(value.convert_to<std::int64_t>());
  }
  return json(value.str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      return Int(j.get<std::uint64_t>());
    }
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer string '" + j.get<std::string>() + "'");
    }
  }
  throw std::invalid_argument("expected an integer (number or decimal string), got " +
                              j.dump());
}

json rat_to_json(const Rat& value) { return json(rat_string(value)); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) {
    return parse_rat(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rat(int_from_json(j));
  }
  throw std::invalid_argument("expected an exact rational (fraction string), got " +
                              j.dump());
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) {
      r.push_back(int_to_json(v));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("matrix must be an array of rows");
  }
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) {
      throw std::invalid_argument("matrix row must be an array");
    }
    std::vector<Int> r;
    for (const auto& v : row) {
      r.push_back(int_from_json(v));
    }
    m.push_back(std::move(r));
  }
  return m;
}

json profile_to_json(const SlopeProfile& p) {
  json slopes = json::array();
  for (const auto& e : p.entries) {
    slopes.push_back(json::array({rat_to_json(e.lambda), int_to_json(e.mult)}));
  }
  return json{{"degree", p.degree}, {"slopes", std::move(slopes)}};
}

SlopeProfile profile_from_json(const json& j) {
  SlopeProfile p;
  p.degree = j.at("degree").get<int>();
  for (const auto& pair : j.at("slopes")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("slope entry must be a [lambda, multiplicity] pair");
    }
    p.entries.push_back({rat_from_json(pair[0]), int_from_json(pair[1])});
  }
  return p;
}

json crystal_to_json(const CrystalProfile& c) {
  json profiles = json::array();
  for (const auto& p : c.profiles) {
    profiles.push_back(profile_to_json(p));
  }
  return json{{"dim", c.dim}, {"profiles", std::move(profiles)}};
}

CrystalProfile crystal_from_json(const json& j) {
  CrystalProfile c;
  c.dim = j.at("dim").get<int>();
  for (const auto& p : j.at("profiles")) {
    c.profiles.push_back(profile_from_json(p));
  }
  return c;
}

json surface_to_json(const SurfaceInvariants& s) {
  json j{{"p", int_to_json(s.p)},
         {"c1sq", int_to_json(s.c1sq)},
         {"c2", int_to_json(s.c2)},
         {"b1", int_to_json(s.b1)},
         {"b2", int_to_json(s.b2)},
         {"q", int_to_json(s.q)},
         {"h01", int_to_json(s.h01)},
         {"pg", int_to_json(s.pg)},
         {"chi", int_to_json(s.chi)},
         {"kodaira", kodaira_to_json(s.kodaira)}};
  if (s.h11.has_value()) {
    j["h11"] = int_to_json(*s.h11);
  }
  j["flags"] = json{{"minimal", s.flags.minimal},
                    {"hodge_witt", s.flags.hodge_witt},
                    {"ordinary", s.flags.ordinary},
                    {"mazur_ogus", s.flags.mazur_ogus},
                    {"pic_reduced", s.flags.pic_reduced},
                    {"h2cris_torsion_free", s.flags.h2cris_torsion_free},
                    {"supersingular", s.flags.supersingular},
                    {"quasi_elliptic", s.flags.quasi_elliptic}};
  if (s.h2_slopes.has_value()) {
    j["h2_slopes"] = profile_to_json(*s.h2_slopes);
  }
  return j;
}

SurfaceInvariants surface_from_json(const json& j) {
  SurfaceInvariants s;
  s.p = int_from_json(j.at("p"));
  s.c1sq = int_from_json(j.at("c1sq"));
  s.c2 = int_from_json(j.at("c2"));
  s.b1 = int_from_json(j.at("b1"));
  s.b2 = int_from_json(j.at("b2"));
  s.q = int_from_json(j.at("q"));
  s.h01 = int_from_json(j.at("h01"));
  s.pg = int_from_json(j.at("pg"));
  s.chi = int_from_json(j.at("chi"));
  s.kodaira = kodaira_from_json(j.at("kodaira"));
  if (j.contains("h11")) {
    s.h11 = int_from_json(j.at("h11"));
  }
  if (j.contains("flags")) {
    const json& f = j.at("flags");
    const auto flag = [&f](const char* name) {
      return f.contains(name) && f.at(name).get<bool>();
    };
    s.flags.minimal = flag("minimal");
    s.flags.hodge_witt = flag("hodge_witt");
    s.flags.ordinary = flag("ordinary");
    s.flags.mazur_ogus = flag("mazur_ogus");
    s.flags.pic_reduced = flag("pic_reduced");
    s.flags.h2cris_torsion_free = flag("h2cris_torsion_free");
    s.flags.supersingular = flag("supersingular");
    s.flags.quasi_elliptic = flag("quasi_elliptic");
  }
  if (j.contains("h2_slopes")) {
    s.h2_slopes = profile_from_json(j.at("h2_slopes"));
  }
  return s;
}

json table_to_json(const HodgeWittTable& t) {
  json j{{"dim", t.dim}, {"hW", matrix_to_json(t.hW)}};
  if (t.m.has_value()) {
    j["m"] = matrix_to_json(*t.m);
  }
  if (t.T.has_value()) {
    j["T"] = matrix_to_json(*t.T);
  }
  if (t.hodge.has_value()) {
    j["hodge"] = matrix_to_json(*t.hodge);
  }
  if (t.chi.has_value()) {
    json chi = json::array();
    for (const auto& v : *t.chi) {
      chi.push_back(int_to_json(v));
    }
    j["chi"] = std::move(chi);
  }
  return j;
}

HodgeWittTable table_from_json(const json& j) {
  HodgeWittTable t;
  t.dim = j.at("dim").get<int>();
  t.hW = matrix_from_json(j.at("hW"));
  if (j.contains("m")) {
    t.m = matrix_from_json(j.at("m"));
  }
  if (j.contains("T")) {
    t.T = matrix_from_json(j.at("T"));
  }
  if (j.contains("hodge")) {
    t.hodge = matrix_from_json(j.at("hodge"));
  }
  if (j.contains("chi")) {
    std::vector<Int> chi;
    for (const auto& v : j.at("chi")) {
      chi.push_back(int_from_json(v));
    }
    t.chi = std::move(chi);
  }
  return t;
}

json threefold_to_json(const ThreefoldInvariants& t) {
  json j{{"c1c2", int_to_json(t.c1c2)},
         {"b2", int_to_json(t.b2)},
         {"is_calabi_yau", t.is_calabi_yau}};
  if (t.c3.has_value()) {
    j["c3"] = int_to_json(*t.c3);
  }
  if (t.b3.has_value()) {
    j["b3"] = int_to_json(*t.b3);
  }
  if (t.hodge.has_value()) {
    j["hodge"] = matrix_to_json(*t.hodge);
  }
  if (t.hodge_witt.has_value()) {
    j["hodge_witt"] = *t.hodge_witt;
  }
  if (t.h2cris_torsion_free.has_value()) {
    j["h2cris_torsion_free"] = *t.h2cris_torsion_free;
  }
  if (t.h0_omega1_zero.has_value()) {
    j["h0_omega1_zero"] = *t.h0_omega1_zero;
  }
  return j;
}

ThreefoldInvariants threefold_from_json(const json& j) {
  ThreefoldInvariants t;
  if (j.contains("c1c2")) {
    t.c1c2 = int_from_json(j.at("c1c2"));
  }
  t.b2 = int_from_json(j.at("b2"));
  if (j.contains("c3")) {
    t.c3 = int_from_json(j.at("c3"));
  }
  if (j.contains("b3")) {
    t.b3 = int_from_json(j.at("b3"));
  }
  if (j.contains("hodge")) {
    t.hodge = matrix_from_json(j.at("hodge"));
  }
  t.is_calabi_yau = j.contains("is_calabi_yau") && j.at("is_calabi_yau").get<bool>();
  if (j.contains("hodge_witt")) {
    t.hodge_witt = j.at("hodge_witt").get<bool>();
  }
  if (j.contains("h2cris_torsion_free")) {
    t.h2cris_torsion_free = j.at("h2cris_torsion_free").get<bool>();
  }
  if (j.contains("h0_omega1_zero")) {
    t.h0_omega1_zero = j.at("h0_omega1_zero").get<bool>();
  }
  return t;
}

}  // namespace wittnum
