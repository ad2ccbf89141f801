#include "wittnum/cli.hpp"

#include "wittnum/biseries.hpp"
#include "wittnum/hodge_witt.hpp"
#include "wittnum/hypersurface.hpp"
#include "wittnum/json_io.hpp"
#include "wittnum/selftest.hpp"
#include "wittnum/slopes.hpp"
#include "wittnum/surface.hpp"
#include "wittnum/threefold.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace wittnum {

namespace {

using nlohmann::json;

constexpr const char* kFormats = "table, json or csv";

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') {
      quoted += "\"\"";
    } else {
      quoted += c;
    }
  }
  quoted += "\"";
  return quoted;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      out << ",";
    }
    out << csv_escape(cells[i]);
  }
  out << "\n";
}

void render_matrix(std::ostream& out, const IntMatrix& m, const std::string& indent) {
  std::vector<std::size_t> widths;
  for (const auto& row : m) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (widths.size() <= c) {
        widths.push_back(0);
      }
      widths[c] = std::max(widths[c], row[c].str().size());
    }
  }
  for (const auto& row : m) {
    out << indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string s = row[c].str();
      out << std::string(widths[c] - s.size(), ' ') << s << (c + 1 < row.size() ? "  " : "");
    }
    out << "\n";
  }
}

void render_kv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& kv) {
  std::size_t width = 0;
  for (const auto& [k, v] : kv) {
    width = std::max(width, k.size());
  }
  for (const auto& [k, v] : kv) {
    out << "  " << k << std::string(width - k.size(), ' ') << "  " << v << "\n";
  }
}

// Inclusive integer range "a" or "a..b" used by scan grids.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return lo > hi; }
};

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::int64_t v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected N or N..M, got '" + text + "'");
  }
}

// ---------------------------------------------------------------- hypersurface

struct HypersurfaceOptions {
  int dim = 2;
  int degree = 1;
  bool slope_condition = false;
  std::string format = "table";
};

json hypersurface_report_json(int n, int d, bool met) {
  const IntMatrix h = hodge_numbers_series(n, d);
  if (h != hodge_numbers_closed(n, d)) {
    throw std::domain_error("hypersurface: series and closed-form Hodge numbers disagree");
  }
  const Int b = betti_number(n, d);
  const DominoBounds dom = maximal_domino_numbers(n, d, met);
  json j;
  j["dim"] = n;
  j["degree"] = d;
  j["slope_condition"] = met;
  j["hodge"] = matrix_to_json(h);
  j["betti"] = int_to_json(b);
  j["T"] = matrix_to_json(dom.T);
  j["domino_exact"] = dom.exact;
  return j;
}

int run_hypersurface(const HypersurfaceOptions& opt, std::ostream& out) {
  const json j = hypersurface_report_json(opt.dim, opt.degree, opt.slope_condition);
  const IntMatrix h = matrix_from_json(j.at("hodge"));
  const IntMatrix T = matrix_from_json(j.at("T"));
  if (opt.format == "json") {
    out << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::vector<std::string> header{"dim", "degree", "slope_condition"};
    std::vector<std::string> row{std::to_string(opt.dim), std::to_string(opt.degree),
                                 opt.slope_condition ? "true" : "false"};
    for (int p = 0; p <= opt.dim; ++p) {
      for (int q = 0; q <= opt.dim; ++q) {
        header.push_back("h_" + std::to_string(p) + "_" + std::to_string(q));
        row.push_back(h[p][q].str());
      }
    }
    header.push_back("b_" + std::to_string(opt.dim));
    row.push_back(int_from_json(j.at("betti")).str());
    for (int p = 0; p <= opt.dim; ++p) {
      for (int q = 0; q <= opt.dim; ++q) {
        header.push_back("T_" + std::to_string(p) + "_" + std::to_string(q));
        row.push_back(T[p][q].str());
      }
    }
    write_csv_row(out, header);
    write_csv_row(out, row);
  } else {
    out << "hypersurface: dim=" << opt.dim << " degree=" << opt.degree
        << (opt.slope_condition ? " (maximal-domino slope condition met)" : "") << "\n";
    out << "h^{p,q} (rows p, columns q):\n";
    render_matrix(out, h, "  ");
    out << "b_" << opt.dim << " = " << int_from_json(j.at("betti")).str() << "\n";
    out << (j.at("domino_exact").get<bool>() ? "domino numbers T^{p,q}:"
                                             : "domino number upper bounds T^{p,q}:")
        << "\n";
    render_matrix(out, T, "  ");
  }
  return 0;
}

// ---------------------------------------------------------------- surface

struct SurfaceOptions {
  std::string input_file;
  std::int64_t p = 5;
  std::int64_t c1sq = 0;
  std::int64_t c2 = 0;
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
  std::int64_t q = 0;
  std::int64_t h01 = 0;
  std::int64_t pg = 0;
  std::optional<std::int64_t> h11;
  std::int64_t chi = 1;
  std::string kodaira = "-inf";
  bool minimal = false;
  bool hodge_witt = false;
  bool ordinary = false;
  bool mazur_ogus = false;
  bool pic_reduced = false;
  bool h2cris_torsion_free = false;
  bool supersingular = false;
  bool quasi_elliptic = false;
  std::string h2_slopes;
  std::string format = "table";
};

SurfaceInvariants surface_from_options(const SurfaceOptions& opt) {
  if (!opt.input_file.empty()) {
    std::ifstream in(opt.input_file);
    if (!in) {
      throw std::invalid_argument("cannot open input file '" + opt.input_file + "'");
    }
    json j;
    in >> j;
    return surface_from_json(j);
  }
  SurfaceInvariants s;
  s.p = opt.p;
  s.c1sq = opt.c1sq;
  s.c2 = opt.c2;
  s.b1 = opt.b1;
  s.b2 = opt.b2;
  s.q = opt.q;
  s.h01 = opt.h01;
  s.pg = opt.pg;
  if (opt.h11.has_value()) {
    s.h11 = Int(*opt.h11);
  }
  s.chi = opt.chi;
  s.kodaira = [&] {
    if (opt.kodaira == "-inf") {
      return Kodaira::MinusInfinity;
    }
    if (opt.kodaira == "0") {
      return Kodaira::Zero;
    }
    if (opt.kodaira == "1") {
      return Kodaira::One;
    }
    if (opt.kodaira == "2") {
      return Kodaira::Two;
    }
    throw std::invalid_argument("kodaira must be one of -inf, 0, 1, 2");
  }();
  s.flags.minimal = opt.minimal;
  s.flags.hodge_witt = opt.hodge_witt;
  s.flags.ordinary = opt.ordinary;
  s.flags.mazur_ogus = opt.mazur_ogus;
  s.flags.pic_reduced = opt.pic_reduced;
  s.flags.h2cris_torsion_free = opt.h2cris_torsion_free;
  s.flags.supersingular = opt.supersingular;
  s.flags.quasi_elliptic = opt.quasi_elliptic;
  if (!opt.h2_slopes.empty()) {
    const json j = json::parse(opt.h2_slopes);
    if (j.is_array()) {
      SlopeProfile prof;
      prof.degree = 2;
      for (const auto& pair : j) {
        prof.entries.push_back({rat_from_json(pair.at(0)), int_from_json(pair.at(1))});
      }
      s.h2_slopes = prof;
    } else {
      s.h2_slopes = profile_from_json(j);
    }
  }
  return s;
}

json surface_report_json(const SurfaceInvariants& s, Strictness strictness) {
  json j;
  j["invariants"] = surface_to_json(s);
  json vio = json::array();
  for (const auto& v : validate_surface(s)) {
    vio.push_back(v);
  }
  if (strictness == Strictness::Strict && s.h2_slopes.has_value()) {
    for (const auto& v : validate_profile(*s.h2_slopes, Strictness::Strict)) {
      vio.push_back("h2_slopes (strict): " + v);
    }
  }
  if (!vio.empty()) {
    j["violations"] = vio;
    return j;
  }
  // Consistency failures past this point (a domain_error from any section)
  // still produce a report, recorded as violations.
  try {
    const SurfaceReport report = hw_numbers_surface(s);
    j["hW01"] = int_to_json(report.hW01);
    j["hW02"] = int_to_json(report.hW02);
    j["hW11"] = int_to_json(report.hW11);
    if (report.m11.has_value()) {
      j["m11"] = int_to_json(*report.m11);
      j["T02"] = int_to_json(*report.T02);
    }
    json predicates;
    for (const auto& [name, value] : chern_predicates(s)) {
      predicates[name] = value;
    }
    j["predicates"] = predicates;
    json diagnostics = json::array();
    diagnostics.push_back("negativity: " + diagnose_negativity(s));
    j["diagnostics"] = diagnostics;
    const auto add_section = [&](const char* key, const auto& fn) {
      try {
        json section;
        for (const auto& [name, value] : fn()) {
          section[name] = value;
        }
        j[key] = section;
      } catch (const std::invalid_argument&) {
        // Preconditions unmet; the section does not apply to this record.
      }
    };
    add_section("raynaud_bounds", [&] { return raynaud_bounds(s); });
    add_section("sufficient_conditions_c1sq_le_5c2",
                [&] { return sufficient_conditions_c1sq_le_5c2(s); });
    try {
      const SupersingularReport dich = supersingular_dichotomy(s);
      j["supersingular_dichotomy"] =
          json{{"outcome", dich.outcome == SupersingularOutcome::IneqHolds
                               ? "INEQ_HOLDS"
                               : "NONLIFTABLE_REGIME"},
               {"note", dich.note}};
    } catch (const std::invalid_argument&) {
    }
    try {
      const OrdinaryConjectureReport ord = ordinary_conjecture_consequences(s);
      json checks;
      for (const auto& [name, value] : ord.checks) {
        checks[name] = value;
      }
      j["ordinary_conjecture_consequences"] =
          json{{"assumption_note", ord.assumption_note}, {"checks", checks}};
    } catch (const std::invalid_argument&) {
    }
  } catch (const std::domain_error& e) {
    vio.push_back(std::string("inconsistency: ") + e.what());
  }
  j["violations"] = vio;
  return j;
}

int render_surface_report(const json& j, const std::string& format, std::ostream& out) {
  const bool invalid = !j.at("violations").empty();
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    write_csv_row(out, {"name", "value"});
    for (const auto& v : j.at("violations")) {
      write_csv_row(out, {"violation", v.get<std::string>()});
    }
    if (!invalid) {
      for (const char* key : {"hW01", "hW02", "hW11", "m11", "T02"}) {
        if (j.contains(key)) {
          write_csv_row(out, {key, int_from_json(j.at(key)).str()});
        } else {
          write_csv_row(out, {key, ""});
        }
      }
      for (const auto& [name, value] : j.at("predicates").items()) {
        write_csv_row(out, {name, value.get<bool>() ? "true" : "false"});
      }
      for (const auto& d : j.at("diagnostics")) {
        write_csv_row(out, {"diagnostic", d.get<std::string>()});
      }
    }
  } else {
    out << "surface report\n";
    if (invalid) {
      out << "validation failed:\n";
      for (const auto& v : j.at("violations")) {
        out << "  - " << v.get<std::string>() << "\n";
      }
    } else {
      std::vector<std::pair<std::string, std::string>> kv;
      for (const char* key : {"hW01", "hW02", "hW11", "m11", "T02"}) {
        if (j.contains(key)) {
          kv.emplace_back(key, int_from_json(j.at(key)).str());
        }
      }
      for (const auto& [name, value] : j.at("predicates").items()) {
        kv.emplace_back(name, value.get<bool>() ? "true" : "false");
      }
      render_kv(out, kv);
      for (const auto& d : j.at("diagnostics")) {
        out << "  " << d.get<std::string>() << "\n";
      }
      for (const char* key :
           {"raynaud_bounds", "sufficient_conditions_c1sq_le_5c2"}) {
        if (j.contains(key)) {
          out << key << ":\n";
          std::vector<std::pair<std::string, std::string>> section;
          for (const auto& [name, value] : j.at(key).items()) {
            section.emplace_back(name, value.get<std::string>());
          }
          render_kv(out, section);
        }
      }
      if (j.contains("supersingular_dichotomy")) {
        out << "supersingular dichotomy: "
            << j.at("supersingular_dichotomy").at("outcome").get<std::string>() << " ("
            << j.at("supersingular_dichotomy").at("note").get<std::string>() << ")\n";
      }
      if (j.contains("ordinary_conjecture_consequences")) {
        const auto& ord = j.at("ordinary_conjecture_consequences");
        out << "ordinary-conjecture consequences ("
            << ord.at("assumption_note").get<std::string>() << "):\n";
        std::vector<std::pair<std::string, std::string>> section;
        for (const auto& [name, value] : ord.at("checks").items()) {
          section.emplace_back(name, value.get<bool>() ? "true" : "false");
        }
        render_kv(out, section);
      }
    }
  }
  return invalid ? 1 : 0;
}

// ---------------------------------------------------------------- threefold

struct ThreefoldOptions {
  std::int64_t b2 = 0;
  std::optional<std::int64_t> c3;
  std::optional<std::int64_t> b3;
  std::int64_t c1c2 = 0;
  bool calabi_yau = false;
  std::optional<bool> h0_omega1_zero;
  std::string format = "table";
};

json threefold_report_json(const ThreefoldOptions& opt) {
  ThreefoldInvariants t;
  t.b2 = opt.b2;
  t.c1c2 = opt.c1c2;
  if (opt.c3.has_value()) {
    t.c3 = Int(*opt.c3);
  }
  if (opt.b3.has_value()) {
    t.b3 = Int(*opt.b3);
  }
  t.is_calabi_yau = opt.calabi_yau;
  t.h0_omega1_zero = opt.h0_omega1_zero;
  json j;
  j["invariants"] = threefold_to_json(t);
  j["chi_omega1"] = int_to_json(chi_omega1(t));
  if (!t.is_calabi_yau) {
    return j;
  }
  const HodgeWittTable table = cy_formulaire(t);
  j["hW"] = matrix_to_json(table.hW);
  j["hW12"] = int_to_json(table.hW[1][2]);
  j["crew_formula"] = check_crew_formula(table);
  const NonliftableReport report = nonliftable_characterization(t);
  j["conditions"] = json{
      {"hw12_is_minus_one", check_status_string(report.hw12_is_minus_one)},
      {"hw12_negative", check_status_string(report.hw12_negative)},
      {"h3_torsion", check_status_string(report.h3_torsion)},
      {"b3_zero", check_status_string(report.b3_zero)},
      {"not_hw_and_m12_zero", check_status_string(report.not_hw_and_m12_zero)},
  };
  json notes = json::array();
  for (const auto& n : report.notes) {
    notes.push_back(n);
  }
  const bool liftable_possible = liftability_necessary(t);
  j["liftability_necessary_c3_le_2b2"] = liftable_possible;
  if (!liftable_possible) {
    notes.push_back("c3 > 2 b2: the threefold does not lift to characteristic zero");
  } else if (opt.h0_omega1_zero.value_or(false)) {
    notes.push_back("conjecturally liftable: c3 <= 2 b2 and H^0(Omega^1) = 0 "
                    "(assumes the liftability conjecture for Calabi-Yau threefolds)");
  }
  j["notes"] = notes;
  return j;
}

int render_threefold_report(const json& j, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    write_csv_row(out, {"name", "value"});
    write_csv_row(out, {"chi_omega1", int_from_json(j.at("chi_omega1")).str()});
    if (j.contains("hW12")) {
      write_csv_row(out, {"hW12", int_from_json(j.at("hW12")).str()});
      for (const auto& [name, value] : j.at("conditions").items()) {
        write_csv_row(out, {name, value.get<std::string>()});
      }
      write_csv_row(out, {"liftability_necessary_c3_le_2b2",
                          j.at("liftability_necessary_c3_le_2b2").get<bool>() ? "true"
                                                                              : "false"});
    }
  } else {
    out << "threefold report\n";
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("chi_omega1", int_from_json(j.at("chi_omega1")).str());
    if (j.contains("hW12")) {
      kv.emplace_back("hW12", int_from_json(j.at("hW12")).str());
      kv.emplace_back("crew_formula", j.at("crew_formula").get<bool>() ? "true" : "false");
      kv.emplace_back("liftability_necessary_c3_le_2b2",
                      j.at("liftability_necessary_c3_le_2b2").get<bool>() ? "true"
                                                                          : "false");
    }
    render_kv(out, kv);
    if (j.contains("hW")) {
      out << "hW^{i,j}:\n";
      render_matrix(out, matrix_from_json(j.at("hW")), "  ");
    }
    if (j.contains("conditions")) {
      out << "equivalent conditions:\n";
      std::vector<std::pair<std::string, std::string>> section;
      for (const auto& [name, value] : j.at("conditions").items()) {
        section.emplace_back(name, value.get<std::string>());
      }
      render_kv(out, section);
    }
    if (j.contains("notes")) {
      for (const auto& n : j.at("notes")) {
        out << "  note: " << n.get<std::string>() << "\n";
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------- szpiro

struct SzpiroOptions {
  std::int64_t g = 2;
  std::int64_t q = 2;
  std::int64_t d = 1;
  std::int64_t p = 5;
  std::int64_t b1 = 0;
  int n_max = 3;
  int m = 1;
  std::string format = "table";
};

int run_szpiro(const SzpiroOptions& opt, std::ostream& out) {
  const SzpiroParams params{Int(opt.g), Int(opt.q), Int(opt.d), Int(opt.p), Int(opt.b1)};
  std::vector<SzpiroMember> members;
  for (int n = 1; n <= opt.n_max; ++n) {
    members.push_back(szpiro_member(params, n));
  }
  const int least_n_p = szpiro_least_n_exceeding(params, 1);
  const int least_n_pm = szpiro_least_n_exceeding(params, opt.m);
  if (opt.format == "json") {
    json j;
    j["params"] = json{{"g", opt.g}, {"q", opt.q}, {"d", opt.d},
                       {"p", opt.p}, {"b1", opt.b1}};
    json rows = json::array();
    for (const auto& m : members) {
      rows.push_back(json{{"n", m.n},
                          {"c1sq", int_to_json(m.c1sq)},
                          {"c2", int_to_json(m.c2)},
                          {"hW11", int_to_json(m.hW11)}});
    }
    j["members"] = rows;
    j["least_n_with_c1sq_gt_p_c2"] = least_n_p;
    j["m"] = opt.m;
    j["least_n_with_c1sq_gt_pm_c2"] = least_n_pm;
    out << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    write_csv_row(out, {"n", "c1sq", "c2", "hW11", "least_n_with_c1sq_gt_p_c2",
                        "least_n_with_c1sq_gt_pm_c2"});
    for (const auto& m : members) {
      write_csv_row(out, {std::to_string(m.n), m.c1sq.str(), m.c2.str(), m.hW11.str(),
                          std::to_string(least_n_p), std::to_string(least_n_pm)});
    }
  } else {
    out << "iterated-Frobenius family: g=" << opt.g << " q=" << opt.q << " d=" << opt.d
        << " p=" << opt.p << " b1=" << opt.b1 << "\n";
    std::vector<std::vector<std::string>> rows{{"n", "c1sq", "c2", "hW11"}};
    for (const auto& m : members) {
      rows.push_back({std::to_string(m.n), m.c1sq.str(), m.c2.str(), m.hW11.str()});
    }
    std::vector<std::size_t> widths(4, 0);
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < 4; ++c) {
        widths[c] = std::max(widths[c], row[c].size());
      }
    }
    for (const auto& row : rows) {
      out << " ";
      for (std::size_t c = 0; c < 4; ++c) {
        out << " " << std::string(widths[c] - row[c].size(), ' ') << row[c];
      }
      out << "\n";
    }
    out << "least n with c1sq > p c2: " << least_n_p << "\n";
    if (opt.m > 1) {
      out << "least n with c1sq > p^" << opt.m << " c2: " << least_n_pm << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- scan

struct ScanOptions {
  std::string target;
  std::string dim = "2";
  std::string degree = "1";
  bool slope_condition = false;
  std::string g = "2";
  std::string q = "2";
  std::string d = "1";
  std::string p = "5";
  std::string n = "1";
  std::int64_t b1 = 0;
};

int run_scan(const ScanOptions& opt, std::ostream& out) {
  if (opt.target == "hypersurface") {
    const IntRange dims = parse_range(opt.dim);
    const IntRange degrees = parse_range(opt.degree);
    if (dims.empty() || degrees.empty()) {
      throw CLI::ValidationError("scan", "empty grid");
    }
    std::vector<std::string> header{"dim", "degree", "slope_condition"};
    for (int p = 0; p <= 4; ++p) {
      for (int q = 0; q <= 4; ++q) {
        header.push_back("h_" + std::to_string(p) + "_" + std::to_string(q));
      }
    }
    header.push_back("b_n");
    for (const char* slot : {"T_0_2", "T_0_3", "T_1_2", "T_0_4", "T_1_3", "T_2_2"}) {
      header.push_back(slot);
    }
    header.push_back("note");
    write_csv_row(out, header);
    for (std::int64_t n = dims.lo; n <= dims.hi; ++n) {
      for (std::int64_t d = degrees.lo; d <= degrees.hi; ++d) {
        std::vector<std::string> row{std::to_string(n), std::to_string(d),
                                     opt.slope_condition ? "true" : "false"};
        try {
          const IntMatrix h = hodge_numbers_closed(static_cast<int>(n), static_cast<int>(d));
          const Int b = betti_number(static_cast<int>(n), static_cast<int>(d));
          const DominoBounds dom = maximal_domino_numbers(static_cast<int>(n),
                                                          static_cast<int>(d),
                                                          opt.slope_condition);
          for (int p = 0; p <= 4; ++p) {
            for (int q = 0; q <= 4; ++q) {
              row.push_back(p <= n && q <= n ? h[p][q].str() : "");
            }
          }
          row.push_back(b.str());
          const auto slot = [&](int p, int q) {
            return (p <= n && q <= n) ? dom.T[p][q].str() : std::string();
          };
          row.push_back(slot(0, 2));
          row.push_back(slot(0, 3));
          row.push_back(slot(1, 2));
          row.push_back(slot(0, 4));
          row.push_back(slot(1, 3));
          row.push_back(slot(2, 2));
          row.push_back("");
        } catch (const std::exception& e) {
          row.resize(header.size() - 1, "");
          row.push_back(e.what());
        }
        write_csv_row(out, row);
      }
    }
    return 0;
  }
  if (opt.target == "szpiro") {
    const IntRange gs = parse_range(opt.g);
    const IntRange qs = parse_range(opt.q);
    const IntRange ds = parse_range(opt.d);
    const IntRange ps = parse_range(opt.p);
    const IntRange ns = parse_range(opt.n);
    if (gs.empty() || qs.empty() || ds.empty() || ps.empty() || ns.empty()) {
      throw CLI::ValidationError("scan", "empty grid");
    }
    write_csv_row(out, {"g", "q", "d", "p", "b1", "n", "c1sq", "c2", "hW11",
                        "c1sq_le_5c2", "c1sq_le_5c2_plus_6b1", "hw11_ge_0", "hw11_ge_b1",
                        "note"});
    for (std::int64_t g = gs.lo; g <= gs.hi; ++g) {
      for (std::int64_t q = qs.lo; q <= qs.hi; ++q) {
        for (std::int64_t d = ds.lo; d <= ds.hi; ++d) {
          for (std::int64_t p = ps.lo; p <= ps.hi; ++p) {
            for (std::int64_t n = ns.lo; n <= ns.hi; ++n) {
              std::vector<std::string> row{std::to_string(g), std::to_string(q),
                                           std::to_string(d), std::to_string(p),
                                           std::to_string(opt.b1), std::to_string(n)};
              try {
                const SzpiroParams params{Int(g), Int(q), Int(d), Int(p), Int(opt.b1)};
                const SzpiroMember m = szpiro_member(params, static_cast<int>(n));
                row.push_back(m.c1sq.str());
                row.push_back(m.c2.str());
                row.push_back(m.hW11.str());
                row.push_back(m.c1sq <= 5 * m.c2 ? "true" : "false");
                row.push_back(m.c1sq <= 5 * m.c2 + 6 * m.b1 ? "true" : "false");
                row.push_back(m.hW11 >= 0 ? "true" : "false");
                row.push_back(m.hW11 >= m.b1 ? "true" : "false");
                row.push_back("");
              } catch (const std::exception& e) {
                row.resize(13, "");
                row.push_back(e.what());
              }
              write_csv_row(out, row);
            }
          }
        }
      }
    }
    return 0;
  }
  throw CLI::ValidationError("scan", "unknown target '" + opt.target +
                                         "' (expected hypersurface or szpiro)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact p-adic numerical invariants of surfaces and threefolds"};
  app.require_subcommand(1);
  bool strict = false;
  app.add_flag("--strict", strict, "enable the strict (isoclinicity) slope validation");

  HypersurfaceOptions hyp;
  auto* hyp_cmd = app.add_subcommand(
      "hypersurface", "Hodge, Betti and domino numbers of a smooth hypersurface");
  hyp_cmd->add_option("--dim", hyp.dim, "dimension (2, 3 or 4)")
      ->required()
      ->check(CLI::Range(2, 4));
  hyp_cmd->add_option("--degree", hyp.degree, "degree d >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  hyp_cmd->add_flag("--slope-condition", hyp.slope_condition,
                    "assume the maximal-domino slope condition on the middle cohomology");
  hyp_cmd->add_option("--format", hyp.format, kFormats)->check(CLI::IsMember(
      {"table", "json", "csv"}));

  SurfaceOptions surf;
  auto* surf_cmd = app.add_subcommand("surface", "invariants and predicates of a surface");
  surf_cmd->add_option("--input", surf.input_file, "JSON file with the surface record");
  surf_cmd->add_option("--p", surf.p, "characteristic");
  surf_cmd->add_option("--c1sq", surf.c1sq, "c1^2");
  surf_cmd->add_option("--c2", surf.c2, "c2 (etale Euler characteristic)");
  surf_cmd->add_option("--b1", surf.b1, "first Betti number");
  surf_cmd->add_option("--b2", surf.b2, "second Betti number");
  surf_cmd->add_option("--q", surf.q, "irregularity (dim of the Albanese)");
  surf_cmd->add_option("--h01", surf.h01, "h^{0,1}");
  surf_cmd->add_option("--pg", surf.pg, "geometric genus h^{0,2}");
  surf_cmd->add_option("--h11", [&surf](const CLI::results_t& res) {
    surf.h11 = std::stoll(res[0]);
    return true;
  }, "h^{1,1} (optional)");
  surf_cmd->add_option("--chi", surf.chi, "chi(O_X)");
  surf_cmd->add_option("--kodaira", surf.kodaira, "-inf, 0, 1 or 2");
  surf_cmd->add_flag("--minimal", surf.minimal, "the surface is minimal");
  surf_cmd->add_flag("--hodge-witt", surf.hodge_witt, "slope spectral sequence degenerates");
  surf_cmd->add_flag("--ordinary", surf.ordinary, "ordinary surface");
  surf_cmd->add_flag("--mazur-ogus", surf.mazur_ogus,
                     "Hodge-de Rham degenerates and crystalline cohomology is torsion free");
  surf_cmd->add_flag("--pic-reduced", surf.pic_reduced, "Pic is reduced");
  surf_cmd->add_flag("--h2-torsion-free", surf.h2cris_torsion_free,
                     "H^2_cris is torsion free");
  surf_cmd->add_flag("--supersingular", surf.supersingular, "H^2_cris is pure slope one");
  surf_cmd->add_flag("--quasi-elliptic", surf.quasi_elliptic, "quasi-elliptic fibration");
  surf_cmd->add_option("--h2-slopes", surf.h2_slopes,
                       "H^2 slope profile as JSON, e.g. [[\"1/2\",2],[\"1\",18],[\"3/2\",2]]");
  surf_cmd->add_option("--format", surf.format, kFormats)->check(CLI::IsMember(
      {"table", "json", "csv"}));

  ThreefoldOptions three;
  auto* three_cmd = app.add_subcommand("threefold", "Hodge-Witt numbers of a threefold");
  three_cmd->add_option("--b2", three.b2, "second Betti number")->required();
  three_cmd->add_option("--c3", [&three](const CLI::results_t& res) {
    three.c3 = std::stoll(res[0]);
    return true;
  }, "c3 (topological Euler characteristic)");
  three_cmd->add_option("--b3", [&three](const CLI::results_t& res) {
    three.b3 = std::stoll(res[0]);
    return true;
  }, "third Betti number");
  three_cmd->add_option("--c1c2", three.c1c2, "c1.c2 (0 for Calabi-Yau)");
  three_cmd->add_flag("--calabi-yau", three.calabi_yau, "trivial canonical bundle");
  three_cmd->add_flag("--h0-omega1-zero", [&three](std::int64_t) {
    three.h0_omega1_zero = true;
  }, "no nonzero global 1-forms");
  three_cmd->add_option("--format", three.format, kFormats)->check(CLI::IsMember(
      {"table", "json", "csv"}));

  SzpiroOptions szp;
  auto* szp_cmd = app.add_subcommand(
      "szpiro", "iterated-Frobenius family with constant c2 and growing c1^2");
  szp_cmd->add_option("--g", szp.g, "fibre genus >= 2")->required();
  szp_cmd->add_option("--q", szp.q, "base genus >= 2")->required();
  szp_cmd->add_option("--d", szp.d, "degree of the Hodge bundle, >= 1")->required();
  szp_cmd->add_option("--p", szp.p, "characteristic (prime)")->required();
  szp_cmd->add_option("--b1", szp.b1, "first Betti number of the members")->required();
  szp_cmd->add_option("--n-max", szp.n_max, "largest Frobenius iterate")
      ->check(CLI::PositiveNumber);
  szp_cmd->add_option("--m", szp.m, "exponent for the c1sq > p^m c2 threshold")
      ->check(CLI::PositiveNumber);
  szp_cmd->add_option("--format", szp.format, kFormats)->check(CLI::IsMember(
      {"table", "json", "csv"}));

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "grid scan emitted as CSV");
  scan_cmd->add_option("target", scan.target, "hypersurface or szpiro")->required();
  scan_cmd->add_option("--dim", scan.dim, "dimension range, e.g. 2..4");
  scan_cmd->add_option("--degree", scan.degree, "degree range, e.g. 4..6");
  scan_cmd->add_flag("--slope-condition", scan.slope_condition,
                     "assume the maximal-domino slope condition");
  scan_cmd->add_option("--g", scan.g, "fibre genus range");
  scan_cmd->add_option("--q", scan.q, "base genus range");
  scan_cmd->add_option("--d", scan.d, "Hodge bundle degree range");
  scan_cmd->add_option("--p", scan.p, "characteristic range");
  scan_cmd->add_option("--n", scan.n, "Frobenius iterate range");
  scan_cmd->add_option("--b1", scan.b1, "first Betti number (fixed)");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in fixture checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (hyp_cmd->parsed()) {
      return run_hypersurface(hyp, out);
    }
    if (surf_cmd->parsed()) {
      const SurfaceInvariants s = surface_from_options(surf);
      const json report =
          surface_report_json(s, strict ? Strictness::Strict : Strictness::Lenient);
      return render_surface_report(report, surf.format, out);
    }
    if (three_cmd->parsed()) {
      const json report = threefold_report_json(three);
      return render_threefold_report(report, three.format, out);
    }
    if (szp_cmd->parsed()) {
      return run_szpiro(szp, out);
    }
    if (scan_cmd->parsed()) {
      return run_scan(scan, out);
    }
    if (selftest_cmd->parsed()) {
      return run_selftest(out) == 0 ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace wittnum
