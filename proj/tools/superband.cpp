// superband: command-line front end for the verification suites and the
// individual checks.
//
// Exit status: 0 when every checked identity holds, 1 when one fails, 2 for
// usage or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superband/superband.hpp"

namespace {

  using namespace superband;
  using io::json;

  constexpr int kUsage = 2;

  struct Common {
    unsigned    generators = 4;
    std::string alpha      = "xi1";
    std::string format     = "text";
    std::string out;
  };

  void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--generators,-n", c.generators, "Number of odd generators (1..16)")
        ->check(CLI::Range(1u, kMaxGenerators));
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out,-o", c.out, "Write the report here instead of stdout");
  }

  void add_alpha(CLI::App* cmd, Common& c) {
    cmd->add_option("--alpha", c.alpha, "Odd family parameter, e.g. \"xi1 + xi2*xi3*xi4\"");
  }

  void emit(Common const& c, std::string const& text) {
    if (c.out.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') {
        std::cout << '\n';
      }
      return;
    }
    std::ofstream file(c.out, std::ios::binary);
    if (!file) {
      throw ConfigError("cannot write '" + c.out + "'");
    }
    file << text << '\n';
  }

  /// A family name (P, Q, Y, E, T, Z, A) or a JSON file holding a family.
  ParamMatrix load_family(std::string const& source, Element const& alpha) {
    if (source.size() == 1) {
      return make_family(parse_family_kind(source), alpha);
    }
    auto value = io::parse_input(source);
    if (auto const* f = std::get_if<ParamMatrix>(&value)) {
      return *f;
    }
    if (auto const* m = std::get_if<GrassmannMatrix>(&value)) {
      return lift(*m);
    }
    throw ConfigError("'" + source + "' does not hold a family or a supermatrix");
  }

  std::string yes_no(bool b) {
    return b ? "yes" : "no";
  }

  // ---------------------------------------------------------------------------

  int cmd_verify(SuiteConfig cfg, std::string const& suite, Common const& c,
                 bool timings) {
    if (char const* env = std::getenv("SUPERBAND_SEED")) {
      try {
        std::size_t used = 0;
        cfg.seed         = std::stoull(env, &used);
        if (env[used] != '\0') {
          throw std::invalid_argument(env);
        }
      } catch (std::exception const&) {
        throw ConfigError(std::string("SUPERBAND_SEED is not a number: ") + env);
      }
    }
    cfg.generators = c.generators;
    cfg.suite      = parse_suite(suite);
    cfg.format     = c.format == "json" ? Format::json : Format::text;
    auto report    = run_suite(cfg);
    emit(c, cfg.format == Format::json ? report.to_json(timings).dump(2)
                                       : report.to_text(timings));
    return report.exit_code();
  }

  int cmd_table(Common const& c) {
    auto alg   = create_algebra(c.generators);
    auto alpha = parse_element(alg, c.alpha);
    auto table = cayley_table_verify(alpha);
    if (c.format == "json") {
      json cells = json::array();
      for (auto const& row : table.cells) {
        json r = json::array();
        for (auto const& cell : row) {
          r.push_back({{"row", cell.row},
                       {"col", cell.col},
                       {"computed", cell.computed},
                       {"reference", cell.reference},
                       {"matches", cell.matches()}});
        }
        cells.push_back(std::move(r));
      }
      json d = json::array();
      for (auto const& cell : table.discrepancies) {
        d.push_back({{"row", cell.row},
                     {"col", cell.col},
                     {"computed", cell.computed},
                     {"reference", cell.reference},
                     {"product", io::to_json(cell.product)}});
      }
      emit(c, json{{"alpha", io::to_json(alpha)},
                   {"operands", table.operands},
                   {"cells", cells},
                   {"discrepancies", d},
                   {"closed", table.closed},
                   {"associative", table.upper_left_associative}}
                  .dump(2));
    } else {
      std::string out = "row x col; '*' marks a cell that differs from the reference table\n";
      out += "         ";
      for (auto const& op : table.operands) {
        out += op + std::string(op.size() < 9 ? 9 - op.size() : 1, ' ');
      }
      out += '\n';
      for (auto const& row : table.cells) {
        out += row.front().row + std::string(9 - row.front().row.size(), ' ');
        for (auto const& cell : row) {
          auto label = cell.computed + (cell.matches() ? "" : "*");
          out += label + std::string(label.size() < 9 ? 9 - label.size() : 1, ' ');
        }
        out += '\n';
      }
      for (auto const& cell : table.discrepancies) {
        out += cell.row + " x " + cell.col + ": computed " + cell.computed
               + ", reference " + cell.reference + '\n';
      }
      out += "closed: " + yes_no(table.closed)
             + ", associative on {P(t), P(s), A, Z}: "
             + yes_no(table.upper_left_associative) + '\n';
      emit(c, out);
    }
    return table.closed && table.upper_left_associative ? 0 : 1;
  }

  int cmd_check_band(Common const& c, std::vector<std::string> const& inputs,
                     std::string const& family) {
    auto alg   = create_algebra(c.generators);
    auto alpha = parse_element(alg, c.alpha);
    if (!family.empty() || inputs.size() == 1) {
      auto f = load_family(family.empty() ? inputs.front() : family, alpha);
      auto comps  = components_of(f);
      auto report = band_component_system_check(comps);
      if (c.format == "json") {
        emit(c, json{{"band_equation", report.band_equation},
                     {"component_system", report.holds()},
                     {"failures", report.failures}}
                    .dump(2));
      } else {
        std::string out = "band equation K(t)K(s) = K(t): " + yes_no(report.band_equation)
                          + "\ncomponent system: " + yes_no(report.holds()) + '\n';
        for (auto const& fail : report.failures) {
          out += "  fails " + fail + '\n';
        }
        emit(c, out);
      }
      if (!report.consistent()) {
        return 1;
      }
      return report.band_equation ? 0 : 1;
    }
    if (inputs.size() != 2) {
      throw ConfigError("check-band takes one family or two supermatrices");
    }
    auto as_matrix = [](std::string const& path) {
      auto v = io::parse_input(path);
      if (auto const* m = std::get_if<GrassmannMatrix>(&v)) {
        return *m;
      }
      throw ConfigError("'" + path + "' does not hold a supermatrix");
    };
    auto m      = as_matrix(inputs[0]);
    auto n      = as_matrix(inputs[1]);
    auto report = band_pair_check(m, n);
    if (c.format == "json") {
      json j{{"relation", to_string(report.relation)},
             {"consistent", report.consistent()}};
      if (report.components) {
        auto const& k = *report.components;
        j["components"] = {{"even_block_vanishes", k.even_block_vanishes},
                           {"left_gamma", k.left_gamma},
                           {"left_delta", k.left_delta},
                           {"left_b", k.left_b},
                           {"right_gamma", k.right_gamma},
                           {"right_delta", k.right_delta},
                           {"right_b", k.right_b}};
      }
      emit(c, j.dump(2));
    } else {
      emit(c, std::string("relation: ") + to_string(report.relation)
                  + "\nblock conditions agree: " + yes_no(report.consistent()) + '\n');
    }
    if (!report.consistent()) {
      return 1;
    }
    return report.relation == BandRelation::neither ? 1 : 0;
  }

  json relation_json(Relation const& r) {
    json j{{"id", r.id}, {"statement", r.statement}, {"holds", r.holds}};
    if (!r.holds) {
      j["counterexample"] = io::to_json(r.defect);
    }
    return j;
  }

  template <typename M>
  std::string matrix_text(M const& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
      out += "  [";
      for (std::size_t j = 0; j < m.size(); ++j) {
        out += (j ? ", " : "") + m(i, j).to_string();
      }
      out += "]\n";
    }
    return out;
  }

  int cmd_analyze(Common const& c, std::string const& family,
                  std::string const& report_kind) {
    auto alg   = create_algebra(c.generators);
    auto alpha = parse_element(alg, c.alpha);
    auto f     = load_family(family, alpha);
    json        out;
    std::string detail;
    int  code  = 0;
    if (report_kind == "equivalence") {
      auto r = equivalence_report(f, true);
      json rel = json::array();
      for (auto const& x : r.relations) {
        rel.push_back(relation_json(x));
      }
      out  = {{"band", r.band},
              {"functional", r.functional},
              {"differential", r.differential},
              {"agree", r.agree()},
              {"relations", rel}};
      code = r.agree() ? 0 : 1;
    } else {
      auto comps = components_of(f);
      if (report_kind == "components") {
        json list = json::array();
        for (std::size_t m = 0; m < comps.components().size(); ++m) {
          list.push_back(io::to_json(comps[m]));
          detail += "K" + std::to_string(m) + ":\n" + matrix_text(comps[m]);
        }
        auto sys = band_component_system_check(comps);
        out      = {{"components", list},
                    {"band_equation", sys.band_equation},
                    {"failures", sys.failures}};
        code     = sys.consistent() ? 0 : 1;
      } else if (report_kind == "residual") {
        auto r = n_functional_residual(comps);
        detail = "raw:\n" + matrix_text(r.raw) + "double sum:\n" + matrix_text(r.taylor);
        out    = {{"raw", io::to_json(r.raw)},
                  {"taylor", io::to_json(r.taylor)},
                  {"matches", r.matches()}};
      } else {
        auto d = n_differential_defect(comps);
        detail = "defect:\n" + matrix_text(d.defect) + "U_n:\n" + matrix_text(d.u);
        out    = {{"defect", io::to_json(d.defect)},
                  {"u", io::to_json(d.u)},
                  {"matches", d.matches()}};
      }
    }
    if (c.format == "json") {
      emit(c, out.dump(2));
    } else {
      std::string text = detail;
      for (auto const& [key, value] : out.items()) {
        if (value.is_boolean()) {
          text += key + ": " + yes_no(value.get<bool>()) + '\n';
        }
      }
      if (out.contains("relations")) {
        for (auto const& r : out["relations"]) {
          text += "  " + r["id"].get<std::string>() + " ("
                  + r["statement"].get<std::string>()
                  + "): " + yes_no(r["holds"].get<bool>()) + '\n';
        }
      }
      if (out.contains("failures")) {
        for (auto const& f : out["failures"]) {
          text += "  fails " + f.get<std::string>() + '\n';
        }
      }
      emit(c, text);
    }
    return code;
  }

  int cmd_resolvent(Common const& c, std::string const& family,
                    std::string const& check) {
    auto alg    = create_algebra(c.generators);
    auto alpha  = parse_element(alg, c.alpha);
    auto f      = load_family(family, alpha);
    auto r      = laplace(f);
    auto defect = resolvent_defect(r);
    bool pass   = true;
    if (check == "rrt") {
      pass = defect.is_zero();
    } else if (check == "rra") {
      pass = defect == generator_resolvent_factor() * lift_laurent(generator_of(f));
    }
    if (c.format == "json") {
      json j{{"resolvent", io::to_json(r)}, {"defect", io::to_json(defect)}};
      if (check != "none") {
        j["check"]  = check;
        j["status"] = pass ? "pass" : "fail";
      }
      emit(c, j.dump(2));
    } else {
      std::string out = "R(z):\n" + matrix_text(r)
                        + "R(z) - R(w) - (w - z) R(z) R(w):\n" + matrix_text(defect);
      if (check != "none") {
        out += check + ": " + (pass ? "pass" : "FAIL") + '\n';
      }
      emit(c, out);
    }
    return pass ? 0 : 1;
  }

  int cmd_orbit(Common const& c, std::string const& family, std::string const& x0_path) {
    auto alg   = create_algebra(c.generators);
    auto alpha = parse_element(alg, c.alpha);
    auto f     = load_family(family, alpha);
    auto value = io::parse_input(x0_path);
    auto const* x0 = std::get_if<GrassmannVector>(&value);
    if (x0 == nullptr) {
      throw ConfigError("'" + x0_path + "' does not hold a vector");
    }
    auto x      = orbit(f, *x0);
    auto defect = cauchy_defect(f, *x0);
    auto kind   = moving_time_check(f);
    if (c.format == "json") {
      auto poly_list = [](std::vector<TimePoly> const& v) {
        json a = json::array();
        for (auto const& p : v) {
          a.push_back(io::to_json(p));
        }
        return a;
      };
      emit(c, json{{"orbit", {{"even", poly_list(x.even_part())},
                              {"odd", poly_list(x.odd_part())}}},
                   {"cauchy_defect_zero", defect.is_zero()},
                   {"evolution", to_string(kind)}}
                  .dump(2));
    } else {
      std::string out = "X(t) = (";
      for (std::size_t i = 0; i < x.p() + x.q(); ++i) {
        out += (i ? ", " : "") + x[i].to_string();
      }
      out += ")\nX'(t) = A X(t): " + yes_no(defect.is_zero())
             + "\nevolution: " + to_string(kind) + '\n';
      emit(c, out);
    }
    return defect.is_zero() ? 0 : 1;
  }

  int cmd_annihilator(Common const& c, std::vector<std::string> const& span_text,
                      std::string const& in) {
    auto alg = create_algebra(c.generators);
    std::vector<Element> span;
    for (auto const& s : span_text) {
      span.push_back(parse_element(alg, s));
    }
    if (!in.empty()) {
      auto j = io::parse_json(io::read_file(in));
      if (!j.is_array()) {
        throw ParseError("annihilator input must be an array of elements");
      }
      for (auto const& e : j) {
        span.push_back(io::element_from_json(e));
      }
    }
    auto ann = annihilator_odd(alg, span);
    if (c.format == "json") {
      json basis = json::array();
      for (auto const& b : ann.basis) {
        basis.push_back(io::to_json(b));
      }
      emit(c, json{{"dimension", ann.basis.size()}, {"basis", basis}}.dump(2));
    } else {
      std::string out = "dimension " + std::to_string(ann.basis.size()) + '\n';
      for (auto const& b : ann.basis) {
        out += "  " + b.to_string() + '\n';
      }
      emit(c, out);
    }
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Grassmann supermatrix semigroup identities"};
  app.require_subcommand(1);

  Common      common;
  SuiteConfig cfg;
  std::string suite = "all", family = "P", check = "none", report = "equivalence";
  std::string x0, in;
  std::vector<std::string> inputs, span;
  bool timings = false;

  auto* verify = app.add_subcommand("verify", "Run the seeded verification suites");
  add_common(verify, common);
  verify->add_option("--seed", cfg.seed, "PRNG seed (SUPERBAND_SEED overrides)");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"algebra", "supermatrix", "gamma", "families",
                             "analysis", "resolvent", "all"}));
  verify->add_option("--samples", cfg.samples, "Random instances per check")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--timings", timings, "Include durations in JSON output");

  auto* table = app.add_subcommand("table", "Multiplication table of P, A, Z, Y, T");
  add_common(table, common);
  add_alpha(table, common);

  auto* band = app.add_subcommand("check-band", "Band relation of two supermatrices or a family");
  add_common(band, common);
  add_alpha(band, common);
  band->add_option("--in", inputs, "Supermatrix or family JSON (repeat for a pair)");
  band->add_option("--family", family, "Family name or JSON file");

  auto* analyze = app.add_subcommand("analyze", "Component analysis of a polynomial family");
  add_common(analyze, common);
  add_alpha(analyze, common);
  analyze->add_option("--family", family, "Family name or JSON file");
  analyze->add_option("--report", report, "Report kind")
      ->check(CLI::IsMember({"equivalence", "components", "residual", "defect"}));

  auto* resolvent = app.add_subcommand("resolvent", "Formal Laplace image and resolvent defect");
  add_common(resolvent, common);
  add_alpha(resolvent, common);
  resolvent->add_option("--family", family, "Family name or JSON file");
  resolvent->add_option("--check", check, "Identity to check")
      ->check(CLI::IsMember({"rrt", "rra", "none"}));

  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of an initial vector under a family");
  add_common(orbit_cmd, common);
  add_alpha(orbit_cmd, common);
  orbit_cmd->add_option("--family", family, "Family name or JSON file");
  orbit_cmd->add_option("--x0", x0, "Initial vector JSON")->required();

  auto* ann = app.add_subcommand("annihilator", "Basis of the odd annihilator of a span");
  add_common(ann, common);
  ann->add_option("--element,-e", span, "Spanning element, e.g. \"xi1 + xi2*xi3*xi4\"");
  ann->add_option("--in", in, "JSON array of spanning elements");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  // Family-only invocations of check-band should not see the default "P".
  bool family_given = band->count("--family") > 0;

  try {
    if (*verify) {
      return cmd_verify(cfg, suite, common, timings);
    }
    if (*table) {
      return cmd_table(common);
    }
    if (*band) {
      return cmd_check_band(common, inputs, family_given ? family : std::string());
    }
    if (*analyze) {
      return cmd_analyze(common, family, report);
    }
    if (*resolvent) {
      return cmd_resolvent(common, family, check);
    }
    if (*orbit_cmd) {
      return cmd_orbit(common, family, x0);
    }
    if (*ann) {
      return cmd_annihilator(common, span, in);
    }
  } catch (superband::Error const& e) {
    std::cerr << "superband: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
