#include "cvol/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cvol/diagram.hpp"

namespace cvol::cli {

namespace {

std::string num(double x, int digits = 10) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -digits)) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  return buf;
}

// "i(vol + cs i)" as in the volume tables.
std::string v0_text(const VolumeReport& r) {
  return "i(" + num(r.vol, 4) + (r.cs < 0 ? " - " : " + ") + num(std::abs(r.cs), 4) + "i)";
}

std::string t_text(std::complex<double> t) {
  if (t.imag() == 0.0) return num(t.real(), 4);
  return num(t.real(), 4) + (t.imag() < 0 ? " - " : " + ") + num(std::abs(t.imag()), 4) + "i";
}

LinkDiagram load(const RunConfig& config) {
  if (!config.input_path) throw UsageError(config.command + ": --input is required");
  return read_pd_file(*config.input_path);
}

Json diagram_json(const LinkDiagram& d, const RunConfig& config) {
  return {{"input", config.input_path.value_or("")},
          {"n_crossings", d.n_crossings()},
          {"n_sides", d.n_sides()},
          {"n_components", d.n_components()},
          {"alternating", d.is_alternating()}};
}

std::string diagram_text(const LinkDiagram& d) {
  std::ostringstream os;
  os << "diagram: " << d.n_crossings() << " crossings, " << d.n_sides() << " sides, " << d.n_components()
     << " component(s), " << (d.is_alternating() ? "alternating" : "non-alternating") << '\n';
  return os.str();
}

SearchConfig search_config(const RunConfig& config) {
  SearchConfig s;
  s.n_starts = config.n_starts;
  s.seed = config.seed;
  s.radius = config.radius;
  s.tol = config.tol;
  return s;
}

// Solutions with cross-checks filled, sorted by volume descending.
SolutionSet solve_and_check(const LinkDiagram& d, const Triangulation& tri, const RunConfig& config) {
  SolutionSet set = search(build_potential(d), search_config(config));
  for (FoundSolution& s : set.solutions) cross_check(tri, s.point.z, s.report);
  std::stable_sort(set.solutions.begin(), set.solutions.end(),
                   [](const FoundSolution& a, const FoundSolution& b) { return a.report.vol > b.report.vol; });
  set.geometric_index = geometric_index(set.solutions);
  return set;
}

Json search_json(const SolutionSet& set, const RunConfig& config) {
  return {{"starts", config.n_starts},
          {"seed", config.seed},
          {"radius", round15(config.radius)},
          {"converged", set.converged},
          {"non_essential", set.non_essential},
          {"failed", set.failed}};
}

Json tolerances_json(const Tolerances& tol) {
  return {{"solve", tol.solve}, {"flat", tol.flat}, {"essential", tol.essential}, {"dedupe", tol.dedupe}};
}

const char* kEmptyNote = "no essential solution found; the solution set S may be empty for this diagram";

// Largest residual per edge-class label.
Json residuals_by_label(const std::vector<EdgeResidual>& residuals) {
  std::map<char, double> worst;
  for (const EdgeResidual& r : residuals) worst[r.label] = std::max(worst[r.label], r.residual);
  Json j;
  for (char label : std::string("ABCD")) {
    auto it = worst.find(label);
    j[std::string(1, label)] = it == worst.end() ? Json(nullptr) : Json(round15(it->second));
  }
  return j;
}

}  // namespace

ComplexVector parse_point(const std::string& text, int n) {
  std::vector<std::complex<double>> values;
  std::stringstream entries(text);
  std::string entry;
  while (std::getline(entries, entry, ';')) {
    if (entry.find_first_not_of(" \t") == std::string::npos) continue;
    std::replace(entry.begin(), entry.end(), ',', ' ');
    std::istringstream is(entry);
    double re = 0;
    double im = 0;
    std::string rest;
    if (!(is >> re >> im) || (is >> rest)) throw UsageError("--at: expected 're,im' but got '" + entry + "'");
    values.emplace_back(re, im);
  }
  if (static_cast<int>(values.size()) != n) {
    throw UsageError("--at: expected " + std::to_string(n) + " values, got " + std::to_string(values.size()));
  }
  ComplexVector z(n);
  for (int k = 0; k < n; ++k) z(k) = values[static_cast<size_t>(k)];
  return z;
}

CommandResult cmd_solve(const RunConfig& config) {
  const LinkDiagram d = load(config);
  const Triangulation tri = build_triangulation(d);
  const SolutionSet set = solve_and_check(d, tri, config);

  CommandResult out;
  out.json = report_header("solve", config.timestamp);
  out.json["diagram"] = diagram_json(d, config);
  out.json["tolerances"] = tolerances_json(config.tol);
  out.json["search"] = search_json(set, config);
  Json solutions = Json::array();
  for (size_t i = 0; i < set.solutions.size(); ++i) solutions.push_back(to_json(set.solutions[i], set.geometric_index == i));
  out.json["solutions"] = solutions;

  std::ostringstream os;
  os << diagram_text(d);
  os << "search: " << config.n_starts << " starts (seed " << config.seed << "), " << set.converged
     << " converged, " << set.non_essential << " non-essential, " << set.failed << " failed\n";
  if (set.solutions.empty()) {
    out.exit_code = kEmpty;
    out.json["note"] = kEmptyNote;
    os << kEmptyNote << '\n';
  } else {
    os << "solutions (V0 = i(vol + cs i), cs mod pi^2):\n";
    for (size_t i = 0; i < set.solutions.size(); ++i) {
      const FoundSolution& s = set.solutions[i];
      os << (set.geometric_index == i ? "  * " : "    ") << "vol " << num(s.report.vol) << "  cs "
         << num(s.report.cs) << "  bw " << num(s.report.bw_volume.value_or(0.0)) << "  |H| " << sci(s.max_residual)
         << "  gluing " << sci(s.report.max_gluing_residual.value_or(0.0)) << '\n';
    }
  }
  out.text = os.str();
  return out;
}

CommandResult cmd_twist(const RunConfig& config) {
  if (!config.n) throw UsageError("twist: --n is required");
  if (*config.n < 1) throw UsageError("twist: --n must be >= 1");
  const int n = *config.n;
  const TwistResult result = twist_solutions(n, config.tol);
  const Triangulation tri = build_triangulation(twist_knot_diagram(n));

  CommandResult out;
  out.json = report_header("twist", config.timestamp);
  out.json["n"] = n;
  Json coeffs = Json::array();
  for (const BigInt& c : result.polynomial.coefficients()) coeffs.push_back(c.str());
  out.json["polynomial"] = {{"coefficients", coeffs}, {"text", result.polynomial.to_string()}};
  out.json["side_names"] = twist_side_names(n);

  std::ostringstream os;
  os << "T_" << n << ": " << result.polynomial.to_string() << " = 0\n";
  Json rows = Json::array();
  bool all_verified = true;
  for (size_t i = 0; i < result.rows.size(); ++i) {
    TwistRow row = result.rows[i];
    cross_check(tri, row.solution.point.z, row.solution.report);
    all_verified = all_verified && row.verified;
    Json j = to_json(row.solution, result.geometric_index == i);
    j["t"] = to_json(row.t);
    j["verified"] = row.verified;
    j["polished"] = row.polished;
    rows.push_back(j);
    os << (result.geometric_index == i ? "  * " : "    ") << "t = " << t_text(row.t) << "    V0 = "
       << v0_text(row.solution.report) << (row.verified ? "" : "    [H NOT SATISFIED]") << '\n';
  }
  out.json["rows"] = rows;
  if (!all_verified) out.exit_code = kNumerical;
  out.text = os.str();
  return out;
}

CommandResult cmd_check(const RunConfig& config) {
  const LinkDiagram d = load(config);
  const Triangulation tri = build_triangulation(d);
  const PotentialFunction pf = build_potential(d);

  CommandResult out;
  out.json = report_header("check", config.timestamp);
  out.json["diagram"] = diagram_json(d, config);
  Json census = census_json(tri);
  out.json["census"] = {{"n_tetrahedra", census["n_tetrahedra"]},
                        {"n_face_classes", census["n_face_classes"]},
                        {"n_edge_classes", census["n_edge_classes"]},
                        {"edge_classes_by_label", census["edge_classes_by_label"]},
                        {"class_D", census["class_D"]},
                        {"vertex_classes", census["vertex_class_names"]}};

  std::ostringstream os;
  os << diagram_text(d);
  os << "census: " << tri.tetrahedra().size() << " tetrahedra, " << tri.face_pairings().size() << " face classes, "
     << tri.edge_classes().size() << " edge classes, vertex classes {";
  for (size_t i = 0; i < tri.vertex_classes().size(); ++i) os << (i ? ", " : "") << tri.vertex_classes()[i].name;
  os << "}\n";
  const std::string class_d = census["class_D"].is_string() ? "empty" : census["class_D"].dump();
  os << "class D: " << class_d << '\n';

  if (config.at) {
    const ComplexVector z = parse_point(*config.at, d.n_sides());
    const std::vector<EdgeResidual> residuals = gluing_residuals(tri, z);
    const double h = h_residuals(pf, z).cwiseAbs().maxCoeff();
    Json point;
    point["z"] = to_json(z);
    point["max_h_residual"] = round15(h);
    point["max_gluing_residual_by_label"] = residuals_by_label(residuals);
    Json all = Json::array();
    for (const EdgeResidual& r : residuals) {
      all.push_back({{"label", std::string(1, r.label)}, {"residual", round15(r.residual)}, {"log_sum", to_json(r.log_sum)}});
    }
    point["edge_classes"] = all;
    out.json["point"] = point;
    os << "point: max |H| " << sci(h) << "; max gluing residual by class:";
    for (const auto& [label, value] : point["max_gluing_residual_by_label"].items()) {
      os << ' ' << label << ' ' << (value.is_null() ? std::string("-") : sci(value.get<double>()));
    }
    os << '\n';
    out.text = os.str();
    return out;
  }

  const SolutionSet set = solve_and_check(d, tri, config);
  out.json["search"] = search_json(set, config);
  Json solutions = Json::array();
  for (size_t i = 0; i < set.solutions.size(); ++i) {
    const FoundSolution& s = set.solutions[i];
    Json j;
    j["geometric"] = set.geometric_index == i;
    j["v0"] = to_json(s.report.v0);
    j["max_gluing_residual_by_label"] = residuals_by_label(gluing_residuals(tri, s.point.z));
    j["bw_minus_vol"] = round15(s.report.bw_volume.value_or(0.0) - s.report.vol);
    solutions.push_back(j);
    os << (set.geometric_index == i ? "  * " : "    ") << "vol " << num(s.report.vol) << "  gluing "
       << sci(s.report.max_gluing_residual.value_or(0.0)) << "  bw - vol "
       << sci(s.report.bw_volume.value_or(0.0) - s.report.vol) << '\n';
  }
  out.json["solutions"] = solutions;
  if (set.solutions.empty()) {
    out.exit_code = kEmpty;
    out.json["note"] = kEmptyNote;
    os << kEmptyNote << '\n';
  }
  out.text = os.str();
  return out;
}

CommandResult cmd_tables(const RunConfig& config) {
  const std::vector<TableCell> cells = check_tables();
  CommandResult out;
  out.json = report_header("tables", config.timestamp);
  Json arr = Json::array();
  std::ostringstream os;
  int failed = 0;
  int table = 0;
  static const char* titles[] = {"", "defining polynomial of t", "complex volumes",
                                 "side functions x_k and y_k"};
  for (const TableCell& c : cells) {
    if (c.table != table) {
      table = c.table;
      os << (table > 1 ? "\n" : "") << titles[table] << '\n';
    }
    failed += c.pass ? 0 : 1;
    arr.push_back({{"table", c.table},
                   {c.table == 3 ? "k" : "n", c.n},
                   {"row", c.row},
                   {"field", c.field},
                   {"expected", c.expected},
                   {"computed", c.computed},
                   {"pass", c.pass}});
    os << "  " << (c.pass ? "pass" : "FAIL") << "  " << (c.table == 3 ? "k=" : "n=") << c.n;
    if (c.row) os << " row " << c.row;
    os << ' ' << c.field << ": expected " << c.expected << " | computed " << c.computed << '\n';
  }
  os << '\n' << (cells.size() - failed) << '/' << cells.size() << " cells pass\n";
  out.json["cells"] = arr;
  out.json["failed"] = failed;
  out.exit_code = failed ? kMismatch : kOk;
  out.text = os.str();
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complex volumes of link complements from link diagrams", "cvol"};
  app.require_subcommand(1);
  RunConfig config;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--tol-solve", config.tol.solve, "max |H residual| at a solution")->capture_default_str();
    sub->add_option("--tol-flat", config.tol.flat, "flattening integrality tolerance")->capture_default_str();
    sub->add_option("--tol-ess", config.tol.essential, "distance of term ratios from 0, 1, inf")
        ->capture_default_str();
    sub->add_flag("--json", config.json, "emit the JSON report");
    sub->add_flag("--no-timestamp", [&](std::int64_t) { config.timestamp = false; }, "omit generated_at");
  };
  auto searching = [&](CLI::App* sub) {
    sub->add_option("--input", config.input_path, "diagram file (X[...] / Q[...] records)")->required();
    sub->add_option("--starts", config.n_starts, "Newton starting points")->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "random seed")->capture_default_str();
    sub->add_option("--radius", config.radius, "starts satisfy 1/radius <= |z| <= radius")->capture_default_str()
        ->check(CLI::Range(1.0, 1e6));
  };

  CLI::App* solve = app.add_subcommand("solve", "find essential solutions and their complex volumes");
  searching(solve);
  common(solve);
  CLI::App* twist = app.add_subcommand("twist", "exact pipeline for the twist knot T_n");
  twist->add_option("--n", config.n, "twist parameter n >= 1")->required();
  common(twist);
  CLI::App* check = app.add_subcommand("check", "triangulation census and gluing residuals");
  searching(check);
  check->add_option("--at", config.at, "evaluate at a point 're,im;re,im;...' instead of solving");
  common(check);
  CLI::App* tables = app.add_subcommand("tables", "recompute the twist-knot reference tables");
  common(tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CommandResult result;
  try {
    if (solve->parsed()) {
      config.command = "solve";
      result = cmd_solve(config);
    } else if (twist->parsed()) {
      config.command = "twist";
      result = cmd_twist(config);
    } else if (check->parsed()) {
      config.command = "check";
      result = cmd_check(config);
    } else {
      config.command = "tables";
      result = cmd_tables(config);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DiagramError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  out << (config.json ? dump(result.json) : result.text);
  return result.exit_code;
}

}  // namespace cvol::cli
