#pragma once

// JSON serialization of results and the reference-table comparison.

#include <string>
#include <vector>

#include "cvol/solver.hpp"
#include "cvol/triangulation.hpp"
#include "cvol/twist.hpp"
#include "json.hpp"

namespace cvol {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// x rounded to 15 significant digits.
double round15(double x);

Json to_json(std::complex<double> z);
Json to_json(const ComplexVector& z);
Json to_json(const VolumeReport& r);
Json to_json(const FoundSolution& s, bool geometric);

/// Tetrahedra, face pairings, edge and vertex classes.
Json census_json(const Triangulation& tri);

/// schema_version, command and, unless suppressed, a UTC timestamp.
Json report_header(const std::string& command, bool timestamp);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

/// One compared cell of the reference tables.
struct TableCell {
  int table = 0;  // 1 polynomials, 2 volumes, 3 side functions
  int n = 0;      // n for polynomials and volumes, k for side functions
  int row = 0;
  std::string field;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Recomputes the reference twist-knot data for n = 1..5 and compares it cell
/// by cell; volume numbers at tolerance `tol`, cs modulo pi^2.
std::vector<TableCell> check_tables(double tol = 1e-4);

}  // namespace cvol
