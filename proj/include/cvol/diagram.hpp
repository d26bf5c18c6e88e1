#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cvol {

/// 1-based label of a side (an arc between two adjacent crossings).
struct SideId {
  int index = 0;

  /// 0-based position in a coordinate vector.
  [[nodiscard]] int slot() const { return index - 1; }
  auto operator<=>(const SideId&) const = default;
};

/// Four incident sides listed counterclockwise, over-strand at positions 0 and 2.
using Quad = std::array<SideId, 4>;

struct Crossing {
  int id = 0;
  Quad quad{};
};

class DiagramError : public std::runtime_error {
 public:
  enum class Kind { Malformed, Multiplicity, Kink, Disconnected };

  DiagramError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Lexicographically smaller of a quadruple and its half-turn rotation.
Quad canonical_quad(const Quad& q);

/// Validated link diagram; immutable after construction.
class LinkDiagram {
 public:
  /// Canonicalizes and validates; throws DiagramError.
  static LinkDiagram from_quads(const std::vector<Quad>& quads);
  static LinkDiagram from_quads(const std::vector<std::array<int, 4>>& quads);

  [[nodiscard]] const std::vector<Crossing>& crossings() const { return crossings_; }
  [[nodiscard]] int n_crossings() const { return static_cast<int>(crossings_.size()); }
  [[nodiscard]] int n_sides() const { return 2 * n_crossings(); }
  [[nodiscard]] int n_components() const { return n_components_; }

  /// Every side is over at one end and under at the other.
  [[nodiscard]] bool is_alternating() const;

  /// (crossing id, position) pairs at which a side occurs; always two entries.
  [[nodiscard]] std::array<std::pair<int, int>, 2> occurrences(SideId side) const;

  bool operator==(const LinkDiagram& other) const { return quads() == other.quads(); }
  [[nodiscard]] std::vector<Quad> quads() const;

 private:
  std::vector<Crossing> crossings_;
  std::vector<std::array<std::pair<int, int>, 2>> occurrences_;
  int n_components_ = 0;
};

/// Parses `X[i,j,k,l]` (counterclockwise from the incoming under-strand) and
/// `Q[a,b,c,d]` (over-strand at positions 1 and 3) records. `#` starts a comment.
LinkDiagram parse_pd(std::string_view text);
LinkDiagram read_pd_file(const std::string& path);

/// Canonical `Q[...]` records, one per line.
std::string serialize(const LinkDiagram& d);

/// The (n+3)-crossing twist knot T_n. Sides are numbered a, b, x_0..x_{n+1}, y_0..y_{n+1}.
LinkDiagram twist_knot_diagram(int n);
std::vector<std::string> twist_side_names(int n);

/// Exchanges over and under at every crossing.
LinkDiagram mirror(const LinkDiagram& d);

}  // namespace cvol
