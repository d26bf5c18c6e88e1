#pragma once

// Octahedral ideal triangulation of a link complement minus two points: one
// octahedron per crossing, cut into four tetrahedra around its axis EF.

#include <array>
#include <string>
#include <vector>

#include "cvol/diagram.hpp"
#include "cvol/potential.hpp"

namespace cvol {

enum class Corner { AB, BC, CD, DA };

/// Tetrahedron E F X Y of an octahedron, with X -> Y counterclockwise on the
/// equator A B C D.
struct Tetrahedron {
  int crossing = 0;
  Corner corner = Corner::AB;
  int sigma = 1;  // -1 for BC and DA
  SideId num;     // shape u = z_num / z_den
  SideId den;
  std::array<char, 4> vertices{};  // E, F, X, Y
  std::array<int, 4> tags{};       // E -> 0, F -> 1, A/C -> 2, B/D -> 3
};

/// Edge slots of a tetrahedron, by vertex positions.
enum class EdgeSlot { EF, EX, EY, FX, FY, XY };
inline constexpr std::array<EdgeSlot, 6> kEdgeSlots = {EdgeSlot::EF, EdgeSlot::EX, EdgeSlot::EY,
                                                       EdgeSlot::FX, EdgeSlot::FY, EdgeSlot::XY};

/// Which of u, u' = 1/(1-u), u'' = 1 - 1/u sits on an edge slot.
enum class ShapeRole { U, UPrime, UDoublePrime };
ShapeRole shape_role(EdgeSlot slot);

struct EdgeMember {
  int tet = 0;
  EdgeSlot slot = EdgeSlot::EF;
};

struct EdgeClass {
  std::vector<EdgeMember> members;
  char label = 'D';  // A horizontal, B twisted, C axis, D remainder
};

/// Face of a tetrahedron, named by the vertex position it omits.
struct FaceRef {
  int tet = 0;
  int omitted = 0;
};

/// Glues face `a` to face `b`; vertex a_vertices[i] goes to b_vertices[i].
struct FacePairing {
  FaceRef a;
  FaceRef b;
  std::array<int, 3> a_vertices{};
  std::array<int, 3> b_vertices{};
};

struct VertexClass {
  std::string name;  // "-inf", "+inf" or "P1", "P2", ...
  std::vector<std::pair<int, char>> members;  // (crossing, letter)
};

class TriangulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Triangulation {
 public:
  [[nodiscard]] const std::vector<Tetrahedron>& tetrahedra() const { return tets_; }
  [[nodiscard]] const std::vector<FacePairing>& face_pairings() const { return pairings_; }
  [[nodiscard]] const std::vector<EdgeClass>& edge_classes() const { return edges_; }
  [[nodiscard]] const std::vector<VertexClass>& vertex_classes() const { return vertices_; }
  [[nodiscard]] int n_sides() const { return n_sides_; }

  friend Triangulation build_triangulation(const LinkDiagram& d);

 private:
  std::vector<Tetrahedron> tets_;
  std::vector<FacePairing> pairings_;
  std::vector<EdgeClass> edges_;
  std::vector<VertexClass> vertices_;
  int n_sides_ = 0;
};

/// Throws TriangulationError on an unglued face or an orientation mismatch.
Triangulation build_triangulation(const LinkDiagram& d);

/// Shape parameter on an edge slot at z.
std::complex<double> shape_of_edge_slot(const Tetrahedron& tet, EdgeSlot slot, const ComplexVector& z);

struct EdgeResidual {
  char label = 'D';
  std::complex<double> product;
  std::complex<double> log_sum;  // sum of principal logs of the shapes
  double residual = 0.0;         // |product - 1|
};

std::vector<EdgeResidual> gluing_residuals(const Triangulation& tri, const ComplexVector& z);

/// Sum over tetrahedra of sigma D(u^sigma).
double bw_volume(const Triangulation& tri, const ComplexVector& z);

/// Fills bw_volume and max_gluing_residual.
void cross_check(const Triangulation& tri, const ComplexVector& z, VolumeReport& report);

std::string to_string(Corner c);
std::string to_string(EdgeSlot s);

}  // namespace cvol
