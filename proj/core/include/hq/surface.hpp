#pragma once

#include <array>
#include <string>
#include <vector>

#include "hq/oracle.hpp"

namespace hq {

enum class PunctureColor { I, II };

// Marked points are numbered boundary points first (component by component,
// in boundary order), then punctures. Boundary segment s of a component joins
// its point i to point i+1 (cyclically).
struct ColoredSurface {
  int genus = 0;
  std::vector<int> boundaries;  // marked points per boundary component
  std::vector<PunctureColor> punctures;

  int num_boundary_points() const;
  int num_marked_points() const { return num_boundary_points() + static_cast<int>(punctures.size()); }
  int num_boundary_segments() const { return num_boundary_points(); }
  bool is_puncture(int marked_point) const { return marked_point >= num_boundary_points(); }
  PunctureColor color(int marked_point) const { return punctures[marked_point - num_boundary_points()]; }
  int puncture_index(int marked_point) const { return marked_point - num_boundary_points(); }
  int puncture_point(int index) const { return num_boundary_points() + index; }
};

// Throws InvalidSurface for the excluded cases of a coloring.
void validate_surface(const ColoredSurface& s);
int arc_count(const ColoredSurface& s);
// Euler characteristic of the surface minus its II-colored punctures.
int punctured_euler_characteristic(const ColoredSurface& s);

inline int boundary_side(int segment) { return -1 - segment; }
inline bool is_boundary_side(int side) { return side < 0; }

// Ideal triangle, traversed with the surface on its left: side i runs from
// vertices[i] to vertices[i+1]. Sides >= 0 are arc labels, < 0 boundary segments.
struct Triangle {
  std::array<int, 3> sides{};
  std::array<int, 3> vertices{};
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

struct Triangulation {
  ColoredSurface surface;
  std::vector<std::string> arc_labels;  // quiver vertex i is arc i
  std::vector<Triangle> triangles;

  int num_arcs() const { return static_cast<int>(arc_labels.size()); }
};

// Self-folded triangle: `loop` encloses `puncture`, joined to the base by `enclosed`.
struct SelfFolded {
  int triangle = -1;
  int loop = -1;
  int enclosed = -1;
  int puncture = -1;  // marked point
};

std::vector<SelfFolded> self_folded_triangles(const Triangulation& t);
// Throws InvalidGluing when sides are not glued in pairs with matching
// endpoints, or the arc count / Euler characteristic disagree with the surface.
void validate_triangulation(const Triangulation& t);
// Number of arc ends at a marked point.
int valency(const Triangulation& t, int marked_point);

enum class PieceKind { P1, P2, P3, P4 };
const char* piece_kind_name(PieceKind k);
struct Piece {
  PieceKind kind = PieceKind::P1;
  std::vector<int> triangles;
};
// Ordinary triangle with its attached I-colored self-folded triangles is a
// P1/P2/P3 piece according to how many; a II-colored self-folded triangle is P4.
std::vector<Piece> puzzle_pieces(const Triangulation& t);

// Tagged triangulation as an ideal triangulation plus one tag per puncture.
// At an I-puncture enclosed in a self-folded triangle the tag is plain and the
// loop stands for the enclosed arc notched at the puncture.
struct TaggedTriangulation {
  Triangulation ideal;
  std::vector<char> notched;  // per puncture index
};

struct TaggedEnd {
  int point = -1;
  bool notched = false;
};
struct TaggedArc {
  std::array<TaggedEnd, 2> ends;
  int underlying = -1;  // arc of the untagged triangulation it sits on
};
std::vector<TaggedArc> tagged_arcs(const TaggedTriangulation& t);

TaggedTriangulation plain(const Triangulation& t);
const Triangulation& untag(const TaggedTriangulation& t);

// Flip at tagged arc k; the new arc keeps label k. Flipping k again returns t.
TaggedTriangulation flip(const TaggedTriangulation& t, int k);
// Orientation-preserving isomorphism invariant fixing every marked point.
std::string canonical_form(const TaggedTriangulation& t);

struct SurfaceQuiver {
  Quiver glued;                      // before the I-digon deletion
  Quiver quiver;                     // after it; arrow ids shared with `glued`
  std::vector<Walk> glued_generators;  // 3-cycles and puncture cycles
  std::vector<Walk> generators;        // the same, transported into `quiver`
  std::vector<ArrowId> deleted;
};

SurfaceQuiver build_surface_quiver(const Triangulation& t);
inline SurfaceQuiver build_surface_quiver(const TaggedTriangulation& t) { return build_surface_quiver(t.ideal); }

CellComplex2 build_surface_complex(const Triangulation& t);

struct Pi1Report {
  int euler_characteristic = 0;
  int components = 0;
  bool free = false;
  int rank = -1;  // rank of the free group when `free`
  std::vector<Presentation> presentations;
  std::vector<Presentation> reduced;  // after elimination
};
Pi1Report pi1_report(const CellComplex2& x);

// Complete on the supported surfaces: elimination when the quotient is free,
// the abelian backend for the closed torus, the full homotopy for a closed sphere.
HomotopyOracle surface_oracle(const Triangulation& t);

bool verify_flip_mutation(const TaggedTriangulation& t, int k);

struct FlipGraph {
  std::vector<TaggedTriangulation> nodes;
  std::vector<std::vector<int>> flips;  // flips[v][k] = node reached by flipping arc k
  bool complete = true;                 // false when max_nodes stopped the search
  int num_edges() const;                // undirected simple edges
};
FlipGraph flip_graph(const TaggedTriangulation& start, int max_nodes);

// Builders for the surfaces used in examples and tests.
TaggedTriangulation once_punctured_torus(PunctureColor c);
TaggedTriangulation once_punctured_digon(PunctureColor c);
TaggedTriangulation thrice_punctured_sphere();  // all II
TaggedTriangulation twice_punctured_monogon(PunctureColor a = PunctureColor::I,
                                            PunctureColor b = PunctureColor::I);
TaggedTriangulation polygon(int m);                                  // fan from point 0
TaggedTriangulation once_punctured_polygon(int m, PunctureColor c);  // star at the puncture

}  // namespace hq
