#pragma once

// Bipartite graphs attached to letter sequences: faces, zig-zag strands,
// face minor labels, quivers, perfect orientation and path enumeration.
//
// Wires are numbered 1..n from the top. Spacing s (0..n) is the region
// between wire s and wire s+1; spacing 0 is above wire 1 and spacing n below
// wire n. A letter +-i is a vertical edge in spacing i at its column
// (position in the word). Face ids are canonical: the top face is 0, then the
// faces of spacings 1..n-1 from left to right, then the bottom face. Face ids
// double as the variable ids of face coordinates.

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "dtcell/laurent.hpp"
#include "dtcell/seed.hpp"
#include "dtcell/weyl.hpp"

namespace dtcell::plabic {

enum class Color { White, Black };

struct Vertex {
  int id = 0;
  int wire = 0;
  int x = 0;        // horizontal coordinate; letters sit at even x
  int column = -1;  // letter position, or -1 for inserted vertices
  Color color = Color::White;
};

struct Edge {
  int id = 0;
  int a = -1;  // left or upper end; -1 for the open end of an external edge
  int b = -1;  // right or lower end
  bool vertical = false;
  int wire = 0;  // wire of a horizontal edge
  int column = -1;
};

struct Face {
  int id = 0;
  int spacing = 0;
  int index = 0;          // position within its spacing, from the left
  int left_column = -1;   // bounding letters; -1 when open to the side
  int right_column = -1;
  bool boundary = false;
  std::vector<int> rows;  // minor label Delta^{rows, cols}
  std::vector<int> cols;
};

struct Strand {
  bool rightward = true;
  int start_wire = 0;  // left end for rightward strands, right end otherwise
  int end_wire = 0;
  std::vector<int> edges;  // traversed edge ids in order
  // Horizontal stretches [x_from, x_to] with their wire, sorted by x.
  struct Stretch {
    double from, to;
    int wire;
  };
  std::vector<Stretch> stretches;
  int wire_at(double x) const;
};

class BipartiteGraph {
 public:
  // Accepts any letter sequence over +-{1..n-1}; reducedness is not required.
  static BipartiteGraph build(int n, std::span<const int> letters);

  int rank() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Strand>& strands() const { return strands_; }
  const Face& face(int id) const { return faces_.at(id); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  // Faces of a spacing from left to right.
  std::vector<int> spacing_faces(int spacing) const;
  int face_at(int spacing, int index) const;
  // Face of the spacing whose column range contains the given letter column;
  // the column must not hold a letter of that spacing.
  int face_containing(int spacing, int column) const;
  // Face of the spacing with the given left bounding column (-1 for leftmost).
  std::optional<int> face_with_left_column(int spacing, int column) const;
  std::set<int> boundary_faces() const;
  std::vector<int> interior_faces() const;

 private:
  int n_ = 1;
  std::vector<int> letters_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<Strand> strands_;
  std::vector<std::vector<int>> spacing_faces_;
};

BipartiteGraph build_graph(const weyl::SignedWord& word);

struct Quivers {
  Seed full;     // all faces, boundary faces frozen
  Seed reduced;  // boundary faces removed
};

Quivers build_quivers(const BipartiteGraph& g);

// A directed path in the perfect orientation, recorded by the wire it occupies
// in every gap between consecutive letter columns (gap k lies left of
// column k; gap L is right of the last column).
struct Path {
  int source = 0;
  int sink = 0;
  std::vector<int> wires;
  exact::Monomial weight;
};

struct PathFamily {
  std::vector<Path> paths;
  exact::Monomial weight;
};

// Sum of path weights from left end `source` to right end `sink`.
exact::LaurentPoly boundary_measurement(const BipartiteGraph& g, int source, int sink);
std::vector<Path> enumerate_paths(const BipartiteGraph& g, int source, int sink);
// Vertex-disjoint families joining sources to sinks in ascending order.
std::vector<PathFamily> disjoint_families(const BipartiteGraph& g, std::span<const int> sources,
                                          std::span<const int> sinks);
exact::LaurentPoly lgv_minor(const BipartiteGraph& g, std::span<const int> sources, std::span<const int> sinks);
// The unique family whose weight maximizes every face exponent at once;
// throws NotGreedyWord when there is none.
PathFamily max_path_family(const BipartiteGraph& g, std::span<const int> sources, std::span<const int> sinks);

// How face ids of a graph correspond across one move of its letters.
struct FaceCorrespondence {
  std::vector<int> old_to_new;
  std::optional<int> mutated_old;  // face mutated by the move, old id
  std::optional<int> mutated_new;  // the same face in the new graph
};

FaceCorrespondence move_face_map(const BipartiteGraph& before, const BipartiteGraph& after,
                                 const weyl::WordMove& move);

// Faces of the graph of the reversed word are the mirror images: face t of a
// spacing with c letters goes to face c - t.
std::vector<int> mirror_face_map(const BipartiteGraph& g);

}  // namespace dtcell::plabic
