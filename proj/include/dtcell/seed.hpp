#pragma once

// Quiver seed: vertex set, frozen subset and skew-symmetric exchange matrix
// stored sparsely.

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace dtcell {

class Seed {
 public:
  Seed() = default;
  Seed(std::set<int> vertices, std::set<int> frozen);

  const std::set<int>& vertices() const { return vertices_; }
  const std::set<int>& frozen() const { return frozen_; }
  bool contains(int v) const { return vertices_.count(v) > 0; }
  bool is_frozen(int v) const { return frozen_.count(v) > 0; }
  std::vector<int> mutable_vertices() const;

  // epsilon_{ij}: arrows i -> j minus arrows j -> i.
  int eps(int i, int j) const;
  void set_eps(int i, int j, int value);
  void add_arrow(int from, int to, int count = 1);
  // Nonzero entries with i < j.
  const std::map<std::pair<int, int>, int>& entries() const { return eps_; }
  // Arrows as (from, to, multiplicity).
  std::vector<std::tuple<int, int, int>> arrows() const;

  // Drops the given vertices and every arrow touching them.
  Seed without(const std::set<int>& removed) const;
  Seed without_frozen() const;
  Seed negated() const;
  // Moves vertex v to mapping.at(v); every vertex must be mapped.
  Seed relabeled(const std::map<int, int>& mapping) const;

  friend bool operator==(const Seed&, const Seed&) = default;
  std::string to_string() const;

 private:
  void check_vertex(int v) const;
  std::set<int> vertices_;
  std::set<int> frozen_;
  std::map<std::pair<int, int>, int> eps_;
};

}  // namespace dtcell
