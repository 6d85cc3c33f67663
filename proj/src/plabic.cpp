#include "dtcell/plabic.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "dtcell/error.hpp"

namespace dtcell::plabic {

namespace {

// Directions in counterclockwise order.
enum Dir { East = 0, North = 1, West = 2, South = 3 };

constexpr double kFar = 1e9;

int opposite(int d) { return (d + 2) % 4; }

}  // namespace

int Strand::wire_at(double x) const {
  for (const auto& s : stretches)
    if (s.from < x && x < s.to) return s.wire;
  fail(ErrorKind::InvalidArgument, "strand has no horizontal stretch over x = " + std::to_string(x));
}

BipartiteGraph BipartiteGraph::build(int n, std::span<const int> letters) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "rank must be positive");
  for (int l : letters)
    if (l == 0 || std::abs(l) >= n)
      fail(ErrorKind::IndexOutOfRange, "letter " + std::to_string(l) + " for rank " + std::to_string(n));

  BipartiteGraph g;
  g.n_ = n;
  g.letters_.assign(letters.begin(), letters.end());
  const int len = static_cast<int>(letters.size());

  // Vertices along each wire: letter endpoints, then 2-valent vertices between
  // equal colors, then white ends.
  std::vector<std::vector<int>> on_wire(n + 1);
  std::vector<std::vector<Vertex>> proto(n + 1);
  for (int p = 0; p < len; ++p) {
    const int s = std::abs(letters[p]);
    const bool positive = letters[p] > 0;
    proto[s].push_back({0, s, 2 * (p + 1), p, positive ? Color::White : Color::Black});
    proto[s + 1].push_back({0, s + 1, 2 * (p + 1), p, positive ? Color::Black : Color::White});
  }
  for (int k = 1; k <= n; ++k) {
    std::vector<Vertex> line;
    for (const auto& v : proto[k]) {
      if (!line.empty() && line.back().color == v.color)
        line.push_back({0, k, (line.back().x + v.x) / 2, -1, v.color == Color::White ? Color::Black : Color::White});
      line.push_back(v);
    }
    if (line.empty()) {
      line.push_back({0, k, 1, -1, Color::White});
    } else {
      if (line.front().color == Color::Black) line.insert(line.begin(), {0, k, line.front().x - 1, -1, Color::White});
      if (line.back().color == Color::Black) line.push_back({0, k, line.back().x + 1, -1, Color::White});
    }
    for (auto& v : line) {
      v.id = static_cast<int>(g.vertices_.size());
      on_wire[k].push_back(v.id);
      g.vertices_.push_back(v);
    }
  }

  std::vector<std::array<int, 4>> adj(g.vertices_.size(), {-1, -1, -1, -1});
  auto add_edge = [&](int a, int b, bool vertical, int wire, int column) {
    const int id = static_cast<int>(g.edges_.size());
    g.edges_.push_back({id, a, b, vertical, wire, column});
    if (vertical) {
      adj[a][South] = id;
      adj[b][North] = id;
    } else {
      if (a >= 0) adj[a][East] = id;
      if (b >= 0) adj[b][West] = id;
    }
    return id;
  };
  std::vector<int> left_external(n + 1), right_external(n + 1);
  for (int k = 1; k <= n; ++k) {
    const auto& ids = on_wire[k];
    left_external[k] = add_edge(-1, ids.front(), false, k, -1);
    for (std::size_t t = 0; t + 1 < ids.size(); ++t) add_edge(ids[t], ids[t + 1], false, k, -1);
    right_external[k] = add_edge(ids.back(), -1, false, k, -1);
  }
  for (int p = 0; p < len; ++p) {
    const int s = std::abs(letters[p]);
    auto find = [&](int wire) {
      for (int id : on_wire[wire])
        if (g.vertices_[id].column == p) return id;
      fail(ErrorKind::InvalidArgument, "missing letter vertex");
    };
    add_edge(find(s), find(s + 1), true, 0, p);
  }

  // Zig-zag strands: turn right (next counterclockwise) at black vertices and
  // left (next clockwise) at white ones.
  auto trace = [&](bool rightward, int wire) {
    Strand st;
    st.rightward = rightward;
    st.start_wire = wire;
    int e = rightward ? left_external[wire] : right_external[wire];
    int v = rightward ? g.edges_[e].b : g.edges_[e].a;
    int d_in = rightward ? West : East;
    st.edges.push_back(e);
    for (std::size_t guard = 0; guard <= 4 * g.edges_.size(); ++guard) {
      const bool black = g.vertices_[v].color == Color::Black;
      int d = d_in;
      do {
        d = black ? (d + 1) % 4 : (d + 3) % 4;
      } while (adj[v][d] < 0);
      e = adj[v][d];
      st.edges.push_back(e);
      const Edge& edge = g.edges_[e];
      const int next = edge.a == v ? edge.b : edge.a;
      if (next < 0) {
        st.end_wire = edge.wire;
        break;
      }
      v = next;
      d_in = opposite(d);
    }
    for (int id : st.edges) {
      const Edge& edge = g.edges_[id];
      if (edge.vertical) continue;
      const double xa = edge.a < 0 ? -kFar : g.vertices_[edge.a].x;
      const double xb = edge.b < 0 ? kFar : g.vertices_[edge.b].x;
      st.stretches.push_back({xa, xb, edge.wire});
    }
    std::sort(st.stretches.begin(), st.stretches.end(),
              [](const Strand::Stretch& a, const Strand::Stretch& b) { return a.from < b.from; });
    return st;
  };
  for (int k = 1; k <= n; ++k) g.strands_.push_back(trace(true, k));
  for (int k = 1; k <= n; ++k) g.strands_.push_back(trace(false, k));

  // Faces in canonical order.
  g.spacing_faces_.assign(n + 1, {});
  auto add_face = [&](int s, int index, int left, int right, bool boundary) {
    Face f;
    f.id = static_cast<int>(g.faces_.size());
    f.spacing = s;
    f.index = index;
    f.left_column = left;
    f.right_column = right;
    f.boundary = boundary;
    g.spacing_faces_[s].push_back(f.id);
    g.faces_.push_back(f);
  };
  add_face(0, 0, -1, -1, true);
  for (int s = 1; s < n; ++s) {
    std::vector<int> cols;
    for (int p = 0; p < len; ++p)
      if (std::abs(letters[p]) == s) cols.push_back(p);
    const int m = static_cast<int>(cols.size());
    for (int t = 0; t <= m; ++t)
      add_face(s, t, t ? cols[t - 1] : -1, t < m ? cols[t] : -1, t == 0 || t == m);
  }
  add_face(n, 0, -1, -1, true);

  for (auto& f : g.faces_) {
    const double x = f.left_column < 0 ? 0.5 : 2.0 * (f.left_column + 1) + 0.5;
    for (const auto& st : g.strands_) {
      if (st.wire_at(x) > f.spacing) continue;
      (st.rightward ? f.rows : f.cols).push_back(st.start_wire);
    }
    std::sort(f.rows.begin(), f.rows.end());
    std::sort(f.cols.begin(), f.cols.end());
  }
  return g;
}

std::vector<int> BipartiteGraph::spacing_faces(int spacing) const {
  if (spacing < 0 || spacing > n_) fail(ErrorKind::IndexOutOfRange, "spacing " + std::to_string(spacing));
  return spacing_faces_[spacing];
}

int BipartiteGraph::face_at(int spacing, int index) const {
  const auto& fs = spacing_faces_.at(spacing);
  if (index < 0 || index >= static_cast<int>(fs.size())) fail(ErrorKind::IndexOutOfRange, "face index");
  return fs[index];
}

int BipartiteGraph::face_containing(int spacing, int column) const {
  if (spacing < 0 || spacing > n_) fail(ErrorKind::IndexOutOfRange, "spacing " + std::to_string(spacing));
  int index = 0;
  for (int p = 0; p < column && p < static_cast<int>(letters_.size()); ++p)
    if (std::abs(letters_[p]) == spacing) ++index;
  return spacing_faces_[spacing][index];
}

std::optional<int> BipartiteGraph::face_with_left_column(int spacing, int column) const {
  if (spacing < 0 || spacing > n_) return std::nullopt;
  for (int id : spacing_faces_[spacing])
    if (faces_[id].left_column == column) return id;
  return std::nullopt;
}

std::set<int> BipartiteGraph::boundary_faces() const {
  std::set<int> out;
  for (const auto& f : faces_)
    if (f.boundary) out.insert(f.id);
  return out;
}

std::vector<int> BipartiteGraph::interior_faces() const {
  std::vector<int> out;
  for (const auto& f : faces_)
    if (!f.boundary) out.push_back(f.id);
  return out;
}

BipartiteGraph build_graph(const weyl::SignedWord& word) {
  return BipartiteGraph::build(word.rank(), word.letters());
}

Quivers build_quivers(const BipartiteGraph& g) {
  std::set<int> all;
  for (const auto& f : g.faces()) all.insert(f.id);
  Seed full(all, g.boundary_faces());
  const auto& letters = g.letters();
  for (int p = 0; p < static_cast<int>(letters.size()); ++p) {
    // Each letter has one 3-valent black vertex; add the counterclockwise
    // triangle around it. Opposite arrows cancel in the exchange matrix.
    const int s = std::abs(letters[p]);
    const int left = g.face_containing(s, p);
    const int right = *g.face_with_left_column(s, p);
    if (letters[p] > 0) {
      const int below = g.face_containing(s + 1, p);
      full.add_arrow(right, left);
      full.add_arrow(left, below);
      full.add_arrow(below, right);
    } else {
      const int above = g.face_containing(s - 1, p);
      full.add_arrow(above, left);
      full.add_arrow(left, right);
      full.add_arrow(right, above);
    }
  }
  return {full, full.without_frozen()};
}

namespace {

// Faces whose weight starts to apply at each gap, with their spacing.
std::vector<std::vector<std::pair<int, int>>> faces_by_gap(const BipartiteGraph& g) {
  const int len = static_cast<int>(g.letters().size());
  std::vector<std::vector<std::pair<int, int>>> out(len + 1);
  for (const auto& f : g.faces()) {
    const int gap = f.left_column < 0 ? 0 : f.left_column + 1;
    out[gap].push_back({f.id, f.spacing});
  }
  return out;
}

void check_end(const BipartiteGraph& g, int k) {
  if (k < 1 || k > g.rank()) fail(ErrorKind::IndexOutOfRange, "path end " + std::to_string(k));
}

}  // namespace

exact::LaurentPoly boundary_measurement(const BipartiteGraph& g, int source, int sink) {
  check_end(g, source);
  check_end(g, sink);
  const int n = g.rank();
  const auto gaps = faces_by_gap(g);
  const auto& letters = g.letters();
  std::vector<exact::LaurentPoly> state(n + 2);
  state[source] = exact::LaurentPoly(1);
  for (std::size_t gap = 0; gap < gaps.size(); ++gap) {
    for (const auto& [face, spacing] : gaps[gap]) {
      const auto x = exact::LaurentPoly::variable(static_cast<exact::VarId>(face));
      for (int k = 1; k <= std::min(spacing, n); ++k)
        if (!state[k].is_zero()) state[k] *= x;
    }
    if (gap == letters.size()) break;
    const int l = letters[gap];
    const int s = std::abs(l);
    if (l > 0) state[s + 1] += state[s];
    else state[s] += state[s + 1];
  }
  return state[sink];
}

std::vector<Path> enumerate_paths(const BipartiteGraph& g, int source, int sink) {
  check_end(g, source);
  check_end(g, sink);
  const auto gaps = faces_by_gap(g);
  const auto& letters = g.letters();
  std::vector<Path> out;
  std::vector<int> wires;
  std::vector<exact::Monomial::Factor> factors;
  auto rec = [&](auto&& self, std::size_t gap, int wire) -> void {
    wires.push_back(wire);
    const std::size_t mark = factors.size();
    for (const auto& [face, spacing] : gaps[gap])
      if (wire <= spacing) factors.push_back({static_cast<exact::VarId>(face), 1});
    if (gap == letters.size()) {
      if (wire == sink) out.push_back({source, sink, wires, exact::Monomial::from_factors(factors)});
    } else {
      const int l = letters[gap];
      const int s = std::abs(l);
      self(self, gap + 1, wire);
      if (l > 0 && wire == s) self(self, gap + 1, s + 1);
      if (l < 0 && wire == s + 1) self(self, gap + 1, s);
    }
    factors.resize(mark);
    wires.pop_back();
  };
  rec(rec, 0, source);
  return out;
}

std::vector<PathFamily> disjoint_families(const BipartiteGraph& g, std::span<const int> sources,
                                          std::span<const int> sinks) {
  if (sources.size() != sinks.size()) fail(ErrorKind::InvalidArgument, "sources and sinks differ in size");
  const std::size_t k = sources.size();
  std::vector<std::vector<Path>> options(k);
  for (std::size_t t = 0; t < k; ++t) options[t] = enumerate_paths(g, sources[t], sinks[t]);
  std::vector<PathFamily> out;
  std::vector<const Path*> chosen;
  auto disjoint = [](const Path& a, const Path& b) {
    for (std::size_t gap = 0; gap < a.wires.size(); ++gap)
      if (a.wires[gap] == b.wires[gap]) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t t) -> void {
    if (t == k) {
      PathFamily fam;
      for (const Path* p : chosen) {
        fam.paths.push_back(*p);
        fam.weight = fam.weight * p->weight;
      }
      out.push_back(std::move(fam));
      return;
    }
    for (const auto& p : options[t]) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](const Path* q) { return disjoint(p, *q); })) continue;
      chosen.push_back(&p);
      self(self, t + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

exact::LaurentPoly lgv_minor(const BipartiteGraph& g, std::span<const int> sources, std::span<const int> sinks) {
  exact::LaurentPoly sum;
  for (const auto& fam : disjoint_families(g, sources, sinks)) sum += exact::LaurentPoly::monomial(fam.weight);
  return sum;
}

PathFamily max_path_family(const BipartiteGraph& g, std::span<const int> sources, std::span<const int> sinks) {
  auto fams = disjoint_families(g, sources, sinks);
  if (fams.empty()) fail(ErrorKind::NotGreedyWord, "no disjoint path family");
  exact::Monomial envelope = fams[0].weight;
  for (const auto& f : fams) envelope = exact::Monomial::lcm(envelope, f.weight);
  std::vector<std::size_t> hits;
  for (std::size_t t = 0; t < fams.size(); ++t)
    if (fams[t].weight == envelope) hits.push_back(t);
  if (hits.size() != 1)
    fail(ErrorKind::NotGreedyWord, std::to_string(hits.size()) + " families reach the degree envelope " + envelope.to_string());
  return fams[hits[0]];
}

FaceCorrespondence move_face_map(const BipartiteGraph& before, const BipartiteGraph& after,
                                 const weyl::WordMove& move) {
  const int p = static_cast<int>(move.position);
  const auto& letters = before.letters();
  FaceCorrespondence fc;
  fc.old_to_new.assign(before.face_count(), -1);
  const int a = std::abs(letters.at(p));
  const int b = std::abs(letters.at(p + 1));
  for (const auto& f : before.faces()) {
    int s = f.spacing, c = f.left_column;
    switch (move.kind) {
      case weyl::MoveKind::MixedSwap:
      case weyl::MoveKind::Commute:
        if (c == p) c = p + 1;
        else if (c == p + 1) c = p;
        break;
      case weyl::MoveKind::SameIndexSwap:
        break;
      case weyl::MoveKind::Braid:
        if (s == a && c == p) s = b;
        else if (s == a && c == p + 2) c = p + 1;
        else if (s == b && c == p + 1) c = p + 2;
        break;
    }
    auto id = after.face_with_left_column(s, c);
    if (!id) fail(ErrorKind::InapplicableMove, "face correspondence broke at face " + std::to_string(f.id));
    fc.old_to_new[f.id] = *id;
  }
  if (weyl::induces_mutation(move.kind)) {
    fc.mutated_old = *before.face_with_left_column(a, p);
    fc.mutated_new = fc.old_to_new[*fc.mutated_old];
  }
  return fc;
}

std::vector<int> mirror_face_map(const BipartiteGraph& g) {
  std::vector<int> out(g.face_count());
  for (const auto& f : g.faces()) {
    const int count = static_cast<int>(g.spacing_faces(f.spacing).size()) - 1;
    out[f.id] = g.face_at(f.spacing, count - f.index);
  }
  return out;
}

}  // namespace dtcell::plabic
