#include "dtcell/seed.hpp"

#include <tuple>

#include "dtcell/error.hpp"

namespace dtcell {

Seed::Seed(std::set<int> vertices, std::set<int> frozen)
    : vertices_(std::move(vertices)), frozen_(std::move(frozen)) {
  for (int f : frozen_)
    if (!vertices_.count(f)) fail(ErrorKind::UnknownVertex, "frozen vertex " + std::to_string(f) + " not in the seed");
}

std::vector<int> Seed::mutable_vertices() const {
  std::vector<int> out;
  for (int v : vertices_)
    if (!frozen_.count(v)) out.push_back(v);
  return out;
}

void Seed::check_vertex(int v) const {
  if (!vertices_.count(v)) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
}

int Seed::eps(int i, int j) const {
  if (i == j) return 0;
  auto it = eps_.find({std::min(i, j), std::max(i, j)});
  if (it == eps_.end()) return 0;
  return i < j ? it->second : -it->second;
}

void Seed::set_eps(int i, int j, int value) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) {
    if (value != 0) fail(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(i));
    return;
  }
  const auto key = std::make_pair(std::min(i, j), std::max(i, j));
  const int stored = i < j ? value : -value;
  if (stored == 0) eps_.erase(key);
  else eps_[key] = stored;
}

void Seed::add_arrow(int from, int to, int count) { set_eps(from, to, eps(from, to) + count); }

std::vector<std::tuple<int, int, int>> Seed::arrows() const {
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& [key, value] : eps_) {
    if (value > 0) out.emplace_back(key.first, key.second, value);
    else out.emplace_back(key.second, key.first, -value);
  }
  return out;
}

Seed Seed::without(const std::set<int>& removed) const {
  std::set<int> vs, fr;
  for (int v : vertices_)
    if (!removed.count(v)) vs.insert(v);
  for (int v : frozen_)
    if (!removed.count(v)) fr.insert(v);
  Seed s(vs, fr);
  for (const auto& [key, value] : eps_)
    if (!removed.count(key.first) && !removed.count(key.second)) s.eps_[key] = value;
  return s;
}

Seed Seed::without_frozen() const { return without(frozen_); }

Seed Seed::negated() const {
  Seed s = *this;
  for (auto& [key, value] : s.eps_) value = -value;
  return s;
}

Seed Seed::relabeled(const std::map<int, int>& mapping) const {
  std::set<int> vs, fr;
  for (int v : vertices_) {
    auto it = mapping.find(v);
    if (it == mapping.end()) fail(ErrorKind::NotSeedIsomorphism, "vertex " + std::to_string(v) + " is not mapped");
    if (!vs.insert(it->second).second) fail(ErrorKind::NotSeedIsomorphism, "mapping is not injective");
    if (frozen_.count(v)) fr.insert(it->second);
  }
  Seed s(vs, fr);
  for (const auto& [key, value] : eps_) s.set_eps(mapping.at(key.first), mapping.at(key.second), value);
  return s;
}

std::string Seed::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [from, to, m] : arrows()) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(from) + "->" + std::to_string(to);
    if (m != 1) s += "x" + std::to_string(m);
  }
  return s + "}";
}

}  // namespace dtcell
