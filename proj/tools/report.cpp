#include "report.hpp"

#include <bit>
#include <sstream>

#include "dtcell/error.hpp"
#include "dtcell/matrix.hpp"

namespace dtcell::report {

namespace {

using exact::VarId;

json matrix_json(const exact::RFMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json move_json(const weyl::WordMove& m) {
  return {{"kind", weyl::to_string(m.kind)},
          {"position", m.position},
          {"direction", m.direction == weyl::Direction::Forward ? "forward" : "backward"},
          {"mutation", weyl::induces_mutation(m.kind)}};
}

const char* kind_name(exact::GenKind kind) {
  switch (kind) {
    case exact::GenKind::Upper: return "upper";
    case exact::GenKind::Lower: return "lower";
    case exact::GenKind::Cartan: return "cartan";
  }
  return "cartan";
}

std::vector<VarId> unfrozen_vars(const plabic::BipartiteGraph& g) {
  std::vector<VarId> out;
  for (int f : g.interior_faces()) out.push_back(static_cast<VarId>(f));
  return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> square_index_pairs(int n) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (unsigned rows = 1; rows < (1u << n); ++rows)
    for (unsigned cols = 1; cols < (1u << n); ++cols) {
      if (std::popcount(rows) != std::popcount(cols)) continue;
      std::vector<int> I, J;
      for (int t = 0; t < n; ++t) {
        if (rows & (1u << t)) I.push_back(t + 1);
        if (cols & (1u << t)) J.push_back(t + 1);
      }
      out.emplace_back(I, J);
    }
  return out;
}

json check_result(bool pass, const std::string& witness) {
  return {{"pass", pass}, {"witness", pass ? json(nullptr) : json(witness)}};
}

// Runs a check body returning a witness (empty on success); thrown errors
// count as failures.
template <class F>
json run_check(F&& body) {
  try {
    std::string witness = body();
    return check_result(witness.empty(), witness);
  } catch (const std::exception& e) {
    return check_result(false, e.what());
  }
}

std::string minor_label(const std::vector<int>& I, const std::vector<int>& J) {
  return "Delta^{" + weyl::format_letters(I) + "," + weyl::format_letters(J) + "}";
}

}  // namespace

json word_json(const weyl::SignedWord& w) {
  return {{"n", w.rank()}, {"letters", w.letters()}, {"u", w.u().one_line()}, {"v", w.v().one_line()}};
}

json validate_json(int n, const std::vector<int>& letters) {
  json out{{"schema_version", kSchemaVersion}, {"n", n}, {"letters", letters}};
  try {
    weyl::SignedWord w(n, letters);
    out["reduced"] = true;
    out["u"] = w.u().one_line();
    out["v"] = w.v().one_line();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonReducedWord) throw;
    out["reduced"] = false;
    out["error"] = e.what();
  }
  return out;
}

json moves_json(const weyl::SignedWord& w) {
  json moves = json::array();
  for (const auto& m : weyl::applicable_moves(w.letters())) {
    json entry = move_json(m);
    entry["result"] = weyl::apply_move(w.letters(), m);
    moves.push_back(std::move(entry));
  }
  return {{"schema_version", kSchemaVersion}, {"word", word_json(w)}, {"moves", moves}};
}

json move_path_json(const weyl::SignedWord& from, const weyl::SignedWord& to) {
  json out{{"schema_version", kSchemaVersion}, {"from", word_json(from)}, {"to", word_json(to)}};
  auto path = weyl::move_path(from, to);
  if (!path) {
    out["moves"] = nullptr;
    out["words"] = nullptr;
    return out;
  }
  json moves = json::array(), words = json::array({from.letters()});
  std::vector<int> cur = from.letters();
  for (const auto& m : *path) {
    moves.push_back(move_json(m));
    cur = weyl::apply_move(cur, m);
    words.push_back(cur);
  }
  out["moves"] = moves;
  out["words"] = words;
  return out;
}

json graph_json(const plabic::BipartiteGraph& g) {
  json vertices = json::array(), edges = json::array(), faces = json::array(), strands = json::array();
  for (const auto& v : g.vertices())
    vertices.push_back({{"id", v.id},
                        {"wire", v.wire},
                        {"x", v.x},
                        {"column", v.column},
                        {"color", v.color == plabic::Color::White ? "white" : "black"}});
  for (const auto& e : g.edges())
    edges.push_back({{"id", e.id},
                     {"a", e.a},
                     {"b", e.b},
                     {"vertical", e.vertical},
                     {"wire", e.wire},
                     {"column", e.column}});
  for (const auto& f : g.faces())
    faces.push_back({{"id", f.id},
                     {"spacing", f.spacing},
                     {"index", f.index},
                     {"left_column", f.left_column},
                     {"right_column", f.right_column},
                     {"boundary", f.boundary},
                     {"rows", f.rows},
                     {"cols", f.cols}});
  for (const auto& s : g.strands())
    strands.push_back(
        {{"rightward", s.rightward}, {"start_wire", s.start_wire}, {"end_wire", s.end_wire}, {"edges", s.edges}});
  return {{"schema_version", kSchemaVersion},
          {"n", g.rank()},
          {"letters", g.letters()},
          {"vertices", vertices},
          {"edges", edges},
          {"faces", faces},
          {"strands", strands}};
}

std::string graph_dot(const plabic::BipartiteGraph& g) {
  std::ostringstream os;
  os << "graph plabic {\n  node [shape=circle, width=0.2, label=\"\", style=filled];\n";
  for (const auto& v : g.vertices())
    os << "  v" << v.id << " [fillcolor=" << (v.color == plabic::Color::White ? "white" : "black") << ", pos=\""
       << v.x << "," << -v.wire << "!\"];\n";
  auto end_name = [&](const plabic::Edge& e, bool left) {
    const int v = left ? e.a : e.b;
    if (v >= 0) return "v" + std::to_string(v);
    const std::string name = std::string(left ? "in" : "out") + std::to_string(e.wire);
    os << "  " << name << " [shape=plaintext, style=\"\", label=\"" << e.wire << "\"];\n";
    return name;
  };
  for (const auto& e : g.edges()) {
    const std::string a = end_name(e, true), b = end_name(e, false);
    os << "  " << a << " -- " << b << ";\n";
  }
  for (const auto& f : g.faces())
    os << "  f" << f.id << " [shape=plaintext, style=\"\", label=\"" << f.id << ": "
       << minor_label(f.rows, f.cols) << "\"];\n";
  os << "}\n";
  return os.str();
}

json quiver_json(const weyl::SignedWord& w, const Seed& s, bool boundary_removed) {
  json arrows = json::array();
  for (const auto& [from, to, count] : s.arrows()) arrows.push_back({from, to, count});
  return {{"schema_version", kSchemaVersion},
          {"word", word_json(w)},
          {"boundary_removed", boundary_removed},
          {"vertices", s.vertices()},
          {"frozen", s.frozen()},
          {"arrows", arrows}};
}

std::string quiver_dot(const Seed& s) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int v : s.vertices()) os << "  " << v << (s.is_frozen(v) ? " [shape=box]" : "") << ";\n";
  for (const auto& [from, to, count] : s.arrows()) {
    os << "  " << from << " -> " << to;
    if (count > 1) os << " [label=" << count << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

json amalgamation_json(const weyl::SignedWord& w) {
  auto g = plabic::build_graph(w);
  json factors = json::array();
  for (const auto& f : dt::amalgamation_factors(g))
    factors.push_back({{"kind", kind_name(f.kind)}, {"index", f.index}, {"face", f.face < 0 ? json(nullptr) : json(f.face)}});
  return {{"schema_version", kSchemaVersion},
          {"word", word_json(w)},
          {"factors", factors},
          {"matrix", matrix_json(dt::amalgamate(g, dt::symbolic_faces(g)))}};
}

json minors_json(const weyl::SignedWord& w) {
  auto g = plabic::build_graph(w);
  auto m = dt::amalgamate(g, dt::symbolic_faces(g));
  json faces = json::array();
  for (const auto& f : g.faces())
    faces.push_back({{"id", f.id},
                     {"boundary", f.boundary},
                     {"rows", f.rows},
                     {"cols", f.cols},
                     {"minor", exact::minor(m, f.rows, f.cols).to_string()}});
  return {{"schema_version", kSchemaVersion}, {"word", word_json(w)}, {"faces", faces}};
}

json plan_json(const cluster::TransformationPlan& plan) {
  json steps = json::array();
  for (const auto& step : plan.steps) {
    if (const auto* m = std::get_if<cluster::MutationStep>(&step)) {
      steps.push_back({{"mutate", m->vertex}});
      continue;
    }
    json mapping = json::object();
    for (const auto& [a, b] : std::get<cluster::IsoStep>(step).sigma) mapping[std::to_string(a)] = b;
    steps.push_back({{"iso", mapping}});
  }
  return steps;
}

json degree_matrix_json(const dt::DegreeMatrix& d) {
  return {{"faces", d.faces}, {"entries", d.entries}, {"minus_identity", d.is_minus_identity()}};
}

json dt_report(const weyl::SignedWord& w, const CheckOptions& opts) {
  const auto g = plabic::build_graph(w);
  const auto vars = unfrozen_vars(g);
  const auto points = opts.specializations > 0 ? dt::random_points(vars, opts.specializations, opts.seed)
                                               : std::vector<dt::Point>{};
  json report{{"schema_version", kSchemaVersion},
              {"word", word_json(w)},
              {"seed", opts.seed},
              {"specializations", opts.specializations},
              {"degree_matrix", nullptr},
              {"plan", nullptr}};
  json checks = json::object();

  const auto m = dt::amalgamate(g, dt::symbolic_faces(g));
  const auto index_pairs = square_index_pairs(w.rank());
  checks["lgv"] = run_check([&]() -> std::string {
    for (const auto& [I, J] : index_pairs)
      if (!(exact::minor(m, I, J) == exact::RatFunc(plabic::lgv_minor(g, I, J)))) return minor_label(I, J);
    return "";
  });
  checks["positivity"] = run_check([&]() -> std::string {
    for (const auto& [I, J] : index_pairs) {
      const auto d = exact::minor(m, I, J);
      if (!d.is_laurent() || !d.num().has_nonnegative_coefficients() || !d.den().has_nonnegative_coefficients())
        return minor_label(I, J) + " = " + d.to_string();
    }
    return "";
  });
  checks["trop_delta"] = run_check([&]() -> std::string {
    const auto d = dt::tropical_dt_check(w);
    report["degree_matrix"] = degree_matrix_json(d);
    if (d.faces.size() != vars.size()) return "degree matrix covers " + std::to_string(d.faces.size()) + " faces";
    for (std::size_t a = 0; a < d.faces.size(); ++a)
      for (std::size_t b = 0; b < d.faces.size(); ++b)
        if (d.entries[a][b] != (a == b ? -1 : 0))
          return "deg_X" + std::to_string(d.faces[a]) + " DT*(X" + std::to_string(d.faces[b]) +
                 ") = " + std::to_string(d.entries[a][b]);
    return "";
  });
  checks["plan_match"] = run_check([&]() -> std::string {
    const auto info = dt::plan_dt_sequence(w);
    report["plan"] = plan_json(info.plan);
    dt::verify_plan(w, info.plan, points);
    return "";
  });
  checks["involution"] = run_check([&]() -> std::string {
    const auto there = dt::twist(w);
    const auto back = dt::twist(w.reversed());
    if (points.empty()) {
      for (const auto& [f, value] : dt::compose(back, there).values)
        if (!(value == exact::RatFunc::variable(static_cast<VarId>(f))))
          return "face " + std::to_string(f) + " maps to " + value.to_string();
      return "";
    }
    for (std::size_t t = 0; t < points.size(); ++t) {
      dt::Point mid;
      for (const auto& [f, value] : dt::evaluate(there, points[t]).values)
        mid.emplace(static_cast<VarId>(f), value.constant_value());
      for (const auto& [f, value] : dt::evaluate(back, mid).values)
        if (value.constant_value() != points[t].at(static_cast<VarId>(f)))
          return "point " + std::to_string(t) + " face " + std::to_string(f);
    }
    return "";
  });

  bool pass = true;
  for (const auto& [name, result] : checks.items()) pass = pass && result["pass"].get<bool>();
  report["checks"] = checks;
  report["pass"] = pass;
  return report;
}

json sequence_json(const weyl::SignedWord& w) {
  const auto info = dt::plan_dt_sequence(w);
  return {{"schema_version", kSchemaVersion},
          {"word", word_json(w)},
          {"plan", plan_json(info.plan)},
          {"mutation_count", info.plan.mutation_count()},
          {"braid_moves", info.braid_moves},
          {"words", info.words}};
}

json closed_form_json(const weyl::SignedWord& w) {
  const auto g = plabic::build_graph(w);
  const auto m = dt::amalgamate(g, dt::symbolic_faces(g));
  const auto closed = dt::dt_closed_form(w, m);
  const bool equiv = dt::check_H_equiv(closed, dt::chi_psi(w, m));
  return {{"schema_version", kSchemaVersion},
          {"word", word_json(w)},
          {"matrix", matrix_json(closed)},
          {"h_equiv_chi_psi", equiv},
          {"pass", equiv}};
}

}  // namespace dtcell::report
