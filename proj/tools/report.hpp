#pragma once

// JSON and DOT renderings of words, graphs, quivers and DT verification
// reports, shared by the command-line tool and the Python module.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "dtcell/cluster.hpp"
#include "dtcell/dtengine.hpp"
#include "dtcell/plabic.hpp"
#include "dtcell/weyl.hpp"

namespace dtcell::report {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

json word_json(const weyl::SignedWord& w);
json validate_json(int n, const std::vector<int>& letters);
json moves_json(const weyl::SignedWord& w);
// Null "moves" when the two words are not connected.
json move_path_json(const weyl::SignedWord& from, const weyl::SignedWord& to);

json graph_json(const plabic::BipartiteGraph& g);
std::string graph_dot(const plabic::BipartiteGraph& g);
json quiver_json(const weyl::SignedWord& w, const Seed& s, bool boundary_removed);
std::string quiver_dot(const Seed& s);

json amalgamation_json(const weyl::SignedWord& w);
json minors_json(const weyl::SignedWord& w);

json plan_json(const cluster::TransformationPlan& plan);
json degree_matrix_json(const dt::DegreeMatrix& d);

struct CheckOptions {
  std::uint64_t seed = 2024;
  // 0 requests fully symbolic plan and involution checks.
  int specializations = 3;
};

// Runs lgv, positivity, trop_delta, plan_match and involution; "pass" is true
// iff every check passed.
json dt_report(const weyl::SignedWord& w, const CheckOptions& opts);
json sequence_json(const weyl::SignedWord& w);
json closed_form_json(const weyl::SignedWord& w);

}  // namespace dtcell::report
