#include "dsurf/graph.hpp"

#include <algorithm>
#include <set>

namespace dsurf {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonTrivalent: return "NonTrivalent";
    case ErrorCode::DegenerateVertex: return "DegenerateVertex";
    case ErrorCode::BadRotation: return "BadRotation";
    case ErrorCode::ZeroNormal: return "ZeroNormal";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::AllPairsSkipped: return "AllPairsSkipped";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::GaugeConflict: return "GaugeConflict";
    case ErrorCode::NotHarmonic: return "NotHarmonic";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::DegenerateChirality: return "DegenerateChirality";
    case ErrorCode::NonClosed: return "NonClosed";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

namespace {

Shift zero_shift(int rank) { return Shift::Zero(rank); }

}  // namespace

TrivalentGraph TrivalentGraph::build(int vertex_count, std::vector<EdgeSpec> edges,
                                     std::vector<std::array<int, 3>> rotation,
                                     int period_rank) {
  if (period_rank < 0 || period_rank > 3)
    throw Error(ErrorCode::ValidationError, "period rank must be in 0..3");
  TrivalentGraph g;
  g.vertex_count_ = vertex_count;
  g.period_rank_ = period_rank;
  g.edges_.reserve(2 * edges.size());
  for (const EdgeSpec& spec : edges) {
    if (spec.a < 0 || spec.a >= vertex_count || spec.b < 0 || spec.b >= vertex_count)
      throw Error(ErrorCode::ValidationError, "edge endpoint out of range");
    Shift s = spec.shift.size() == period_rank ? spec.shift : zero_shift(period_rank);
    g.edges_.push_back({spec.a, spec.b, s});
    g.edges_.push_back({spec.b, spec.a, -s});
  }

  if (static_cast<int>(rotation.size()) != vertex_count)
    throw Error(ErrorCode::BadRotation, "rotation table size mismatch");
  std::vector<int> out_degree(vertex_count, 0);
  for (const OrientedEdge& e : g.edges_) out_degree[e.origin]++;
  for (int v = 0; v < vertex_count; ++v)
    if (out_degree[v] != 3)
      throw Error(ErrorCode::NonTrivalent,
                  "vertex " + std::to_string(v) + " has " +
                      std::to_string(out_degree[v]) + " outgoing edges");

  for (int v = 0; v < vertex_count; ++v) {
    std::set<int> seen;
    for (int oe : rotation[v]) {
      if (oe < 0 || oe >= g.oriented_edge_count())
        throw Error(ErrorCode::BadRotation, "rotation references unknown edge");
      if (g.edges_[oe].origin != v)
        throw Error(ErrorCode::BadRotation,
                    "rotation of vertex " + std::to_string(v) +
                        " lists an edge of vertex " +
                        std::to_string(g.edges_[oe].origin));
      seen.insert(oe);
    }
    if (seen.size() != 3)
      throw Error(ErrorCode::BadRotation,
                  "rotation of vertex " + std::to_string(v) + " repeats an edge");
  }
  g.rotation_ = std::move(rotation);
  return g;
}

TrivalentGraph TrivalentGraph::from_adjacency(
    const std::vector<std::array<Neighbor, 3>>& stars, int period_rank) {
  const int n = static_cast<int>(stars.size());
  std::vector<EdgeSpec> edges;
  std::vector<std::array<int, 3>> rotation(n, {-1, -1, -1});
  // Greedy reverse pairing of star slots.
  std::vector<std::array<bool, 3>> used(n, {false, false, false});
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < 3; ++k) {
      if (used[v][k]) continue;
      const Neighbor& nb = stars[v][k];
      if (nb.vertex < 0 || nb.vertex >= n)
        throw Error(ErrorCode::ValidationError, "neighbor out of range");
      int w = nb.vertex;
      int match = -1;
      for (int j = 0; j < 3; ++j) {
        if (w == v && j == k) continue;
        if (used[w][j]) continue;
        if (stars[w][j].vertex == v && stars[w][j].shift == Shift(-nb.shift)) {
          match = j;
          break;
        }
      }
      if (match < 0)
        throw Error(ErrorCode::ValidationError,
                    "no reverse slot for edge " + std::to_string(v) + "->" +
                        std::to_string(w));
      used[v][k] = true;
      used[w][match] = true;
      int cls = static_cast<int>(edges.size());
      edges.push_back({v, w, nb.shift.size() ? nb.shift : zero_shift(period_rank)});
      rotation[v][k] = 2 * cls;
      rotation[w][match] = 2 * cls + 1;
    }
  }
  return build(n, std::move(edges), std::move(rotation), period_rank);
}

int TrivalentGraph::star_slot(int oriented_id) const {
  const auto& star = rotation_[edges_[oriented_id].origin];
  for (int k = 0; k < 3; ++k)
    if (star[k] == oriented_id) return k;
  throw Error(ErrorCode::BadRotation, "edge missing from its rotation");
}

void TrivalentGraph::flip_vertex(int x) {
  std::swap(rotation_[x][1], rotation_[x][2]);
}

bool TrivalentGraph::is_connected() const {
  if (vertex_count_ == 0) return true;
  std::vector<char> seen(vertex_count_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int oe : rotation_[v]) {
      int w = edges_[oe].terminus;
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertex_count_;
}

}  // namespace dsurf
