#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "minrank/problem.hpp"

namespace minrank {

using Vertex = std::size_t;

/// Directed edge `from -> to`: the receiver demanding `to` knows `from`.
struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed graph on the demand vertices of a single-unicast problem. Vertex
/// i stands for message x_i (and the row demanding it). Immutable once built.
class SideInformationGraph {
 public:
  SideInformationGraph() = default;

  /// Throws std::invalid_argument on self-loops and std::out_of_range on bad
  /// endpoints. Duplicate edges collapse.
  SideInformationGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t edge_count() const noexcept;

  bool has_edge(Vertex from, Vertex to) const;
  /// Heads of the out-edges of v, ascending.
  std::span<const Vertex> out_edges(Vertex v) const;
  /// Out-degree of v.
  std::size_t kappa(Vertex v) const { return out_edges(v).size(); }

  /// All edges, sorted by (from, to).
  std::vector<Edge> edges() const;

  SideInformationGraph without_edge(Edge e) const;

  friend bool operator==(const SideInformationGraph&, const SideInformationGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> out_;
};

struct SupernodeEdge {
  std::size_t supernode = 0;
  Vertex vertex = 0;

  friend auto operator<=>(const SupernodeEdge&, const SupernodeEdge&) = default;
};

/// Demand vertices grouped by receiver, with edges from a receiver's
/// supernode to every vertex whose message it knows.
struct Supergraph {
  std::size_t n = 0;
  std::vector<std::vector<Vertex>> supernodes;
  std::vector<SupernodeEdge> edges;  // sorted

  /// Number of supernode edges entering v.
  std::size_t incoming_count(Vertex v) const;

  /// Replaces each supernode edge (S_j, v) by the vertex edges v -> w for
  /// every w in S_j, which recovers the side-information graph.
  SideInformationGraph expand() const;
};

SideInformationGraph build_side_info_graph(const SingleUnicastProblem& s);

Supergraph build_supergraph(const IndexCodingProblem& p);

/// True iff three vertices are pairwise joined in both directions.
bool has_clique_of_size_three(const SideInformationGraph& g);

struct CycleSet {
  std::size_t count = 0;
  /// Each cycle starts at its smallest vertex and follows the edges; cycles
  /// are sorted by that first vertex.
  std::vector<std::vector<Vertex>> cycles;
};

/// Cycles of g restricted to `vertices`, which must have out-degree <= 1 in
/// the restriction (throws OutDegreeViolation otherwise). Linear in the
/// restricted size: each vertex is walked once.
CycleSet count_cycles_outdeg_le1(const SideInformationGraph& g, std::span<const Vertex> vertices);

/// True iff the subgraph induced by `vertices` is exactly one Hamiltonian
/// cycle on them.
bool is_unicycle(const SideInformationGraph& g, std::span<const Vertex> vertices);

/// Keeps only the edges of the given pairwise-disjoint unicycles. Throws
/// NotAUnicycle or OverlappingUnicycles.
SideInformationGraph critical_graph_from_unicycles(const SideInformationGraph& g,
                                                   const std::vector<std::vector<Vertex>>& unicycles);

/// Component index per vertex; components are numbered in order of their
/// smallest vertex.
std::vector<std::size_t> strongly_connected_components(const SideInformationGraph& g);

/// Edges whose endpoints share a strongly connected component, i.e. the edges
/// lying on some directed cycle.
std::vector<Edge> edges_on_directed_cycles(const SideInformationGraph& g);

/// True iff every edge lies inside a strongly connected component, so the
/// graph is a disjoint union of strongly connected subgraphs.
bool is_union_of_strongly_connected_subgraphs(const SideInformationGraph& g);

/// Text dump: one `u -> v` line per edge (1-based), then a
/// `supernode k: v_a v_b ...` line per supernode when a supergraph is given.
std::string format_graph(const SideInformationGraph& g, const Supergraph* supergraph = nullptr);

}  // namespace minrank
