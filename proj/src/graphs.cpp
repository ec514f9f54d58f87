#include "minrank/graphs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "minrank/errors.hpp"

namespace minrank {

namespace {

std::vector<char> membership(std::size_t n, std::span<const Vertex> vertices) {
  std::vector<char> in(n, 0);
  for (Vertex v : vertices) {
    if (v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    if (in[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice");
    in[v] = 1;
  }
  return in;
}

}  // namespace

SideInformationGraph::SideInformationGraph(std::size_t n, std::span<const Edge> edges) : out_(n) {
  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n) throw std::out_of_range("edge endpoint out of range");
    if (e.from == e.to) throw std::invalid_argument("self-loops are not side information");
    out_[e.from].push_back(e.to);
  }
  for (auto& heads : out_) {
    std::sort(heads.begin(), heads.end());
    heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
  }
}

std::size_t SideInformationGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& heads : out_) total += heads.size();
  return total;
}

bool SideInformationGraph::has_edge(Vertex from, Vertex to) const {
  const auto heads = out_edges(from);
  return std::binary_search(heads.begin(), heads.end(), to);
}

std::span<const Vertex> SideInformationGraph::out_edges(Vertex v) const {
  if (v >= out_.size()) throw std::out_of_range("vertex out of range");
  return out_[v];
}

std::vector<Edge> SideInformationGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < out_.size(); ++u) {
    for (Vertex v : out_[u]) out.push_back({u, v});
  }
  return out;
}

SideInformationGraph SideInformationGraph::without_edge(Edge e) const {
  SideInformationGraph copy = *this;
  if (e.from < copy.out_.size()) std::erase(copy.out_[e.from], e.to);
  return copy;
}

std::size_t Supergraph::incoming_count(Vertex v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [v](const SupernodeEdge& e) { return e.vertex == v; }));
}

SideInformationGraph Supergraph::expand() const {
  std::vector<Edge> out;
  for (const auto& e : edges) {
    for (Vertex w : supernodes.at(e.supernode)) out.push_back({e.vertex, w});
  }
  return SideInformationGraph(n, out);
}

SideInformationGraph build_side_info_graph(const SingleUnicastProblem& s) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < s.n; ++i) {
    for (MessageId j : s.prior_of_row[i]) edges.push_back({j, i});
  }
  return SideInformationGraph(s.n, edges);
}

Supergraph build_supergraph(const IndexCodingProblem& p) {
  require_valid(p);
  Supergraph g;
  g.n = p.n;
  for (ReceiverId k = 0; k < p.receivers.size(); ++k) {
    g.supernodes.push_back(p.receivers[k].wants);
    for (MessageId m : p.receivers[k].has) g.edges.push_back({k, m});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool has_clique_of_size_three(const SideInformationGraph& g) {
  const std::size_t n = g.vertex_count();
  auto mutual = [&g](Vertex a, Vertex b) { return g.has_edge(a, b) && g.has_edge(b, a); };
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : g.out_edges(a)) {
      if (b <= a || !g.has_edge(b, a)) continue;
      for (Vertex c : g.out_edges(b)) {
        if (c <= b) continue;
        if (mutual(b, c) && mutual(a, c)) return true;
      }
    }
  }
  return false;
}

CycleSet count_cycles_outdeg_le1(const SideInformationGraph& g, std::span<const Vertex> vertices) {
  const std::size_t n = g.vertex_count();
  const auto in = membership(n, vertices);

  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<Vertex> next(n, kNone);
  for (Vertex v : vertices) {
    for (Vertex w : g.out_edges(v)) {
      if (!in[w]) continue;
      if (next[v] != kNone) {
        throw OutDegreeViolation("vertex " + std::to_string(v + 1) +
                                 " has more than one out-edge in the restriction");
      }
      next[v] = w;
    }
  }

  // Pointer chasing with three states: 0 unvisited, 1 on the current walk,
  // 2 finished. Hitting a vertex in state 1 closes a new cycle.
  std::vector<char> state(n, 0);
  CycleSet out;
  std::vector<Vertex> walk;
  std::vector<Vertex> order(vertices.begin(), vertices.end());
  std::sort(order.begin(), order.end());
  for (Vertex start : order) {
    if (state[start] != 0) continue;
    walk.clear();
    Vertex v = start;
    while (v != kNone && state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = next[v];
    }
    if (v != kNone && state[v] == 1) {
      auto first = std::find(walk.begin(), walk.end(), v);
      std::vector<Vertex> cycle(first, walk.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      out.cycles.push_back(std::move(cycle));
    }
    for (Vertex w : walk) state[w] = 2;
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.count = out.cycles.size();
  return out;
}

bool is_unicycle(const SideInformationGraph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw std::invalid_argument("unicycle check needs at least one vertex");
  const std::size_t n = g.vertex_count();
  const auto in = membership(n, vertices);

  std::vector<std::size_t> in_degree(n, 0);
  std::vector<Vertex> next(n, 0);
  for (Vertex v : vertices) {
    std::size_t out_degree = 0;
    for (Vertex w : g.out_edges(v)) {
      if (!in[w]) continue;
      ++out_degree;
      ++in_degree[w];
      next[v] = w;
    }
    if (out_degree != 1) return false;
  }
  for (Vertex v : vertices) {
    if (in_degree[v] != 1) return false;
  }
  // Degrees are all one, so the induced graph is a union of disjoint cycles;
  // it is Hamiltonian iff the walk from any vertex covers every vertex.
  std::size_t steps = 0;
  Vertex v = vertices.front();
  do {
    v = next[v];
    ++steps;
  } while (v != vertices.front());
  return steps == vertices.size();
}

SideInformationGraph critical_graph_from_unicycles(const SideInformationGraph& g,
                                                   const std::vector<std::vector<Vertex>>& unicycles) {
  std::vector<char> used(g.vertex_count(), 0);
  std::vector<Edge> kept;
  for (const auto& cycle : unicycles) {
    if (cycle.empty() || !is_unicycle(g, cycle)) {
      std::string vs;
      for (Vertex v : cycle) vs += " " + std::to_string(v + 1);
      throw NotAUnicycle("vertex set {" + vs + " } does not induce a unicycle");
    }
    for (Vertex v : cycle) {
      if (used[v]) {
        throw OverlappingUnicycles("vertex " + std::to_string(v + 1) + " appears in two unicycles");
      }
      used[v] = 1;
    }
    for (Vertex v : cycle) {
      for (Vertex w : g.out_edges(v)) {
        if (std::find(cycle.begin(), cycle.end(), w) != cycle.end()) kept.push_back({v, w});
      }
    }
  }
  return SideInformationGraph(g.vertex_count(), kept);
}

std::vector<std::size_t> strongly_connected_components(const SideInformationGraph& g) {
  // Kosaraju: finishing order on g, then sweeps on the reverse graph.
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> reverse(n);
  for (const Edge& e : g.edges()) reverse[e.to].push_back(e.from);

  std::vector<char> seen(n, 0);
  std::vector<Vertex> finish;
  finish.reserve(n);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      const auto heads = g.out_edges(v);
      if (idx < heads.size()) {
        const Vertex w = heads[idx++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw(n, kUnset);
  std::size_t count = 0;
  std::vector<Vertex> todo;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (raw[*it] != kUnset) continue;
    raw[*it] = count;
    todo.push_back(*it);
    while (!todo.empty()) {
      const Vertex v = todo.back();
      todo.pop_back();
      for (Vertex w : reverse[v]) {
        if (raw[w] == kUnset) {
          raw[w] = count;
          todo.push_back(w);
        }
      }
    }
    ++count;
  }

  // Renumber by smallest member so the labelling is canonical.
  std::vector<std::size_t> relabel(count, kUnset);
  std::size_t next_label = 0;
  std::vector<std::size_t> out(n);
  for (Vertex v = 0; v < n; ++v) {
    if (relabel[raw[v]] == kUnset) relabel[raw[v]] = next_label++;
    out[v] = relabel[raw[v]];
  }
  return out;
}

std::vector<Edge> edges_on_directed_cycles(const SideInformationGraph& g) {
  const auto comp = strongly_connected_components(g);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (comp[e.from] == comp[e.to]) out.push_back(e);
  }
  return out;
}

bool is_union_of_strongly_connected_subgraphs(const SideInformationGraph& g) {
  return edges_on_directed_cycles(g).size() == g.edge_count();
}

std::string format_graph(const SideInformationGraph& g, const Supergraph* supergraph) {
  std::ostringstream os;
  for (const Edge& e : g.edges()) os << e.from + 1 << " -> " << e.to + 1 << '\n';
  if (supergraph != nullptr) {
    for (std::size_t k = 0; k < supergraph->supernodes.size(); ++k) {
      os << "supernode " << k + 1 << ':';
      for (Vertex v : supergraph->supernodes[k]) os << ' ' << v + 1;
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace minrank
