#include "quasipart/paths.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "quasipart/errors.hpp"

namespace quasipart {
namespace {

void check_vertex(const PlanarDigraph& g, VertexId v) {
  if (!g.valid_vertex(v)) throw InputError("invalid vertex id " + std::to_string(v));
}

bool allowed_vertex(const SearchOptions& options, VertexId v) {
  return options.allowed.empty() || options.allowed[v] != 0;
}

}  // namespace

ShortestPathTree shortest_path_tree(const PlanarDigraph& g, std::span<const VertexId> sources,
                                    const SearchOptions& options) {
  const std::size_t n = g.vertex_count();
  ShortestPathTree tree{std::vector<double>(n, kInfinity), std::vector<ArcId>(n, kNoArc)};
  using Entry = std::pair<double, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (VertexId s : sources) {
    check_vertex(g, s);
    if (!allowed_vertex(options, s) || tree.dist[s] == 0.0) continue;
    tree.dist[s] = 0.0;
    queue.emplace(0.0, s);
  }
  std::vector<char> done(n, 0);
  while (!queue.empty()) {
    const auto [d, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    done[v] = 1;
    for (ArcId a : g.arcs_from(v, options.orientation)) {
      if (options.removed != nullptr && options.removed->contains(a)) continue;
      const VertexId w = g.arc_target(a, options.orientation);
      if (done[w] || !allowed_vertex(options, w)) continue;
      const double nd = d + g.arc(a).length;
      if (nd > options.radius) continue;
      if (nd < tree.dist[w]) {
        tree.dist[w] = nd;
        tree.parent[w] = a;
        queue.emplace(nd, w);
      }
    }
  }
  return tree;
}

ShortestPathTree shortest_path_tree(const PlanarDigraph& g, VertexId source,
                                    const SearchOptions& options) {
  return shortest_path_tree(g, std::span<const VertexId>(&source, 1), options);
}

double shortest_path_dist(const PlanarDigraph& g, VertexId u, VertexId v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) return 0.0;
  return shortest_path_tree(g, u).dist[v];
}

std::vector<VertexId> quasiball(const PlanarDigraph& g, VertexId center, double r,
                                Orientation o) {
  check_vertex(g, center);
  if (!(r >= 0.0)) throw InputError("quasiball radius must be non-negative");
  const ShortestPathTree tree = shortest_path_tree(g, center, {.orientation = o, .radius = r});
  std::vector<VertexId> ball;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (tree.reached(v)) ball.push_back(v);
  }
  return ball;
}

DirectedPath tree_path(const PlanarDigraph& g, const ShortestPathTree& tree, VertexId v,
                       Orientation o) {
  check_vertex(g, v);
  if (!tree.reached(v)) return {};
  std::vector<ArcId> arcs;
  VertexId cur = v;
  while (tree.parent[cur] != kNoArc) {
    arcs.push_back(tree.parent[cur]);
    cur = g.arc_source(tree.parent[cur], o);
  }
  std::reverse(arcs.begin(), arcs.end());
  return make_path(g, cur, arcs, o);
}

DirectedPath shortest_path(const PlanarDigraph& g, VertexId u, VertexId v) {
  check_vertex(g, u);
  check_vertex(g, v);
  return tree_path(g, shortest_path_tree(g, u), v);
}

bool is_shortest_path(const PlanarDigraph& g, const DirectedPath& path, Orientation o) {
  if (path.empty()) return false;
  std::vector<VertexId> sorted = path.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < path.arcs.size(); ++i) {
    const ArcId a = path.arcs[i];
    if (a >= g.arc_count() || g.arc_source(a, o) != path.vertices[i] ||
        g.arc_target(a, o) != path.vertices[i + 1]) {
      return false;
    }
  }
  const ShortestPathTree tree = shortest_path_tree(g, path.head(), {.orientation = o});
  return tree.dist[path.tail()] == path.length;
}

std::vector<char> reachable(const PlanarDigraph& g, std::span<const VertexId> sources,
                            const SearchOptions& options) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack;
  for (VertexId s : sources) {
    check_vertex(g, s);
    if (!allowed_vertex(options, s) || seen[s]) continue;
    seen[s] = 1;
    stack.push_back(s);
  }
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (ArcId a : g.arcs_from(v, options.orientation)) {
      if (options.removed != nullptr && options.removed->contains(a)) continue;
      const VertexId w = g.arc_target(a, options.orientation);
      if (seen[w] || !allowed_vertex(options, w)) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen;
}

std::vector<std::vector<VertexId>> weak_components(const PlanarDigraph& g,
                                                   std::span<const char> allowed) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<VertexId>> components;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s] || (!allowed.empty() && !allowed[s])) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (EdgeId e : g.rotation(v)) {
        const VertexId w = g.other_end(e, v);
        if (seen[w] || (!allowed.empty() && !allowed[w])) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::vector<std::vector<double>> all_pairs_distances(const PlanarDigraph& g) {
  std::vector<std::vector<double>> d(g.vertex_count());
  for (VertexId s = 0; s < g.vertex_count(); ++s) d[s] = shortest_path_tree(g, s).dist;
  return d;
}

LayeredCheck check_layered(const PlanarDigraph& g, VertexId root, int t, double scale) {
  check_vertex(g, root);
  if (t < 1 || t > 3) throw InputError("layer count t must be 1, 2 or 3");
  if (!(scale > 0.0)) throw InputError("layer scale must be positive");
  const std::size_t n = g.vertex_count();
  LayeredCheck result;
  result.parent.assign(n, kNoArc);
  result.pieces.assign(n, -1);
  result.pieces[root] = 0;
  std::vector<VertexId> covered{root};

  // Level k adds every vertex within `scale` of a vertex covered by k-1
  // pieces; the multi-source forest supplies the last piece.
  for (int level = 1; level <= t && covered.size() < n; ++level) {
    const ShortestPathTree forest = shortest_path_tree(g, covered, {.radius = scale});
    std::vector<VertexId> fresh;
    std::vector<char> is_fresh(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      if (result.pieces[v] < 0 && forest.reached(v)) {
        result.parent[v] = forest.parent[v];
        fresh.push_back(v);
        is_fresh[v] = 1;
      }
    }
    for (VertexId v : fresh) {
      VertexId cur = v;
      while (is_fresh[cur]) cur = g.arc(forest.parent[cur]).tail;
      result.pieces[v] = result.pieces[cur] + 1;
    }
    covered.insert(covered.end(), fresh.begin(), fresh.end());
    if (fresh.empty()) break;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (result.pieces[v] < 0) {
      result.offending = v;
      return result;
    }
  }
  result.layered = true;
  return result;
}

}  // namespace quasipart
