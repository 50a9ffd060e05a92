#include "quasipart/separator.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "quasipart/embedding.hpp"
#include "quasipart/errors.hpp"

namespace quasipart {
namespace {

std::size_t dart_index(Dart d) { return 2 * static_cast<std::size_t>(d.edge) + (d.forward ? 1 : 0); }

struct FaceIndex {
  std::vector<std::vector<Dart>> faces;
  std::vector<std::size_t> face_of;  // by dart index

  explicit FaceIndex(const PlanarDigraph& tri)
      : faces(trace_faces(tri)), face_of(2 * tri.edge_count()) {
    for (std::size_t f = 0; f < faces.size(); ++f) {
      for (const Dart& d : faces[f]) face_of[dart_index(d)] = f;
    }
  }
};

CycleSides sides_of(const PlanarDigraph& tri, const FaceIndex& index, const SpanningTree& tree,
                    EdgeId e, std::span<const std::size_t> weights);

// Splits a chain of arcs into maximal prefixes that are shortest paths.
void split_shortest(const PlanarDigraph& h, const DirectedPath& chain,
                    std::vector<DirectedPath>& out) {
  std::size_t start = 0;
  const std::size_t k = chain.vertices.size();
  while (start < k) {
    const ShortestPathTree tree = shortest_path_tree(h, chain.vertices[start]);
    std::size_t end = start + 1;
    double length = 0.0;
    while (end < k) {
      const double next = length + h.arc(chain.arcs[end - 1]).length;
      if (next != tree.dist[chain.vertices[end]]) break;
      length = next;
      ++end;
    }
    out.push_back(make_path(h, chain.vertices[start],
                            std::span<const ArcId>(chain.arcs).subspan(start, end - 1 - start)));
    start = end;
  }
}

// Tree path from the top vertex down to `bottom`, split at connectors and at
// points where it stops being shortest.
void emit_tree_path(const PlanarDigraph& h, const SpanningTree& tree,
                    const std::vector<VertexId>& upward, std::vector<DirectedPath>& out) {
  if (upward.empty()) return;
  std::vector<VertexId> down(upward.rbegin(), upward.rend());
  DirectedPath chain;
  chain.vertices.push_back(down[0]);
  for (std::size_t i = 1; i < down.size(); ++i) {
    const ArcId a = tree.parent_arc[down[i]];
    if (a == kNoArc) {
      split_shortest(h, chain, out);
      chain = DirectedPath{};
      chain.vertices.push_back(down[i]);
    } else {
      chain.vertices.push_back(down[i]);
      chain.arcs.push_back(a);
      chain.length += h.arc(a).length;
    }
  }
  split_shortest(h, chain, out);
}

VertexId choose_root(const PlanarDigraph& h) {
  VertexId best = 0;
  std::size_t best_reach = 0;
  double best_ecc = kInfinity;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const ShortestPathTree tree = shortest_path_tree(h, v);
    std::size_t reach = 0;
    double ecc = 0.0;
    for (double d : tree.dist) {
      if (d != kInfinity) {
        ++reach;
        ecc = std::max(ecc, d);
      }
    }
    if (reach > best_reach || (reach == best_reach && ecc < best_ecc)) {
      best = v;
      best_reach = reach;
      best_ecc = ecc;
    }
  }
  return best;
}

}  // namespace

std::vector<VertexId> SpanningTree::root_path(VertexId v) const {
  std::vector<VertexId> path{v};
  while (parent[path.back()] != kNoVertex) path.push_back(parent[path.back()]);
  return path;
}

ShortestPathTree layered_tree(const LayerGraph& layer) {
  const LayeredCheck check = check_layered(layer.graph(), layer.root, 1, layer.scale);
  if (!check.layered) {
    throw StructureError("layer " + std::to_string(layer.index) + " is not layered at its scale");
  }
  return shortest_path_tree(layer.graph(), layer.root);
}

SpanningTree search_tree(const PlanarDigraph& h, const PlanarDigraph& tri, VertexId root) {
  const std::size_t n = h.vertex_count();
  SpanningTree tree;
  tree.root = root;
  tree.parent.assign(n, kNoVertex);
  tree.parent_edge.assign(n, kNoEdge);
  tree.parent_arc.assign(n, kNoArc);
  std::vector<char> in_tree(n, 0);

  const auto attach = [&](const ShortestPathTree& spt) {
    for (VertexId v = 0; v < n; ++v) {
      if (!spt.reached(v) || in_tree[v]) continue;
      in_tree[v] = 1;
      const ArcId a = spt.parent[v];
      if (a != kNoArc) {
        tree.parent[v] = h.arc(a).tail;
        tree.parent_arc[v] = a;
        tree.parent_edge[v] = tri.arc(a).edge;
      }
    }
  };
  attach(shortest_path_tree(h, root));

  while (true) {
    // Smallest tree vertex with an unreached triangulation neighbour.
    VertexId from = kNoVertex, to = kNoVertex;
    EdgeId via = kNoEdge;
    for (VertexId v = 0; v < n && from == kNoVertex; ++v) {
      if (!in_tree[v]) continue;
      for (EdgeId e : tri.rotation(v)) {
        const VertexId w = tri.other_end(e, v);
        if (!in_tree[w] && (to == kNoVertex || w < to)) {
          from = v;
          to = w;
          via = e;
        }
      }
    }
    if (from == kNoVertex) break;
    std::vector<char> allowed(n, 0);
    for (VertexId v = 0; v < n; ++v) allowed[v] = in_tree[v] ? 0 : 1;
    SearchOptions options;
    options.allowed = allowed;
    attach(shortest_path_tree(h, to, options));
    tree.parent[to] = from;
    tree.parent_edge[to] = via;
    tree.parent_arc[to] = kNoArc;
  }
  if (std::find(in_tree.begin(), in_tree.end(), 0) != in_tree.end()) {
    throw PreconditionError("graph is not connected");
  }
  return tree;
}

CycleSides cycle_sides(const PlanarDigraph& tri, const SpanningTree& tree, EdgeId e,
                       std::span<const std::size_t> weights) {
  return sides_of(tri, FaceIndex(tri), tree, e, weights);
}

namespace {

CycleSides sides_of(const PlanarDigraph& tri, const FaceIndex& index, const SpanningTree& tree,
                    EdgeId e, std::span<const std::size_t> weights) {
  const std::size_t n = tri.vertex_count();
  const Edge& edge = tri.edge(e);
  const std::vector<VertexId> px = tree.root_path(edge.u);
  const std::vector<VertexId> py = tree.root_path(edge.v);

  std::vector<char> on_path(n, 0);
  for (VertexId v : px) on_path[v] = 1;
  VertexId lca = kNoVertex;
  for (VertexId v : py) {
    if (on_path[v]) {
      lca = v;
      break;
    }
  }
  for (VertexId v : py) on_path[v] = 1;

  std::vector<char> on_cycle(tri.edge_count(), 0);
  on_cycle[e] = 1;
  for (const auto* p : {&px, &py}) {
    for (VertexId v : *p) {
      if (v == lca) break;
      on_cycle[tree.parent_edge[v]] = 1;
    }
  }

  const auto& faces = index.faces;
  const auto& face_of = index.face_of;
  std::vector<char> side(faces.size(), 0);
  std::deque<std::size_t> queue{0};
  side[0] = 1;
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (const Dart& d : faces[f]) {
      if (on_cycle[d.edge]) continue;
      const std::size_t g = face_of[dart_index(Dart{d.edge, !d.forward})];
      if (!side[g]) {
        side[g] = 1;
        queue.push_back(g);
      }
    }
  }

  CycleSides sides;
  for (VertexId v = 0; v < n; ++v) {
    if (on_path[v] || tri.rotation(v).empty()) continue;
    const EdgeId first = tri.rotation(v)[0];
    const Dart out{first, tri.edge(first).u == v};
    if (side[face_of[dart_index(out)]]) {
      sides.first += weights[v];
    } else {
      sides.second += weights[v];
    }
  }
  return sides;
}

}  // namespace

EdgeId fundamental_cycle_separator(const PlanarDigraph& tri, const SpanningTree& tree,
                                   std::span<const std::size_t> weights) {
  std::vector<char> is_tree(tri.edge_count(), 0);
  for (EdgeId e : tree.parent_edge) {
    if (e != kNoEdge) is_tree[e] = 1;
  }
  const FaceIndex index(tri);
  EdgeId best = kNoEdge;
  std::size_t best_max = 0;
  for (EdgeId e = 0; e < tri.edge_count(); ++e) {
    if (is_tree[e]) continue;
    const std::size_t heavier = sides_of(tri, index, tree, e, weights).max();
    if (best == kNoEdge || heavier < best_max) {
      best = e;
      best_max = heavier;
    }
  }
  return best;
}

std::size_t max_component_after_removal(const PlanarDigraph& h,
                                        std::span<const VertexId> removed) {
  std::vector<char> allowed(h.vertex_count(), 1);
  for (VertexId v : removed) allowed[v] = 0;
  std::size_t largest = 0;
  for (const auto& comp : weak_components(h, allowed)) largest = std::max(largest, comp.size());
  return largest;
}

SeparatorPaths find_separator(const PlanarDigraph& h, VertexId root, Orientation orientation,
                              bool weightless_root) {
  const std::size_t n = h.vertex_count();
  if (n == 0) throw PreconditionError("graph is empty");
  SeparatorPaths sep;
  sep.orientation = orientation;
  if (root == kNoVertex) root = choose_root(h);
  if (!h.valid_vertex(root)) throw InputError("separator root out of range");
  sep.root = root;

  if (n <= 3) {
    for (VertexId v = 0; v < n; ++v) {
      sep.paths.push_back(make_path(h, v, {}));
      sep.vertices.push_back(v);
    }
    return sep;
  }
  if (weak_components(h).size() != 1) throw PreconditionError("graph is not connected");

  const PlanarDigraph tri = triangulate(merge_parallel_edges(h));
  const SpanningTree tree = search_tree(h, tri, root);
  std::vector<std::size_t> weights(n, 1);
  if (weightless_root) weights[root] = 0;
  const EdgeId e = fundamental_cycle_separator(tri, tree, weights);
  if (e == kNoEdge) throw InternalError("triangulation has no non-tree edge");
  sep.cycle_edge = e;

  const std::vector<VertexId> px = tree.root_path(tri.edge(e).u);
  std::vector<VertexId> py = tree.root_path(tri.edge(e).v);
  // Drop the part of the second root path shared with the first.
  std::vector<char> on_first(n, 0);
  for (VertexId v : px) on_first[v] = 1;
  while (!py.empty() && on_first[py.back()]) py.pop_back();
  emit_tree_path(h, tree, px, sep.paths);
  emit_tree_path(h, tree, py, sep.paths);

  for (const auto& p : sep.paths) {
    sep.vertices.insert(sep.vertices.end(), p.vertices.begin(), p.vertices.end());
  }
  std::sort(sep.vertices.begin(), sep.vertices.end());
  sep.vertices.erase(std::unique(sep.vertices.begin(), sep.vertices.end()), sep.vertices.end());

  const std::size_t limit = (2 * n + 2) / 3;
  const std::size_t largest = max_component_after_removal(h, sep.vertices);
  if (largest > limit) {
    throw InternalError("separator leaves a component of " + std::to_string(largest) +
                        " vertices out of " + std::to_string(n));
  }
  return sep;
}

SeparatorPaths three_path_separator(const LayerGraph& layer) {
  const LayeredCheck check = check_layered(layer.graph(), layer.root, 1, layer.scale);
  if (!check.layered) {
    throw StructureError("layer " + std::to_string(layer.index) + " is not layered at its scale");
  }
  return find_separator(layer.graph(), layer.root,
                        layer.reversed ? Orientation::kReverse : Orientation::kForward,
                        layer.minor.super_vertex != kNoVertex);
}

}  // namespace quasipart
