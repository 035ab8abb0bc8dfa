#include "urbanveg/geometry/medial_axis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>

#include <boost/polygon/voronoi.hpp>

#include "urbanveg/errors.hpp"

namespace urbanveg::geometry {

namespace bp = boost::polygon;

double AxisGraph::total_length() const {
  double s = 0.0;
  for (const AxisEdge& e : edges) s += e.length;
  return s;
}

namespace {

constexpr double kStrictInside = 1e-6;

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void densify(const Ring& ring, double spacing, std::vector<Vec2>& out) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = ring[i];
    const Vec2 b = ring[(i + 1) % n];
    const double len = distance(a, b);
    const int steps = std::max(1, static_cast<int>(std::ceil(len / spacing - 1e-9)));
    for (int k = 0; k < steps; ++k) out.push_back(a + (b - a) * (static_cast<double>(k) / steps));
  }
}

std::vector<std::vector<std::pair<int, int>>> adjacency(const AxisGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertices.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    adj[g.edges[i].a].push_back({g.edges[i].b, static_cast<int>(i)});
    adj[g.edges[i].b].push_back({g.edges[i].a, static_cast<int>(i)});
  }
  return adj;
}

// Drops unused vertices and renumbers.
AxisGraph compact(const AxisGraph& g, const std::vector<bool>& edge_alive) {
  AxisGraph out;
  std::vector<int> remap(g.vertices.size(), -1);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (!edge_alive[i]) continue;
    AxisEdge e = g.edges[i];
    for (int* v : {&e.a, &e.b}) {
      if (remap[*v] < 0) {
        remap[*v] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(g.vertices[*v]);
      }
      *v = remap[*v];
    }
    out.edges.push_back(e);
  }
  return out;
}

// One pruning pass. Returns true if anything was removed.
bool prune_pass(AxisGraph& g, double min_length) {
  const auto adj = adjacency(g);
  std::vector<bool> alive(g.edges.size(), true);
  struct Branch {
    std::vector<int> edges;
    double length = 0.0;
    int junction = -1;  // -1 if the chain ends at another leaf
  };
  std::vector<Branch> spurs;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (adj[v].size() != 1) continue;
    Branch br;
    int prev = -1;
    int cur = static_cast<int>(v);
    while (true) {
      int next = -1;
      int edge = -1;
      for (auto [u, e] : adj[cur]) {
        if (e == prev) continue;
        next = u;
        edge = e;
        break;
      }
      if (edge < 0) break;
      br.edges.push_back(edge);
      br.length += g.edges[edge].length;
      prev = edge;
      cur = next;
      if (adj[cur].size() != 2) break;
    }
    if (adj[cur].size() >= 3) {
      br.junction = cur;
    } else if (cur < static_cast<int>(v)) {
      continue;  // isolated chain, already seen from its other end
    }
    if (br.length < min_length) spurs.push_back(std::move(br));
  }

  // Never strip every branch of a junction in one pass: keep its longest spur.
  std::unordered_map<int, std::vector<std::size_t>> by_junction;
  for (std::size_t i = 0; i < spurs.size(); ++i)
    if (spurs[i].junction >= 0) by_junction[spurs[i].junction].push_back(i);
  std::vector<bool> keep(spurs.size(), false);
  for (const auto& [j, ids] : by_junction) {
    if (ids.size() < adj[j].size()) continue;
    const auto longest = *std::max_element(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      return spurs[a].length < spurs[b].length;
    });
    keep[longest] = true;
  }

  bool changed = false;
  for (std::size_t i = 0; i < spurs.size(); ++i) {
    if (keep[i]) continue;
    for (int e : spurs[i].edges) alive[e] = false;
    changed = true;
  }
  if (changed) g = compact(g, alive);
  return changed;
}

}  // namespace

AxisGraph medial_axis(const Polygon2D& input, const MedialAxisOptions& options) {
  AxisGraph graph;
  if (input.outer.size() < 3 || area(input) < 1e-6) return graph;
  const Polygon2D p = oriented(input);

  std::vector<Vec2> samples;
  densify(p.outer, options.sample_spacing, samples);
  for (const Ring& h : p.holes) densify(h, options.sample_spacing, samples);

  // Boost.Polygon's Voronoi builder is exact on 32-bit integer input.
  const Bbox box = bbox(p);
  const double extent = std::max({box.width(), box.height(), 1e-9});
  const double scale = std::min(1e4, 1e9 / extent);
  std::vector<bp::point_data<int>> sites;
  sites.reserve(samples.size());
  for (const Vec2& s : samples) {
    sites.emplace_back(static_cast<int>(std::lround((s.x - box.min.x) * scale)),
                       static_cast<int>(std::lround((s.y - box.min.y) * scale)));
  }
  std::sort(sites.begin(), sites.end(), [](const auto& a, const auto& b) {
    return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
  });
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());

  bp::voronoi_diagram<double> vd;
  bp::construct_voronoi(sites.begin(), sites.end(), &vd);

  auto to_world = [&](const bp::voronoi_vertex<double>& v) {
    return Vec2{v.x() / scale + box.min.x, v.y() / scale + box.min.y};
  };
  auto strictly_inside = [&](Vec2 q) { return contains(p, q) && distance_to_boundary(p, q) > kStrictInside; };

  std::unordered_map<const bp::voronoi_vertex<double>*, int> vertex_index;
  std::vector<std::pair<int, int>> raw_edges;
  auto index_of = [&](const bp::voronoi_vertex<double>* v) {
    auto [it, inserted] = vertex_index.try_emplace(v, static_cast<int>(graph.vertices.size()));
    if (inserted) graph.vertices.push_back(to_world(*v));
    return it->second;
  };
  for (const auto& e : vd.edges()) {
    if (!e.is_primary() || !e.is_finite() || &e > e.twin()) continue;
    const Vec2 a = to_world(*e.vertex0());
    const Vec2 b = to_world(*e.vertex1());
    if (!strictly_inside(a) || !strictly_inside(b) || !strictly_inside((a + b) * 0.5)) continue;
    raw_edges.push_back({index_of(e.vertex0()), index_of(e.vertex1())});
  }

  // Degenerate (cocircular) sites yield zero-length edges; merge their ends.
  DisjointSet ds(graph.vertices.size());
  for (auto [a, b] : raw_edges)
    if (distance(graph.vertices[a], graph.vertices[b]) < 1e-9) ds.join(a, b);
  for (auto [a, b] : raw_edges) {
    const int ra = ds.find(a);
    const int rb = ds.find(b);
    if (ra == rb) continue;
    graph.edges.push_back({ra, rb, distance(graph.vertices[ra], graph.vertices[rb])});
  }
  graph = compact(graph, std::vector<bool>(graph.edges.size(), true));

  while (prune_pass(graph, options.prune_length)) {
  }
  return graph;
}

namespace {

// Farthest vertex from `src` within its component, with predecessor links.
std::pair<int, std::vector<int>> farthest(const AxisGraph& g,
                                          const std::vector<std::vector<std::pair<int, int>>>& adj,
                                          int src) {
  std::vector<double> dist(g.vertices.size(), std::numeric_limits<double>::infinity());
  std::vector<int> pred(g.vertices.size(), -1);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[src] = 0.0;
  pq.push({0.0, src});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (auto [u, e] : adj[v]) {
      const double nd = d + g.edges[e].length;
      if (nd < dist[u]) {
        dist[u] = nd;
        pred[u] = v;
        pq.push({nd, u});
      }
    }
  }
  int best = src;
  for (std::size_t v = 0; v < dist.size(); ++v)
    if (std::isfinite(dist[v]) && dist[v] > dist[best]) best = static_cast<int>(v);
  return {best, pred};
}

std::vector<int> longest_path_from(const AxisGraph& g, const std::vector<std::vector<std::pair<int, int>>>& adj,
                                   int seed_vertex) {
  const int a = farthest(g, adj, seed_vertex).first;
  auto [b, pred] = farthest(g, adj, a);
  std::vector<int> path;
  for (int v = b; v >= 0; v = pred[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<int> longest_path(const AxisGraph& g) {
  if (g.empty()) return {};
  const auto adj = adjacency(g);
  std::vector<int> best;
  double best_len = -1.0;
  std::vector<bool> seen(g.vertices.size(), false);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (seen[v] || adj[v].empty()) continue;
    auto path = longest_path_from(g, adj, static_cast<int>(v));
    // Mark the component.
    std::vector<int> stack{static_cast<int>(v)};
    seen[v] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (auto [u, e] : adj[x])
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
    }
    double len = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) len += distance(g.vertices[path[i - 1]], g.vertices[path[i]]);
    if (len > best_len) {
      best_len = len;
      best = std::move(path);
    }
  }
  return best;
}

std::vector<Vec2> equidistant_along(const AxisGraph& g, double delta) {
  if (!(delta > 0.0)) throw ParameterRangeError("delta", "delta must be > 0");
  std::vector<Vec2> out;
  if (g.empty()) return out;
  const auto adj = adjacency(g);
  std::vector<bool> vertex_seen(g.vertices.size(), false);
  std::vector<bool> edge_seen(g.edges.size(), false);
  constexpr double kEps = 1e-9;

  auto walk_component = [&](const std::vector<int>& main_path) {
    // Successor of each vertex along the main path, visited first.
    std::unordered_map<int, int> main_next;
    for (std::size_t i = 0; i + 1 < main_path.size(); ++i) main_next[main_path[i]] = main_path[i + 1];

    auto ordered_neighbors = [&](int v) {
      std::vector<std::pair<int, int>> nb = adj[v];
      std::sort(nb.begin(), nb.end());
      if (auto it = main_next.find(v); it != main_next.end()) {
        auto pos = std::find_if(nb.begin(), nb.end(), [&](auto& p) { return p.first == it->second; });
        if (pos != nb.end()) std::rotate(nb.begin(), pos, pos + 1);
      }
      return nb;
    };

    struct Frame {
      int vertex;
      double since_last;  // arc length walked since the last placed point
      std::vector<std::pair<int, int>> neighbors;
      std::size_t next = 0;
    };
    const int start = main_path.front();
    vertex_seen[start] = true;
    out.push_back(g.vertices[start]);
    std::vector<Frame> stack;
    stack.push_back({start, 0.0, ordered_neighbors(start)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == f.neighbors.size()) {
        stack.pop_back();
        continue;
      }
      const auto [u, e] = f.neighbors[f.next++];
      if (edge_seen[e]) continue;
      edge_seen[e] = true;
      const Vec2 a = g.vertices[f.vertex];
      const Vec2 b = g.vertices[u];
      const double len = g.edges[e].length;
      double need = delta - f.since_last;
      double last_t = -1.0;
      while (need <= len + kEps) {
        const double t = std::min(need, len);
        out.push_back(a + (b - a) * (t / len));
        last_t = t;
        need += delta;
      }
      const double since = last_t < 0.0 ? f.since_last + len : len - last_t;
      if (vertex_seen[u]) continue;  // closes a cycle
      vertex_seen[u] = true;
      stack.push_back({u, since, ordered_neighbors(u)});
    }
  };

  // Largest component first, then any others in vertex order.
  walk_component(longest_path(g));
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (vertex_seen[v] || adj[v].empty()) continue;
    walk_component(longest_path_from(g, adj, static_cast<int>(v)));
  }
  return out;
}

}  // namespace urbanveg::geometry
