#include <algorithm>
#include <numeric>
#include <optional>

#include "urbanveg/errors.hpp"
#include "urbanveg/growth/skeleton.hpp"

namespace urbanveg::growth {

double Box3::volume() const {
  const Vec3 d = max - min;
  if (d.x <= 0.0 || d.y <= 0.0 || d.z <= 0.0) return 0.0;
  return d.x * d.y * d.z;
}

Box3 Box3::scaled(double factor) const {
  const Vec3 c = center();
  const Vec3 h = (max - min) * (0.5 * factor);
  return {c - h, c + h};
}

std::vector<std::vector<int>> TreeSkeleton::children() const {
  std::vector<std::vector<int>> out(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].parent >= 0) out[nodes[i].parent].push_back(static_cast<int>(i));
  return out;
}

double TreeSkeleton::height() const {
  double h = 0.0;
  for (const SkeletonNode& n : nodes) h = std::max(h, n.position.z);
  return h;
}

void validate(const TreeSkeleton& s) {
  if (s.nodes.empty()) throw ValidationError("nodes", "skeleton has no nodes");
  if (s.nodes[0].parent != -1) throw ValidationError("nodes[0]", "node 0 must be the root");
  for (std::size_t i = 1; i < s.nodes.size(); ++i) {
    const int p = s.nodes[i].parent;
    if (p < 0 || p >= static_cast<int>(i))
      throw ValidationError("nodes[" + std::to_string(i) + "]",
                            "parent index " + std::to_string(p) + " must precede node " + std::to_string(i));
  }
}

TreeSkeleton thicken(TreeSkeleton s, double tip_radius) {
  std::vector<double> sum_sq(s.nodes.size(), 0.0);
  std::vector<bool> leaf(s.nodes.size(), true);
  for (std::size_t i = s.nodes.size(); i-- > 0;) {
    SkeletonNode& n = s.nodes[i];
    n.radius = leaf[i] ? tip_radius : std::sqrt(sum_sq[i]);
    if (n.parent >= 0) {
      sum_sq[n.parent] += n.radius * n.radius;
      leaf[n.parent] = false;
    }
  }
  return s;
}

double da_vinci_residual(const TreeSkeleton& s) {
  std::vector<double> sum_sq(s.nodes.size(), 0.0);
  std::vector<bool> internal(s.nodes.size(), false);
  for (const SkeletonNode& n : s.nodes) {
    if (n.parent < 0) continue;
    sum_sq[n.parent] += n.radius * n.radius;
    internal[n.parent] = true;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < s.nodes.size(); ++i)
    if (internal[i]) worst = std::max(worst, std::abs(s.nodes[i].radius * s.nodes[i].radius - sum_sq[i]));
  return worst;
}

std::vector<bool> trunk_mask(const TreeSkeleton& s) {
  const std::size_t n = s.nodes.size();
  std::vector<bool> trunk(n, false);
  if (n == 0) return trunk;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (s.nodes[a].position.z != s.nodes[b].position.z) return s.nodes[a].position.z < s.nodes[b].position.z;
    return a < b;
  });
  const auto k = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(0.2 * static_cast<double>(n))));
  for (std::size_t i = 0; i < k; ++i) {
    for (int v = order[i]; v >= 0 && !trunk[v]; v = s.nodes[v].parent) trunk[v] = true;
  }
  return trunk;
}

std::optional<Box3> crown_box(const TreeSkeleton& s, const std::vector<bool>& trunk) {
  std::optional<Box3> box;
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    if (trunk[i]) continue;
    const Vec3 p = s.nodes[i].position;
    if (!box) {
      box = Box3{p, p};
      continue;
    }
    box->min = {std::min(box->min.x, p.x), std::min(box->min.y, p.y), std::min(box->min.z, p.z)};
    box->max = {std::max(box->max.x, p.x), std::max(box->max.y, p.y), std::max(box->max.z, p.z)};
  }
  return box;
}

PruneResult prune_crown(const TreeSkeleton& s, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ParameterRangeError("gamma", gamma, 0.0, 1.0);
  const std::vector<bool> trunk = trunk_mask(s);
  const std::optional<Box3> crown = crown_box(s, trunk);
  PruneResult out;
  out.skeleton.seed = s.seed;
  if (!crown) {
    out.skeleton = s;
    out.trunk = trunk;
    return out;
  }
  out.box = crown->scaled(gamma);

  constexpr double kTol = 1e-9;
  std::vector<int> remap(s.nodes.size(), -1);
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const SkeletonNode& n = s.nodes[i];
    if (n.parent >= 0 && remap[n.parent] < 0) continue;  // ancestor removed
    if (!trunk[i] && !out.box->contains(n.position, kTol)) continue;
    remap[i] = static_cast<int>(out.skeleton.nodes.size());
    SkeletonNode copy = n;
    copy.parent = n.parent >= 0 ? remap[n.parent] : -1;
    out.skeleton.nodes.push_back(copy);
    out.trunk.push_back(trunk[i]);
  }
  return out;
}

}  // namespace urbanveg::growth
