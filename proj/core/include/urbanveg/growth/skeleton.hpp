#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "urbanveg/ppm/structure.hpp"

namespace urbanveg::growth {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(Vec3 a, double s) { return {a.x * s, a.y * s, a.z * s}; }
  friend Vec3 operator*(double s, Vec3 a) { return a * s; }
  friend bool operator==(Vec3 a, Vec3 b) = default;
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double distance_sq(Vec3 a, Vec3 b) { return dot(a - b, a - b); }

/// Axis-aligned box.
struct Box3 {
  Vec3 min;
  Vec3 max;

  double volume() const;
  bool contains(Vec3 p, double tol = 0.0) const {
    return p.x >= min.x - tol && p.x <= max.x + tol && p.y >= min.y - tol && p.y <= max.y + tol &&
           p.z >= min.z - tol && p.z <= max.z + tol;
  }
  Vec3 center() const { return (min + max) * 0.5; }
  /// Box with the same center and every side multiplied by `factor`.
  Box3 scaled(double factor) const;
};

struct SkeletonNode {
  Vec3 position;
  double radius = 0.0;
  int parent = -1;  ///< -1 for the root

  friend bool operator==(const SkeletonNode&, const SkeletonNode&) = default;
};

/// Rooted tree of nodes. Parents always precede their children.
struct TreeSkeleton {
  std::vector<SkeletonNode> nodes;
  ppm::PlantSeed seed;

  std::vector<std::vector<int>> children() const;
  double height() const;
};

/// Throws ValidationError unless there is exactly one root at index 0 and
/// every other node's parent has a smaller index.
void validate(const TreeSkeleton& s);

/// Leaf radius `tip_radius`; every internal node gets sqrt(sum of squared
/// child radii).
TreeSkeleton thicken(TreeSkeleton s, double tip_radius);

/// Largest |r_p² - Σ r_c²| over internal nodes.
double da_vinci_residual(const TreeSkeleton& s);

/// Trunk nodes: the lowest max(1, ceil(0.2 n)) nodes by (z, index) plus all
/// of their ancestors.
std::vector<bool> trunk_mask(const TreeSkeleton& s);

/// Bounding box of the non-trunk nodes; nullopt when every node is trunk.
std::optional<Box3> crown_box(const TreeSkeleton& s, const std::vector<bool>& trunk);

struct PruneResult {
  TreeSkeleton skeleton;
  /// Crown box scaled by gamma; nullopt when the tree has no crown.
  std::optional<Box3> box;
  /// Trunk flags of the surviving nodes.
  std::vector<bool> trunk;
};

/// Removes every non-trunk node outside the crown box scaled by `gamma`
/// about its center, together with its subtree. gamma = 1 keeps every node.
/// Throws ParameterRangeError for gamma outside [0, 1].
PruneResult prune_crown(const TreeSkeleton& s, double gamma);

}  // namespace urbanveg::growth
