#pragma once

#include "vad/types.hpp"

#include <vector>

namespace vad {

/// Exact nearest-neighbor search over a fixed point set (median-split k-d
/// tree with full backtracking; never approximate). Ties on distance resolve
/// to the lowest point index so queries are deterministic.
class KdTree {
  public:
    KdTree() = default;
    explicit KdTree(const std::vector<Vec3>& points);

    bool empty() const { return nodes_.empty(); }
    std::size_t size() const { return points_.size(); }

    /// Index of the nearest point; `skip` excludes one index (for
    /// nearest-other-point queries). Returns kInvalidIndex on empty trees.
    int nearest(const Vec3& query, int skip = -1) const;

    /// Nearest distance squared.
    double nearest_dist_sq(const Vec3& query, int skip = -1) const;

    /// All indices within radius (inclusive).
    std::vector<int> radius_query(const Vec3& query, double radius) const;

  private:
    struct Node {
        int axis = 0;
        int point = -1; // splitting point index
        int left = -1, right = -1;
    };

    int build(int begin, int end, int depth);
    void search(int node, const Vec3& q, int skip, double& best_sq, int& best_idx) const;
    void search_radius(int node, const Vec3& q, double r_sq, std::vector<int>& out) const;

    std::vector<Vec3> points_;
    std::vector<int> perm_; // scratch during build
    std::vector<Node> nodes_;
    int root_ = -1;
};

} // namespace vad
