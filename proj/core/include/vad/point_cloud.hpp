#pragma once

#include "vad/errors.hpp"
#include "vad/types.hpp"

#include <optional>
#include <vector>

namespace vad {

/// Uniform scale + translation mapping original coordinates into the
/// normalized frame: x' = scale * x + translation.
struct NormalizeTransform {
    double scale = 1.0;
    Vec3 translation = Vec3::Zero();

    Vec3 apply(const Vec3& p) const { return scale * p + translation; }
    Vec3 invert(const Vec3& p) const { return (p - translation) / scale; }
};

/// An unoriented point set, optionally carrying ground-truth unit normals and
/// the transform that produced the normalized coordinates. Value type, safe to
/// share read-only across threads.
struct PointCloud {
    std::vector<Vec3> points;
    std::vector<Vec3> gt_normals; // empty, or one unit vector per point
    NormalizeTransform transform;

    std::size_t size() const { return points.size(); }
    bool has_gt_normals() const { return !gt_normals.empty(); }
    Aabb bounds() const { return Aabb::of(points); }
};

/// One sign-ambiguous unit vector per point; v and -v denote the same element.
struct BiDirectionalField {
    std::vector<Vec3> vectors;

    std::size_t size() const { return vectors.size(); }
    void renormalize();
};

/// Drops exact/near duplicates (pairwise distance < tol); keeps first
/// occurrence, preserving order. Returns the number removed.
std::size_t merge_duplicates(PointCloud& cloud, double tol = 1e-12);

/// Uniformly rescales and recenters so the longest bounding-box axis spans
/// exactly [-0.4, 0.4] centered at the origin. Rejects clouds that are empty,
/// smaller than 4 points, or coplanar (smallest singular value of the centered
/// point matrix below 1e-9 of the bbox diagonal).
PointCloud normalize_to_unit_box(const PointCloud& cloud);

/// Minimum pairwise distance h (spatial hash grid, expected O(n)).
double min_pairwise_distance(const PointCloud& cloud);

/// True when fewer than 4 points or all points lie within tol_rel * diagonal
/// of a common plane.
bool is_degenerate_cloud(const std::vector<Vec3>& points, double tol_rel = 1e-9);

} // namespace vad
