#include "vad/point_cloud.hpp"

#include "vad/log.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace vad {

void BiDirectionalField::renormalize() {
    for (auto& v : vectors) {
        const double n = v.norm();
        if (n > 0) v /= n;
    }
}

namespace {

struct CellKey {
    std::int64_t x, y, z;
    bool operator==(const CellKey& o) const { return x == o.x && y == o.y && z == o.z; }
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t v : {k.x, k.y, k.z}) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using CellMap = std::unordered_map<CellKey, std::vector<int>, CellKeyHash>;

CellKey cell_of(const Vec3& p, const Vec3& lo, double inv_cell) {
    return {static_cast<std::int64_t>(std::floor((p.x() - lo.x()) * inv_cell)),
            static_cast<std::int64_t>(std::floor((p.y() - lo.y()) * inv_cell)),
            static_cast<std::int64_t>(std::floor((p.z() - lo.z()) * inv_cell))};
}

CellMap build_cells(const std::vector<Vec3>& pts, const Vec3& lo, double inv_cell) {
    CellMap cells;
    cells.reserve(pts.size());
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        cells[cell_of(pts[i], lo, inv_cell)].push_back(i);
    }
    return cells;
}

// Scans the 27-neighborhood of every occupied cell for the closest pair at
// cell size >= the true minimum distance.
double min_distance_with_cell(const std::vector<Vec3>& pts, const Vec3& lo, double cell) {
    const double inv_cell = 1.0 / cell;
    CellMap cells = build_cells(pts, lo, inv_cell);
    double best_sq = std::numeric_limits<double>::max();
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        const CellKey c = cell_of(pts[i], lo, inv_cell);
        for (std::int64_t dz = -1; dz <= 1; ++dz)
            for (std::int64_t dy = -1; dy <= 1; ++dy)
                for (std::int64_t dx = -1; dx <= 1; ++dx) {
                    auto it = cells.find({c.x + dx, c.y + dy, c.z + dz});
                    if (it == cells.end()) continue;
                    for (int j : it->second) {
                        if (j <= i) continue;
                        best_sq = std::min(best_sq, (pts[i] - pts[j]).squaredNorm());
                    }
                }
    }
    return best_sq == std::numeric_limits<double>::max() ? -1.0 : std::sqrt(best_sq);
}

} // namespace

double min_pairwise_distance(const PointCloud& cloud) {
    const auto& pts = cloud.points;
    if (pts.size() < 2) fail(ErrorCode::EmptyCloud, "min_pairwise_distance needs at least 2 points");

    const Aabb box = Aabb::of(pts);
    const double diag = std::max(box.diagonal(), 1e-300);

    // Upper bound from consecutive points in x-sorted order, then refine with a
    // hash grid at that cell size. The result is exact: the grid pass misses no
    // pair closer than its cell size.
    std::vector<int> order(pts.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::make_tuple(pts[a].x(), pts[a].y(), pts[a].z(), a) <
               std::make_tuple(pts[b].x(), pts[b].y(), pts[b].z(), b);
    });
    double bound = diag;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        bound = std::min(bound, (pts[order[k]] - pts[order[k + 1]]).norm());
    }
    if (bound == 0.0) return 0.0;

    // Clamp the cell count so adversarially tight pairs cannot blow up memory.
    const double min_cell = diag / 1024.0;
    const double cell = std::max(bound, min_cell);
    const double found = min_distance_with_cell(pts, box.lo, cell * 1.0000001);
    return found;
}

bool is_degenerate_cloud(const std::vector<Vec3>& points, double tol_rel) {
    if (points.size() < 4) return true;
    const Aabb box = Aabb::of(points);
    const double diag = box.diagonal();
    if (diag <= 0) return true;

    Vec3 mean = Vec3::Zero();
    for (const auto& p : points) mean += p;
    mean /= static_cast<double>(points.size());

    Mat3 cov = Mat3::Zero();
    for (const auto& p : points) {
        const Vec3 d = p - mean;
        cov += d * d.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Mat3> es(cov);
    // Smallest singular value of the centered matrix = sqrt of smallest
    // covariance eigenvalue.
    const double smin = std::sqrt(std::max(0.0, es.eigenvalues()(0)));
    return smin < tol_rel * diag;
}

std::size_t merge_duplicates(PointCloud& cloud, double tol) {
    const auto& pts = cloud.points;
    if (pts.size() < 2) return 0;
    const Aabb box = Aabb::of(pts);
    const double cell = tol * 4.0;
    const double inv_cell = 1.0 / cell;
    CellMap cells;
    std::vector<char> dropped(pts.size(), 0);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        const CellKey c = cell_of(pts[i], box.lo, inv_cell);
        bool duplicate = false;
        for (std::int64_t dz = -1; dz <= 1 && !duplicate; ++dz)
            for (std::int64_t dy = -1; dy <= 1 && !duplicate; ++dy)
                for (std::int64_t dx = -1; dx <= 1 && !duplicate; ++dx) {
                    auto it = cells.find({c.x + dx, c.y + dy, c.z + dz});
                    if (it == cells.end()) continue;
                    for (int j : it->second) {
                        if ((pts[i] - pts[j]).norm() < tol) {
                            duplicate = true;
                            break;
                        }
                    }
                }
        if (duplicate) {
            dropped[i] = 1;
        } else {
            cells[c].push_back(i);
        }
    }
    std::size_t removed = 0;
    PointCloud out;
    out.transform = cloud.transform;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        if (dropped[i]) {
            ++removed;
            continue;
        }
        out.points.push_back(cloud.points[i]);
        if (cloud.has_gt_normals()) out.gt_normals.push_back(cloud.gt_normals[i]);
    }
    if (removed > 0) {
        log_warn("merged ", removed, " duplicate point(s) at ingestion");
        cloud = std::move(out);
    }
    return removed;
}

PointCloud normalize_to_unit_box(const PointCloud& cloud) {
    if (cloud.points.empty()) fail(ErrorCode::EmptyCloud, "cannot normalize an empty cloud");
    if (is_degenerate_cloud(cloud.points))
        fail(ErrorCode::DegenerateCloud, "normalization requires >= 4 non-coplanar points");

    const Aabb box = Aabb::of(cloud.points);
    const double longest = box.extent().maxCoeff();
    const double scale = 0.8 / longest;
    const Vec3 center = box.center();

    PointCloud out;
    out.gt_normals = cloud.gt_normals;
    out.points.reserve(cloud.size());
    NormalizeTransform t;
    t.scale = scale * cloud.transform.scale;
    t.translation = scale * (cloud.transform.translation - center);
    // compose with any pre-existing transform so the record always maps the
    // ORIGINAL coordinates to the final normalized frame
    for (const auto& p : cloud.points) out.points.push_back(scale * (p - center));
    out.transform = t;
    return out;
}

} // namespace vad
