#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <vector>

namespace vad {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Index = std::int64_t;

constexpr Index kInvalidIndex = -1;

/// Symmetric 3x3 tensor stored as its six independent components.
struct SymMat3 {
    double xx = 0, yy = 0, zz = 0, xy = 0, xz = 0, yz = 0;

    static SymMat3 outer(const Vec3& n) {
        return {n.x() * n.x(), n.y() * n.y(), n.z() * n.z(),
                n.x() * n.y(), n.x() * n.z(), n.y() * n.z()};
    }

    Mat3 to_matrix() const {
        Mat3 m;
        m << xx, xy, xz, xy, yy, yz, xz, yz, zz;
        return m;
    }

    double trace() const { return xx + yy + zz; }

    double& comp(int k) { return (&xx)[k]; }
    double comp(int k) const { return (&xx)[k]; }
    static constexpr int kComponents = 6;

    SymMat3& operator+=(const SymMat3& o) {
        for (int k = 0; k < 6; ++k) comp(k) += o.comp(k);
        return *this;
    }
    SymMat3 operator*(double s) const {
        SymMat3 r = *this;
        for (int k = 0; k < 6; ++k) r.comp(k) *= s;
        return r;
    }
};

struct Aabb {
    Vec3 lo = Vec3::Constant(std::numeric_limits<double>::max());
    Vec3 hi = Vec3::Constant(std::numeric_limits<double>::lowest());

    void expand(const Vec3& p) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    Vec3 center() const { return 0.5 * (lo + hi); }
    Vec3 extent() const { return hi - lo; }
    double diagonal() const { return extent().norm(); }
    bool contains(const Vec3& p) const {
        return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
    }

    static Aabb of(const std::vector<Vec3>& pts) {
        Aabb b;
        for (const auto& p : pts) b.expand(p);
        return b;
    }
};

} // namespace vad
