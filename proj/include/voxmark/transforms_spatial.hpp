#pragma once

#include <cstdint>
#include <optional>

#include "voxmark/core.hpp"

namespace voxmark {

/// Rigid + scale transform. The point map is: scale and rotate about
/// `center` (volume center when unset), then translate. Rotations are
/// applied in axis order 0, 1, 2 (right-handed, degrees).
struct AffineParams {
    std::array<double, 3> rotation_deg{0.0, 0.0, 0.0};
    std::array<double, 3> translation{0.0, 0.0, 0.0};  // voxels
    std::array<double, 3> scale{1.0, 1.0, 1.0};
    std::optional<Point3> center;

    bool is_identity() const;
};

/// Random smooth displacement field, trilinearly interpolated from a coarse
/// control grid. Control displacements are U(-max_displacement,
/// +max_displacement) per component, derived from `seed`.
struct ElasticParams {
    Index3 grid{4, 4, 4};           // control points per axis, each >= 2
    double max_displacement = 0.0;  // voxels
    std::uint64_t seed = 0;
};

/// Thick-slice simulation: resample down along one axis by `factor`, then
/// back up to the original dims.
struct AnisotropyParams {
    int axis = 2;
    double factor = 2.0;  // in (1, 4]
};

/// Forward affine image of a point (the analytic oracle for the faux-volume
/// landmark path).
Point3 transform_point_affine(const Point3& p, const AffineParams& a, const Index3& dims);

/// Inverse-mapped trilinear resample; voxels that map outside the field
/// are filled with 0. Output dims equal input dims.
Volume3 apply_affine(const Volume3& v, const AffineParams& a);

/// output(x) = v(x + D(x)) with D interpolated from the control grid.
/// max_displacement = 0 reproduces the input exactly.
Volume3 apply_elastic(const Volume3& v, const ElasticParams& e);

/// Down-then-up resampling along one axis. Downsampling area-averages the
/// piecewise-linear reconstruction with an aperture of (slice width - 1)
/// voxels, so the factor -> 1 limit is the identity and linear ramps
/// survive the round trip away from the boundary.
Volume3 apply_anisotropy(const Volume3& v, const AnisotropyParams& a);

/// Trilinear sample with zero fill outside [0, dims-1].
float sample_trilinear(const Volume3& v, double x0, double x1, double x2);

}  // namespace voxmark
