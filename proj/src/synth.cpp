#include "voxmark/synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "voxmark/rng.hpp"

namespace voxmark {

namespace {

constexpr double kJitterMax = 1.5;     // voxels, per axis
constexpr double kAnchorRadius = 0.22; // fraction of dims, in-plane circle
constexpr double kBaseIntensity = 0.3;
constexpr double kBlobIntensity = 0.65;
constexpr double kGoldenAngle = 2.3999632297286533;

// Anchor m sits on mid-plane (m % 3) on a circle of radius kAnchorRadius
// around the volume center, at golden-angle increments.
Point3 anchor_fraction(int m) {
    const int plane = m % 3;
    const double theta = kGoldenAngle * (m + 1);
    const double u = 0.5 + kAnchorRadius * std::cos(theta);
    const double v = 0.5 + kAnchorRadius * std::sin(theta);
    switch (plane) {
        case 0: return {0.5, u, v};   // sagittal mid-plane
        case 1: return {u, 0.5, v};   // coronal
        default: return {u, v, 0.5};  // axial
    }
}

double ellipsoid_radius2(const Point3& p, const Point3& center, const Point3& radii) {
    double s = 0.0;
    for (int a = 0; a < 3; ++a) {
        const double t = (p[a] - center[a]) / radii[a];
        s += t * t;
    }
    return s;
}

}  // namespace

void PhantomSpec::validate() const {
    if (dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0)
        throw InvalidConfig("phantom dims must be positive");
    if (landmarks < 1) throw InvalidConfig("phantom needs at least one landmark");
    if (!(blob_sigma > 0.0)) throw InvalidConfig("blob_sigma must be positive");
    for (double s : semi_axes)
        if (!(s > 0.0) || s > 0.5) throw InvalidConfig("semi-axes must lie in (0, 0.5]");
}

std::pair<Volume3, LandmarkSet> gen_phantom(const PhantomSpec& spec, int index) {
    spec.validate();

    const Point3 center{(spec.dims[0] - 1) * 0.5, (spec.dims[1] - 1) * 0.5,
                        (spec.dims[2] - 1) * 0.5};
    const Point3 radii{spec.semi_axes[0] * spec.dims[0], spec.semi_axes[1] * spec.dims[1],
                       spec.semi_axes[2] * spec.dims[2]};

    LandmarkSet lms;
    for (int m = 0; m < spec.landmarks; ++m) {
        const Point3 f = anchor_fraction(m);
        Point3 anchor{f[0] * (spec.dims[0] - 1), f[1] * (spec.dims[1] - 1),
                      f[2] * (spec.dims[2] - 1)};
        // Feasibility: the anchor plus worst-case jitter must stay inside.
        Point3 worst = anchor;
        for (int a = 0; a < 3; ++a)
            worst[a] += (anchor[a] >= center[a] ? kJitterMax : -kJitterMax);
        if (ellipsoid_radius2(worst, center, radii) >= 1.0)
            throw InfeasiblePlacement("landmark anchor " + std::to_string(m + 1) +
                                      " cannot fit inside the ellipsoid");

        Rng jr = Rng::child(spec.seed, (static_cast<std::uint64_t>(index) << 16) + m);
        Landmark lm;
        lm.id = m + 1;
        for (int a = 0; a < 3; ++a) lm.p[a] = anchor[a] + jr.uniform(-kJitterMax, kJitterMax);
        lms.points.push_back(lm);
    }

    Volume3 vol(spec.dims, spec.spacing, 0.0f);
    const double inv2s2 = 1.0 / (2.0 * spec.blob_sigma * spec.blob_sigma);
    for (int i0 = 0; i0 < spec.dims[0]; ++i0) {
        for (int i1 = 0; i1 < spec.dims[1]; ++i1) {
            for (int i2 = 0; i2 < spec.dims[2]; ++i2) {
                const Point3 x{static_cast<double>(i0), static_cast<double>(i1),
                               static_cast<double>(i2)};
                double val = spec.noise_floor;
                if (ellipsoid_radius2(x, center, radii) < 1.0) val += kBaseIntensity;
                for (const Landmark& lm : lms.points) {
                    double d2 = 0.0;
                    for (int a = 0; a < 3; ++a) {
                        const double d = x[a] - lm.p[a];
                        d2 += d * d;
                    }
                    val += kBlobIntensity * std::exp(-d2 * inv2s2);
                }
                vol.at(i0, i1, i2) = static_cast<float>(std::clamp(val, 0.0, 1.0));
            }
        }
    }
    return {std::move(vol), std::move(lms)};
}

}  // namespace voxmark
