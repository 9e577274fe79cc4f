#pragma once

#include <cstdint>
#include <utility>

#include "voxmark/core.hpp"

namespace voxmark {

/// Parameters of the synthetic head phantom: an ellipsoid of base intensity
/// with K Gaussian bright blobs whose centers are the landmarks.
struct PhantomSpec {
    Index3 dims{32, 32, 32};
    std::array<float, 3> spacing{1.0f, 1.0f, 1.0f};
    int landmarks = 8;                              // K
    double blob_sigma = 1.5;                        // voxels
    std::array<double, 3> semi_axes{0.4, 0.4, 0.4}; // fraction of dims, in (0, 0.5]
    double noise_floor = 0.02;                      // constant background intensity
    std::uint64_t seed = 42;

    void validate() const;  // throws InvalidConfig
};

/// Deterministic phantom number `index`: landmark positions are fixed
/// anchors on the three mid-planes plus a per-(seed,index) jitter of up to
/// 1.5 voxels per axis. Intensities lie in [0, 1] and every landmark is
/// strictly inside the ellipsoid.
std::pair<Volume3, LandmarkSet> gen_phantom(const PhantomSpec& spec, int index);

}  // namespace voxmark
