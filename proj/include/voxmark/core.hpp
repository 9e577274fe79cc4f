#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "voxmark/errors.hpp"

namespace voxmark {

using Index3 = std::array<int, 3>;
using Point3 = std::array<double, 3>;

/// Dense 3D scalar field with per-axis voxel spacing in mm.
///
/// Memory order: axis 2 fastest, i.e. linear index i0*d1*d2 + i1*d2 + i2.
/// Voxel centers sit at integer coordinates; the mm position of voxel
/// (i0,i1,i2) is (i0*s0, i1*s1, i2*s2) with the origin at voxel (0,0,0).
struct Volume3 {
    Index3 dims{0, 0, 0};
    std::array<float, 3> spacing{1.0f, 1.0f, 1.0f};
    std::vector<float> data;

    Volume3() = default;
    Volume3(Index3 d, std::array<float, 3> s, float fill = 0.0f);

    std::size_t size() const {
        return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
    }
    std::size_t index(int i0, int i1, int i2) const {
        return (static_cast<std::size_t>(i0) * dims[1] + i1) * dims[2] + i2;
    }
    float at(int i0, int i1, int i2) const { return data[index(i0, i1, i2)]; }
    float& at(int i0, int i1, int i2) { return data[index(i0, i1, i2)]; }

    bool inside(int i0, int i1, int i2) const {
        return i0 >= 0 && i0 < dims[0] && i1 >= 0 && i1 < dims[1] && i2 >= 0 && i2 < dims[2];
    }
    bool inside(const Point3& p) const {
        return p[0] >= 0.0 && p[0] <= dims[0] - 1 && p[1] >= 0.0 && p[1] <= dims[1] - 1 &&
               p[2] >= 0.0 && p[2] <= dims[2] - 1;
    }

    Point3 voxel_to_mm(const Point3& p) const {
        return {p[0] * spacing[0], p[1] * spacing[1], p[2] * spacing[2]};
    }

    float min_value() const;
    float max_value() const;

    /// Throws NonPositiveDims / Error if dims, spacing, data length, or
    /// finiteness invariants are violated.
    void validate() const;
};

/// One named landmark in continuous voxel coordinates.
struct Landmark {
    int id = 0;
    Point3 p{0.0, 0.0, 0.0};
    bool oob = false;  // pushed out of field by a transform; excluded from loss/metrics
};

/// K named points with optional sub-anatomy grouping. Ids are unique and
/// kept sorted ascending.
struct LandmarkSet {
    std::vector<Landmark> points;
    std::map<int, std::string> subanatomy;

    std::size_t size() const { return points.size(); }

    /// Sorts by id and throws DuplicateId on repeats.
    void normalize();

    /// Checks id uniqueness/order and, when 88 landmarks carry a grouping,
    /// that the grouping matches the canonical 7-group table.
    void validate() const;

    /// Additionally checks that every non-oob point lies in [0, dims-1].
    void validate_against(const Index3& dims) const;
};

/// Canonical grouping of the 88-landmark set into 7 brain sub-anatomies.
const std::map<int, std::string>& table1_groups();

// --- Binary volume I/O ------------------------------------------------------
//
// Little-endian layout: magic "VLM1", version u32 = 1, dims 3*u32,
// spacing 3*f32, then d0*d1*d2 f32 voxels with axis 2 fastest.

Volume3 read_volume(const std::string& path);
void write_volume(const Volume3& v, const std::string& path);

// --- Landmark JSON I/O ------------------------------------------------------
//
// {"dims":[d0,d1,d2],
//  "landmarks":[{"id":1,"p":[x0,x1,x2],"oob":false}, ...],
//  "subanatomy":{"1":"Frontal Lobe", ...}}   (subanatomy optional)

LandmarkSet read_landmarks(const std::string& path, const Index3& dims);
LandmarkSet read_landmarks(const std::string& path);  // dims taken from the file
void write_landmarks(const LandmarkSet& lms, const Index3& dims, const std::string& path);

}  // namespace voxmark
