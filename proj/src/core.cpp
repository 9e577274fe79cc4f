#include "voxmark/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include <json.hpp>

namespace voxmark {

Volume3::Volume3(Index3 d, std::array<float, 3> s, float fill) : dims(d), spacing(s) {
    if (d[0] <= 0 || d[1] <= 0 || d[2] <= 0) throw NonPositiveDims("volume dims must be positive");
    data.assign(size(), fill);
}

float Volume3::min_value() const {
    return *std::min_element(data.begin(), data.end());
}

float Volume3::max_value() const {
    return *std::max_element(data.begin(), data.end());
}

void Volume3::validate() const {
    if (dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0)
        throw NonPositiveDims("volume dims must be positive");
    for (float s : spacing)
        if (!(s > 0.0f)) throw Error("volume spacing must be positive");
    if (data.size() != size()) throw Error("volume data length does not match dims");
    for (float v : data)
        if (!std::isfinite(v)) throw Error("volume contains non-finite intensity");
}

void LandmarkSet::normalize() {
    std::sort(points.begin(), points.end(),
              [](const Landmark& a, const Landmark& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].id == points[i - 1].id)
            throw DuplicateId("duplicate landmark id " + std::to_string(points[i].id));
}

void LandmarkSet::validate() const {
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].id <= points[i - 1].id)
            throw DuplicateId("landmark ids must be unique and ascending");
    if (points.size() == 88 && !subanatomy.empty()) {
        if (subanatomy != table1_groups())
            throw ParseError("88-landmark grouping does not match the canonical 7-group table");
    }
}

void LandmarkSet::validate_against(const Index3& dims) const {
    validate();
    for (const Landmark& lm : points) {
        if (lm.oob) continue;
        for (int a = 0; a < 3; ++a)
            if (lm.p[a] < 0.0 || lm.p[a] > dims[a] - 1)
                throw OutOfBounds("landmark " + std::to_string(lm.id) + " outside volume");
    }
}

const std::map<int, std::string>& table1_groups() {
    static const std::map<int, std::string> groups = [] {
        std::map<int, std::string> g;
        auto fill = [&g](int lo, int hi, const char* name) {
            for (int i = lo; i <= hi; ++i) g[i] = name;
        };
        fill(1, 5, "Frontal Lobe");
        fill(6, 13, "Brain Stem");
        fill(14, 24, "Brain Boundary MSP");
        fill(25, 37, "Corpus Callosum");
        fill(38, 45, "Eye");
        fill(46, 55, "Brain Axial Boundary");
        fill(56, 88, "Temporal Lobe");
        return g;
    }();
    return groups;
}

// --- binary helpers ---------------------------------------------------------

namespace {

constexpr char kMagic[4] = {'V', 'L', 'M', '1'};

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_f32(std::ostream& os, float f) {
    std::uint32_t v;
    std::memcpy(&v, &f, 4);
    put_u32(os, v);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw TruncatedFile("unexpected end of volume file");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

float get_f32(std::istream& is) {
    std::uint32_t v = get_u32(is);
    float f;
    std::memcpy(&f, &v, 4);
    return f;
}

}  // namespace

Volume3 read_volume(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path);

    char magic[4];
    is.read(magic, 4);
    if (!is) throw TruncatedFile("volume file shorter than header: " + path);
    if (std::memcmp(magic, kMagic, 4) != 0) throw BadMagic("bad magic in " + path);

    const std::uint32_t version = get_u32(is);
    if (version != 1) throw ParseError("unsupported volume version " + std::to_string(version));

    Volume3 v;
    for (int a = 0; a < 3; ++a) {
        const std::uint32_t d = get_u32(is);
        if (d == 0 || d > (1u << 24)) throw NonPositiveDims("bad dimension in " + path);
        v.dims[a] = static_cast<int>(d);
    }
    for (int a = 0; a < 3; ++a) v.spacing[a] = get_f32(is);

    v.data.resize(v.size());
    if constexpr (std::endian::native == std::endian::little) {
        is.read(reinterpret_cast<char*>(v.data.data()),
                static_cast<std::streamsize>(v.data.size() * 4));
        if (!is) throw TruncatedFile("volume payload truncated: " + path);
    } else {
        for (float& f : v.data) f = get_f32(is);
    }
    v.validate();
    return v;
}

void write_volume(const Volume3& v, const std::string& path) {
    v.validate();
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open " + path + " for writing");

    os.write(kMagic, 4);
    put_u32(os, 1);
    for (int a = 0; a < 3; ++a) put_u32(os, static_cast<std::uint32_t>(v.dims[a]));
    for (int a = 0; a < 3; ++a) put_f32(os, v.spacing[a]);
    if constexpr (std::endian::native == std::endian::little) {
        os.write(reinterpret_cast<const char*>(v.data.data()),
                 static_cast<std::streamsize>(v.data.size() * 4));
    } else {
        for (float f : v.data) put_f32(os, f);
    }
    if (!os) throw IoError("write failed: " + path);
}

// --- landmark JSON ----------------------------------------------------------

namespace {

LandmarkSet parse_landmarks(const nlohmann::json& j) {
    LandmarkSet out;
    if (!j.contains("landmarks") || !j["landmarks"].is_array())
        throw ParseError("landmark file missing \"landmarks\" array");
    for (const auto& e : j["landmarks"]) {
        Landmark lm;
        lm.id = e.at("id").get<int>();
        const auto& p = e.at("p");
        if (!p.is_array() || p.size() != 3) throw ParseError("landmark \"p\" must have 3 entries");
        for (int a = 0; a < 3; ++a) lm.p[a] = p[a].get<double>();
        lm.oob = e.value("oob", false);
        out.points.push_back(lm);
    }
    if (j.contains("subanatomy")) {
        for (const auto& [key, val] : j["subanatomy"].items())
            out.subanatomy[std::stoi(key)] = val.get<std::string>();
    }
    out.normalize();
    return out;
}

}  // namespace

LandmarkSet read_landmarks(const std::string& path, const Index3& dims) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad landmark JSON: ") + e.what());
    }
    try {
        LandmarkSet out = parse_landmarks(j);
        out.validate_against(dims);
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad landmark JSON: ") + e.what());
    }
}

LandmarkSet read_landmarks(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad landmark JSON: ") + e.what());
    }
    if (!j.contains("dims")) throw ParseError("landmark file has no \"dims\" field");
    Index3 dims;
    for (int a = 0; a < 3; ++a) dims[a] = j["dims"][a].get<int>();
    try {
        LandmarkSet out = parse_landmarks(j);
        out.validate_against(dims);
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad landmark JSON: ") + e.what());
    }
}

void write_landmarks(const LandmarkSet& lms, const Index3& dims, const std::string& path) {
    lms.validate();
    nlohmann::json j;
    j["dims"] = {dims[0], dims[1], dims[2]};
    j["landmarks"] = nlohmann::json::array();
    for (const Landmark& lm : lms.points) {
        nlohmann::json e;
        e["id"] = lm.id;
        e["p"] = {lm.p[0], lm.p[1], lm.p[2]};
        if (lm.oob) e["oob"] = true;
        j["landmarks"].push_back(e);
    }
    if (!lms.subanatomy.empty()) {
        nlohmann::json s = nlohmann::json::object();
        for (const auto& [id, name] : lms.subanatomy) s[std::to_string(id)] = name;
        j["subanatomy"] = s;
    }
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw IoError("cannot open " + path + " for writing");
    os << j.dump(2) << "\n";
    if (!os) throw IoError("write failed: " + path);
}

}  // namespace voxmark
