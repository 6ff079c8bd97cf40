#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "msv/frame.hpp"
#include "msv/mask.hpp"

namespace msv::test {

// Deterministic splitmix64; tests must not depend on platform RNGs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(next() %
                                     static_cast<std::uint64_t>(hi - lo + 1));
    }
    double unit() { return (next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

private:
    std::uint64_t state_;
};

inline BinaryMask random_mask(Rng& rng, int w, int h, double density = 0.5) {
    BinaryMask m(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (rng.chance(density))
                m.set(x, y, true);
    return m;
}

/// Random binary sketch, values {0,255}.
inline SketchFrame random_sketch(Rng& rng, int w, int h,
                                 double edge_density = 0.3) {
    SketchFrame s(w, h);
    for (auto& v : s.data)
        v = rng.chance(edge_density) ? kEdge : kBackground;
    return s;
}

inline Frame random_frame(Rng& rng, int w, int h, int lo = 0, int hi = 255) {
    Frame f(w, h);
    for (auto& v : f.data)
        v = static_cast<std::uint8_t>(rng.range(lo, hi));
    return f;
}

/// Unique scratch directory, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::uint64_t counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("msv_test_" + tag + "_" + std::to_string(++counter) + "_" +
                 std::to_string(
                     static_cast<std::uint64_t>(::getpid())));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

} // namespace msv::test
