#pragma once

#include <cstdint>
#include <vector>

#include "msv/error.hpp"

namespace msv {

// Sketch pixel alphabet. Raw extractor output is {0,255}; the masked
// form additionally uses the sentinel so the mask survives a sign test.
inline constexpr std::uint8_t kBackground = 0;
inline constexpr std::uint8_t kSentinel = 1;
inline constexpr std::uint8_t kEdge = 255;

/// 8-bit RGB raster, row-major, channel-interleaved.
struct Frame {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data; // width * height * 3

    Frame() = default;
    Frame(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h),
          data(static_cast<std::size_t>(w) * h * 3, fill) {}

    std::uint8_t& at(int x, int y, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    std::uint8_t at(int x, int y, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }

    bool same_shape(const Frame& o) const {
        return width == o.width && height == o.height;
    }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }

    bool operator==(const Frame&) const = default;
};

/// 8-bit single-channel raster, row-major. Holds sketches (raw,
/// composited and masked) as well as generic grayscale images.
struct SketchFrame {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data; // width * height

    SketchFrame() = default;
    SketchFrame(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h),
          data(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t& at(int x, int y) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t at(int x, int y) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }

    bool same_shape(const SketchFrame& o) const {
        return width == o.width && height == o.height;
    }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }

    bool operator==(const SketchFrame&) const = default;
};

/// Rec. 601 luma of one pixel.
inline double luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return 0.299 * r + 0.587 * g + 0.114 * b;
}

inline void require_same_shape(const Frame& a, const Frame& b,
                               const char* op) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(op) + ": frame dimensions differ");
}

inline void require_same_shape(const SketchFrame& a, const SketchFrame& b,
                               const char* op) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(op) + ": raster dimensions differ");
}

} // namespace msv
