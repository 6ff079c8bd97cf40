#pragma once

#include <span>
#include <vector>

#include "msv/decoder_config.hpp"
#include "msv/frame.hpp"

namespace msv {

/// Per-pixel sampling offsets: the pixel at p in the output is read from
/// p + (dx(p), dy(p)) in the source image (warp convention).
struct FlowField {
    int width = 0;
    int height = 0;
    std::vector<double> dx;
    std::vector<double> dy;

    FlowField() = default;
    FlowField(int w, int h)
        : width(w), height(h),
          dx(static_cast<std::size_t>(w) * h, 0.0),
          dy(static_cast<std::size_t>(w) * h, 0.0) {}

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width + x;
    }
};

/// Estimate flow from generated history and the sketch window (the last
/// sketch is the current frame's). The zero estimator returns the all-zero
/// field; block matching compares the two most recent sketches and fills
/// each block with the SAD-minimizing integer displacement, ties broken
/// toward zero displacement. A single-sketch window yields zero flow.
FlowField estimate_flow(std::span<const Frame> prev_frames,
                        std::span<const SketchFrame> sketches,
                        const DecoderConfig& cfg);

/// Bilinear warp: output(p) = frame sampled at p + flow(p). Out-of-range
/// samples clamp to the border or read as zero, per policy. Channel values
/// are rounded half-to-even at the end.
Frame warp(const Frame& frame, const FlowField& flow, BorderPolicy border);

} // namespace msv
