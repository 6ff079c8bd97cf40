#pragma once

#include <span>
#include <vector>

#include "msv/decoder_config.hpp"
#include "msv/flow.hpp"
#include "msv/frame.hpp"

namespace msv {

/// Per-pixel weight in [0,1] selecting between warped history (0) and
/// freshly translated content (1).
struct SoftMask {
    int width = 0;
    int height = 0;
    std::vector<double> values;

    SoftMask() = default;
    SoftMask(int w, int h, double fill = 0.0)
        : width(w), height(h),
          values(static_cast<std::size_t>(w) * h, fill) {}

    double at(int x, int y) const {
        return values[static_cast<std::size_t>(y) * width + x];
    }
    double& at(int x, int y) {
        return values[static_cast<std::size_t>(y) * width + x];
    }
};

/// The sketch-disagreement estimator warps the previous sketch by the
/// flow (nearest-neighbour), marks pixels where it disagrees with the
/// current sketch, and dilates the disagreement set. ConstantOne ignores
/// its inputs and returns the all-one mask.
SoftMask predict_occlusion_mask(std::span<const Frame> prev_frames,
                                std::span<const SketchFrame> sketches,
                                const FlowField& flow,
                                const DecoderConfig& cfg);

} // namespace msv
