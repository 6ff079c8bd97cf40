#pragma once

#include <cstdint>
#include <vector>

#include "msv/foreground.hpp"
#include "msv/frame.hpp"
#include "msv/mask.hpp"

namespace msv {

/// Classical edge operator standing in for a learned detector. Output is
/// always a binary {0,255} line drawing.
struct EdgeExtractorConfig {
    enum class Operator {
        GradientMagnitude,     // single threshold at high_threshold
        TwoThresholdHysteresis // weak edges kept when 8-connected to strong
    };
    Operator op = Operator::GradientMagnitude;
    std::uint8_t low_threshold = 50;
    std::uint8_t high_threshold = 100;
    int blur_radius = 1; // box pre-blur; 0 disables
};

/// Full sketch sequence, one binary sketch per frame.
struct SketchVideo {
    std::vector<SketchFrame> frames;
    std::uint8_t fps = 15;
};

/// What actually gets transmitted: per-frame foreground-masked sketches
/// plus side information (both keyframes and the reference frame).
struct MaskedSketchVideo {
    std::vector<SketchFrame> masked_frames; // ms_t, values {0,1,255}
    SketchFrame keyframe_first;             // s_1, values {0,255}
    SketchFrame keyframe_last;              // s_T
    Frame reference_frame;                  // x_1
    std::uint8_t fps = 15;

    int width() const { return keyframe_first.width; }
    int height() const { return keyframe_first.height; }
    int frame_count() const { return static_cast<int>(masked_frames.size()); }

    bool operator==(const MaskedSketchVideo&) const = default;
};

/// Extract a binary sketch from a color frame.
SketchFrame extract_sketch(const Frame& frame, const EdgeExtractorConfig& cfg);

/// Composite sketch with a static background: current foreground from
/// s_t, regions the frame-1 foreground has vacated from s_T, everything
/// else from s_1. The three regions partition the raster.
SketchFrame compose_static_background(const SketchFrame& s_t,
                                      const SketchFrame& s_1,
                                      const SketchFrame& s_T,
                                      const BinaryMask& m_t,
                                      const BinaryMask& m_1);

/// Restrict a sketch to its foreground, lifting in-mask non-edge pixels
/// to the sentinel value so the mask stays recoverable by sign.
SketchFrame mask_sketch(const SketchFrame& s_t, const BinaryMask& m_t);

/// Rebuild the composited sketch from a masked frame and the two
/// keyframes. first_mask is the sign mask of the first masked frame,
/// cached by the caller for the whole video. Output is binarized back
/// to {0,255} (samples < 128 collapse to 0).
SketchFrame reconstruct_sketch(const SketchFrame& ms_t,
                               const SketchFrame& s_1,
                               const SketchFrame& s_T,
                               const BinaryMask& first_mask);

struct EncoderConfig {
    EdgeExtractorConfig edge;
    double iou_threshold = 0.8;
    std::uint8_t fps = 15;
};

/// Full encode pipeline: sketches, foreground classification, per-frame
/// masking, plus the keyframe/reference side information.
MaskedSketchVideo encode_video(const std::vector<Frame>& frames,
                               const std::vector<InstanceTrack>& tracks,
                               const EncoderConfig& cfg);

} // namespace msv
