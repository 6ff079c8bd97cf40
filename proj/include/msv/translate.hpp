#pragma once

#include "msv/attention.hpp"
#include "msv/decoder_config.hpp"
#include "msv/features.hpp"
#include "msv/frame.hpp"

namespace msv {

/// Sketch-to-frame translation against a fixed reference image.
///
/// Deterministic stand-in for the learned translation network: sketch and
/// reference features are aligned by correlation attention, reference
/// colors are mixed accordingly, upsampled, re-styled to the reference's
/// global moments, and the sketch edges are drawn back on top. Caching
/// the reference-side features makes per-frame translation cheap.
class FrameTranslator {
public:
    FrameTranslator(const Frame& reference, const DecoderConfig& cfg);

    Frame translate(const SketchFrame& sketch) const;

private:
    DecoderConfig cfg_;
    int width_;
    int height_;
    FeatureMap ref_features_; // keys
    FeatureMap ref_colors_;   // values
    StyleVector style_;
};

/// One-shot form of the above.
Frame translate_frame(const SketchFrame& sketch, const Frame& reference,
                      const DecoderConfig& cfg);

} // namespace msv
