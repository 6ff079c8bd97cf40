#include "msv/translate.hpp"

#include <algorithm>
#include <cmath>

namespace msv {

FrameTranslator::FrameTranslator(const Frame& reference,
                                 const DecoderConfig& cfg)
    : cfg_(cfg), width_(reference.width), height_(reference.height),
      ref_features_(extract_features(reference, cfg.feature_scale)),
      ref_colors_(downsample_rgb(reference, cfg.feature_scale)),
      style_(feature_moments(ref_colors_)) {
    cfg_.validate();
}

Frame FrameTranslator::translate(const SketchFrame& sketch) const {
    if (sketch.width != width_ || sketch.height != height_)
        throw ShapeError("translate: sketch/reference dimensions differ");

    FeatureMap queries = extract_features(sketch, cfg_.feature_scale);
    AttentionMatrix attention =
        attention_correlation(queries, ref_features_);
    FeatureMap mixed = align_features(attention, ref_colors_, cfg_.alpha);
    FeatureMap draft = upsample_bilinear(mixed, width_, height_);
    FeatureMap styled = adain(draft, style_);

    // Edge overlay: darken a 1-px dilation of the sketch lines so the
    // structure stays visible regardless of style.
    Frame out(width_, height_);
    for (int y = 0; y < height_; ++y) {
        for (int x = 0; x < width_; ++x) {
            bool on_edge = false;
            for (int dy = -1; dy <= 1 && !on_edge; ++dy) {
                int yy = std::clamp(y + dy, 0, height_ - 1);
                for (int dx = -1; dx <= 1; ++dx) {
                    int xx = std::clamp(x + dx, 0, width_ - 1);
                    if (sketch.at(xx, yy) == kEdge) {
                        on_edge = true;
                        break;
                    }
                }
            }
            for (int c = 0; c < 3; ++c) {
                double v = styled.at(c, y, x);
                if (on_edge)
                    v *= 0.25;
                out.at(x, y, c) = static_cast<std::uint8_t>(
                    std::clamp(std::nearbyint(v), 0.0, 255.0));
            }
        }
    }
    return out;
}

Frame translate_frame(const SketchFrame& sketch, const Frame& reference,
                      const DecoderConfig& cfg) {
    return FrameTranslator(reference, cfg).translate(sketch);
}

} // namespace msv
