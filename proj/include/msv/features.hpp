#pragma once

#include <vector>

#include "msv/frame.hpp"

namespace msv {

/// Dense real-valued feature grid, channel-major: values[c][y][x].
struct FeatureMap {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> values;

    FeatureMap() = default;
    FeatureMap(int c, int h, int w)
        : channels(c), height(h), width(w),
          values(static_cast<std::size_t>(c) * h * w, 0.0) {}

    int positions() const { return height * width; }
    double at(int c, int y, int x) const {
        return values[(static_cast<std::size_t>(c) * height + y) * width + x];
    }
    double& at(int c, int y, int x) {
        return values[(static_cast<std::size_t>(c) * height + y) * width + x];
    }
    /// Channel value at flattened row-major position p.
    double at_pos(int c, int p) const {
        return values[static_cast<std::size_t>(c) * height * width + p];
    }
    double& at_pos(int c, int p) {
        return values[static_cast<std::size_t>(c) * height * width + p];
    }
};

/// Per-channel first and second moments of a feature map.
struct StyleVector {
    std::vector<double> mean;
    std::vector<double> stddev; // population
};

// Fixed 5-channel filter bank standing in for the learned extractors:
// intensity, horizontal/vertical gradient, and two blur scales, computed
// on the luma plane box-downsampled by feature_scale.
FeatureMap extract_features(const Frame& image, int feature_scale);
FeatureMap extract_features(const SketchFrame& image, int feature_scale);

/// Reference colors at feature resolution (3 channels, box means).
FeatureMap downsample_rgb(const Frame& image, int feature_scale);

StyleVector feature_moments(const FeatureMap& features);

/// Re-normalize each content channel so its moments match the style's.
/// Channels with zero variance collapse to the style mean.
FeatureMap adain(const FeatureMap& content, const StyleVector& style);

/// Bilinear resize to the given resolution (half-pixel centers, clamped).
FeatureMap upsample_bilinear(const FeatureMap& features, int out_width,
                             int out_height);

} // namespace msv
