#include "msv/features.hpp"

#include <algorithm>
#include <cmath>

#include "msv/error.hpp"

namespace msv {

namespace {

// Box means over feature_scale x feature_scale cells; cells at the right
// and bottom edges may be partial.
template <typename SampleFn>
FeatureMap downsample_plane(int width, int height, int scale, int channels,
                            SampleFn sample) {
    int fw = (width + scale - 1) / scale;
    int fh = (height + scale - 1) / scale;
    FeatureMap out(channels, fh, fw);
    for (int c = 0; c < channels; ++c) {
        for (int fy = 0; fy < fh; ++fy) {
            int y0 = fy * scale, y1 = std::min(y0 + scale, height);
            for (int fx = 0; fx < fw; ++fx) {
                int x0 = fx * scale, x1 = std::min(x0 + scale, width);
                double sum = 0.0;
                for (int y = y0; y < y1; ++y)
                    for (int x = x0; x < x1; ++x)
                        sum += sample(x, y, c);
                out.at(c, fy, fx) =
                    sum / (static_cast<double>(y1 - y0) * (x1 - x0));
            }
        }
    }
    return out;
}

double plane_at(const FeatureMap& m, int c, int x, int y) {
    return m.at(c, std::clamp(y, 0, m.height - 1),
                std::clamp(x, 0, m.width - 1));
}

FeatureMap box_blur_channel(const FeatureMap& src, int radius) {
    FeatureMap out(1, src.height, src.width);
    double norm = 1.0 / ((2 * radius + 1) * (2 * radius + 1));
    for (int y = 0; y < src.height; ++y) {
        for (int x = 0; x < src.width; ++x) {
            double sum = 0.0;
            for (int dy = -radius; dy <= radius; ++dy)
                for (int dx = -radius; dx <= radius; ++dx)
                    sum += plane_at(src, 0, x + dx, y + dy);
            out.at(0, y, x) = sum * norm;
        }
    }
    return out;
}

FeatureMap filter_bank(const FeatureMap& plane) {
    const int h = plane.height, w = plane.width;
    FeatureMap out(5, h, w);
    FeatureMap blur1 = box_blur_channel(plane, 1);
    FeatureMap blur2 = box_blur_channel(plane, 2);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            out.at(0, y, x) = plane.at(0, y, x);
            out.at(1, y, x) =
                0.5 * (plane_at(plane, 0, x + 1, y) -
                       plane_at(plane, 0, x - 1, y));
            out.at(2, y, x) =
                0.5 * (plane_at(plane, 0, x, y + 1) -
                       plane_at(plane, 0, x, y - 1));
            out.at(3, y, x) = blur1.at(0, y, x);
            out.at(4, y, x) = blur2.at(0, y, x);
        }
    }
    return out;
}

} // namespace

FeatureMap extract_features(const Frame& image, int feature_scale) {
    FeatureMap plane = downsample_plane(
        image.width, image.height, feature_scale, 1,
        [&](int x, int y, int) {
            return luma(image.at(x, y, 0), image.at(x, y, 1),
                        image.at(x, y, 2));
        });
    return filter_bank(plane);
}

FeatureMap extract_features(const SketchFrame& image, int feature_scale) {
    FeatureMap plane = downsample_plane(
        image.width, image.height, feature_scale, 1,
        [&](int x, int y, int) { return double(image.at(x, y)); });
    return filter_bank(plane);
}

FeatureMap downsample_rgb(const Frame& image, int feature_scale) {
    return downsample_plane(image.width, image.height, feature_scale, 3,
                            [&](int x, int y, int c) {
                                return double(image.at(x, y, c));
                            });
}

StyleVector feature_moments(const FeatureMap& features) {
    StyleVector style;
    style.mean.resize(features.channels);
    style.stddev.resize(features.channels);
    const int n = features.positions();
    for (int c = 0; c < features.channels; ++c) {
        double sum = 0.0;
        for (int p = 0; p < n; ++p)
            sum += features.at_pos(c, p);
        double mean = sum / n;
        double var = 0.0;
        for (int p = 0; p < n; ++p) {
            double d = features.at_pos(c, p) - mean;
            var += d * d;
        }
        style.mean[c] = mean;
        style.stddev[c] = std::sqrt(var / n);
    }
    return style;
}

FeatureMap adain(const FeatureMap& content, const StyleVector& style) {
    if (static_cast<int>(style.mean.size()) != content.channels ||
        static_cast<int>(style.stddev.size()) != content.channels)
        throw ShapeError("adain: channel counts differ");
    StyleVector own = feature_moments(content);
    FeatureMap out(content.channels, content.height, content.width);
    const int n = content.positions();
    for (int c = 0; c < content.channels; ++c) {
        double sigma = own.stddev[c];
        if (sigma < 1e-12) {
            // Flat channel: nothing to re-scale, take the style mean.
            for (int p = 0; p < n; ++p)
                out.at_pos(c, p) = style.mean[c];
            continue;
        }
        double gain = style.stddev[c] / sigma;
        for (int p = 0; p < n; ++p)
            out.at_pos(c, p) =
                (content.at_pos(c, p) - own.mean[c]) * gain + style.mean[c];
    }
    return out;
}

FeatureMap upsample_bilinear(const FeatureMap& features, int out_width,
                             int out_height) {
    FeatureMap out(features.channels, out_height, out_width);
    double sx = static_cast<double>(features.width) / out_width;
    double sy = static_cast<double>(features.height) / out_height;
    for (int c = 0; c < features.channels; ++c) {
        for (int y = 0; y < out_height; ++y) {
            double fy = (y + 0.5) * sy - 0.5;
            double fy0 = std::floor(fy);
            int y0 = static_cast<int>(fy0);
            double ay = fy - fy0;
            for (int x = 0; x < out_width; ++x) {
                double fx = (x + 0.5) * sx - 0.5;
                double fx0 = std::floor(fx);
                int x0 = static_cast<int>(fx0);
                double ax = fx - fx0;
                out.at(c, y, x) =
                    (1 - ax) * (1 - ay) * plane_at(features, c, x0, y0) +
                    ax * (1 - ay) * plane_at(features, c, x0 + 1, y0) +
                    (1 - ax) * ay * plane_at(features, c, x0, y0 + 1) +
                    ax * ay * plane_at(features, c, x0 + 1, y0 + 1);
            }
        }
    }
    return out;
}

} // namespace msv
