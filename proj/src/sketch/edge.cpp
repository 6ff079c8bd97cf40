#include <algorithm>
#include <cmath>
#include <vector>

#include "msv/sketch.hpp"

namespace msv {

namespace {

// Separable box blur with clamped borders.
std::vector<double> box_blur(const std::vector<double>& src, int w, int h,
                             int radius) {
    if (radius <= 0)
        return src;
    std::vector<double> tmp(src.size()), out(src.size());
    double norm = 1.0 / (2 * radius + 1);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double sum = 0.0;
            for (int k = -radius; k <= radius; ++k) {
                int xx = std::clamp(x + k, 0, w - 1);
                sum += src[static_cast<std::size_t>(y) * w + xx];
            }
            tmp[static_cast<std::size_t>(y) * w + x] = sum * norm;
        }
    }
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double sum = 0.0;
            for (int k = -radius; k <= radius; ++k) {
                int yy = std::clamp(y + k, 0, h - 1);
                sum += tmp[static_cast<std::size_t>(yy) * w + x];
            }
            out[static_cast<std::size_t>(y) * w + x] = sum * norm;
        }
    }
    return out;
}

// Sobel magnitude scaled back to sample units (/4 per axis).
std::vector<double> gradient_magnitude(const std::vector<double>& plane,
                                       int w, int h) {
    std::vector<double> mag(plane.size(), 0.0);
    auto p = [&](int x, int y) {
        return plane[static_cast<std::size_t>(std::clamp(y, 0, h - 1)) * w +
                     std::clamp(x, 0, w - 1)];
    };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double gx = (p(x + 1, y - 1) + 2 * p(x + 1, y) + p(x + 1, y + 1)) -
                        (p(x - 1, y - 1) + 2 * p(x - 1, y) + p(x - 1, y + 1));
            double gy = (p(x - 1, y + 1) + 2 * p(x, y + 1) + p(x + 1, y + 1)) -
                        (p(x - 1, y - 1) + 2 * p(x, y - 1) + p(x + 1, y - 1));
            mag[static_cast<std::size_t>(y) * w + x] =
                std::hypot(gx / 4.0, gy / 4.0);
        }
    }
    return mag;
}

SketchFrame hysteresis(const std::vector<double>& mag, int w, int h,
                       double low, double high) {
    SketchFrame out(w, h);
    std::vector<std::pair<int, int>> stack;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (mag[static_cast<std::size_t>(y) * w + x] >= high) {
                out.at(x, y) = kEdge;
                stack.emplace_back(x, y);
            }
    // Grow strong edges into 8-connected weak neighbours.
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                int nx = x + dx, ny = y + dy;
                if (nx < 0 || ny < 0 || nx >= w || ny >= h)
                    continue;
                if (out.at(nx, ny) == kEdge)
                    continue;
                if (mag[static_cast<std::size_t>(ny) * w + nx] >= low) {
                    out.at(nx, ny) = kEdge;
                    stack.emplace_back(nx, ny);
                }
            }
        }
    }
    return out;
}

} // namespace

SketchFrame extract_sketch(const Frame& frame,
                           const EdgeExtractorConfig& cfg) {
    if (cfg.low_threshold > cfg.high_threshold)
        throw ProtocolError("extract_sketch: low_threshold > high_threshold");
    int w = frame.width, h = frame.height;
    std::vector<double> plane(frame.pixel_count());
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            plane[static_cast<std::size_t>(y) * w + x] =
                luma(frame.at(x, y, 0), frame.at(x, y, 1), frame.at(x, y, 2));

    plane = box_blur(plane, w, h, cfg.blur_radius);
    std::vector<double> mag = gradient_magnitude(plane, w, h);

    if (cfg.op == EdgeExtractorConfig::Operator::TwoThresholdHysteresis)
        return hysteresis(mag, w, h, cfg.low_threshold, cfg.high_threshold);

    SketchFrame out(w, h);
    for (std::size_t i = 0; i < mag.size(); ++i)
        out.data[i] = mag[i] >= cfg.high_threshold ? kEdge : kBackground;
    return out;
}

} // namespace msv
