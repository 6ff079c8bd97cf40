#pragma once

// Independent reference computations for the derived test values. These
// stay naive on purpose: per-pixel loops and direct summation, sharing no
// code path with the implementations they check.

#include <cmath>
#include <vector>

#include "msv/foreground.hpp"
#include "msv/frame.hpp"
#include "msv/mask.hpp"
#include "msv/metrics.hpp"

namespace msv::test {

inline std::vector<int> mask_bits(const BinaryMask& m) {
    std::vector<int> bits;
    bits.reserve(m.pixel_count());
    for (int y = 0; y < m.height(); ++y)
        for (int x = 0; x < m.width(); ++x)
            bits.push_back(m.get(x, y) ? 1 : 0);
    return bits;
}

inline std::vector<int> or_oracle(const std::vector<int>& a,
                                  const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = (a[i] || b[i]) ? 1 : 0;
    return out;
}

inline std::vector<int> and_oracle(const std::vector<int>& a,
                                   const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = (a[i] && b[i]) ? 1 : 0;
    return out;
}

inline std::vector<int> setminus_oracle(const std::vector<int>& a,
                                        const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = (a[i] && !b[i]) ? 1 : 0;
    return out;
}

/// Temporal IoU by explicit pixel-set counting.
inline double iou_bruteforce(const InstanceTrack& track) {
    const auto& first = track.masks.front();
    long inter = 0, uni = 0;
    for (int y = 0; y < first.height(); ++y) {
        for (int x = 0; x < first.width(); ++x) {
            bool in_all = true, in_any = false;
            for (const auto& m : track.masks) {
                bool v = m.get(x, y);
                in_all = in_all && v;
                in_any = in_any || v;
            }
            inter += in_all ? 1 : 0;
            uni += in_any ? 1 : 0;
        }
    }
    return static_cast<double>(inter) / static_cast<double>(uni);
}

/// SSIM by direct per-window summation on the luma plane.
inline double ssim_bruteforce(const Frame& a, const Frame& b,
                              const SsimConfig& cfg = {}) {
    const int w = a.width, h = a.height, win = cfg.window;
    const double c1 =
        (cfg.k1 * cfg.dynamic_range) * (cfg.k1 * cfg.dynamic_range);
    const double c2 =
        (cfg.k2 * cfg.dynamic_range) * (cfg.k2 * cfg.dynamic_range);
    double total = 0.0;
    long windows = 0;
    for (int y0 = 0; y0 + win <= h; ++y0) {
        for (int x0 = 0; x0 + win <= w; ++x0) {
            double sx = 0, sy = 0;
            for (int y = y0; y < y0 + win; ++y) {
                for (int x = x0; x < x0 + win; ++x) {
                    sx += luma(a.at(x, y, 0), a.at(x, y, 1), a.at(x, y, 2));
                    sy += luma(b.at(x, y, 0), b.at(x, y, 1), b.at(x, y, 2));
                }
            }
            double n = double(win) * win;
            double mx = sx / n, my = sy / n;
            double vx = 0, vy = 0, cov = 0;
            for (int y = y0; y < y0 + win; ++y) {
                for (int x = x0; x < x0 + win; ++x) {
                    double dx =
                        luma(a.at(x, y, 0), a.at(x, y, 1), a.at(x, y, 2)) - mx;
                    double dy =
                        luma(b.at(x, y, 0), b.at(x, y, 1), b.at(x, y, 2)) - my;
                    vx += dx * dx;
                    vy += dy * dy;
                    cov += dx * dy;
                }
            }
            vx /= n;
            vy /= n;
            cov /= n;
            total += ((2 * mx * my + c1) * (2 * cov + c2)) /
                     ((mx * mx + my * my + c1) * (vx + vy + c2));
            ++windows;
        }
    }
    return total / static_cast<double>(windows);
}

} // namespace msv::test
