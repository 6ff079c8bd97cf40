#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msv/frame.hpp"
#include "msv/sketch.hpp"

namespace msv {

inline constexpr double kPsnrCap = 99.0;

/// Peak signal-to-noise ratio in dB over all three channels,
/// 10*log10(255^2 / MSE); identical frames report the cap value.
double psnr(const Frame& a, const Frame& b);

struct SsimConfig {
    int window = 8; // square sliding window, stride 1
    double k1 = 0.01;
    double k2 = 0.03;
    double dynamic_range = 255.0;
};

/// Mean local SSIM over sliding windows on the luma plane.
double ssim(const Frame& a, const Frame& b, const SsimConfig& cfg = {});

struct QualityReport {
    std::vector<double> frame_psnr;
    std::vector<double> frame_ssim;
    double mean_psnr = 0.0;
    double mean_ssim = 0.0;
    int frame_count = 0;
    // Metrics that need pretrained perceptual networks; reported as
    // unavailable rather than approximated.
    std::optional<double> kid;
    std::optional<double> lpips;
};

QualityReport evaluate_quality(const std::vector<Frame>& reference,
                               const std::vector<Frame>& decoded);

struct SizeReport {
    std::size_t raw_size = 0;    // frames as lossless image payloads
    std::size_t sketch_size = 0; // full sketches via the container scheme
    std::size_t masked_size = 0; // the actual masked container
    double ratio_masked_sketch = 0.0;
    double ratio_masked_raw = 0.0;
};

/// Serialize all three representations of the same video with the shared
/// lossless scheme and account the bytes.
SizeReport size_report(const std::vector<Frame>& raw, const SketchVideo& sketch,
                       const MaskedSketchVideo& masked);

std::string quality_report_json(const QualityReport& report);
std::string size_report_json(const SizeReport& report);

} // namespace msv
