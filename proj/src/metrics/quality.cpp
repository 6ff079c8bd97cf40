#include "msv/metrics.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace msv {

double psnr(const Frame& a, const Frame& b) {
    require_same_shape(a, b, "psnr");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        double d = double(a.data[i]) - double(b.data[i]);
        sum += d * d;
    }
    double mse = sum / static_cast<double>(a.data.size());
    if (mse == 0.0)
        return kPsnrCap;
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const Frame& a, const Frame& b, const SsimConfig& cfg) {
    require_same_shape(a, b, "ssim");
    const int w = a.width, h = a.height, win = cfg.window;
    if (w < win || h < win)
        throw ShapeError("ssim: frame smaller than the window");

    // Luma planes plus integral images of x, y, x^2, y^2 and x*y, so each
    // window's moments come from a handful of corner lookups.
    std::size_t n = a.pixel_count();
    std::vector<double> lx(n), ly(n);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::size_t i = static_cast<std::size_t>(y) * w + x;
            lx[i] = luma(a.at(x, y, 0), a.at(x, y, 1), a.at(x, y, 2));
            ly[i] = luma(b.at(x, y, 0), b.at(x, y, 1), b.at(x, y, 2));
        }
    }

    const int iw = w + 1;
    auto make_integral = [&](auto value) {
        std::vector<double> s(static_cast<std::size_t>(iw) * (h + 1), 0.0);
        for (int y = 0; y < h; ++y) {
            double row = 0.0;
            for (int x = 0; x < w; ++x) {
                row += value(static_cast<std::size_t>(y) * w + x);
                s[static_cast<std::size_t>(y + 1) * iw + x + 1] =
                    s[static_cast<std::size_t>(y) * iw + x + 1] + row;
            }
        }
        return s;
    };
    auto sum_x = make_integral([&](std::size_t i) { return lx[i]; });
    auto sum_y = make_integral([&](std::size_t i) { return ly[i]; });
    auto sum_xx = make_integral([&](std::size_t i) { return lx[i] * lx[i]; });
    auto sum_yy = make_integral([&](std::size_t i) { return ly[i] * ly[i]; });
    auto sum_xy = make_integral([&](std::size_t i) { return lx[i] * ly[i]; });

    auto window_sum = [&](const std::vector<double>& s, int x0, int y0) {
        return s[static_cast<std::size_t>(y0 + win) * iw + x0 + win] -
               s[static_cast<std::size_t>(y0) * iw + x0 + win] -
               s[static_cast<std::size_t>(y0 + win) * iw + x0] +
               s[static_cast<std::size_t>(y0) * iw + x0];
    };

    const double c1 = (cfg.k1 * cfg.dynamic_range) * (cfg.k1 * cfg.dynamic_range);
    const double c2 = (cfg.k2 * cfg.dynamic_range) * (cfg.k2 * cfg.dynamic_range);
    const double inv_n = 1.0 / (win * win);

    double total = 0.0;
    std::size_t windows = 0;
    for (int y0 = 0; y0 + win <= h; ++y0) {
        for (int x0 = 0; x0 + win <= w; ++x0) {
            double mx = window_sum(sum_x, x0, y0) * inv_n;
            double my = window_sum(sum_y, x0, y0) * inv_n;
            double vx = window_sum(sum_xx, x0, y0) * inv_n - mx * mx;
            double vy = window_sum(sum_yy, x0, y0) * inv_n - my * my;
            double cov = window_sum(sum_xy, x0, y0) * inv_n - mx * my;
            double value = ((2 * mx * my + c1) * (2 * cov + c2)) /
                           ((mx * mx + my * my + c1) * (vx + vy + c2));
            total += value;
            ++windows;
        }
    }
    return total / static_cast<double>(windows);
}

QualityReport evaluate_quality(const std::vector<Frame>& reference,
                               const std::vector<Frame>& decoded) {
    if (reference.size() != decoded.size())
        throw ShapeError("evaluate_quality: frame counts differ");
    QualityReport report;
    report.frame_count = static_cast<int>(reference.size());
    double psnr_sum = 0.0, ssim_sum = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        double p = psnr(reference[i], decoded[i]);
        double s = ssim(reference[i], decoded[i]);
        report.frame_psnr.push_back(p);
        report.frame_ssim.push_back(s);
        psnr_sum += p;
        ssim_sum += s;
    }
    if (!reference.empty()) {
        report.mean_psnr = psnr_sum / static_cast<double>(reference.size());
        report.mean_ssim = ssim_sum / static_cast<double>(reference.size());
    }
    return report;
}

std::string quality_report_json(const QualityReport& report) {
    nlohmann::json j;
    j["frame_count"] = report.frame_count;
    j["psnr"] = report.frame_psnr;
    j["ssim"] = report.frame_ssim;
    j["psnr_mean"] = report.mean_psnr;
    j["ssim_mean"] = report.mean_ssim;
    j["kid"] = report.kid ? nlohmann::json(*report.kid)
                          : nlohmann::json("unavailable");
    j["lpips"] = report.lpips ? nlohmann::json(*report.lpips)
                              : nlohmann::json("unavailable");
    return j.dump(2);
}

} // namespace msv
