#include "msv/occlusion.hpp"

#include <algorithm>
#include <cmath>

namespace msv {

SoftMask predict_occlusion_mask(std::span<const Frame> prev_frames,
                                std::span<const SketchFrame> sketches,
                                const FlowField& flow,
                                const DecoderConfig& cfg) {
    if (sketches.empty())
        throw ProtocolError("predict_occlusion_mask: empty sketch window");
    const SketchFrame& cur = sketches.back();
    const int w = cur.width, h = cur.height;
    if (flow.width != w || flow.height != h)
        throw ShapeError("predict_occlusion_mask: flow dimensions differ");
    for (const auto& f : prev_frames)
        if (f.width != w || f.height != h)
            throw ShapeError("predict_occlusion_mask: history dimensions differ");

    if (cfg.occlusion == OcclusionEstimator::ConstantOne)
        return SoftMask(w, h, 1.0);

    const SketchFrame& prev =
        sketches.size() >= 2 ? sketches[sketches.size() - 2] : cur;
    require_same_shape(prev, cur, "predict_occlusion_mask");

    // Disagreement between the flow-compensated previous sketch and the
    // current one.
    SoftMask disagree(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int sx = std::clamp(
                static_cast<int>(std::nearbyint(x + flow.dx[flow.index(x, y)])),
                0, w - 1);
            int sy = std::clamp(
                static_cast<int>(std::nearbyint(y + flow.dy[flow.index(x, y)])),
                0, h - 1);
            if (prev.at(sx, sy) != cur.at(x, y))
                disagree.at(x, y) = 1.0;
        }
    }

    int r = cfg.dilation_radius;
    if (r == 0)
        return disagree;
    SoftMask out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            bool hit = false;
            for (int dy = -r; dy <= r && !hit; ++dy) {
                int yy = y + dy;
                if (yy < 0 || yy >= h)
                    continue;
                for (int dx = -r; dx <= r; ++dx) {
                    int xx = x + dx;
                    if (xx < 0 || xx >= w)
                        continue;
                    if (disagree.at(xx, yy) > 0.0) {
                        hit = true;
                        break;
                    }
                }
            }
            if (hit)
                out.at(x, y) = 1.0;
        }
    }
    return out;
}

} // namespace msv
