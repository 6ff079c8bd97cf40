#include "msv/flow.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace msv {

namespace {

int clamp_coord(int v, int hi) { return std::clamp(v, 0, hi); }

struct Candidate {
    long cost;
    int l1;
    int dv;
    int du;
    bool better_than(const Candidate& o) const {
        if (cost != o.cost)
            return cost < o.cost;
        if (l1 != o.l1)
            return l1 < o.l1;
        if (std::abs(dv) != std::abs(o.dv))
            return std::abs(dv) < std::abs(o.dv);
        if (dv != o.dv)
            return dv < o.dv;
        return du < o.du;
    }
};

FlowField block_match(const SketchFrame& prev, const SketchFrame& cur,
                      const DecoderConfig& cfg) {
    const int w = cur.width, h = cur.height;
    const int bs = cfg.block_size, r = cfg.search_radius;
    FlowField flow(w, h);
    for (int by = 0; by < h; by += bs) {
        for (int bx = 0; bx < w; bx += bs) {
            int x1 = std::min(bx + bs, w);
            int y1 = std::min(by + bs, h);
            Candidate best{std::numeric_limits<long>::max(), 0, 0, 0};
            for (int dv = -r; dv <= r; ++dv) {
                for (int du = -r; du <= r; ++du) {
                    long cost = 0;
                    for (int y = by; y < y1; ++y) {
                        int sy = clamp_coord(y + dv, h - 1);
                        for (int x = bx; x < x1; ++x) {
                            int sx = clamp_coord(x + du, w - 1);
                            cost += std::abs(int(cur.at(x, y)) -
                                             int(prev.at(sx, sy)));
                        }
                    }
                    Candidate cand{cost, std::abs(du) + std::abs(dv), dv, du};
                    if (cand.better_than(best))
                        best = cand;
                }
            }
            for (int y = by; y < y1; ++y) {
                for (int x = bx; x < x1; ++x) {
                    flow.dx[flow.index(x, y)] = best.du;
                    flow.dy[flow.index(x, y)] = best.dv;
                }
            }
        }
    }
    return flow;
}

} // namespace

FlowField estimate_flow(std::span<const Frame> prev_frames,
                        std::span<const SketchFrame> sketches,
                        const DecoderConfig& cfg) {
    if (prev_frames.empty())
        throw ProtocolError("estimate_flow: empty frame history");
    if (sketches.empty())
        throw ProtocolError("estimate_flow: empty sketch window");
    const SketchFrame& cur = sketches.back();
    for (const auto& f : prev_frames)
        if (f.width != cur.width || f.height != cur.height)
            throw ShapeError("estimate_flow: history dimensions differ");
    for (const auto& s : sketches)
        require_same_shape(s, cur, "estimate_flow");

    if (cfg.flow == FlowEstimator::Zero || sketches.size() < 2)
        return FlowField(cur.width, cur.height);
    return block_match(sketches[sketches.size() - 2], cur, cfg);
}

Frame warp(const Frame& frame, const FlowField& flow, BorderPolicy border) {
    if (frame.width != flow.width || frame.height != flow.height)
        throw ShapeError("warp: flow dimensions differ");
    const int w = frame.width, h = frame.height;
    Frame out(w, h);

    auto sample = [&](int x, int y, int c) -> double {
        if (x < 0 || y < 0 || x >= w || y >= h) {
            if (border == BorderPolicy::Zero)
                return 0.0;
            x = clamp_coord(x, w - 1);
            y = clamp_coord(y, h - 1);
        }
        return frame.at(x, y, c);
    };

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double sx = x + flow.dx[flow.index(x, y)];
            double sy = y + flow.dy[flow.index(x, y)];
            double fx0 = std::floor(sx), fy0 = std::floor(sy);
            int x0 = static_cast<int>(fx0), y0 = static_cast<int>(fy0);
            double ax = sx - fx0, ay = sy - fy0;
            for (int c = 0; c < 3; ++c) {
                double v = (1 - ax) * (1 - ay) * sample(x0, y0, c) +
                           ax * (1 - ay) * sample(x0 + 1, y0, c) +
                           (1 - ax) * ay * sample(x0, y0 + 1, c) +
                           ax * ay * sample(x0 + 1, y0 + 1, c);
                out.at(x, y, c) = static_cast<std::uint8_t>(
                    std::clamp(std::nearbyint(v), 0.0, 255.0));
            }
        }
    }
    return out;
}

} // namespace msv
