#include "msv/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "msv/image_io.hpp"

namespace msv {

namespace {

// splitmix64: tiny, stable across platforms, good enough for textures.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    /// Uniform in [lo, hi] (inclusive).
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() %
                                     static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

struct Shape {
    bool ellipse;
    int half_w, half_h;
    double x0, y0;   // center at t=1
    double vx, vy;   // px per frame; 0 for fixtures
    std::uint8_t color[3];

    bool contains(double px, double py, double cx, double cy) const {
        double dx = px - cx, dy = py - cy;
        if (ellipse)
            return (dx * dx) / (double(half_w) * half_w) +
                       (dy * dy) / (double(half_h) * half_h) <=
                   1.0;
        return std::abs(dx) <= half_w && std::abs(dy) <= half_h;
    }
};

// Bounce the center off the walls so shapes never leave the frame.
std::pair<double, double> shape_center(const Shape& s, int t, int w, int h) {
    auto reflect = [](double v, double lo, double hi) {
        double span = hi - lo;
        if (span <= 0)
            return lo;
        double p = std::fmod(v - lo, 2 * span);
        if (p < 0)
            p += 2 * span;
        return p < span ? lo + p : hi - (p - span);
    };
    double cx = reflect(s.x0 + s.vx * (t - 1), s.half_w, w - 1.0 - s.half_w);
    double cy = reflect(s.y0 + s.vy * (t - 1), s.half_h, h - 1.0 - s.half_h);
    return {cx, cy};
}

Frame make_background(Rng& rng, int w, int h) {
    // High-contrast checkerboard texture: every cell border clears the
    // edge threshold, so the static background carries plenty of sketch
    // content for the masking step to drop.
    constexpr int kCell = 16;
    int cols = (w + kCell - 1) / kCell;
    int rows = (h + kCell - 1) / kCell;
    std::vector<std::array<std::uint8_t, 3>> cells(
        static_cast<std::size_t>(cols) * rows);
    for (int cy = 0; cy < rows; ++cy) {
        for (int cx = 0; cx < cols; ++cx) {
            bool bright = (cx + cy) % 2 == 0;
            auto& c = cells[static_cast<std::size_t>(cy) * cols + cx];
            for (int k = 0; k < 3; ++k)
                c[k] = static_cast<std::uint8_t>(
                    bright ? rng.range(210, 240) : rng.range(10, 40));
        }
    }
    Frame bg(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const auto& c =
                cells[static_cast<std::size_t>(y / kCell) * cols + x / kCell];
            for (int k = 0; k < 3; ++k)
                bg.at(x, y, k) = c[k];
        }
    }
    return bg;
}

Shape make_shape(Rng& rng, int w, int h, bool moving) {
    Shape s;
    s.ellipse = rng.range(0, 1) == 1;
    s.half_w = rng.range(5, 12);
    s.half_h = rng.range(5, 12);
    s.x0 = rng.range(s.half_w, w - 1 - s.half_w);
    s.y0 = rng.range(s.half_h, h - 1 - s.half_h);
    if (moving) {
        do {
            s.vx = rng.range(-4, 4);
            s.vy = rng.range(-3, 3);
        } while (s.vx == 0 && s.vy == 0);
    } else {
        s.vx = s.vy = 0;
    }
    // Mid-band colors contrast with both checker tones.
    s.color[0] = static_cast<std::uint8_t>(rng.range(90, 165));
    s.color[1] = static_cast<std::uint8_t>(rng.range(90, 165));
    s.color[2] = static_cast<std::uint8_t>(rng.range(90, 165));
    return s;
}

} // namespace

SynthVideo generate_video(const SynthConfig& cfg, int video_index) {
    Rng rng(cfg.seed * 0x100000001B3ull + static_cast<std::uint64_t>(video_index));
    const int w = cfg.width, h = cfg.height, T = cfg.frame_count;

    Frame background = make_background(rng, w, h);
    std::vector<Shape> shapes;
    for (int i = 0; i < cfg.moving_shapes; ++i)
        shapes.push_back(make_shape(rng, w, h, true));
    for (int i = 0; i < cfg.static_shapes; ++i)
        shapes.push_back(make_shape(rng, w, h, false));

    SynthVideo video;
    video.tracks.resize(shapes.size());
    for (std::size_t i = 0; i < shapes.size(); ++i)
        video.tracks[i].instance_id = std::to_string(i + 1);

    for (int t = 1; t <= T; ++t) {
        Frame frame = background;
        for (std::size_t i = 0; i < shapes.size(); ++i) {
            const Shape& s = shapes[i];
            auto [cx, cy] = shape_center(s, t, w, h);
            BinaryMask mask(w, h);
            int x0 = std::max(0, static_cast<int>(cx) - s.half_w - 1);
            int x1 = std::min(w - 1, static_cast<int>(cx) + s.half_w + 1);
            int y0 = std::max(0, static_cast<int>(cy) - s.half_h - 1);
            int y1 = std::min(h - 1, static_cast<int>(cy) + s.half_h + 1);
            for (int y = y0; y <= y1; ++y) {
                for (int x = x0; x <= x1; ++x) {
                    if (!s.contains(x, y, cx, cy))
                        continue;
                    mask.set(x, y, true);
                    for (int k = 0; k < 3; ++k)
                        frame.at(x, y, k) = s.color[k];
                }
            }
            video.tracks[i].masks.push_back(std::move(mask));
        }
        video.frames.push_back(std::move(frame));
    }
    return video;
}

void write_corpus(const std::filesystem::path& dir, const SynthConfig& cfg) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    for (int k = 1; k <= cfg.video_count; ++k) {
        SynthVideo video = generate_video(cfg, k);
        fs::path video_dir = dir / ("video_" + std::to_string(k));
        fs::path frames_dir = video_dir / "frames";
        fs::create_directories(frames_dir);
        char name[32];
        for (int t = 1; t <= cfg.frame_count; ++t) {
            std::snprintf(name, sizeof(name), "frame_%04d.png", t);
            save_frame(frames_dir / name, video.frames[t - 1]);
        }
        for (const auto& track : video.tracks) {
            fs::path track_dir =
                video_dir / "masks" / ("track_" + track.instance_id);
            fs::create_directories(track_dir);
            for (int t = 1; t <= cfg.frame_count; ++t) {
                std::snprintf(name, sizeof(name), "frame_%04d.png", t);
                save_mask(track_dir / name, track.masks[t - 1]);
            }
        }
    }
}

} // namespace msv
