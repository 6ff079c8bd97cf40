#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "msv/foreground.hpp"
#include "msv/frame.hpp"

namespace msv {

/// Seeded synthetic surveillance stand-in: a static textured background
/// with moving shapes (foreground) and optional static fixtures
/// (background instances), plus exact per-shape masks.
struct SynthConfig {
    std::uint64_t seed = 7;
    int video_count = 8;
    int frame_count = 16;
    int width = 256;
    int height = 128;
    int moving_shapes = 2;
    int static_shapes = 1;
    std::uint8_t fps = 15;
};

struct SynthVideo {
    std::vector<Frame> frames;
    std::vector<InstanceTrack> tracks; // exact occupancy ground truth
};

/// Deterministic in-memory generation of a single video. The same seed
/// and index always produce the same pixels.
SynthVideo generate_video(const SynthConfig& cfg, int video_index);

/// Materialize the whole corpus:
///   <dir>/video_<k>/frames/frame_<t>.png
///   <dir>/video_<k>/masks/track_<id>/frame_<t>.png
void write_corpus(const std::filesystem::path& dir, const SynthConfig& cfg);

} // namespace msv
