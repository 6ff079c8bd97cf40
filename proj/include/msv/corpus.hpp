#pragma once

#include <filesystem>
#include <vector>

#include "msv/foreground.hpp"
#include "msv/frame.hpp"

namespace msv {

/// Load all frame_*.png files of a directory in name order.
std::vector<Frame> load_video_frames(const std::filesystem::path& frames_dir);

/// Ingest instance masks from per-track directories
/// (masks_dir/track_<id>/frame_<t>.png). Frames without a mask file are
/// treated as segmentation drop-outs (empty masks).
std::vector<InstanceTrack> load_tracks_from_dir(
    const std::filesystem::path& masks_dir, int frame_count, int width,
    int height);

/// Ingest instance masks from a manifest:
///   {"tracks": [{"id": "1", "masks": ["path.png", null, ...]}]}
/// Paths are relative to the manifest's directory; null marks a drop-out.
/// A listed path that does not exist is an error naming that path.
std::vector<InstanceTrack> load_tracks_from_manifest(
    const std::filesystem::path& manifest_path, int frame_count, int width,
    int height);

void write_decoded_frames(const std::filesystem::path& out_dir,
                          const std::vector<Frame>& frames);

} // namespace msv
