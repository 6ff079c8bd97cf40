#include "msv/corpus.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "msv/image_io.hpp"

namespace msv {

namespace fs = std::filesystem;

std::vector<Frame> load_video_frames(const fs::path& frames_dir) {
    if (!fs::is_directory(frames_dir))
        throw IoError("frame directory not found: " + frames_dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(frames_dir)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && name.starts_with("frame_") &&
            name.ends_with(".png"))
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<Frame> frames;
    frames.reserve(files.size());
    for (const auto& f : files)
        frames.push_back(load_frame(f));
    return frames;
}

namespace {

void check_mask_shape(const BinaryMask& m, int width, int height,
                      const fs::path& path) {
    if (m.width() != width || m.height() != height)
        throw ShapeError("mask dimensions differ from video: " +
                         path.string());
}

} // namespace

std::vector<InstanceTrack> load_tracks_from_dir(const fs::path& masks_dir,
                                                int frame_count, int width,
                                                int height) {
    std::vector<InstanceTrack> tracks;
    if (!fs::is_directory(masks_dir))
        return tracks; // a video without instances is legitimate
    std::vector<fs::path> track_dirs;
    for (const auto& entry : fs::directory_iterator(masks_dir))
        if (entry.is_directory() &&
            entry.path().filename().string().starts_with("track_"))
            track_dirs.push_back(entry.path());
    std::sort(track_dirs.begin(), track_dirs.end());

    for (const auto& dir : track_dirs) {
        InstanceTrack track;
        track.instance_id = dir.filename().string().substr(6);
        char name[32];
        for (int t = 1; t <= frame_count; ++t) {
            std::snprintf(name, sizeof(name), "frame_%04d.png", t);
            fs::path p = dir / name;
            if (fs::exists(p)) {
                BinaryMask m = load_mask(p);
                check_mask_shape(m, width, height, p);
                track.masks.push_back(std::move(m));
            } else {
                track.masks.emplace_back(width, height); // drop-out
            }
        }
        tracks.push_back(std::move(track));
    }
    return tracks;
}

std::vector<InstanceTrack> load_tracks_from_manifest(
    const fs::path& manifest_path, int frame_count, int width, int height) {
    std::ifstream in(manifest_path);
    if (!in)
        throw IoError("mask manifest not found: " + manifest_path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("mask manifest is not valid JSON (" +
                          manifest_path.string() + "): " + e.what());
    }
    if (!j.contains("tracks") || !j["tracks"].is_array())
        throw FormatError("mask manifest missing 'tracks' array: " +
                          manifest_path.string());

    fs::path base = manifest_path.parent_path();
    std::vector<InstanceTrack> tracks;
    for (const auto& jt : j["tracks"]) {
        InstanceTrack track;
        track.instance_id = jt.value("id", std::to_string(tracks.size() + 1));
        const auto& masks = jt.at("masks");
        if (static_cast<int>(masks.size()) != frame_count)
            throw FormatError("manifest track '" + track.instance_id +
                              "' lists " + std::to_string(masks.size()) +
                              " masks for a " + std::to_string(frame_count) +
                              "-frame video");
        for (const auto& jm : masks) {
            if (jm.is_null()) {
                track.masks.emplace_back(width, height);
                continue;
            }
            fs::path p = base / jm.get<std::string>();
            if (!fs::exists(p))
                throw IoError("mask file listed in manifest not found: " +
                              p.string());
            BinaryMask m = load_mask(p);
            check_mask_shape(m, width, height, p);
            track.masks.push_back(std::move(m));
        }
        tracks.push_back(std::move(track));
    }
    return tracks;
}

void write_decoded_frames(const fs::path& out_dir,
                          const std::vector<Frame>& frames) {
    fs::create_directories(out_dir);
    char name[32];
    for (std::size_t t = 1; t <= frames.size(); ++t) {
        std::snprintf(name, sizeof(name), "frame_%04zu.png", t);
        save_frame(out_dir / name, frames[t - 1]);
    }
}

} // namespace msv
