#include "msv/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "msv/container.hpp"
#include "msv/corpus.hpp"
#include "msv/decoder.hpp"
#include "msv/image_io.hpp"
#include "msv/metrics.hpp"

namespace msv::cli {

namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write report: " + path.string());
    out << text << '\n';
    if (!out)
        throw IoError("write failure: " + path.string());
}

std::vector<Frame> load_frames_checked(const fs::path& dir) {
    std::vector<Frame> frames = load_video_frames(dir);
    if (frames.empty())
        throw IoError("no frame_*.png files in " + dir.string());
    return frames;
}

} // namespace

void cmd_synth(const fs::path& out_dir, const SynthConfig& cfg) {
    write_corpus(out_dir, cfg);
    std::cout << "synth: wrote " << cfg.video_count << " videos ("
              << cfg.frame_count << " frames, " << cfg.width << "x"
              << cfg.height << ") to " << out_dir.string() << '\n';
}

std::size_t cmd_encode(const fs::path& video_dir,
                       const std::optional<fs::path>& manifest,
                       const fs::path& out_file, const EncoderConfig& cfg) {
    std::vector<Frame> frames = load_frames_checked(video_dir / "frames");
    int w = frames.front().width, h = frames.front().height;
    int T = static_cast<int>(frames.size());

    std::vector<InstanceTrack> tracks =
        manifest ? load_tracks_from_manifest(*manifest, T, w, h)
                 : load_tracks_from_dir(video_dir / "masks", T, w, h);

    MaskedSketchVideo video = encode_video(frames, tracks, cfg);
    write_container(out_file, video);
    std::size_t size = fs::file_size(out_file);
    std::cout << "encode: " << out_file.string() << " (" << size
              << " bytes, " << T << " frames)\n";
    return size;
}

void cmd_decode(const fs::path& container_file, const fs::path& out_dir,
                const DecoderConfig& cfg) {
    MaskedSketchVideo video = read_container(container_file);
    std::vector<Frame> frames = decode_video(video, cfg);
    write_decoded_frames(out_dir, frames);
    std::cout << "decode: wrote " << frames.size() << " frames to "
              << out_dir.string() << '\n';
}

double cmd_evaluate(const fs::path& original_dir, const fs::path& decoded_dir,
                    const fs::path& report_file) {
    std::vector<Frame> original = load_frames_checked(original_dir);
    std::vector<Frame> decoded = load_frames_checked(decoded_dir);
    if (original.size() != decoded.size())
        throw ShapeError("evaluate: frame count mismatch (" +
                         std::to_string(original.size()) + " vs " +
                         std::to_string(decoded.size()) + ")");
    QualityReport report = evaluate_quality(original, decoded);
    write_text(report_file, quality_report_json(report));
    std::cout << "evaluate: psnr_mean=" << report.mean_psnr
              << " ssim_mean=" << report.mean_ssim << " -> "
              << report_file.string() << '\n';
    return report.mean_ssim;
}

void cmd_report(const fs::path& corpus_dir, const fs::path& report_file,
                const EncoderConfig& encoder_cfg,
                const DecoderConfig& decoder_cfg) {
    std::vector<fs::path> video_dirs;
    if (!fs::is_directory(corpus_dir))
        throw IoError("corpus directory not found: " + corpus_dir.string());
    for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_directory() &&
            entry.path().filename().string().starts_with("video_"))
            video_dirs.push_back(entry.path());
    std::sort(video_dirs.begin(), video_dirs.end());
    if (video_dirs.empty())
        throw IoError("no video_* directories in " + corpus_dir.string());

    nlohmann::json j;
    j["videos"] = nlohmann::json::array();
    double psnr_sum = 0.0, ssim_sum = 0.0;
    std::size_t raw_total = 0, sketch_total = 0, masked_total = 0;

    for (const auto& dir : video_dirs) {
        std::vector<Frame> frames = load_frames_checked(dir / "frames");
        int w = frames.front().width, h = frames.front().height;
        int T = static_cast<int>(frames.size());
        std::vector<InstanceTrack> tracks =
            load_tracks_from_dir(dir / "masks", T, w, h);

        MaskedSketchVideo masked = encode_video(frames, tracks, encoder_cfg);
        SketchVideo sketch;
        sketch.fps = encoder_cfg.fps;
        for (const auto& f : frames)
            sketch.frames.push_back(extract_sketch(f, encoder_cfg.edge));

        SizeReport sizes = size_report(frames, sketch, masked);
        QualityReport quality =
            evaluate_quality(frames, decode_video(masked, decoder_cfg));

        nlohmann::json jv;
        jv["name"] = dir.filename().string();
        jv["sizes"] = nlohmann::json::parse(size_report_json(sizes));
        jv["quality"] = nlohmann::json::parse(quality_report_json(quality));
        j["videos"].push_back(jv);

        psnr_sum += quality.mean_psnr;
        ssim_sum += quality.mean_ssim;
        raw_total += sizes.raw_size;
        sketch_total += sizes.sketch_size;
        masked_total += sizes.masked_size;
    }

    double n = static_cast<double>(video_dirs.size());
    j["corpus"] = {
        {"video_count", video_dirs.size()},
        {"psnr_mean", psnr_sum / n},
        {"ssim_mean", ssim_sum / n},
        {"raw_bytes_total", raw_total},
        {"sketch_bytes_total", sketch_total},
        {"masked_bytes_total", masked_total},
    };
    write_text(report_file, j.dump(2));
    std::cout << "report: " << video_dirs.size() << " videos -> "
              << report_file.string() << '\n';
}

} // namespace msv::cli
