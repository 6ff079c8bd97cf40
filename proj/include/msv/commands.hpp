#pragma once

#include <filesystem>
#include <optional>

#include "msv/decoder_config.hpp"
#include "msv/sketch.hpp"
#include "msv/synth.hpp"

namespace msv::cli {

/// Backing functions of the CLI subcommands. They throw msv errors on
/// failure; the binary maps exceptions onto exit codes. Kept out of the
/// executable so tests and the acceptance suite drive the exact same
/// code paths.

void cmd_synth(const std::filesystem::path& out_dir, const SynthConfig& cfg);

/// Encode one corpus video directory (frames/ + masks/ or a manifest)
/// into a .msv1 container. Returns the container size in bytes.
std::size_t cmd_encode(const std::filesystem::path& video_dir,
                       const std::optional<std::filesystem::path>& manifest,
                       const std::filesystem::path& out_file,
                       const EncoderConfig& cfg);

void cmd_decode(const std::filesystem::path& container_file,
                const std::filesystem::path& out_dir,
                const DecoderConfig& cfg);

/// Compare two frame directories and write a quality report. Returns the
/// mean SSIM for convenience.
double cmd_evaluate(const std::filesystem::path& original_dir,
                    const std::filesystem::path& decoded_dir,
                    const std::filesystem::path& report_file);

/// Whole-corpus reproduction of the compression experiment: per-video
/// size accounting plus decode quality, written as one JSON report.
void cmd_report(const std::filesystem::path& corpus_dir,
                const std::filesystem::path& report_file,
                const EncoderConfig& encoder_cfg,
                const DecoderConfig& decoder_cfg);

} // namespace msv::cli
