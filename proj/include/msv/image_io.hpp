#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "msv/frame.hpp"
#include "msv/mask.hpp"

namespace msv {

// Lossless 8-bit PNG interchange. 16-bit files are rejected rather than
// quantized; palette images are expanded.

Frame load_frame(const std::filesystem::path& path);
SketchFrame load_gray(const std::filesystem::path& path);
/// Mask convention: 0 <-> black, 1 <-> white (sample >= 128 reads as 1).
BinaryMask load_mask(const std::filesystem::path& path);

void save_frame(const std::filesystem::path& path, const Frame& frame);
void save_gray(const std::filesystem::path& path, const SketchFrame& raster);
void save_mask(const std::filesystem::path& path, const BinaryMask& mask);

/// In-memory PNG payloads (used for the container's embedded reference
/// frame and for size accounting).
std::vector<std::uint8_t> encode_frame_png(const Frame& frame);
Frame decode_frame_png(const std::uint8_t* data, std::size_t size);

} // namespace msv
