#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "msv/sketch.hpp"

namespace msv {

// MSV1 container (all integers little-endian):
//   magic "MSV1" | u16 version=1 | u16 width | u16 height | u16 frame
//   count T | u8 fps | u8 flags | u32 len + PNG payload (reference frame
//   x_1) | u32 len + RLE block (s_1) | u32 len + RLE block (s_T) |
//   T x (u32 len + RLE block ms_t)
// flags bit 0: 1 = masked payload (the .msv1 interchange form),
//              0 = plain sketch payload (size-accounting stream where the
//                  keyframe blocks are omitted and the per-frame blocks
//                  carry full sketches).

inline constexpr std::uint8_t kContainerMagic[4] = {0x4D, 0x53, 0x56, 0x31};
inline constexpr std::uint16_t kContainerVersion = 1;
inline constexpr std::uint8_t kFlagMasked = 0x01;

std::vector<std::uint8_t> encode_container(const MaskedSketchVideo& video);
MaskedSketchVideo decode_container(const std::vector<std::uint8_t>& bytes);

/// Serialize a full sketch video through the same header/RLE machinery.
/// Only used for byte accounting against the masked container; never
/// written to .msv1 files.
std::vector<std::uint8_t> encode_sketch_stream(const SketchVideo& video,
                                               const Frame& reference);

void write_container(const std::filesystem::path& path,
                     const MaskedSketchVideo& video);
MaskedSketchVideo read_container(const std::filesystem::path& path);

} // namespace msv
