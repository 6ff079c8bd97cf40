#pragma once

#include <cstdint>
#include <vector>

#include "msv/frame.hpp"

namespace msv {

/// One run of identical samples.
struct RleRun {
    std::uint32_t length = 0;
    std::uint8_t value = 0;
    bool operator==(const RleRun&) const = default;
};

/// Canonical run-length block: no zero-length runs, adjacent runs carry
/// different values, run lengths sum to the raster size.
struct RleBlock {
    std::vector<RleRun> runs;
    bool operator==(const RleBlock&) const = default;

    std::uint64_t total_length() const;
    /// Serialized size on the wire: 5 bytes per run.
    std::size_t wire_size() const { return runs.size() * 5; }
};

/// Encode a raster into canonical run-length form.
RleBlock rle_encode(const SketchFrame& raster);

/// Decode into a width x height raster. Throws FormatError when the run
/// lengths do not sum to width*height.
SketchFrame rle_decode(const RleBlock& block, int width, int height);

/// Wire form: little-endian sequence of (u32 run_length, u8 value).
std::vector<std::uint8_t> rle_to_bytes(const RleBlock& block);
/// Parse the wire form; enforces canonical shape (nonzero lengths,
/// no adjacent equal values).
RleBlock rle_from_bytes(const std::uint8_t* data, std::size_t size);

} // namespace msv
