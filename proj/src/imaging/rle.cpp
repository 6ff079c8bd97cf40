#include "msv/rle.hpp"

#include "msv/error.hpp"

namespace msv {

std::uint64_t RleBlock::total_length() const {
    std::uint64_t n = 0;
    for (const auto& r : runs)
        n += r.length;
    return n;
}

RleBlock rle_encode(const SketchFrame& raster) {
    RleBlock block;
    const auto& d = raster.data;
    std::size_t i = 0;
    while (i < d.size()) {
        std::uint8_t v = d[i];
        std::size_t j = i + 1;
        while (j < d.size() && d[j] == v)
            ++j;
        block.runs.push_back({static_cast<std::uint32_t>(j - i), v});
        i = j;
    }
    return block;
}

SketchFrame rle_decode(const RleBlock& block, int width, int height) {
    std::uint64_t expected = static_cast<std::uint64_t>(width) * height;
    if (block.total_length() != expected)
        throw FormatError("rle_decode: run lengths do not sum to raster size");
    SketchFrame raster(width, height);
    std::size_t pos = 0;
    for (const auto& r : block.runs) {
        for (std::uint32_t k = 0; k < r.length; ++k)
            raster.data[pos++] = r.value;
    }
    return raster;
}

std::vector<std::uint8_t> rle_to_bytes(const RleBlock& block) {
    std::vector<std::uint8_t> out;
    out.reserve(block.wire_size());
    for (const auto& r : block.runs) {
        out.push_back(static_cast<std::uint8_t>(r.length & 0xFF));
        out.push_back(static_cast<std::uint8_t>((r.length >> 8) & 0xFF));
        out.push_back(static_cast<std::uint8_t>((r.length >> 16) & 0xFF));
        out.push_back(static_cast<std::uint8_t>((r.length >> 24) & 0xFF));
        out.push_back(r.value);
    }
    return out;
}

RleBlock rle_from_bytes(const std::uint8_t* data, std::size_t size) {
    if (size % 5 != 0)
        throw FormatError("rle_from_bytes: payload is not a whole number of runs");
    RleBlock block;
    block.runs.reserve(size / 5);
    for (std::size_t i = 0; i < size; i += 5) {
        std::uint32_t len = static_cast<std::uint32_t>(data[i]) |
                            static_cast<std::uint32_t>(data[i + 1]) << 8 |
                            static_cast<std::uint32_t>(data[i + 2]) << 16 |
                            static_cast<std::uint32_t>(data[i + 3]) << 24;
        std::uint8_t value = data[i + 4];
        if (len == 0)
            throw FormatError("rle_from_bytes: zero-length run");
        if (!block.runs.empty() && block.runs.back().value == value)
            throw FormatError("rle_from_bytes: adjacent runs share a value");
        block.runs.push_back({len, value});
    }
    return block;
}

} // namespace msv
