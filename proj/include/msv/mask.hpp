#pragma once

#include <cstdint>
#include <vector>

#include "msv/error.hpp"
#include "msv/frame.hpp"

namespace msv {

/// Binary per-pixel mask, bit-packed row-major into 64-bit words.
/// Padding bits past width*height are kept zero so whole-word algebra
/// and popcounts stay valid.
class BinaryMask {
public:
    BinaryMask() = default;
    BinaryMask(int width, int height);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width_) * height_;
    }

    bool get(int x, int y) const {
        std::size_t i = static_cast<std::size_t>(y) * width_ + x;
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int x, int y, bool v) {
        std::size_t i = static_cast<std::size_t>(y) * width_ + x;
        std::uint64_t bit = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }

    /// Number of set pixels.
    std::size_t count() const;
    bool empty() const { return count() == 0; }
    bool same_shape(const BinaryMask& o) const {
        return width_ == o.width_ && height_ == o.height_;
    }

    bool operator==(const BinaryMask&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend BinaryMask mask_union(const BinaryMask& a, const BinaryMask& b);
    friend BinaryMask mask_intersection(const BinaryMask& a,
                                        const BinaryMask& b);
    friend BinaryMask mask_difference(const BinaryMask& a,
                                      const BinaryMask& b);
    friend BinaryMask mask_complement(const BinaryMask& a);

private:
    void clear_padding();

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Per-pixel OR.
BinaryMask mask_union(const BinaryMask& a, const BinaryMask& b);
/// Per-pixel AND.
BinaryMask mask_intersection(const BinaryMask& a, const BinaryMask& b);
/// Per-pixel a AND NOT b (set minus).
BinaryMask mask_difference(const BinaryMask& a, const BinaryMask& b);
/// Per-pixel NOT.
BinaryMask mask_complement(const BinaryMask& a);

/// 1 exactly where the sample is positive.
BinaryMask sign_mask(const SketchFrame& raster);

/// Expand a mask to an 8-bit raster with the given value for set pixels.
SketchFrame mask_to_raster(const BinaryMask& m, std::uint8_t on = 1);
/// Collapse an 8-bit raster to a mask (sample > 0 => set), i.e. the
/// inverse of mask_to_raster for {0,1} rasters.
BinaryMask raster_to_mask(const SketchFrame& raster);

} // namespace msv
