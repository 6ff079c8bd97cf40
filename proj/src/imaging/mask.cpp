#include "msv/mask.hpp"

#include <bit>

namespace msv {

namespace {

void require_same_shape(const BinaryMask& a, const BinaryMask& b,
                        const char* op) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(op) + ": mask dimensions differ");
}

} // namespace

BinaryMask::BinaryMask(int width, int height)
    : width_(width), height_(height),
      words_((static_cast<std::size_t>(width) * height + 63) / 64, 0) {}

void BinaryMask::clear_padding() {
    std::size_t bits = pixel_count();
    if (bits % 64 != 0 && !words_.empty())
        words_.back() &= (std::uint64_t(1) << (bits % 64)) - 1;
}

std::size_t BinaryMask::count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BinaryMask mask_union(const BinaryMask& a, const BinaryMask& b) {
    require_same_shape(a, b, "mask_union");
    BinaryMask out = a;
    for (std::size_t i = 0; i < out.words_.size(); ++i)
        out.words_[i] |= b.words_[i];
    return out;
}

BinaryMask mask_intersection(const BinaryMask& a, const BinaryMask& b) {
    require_same_shape(a, b, "mask_intersection");
    BinaryMask out = a;
    for (std::size_t i = 0; i < out.words_.size(); ++i)
        out.words_[i] &= b.words_[i];
    return out;
}

BinaryMask mask_difference(const BinaryMask& a, const BinaryMask& b) {
    require_same_shape(a, b, "mask_difference");
    BinaryMask out = a;
    for (std::size_t i = 0; i < out.words_.size(); ++i)
        out.words_[i] &= ~b.words_[i];
    return out;
}

BinaryMask mask_complement(const BinaryMask& a) {
    BinaryMask out = a;
    for (auto& w : out.words_)
        w = ~w;
    out.clear_padding();
    return out;
}

BinaryMask sign_mask(const SketchFrame& raster) {
    BinaryMask out(raster.width, raster.height);
    for (int y = 0; y < raster.height; ++y)
        for (int x = 0; x < raster.width; ++x)
            if (raster.at(x, y) > 0)
                out.set(x, y, true);
    return out;
}

SketchFrame mask_to_raster(const BinaryMask& m, std::uint8_t on) {
    SketchFrame out(m.width(), m.height());
    for (int y = 0; y < m.height(); ++y)
        for (int x = 0; x < m.width(); ++x)
            if (m.get(x, y))
                out.at(x, y) = on;
    return out;
}

BinaryMask raster_to_mask(const SketchFrame& raster) {
    return sign_mask(raster);
}

} // namespace msv
