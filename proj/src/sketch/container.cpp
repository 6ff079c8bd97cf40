#include "msv/container.hpp"

#include <cstring>
#include <fstream>

#include "msv/image_io.hpp"
#include "msv/rle.hpp"

namespace msv {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

void put_block(std::vector<std::uint8_t>& out,
               const std::vector<std::uint8_t>& payload) {
    put_u32(out, static_cast<std::uint32_t>(payload.size()));
    out.insert(out.end(), payload.begin(), payload.end());
}

class Cursor {
public:
    Cursor(const std::uint8_t* data, std::size_t size)
        : data_(data), size_(size) {}

    std::uint16_t u16() {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(data_[pos_]) |
                          static_cast<std::uint16_t>(data_[pos_ + 1]) << 8;
        pos_ += 2;
        return v;
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = static_cast<std::uint32_t>(data_[pos_]) |
                          static_cast<std::uint32_t>(data_[pos_ + 1]) << 8 |
                          static_cast<std::uint32_t>(data_[pos_ + 2]) << 16 |
                          static_cast<std::uint32_t>(data_[pos_ + 3]) << 24;
        pos_ += 4;
        return v;
    }
    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }
    const std::uint8_t* block(std::size_t n) {
        need(n);
        const std::uint8_t* p = data_ + pos_;
        pos_ += n;
        return p;
    }
    bool exhausted() const { return pos_ == size_; }

private:
    void need(std::size_t n) const {
        if (pos_ + n > size_)
            throw FormatError("container: truncated payload");
    }
    const std::uint8_t* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
};

void check_alphabet(const SketchFrame& raster, bool allow_sentinel,
                    const char* what) {
    for (std::uint8_t v : raster.data) {
        bool ok = v == kBackground || v == kEdge ||
                  (allow_sentinel && v == kSentinel);
        if (!ok)
            throw FormatError(std::string("container: ") + what +
                              " carries an out-of-alphabet sample");
    }
}

std::vector<std::uint8_t> encode_stream(
    int width, int height, std::size_t frame_count, std::uint8_t fps,
    std::uint8_t flags, const Frame& reference,
    const SketchFrame* keyframe_first, const SketchFrame* keyframe_last,
    const std::vector<SketchFrame>& frames) {
    if (width < 1 || height < 1 || width > 0xFFFF || height > 0xFFFF)
        throw ProtocolError("container: dimensions out of range");
    if (frame_count < 2 || frame_count > 0xFFFF)
        throw ProtocolError("container: frame count out of range");

    std::vector<std::uint8_t> out;
    out.insert(out.end(), std::begin(kContainerMagic),
               std::end(kContainerMagic));
    put_u16(out, kContainerVersion);
    put_u16(out, static_cast<std::uint16_t>(width));
    put_u16(out, static_cast<std::uint16_t>(height));
    put_u16(out, static_cast<std::uint16_t>(frame_count));
    out.push_back(fps);
    out.push_back(flags);
    put_block(out, encode_frame_png(reference));
    if (keyframe_first)
        put_block(out, rle_to_bytes(rle_encode(*keyframe_first)));
    if (keyframe_last)
        put_block(out, rle_to_bytes(rle_encode(*keyframe_last)));
    for (const auto& f : frames)
        put_block(out, rle_to_bytes(rle_encode(f)));
    return out;
}

} // namespace

std::vector<std::uint8_t> encode_container(const MaskedSketchVideo& video) {
    int w = video.width(), h = video.height();
    auto check_shape = [&](const SketchFrame& f, const char* what) {
        if (f.width != w || f.height != h)
            throw ShapeError(std::string("container: ") + what +
                             " dimensions differ");
    };
    check_shape(video.keyframe_last, "keyframe");
    if (video.reference_frame.width != w || video.reference_frame.height != h)
        throw ShapeError("container: reference frame dimensions differ");
    check_alphabet(video.keyframe_first, false, "first keyframe");
    check_alphabet(video.keyframe_last, false, "last keyframe");
    for (const auto& f : video.masked_frames) {
        check_shape(f, "masked frame");
        check_alphabet(f, true, "masked frame");
    }
    return encode_stream(w, h, video.masked_frames.size(), video.fps,
                         kFlagMasked, video.reference_frame,
                         &video.keyframe_first, &video.keyframe_last,
                         video.masked_frames);
}

std::vector<std::uint8_t> encode_sketch_stream(const SketchVideo& video,
                                               const Frame& reference) {
    if (video.frames.empty())
        throw ProtocolError("container: empty sketch video");
    return encode_stream(video.frames.front().width,
                         video.frames.front().height, video.frames.size(),
                         video.fps, 0, reference, nullptr, nullptr,
                         video.frames);
}

MaskedSketchVideo decode_container(const std::vector<std::uint8_t>& bytes) {
    Cursor cur(bytes.data(), bytes.size());
    const std::uint8_t* magic = cur.block(4);
    if (std::memcmp(magic, kContainerMagic, 4) != 0)
        throw FormatError("container: bad magic");
    std::uint16_t version = cur.u16();
    if (version != kContainerVersion)
        throw FormatError("container: unsupported version " +
                          std::to_string(version));
    int width = cur.u16();
    int height = cur.u16();
    int frame_count = cur.u16();
    std::uint8_t fps = cur.u8();
    std::uint8_t flags = cur.u8();
    if (!(flags & kFlagMasked))
        throw FormatError("container: stream does not carry masked frames");
    if (width < 1 || height < 1)
        throw FormatError("container: invalid dimensions");
    if (frame_count < 2)
        throw FormatError("container: fewer than two frames");

    MaskedSketchVideo video;
    video.fps = fps;

    std::uint32_t ref_len = cur.u32();
    video.reference_frame = decode_frame_png(cur.block(ref_len), ref_len);
    if (video.reference_frame.width != width ||
        video.reference_frame.height != height)
        throw FormatError("container: reference frame dimensions mismatch");

    auto read_raster = [&](bool allow_sentinel,
                           const char* what) -> SketchFrame {
        std::uint32_t len = cur.u32();
        RleBlock block = rle_from_bytes(cur.block(len), len);
        SketchFrame raster = rle_decode(block, width, height);
        check_alphabet(raster, allow_sentinel, what);
        return raster;
    };

    video.keyframe_first = read_raster(false, "first keyframe");
    video.keyframe_last = read_raster(false, "last keyframe");
    video.masked_frames.reserve(frame_count);
    for (int t = 0; t < frame_count; ++t)
        video.masked_frames.push_back(read_raster(true, "masked frame"));
    if (!cur.exhausted())
        throw FormatError("container: trailing bytes after last frame");
    return video;
}

void write_container(const std::filesystem::path& path,
                     const MaskedSketchVideo& video) {
    std::vector<std::uint8_t> bytes = encode_container(video);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write container: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("write failure: " + path.string());
}

MaskedSketchVideo read_container(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in)
        throw IoError("cannot open container: " + path.string());
    std::streamsize size = in.tellg();
    in.seekg(0);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    in.read(reinterpret_cast<char*>(bytes.data()), size);
    if (!in)
        throw IoError("read failure: " + path.string());
    return decode_container(bytes);
}

} // namespace msv
