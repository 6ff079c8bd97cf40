#include "msv/image_io.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>

#include "msv/error.hpp"

// libpng-backed PNG codec. Compression settings are pinned so that the
// same pixels always serialize to the same bytes. libpng reports errors
// via longjmp; each entry point arms setjmp and rethrows as FormatError.

namespace msv {

namespace {

constexpr int kCompressionLevel = 6;

struct PngImage {
    int width = 0;
    int height = 0;
    int channels = 0; // 1 = gray, 3 = rgb
    std::vector<std::uint8_t> data;
};

struct ErrorState {
    std::string message;
};

void error_fn(png_structp png, png_const_charp msg) {
    auto* state = static_cast<ErrorState*>(png_get_error_ptr(png));
    if (state)
        state->message = msg;
    png_longjmp(png, 1);
}

void warning_fn(png_structp, png_const_charp) {}

struct MemoryReader {
    const std::uint8_t* data;
    std::size_t size;
    std::size_t pos;
};

void memory_read_fn(png_structp png, png_bytep out, png_size_t count) {
    auto* r = static_cast<MemoryReader*>(png_get_io_ptr(png));
    if (r->pos + count > r->size)
        png_error(png, "unexpected end of stream");
    std::memcpy(out, r->data + r->pos, count);
    r->pos += count;
}

void memory_write_fn(png_structp png, png_bytep data, png_size_t count) {
    auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
    out->insert(out->end(), data, data + count);
}

void memory_flush_fn(png_structp) {}

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f)
            std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

class ReadCtx {
public:
    ReadCtx() {
        png_ = png_create_read_struct(PNG_LIBPNG_VER_STRING, &err_,
                                      error_fn, warning_fn);
        if (png_)
            info_ = png_create_info_struct(png_);
        if (!png_ || !info_) {
            png_destroy_read_struct(&png_, &info_, nullptr);
            throw IoError("png: failed to allocate decoder");
        }
    }
    ~ReadCtx() { png_destroy_read_struct(&png_, &info_, nullptr); }
    png_structp png() { return png_; }
    png_infop info() { return info_; }
    const std::string& message() const { return err_.message; }

private:
    ErrorState err_;
    png_structp png_ = nullptr;
    png_infop info_ = nullptr;
};

class WriteCtx {
public:
    WriteCtx() {
        png_ = png_create_write_struct(PNG_LIBPNG_VER_STRING, &err_,
                                       error_fn, warning_fn);
        if (png_)
            info_ = png_create_info_struct(png_);
        if (!png_ || !info_) {
            png_destroy_write_struct(&png_, &info_);
            throw IoError("png: failed to allocate encoder");
        }
    }
    ~WriteCtx() { png_destroy_write_struct(&png_, &info_); }
    png_structp png() { return png_; }
    png_infop info() { return info_; }
    const std::string& message() const { return err_.message; }

private:
    ErrorState err_;
    png_structp png_ = nullptr;
    png_infop info_ = nullptr;
};

// The actual decode; must only be entered with setjmp armed by the caller.
PngImage read_png_body(ReadCtx& ctx, PngImage& img) {
    png_structp png = ctx.png();
    png_read_info(png, ctx.info());

    png_uint_32 width, height;
    int bit_depth, color_type;
    png_get_IHDR(png, ctx.info(), &width, &height, &bit_depth, &color_type,
                 nullptr, nullptr, nullptr);

    if (bit_depth == 16)
        throw FormatError("png: 16-bit images are not supported");

    if (color_type == PNG_COLOR_TYPE_PALETTE)
        png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, ctx.info(), PNG_INFO_tRNS))
        png_set_tRNS_to_alpha(png);
    png_set_strip_alpha(png);
    int passes = png_set_interlace_handling(png);
    png_read_update_info(png, ctx.info());

    int channels = png_get_channels(png, ctx.info());
    if (channels != 1 && channels != 3)
        throw FormatError("png: unsupported channel count");

    img.width = static_cast<int>(width);
    img.height = static_cast<int>(height);
    img.channels = channels;
    img.data.resize(static_cast<std::size_t>(width) * height * channels);

    // Row-by-row read; no locals allocated below the setjmp frame, so a
    // longjmp out of libpng cannot leak.
    std::size_t stride = static_cast<std::size_t>(width) * channels;
    for (int pass = 0; pass < passes; ++pass)
        for (png_uint_32 y = 0; y < height; ++y)
            png_read_row(png, img.data.data() + y * stride, nullptr);
    png_read_end(png, nullptr);
    return std::move(img);
}

PngImage read_png(ReadCtx& ctx) {
    PngImage img;
    if (setjmp(png_jmpbuf(ctx.png())))
        throw FormatError("png: " + ctx.message());
    return read_png_body(ctx, img);
}

void write_png(WriteCtx& ctx, int width, int height, int channels,
               const std::uint8_t* data) {
    png_structp png = ctx.png();
    if (setjmp(png_jmpbuf(png)))
        throw FormatError("png: " + ctx.message());

    png_set_compression_level(png, kCompressionLevel);
    int color_type =
        channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
    png_set_IHDR(png, ctx.info(), width, height, 8, color_type,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, ctx.info());

    std::size_t stride = static_cast<std::size_t>(width) * channels;
    for (int y = 0; y < height; ++y)
        png_write_row(png, const_cast<png_bytep>(data + y * stride));
    png_write_end(png, nullptr);
}

PngImage load_png_file(const std::filesystem::path& path) {
    FilePtr file(std::fopen(path.string().c_str(), "rb"));
    if (!file)
        throw IoError("cannot open image file: " + path.string());
    ReadCtx ctx;
    png_init_io(ctx.png(), file.get());
    return read_png(ctx);
}

void save_png_file(const std::filesystem::path& path, int width, int height,
                   int channels, const std::uint8_t* data) {
    FilePtr file(std::fopen(path.string().c_str(), "wb"));
    if (!file)
        throw IoError("cannot write image file: " + path.string());
    WriteCtx ctx;
    png_init_io(ctx.png(), file.get());
    write_png(ctx, width, height, channels, data);
    if (std::fflush(file.get()) != 0)
        throw IoError("write failure: " + path.string());
}

Frame frame_from_image(PngImage&& img) {
    Frame frame(img.width, img.height);
    if (img.channels == 3) {
        frame.data = std::move(img.data);
    } else {
        for (std::size_t i = 0; i < img.data.size(); ++i) {
            frame.data[i * 3 + 0] = img.data[i];
            frame.data[i * 3 + 1] = img.data[i];
            frame.data[i * 3 + 2] = img.data[i];
        }
    }
    return frame;
}

} // namespace

Frame load_frame(const std::filesystem::path& path) {
    return frame_from_image(load_png_file(path));
}

SketchFrame load_gray(const std::filesystem::path& path) {
    PngImage img = load_png_file(path);
    SketchFrame raster(img.width, img.height);
    if (img.channels == 1) {
        raster.data = std::move(img.data);
    } else {
        for (std::size_t i = 0; i < raster.data.size(); ++i) {
            // Color input collapses through luma, rounded to nearest.
            double v = luma(img.data[i * 3], img.data[i * 3 + 1],
                            img.data[i * 3 + 2]);
            raster.data[i] = static_cast<std::uint8_t>(v + 0.5);
        }
    }
    return raster;
}

BinaryMask load_mask(const std::filesystem::path& path) {
    SketchFrame gray = load_gray(path);
    BinaryMask mask(gray.width, gray.height);
    for (int y = 0; y < gray.height; ++y)
        for (int x = 0; x < gray.width; ++x)
            if (gray.at(x, y) >= 128)
                mask.set(x, y, true);
    return mask;
}

void save_frame(const std::filesystem::path& path, const Frame& frame) {
    save_png_file(path, frame.width, frame.height, 3, frame.data.data());
}

void save_gray(const std::filesystem::path& path, const SketchFrame& raster) {
    save_png_file(path, raster.width, raster.height, 1, raster.data.data());
}

void save_mask(const std::filesystem::path& path, const BinaryMask& mask) {
    SketchFrame raster = mask_to_raster(mask, 255);
    save_gray(path, raster);
}

std::vector<std::uint8_t> encode_frame_png(const Frame& frame) {
    std::vector<std::uint8_t> out;
    WriteCtx ctx;
    png_set_write_fn(ctx.png(), &out, memory_write_fn, memory_flush_fn);
    write_png(ctx, frame.width, frame.height, 3, frame.data.data());
    return out;
}

Frame decode_frame_png(const std::uint8_t* data, std::size_t size) {
    MemoryReader reader{data, size, 0};
    ReadCtx ctx;
    png_set_read_fn(ctx.png(), &reader, memory_read_fn);
    return frame_from_image(read_png(ctx));
}

} // namespace msv
