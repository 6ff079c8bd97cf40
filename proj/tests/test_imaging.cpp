#include <doctest.h>

#include <png.h>

#include "msv/image_io.hpp"
#include "msv/mask.hpp"
#include "msv/rle.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace msv;
using namespace msv::test;

namespace {

BinaryMask mask_from_bits(const std::vector<int>& bits, int w, int h) {
    BinaryMask m(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (bits[static_cast<std::size_t>(y) * w + x])
                m.set(x, y, true);
    return m;
}

SketchFrame sketch_from(const std::vector<std::uint8_t>& samples, int w,
                        int h) {
    SketchFrame s(w, h);
    s.data = samples;
    return s;
}

} // namespace

TEST_CASE("mask algebra matches the per-pixel oracle") {
    auto a = mask_from_bits({1, 1, 0, 1}, 4, 1);
    auto b = mask_from_bits({0, 1, 1, 0}, 4, 1);
    CHECK(mask_bits(mask_union(a, b)) == std::vector<int>{1, 1, 1, 1});
    CHECK(mask_bits(mask_difference(a, b)) == std::vector<int>{1, 0, 0, 1});

    auto c = mask_from_bits({0, 1, 1, 1}, 4, 1);
    CHECK(mask_bits(mask_intersection(a, c)) == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("mask algebra identities") {
    auto a = mask_from_bits({1, 0, 0, 0}, 4, 1);
    auto b = mask_from_bits({0, 1, 0, 0}, 4, 1);
    CHECK(mask_bits(mask_union(a, b)) == std::vector<int>{1, 1, 0, 0});
    CHECK(mask_union(a, a) == a);

    auto ones = mask_complement(BinaryMask(4, 1));
    CHECK(mask_intersection(a, ones) == a);
    CHECK(mask_intersection(mask_from_bits({1, 0}, 2, 1),
                            mask_from_bits({0, 1}, 2, 1)) == BinaryMask(2, 1));

    CHECK(mask_difference(a, a) == BinaryMask(4, 1));
    CHECK(mask_difference(a, BinaryMask(4, 1)) == a);
}

TEST_CASE("mask ops reject mismatched shapes") {
    BinaryMask a(4, 2), b(2, 4);
    CHECK_THROWS_AS(mask_union(a, b), ShapeError);
    CHECK_THROWS_AS(mask_intersection(a, b), ShapeError);
    CHECK_THROWS_AS(mask_difference(a, b), ShapeError);
}

TEST_CASE("boolean lattice laws on random masks") {
    Rng rng(101);
    for (int iter = 0; iter < 50; ++iter) {
        int w = rng.range(1, 40), h = rng.range(1, 20);
        auto a = random_mask(rng, w, h);
        auto b = random_mask(rng, w, h);
        auto c = random_mask(rng, w, h);

        CHECK(mask_union(a, b) == mask_union(b, a));
        CHECK(mask_intersection(a, b) == mask_intersection(b, a));
        CHECK(mask_union(mask_union(a, b), c) ==
              mask_union(a, mask_union(b, c)));
        CHECK(mask_intersection(mask_intersection(a, b), c) ==
              mask_intersection(a, mask_intersection(b, c)));
        // De Morgan
        CHECK(mask_complement(mask_union(a, b)) ==
              mask_intersection(mask_complement(a), mask_complement(b)));
        CHECK(mask_complement(mask_intersection(a, b)) ==
              mask_union(mask_complement(a), mask_complement(b)));

        // word-level ops equal the truth-table oracle
        CHECK(mask_bits(mask_union(a, b)) ==
              or_oracle(mask_bits(a), mask_bits(b)));
        CHECK(mask_bits(mask_intersection(a, b)) ==
              and_oracle(mask_bits(a), mask_bits(b)));
        CHECK(mask_bits(mask_difference(a, b)) ==
              setminus_oracle(mask_bits(a), mask_bits(b)));
    }
}

TEST_CASE("sign_mask is 1 exactly where samples are positive") {
    auto s = sketch_from({0, 255, 1, 0}, 4, 1);
    CHECK(mask_bits(sign_mask(s)) == std::vector<int>{0, 1, 1, 0});

    CHECK(sign_mask(SketchFrame(5, 3, 0)) == BinaryMask(5, 3));
    CHECK(sign_mask(SketchFrame(5, 3, 255)) ==
          mask_complement(BinaryMask(5, 3)));

    // exhaustive over the sketch alphabet
    for (std::uint8_t v : {std::uint8_t(0), kSentinel, kEdge}) {
        SketchFrame uniform(3, 3, v);
        CHECK(sign_mask(uniform).count() == (v > 0 ? 9u : 0u));
    }
}

TEST_CASE("rle hand-coded block") {
    auto s = sketch_from({0, 0, 0, 255}, 4, 1);
    RleBlock block = rle_encode(s);
    REQUIRE(block.runs.size() == 2);
    CHECK(block.runs[0] == RleRun{3, 0});
    CHECK(block.runs[1] == RleRun{1, 255});
}

TEST_CASE("rle of a uniform raster is a single run") {
    SketchFrame s(37, 11, 0);
    RleBlock block = rle_encode(s);
    REQUIRE(block.runs.size() == 1);
    CHECK(block.runs[0] == RleRun{37 * 11, 0});
}

TEST_CASE("rle round-trip is the identity and stays canonical") {
    Rng rng(202);
    for (int iter = 0; iter < 60; ++iter) {
        int w = rng.range(1, 64), h = rng.range(1, 32);
        SketchFrame s(w, h);
        for (auto& v : s.data) {
            int k = rng.range(0, 2);
            v = k == 0 ? kBackground : (k == 1 ? kSentinel : kEdge);
        }
        RleBlock block = rle_encode(s);
        CHECK(rle_decode(block, w, h) == s);
        CHECK(block.total_length() == s.pixel_count());
        for (std::size_t i = 0; i < block.runs.size(); ++i) {
            CHECK(block.runs[i].length > 0);
            if (i > 0)
                CHECK(block.runs[i].value != block.runs[i - 1].value);
        }
        // wire form parses back to the same block
        auto bytes = rle_to_bytes(block);
        CHECK(rle_from_bytes(bytes.data(), bytes.size()) == block);
    }
}

TEST_CASE("rle decode rejects run-sum mismatch") {
    RleBlock block;
    block.runs = {{3, 0}, {2, 255}};
    CHECK_THROWS_AS(rle_decode(block, 4, 1), FormatError);
    CHECK_THROWS_AS(rle_decode(block, 2, 3), FormatError);
}

TEST_CASE("rle wire parser rejects malformed payloads") {
    std::vector<std::uint8_t> zero_run = {0, 0, 0, 0, 7};
    CHECK_THROWS_AS(rle_from_bytes(zero_run.data(), zero_run.size()),
                    FormatError);
    std::vector<std::uint8_t> ragged = {1, 0, 0};
    CHECK_THROWS_AS(rle_from_bytes(ragged.data(), ragged.size()), FormatError);
    // adjacent runs with equal values are non-canonical
    std::vector<std::uint8_t> dup = {1, 0, 0, 0, 7, 2, 0, 0, 0, 7};
    CHECK_THROWS_AS(rle_from_bytes(dup.data(), dup.size()), FormatError);
}

TEST_CASE("png frame round-trip is lossless") {
    TempDir dir("png");
    Rng rng(303);
    Frame frame = random_frame(rng, 23, 17);
    auto path = dir.path() / "frame.png";
    save_frame(path, frame);
    CHECK(load_frame(path) == frame);
}

TEST_CASE("png grayscale round-trip preserves samples") {
    TempDir dir("gray");
    Rng rng(304);
    SketchFrame s(31, 9);
    for (auto& v : s.data)
        v = static_cast<std::uint8_t>(rng.range(0, 255));
    auto path = dir.path() / "gray.png";
    save_gray(path, s);
    CHECK(load_gray(path) == s);
}

TEST_CASE("png in-memory round-trip matches file round-trip") {
    Rng rng(305);
    Frame frame = random_frame(rng, 16, 16);
    auto bytes = encode_frame_png(frame);
    CHECK(decode_frame_png(bytes.data(), bytes.size()) == frame);
}

TEST_CASE("mask png convention: 0 is black, 1 is white") {
    TempDir dir("maskpng");
    BinaryMask m(4, 2);
    m.set(1, 0, true);
    m.set(3, 1, true);
    auto path = dir.path() / "mask.png";
    save_mask(path, m);
    SketchFrame raw = load_gray(path);
    CHECK(raw.at(1, 0) == 255);
    CHECK(raw.at(0, 0) == 0);
    CHECK(load_mask(path) == m);
}

TEST_CASE("loading a missing file fails") {
    CHECK_THROWS_AS(load_frame("/nonexistent/missing.png"), IoError);
}

TEST_CASE("16-bit png is rejected as unsupported") {
    TempDir dir("png16");
    auto path = dir.path() / "deep.png";

    // Write a tiny 16-bit grayscale PNG straight through libpng.
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    REQUIRE(f != nullptr);
    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    REQUIRE(setjmp(png_jmpbuf(png)) == 0);
    png_init_io(png, f);
    png_set_IHDR(png, info, 2, 2, 16, PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::uint8_t row[4] = {0x12, 0x34, 0xAB, 0xCD};
    png_write_row(png, row);
    png_write_row(png, row);
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(f);

    CHECK_THROWS_AS(load_gray(path), FormatError);
    CHECK_THROWS_AS(load_frame(path), FormatError);
}

TEST_CASE("non-png bytes are rejected") {
    std::vector<std::uint8_t> junk = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK_THROWS_AS(decode_frame_png(junk.data(), junk.size()), FormatError);
}
