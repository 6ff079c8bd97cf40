#include <doctest.h>

#include <algorithm>

#include "msv/foreground.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace msv;
using namespace msv::test;

namespace {

BinaryMask mask_of_cells(const std::vector<int>& cells, int w, int h) {
    BinaryMask m(w, h);
    for (int c : cells)
        m.set(c % w, c / w, true);
    return m;
}

InstanceTrack random_track(Rng& rng, int frames, int w, int h) {
    InstanceTrack track;
    track.instance_id = "r";
    for (int t = 0; t < frames; ++t)
        track.masks.push_back(random_mask(rng, w, h, 0.4));
    return track;
}

} // namespace

TEST_CASE("instance_iou on the two-frame 4x4 example") {
    // A covers cells {0..3}, B covers {2..7}: intersection 2, union 6.
    InstanceTrack track;
    track.instance_id = "a";
    track.masks.push_back(mask_of_cells({0, 1, 2, 3}, 4, 4));
    track.masks.push_back(mask_of_cells({2, 3, 4, 5, 6, 7}, 4, 4));
    CHECK(instance_iou(track) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(instance_iou(track) == iou_bruteforce(track));
}

TEST_CASE("instance_iou limit cases") {
    InstanceTrack constant;
    constant.instance_id = "static";
    auto m = mask_of_cells({5, 6, 9}, 4, 4);
    constant.masks = {m, m, m};
    CHECK(instance_iou(constant) == 1.0);

    InstanceTrack disjoint;
    disjoint.instance_id = "mover";
    disjoint.masks.push_back(mask_of_cells({0}, 4, 4));
    disjoint.masks.push_back(mask_of_cells({15}, 4, 4));
    CHECK(instance_iou(disjoint) == 0.0);

    InstanceTrack empty;
    empty.instance_id = "ghost";
    empty.masks = {BinaryMask(4, 4), BinaryMask(4, 4)};
    CHECK_THROWS_AS(instance_iou(empty), ProtocolError);
}

TEST_CASE("instance_iou equals brute force on random tracks") {
    Rng rng(404);
    for (int iter = 0; iter < 60; ++iter) {
        int w = rng.range(1, 32), h = rng.range(1, 32);
        int frames = rng.range(1, 8);
        InstanceTrack track = random_track(rng, frames, w, h);
        BinaryMask uni = track.masks.front();
        for (const auto& mk : track.masks)
            uni = mask_union(uni, mk);
        if (uni.count() == 0)
            continue;
        CHECK(instance_iou(track) == iou_bruteforce(track));
    }
}

TEST_CASE("instance_iou is invariant to frame order") {
    Rng rng(405);
    InstanceTrack track = random_track(rng, 6, 16, 16);
    double before = instance_iou(track);
    std::reverse(track.masks.begin(), track.masks.end());
    CHECK(instance_iou(track) == before);
    std::swap(track.masks[1], track.masks[4]);
    CHECK(instance_iou(track) == before);
}

TEST_CASE("appending a frame never increases the IoU") {
    Rng rng(406);
    for (int iter = 0; iter < 40; ++iter) {
        InstanceTrack track = random_track(rng, rng.range(1, 5), 12, 12);
        if (mask_union(track.masks.front(), track.masks.back()).count() == 0)
            continue;
        double before = instance_iou(track);
        track.masks.push_back(random_mask(rng, 12, 12, 0.4));
        CHECK(instance_iou(track) <= before);
    }
}

TEST_CASE("classify_foreground keeps exactly the sub-threshold tracks") {
    // IoU 0.9: 9 common cells, 10 in the union. IoU 0.2: 2 of 10.
    InstanceTrack slow;
    slow.instance_id = "slow";
    slow.masks.push_back(mask_of_cells({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 5, 4));
    slow.masks.push_back(mask_of_cells({0, 1, 2, 3, 4, 5, 6, 7, 8}, 5, 4));

    InstanceTrack fast;
    fast.instance_id = "fast";
    fast.masks.push_back(mask_of_cells({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, 5, 4));
    fast.masks.push_back(mask_of_cells({0, 1, 10, 11, 12, 13, 14, 15}, 5, 4));

    CHECK(instance_iou(slow) == doctest::Approx(0.9));
    CHECK(instance_iou(fast) == doctest::Approx(0.125));

    ForegroundSet fg = classify_foreground({slow, fast}, 0.5);
    REQUIRE(fg.tracks.size() == 1);
    CHECK(fg.tracks[0].instance_id == "fast");
    CHECK(fg.warnings.empty());
}

TEST_CASE("classify_foreground boundary and degenerate cases") {
    InstanceTrack mover;
    mover.instance_id = "m";
    mover.masks.push_back(mask_of_cells({0, 1}, 4, 1));
    mover.masks.push_back(mask_of_cells({1, 2}, 4, 1));
    double iou = instance_iou(mover);
    CHECK(iou < 1.0);

    // threshold 1.0 admits every non-static track
    ForegroundSet all = classify_foreground({mover}, 1.0);
    CHECK(all.tracks.size() == 1);

    // ties are excluded: IoU == threshold is not "below"
    ForegroundSet tie = classify_foreground({mover}, iou);
    CHECK(tie.tracks.empty());

    CHECK(classify_foreground({}, 0.8).tracks.empty());
    CHECK_THROWS_AS(classify_foreground({mover}, 0.0), ProtocolError);
    CHECK_THROWS_AS(classify_foreground({mover}, 1.5), ProtocolError);
}

TEST_CASE("all-empty tracks are excluded with a warning record") {
    InstanceTrack ghost;
    ghost.instance_id = "ghost";
    ghost.masks = {BinaryMask(4, 4), BinaryMask(4, 4)};
    InstanceTrack mover;
    mover.instance_id = "m";
    mover.masks.push_back(mask_of_cells({0}, 4, 4));
    mover.masks.push_back(mask_of_cells({1}, 4, 4));

    ForegroundSet fg = classify_foreground({ghost, mover}, 0.8);
    REQUIRE(fg.tracks.size() == 1);
    CHECK(fg.tracks[0].instance_id == "m");
    REQUIRE(fg.warnings.size() == 1);
    CHECK(fg.warnings[0].find("ghost") != std::string::npos);
}

TEST_CASE("frame_foreground_mask unions the member masks") {
    InstanceTrack a, b;
    a.instance_id = "a";
    b.instance_id = "b";
    a.masks = {mask_of_cells({0}, 4, 2), mask_of_cells({1}, 4, 2)};
    b.masks = {mask_of_cells({7}, 4, 2), mask_of_cells({6}, 4, 2)};
    ForegroundSet fg;
    fg.threshold = 0.8;
    fg.tracks = {a, b};

    BinaryMask m1 = frame_foreground_mask(fg, 1, 4, 2);
    CHECK(m1.count() == 2);
    CHECK(m1.get(0, 0));
    CHECK(m1.get(3, 1));

    // equals the brute-force union, and contains each member mask
    BinaryMask m2 = frame_foreground_mask(fg, 2, 4, 2);
    CHECK(m2 == mask_union(a.masks[1], b.masks[1]));
    CHECK(mask_difference(a.masks[1], m2).count() == 0);
    CHECK(mask_difference(b.masks[1], m2).count() == 0);

    // single-track identity
    ForegroundSet solo;
    solo.tracks = {a};
    CHECK(frame_foreground_mask(solo, 2, 4, 2) == a.masks[1]);

    // empty set -> all-zero mask of the requested size
    ForegroundSet none;
    CHECK(frame_foreground_mask(none, 1, 4, 2) == BinaryMask(4, 2));

    CHECK_THROWS_AS(frame_foreground_mask(fg, 0, 4, 2), ProtocolError);
    CHECK_THROWS_AS(frame_foreground_mask(fg, 3, 4, 2), ProtocolError);
}
