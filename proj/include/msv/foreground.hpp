#pragma once

#include <string>
#include <vector>

#include "msv/mask.hpp"

namespace msv {

/// One segmented instance: a mask per frame over the whole clip.
/// Segmentation drop-outs are represented as empty masks.
struct InstanceTrack {
    std::string instance_id;
    std::vector<BinaryMask> masks; // length T, uniform dimensions
};

/// Tracks classified as foreground, in input order.
struct ForegroundSet {
    std::vector<InstanceTrack> tracks;
    double threshold = 0.0;
    /// Per-track exclusion notes (all-empty tracks carry undefined IoU).
    std::vector<std::string> warnings;
};

/// Temporal IoU of a track: |intersection over all frames| divided by
/// |union over all frames|, as pixel counts. Throws ProtocolError for an
/// all-empty track (0/0).
double instance_iou(const InstanceTrack& track);

/// Keep exactly the tracks whose IoU is strictly below the threshold.
/// All-empty tracks are excluded with a warning record instead of
/// propagating the undefined-IoU error. Threshold must be in (0,1].
ForegroundSet classify_foreground(const std::vector<InstanceTrack>& tracks,
                                  double threshold);

/// Union of all foreground masks at frame t (1-based). The result has
/// the given dimensions; an empty set yields the all-zero mask.
BinaryMask frame_foreground_mask(const ForegroundSet& fg, int t, int width,
                                 int height);

} // namespace msv
