#include "msv/foreground.hpp"

namespace msv {

double instance_iou(const InstanceTrack& track) {
    if (track.masks.empty())
        throw ProtocolError("instance_iou: track has no masks");
    BinaryMask inter = track.masks.front();
    BinaryMask uni = track.masks.front();
    for (std::size_t i = 1; i < track.masks.size(); ++i) {
        inter = mask_intersection(inter, track.masks[i]);
        uni = mask_union(uni, track.masks[i]);
    }
    std::size_t union_count = uni.count();
    if (union_count == 0)
        throw ProtocolError("instance_iou: IoU undefined for track '" +
                            track.instance_id + "' (no mask ever set)");
    return static_cast<double>(inter.count()) /
           static_cast<double>(union_count);
}

ForegroundSet classify_foreground(const std::vector<InstanceTrack>& tracks,
                                  double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw ProtocolError("classify_foreground: threshold must be in (0,1]");
    ForegroundSet fg;
    fg.threshold = threshold;
    for (const auto& track : tracks) {
        double iou;
        try {
            iou = instance_iou(track);
        } catch (const ProtocolError& e) {
            fg.warnings.push_back(std::string("excluded track '") +
                                  track.instance_id + "': " + e.what());
            continue;
        }
        if (iou < threshold)
            fg.tracks.push_back(track);
    }
    return fg;
}

BinaryMask frame_foreground_mask(const ForegroundSet& fg, int t, int width,
                                 int height) {
    if (t < 1)
        throw ProtocolError("frame_foreground_mask: frame index is 1-based");
    BinaryMask out(width, height);
    for (const auto& track : fg.tracks) {
        if (static_cast<std::size_t>(t) > track.masks.size())
            throw ProtocolError(
                "frame_foreground_mask: frame index past end of track '" +
                track.instance_id + "'");
        const BinaryMask& m = track.masks[static_cast<std::size_t>(t) - 1];
        if (m.width() != width || m.height() != height)
            throw ShapeError("frame_foreground_mask: mask dimensions differ");
        out = mask_union(out, m);
    }
    return out;
}

} // namespace msv
