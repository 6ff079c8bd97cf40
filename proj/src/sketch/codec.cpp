#include "msv/sketch.hpp"

namespace msv {

namespace {

void require_mask_shape(const SketchFrame& s, const BinaryMask& m,
                        const char* op) {
    if (s.width != m.width() || s.height != m.height())
        throw ShapeError(std::string(op) + ": mask dimensions differ");
}

} // namespace

SketchFrame compose_static_background(const SketchFrame& s_t,
                                      const SketchFrame& s_1,
                                      const SketchFrame& s_T,
                                      const BinaryMask& m_t,
                                      const BinaryMask& m_1) {
    require_same_shape(s_t, s_1, "compose_static_background");
    require_same_shape(s_t, s_T, "compose_static_background");
    require_mask_shape(s_t, m_t, "compose_static_background");
    require_mask_shape(s_t, m_1, "compose_static_background");

    // Three disjoint regions covering every pixel: current foreground,
    // frame-1 foreground now vacated, and static background.
    SketchFrame out(s_t.width, s_t.height);
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            if (m_t.get(x, y))
                out.at(x, y) = s_t.at(x, y);
            else if (m_1.get(x, y))
                out.at(x, y) = s_T.at(x, y);
            else
                out.at(x, y) = s_1.at(x, y);
        }
    }
    return out;
}

SketchFrame mask_sketch(const SketchFrame& s_t, const BinaryMask& m_t) {
    require_mask_shape(s_t, m_t, "mask_sketch");
    SketchFrame out(s_t.width, s_t.height);
    for (int y = 0; y < out.height; ++y)
        for (int x = 0; x < out.width; ++x)
            if (m_t.get(x, y))
                out.at(x, y) = std::max(s_t.at(x, y), kSentinel);
    return out;
}

SketchFrame reconstruct_sketch(const SketchFrame& ms_t,
                               const SketchFrame& s_1,
                               const SketchFrame& s_T,
                               const BinaryMask& first_mask) {
    require_same_shape(ms_t, s_1, "reconstruct_sketch");
    require_same_shape(ms_t, s_T, "reconstruct_sketch");
    if (first_mask.width() != ms_t.width ||
        first_mask.height() != ms_t.height)
        throw ProtocolError(
            "reconstruct_sketch: first-frame mask missing or mis-sized");

    SketchFrame out(ms_t.width, ms_t.height);
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            std::uint8_t ms = ms_t.at(x, y);
            std::uint8_t v;
            if (ms > 0) // current foreground, sentinel included
                v = ms;
            else if (first_mask.get(x, y)) // vacated by frame-1 foreground
                v = s_T.at(x, y);
            else
                v = s_1.at(x, y);
            // Binarize: sentinels and any sub-threshold residue drop out.
            out.at(x, y) = v >= 128 ? kEdge : kBackground;
        }
    }
    return out;
}

MaskedSketchVideo encode_video(const std::vector<Frame>& frames,
                               const std::vector<InstanceTrack>& tracks,
                               const EncoderConfig& cfg) {
    if (frames.size() < 2)
        throw ProtocolError("encode_video: need at least two frames");
    int w = frames.front().width, h = frames.front().height;
    for (const auto& f : frames)
        if (f.width != w || f.height != h)
            throw ShapeError("encode_video: frame dimensions differ");
    for (const auto& track : tracks)
        if (track.masks.size() != frames.size())
            throw ShapeError("encode_video: track '" + track.instance_id +
                             "' does not span the video");

    std::vector<SketchFrame> sketches;
    sketches.reserve(frames.size());
    for (const auto& f : frames)
        sketches.push_back(extract_sketch(f, cfg.edge));

    ForegroundSet fg = classify_foreground(tracks, cfg.iou_threshold);

    MaskedSketchVideo out;
    out.fps = cfg.fps;
    out.keyframe_first = sketches.front();
    out.keyframe_last = sketches.back();
    out.reference_frame = frames.front();
    out.masked_frames.reserve(frames.size());
    for (std::size_t t = 1; t <= frames.size(); ++t) {
        BinaryMask m =
            frame_foreground_mask(fg, static_cast<int>(t), w, h);
        out.masked_frames.push_back(mask_sketch(sketches[t - 1], m));
    }
    return out;
}

} // namespace msv
