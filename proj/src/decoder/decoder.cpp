#include "msv/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "msv/mask.hpp"
#include "msv/sketch.hpp"

namespace msv {

Frame compose_frame(const Frame& warped, const Frame& generated,
                    const SoftMask& mask) {
    require_same_shape(warped, generated, "compose_frame");
    if (mask.width != warped.width || mask.height != warped.height)
        throw ShapeError("compose_frame: mask dimensions differ");

    Frame out(warped.width, warped.height);
    for (int y = 0; y < out.height; ++y) {
        for (int x = 0; x < out.width; ++x) {
            double m = mask.at(x, y);
            for (int c = 0; c < 3; ++c) {
                double v = (1.0 - m) * warped.at(x, y, c) +
                           m * generated.at(x, y, c);
                out.at(x, y, c) = static_cast<std::uint8_t>(
                    std::clamp(std::nearbyint(v), 0.0, 255.0));
            }
        }
    }
    return out;
}

std::vector<Frame> decode_video(const MaskedSketchVideo& video,
                                const DecoderConfig& cfg) {
    cfg.validate();
    const int T = video.frame_count();
    if (T < 2)
        throw ProtocolError("decode_video: container has fewer than two frames");

    // The first masked frame's sign mask serves the whole video.
    BinaryMask first_mask = sign_mask(video.masked_frames.front());

    std::vector<SketchFrame> sketches;
    sketches.reserve(T);
    for (const auto& ms : video.masked_frames)
        sketches.push_back(reconstruct_sketch(ms, video.keyframe_first,
                                              video.keyframe_last,
                                              first_mask));

    FrameTranslator translator(video.reference_frame, cfg);

    std::vector<Frame> frames;
    frames.reserve(T);
    frames.push_back(video.reference_frame);
    for (int t = 1; t < T; ++t) {
        int start = std::max(0, t - cfg.tau);
        std::span<const Frame> history(frames.data() + start,
                                       static_cast<std::size_t>(t - start));
        std::span<const SketchFrame> window(
            sketches.data() + start, static_cast<std::size_t>(t - start + 1));

        FlowField flow = estimate_flow(history, window, cfg);
        Frame warped = warp(frames[t - 1], flow, cfg.border);
        SoftMask occlusion = predict_occlusion_mask(history, window, flow, cfg);
        Frame generated = translator.translate(sketches[t]);
        frames.push_back(compose_frame(warped, generated, occlusion));
    }
    return frames;
}

} // namespace msv
