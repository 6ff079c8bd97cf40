#pragma once

#include <vector>

#include "msv/container.hpp"
#include "msv/decoder_config.hpp"
#include "msv/flow.hpp"
#include "msv/occlusion.hpp"
#include "msv/translate.hpp"

namespace msv {

/// Per-pixel convex blend of the warped previous frame and the freshly
/// generated one: mask 0 keeps the warp, 1 keeps the generation. Blending
/// happens in floating point with a single half-to-even rounding at the
/// end, so each output sample stays inside the closed interval spanned by
/// its two sources.
Frame compose_frame(const Frame& warped, const Frame& generated,
                    const SoftMask& mask);

/// Full decode: frame 1 is the embedded reference frame; every later
/// frame is reconstructed from its sketch and the generated history via
/// flow warping, occlusion blending, and exemplar translation. The
/// history window is truncated to the frames that exist (warm-up).
std::vector<Frame> decode_video(const MaskedSketchVideo& video,
                                const DecoderConfig& cfg);

} // namespace msv
