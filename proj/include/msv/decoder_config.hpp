#pragma once

#include "msv/error.hpp"

namespace msv {

enum class FlowEstimator { Zero, BlockMatching };
enum class OcclusionEstimator { SketchDisagreement, ConstantOne };
enum class BorderPolicy { Clamp, Zero };

/// Knobs for the reference decoder. The estimators are deterministic
/// stand-ins for the learned flow/occlusion/translation networks and sit
/// behind these enums so trained models can be dropped in later.
struct DecoderConfig {
    int tau = 1;          // history window length
    double alpha = 100.0; // attention softmax sharpness
    int feature_scale = 4;
    FlowEstimator flow = FlowEstimator::BlockMatching;
    OcclusionEstimator occlusion = OcclusionEstimator::SketchDisagreement;
    BorderPolicy border = BorderPolicy::Clamp;

    int block_size = 8;      // block matching
    int search_radius = 4;   // pixels, per axis
    int dilation_radius = 2; // occlusion disagreement dilation

    void validate() const {
        if (tau < 1)
            throw ProtocolError("DecoderConfig: tau must be >= 1");
        if (!(alpha > 0.0))
            throw ProtocolError("DecoderConfig: alpha must be positive");
        if (feature_scale < 1)
            throw ProtocolError("DecoderConfig: feature_scale must be >= 1");
        if (block_size < 1 || search_radius < 0 || dilation_radius < 0)
            throw ProtocolError("DecoderConfig: invalid estimator geometry");
    }
};

} // namespace msv
