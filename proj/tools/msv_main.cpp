#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "msv/commands.hpp"
#include "msv/error.hpp"

namespace {

int verbosity() {
    const char* env = std::getenv("MSV_LOG");
    return env ? std::atoi(env) : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"msv - masked-sketch semantic video codec"};
    app.require_subcommand(1);
    app.set_config("--config")->description(
        "config file (flags override file values)");

    // Shared knobs
    msv::SynthConfig synth_cfg;
    msv::EncoderConfig encoder_cfg;
    msv::DecoderConfig decoder_cfg;
    std::string out_path;

    std::map<std::string, msv::FlowEstimator> flow_names{
        {"zero", msv::FlowEstimator::Zero},
        {"block", msv::FlowEstimator::BlockMatching}};
    std::map<std::string, msv::OcclusionEstimator> occlusion_names{
        {"disagreement", msv::OcclusionEstimator::SketchDisagreement},
        {"one", msv::OcclusionEstimator::ConstantOne}};
    std::map<std::string, msv::BorderPolicy> border_names{
        {"clamp", msv::BorderPolicy::Clamp}, {"zero", msv::BorderPolicy::Zero}};
    std::map<std::string, msv::EdgeExtractorConfig::Operator> edge_names{
        {"grad", msv::EdgeExtractorConfig::Operator::GradientMagnitude},
        {"hysteresis",
         msv::EdgeExtractorConfig::Operator::TwoThresholdHysteresis}};

    auto add_encoder_flags = [&](CLI::App* cmd) {
        cmd->add_option("--iou-threshold", encoder_cfg.iou_threshold,
                        "foreground IoU threshold in (0,1]")
            ->check(CLI::Range(1e-9, 1.0));
        cmd->add_option("--edge-operator", encoder_cfg.edge.op,
                        "edge operator")
            ->transform(CLI::CheckedTransformer(edge_names));
        cmd->add_option("--edge-low", encoder_cfg.edge.low_threshold,
                        "low edge threshold");
        cmd->add_option("--edge-high", encoder_cfg.edge.high_threshold,
                        "high edge threshold");
        cmd->add_option("--edge-blur", encoder_cfg.edge.blur_radius,
                        "pre-blur radius in pixels");
        cmd->add_option("--fps", encoder_cfg.fps, "frames per second");
    };
    auto add_decoder_flags = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", decoder_cfg.alpha,
                        "attention softmax sharpness (> 0)");
        cmd->add_option("--tau", decoder_cfg.tau, "history window length");
        cmd->add_option("--feature-scale", decoder_cfg.feature_scale,
                        "feature grid downsampling factor");
        cmd->add_option("--flow", decoder_cfg.flow, "flow estimator")
            ->transform(CLI::CheckedTransformer(flow_names));
        cmd->add_option("--occlusion", decoder_cfg.occlusion,
                        "occlusion estimator")
            ->transform(CLI::CheckedTransformer(occlusion_names));
        cmd->add_option("--border", decoder_cfg.border, "warp border policy")
            ->transform(CLI::CheckedTransformer(border_names));
    };

    // synth
    auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
    synth->add_option("--out", out_path, "corpus output directory")
        ->required();
    synth->add_option("--seed", synth_cfg.seed, "corpus seed");
    synth->add_option("--videos", synth_cfg.video_count, "number of videos");
    synth->add_option("--frames", synth_cfg.frame_count, "frames per video");
    synth->add_option("--width", synth_cfg.width, "frame width");
    synth->add_option("--height", synth_cfg.height, "frame height");
    synth->add_option("--shapes", synth_cfg.moving_shapes, "moving shapes");
    synth->add_option("--static-shapes", synth_cfg.static_shapes,
                      "static fixture shapes");
    synth->add_option("--fps", synth_cfg.fps, "frames per second");

    // encode
    auto* encode = app.add_subcommand(
        "encode", "encode a video directory to a .msv1 container");
    std::string encode_input;
    std::string manifest_path;
    encode->add_option("--input", encode_input,
                       "video directory (frames/ + masks/)")
        ->required();
    encode->add_option("--manifest", manifest_path,
                       "mask manifest JSON (replaces masks/)");
    encode->add_option("--out", out_path, "output .msv1 file")->required();
    add_encoder_flags(encode);

    // decode
    auto* decode = app.add_subcommand(
        "decode", "decode a .msv1 container into a frame directory");
    std::string decode_input;
    decode->add_option("--input", decode_input, ".msv1 container")->required();
    decode->add_option("--out", out_path, "output frame directory")
        ->required();
    add_decoder_flags(decode);

    // evaluate
    auto* evaluate = app.add_subcommand(
        "evaluate", "full-reference quality of decoded frames");
    std::string original_dir, decoded_dir;
    evaluate->add_option("--original", original_dir, "original frame dir")
        ->required();
    evaluate->add_option("--decoded", decoded_dir, "decoded frame dir")
        ->required();
    evaluate->add_option("--out", out_path, "quality report JSON file")
        ->required();

    // report
    auto* report = app.add_subcommand(
        "report", "size + quality report over a whole corpus");
    std::string corpus_dir;
    report->add_option("--corpus", corpus_dir, "corpus directory")
        ->required();
    report->add_option("--out", out_path, "report JSON file")->required();
    add_encoder_flags(report);
    add_decoder_flags(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // 0 for --help/--version, 1 for any usage error.
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (verbosity() > 0) {
        std::cerr << "resolved config:\n"
                  << app.config_to_str(true, false) << '\n';
    }

    try {
        if (*synth) {
            msv::cli::cmd_synth(out_path, synth_cfg);
        } else if (*encode) {
            std::optional<std::filesystem::path> manifest;
            if (!manifest_path.empty())
                manifest = manifest_path;
            msv::cli::cmd_encode(encode_input, manifest, out_path,
                                 encoder_cfg);
        } else if (*decode) {
            msv::cli::cmd_decode(decode_input, out_path, decoder_cfg);
        } else if (*evaluate) {
            msv::cli::cmd_evaluate(original_dir, decoded_dir, out_path);
        } else if (*report) {
            msv::cli::cmd_report(corpus_dir, out_path, encoder_cfg,
                                 decoder_cfg);
        }
    } catch (const msv::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
