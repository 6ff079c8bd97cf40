#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "msv/container.hpp"
#include "msv/decoder.hpp"
#include "msv/metrics.hpp"
#include "msv/sketch.hpp"
#include "msv/synth.hpp"

namespace py = pybind11;

namespace {

using U8Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;
using F64Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

msv::Frame to_frame(const U8Array& a) {
    if (a.ndim() != 3 || a.shape(2) != 3)
        throw py::value_error("expected an HxWx3 uint8 array");
    msv::Frame f(static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)));
    std::memcpy(f.data.data(), a.data(), f.data.size());
    return f;
}

py::array from_frame(const msv::Frame& f) {
    py::array_t<std::uint8_t> a({f.height, f.width, 3});
    std::memcpy(a.mutable_data(), f.data.data(), f.data.size());
    return a;
}

msv::SketchFrame to_sketch(const U8Array& a) {
    if (a.ndim() != 2)
        throw py::value_error("expected an HxW uint8 array");
    msv::SketchFrame s(static_cast<int>(a.shape(1)),
                       static_cast<int>(a.shape(0)));
    std::memcpy(s.data.data(), a.data(), s.data.size());
    return s;
}

py::array from_sketch(const msv::SketchFrame& s) {
    py::array_t<std::uint8_t> a({s.height, s.width});
    std::memcpy(a.mutable_data(), s.data.data(), s.data.size());
    return a;
}

msv::BinaryMask to_mask(const U8Array& a) {
    if (a.ndim() != 2)
        throw py::value_error("expected an HxW mask array");
    msv::BinaryMask m(static_cast<int>(a.shape(1)),
                      static_cast<int>(a.shape(0)));
    auto r = a.unchecked<2>();
    for (py::ssize_t y = 0; y < a.shape(0); ++y)
        for (py::ssize_t x = 0; x < a.shape(1); ++x)
            if (r(y, x) != 0)
                m.set(static_cast<int>(x), static_cast<int>(y), true);
    return m;
}

py::array from_mask(const msv::BinaryMask& m) {
    py::array_t<std::uint8_t> a({m.height(), m.width()});
    auto w = a.mutable_unchecked<2>();
    for (int y = 0; y < m.height(); ++y)
        for (int x = 0; x < m.width(); ++x)
            w(y, x) = m.get(x, y) ? 1 : 0;
    return a;
}

msv::EdgeExtractorConfig edge_config(const std::string& op, int low, int high,
                                     int blur) {
    msv::EdgeExtractorConfig cfg;
    if (op == "grad")
        cfg.op = msv::EdgeExtractorConfig::Operator::GradientMagnitude;
    else if (op == "hysteresis")
        cfg.op = msv::EdgeExtractorConfig::Operator::TwoThresholdHysteresis;
    else
        throw py::value_error("edge operator must be 'grad' or 'hysteresis'");
    cfg.low_threshold = static_cast<std::uint8_t>(low);
    cfg.high_threshold = static_cast<std::uint8_t>(high);
    cfg.blur_radius = blur;
    return cfg;
}

msv::DecoderConfig decoder_config(const std::string& flow,
                                  const std::string& occlusion, double alpha,
                                  int tau, int feature_scale,
                                  const std::string& border) {
    msv::DecoderConfig cfg;
    if (flow == "zero")
        cfg.flow = msv::FlowEstimator::Zero;
    else if (flow == "block")
        cfg.flow = msv::FlowEstimator::BlockMatching;
    else
        throw py::value_error("flow must be 'zero' or 'block'");
    if (occlusion == "disagreement")
        cfg.occlusion = msv::OcclusionEstimator::SketchDisagreement;
    else if (occlusion == "one")
        cfg.occlusion = msv::OcclusionEstimator::ConstantOne;
    else
        throw py::value_error("occlusion must be 'disagreement' or 'one'");
    if (border == "clamp")
        cfg.border = msv::BorderPolicy::Clamp;
    else if (border == "zero")
        cfg.border = msv::BorderPolicy::Zero;
    else
        throw py::value_error("border must be 'clamp' or 'zero'");
    cfg.alpha = alpha;
    cfg.tau = tau;
    cfg.feature_scale = feature_scale;
    return cfg;
}

std::vector<msv::InstanceTrack> to_tracks(const py::object& tracks) {
    std::vector<msv::InstanceTrack> out;
    if (tracks.is_none())
        return out;
    for (const auto& item : tracks.cast<py::list>()) {
        auto pair = item.cast<py::tuple>();
        msv::InstanceTrack track;
        track.instance_id = pair[0].cast<std::string>();
        for (const auto& mask : pair[1].cast<py::list>())
            track.masks.push_back(to_mask(mask.cast<U8Array>()));
        out.push_back(std::move(track));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Masked-sketch semantic video codec";

    py::register_exception<msv::Error>(m, "MsvError", PyExc_RuntimeError);

    // mask algebra
    m.def("mask_union", [](const U8Array& a, const U8Array& b) {
        return from_mask(msv::mask_union(to_mask(a), to_mask(b)));
    });
    m.def("mask_intersection", [](const U8Array& a, const U8Array& b) {
        return from_mask(msv::mask_intersection(to_mask(a), to_mask(b)));
    });
    m.def("mask_difference", [](const U8Array& a, const U8Array& b) {
        return from_mask(msv::mask_difference(to_mask(a), to_mask(b)));
    });
    m.def("sign_mask", [](const U8Array& s) {
        return from_mask(msv::sign_mask(to_sketch(s)));
    });
    m.def("instance_iou", [](const py::list& masks) {
        msv::InstanceTrack track;
        track.instance_id = "py";
        for (const auto& mask : masks)
            track.masks.push_back(to_mask(mask.cast<U8Array>()));
        return msv::instance_iou(track);
    });

    // sketch codec
    m.def(
        "extract_sketch",
        [](const U8Array& frame, const std::string& op, int low, int high,
           int blur) {
            return from_sketch(
                msv::extract_sketch(to_frame(frame),
                                    edge_config(op, low, high, blur)));
        },
        py::arg("frame"), py::arg("op") = "grad", py::arg("low") = 50,
        py::arg("high") = 100, py::arg("blur") = 1);
    m.def("mask_sketch", [](const U8Array& s, const U8Array& mask) {
        return from_sketch(msv::mask_sketch(to_sketch(s), to_mask(mask)));
    });
    m.def("compose_static_background",
          [](const U8Array& s_t, const U8Array& s_1, const U8Array& s_T,
             const U8Array& m_t, const U8Array& m_1) {
              return from_sketch(msv::compose_static_background(
                  to_sketch(s_t), to_sketch(s_1), to_sketch(s_T),
                  to_mask(m_t), to_mask(m_1)));
          });
    m.def("reconstruct_sketch",
          [](const U8Array& ms_t, const U8Array& s_1, const U8Array& s_T,
             const U8Array& first_mask) {
              return from_sketch(msv::reconstruct_sketch(
                  to_sketch(ms_t), to_sketch(s_1), to_sketch(s_T),
                  to_mask(first_mask)));
          });

    // container-level codec
    m.def(
        "encode_video",
        [](const py::list& frames, const py::object& tracks,
           double iou_threshold, int fps, const std::string& edge_op,
           int edge_low, int edge_high, int edge_blur) {
            std::vector<msv::Frame> fs;
            for (const auto& f : frames)
                fs.push_back(to_frame(f.cast<U8Array>()));
            msv::EncoderConfig cfg;
            cfg.edge = edge_config(edge_op, edge_low, edge_high, edge_blur);
            cfg.iou_threshold = iou_threshold;
            cfg.fps = static_cast<std::uint8_t>(fps);
            auto bytes =
                msv::encode_container(msv::encode_video(fs, to_tracks(tracks), cfg));
            return py::bytes(reinterpret_cast<const char*>(bytes.data()),
                             bytes.size());
        },
        py::arg("frames"), py::arg("tracks") = py::none(),
        py::arg("iou_threshold") = 0.8, py::arg("fps") = 15,
        py::arg("edge_op") = "grad", py::arg("edge_low") = 50,
        py::arg("edge_high") = 100, py::arg("edge_blur") = 1);
    m.def(
        "decode_video",
        [](const py::bytes& container, const std::string& flow,
           const std::string& occlusion, double alpha, int tau,
           int feature_scale, const std::string& border) {
            std::string raw = container;
            std::vector<std::uint8_t> bytes(raw.begin(), raw.end());
            auto frames = msv::decode_video(
                msv::decode_container(bytes),
                decoder_config(flow, occlusion, alpha, tau, feature_scale,
                               border));
            py::list out;
            for (const auto& f : frames)
                out.append(from_frame(f));
            return out;
        },
        py::arg("container"), py::arg("flow") = "block",
        py::arg("occlusion") = "disagreement", py::arg("alpha") = 100.0,
        py::arg("tau") = 1, py::arg("feature_scale") = 4,
        py::arg("border") = "clamp");

    // decoding primitives
    m.def(
        "warp",
        [](const U8Array& frame, const F64Array& dx, const F64Array& dy,
           const std::string& border) {
            msv::Frame f = to_frame(frame);
            if (dx.ndim() != 2 || dy.ndim() != 2 ||
                dx.shape(0) != f.height || dx.shape(1) != f.width ||
                dy.shape(0) != f.height || dy.shape(1) != f.width)
                throw py::value_error("flow arrays must be HxW float64");
            msv::FlowField flow(f.width, f.height);
            std::memcpy(flow.dx.data(), dx.data(),
                        flow.dx.size() * sizeof(double));
            std::memcpy(flow.dy.data(), dy.data(),
                        flow.dy.size() * sizeof(double));
            msv::BorderPolicy policy = border == "zero"
                                           ? msv::BorderPolicy::Zero
                                           : msv::BorderPolicy::Clamp;
            return from_frame(msv::warp(f, flow, policy));
        },
        py::arg("frame"), py::arg("dx"), py::arg("dy"),
        py::arg("border") = "clamp");
    m.def("compose_frame", [](const U8Array& warped, const U8Array& generated,
                              const F64Array& mask) {
        msv::Frame w = to_frame(warped);
        msv::SoftMask sm(w.width, w.height);
        if (mask.ndim() != 2 || mask.shape(0) != w.height ||
            mask.shape(1) != w.width)
            throw py::value_error("mask must be HxW float64");
        std::memcpy(sm.values.data(), mask.data(),
                    sm.values.size() * sizeof(double));
        return from_frame(msv::compose_frame(w, to_frame(generated), sm));
    });
    m.def(
        "translate_frame",
        [](const U8Array& sketch, const U8Array& reference, double alpha,
           int feature_scale) {
            msv::DecoderConfig cfg;
            cfg.alpha = alpha;
            cfg.feature_scale = feature_scale;
            return from_frame(msv::translate_frame(to_sketch(sketch),
                                                   to_frame(reference), cfg));
        },
        py::arg("sketch"), py::arg("reference"), py::arg("alpha") = 100.0,
        py::arg("feature_scale") = 4);

    // metrics
    m.def("psnr", [](const U8Array& a, const U8Array& b) {
        return msv::psnr(to_frame(a), to_frame(b));
    });
    m.def("ssim", [](const U8Array& a, const U8Array& b) {
        return msv::ssim(to_frame(a), to_frame(b));
    });

    // synthetic corpus (in-memory)
    m.def(
        "synth_video",
        [](std::uint64_t seed, int index, int frames, int width, int height,
           int moving, int statics) {
            msv::SynthConfig cfg;
            cfg.seed = seed;
            cfg.frame_count = frames;
            cfg.width = width;
            cfg.height = height;
            cfg.moving_shapes = moving;
            cfg.static_shapes = statics;
            msv::SynthVideo video = msv::generate_video(cfg, index);
            py::list fs;
            for (const auto& f : video.frames)
                fs.append(from_frame(f));
            py::list tracks;
            for (const auto& t : video.tracks) {
                py::list masks;
                for (const auto& mk : t.masks)
                    masks.append(from_mask(mk));
                tracks.append(py::make_tuple(t.instance_id, masks));
            }
            return py::make_tuple(fs, tracks);
        },
        py::arg("seed") = 7, py::arg("index") = 1, py::arg("frames") = 8,
        py::arg("width") = 64, py::arg("height") = 48, py::arg("moving") = 1,
        py::arg("statics") = 0);
}
