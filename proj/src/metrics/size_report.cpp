#include <nlohmann/json.hpp>

#include "msv/container.hpp"
#include "msv/image_io.hpp"
#include "msv/metrics.hpp"

namespace msv {

SizeReport size_report(const std::vector<Frame>& raw, const SketchVideo& sketch,
                       const MaskedSketchVideo& masked) {
    SizeReport report;
    for (const auto& frame : raw)
        report.raw_size += encode_frame_png(frame).size();
    report.sketch_size =
        encode_sketch_stream(sketch, masked.reference_frame).size();
    report.masked_size = encode_container(masked).size();
    if (report.sketch_size > 0)
        report.ratio_masked_sketch =
            static_cast<double>(report.masked_size) /
            static_cast<double>(report.sketch_size);
    if (report.raw_size > 0)
        report.ratio_masked_raw = static_cast<double>(report.masked_size) /
                                  static_cast<double>(report.raw_size);
    return report;
}

std::string size_report_json(const SizeReport& report) {
    nlohmann::json j;
    j["raw_bytes"] = report.raw_size;
    j["sketch_bytes"] = report.sketch_size;
    j["masked_bytes"] = report.masked_size;
    j["ratio_masked_over_sketch"] = report.ratio_masked_sketch;
    j["ratio_masked_over_raw"] = report.ratio_masked_raw;
    return j.dump(2);
}

} // namespace msv
