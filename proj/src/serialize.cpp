#include "pixelseal/serialize.hpp"

#include <charconv>
#include <cmath>

#include "pixelseal/digest.hpp"

namespace pixelseal {

std::string format_double(double value) {
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

nlohmann::json tamper_report_json(const TamperReport& report) {
    nlohmann::json blocks = nlohmann::json::array();
    for (int by = 0; by < report.blocks_y; ++by) {
        for (int bx = 0; bx < report.blocks_x; ++bx) {
            const int mismatches =
                report.mismatch_counts[static_cast<std::size_t>(by) *
                                           report.blocks_x +
                                       bx];
            if (mismatches > 0) {
                blocks.push_back(
                    {{"bx", bx}, {"by", by}, {"mismatches", mismatches}});
            }
        }
    }
    return nlohmann::json{
        {"width", report.width},
        {"height", report.height},
        {"plane", report.plane},
        {"block_size", 4},
        {"blocks_x", report.blocks_x},
        {"blocks_y", report.blocks_y},
        {"tampered_blocks", std::move(blocks)},
        {"total_tampered", report.total_tampered},
        {"tampered_fraction", report.tampered_fraction},
        {"soi_fingerprint", to_hex(report.soi_fingerprint)},
    };
}

nlohmann::json quality_report_json(const QualityReport& report) {
    nlohmann::json j{
        {"mae", report.mae},
        {"mse", report.mse},
        {"ssim", report.ssim},
        {"uiqi", report.uiqi},
    };
    if (std::isinf(report.psnr_db)) {
        j["psnr_db"] = "inf";
    } else {
        j["psnr_db"] = report.psnr_db;
    }
    return j;
}

std::string quality_report_csv_row(std::string_view image, std::string_view plane,
                                   const QualityReport& report) {
    std::string row;
    row += image;
    row += ',';
    row += plane;
    row += ',';
    row += format_double(report.mae);
    row += ',';
    row += format_double(report.mse);
    row += ',';
    row += format_double(report.psnr_db);
    row += ',';
    row += format_double(report.ssim);
    row += ',';
    row += format_double(report.uiqi);
    return row;
}

}  // namespace pixelseal
