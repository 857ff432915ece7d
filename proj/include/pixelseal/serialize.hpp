#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pixelseal/metrics.hpp"
#include "pixelseal/protection.hpp"

namespace pixelseal {

/// Shortest round-trip decimal rendering of a double ("inf" for infinity).
std::string format_double(double value);

/// {"width":..,"height":..,"plane":..,"block_size":4,"blocks_x":..,
///  "blocks_y":..,"tampered_blocks":[{"bx":..,"by":..,"mismatches":..}],
///  "total_tampered":..,"tampered_fraction":..,"soi_fingerprint":"hex8"}
nlohmann::json tamper_report_json(const TamperReport& report);

/// {"mae":..,"mse":..,"psnr_db":..|"inf","ssim":..,"uiqi":..}
nlohmann::json quality_report_json(const QualityReport& report);

inline constexpr std::string_view kQualityCsvHeader =
    "image,plane,mae,mse,psnr_db,ssim,uiqi";

/// One CSV data row matching kQualityCsvHeader. `plane` may be empty when
/// not applicable.
std::string quality_report_csv_row(std::string_view image, std::string_view plane,
                                   const QualityReport& report);

}  // namespace pixelseal
