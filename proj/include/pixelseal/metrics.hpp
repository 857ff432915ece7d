#pragma once

#include "pixelseal/raster.hpp"

namespace pixelseal {

/// The five quality measures between an original and a watermarked image.
/// All of them pool the three channels into one sample set of 3*W*H values.
struct QualityReport {
    double mae = 0.0;      ///< mean absolute error, intensity units
    double mse = 0.0;      ///< mean squared error, intensity^2 units
    double psnr_db = 0.0;  ///< +infinity when mse == 0
    double ssim = 0.0;     ///< global-statistics SSIM, in [-1, 1]
    double uiqi = 0.0;     ///< universal image quality index, in [-1, 1]
};

double mae(const ImagePlanes& x, const ImagePlanes& v);
double mse(const ImagePlanes& x, const ImagePlanes& v);

/// 10*log10(255^2/mse); +infinity for mse == 0. Throws InvalidArgumentError
/// on negative input.
double psnr(double mse_value);

/// Global-statistics SSIM (single window spanning the whole image) with the
/// conventional stabilizers c1 = (0.01*255)^2, c2 = (0.03*255)^2.
double ssim(const ImagePlanes& x, const ImagePlanes& v);

/// Universal image quality index: correlation * luminance * contrast over
/// global statistics. Equals ssim with zero stabilizers. Throws
/// StatisticsError when either image is constant or both means are zero.
double uiqi(const ImagePlanes& x, const ImagePlanes& v);

QualityReport quality_report(const ImagePlanes& x, const ImagePlanes& v);

}  // namespace pixelseal
