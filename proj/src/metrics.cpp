#include "pixelseal/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "pixelseal/errors.hpp"

namespace pixelseal {

namespace {

void check_same_size(const ImagePlanes& x, const ImagePlanes& v) {
    if (x.width() != v.width() || x.height() != v.height()) {
        throw DimensionError("metric inputs differ in size");
    }
}

struct PooledStats {
    double mean_x = 0.0;
    double mean_v = 0.0;
    double var_x = 0.0;   // population variance
    double var_v = 0.0;
    double cov_xv = 0.0;
    std::size_t n = 0;
};

// Two-pass statistics over the pooled samples of all three planes.
PooledStats pooled_stats(const ImagePlanes& x, const ImagePlanes& v) {
    PooledStats s;
    const ByteGrid* xs[3] = {&x.red, &x.green, &x.blue};
    const ByteGrid* vs[3] = {&v.red, &v.green, &v.blue};

    s.n = 3 * x.red.size();
    double sum_x = 0.0, sum_v = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < xs[c]->size(); ++i) {
            sum_x += (*xs[c])[i];
            sum_v += (*vs[c])[i];
        }
    }
    s.mean_x = sum_x / static_cast<double>(s.n);
    s.mean_v = sum_v / static_cast<double>(s.n);

    double sxx = 0.0, svv = 0.0, sxv = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < xs[c]->size(); ++i) {
            const double dx = (*xs[c])[i] - s.mean_x;
            const double dv = (*vs[c])[i] - s.mean_v;
            sxx += dx * dx;
            svv += dv * dv;
            sxv += dx * dv;
        }
    }
    s.var_x = sxx / static_cast<double>(s.n);
    s.var_v = svv / static_cast<double>(s.n);
    s.cov_xv = sxv / static_cast<double>(s.n);
    return s;
}

constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

double ssim_with_constants(const PooledStats& s, double c1, double c2) {
    const double num = (2.0 * s.mean_x * s.mean_v + c1) * (2.0 * s.cov_xv + c2);
    const double den = (s.mean_x * s.mean_x + s.mean_v * s.mean_v + c1) *
                       (s.var_x + s.var_v + c2);
    return num / den;
}

}  // namespace

double mae(const ImagePlanes& x, const ImagePlanes& v) {
    check_same_size(x, v);
    const ByteGrid* xs[3] = {&x.red, &x.green, &x.blue};
    const ByteGrid* vs[3] = {&v.red, &v.green, &v.blue};
    double sum = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < xs[c]->size(); ++i) {
            sum += std::abs(static_cast<int>((*xs[c])[i]) -
                            static_cast<int>((*vs[c])[i]));
        }
    }
    return sum / static_cast<double>(3 * x.red.size());
}

double mse(const ImagePlanes& x, const ImagePlanes& v) {
    check_same_size(x, v);
    const ByteGrid* xs[3] = {&x.red, &x.green, &x.blue};
    const ByteGrid* vs[3] = {&v.red, &v.green, &v.blue};
    double sum = 0.0;
    for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < xs[c]->size(); ++i) {
            const double d = static_cast<int>((*xs[c])[i]) -
                             static_cast<int>((*vs[c])[i]);
            sum += d * d;
        }
    }
    return sum / static_cast<double>(3 * x.red.size());
}

double psnr(double mse_value) {
    if (mse_value < 0.0) {
        throw InvalidArgumentError("psnr: mse must be non-negative");
    }
    if (mse_value == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(255.0 * 255.0 / mse_value);
}

double ssim(const ImagePlanes& x, const ImagePlanes& v) {
    check_same_size(x, v);
    return ssim_with_constants(pooled_stats(x, v), kC1, kC2);
}

double uiqi(const ImagePlanes& x, const ImagePlanes& v) {
    check_same_size(x, v);
    const PooledStats s = pooled_stats(x, v);
    if (s.var_x == 0.0 || s.var_v == 0.0) {
        throw StatisticsError("uiqi undefined for a constant image");
    }
    if (s.mean_x == 0.0 && s.mean_v == 0.0) {
        throw StatisticsError("uiqi undefined when both means are zero");
    }
    const double sd_x = std::sqrt(s.var_x);
    const double sd_v = std::sqrt(s.var_v);
    const double correlation = s.cov_xv / (sd_x * sd_v);
    const double luminance =
        2.0 * s.mean_x * s.mean_v / (s.mean_x * s.mean_x + s.mean_v * s.mean_v);
    const double contrast = 2.0 * sd_x * sd_v / (s.var_x + s.var_v);
    return correlation * luminance * contrast;
}

QualityReport quality_report(const ImagePlanes& x, const ImagePlanes& v) {
    QualityReport report;
    report.mae = mae(x, v);
    report.mse = mse(x, v);
    report.psnr_db = psnr(report.mse);
    report.ssim = ssim(x, v);
    report.uiqi = uiqi(x, v);
    return report;
}

}  // namespace pixelseal
