// Acceptance suite: runs every criterion at its pinned tolerance and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pixelseal/aes128.hpp"
#include "pixelseal/attacks.hpp"
#include "pixelseal/digest.hpp"
#include "pixelseal/embedding.hpp"
#include "pixelseal/keying.hpp"
#include "pixelseal/metrics.hpp"
#include "pixelseal/protection.hpp"
#include "support/fixtures.hpp"

using namespace pixelseal;
using pixelseal::testing::bounded;

namespace {

const CameraId kId = {'a', 'b', 'c'};

struct Corpus {
    std::vector<ImagePlanes> images;
};

Corpus make_corpus() {
    Corpus corpus;
    corpus.images.push_back(testing::natural_image(512, 512, 1001));
    corpus.images.push_back(testing::natural_image(512, 512, 1002));
    corpus.images.push_back(testing::natural_image(512, 512, 1003));
    corpus.images.push_back(testing::natural_image(512, 512, 1004));
    corpus.images.push_back(testing::natural_image(737, 492, 1005));
    return corpus;
}

struct PlaneAverages {
    double mae = 0.0;
    double mse = 0.0;
    double psnr_db = 0.0;
    std::vector<double> ssim_per_image;
};

PlaneAverages averages_for_plane(const Corpus& corpus, int plane) {
    PlaneAverages avg;
    for (const ImagePlanes& image : corpus.images) {
        const ProtectedImage result = protect(image, kId, BitPlaneIndex(plane));
        const QualityReport q = quality_report(image, result.planes);
        avg.mae += q.mae;
        avg.mse += q.mse;
        avg.psnr_db += q.psnr_db;
        avg.ssim_per_image.push_back(q.ssim);
    }
    const double n = static_cast<double>(corpus.images.size());
    avg.mae /= n;
    avg.mse /= n;
    avg.psnr_db /= n;
    return avg;
}

bool within_relative(double value, double target, double tolerance) {
    return std::abs(value - target) <= tolerance * target;
}

int g_failures = 0;

void report(int criterion, bool pass, const std::string& name) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
                name.c_str());
    if (!pass) ++g_failures;
}

// Criterion 1: per-plane average MSE within +-3% of {1/6, 4/6, 16/6} and
// average PSNR within +-0.1 dB of {55.91, 49.90, 43.87}; plane indices 3 and
// 7 (the prose labels) must instead land at MSE ~10.67 and ~2731.
void criterion_1(const Corpus& corpus,
                 const std::array<PlaneAverages, 3>& table_planes) {
    const double mse_targets[3] = {1.0 / 6.0, 4.0 / 6.0, 16.0 / 6.0};
    const double psnr_targets[3] = {55.91, 49.90, 43.87};

    bool pass = true;
    for (int p = 0; p < 3; ++p) {
        const PlaneAverages& avg = table_planes[p];
        if (!within_relative(avg.mse, mse_targets[p], 0.03)) pass = false;
        if (std::abs(avg.psnr_db - psnr_targets[p]) > 0.1) pass = false;
        std::printf("  plane %d: avg mse %.6f (target %.6f +-3%%), avg psnr "
                    "%.4f dB (target %.2f +-0.1)\n",
                    p, avg.mse, mse_targets[p], avg.psnr_db, psnr_targets[p]);
    }

    // The prose mapping (fourth->3, msb->7) does not reproduce the tables.
    const PlaneAverages p3 = averages_for_plane(corpus, 3);
    const PlaneAverages p7 = averages_for_plane(corpus, 7);
    if (!within_relative(p3.mse, 64.0 / 6.0, 0.03)) pass = false;
    if (!within_relative(p7.mse, 16384.0 / 6.0, 0.03)) pass = false;
    std::printf("  plane 3: avg mse %.4f (expected ~10.67, not the 0.66 of the "
                "published table)\n",
                p3.mse);
    std::printf("  plane 7: avg mse %.1f (expected ~2731, not the 2.67 of the "
                "published table)\n",
                p7.mse);

    report(1, pass,
           "table MSE/PSNR reproduction at plane indices 0,1,2 (and "
           "non-reproduction at 3,7)");
}

// Criterion 2: psnr(0.166577359) = 55.91465 +- 0.0005 dB, and the baseline
// ordering proposed > SGVC > MW on PSNR.
void criterion_2(const std::array<PlaneAverages, 3>& table_planes) {
    const double linked = psnr(0.166577359);
    bool pass = std::abs(linked - 55.91465) <= 0.0005;
    const double proposed = table_planes[0].psnr_db;
    constexpr double kSgvcPsnr = 52.16478;
    constexpr double kMwPsnr = 42.34178;
    if (!(proposed > kSgvcPsnr && kSgvcPsnr > kMwPsnr)) pass = false;
    std::printf("  psnr(0.166577359) = %.5f dB; ordering %.4f > %.5f > %.5f\n",
                linked, proposed, kSgvcPsnr, kMwPsnr);
    report(2, pass, "average MSE to average PSNR cross-check and baseline "
                    "ordering");
}

// Criterion 3: verify(protect(...)) is clean for 100 random triples.
void criterion_3() {
    std::mt19937 rng(2024);
    int clean = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int w = 8 + static_cast<int>(bounded(rng, 120));
        const int h = 8 + static_cast<int>(bounded(rng, 120));
        const ImagePlanes image = testing::random_image(w, h, rng());
        CameraId id(1 + bounded(rng, 16));
        for (auto& b : id) b = static_cast<std::uint8_t>(rng());
        const BitPlaneIndex plane(static_cast<int>(bounded(rng, 8)));

        const ProtectedImage result = protect(image, id, plane);
        if (verify(result.planes, id, plane).total_tampered == 0) ++clean;
    }
    std::printf("  %d/100 protect->verify round trips clean\n", clean);
    report(3, clean == 100, "soundness over 100 random (image, id, plane) "
                            "triples");
}

// Criterion 4: 1000 single-pixel G/B tampers detected >=999 times, each
// flagging exactly the containing block; red bit-p flips 1000/1000; red
// bits != p never flagged (the documented blind spot).
void criterion_4() {
    const ImagePlanes image = testing::natural_image(128, 128, 2025);
    const BitPlaneIndex plane(0);
    const ProtectedImage fixture = protect(image, kId, plane);

    int gb_detected = 0;
    bool localization_exact = true;
    std::mt19937 rng(555);
    for (int trial = 0; trial < 1000; ++trial) {
        AttackSpec spec;
        spec.kind = AttackKind::one_pixel;
        spec.seed = static_cast<std::uint32_t>(trial);
        spec.x = static_cast<int>(bounded(rng, 128));
        spec.y = static_cast<int>(bounded(rng, 128));
        spec.channel = bounded(rng, 2) == 0 ? Channel::green : Channel::blue;

        const ImagePlanes attacked = apply_attack(fixture.planes, spec);
        const TamperReport result = verify(attacked, kId, plane);
        if (result.total_tampered >= 1) {
            ++gb_detected;
            if (result.total_tampered != 1 ||
                !result.tampered(*spec.x / 4, *spec.y / 4)) {
                localization_exact = false;
            }
        }
    }

    int red_detected = 0;
    bool red_exact = true;
    for (int trial = 0; trial < 1000; ++trial) {
        const int x = static_cast<int>(bounded(rng, 128));
        const int y = static_cast<int>(bounded(rng, 128));
        ImagePlanes attacked = fixture.planes;
        attacked.red.at(x, y) ^= plane.mask();
        const TamperReport result = verify(attacked, kId, plane);
        if (result.total_tampered >= 1) {
            ++red_detected;
            if (result.total_tampered != 1 || !result.tampered(x / 4, y / 4)) {
                red_exact = false;
            }
        }
    }

    int blind_detected = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int x = static_cast<int>(bounded(rng, 128));
        const int y = static_cast<int>(bounded(rng, 128));
        const int bit = 1 + static_cast<int>(bounded(rng, 7));  // anything but p=0
        ImagePlanes attacked = fixture.planes;
        attacked.red.at(x, y) ^= static_cast<std::uint8_t>(1u << bit);
        blind_detected += verify(attacked, kId, plane).total_tampered;
    }

    const bool pass = gb_detected >= 999 && localization_exact &&
                      red_detected == 1000 && red_exact && blind_detected == 0;
    std::printf("  G/B tampers: %d/1000 detected, localization %s; red bit-p "
                "flips: %d/1000; non-p red flips flagged: %d (blind spot)\n",
                gb_detected, localization_exact ? "exact" : "NOT exact",
                red_detected, blind_detected);
    report(4, pass, "tamper localization on seeded single-pixel attacks");
}

// Criterion 5: wrong key on a 256x256 protected image floods the report.
void criterion_5() {
    const ImagePlanes image = testing::natural_image(256, 256, 2026);
    const ProtectedImage fixture = protect(image, kId, BitPlaneIndex(0));
    const CameraId wrong = {'w', 'r', 'o', 'n', 'g'};
    const TamperReport result = verify(fixture.planes, wrong, BitPlaneIndex(0));
    std::printf("  tampered_fraction = %.6f (threshold 0.999)\n",
                result.tampered_fraction);
    report(5, result.tampered_fraction >= 0.999, "wrong-key rejection");
}

// Criterion 6: cipher and digest reference vectors, byte-exact.
void criterion_6() {
    CipherKey key;
    for (int i = 0; i < 16; ++i) key.bytes[i] = static_cast<std::uint8_t>(i);
    const auto plaintext = from_hex("00112233445566778899aabbccddeeff");
    std::array<std::uint8_t, 16> block;
    std::copy(plaintext.begin(), plaintext.end(), block.begin());
    const auto cipher =
        Aes128(key).encrypt_block(std::span<const std::uint8_t, 16>(block));
    const bool aes_ok = to_hex(cipher) == "69c4e0d86a7b0430d8cdb78070b4c55a";

    const std::vector<std::uint8_t> abc = {'a', 'b', 'c'};
    const bool sha_ok =
        to_hex(sha1(abc)) == "a9993e364706816aba3e25717850c26c9cd0d89d" &&
        to_hex(sha1(std::vector<std::uint8_t>{})) ==
            "da39a3ee5e6b4b0d3255bfef95601890afd80709";

    std::printf("  aes block vector %s, sha-1 vectors %s\n",
                aes_ok ? "ok" : "MISMATCH", sha_ok ? "ok" : "MISMATCH");
    report(6, aes_ok && sha_ok, "cipher and digest reference vectors");
}

// Zero-constant global SSIM, for the UIQI identity check.
double zero_constant_ssim(const ImagePlanes& x, const ImagePlanes& v) {
    double sum_x = 0, sum_v = 0;
    std::size_t n = 0;
    const ByteGrid* xs[3] = {&x.red, &x.green, &x.blue};
    const ByteGrid* vs[3] = {&v.red, &v.green, &v.blue};
    for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < xs[c]->size(); ++i) {
            sum_x += (*xs[c])[i];
            sum_v += (*vs[c])[i];
            ++n;
        }
    }
    const double mx = sum_x / n, mv = sum_v / n;
    double vx = 0, vv = 0, cov = 0;
    for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < xs[c]->size(); ++i) {
            vx += ((*xs[c])[i] - mx) * ((*xs[c])[i] - mx);
            vv += ((*vs[c])[i] - mv) * ((*vs[c])[i] - mv);
            cov += ((*xs[c])[i] - mx) * ((*vs[c])[i] - mv);
        }
    }
    vx /= n;
    vv /= n;
    cov /= n;
    return (2 * mx * mv) * (2 * cov) / ((mx * mx + mv * mv) * (vx + vv));
}

// Criterion 7: metric identities, Jensen, psnr consistency, the UIQI/SSIM
// identity, and SSIM monotone degradation across planes 0 -> 1 -> 2.
void criterion_7(const std::array<PlaneAverages, 3>& table_planes) {
    std::mt19937 rng(2027);
    bool identities = true;
    for (int trial = 0; trial < 100; ++trial) {
        const int w = 4 + static_cast<int>(bounded(rng, 60));
        const int h = 4 + static_cast<int>(bounded(rng, 60));
        const ImagePlanes x = testing::random_image(w, h, rng());
        if (mae(x, x) != 0.0 || mse(x, x) != 0.0 || ssim(x, x) != 1.0) {
            identities = false;
        }
    }

    bool jensen = true;
    bool psnr_consistent = true;
    bool uiqi_identity = true;
    for (int trial = 0; trial < 100; ++trial) {
        const int w = 4 + static_cast<int>(bounded(rng, 60));
        const int h = 4 + static_cast<int>(bounded(rng, 60));
        const ImagePlanes x = testing::random_image(w, h, rng());
        const ImagePlanes v = testing::random_image(w, h, rng());
        const QualityReport q = quality_report(x, v);
        if (q.mae * q.mae > q.mse + 1e-12) jensen = false;
        if (std::abs(q.psnr_db - psnr(q.mse)) > 1e-9) psnr_consistent = false;
        if (std::abs(q.uiqi - zero_constant_ssim(x, v)) > 1e-9) {
            uiqi_identity = false;
        }
    }

    bool monotone = true;
    const std::size_t per_image = table_planes[0].ssim_per_image.size();
    for (std::size_t i = 0; i < per_image; ++i) {
        const double s0 = table_planes[0].ssim_per_image[i];
        const double s1 = table_planes[1].ssim_per_image[i];
        const double s2 = table_planes[2].ssim_per_image[i];
        if (!(s0 > s1 && s1 > s2)) monotone = false;
    }

    const bool pass =
        identities && jensen && psnr_consistent && uiqi_identity && monotone;
    std::printf("  identities %s; jensen %s; psnr consistency %s; uiqi==ssim@0 "
                "%s; ssim monotone over planes %s\n",
                identities ? "ok" : "FAIL", jensen ? "ok" : "FAIL",
                psnr_consistent ? "ok" : "FAIL", uiqi_identity ? "ok" : "FAIL",
                monotone ? "ok" : "FAIL");
    report(7, pass, "metric properties and SSIM degradation trend");
}

// Criterion 8: the published MAE column and the absolute SSIM/UIQI values
// depend on unshared images; they are replaced by the analytic MAE oracle
// (2^p/6 per plane) plus the property suites above.
void criterion_8(const std::array<PlaneAverages, 3>& table_planes) {
    bool pass = true;
    for (int p = 0; p < 3; ++p) {
        const double target = std::pow(2.0, p) / 6.0;
        if (!within_relative(table_planes[p].mae, target, 0.03)) pass = false;
        std::printf("  plane %d: avg mae %.6f (analytic %.6f +-3%%)\n", p,
                    table_planes[p].mae, target);
    }
    std::printf("  note: published per-image MAE (~half the analytic value) "
                "and absolute SSIM/UIQI are corpus-bound; covered by the "
                "analytic and property oracles instead\n");
    report(8, pass, "substituted analytic MAE oracle in place of "
                    "non-reproducible columns");
}

}  // namespace

int main() {
    const Corpus corpus = make_corpus();
    const std::array<PlaneAverages, 3> table_planes = {
        averages_for_plane(corpus, 0), averages_for_plane(corpus, 1),
        averages_for_plane(corpus, 2)};

    criterion_1(corpus, table_planes);
    criterion_2(table_planes);
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7(table_planes);
    criterion_8(table_planes);

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
