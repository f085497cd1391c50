// Image quality and capacity measurements: PSNR, MSE, entropy, histogram
// deviation, bits-per-pixel.
#pragma once

#include <string>

#include "stego/image.hpp"

namespace stego {

struct QualityReport {
    bool psnr_infinite = false;
    double psnr_db = 0.0;  // meaningless when psnr_infinite
    double mse = 0.0;
    double entropy_a = 0.0;  // bits/pixel
    double entropy_b = 0.0;
    double histogram_l1 = 0.0;
    double capacity_bpp = 0.0;

    std::string to_json() const;
};

// Mean squared error over all samples (channels pooled).
double mse(const Image& a, const Image& b);

// 10*log10(255^2 / mse); returns +infinity when images are identical.
double psnr(const Image& a, const Image& b);

// Shannon entropy of the 256-bin intensity histogram, channels pooled.
double entropy(const Image& img);

// L1 distance between normalized histograms, range [0,2].
double histogram_deviation(const Image& a, const Image& b);

double capacity_bpp(uint64_t payload_bits, const Image& img);

QualityReport quality_report(const Image& a, const Image& b, uint64_t payload_bits = 0);

}  // namespace stego
