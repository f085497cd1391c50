#include "stego/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "stego/common.hpp"

namespace stego {

double mse(const Image& a, const Image& b) {
    if (!a.same_shape(b)) throw parse_error("mse: dimension mismatch");
    if (a.size() == 0) throw parse_error("mse: empty image");
    double sum = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        const double d = static_cast<double>(a.data[i]) - b.data[i];
        sum += d * d;
    }
    return sum / static_cast<double>(a.data.size());
}

double psnr(const Image& a, const Image& b) {
    const double m = mse(a, b);
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / m);
}

double entropy(const Image& img) {
    if (img.size() == 0) throw parse_error("entropy: empty image");
    std::array<uint64_t, 256> hist{};
    for (uint8_t v : img.data) ++hist[v];
    const double n = static_cast<double>(img.data.size());
    double h = 0.0;
    for (uint64_t count : hist) {
        if (count == 0) continue;
        const double p = count / n;
        h -= p * std::log2(p);
    }
    return h;
}

double histogram_deviation(const Image& a, const Image& b) {
    if (!a.same_shape(b)) throw parse_error("histogram_deviation: dimension mismatch");
    std::array<int64_t, 256> ha{}, hb{};
    for (uint8_t v : a.data) ++ha[v];
    for (uint8_t v : b.data) ++hb[v];
    const double n = static_cast<double>(a.data.size());
    double l1 = 0.0;
    for (int i = 0; i < 256; ++i) l1 += std::abs(ha[i] - hb[i]) / n;
    return l1;
}

double capacity_bpp(uint64_t payload_bits, const Image& img) {
    return static_cast<double>(payload_bits) / static_cast<double>(img.pixel_count());
}

QualityReport quality_report(const Image& a, const Image& b, uint64_t payload_bits) {
    QualityReport r;
    r.mse = mse(a, b);
    r.psnr_infinite = (r.mse == 0.0);
    r.psnr_db = r.psnr_infinite ? 0.0 : psnr(a, b);
    r.entropy_a = entropy(a);
    r.entropy_b = entropy(b);
    r.histogram_l1 = histogram_deviation(a, b);
    r.capacity_bpp = capacity_bpp(payload_bits, a);
    return r;
}

std::string QualityReport::to_json() const {
    std::ostringstream os;
    os.precision(10);
    os << "{\"psnr_db\":";
    if (psnr_infinite) os << "null";
    else os << psnr_db;
    os << ",\"psnr_infinite\":" << (psnr_infinite ? "true" : "false")
       << ",\"mse\":" << mse
       << ",\"entropy_a\":" << entropy_a
       << ",\"entropy_b\":" << entropy_b
       << ",\"histogram_l1\":" << histogram_l1
       << ",\"capacity_bpp\":" << capacity_bpp << "}";
    return os.str();
}

}  // namespace stego
