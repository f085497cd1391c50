// Reversible integer wavelet transform: 2D LeGall 5/3 lifting, Mallat layout,
// arbitrary dimensions via whole-sample symmetric extension.
#pragma once

#include <cstdint>
#include <vector>

#include "stego/image.hpp"

namespace stego {

// One image channel as signed integers (intermediate form around transforms).
struct IntChannel {
    int width = 0;
    int height = 0;
    std::vector<int32_t> v;

    IntChannel() = default;
    IntChannel(int w, int h) : width(w), height(h), v(static_cast<size_t>(w) * h, 0) {}
    int32_t& at(int x, int y) { return v[static_cast<size_t>(y) * width + x]; }
    int32_t at(int x, int y) const { return v[static_cast<size_t>(y) * width + x]; }
};

IntChannel channel_from_image(const Image& img, int channel);
void channel_to_image(const IntChannel& ch, Image& img, int channel);  // clamps to [0,255]

// Detail orientations of one level.
enum class IwtBand { LH = 0, HL = 1, HH = 2 };

struct IwtPyramid {
    int width = 0;
    int height = 0;
    int levels = 0;
    std::vector<int32_t> coeff;  // Mallat layout, row-major over the full frame

    struct Region {
        int x0 = 0, y0 = 0, w = 0, h = 0;
    };

    // Dims of the lowpass region entering `level` (level 1 sees the image).
    void dims_at(int level, int& w, int& h) const;
    Region band_region(int level, IwtBand band) const;
    Region ll_region() const;

    int32_t& at(int x, int y) { return coeff[static_cast<size_t>(y) * width + x]; }
    int32_t at(int x, int y) const { return coeff[static_cast<size_t>(y) * width + x]; }
};

IwtPyramid iwt_forward(const IntChannel& ch, int levels);
IntChannel iwt_inverse(const IwtPyramid& pyr);

}  // namespace stego
