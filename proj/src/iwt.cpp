#include "stego/iwt.hpp"

#include <algorithm>

#include "stego/common.hpp"

namespace stego {

IntChannel channel_from_image(const Image& img, int channel) {
    IntChannel ch(img.width, img.height);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            ch.at(x, y) = img.at(x, y, channel);
    return ch;
}

void channel_to_image(const IntChannel& ch, Image& img, int channel) {
    for (int y = 0; y < ch.height; ++y)
        for (int x = 0; x < ch.width; ++x)
            img.at(x, y, channel) =
                static_cast<uint8_t>(std::clamp(ch.at(x, y), 0, 255));
}

namespace {

// 1D forward lifting on x[0..n): writes lowpass to out[0..ns), highpass to
// out[ns..n). Whole-sample symmetric extension at both ends.
void lift_forward(const int32_t* x, int n, int stride, int32_t* out) {
    if (n == 1) {
        out[0] = x[0];
        return;
    }
    const int ns = (n + 1) / 2;  // even-sample count
    const int nd = n / 2;        // odd-sample count
    auto X = [&](int i) {
        if (i < 0) i = -i;
        if (i > n - 1) i = 2 * (n - 1) - i;
        return x[static_cast<size_t>(i) * stride];
    };
    std::vector<int32_t> d(nd), s(ns);
    for (int i = 0; i < nd; ++i)
        d[i] = X(2 * i + 1) - ((X(2 * i) + X(2 * i + 2)) >> 1);
    auto D = [&](int i) { return d[std::clamp(i, 0, nd - 1)]; };
    for (int i = 0; i < ns; ++i)
        s[i] = X(2 * i) + ((D(i - 1) + D(i) + 2) >> 2);
    for (int i = 0; i < ns; ++i) out[i] = s[i];
    for (int i = 0; i < nd; ++i) out[ns + i] = d[i];
}

void lift_inverse(const int32_t* in, int n, int32_t* x, int stride) {
    if (n == 1) {
        x[0] = in[0];
        return;
    }
    const int ns = (n + 1) / 2;
    const int nd = n / 2;
    const int32_t* s = in;
    const int32_t* d = in + ns;
    auto D = [&](int i) { return d[std::clamp(i, 0, nd - 1)]; };
    std::vector<int32_t> even(ns);
    for (int i = 0; i < ns; ++i)
        even[i] = s[i] - ((D(i - 1) + D(i) + 2) >> 2);
    auto E = [&](int i) {
        if (i > ns - 1) i = ns - 1;  // mirror 2(n-1)-(2i+2) is even and <= 2(ns-1)
        return even[i];
    };
    for (int i = 0; i < ns; ++i) x[static_cast<size_t>(2 * i) * stride] = even[i];
    for (int i = 0; i < nd; ++i) {
        // x[2i+1] = d[i] + floor((x[2i] + x[2i+2]) / 2), with mirror at the end
        int32_t left = even[i];
        int32_t right = (2 * i + 2 <= n - 1) ? E(i + 1) : even[i];
        x[static_cast<size_t>(2 * i + 1) * stride] = d[i] + ((left + right) >> 1);
    }
}

}  // namespace

void IwtPyramid::dims_at(int level, int& w, int& h) const {
    w = width;
    h = height;
    for (int l = 1; l < level; ++l) {
        w = (w + 1) / 2;
        h = (h + 1) / 2;
    }
}

IwtPyramid::Region IwtPyramid::band_region(int level, IwtBand band) const {
    int pw, ph;
    dims_at(level, pw, ph);
    const int sw = (pw + 1) / 2, sh = (ph + 1) / 2;
    switch (band) {
        case IwtBand::LH: return {0, sh, sw, ph - sh};
        case IwtBand::HL: return {sw, 0, pw - sw, sh};
        case IwtBand::HH: return {sw, sh, pw - sw, ph - sh};
    }
    return {};
}

IwtPyramid::Region IwtPyramid::ll_region() const {
    int w, h;
    dims_at(levels + 1, w, h);
    return {0, 0, w, h};
}

IwtPyramid iwt_forward(const IntChannel& ch, int levels) {
    if (levels < 1) throw parse_error("iwt: levels must be >= 1");
    {
        int w = ch.width, h = ch.height;
        for (int l = 0; l < levels; ++l) {
            if (w < 2 || h < 2) throw parse_error("iwt: too many levels for image size");
            w = (w + 1) / 2;
            h = (h + 1) / 2;
        }
    }
    IwtPyramid pyr;
    pyr.width = ch.width;
    pyr.height = ch.height;
    pyr.levels = levels;
    pyr.coeff = ch.v;

    int w = ch.width, h = ch.height;
    std::vector<int32_t> line(static_cast<size_t>(std::max(w, h)));
    std::vector<int32_t> out(line.size());
    for (int l = 0; l < levels; ++l) {
        for (int y = 0; y < h; ++y) {
            lift_forward(&pyr.coeff[static_cast<size_t>(y) * pyr.width], w, 1, out.data());
            std::copy_n(out.data(), w, &pyr.coeff[static_cast<size_t>(y) * pyr.width]);
        }
        for (int x = 0; x < w; ++x) {
            lift_forward(&pyr.coeff[x], h, pyr.width, out.data());
            for (int y = 0; y < h; ++y)
                pyr.coeff[static_cast<size_t>(y) * pyr.width + x] = out[y];
        }
        w = (w + 1) / 2;
        h = (h + 1) / 2;
    }
    return pyr;
}

IntChannel iwt_inverse(const IwtPyramid& pyr) {
    if (pyr.levels < 1 || pyr.width <= 0 || pyr.height <= 0 ||
        pyr.coeff.size() != static_cast<size_t>(pyr.width) * pyr.height)
        throw parse_error("iwt: malformed pyramid");
    IntChannel ch(pyr.width, pyr.height);
    ch.v = pyr.coeff;

    std::vector<int> ws(pyr.levels + 1), hs(pyr.levels + 1);
    ws[0] = pyr.width;
    hs[0] = pyr.height;
    for (int l = 1; l <= pyr.levels; ++l) {
        ws[l] = (ws[l - 1] + 1) / 2;
        hs[l] = (hs[l - 1] + 1) / 2;
    }

    std::vector<int32_t> in(static_cast<size_t>(std::max(pyr.width, pyr.height)));
    for (int l = pyr.levels - 1; l >= 0; --l) {
        const int w = ws[l], h = hs[l];
        for (int x = 0; x < w; ++x) {
            for (int y = 0; y < h; ++y) in[y] = ch.v[static_cast<size_t>(y) * ch.width + x];
            lift_inverse(in.data(), h, &ch.v[x], ch.width);
        }
        for (int y = 0; y < h; ++y) {
            std::copy_n(&ch.v[static_cast<size_t>(y) * ch.width], w, in.data());
            lift_inverse(in.data(), w, &ch.v[static_cast<size_t>(y) * ch.width], 1);
        }
    }
    return ch;
}

}  // namespace stego
