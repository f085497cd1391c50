// Raster image type, PGM/PPM codec, 8x8 block tiling and the reversible
// histogram boundary narrowing used as embedding pre-processing.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stego {

// 8-bit raster, row-major, interleaved channels (1 = gray, 3 = RGB).
struct Image {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<uint8_t> data;

    Image() = default;
    Image(int w, int h, int c, uint8_t fill = 0)
        : width(w), height(h), channels(c),
          data(static_cast<size_t>(w) * h * c, fill) {}

    size_t size() const { return data.size(); }
    size_t pixel_count() const { return static_cast<size_t>(width) * height; }

    uint8_t& at(int x, int y, int c = 0) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    uint8_t at(int x, int y, int c = 0) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    bool same_shape(const Image& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
    bool operator==(const Image& o) const {
        return same_shape(o) && data == o.data;
    }
};

enum class ImageFormat { Pgm, Ppm };

// Binary PGM (P5) / PPM (P6), maxval 255. Reader tolerates '#' comments;
// writer emits the canonical single-space header "P5 w h 255\n".
Image load_image(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> save_image(const Image& img, ImageFormat format);

Image load_image_file(const std::string& path);
void save_image_file(const Image& img, const std::string& path);

// 8x8 tiling with edge-replication padding on ragged borders.
struct BlockGrid {
    int block_size = 8;
    int width = 0, height = 0, channels = 0;  // source dims
    int cols = 0, rows = 0;                   // grid shape per channel
    int pad_right = 0, pad_bottom = 0;
    // blocks[c * rows*cols + row*cols + col], each block_size^2 values row-major
    std::vector<std::vector<uint8_t>> blocks;
};

BlockGrid split_blocks(const Image& img, int block_size = 8);
Image merge_blocks(const BlockGrid& grid);

// Reversible record of boundary pixels moved into [guard, 255-guard].
struct HistogramMap {
    uint8_t guard = 0;
    std::vector<std::pair<uint32_t, uint8_t>> relocated;  // (flat index, original)
};

std::pair<Image, HistogramMap> histogram_modify(const Image& img, int guard);
Image histogram_restore(const Image& img, const HistogramMap& map);

}  // namespace stego
