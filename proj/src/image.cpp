#include "stego/image.hpp"

#include <algorithm>
#include <fstream>

#include "stego/common.hpp"

namespace stego {

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
bool next_token(const std::vector<uint8_t>& bytes, size_t& pos, std::string& tok) {
    tok.clear();
    while (pos < bytes.size()) {
        const char c = static_cast<char>(bytes[pos]);
        if (c == '#') {
            while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++pos;
        } else {
            break;
        }
    }
    while (pos < bytes.size()) {
        const char c = static_cast<char>(bytes[pos]);
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '#') break;
        tok.push_back(c);
        ++pos;
    }
    return !tok.empty();
}

int parse_dim(const std::string& tok, const char* what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error(std::string("malformed header: bad ") + what);
    long v = std::stol(tok);
    if (v <= 0 || v > 1 << 20) throw parse_error(std::string("malformed header: bad ") + what);
    return static_cast<int>(v);
}

}  // namespace

Image load_image(const std::vector<uint8_t>& bytes) {
    size_t pos = 0;
    std::string tok;
    if (!next_token(bytes, pos, tok)) throw parse_error("malformed header: empty image");
    int channels;
    if (tok == "P5") channels = 1;
    else if (tok == "P6") channels = 3;
    else throw parse_error("malformed header: expected P5 or P6 magic");

    if (!next_token(bytes, pos, tok)) throw parse_error("malformed header: missing width");
    const int width = parse_dim(tok, "width");
    if (!next_token(bytes, pos, tok)) throw parse_error("malformed header: missing height");
    const int height = parse_dim(tok, "height");
    if (!next_token(bytes, pos, tok)) throw parse_error("malformed header: missing maxval");
    if (tok != "255") throw parse_error("unsupported maxval: " + tok);

    // Exactly one whitespace byte separates the header from the raster.
    if (pos >= bytes.size()) throw parse_error("truncated data: no raster");
    ++pos;

    Image img(width, height, channels);
    if (bytes.size() - pos < img.size()) throw parse_error("truncated data: raster too short");
    std::copy_n(bytes.begin() + static_cast<long>(pos), img.size(), img.data.begin());
    return img;
}

std::vector<uint8_t> save_image(const Image& img, ImageFormat format) {
    if (img.width <= 0 || img.height <= 0 ||
        img.data.size() != static_cast<size_t>(img.width) * img.height * img.channels)
        throw parse_error("invalid image");
    if (format == ImageFormat::Pgm && img.channels != 1)
        throw parse_error("channel/format mismatch: PGM requires 1 channel");
    if (format == ImageFormat::Ppm && img.channels != 3)
        throw parse_error("channel/format mismatch: PPM requires 3 channels");

    std::string header = (format == ImageFormat::Pgm ? "P5 " : "P6 ");
    header += std::to_string(img.width) + " " + std::to_string(img.height) + " 255\n";

    std::vector<uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.data.begin(), img.data.end());
    return out;
}

Image load_image_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open image file: " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    return load_image(bytes);
}

void save_image_file(const Image& img, const std::string& path) {
    const auto bytes =
        save_image(img, img.channels == 1 ? ImageFormat::Pgm : ImageFormat::Ppm);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write image file: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw parse_error("cannot write image file: " + path);
}

BlockGrid split_blocks(const Image& img, int block_size) {
    if (block_size < 2) throw parse_error("block_size must be >= 2");
    BlockGrid g;
    g.block_size = block_size;
    g.width = img.width;
    g.height = img.height;
    g.channels = img.channels;
    g.cols = (img.width + block_size - 1) / block_size;
    g.rows = (img.height + block_size - 1) / block_size;
    g.pad_right = g.cols * block_size - img.width;
    g.pad_bottom = g.rows * block_size - img.height;
    g.blocks.reserve(static_cast<size_t>(g.cols) * g.rows * img.channels);

    for (int c = 0; c < img.channels; ++c) {
        for (int br = 0; br < g.rows; ++br) {
            for (int bc = 0; bc < g.cols; ++bc) {
                std::vector<uint8_t> block(static_cast<size_t>(block_size) * block_size);
                for (int y = 0; y < block_size; ++y) {
                    // replicate edge pixels into the padding
                    const int sy = std::min(br * block_size + y, img.height - 1);
                    for (int x = 0; x < block_size; ++x) {
                        const int sx = std::min(bc * block_size + x, img.width - 1);
                        block[static_cast<size_t>(y) * block_size + x] = img.at(sx, sy, c);
                    }
                }
                g.blocks.push_back(std::move(block));
            }
        }
    }
    return g;
}

Image merge_blocks(const BlockGrid& g) {
    const size_t expected = static_cast<size_t>(g.cols) * g.rows * g.channels;
    if (g.blocks.size() != expected) throw parse_error("inconsistent block count");
    Image img(g.width, g.height, g.channels);
    for (int c = 0; c < g.channels; ++c) {
        for (int br = 0; br < g.rows; ++br) {
            for (int bc = 0; bc < g.cols; ++bc) {
                const auto& block =
                    g.blocks[(static_cast<size_t>(c) * g.rows + br) * g.cols + bc];
                for (int y = 0; y < g.block_size; ++y) {
                    const int sy = br * g.block_size + y;
                    if (sy >= g.height) break;
                    for (int x = 0; x < g.block_size; ++x) {
                        const int sx = bc * g.block_size + x;
                        if (sx >= g.width) break;
                        img.at(sx, sy, c) = block[static_cast<size_t>(y) * g.block_size + x];
                    }
                }
            }
        }
    }
    return img;
}

std::pair<Image, HistogramMap> histogram_modify(const Image& img, int guard) {
    if (guard <= 0 || guard > 16) throw parse_error("guard must be in (0,16]");
    Image out = img;
    HistogramMap map;
    map.guard = static_cast<uint8_t>(guard);
    const uint8_t lo = static_cast<uint8_t>(guard);
    const uint8_t hi = static_cast<uint8_t>(255 - guard);
    for (size_t i = 0; i < out.data.size(); ++i) {
        const uint8_t v = out.data[i];
        if (v < lo) {
            map.relocated.emplace_back(static_cast<uint32_t>(i), v);
            out.data[i] = lo;
        } else if (v > hi) {
            map.relocated.emplace_back(static_cast<uint32_t>(i), v);
            out.data[i] = hi;
        }
    }
    return {std::move(out), std::move(map)};
}

Image histogram_restore(const Image& img, const HistogramMap& map) {
    Image out = img;
    for (const auto& [idx, value] : map.relocated) {
        if (idx >= out.data.size()) throw parse_error("histogram map index out of range");
        out.data[idx] = value;
    }
    return out;
}

}  // namespace stego
