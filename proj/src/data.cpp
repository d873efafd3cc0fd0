#include "sdo/data.hpp"

#include <zlib.h>

#include <fstream>
#include <numeric>

#include "sdo/errors.hpp"
#include "sdo/seed.hpp"

namespace sdo {

namespace {

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;

std::uint32_t get_u32be(std::span<const std::uint8_t> b, std::size_t at) {
    return (static_cast<std::uint32_t>(b[at]) << 24) |
           (static_cast<std::uint32_t>(b[at + 1]) << 16) |
           (static_cast<std::uint32_t>(b[at + 2]) << 8) |
           static_cast<std::uint32_t>(b[at + 3]);
}

void put_u32be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

}  // namespace

Dataset load_idx(std::span<const std::uint8_t> image_bytes,
                 std::span<const std::uint8_t> label_bytes,
                 std::optional<IdxDims> expect) {
    if (image_bytes.size() < 16) throw DataError("idx: image header truncated");
    if (label_bytes.size() < 8) throw DataError("idx: label header truncated");
    if (get_u32be(image_bytes, 0) != kImageMagic) {
        throw DataError("idx: bad image magic");
    }
    if (get_u32be(label_bytes, 0) != kLabelMagic) {
        throw DataError("idx: bad label magic");
    }
    const std::uint32_t n_images = get_u32be(image_bytes, 4);
    const std::uint32_t rows = get_u32be(image_bytes, 8);
    const std::uint32_t cols = get_u32be(image_bytes, 12);
    const std::uint32_t n_labels = get_u32be(label_bytes, 4);
    if (rows == 0 || cols == 0) throw DataError("idx: zero image dimension");
    if (expect && (rows != expect->rows || cols != expect->cols)) {
        throw DataError("idx: unexpected image dimensions");
    }
    if (n_images != n_labels) throw DataError("idx: image/label count mismatch");
    const std::size_t payload =
        static_cast<std::size_t>(n_images) * rows * cols;
    if (image_bytes.size() != 16 + payload) {
        throw DataError("idx: image payload size mismatch");
    }
    if (label_bytes.size() != 8 + static_cast<std::size_t>(n_labels)) {
        throw DataError("idx: label payload size mismatch");
    }
    Dataset d;
    d.rows = rows;
    d.cols = cols;
    d.pixels.assign(image_bytes.begin() + 16, image_bytes.end());
    d.labels.assign(label_bytes.begin() + 8, label_bytes.end());
    return d;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot open file: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

bool looks_gzip(std::span<const std::uint8_t> bytes) {
    return bytes.size() >= 2 && bytes[0] == 0x1F && bytes[1] == 0x8B;
}

std::vector<std::uint8_t> gunzip(std::span<const std::uint8_t> bytes) {
    z_stream strm{};
    if (inflateInit2(&strm, 16 + MAX_WBITS) != Z_OK) {
        throw DataError("gunzip: inflateInit failed");
    }
    std::vector<std::uint8_t> out;
    out.reserve(bytes.size() * 4);
    std::uint8_t buf[1 << 16];
    strm.next_in = const_cast<std::uint8_t*>(bytes.data());
    strm.avail_in = static_cast<uInt>(bytes.size());
    int rc = Z_OK;
    while (rc != Z_STREAM_END) {
        strm.next_out = buf;
        strm.avail_out = sizeof(buf);
        rc = inflate(&strm, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END) {
            inflateEnd(&strm);
            throw DataError("gunzip: corrupt gzip stream");
        }
        out.insert(out.end(), buf, buf + (sizeof(buf) - strm.avail_out));
        if (rc == Z_OK && strm.avail_in == 0 && strm.avail_out != 0) {
            inflateEnd(&strm);
            throw DataError("gunzip: truncated gzip stream");
        }
    }
    inflateEnd(&strm);
    return out;
}

Dataset load_idx_files(const std::string& image_path, const std::string& label_path,
                       std::optional<IdxDims> expect) {
    auto img = read_file(image_path);
    auto lbl = read_file(label_path);
    if (looks_gzip(img)) img = gunzip(img);
    if (looks_gzip(lbl)) lbl = gunzip(lbl);
    return load_idx(img, lbl, expect);
}

std::vector<std::uint8_t> idx_image_bytes(const Dataset& d) {
    std::vector<std::uint8_t> out;
    out.reserve(16 + d.pixels.size());
    put_u32be(out, kImageMagic);
    put_u32be(out, static_cast<std::uint32_t>(d.size()));
    put_u32be(out, d.rows);
    put_u32be(out, d.cols);
    out.insert(out.end(), d.pixels.begin(), d.pixels.end());
    return out;
}

std::vector<std::uint8_t> idx_label_bytes(const Dataset& d) {
    std::vector<std::uint8_t> out;
    out.reserve(8 + d.labels.size());
    put_u32be(out, kLabelMagic);
    put_u32be(out, static_cast<std::uint32_t>(d.size()));
    out.insert(out.end(), d.labels.begin(), d.labels.end());
    return out;
}

SplitIndices split_80_20(std::size_t n, std::uint64_t seed) {
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    SplitMix64 g{derive_seed(seed, seed_stream::kSplit, 0)};
    // Fisher-Yates with splitmix draws; modulo bias is < 2^-32 for any
    // realistic dataset size.
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(g.next() % i);
        std::swap(order[i - 1], order[j]);
    }
    SplitIndices s;
    const std::size_t n_train = (n * 8 + 5) / 10;  // round to nearest
    s.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
    s.test.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
    return s;
}

}  // namespace sdo
