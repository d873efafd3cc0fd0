#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sdo {

// Image/label pairs as parsed from the classic IDX container.
struct Dataset {
    std::uint32_t rows = 28;
    std::uint32_t cols = 28;
    std::vector<std::uint8_t> pixels;  // size() * rows * cols, images back to back
    std::vector<std::uint8_t> labels;

    std::size_t size() const { return labels.size(); }
    std::size_t image_len() const {
        return static_cast<std::size_t>(rows) * cols;
    }
    std::span<const std::uint8_t> image(std::size_t i) const {
        return {pixels.data() + i * image_len(), image_len()};
    }
};

struct IdxDims {
    std::uint32_t rows = 28;
    std::uint32_t cols = 28;
};

// Parses an IDX image/label pair (big-endian magics 0x00000803 and
// 0x00000801). `expect`, when set, rejects any other image dimensions;
// pass std::nullopt to accept whatever the header declares.
// Throws DataError on bad magic, truncation, dimension or count mismatch.
Dataset load_idx(std::span<const std::uint8_t> image_bytes,
                 std::span<const std::uint8_t> label_bytes,
                 std::optional<IdxDims> expect = IdxDims{});

// Reads both files, transparently gunzipping gzip payloads.
Dataset load_idx_files(const std::string& image_path, const std::string& label_path,
                       std::optional<IdxDims> expect = IdxDims{});

std::vector<std::uint8_t> read_file(const std::string& path);
bool looks_gzip(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> gunzip(std::span<const std::uint8_t> bytes);

// Exact inverses of load_idx; serializing a parsed Dataset reproduces the
// original IDX bytes bit for bit.
std::vector<std::uint8_t> idx_image_bytes(const Dataset& d);
std::vector<std::uint8_t> idx_label_bytes(const Dataset& d);

// Seeded randomized 80/20 split (indices into a dataset).
struct SplitIndices {
    std::vector<std::uint32_t> train;
    std::vector<std::uint32_t> test;
};
SplitIndices split_80_20(std::size_t n, std::uint64_t seed);

}  // namespace sdo
