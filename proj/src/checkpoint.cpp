#include "sdo/checkpoint.hpp"

#include <cstring>
#include <fstream>

#include "sdo/errors.hpp"
#include "sdo/plasticity.hpp"

namespace sdo {

namespace {

constexpr char kMagic[4] = {'S', 'D', 'W', '1'};

void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

std::uint32_t get_u32le(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint32_t>(b[at]) |
           (static_cast<std::uint32_t>(b[at + 1]) << 8) |
           (static_cast<std::uint32_t>(b[at + 2]) << 16) |
           (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

}  // namespace

std::vector<std::uint8_t> checkpoint_bytes(const SynapseMatrix& w) {
    std::vector<std::uint8_t> out;
    out.reserve(12 + w.exc.size() + w.inh.size());
    out.insert(out.end(), kMagic, kMagic + 4);
    put_u32le(out, w.n_inputs);
    put_u32le(out, w.n_outputs);
    out.insert(out.end(), w.exc.begin(), w.exc.end());
    out.insert(out.end(), w.inh.begin(), w.inh.end());
    return out;
}

SynapseMatrix parse_checkpoint(std::span<const std::uint8_t> bytes,
                               double unit_current) {
    if (bytes.size() < 12) throw CheckpointError("checkpoint: truncated header");
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw CheckpointError("checkpoint: bad magic");
    }
    SynapseMatrix w;
    w.n_inputs = get_u32le(bytes, 4);
    w.n_outputs = get_u32le(bytes, 8);
    w.unit_current = unit_current;
    const std::size_t n = static_cast<std::size_t>(w.n_inputs) * w.n_outputs;
    if (w.n_inputs == 0 || w.n_outputs == 0 || bytes.size() != 12 + 2 * n) {
        throw CheckpointError("checkpoint: size does not match header shape");
    }
    w.exc.assign(bytes.begin() + 12, bytes.begin() + 12 + n);
    w.inh.assign(bytes.begin() + 12 + n, bytes.end());
    for (std::size_t k = 0; k < n; ++k) {
        if (w.exc[k] > kLevelMax || w.inh[k] > kLevelMax) {
            throw CheckpointError("checkpoint: weight level out of [0, 15]");
        }
    }
    return w;
}

void save_checkpoint(const SynapseMatrix& w, const std::string& path) {
    const auto bytes = checkpoint_bytes(w);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw CheckpointError("checkpoint: cannot open for writing: " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) throw CheckpointError("checkpoint: write failed: " + path);
}

SynapseMatrix load_checkpoint(const std::string& path, double unit_current) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw CheckpointError("checkpoint: cannot open: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    return parse_checkpoint(bytes, unit_current);
}

}  // namespace sdo
