#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sdo/network.hpp"

namespace sdo {

// Versioned flat binary weight snapshot:
//   magic "SDW1",
//   n_inputs  (u32, little-endian),
//   n_outputs (u32, little-endian),
//   exc levels row-major (one byte each),
//   inh levels row-major.
// Round-trips bit-exactly.

std::vector<std::uint8_t> checkpoint_bytes(const SynapseMatrix& w);

// unit_current is not part of the format; the caller supplies it.
SynapseMatrix parse_checkpoint(std::span<const std::uint8_t> bytes,
                               double unit_current = 1.0);

void save_checkpoint(const SynapseMatrix& w, const std::string& path);
SynapseMatrix load_checkpoint(const std::string& path, double unit_current = 1.0);

}  // namespace sdo
