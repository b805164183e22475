#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "flt/nn/model.hpp"

namespace flt::nn {

// Checkpoint layout (all integers and reals little-endian):
//   8 bytes   magic "FLTCKPT1"
//   u32       header length H
//   H bytes   architecture JSON (architecture_to_json)
//   u64       parameter count P
//   P x f64   flattened parameters (flatten_params order)
void save_checkpoint(const std::filesystem::path& path, const Model& model);
Model load_checkpoint(const std::filesystem::path& path);

std::vector<unsigned char> encode_checkpoint(const Model& model);
Model decode_checkpoint(std::span<const unsigned char> bytes);

}  // namespace flt::nn
