#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "flt/data/dataset.hpp"
#include "flt/error.hpp"

namespace flt::data {

class IdxError : public FormatError {
 public:
  enum class Kind { bad_magic, truncated, count_mismatch };
  IdxError(const std::string& what, Kind kind) : FormatError(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;

// Images become sample_shape {rows, cols} with bytes scaled by 1/255;
// num_classes is max label + 1.
Dataset parse_idx(std::span<const std::uint8_t> images, std::span<const std::uint8_t> labels);
Dataset load_idx(const std::filesystem::path& images_path, const std::filesystem::path& labels_path);

// Inverse of parse_idx for 2-D samples with values in [0,1]; used for fixtures.
std::vector<std::uint8_t> encode_idx_images(const Dataset& data);
std::vector<std::uint8_t> encode_idx_labels(const Dataset& data);

}  // namespace flt::data
