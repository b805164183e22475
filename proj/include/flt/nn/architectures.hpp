#pragma once

#include <cstddef>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "flt/nn/model.hpp"

namespace flt::nn {

// An autoencoder whose first `encoder_layers` layers map inputs to a
// `latent_dim`-vector.
struct Autoencoder {
  Model model;
  std::size_t encoder_layers = 0;
  std::size_t latent_dim = 0;
};

// dense(in -> hidden) relu dropout(p) dense(hidden -> classes).
Model mlp(const Shape& input_shape, std::size_t classes, std::size_t hidden = 200, double dropout = 0.5);

// Two 5x5 conv + pool stages followed by two dense layers. Inputs are (C, H, W).
Model small_cnn(const Shape& input_shape, std::size_t classes, std::size_t channels1 = 32,
                std::size_t channels2 = 64, std::size_t hidden = 2048);

// Convolutional autoencoder for (1, H, W) images with H, W divisible by 4:
//   conv(1->16, 3) relu pool conv(16->4, 3) relu pool flatten dense(4*H*W/16 -> latent)
//   | dense(latent -> 4*H*W/16) relu reshape convT(4->16, 2, s2) relu convT(16->1, 2, s2) sigmoid
// For 28x28 inputs and latent 128 this has 51,577 parameters.
Autoencoder conv_autoencoder(const Shape& input_shape, std::size_t latent = 128);

// dense(d -> hidden) relu dense(hidden -> latent) | dense(latent -> hidden) relu dense(hidden -> d).
Autoencoder dense_autoencoder(const Shape& input_shape, std::size_t latent, std::size_t hidden = 64);

// Declarative architecture description.
//   {"input_shape": [...], "layers": [{"type": "dense", "in": 4, "out": 2}, ...]}
// When read back, "in"/"in_channels" may be omitted and are inferred from the
// previous layer.
nlohmann::json architecture_to_json(const Model& model);
Model model_from_json(const nlohmann::json& arch, const Shape& input_shape = {});

}  // namespace flt::nn
