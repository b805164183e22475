#pragma once

#include <cstddef>
#include <cstdint>

#include "flt/data/dataset.hpp"
#include "flt/nn/architectures.hpp"
#include "flt/nn/model.hpp"

namespace flt::nn {

// Encoder half of an autoencoder; maps one sample to a latent_dim vector.
struct EncoderHandle {
  Model model;
  std::size_t latent_dim = 0;
};

// Zero-layer encoder: the latent vector is the flattened sample.
EncoderHandle identity_encoder(const Shape& input_shape);
EncoderHandle make_encoder(const Autoencoder& ae);

// Latent vectors, one row per sample: shape (|data|, latent_dim).
Tensor encode(const EncoderHandle& encoder, const data::Dataset& data);

struct FinetuneOptions {
  std::size_t epochs = 5;
  double lr = 0.01;
  std::size_t batch_size = 10;
  std::uint64_t seed = 0;
};

// Unsupervised MSE reconstruction training; labels are ignored.
// Throws ShapeError unless the model's output shape equals its input shape.
Model finetune_autoencoder(Model ae, const data::Dataset& data, const FinetuneOptions& options);

}  // namespace flt::nn
