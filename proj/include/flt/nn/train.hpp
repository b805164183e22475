#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "flt/data/dataset.hpp"
#include "flt/nn/model.hpp"

namespace flt::nn {

enum class Loss { cross_entropy, mse };

struct LossValue {
  double value = 0.0;
  Tensor grad;  // dL/d output
};

// Mean softmax cross-entropy over the batch.
LossValue cross_entropy_loss(const Tensor& logits, std::span<const int> labels);
// Mean squared error over all elements (no 1/2 factor).
LossValue mse_loss(const Tensor& output, const Tensor& target);

// `labels` feed cross-entropy; `targets` feed MSE (an empty target means
// reconstruct the inputs).
struct Batch {
  Tensor inputs;
  std::vector<int> labels;
  Tensor targets;
};

Batch make_batch(const data::Dataset& data, std::span<const std::size_t> indices);

// Loss and parameter gradients at the current parameters. Dropout is active
// only if the model is in train mode and `rng` is given.
double loss_and_gradients(const Model& model, const Batch& batch, Loss loss, std::vector<LayerParams>* grads,
                          Rng* rng = nullptr);

// One full-batch gradient step in place; returns the pre-step loss.
// Throws NumericError naming the layer when a loss or gradient is non-finite.
double apply_sgd_step(Model& model, const Batch& batch, double lr, Loss loss, Rng& rng);

struct StepResult {
  Model model;
  double loss = 0.0;
};

StepResult sgd_step(Model model, const Batch& batch, double lr, Loss loss, std::uint64_t seed = 0);

struct TrainOptions {
  std::size_t epochs = 5;
  std::size_t batch_size = 10;
  double lr = 0.01;
  std::uint64_t seed = 0;
  Loss loss = Loss::cross_entropy;
};

// E epochs of mini-batch SGD with a reshuffle per epoch from `options.seed`.
Model train_local(Model model, const data::Dataset& data, const TrainOptions& options);

// Argmax class predictions, evaluated in batches.
std::vector<int> predict(const Model& model, const data::Dataset& data);
double accuracy(const Model& model, const data::Dataset& data);
double mean_loss(const Model& model, const data::Dataset& data, Loss loss);

}  // namespace flt::nn
