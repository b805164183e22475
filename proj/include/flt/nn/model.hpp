#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "flt/nn/tensor.hpp"
#include "flt/random.hpp"

namespace flt::nn {

// Fully connected layer. Any per-sample input shape whose element count is
// `in` is accepted and flattened.
struct Dense {
  std::size_t in = 0;
  std::size_t out = 0;
  bool bias = true;
  friend bool operator==(const Dense&, const Dense&) = default;
};

// NCHW convolution, square kernel, zero padding.
struct Conv2d {
  std::size_t in_channels = 0;
  std::size_t out_channels = 0;
  std::size_t kernel = 3;
  std::size_t stride = 1;
  std::size_t padding = 0;
  friend bool operator==(const Conv2d&, const Conv2d&) = default;
};

// Transposed convolution without padding: H_out = (H - 1) * stride + kernel.
struct ConvTranspose2d {
  std::size_t in_channels = 0;
  std::size_t out_channels = 0;
  std::size_t kernel = 2;
  std::size_t stride = 2;
  friend bool operator==(const ConvTranspose2d&, const ConvTranspose2d&) = default;
};

struct MaxPool2d {
  std::size_t kernel = 2;
  std::size_t stride = 2;
  friend bool operator==(const MaxPool2d&, const MaxPool2d&) = default;
};

enum class ActivationKind { relu, sigmoid, tanh };

struct Activation {
  ActivationKind kind = ActivationKind::relu;
  friend bool operator==(const Activation&, const Activation&) = default;
};

// Inverted dropout; identity in eval mode.
struct Dropout {
  double p = 0.5;
  friend bool operator==(const Dropout&, const Dropout&) = default;
};

// Per-sample reshape (the batch axis is kept).
struct Reshape {
  Shape shape;
  friend bool operator==(const Reshape&, const Reshape&) = default;
};

struct Flatten {
  friend bool operator==(const Flatten&, const Flatten&) = default;
};

using Layer = std::variant<Dense, Conv2d, ConvTranspose2d, MaxPool2d, Activation, Dropout, Reshape, Flatten>;

std::string layer_name(const Layer& layer);

// Per-sample output shape of `layer` given its per-sample input shape.
// Throws ShapeError naming the layer index on mismatch.
Shape layer_output_shape(const Layer& layer, const Shape& input, std::size_t index);

// Weight and bias of one layer; both empty for parameter-free layers.
struct LayerParams {
  Tensor weight;
  Tensor bias;
  friend bool operator==(const LayerParams&, const LayerParams&) = default;
};

enum class Mode { train, eval };

class Model {
 public:
  Model() = default;
  // Validates the shape chain and allocates zero parameters.
  Model(Shape input_shape, std::vector<Layer> layers);

  const Shape& input_shape() const noexcept { return input_shape_; }
  const Shape& output_shape() const noexcept { return shapes_.back(); }
  // Per-sample shape entering layer i (i == layers().size() gives the output).
  const Shape& shape_at(std::size_t i) const { return shapes_.at(i); }

  const std::vector<Layer>& layers() const noexcept { return layers_; }
  const std::vector<LayerParams>& params() const noexcept { return params_; }
  std::vector<LayerParams>& params() noexcept { return params_; }
  std::size_t parameter_count() const;

  Mode mode() const noexcept { return mode_; }
  void set_mode(Mode mode) noexcept { mode_ = mode; }

  // Layers [0, n) with their parameters, e.g. the encoder half of an autoencoder.
  Model prefix(std::size_t n) const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  Shape input_shape_;
  std::vector<Layer> layers_;
  std::vector<Shape> shapes_{Shape{}};
  std::vector<LayerParams> params_;
  Mode mode_ = Mode::eval;
};

// Glorot-uniform weights, zero biases.
void init_glorot(Model& model, std::uint64_t seed);

std::vector<double> flatten_params(const Model& model);
// Returns `model` with parameters replaced by `values` (length must equal parameter_count()).
Model unflatten_params(Model model, std::span<const double> values);
void assign_params(Model& model, std::span<const double> values);

// Activations recorded during a forward pass, consumed by backward().
struct Trace {
  std::vector<Tensor> inputs;                    // input to each layer, then the final output
  std::vector<std::vector<std::size_t>> argmax;  // max-pool winners per layer
  std::vector<std::vector<double>> masks;        // dropout scale per layer
};

// Batch tensors carry a leading batch axis followed by the model's per-sample shape.
// Dropout is active only when model.mode() == Mode::train and `rng` is non-null.
Tensor forward(const Model& model, const Tensor& batch, Rng* rng = nullptr, Trace* trace = nullptr);

struct Gradients {
  std::vector<LayerParams> params;
  Tensor input;
};

// Backpropagates `grad_output` (dL/d output) through the recorded trace.
Gradients backward(const Model& model, const Trace& trace, const Tensor& grad_output);

// Row-wise softmax over the last axis of a (batch, classes) tensor.
Tensor softmax(const Tensor& logits);

}  // namespace flt::nn
