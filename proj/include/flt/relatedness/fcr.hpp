#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "flt/data/dataset.hpp"
#include "flt/nn/encoder.hpp"
#include "flt/relatedness/graph.hpp"
#include "flt/relatedness/umap.hpp"

namespace flt::relatedness {

// Encodes the client's training samples and returns k-means centroids.
// k is clamped to the sample count.
Signature client_signature(const nn::EncoderHandle& encoder, const data::ClientDataset& client, std::size_t k,
                           std::uint64_t seed);

enum class FcrMode { normal, finetune };
enum class Embedder { umap, pca };

struct FcrOptions {
  std::size_t k = 5;
  UmapParams umap;
  double gamma = 1.0;
  std::optional<std::size_t> C;  // absent: automatic cluster count
  FcrMode mode = FcrMode::normal;
  nn::FinetuneOptions finetune;
  Embedder embedder = Embedder::umap;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
};

struct FcrResult {
  RelatednessGraph graph;
  std::vector<Signature> signatures;
  Points embedding;  // pooled centroids after UMAP or PCA, client-major
};

// One-shot relatedness estimation. Fine-tune mode adapts `autoencoder` on each
// client before encoding and requires it to be non-null. Clustering runs Ward
// on the raw distances A; A_tilde is used for aggregation only.
FcrResult run_fcr(const std::vector<data::ClientDataset>& clients, const nn::EncoderHandle& encoder,
                  const FcrOptions& options, const nn::Autoencoder* autoencoder = nullptr);

}  // namespace flt::relatedness
