#pragma once

#include <cstdint>
#include <vector>

#include "salpart/saliency_map.hpp"

namespace salpart {

struct Blob {
  double center_row = 0.0;
  double center_col = 0.0;
  double sigma = 1.0;
  double amplitude = 1.0;
};

/// Sum of isotropic Gaussian bumps, clipped to [0, 1].
SaliencyMap synth_blobs(std::size_t rows, std::size_t cols,
                        const std::vector<Blob>& blobs);

/// Deterministic multi-blob scene over a faint noise floor, used by the
/// benchmark and the scaling tests.
SaliencyMap random_scene(std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace salpart
