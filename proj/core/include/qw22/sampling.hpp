#pragma once

// Seeded random generators for words, basis monomials and elements.

#include <cstdint>
#include <random>

#include "qw22/algebra.hpp"

namespace qw22 {

using Rng = std::mt19937_64;

struct WordShape {
  std::int64_t max_len = 3;    // length drawn from [1, max_len]
  std::int64_t max_index = 4;  // indices drawn from [-max_index, max_index]
  bool torus = true;           // allow T and T^-1
};

GeneratorSymbol random_generator(Rng& rng, std::int64_t max_index, bool torus);
Word random_word(Rng& rng, const WordShape& shape);

struct NormalWordShape {
  std::int64_t max_t = 3;  // |d| <= max_t
  std::int64_t max_l = 4;  // up to max_l L-factors, counted with multiplicity
  std::int64_t max_w = 4;
  std::int64_t max_index = 6;
};

NormalWord random_normal_word(Rng& rng, const NormalWordShape& shape);

/// normalize(random_word) under the given deformation.
Element random_element(Rng& rng, const WordShape& shape,
                       Deformation profile = Deformation::standard);

}  // namespace qw22
