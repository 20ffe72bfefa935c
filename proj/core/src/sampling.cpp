#include "qw22/sampling.hpp"

#include <algorithm>
#include <vector>

namespace qw22 {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<Power> random_block(Rng& rng, std::int64_t max_factors,
                                std::int64_t max_index) {
  std::vector<std::int64_t> idx(static_cast<std::size_t>(uniform(rng, 0, max_factors)));
  for (auto& i : idx) i = uniform(rng, -max_index, max_index);
  std::sort(idx.begin(), idx.end());
  std::vector<Power> block;
  for (const auto i : idx) {
    if (!block.empty() && block.back().index == i) {
      ++block.back().mult;
    } else {
      block.push_back({i, 1});
    }
  }
  return block;
}

}  // namespace

GeneratorSymbol random_generator(Rng& rng, std::int64_t max_index, bool torus) {
  const std::int64_t kind = uniform(rng, torus ? 0 : 2, 3);
  switch (kind) {
    case 0:
      return GeneratorSymbol::T();
    case 1:
      return GeneratorSymbol::Tinv();
    case 2:
      return GeneratorSymbol::L(uniform(rng, -max_index, max_index));
    default:
      return GeneratorSymbol::W(uniform(rng, -max_index, max_index));
  }
}

Word random_word(Rng& rng, const WordShape& shape) {
  Word w(static_cast<std::size_t>(uniform(rng, 1, std::max<std::int64_t>(1, shape.max_len))));
  for (auto& g : w) g = random_generator(rng, shape.max_index, shape.torus);
  return w;
}

NormalWord random_normal_word(Rng& rng, const NormalWordShape& shape) {
  NormalWord w;
  w.t_exp = uniform(rng, -shape.max_t, shape.max_t);
  w.l_block = random_block(rng, shape.max_l, shape.max_index);
  w.w_block = random_block(rng, shape.max_w, shape.max_index);
  return w;
}

Element random_element(Rng& rng, const WordShape& shape, Deformation profile) {
  WordShape s = shape;
  if (profile == Deformation::generalized) s.torus = false;
  return normalize(random_word(rng, s), profile);
}

}  // namespace qw22
