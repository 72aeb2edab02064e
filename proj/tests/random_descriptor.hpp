#pragma once

// Random descriptor ASTs for round-trip properties.

#include <random>

#include "cyclo/descriptor.hpp"

namespace testing {

using K = cyclo::DescriptorKind;

inline cyclo::GroupDescriptor make_leaf(K kind, std::uint64_t param,
                                       std::uint64_t exponent = 1) {
  return {kind, param, exponent, std::nullopt, {}};
}

inline cyclo::GroupDescriptor make_node(K kind,
                                       std::vector<cyclo::GroupDescriptor> children,
                                       std::optional<std::uint64_t> z = std::nullopt) {
  return {kind, 1, 1, z, std::move(children)};
}

class RandomDescriptor {
 public:
  explicit RandomDescriptor(std::uint64_t seed) : rng_(seed) {}

  cyclo::GroupDescriptor operator()(int depth = 3) {
    const int pick = uniform(0, depth > 0 ? 13 : 9);
    switch (pick) {
      case 0: return make_leaf(K::cyclic, uniform(1, 64));
      case 1: return make_leaf(K::cyclic_power, uniform(1, 16), uniform(2, 5));
      case 2: return make_leaf(K::dihedral, std::uint64_t{1} << uniform(3, 8));
      case 3: return make_leaf(K::quaternion, std::uint64_t{1} << uniform(3, 8));
      case 4: return make_leaf(K::quasi_dihedral, std::uint64_t{1} << uniform(4, 8));
      case 5: return make_leaf(K::modular, std::uint64_t{1} << uniform(4, 8));
      case 6: return make_leaf(K::extraspecial_plus, std::uint64_t{1} << (2 * uniform(1, 4) + 1));
      case 7: return make_leaf(K::extraspecial_minus, std::uint64_t{1} << (2 * uniform(1, 4) + 1));
      case 8: return make_leaf(K::almost_extraspecial, std::uint64_t{1} << (2 * uniform(1, 4) + 2));
      case 9: return make_leaf(K::cyclic, std::uint64_t{1} << uniform(0, 6));
      case 10: return make_node(K::gen_dihedral, {(*this)(depth - 1)});
      case 11: {
        std::optional<std::uint64_t> z;
        if (uniform(0, 1)) z = uniform(0, 9);
        return make_node(K::gen_dicyclic, {(*this)(depth - 1)}, z);
      }
      case 12:
      case 13: {
        std::vector<cyclo::GroupDescriptor> children;
        const int n = uniform(2, 3);
        for (int i = 0; i < n; ++i) children.push_back((*this)(depth - 1));
        return make_node(pick == 12 ? K::direct : K::central, std::move(children));
      }
    }
    return make_leaf(K::cyclic, 1);
  }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64 rng_;
};

}  // namespace testing
