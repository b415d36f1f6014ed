#ifndef BIMODKIT_RNG_HPP
#define BIMODKIT_RNG_HPP

#include <random>

#include "bimodkit/module.hpp"

namespace bimodkit {

/// Seeded deterministic randomness for searches and generated test corpora.
/// Every randomized code path in the library takes an explicit seed or an
/// Rng so that concurrent and repeated runs reproduce exactly.
class Rng {
  public:
    explicit Rng(u64 seed) : g_(seed) {}

    u32 residue(u32 p) { return static_cast<u32>(g_() % p); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(g_() % n); }

    FpMatrix matrix(u32 p, std::size_t rows, std::size_t cols);
    FpMatrix invertible(u32 p, std::size_t n);
    /// Invertible n x n over F_p drawn by rejection.
    FpMatrix gl_element(u32 p, std::size_t n) { return invertible(p, n); }

    /// Random module over a local algebra: a quotient of a small free module
    /// by a randomly generated submodule, retried until the dimension lands
    /// in [1, max_dim].
    Module module(const AlgebraPtr& a, std::size_t max_dim);

    std::mt19937_64& raw() { return g_; }

  private:
    std::mt19937_64 g_;
};

}  // namespace bimodkit

#endif
