#ifndef LLAB_RNG_HPP
#define LLAB_RNG_HPP

#include "llab/common.hpp"

#include <array>
#include <cmath>
#include <cstdint>

namespace llab::rng {

// Counter-based Philox4x32-10 generator. Every draw is a pure function of
// (seed, domain, stream, step, block), so ensembles produce bit-identical
// output for any thread count and any evaluation order.
namespace detail {

inline void mulhilo32(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline std::array<std::uint32_t, 4> philox4x32(std::uint64_t key, std::array<std::uint32_t, 4> ctr) {
  constexpr std::uint32_t kM0 = 0xD2511F53u;
  constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u;
  constexpr std::uint32_t kW1 = 0xBB67AE85u;
  std::uint32_t k0 = static_cast<std::uint32_t>(key);
  std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo32(kM0, ctr[0], hi0, lo0);
    mulhilo32(kM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
    k0 += kW0;
    k1 += kW1;
  }
  return ctr;
}

inline double u64_to_unit(std::uint64_t bits) {
  // (0,1): 53 mantissa bits plus a half-ulp offset keeps log() finite
  return static_cast<double>(bits >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

}  // namespace detail

// Draw domains keep independent uses of one seed statistically disjoint.
enum class Domain : std::uint32_t {
  sde_noise = 1,
  initial_law = 2,
  assumption_sampling = 3,
  pl_probe = 4,
  sgd_noise = 5,
  minibatch_index = 6,
  nn_init = 7,
  generic = 8,
};

struct Counter {
  std::uint32_t stream = 0;  // path index, sample index, ...
  std::uint32_t step = 0;
  std::uint32_t block = 0;
  Domain domain = Domain::generic;
};

inline std::array<std::uint32_t, 4> raw_block(std::uint64_t seed, const Counter& c) {
  return detail::philox4x32(seed, {c.stream, c.step, c.block, static_cast<std::uint32_t>(c.domain)});
}

// Two uniforms in (0,1) per block.
inline std::array<double, 2> uniform_pair(std::uint64_t seed, const Counter& c) {
  const auto w = raw_block(seed, c);
  const std::uint64_t a = (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
  const std::uint64_t b = (static_cast<std::uint64_t>(w[2]) << 32) | w[3];
  return {detail::u64_to_unit(a), detail::u64_to_unit(b)};
}

// Two standard normals per block (Box-Muller; fixed consumption keeps the
// counter layout aligned across code paths).
inline std::array<double, 2> normal_pair(std::uint64_t seed, const Counter& c) {
  const auto u = uniform_pair(seed, c);
  const double r = std::sqrt(-2.0 * std::log(u[0]));
  const double a = 6.283185307179586476925286766559 * u[1];
  return {r * std::cos(a), r * std::sin(a)};
}

// d i.i.d. standard normals for (seed, domain, stream, step).
inline void fill_normals(std::uint64_t seed, Domain domain, std::uint32_t stream,
                         std::uint32_t step, double* out, int d) {
  Counter c{stream, step, 0, domain};
  int i = 0;
  while (i + 1 < d) {
    const auto z = normal_pair(seed, c);
    out[i] = z[0];
    out[i + 1] = z[1];
    ++c.block;
    i += 2;
  }
  if (i < d) {
    out[i] = normal_pair(seed, c)[0];
  }
}

inline Vector normal_vector(std::uint64_t seed, Domain domain, std::uint32_t stream,
                            std::uint32_t step, int d) {
  Vector v(d);
  fill_normals(seed, domain, stream, step, v.data(), d);
  return v;
}

// Sequential uniform stream for one (seed, domain, stream) triple.
class UniformStream {
 public:
  UniformStream(std::uint64_t seed, Domain domain, std::uint32_t stream, std::uint32_t step = 0)
      : seed_(seed), counter_{stream, step, 0, domain} {}

  double next() {
    if (!have_) {
      pending_ = uniform_pair(seed_, counter_);
      ++counter_.block;
      have_ = true;
      return pending_[0];
    }
    have_ = false;
    return pending_[1];
  }

  // uniform integer in [0, n)
  std::uint64_t next_index(std::uint64_t n) {
    return std::min<std::uint64_t>(static_cast<std::uint64_t>(next() * static_cast<double>(n)), n - 1);
  }

 private:
  std::uint64_t seed_;
  rng::Counter counter_;
  std::array<double, 2> pending_{};
  bool have_ = false;
};

}  // namespace llab::rng

#endif  // LLAB_RNG_HPP
