#ifndef SIGBAND_PHILOX_HPP
#define SIGBAND_PHILOX_HPP

#include <array>
#include <cstdint>

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Stateless: every draw is a pure function of (key, counter), so parallel
// and serial runs produce identical streams.

namespace sigband {

namespace detail {

inline void philox_round(std::array<uint32_t, 4>& ctr,
                         std::array<uint32_t, 2>& key) {
  constexpr uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
  constexpr uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;
  uint64_t p0 = uint64_t(kM0) * ctr[0];
  uint64_t p1 = uint64_t(kM1) * ctr[2];
  std::array<uint32_t, 4> out;
  out[0] = uint32_t(p1 >> 32) ^ ctr[1] ^ key[0];
  out[1] = uint32_t(p1);
  out[2] = uint32_t(p0 >> 32) ^ ctr[3] ^ key[1];
  out[3] = uint32_t(p0);
  ctr = out;
  key[0] += kW0;
  key[1] += kW1;
}

}  // namespace detail

inline std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> ctr,
                                             std::array<uint32_t, 2> key) {
  for (int r = 0; r < 10; ++r) detail::philox_round(ctr, key);
  return ctr;
}

/// Uniform draw in the open interval (0,1), keyed by (seed, sample, ctr).
inline double philox_uniform01(uint64_t seed, uint64_t sample, uint64_t ctr) {
  auto out = philox4x32_10({uint32_t(sample), uint32_t(sample >> 32),
                            uint32_t(ctr), uint32_t(ctr >> 32)},
                           {uint32_t(seed), uint32_t(seed >> 32)});
  uint64_t bits = (uint64_t(out[0]) << 32) | out[1];
  return (double(bits >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace sigband

#endif  // SIGBAND_PHILOX_HPP
