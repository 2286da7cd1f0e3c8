#include "blocksim.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <numbers>

#include "bitstring.hpp"
#include "errors.hpp"
#include "numtheory.hpp"

namespace modshor {

namespace {

using cplx = std::complex<double>;

void check_params(const BlockCircuitParams& p) {
  if (p.n < 3) throw ConfigError("block: modulus must be >= 3");
  if (p.m < 1 || p.m > 24) throw ConfigError("block: size must be in [1, 24]");
  if (gcd(p.base % p.n, p.n) != 1)
    throw ConfigError("block: base must be coprime to the modulus");
}

// In-place radix-2 transform X[b] = sum_c x[c] exp(-2*pi*i*b*c/len).
void dft_forward(std::vector<cplx>& a) {
  const std::size_t len = a.size();
  for (std::size_t i = 1, j = 0; i < len; ++i) {
    std::size_t bit = len >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t span = 2; span <= len; span <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(span);
    for (std::size_t i = 0; i < len; i += span) {
      for (std::size_t k = 0; k < span / 2; ++k) {
        const cplx w = std::polar(1.0, ang * static_cast<double>(k));
        const cplx u = a[i + k];
        const cplx v = a[i + k + span / 2] * w;
        a[i + k] = u + v;
        a[i + k + span / 2] = u - v;
      }
    }
  }
}

// |sum_{j<k} exp(-2*pi*i*t*j / 2^m)|^2, evaluated so that exact zeros and
// exact resonances come out exactly: the sine arguments are reduced as
// integers modulo 2^(m+1) first.
double geometric_mag2(std::uint64_t t, std::uint64_t k, std::uint32_t m) {
  if (k == 0) return 0.0;
  const std::uint64_t half = 1ull << m;
  if (t % half == 0) return static_cast<double>(k) * static_cast<double>(k);
  const std::uint64_t period = half << 1;
  const std::uint64_t num =
      static_cast<std::uint64_t>(static_cast<unsigned __int128>(t) * k % period);
  if (num % half == 0) return 0.0;
  const double scale = std::numbers::pi / static_cast<double>(half);
  const double s_num = std::sin(scale * static_cast<double>(num));
  const double s_den = std::sin(scale * static_cast<double>(t % period));
  const double r = s_num / s_den;
  return r * r;
}

}  // namespace

const char* backend_name(Backend b) {
  return b == Backend::analytic ? "analytic" : "statevector";
}

Backend backend_from_name(const std::string& name) {
  if (name == "analytic") return Backend::analytic;
  if (name == "statevector") return Backend::statevector;
  throw ConfigError("backend: expected 'analytic' or 'statevector', got '" +
                    name + "'");
}

std::uint32_t BlockDistribution::qubits() const {
  std::uint32_t m = 0;
  while ((std::size_t{1} << m) < p.size()) ++m;
  assert((std::size_t{1} << m) == p.size());
  return m;
}

std::uint64_t multiplier_power(std::uint64_t base, std::uint32_t kappa,
                               std::uint64_t n) {
  std::uint64_t g = base % n;
  for (std::uint32_t i = 0; i < kappa; ++i) g = mul_mod(g, g, n);
  return g;
}

BlockDistribution block_distribution_statevector(const BlockCircuitParams& p) {
  check_params(p);
  if (p.m + p.n_target > 24)
    throw ConfigError("statevector backend: m + n_target must be <= 24");
  const std::size_t cdim = std::size_t{1} << p.m;
  const std::size_t wdim = std::size_t{1} << p.n_target;
  if (wdim < p.n)
    throw ConfigError("statevector backend: work register cannot hold 0..n-1");
  std::vector<cplx> amp(cdim * wdim);

  // |0...0> on the counting register, |1> on the work register.
  amp[1] = 1.0;

  // Hadamard each counting qubit. Counting bit j lives at index bit
  // j + n_target, so paired indices differ by (1 << j) * wdim.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint32_t j = 0; j < p.m; ++j) {
    const std::size_t stride = (std::size_t{1} << j) * wdim;
    for (std::size_t i = 0; i < amp.size(); ++i) {
      if (i & stride) continue;
      const cplx a0 = amp[i];
      const cplx a1 = amp[i + stride];
      amp[i] = (a0 + a1) * inv_sqrt2;
      amp[i + stride] = (a0 - a1) * inv_sqrt2;
    }
  }

  // Controlled multiplication permutations, control = counting qubit j
  // (LSB first). Work basis states w >= n are fixed points.
  std::vector<cplx> scratch(wdim);
  for (std::uint32_t j = 0; j < p.m; ++j) {
    const std::uint64_t g = multiplier_power(p.base, p.kappa + j, p.n);
    if (g == 1) continue;
    for (std::size_t c = 0; c < cdim; ++c) {
      if (!(c >> j & 1)) continue;
      cplx* col = amp.data() + c * wdim;
      for (std::size_t w = 0; w < wdim; ++w) {
        const std::size_t dest = w < p.n ? mul_mod(w, g, p.n) : w;
        scratch[dest] = col[w];
      }
      std::copy(scratch.begin(), scratch.end(), col);
    }
  }

  // Inverse Fourier transform on the counting register, column by column.
  const double norm = 1.0 / std::sqrt(static_cast<double>(cdim));
  std::vector<cplx> col(cdim);
  BlockDistribution out{std::vector<double>(cdim, 0.0)};
  for (std::size_t w = 0; w < wdim; ++w) {
    for (std::size_t c = 0; c < cdim; ++c) col[c] = amp[c * wdim + w];
    dft_forward(col);
    for (std::size_t b = 0; b < cdim; ++b) out.p[b] += std::norm(col[b] * norm);
  }
  return out;
}

BlockDistribution block_distribution_analytic(const BlockCircuitParams& p) {
  check_params(p);
  const std::uint64_t g = multiplier_power(p.base, p.kappa, p.n);
  const std::uint64_t orbit = multiplicative_order(g, p.n).value();
  const std::uint64_t dim = std::uint64_t{1} << p.m;
  BlockDistribution out{std::vector<double>(dim, 0.0)};

  if (orbit >= dim) {
    // Every residue class of the orbit is hit at most once: the counting
    // register stays uniform.
    const double u = std::ldexp(1.0, -static_cast<int>(p.m));
    std::fill(out.p.begin(), out.p.end(), u);
    return out;
  }

  // x in [0, 2^m) splits into orbit-length residue classes; each class
  // contributes one geometric series whose magnitude depends only on the
  // class size. `rem` classes have quot+1 members, the rest have quot.
  const std::uint64_t quot = dim / orbit;
  const std::uint64_t rem = dim % orbit;
  const double scale = std::ldexp(1.0, -2 * static_cast<int>(p.m));
  for (std::uint64_t b = 0; b < dim; ++b) {
    const std::uint64_t t = b * orbit;
    const double hi = rem > 0 ? geometric_mag2(t, quot + 1, p.m) : 0.0;
    const double lo = geometric_mag2(t, quot, p.m);
    out.p[b] = scale * (static_cast<double>(rem) * hi +
                        static_cast<double>(orbit - rem) * lo);
  }
  return out;
}

BlockDistribution block_distribution(const BlockCircuitParams& p, Backend b) {
  return b == Backend::analytic ? block_distribution_analytic(p)
                                : block_distribution_statevector(p);
}

std::vector<CandidateEntry> sample_counts(const BlockDistribution& dist,
                                          std::uint64_t shots,
                                          SplitMix64& stream) {
  const std::uint32_t m = dist.qubits();
  std::vector<std::uint64_t> counts(dist.p.size(), 0);

  if (shots == 0) {
    for (std::size_t b = 0; b < dist.p.size(); ++b) {
      counts[b] = static_cast<std::uint64_t>(
          std::llround(dist.p[b] * static_cast<double>(kExactResolution)));
    }
  } else {
    std::vector<double> cum(dist.p.size());
    double acc = 0.0;
    for (std::size_t b = 0; b < dist.p.size(); ++b) {
      acc += dist.p[b];
      cum[b] = acc;
    }
    for (std::uint64_t s = 0; s < shots; ++s) {
      const double u = stream.next_unit() * acc;
      const auto it = std::upper_bound(cum.begin(), cum.end(), u);
      std::size_t b = static_cast<std::size_t>(it - cum.begin());
      if (b >= counts.size()) b = counts.size() - 1;
      ++counts[b];
    }
  }

  std::vector<std::size_t> order;
  for (std::size_t b = 0; b < counts.size(); ++b) {
    if (counts[b] > 0) order.push_back(b);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (counts[a] != counts[b]) return counts[a] > counts[b];
    return a < b;
  });

  std::vector<CandidateEntry> entries;
  entries.reserve(order.size());
  for (std::size_t b : order) {
    entries.push_back({bits_of(b, m), counts[b]});
  }
  return entries;
}

std::vector<std::string> select_top_candidates(
    std::span<const CandidateEntry> entries, std::uint64_t k) {
  if (k < 1) throw ConfigError("top_k must be >= 1");
  std::vector<std::string> out;
  const std::uint64_t take = std::min<std::uint64_t>(k, entries.size());
  out.reserve(take);
  for (std::uint64_t i = 0; i < take; ++i) out.push_back(entries[i].bits);
  return out;
}

}  // namespace modshor
