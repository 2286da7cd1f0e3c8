#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rng.hpp"

namespace modshor {

enum class Backend { analytic, statevector };

const char* backend_name(Backend b);
Backend backend_from_name(const std::string& name);  // ConfigError on unknown

// One phase-estimation block: m counting qubits measure the phase window
// starting kappa bits down, against the multiplier base^(2^kappa) mod n.
struct BlockCircuitParams {
  std::uint64_t n = 0;       // modulus, >= 3
  std::uint64_t base = 0;    // coprime to n
  std::uint32_t kappa = 0;   // exponent offset
  std::uint32_t m = 0;       // counting qubits, 1..24
  std::uint32_t n_target = 0;  // work register width = ceil(log2 n)
};

// Probability of each counting outcome, indexed by the outcome's integer
// value (the MSB-first bitstring read as binary). Sums to 1 within 1e-12.
struct BlockDistribution {
  std::vector<double> p;

  std::uint32_t qubits() const;
};

struct CandidateEntry {
  std::string bits;          // MSB-first, length m
  std::uint64_t count = 0;
};

// Ranked measurement outcomes of one block: descending count, ties broken by
// ascending integer value.
struct CandidateSet {
  std::uint32_t block_index = 0;  // 1-based
  std::vector<CandidateEntry> entries;
  std::uint64_t total_shots = 0;
  bool exact = false;
};

// shots = 0 switches to exact mode: probabilities scaled to this resolution
// and rounded stand in for counts, so ranking is deterministic.
inline constexpr std::uint64_t kExactResolution = 1'000'000'000;

// Probabilities below this are treated as empty support (they only arise as
// floating-point residue of exact zeros).
inline constexpr double kSupportEpsilon = 1e-12;

// base^(2^kappa) mod n by repeated squaring.
std::uint64_t multiplier_power(std::uint64_t base, std::uint32_t kappa,
                               std::uint64_t n);

// Simulates the literal circuit: Hadamards on the counting register, one
// controlled modular-multiplication permutation per counting qubit (LSB
// first), inverse Fourier transform of size 2^m, work register traced out.
// Requires m + n_target <= 24 (ConfigError otherwise).
BlockDistribution block_distribution_statevector(const BlockCircuitParams& p);

// Same measurement law in closed form: outcomes of the multiplier's orbit
// group into geometric series, so no statevector is needed. Agrees with the
// statevector backend to 1e-9 and has no qubit-count guard.
BlockDistribution block_distribution_analytic(const BlockCircuitParams& p);

BlockDistribution block_distribution(const BlockCircuitParams& p, Backend b);

// Multinomial sample of `shots` outcomes (exact mode when shots = 0).
// Entries with zero count are dropped; ordering as in CandidateSet.
std::vector<CandidateEntry> sample_counts(const BlockDistribution& dist,
                                          std::uint64_t shots,
                                          SplitMix64& stream);

// First k entries of the ranked list (all of them when fewer were observed).
std::vector<std::string> select_top_candidates(
    std::span<const CandidateEntry> entries, std::uint64_t k);

}  // namespace modshor
