#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

// Row operations modulo a prime p < 2^26 on rows stored as doubles holding
// integers in [0, p). Products of two residues stay below 2^52, so double
// arithmetic is exact.
namespace taut::simd {

enum class Isa { scalar, avx2 };

std::string to_string(Isa isa);

bool avx2_supported();

/// AVX2 when the CPU supports it, unless TAUT_SIMD=scalar is set.
Isa active_isa();

/// y[i] = (y[i] - f * x[i]) mod p, results in [0, p).
void axpy_mod_scalar(double* y, const double* x, double f, std::size_t len, double p);
void axpy_mod_avx2(double* y, const double* x, double f, std::size_t len, double p);
void axpy_mod(Isa isa, double* y, const double* x, double f, std::size_t len, double p);

/// Rank of a matrix of residues modulo p (row-major, rows of equal length).
std::size_t rank_mod_p(std::vector<std::vector<double>> rows, std::uint32_t p, Isa isa);

/// Primes just below 2^26 used by the modular pre-pass.
const std::vector<std::uint32_t>& prepass_primes();

}  // namespace taut::simd
