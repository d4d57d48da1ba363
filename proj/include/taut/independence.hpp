#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "taut/taut_ring.hpp"

namespace taut {

struct KernelOptions {
  /// Largest number of source monomials allowed in one degree.
  std::size_t size_cap = 20000;
  /// Multi-prime rank pre-pass; the exact elimination is always run.
  bool modular_prepass = true;
};

struct DegreeKernel {
  int degree = 0;
  std::size_t source_dim = 0;
  std::size_t rank = 0;
  std::vector<GradedPoly> basis;  // primitive integer coefficients
  std::vector<std::size_t> modular_ranks;
};

struct TruncatedKernelResult {
  RingMap map;
  int max_degree = 0;
  std::vector<DegreeKernel> degrees;  // every even degree 0..max_degree

  bool injective() const;
  /// Lowest degree with a non-trivial kernel, or -1.
  int first_kernel_degree() const;
};

/// Exponent vectors of the given total degree, in lexicographic order.
/// Throws ResourceError beyond `cap` entries.
std::vector<Exponents> monomials_of_degree(const GeneratorTable& table, int degree,
                                           std::size_t cap = KernelOptions{}.size_cap);

/// Null space of f in each even degree up to max_degree, by fraction-free
/// elimination. Kernel vectors are re-checked through apply_map and the rank is
/// recomputed with reversed row order; a mismatch throws std::logic_error.
TruncatedKernelResult kernel_up_to_degree(const RingMap& f, int max_degree, const KernelOptions& opts = {});

/// Generators checked for (n, g, flavor):
///   g = 0 closed       k[e*p1] .. k[e*pn] in the sphere model
///   g > 1              k[e*p1] .. k[e*p_{n-eps}], eps = 1 for n odd, 0 for n even, in the Lie-group model
///   g = 1 pointed      c[p1] .. c[p_{n-1}] in the pointed Lie-group model
/// Closed g = 1 and the disc flavor have no generators (DomainError); pointed
/// g = 0 raises UnsupportedCase. max_degree < 0 selects 8n.
TruncatedKernelResult check_presentation_independence(int n, int g, Flavor flavor, int max_degree = -1,
                                                      const KernelOptions& opts = {});

/// Same check for an explicit generator list evaluated in `model`.
TruncatedKernelResult check_generator_independence(const std::vector<PresentationGenerator>& gens,
                                                   const BundleModel& model, int max_degree,
                                                   const KernelOptions& opts = {});

/// k[e*p_j] as a presentation generator of degree 4j.
PresentationGenerator kappa_ep_generator(int n, int j);

}  // namespace taut
