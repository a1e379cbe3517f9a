#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ramlab/qring.hpp"
#include "ramlab/tiltring.hpp"

namespace ramlab {

// Action of one chosen generator gamma of Gamma: gamma(e) = e G, with
// chi(gamma) represented by the integer unit u.
struct GammaDatum {
  QMatrix G;
  std::int64_t u;
};

// Free rank-d module over k[[q-1]]/(q-1)^N with phi(e) = e F and claimed
// height bound i. Coordinates are columns: m = e v, so phi(m) = e F phi(v)
// and gamma(m) = e G gamma(v).
struct WachModuleModP {
  FiniteField field;
  std::int64_t trunc;
  std::size_t rank;
  int height;
  QMatrix F;
  std::optional<GammaDatum> gamma;

  std::uint32_t p() const { return field.characteristic(); }
  // (p - 1) i, the exponent of q - 1 in F V.
  std::int64_t height_exponent() const { return static_cast<std::int64_t>(p() - 1) * height; }
};

// Checks shapes, truncations and fields; InvalidArgument/ParamMismatch.
void validate_shape(const WachModuleModP& m);

struct HeightWitness {
  QMatrix V;
  // Truncation at which F V = (q-1)^{(p-1)i} Id was verified.
  std::int64_t trunc;
};

// Solves F V = (q-1)^{(p-1)i} Id exactly. F is read as a polynomial matrix,
// V = (q-1)^{(p-1)i} adj(F) / det(F) is formed by exact division, and the
// result is reported at truncation N - (p-1)i after re-multiplying.
// TruncationTooLow unless N > (p-1)i; HeightExceeded if V does not exist.
HeightWitness verify_height(const WachModuleModP& m);

struct GammaReport {
  bool trivial_mod_x = false;  // G = Id mod (q-1)
  bool commutes = false;       // G gamma(F) = F phi(G)
  std::string detail;

  bool passed() const { return trivial_mod_x && commutes; }
};

GammaReport verify_gamma(const WachModuleModP& m);

// gamma acting on a coordinate column: v -> G gamma(v).
QMatrix apply_gamma(const GammaDatum& g, const QMatrix& column);

// Checks (gamma' - 1)^{p^s} e_j in (q-1)^{p^s} M for every basis vector,
// computing the operator power. For s >= 1 and u != 1 mod p the generator
// is replaced by gamma' = gamma^{p-1}, which lies in the subgroup acting
// trivially on mu_p. TruncationTooLow unless N > p^s + (p-1)i.
struct ContainmentReport {
  bool passed = false;
  std::int64_t power = 0;          // p^s
  std::int64_t generator_exponent = 0;  // exponent of gamma actually used
  std::string detail;
};

ContainmentReport gamma_power_containment(const WachModuleModP& m, int s);

// F and V over the target ring; in untilted mode with f > 1 the coefficients
// are twisted by the inverse s-th Frobenius of k.
struct Specialization {
  VMatrix F;
  VMatrix V;
};

Specialization specialize(const WachModuleModP& m, const HeightWitness& w, const RingSpec& target);

// Entrywise embedding of one matrix of m's coefficient ring, with the same
// coefficient twist as specialize.
VMatrix specialize_matrix(const WachModuleModP& m, const QMatrix& mat, const RingSpec& target);

// The standard rank-1 module of height i: F = c (q-1)^{(p-1)i} with c in F_p^x,
// G = (gamma(x) / (u x))^i, which is 1 mod x and commutes with F.
WachModuleModP rank_one_module(const FiniteField& field, std::int64_t trunc, int i, std::int64_t u, Fq c = 1);

// Direct sum (block diagonal F and G). Gamma data must share u; the claimed
// height is the maximum.
WachModuleModP direct_sum(const WachModuleModP& a, const WachModuleModP& b);

// The same module in the basis e P: F' = P^{-1} F phi(P), G' = P^{-1} G gamma(P).
// P must be invertible (unit determinant).
WachModuleModP change_basis(const WachModuleModP& m, const QMatrix& P);

QMatrix inverse(const QMatrix& m);

// A valid module of rank 1..max_rank: a direct sum of twisted rank-1 modules
// of heights in [0, max_height], all with the given uG, transported by a
// random invertible change of basis.
WachModuleModP random_module(const FiniteField& field, std::int64_t trunc, std::size_t max_rank, int max_height,
                             std::int64_t u, std::mt19937_64& rng);

}  // namespace ramlab
