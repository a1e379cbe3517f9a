#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramlab/rational.hpp"
#include "ramlab/tiltring.hpp"
#include "ramlab/wach.hpp"

namespace ramlab {

// Thresholds of the lifting problem. a, b and c_work are in the normalized
// units v(p) = 1 of the tilt; in untilted mode at level s the ring sees them
// divided by p^s (see ring_units). h is the guaranteed per-iterate gain of
// the defect valuation, in ring units, for a defect of valuation c_work.
struct SolverParams {
  std::uint32_t p = 2;
  int i = 0;
  RingMode mode = RingMode::kTilt;
  int s = 0;
  Rational b;
  Rational a;
  Rational c_work;
  Rational h;

  // 1 in tilt mode, p^s in untilted mode.
  Rational scale() const;
  Rational ring_units(const Rational& v) const { return v / scale(); }
};

// c_work defaults to a + 2/D (ring units), or a + 1/D in the untilted ring
// when a + 2/D would reach 1. InvalidArgument unless c_work > a.
SolverParams solver_params(const RingSpec& spec, int i, std::optional<Rational> c_work = std::nullopt);

// Lower bound for the next defect gain, given the current defect valuation e
// (ring units): e/p - b in tilt mode, min(1, (p-1)(e - i/p^s)) - i/p^s in
// untilted mode.
Rational guaranteed_gain(const SolverParams& params, const Rational& e);

// Row vector of ring elements: the images f(e_1), ..., f(e_d).
struct PhiVector {
  RingSpec spec;
  std::vector<ValuedTrunc> entries;

  static PhiVector zero(const RingSpec& spec, std::size_t d);
  Valuation valuation() const;
};

bool operator==(const PhiVector& a, const PhiVector& b);
PhiVector operator+(const PhiVector& a, const PhiVector& b);
PhiVector operator-(const PhiVector& a, const PhiVector& b);
PhiVector scaled(const PhiVector& a, Fq c);
PhiVector reduce_to(const PhiVector& a, const Rational& c);
PhiVector lift_to(const PhiVector& a, const Rational& c);
// "[<entry>, <entry>]" with each entry in ValuedTrunc text form minus header.
std::string to_string(const PhiVector& a);

// phi(x) - x F_t, computed in x's ring.
PhiVector frobenius_defect(const PhiVector& x, const VMatrix& F_t);

struct JcSet {
  Rational c;
  RingSpec spec;
  std::vector<PhiVector> elements;
  Integer search_space;
};

// Every x over k[u]/(v > c) with phi(x) = x F_t, by exhaustive search over all
// coefficient vectors. BudgetExceeded when the search space exceeds budget.
JcSet enumerate_Jc(const WachModuleModP& m, const RingSpec& spec, const Rational& c, const Integer& budget);

struct LiftTranscript {
  // Defect valuations phi(x) - x F_t, one per iterate, measured at the
  // working cut (output cut plus the valuation of F_t, or the target cut when
  // the untilted ring has no room above it); the last one is infinite.
  std::vector<Valuation> defects;
  Rational h;
  Rational output_cut;

  // Finite successive gains (entries with an infinite endpoint omitted).
  std::vector<Rational> gains() const;
  bool rate_holds() const;
  // "iter <k>: defect=<num>/<den>", or "defect=inf" once the defect vanishes.
  std::vector<std::string> lines() const;
};

struct LiftResult {
  PhiVector solution;
  LiftTranscript transcript;
};

// Exact solution x = x0 + y of phi(x) = x F_t with v(y) > b, at the cut of
// target. The iteration is y <- (Q + phi(y)) V_t / u^{iD} with
// Q = phi(x0) - x0 F_t, carried out with i extra units of precision.
// PrecisionTooLow when v(Q) <= a or target's cut is below a.
LiftResult contraction_lift(const WachModuleModP& m, const HeightWitness& w, const RingSpec& target, const PhiVector& x0,
                            const SolverParams& params, const std::optional<PhiVector>& seed = std::nullopt);

// Same problem in the untilted ring at level s, where u = zeta_{p^{s+1}} - 1
// and F_t V_t = u^{(p-1)i}. RegimeViolation unless p^s > a. The output cut is
// target's cut if cut + i/p^s < 1, and cut - i/p^s otherwise.
LiftResult contraction_lift_untilted(const WachModuleModP& m, const HeightWitness& w, const RingSpec& target,
                                     const PhiVector& x0, const SolverParams& params,
                                     const std::optional<PhiVector>& seed = std::nullopt);

struct TstarResult {
  SolverParams params;
  Rational output_cut;
  // All p^r solutions, the zero solution first.
  std::vector<PhiVector> solutions;
  std::vector<PhiVector> basis;
  std::size_t dimension = 0;
  std::vector<LiftTranscript> transcripts;
  // reduce_to(solution, b) for each solution, same order.
  std::vector<PhiVector> image_b;
  bool injective_at_b = false;
};

// J_{c_work} as the kernel of the F_p-linear map x -> phi(x) - x F_t, its
// image at b, and the lift of every element of that image. StructureViolation
// if the lifted set is not an F_p-subspace or reduction to b is not injective;
// BudgetExceeded if p^r exceeds budget.
TstarResult compute_Tstar(const WachModuleModP& m, const RingSpec& spec, const Integer& budget,
                          std::optional<Rational> c_work = std::nullopt);

// Least module truncation for which lifting at target can embed F and V.
std::int64_t minimum_truncation(const RingSpec& target, int i);

// Exponent j mod (p - 1) with g(x) = chi(g)^j x on the leading terms of a
// one-dimensional T*. RankError unless |T*| = p; NonCharacter if the leading
// ratio is not a constant of F_p^x; InvalidArgument unless u is a primitive
// root mod p.
int character_of(const std::vector<PhiVector>& tstar, std::int64_t u);

// For every x in T*, some y in T* satisfies y G_t = g(x) (g with exponent uG).
bool galois_permutes(const WachModuleModP& m, const std::vector<PhiVector>& tstar);

// Sorted string keys, for exact set comparisons.
std::vector<std::string> as_key_set(const std::vector<PhiVector>& xs);

}  // namespace ramlab
