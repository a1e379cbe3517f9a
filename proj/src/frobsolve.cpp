#include "ramlab/frobsolve.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ramlab/error.hpp"
#include "ramlab/fp_linalg.hpp"

namespace ramlab {

namespace {

Rational power_of(std::uint32_t p, int e) { return Rational(ipow(Integer(p), static_cast<unsigned>(e))); }

void require_same_shape(const PhiVector& a, const PhiVector& b) {
  if (!(a.spec == b.spec) || a.entries.size() != b.entries.size()) {
    throw Error(ErrorCode::kParamMismatch, "vectors live in different rings or have different lengths");
  }
}

PhiVector times_matrix(const PhiVector& x, const VMatrix& m) {
  if (x.entries.size() != m.rows()) throw Error(ErrorCode::kInvalidArgument, "row vector length does not match matrix");
  PhiVector out = PhiVector::zero(x.spec, m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    ValuedTrunc acc(x.spec);
    for (std::size_t r = 0; r < m.rows(); ++r) acc = acc + x.entries[r] * m(r, c);
    out.entries[c] = acc;
  }
  return out;
}

PhiVector frobenius_of(const PhiVector& x) {
  PhiVector out = x;
  for (auto& e : out.entries) e = frobenius(e);
  return out;
}

PhiVector move_to_cut(const PhiVector& x, const Rational& c) {
  return x.spec.cut() <= c ? lift_to(x, c) : reduce_to(x, c);
}

// Coordinates over F_p: (entry j, monomial m, digit t) -> (j (M + 1) + m) f + t.
FpVector encode(const PhiVector& x) {
  const FiniteField& k = x.spec.field();
  const std::size_t f = k.degree();
  const std::size_t width = static_cast<std::size_t>(x.spec.max_monomial()) + 1;
  FpVector out(x.entries.size() * width * f, 0);
  for (std::size_t j = 0; j < x.entries.size(); ++j) {
    for (const auto& term : x.entries[j].terms()) {
      const auto digits = k.digits(term.coeff);
      for (std::size_t t = 0; t < f; ++t) out[(j * width + static_cast<std::size_t>(term.exp)) * f + t] = digits[t];
    }
  }
  return out;
}

PhiVector decode(const FpVector& v, const RingSpec& spec, std::size_t d) {
  const FiniteField& k = spec.field();
  const std::size_t f = k.degree();
  const std::size_t width = static_cast<std::size_t>(spec.max_monomial()) + 1;
  PhiVector out = PhiVector::zero(spec, d);
  for (std::size_t j = 0; j < d; ++j) {
    detail::Terms terms;
    for (std::size_t m = 0; m < width; ++m) {
      std::vector<std::uint32_t> digits(v.begin() + static_cast<std::ptrdiff_t>((j * width + m) * f),
                                        v.begin() + static_cast<std::ptrdiff_t>((j * width + m + 1) * f));
      const Fq c = k.from_digits(digits);
      if (c != 0) terms.push_back({static_cast<std::int64_t>(m), c});
    }
    out.entries[j] = ValuedTrunc::from_terms(spec, std::move(terms));
  }
  return out;
}

struct LiftPlan {
  Rational extended_cut;
  Rational output_cut;
  std::int64_t shift;  // monomial exponent of the image of (q-1)^{(p-1)i}
};

LiftPlan plan_lift(const WachModuleModP& m, const RingSpec& target) {
  const std::int64_t shift = target.q_minus_one_index() * m.height_exponent();
  const Rational step(shift, target.denom());
  if (target.mode() == RingMode::kTilt) return LiftPlan{target.cut() + step, target.cut(), shift};
  if (target.cut() + step < 1) return LiftPlan{target.cut() + step, target.cut(), shift};
  return LiftPlan{target.cut(), target.cut() - step, shift};
}

LiftResult lift_impl(const WachModuleModP& m, const HeightWitness& w, const RingSpec& target, const PhiVector& x0,
                     const SolverParams& params, const std::optional<PhiVector>& seed) {
  if (params.mode != target.mode() || params.i != m.height || params.p != m.p()) {
    throw Error(ErrorCode::kParamMismatch, "solver parameters do not match the module and target ring");
  }
  if (x0.entries.size() != m.rank) throw Error(ErrorCode::kInvalidArgument, "x0 must have one entry per basis vector");
  if (!(x0.spec.with_cut(target.cut()) == target)) throw Error(ErrorCode::kParamMismatch, "x0 lives in a different ring");

  const Rational a_r = params.ring_units(params.a);
  const Rational b_r = params.ring_units(params.b);
  const LiftPlan plan = plan_lift(m, target);
  if (plan.output_cut < a_r) {
    throw Error(ErrorCode::kPrecisionTooLow, "output cut " + to_string(plan.output_cut) + " must be at least a = " + to_string(a_r) +
                                                 " for the correction to be determined");
  }
  const RingSpec spec_e = target.with_cut(plan.extended_cut);
  const Specialization sp = specialize(m, w, spec_e);

  const PhiVector x0_e = move_to_cut(x0, plan.extended_cut);
  const PhiVector Q = frobenius_defect(x0_e, sp.F);
  const Valuation vQ = Q.valuation();
  if (!vQ.is_infinite() && vQ.value() <= a_r) {
    throw Error(ErrorCode::kPrecisionTooLow,
                "defect valuation " + vQ.to_string() + " of x0 must exceed a = " + to_string(a_r));
  }

  const PhiVector x0_out = reduce_to(x0_e, plan.output_cut);
  PhiVector y = PhiVector::zero(target.with_cut(plan.output_cut), m.rank);
  if (seed) {
    y = move_to_cut(*seed, plan.output_cut);
    const Valuation vy = y.valuation();
    if (!vy.is_infinite() && vy.value() <= b_r) {
      throw Error(ErrorCode::kInvalidArgument, "seed must have valuation > b = " + to_string(b_r));
    }
  }

  // The defect of x0 + y is determined at the extended cut even though y is
  // only known at the output cut, and it vanishes exactly at the fixed point.
  LiftResult result{x0_out, LiftTranscript{{}, params.h, plan.output_cut}};
  std::size_t max_iterations = 0;
  for (;;) {
    const PhiVector defect = frobenius_defect(x0_e + lift_to(y, plan.extended_cut), sp.F);
    const Valuation e = defect.valuation();
    result.transcript.defects.push_back(e);
    if (e.is_infinite()) break;
    if (result.transcript.defects.size() == 1) {
      result.transcript.h = guaranteed_gain(params, e.value());
      if (result.transcript.h <= 0) throw Error(ErrorCode::kPrecisionTooLow, "no guaranteed contraction at this defect valuation");
      const Rational steps = (plan.extended_cut - e.value()) / result.transcript.h;
      max_iterations = static_cast<std::size_t>(floor_to_integer(steps)) + 3;
    }
    if (result.transcript.defects.size() > max_iterations) {
      throw Error(ErrorCode::kNoConvergenceWithinCut, "defect still nonzero after " + std::to_string(max_iterations) + " iterates");
    }
    const PhiVector rhs = times_matrix(Q + frobenius_of(lift_to(y, plan.extended_cut)), sp.V);
    PhiVector next = PhiVector::zero(y.spec, m.rank);
    for (std::size_t j = 0; j < m.rank; ++j) next.entries[j] = try_divide_uniformizer(rhs.entries[j], plan.shift);
    y = next;
  }
  const Valuation vy = y.valuation();
  if (!vy.is_infinite() && vy.value() <= b_r) {
    throw Error(ErrorCode::kStructureViolation, "correction has valuation " + vy.to_string() + " <= b");
  }
  result.solution = x0_out + y;
  return result;
}

}  // namespace

Rational SolverParams::scale() const { return mode == RingMode::kTilt ? Rational(1) : power_of(p, s); }

SolverParams solver_params(const RingSpec& spec, int i, std::optional<Rational> c_work) {
  if (i < 0) throw Error(ErrorCode::kInvalidArgument, "height must be >= 0");
  SolverParams params;
  params.p = spec.field().characteristic();
  params.i = i;
  params.mode = spec.mode();
  params.s = spec.mode() == RingMode::kUntilted ? spec.index() : 0;
  params.b = Rational(i, params.p - 1);
  params.a = Rational(static_cast<std::int64_t>(params.p) * i, params.p - 1);
  if (c_work) {
    params.c_work = *c_work;
  } else {
    // Untilted cuts stay below 1; pi <= D - 2 leaves room for a + 1/D.
    const std::int64_t steps = spec.mode() == RingMode::kUntilted &&
                                       params.ring_units(params.a) + Rational(2, spec.denom()) >= 1
                                   ? 1
                                   : 2;
    params.c_work = params.a + params.scale() * Rational(steps, spec.denom());
  }
  if (params.c_work <= params.a) {
    throw Error(ErrorCode::kInvalidArgument, "working cut " + to_string(params.c_work) + " must exceed a = " + to_string(params.a));
  }
  params.h = guaranteed_gain(params, params.ring_units(params.c_work));
  return params;
}

Rational guaranteed_gain(const SolverParams& params, const Rational& e) {
  if (params.mode == RingMode::kTilt) return e / params.p - params.b;
  const Rational iv = Rational(params.i) / params.scale();
  const Rational uncapped = (params.p - 1) * (e - iv);
  return std::min(Rational(1), uncapped) - iv;
}

PhiVector PhiVector::zero(const RingSpec& spec, std::size_t d) {
  return PhiVector{spec, std::vector<ValuedTrunc>(d, ValuedTrunc(spec))};
}

Valuation PhiVector::valuation() const {
  Valuation out = Valuation::infinity();
  for (const auto& e : entries) out = std::min(out, val(e));
  return out;
}

bool operator==(const PhiVector& a, const PhiVector& b) { return a.spec == b.spec && a.entries == b.entries; }

PhiVector operator+(const PhiVector& a, const PhiVector& b) {
  require_same_shape(a, b);
  PhiVector out = a;
  for (std::size_t j = 0; j < out.entries.size(); ++j) out.entries[j] = a.entries[j] + b.entries[j];
  return out;
}

PhiVector operator-(const PhiVector& a, const PhiVector& b) {
  require_same_shape(a, b);
  PhiVector out = a;
  for (std::size_t j = 0; j < out.entries.size(); ++j) out.entries[j] = a.entries[j] - b.entries[j];
  return out;
}

PhiVector scaled(const PhiVector& a, Fq c) {
  PhiVector out = a;
  for (auto& e : out.entries) e = e.scaled(c);
  return out;
}

PhiVector reduce_to(const PhiVector& a, const Rational& c) {
  PhiVector out{a.spec.with_cut(c), {}};
  for (const auto& e : a.entries) out.entries.push_back(reduce_to(e, c));
  return out;
}

PhiVector lift_to(const PhiVector& a, const Rational& c) {
  PhiVector out{a.spec.with_cut(c), {}};
  for (const auto& e : a.entries) out.entries.push_back(lift_to(e, c));
  return out;
}

std::string to_string(const PhiVector& a) {
  std::string out = "[";
  for (std::size_t j = 0; j < a.entries.size(); ++j) {
    if (j > 0) out += ", ";
    out += format_body(a.entries[j]);
  }
  return out + "]";
}

PhiVector frobenius_defect(const PhiVector& x, const VMatrix& F_t) { return frobenius_of(x) - times_matrix(x, F_t); }

JcSet enumerate_Jc(const WachModuleModP& m, const RingSpec& spec, const Rational& c, const Integer& budget) {
  validate_shape(m);
  const RingSpec ring = spec.with_cut(c);
  const std::size_t d = m.rank;
  const std::size_t width = static_cast<std::size_t>(ring.max_monomial()) + 1;
  const std::size_t slots = d * width;
  const std::uint32_t q = ring.field().order();
  JcSet out{c, ring, {}, ipow(Integer(q), static_cast<unsigned>(slots))};
  if (out.search_space > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "J_c search space (p^f)^(d*#monomials) = " + to_string(out.search_space) +
                                                " exceeds budget " + to_string(budget));
  }
  if (d == 0) {
    out.elements.push_back(PhiVector::zero(ring, 0));
    return out;
  }
  const VMatrix F_t = specialize_matrix(m, m.F, ring);
  std::vector<Fq> digits(slots, 0);
  for (;;) {
    PhiVector x = PhiVector::zero(ring, d);
    for (std::size_t j = 0; j < d; ++j) {
      detail::Terms terms;
      for (std::size_t mono = 0; mono < width; ++mono) {
        if (digits[j * width + mono] != 0) terms.push_back({static_cast<std::int64_t>(mono), digits[j * width + mono]});
      }
      x.entries[j] = ValuedTrunc::from_terms(ring, std::move(terms));
    }
    if (frobenius_defect(x, F_t).valuation().is_infinite()) out.elements.push_back(std::move(x));
    std::size_t pos = 0;
    while (pos < slots && ++digits[pos] == q) digits[pos++] = 0;
    if (pos == slots) break;
  }
  return out;
}

std::vector<Rational> LiftTranscript::gains() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < defects.size(); ++k) {
    if (defects[k].is_infinite() || defects[k - 1].is_infinite()) continue;
    out.push_back(defects[k].value() - defects[k - 1].value());
  }
  return out;
}

bool LiftTranscript::rate_holds() const {
  for (const auto& g : gains()) {
    if (g < h) return false;
  }
  return !defects.empty() && defects.back().is_infinite();
}

std::vector<std::string> LiftTranscript::lines() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < defects.size(); ++k) {
    std::string v = "inf";
    if (!defects[k].is_infinite()) {
      const Rational& r = defects[k].value();
      v = boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
    }
    out.push_back("iter " + std::to_string(k) + ": defect=" + v);
  }
  return out;
}

LiftResult contraction_lift(const WachModuleModP& m, const HeightWitness& w, const RingSpec& target, const PhiVector& x0,
                            const SolverParams& params, const std::optional<PhiVector>& seed) {
  if (target.mode() != RingMode::kTilt) throw Error(ErrorCode::kInvalidArgument, "contraction_lift expects a tilt ring");
  return lift_impl(m, w, target, x0, params, seed);
}

LiftResult contraction_lift_untilted(const WachModuleModP& m, const HeightWitness& w, const RingSpec& target,
                                     const PhiVector& x0, const SolverParams& params,
                                     const std::optional<PhiVector>& seed) {
  if (target.mode() != RingMode::kUntilted) {
    throw Error(ErrorCode::kInvalidArgument, "contraction_lift_untilted expects an untilted ring");
  }
  if (params.scale() <= params.a) {
    throw Error(ErrorCode::kRegimeViolation, "untilted lifting needs p^s > a (p^s=" + to_string(params.scale()) +
                                                 ", a=" + to_string(params.a) + ")");
  }
  return lift_impl(m, w, target, x0, params, seed);
}

std::int64_t minimum_truncation(const RingSpec& target, int i) {
  const std::int64_t p = target.field().characteristic();
  const std::int64_t shift = target.q_minus_one_index() * (p - 1) * i;
  Rational extended = target.cut() + Rational(shift, target.denom());
  if (target.mode() == RingMode::kUntilted && extended >= 1) extended = target.cut();
  const std::int64_t m_max = static_cast<std::int64_t>(floor_to_integer(extended * target.denom()));
  return m_max / target.q_minus_one_index() + (p - 1) * i + 1;
}

TstarResult compute_Tstar(const WachModuleModP& m, const RingSpec& spec, const Integer& budget, std::optional<Rational> c_work) {
  const HeightWitness w = verify_height(m);
  TstarResult result;
  result.params = solver_params(spec, m.height, c_work);
  const SolverParams& params = result.params;
  if (spec.mode() == RingMode::kUntilted && params.scale() <= params.a) {
    throw Error(ErrorCode::kRegimeViolation, "untilted lifting needs p^s > a (p^s=" + to_string(params.scale()) +
                                                 ", a=" + to_string(params.a) + ")");
  }
  const std::uint32_t p = m.p();
  const std::size_t d = m.rank;
  const RingSpec ring_w = spec.with_cut(params.ring_units(params.c_work));
  const Rational b_r = params.ring_units(params.b);

  // J_{c_work} is the kernel of the F_p-linear defect map.
  const VMatrix F_w = specialize_matrix(m, m.F, ring_w);
  const std::size_t f = spec.field().degree();
  const std::size_t width = static_cast<std::size_t>(ring_w.max_monomial()) + 1;
  const std::size_t n = d * width * f;
  FpMatrix L(n, n, p);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t mono = 0; mono < width; ++mono) {
      for (std::size_t t = 0; t < f; ++t) {
        std::vector<std::uint32_t> unit_digits(f, 0);
        unit_digits[t] = 1;
        PhiVector x = PhiVector::zero(ring_w, d);
        x.entries[j] = ValuedTrunc::monomial(ring_w, static_cast<std::int64_t>(mono), spec.field().from_digits(unit_digits));
        const FpVector column = encode(frobenius_defect(x, F_w));
        const std::size_t col = (j * width + mono) * f + t;
        for (std::size_t r = 0; r < n; ++r) L(r, col) = column[r];
      }
    }
  }
  std::vector<PhiVector> reps;
  std::vector<FpVector> images;
  for (const auto& v : kernel_basis(L)) {
    PhiVector x = decode(v, ring_w, d);
    FpVector image = encode(reduce_to(x, b_r));
    std::vector<FpVector> trial = images;
    trial.push_back(image);
    if (independent_subset(trial, p).size() == trial.size()) {
      images.push_back(std::move(image));
      reps.push_back(std::move(x));
    }
  }
  result.dimension = reps.size();
  const Integer count = ipow(Integer(p), static_cast<unsigned>(result.dimension));
  if (count > budget) {
    throw Error(ErrorCode::kBudgetExceeded, "T* has p^r = " + to_string(count) + " elements, over budget " + to_string(budget));
  }

  auto lift = [&](const PhiVector& x0) {
    return spec.mode() == RingMode::kTilt ? contraction_lift(m, w, spec, x0, params)
                                          : contraction_lift_untilted(m, w, spec, x0, params);
  };
  const std::size_t total = static_cast<std::size_t>(count);
  std::vector<std::uint32_t> coeffs(result.dimension, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    PhiVector x0 = PhiVector::zero(ring_w, d);
    for (std::size_t k = 0; k < result.dimension; ++k) {
      coeffs[k] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
      if (coeffs[k] != 0) x0 = x0 + scaled(reps[k], coeffs[k]);
    }
    LiftResult lifted = lift(x0);
    result.solutions.push_back(lifted.solution);
    result.transcripts.push_back(std::move(lifted.transcript));
  }
  for (std::size_t k = 0, stride = 1; k < result.dimension; ++k, stride *= p) result.basis.push_back(result.solutions[stride]);
  result.output_cut = result.solutions.front().spec.cut();

  std::set<std::string> keys;
  std::set<std::string> image_keys;
  for (const auto& x : result.solutions) {
    keys.insert(to_string(x));
    result.image_b.push_back(reduce_to(x, b_r));
    image_keys.insert(to_string(result.image_b.back()));
  }
  result.injective_at_b = image_keys.size() == result.solutions.size();
  if (!result.injective_at_b || keys.size() != result.solutions.size()) {
    throw Error(ErrorCode::kStructureViolation, "lifted solutions are not distinct modulo a^{>b}");
  }
  for (const auto& x : result.solutions) {
    for (std::uint32_t c = 2; c < p; ++c) {
      if (!keys.count(to_string(scaled(x, c)))) throw Error(ErrorCode::kStructureViolation, "T* is not closed under F_p scaling");
    }
    for (const auto& y : result.solutions) {
      if (!keys.count(to_string(x + y))) throw Error(ErrorCode::kStructureViolation, "T* is not closed under addition");
    }
  }
  return result;
}

int character_of(const std::vector<PhiVector>& tstar, std::int64_t u) {
  if (tstar.empty()) throw Error(ErrorCode::kRankError, "empty solution set");
  const FiniteField& k = tstar.front().spec.field();
  const std::uint32_t p = k.characteristic();
  if (tstar.size() != p) {
    throw Error(ErrorCode::kRankError, "character needs a one-dimensional T* (|T*| = " + std::to_string(tstar.size()) + ")");
  }
  const std::int64_t u_mod = ((u % p) + p) % p;
  if (u_mod == 0 || (p > 2 && !is_primitive_root(static_cast<std::uint64_t>(u_mod), p))) {
    throw Error(ErrorCode::kInvalidArgument, "u=" + std::to_string(u) + " is not a primitive root mod " + std::to_string(p));
  }
  const auto nonzero = std::find_if(tstar.begin(), tstar.end(), [](const PhiVector& x) { return !x.valuation().is_infinite(); });
  if (nonzero == tstar.end()) throw Error(ErrorCode::kRankError, "T* has no nonzero element");
  const PhiVector& x = *nonzero;
  const Rational v = x.valuation().value();
  const std::int64_t lead = static_cast<std::int64_t>(floor_to_integer(v * x.spec.denom()));
  std::optional<Fq> ratio;
  for (const auto& entry : x.entries) {
    if (val(entry).is_infinite() || val(entry).value() != v) continue;
    const ValuedTrunc g = galois_act(entry, u);
    if (!val(g).is_infinite() && val(g).value() < v) throw Error(ErrorCode::kNonCharacter, "Galois image drops valuation");
    const Fq r = k.mul(g.coeff(lead), k.inv(entry.coeff(lead)));
    if (ratio && *ratio != r) throw Error(ErrorCode::kNonCharacter, "leading ratios differ between coordinates");
    ratio = r;
  }
  if (!ratio || *ratio == 0 || !k.in_prime_field(*ratio)) {
    throw Error(ErrorCode::kNonCharacter, "leading ratio g(x)/x is not a constant of F_p^x");
  }
  std::uint64_t acc = 1;
  for (std::uint32_t j = 0; j < std::max<std::uint32_t>(p - 1, 1); ++j) {
    if (acc == *ratio) return static_cast<int>(j);
    acc = acc * static_cast<std::uint64_t>(u_mod) % p;
  }
  throw Error(ErrorCode::kNonCharacter, "leading ratio is not a power of u");
}

bool galois_permutes(const WachModuleModP& m, const std::vector<PhiVector>& tstar) {
  if (!m.gamma) throw Error(ErrorCode::kInvalidArgument, "Galois check needs a gamma datum");
  if (tstar.empty()) return true;
  const RingSpec& spec = tstar.front().spec;
  const VMatrix G_t = specialize_matrix(m, m.gamma->G, spec);
  std::set<std::string> images;
  for (const auto& y : tstar) images.insert(to_string(times_matrix(y, G_t)));
  for (const auto& x : tstar) {
    PhiVector gx = x;
    for (auto& e : gx.entries) e = galois_act(e, m.gamma->u);
    if (!images.count(to_string(gx))) return false;
  }
  return true;
}

std::vector<std::string> as_key_set(const std::vector<PhiVector>& xs) {
  std::vector<std::string> keys;
  for (const auto& x : xs) keys.push_back(to_string(x));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace ramlab
