#include "ramlab/wach.hpp"

#include <sstream>

#include "ramlab/error.hpp"

namespace ramlab {

namespace {

QMatrix lift_truncation(const QMatrix& m, std::int64_t trunc) {
  return m.map([trunc](const QPoly& a) { return QPoly::from_terms(a.field(), trunc, a.terms()); });
}

QMatrix x_power_identity(const FiniteField& field, std::int64_t trunc, std::size_t n, std::int64_t e) {
  QMatrix out(n, n, QPoly(field, trunc));
  for (std::size_t r = 0; r < n; ++r) out(r, r) = QPoly::x_power(field, trunc, e);
  return out;
}

bool all_divisible(const QMatrix& m, std::int64_t e) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto ord = m(r, c).order();
      if (ord && *ord < e) return false;
    }
  }
  return true;
}

std::int64_t unit_power_mod(std::int64_t u, std::int64_t e, std::int64_t modulus) {
  std::int64_t r = u % modulus;
  if (r < 0) r += modulus;
  std::int64_t out = 1 % modulus;
  for (std::int64_t k = 0; k < e; ++k) out = out * r % modulus;
  return out;
}

void check_matrix(const QMatrix& m, const WachModuleModP& w, const char* what) {
  if (m.rows() != w.rank || m.cols() != w.rank) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be " + std::to_string(w.rank) + "x" + std::to_string(w.rank));
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!(m(r, c).field() == w.field) || m(r, c).trunc() != w.trunc) {
        throw Error(ErrorCode::kParamMismatch, std::string(what) + " entries must live in the module's coefficient ring");
      }
    }
  }
}

}  // namespace

void validate_shape(const WachModuleModP& m) {
  if (m.trunc < 1) throw Error(ErrorCode::kInvalidArgument, "module truncation must be >= 1");
  if (m.height < 0) throw Error(ErrorCode::kInvalidArgument, "height must be >= 0");
  check_matrix(m.F, m, "F");
  if (m.gamma) {
    check_matrix(m.gamma->G, m, "G");
    if (m.gamma->u % static_cast<std::int64_t>(m.p()) == 0) {
      throw Error(ErrorCode::kNonUnitExponent, "uG=" + std::to_string(m.gamma->u) + " is divisible by p");
    }
  }
}

HeightWitness verify_height(const WachModuleModP& m) {
  validate_shape(m);
  const std::int64_t k = m.height_exponent();
  const std::int64_t n = m.trunc;
  if (n <= k) {
    throw Error(ErrorCode::kTruncationTooLow,
                "height check needs N > (p-1)i (N=" + std::to_string(n) + ", (p-1)i=" + std::to_string(k) + ")");
  }
  const std::size_t d = m.rank;
  // Large enough that det(F) is exact and the quotient still reaches N - k.
  const std::int64_t big = static_cast<std::int64_t>(d + 1) * n + k + 1;
  const QMatrix F = lift_truncation(m.F, big);
  const QPoly det = determinant(F);
  if (det.is_zero()) throw Error(ErrorCode::kHeightExceeded, "det F vanishes, so no V exists");
  const std::int64_t e = *det.order();
  const QPoly unit_inv = try_divide(det, e).inverse_unit();
  const QMatrix adj = adjugate(F);

  QMatrix V(d, d, QPoly(m.field, n - k));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      QPoly quotient(m.field, big - e);
      try {
        quotient = try_divide(multiply_by_x_power(adj(r, c), k), e);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::kNotDivisible) throw;
        throw Error(ErrorCode::kHeightExceeded, "(q-1)^" + std::to_string(k) + " adj(F) is not divisible by det F = (q-1)^" +
                                                    std::to_string(e) + " * unit; height exceeds i=" + std::to_string(m.height));
      }
      V(r, c) = (quotient * unit_inv).truncated(n - k);
    }
  }
  const QMatrix check = truncated(m.F, n - k) * V;
  if (!(check == x_power_identity(m.field, n - k, d, k))) {
    throw Error(ErrorCode::kHeightExceeded, "F V differs from (q-1)^" + std::to_string(k) + " Id at truncation " + std::to_string(n - k));
  }
  return HeightWitness{V, n - k};
}

GammaReport verify_gamma(const WachModuleModP& m) {
  validate_shape(m);
  GammaReport report;
  if (!m.gamma) {
    report.detail = "no gamma datum";
    return report;
  }
  const QMatrix& G = m.gamma->G;
  report.trivial_mod_x = true;
  std::ostringstream detail;
  for (std::size_t r = 0; r < m.rank && report.trivial_mod_x; ++r) {
    for (std::size_t c = 0; c < m.rank; ++c) {
      const Fq expected = (r == c) ? 1 : 0;
      if (G(r, c).coeff(0) != expected) {
        report.trivial_mod_x = false;
        detail << "G(" << r << "," << c << ") = " << format_body(G(r, c)) << " is not " << expected << " mod (q-1). ";
        break;
      }
    }
  }
  const QMatrix lhs = G * gamma_q(m.F, m.gamma->u);
  const QMatrix rhs = m.F * frobenius_q(G);
  report.commutes = (lhs == rhs);
  if (!report.commutes) detail << "G gamma(F) differs from F phi(G).";
  report.detail = detail.str();
  return report;
}

QMatrix apply_gamma(const GammaDatum& g, const QMatrix& column) { return g.G * gamma_q(column, g.u); }

ContainmentReport gamma_power_containment(const WachModuleModP& m, int s) {
  validate_shape(m);
  if (!m.gamma) throw Error(ErrorCode::kInvalidArgument, "gamma_power_containment needs a gamma datum");
  if (s < 0) throw Error(ErrorCode::kInvalidArgument, "s must be >= 0");
  const std::int64_t p = m.p();
  std::int64_t power = 1;
  for (int k = 0; k < s; ++k) power *= p;
  if (m.trunc <= power + m.height_exponent()) {
    throw Error(ErrorCode::kTruncationTooLow, "containment check needs N > p^s + (p-1)i (N=" + std::to_string(m.trunc) +
                                                  ", p^s=" + std::to_string(power) + ", (p-1)i=" + std::to_string(m.height_exponent()) + ")");
  }

  GammaDatum gen = *m.gamma;
  if (s >= 1 && ((gen.u % p) + p) % p != 1) {
    std::int64_t modulus = p;
    while (modulus < m.trunc) modulus *= p;
    QMatrix product = gen.G;
    for (std::int64_t j = 1; j <= p - 2; ++j) product = product * gamma_q(gen.G, unit_power_mod(gen.u, j, modulus));
    gen = GammaDatum{product, unit_power_mod(gen.u, p - 1, modulus)};
  }

  ContainmentReport report;
  report.power = power;
  report.generator_exponent = gen.u;
  report.passed = true;
  std::ostringstream detail;
  for (std::size_t j = 0; j < m.rank; ++j) {
    QMatrix v(m.rank, 1, QPoly(m.field, m.trunc));
    v(j, 0) = v(j, 0).one_like();
    for (std::int64_t step = 0; step < power; ++step) v = apply_gamma(gen, v) - v;
    if (!all_divisible(v, power)) {
      report.passed = false;
      detail << "(gamma-1)^" << power << " e_" << j << " is not divisible by (q-1)^" << power << ". ";
    }
  }
  report.detail = detail.str();
  return report;
}

VMatrix specialize_matrix(const WachModuleModP& m, const QMatrix& mat, const RingSpec& target) {
  VMatrix out = embed_q(mat, target);
  if (target.mode() == RingMode::kUntilted && m.field.degree() > 1 && target.index() > 0) {
    out = out.map([&](const ValuedTrunc& a) {
      return ValuedTrunc::from_terms(a.spec(), detail::twist_coefficients(m.field, a.terms(), -target.index()));
    });
  }
  return out;
}

Specialization specialize(const WachModuleModP& m, const HeightWitness& w, const RingSpec& target) {
  return Specialization{specialize_matrix(m, m.F, target), specialize_matrix(m, w.V, target)};
}

WachModuleModP rank_one_module(const FiniteField& field, std::int64_t trunc, int i, std::int64_t u, Fq c) {
  const std::int64_t p = field.characteristic();
  if (i < 0) throw Error(ErrorCode::kInvalidArgument, "height must be >= 0");
  if (u % p == 0) throw Error(ErrorCode::kNonUnitExponent, "u=" + std::to_string(u) + " is divisible by p");
  if (c == 0 || c >= field.characteristic()) throw Error(ErrorCode::kInvalidArgument, "twist constant must lie in F_p^x");
  const std::int64_t k = (p - 1) * i;
  QMatrix F(1, 1, QPoly(field, trunc));
  F(0, 0) = QPoly::x_power(field, trunc, k, c);
  const QPoly gx = gamma_q(QPoly::x_power(field, trunc + 1, 1), u);
  const QPoly ratio = try_divide(gx, 1).scaled(field.inv(field.from_int(u)));
  QMatrix G(1, 1, QPoly(field, trunc));
  G(0, 0) = ratio.pow(static_cast<std::uint64_t>(i));
  return WachModuleModP{field, trunc, 1, i, F, GammaDatum{G, u}};
}

WachModuleModP direct_sum(const WachModuleModP& a, const WachModuleModP& b) {
  if (!(a.field == b.field) || a.trunc != b.trunc) throw Error(ErrorCode::kParamMismatch, "direct sum of modules over different rings");
  const std::size_t d = a.rank + b.rank;
  auto block = [&](const QMatrix& x, const QMatrix& y) {
    QMatrix out(d, d, QPoly(a.field, a.trunc));
    for (std::size_t r = 0; r < a.rank; ++r) {
      for (std::size_t c = 0; c < a.rank; ++c) out(r, c) = x(r, c);
    }
    for (std::size_t r = 0; r < b.rank; ++r) {
      for (std::size_t c = 0; c < b.rank; ++c) out(a.rank + r, a.rank + c) = y(r, c);
    }
    return out;
  };
  WachModuleModP out{a.field, a.trunc, d, std::max(a.height, b.height), block(a.F, b.F), std::nullopt};
  if (a.gamma.has_value() != b.gamma.has_value()) {
    throw Error(ErrorCode::kInvalidArgument, "direct sum needs gamma data on both summands or neither");
  }
  if (a.gamma) {
    if (a.gamma->u != b.gamma->u) throw Error(ErrorCode::kInvalidArgument, "direct sum needs a common uG");
    out.gamma = GammaDatum{block(a.gamma->G, b.gamma->G), a.gamma->u};
  }
  return out;
}

QMatrix inverse(const QMatrix& m) {
  const QPoly det = determinant(m);
  if (det.coeff(0) == 0) throw Error(ErrorCode::kInvalidArgument, "matrix is not invertible over k[[q-1]]");
  const QPoly det_inv = det.inverse_unit();
  return adjugate(m).map([&det_inv](const QPoly& a) { return a * det_inv; });
}

WachModuleModP change_basis(const WachModuleModP& m, const QMatrix& P) {
  validate_shape(m);
  check_matrix(P, m, "P");
  const QMatrix P_inv = inverse(P);
  WachModuleModP out = m;
  out.F = P_inv * m.F * frobenius_q(P);
  if (m.gamma) out.gamma = GammaDatum{P_inv * m.gamma->G * gamma_q(P, m.gamma->u), m.gamma->u};
  return out;
}

WachModuleModP random_module(const FiniteField& field, std::int64_t trunc, std::size_t max_rank, int max_height,
                             std::int64_t u, std::mt19937_64& rng) {
  const std::uint32_t p = field.characteristic();
  std::uniform_int_distribution<std::size_t> rank_dist(1, std::max<std::size_t>(max_rank, 1));
  std::uniform_int_distribution<int> height_dist(0, std::max(max_height, 0));
  std::uniform_int_distribution<std::uint32_t> twist_dist(1, p - 1);
  std::uniform_int_distribution<std::uint32_t> coeff_dist(0, field.order() - 1);
  std::uniform_int_distribution<std::int64_t> degree_dist(0, std::min<std::int64_t>(trunc - 1, 4));

  const std::size_t d = rank_dist(rng);
  WachModuleModP m = rank_one_module(field, trunc, height_dist(rng), u, twist_dist(rng));
  for (std::size_t k = 1; k < d; ++k) m = direct_sum(m, rank_one_module(field, trunc, height_dist(rng), u, twist_dist(rng)));

  for (;;) {
    QMatrix P(d, d, QPoly(field, trunc));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        detail::Terms terms;
        const std::int64_t deg = degree_dist(rng);
        for (std::int64_t e = 0; e <= deg; ++e) terms.push_back({e, coeff_dist(rng)});
        P(r, c) = QPoly::from_terms(field, trunc, std::move(terms));
      }
    }
    if (determinant(P).coeff(0) != 0) return change_basis(m, P);
  }
}

}  // namespace ramlab
