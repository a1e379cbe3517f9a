#include "ramlab/ramify.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include "ramlab/error.hpp"

namespace ramlab {

namespace {

std::vector<std::pair<Rational, Rational>> drop_collinear(std::vector<std::pair<Rational, Rational>> pts,
                                                          const Rational& final_slope) {
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k == 0) {
      out.push_back(pts[k]);
      continue;
    }
    const Rational in_slope = (pts[k].second - out.back().second) / (pts[k].first - out.back().first);
    const Rational out_slope = (k + 1 < pts.size())
                                   ? (pts[k + 1].second - pts[k].second) / (pts[k + 1].first - pts[k].first)
                                   : final_slope;
    if (in_slope != out_slope) out.push_back(pts[k]);
  }
  return out;
}

}  // namespace

std::int64_t BreakData::order_at(const Rational& s) const {
  std::int64_t order = total_order;
  for (const auto& br : breaks) {
    if (s > br.lambda) order = br.order;
  }
  return order;
}

void validate(const BreakData& b) {
  if (b.total_order < 1) throw Error(ErrorCode::kInvalidArgument, "total order must be >= 1");
  std::int64_t prev = b.total_order;
  Rational prev_lambda = 0;
  for (const auto& br : b.breaks) {
    if (br.lambda <= prev_lambda) throw Error(ErrorCode::kInvalidArgument, "break points must be positive and strictly increasing");
    if (br.order < 1 || br.order >= prev || prev % br.order != 0) {
      throw Error(ErrorCode::kInvalidArgument, "group orders must strictly decrease along a divisor chain");
    }
    prev = br.order;
    prev_lambda = br.lambda;
  }
  if (prev != 1) throw Error(ErrorCode::kInvalidArgument, "the filtration must end in the trivial group");
}

BreakData canonical(BreakData b) {
  std::vector<Break> kept;
  std::int64_t prev = b.total_order;
  for (const auto& br : b.breaks) {
    if (br.order == prev) continue;
    kept.push_back(br);
    prev = br.order;
  }
  b.breaks = std::move(kept);
  validate(b);
  return b;
}

std::string to_string(const BreakData& b) {
  std::ostringstream os;
  os << "order=" << b.total_order;
  for (const auto& br : b.breaks) {
    os << "; (lambda=" << boost::multiprecision::numerator(br.lambda) << "/" << boost::multiprecision::denominator(br.lambda)
       << ", size=" << br.order << ")";
  }
  return os.str();
}

BreakData parse_break_data(std::string_view text) {
  static const std::regex head(R"(^\s*order\s*=\s*(\d+)\s*)");
  static const std::regex item(R"(^\s*;\s*\(\s*lambda\s*=\s*([0-9/]+)\s*,\s*size\s*=\s*(\d+)\s*\)\s*)");
  std::string rest(text);
  std::smatch m;
  if (!std::regex_search(rest, m, head)) throw Error(ErrorCode::kParseError, "break data must start with order=<n>");
  BreakData b;
  b.total_order = std::stoll(m[1].str());
  rest = m.suffix().str();
  while (!rest.empty()) {
    if (!std::regex_search(rest, m, item)) throw Error(ErrorCode::kParseError, "cannot parse break entry near '" + rest + "'");
    b.breaks.push_back(Break{parse_rational(m[1].str()), std::stoll(m[2].str())});
    rest = m.suffix().str();
  }
  validate(b);
  return b;
}

HerbrandFn::HerbrandFn(std::vector<std::pair<Rational, Rational>> points, Rational final_slope)
    : final_slope_(std::move(final_slope)) {
  if (points.empty() || points.front().first != 0 || points.front().second != 0) {
    throw Error(ErrorCode::kInvalidArgument, "Herbrand function must start at (0, 0)");
  }
  if (final_slope_ <= 0) throw Error(ErrorCode::kInvalidArgument, "Herbrand function must be increasing");
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (points[k].first <= points[k - 1].first || points[k].second <= points[k - 1].second) {
      throw Error(ErrorCode::kInvalidArgument, "Herbrand breakpoints must be strictly increasing in both coordinates");
    }
  }
  points_ = drop_collinear(std::move(points), final_slope_);
}

HerbrandFn HerbrandFn::identity() { return HerbrandFn({{Rational(0), Rational(0)}}, Rational(1)); }

Rational HerbrandFn::operator()(const Rational& t) const {
  if (t < 0) throw Error(ErrorCode::kInvalidArgument, "Herbrand functions are evaluated on t >= 0");
  for (std::size_t k = 1; k < points_.size(); ++k) {
    if (t <= points_[k].first) {
      const auto& [t0, y0] = points_[k - 1];
      const auto& [t1, y1] = points_[k];
      return y0 + (t - t0) * (y1 - y0) / (t1 - t0);
    }
  }
  return points_.back().second + (t - points_.back().first) * final_slope_;
}

Rational HerbrandFn::slope_after(const Rational& t) const {
  for (std::size_t k = 1; k < points_.size(); ++k) {
    if (t < points_[k].first) {
      return (points_[k].second - points_[k - 1].second) / (points_[k].first - points_[k - 1].first);
    }
  }
  return final_slope_;
}

std::string to_string(const HerbrandFn& f) {
  std::ostringstream os;
  for (std::size_t k = 0; k < f.points().size(); ++k) {
    if (k > 0) os << " ";
    os << "(" << to_string(f.points()[k].first) << ", " << to_string(f.points()[k].second) << ")";
  }
  os << "; slope=" << to_string(f.final_slope());
  return os.str();
}

HerbrandFn phi_fn(const BreakData& b) {
  validate(b);
  std::set<Rational> critical{Rational(1)};
  for (const auto& br : b.breaks) {
    if (br.lambda > 1) critical.insert(br.lambda);
  }
  const Rational base = b.order_at(Rational(1));
  std::vector<std::pair<Rational, Rational>> pts{{Rational(0), Rational(0)}};
  Rational t = 0, y = 0;
  for (const auto& c : critical) {
    const Rational slope = (t < 1) ? Rational(1) : Rational(b.order_at(t + (c - t) / 2)) / base;
    y += (c - t) * slope;
    t = c;
    pts.emplace_back(t, y);
  }
  const Rational final_slope = Rational(b.breaks.empty() ? b.total_order : b.breaks.back().order) / base;
  return HerbrandFn(std::move(pts), final_slope);
}

HerbrandFn psi_fn(const HerbrandFn& f) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& [t, y] : f.points()) pts.emplace_back(y, t);
  return HerbrandFn(std::move(pts), 1 / f.final_slope());
}

HerbrandFn compose(const HerbrandFn& outer, const HerbrandFn& inner) {
  const HerbrandFn inner_inv = psi_fn(inner);
  std::set<Rational> ts;
  for (const auto& pt : inner.points()) ts.insert(pt.first);
  for (const auto& pt : outer.points()) ts.insert(inner_inv(pt.first));
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& t : ts) pts.emplace_back(t, outer(inner(t)));
  return HerbrandFn(std::move(pts), outer.final_slope() * inner.final_slope());
}

Rational mu(const BreakData& b) {
  validate(b);
  if (b.breaks.empty()) return 0;
  return phi_fn(b)(b.breaks.back().lambda);
}

Rational tower_mu(const Rational& mu_FE, const HerbrandFn& phi_FE, const Rational& mu_LF) {
  return std::max(mu_FE, phi_FE(mu_LF));
}

BreakData cyclotomic_breaks(std::uint32_t p, int n) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "cyclotomic level must be >= 1");
  BreakData b;
  b.total_order = static_cast<std::int64_t>(ipow(Integer(p), static_cast<unsigned>(n - 1)) * (p - 1));
  std::int64_t lambda = 1;
  for (int j = 0; j < n; ++j) {
    b.breaks.push_back(Break{Rational(lambda), static_cast<std::int64_t>(ipow(Integer(p), static_cast<unsigned>(n - 1 - j)))});
    lambda *= p;
  }
  return canonical(std::move(b));
}

BreakData kummer_tate_breaks(std::uint32_t p) {
  // Tame quotient of order p - 1 cut out at lambda = 1; the Kummer generator
  // p^{1/p} has lower break p, i.e. lambda = p + 1.
  switch (p) {
    case 2:
      return BreakData{2, {{Rational(3), 1}}};
    case 3:
    case 5:
    case 7: {
      const std::int64_t q = p;
      return BreakData{q * (q - 1), {{Rational(1), q}, {Rational(q + 1), 1}}};
    }
    default:
      throw Error(ErrorCode::kUnsupportedPrime, "Kummer-Tate break data is tabulated for p in {2, 3, 5, 7} only (got " +
                                                    std::to_string(p) + ")");
  }
}

Rational pm_mu_bound(std::int64_t e, const Rational& m) {
  if (e < 1) throw Error(ErrorCode::kInvalidArgument, "ramification index must be >= 1");
  return Rational(e) * m;
}

}  // namespace ramlab
