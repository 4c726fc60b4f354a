#include "cubetile/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <numbers>
#include <unordered_map>

#include "cubetile/errors.hpp"

namespace cubetile {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
// Allowance for double rounding in the partial sum before a deficit is claimed.
constexpr double kRoundingAllowance = 1e-9;

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

using IntVec = std::vector<std::int64_t>;

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t seed = v.size();
    for (auto x : v) seed ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

// A translate in integer coordinates on the 1/q grid. `base` identifies the
// offset it came from (for periodic sets) and is used to keep one
// representative per class of pairs.
struct GridPoint {
  Point point;
  IntVec scaled;
  std::size_t base = 0;
};

std::int64_t joint_denominator(const std::vector<Point>& points) {
  mpz_class q = 1;
  for (const auto& t : points) {
    for (const auto& c : t) q = lcm(q, c.den());
  }
  if (!q.fits_slong_p()) throw Error("common denominator exceeds 64 bits");
  return q.get_si();
}

// Candidate pairs in a comparison scope: `lhs` points against `rhs` points,
// with `keep(l, r)` deciding which of the two mirror images is reported.
struct PairScope {
  std::vector<GridPoint> lhs;
  std::vector<GridPoint> rhs;
  std::int64_t q = 1;
  std::function<bool(const GridPoint&, const GridPoint&)> keep;
};

PairScope make_scope(const TranslateSet& set, const std::optional<Window>& window) {
  PairScope scope;
  std::vector<Point> all;
  if (set.is_periodic() && !window) {
    const std::size_t d = set.dim();
    const auto& offsets = set.offsets();
    std::vector<std::pair<Point, std::size_t>> neighbours;
    IntVec k(d, -1);
    while (true) {
      const Point shift = set.lattice_vector(k);
      for (std::size_t i = 0; i < offsets.size(); ++i) neighbours.emplace_back(offsets[i] + shift, i);
      std::size_t j = 0;
      for (; j < d; ++j) {
        if (k[j] < 1) {
          ++k[j];
          break;
        }
        k[j] = -1;
      }
      if (j == d) break;
    }
    for (const auto& [p, i] : neighbours) all.push_back(p);
    scope.q = joint_denominator(all);
    for (std::size_t i = 0; i < offsets.size(); ++i) scope.lhs.push_back({offsets[i], scale_to_grid(offsets[i], scope.q), i});
    for (auto& [p, i] : neighbours) {
      auto scaled = scale_to_grid(p, scope.q);
      scope.rhs.push_back({std::move(p), std::move(scaled), i});
    }
    scope.keep = [](const GridPoint& l, const GridPoint& r) { return l.base < r.base; };
    return scope;
  }
  const std::vector<Point> points = window ? enumerate_window(set, *window) : (set.is_canonical() ? set : canonicalize(set)).offsets();
  scope.q = joint_denominator(points);
  for (std::size_t i = 0; i < points.size(); ++i) scope.lhs.push_back({points[i], scale_to_grid(points[i], scope.q), i});
  scope.rhs = scope.lhs;
  scope.keep = [](const GridPoint& l, const GridPoint& r) { return l.base < r.base; };
  return scope;
}

IntVec residues(const IntVec& s, std::int64_t q) {
  IntVec r(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) r[j] = mod(s[j], q);
  return r;
}

// Non-orthogonal pairs. A pair is orthogonal iff on some axis the scaled
// coordinates differ but agree modulo q. Points are grouped by residue
// vector; for two groups with agreeing-residue axes S the pair violates
// exactly when the coordinates on S coincide, which a hash lookup finds.
std::vector<std::pair<Point, Point>> non_orthogonal_pairs(const PairScope& scope) {
  std::map<IntVec, std::vector<std::size_t>> lgroups, rgroups;
  for (std::size_t i = 0; i < scope.lhs.size(); ++i) lgroups[residues(scope.lhs[i].scaled, scope.q)].push_back(i);
  for (std::size_t i = 0; i < scope.rhs.size(); ++i) rgroups[residues(scope.rhs[i].scaled, scope.q)].push_back(i);

  std::vector<std::pair<Point, Point>> out;
  for (const auto& [rres, rmembers] : rgroups) {
    std::map<std::vector<bool>, std::unordered_map<IntVec, std::vector<std::size_t>, IntVecHash>> by_mask;
    for (const auto& [lres, lmembers] : lgroups) {
      if (lres == rres) continue;  // equal residues everywhere: only t == u would violate
      std::vector<bool> mask(lres.size());
      for (std::size_t j = 0; j < lres.size(); ++j) mask[j] = lres[j] == rres[j];
      auto [it, fresh] = by_mask.try_emplace(mask);
      auto& buckets = it->second;
      const auto key_of = [&](const IntVec& s) {
        IntVec key;
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (mask[j]) key.push_back(s[j]);
        }
        return key;
      };
      if (fresh) {
        for (auto i : rmembers) buckets[key_of(scope.rhs[i].scaled)].push_back(i);
      }
      for (auto li : lmembers) {
        const auto found = buckets.find(key_of(scope.lhs[li].scaled));
        if (found == buckets.end()) continue;
        for (auto ri : found->second) {
          if (scope.keep(scope.lhs[li], scope.rhs[ri])) out.emplace_back(scope.lhs[li].point, scope.rhs[ri].point);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Overlapping pairs: every coordinate gap strictly below one cube side.
std::vector<std::pair<Point, Point>> overlapping_pairs(const PairScope& scope) {
  std::unordered_map<IntVec, std::vector<std::size_t>, IntVecHash> cells;
  const auto cell_of = [&](const IntVec& s) {
    IntVec c(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) c[j] = floor_div(s[j], scope.q);
    return c;
  };
  for (std::size_t i = 0; i < scope.rhs.size(); ++i) cells[cell_of(scope.rhs[i].scaled)].push_back(i);

  std::vector<std::pair<Point, Point>> out;
  for (const auto& l : scope.lhs) {
    const IntVec home = cell_of(l.scaled);
    const std::size_t d = home.size();
    IntVec delta(d, -1);
    while (true) {
      IntVec c = home;
      for (std::size_t j = 0; j < d; ++j) c[j] += delta[j];
      if (auto it = cells.find(c); it != cells.end()) {
        for (auto ri : it->second) {
          const auto& r = scope.rhs[ri];
          bool overlap = r.scaled != l.scaled;
          for (std::size_t j = 0; j < d && overlap; ++j) overlap = std::abs(r.scaled[j] - l.scaled[j]) < scope.q;
          if (overlap && scope.keep(l, r)) out.emplace_back(l.point, r.point);
        }
      }
      std::size_t j = 0;
      for (; j < d; ++j) {
        if (delta[j] < 1) {
          ++delta[j];
          break;
        }
        delta[j] = -1;
      }
      if (j == d) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Sum over k in [kmin, kmax] of phi_sq(base + period * k).
double axis_mass(const Rational& base, std::int64_t period, const mpz_class& kmin, const mpz_class& kmax) {
  CompensatedSum sum;
  const Rational step(static_cast<long>(period));
  Rational y = base + Rational(kmin, mpz_class(1)) * step;
  for (mpz_class k = kmin; k <= kmax; ++k) {
    sum.add(phi_sq(y));
    y += step;
  }
  return sum.value();
}

CompletenessReport completeness_unchecked(const TranslateSet& set, const Point& x, std::int64_t cutoff, double eps) {
  CompletenessReport report;
  report.sample = x;
  report.cutoff = cutoff;
  report.partial_sum = window_mass(set, x, Window::radius(set.dim(), Rational(static_cast<long>(cutoff))));
  report.tail_bound = tail_bound(set.dim(), cutoff);
  if (report.partial_sum >= 1.0 - eps - report.tail_bound) {
    report.verdict = CompletenessVerdict::CompleteWithin;
    report.amount = eps;
  } else {
    report.verdict = CompletenessVerdict::DeficitAtLeast;
    report.amount = 1.0 - report.partial_sum - report.tail_bound - kRoundingAllowance;
  }
  return report;
}

void require_orthogonal_near(const TranslateSet& set, const Point& x, std::int64_t cutoff) {
  const auto report = set.is_periodic()
                          ? check_orthogonality(set)
                          : check_orthogonality(set, Window::radius(set.dim(), Rational(static_cast<long>(cutoff))).translated(x));
  if (!report.empty()) {
    const auto& [t, u] = report.pairs.front();
    throw NotOrthogonal("translates " + t.to_string() + " and " + u.to_string() + " are not orthogonal");
  }
}

void require_valid_cutoff(std::int64_t cutoff) {
  if (cutoff < 1) throw Error("cutoff N must be a positive integer");
}

}  // namespace

double phi_sq(double x) {
  if (x == 0.0) return 1.0;
  const double s = std::sin(kPi * x) / (kPi * x);
  return s * s;
}

double phi_sq(const Rational& x) {
  if (x.is_zero()) return 1.0;
  if (x.is_integer()) return 0.0;
  // sin^2(pi x) depends only on x mod 1; reducing first keeps the argument small.
  const double s = std::sin(kPi * x.frac().to_double());
  const double px = kPi * x.to_double();
  return (s * s) / (px * px);
}

double pair_inner_sq(const Point& t, const Point& u) {
  require_same_dim(t, u);
  double prod = 1.0;
  for (std::size_t j = 0; j < t.dim(); ++j) {
    const Rational gap = t[j] - u[j];
    if (!gap.is_zero() && gap.is_integer()) return 0.0;
  }
  for (std::size_t j = 0; j < t.dim(); ++j) prod *= phi_sq(t[j] - u[j]);
  return prod;
}

bool is_orthogonal_pair(const Point& t, const Point& u) {
  require_same_dim(t, u);
  if (t == u) throw PreconditionError("orthogonality of a translate with itself is undefined");
  for (std::size_t j = 0; j < t.dim(); ++j) {
    const Rational gap = t[j] - u[j];
    if (!gap.is_zero() && gap.is_integer()) return true;
  }
  return false;
}

bool is_disjoint_pair(const Point& t, const Point& u) {
  require_same_dim(t, u);
  if (t == u) throw PreconditionError("disjointness of a cube with itself is undefined");
  for (std::size_t j = 0; j < t.dim(); ++j) {
    if (Rational(t[j] - u[j]).abs() >= Rational(1)) return true;
  }
  return false;
}

std::string ViolationReport::to_text() const {
  std::string out;
  for (const auto& [t, u] : pairs) out += "pair: " + t.to_string() + " | " + u.to_string() + "\n";
  return out;
}

ViolationReport check_orthogonality(const TranslateSet& set, const std::optional<Window>& window) {
  return {ViolationKind::Orthogonality, non_orthogonal_pairs(make_scope(set, window))};
}

ViolationReport check_packing(const TranslateSet& set, const std::optional<Window>& window) {
  return {ViolationKind::Overlap, overlapping_pairs(make_scope(set, window))};
}

std::optional<std::pair<Point, Point>> has_face_twin(const TranslateSet& input) {
  const TranslateSet set = input.is_canonical() ? input : canonicalize(input);
  for (const auto& t : set.offsets()) {
    for (std::size_t j = 0; j < set.dim(); ++j) {
      Point u = t + Point::axis(set.dim(), j);
      if (set.contains(u)) return std::make_pair(t, std::move(u));
    }
  }
  return std::nullopt;
}

// Derivation in docs/tail_bound.md. Each coordinate of t - x falls in one of
// three classes: above N, below -N, or in [-N, N]; at least one coordinate is
// outside. Shifting every cube of one class pattern by the same vector keeps
// them disjoint, and the majorant integrals are tau per outer axis and M per
// inner axis, so the class patterns sum to (M + 2 tau)^d - M^d.
double tail_bound(std::size_t dim, std::int64_t cutoff) {
  require_valid_cutoff(cutoff);
  if (cutoff == 1) return 1.0;
  const double inner = 3.0 + 2.0 / kPi2;
  const double tau = 1.0 / (kPi2 * static_cast<double>(cutoff - 1));
  const auto d = static_cast<double>(dim);
  return std::pow(inner + 2.0 * tau, d) - std::pow(inner, d);
}

double tail_constant(std::size_t dim) {
  // N * tail_bound(d, N) is decreasing in N, so its value at N = 2 bounds all N >= 2.
  return 2.0 * tail_bound(dim, 2);
}

std::string CompletenessReport::csv_header() { return "x,N,partial_sum,tail_bound,verdict"; }

std::string CompletenessReport::csv_row() const {
  std::string x;
  for (std::size_t j = 0; j < sample.dim(); ++j) {
    if (j) x += ' ';
    x += sample[j].to_string();
  }
  const std::string verdict_text =
      verdict == CompletenessVerdict::CompleteWithin ? "CompleteWithin(" + format_g17(amount) + ")"
                                                     : "DeficitAtLeast(" + format_g17(amount) + ")";
  return x + "," + std::to_string(cutoff) + "," + format_g17(partial_sum) + "," + format_g17(tail_bound) + "," +
         verdict_text;
}

double window_mass(const TranslateSet& input, const Point& x, const Window& relative_window) {
  if (x.dim() != input.dim()) throw DimensionMismatch("sample point dimension differs from set dimension");
  const TranslateSet set = input.is_canonical() ? input : canonicalize(input);
  const Window window = relative_window.translated(x);
  CompensatedSum total;
  if (!set.is_periodic()) {
    for (const auto& t : enumerate_window(set, window)) total.add(pair_inner_sq(x, t));
    return total.value();
  }
  // The window is a box and the translates of one offset form a product
  // lattice, so the sum over that offset factorizes into axis sums.
  for (const auto& o : set.offsets()) {
    double prod = 1.0;
    for (std::size_t j = 0; j < set.dim() && prod != 0.0; ++j) {
      const auto [kmin, kmax] = detail::period_index_range(o[j], set.period()[j], window.lower()[j], window.upper()[j]);
      prod *= kmin > kmax ? 0.0 : axis_mass(o[j] - x[j], set.period()[j], kmin, kmax);
    }
    total.add(prod);
  }
  return total.value();
}

CompletenessReport completeness_sum(const TranslateSet& set, const Point& x, std::int64_t cutoff, double eps) {
  require_valid_cutoff(cutoff);
  require_same_dim(x, Point::zero(set.dim()));
  require_orthogonal_near(set, x, cutoff);
  return completeness_unchecked(set, x, cutoff, eps);
}

SpectrumVerdict spectrum_verdict(const TranslateSet& input, const std::vector<Point>& samples, std::int64_t cutoff,
                                 double eps) {
  require_valid_cutoff(cutoff);
  const TranslateSet set = input.is_canonical() ? input : canonicalize(input);
  for (const auto& x : samples) {
    require_same_dim(x, Point::zero(set.dim()));
    if (!set.is_periodic()) require_orthogonal_near(set, x, cutoff);
  }
  if (set.is_periodic()) require_orthogonal_near(set, Point::zero(set.dim()), cutoff);

  std::vector<std::future<CompletenessReport>> pending;
  pending.reserve(samples.size());
  for (const auto& x : samples) {
    pending.push_back(std::async(std::launch::async, [&set, &x, cutoff, eps] {
      return completeness_unchecked(set, x, cutoff, eps);
    }));
  }
  SpectrumVerdict verdict;
  for (auto& f : pending) verdict.reports.push_back(f.get());
  for (const auto& r : verdict.reports) {
    if (r.certified_deficit() && r.amount > 0.0) {
      verdict.likely_spectrum = false;
      verdict.witness = r.sample;
      break;
    }
  }
  return verdict;
}

}  // namespace cubetile
