#include "cubetile/translate_set.hpp"

#include <algorithm>
#include <functional>

#include "cubetile/errors.hpp"

namespace cubetile {

namespace {

Rational mod_period(const Rational& x, std::int64_t p) {
  const Rational period(p);
  const Rational q(mpz_class(Rational(x / period).floor()), mpz_class(1));
  return x - q * period;
}

}  // namespace

TranslateSet::TranslateSet(std::size_t dim, Mode mode, std::vector<Point> offsets, std::vector<std::int64_t> period)
    : dim_(dim), mode_(mode), offsets_(std::move(offsets)), period_(std::move(period)) {
  if (dim_ == 0) throw Error("dimension must be at least 1");
  for (const auto& t : offsets_) {
    if (t.dim() != dim_) throw DimensionMismatch("offset " + t.to_string() + " has wrong dimension");
  }
  if (mode_ == Mode::Periodic) {
    if (period_.size() != dim_) throw DimensionMismatch("period length differs from dimension");
    for (auto p : period_) {
      if (p <= 0) throw Error("periods must be positive integers");
    }
  } else if (!period_.empty()) {
    throw Error("finite sets carry no period");
  }
}

TranslateSet TranslateSet::finite(std::size_t dim, std::vector<Point> offsets) {
  return canonicalize(TranslateSet(dim, Mode::Finite, std::move(offsets)));
}

TranslateSet TranslateSet::periodic(std::vector<std::int64_t> period, std::vector<Point> offsets) {
  const std::size_t dim = period.size();
  return canonicalize(TranslateSet(dim, Mode::Periodic, std::move(offsets), std::move(period)));
}

std::int64_t TranslateSet::period_volume() const {
  std::int64_t v = 1;
  for (auto p : period_) v *= p;
  return v;
}

Point TranslateSet::lattice_vector(const std::vector<std::int64_t>& k) const {
  Point v = Point::zero(dim_);
  for (std::size_t j = 0; j < dim_; ++j) v[j] = Rational(static_cast<long>(period_[j] * k[j]));
  return v;
}

Point TranslateSet::reduce(const Point& t) const {
  if (!is_periodic()) return t;
  Point r = t;
  for (std::size_t j = 0; j < dim_; ++j) r[j] = mod_period(t[j], period_[j]);
  return r;
}

bool TranslateSet::contains(const Point& t) const {
  if (t.dim() != dim_) return false;
  const Point r = reduce(t);
  if (canonical_) return std::binary_search(offsets_.begin(), offsets_.end(), r);
  return std::any_of(offsets_.begin(), offsets_.end(), [&](const Point& o) { return reduce(o) == r; });
}

TranslateSet TranslateSet::with_offsets(std::vector<Point> offsets) const {
  return canonicalize(TranslateSet(dim_, mode_, std::move(offsets), period_));
}

bool operator==(const TranslateSet& a, const TranslateSet& b) {
  return a.dim_ == b.dim_ && a.mode_ == b.mode_ && a.period_ == b.period_ && a.offsets_ == b.offsets_;
}

TranslateSet canonicalize(const TranslateSet& set) {
  TranslateSet out = set;
  for (auto& t : out.offsets_) t = set.reduce(t);
  std::sort(out.offsets_.begin(), out.offsets_.end());
  const auto dup = std::adjacent_find(out.offsets_.begin(), out.offsets_.end());
  if (dup != out.offsets_.end()) throw DuplicateTranslate("translate " + dup->to_string() + " appears twice");
  out.canonical_ = true;
  return out;
}

Window::Window(Point lower, Point upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  require_same_dim(lower_, upper_);
  if (lower_.dim() == 0) throw Error("window must have positive dimension");
  for (std::size_t j = 0; j < lower_.dim(); ++j) {
    if (!(lower_[j] < upper_[j])) throw Error("window lower corner must be below upper corner");
  }
}

Window Window::radius(std::size_t dim, const Rational& n) {
  if (n.sign() <= 0) throw Error("window radius must be positive");
  return cube(dim, -(n + 1), n + 1);
}

Window Window::cube(std::size_t dim, const Rational& lo, const Rational& hi) {
  return Window(Point(std::vector<Rational>(dim, lo)), Point(std::vector<Rational>(dim, hi)));
}

bool Window::contains(const Point& p) const {
  if (p.dim() != dim()) return false;
  for (std::size_t j = 0; j < dim(); ++j) {
    if (!(lower_[j] < p[j] && p[j] < upper_[j])) return false;
  }
  return true;
}

bool Window::inside(const Window& outer) const {
  for (std::size_t j = 0; j < dim(); ++j) {
    if (lower_[j] < outer.lower_[j] || outer.upper_[j] < upper_[j]) return false;
  }
  return true;
}

Window Window::translated(const Point& shift) const { return Window(lower_ + shift, upper_ + shift); }

std::vector<Point> enumerate_window(const TranslateSet& input, const Window& window) {
  if (window.dim() != input.dim()) throw DimensionMismatch("window dimension differs from set dimension");
  const TranslateSet set = input.is_canonical() ? input : canonicalize(input);
  std::vector<Point> out;
  if (!set.is_periodic()) {
    for (const auto& t : set.offsets()) {
      if (window.contains(t)) out.push_back(t);
    }
    return out;
  }
  const std::size_t d = set.dim();
  for (const auto& o : set.offsets()) {
    std::vector<mpz_class> lo(d), hi(d);
    bool empty = false;
    for (std::size_t j = 0; j < d; ++j) {
      std::tie(lo[j], hi[j]) = detail::period_index_range(o[j], set.period()[j], window.lower()[j], window.upper()[j]);
      if (lo[j] > hi[j]) empty = true;
    }
    if (empty) continue;
    std::vector<mpz_class> k = lo;
    while (true) {
      Point t = o;
      for (std::size_t j = 0; j < d; ++j) t[j] += Rational(k[j] * set.period()[j], mpz_class(1));
      out.push_back(std::move(t));
      std::size_t j = 0;
      for (; j < d; ++j) {
        if (k[j] < hi[j]) {
          ++k[j];
          break;
        }
        k[j] = lo[j];
      }
      if (j == d) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t common_denominator(const TranslateSet& set) {
  mpz_class q = 1;
  for (const auto& t : set.offsets()) {
    for (const auto& c : t) q = lcm(q, c.den());
  }
  if (!q.fits_slong_p()) throw Error("common denominator exceeds 64 bits");
  return q.get_si();
}

std::vector<std::int64_t> scale_to_grid(const Point& t, std::int64_t q) {
  std::vector<std::int64_t> out(t.dim());
  for (std::size_t j = 0; j < t.dim(); ++j) out[j] = (t[j] * Rational(static_cast<long>(q))).to_int64();
  return out;
}

TranslateSet translate_all(const TranslateSet& set, const Point& shift) {
  std::vector<Point> moved;
  moved.reserve(set.size());
  for (const auto& t : set.offsets()) moved.push_back(t + shift);
  return set.with_offsets(std::move(moved));
}

namespace detail {

std::pair<mpz_class, mpz_class> period_index_range(const Rational& o, std::int64_t p, const Rational& lo,
                                                   const Rational& hi) {
  const Rational period(p);
  const mpz_class kmin = Rational((lo - o) / period).floor() + 1;
  const Rational upper = (hi - o) / period;
  mpz_class kmax = upper.floor();
  if (upper.is_integer()) kmax -= 1;
  return {kmin, kmax};
}

}  // namespace detail

}  // namespace cubetile
