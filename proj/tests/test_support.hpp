#pragma once

// Shared helpers for the test suites: literals, seeded generators, and
// brute-force oracles that deliberately avoid the library's fast paths.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cubetile/point.hpp"
#include "cubetile/rational.hpp"
#include "cubetile/translate_set.hpp"

namespace cubetile::testing {

inline Rational R(const std::string& text) { return Rational::parse(text); }

inline Point P(std::initializer_list<const char*> coords) {
  std::vector<Rational> c;
  for (const char* s : coords) c.push_back(Rational::parse(s));
  return Point(std::move(c));
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  /// Rational with denominator in [1, max_den] and |value| <= bound.
  Rational rational(std::int64_t max_den, std::int64_t bound) {
    const std::int64_t den = integer(1, max_den);
    return Rational(static_cast<long>(integer(-bound * den, bound * den)), static_cast<long>(den));
  }

  Point point(std::size_t dim, std::int64_t max_den, std::int64_t bound) {
    std::vector<Rational> c;
    for (std::size_t j = 0; j < dim; ++j) c.push_back(rational(max_den, bound));
    return Point(std::move(c));
  }

  /// Finite set of up to `count` distinct random points.
  TranslateSet finite_set(std::size_t dim, std::size_t count, std::int64_t max_den, std::int64_t bound) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < count; ++i) {
      Point p = point(dim, max_den, bound);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    return TranslateSet::finite(dim, std::move(pts));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Definition of orthogonality, written out independently of the library.
inline bool oracle_orthogonal(const Point& t, const Point& u) {
  for (std::size_t j = 0; j < t.dim(); ++j) {
    const Rational gap = t[j] - u[j];
    if (gap.is_integer() && !gap.is_zero()) return true;
  }
  return false;
}

inline bool oracle_disjoint(const Point& t, const Point& u) {
  for (std::size_t j = 0; j < t.dim(); ++j) {
    Rational gap = t[j] - u[j];
    if (gap < Rational(0)) gap = -gap;
    if (gap >= Rational(1)) return true;
  }
  return false;
}

/// |phi(x)|^2 evaluated from the complex form (e^{i 2 pi x} - 1) / (i 2 pi x).
inline double oracle_phi_sq(double x) {
  if (x == 0.0) return 1.0;
  using C = std::complex<double>;
  const C i2pix(0.0, 2.0 * std::numbers::pi * x);
  return std::norm((std::exp(i2pix) - C(1.0)) / i2pix);
}

/// Plain sum of sinc^2 products over translates in (x - N - 1, x + N + 1)^d,
/// enumerating the period lattice by brute force.
inline double oracle_completeness(const TranslateSet& set, const Point& x, std::int64_t cutoff) {
  double total = 0.0;
  const std::size_t d = set.dim();
  const auto inside = [&](const Point& t) {
    for (std::size_t j = 0; j < d; ++j) {
      const Rational g = t[j] - x[j];
      if (!(g > Rational(static_cast<long>(-cutoff - 1)) && g < Rational(static_cast<long>(cutoff + 1)))) return false;
    }
    return true;
  };
  const auto term = [&](const Point& t) {
    double prod = 1.0;
    for (std::size_t j = 0; j < d; ++j) prod *= oracle_phi_sq((t[j] - x[j]).to_double());
    return prod;
  };
  if (!set.is_periodic()) {
    for (const auto& t : set.offsets()) {
      if (inside(t)) total += term(t);
    }
    return total;
  }
  std::vector<std::int64_t> lo(d), hi(d), k(d);
  for (std::size_t j = 0; j < d; ++j) {
    const std::int64_t reach = (cutoff + 3) / set.period()[j] + 2;
    const std::int64_t centre = x[j].floor().get_si() / set.period()[j];
    lo[j] = centre - reach;
    hi[j] = centre + reach;
  }
  for (const auto& o : set.offsets()) {
    k = lo;
    while (true) {
      Point t = o + set.lattice_vector(k);
      if (inside(t)) total += term(t);
      std::size_t j = 0;
      for (; j < d; ++j) {
        if (++k[j] <= hi[j]) break;
        k[j] = lo[j];
      }
      if (j == d) break;
    }
  }
  return total;
}

}  // namespace cubetile::testing
