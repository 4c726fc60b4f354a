#include "cubetile/harness.hpp"

#include <algorithm>
#include <random>

#include "cubetile/errors.hpp"
#include "cubetile/transforms.hpp"

namespace cubetile {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Iterates all k in [0, extent_0) x ... x [0, extent_{n-1}), last index fastest.
template <class F>
void for_each_index(const std::vector<std::int64_t>& extent, F&& f) {
  std::vector<std::int64_t> k(extent.size(), 0);
  for (auto e : extent) {
    if (e <= 0) return;
  }
  while (true) {
    f(k);
    std::size_t j = k.size();
    while (true) {
      if (j == 0) return;
      --j;
      if (++k[j] < extent[j]) break;
      k[j] = 0;
    }
  }
}

// Radical inverse of n in `base` as an exact rational in [0, 1).
Rational radical_inverse(std::int64_t n, std::int64_t base) {
  Rational value(0);
  Rational scale(1, static_cast<long>(base));
  while (n > 0) {
    value += Rational(static_cast<long>(n % base)) * scale;
    scale *= Rational(1, static_cast<long>(base));
    n /= base;
  }
  return value;
}

std::int64_t nth_prime(std::size_t n) {
  std::int64_t candidate = 1;
  std::size_t found = 0;
  while (found <= n) {
    ++candidate;
    bool prime = candidate >= 2;
    for (std::int64_t f = 2; f * f <= candidate && prime; ++f) prime = candidate % f != 0;
    if (prime) ++found;
  }
  return candidate;
}

}  // namespace

TranslateSet gen_lattice(std::size_t dim) {
  if (dim == 0) throw Error("dimension must be at least 1");
  return TranslateSet::periodic(std::vector<std::int64_t>(dim, 1), {Point::zero(dim)});
}

TranslateSet gen_shifted_columns(std::size_t dim, const std::vector<std::int64_t>& period,
                                 const std::vector<Rational>& shifts, std::size_t axis) {
  if (dim == 0 || period.size() != dim) throw DimensionMismatch("period length must equal the dimension");
  if (axis >= dim) throw PreconditionError("column axis out of range");
  std::vector<std::int64_t> column_extent;
  for (std::size_t j = 0; j < dim; ++j) {
    if (j != axis) column_extent.push_back(period[j]);
  }
  std::int64_t columns = 1;
  for (auto e : column_extent) columns *= e;
  if (static_cast<std::int64_t>(shifts.size()) != columns) {
    throw PreconditionError("expected " + std::to_string(columns) + " column shifts, got " +
                            std::to_string(shifts.size()));
  }
  for (const auto& s : shifts) {
    if (s < Rational(0) || s >= Rational(1)) throw PreconditionError("column shifts must lie in [0, 1)");
  }
  std::vector<Point> offsets;
  std::size_t column = 0;
  for_each_index(column_extent, [&](const std::vector<std::int64_t>& m) {
    for (std::int64_t n = 0; n < period[axis]; ++n) {
      Point t = Point::zero(dim);
      std::size_t c = 0;
      for (std::size_t j = 0; j < dim; ++j) {
        t[j] = j == axis ? Rational(static_cast<long>(n)) + shifts[column] : Rational(static_cast<long>(m[c++]));
      }
      offsets.push_back(std::move(t));
    }
    ++column;
  });
  return TranslateSet::periodic(period, std::move(offsets));
}

TranslateSet gen_random_slides(std::uint64_t seed, std::size_t dim, std::size_t steps, const RandomSlideOptions& options) {
  if (dim == 0) throw Error("dimension must be at least 1");
  if (options.period < 1 || options.max_denominator < 2) throw Error("invalid random slide options");
  std::mt19937_64 rng(seed);
  const std::size_t column_axis = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(dim) - 1));
  const std::int64_t den = uniform(rng, 2, options.max_denominator);
  const auto random_fraction = [&] { return Rational(static_cast<long>(uniform(rng, 1, den - 1)), static_cast<long>(den)); };

  std::vector<Point> offsets;
  for_each_index(std::vector<std::int64_t>(dim, options.period), [&](const std::vector<std::int64_t>& k) {
    std::vector<Rational> c;
    for (auto v : k) c.emplace_back(static_cast<long>(v));
    offsets.emplace_back(std::move(c));
  });
  TranslateSet set = TranslateSet::periodic(std::vector<std::int64_t>(dim, options.period), std::move(offsets));
  if (steps == 0) return canonicalize(TranslateSet(dim, Mode::Periodic, {Point::zero(dim)}, std::vector<std::int64_t>(dim, 1)));

  for (std::size_t step = 0; step < steps; ++step) {
    if (uniform(rng, 0, 1) == 0) {
      // Column shift: the column's cubes fill a slab along the column axis
      // that no other cube meets, because every translate shares the same
      // off-axis residues; sliding the column inside its slab keeps the tiling.
      const auto& base = set.offsets()[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(set.size()) - 1))];
      const Rational b = random_fraction();
      std::vector<Point> moved;
      for (const auto& t : set.offsets()) {
        bool same_column = true;
        for (std::size_t j = 0; j < dim && same_column; ++j) same_column = j == column_axis || t[j] == base[j];
        Point u = t;
        if (same_column) u[column_axis] += b;
        moved.push_back(std::move(u));
      }
      set = set.with_offsets(std::move(moved));
    } else {
      const std::size_t axis = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(dim) - 1));
      Rational anchor = uniform(rng, 0, 1) == 0
                            ? set.offsets()[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(set.size()) - 1))][axis]
                            : random_fraction();
      set = slide(set, {axis, anchor, random_fraction()});
    }
  }
  return set;
}

TranslateSet gen_triangular_lattice(const std::vector<std::vector<Rational>>& lower) {
  const std::size_t d = lower.size();
  if (d == 0) throw Error("dimension must be at least 1");
  for (const auto& row : lower) {
    if (row.size() != d) throw DimensionMismatch("lattice basis must be square");
  }
  // Inverse of the unitriangular matrix by forward substitution; the period
  // is the lcm of its denominators, so period * e_i lies in the lattice.
  std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d));
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t i = 0; i < d; ++i) {
      Rational v = i == c ? Rational(1) : Rational(0);
      for (std::size_t m = 0; m < i; ++m) v -= lower[i][m] * inv[m][c];
      inv[i][c] = v;
    }
  }
  mpz_class p = 1;
  for (const auto& row : inv) {
    for (const auto& v : row) p = lcm(p, v.den());
  }
  if (!p.fits_slong_p()) throw Error("lattice period too large");
  const std::int64_t period = p.get_si();

  std::vector<Point> offsets;
  std::vector<Rational> coords(d);
  std::vector<Rational> k(d);
  const auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == d) {
      offsets.emplace_back(coords);
      return;
    }
    Rational c(0);
    for (std::size_t m = 0; m < i; ++m) c += lower[i][m] * k[m];
    // t_i = k_i + c must lie in [0, period).
    const mpz_class first = Rational(-c).is_integer() ? mpz_class(-c.num()) : mpz_class(Rational(-c).floor() + 1);
    for (mpz_class ki = first; ki < first + period; ++ki) {
      k[i] = Rational(ki, mpz_class(1));
      coords[i] = k[i] + c;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return TranslateSet::periodic(std::vector<std::int64_t>(d, period), std::move(offsets));
}

TranslateSet gen_random_triangular_lattice(std::uint64_t seed, std::size_t dim, std::int64_t max_denominator) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> lower(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t m = 0; m < i; ++m) {
      const std::int64_t den = uniform(rng, 1, max_denominator);
      lower[i][m] = Rational(static_cast<long>(uniform(rng, 0, den - 1)), static_cast<long>(den));
    }
  }
  return gen_triangular_lattice(lower);
}

TranslateSet perturb_one_offset(const TranslateSet& set, std::uint64_t seed) {
  if (set.size() == 0) throw PreconditionError("cannot perturb an empty set");
  std::mt19937_64 rng(seed);
  const std::int64_t den = std::max<std::int64_t>(2, common_denominator(set));
  for (int attempt = 0; attempt < 256; ++attempt) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(set.size()) - 1));
    const auto axis = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(set.dim()) - 1));
    const Rational delta(static_cast<long>(uniform(rng, 1, den - 1)), static_cast<long>(den));
    std::vector<Point> moved = set.offsets();
    moved[i][axis] += delta;
    try {
      TranslateSet candidate = set.with_offsets(std::move(moved));
      if (!set.is_periodic() || !check_tiling(candidate).tiles()) return candidate;
    } catch (const DuplicateTranslate&) {
    }
  }
  throw PreconditionError("no tiling-breaking perturbation found");
}

std::vector<Point> default_samples(const TranslateSet& set, std::size_t count) {
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    Point x = Point::zero(set.dim());
    for (std::size_t j = 0; j < set.dim(); ++j) {
      const Rational scale = set.is_periodic() ? Rational(static_cast<long>(set.period()[j])) : Rational(1);
      x[j] = radical_inverse(static_cast<std::int64_t>(i), nth_prime(j)) * scale;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::string CrossCheckResult::summary() const {
  std::string text = id + ": " + tiling.to_text() + " / ";
  if (spectrum == SpectrumOutcome::LikelySpectrum) {
    text += "LikelySpectrum";
  } else if (deficit_witness) {
    text += "NotSpectrum(deficit at " + deficit_witness->to_string() + ")";
  } else {
    text += "NotSpectrum(non-orthogonal " + violations.pairs.front().first.to_string() + " | " +
            violations.pairs.front().second.to_string() + ")";
  }
  return text + (agreement ? " / agree" : " / DISAGREE");
}

CrossCheckResult cross_check(const TranslateSet& input, const CrossCheckOptions& options, std::string id) {
  if (!input.is_periodic()) throw PreconditionError("cross-check needs a periodic set");
  const TranslateSet set = input.is_canonical() ? input : canonicalize(input);
  CrossCheckResult result;
  result.id = std::move(id);
  result.tiling = check_tiling(set, options.cell_budget);
  result.violations = check_orthogonality(set);
  if (!result.violations.empty()) {
    result.spectrum = SpectrumOutcome::NotSpectrum;
  } else {
    std::vector<Point> samples = options.samples ? *options.samples : default_samples(set);
    if (result.tiling.outcome == TilingOutcome::Hole) {
      const auto holes = hole_centres(torus_cover_map(set, options.cell_budget), options.hole_samples);
      samples.insert(samples.end(), holes.begin(), holes.end());
    }
    SpectrumVerdict verdict = spectrum_verdict(set, samples, options.cutoff, options.eps);
    result.spectrum = verdict.likely_spectrum ? SpectrumOutcome::LikelySpectrum : SpectrumOutcome::NotSpectrum;
    result.deficit_witness = verdict.witness;
    result.completeness = std::move(verdict.reports);
  }
  result.agreement = result.tiling.tiles() == (result.spectrum == SpectrumOutcome::LikelySpectrum);
  return result;
}

}  // namespace cubetile
