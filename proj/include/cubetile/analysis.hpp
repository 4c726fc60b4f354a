#pragma once

// Orthogonality and packing predicates for exponentials e_t(x) = exp(2 pi i t.x)
// on the unit cube, and the numerical completeness sum
//
//   S_N(x) = sum_{t : |t - x|_inf < N + 1} prod_j sinc^2(t_j - x_j)
//
// whose limit is 1 for every x exactly when the translates form a spectrum.
// Exact predicates never touch floating point; the sum evaluates |phi|^2 in
// double precision after exact zero/one short-circuits.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubetile/point.hpp"
#include "cubetile/rational.hpp"
#include "cubetile/translate_set.hpp"

namespace cubetile {

/// |phi(x)|^2 = (sin(pi x) / (pi x))^2, with phi(0) = 1.
double phi_sq(double x);
/// Exact 1 at 0 and exact 0 at nonzero integers; otherwise double precision.
double phi_sq(const Rational& x);

/// |<e_t, e_u>|^2 = prod_j phi_sq(t_j - u_j).
double pair_inner_sq(const Point& t, const Point& u);

/// Some coordinate gap |t_j - u_j| is a positive integer. Throws on t == u.
bool is_orthogonal_pair(const Point& t, const Point& u);

/// The half-open cubes [0,1)^d + t and [0,1)^d + u are disjoint. Throws on t == u.
bool is_disjoint_pair(const Point& t, const Point& u);

enum class ViolationKind { Orthogonality, Overlap };

struct ViolationReport {
  ViolationKind kind;
  /// Sorted; each pair (t, u) has t < u lexicographically unless it comes from
  /// a periodic set, where t is a base offset and u any translate.
  std::vector<std::pair<Point, Point>> pairs;

  [[nodiscard]] bool empty() const { return pairs.empty(); }
  /// One "pair: t | u" line per witness.
  [[nodiscard]] std::string to_text() const;
};

/// Every pair of distinct translates that is not orthogonal.
///
/// Finite sets: pairs of translates inside `window` (all translates when no
/// window is given). Periodic sets without a window: one representative per
/// class of violating pairs modulo the period lattice, found by comparing each
/// base offset with the offsets shifted by the 3^d neighbouring periods.
/// Periodic sets with a window: every pair of translates inside the window.
ViolationReport check_orthogonality(const TranslateSet& set, const std::optional<Window>& window = std::nullopt);

/// Same scoping rules as check_orthogonality, for overlapping cubes.
ViolationReport check_packing(const TranslateSet& set, const std::optional<Window>& window = std::nullopt);

/// A pair (t, t + e_j) of translates sharing a full (d-1)-face, if any.
std::optional<std::pair<Point, Point>> has_face_twin(const TranslateSet& set);

/// Certified bound on the completeness-sum mass outside the cutoff N for any
/// packing, see docs/tail_bound.md:
///
///   tail_bound(d, N) = (M + 2 tau)^d - M^d,  M = 3 + 2/pi^2,  tau = 1/(pi^2 (N-1))
///
/// for N >= 2, and 1 (Bessel) for N = 1.
double tail_bound(std::size_t dim, std::int64_t cutoff);

/// C_d with tail_bound(d, N) <= C_d / N for every N >= 2.
double tail_constant(std::size_t dim);

enum class CompletenessVerdict { CompleteWithin, DeficitAtLeast };

struct CompletenessReport {
  Point sample;
  std::int64_t cutoff = 0;
  double partial_sum = 0.0;
  double tail_bound = 0.0;
  CompletenessVerdict verdict = CompletenessVerdict::CompleteWithin;
  /// epsilon for CompleteWithin, the certified deficit delta otherwise.
  double amount = 0.0;

  [[nodiscard]] bool certified_deficit() const { return verdict == CompletenessVerdict::DeficitAtLeast; }
  static std::string csv_header();
  /// x, N, partial_sum (17 significant digits), tail_bound, verdict.
  [[nodiscard]] std::string csv_row() const;
};

/// Completeness sum at x with cutoff N. Throws NotOrthogonal when the
/// translates near x are not pairwise orthogonal.
CompletenessReport completeness_sum(const TranslateSet& set, const Point& x, std::int64_t cutoff, double eps = 0.05);

/// The sum of phi-products over translates t with t - x inside `window`
/// (window given relative to x). No orthogonality check.
double window_mass(const TranslateSet& set, const Point& x, const Window& relative_window);

struct SpectrumVerdict {
  bool likely_spectrum = true;
  /// The sample that certified the deficit, for a negative verdict.
  std::optional<Point> witness;
  std::vector<CompletenessReport> reports;
};

/// NotSpectrum as soon as one sample carries a certified deficit; otherwise
/// LikelySpectrum. Reports come back in sample order.
SpectrumVerdict spectrum_verdict(const TranslateSet& set, const std::vector<Point>& samples, std::int64_t cutoff,
                                 double eps = 0.05);

}  // namespace cubetile
