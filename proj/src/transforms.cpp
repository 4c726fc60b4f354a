#include "cubetile/transforms.hpp"

#include <algorithm>
#include <map>

#include "cubetile/analysis.hpp"
#include "cubetile/errors.hpp"

namespace cubetile {

namespace {

void require_axis(const TranslateSet& set, std::size_t axis) {
  if (axis >= set.dim()) {
    throw PreconditionError("axis " + std::to_string(axis + 1) + " out of range for dimension " +
                            std::to_string(set.dim()));
  }
}

Point apply_slide(Point t, const SlideSpec& spec) {
  if (slide_moves(t, spec)) t[spec.axis] += spec.shift;
  return t;
}

TranslateSet rebuild(const TranslateSet& set, std::vector<Point> offsets) {
  try {
    return set.with_offsets(std::move(offsets));
  } catch (const DuplicateTranslate& e) {
    throw TranslateCollision(std::string("slide maps two translates together: ") + e.what());
  }
}

}  // namespace

bool slide_moves(const Point& t, const SlideSpec& spec) { return !Rational(t[spec.axis] - spec.anchor).is_integer(); }

TranslateSet slide(const TranslateSet& set, const SlideSpec& spec) {
  require_axis(set, spec.axis);
  std::vector<Point> image;
  image.reserve(set.size());
  for (const auto& t : set.offsets()) image.push_back(apply_slide(t, spec));
  return rebuild(set, std::move(image));
}

TranslateSet keller_shift(const TranslateSet& set, const Point& t, const Point& t_prime, std::size_t axis) {
  require_axis(set, axis);
  if (!set.contains(t) || !set.contains(t_prime)) throw PreconditionError("both translates must belong to the set");
  const Rational gap = t[axis] - t_prime[axis];
  if (gap.is_integer()) {
    throw PreconditionError("translates " + t.to_string() + " and " + t_prime.to_string() +
                            " already differ by an integer on the axis");
  }
  // The slide moves everything outside t's class by +gap; translating the
  // whole set back by -gap leaves the others fixed and moves t's class by -gap.
  const TranslateSet moved = slide(set, {axis, t[axis], gap});
  return translate_all(moved, Point::axis(set.dim(), axis, -gap));
}

IntegerizeResult integerize(const TranslateSet& input, std::int64_t cutoff, const IntegerizeOptions& options) {
  if (cutoff < 1) throw Error("cutoff N must be a positive integer");
  const TranslateSet source = input.is_canonical() ? input : canonicalize(input);
  const std::size_t d = source.dim();
  const Rational reach(static_cast<long>(cutoff + 2));
  const Window working = Window::radius(d, reach);

  const ViolationReport pre = source.is_periodic() ? check_orthogonality(source) : check_orthogonality(source, working);
  if (!pre.empty()) {
    throw NotOrthogonal("integerize needs an orthogonal set; " + pre.pairs.front().first.to_string() + " and " +
                        pre.pairs.front().second.to_string() + " are not orthogonal");
  }

  IntegerizeResult result{source, {}, {}};
  std::vector<Point> current = source.offsets();

  for (std::size_t axis = 0; axis < d; ++axis) {
    // Off-axis coordinates do not change during this pass, so the line each
    // translate meets is fixed: the integer vector ceil(t_j), j != axis.
    std::vector<Point> local = enumerate_window(result.set, working);
    std::map<std::vector<mpz_class>, std::vector<std::size_t>> lines;
    for (std::size_t i = 0; i < local.size(); ++i) {
      std::vector<mpz_class> key;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == axis) continue;
        const Rational& c = local[i][j];
        key.push_back(c.is_integer() ? c.num() : mpz_class(c.floor() + 1));
      }
      lines[key].push_back(i);
    }
    std::vector<const std::vector<std::size_t>*> ordered;
    for (const auto& [key, members] : lines) ordered.push_back(&members);
    if (options.order == LineOrder::ReverseLexicographic) std::reverse(ordered.begin(), ordered.end());

    Rational running(0);
    for (const auto* members : ordered) {
      const auto pick = std::find_if(members->begin(), members->end(),
                                     [&](std::size_t i) { return !local[i][axis].is_integer(); });
      if (pick == members->end()) continue;
      const Rational f = local[*pick][axis].frac();
      // Shift congruent to -f mod 1, chosen so the running sum stays in (-1, 1).
      const Rational b = running - f > Rational(-1) ? -f : Rational(1) - f;
      running += b;
      const SlideSpec spec{axis, Rational(0), b};
      for (auto& p : local) p = apply_slide(std::move(p), spec);
      for (auto& p : current) p = apply_slide(std::move(p), spec);
      result.set = rebuild(result.set, current);
      result.slides.push_back(spec);
      if (options.trace) options.trace(result.set, spec);
    }
  }
  for (std::size_t i = 0; i < current.size(); ++i) result.moves.emplace_back(source.offsets()[i], current[i]);
  return result;
}

}  // namespace cubetile
