#include <gtest/gtest.h>

#include "cubetile/analysis.hpp"
#include "cubetile/errors.hpp"
#include "cubetile/harness.hpp"
#include "cubetile/tiling.hpp"
#include "cubetile/transforms.hpp"
#include "test_support.hpp"

using namespace cubetile;
using cubetile::testing::Gen;
using cubetile::testing::P;
using cubetile::testing::R;

namespace {

TranslateSet columns_mod7() {
  std::vector<Rational> shifts;
  for (int m = 0; m < 7; ++m) shifts.push_back(Rational(m, 7));
  return gen_shifted_columns(2, {7, 1}, shifts, 1);
}

SlideSpec random_spec(Gen& gen, const TranslateSet& set) {
  const auto axis = static_cast<std::size_t>(gen.integer(0, static_cast<std::int64_t>(set.dim()) - 1));
  const std::int64_t den = gen.integer(2, 6);
  Rational anchor = gen.integer(0, 1) == 0 ? set.offsets()[static_cast<std::size_t>(gen.integer(0, static_cast<std::int64_t>(set.size()) - 1))][axis]
                                           : Rational(static_cast<long>(gen.integer(0, den - 1)), static_cast<long>(den));
  return {axis, anchor, Rational(static_cast<long>(gen.integer(-2 * den, 2 * den)), static_cast<long>(den))};
}

void expect_integral_window(const TranslateSet& set, std::int64_t n) {
  for (const auto& t : enumerate_window(set, Window::cube(set.dim(), Rational(static_cast<long>(-n)), Rational(static_cast<long>(n))))) {
    EXPECT_TRUE(t.is_integral()) << t.to_string();
  }
}

void expect_small_moves(const IntegerizeResult& r) {
  for (const auto& [from, to] : r.moves) {
    for (std::size_t j = 0; j < from.dim(); ++j) EXPECT_LT((to[j] - from[j]).abs(), Rational(1));
  }
}

}  // namespace

TEST(Slide, Examples) {
  const auto z2 = gen_lattice(2);
  EXPECT_EQ(slide(z2, {0, R("0"), R("1/2")}), z2);
  EXPECT_EQ(slide(z2, {0, R("1/2"), R("1/2")}), translate_all(z2, P({"1/2", "0"})));

  const auto cols = gen_shifted_columns(2, {2, 2}, {R("0"), R("1/3")}, 1);
  const auto moved = slide(cols, {1, R("0"), R("2/3")});
  EXPECT_EQ(moved, TranslateSet::periodic({2, 2}, {P({"0", "0"}), P({"0", "1"}), P({"1", "1"}), P({"1", "2"})}));
  EXPECT_TRUE(check_tiling(moved).tiles());
}

TEST(Slide, CollisionAndAxisErrors) {
  const auto bad = TranslateSet::finite(1, {P({"0"}), P({"1/2"})});
  EXPECT_THROW(slide(bad, {0, R("0"), R("-1/2")}), TranslateCollision);
  EXPECT_THROW(slide(gen_lattice(2), {2, R("0"), R("1")}), PreconditionError);
}

TEST(Slide, ZeroShiftIsIdentityAndRoundTrips) {
  Gen gen(71);
  std::size_t round_trips = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto set = gen_random_slides(seed, 2 + seed % 2, 6);
    const SlideSpec spec = random_spec(gen, set);
    EXPECT_EQ(slide(set, {spec.axis, spec.anchor, R("0")}), set);

    const auto there = slide(set, spec);
    std::vector<Point> moved_images;
    for (const auto& t : set.offsets()) {
      if (slide_moves(t, spec)) moved_images.push_back(set.reduce(t + Point::axis(set.dim(), spec.axis, spec.shift)));
    }
    std::sort(moved_images.begin(), moved_images.end());
    // The inverse undoes the slide whenever it moves exactly the images of
    // the moved class.
    for (const Rational& anchor : {spec.anchor, spec.anchor + spec.shift}) {
      const SlideSpec inverse{spec.axis, anchor, -spec.shift};
      std::vector<Point> moved_back;
      for (const auto& s : there.offsets()) {
        if (slide_moves(s, inverse)) moved_back.push_back(s);
      }
      if (moved_back != moved_images) continue;
      EXPECT_EQ(slide(there, inverse), set);
      ++round_trips;
    }
  }
  EXPECT_GT(round_trips, 30u);
}

TEST(Slide, PreservesTilingAndOrthogonality) {
  Gen gen(73);
  for (int i = 0; i < 60; ++i) {
    const auto set = gen_random_slides(static_cast<std::uint64_t>(i + 100), 2 + i % 2, 5);
    const auto image = slide(set, random_spec(gen, set));
    EXPECT_TRUE(check_tiling(image).tiles());
    EXPECT_TRUE(check_orthogonality(image).empty());
  }
}

TEST(Slide, KeepsCompletenessNearOne) {
  Gen gen(79);
  for (int i = 0; i < 5; ++i) {
    const auto set = gen_random_slides(static_cast<std::uint64_t>(i + 7), 2, 4);
    const auto image = slide(set, random_spec(gen, set));
    for (int k = 0; k < 10; ++k) {
      const auto r = completeness_sum(image, gen.point(2, 11, 2), 60);
      EXPECT_EQ(r.verdict, CompletenessVerdict::CompleteWithin);
      EXPECT_NEAR(r.partial_sum, 1.0, 0.05);
    }
  }
}

TEST(Slide, HolePersists) {
  Gen gen(83);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto tiling = gen_random_slides(seed, 2, 6);
    const auto removed = tiling.offsets()[seed % tiling.size()];
    std::vector<Point> rest;
    for (const auto& t : tiling.offsets()) {
      if (t != removed) rest.push_back(t);
    }
    const auto holed = tiling.with_offsets(rest);
    ASSERT_TRUE(check_orthogonality(holed).empty());
    const Point g = removed + P({"1/101", "1/103"});
    ASSERT_FALSE(is_covered(holed, g));

    const SlideSpec spec = random_spec(gen, holed);
    const auto image = slide(holed, spec);
    const Point gc = g + Point::axis(2, spec.axis, spec.shift);
    EXPECT_TRUE(!is_covered(image, g) || !is_covered(image, gc));
    const Point& h = !is_covered(image, g) ? g : gc;
    const Rational r(1, 1000);
    const auto found = hole_finder(image, Window(h - Point{r, r}, h + Point{r, r}));
    ASSERT_TRUE(found);
    EXPECT_FALSE(is_covered(image, *found));
  }
}

TEST(KellerShift, Examples) {
  const auto cols = gen_shifted_columns(2, {1, 2}, {R("0"), R("1/3")}, 0);
  // Columns along axis 0: {(n, 0)} and {(n + 1/3, 1)}.
  const Point t = P({"1/3", "1"});
  const Point tp = P({"0", "0"});
  const auto image = keller_shift(cols, t, tp);
  EXPECT_TRUE(image.contains(P({"0", "1"})));
  EXPECT_TRUE(image.contains(tp));
  EXPECT_TRUE(check_tiling(image).tiles());

  EXPECT_THROW(keller_shift(cols, P({"0", "0"}), P({"1", "0"})), PreconditionError);
  EXPECT_THROW(keller_shift(gen_lattice(2), P({"0", "0"}), P({"1", "0"})), PreconditionError);
  EXPECT_THROW(keller_shift(cols, P({"1/2", "0"}), tp), PreconditionError);
}

TEST(KellerShift, AlignsAndPreservesTiling) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto set = gen_random_slides(seed, 2, 6);
    for (std::size_t axis = 0; axis < 2; ++axis) {
      for (const auto& t : set.offsets()) {
        for (const auto& u : set.offsets()) {
          if ((t[axis] - u[axis]).is_integer()) continue;
          const auto image = keller_shift(set, t, u, axis);
          EXPECT_TRUE(check_tiling(image).tiles());
          EXPECT_TRUE(image.contains(u));
          Point moved = t;
          moved[axis] = u[axis];
          EXPECT_TRUE(image.contains(moved));
        }
      }
    }
  }
}

TEST(Integerize, Examples) {
  const auto z3 = gen_lattice(3);
  EXPECT_EQ(integerize(z3, 3).set, z3);
  EXPECT_TRUE(integerize(z3, 3).slides.empty());

  const auto half = translate_all(gen_lattice(2), P({"1/2", "0"}));
  const auto r = integerize(half, 3);
  expect_integral_window(r.set, 3);
  expect_small_moves(r);
  EXPECT_EQ(r.slides.size(), 1u);

  const auto cols = columns_mod7();
  const auto rc = integerize(cols, 3);
  expect_integral_window(rc.set, 3);
  expect_small_moves(rc);
  EXPECT_TRUE(check_orthogonality(rc.set).empty());
}

TEST(Integerize, FiniteWindowsAndTrace) {
  const auto cols = columns_mod7();
  const auto window = TranslateSet::finite(2, enumerate_window(cols, Window::radius(2, R("6"))));
  std::size_t steps = 0;
  IntegerizeOptions opts;
  opts.trace = [&](const TranslateSet& s, const SlideSpec&) {
    ++steps;
    EXPECT_TRUE(check_orthogonality(s).empty());
  };
  const auto r = integerize(window, 3, opts);
  EXPECT_EQ(steps, r.slides.size());
  EXPECT_GT(steps, 0u);
  expect_integral_window(r.set, 3);
  expect_small_moves(r);
  EXPECT_TRUE(check_orthogonality(r.set).empty());

  opts.order = LineOrder::ReverseLexicographic;
  opts.trace = nullptr;
  const auto rev = integerize(window, 3, opts);
  expect_integral_window(rev.set, 3);
  expect_small_moves(rev);
}

TEST(Integerize, RandomOrthogonalSets) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto set = gen_random_slides(seed, 2 + seed % 2, 8);
    const auto r = integerize(set, 3);
    expect_integral_window(r.set, 3);
    expect_small_moves(r);
    EXPECT_TRUE(check_orthogonality(r.set).empty());
    EXPECT_TRUE(check_tiling(r.set).tiles());
    // Running again on its own output changes nothing in the window.
    const auto again = integerize(r.set, 3);
    const auto w = Window::cube(set.dim(), R("-3"), R("3"));
    EXPECT_EQ(enumerate_window(again.set, w), enumerate_window(r.set, w));
  }
}

TEST(Integerize, RejectsNonOrthogonal) {
  const auto bad = TranslateSet::finite(2, {P({"0", "0"}), P({"1/2", "1/2"})});
  EXPECT_THROW(integerize(bad, 3), NotOrthogonal);
}
