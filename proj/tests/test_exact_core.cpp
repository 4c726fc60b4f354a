#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "cubetile/cubeset_io.hpp"
#include "cubetile/errors.hpp"
#include "cubetile/translate_set.hpp"
#include "test_support.hpp"

using namespace cubetile;
using cubetile::testing::Gen;
using cubetile::testing::P;
using cubetile::testing::R;

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(R("6/4"), Rational(3, 2));
  EXPECT_EQ(R("-3").to_string(), "-3");
  EXPECT_EQ(R("-2/4").to_string(), "-1/2");
  EXPECT_THROW(R("2/-4"), ParseError);
  EXPECT_THROW(R("1/0"), ParseError);
  EXPECT_THROW(R("abc"), ParseError);
}

TEST(Rational, FloorAndFrac) {
  EXPECT_EQ(R("-1/3").floor(), -1);
  EXPECT_EQ(R("-1/3").frac(), R("2/3"));
  EXPECT_EQ(R("7/2").floor(), 3);
  EXPECT_TRUE(R("4/2").is_integer());
}

TEST(Canonicalize, ReducesModuloPeriod) {
  const auto set = TranslateSet::periodic({2}, {P({"5/2"})});
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.offsets()[0], P({"1/2"}));
}

TEST(Canonicalize, FiniteSetIsSorted) {
  const auto set = TranslateSet::finite(2, {P({"1", "1/2"}), P({"0", "0"})});
  EXPECT_EQ(set.offsets(), (std::vector<Point>{P({"0", "0"}), P({"1", "1/2"})}));
}

TEST(Canonicalize, RejectsDuplicatesAfterReduction) {
  EXPECT_THROW(TranslateSet::periodic({1}, {P({"0"}), P({"1"})}), DuplicateTranslate);
  EXPECT_THROW(TranslateSet::finite(1, {P({"1/2"}), P({"2/4"})}), DuplicateTranslate);
}

TEST(Canonicalize, RejectsBadStructure) {
  EXPECT_THROW(TranslateSet(2, Mode::Periodic, {P({"0", "0"})}, {1}), Error);
  EXPECT_THROW(TranslateSet(2, Mode::Periodic, {P({"0", "0"})}, {1, 0}), Error);
  EXPECT_THROW(TranslateSet::finite(2, {P({"0"})}), DimensionMismatch);
}

TEST(Canonicalize, Idempotent) {
  Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(1, 3));
    std::vector<Point> pts;
    for (int k = 0; k < 5; ++k) pts.push_back(gen.point(d, 6, 5));
    std::vector<std::int64_t> period;
    for (std::size_t j = 0; j < d; ++j) period.push_back(gen.integer(1, 3));
    try {
      const auto once = canonicalize(TranslateSet(d, Mode::Periodic, pts, period));
      EXPECT_EQ(canonicalize(once), once);
    } catch (const DuplicateTranslate&) {
    }
    try {
      const auto once = canonicalize(TranslateSet(d, Mode::Finite, pts));
      EXPECT_EQ(canonicalize(once), once);
    } catch (const DuplicateTranslate&) {
    }
  }
}

TEST(EnumerateWindow, IntegerLine) {
  const auto z = TranslateSet::periodic({1}, {P({"0"})});
  EXPECT_EQ(enumerate_window(z, Window::cube(1, R("-3/2"), R("3/2"))),
            (std::vector<Point>{P({"-1"}), P({"0"}), P({"1"})}));
  EXPECT_TRUE(enumerate_window(z, Window::cube(1, R("1/10"), R("9/10"))).empty());
}

TEST(EnumerateWindow, OpenBoundary) {
  const auto z = TranslateSet::periodic({1}, {P({"0"})});
  EXPECT_EQ(enumerate_window(z, Window::cube(1, R("-1"), R("1"))), (std::vector<Point>{P({"0"})}));
  EXPECT_EQ(enumerate_window(z, Window::radius(1, R("1"))).size(), 3u);
}

TEST(EnumerateWindow, PeriodicBruteForce) {
  const auto set = TranslateSet::periodic({2, 2}, {P({"0", "0"}), P({"1", "1/2"})});
  const auto w = Window::cube(2, R("-1/2"), R("5/2"));
  std::vector<Point> expected;
  for (const auto& o : set.offsets()) {
    for (int a = -1; a <= 1; ++a) {
      for (int b = -1; b <= 1; ++b) {
        Point t = o + P({std::to_string(2 * a).c_str(), std::to_string(2 * b).c_str()});
        if (w.contains(t)) expected.push_back(t);
      }
    }
  }
  std::sort(expected.begin(), expected.end());
  // (0,0) contributes its four even corners; (1,1/2) only itself, since
  // (1,5/2) sits on the open upper face.
  EXPECT_EQ(expected.size(), 5u);
  EXPECT_EQ(enumerate_window(set, w), expected);
}

TEST(EnumerateWindow, FiniteReturnsWhatExists) {
  const auto set = TranslateSet::finite(1, {P({"0"}), P({"5"})});
  EXPECT_EQ(enumerate_window(set, Window::radius(1, R("100"))).size(), 2u);
}

TEST(EnumerateWindow, MonotoneInWindow) {
  Gen gen(5);
  for (int i = 0; i < 100; ++i) {
    const auto set = TranslateSet::periodic({2, 3}, {P({"0", "0"}), P({"1/3", "1"}), P({"3/2", "5/2"})});
    const Rational lo = gen.rational(4, 3);
    const Rational hi = lo + Rational(static_cast<long>(gen.integer(1, 4)));
    const auto inner = enumerate_window(set, Window::cube(2, lo, hi));
    const auto outer = enumerate_window(set, Window::cube(2, lo - gen.rational(3, 1).abs(), hi + gen.rational(3, 1).abs()));
    for (const auto& p : inner) EXPECT_TRUE(std::binary_search(outer.begin(), outer.end(), p));
  }
}

TEST(EnumerateWindow, PeriodBoxHoldsEveryOffsetOnce) {
  Gen gen(23);
  for (int i = 0; i < 50; ++i) {
    const std::vector<std::int64_t> period{gen.integer(1, 3), gen.integer(1, 3)};
    std::vector<Point> pts;
    for (int k = 0; k < 4; ++k) pts.push_back(gen.point(2, 4, 3));
    TranslateSet set = [&] {
      try {
        return TranslateSet::periodic(period, pts);
      } catch (const DuplicateTranslate&) {
        return TranslateSet::periodic(period, {pts[0]});
      }
    }();
    // Half-open period box [s, s + P) as an open window: offsets never sit on
    // the shifted lower face because s has denominator 97.
    const Rational s(-1, 97);
    const Window box(Point{s, s}, Point{s + Rational(static_cast<long>(period[0])), s + Rational(static_cast<long>(period[1]))});
    EXPECT_EQ(enumerate_window(set, box).size(), set.size());
  }
}

TEST(CommonDenominator, Examples) {
  EXPECT_EQ(common_denominator(TranslateSet::finite(2, {P({"0", "0"}), P({"1", "1/2"})})), 2);
  EXPECT_EQ(common_denominator(TranslateSet::periodic({1, 1}, {P({"0", "0"})})), 1);
  EXPECT_EQ(common_denominator(TranslateSet::finite(2, {P({"1/3", "1/4"})})), 12);
}

TEST(CubesetIo, ParsesSpecFormat) {
  const auto set = parse_cubeset(R"({"dim":2,"mode":"periodic","period":[2,2],"offsets":[["1","1/2"],["0","0"]]})");
  EXPECT_TRUE(set.is_periodic());
  EXPECT_EQ(set.offsets()[1], P({"1", "1/2"}));
  EXPECT_EQ(to_json_line(set), R"({"dim":2,"mode":"periodic","period":[2,2],"offsets":[["0","0"],["1","1/2"]]})");
}

TEST(CubesetIo, RejectsMalformed) {
  EXPECT_THROW(parse_cubeset("{"), ParseError);
  EXPECT_THROW(parse_cubeset(R"({"dim":1,"mode":"other","offsets":[]})"), ParseError);
  EXPECT_THROW(parse_cubeset(R"({"dim":1,"mode":"periodic","period":[1],"offsets":[["0"],["1"]]})"),
               DuplicateTranslate);
  EXPECT_THROW(parse_cubeset(R"({"dim":1,"mode":"finite","offsets":[["x"]]})"), ParseError);
}

TEST(CubesetIo, RoundTripOnCanonicalSets) {
  Gen gen(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = static_cast<std::size_t>(gen.integer(1, 3));
    const auto fin = gen.finite_set(d, 6, 9, 4);
    EXPECT_EQ(parse_cubeset(to_json_line(fin)), fin);
    std::vector<std::int64_t> period(d, gen.integer(1, 4));
    try {
      const auto per = TranslateSet::periodic(period, fin.offsets());
      EXPECT_EQ(parse_cubeset(to_json(per).dump(2)), per);
    } catch (const DuplicateTranslate&) {
    }
  }
}

TEST(CubesetIo, JsonLines) {
  std::istringstream in(R"({"dim":1,"mode":"finite","offsets":[["0"]]}

{"dim":1,"mode":"periodic","period":[1],"offsets":[["1/2"]]}
)");
  const auto sets = read_cubeset_lines(in);
  ASSERT_EQ(sets.size(), 2u);
  EXPECT_TRUE(sets[1].is_periodic());
}
