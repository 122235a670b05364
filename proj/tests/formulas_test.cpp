#include <bipartite/formulas.hpp>

#include <gtest/gtest.h>

namespace bipartite {
namespace {

std::string c(Family f, int n, int r) { return count(f, n, r).count.str(); }

TEST(Count, PublishedSmallCells) {
  EXPECT_EQ(c(Family::U, 2, 2), "7");
  EXPECT_EQ(c(Family::X, 2, 2), "9");
  EXPECT_EQ(c(Family::XY, 2, 2), "12");
  EXPECT_EQ(c(Family::U, 3, 3), "36");
  EXPECT_EQ(c(Family::X, 3, 3), "60");
  EXPECT_EQ(c(Family::XY, 3, 3), "108");
  EXPECT_EQ(c(Family::U, 3, 2), "13");
  EXPECT_EQ(c(Family::X, 3, 2), "25");
  EXPECT_EQ(c(Family::Y, 3, 2), "16");
  EXPECT_EQ(c(Family::XY, 3, 2), "32");
  EXPECT_EQ(c(Family::X, 2, 4), "26");
  EXPECT_EQ(c(Family::Y, 2, 4), "66");
  EXPECT_EQ(c(Family::XY, 2, 4), "81");
}

TEST(Count, EmptySides) {
  for (Family f : all_families)
    for (int k = 0; k <= 5; ++k) {
      EXPECT_EQ(count(f, 0, k).count.value(), 1);
      EXPECT_EQ(count(f, k, 0).count.value(), 1);
      EXPECT_EQ(count(f, 0, k).method, Method::ClosedForm);
    }
}

TEST(Count, Sequences) {
  const char* x2[] = {"1", "3", "9", "25", "66", "168", "416", "1008", "2400", "5632", "13056",
                      "29952", "68096", "153600", "344064", "765952"};
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(c(Family::X, n, 2), x2[n]) << n;
  const char* x3[] = {"1", "4", "16", "60", "210", "694", "2193", "6684", "19765"};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(c(Family::X, n, 3), x3[n]) << n;
  const char* x4[] = {"1", "5", "26", "129", "609", "2727", "11643"};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(c(Family::X, n, 4), x4[n]) << n;
  const char* xy2[] = {"1", "4", "12", "32", "81", "199", "479", "1135", "2655"};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(c(Family::XY, n, 2), xy2[n]) << n;
  const char* xy3[] = {"1", "8", "32", "108", "340", "1028", "3023", "8698", "24563"};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(c(Family::XY, n, 3), xy3[n]) << n;
  const char* xy4[] = {"1", "16", "81", "340", "1336", "5078", "18923"};
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(c(Family::XY, n, 4), xy4[n]) << n;
  EXPECT_EQ(c(Family::X, 5, 5), "10752");
  EXPECT_EQ(c(Family::XY, 5, 5), "24966");
  EXPECT_EQ(c(Family::X, 6, 12), "37903651882");
  EXPECT_EQ(c(Family::XY, 6, 12), "187535386990");
}

TEST(Count, MethodReporting) {
  EXPECT_EQ(count(Family::U, 3, 3).method, Method::ClosedForm);
  EXPECT_EQ(count(Family::U, 4, 4).method, Method::Burnside);
  EXPECT_EQ(count(Family::XY, 3, 2).method, Method::Recurrence);
  EXPECT_EQ(count(Family::X, 0, 0).method, Method::ClosedForm);
  EXPECT_EQ(to_string(Method::BruteForce), "brute-force");
}

TEST(Count, NegativeSideIsDomainError) {
  for (Family f : all_families) EXPECT_THROW(count(f, -1, 2), DomainError);
}

TEST(ClosedForms, AgreeWithBurnsideRecurrences) {
  for (Family f : all_families)
    for (int n = 0; n <= 14; ++n)
      for (int r = 0; r <= 14; ++r) {
        const auto closed = closed_form_count(f, n, r);
        if (!closed) continue;
        EXPECT_EQ(*closed, count_via_burnside(f, n, r)) << to_string(f) << " " << n << " " << r;
      }
}

TEST(ClosedForms, CoverageBoundaries) {
  EXPECT_FALSE(closed_form_value(Family::U, 4, 4));
  EXPECT_FALSE(closed_form_value(Family::X, 4, 4));
  EXPECT_FALSE(closed_form_value(Family::XY, 1, 3));
  EXPECT_FALSE(closed_form_value(Family::XY, 3, 1));
  EXPECT_TRUE(closed_form_value(Family::XY, 1, 2));
  EXPECT_TRUE(closed_form_value(Family::Y, 7, 3));
}

TEST(ClosedForms, DomainGuards) {
  // Outside their domains the three-column forms are not even integers.
  EXPECT_THROW(closed_form::left_by_three(1), DomainError);
  EXPECT_THROW(closed_form::set_by_three(1), DomainError);
  EXPECT_THROW(closed_form::left_by_two(0), DomainError);
  EXPECT_THROW(closed_form::set_by_two(0), DomainError);
}

TEST(ClosedForms, IntegralOnDomain) {
  for (long k = 1; k <= 60; ++k) {
    EXPECT_TRUE(is_integral(closed_form::unlabeled_two(k)));
    EXPECT_TRUE(is_integral(closed_form::unlabeled_three(k)));
    EXPECT_TRUE(is_integral(closed_form::left_two(k)));
    EXPECT_TRUE(is_integral(closed_form::left_three(k)));
    EXPECT_TRUE(is_integral(closed_form::left_by_two(k)));
    EXPECT_TRUE(is_integral(closed_form::set_by_two(k)));
    EXPECT_TRUE(is_integral(closed_form::reduced_left_two(k)));
    EXPECT_TRUE(is_integral(closed_form::reduced_left_three(k)));
    EXPECT_TRUE(is_integral(closed_form::reduced_both_two(k)));
    if (k >= 2) {
      EXPECT_TRUE(is_integral(closed_form::left_by_three(k)));
      EXPECT_TRUE(is_integral(closed_form::set_by_three(k)));
    }
  }
}

TEST(Reduced, SmallValues) {
  EXPECT_EQ(reduced_left(2, 2).value(), 4);
  EXPECT_EQ(reduced_left(3, 3).value(), 23);
  EXPECT_EQ(reduced_left(2, 4).value(), 17);
  EXPECT_EQ(reduced_left(4, 2).value(), 9);
  EXPECT_EQ(reduced_both(2, 2).value(), 3);
  EXPECT_EQ(reduced_both(3, 3).value(), 17);
  EXPECT_EQ(reduced_both(2, 4).value(), 8);
  EXPECT_EQ(reduced_both(1, 3).value(), 1);
  EXPECT_THROW(reduced_left(0, 3), DomainError);
  EXPECT_THROW(reduced_both(2, 0), DomainError);
}

TEST(Reduced, BothIsSymmetric) {
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j) EXPECT_EQ(reduced_both(i, j), reduced_both(j, i));
}

TEST(Properties, InclusionChainAndTranspose) {
  for (int n = 0; n <= 9; ++n)
    for (int r = 0; r <= 9; ++r) {
      const auto u = count(Family::U, n, r).count;
      const auto x = count(Family::X, n, r).count;
      const auto y = count(Family::Y, n, r).count;
      const auto xy = count(Family::XY, n, r).count;
      EXPECT_LE(u, x);
      EXPECT_LE(u, y);
      EXPECT_LE(x, xy);
      EXPECT_LE(y, xy);
      EXPECT_EQ(y, count(Family::X, r, n).count);
      EXPECT_EQ(u, count(Family::U, r, n).count);
      EXPECT_EQ(xy, count(Family::XY, r, n).count);
      if (n > 0 && r > 0) {
        EXPECT_LT(count(Family::X, n - 1, r).count, x);
      }
      if (n > 0 && r > 0) {
        EXPECT_LT(count(Family::X, n, r - 1).count, x);
      }
      EXPECT_LE(xy.value(), pow2_integer(static_cast<unsigned long>(n * r)));
    }
}

TEST(Properties, WorkersDoNotChangeResults) {
  EXPECT_EQ(count(Family::XY, 8, 9, {60, 4}).count, count(Family::XY, 8, 9, {60, 1}).count);
}

}  // namespace
}  // namespace bipartite
