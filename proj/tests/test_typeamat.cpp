#include <gtest/gtest.h>

#include "gvkit/errors.hpp"
#include "gvkit/sampling.hpp"
#include "gvkit/typeamat.hpp"

using namespace gvkit;

namespace {

MPoly E(unsigned i, unsigned d) { return MPoly::symbol(i, d); }
MPoly C(long c) { return MPoly::constant(Rat(c)); }
MPoly detA(unsigned i, unsigned j, unsigned d) { return det_sym(build_A(5, i, j, d)); }

}  // namespace

TEST(MPoly, Arithmetic) {
  MPoly a = E(1, 2) + C(1), b = E(2, 2) - C(1);
  EXPECT_EQ(a * b, E(1, 2) * E(2, 2) - E(1, 2) + E(2, 2) - C(1));
  EXPECT_EQ(a - a, MPoly{});
  EXPECT_EQ(render(E(1, 2) * E(2, 2) - E(1, 2)), "e[1,2]*e[2,2] - e[1,2]");
}

TEST(Glue, ShapesAndErrors) {
  AMatrix a = build_A(2, 1, 2, 2);
  AMatrix b = build_A(2, 2, 3, 2);
  AMatrix g = glue(a, b);
  EXPECT_EQ(g, build_A(2, 1, 3, 2));
  EXPECT_EQ(g.rows(), 3u);
  EXPECT_EQ(g.at(0, 2), MPoly{});
  EXPECT_EQ(g.at(1, 1), E(2, 2));
  AMatrix unit(1, 1);
  unit.at(0, 0) = a.at(1, 1);
  EXPECT_EQ(glue(a, unit), a);
  EXPECT_THROW(glue(a, a), DomainError);
}

TEST(Glue, Associative) {
  AMatrix a = build_A(5, 1, 2, 2), b = build_A(5, 2, 3, 2), c = build_A(5, 3, 5, 2);
  EXPECT_EQ(glue(glue(a, b), c), glue(a, glue(b, c)));
  AMatrix p = build_A(5, 1, 3, 4), q = build_A(5, 3, 5, 4), r = build_A(5, 5, 7, 4);
  EXPECT_EQ(glue(glue(p, q), r), glue(p, glue(q, r)));
}

TEST(BuildA, BaseCases) {
  AMatrix one = build_A(1, 1, 1, 3);
  EXPECT_EQ(one.rows(), 1u);
  EXPECT_EQ(one.at(0, 0), E(1, 3));
  AMatrix two = build_A(1, 1, 1, 2);
  EXPECT_EQ(det_sym(two), E(1, 2));
  AMatrix a12 = build_A(2, 1, 2, 2);
  EXPECT_EQ(a12.at(0, 0), E(1, 2));
  EXPECT_EQ(a12.at(0, 1), C(1));
  EXPECT_EQ(a12.at(1, 0), C(1));
  EXPECT_EQ(a12.at(1, 1), E(2, 2));
  AMatrix a13 = build_A(2, 1, 3, 3);
  ASSERT_EQ(a13.rows(), 4u);
  const std::vector<std::vector<MPoly>> expect{{E(1, 3), C(0), C(1), C(0)},
                                               {C(1), C(1), C(0), C(0)},
                                               {C(0), C(1), C(0), C(1)},
                                               {C(0), C(0), C(1), E(3, 3)}};
  for (unsigned r = 0; r < 4; ++r) {
    for (unsigned c = 0; c < 4; ++c) EXPECT_EQ(a13.at(r, c), expect[r][c]) << r << "," << c;
  }
  EXPECT_THROW(build_A(2, 1, 2, 3), DomainError);
  EXPECT_THROW(build_A(2, 1, 4, 2), DomainError);
  EXPECT_EQ(build_A(5, 1, 9, 5).rows(), 21u);
}

TEST(Det, WorkedExamples) {
  EXPECT_EQ(detA(1, 3, 2), E(1, 2) * E(2, 2) * E(3, 2) - E(1, 2) - E(3, 2));
  Potential all_one(2, {{{1, 2}, 1}, {{2, 2}, 1}, {{3, 2}, 1}});
  EXPECT_EQ(eval_at(detA(1, 3, 2), all_one), Rat(4));
  EXPECT_EQ(detA(1, 3, 3), E(3, 3) - E(1, 3));
  EXPECT_EQ(eval_at(E(1, 2), Potential(1, {{{1, 2}, 5}})), Rat(10));
  EXPECT_EQ(eval_at(E(1, 3), Potential(1)), Rat(0));
}

TEST(Det, SymbolicMatchesNumericEvaluation) {
  Rng rng(61);
  for (unsigned j = 1; j <= 7; ++j) {
    for (unsigned i = 1; i <= j; ++i) {
      for (unsigned d = 2; d <= 5; ++d) {
        if (!admissible(i, j, d)) continue;
        Potential pot = random_potential(4, rng, PotentialSampler{0, 4, 5, 2, 2});
        AMatrix a = build_A(4, i, j, d);
        EXPECT_EQ(eval_at(det_sym(a), pot), det(eval_at(a, pot))) << i << " " << j << " " << d;
      }
    }
  }
}

TEST(Det, Recurrences) {
  for (unsigned j = 3; j <= 9; ++j) {
    for (unsigned i = 1; i + 2 <= j; ++i) {
      EXPECT_EQ(detA(i, j, 2), E(j, 2) * detA(i, j - 1, 2) - detA(i, j - 2, 2));
      EXPECT_EQ(detA(i, j, 2), E(i, 2) * detA(i + 1, j, 2) - detA(i + 2, j, 2));
      if ((j - i) % 2 != 0) continue;
      for (unsigned d = 3; d <= 5; ++d) {
        const long s3 = (((j - i) * (d - 1) / 2) % 2 == 0) ? 1 : -1;
        EXPECT_EQ(detA(i, j, d), -detA(i, j - 2, d) + Rat(s3) * E(j, d));
        const long sd = (d % 2 == 1) ? 1 : -1;
        const long s4 = (((j - i) / 2) % 2 == 0) ? 1 : -1;
        EXPECT_EQ(detA(i, j, d), Rat(sd) * detA(i + 2, j, d) + Rat(s4) * E(i, d));
      }
    }
  }
}

TEST(Det, Inadmissible) {
  EXPECT_FALSE(admissible(1, 2, 3));
  EXPECT_TRUE(admissible(1, 3, 3));
  EXPECT_FALSE(admissible(2, 1, 2));
  AMatrix rect(2, 3);
  EXPECT_THROW(det_sym(rect), DomainError);
}
