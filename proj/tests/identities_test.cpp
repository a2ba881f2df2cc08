#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "biperiodic/errors.hpp"
#include "biperiodic/identities.hpp"
#include "biperiodic/matforms.hpp"
#include "biperiodic/sequence.hpp"
#include "test_support.hpp"

namespace biperiodic {
namespace {

using testing::ParamGen;
using testing::fibonacci_params;
using testing::p_star;

void expect_both_sides(const IdentityReport& r, const Rational& value) {
  EXPECT_TRUE(r.pass) << r.id.str();
  EXPECT_EQ(r.lhs, value) << r.id.str();
  EXPECT_EQ(r.rhs, value) << r.id.str();
}

// Twice the (2,1) and (1,1) entries of sum_{j=0..n} K^(mj+r), by plain multiplication.
SeriesSums summed_powers(const Params& p, std::int64_t m, std::int64_t n, std::int64_t r) {
  const Mat2 k = build(MatrixTag::K, p);
  Mat2 step = Mat2::identity();
  for (std::int64_t i = 0; i < m; ++i) step = mat_mul(step, k);
  Mat2 term = Mat2::identity();
  for (std::int64_t i = 0; i < r; ++i) term = mat_mul(term, k);
  Mat2 total = Mat2::zero();
  for (std::int64_t j = 0; j <= n; ++j) {
    total = total + term;
    term = mat_mul(term, step);
  }
  return {Rational(2) * total.m21, Rational(2) * total.m11};
}

TEST(IdentityIdTest, Names) {
  EXPECT_EQ((IdentityId{Family::L1, 3}).str(), "L1.3");
  EXPECT_EQ((IdentityId{Family::SUM, 0}).str(), "SUM.u");
  EXPECT_EQ((IdentityId{Family::BINOM, 1}).str(), "BINOM.v");
  EXPECT_EQ((IdentityId{Family::CASSINI_W, 0}).str(), "CASSINI_W");

  const auto ids = all_identity_ids();
  EXPECT_EQ(ids.size(), 4U + 7U + 2U + 2U + 6U);
  std::set<std::string> names;
  for (const auto& id : ids) names.insert(id.str());
  EXPECT_EQ(names.size(), ids.size());
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
}

TEST(UIdentitiesTest, Examples) {
  const Params p = p_star();
  expect_both_sides(check_lemma1(p, 1, 0, 2), Rational(-2, 3));
  expect_both_sides(check_lemma1(p, 3, 1, 3), Rational(-2));
  expect_both_sides(check_lemma1(p, 4, 2, 4), Rational(16));
}

TEST(UIdentitiesTest, TypesetParityWeightsOnlyHoldForMatchingParity) {
  const Params p(1, Rational(-1, 2), 2);
  const IdentityReport mixed = check_lemma1(p, 3, 3, 10);
  EXPECT_TRUE(mixed.pass);
  ASSERT_TRUE(mixed.printed_form_value.has_value());
  EXPECT_EQ(*mixed.printed_form_value, Rational(5573, 128));
  EXPECT_EQ(mixed.printed_form_matches, std::optional<bool>(false));

  const IdentityReport same = check_lemma1(p_star(), 3, 1, 3);
  ASSERT_TRUE(same.printed_form_matches.has_value());
  EXPECT_TRUE(*same.printed_form_matches);
}

TEST(UIdentitiesTest, IndicesStartAtOne) {
  EXPECT_THROW(check_lemma1(p_star(), 1, 1, 0), InvalidParameterError);
  EXPECT_THROW(check_lemma1(p_star(), 2, 0, 3), InvalidParameterError);
  EXPECT_THROW(check_lemma2(p_star(), 3, 0, 3), InvalidParameterError);
}

TEST(UIdentitiesTest, HoldsOnRandomParams) {
  ParamGen gen(51);
  for (int i = 0; i < 40; ++i) {
    const Params p = gen.params();
    for (int sub = 1; sub <= 4; ++sub) {
      for (std::int64_t m = 1; m <= 8; ++m) {
        for (std::int64_t n = 1; n <= 8; ++n) {
          const IdentityReport r = check_lemma1(p, sub, m, n);
          ASSERT_TRUE(r.pass) << r.id.str() << " " << p << " m=" << m << " n=" << n << " "
                              << r.lhs << " != " << r.rhs;
        }
      }
    }
  }
}

TEST(MixedIdentitiesTest, Examples) {
  const Params p = p_star();
  expect_both_sides(check_lemma2(p, 1, 0, 2), Rational(4));
  expect_both_sides(check_lemma2(p, 3, 2, 1), Rational(14));
  expect_both_sides(check_lemma2(p, 7, 1, 3), Rational(14));
}

TEST(MixedIdentitiesTest, HoldsOnRandomParams) {
  ParamGen gen(52);
  for (int i = 0; i < 40; ++i) {
    const Params p = gen.nondegenerate();
    for (int sub = 1; sub <= 7; ++sub) {
      for (std::int64_t m = 1; m <= 8; ++m) {
        for (std::int64_t n = 1; n <= 8; ++n) {
          const IdentityReport r = check_lemma2(p, sub, m, n);
          ASSERT_TRUE(r.pass) << r.id.str() << " " << p << " m=" << m << " n=" << n << " "
                              << r.lhs << " != " << r.rhs;
        }
      }
    }
  }
}

TEST(MixedIdentitiesTest, DegenerateRejected) {
  const Params p(1, 1, Rational(-1, 4), 0, 1);
  EXPECT_THROW(check_lemma2(p, 1, 0, 2), DegenerateParameterError);
  EXPECT_NO_THROW(check_lemma1(p, 1, 0, 2));
}

TEST(SumTest, Constants) {
  const SumConstants k2 = sum_constants(p_star(), 2);
  EXPECT_EQ(k2.d_corrected, Rational(-11));
  EXPECT_EQ(k2.d_printed, Rational(-6));
  const SumConstants k1 = sum_constants(p_star(), 1);
  EXPECT_EQ(k1.d_corrected, Rational(-11));
}

TEST(SumTest, OracleExamples) {
  const Params p = p_star();
  EXPECT_EQ(sum_oracle(p, 1, 1, 0).u_sum, Rational(1));
  EXPECT_EQ(sum_oracle(p, 2, 1, 0).u_sum, Rational(6));
  EXPECT_EQ(sum_oracle(p, 1, 1, 0).v_sum, Rational(8));
}

TEST(SumTest, CheckExamples) {
  const Params p = p_star();

  const IdentityReport u21 = check_sum_theorem(p, SequenceKind::u, 2, 1, 0);
  expect_both_sides(u21, Rational(6));
  EXPECT_EQ(u21.oracle_value, std::optional<Rational>(Rational(6)));
  EXPECT_EQ(u21.printed_form_value, std::optional<Rational>(Rational(323, 6)));
  EXPECT_EQ(u21.printed_form_matches, std::optional<bool>(false));

  const IdentityReport u11 = check_sum_theorem(p, SequenceKind::u, 1, 1, 0);
  expect_both_sides(u11, Rational(1));
  EXPECT_EQ(u11.printed_form_value, std::optional<Rational>(Rational(-1, 11)));
  EXPECT_EQ(u11.printed_form_matches, std::optional<bool>(false));

  const IdentityReport v11 = check_sum_theorem(p, SequenceKind::v, 1, 1, 0);
  expect_both_sides(v11, Rational(8));
  EXPECT_EQ(v11.oracle_value, std::optional<Rational>(Rational(8)));
}

TEST(SumTest, ThreeWayAgreement) {
  ParamGen gen(53);
  int checked = 0;
  while (checked < 50) {
    const Params p = gen.nondegenerate();
    bool singular = false;
    for (std::int64_t m = 1; m <= 6 && !singular; ++m) {
      singular = sum_constants(p, m).d_corrected.is_zero();
    }
    if (singular) continue;
    ++checked;
    for (std::int64_t m = 1; m <= 6; ++m) {
      for (std::int64_t n = 0; n <= 6; ++n) {
        for (std::int64_t r = 0; r <= 4; ++r) {
          const SeriesSums expected = summed_powers(p, m, n, r);
          const SeriesSums oracle = sum_oracle(p, m, n, r);
          ASSERT_EQ(oracle.u_sum, expected.u_sum) << p << " " << m << " " << n << " " << r;
          ASSERT_EQ(oracle.v_sum, expected.v_sum) << p << " " << m << " " << n << " " << r;
          ASSERT_EQ(sum_direct(p, SequenceKind::u, m, n, r), expected.u_sum);
          ASSERT_EQ(sum_direct(p, SequenceKind::v, m, n, r), expected.v_sum);
          ASSERT_EQ(sum_closed_form(p, SequenceKind::u, m, n, r), expected.u_sum);
          ASSERT_EQ(sum_closed_form(p, SequenceKind::v, m, n, r), expected.v_sum);
          ASSERT_TRUE(check_sum_theorem(p, SequenceKind::u, m, n, r).pass);
          ASSERT_TRUE(check_sum_theorem(p, SequenceKind::v, m, n, r).pass);
        }
      }
    }
  }
}

TEST(SumTest, SingularSeriesRejected) {
  // ab = 3, abc = -2: K has eigenvalue 1, so I - K is singular.
  const Params p(3, 1, Rational(-2, 3));
  ASSERT_FALSE(discriminant(p).is_zero());
  EXPECT_TRUE(sum_constants(p, 1).d_corrected.is_zero());
  EXPECT_THROW(sum_oracle(p, 1, 3, 0), SingularSeriesError);
  EXPECT_THROW(check_sum_theorem(p, SequenceKind::u, 1, 3, 0), SingularSeriesError);
}

TEST(SumTest, DegenerateRejected) {
  const Params p(1, 1, Rational(-1, 4));
  EXPECT_THROW(sum_oracle(p, 1, 1, 0), DegenerateParameterError);
}

TEST(BinomialTest, DeltaWeightExamples) {
  const Params p = p_star();
  EXPECT_EQ(delta_weight(p, 2, 1, 1, 0), Rational(6));
  EXPECT_EQ(delta_weight(p, 2, 1, 1, 1), Rational(9));
  ParamGen gen(54);
  for (int i = 0; i < 10; ++i) {
    const Params q = gen.params();
    EXPECT_EQ(delta_weight(q, 2, 0, 0, 0), Rational(1) / q.a());
  }
}

TEST(BinomialTest, Examples) {
  const Params p = p_star();
  expect_both_sides(check_binomial_theorem(p, SequenceKind::u, 2, 1, 1), Rational(7));
  expect_both_sides(check_binomial_theorem(p, SequenceKind::u, 2, 0, 4), Rational(16));
  expect_both_sides(check_binomial_theorem(fibonacci_params(), SequenceKind::u, 2, 2, 0),
                    Rational(3));
}

TEST(BinomialTest, HoldsOnRandomParams) {
  ParamGen gen(55);
  for (int i = 0; i < 20; ++i) {
    const Params p = gen.params();
    for (SequenceKind series : {SequenceKind::u, SequenceKind::v}) {
      for (std::int64_t m = 2; m <= 6; ++m) {
        for (std::int64_t n = 0; n <= 6; ++n) {
          for (std::int64_t r = 0; r <= 4; ++r) {
            const IdentityReport rep = check_binomial_theorem(p, series, m, n, r);
            ASSERT_TRUE(rep.pass) << rep.id.str() << " " << p << " " << m << " " << n << " " << r;
            ASSERT_EQ(rep.lhs, term_naive(p, series, m * n + r));
          }
        }
      }
    }
  }
}

TEST(CassiniTest, Examples) {
  const Params p = p_star();
  expect_both_sides(check_cassini_w(p, 2), Rational(-7, 2));
  expect_both_sides(check_cassini_w(p, 1), Rational(7, 2));
}

TEST(CassiniTest, ClassicalFibonacci) {
  const Params f = fibonacci_params();
  for (std::int64_t n = 1; n <= 20; ++n) {
    const IdentityReport r = check_cassini_w(f, n);
    EXPECT_TRUE(r.pass) << n;
    const Rational classical = term_naive(f, SequenceKind::w, n - 1) *
                                   term_naive(f, SequenceKind::w, n + 1) -
                               term_naive(f, SequenceKind::w, n) * term_naive(f, SequenceKind::w, n);
    EXPECT_EQ(classical, n % 2 == 0 ? Rational(1) : Rational(-1));
  }
}

TEST(AdditionTest, Examples) {
  expect_both_sides(check_addition(p_star(), 2, 3), Rational(79));
  expect_both_sides(check_addition(p_star(), 1, 1), Rational(3));
  expect_both_sides(check_addition(fibonacci_params(), 3, 4), Rational(13));
}

TEST(CatalanTest, Examples) {
  expect_both_sides(check_catalan(p_star(), 1, 1, 1), Rational(7, 2));
  EXPECT_TRUE(check_catalan(p_star(), 2, 1, 1).pass);
  EXPECT_TRUE(check_catalan(fibonacci_params(), 4, 2, 2).pass);
}

TEST(ProductSumTest, Examples) {
  const Params p = p_star();
  expect_both_sides(check_product_sum(p, 3, 2), Rational(227, 2));
  expect_both_sides(check_square_sum(p, 2), Rational(227, 2));
  expect_both_sides(check_square_difference(p, 2), Rational(99));
}

TEST(WIdentitiesTest, HoldOnRandomParams) {
  ParamGen gen(56);
  for (int i = 0; i < 40; ++i) {
    const Params p = gen.params();
    for (std::int64_t n = 1; n <= 10; ++n) {
      ASSERT_TRUE(check_cassini_w(p, n).pass) << p << " " << n;
      ASSERT_TRUE(check_square_sum(p, n).pass) << p << " " << n;
      ASSERT_TRUE(check_square_difference(p, n).pass) << p << " " << n;
      for (std::int64_t q = 1; q <= 8; ++q) {
        ASSERT_TRUE(check_addition(p, n, q).pass) << p << " " << n << " " << q;
        ASSERT_TRUE(check_product_sum(p, q, n).pass) << p << " " << q << " " << n;
        for (std::int64_t pp = 1; pp <= 4; ++pp) {
          ASSERT_TRUE(check_catalan(p, n, pp, q).pass) << p << " " << n << " " << pp << " " << q;
        }
      }
    }
  }
}

TEST(IdentitiesTest, UnitCSpecialisationPasses) {
  ParamGen gen(57);
  for (int i = 0; i < 20; ++i) {
    const Params base = gen.params();
    const Params p(base.a(), base.b(), 1, base.w0(), base.w1());
    for (std::int64_t m = 1; m <= 6; ++m) {
      for (std::int64_t n = 1; n <= 6; ++n) {
        for (int sub = 1; sub <= 4; ++sub) EXPECT_TRUE(check_lemma1(p, sub, m, n).pass);
      }
    }
  }
}

}  // namespace
}  // namespace biperiodic
