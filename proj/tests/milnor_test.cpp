#include "exotic/milnor.hpp"

#include <gtest/gtest.h>

using namespace exotic;

TEST(CharacteristicClasses, Examples) {
  EXPECT_EQ(characteristic_classes({2, -1}), (CharClasses{1, 6, false, true}));
  EXPECT_EQ(characteristic_classes({3, 0}), (CharClasses{3, 6, true, false}));
  EXPECT_EQ(characteristic_classes({0, -1}), (CharClasses{-1, 2, true, true}));
  EXPECT_EQ(characteristic_classes({0, 0}), (CharClasses{0, 0, true, false}));
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form({2, -1}), (MilnorBundle{1, -2}));
  EXPECT_EQ(canonical_form({1, -2}), (MilnorBundle{1, -2}));
  EXPECT_EQ(canonical_form({0, 3}), (MilnorBundle{-3, 0}));
}

TEST(CanonicalForm, IdempotentAndClassInvariant) {
  for (std::int64_t m = -15; m <= 15; ++m)
    for (std::int64_t n = -15; n <= 15; ++n) {
      const MilnorBundle b{m, n}, c = canonical_form(b);
      EXPECT_EQ(canonical_form(c), c);
      EXPECT_EQ(canonical_form(MilnorBundle{-n, -m}), c);
      EXPECT_EQ(c.euler() == b.euler() || c.euler() == -b.euler(), true);
    }
}

TEST(Lambda, KnownValues) {
  EXPECT_EQ(lambda_invariant({1, 0}), 0);
  EXPECT_EQ(lambda_invariant({2, -1}), 1);
  EXPECT_EQ(lambda_invariant({3, -2}), 3);
  EXPECT_EQ(lambda_invariant({0, 1}), 0);
  EXPECT_FALSE(is_exotic_sphere({1, 0}));
  EXPECT_TRUE(is_exotic_sphere({2, -1}));
}

TEST(Lambda, RejectsNonSpheres) {
  EXPECT_THROW(lambda_invariant({3, 0}), DomainError);
  try {
    lambda_invariant({0, 0});
    FAIL();
  } catch (const DomainError &e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHomotopySphere);
  }
}

TEST(Lambda, PeriodicInM) {
  for (std::int64_t m = -20; m <= 20; ++m)
    EXPECT_EQ(lambda_invariant(with_euler(m, 1)),
              lambda_invariant(with_euler(m + 7, 1)));
}

TEST(Lambda, RespectsOrientationEquivalence) {
  // M_{m,n} and M_{-n,-m} are the same manifold
  for (std::int64_t m = -20; m <= 20; ++m)
    for (std::int64_t k : {1, -1}) {
      const MilnorBundle b = with_euler(m, k);
      EXPECT_EQ(lambda_invariant(b), lambda_invariant(canonical_form(b))) << b;
      EXPECT_EQ(lambda_invariant(b), lambda_invariant(MilnorBundle{-b.n, -b.m}))
        << b;
    }
}

TEST(BundleCohomology, Examples) {
  const auto Z = AbelianGroup::free(1);
  EXPECT_EQ(bundle_cohomology({1, 0}), GradedGroups::sphere(7));
  EXPECT_EQ(bundle_cohomology({0, 0}),
            (GradedGroups{{0, Z}, {3, Z}, {4, Z}, {7, Z}}));
  EXPECT_EQ(bundle_cohomology({5, -1}),
            (GradedGroups{{0, Z}, {4, AbelianGroup::cyclic(4)}, {7, Z}}));
}

TEST(BundleCohomology, MatchesGysinSequence) {
  for (std::int64_t k = -25; k <= 25; ++k)
    for (std::int64_t m : {-3, 0, 2}) {
      const MilnorBundle b = with_euler(m, k);
      EXPECT_EQ(bundle_cohomology(b), gysin_cohomology(k)) << b;
    }
}

TEST(Clutching, ComposeIsAbelianGroupLaw) {
  const MilnorBundle zero{0, 0};
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::int64_t b = -4; b <= 4; ++b) {
      const MilnorBundle x{a, b}, y{b, -a}, z{a + 1, 2};
      EXPECT_EQ(clutching_compose(x, zero), x);
      EXPECT_EQ(clutching_compose(x, y), clutching_compose(y, x));
      EXPECT_EQ(clutching_compose(clutching_compose(x, y), z),
                clutching_compose(x, clutching_compose(y, z)));
      EXPECT_EQ(clutching_compose(x, MilnorBundle{-a, -b}), zero);
      EXPECT_EQ(clutching_compose(x, y).euler(), x.euler() + y.euler());
    }
}

TEST(StarQuotient, Examples) {
  EXPECT_EQ(star_quotient(3, 1, StarMode::NonPrincipal), (MilnorBundle{3, -2}));
  EXPECT_EQ(star_quotient(3, 1, StarMode::Principal), (MilnorBundle{2, 0}));
  for (std::int64_t r = -6; r <= 6; ++r)
    for (std::int64_t k = -6; k <= 6; ++k)
      EXPECT_EQ(star_quotient(r, k, StarMode::NonPrincipal).euler(), k);
}
