#include <gml/duality.hpp>
#include <gml/errors.hpp>
#include <gml/mass.hpp>
#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace gml;

namespace {
const ClassFunction& fin(const Extended& x) { return std::get<ClassFunction>(x); }
}  // namespace

TEST(Partitions, CountsMatchEnumeration) {
  for (std::int64_t n = 0; n <= 25; ++n) {
    EXPECT_EQ(partition_count(n), BigInt(static_cast<unsigned long>(oracle::partition_total(n)))) << n;
    const auto listed = oracle::partitions_by_parts(n);
    for (std::int64_t k = 0; k <= n + 1; ++k) {
      const auto it = listed.find(k);
      const unsigned long expected = it == listed.end() ? 0 : it->second;
      EXPECT_EQ(partition_count(n, k), BigInt(expected)) << n << "," << k;
    }
  }
  EXPECT_EQ(partition_count(100), BigInt("190569292"));
  EXPECT_THROW(partition_count(-1), Error);
}

TEST(Partitions, BhargavaAndKedlayaMatchOracle) {
  for (std::int64_t n = 1; n <= 20; ++n) {
    const auto b = bhargava_masses(n);
    EXPECT_EQ(fin(b.mass_v), oracle::bhargava_v(n));
    EXPECT_EQ(fin(b.mass_w), oracle::bhargava_w(n));
    EXPECT_TRUE(duality_report(b, 2 * n).strong);
  }
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto k = kedlaya_masses(n);
    EXPECT_EQ(fin(k.mass_v), oracle::kedlaya_v(n));
    EXPECT_EQ(fin(k.mass_w), oracle::kedlaya_w(n));
    EXPECT_TRUE(duality_report(k, 2 * n).strong);
  }
  EXPECT_THROW(bhargava_masses(0), Error);
  EXPECT_THROW(kedlaya_masses(0), Error);
}

TEST(Partitions, SmallValues) {
  const auto k1 = kedlaya_masses(1);
  EXPECT_EQ(fin(k1.mass_v), ClassFunction::constant(Rational(1)) + ClassFunction::q_power(Rational(-1)));
  EXPECT_EQ(fin(k1.mass_w), ClassFunction::constant(Rational(1)) + ClassFunction::q_power(Rational(1)));
  // Kedlaya n = 2 at q = 3, r = 1: 1 + 2/3 + 2/9.
  EXPECT_EQ(*evaluate(fin(kedlaya_masses(2).mass_v), Rational(3), 1).exact, Rational(17, 9));
}

TEST(Hilbert, CountsMatchPartitionFormulas) {
  const auto h1 = hilbert_counts(1);
  EXPECT_EQ(h1.hilb_plane, ClassFunction::q_power(Rational(2)));
  EXPECT_EQ(h1.fiber, oracle::q_series({{1, 1}, {0, 1}}));
  EXPECT_EQ(hilbert_counts(2).hilb_plane, oracle::q_series({{4, 1}, {3, 1}}));
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto h = hilbert_counts(n);
    EXPECT_EQ(h.hilb_plane, oracle::bhargava_v(n) * ClassFunction::q_power(Rational(2 * n)));
    EXPECT_EQ(h.fiber, oracle::kedlaya_w(n));
    ASSERT_EQ(h.C.size(), static_cast<std::size_t>(n + 1));
    ASSERT_EQ(h.D.size(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(h.C[static_cast<std::size_t>(n)],
              oracle::q_series({{n, static_cast<std::int64_t>(oracle::partition_total(n))}}));
  }
  EXPECT_THROW(hilbert_counts(0), Error);
}
