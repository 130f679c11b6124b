#include <gml/errors.hpp>
#include <gml/group.hpp>
#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace gml;

namespace {

ErrorKind kind_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Precondition;
}

}  // namespace

TEST(Permutation, Basics) {
  const auto a = from_cycles(3, {{1, 2, 3}});
  EXPECT_EQ(a, (Permutation{1, 2, 0}));
  EXPECT_EQ(compose(a, inverse(a)), identity_permutation(3));
  const auto t = from_cycles(3, {{1, 2}});
  // (a * t)(0) = a(t(0)) = a(1) = 2
  EXPECT_EQ(compose(a, t)[0], 2u);
  EXPECT_THROW(from_cycles(3, {{1, 4}}), Error);
  EXPECT_THROW(from_cycles(3, {{1, 2}, {2, 3}}), Error);
}

TEST(Group, SymmetricGroupOrdersAndClasses) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto g = catalog::symmetric_permutation(n, 1);
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    EXPECT_EQ(g.group.order(), fact);
    // Conjugacy classes of S_n are indexed by partitions of n.
    EXPECT_EQ(g.group.conjugacy_classes().representatives.size(), oracle::partition_total(static_cast<std::int64_t>(n)));
  }
  const auto s4 = catalog::symmetric_permutation(4, 1).group;
  EXPECT_EQ(s4.exponent(), 12u);
  const auto classes = s4.conjugacy_classes();
  std::size_t total = 0;
  for (auto s : classes.sizes) total += s;
  EXPECT_EQ(total, 24u);
  EXPECT_EQ(classes.sizes[classes.class_of[index(s4.identity())]], 1u);
}

TEST(Group, PowersInversesAndOrders) {
  const auto g = catalog::symmetric_permutation(4, 1).group;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    const ElementId x{i};
    EXPECT_EQ(g.multiply(x, g.inverse(x)), g.identity());
    const auto ord = g.element_order(x);
    EXPECT_EQ(g.power(x, static_cast<std::int64_t>(ord)), g.identity());
    EXPECT_EQ(g.power(x, -1), g.inverse(x));
    EXPECT_EQ(g.power(x, 5), g.multiply(g.power(x, 2), g.power(x, 3)));
    EXPECT_EQ(power_map(g, x, 0), g.identity());
    EXPECT_EQ(g.id_of(g.element(x)), x);
  }
}

TEST(Group, SignedPermutationsFormHyperoctahedralGroup) {
  const auto b2 = catalog::signed_permutation(2, 1);
  EXPECT_EQ(b2.group.order(), 8u);
  EXPECT_EQ(b2.rep.dim(), 2u);
  EXPECT_EQ(catalog::signed_permutation(3, 1).group.order(), 48u);
  EXPECT_EQ(catalog::signed_permutation(1, 1).group.order(), 2u);
  // The doubled representation carries each block twice.
  const auto doubled = catalog::signed_permutation(2, 2);
  EXPECT_EQ(doubled.rep.dim(), 4u);
  for (std::uint32_t i = 0; i < doubled.group.order(); ++i) {
    const auto& m = doubled.rep.matrix(ElementId{i});
    EXPECT_EQ(m.exps[0], m.exps[2]);
    EXPECT_EQ(m.perm[2], m.perm[0] + 2);
  }
}

TEST(Group, EigenExponentsMatchNumericEigenvalues) {
  for (const auto& gr : {catalog::symmetric_permutation(4, 1), catalog::signed_permutation(3, 1),
                         catalog::cyclic_diagonal(5, {1, 2, 4})}) {
    for (std::uint32_t i = 0; i < gr.group.order(); ++i) {
      auto expected = oracle::numeric_eigen_fractions(gr.rep.matrix(ElementId{i}), gr.rep.root_order());
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(eigen_exponents(gr.rep, ElementId{i}).fractions, expected);
    }
  }
}

TEST(Group, TameWeights) {
  // A transposition on the doubled permutation representation: eigenvalues
  // 1, -1, 1, -1, so v = 1, a = 2, w = 1.
  const auto s2 = catalog::symmetric_permutation(2, 2);
  const ElementId t{1};
  ASSERT_NE(s2.group.element(t), identity_permutation(2));
  const auto w = tame_weights(s2.rep, t);
  EXPECT_EQ(w.v, Rational(1));
  EXPECT_EQ(w.w, Rational(1));
  EXPECT_EQ(w.a, 2);
  // diag(zeta_3, zeta_3): v = 2/3, w = 4/3.
  const auto z3 = catalog::cyclic_diagonal(3, {1, 1});
  const auto g = z3.group.generators().front();
  EXPECT_EQ(tame_weights(z3.rep, g).v, Rational(2, 3));
  EXPECT_EQ(tame_weights(z3.rep, g).w, Rational(4, 3));
  EXPECT_EQ(tame_weights(z3.rep, z3.group.identity()).v, Rational(0));
}

TEST(Group, ClosureErrors) {
  RepresentationSpec spec;
  spec.degree = 2;
  spec.dim = 1;
  spec.root_order = 3;
  spec.generators = {from_cycles(2, {{1, 2}})};
  spec.matrices = {MonomialMatrix{{0}, {1}}};  // order 3 matrix for an order 2 permutation
  EXPECT_EQ(kind_of([&] { group_closure(spec); }), ErrorKind::InconsistentRepresentation);

  spec.root_order = 2;
  EXPECT_NO_THROW(group_closure(spec));

  RepresentationSpec big;
  big.degree = 4;
  big.dim = 1;
  big.generators = {from_cycles(4, {{1, 2}}), from_cycles(4, {{1, 2, 3, 4}})};
  big.matrices = {MonomialMatrix{{0}, {0}}, MonomialMatrix{{0}, {0}}};
  EXPECT_EQ(kind_of([&] { group_closure(big, 10); }), ErrorKind::GroupTooLarge);
  EXPECT_EQ(group_closure(big, 24).group.order(), 24u);

  RepresentationSpec mismatched = big;
  mismatched.matrices.pop_back();
  EXPECT_EQ(kind_of([&] { group_closure(mismatched); }), ErrorKind::ParseError);
}

TEST(Group, RegularRepresentation) {
  // Z/4 Cayley table.
  std::vector<std::vector<std::uint32_t>> table(4, std::vector<std::uint32_t>(4));
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) table[a][b] = (a + b) % 4;
  }
  const auto perms = regular_permutations(table);
  ASSERT_EQ(perms.size(), 4u);
  EXPECT_EQ(perms[0], identity_permutation(4));
  EXPECT_EQ(compose(perms[1], perms[1]), perms[2]);
  std::set<Permutation> distinct(perms.begin(), perms.end());
  EXPECT_EQ(distinct.size(), 4u);
}
