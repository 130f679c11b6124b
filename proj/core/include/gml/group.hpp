#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gml/rational.hpp"

namespace gml {

/// Images of 0..k-1.
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t degree);
/// (a * b)(i) = a(b(i)): b acts first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// Builds a permutation of {0..degree-1} from 1-based cycles.
Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

enum class ElementId : std::uint32_t {};

inline std::uint32_t index(ElementId id) { return static_cast<std::uint32_t>(id); }

/// Monomial matrix with entries zeta_e^exps[j] at positions (perm[j], j).
struct MonomialMatrix {
  Permutation perm;
  std::vector<std::uint32_t> exps;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

MonomialMatrix multiply(const MonomialMatrix& a, const MonomialMatrix& b, std::uint32_t root_order);
MonomialMatrix identity_matrix(std::size_t dim);

/// A finite permutation group, stored as the explicit list of its elements.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 1'000'000;

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& element(ElementId id) const { return elements_[index(id)]; }
  ElementId identity() const noexcept { return ElementId{0}; }
  const std::vector<ElementId>& generators() const noexcept { return generators_; }

  /// Throws Precondition when `p` is not in the group.
  ElementId id_of(const Permutation& p) const;
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const;
  ElementId power(ElementId g, std::int64_t m) const;
  std::uint64_t element_order(ElementId g) const;
  /// lcm of element orders.
  std::uint64_t exponent() const;

  /// Conjugacy class index per element and the class sizes.
  struct Classes {
    std::vector<std::uint32_t> class_of;
    std::vector<ElementId> representatives;
    std::vector<std::size_t> sizes;
  };
  Classes conjugacy_classes() const;

 private:
  friend class GroupBuilder;
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<ElementId> generators_;
};

/// tau: Gamma -> GL_d by monomial matrices over the e-th roots of unity.
class MonomialRep {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::uint32_t root_order() const noexcept { return root_order_; }
  const MonomialMatrix& matrix(ElementId g) const { return matrices_[index(g)]; }

  /// Block sum with another representation of the same group.
  MonomialRep direct_sum(const MonomialRep& other) const;

 private:
  friend class GroupBuilder;
  std::size_t dim_ = 0;
  std::uint32_t root_order_ = 1;
  std::vector<MonomialMatrix> matrices_;
};

struct GroupWithRep {
  FiniteGroup group;
  MonomialRep rep;
};

/// Generator data as read from input: permutations and their matrices.
struct RepresentationSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::size_t dim = 0;
  std::uint32_t root_order = 1;
  std::vector<MonomialMatrix> matrices;
};

class GroupBuilder {
 public:
  /// Breadth-first closure over the generators, carrying matrices along.
  /// Throws GroupTooLarge or InconsistentRepresentation.
  static GroupWithRep closure(const RepresentationSpec& spec, std::size_t max_order = FiniteGroup::kDefaultMaxOrder);
};

inline GroupWithRep group_closure(const RepresentationSpec& spec,
                                  std::size_t max_order = FiniteGroup::kDefaultMaxOrder) {
  return GroupBuilder::closure(spec, max_order);
}

/// Left regular action of a group given by its Cayley table (0-based,
/// table[a][b] = a*b); returns one permutation per element.
std::vector<Permutation> regular_permutations(const std::vector<std::vector<std::uint32_t>>& table);

/// Eigenvalues of tau(g) written as exp(2 pi i a) with a in [0, 1), sorted.
struct EigenExponents {
  std::vector<Rational> fractions;
};

EigenExponents eigen_exponents(const MonomialRep& rep, ElementId g);

/// Tame weights of the element generating inertia. Only valid when |Gamma| is
/// invertible in the residue field: that is the one setting where the weight
/// function w equals (#nonzero exponents) - v.
struct TameWeights {
  Rational v;
  Rational w;
  std::int64_t a = 0;  // tame Artin conductor
};

TameWeights tame_weights(const MonomialRep& rep, ElementId g);

inline ElementId power_map(const FiniteGroup& group, ElementId g, std::int64_t m) { return group.power(g, m); }

/// Convenience constructors used by the catalog and tests.
namespace catalog {

/// Symmetric group S_n acting on {1..n}, with the permutation representation
/// taken `copies` times (copies = 2 gives sigma + sigma).
GroupWithRep symmetric_permutation(std::size_t n, std::size_t copies);

/// Signed permutation matrices of size n (order 2^n n!) with the defining
/// representation taken `copies` times. Realized as permutations of {+-1..+-n}.
GroupWithRep signed_permutation(std::size_t n, std::size_t copies);

/// Z/k acting diagonally by zeta_k^w for each weight w.
GroupWithRep cyclic_diagonal(std::uint32_t k, const std::vector<std::uint32_t>& weights);

}  // namespace catalog

}  // namespace gml
