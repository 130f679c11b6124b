#include "gml/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "gml/errors.hpp"

namespace gml {

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
  return out;
}

Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p = identity_permutation(degree);
  std::vector<bool> seen(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto from = cycle[i];
      const auto to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > degree || to < 1 || to > degree) {
        throw Error(ErrorKind::ParseError, "cycle point out of range 1.." + std::to_string(degree));
      }
      if (seen[from - 1]) throw Error(ErrorKind::ParseError, "point repeated across cycles");
      seen[from - 1] = true;
      p[from - 1] = to - 1;
    }
  }
  return p;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

MonomialMatrix identity_matrix(std::size_t dim) {
  return MonomialMatrix{identity_permutation(dim), std::vector<std::uint32_t>(dim, 0)};
}

MonomialMatrix multiply(const MonomialMatrix& a, const MonomialMatrix& b, std::uint32_t root_order) {
  // (AB) e_j = zeta^(b_j) A e_(pb(j)) = zeta^(b_j + a_(pb(j))) e_(pa(pb(j))).
  MonomialMatrix out;
  out.perm = compose(a.perm, b.perm);
  out.exps.resize(b.exps.size());
  for (std::size_t j = 0; j < b.exps.size(); ++j) {
    out.exps[j] = (b.exps[j] + a.exps[b.perm[j]]) % root_order;
  }
  return out;
}

// ---------------------------------------------------------------------------

ElementId FiniteGroup::id_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw Error(ErrorKind::Precondition, "permutation is not a group element");
  return ElementId{it->second};
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const { return id_of(compose(element(a), element(b))); }

ElementId FiniteGroup::inverse(ElementId a) const { return id_of(gml::inverse(element(a))); }

std::uint64_t FiniteGroup::element_order(ElementId g) const {
  const Permutation& p = element(g);
  std::vector<bool> seen(p.size(), false);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

ElementId FiniteGroup::power(ElementId g, std::int64_t m) const {
  const auto ord = static_cast<std::int64_t>(element_order(g));
  std::int64_t k = mod64(m, ord);
  Permutation result = identity_permutation(degree_);
  Permutation base = element(g);
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return id_of(result);
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < elements_.size(); ++i) e = std::lcm(e, element_order(ElementId{i}));
  return e;
}

FiniteGroup::Classes FiniteGroup::conjugacy_classes() const {
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  Classes out;
  out.class_of.assign(elements_.size(), kUnassigned);
  std::vector<std::pair<Permutation, Permutation>> gens;
  for (auto g : generators_) gens.emplace_back(element(g), gml::inverse(element(g)));

  for (std::uint32_t start = 0; start < elements_.size(); ++start) {
    if (out.class_of[start] != kUnassigned) continue;
    const auto cls = static_cast<std::uint32_t>(out.representatives.size());
    out.representatives.push_back(ElementId{start});
    std::size_t size = 0;
    std::deque<std::uint32_t> queue{start};
    out.class_of[start] = cls;
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      ++size;
      for (const auto& [s, s_inv] : gens) {
        const auto y = index(id_of(compose(s, compose(elements_[x], s_inv))));
        if (out.class_of[y] == kUnassigned) {
          out.class_of[y] = cls;
          queue.push_back(y);
        }
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

MonomialRep MonomialRep::direct_sum(const MonomialRep& other) const {
  if (matrices_.size() != other.matrices_.size()) {
    throw Error(ErrorKind::Precondition, "direct sum of representations of different groups");
  }
  MonomialRep out;
  out.dim_ = dim_ + other.dim_;
  out.root_order_ = std::lcm(root_order_, other.root_order_);
  const auto scale_a = out.root_order_ / root_order_;
  const auto scale_b = out.root_order_ / other.root_order_;
  out.matrices_.reserve(matrices_.size());
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    MonomialMatrix m;
    const auto& a = matrices_[i];
    const auto& b = other.matrices_[i];
    for (std::size_t j = 0; j < dim_; ++j) {
      m.perm.push_back(a.perm[j]);
      m.exps.push_back(a.exps[j] * scale_a);
    }
    for (std::size_t j = 0; j < other.dim_; ++j) {
      m.perm.push_back(b.perm[j] + static_cast<std::uint32_t>(dim_));
      m.exps.push_back(b.exps[j] * scale_b);
    }
    out.matrices_.push_back(std::move(m));
  }
  return out;
}

namespace {

void validate_permutation(const Permutation& p, std::size_t degree, const char* what) {
  if (p.size() != degree) throw Error(ErrorKind::ParseError, std::string(what) + " has wrong size");
  std::vector<bool> seen(degree, false);
  for (auto v : p) {
    if (v >= degree || seen[v]) throw Error(ErrorKind::ParseError, std::string(what) + " is not a permutation");
    seen[v] = true;
  }
}

}  // namespace

GroupWithRep GroupBuilder::closure(const RepresentationSpec& spec, std::size_t max_order) {
  if (spec.root_order < 1) throw Error(ErrorKind::ParseError, "root order must be positive");
  if (spec.matrices.size() != spec.generators.size()) {
    throw Error(ErrorKind::ParseError, "need exactly one matrix per generator");
  }
  for (const auto& g : spec.generators) validate_permutation(g, spec.degree, "generator");
  std::vector<MonomialMatrix> gen_matrices;
  for (const auto& m : spec.matrices) {
    validate_permutation(m.perm, spec.dim, "matrix permutation");
    if (m.exps.size() != spec.dim) throw Error(ErrorKind::ParseError, "matrix exponent vector has wrong size");
    MonomialMatrix reduced = m;
    for (auto& e : reduced.exps) e %= spec.root_order;
    gen_matrices.push_back(std::move(reduced));
  }

  GroupWithRep out;
  FiniteGroup& group = out.group;
  MonomialRep& rep = out.rep;
  group.degree_ = spec.degree;
  rep.dim_ = spec.dim;
  rep.root_order_ = spec.root_order;

  group.elements_.push_back(identity_permutation(spec.degree));
  group.index_.emplace(group.elements_.back(), 0u);
  rep.matrices_.push_back(identity_matrix(spec.dim));

  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    for (std::size_t s = 0; s < spec.generators.size(); ++s) {
      Permutation next = compose(spec.generators[s], group.elements_[i]);
      MonomialMatrix mat = multiply(gen_matrices[s], rep.matrices_[i], spec.root_order);
      auto it = group.index_.find(next);
      if (it != group.index_.end()) {
        if (rep.matrices_[it->second] != mat) {
          throw Error(ErrorKind::InconsistentRepresentation,
                      "two words for the same group element carry different matrices");
        }
        continue;
      }
      if (group.elements_.size() >= max_order) {
        throw Error(ErrorKind::GroupTooLarge, "group order exceeds " + std::to_string(max_order));
      }
      group.index_.emplace(next, static_cast<std::uint32_t>(group.elements_.size()));
      group.elements_.push_back(std::move(next));
      rep.matrices_.push_back(std::move(mat));
    }
  }
  for (const auto& g : spec.generators) group.generators_.push_back(group.id_of(g));
  return out;
}

std::vector<Permutation> regular_permutations(const std::vector<std::vector<std::uint32_t>>& table) {
  std::vector<Permutation> out;
  out.reserve(table.size());
  for (const auto& row : table) {
    Permutation p(row.begin(), row.end());
    validate_permutation(p, table.size(), "Cayley table row");
    out.push_back(std::move(p));
  }
  return out;
}

EigenExponents eigen_exponents(const MonomialRep& rep, ElementId g) {
  const MonomialMatrix& m = rep.matrix(g);
  const auto e = static_cast<long>(rep.root_order());
  EigenExponents out;
  std::vector<bool> seen(m.perm.size(), false);
  for (std::size_t start = 0; start < m.perm.size(); ++start) {
    if (seen[start]) continue;
    long len = 0;
    long sum = 0;
    for (std::size_t j = start; !seen[j]; j = m.perm[j]) {
      seen[j] = true;
      ++len;
      sum += m.exps[j];
    }
    sum %= e;
    // Block characteristic polynomial lambda^len - zeta_e^sum.
    for (long t = 0; t < len; ++t) {
      Rational f(BigInt((sum + e * t) % (len * e)), BigInt(len * e));
      f.canonicalize();
      out.fractions.push_back(f);
    }
  }
  std::sort(out.fractions.begin(), out.fractions.end());
  return out;
}

TameWeights tame_weights(const MonomialRep& rep, ElementId g) {
  TameWeights out;
  for (const auto& f : eigen_exponents(rep, g).fractions) {
    out.v += f;
    if (f != 0) ++out.a;
  }
  out.w = Rational(out.a) - out.v;
  return out;
}

// ---------------------------------------------------------------------------

namespace catalog {

namespace {

MonomialMatrix repeat_blocks(const MonomialMatrix& m, std::size_t copies) {
  MonomialMatrix out;
  const auto d = static_cast<std::uint32_t>(m.perm.size());
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t j = 0; j < d; ++j) {
      out.perm.push_back(m.perm[j] + static_cast<std::uint32_t>(c) * d);
      out.exps.push_back(m.exps[j]);
    }
  }
  return out;
}

}  // namespace

GroupWithRep symmetric_permutation(std::size_t n, std::size_t copies) {
  RepresentationSpec spec;
  spec.degree = n;
  spec.dim = n * copies;
  spec.root_order = 1;
  if (n >= 2) {
    spec.generators.push_back(from_cycles(n, {{1, 2}}));
    std::vector<std::uint32_t> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 1u);
    spec.generators.push_back(from_cycles(n, {cycle}));
  }
  for (const auto& g : spec.generators) {
    spec.matrices.push_back(repeat_blocks(MonomialMatrix{g, std::vector<std::uint32_t>(n, 0)}, copies));
  }
  return group_closure(spec);
}

GroupWithRep signed_permutation(std::size_t n, std::size_t copies) {
  // Point i < n stands for +e_i, point n + i for -e_i.
  const auto nn = static_cast<std::uint32_t>(n);
  RepresentationSpec spec;
  spec.degree = 2 * n;
  spec.dim = n * copies;
  spec.root_order = 2;
  spec.generators.push_back(from_cycles(2 * n, {{1, nn + 1}}));
  if (n >= 2) {
    spec.generators.push_back(from_cycles(2 * n, {{1, 2}, {nn + 1, nn + 2}}));
    std::vector<std::uint32_t> plus(n), minus(n);
    std::iota(plus.begin(), plus.end(), 1u);
    std::iota(minus.begin(), minus.end(), nn + 1);
    spec.generators.push_back(from_cycles(2 * n, {plus, minus}));
  }
  for (const auto& g : spec.generators) {
    MonomialMatrix m;
    for (std::uint32_t j = 0; j < nn; ++j) {
      m.perm.push_back(g[j] % nn);
      m.exps.push_back(g[j] >= nn ? 1u : 0u);
    }
    spec.matrices.push_back(repeat_blocks(m, copies));
  }
  return group_closure(spec);
}

GroupWithRep cyclic_diagonal(std::uint32_t k, const std::vector<std::uint32_t>& weights) {
  RepresentationSpec spec;
  spec.degree = k;
  spec.dim = weights.size();
  spec.root_order = k;
  if (k >= 2) {
    std::vector<std::uint32_t> cycle(k);
    std::iota(cycle.begin(), cycle.end(), 1u);
    spec.generators.push_back(from_cycles(k, {cycle}));
    spec.matrices.push_back(MonomialMatrix{identity_permutation(weights.size()), weights});
  }
  return group_closure(spec);
}

}  // namespace catalog

}  // namespace gml
