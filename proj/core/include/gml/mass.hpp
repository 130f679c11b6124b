#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gml/errors.hpp"
#include "gml/group.hpp"
#include "gml/qsym.hpp"

namespace gml {

/// Marks a total mass or stringy count that is infinite for every r.
struct Divergent {
  std::string reason;
  friend bool operator==(const Divergent&, const Divergent&) = default;
};

/// A ClassFunction, or infinity.
using Extended = std::variant<ClassFunction, Divergent>;

inline bool is_finite(const Extended& x) { return std::holds_alternative<ClassFunction>(x); }
/// Throws `kind` when x is infinite.
const ClassFunction& finite_value(const Extended& x, ErrorKind kind = ErrorKind::InfiniteInput);
std::string to_string(const Extended& x);

/// mass_v = M(K_r, Gamma, v_tau) and mass_w = M(K_r, Gamma, -w_tau).
struct MassPair {
  Extended mass_v;
  Extended mass_w;

  friend bool operator==(const MassPair&, const MassPair&) = default;
};

// ---------------------------------------------------------------------------
// Tame enumeration

struct TameScenario {
  GroupWithRep group;
  std::int64_t q = 0;
};

struct TameOptions {
  /// Worker threads for pair enumeration; results do not depend on it.
  unsigned threads = 1;
  /// Groups up to this order are enumerated pair by pair; larger ones are
  /// summed over conjugacy classes.
  std::size_t full_enumeration_limit = 1024;
};

/// Residue-class modulus of the tame masses: the multiplicative order of q
/// modulo the exponent of the group.
std::int64_t tame_modulus(const TameScenario& s);

/// Enumerates {(g, h) : h g h^-1 = g^(q^r)} per residue class of r and sums
/// Q^(-v(g)) and Q^(w(g)) over it, divided by |Gamma|. Throws NotTame.
MassPair tame_total_masses(const TameScenario& s, const TameOptions& options = {});

/// True iff on every residue class the pair set is stable under
/// (g, h) -> (g^-1, h) and {v(g^-1)} = {w(g)} as multisets.
bool tame_involution_check(const TameScenario& s, const TameOptions& options = {});

// ---------------------------------------------------------------------------
// Ramification profiles

/// slope * i + intercept.
struct AffineForm {
  Rational slope;
  Rational intercept;
  Rational at(std::int64_t i) const { return slope * i + intercept; }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

struct ProfileStratum {
  ClassFunction count;
  Rational v;
  Rational w;
  friend bool operator==(const ProfileStratum&, const ProfileStratum&) = default;
};

/// Homomorphisms indexed by i in [i0, i1]: coeff(Q) * Q^(count_exp(i)) of
/// them for each i, carrying weights v_exp(i), w_exp(i).
struct GeometricFamily {
  std::int64_t i0 = 1;
  std::optional<std::int64_t> i1;  // empty = infinity
  LaurentPoly coeff;
  AffineForm count_exp;
  AffineForm v_exp;
  AffineForm w_exp;
  friend bool operator==(const GeometricFamily&, const GeometricFamily&) = default;
};

struct RamificationProfile {
  std::int64_t group_order = 1;
  std::vector<ProfileStratum> strata;
  std::vector<GeometricFamily> families;
  friend bool operator==(const RamificationProfile&, const RamificationProfile&) = default;
};

/// Divergent family sums are reported as Divergent components, not thrown.
MassPair profile_total_masses(const RamificationProfile& p);

enum class BuiltinProfile { QuadChar0Sigma, QuadChar2Sigma, QuadChar2Upsilon };

std::optional<BuiltinProfile> parse_builtin_profile(std::string_view name);
std::string_view to_string(BuiltinProfile which);

/// Quadratic extensions: sigma_n over an unramified extension of Q_2, sigma_n
/// over F_q((t)), and upsilon_(m,n) = tau_m + sigma_n over F_q((t)).
/// `m` is only used by QuadChar2Upsilon. Throws InvalidParams.
RamificationProfile builtin_profile(BuiltinProfile which, std::int64_t n, std::int64_t m = 0);

// ---------------------------------------------------------------------------
// Partition formulas

/// Partitions of n into exactly k parts.
BigInt partition_count(std::int64_t n, std::int64_t k);
/// All partitions of n.
BigInt partition_count(std::int64_t n);

/// sum_(m<n) P(n, n-m) Q^-m and sum_(m<=n) P(n, n-m) Q^m.
MassPair bhargava_masses(std::int64_t n);
/// sum_j sum_(i<=j) P(j, i) P(n-j) Q^(i-n), and the same with Q^(n-i).
MassPair kedlaya_masses(std::int64_t n);

struct HilbertCounts {
  ClassFunction hilb_plane;  // #Hilb^n(A^2)
  ClassFunction fiber;       // # of the Hilbert-Chow fiber over the origin
  std::vector<ClassFunction> C;  // C[m] = P(m) Q^m
  std::vector<ClassFunction> D;  // D[m] = sum_i P(m, i) Q^(m-i)
};

HilbertCounts hilbert_counts(std::int64_t n);

}  // namespace gml
