#include "gml/mass.hpp"

#include <map>
#include <numeric>
#include <thread>

#include "gml/errors.hpp"

namespace gml {

const ClassFunction& finite_value(const Extended& x, ErrorKind kind) {
  if (const auto* f = std::get_if<ClassFunction>(&x)) return *f;
  throw Error(kind, "value is infinite: " + std::get<Divergent>(x).reason);
}

std::string to_string(const Extended& x) {
  if (const auto* f = std::get_if<ClassFunction>(&x)) return f->to_string();
  return "infinite";
}

// ---------------------------------------------------------------------------
// Tame enumeration

namespace {

bool is_prime_power(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;
}

std::int64_t mult_order(std::int64_t q, std::int64_t modulus) {
  if (modulus == 1) return 1;
  std::int64_t x = mod64(q, modulus);
  std::int64_t k = 1;
  while (x != 1) {
    x = (x * mod64(q, modulus)) % modulus;
    ++k;
  }
  return k;
}

void check_tame(const TameScenario& s) {
  if (!is_prime_power(s.q)) throw Error(ErrorKind::InvalidParams, "q must be a prime power >= 2");
  const auto order = static_cast<std::int64_t>(s.group.group.order());
  if (std::gcd(s.q, order) != 1) {
    throw Error(ErrorKind::NotTame, "gcd(q, |Gamma|) = " + std::to_string(std::gcd(s.q, order)) + " > 1");
  }
}

// Shared tables for one scenario.
struct TameContext {
  const FiniteGroup& group;
  std::size_t n;
  std::vector<std::uint32_t> inv;
  std::vector<std::uint32_t> table;  // table[a * n + b] = a * b, only in full mode
  std::vector<TameWeights> weights;  // per element (full mode) or per class rep
  std::optional<FiniteGroup::Classes> classes;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table[a * n + b]; }
};

TameContext make_context(const TameScenario& s, const TameOptions& options) {
  const FiniteGroup& g = s.group.group;
  TameContext ctx{g, g.order(), {}, {}, {}, std::nullopt};
  const bool full = ctx.n <= options.full_enumeration_limit;
  if (full) {
    ctx.inv.resize(ctx.n);
    ctx.table.resize(ctx.n * ctx.n);
    for (std::uint32_t a = 0; a < ctx.n; ++a) {
      ctx.inv[a] = index(g.inverse(ElementId{a}));
      for (std::uint32_t b = 0; b < ctx.n; ++b) ctx.table[a * ctx.n + b] = index(g.multiply(ElementId{a}, ElementId{b}));
      ctx.weights.push_back(tame_weights(s.group.rep, ElementId{a}));
    }
  } else {
    ctx.classes = g.conjugacy_classes();
    for (auto rep : ctx.classes->representatives) ctx.weights.push_back(tame_weights(s.group.rep, rep));
  }
  return ctx;
}

using ExponentCounts = std::map<Rational, BigInt>;

struct ClassTally {
  ExponentCounts v;  // exponent -v(g) -> number of pairs
  ExponentCounts w;  // exponent +w(g) -> number of pairs
};

// Pair counts for one residue class, where the Frobenius relation reads
// h g h^-1 = g^m.
ClassTally tally_pairs(const TameContext& ctx, std::int64_t m, unsigned threads) {
  const FiniteGroup& g = ctx.group;
  ClassTally total;
  if (ctx.classes) {
    const auto& cl = *ctx.classes;
    for (std::size_t k = 0; k < cl.representatives.size(); ++k) {
      const auto pm = g.power(cl.representatives[k], m);
      if (cl.class_of[index(pm)] != k) continue;
      // |K| * |C(g)| = |Gamma| pairs.
      total.v[-ctx.weights[k].v] += BigInt(static_cast<unsigned long>(ctx.n));
      total.w[ctx.weights[k].w] += BigInt(static_cast<unsigned long>(ctx.n));
    }
    return total;
  }

  std::vector<std::uint32_t> pow_m(ctx.n);
  for (std::uint32_t a = 0; a < ctx.n; ++a) pow_m[a] = index(g.power(ElementId{a}, m));

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ctx.n)));
  std::vector<std::vector<std::uint64_t>> per_worker(workers, std::vector<std::uint64_t>(ctx.n, 0));
  auto work = [&](unsigned w) {
    for (std::size_t a = w; a < ctx.n; a += workers) {
      std::uint64_t count = 0;
      for (std::uint32_t h = 0; h < ctx.n; ++h) {
        if (ctx.mul(ctx.mul(h, static_cast<std::uint32_t>(a)), ctx.inv[h]) == pow_m[a]) ++count;
      }
      per_worker[w][a] = count;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  // Each element is handled by exactly one worker; merge in element order.
  for (std::size_t a = 0; a < ctx.n; ++a) {
    std::uint64_t count = 0;
    for (const auto& pw : per_worker) count += pw[a];
    if (count == 0) continue;
    total.v[-ctx.weights[a].v] += BigInt(static_cast<unsigned long>(count));
    total.w[ctx.weights[a].w] += BigInt(static_cast<unsigned long>(count));
  }
  return total;
}

std::vector<std::pair<Rational, Rational>> to_sums(const ExponentCounts& counts, std::size_t order) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& [e, c] : counts) {
    Rational coeff(c, BigInt(static_cast<unsigned long>(order)));
    coeff.canonicalize();
    out.emplace_back(coeff, e);
  }
  return out;
}

}  // namespace

std::int64_t tame_modulus(const TameScenario& s) {
  return mult_order(s.q, static_cast<std::int64_t>(s.group.group.exponent()));
}

MassPair tame_total_masses(const TameScenario& s, const TameOptions& options) {
  check_tame(s);
  const auto exponent = static_cast<std::int64_t>(s.group.group.exponent());
  const std::int64_t modulus = mult_order(s.q, exponent);
  const TameContext ctx = make_context(s, options);

  std::vector<std::vector<std::pair<Rational, Rational>>> v_sums, w_sums;
  std::int64_t m = 1;  // q^j mod exp(Gamma)
  for (std::int64_t j = 0; j < modulus; ++j) {
    const ClassTally tally = tally_pairs(ctx, m, options.threads);
    v_sums.push_back(to_sums(tally.v, ctx.n));
    w_sums.push_back(to_sums(tally.w, ctx.n));
    m = (m * mod64(s.q, exponent)) % exponent;  // exponent <= group order, no overflow
  }
  return MassPair{ClassFunction::from_class_sums(modulus, v_sums), ClassFunction::from_class_sums(modulus, w_sums)};
}

bool tame_involution_check(const TameScenario& s, const TameOptions& options) {
  check_tame(s);
  const FiniteGroup& g = s.group.group;
  const auto exponent = static_cast<std::int64_t>(g.exponent());
  const std::int64_t modulus = mult_order(s.q, exponent);
  const TameContext ctx = make_context(s, options);

  std::int64_t m = 1;
  for (std::int64_t j = 0; j < modulus; ++j) {
    ExponentCounts v_of_inverse, w_of_element;
    if (ctx.classes) {
      const auto& cl = *ctx.classes;
      for (std::size_t k = 0; k < cl.representatives.size(); ++k) {
        const auto rep = cl.representatives[k];
        if (cl.class_of[index(g.power(rep, m))] != k) continue;
        const auto inv = g.inverse(rep);
        const auto inv_class = cl.class_of[index(inv)];
        if (cl.class_of[index(g.power(inv, m))] != inv_class) return false;
        v_of_inverse[tame_weights(s.group.rep, inv).v] += 1;
        w_of_element[ctx.weights[k].w] += 1;
      }
    } else {
      for (std::uint32_t a = 0; a < ctx.n; ++a) {
        const auto pm = index(g.power(ElementId{a}, m));
        const auto ai = ctx.inv[a];
        const auto pmi = index(g.power(ElementId{ai}, m));
        for (std::uint32_t h = 0; h < ctx.n; ++h) {
          if (ctx.mul(ctx.mul(h, a), ctx.inv[h]) != pm) continue;
          if (ctx.mul(ctx.mul(h, ai), ctx.inv[h]) != pmi) return false;
          v_of_inverse[ctx.weights[ai].v] += 1;
          w_of_element[ctx.weights[a].w] += 1;
        }
      }
    }
    if (v_of_inverse != w_of_element) return false;
    m = (m * mod64(s.q, exponent)) % exponent;  // exponent <= group order, no overflow
  }
  return true;
}

// ---------------------------------------------------------------------------
// Profiles

namespace {

Extended profile_mass(const RamificationProfile& p, bool use_w) {
  ClassFunction total;
  for (const auto& s : p.strata) total = total + s.count.scale_pow(use_w ? s.w : -s.v);
  for (const auto& f : p.families) {
    const AffineForm& weight = use_w ? f.w_exp : f.v_exp;
    const Rational sign = use_w ? 1 : -1;
    const Rational a = f.count_exp.slope + sign * weight.slope;
    const Rational b = f.count_exp.intercept + sign * weight.intercept;
    try {
      total = total + geometric_sum(f.coeff, a, b, f.i0, f.i1);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DivergentSeries) throw;
      return Divergent{e.message()};
    }
  }
  return total.scaled(Rational(1, static_cast<unsigned long>(p.group_order)));
}

LaurentPoly q_poly(std::initializer_list<std::pair<long, long>> terms) {
  LaurentPoly p;
  for (const auto& [c, e] : terms) p.add_term(Rational(c), e);
  return p;
}

}  // namespace

MassPair profile_total_masses(const RamificationProfile& p) {
  if (p.group_order < 1) throw Error(ErrorKind::InvalidParams, "group order must be positive");
  return MassPair{profile_mass(p, false), profile_mass(p, true)};
}

std::optional<BuiltinProfile> parse_builtin_profile(std::string_view name) {
  if (name == "quad_char0_sigma") return BuiltinProfile::QuadChar0Sigma;
  if (name == "quad_char2_sigma") return BuiltinProfile::QuadChar2Sigma;
  if (name == "quad_char2_upsilon") return BuiltinProfile::QuadChar2Upsilon;
  return std::nullopt;
}

std::string_view to_string(BuiltinProfile which) {
  switch (which) {
    case BuiltinProfile::QuadChar0Sigma: return "quad_char0_sigma";
    case BuiltinProfile::QuadChar2Sigma: return "quad_char2_sigma";
    case BuiltinProfile::QuadChar2Upsilon: return "quad_char2_upsilon";
  }
  return "unknown";
}

RamificationProfile builtin_profile(BuiltinProfile which, std::int64_t n, std::int64_t m) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "n must be >= 1");
  if (m < 0) throw Error(ErrorKind::InvalidParams, "m must be >= 0");
  const Rational nn(n);
  RamificationProfile p;
  p.group_order = 2;
  // Trivial extension K x K and the unramified quadratic field.
  const ProfileStratum unramified{ClassFunction::constant(Rational(1)), Rational(0), Rational(0)};
  p.strata = {unramified, unramified};
  const LaurentPoly two_q_minus_two = q_poly({{2, 1}, {-2, 0}});

  switch (which) {
    case BuiltinProfile::QuadChar0Sigma:
      // Discriminant m^2: 2(q-1) extensions; discriminant m^3: 2q.
      p.strata.push_back({ClassFunction::polynomial_in_Q(two_q_minus_two), nn, Rational(0)});
      p.strata.push_back({ClassFunction::polynomial_in_Q(q_poly({{2, 1}})), nn * 3 / 2, -nn / 2});
      break;
    case BuiltinProfile::QuadChar2Sigma:
      // 2(q-1) q^(i-1) extensions with discriminant m^(2i).
      p.families.push_back(GeometricFamily{1, std::nullopt, two_q_minus_two, {Rational(1), Rational(-1)},
                                           {nn, Rational(0)}, {-nn, nn}});
      break;
    case BuiltinProfile::QuadChar2Upsilon: {
      const Rational mm(m);
      if (m >= 1) {
        p.families.push_back(GeometricFamily{1, m, two_q_minus_two, {Rational(1), Rational(-1)}, {nn, Rational(0)},
                                             {-nn, nn}});
      }
      // i > m: v = (i - m) + n i, w = (1 - i + m) + (n - n i).
      p.families.push_back(GeometricFamily{m + 1, std::nullopt, two_q_minus_two, {Rational(1), Rational(-1)},
                                           {nn + 1, -mm}, {-(nn + 1), 1 + mm + nn}});
      break;
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Partitions

namespace {

// table[n][k] = P(n, k) for 0 <= k <= n <= limit.
std::vector<std::vector<BigInt>> partition_table(std::int64_t limit) {
  std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(limit + 1));
  for (std::int64_t n = 0; n <= limit; ++n) {
    t[n].assign(static_cast<std::size_t>(n + 1), BigInt(0));
    if (n == 0) {
      t[0][0] = 1;
      continue;
    }
    for (std::int64_t k = 1; k <= n; ++k) {
      // P(n, k) = P(n-1, k-1) + P(n-k, k)
      BigInt value = t[n - 1].size() > static_cast<std::size_t>(k - 1) ? t[n - 1][k - 1] : BigInt(0);
      if (k <= n - k) value += t[n - k][k];
      t[n][k] = value;
    }
  }
  return t;
}

BigInt total_partitions(const std::vector<std::vector<BigInt>>& t, std::int64_t n) {
  BigInt sum = 0;
  for (const auto& c : t[n]) sum += c;
  return sum;
}

ClassFunction q_sum(const std::vector<std::pair<BigInt, std::int64_t>>& terms) {
  LaurentPoly p;
  for (const auto& [c, e] : terms) p.add_term(Rational(c), e);
  return ClassFunction::polynomial_in_Q(p);
}

void require_positive(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "n must be >= 1");
}

}  // namespace

BigInt partition_count(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw Error(ErrorKind::InvalidParams, "partition arguments must be non-negative");
  if (k > n) return 0;
  return partition_table(n)[n][k];
}

BigInt partition_count(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "partition argument must be non-negative");
  return total_partitions(partition_table(n), n);
}

MassPair bhargava_masses(std::int64_t n) {
  require_positive(n);
  const auto t = partition_table(n);
  std::vector<std::pair<BigInt, std::int64_t>> v, w;
  for (std::int64_t m = 0; m <= n; ++m) {
    if (m < n) v.emplace_back(t[n][n - m], -m);
    w.emplace_back(t[n][n - m], m);
  }
  return MassPair{q_sum(v), q_sum(w)};
}

MassPair kedlaya_masses(std::int64_t n) {
  require_positive(n);
  const auto t = partition_table(n);
  std::vector<std::pair<BigInt, std::int64_t>> v, w;
  for (std::int64_t j = 0; j <= n; ++j) {
    const BigInt rest = total_partitions(t, n - j);
    for (std::int64_t i = 0; i <= j; ++i) {
      v.emplace_back(t[j][i] * rest, i - n);
      w.emplace_back(t[j][i] * rest, n - i);
    }
  }
  return MassPair{q_sum(v), q_sum(w)};
}

HilbertCounts hilbert_counts(std::int64_t n) {
  require_positive(n);
  const auto t = partition_table(n);
  HilbertCounts out;
  std::vector<std::pair<BigInt, std::int64_t>> plane;
  for (std::int64_t m = 0; m <= n; ++m) plane.emplace_back(t[n][n - m], 2 * n - m);
  out.hilb_plane = q_sum(plane);
  for (std::int64_t m = 0; m <= n; ++m) {
    out.C.push_back(q_sum({{total_partitions(t, m), m}}));
    std::vector<std::pair<BigInt, std::int64_t>> d;
    for (std::int64_t i = 0; i <= m; ++i) d.emplace_back(t[m][i], m - i);
    out.D.push_back(q_sum(d));
  }
  for (std::int64_t j = 0; j <= n; ++j) out.fiber = out.fiber + out.C[n - j] * out.D[j];
  return out;
}

}  // namespace gml
