#include "tensorbraid/identities.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "tensorbraid/combinators.hpp"

namespace tensorbraid {

namespace {

using Clock = std::chrono::steady_clock;

// Collects equations; the report keeps the first failing difference.
class Check {
 public:
  Check(std::string name, std::vector<int> params)
      : report_{std::move(name), std::move(params), true, {}, {}}, start_(Clock::now()) {}

  void equal(const RingElement& lhs, const RingElement& rhs) {
    if (!report_.holds) return;
    RingElement diff = lhs - rhs;
    if (!diff.is_zero()) {
      report_.holds = false;
      report_.difference = std::move(diff);
    }
  }

  VerificationReport finish() {
    report_.elapsed = Clock::now() - start_;
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  Clock::time_point start_;
};

int as_int(unsigned v) { return static_cast<int>(v); }

RingElement sign(int exponent) { return RingElement(exponent % 2 == 0 ? 1 : -1); }

// Product that stops at the first vanishing factor, so later factors whose
// indices leave their domain are never built.
RingElement lazy_product(std::initializer_list<std::function<RingElement()>> factors) {
  RingElement result = RingElement::one();
  for (const auto& factor : factors) {
    RingElement f = factor();
    if (f.is_zero()) return {};
    result *= f;
  }
  return result;
}

std::pair<int, int> window(int lo, int hi, SummationRange range, int support_hi) {
  if (range == SummationRange::Bounded) return {lo, hi};
  return {-2, support_hi + 2};
}

unsigned u(int v) { return static_cast<unsigned>(v); }

}  // namespace

VerificationReport verify_beta_forms(unsigned k, unsigned l) {
  Check check("beta_forms", {as_int(k), as_int(l)});
  check.equal(RingElement::word(beta_word(k, l)), RingElement::word(beta_word_by_columns(k, l)));
  return check.finish();
}

VerificationReport verify_beta_identities(unsigned j, unsigned l, unsigned m, unsigned n) {
  Check check("beta_identities", {as_int(j), as_int(l), as_int(m), as_int(n)});
  check.equal(beta(l + m, n), beta(m, n).shifted(l) * beta(l, n));
  check.equal(beta(l, m + n), beta(l, m) * beta(l, n).shifted(m));
  check.equal(beta(m, j) * beta(m + l, n).shifted(j), beta(l, n).shifted(m + j) * beta(m, j + n));
  check.equal(beta(n, m + l).shifted(j) * beta(j, m), beta(j + n, m) * beta(n, l).shifted(m + j));
  return check.finish();
}

RingElement random_ring_element(std::mt19937_64& rng, unsigned strands, unsigned terms,
                                unsigned max_length) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> qexp(-2, 2);
  std::uniform_int_distribution<unsigned> len(0, max_length);
  RingElement e;
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<Generator> letters;
    if (strands >= 2) {
      std::uniform_int_distribution<unsigned> gen(1, strands - 1);
      const unsigned n = len(rng);
      for (unsigned i = 0; i < n; ++i) letters.push_back(static_cast<Generator>(gen(rng)));
    }
    int c = coeff(rng);
    if (c == 0) c = 1;
    e += RingElement::word(PositiveWord(std::move(letters)),
                           LaurentPoly::q_power(qexp(rng)) * LaurentPoly(c));
  }
  return e;
}

VerificationReport verify_beta_exchange(unsigned k, unsigned l, const RingElement& phi,
                                        const RingElement& psi) {
  if (phi.strand_count() > std::max(l, 1U) || psi.strand_count() > std::max(k, 1U)) {
    throw std::invalid_argument("beta exchange: phi must lie in B_l and psi in B_k");
  }
  Check check("beta_exchange", {as_int(k), as_int(l)});
  check.equal(beta(k, l) * phi * psi.shifted(l), psi * phi.shifted(k) * beta(k, l));
  return check.finish();
}

VerificationReport verify_beta_exchange(unsigned k, unsigned l, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const RingElement phi = random_ring_element(rng, l, 4, 4);
  const RingElement psi = random_ring_element(rng, k, 4, 4);
  return verify_beta_exchange(k, l, phi, psi);
}

VerificationReport verify_omega_conjugation(unsigned a, const RingElement& phi) {
  if (a == 0) throw std::invalid_argument("omega conjugation needs a >= 1");
  Check check("omega_conjugation", {as_int(a)});
  const RingElement w = omega(a);
  check.equal(w * phi, phi.flipped(a) * w);
  return check.finish();
}

VerificationReport verify_omega_conjugation(unsigned a, std::uint64_t seed, unsigned samples) {
  if (a == 0) throw std::invalid_argument("omega conjugation needs a >= 1");
  std::mt19937_64 rng(seed);
  Check check("omega_conjugation", {as_int(a)});
  const RingElement w = omega(a);
  for (unsigned s = 0; s < samples; ++s) {
    const RingElement phi = random_ring_element(rng, a, 5, 6);
    check.equal(w * phi, phi.flipped(a) * w);
  }
  return check.finish();
}

VerificationReport verify_omega_recursion(unsigned a, unsigned b) {
  Check check("omega_recursion", {as_int(a), as_int(b)});
  check.equal(omega(a + b), beta(a, b) * omega(a).shifted(b) * omega(b));
  return check.finish();
}

VerificationReport verify_shuffle_consistency(int m, int n) {
  Check check("shuffle_consistency", {m, n});
  check.equal(shuffle(m, n), shuffle_second_recursion(m, n));
  return check.finish();
}

VerificationReport verify_shuffle_support(unsigned m, unsigned n) {
  Check check("shuffle_support", {as_int(m), as_int(n)});
  const RingElement sh = shuffle(as_int(m), as_int(n));
  // Expected: C(m+n, n) distinct basis braids with unit coefficients.
  std::uint64_t binom = 1;
  for (unsigned i = 1; i <= n; ++i) binom = binom * (m + i) / i;
  std::vector<RingElement::Term> unit_terms;
  for (const auto& [id, c] : sh.terms()) unit_terms.emplace_back(id, LaurentPoly(1));
  check.equal(sh, RingElement::from_terms(unit_terms));
  check.equal(RingElement(static_cast<int>(sh.size())), RingElement(static_cast<int>(binom)));
  return check.finish();
}

VerificationReport verify_shaiden(unsigned k, unsigned m, unsigned n) {
  Check check("shaiden", {as_int(k), as_int(m), as_int(n)});
  const int K = as_int(k), M = as_int(m), N = as_int(n);
  check.equal(shuffle(N + K, M) * shuffle(K, N).shifted(m), shuffle(K, M + N) * shuffle(N, M));
  return check.finish();
}

VerificationReport verify_pochhammer_split(unsigned k, unsigned n, unsigned a) {
  if (a > n) throw std::invalid_argument("pochhammer split needs a <= n");
  Check check("pochhammer_split", {as_int(k), as_int(n), as_int(a)});
  const LaurentPoly x = LaurentPoly::x(), y = LaurentPoly::y();
  check.equal(pochhammer(k, n, x, y), pochhammer(k, a, x, y) * pochhammer(k + a, n - a, x, y));
  return check.finish();
}

VerificationReport verify_lemma_robrbin(unsigned k, unsigned n, SummationRange range) {
  Check check("robrbin", {as_int(k), as_int(n)});
  const LaurentPoly x = LaurentPoly::x(), y = LaurentPoly::y(), z = LaurentPoly::z();
  RingElement rhs;
  const auto [lo, hi] = window(0, as_int(n), range, as_int(n));
  for (int a = lo; a <= hi; ++a) {
    rhs += lazy_product({[&] { return shuffle(as_int(n) - a, a).shifted(k); },
                         [&] { return beta(k, u(a)); },
                         [&] { return pochhammer(0, u(a), y, z); },
                         [&] { return pochhammer(k, n - u(a), x, y).shifted(u(a)); }});
  }
  check.equal(pochhammer(k, n, x, z), rhs);
  return check.finish();
}

VerificationReport verify_cobith(unsigned k, unsigned n, SummationRange range) {
  Check check("cobith", {as_int(k), as_int(n)});
  const LaurentPoly x = LaurentPoly::x(), z = LaurentPoly::z();
  RingElement rhs;
  const auto [lo, hi] = window(0, as_int(n), range, as_int(n));
  for (int a = lo; a <= hi; ++a) {
    rhs += lazy_product({[&] { return shuffle(as_int(n) - a, a).shifted(k); },
                         [&] { return sign(a) * beta(k, u(a)); },
                         [&] { return omega(u(a)); },
                         [&] { return RingElement(z.pow(a) * x.pow(as_int(n) - a)); }});
  }
  check.equal(pochhammer(k, n, x, z), rhs);
  return check.finish();
}

namespace {

RingElement vandermonde1_rhs(int a, int m, int n, int k, SummationRange range) {
  RingElement rhs;
  const auto [lo, hi] = window(0, a, range, a);
  for (int b = lo; b <= hi; ++b) {
    const int c = a - b;
    rhs += lazy_product({[&] { return shuffle(m - b, b).shifted(u(k)); },
                         [&] { return shuffle(n - c, c).shifted(u(m + k)); },
                         [&] { return beta(u(k), u(b)) * beta(u(m + k - b), u(c)).shifted(u(b)); }});
  }
  return rhs;
}

RingElement vandermonde1bis_rhs(int a, int m, int n, SummationRange range) {
  RingElement rhs;
  const auto [lo, hi] = window(0, a, range, a);
  for (int b = lo; b <= hi; ++b) {
    const int c = a - b;
    rhs += lazy_product({[&] { return shuffle(m - b, b); },
                         [&] { return shuffle(n - c, c).shifted(u(m)); },
                         [&] { return beta(u(m - b), u(c)).shifted(u(b)); }});
  }
  return rhs;
}

}  // namespace

VerificationReport verify_vandermonde(std::string_view variant, const std::vector<int>& params,
                                      SummationRange range) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("vandermonde " + std::string(variant) + " expects " +
                                  std::to_string(count) + " parameters");
    }
    for (int p : params) {
      if (p < 0) throw std::invalid_argument("vandermonde parameters must be non-negative");
    }
  };
  if (variant == "1") {
    need(4);
    const int a = params[0], m = params[1], n = params[2], k = params[3];
    Check check("vandermonde1", params);
    check.equal(shuffle(m + n - a, a).shifted(u(k)) * beta(u(k), u(a)), vandermonde1_rhs(a, m, n, k, range));
    return check.finish();
  }
  if (variant == "1bis") {
    need(3);
    const int a = params[0], m = params[1], n = params[2];
    Check check("vandermonde1bis", params);
    check.equal(shuffle(m + n - a, a), vandermonde1bis_rhs(a, m, n, range));
    return check.finish();
  }
  if (variant == "2") {
    need(3);
    const int e = params[0], c = params[1], j = params[2];
    Check check("vandermonde2", params);
    // The trailing beta_{a,c+j} is applied per term inside the sum.
    RingElement rhs;
    const auto [lo, hi] = window(0, std::min(e, j), range, std::max(e, j));
    for (int a = lo; a <= hi; ++a) {
      rhs += lazy_product({[&] { return sign(a) * shuffle(j - a, a); },
                           [&] { return omega(u(j - a)).shifted(u(a)); },
                           [&] { return shuffle(e - a, c + j).shifted(u(a)); },
                           [&] { return beta(u(a), u(c + j)); }});
    }
    check.equal(omega(u(j)) * shuffle(e, c).shifted(u(j)), rhs);
    return check.finish();
  }
  throw std::invalid_argument("unknown vandermonde variant: " + std::string(variant));
}

VerificationReport verify_vandermonde_reductions(unsigned a, unsigned p) {
  Check check("vandermonde_reductions", {as_int(a), as_int(p)});
  const int A = as_int(a), P = as_int(p);
  // n = 1: Sh_{M,N} with M = p + 1 - a, N = a against the first recursion.
  {
    const int M = P + 1 - A, N = A;
    RingElement recursion = shuffle(M - 1, N);
    if (M >= 0 && N >= 1) recursion += shuffle(M, N - 1) * beta(u(M), 1).shifted(u(N - 1));
    check.equal(vandermonde1bis_rhs(A, P, 1, SummationRange::Bounded), recursion);
  }
  // m = 1: against the second recursion.
  {
    const int M = P + 1 - A, N = A;
    RingElement recursion = shuffle(M, N - 1).shifted(1);
    if (M >= 1 && N >= 0) recursion += shuffle(M - 1, N).shifted(1) * beta(1, u(N));
    check.equal(vandermonde1bis_rhs(A, 1, P, SummationRange::Bounded), recursion);
  }
  return check.finish();
}

VerificationReport verify_X_recursion(unsigned a, unsigned b, unsigned c) {
  if (b == 0) throw std::invalid_argument("X recursion needs b >= 1");
  Check check("x_recursion", {as_int(a), as_int(b), as_int(c)});
  auto X = [](unsigned aa, unsigned bb, unsigned cc) {
    return shuffle(as_int(aa), as_int(bb)).shifted(cc) * beta(cc, bb);
  };
  check.equal(X(a + 1, b, c), X(a, b, c) + X(a + 1, b - 1, c) * beta(a + c + 1, 1).shifted(b - 1));
  return check.finish();
}

SystemSides sytso_sides(unsigned a, unsigned b, unsigned c, unsigned e, unsigned f,
                        SummationRange range) {
  const int A = as_int(a), B = as_int(b), C = as_int(c), E = as_int(e), F = as_int(f);
  SystemSides sides;
  {
    const auto [lo, hi] = window(std::max(0, E), std::min(C, B + C - F), range, B + C);
    for (int i = lo; i <= hi; ++i) {
      sides.lhs += lazy_product({[&] { return tensor_block(B, C, i).shifted(a); },
                                 [&] { return tensor_block(A, i, E); },
                                 [&] { return tensor_block(A + i - E, B + C - i, F).shifted(e); }});
    }
  }
  {
    const auto [lo, hi] = window(std::max(0, F + E - C), std::min(F, B), range, B + C);
    for (int j = lo; j <= hi; ++j) {
      sides.rhs += lazy_product({[&] { return tensor_block(A, B, j); },
                                 [&] { return tensor_block(A + B - j, C, F + E - j).shifted(u(j)); },
                                 [&] { return tensor_block(j, F + E - j, E); }});
    }
  }
  return sides;
}

VerificationReport verify_sytso(unsigned a, unsigned b, unsigned c, unsigned e, unsigned f,
                                SummationRange range) {
  Check check("sytso", {as_int(a), as_int(b), as_int(c), as_int(e), as_int(f)});
  const SystemSides sides = sytso_sides(a, b, c, e, f, range);
  check.equal(sides.lhs, sides.rhs);
  return check.finish();
}

VerificationReport verify_sytso_ranges(unsigned a, unsigned b, unsigned c, unsigned e, unsigned f) {
  Check check("sytso_ranges", {as_int(a), as_int(b), as_int(c), as_int(e), as_int(f)});
  const SystemSides bounded = sytso_sides(a, b, c, e, f, SummationRange::Bounded);
  const SystemSides vanishing = sytso_sides(a, b, c, e, f, SummationRange::Vanishing);
  check.equal(bounded.lhs, vanishing.lhs);
  check.equal(bounded.rhs, vanishing.rhs);
  return check.finish();
}

VerificationReport verify_sytso2(unsigned b, unsigned c, unsigned e, unsigned f) {
  Check check("sytso2", {as_int(b), as_int(c), as_int(e), as_int(f)});
  const int B = as_int(b), C = as_int(c), E = as_int(e), F = as_int(f);
  RingElement lhs;
  for (int i = E; i <= C; ++i) {
    const RingElement sh1 = shuffle(C - i, i - E).shifted(b);
    const RingElement sh2 = shuffle(B + C - F - i, F).shifted(u(i - E));
    if (sh1.is_zero() || sh2.is_zero()) continue;
    lhs += (sh1 * beta(b, u(i - E)) * unit_pochhammer(b, u(C - i)).shifted(u(i - E)) * sh2 *
            beta(u(i - E), f))
               .scaled(LaurentPoly::q_power(-2 * i));
  }
  RingElement rhs;
  for (int j = 0; j <= std::min(B, F); ++j) {
    const RingElement sh1 = shuffle(B - j, j);
    const RingElement sh2 = shuffle(C - E - F + j, F - j).shifted(b);
    if (sh1.is_zero() || sh2.is_zero()) continue;
    rhs += sh1 * sh2 * beta(u(B - j), u(F - j)).shifted(u(j)) * unit_pochhammer(u(j), u(F - j));
  }
  check.equal(lhs, rhs.scaled(LaurentPoly::q_power(-2 * E)));
  return check.finish();
}

// --- sweeps ----------------------------------------------------------------

namespace {

struct IdentityEntry {
  unsigned arity;
  std::function<bool(const std::vector<int>&)> admissible;
  std::function<int(const std::vector<int>&)> weight;
  std::function<VerificationReport(const std::vector<int>&, std::uint64_t)> run;
};

int total(const std::vector<int>& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

auto always = [](const std::vector<int>&) { return true; };

const std::map<std::string, IdentityEntry, std::less<>>& registry() {
  static const std::map<std::string, IdentityEntry, std::less<>> entries = [] {
    std::map<std::string, IdentityEntry, std::less<>> r;
    r["beta_forms"] = {2, always, total, [](const auto& p, auto) { return verify_beta_forms(u(p[0]), u(p[1])); }};
    r["beta_identities"] = {4, always, total, [](const auto& p, auto) {
                              return verify_beta_identities(u(p[0]), u(p[1]), u(p[2]), u(p[3]));
                            }};
    r["beta_exchange"] = {2, always, total, [](const auto& p, std::uint64_t seed) {
                            return verify_beta_exchange(u(p[0]), u(p[1]), seed * 1000003U + u(p[0]) * 101U + u(p[1]));
                          }};
    r["omega_conjugation"] = {1, [](const auto& p) { return p[0] >= 1; }, total,
                              [](const auto& p, std::uint64_t seed) {
                                return verify_omega_conjugation(u(p[0]), seed * 7919U + u(p[0]), 5);
                              }};
    r["omega_recursion"] = {2, always, total, [](const auto& p, auto) { return verify_omega_recursion(u(p[0]), u(p[1])); }};
    r["shuffle_consistency"] = {2, always, total,
                                [](const auto& p, auto) { return verify_shuffle_consistency(p[0], p[1]); }};
    r["shuffle_support"] = {2, always, total, [](const auto& p, auto) { return verify_shuffle_support(u(p[0]), u(p[1])); }};
    r["shaiden"] = {3, always, total, [](const auto& p, auto) { return verify_shaiden(u(p[0]), u(p[1]), u(p[2])); }};
    r["pochhammer_split"] = {3, [](const auto& p) { return p[2] <= p[1]; },
                             [](const auto& p) { return p[0] + p[1]; },
                             [](const auto& p, auto) { return verify_pochhammer_split(u(p[0]), u(p[1]), u(p[2])); }};
    r["robrbin"] = {2, always, total, [](const auto& p, auto) { return verify_lemma_robrbin(u(p[0]), u(p[1])); }};
    r["cobith"] = {2, always, total, [](const auto& p, auto) { return verify_cobith(u(p[0]), u(p[1])); }};
    r["vandermonde1"] = {4, always, total, [](const auto& p, auto) { return verify_vandermonde("1", p); }};
    r["vandermonde1bis"] = {3, always, total, [](const auto& p, auto) { return verify_vandermonde("1bis", p); }};
    r["vandermonde2"] = {3, always, total, [](const auto& p, auto) { return verify_vandermonde("2", p); }};
    r["vandermonde_reductions"] = {2, always, total, [](const auto& p, auto) {
                                     return verify_vandermonde_reductions(u(p[0]), u(p[1]));
                                   }};
    r["x_recursion"] = {3, [](const auto& p) { return p[1] >= 1; }, total,
                        [](const auto& p, auto) { return verify_X_recursion(u(p[0]), u(p[1]), u(p[2])); }};
    r["sytso"] = {5, [](const auto& p) { return p[3] + p[4] <= p[0] + p[1] + p[2]; },
                  [](const auto& p) { return p[0] + p[1] + p[2]; },
                  [](const auto& p, auto) { return verify_sytso(u(p[0]), u(p[1]), u(p[2]), u(p[3]), u(p[4])); }};
    r["sytso_ranges"] = {5, [](const auto& p) { return p[3] + p[4] <= p[0] + p[1] + p[2]; },
                         [](const auto& p) { return p[0] + p[1] + p[2]; },
                         [](const auto& p, auto) {
                           return verify_sytso_ranges(u(p[0]), u(p[1]), u(p[2]), u(p[3]), u(p[4]));
                         }};
    r["sytso2"] = {4, [](const auto& p) { return p[2] + p[3] <= p[0] + p[1]; },
                   [](const auto& p) { return p[0] + p[1]; },
                   [](const auto& p, auto) { return verify_sytso2(u(p[0]), u(p[1]), u(p[2]), u(p[3])); }};
    return r;
  }();
  return entries;
}

const IdentityEntry& lookup(std::string_view name) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) throw std::invalid_argument("unknown identity: " + std::string(name));
  return it->second;
}

void enumerate(std::vector<int>& current, unsigned arity, int limit, std::vector<std::vector<int>>& out) {
  if (current.size() == arity) {
    out.push_back(current);
    return;
  }
  for (int v = 0; v <= limit; ++v) {
    current.push_back(v);
    enumerate(current, arity, limit, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::string> identity_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : registry()) names.push_back(name);
  return names;
}

std::vector<std::vector<int>> sweep_parameters(std::string_view name, unsigned bound) {
  const IdentityEntry& entry = lookup(name);
  std::vector<std::vector<int>> candidates;
  std::vector<int> current;
  enumerate(current, entry.arity, as_int(bound), candidates);
  std::vector<std::vector<int>> out;
  for (auto& p : candidates) {
    if (entry.weight(p) <= as_int(bound) && entry.admissible(p)) out.push_back(std::move(p));
  }
  // Cheapest tuples first, lexicographic within a weight.
  std::stable_sort(out.begin(), out.end(),
                   [&](const auto& x, const auto& y) { return entry.weight(x) < entry.weight(y); });
  return out;
}

VerificationReport run_identity(std::string_view name, const std::vector<int>& params, std::uint64_t seed) {
  const IdentityEntry& entry = lookup(name);
  if (params.size() != entry.arity) {
    throw std::invalid_argument(std::string(name) + " expects " + std::to_string(entry.arity) + " parameters");
  }
  for (int p : params) {
    if (p < 0) throw std::invalid_argument("identity parameters must be non-negative");
  }
  if (!entry.admissible(params)) throw std::invalid_argument("inadmissible parameters for " + std::string(name));
  return entry.run(params, seed);
}

std::vector<VerificationReport> sweep(std::string_view name, unsigned bound, unsigned jobs, std::uint64_t seed) {
  const auto tuples = sweep_parameters(name, bound);
  const IdentityEntry& entry = lookup(name);
  std::vector<VerificationReport> reports(tuples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) reports[i] = entry.run(tuples[i], seed);
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  return reports;
}

std::string report_record(const VerificationReport& report) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : report.difference.sorted_terms()) {
    std::vector<int> letters(w.letters().begin(), w.letters().end());
    terms.push_back({letters, c.to_string()});
  }
  nlohmann::json j = {{"identity", report.identity},
                      {"params", report.params},
                      {"holds", report.holds},
                      {"difference", report.difference.to_string()},
                      {"difference_terms", terms},
                      {"elapsed_ms", report.elapsed.count()}};
  return j.dump();
}

}  // namespace tensorbraid
