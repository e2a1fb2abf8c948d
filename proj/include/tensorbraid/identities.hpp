#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tensorbraid/group_ring.hpp"

namespace tensorbraid {

// Outcome of one exact identity check.  `holds` is true iff `difference`
// (left side minus right side of the first failing equation) is zero.
struct VerificationReport {
  std::string identity;
  std::vector<int> params;
  bool holds = false;
  RingElement difference;
  std::chrono::duration<double, std::milli> elapsed{};
};

// How a sum with implicit range is evaluated: over the stated bounds, or over
// a window wider than the support, relying on terms that vanish.
enum class SummationRange { Bounded, Vanishing };

VerificationReport verify_beta_forms(unsigned k, unsigned l);
// Both product rules for beta at (l,m,n) and both mixed-shift rules at (j,l,m,n).
VerificationReport verify_beta_identities(unsigned j, unsigned l, unsigned m, unsigned n);
// beta_{k,l} phi psi^{+l} = psi phi^{+k} beta_{k,l} for random phi in B_l, psi in B_k.
VerificationReport verify_beta_exchange(unsigned k, unsigned l, std::uint64_t seed);
VerificationReport verify_beta_exchange(unsigned k, unsigned l, const RingElement& phi,
                                        const RingElement& psi);
// omega_a phi = phi' omega_a for `samples` random phi supported in B_a.
VerificationReport verify_omega_conjugation(unsigned a, std::uint64_t seed, unsigned samples = 1);
VerificationReport verify_omega_conjugation(unsigned a, const RingElement& phi);
// omega_{a+b} = beta_{a,b} omega_a^{+b} omega_b.
VerificationReport verify_omega_recursion(unsigned a, unsigned b);
VerificationReport verify_shuffle_consistency(int m, int n);
// Sh_{m,n} has C(m+n, n) basis braids, each with coefficient 1.
VerificationReport verify_shuffle_support(unsigned m, unsigned n);
VerificationReport verify_shaiden(unsigned k, unsigned m, unsigned n);
// P_{k,n}(x,y) = P_{k,a}(x,y) P_{k+a,n-a}(x,y), formal x, y.
VerificationReport verify_pochhammer_split(unsigned k, unsigned n, unsigned a);
VerificationReport verify_lemma_robrbin(unsigned k, unsigned n,
                                        SummationRange range = SummationRange::Bounded);
VerificationReport verify_cobith(unsigned k, unsigned n, SummationRange range = SummationRange::Bounded);
// variant is "1" (params a,m,n,k), "1bis" (a,m,n) or "2" (e,c,j).
VerificationReport verify_vandermonde(std::string_view variant, const std::vector<int>& params,
                                      SummationRange range = SummationRange::Bounded);
// The 1bis sum reproduces the first shuffle recursion at n = 1 (with m = p)
// and the second one at m = 1 (with n = p).
VerificationReport verify_vandermonde_reductions(unsigned a, unsigned p);
VerificationReport verify_X_recursion(unsigned a, unsigned b, unsigned c);
VerificationReport verify_sytso(unsigned a, unsigned b, unsigned c, unsigned e, unsigned f,
                                SummationRange range = SummationRange::Bounded);
// Bounded and vanishing-convention evaluations of both sides agree.
VerificationReport verify_sytso_ranges(unsigned a, unsigned b, unsigned c, unsigned e, unsigned f);
VerificationReport verify_sytso2(unsigned b, unsigned c, unsigned e, unsigned f);

// Both sides of the block-level Yang-Baxter system at output grades (e, f).
struct SystemSides {
  RingElement lhs;
  RingElement rhs;
};
SystemSides sytso_sides(unsigned a, unsigned b, unsigned c, unsigned e, unsigned f,
                        SummationRange range = SummationRange::Bounded);

// Random element supported in B_strands: `terms` basis words of length up to
// `max_length`, coefficients c*q^d with small integers c, d.
RingElement random_ring_element(std::mt19937_64& rng, unsigned strands, unsigned terms,
                                unsigned max_length);

// Names accepted by sweep().
std::vector<std::string> identity_names();
// Parameter tuples of `name` whose sum is at most `bound` (for the Yang-Baxter
// system the bound applies to the input grades a+b+c, resp. b+c).
std::vector<std::vector<int>> sweep_parameters(std::string_view name, unsigned bound);
VerificationReport run_identity(std::string_view name, const std::vector<int>& params,
                                std::uint64_t seed = 0);
// Runs every tuple, on `jobs` threads; output order is canonical.
std::vector<VerificationReport> sweep(std::string_view name, unsigned bound, unsigned jobs = 1,
                                      std::uint64_t seed = 0);

// One JSON object per line: identity, params, holds, difference, elapsed_ms.
std::string report_record(const VerificationReport& report);

}  // namespace tensorbraid
