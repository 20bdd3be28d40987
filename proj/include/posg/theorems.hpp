#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posg/bigint.hpp"
#include "posg/poscheck.hpp"
#include "posg/spectrum.hpp"

namespace posg {

bool is_prime(std::uint64_t n);

/// Smallest prime p with lo < p < hi (open interval), or nullopt.
std::optional<std::uint64_t> find_prime_in_interval(std::uint64_t lo,
                                                    std::uint64_t hi);

/// (m-1)! mod m for any m in [2, 2^32), by modular reduction at each step.
std::uint64_t wilson_residue(std::uint64_t m);

/// Wilson residue of a prime; the result is always p-1. Composite input is a
/// domain error.
std::uint64_t wilson_check(std::uint64_t p);

enum class LemmaId { Lemma31, Lemma32, Lemma33 };

std::string lemma_name(LemmaId id);

/// Everything one lemma instance computes: the exact counts of order-p
/// elements of S_n, the auxiliary products, every congruence, gcd and
/// inequality of the proof, the algebraic identities behind its
/// fraction manipulations, and the final divisibility outcome.
struct LemmaReport {
  LemmaId lemma = LemmaId::Lemma31;
  std::uint64_t p = 0;
  std::uint64_t r = 0;  // 0 for Lemma 3.3
  std::uint64_t n = 0;  // 2p+r, 3p+r, or 4p

  std::vector<BigInt> term_counts;  // per number of disjoint p-cycles
  BigInt d = 0;                     // total count of order-p elements
  BigInt a = 0;                     // the lemma's product A
  BigInt m = 0;                     // Lemma 3.3's M; 0 otherwise

  /// equation label -> residue mod p, e.g. "eq2" -> 1
  std::map<std::string, std::uint64_t> residue_checks;
  bool residues_as_claimed = false;

  BigInt gcd_value = 0;
  bool gcd_claim_holds = false;

  bool inequality_holds = false;
  bool identities_hold = false;

  /// The fraction the POS assumption would force to be an integer
  /// (4r!/(2+A), B, or C). Non-integrality is the contradiction.
  BigInt contradiction_numerator = 0;
  BigInt contradiction_denominator = 0;
  bool contradiction_integral = false;

  bool divides = false;        // d | n!
  bool known_anomaly = false;  // Lemma 3.1 at (p, r) = (3, 0)

  /// Whether this instance behaves exactly as the proof claims; for the
  /// (3, 0) anomaly that means the documented exceptional signature.
  bool claims_hold() const;
};

/// n = 2p + r: order-p elements are single p-cycles or two disjoint p-cycles.
LemmaReport verify_lemma_3_1(std::uint64_t p, std::uint64_t r);

/// n = 3p + r: one, two or three disjoint p-cycles.
LemmaReport verify_lemma_3_2(std::uint64_t p, std::uint64_t r);

/// n = 4p: one to four disjoint p-cycles.
LemmaReport verify_lemma_3_3(std::uint64_t p);

/// Which lemma covers S_n for n >= 8, via a prime from Bertrand's interval.
struct CaseAssignment {
  std::uint64_t n = 0;
  std::uint64_t m = 0;  // floor(n/4)
  std::uint64_t p = 0;  // smallest prime in (m, 2m)
  std::uint64_t r = 0;
  LemmaId lemma = LemmaId::Lemma31;
};

CaseAssignment assign_case(std::uint64_t n);

/// Evidence that S_n (n >= 4) is not a POS-group: a direct spectrum witness
/// for n in {4, 5}, Lemma 3.1 at (3, 0)/(3, 1) for n in {6, 7} (with the
/// spectrum fallback at n = 6 where the lemma's contradiction fails), and the
/// assigned lemma for n >= 8.
struct TheoremEvidence {
  std::uint64_t n = 0;
  bool non_pos = false;
  std::optional<CaseAssignment> assignment;
  std::optional<LemmaReport> report;
  std::optional<std::pair<BigInt, BigInt>> spectrum_witness;  // (order, count)
  bool anomaly_fallback = false;  // n = 6 took the spectrum route
};

TheoremEvidence verify_theorem_3_1(std::uint64_t n);

struct Prop21Evidence {
  std::uint64_t alpha = 0;
  std::uint64_t t = 0;
  BigInt count_max_order = 0;  // spectrum count at order 2^alpha
  BigInt formula = 0;          // 2^((alpha-1)t) * (2^t - 1)
  bool formula_matches = false;
  bool count_divides_order = true;  // expected false
  bool pos = true;                  // expected false
  bool brute_checked = false;
  bool brute_matches = false;

  bool claims_hold() const {
    return formula_matches && !count_divides_order && !pos &&
           (!brute_checked || brute_matches);
  }
};

/// (Z_{2^alpha})^t with t >= 2 is not POS: the maximal-order count carries
/// the odd factor 2^t - 1.
Prop21Evidence verify_prop_2_1(std::uint64_t alpha, std::uint64_t t,
                               std::uint64_t budget = kDefaultEnumerationBudget);

struct DihedralTheoremSummary {
  std::uint64_t n_max = 0;
  std::vector<std::uint64_t> pos_values;        // n with a POS verdict
  std::vector<std::uint64_t> counterexamples;   // verdict != power-of-3 rule
};

/// D_2n is POS exactly when n = 3^alpha: checks the rule against the
/// spectrum verdict for every n in [2, n_max].
DihedralTheoremSummary verify_dihedral_theorem(std::uint64_t n_max);

struct QuaternionCase {
  std::uint64_t n = 0;
  BigInt count_order4 = 0;
  BigInt formula = 0;  // 2^(n-1) + 2
  bool formula_matches = false;
  bool pos = true;  // expected false
};

struct QuaternionSummary {
  std::vector<QuaternionCase> cases;
  std::vector<std::uint64_t> mismatches;
};

/// Q_n (3 <= n) is never POS: 2^(n-1) flip elements plus the two order-4
/// rotations never divide 2^n.
QuaternionSummary verify_quaternion(std::uint64_t n_lo, std::uint64_t n_hi);

}  // namespace posg
