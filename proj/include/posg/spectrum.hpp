#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "posg/bigint.hpp"
#include "posg/errors.hpp"
#include "posg/groups.hpp"

namespace posg {

/// Exact map from element order to the size of that order subset.
/// Orders with zero count are never stored; entry 1 -> 1 always exists for a
/// valid spectrum and the counts sum to the group order.
struct OrderSpectrum {
  std::map<BigInt, BigInt> entries;  // ascending by order
  BigInt total = 0;

  void add(const BigInt& order, const BigInt& count);
  BigInt count_of(const BigInt& order) const;  // 0 when absent

  bool operator==(const OrderSpectrum&) const = default;
};

/// Cycle type of a permutation in S_n: part size -> multiplicity.
struct CycleType {
  std::map<std::uint64_t, std::uint64_t> multiplicities;
  std::uint64_t n = 0;

  static CycleType from_parts(std::span<const std::uint64_t> parts);
};

/// lcm of the part sizes; the order of any permutation with this type.
BigInt cycle_type_order(const CycleType& ct);

inline constexpr std::uint64_t kDefaultPartitionBound = 128;
// p(90) = 56,634,173 partitions is the practical ceiling for a full
// symmetric-group spectrum sweep; larger n only ever need single types.
inline constexpr std::uint64_t kDefaultSymmetricSpectrumBound = 90;

/// Visits every integer partition of n exactly once, in reverse-lexicographic
/// order ((n), (n-1,1), ..., (1^n)), as a descending span of parts.
void for_each_partition(std::uint64_t n,
                        const std::function<void(std::span<const std::uint64_t>)>& visit,
                        std::uint64_t bound = kDefaultPartitionBound);

/// Materialized partition list. Count equals the partition function p(n);
/// callers are responsible for the memory that implies at large n.
std::vector<CycleType> partitions_of(std::uint64_t n,
                                     std::uint64_t bound = kDefaultPartitionBound);

/// Number of permutations in S_n with exactly this cycle type:
/// n! / prod_k (k^m_k * m_k!). The division is exact by construction; a
/// nonzero remainder is an internal invariant failure.
BigInt cycle_type_count(const CycleType& ct);

/// Count of permutations in S_n that are products of exactly j disjoint
/// p-cycles (all other points fixed): n! / (p^j * j! * (n-jp)!).
BigInt count_p_products(std::uint64_t n, std::uint64_t p, std::uint64_t j);

/// Euler totient by trial-division factorization. Supported for m < 2^32.
std::uint64_t euler_phi(std::uint64_t m);

/// Divisors of m in ascending order (trial-division factorization, m < 2^32).
std::vector<std::uint64_t> divisors_of(std::uint64_t m);

/// Spectrum from the per-family closed forms:
///   Cyclic(m):              count(d) = phi(d) for each d | m
///   CyclicPower2Product:    count(2^k) = 2^(kt) - 2^((k-1)t), 1 <= k <= alpha
///   Dihedral(n):            phi(d) for d | n, d > 1, plus n reflections on 2
///   GeneralizedQuaternion:  phi(d) for d | 2^(n-1), plus 2^(n-1) on 4
///   Symmetric(n):           cycle_type_count aggregated by lcm over all
///                           partitions of n
OrderSpectrum spectrum_closed_form(
    const GroupSpec& spec,
    std::uint64_t symmetric_bound = kDefaultSymmetricSpectrumBound);

/// Spectrum by enumerating every element and tallying element orders.
/// Independent of the closed forms; the central oracle for them. The index
/// range may be split across threads; the merged result is deterministic.
OrderSpectrum spectrum_bruteforce(const GroupSpec& spec,
                                  std::uint64_t budget = kDefaultEnumerationBudget,
                                  unsigned threads = 1);

}  // namespace posg
