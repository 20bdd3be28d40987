#include "posg/spectrum.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace posg {

void OrderSpectrum::add(const BigInt& order, const BigInt& count) {
  if (count == 0) return;
  entries[order] += count;
  total += count;
}

BigInt OrderSpectrum::count_of(const BigInt& order) const {
  auto it = entries.find(order);
  return it == entries.end() ? BigInt(0) : it->second;
}

CycleType CycleType::from_parts(std::span<const std::uint64_t> parts) {
  CycleType ct;
  for (auto part : parts) {
    if (part == 0) throw ParameterError("cycle type parts must be positive");
    ++ct.multiplicities[part];
    ct.n += part;
  }
  return ct;
}

BigInt cycle_type_order(const CycleType& ct) {
  BigInt order = 1;
  for (const auto& [part, mult] : ct.multiplicities) {
    (void)mult;
    order = lcm(order, BigInt(part));
  }
  return order;
}

void for_each_partition(
    std::uint64_t n,
    const std::function<void(std::span<const std::uint64_t>)>& visit,
    std::uint64_t bound) {
  if (n < 1 || n > bound)
    throw BudgetError("partition enumeration supports 1 <= n <= " +
                          std::to_string(bound) + ", got " + std::to_string(n),
                      bound);
  std::vector<std::uint64_t> parts{n};
  for (;;) {
    visit(std::span<const std::uint64_t>(parts));
    // next partition in reverse-lexicographic order: take 1 from the
    // rightmost part >= 2, redistribute it plus the trailing ones greedily
    std::size_t i = parts.size();
    while (i > 0 && parts[i - 1] == 1) --i;
    if (i == 0) return;
    const std::uint64_t v = parts[i - 1] - 1;
    std::uint64_t rem = (parts.size() - i) + parts[i - 1];
    parts.resize(i - 1);
    while (rem >= v) {
      parts.push_back(v);
      rem -= v;
    }
    if (rem > 0) parts.push_back(rem);
  }
}

std::vector<CycleType> partitions_of(std::uint64_t n, std::uint64_t bound) {
  std::vector<CycleType> out;
  for_each_partition(
      n, [&](std::span<const std::uint64_t> parts) {
        out.push_back(CycleType::from_parts(parts));
      },
      bound);
  return out;
}

namespace {

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator,
                      const char* context) {
  BigInt q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0)
    throw std::logic_error(std::string(context) +
                           ": division is not exact (invariant failure)");
  return q;
}

}  // namespace

BigInt cycle_type_count(const CycleType& ct) {
  if (ct.n == 0 || ct.multiplicities.empty())
    throw ParameterError("cycle type must partition a positive integer");
  BigInt denom = 1;
  for (const auto& [part, mult] : ct.multiplicities) {
    denom *= boost::multiprecision::pow(BigInt(part),
                                        static_cast<unsigned>(mult));
    denom *= factorial(mult);
  }
  return exact_quotient(factorial(ct.n), denom, "cycle_type_count");
}

BigInt count_p_products(std::uint64_t n, std::uint64_t p, std::uint64_t j) {
  if (p < 2 || j < 1)
    throw ParameterError("count_p_products needs p >= 2 and j >= 1");
  if (j > n / p)
    throw ParameterError("count_p_products: j*p exceeds n (" +
                         std::to_string(j) + "*" + std::to_string(p) + " > " +
                         std::to_string(n) + ")");
  BigInt denom = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(j));
  denom *= factorial(j);
  denom *= factorial(n - j * p);
  return exact_quotient(factorial(n), denom, "count_p_products");
}

std::uint64_t euler_phi(std::uint64_t m) {
  if (m == 0) throw ParameterError("euler_phi(0) is undefined");
  if (m >> 32) throw ParameterError("euler_phi supports m < 2^32");
  std::uint64_t phi = 1;
  std::uint64_t rest = m;
  for (std::uint64_t q = 2; q * q <= rest; q += (q == 2 ? 1 : 2)) {
    if (rest % q != 0) continue;
    std::uint64_t pk = 1;
    while (rest % q == 0) {
      rest /= q;
      pk *= q;
    }
    phi *= pk - pk / q;
  }
  if (rest > 1) phi *= rest - 1;
  return phi;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t m) {
  if (m == 0) throw ParameterError("divisors_of(0) is undefined");
  if (m >> 32) throw ParameterError("divisors_of supports m < 2^32");
  std::vector<std::uint64_t> divisors{1};
  std::uint64_t rest = m;
  for (std::uint64_t q = 2; q * q <= rest; q += (q == 2 ? 1 : 2)) {
    if (rest % q != 0) continue;
    const std::size_t base = divisors.size();
    std::uint64_t pk = 1;
    while (rest % q == 0) {
      rest /= q;
      pk *= q;
      for (std::size_t i = 0; i < base; ++i)
        divisors.push_back(divisors[i] * pk);
    }
  }
  if (rest > 1) {
    const std::size_t base = divisors.size();
    for (std::size_t i = 0; i < base; ++i)
      divisors.push_back(divisors[i] * rest);
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

OrderSpectrum spectrum_closed_form(const GroupSpec& spec,
                                   std::uint64_t symmetric_bound) {
  spec.validate();
  OrderSpectrum sp;
  switch (spec.family) {
    case Family::Cyclic: {
      for (auto d : divisors_of(spec.a)) sp.add(BigInt(d), BigInt(euler_phi(d)));
      return sp;
    }
    case Family::CyclicPower2Product: {
      const std::uint64_t alpha = spec.a, t = spec.b;
      sp.add(1, 1);
      for (std::uint64_t k = 1; k <= alpha; ++k)
        sp.add(pow2(k), pow2(k * t) - pow2((k - 1) * t));
      return sp;
    }
    case Family::Dihedral: {
      const std::uint64_t n = spec.a;
      sp.add(1, 1);
      for (auto d : divisors_of(n))
        if (d > 1) sp.add(BigInt(d), BigInt(euler_phi(d)));
      sp.add(2, BigInt(n));  // the n reflections a^i b
      return sp;
    }
    case Family::GeneralizedQuaternion: {
      const std::uint64_t n = spec.a;
      sp.add(1, 1);
      for (std::uint64_t k = 1; k <= n - 1; ++k)
        sp.add(pow2(k), pow2(k - 1));  // phi(2^k) inside <a>
      sp.add(4, pow2(n - 1));          // the flip elements a^i b
      return sp;
    }
    case Family::Symmetric: {
      if (spec.a > symmetric_bound)
        throw BudgetError(
            "closed-form symmetric spectrum supports n <= " +
                std::to_string(symmetric_bound) + ", got " +
                std::to_string(spec.a),
            symmetric_bound);
      const BigInt nfact = factorial(spec.a);
      for_each_partition(
          spec.a,
          [&](std::span<const std::uint64_t> parts) {
            BigInt order = 1;
            BigInt denom = 1;
            std::size_t i = 0;
            while (i < parts.size()) {
              std::size_t j = i;
              while (j < parts.size() && parts[j] == parts[i]) ++j;
              const std::uint64_t part = parts[i];
              const std::uint64_t mult = j - i;
              order = lcm(order, BigInt(part));
              denom *= boost::multiprecision::pow(BigInt(part),
                                                  static_cast<unsigned>(mult));
              denom *= factorial(mult);
              i = j;
            }
            sp.add(order, exact_quotient(nfact, denom, "symmetric spectrum"));
          },
          std::max(symmetric_bound, kDefaultPartitionBound));
      return sp;
    }
  }
  throw ParameterError("unknown group family");
}

// ---------------------------------------------------------------------------
// Brute force
// ---------------------------------------------------------------------------

namespace {

using Tally = std::unordered_map<std::uint64_t, std::uint64_t>;

// Orders of elements in an enumerable group fit in 64 bits: they divide the
// group order, which the budget keeps below 2^64.
std::uint64_t rotation_order(std::uint64_t modulus, std::uint64_t value) {
  return modulus / std::gcd(modulus, value);
}

void tally_symmetric_range(std::uint64_t n, std::uint64_t lo, std::uint64_t hi,
                           Tally& tally) {
  // materialize the lo-th permutation, then walk lexicographically
  ElementEnumeration en(GroupSpec::symmetric(n),
                        std::numeric_limits<std::uint64_t>::max());
  const GroupElement start = en.at(lo);
  const auto& images = start.as_symmetric().images;
  std::vector<std::uint8_t> perm(images.begin(), images.end());
  std::vector<std::uint8_t> seen(n);
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint64_t order = 1;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      if (seen[k]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = k; !seen[j]; j = perm[j]) {
        seen[j] = 1;
        ++len;
      }
      order = std::lcm(order, len);
    }
    ++tally[order];
    std::next_permutation(perm.begin(), perm.end());
  }
}

void tally_range(const GroupSpec& spec, std::uint64_t lo, std::uint64_t hi,
                 Tally& tally) {
  switch (spec.family) {
    case Family::Symmetric:
      tally_symmetric_range(spec.a, lo, hi, tally);
      return;
    case Family::Cyclic:
      for (std::uint64_t i = lo; i < hi; ++i)
        ++tally[rotation_order(spec.a, i)];
      return;
    case Family::CyclicPower2Product: {
      const std::uint64_t alpha = spec.a, t = spec.b;
      const std::uint64_t mask = (std::uint64_t{1} << alpha) - 1;
      const std::uint64_t mod = std::uint64_t{1} << alpha;
      for (std::uint64_t i = lo; i < hi; ++i) {
        std::uint64_t order = 1;
        std::uint64_t rem = i;
        for (std::uint64_t c = 0; c < t; ++c) {
          order = std::max(order, rotation_order(mod, rem & mask));
          rem >>= alpha;
        }
        ++tally[order];
      }
      return;
    }
    case Family::Dihedral: {
      const std::uint64_t n = spec.a;
      for (std::uint64_t i = lo; i < hi; ++i)
        ++tally[i < n ? rotation_order(n, i) : 2];
      return;
    }
    case Family::GeneralizedQuaternion: {
      const std::uint64_t half = std::uint64_t{1} << (spec.a - 1);
      for (std::uint64_t i = lo; i < hi; ++i)
        ++tally[i < half ? rotation_order(half, i) : 4];
      return;
    }
  }
  throw ParameterError("unknown group family");
}

}  // namespace

OrderSpectrum spectrum_bruteforce(const GroupSpec& spec, std::uint64_t budget,
                                  unsigned threads) {
  ElementEnumeration en(spec, budget);  // validates spec and budget
  const std::uint64_t size = en.size();

  unsigned workers = std::max(1u, threads);
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(size, 1)));

  std::vector<Tally> tallies(workers);
  if (workers == 1) {
    tally_range(spec, 0, size, tallies[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = size / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = (w + 1 == workers) ? size : lo + chunk;
      pool.emplace_back(
          [&, lo, hi, w] { tally_range(spec, lo, hi, tallies[w]); });
    }
    for (auto& th : pool) th.join();
  }

  OrderSpectrum sp;
  for (const auto& tally : tallies)
    for (const auto& [order, count] : tally)
      sp.add(BigInt(order), BigInt(count));
  return sp;
}

}  // namespace posg
