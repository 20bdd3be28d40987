#include "posg/groups.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace posg {

namespace {

constexpr std::uint64_t kMaxSymmetricN = 100'000;
constexpr std::uint64_t kMaxFactorBase = std::uint64_t{1} << 32;
constexpr std::uint64_t kMaxPower2Exponent = 4096;

// Largest n with n! representable in uint64; enumeration indices live there.
constexpr std::uint64_t kMaxIndexableFactorial = 20;

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  return x * y;  // callers guarantee the product fits
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Symmetric: return "symmetric";
    case Family::Cyclic: return "cyclic";
    case Family::CyclicPower2Product: return "z2power";
    case Family::Dihedral: return "dihedral";
    case Family::GeneralizedQuaternion: return "quaternion";
  }
  return "?";
}

GroupSpec GroupSpec::symmetric(std::uint64_t n) {
  GroupSpec s{Family::Symmetric, n, 0};
  s.validate();
  return s;
}

GroupSpec GroupSpec::cyclic(std::uint64_t m) {
  GroupSpec s{Family::Cyclic, m, 0};
  s.validate();
  return s;
}

GroupSpec GroupSpec::cyclic_power2_product(std::uint64_t alpha,
                                           std::uint64_t t) {
  GroupSpec s{Family::CyclicPower2Product, alpha, t};
  s.validate();
  return s;
}

GroupSpec GroupSpec::dihedral(std::uint64_t n) {
  GroupSpec s{Family::Dihedral, n, 0};
  s.validate();
  return s;
}

GroupSpec GroupSpec::generalized_quaternion(std::uint64_t n) {
  GroupSpec s{Family::GeneralizedQuaternion, n, 0};
  s.validate();
  return s;
}

void GroupSpec::validate() const {
  switch (family) {
    case Family::Symmetric:
      if (a < 1 || a > kMaxSymmetricN)
        throw ParameterError("symmetric group degree must be in [1, " +
                             std::to_string(kMaxSymmetricN) + "], got " +
                             std::to_string(a));
      return;
    case Family::Cyclic:
      if (a < 1 || a > kMaxFactorBase)
        throw ParameterError("cyclic modulus must be in [1, 2^32], got " +
                             std::to_string(a));
      return;
    case Family::CyclicPower2Product:
      if (a < 1 || b < 1)
        throw ParameterError("z2power requires alpha >= 1 and t >= 1");
      if (a > kMaxPower2Exponent / b)
        throw ParameterError("z2power requires alpha*t <= " +
                             std::to_string(kMaxPower2Exponent));
      return;
    case Family::Dihedral:
      if (a < 2 || a > kMaxFactorBase)
        throw ParameterError("dihedral parameter must be in [2, 2^32], got " +
                             std::to_string(a));
      return;
    case Family::GeneralizedQuaternion:
      if (a < 3 || a > kMaxPower2Exponent)
        throw ParameterError("quaternion parameter must be in [3, " +
                             std::to_string(kMaxPower2Exponent) + "], got " +
                             std::to_string(a));
      return;
  }
  throw ParameterError("unknown group family");
}

std::string GroupSpec::describe() const {
  switch (family) {
    case Family::Symmetric: return "symmetric(n=" + std::to_string(a) + ")";
    case Family::Cyclic: return "cyclic(m=" + std::to_string(a) + ")";
    case Family::CyclicPower2Product:
      return "z2power(alpha=" + std::to_string(a) + ", t=" + std::to_string(b) +
             ")";
    case Family::Dihedral: return "dihedral(n=" + std::to_string(a) + ")";
    case Family::GeneralizedQuaternion:
      return "quaternion(n=" + std::to_string(a) + ")";
  }
  return "?";
}

BigInt group_order(const GroupSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::Symmetric: return factorial(spec.a);
    case Family::Cyclic: return BigInt(spec.a);
    case Family::CyclicPower2Product: return pow2(spec.a * spec.b);
    case Family::Dihedral: return BigInt(2) * spec.a;
    case Family::GeneralizedQuaternion: return pow2(spec.a);
  }
  throw ParameterError("unknown group family");
}

// ---------------------------------------------------------------------------
// GroupElement
// ---------------------------------------------------------------------------

GroupElement GroupElement::identity(const GroupSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::Symmetric: {
      std::vector<std::uint32_t> images(spec.a);
      std::iota(images.begin(), images.end(), 0u);
      return permutation(std::move(images));
    }
    case Family::Cyclic:
      return cyclic(0, spec.a);
    case Family::CyclicPower2Product:
      return power2_tuple(std::vector<std::uint64_t>(spec.b, 0), spec.a);
    case Family::Dihedral:
      return dihedral(0, false, spec.a);
    case Family::GeneralizedQuaternion:
      return quaternion(0, false, spec.a);
  }
  throw ParameterError("unknown group family");
}

GroupElement GroupElement::permutation(std::vector<std::uint32_t> images) {
  const std::size_t n = images.size();
  if (n == 0) throw ParameterError("permutation must act on at least 0..0");
  std::vector<bool> seen(n, false);
  for (auto v : images) {
    if (v >= n || seen[v])
      throw ParameterError("image sequence is not a permutation of 0.." +
                           std::to_string(n - 1));
    seen[v] = true;
  }
  return GroupElement(detail::SymmetricElement{std::move(images)});
}

GroupElement GroupElement::cyclic(std::uint64_t value, std::uint64_t modulus) {
  if (modulus == 0) throw ParameterError("cyclic modulus must be positive");
  return GroupElement(detail::CyclicElement{value % modulus, modulus});
}

GroupElement GroupElement::power2_tuple(std::vector<std::uint64_t> residues,
                                        std::uint64_t alpha) {
  if (alpha < 1 || alpha > 63)
    throw ParameterError("tuple elements support alpha in [1, 63]");
  if (residues.empty()) throw ParameterError("tuple needs t >= 1 components");
  const std::uint64_t mask = (std::uint64_t{1} << alpha) - 1;
  for (auto& r : residues) r &= mask;
  return GroupElement(detail::Power2TupleElement{std::move(residues), alpha});
}

GroupElement GroupElement::dihedral(std::uint64_t rotation, bool flip,
                                    std::uint64_t n) {
  if (n < 2) throw ParameterError("dihedral elements need n >= 2");
  return GroupElement(detail::DihedralElement{rotation % n, flip, n});
}

GroupElement GroupElement::quaternion(std::uint64_t rotation, bool flip,
                                      std::uint64_t n) {
  if (n < 3 || n > 64)
    throw ParameterError("quaternion elements support n in [3, 64]");
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  return GroupElement(detail::QuaternionElement{rotation % half, flip, n});
}

Family GroupElement::family() const {
  switch (rep_.index()) {
    case 0: return Family::Symmetric;
    case 1: return Family::Cyclic;
    case 2: return Family::CyclicPower2Product;
    case 3: return Family::Dihedral;
    default: return Family::GeneralizedQuaternion;
  }
}

bool GroupElement::is_identity() const {
  return std::visit(
      [](const auto& e) -> bool {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, detail::SymmetricElement>) {
          for (std::uint32_t k = 0; k < e.images.size(); ++k)
            if (e.images[k] != k) return false;
          return true;
        } else if constexpr (std::is_same_v<T, detail::CyclicElement>) {
          return e.value == 0;
        } else if constexpr (std::is_same_v<T, detail::Power2TupleElement>) {
          return std::all_of(e.residues.begin(), e.residues.end(),
                             [](std::uint64_t r) { return r == 0; });
        } else {
          return e.rotation == 0 && !e.flip;
        }
      },
      rep_);
}

const detail::SymmetricElement& GroupElement::as_symmetric() const {
  return std::get<detail::SymmetricElement>(rep_);
}
const detail::CyclicElement& GroupElement::as_cyclic() const {
  return std::get<detail::CyclicElement>(rep_);
}
const detail::Power2TupleElement& GroupElement::as_power2_tuple() const {
  return std::get<detail::Power2TupleElement>(rep_);
}
const detail::DihedralElement& GroupElement::as_dihedral() const {
  return std::get<detail::DihedralElement>(rep_);
}
const detail::QuaternionElement& GroupElement::as_quaternion() const {
  return std::get<detail::QuaternionElement>(rep_);
}

namespace {

[[noreturn]] void incompatible(const char* what) {
  throw IncompatibleElementsError(std::string("incompatible elements: ") +
                                  what);
}

}  // namespace

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  if (x.rep_.index() != y.rep_.index()) incompatible("different families");

  using namespace detail;
  return std::visit(
      [&](const auto& a) -> GroupElement {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(y.rep_);
        if constexpr (std::is_same_v<T, SymmetricElement>) {
          if (a.images.size() != b.images.size())
            incompatible("permutations of different degree");
          std::vector<std::uint32_t> out(a.images.size());
          // (f*g)(k) = f(g(k))
          for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = a.images[b.images[k]];
          return GroupElement(SymmetricElement{std::move(out)});
        } else if constexpr (std::is_same_v<T, CyclicElement>) {
          if (a.modulus != b.modulus) incompatible("different cyclic moduli");
          std::uint64_t s = a.value + b.value;
          if (s >= a.modulus) s -= a.modulus;
          return GroupElement(CyclicElement{s, a.modulus});
        } else if constexpr (std::is_same_v<T, Power2TupleElement>) {
          if (a.alpha != b.alpha || a.residues.size() != b.residues.size())
            incompatible("different tuple parameters");
          const std::uint64_t mask = (std::uint64_t{1} << a.alpha) - 1;
          std::vector<std::uint64_t> out(a.residues.size());
          for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = (a.residues[k] + b.residues[k]) & mask;
          return GroupElement(Power2TupleElement{std::move(out), a.alpha});
        } else if constexpr (std::is_same_v<T, DihedralElement>) {
          if (a.n != b.n) incompatible("different dihedral parameters");
          const std::uint64_t n = a.n;
          if (!a.flip)
            return GroupElement(
                DihedralElement{(a.rotation + b.rotation) % n, b.flip, n});
          // (i,1)(j,d) = (i-j mod n, 1 xor d) since b a^j = a^-j b
          std::uint64_t rot = (a.rotation + n - b.rotation) % n;
          return GroupElement(DihedralElement{rot, !b.flip, n});
        } else {
          if (a.n != b.n) incompatible("different quaternion parameters");
          const std::uint64_t half = std::uint64_t{1} << (a.n - 1);
          const std::uint64_t quarter = half >> 1;
          if (!a.flip)
            return GroupElement(QuaternionElement{
                (a.rotation + b.rotation) % half, b.flip, a.n});
          std::uint64_t rot = (a.rotation + half - b.rotation) % half;
          if (!b.flip)
            return GroupElement(QuaternionElement{rot, true, a.n});
          // (i,1)(j,1) = a^(i-j) b^2 = a^(i-j+2^(n-2))
          return GroupElement(
              QuaternionElement{(rot + quarter) % half, false, a.n});
        }
      },
      x.rep_);
}

BigInt element_order(const GroupElement& x) {
  using namespace detail;
  return std::visit(
      [](const auto& e) -> BigInt {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, SymmetricElement>) {
          // lcm of cycle lengths
          const std::size_t n = e.images.size();
          std::vector<bool> seen(n, false);
          BigInt order = 1;
          for (std::size_t k = 0; k < n; ++k) {
            if (seen[k]) continue;
            std::uint64_t len = 0;
            for (std::size_t j = k; !seen[j]; j = e.images[j]) {
              seen[j] = true;
              ++len;
            }
            order = lcm(order, BigInt(len));
          }
          return order;
        } else if constexpr (std::is_same_v<T, CyclicElement>) {
          return BigInt(e.modulus / std::gcd(e.modulus, e.value));
        } else if constexpr (std::is_same_v<T, Power2TupleElement>) {
          // all component orders are powers of two, so lcm = max
          std::uint64_t best = 1;
          const std::uint64_t mod = std::uint64_t{1} << e.alpha;
          for (auto r : e.residues)
            best = std::max(best, mod / std::gcd(mod, r));
          return BigInt(best);
        } else if constexpr (std::is_same_v<T, DihedralElement>) {
          if (e.flip) return BigInt(2);
          return BigInt(e.n / std::gcd(e.n, e.rotation));
        } else {
          if (e.flip) return BigInt(4);
          const std::uint64_t half = std::uint64_t{1} << (e.n - 1);
          return BigInt(half / std::gcd(half, e.rotation));
        }
      },
      x.rep_);
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

ElementEnumeration::ElementEnumeration(GroupSpec spec, std::uint64_t budget)
    : spec_(std::move(spec)) {
  spec_.validate();
  const BigInt order = group_order(spec_);
  if (order > budget)
    throw BudgetError("enumeration of " + spec_.describe() + " (order " +
                          order.str() + ") exceeds the budget of " +
                          std::to_string(budget) + " elements",
                      budget);
  size_ = order.convert_to<std::uint64_t>();
}

GroupElement ElementEnumeration::at(std::uint64_t index) const {
  if (index >= size_)
    throw ParameterError("enumeration index " + std::to_string(index) +
                         " out of range for " + spec_.describe());
  switch (spec_.family) {
    case Family::Symmetric: {
      // Lehmer decode: lexicographically index-th image sequence.
      const std::uint64_t n = spec_.a;
      std::array<std::uint64_t, kMaxIndexableFactorial + 1> fact{};
      fact[0] = 1;
      for (std::uint64_t k = 1; k <= n; ++k)
        fact[k] = checked_mul(fact[k - 1], k);
      std::vector<std::uint32_t> pool(n);
      std::iota(pool.begin(), pool.end(), 0u);
      std::vector<std::uint32_t> images;
      images.reserve(n);
      std::uint64_t rem = index;
      for (std::uint64_t k = n; k > 0; --k) {
        const std::uint64_t block = fact[k - 1];
        const std::uint64_t digit = rem / block;
        rem %= block;
        images.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
      }
      return GroupElement::permutation(std::move(images));
    }
    case Family::Cyclic:
      return GroupElement::cyclic(index, spec_.a);
    case Family::CyclicPower2Product: {
      std::vector<std::uint64_t> residues(spec_.b);
      const std::uint64_t mask = (std::uint64_t{1} << spec_.a) - 1;
      std::uint64_t rem = index;
      for (std::size_t j = 0; j < residues.size(); ++j) {
        residues[j] = rem & mask;
        rem >>= spec_.a;
      }
      return GroupElement::power2_tuple(std::move(residues), spec_.a);
    }
    case Family::Dihedral: {
      const std::uint64_t n = spec_.a;
      return index < n ? GroupElement::dihedral(index, false, n)
                       : GroupElement::dihedral(index - n, true, n);
    }
    case Family::GeneralizedQuaternion: {
      const std::uint64_t half = std::uint64_t{1} << (spec_.a - 1);
      return index < half
                 ? GroupElement::quaternion(index, false, spec_.a)
                 : GroupElement::quaternion(index - half, true, spec_.a);
    }
  }
  throw ParameterError("unknown group family");
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec,
                                             std::uint64_t budget) {
  ElementEnumeration en(spec, budget);
  std::vector<GroupElement> out;
  out.reserve(en.size());
  for (std::uint64_t i = 0; i < en.size(); ++i) out.push_back(en.at(i));
  return out;
}

}  // namespace posg
