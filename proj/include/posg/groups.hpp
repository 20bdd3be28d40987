#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "posg/bigint.hpp"
#include "posg/errors.hpp"

namespace posg {

enum class Family {
  Symmetric,             // S_n, order n!
  Cyclic,                // Z_m, order m
  CyclicPower2Product,   // (Z_{2^alpha})^t, order 2^(alpha*t)
  Dihedral,              // D_{2n}, order 2n
  GeneralizedQuaternion  // Q_n, order 2^n
};

std::string family_name(Family f);

/// Parametric description of one finite group from a supported family.
///
/// Supported parameter domains (trial-division factorization and element
/// indexing set the upper bounds):
///   Symmetric:            1 <= n <= 100000
///   Cyclic:               1 <= m <= 2^32
///   CyclicPower2Product:  alpha >= 1, t >= 1, alpha*t <= 4096
///   Dihedral:             2 <= n <= 2^32
///   GeneralizedQuaternion: 3 <= n <= 4096
struct GroupSpec {
  Family family = Family::Cyclic;
  std::uint64_t a = 1;  // n, m, or alpha
  std::uint64_t b = 0;  // t (CyclicPower2Product only)

  static GroupSpec symmetric(std::uint64_t n);
  static GroupSpec cyclic(std::uint64_t m);
  static GroupSpec cyclic_power2_product(std::uint64_t alpha, std::uint64_t t);
  static GroupSpec dihedral(std::uint64_t n);
  static GroupSpec generalized_quaternion(std::uint64_t n);

  /// Throws ParameterError unless the parameters are in-domain.
  void validate() const;

  std::string describe() const;

  bool operator==(const GroupSpec&) const = default;
};

BigInt group_order(const GroupSpec& spec);

namespace detail {

struct SymmetricElement {
  std::vector<std::uint32_t> images;  // k -> images[k], a bijection on 0..n-1
  bool operator==(const SymmetricElement&) const = default;
};

struct CyclicElement {
  std::uint64_t value = 0;
  std::uint64_t modulus = 1;
  bool operator==(const CyclicElement&) const = default;
};

struct Power2TupleElement {
  std::vector<std::uint64_t> residues;  // each in [0, 2^alpha)
  std::uint64_t alpha = 1;
  bool operator==(const Power2TupleElement&) const = default;
};

// a^rotation b^flip with b a^i b^-1 = a^-i
struct DihedralElement {
  std::uint64_t rotation = 0;
  bool flip = false;
  std::uint64_t n = 2;
  bool operator==(const DihedralElement&) const = default;
};

// a^rotation b^flip with a^(2^(n-1)) = 1, b^2 = a^(2^(n-2))
struct QuaternionElement {
  std::uint64_t rotation = 0;
  bool flip = false;
  std::uint64_t n = 3;
  bool operator==(const QuaternionElement&) const = default;
};

}  // namespace detail

/// A group element in family-specific normal form. Normal forms are unique,
/// so operator== is group-element equality.
class GroupElement {
 public:
  static GroupElement identity(const GroupSpec& spec);

  /// Symmetric: permutation given by its image sequence on {0..n-1}.
  static GroupElement permutation(std::vector<std::uint32_t> images);
  static GroupElement cyclic(std::uint64_t value, std::uint64_t modulus);
  static GroupElement power2_tuple(std::vector<std::uint64_t> residues,
                                   std::uint64_t alpha);
  static GroupElement dihedral(std::uint64_t rotation, bool flip,
                               std::uint64_t n);
  static GroupElement quaternion(std::uint64_t rotation, bool flip,
                                 std::uint64_t n);

  Family family() const;
  bool is_identity() const;

  const detail::SymmetricElement& as_symmetric() const;
  const detail::CyclicElement& as_cyclic() const;
  const detail::Power2TupleElement& as_power2_tuple() const;
  const detail::DihedralElement& as_dihedral() const;
  const detail::QuaternionElement& as_quaternion() const;

  bool operator==(const GroupElement&) const = default;

  friend GroupElement multiply(const GroupElement& x, const GroupElement& y);
  friend BigInt element_order(const GroupElement& x);

 private:
  using Rep = std::variant<detail::SymmetricElement, detail::CyclicElement,
                           detail::Power2TupleElement, detail::DihedralElement,
                           detail::QuaternionElement>;
  explicit GroupElement(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

/// Group product of two normal forms; the result is again a normal form.
/// Permutations compose as (f*g)(k) = f(g(k)), i.e. g acts first.
/// Throws IncompatibleElementsError on family or parameter mismatch.
GroupElement multiply(const GroupElement& x, const GroupElement& y);

/// Least k >= 1 with x^k = identity.
BigInt element_order(const GroupElement& x);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Restartable indexed view of a group's elements: index i in [0, size())
/// maps to a fixed element, so callers may partition index ranges across
/// workers. Symmetric groups enumerate in lexicographic image order; the
/// two-part families list rotations first, then flip elements.
class ElementEnumeration {
 public:
  explicit ElementEnumeration(GroupSpec spec,
                              std::uint64_t budget = kDefaultEnumerationBudget);

  std::uint64_t size() const { return size_; }
  const GroupSpec& spec() const { return spec_; }

  GroupElement at(std::uint64_t index) const;

 private:
  GroupSpec spec_;
  std::uint64_t size_ = 0;
};

/// Materialized element list, each element exactly once.
std::vector<GroupElement> enumerate_elements(
    const GroupSpec& spec, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace posg
