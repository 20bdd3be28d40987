#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "posg/bigint.hpp"
#include "posg/spectrum.hpp"

namespace posg {

/// POS decision: a group has perfect order subsets iff every order-subset
/// size divides the group order.
struct PosVerdict {
  bool is_pos = false;
  /// (order d, count c) with c not dividing the group order, ascending in d.
  std::vector<std::pair<BigInt, BigInt>> violations;
  BigInt group_order = 0;
};

/// Verdict straight from an already-computed spectrum.
PosVerdict verdict_from_spectrum(const OrderSpectrum& spectrum);

/// Decide POS for a group. Uses the closed-form spectrum when available and
/// falls back to brute-force enumeration otherwise (symmetric groups past the
/// partition bound). With cross_check set, both spectra are computed and any
/// disagreement is an invariant failure.
PosVerdict check_pos(const GroupSpec& spec, bool cross_check = false,
                     std::uint64_t budget = kDefaultEnumerationBudget);

struct DihedralClassification {
  std::uint64_t n = 0;
  PosVerdict verdict;
  bool predicted_pos = false;  // n = 3^alpha with alpha >= 1
};

/// Verdict for D_2n plus the prediction of the power-of-three rule, so
/// callers can compare the two.
DihedralClassification classify_dihedral(std::uint64_t n);

bool is_power_of_three(std::uint64_t n);

}  // namespace posg
