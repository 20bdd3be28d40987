#include "posg/poscheck.hpp"

#include <stdexcept>

namespace posg {

PosVerdict verdict_from_spectrum(const OrderSpectrum& spectrum) {
  PosVerdict v;
  v.group_order = spectrum.total;
  for (const auto& [order, count] : spectrum.entries)
    if (v.group_order % count != 0) v.violations.emplace_back(order, count);
  v.is_pos = v.violations.empty();
  return v;
}

PosVerdict check_pos(const GroupSpec& spec, bool cross_check,
                     std::uint64_t budget) {
  spec.validate();
  const bool closed_feasible = spec.family != Family::Symmetric ||
                               spec.a <= kDefaultSymmetricSpectrumBound;
  if (!closed_feasible) return verdict_from_spectrum(spectrum_bruteforce(spec, budget));

  OrderSpectrum sp = spectrum_closed_form(spec);
  if (cross_check && group_order(spec) <= budget) {
    if (spectrum_bruteforce(spec, budget) != sp)
      throw std::logic_error("spectrum cross-check failed for " +
                             spec.describe());
  }
  return verdict_from_spectrum(sp);
}

bool is_power_of_three(std::uint64_t n) {
  if (n < 3) return false;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

DihedralClassification classify_dihedral(std::uint64_t n) {
  DihedralClassification c;
  c.n = n;
  c.verdict =
      verdict_from_spectrum(spectrum_closed_form(GroupSpec::dihedral(n)));
  c.predicted_pos = is_power_of_three(n);
  return c;
}

}  // namespace posg
