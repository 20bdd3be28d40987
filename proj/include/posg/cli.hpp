#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "posg/groups.hpp"
#include "posg/poscheck.hpp"
#include "posg/spectrum.hpp"
#include "posg/theorems.hpp"

namespace posg::cli {

// exit codes shared by every subcommand
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimMismatch = 1;
inline constexpr int kExitBadArguments = 2;
inline constexpr int kExitBudgetRefusal = 3;
inline constexpr int kExitIoFailure = 4;

using Json = nlohmann::ordered_json;

/// One group's serializable result. Big integers are carried as decimal
/// strings; JSON key order is fixed so identical inputs serialize to
/// identical bytes.
struct OutputRecord {
  std::string family;
  std::vector<std::pair<std::string, std::uint64_t>> params;
  BigInt order = 0;
  std::optional<OrderSpectrum> spectrum;
  std::optional<PosVerdict> verdict;
  Json evidence;  // null unless a verifier contributed one

  static OutputRecord for_spec(const GroupSpec& spec);
};

Json record_to_json(const OutputRecord& record);
std::string record_to_csv(const OutputRecord& record, bool header);
std::string record_to_table(const OutputRecord& record);

Json lemma_report_to_json(const LemmaReport& report);
Json theorem_evidence_to_json(const TheoremEvidence& evidence);

/// Entry point used by the binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace posg::cli
