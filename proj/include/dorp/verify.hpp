// The verification suites. Each suite checks one acceptance claim about the
// monoid end to end, brute force against closed form, and returns a report.

#ifndef DORP_VERIFY_HPP_
#define DORP_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dorp/enumerate.hpp"
#include "dorp/report.hpp"

namespace dorp {

struct VerifyConfig {
  EnumerationBounds bounds;
  int jobs = 1;
  std::uint64_t seed = 0;            // recorded; suites are exhaustive
  std::optional<int> only_n;         // restrict a suite to a single n
  std::string oeis_cache_dir;        // fixture/cache directory
  bool oeis_offline = true;          // live lookups only when asked
};

struct SuiteInfo {
  int number;        // position in the acceptance list
  std::string name;  // CLI name
  std::string title;
};

const std::vector<SuiteInfo>& all_suites();

// Runs one suite by name ("ranks" runs both rank suites back to back).
std::vector<VerificationReport> run_suites(const std::string& name,
                                           const VerifyConfig& config);

VerificationReport suite_order(const VerifyConfig& config);
VerificationReport suite_counts(const VerifyConfig& config);
VerificationReport suite_identity(const VerifyConfig& config);
VerificationReport suite_greens(const VerifyConfig& config);
VerificationReport suite_abundance(const VerifyConfig& config);
VerificationReport suite_idempotents(const VerifyConfig& config);
VerificationReport suite_starred(const VerifyConfig& config);
VerificationReport suite_hstar(const VerifyConfig& config);
VerificationReport suite_classes(const VerifyConfig& config);
VerificationReport suite_ranks_rq(const VerifyConfig& config);
VerificationReport suite_ranks_ideal(const VerifyConfig& config);
VerificationReport suite_factorizations(const VerifyConfig& config);
VerificationReport suite_vitals(const VerifyConfig& config);
VerificationReport suite_witnesses(const VerifyConfig& config);
VerificationReport suite_oeis(const VerifyConfig& config);

}  // namespace dorp

#endif  // DORP_VERIFY_HPP_
