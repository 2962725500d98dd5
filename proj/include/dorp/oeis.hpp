// OEIS search client with an on-disk cache and offline mode.
//
// A query is the comma-joined term list; the raw response body is cached
// one JSON file per query hash so replays are byte-identical. Live lookups
// are rate-limited to at least one second apart and never gate anything:
// the sequences this workbench produces either are recorded (Schroder) or
// were reported unrecorded at the time of writing, which can change.

#ifndef DORP_OEIS_HPP_
#define DORP_OEIS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dorp/bigint.hpp"
#include "dorp/errors.hpp"

namespace dorp {

struct SequenceQuery {
  std::vector<BigUint> terms;
  std::string label;

  std::string term_string() const;  // "2,6,22,90"
};

struct LookupVerdict {
  std::string label;
  bool found = false;
  std::vector<std::string> matches;  // e.g. "A006318"
  std::string source;                // "live" or "cache"
};

struct OeisOptions {
  std::string cache_dir;  // empty disables the cache
  bool offline = false;
  // Injectable transport: returns the response body for a query string, or
  // nullopt on network failure. The default talks to oeis.org.
  std::function<std::optional<std::string>(const std::string& terms)> transport;
};

class OeisClient {
 public:
  explicit OeisClient(OeisOptions options);

  LookupVerdict lookup(const SequenceQuery& query);

  // Parses a raw search response body into a verdict (exposed for tests).
  static LookupVerdict parse_body(const std::string& label,
                                  const std::string& body);

  // Cache file path for a query, empty when caching is disabled.
  std::string cache_path(const SequenceQuery& query) const;

 private:
  std::optional<std::string> read_cache(const SequenceQuery& query) const;
  void write_cache(const SequenceQuery& query, const std::string& body) const;

  OeisOptions options_;
};

std::optional<std::string> default_oeis_transport(const std::string& terms);

}  // namespace dorp

#endif  // DORP_OEIS_HPP_
