#include "dorp/oeis.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "dorp/errors.hpp"

namespace dorp {

namespace fs = std::filesystem;
using nlohmann::json;

std::string SequenceQuery::term_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ",";
    out += terms[i].to_decimal();
  }
  return out;
}

OeisClient::OeisClient(OeisOptions options) : options_(std::move(options)) {}

namespace {

std::string fnv64_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string OeisClient::cache_path(const SequenceQuery& query) const {
  if (options_.cache_dir.empty()) return "";
  return (fs::path(options_.cache_dir) / (fnv64_hex(query.term_string()) + ".json"))
      .string();
}

std::optional<std::string> OeisClient::read_cache(
    const SequenceQuery& query) const {
  std::string path = cache_path(query);
  if (path.empty() || !fs::exists(path)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  json entry = json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
  if (entry.is_discarded() || !entry.contains("body")) {
    throw ParseError("corrupt cache entry: " + path);
  }
  return entry["body"].get<std::string>();
}

void OeisClient::write_cache(const SequenceQuery& query,
                             const std::string& body) const {
  std::string path = cache_path(query);
  if (path.empty()) return;
  fs::create_directories(fs::path(path).parent_path());
  json entry;
  entry["query"] = query.term_string();
  entry["fetched_at"] = static_cast<std::int64_t>(
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
  entry["body"] = body;
  std::ofstream out(path, std::ios::binary);
  out << entry.dump();
}

LookupVerdict OeisClient::parse_body(const std::string& label,
                                     const std::string& body) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw ParseError("OEIS response is not JSON");
  }
  LookupVerdict verdict;
  verdict.label = label;
  const json* results = nullptr;
  if (doc.is_object() && doc.contains("results") && doc["results"].is_array()) {
    results = &doc["results"];
  } else if (doc.is_array()) {
    results = &doc;  // some mirrors return a bare array
  }
  if (results != nullptr) {
    for (const auto& entry : *results) {
      if (entry.contains("number")) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "A%06d", entry["number"].get<int>());
        verdict.matches.push_back(buf);
      }
    }
  }
  verdict.found = !verdict.matches.empty();
  return verdict;
}

LookupVerdict OeisClient::lookup(const SequenceQuery& query) {
  if (query.terms.empty()) {
    throw DomainError("OEIS query needs at least one term");
  }
  if (auto cached = read_cache(query)) {
    LookupVerdict verdict = parse_body(query.label, *cached);
    verdict.source = "cache";
    return verdict;
  }
  if (options_.offline) {
    throw NetworkError("offline and no cached response for \"" +
                       query.term_string() + "\"");
  }
  auto transport = options_.transport ? options_.transport
                                      : default_oeis_transport;
  std::optional<std::string> body = transport(query.term_string());
  if (!body) {
    throw NetworkError("OEIS request failed and no cache is available");
  }
  write_cache(query, *body);
  LookupVerdict verdict = parse_body(query.label, *body);
  verdict.source = "live";
  return verdict;
}

}  // namespace dorp

// The real transport lives apart so the header does not drag httplib in.
#include <httplib.h>

namespace dorp {

std::optional<std::string> default_oeis_transport(const std::string& terms) {
  // Serialize requests and keep them at least a second apart.
  static std::mutex mutex;
  static std::chrono::steady_clock::time_point last_request;
  std::lock_guard<std::mutex> lock(mutex);
  auto now = std::chrono::steady_clock::now();
  auto since = std::chrono::duration_cast<std::chrono::milliseconds>(
      now - last_request);
  if (last_request.time_since_epoch().count() != 0 &&
      since < std::chrono::milliseconds(1000)) {
    std::this_thread::sleep_for(std::chrono::milliseconds(1000) - since);
  }
  last_request = std::chrono::steady_clock::now();

#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
  httplib::SSLClient client("oeis.org");
#else
  httplib::Client client("oeis.org");
#endif
  client.set_connection_timeout(10);
  client.set_read_timeout(20);
  std::string path = "/search?fmt=json&q=" + terms;
  auto res = client.Get(path);
  if (!res || res->status != 200) return std::nullopt;
  return res->body;
}

}  // namespace dorp
