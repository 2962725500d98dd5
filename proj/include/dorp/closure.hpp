// Generic subsemigroup closure with word recovery.
//
// Frontier-based rounds: each round multiplies the previous round's new
// elements against the full current set on both sides. A new element's
// parent pair is the canonically smallest (left, right) that produced it
// during its round, so traces are identical whatever the thread count.

#ifndef DORP_CLOSURE_HPP_
#define DORP_CLOSURE_HPP_

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dorp/errors.hpp"

namespace dorp {

struct ClosureOptions {
  std::size_t cap = 5000000;
  int jobs = 1;
  bool track_parents = true;
};

template <typename E, typename Hash>
struct GenerationTrace {
  std::vector<E> generators;
  std::vector<E> members;  // canonical order
  // For each non-generator, the canonical (left, right) pair of its round.
  std::unordered_map<E, std::pair<E, E>, Hash> parents;
  int rounds = 0;

  bool contains(const E& m) const { return lookup.count(m) != 0; }
  std::unordered_set<E, Hash> lookup;
};

template <typename E, typename Mult, typename Hash, typename Less>
GenerationTrace<E, Hash> closure(const std::vector<E>& generators, Mult mult,
                                 Less less, const ClosureOptions& opts = {}) {
  if (generators.empty()) {
    throw DomainError("closure of an empty generating set");
  }
  GenerationTrace<E, Hash> trace;
  trace.generators = generators;
  std::sort(trace.generators.begin(), trace.generators.end(), less);
  trace.generators.erase(
      std::unique(trace.generators.begin(), trace.generators.end()),
      trace.generators.end());

  std::vector<E> all = trace.generators;
  std::unordered_set<E, Hash> seen(all.begin(), all.end());
  std::vector<E> frontier = all;

  using ParentMap = std::unordered_map<E, std::pair<E, E>, Hash>;
  auto keep_min = [&](ParentMap& map, const E& prod, const E& l, const E& r) {
    auto [it, inserted] = map.try_emplace(prod, std::make_pair(l, r));
    if (inserted) return;
    auto& cur = it->second;
    if (less(l, cur.first) ||
        (!less(cur.first, l) && less(r, cur.second))) {
      cur = std::make_pair(l, r);
    }
  };

  while (!frontier.empty()) {
    ++trace.rounds;
    auto scan = [&](std::size_t begin, std::size_t end, ParentMap& out) {
      for (std::size_t i = begin; i < end; ++i) {
        const E& f = frontier[i];
        for (const E& s : all) {
          E fs = mult(f, s);
          if (seen.count(fs) == 0) keep_min(out, fs, f, s);
          E sf = mult(s, f);
          if (seen.count(sf) == 0) keep_min(out, sf, s, f);
        }
      }
    };
    int jobs = std::max(1, opts.jobs);
    ParentMap fresh;
    if (jobs == 1 || frontier.size() < 64) {
      scan(0, frontier.size(), fresh);
    } else {
      std::vector<ParentMap> parts(static_cast<std::size_t>(jobs));
      std::vector<std::thread> workers;
      std::size_t chunk =
          (frontier.size() + static_cast<std::size_t>(jobs) - 1) /
          static_cast<std::size_t>(jobs);
      for (int j = 0; j < jobs; ++j) {
        std::size_t begin = static_cast<std::size_t>(j) * chunk;
        std::size_t end = std::min(frontier.size(), begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([&, begin, end, j] {
          scan(begin, end, parts[static_cast<std::size_t>(j)]);
        });
      }
      for (auto& w : workers) w.join();
      for (auto& part : parts) {
        for (auto& [prod, pair] : part) {
          keep_min(fresh, prod, pair.first, pair.second);
        }
      }
    }
    if (seen.size() + fresh.size() > opts.cap) {
      throw ResourceLimitError("closure exceeded cap of " +
                               std::to_string(opts.cap) + " elements");
    }
    std::vector<E> next;
    next.reserve(fresh.size());
    for (auto& [prod, pair] : fresh) {
      seen.insert(prod);
      next.push_back(prod);
      if (opts.track_parents) trace.parents.emplace(prod, pair);
    }
    std::sort(next.begin(), next.end(), less);
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::sort(all.begin(), all.end(), less);
  trace.members = std::move(all);
  trace.lookup = std::move(seen);
  return trace;
}

// Summary of a closure run as a stable JSON object.
template <typename E, typename Hash>
std::string closure_report_json(const GenerationTrace<E, Hash>& trace,
                                bool capped = false) {
  std::string out = "{\"capped\":";
  out += capped ? "true" : "false";
  out += ",\"closure_size\":" + std::to_string(trace.members.size());
  out += ",\"generator_count\":" + std::to_string(trace.generators.size());
  out += ",\"rounds\":" + std::to_string(trace.rounds) + "}";
  return out;
}

// A word over the generators whose composition is the element.
template <typename E, typename Hash>
std::vector<E> word_for(const E& element, const GenerationTrace<E, Hash>& trace) {
  if (!trace.contains(element)) {
    throw NotGeneratedError("element is not in the closure");
  }
  auto it = trace.parents.find(element);
  if (it == trace.parents.end()) return {element};  // a generator
  std::vector<E> left = word_for(it->second.first, trace);
  std::vector<E> right = word_for(it->second.second, trace);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

template <typename E, typename Mult, typename Hash, typename Less>
bool is_generating(const std::vector<E>& generators,
                   const std::vector<E>& carrier, Mult mult, Less less,
                   const ClosureOptions& opts = {}) {
  std::unordered_set<E, Hash> carrier_set(carrier.begin(), carrier.end());
  for (const E& g : generators) {
    if (carrier_set.count(g) == 0) {
      throw DomainError("generator outside the carrier");
    }
  }
  ClosureOptions local = opts;
  local.track_parents = false;
  local.cap = std::min(local.cap, carrier.size() + 1);
  try {
    auto trace = closure<E, Mult, Hash, Less>(generators, mult, less, local);
    if (trace.members.size() != carrier_set.size()) return false;
    for (const E& m : trace.members) {
      if (carrier_set.count(m) == 0) return false;
    }
    return true;
  } catch (const ResourceLimitError&) {
    return false;  // grew past the carrier, so it is not the carrier
  }
}

// Elements admitting no factorization with both factors different from
// themselves; every generating set must contain each of them.
template <typename E, typename Mult, typename Hash>
std::vector<E> irreducibles(const std::vector<E>& carrier, Mult mult,
                            int jobs = 1) {
  std::unordered_set<E, Hash> carrier_set(carrier.begin(), carrier.end());
  jobs = std::max(1, jobs);
  std::vector<std::unordered_set<E, Hash>> parts(
      static_cast<std::size_t>(jobs));
  auto scan = [&](std::size_t begin, std::size_t end,
                  std::unordered_set<E, Hash>& out) {
    for (std::size_t i = begin; i < end; ++i) {
      for (const E& b : carrier) {
        E prod = mult(carrier[i], b);
        if (prod != carrier[i] && prod != b && carrier_set.count(prod) != 0) {
          out.insert(prod);
        }
      }
    }
  };
  if (jobs == 1 || carrier.size() < 64) {
    scan(0, carrier.size(), parts[0]);
  } else {
    std::vector<std::thread> workers;
    std::size_t chunk = (carrier.size() + static_cast<std::size_t>(jobs) - 1) /
                        static_cast<std::size_t>(jobs);
    for (int j = 0; j < jobs; ++j) {
      std::size_t begin = static_cast<std::size_t>(j) * chunk;
      std::size_t end = std::min(carrier.size(), begin + chunk);
      if (begin >= end) break;
      workers.emplace_back([&, begin, end, j] {
        scan(begin, end, parts[static_cast<std::size_t>(j)]);
      });
    }
    for (auto& w : workers) w.join();
  }
  std::unordered_set<E, Hash> reducible;
  for (auto& part : parts) reducible.insert(part.begin(), part.end());
  std::vector<E> out;
  for (const E& m : carrier) {
    if (reducible.count(m) == 0) out.push_back(m);
  }
  return out;
}

}  // namespace dorp

#endif  // DORP_CLOSURE_HPP_
