#include "dorp/enumerate.hpp"

#include <algorithm>

namespace dorp {

namespace {

void check_bound(int n, int bound, const char* what) {
  if (n > bound) {
    throw ResourceLimitError(std::string(what) + " bound is " +
                             std::to_string(bound) + ", got n = " +
                             std::to_string(n));
  }
}

// Emits maps extending `pairs` by sources > last, in literal order. The
// recursion order equals canonical order while all numbers are single
// digits; the callers re-sort for larger n.
void all_maps_rec(int n, int last, std::vector<std::pair<int, int>>& pairs,
                  const std::function<void(const PartialMap&)>& fn) {
  fn(PartialMap(ChainSize(n), pairs));
  for (int x = last + 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      pairs.emplace_back(x, y);
      all_maps_rec(n, x, pairs, fn);
      pairs.pop_back();
    }
  }
}

// Chooses images a_1 < ... < a_p with a_i <= mins[i] for the given ordered
// block minima and hands each completed assignment to sink as (block -> a).
void choose_isotone_images(const std::vector<std::vector<int>>& blocks,
                           const std::vector<int>& mins, std::size_t i,
                           int lower, std::vector<int>& images,
                           const std::function<void(const std::vector<int>&)>& sink) {
  if (i == blocks.size()) {
    sink(images);
    return;
  }
  for (int a = lower + 1; a <= mins[i]; ++a) {
    images.push_back(a);
    choose_isotone_images(blocks, mins, i + 1, a, images, sink);
    images.pop_back();
  }
}

// Enumerates ordered partitions of the sorted domain into consecutive
// blocks, then delegates image selection.
template <typename BlockSink>
void partition_blocks(const std::vector<int>& domain, std::size_t from,
                      std::vector<std::vector<int>>& blocks,
                      const BlockSink& sink) {
  if (from == domain.size()) {
    sink(blocks);
    return;
  }
  for (std::size_t len = 1; from + len <= domain.size(); ++len) {
    blocks.emplace_back(domain.begin() + static_cast<long>(from),
                        domain.begin() + static_cast<long>(from + len));
    partition_blocks(domain, from + len, blocks, sink);
    blocks.pop_back();
  }
}

void emit(int n, const std::vector<std::vector<int>>& blocks,
          const std::vector<int>& images, std::vector<PartialMap>& out) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int x : blocks[i]) pairs.emplace_back(x, images[i]);
  }
  std::sort(pairs.begin(), pairs.end());
  out.emplace_back(ChainSize(n), pairs);
}

// All isotone decreasing maps with the given domain.
void ls_for_domain(int n, const std::vector<int>& domain,
                   std::vector<PartialMap>& out) {
  std::vector<std::vector<int>> blocks;
  partition_blocks(domain, 0, blocks, [&](const std::vector<std::vector<int>>& bl) {
    std::vector<int> mins;
    mins.reserve(bl.size());
    for (const auto& b : bl) mins.push_back(b.front());
    std::vector<int> images;
    choose_isotone_images(bl, mins, 0, 0, images, [&](const std::vector<int>& im) {
      emit(n, bl, im, out);
    });
  });
}

// All antitone decreasing maps of height >= 2 with the given domain: the
// images are any p-subset of [1, min domain], written against the blocks in
// opposite order.
void drp_high_for_domain(int n, const std::vector<int>& domain,
                         std::vector<PartialMap>& out) {
  int w = domain.front();
  std::vector<std::vector<int>> blocks;
  partition_blocks(domain, 0, blocks, [&](const std::vector<std::vector<int>>& bl) {
    std::size_t p = bl.size();
    if (p < 2 || static_cast<int>(p) > w) return;
    std::vector<int> subset(p);
    // Iterate p-subsets of [1, w].
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int lower) {
      if (i == p) {
        std::vector<int> images(p);
        for (std::size_t j = 0; j < p; ++j) images[j] = subset[p - 1 - j];
        emit(n, bl, images, out);
        return;
      }
      for (int a = lower + 1; a <= w - static_cast<int>(p - 1 - i); ++a) {
        subset[i] = a;
        rec(i + 1, a);
      }
    };
    rec(0, 0);
  });
}

template <typename PerDomain>
void for_each_domain(int n, const PerDomain& fn) {
  // All nonempty subsets of [n], plus the empty one handled by callers.
  std::vector<int> domain;
  std::function<void(int)> rec = [&](int from) {
    if (!domain.empty()) fn(domain);
    for (int x = from; x <= n; ++x) {
      domain.push_back(x);
      rec(x + 1);
      domain.pop_back();
    }
  };
  rec(1);
}

}  // namespace

void for_each_partial_map(ChainSize n, const EnumerationBounds& bounds,
                          const std::function<void(const PartialMap&)>& fn) {
  check_bound(n.n, bounds.oracle, "all-maps oracle");
  check_bound(n.n, 9, "streamed canonical order");
  std::vector<std::pair<int, int>> pairs;
  all_maps_rec(n.n, 0, pairs, fn);
}

ElementSet enumerate_all_partial_maps(ChainSize n,
                                      const EnumerationBounds& bounds) {
  std::vector<PartialMap> out;
  for_each_partial_map(n, bounds, [&](const PartialMap& m) { out.push_back(m); });
  return ElementSet(std::move(out));
}

ElementSet enumerate_ls(ChainSize n, const EnumerationBounds& bounds) {
  check_bound(n.n, bounds.direct, "direct enumeration");
  std::vector<PartialMap> out;
  out.emplace_back(n);  // empty map
  for_each_domain(n.n, [&](const std::vector<int>& d) { ls_for_domain(n.n, d, out); });
  return ElementSet(std::move(out));
}

ElementSet enumerate_drp(ChainSize n, const EnumerationBounds& bounds) {
  check_bound(n.n, bounds.direct, "direct enumeration");
  std::vector<PartialMap> out;
  out.emplace_back(n);
  for_each_domain(n.n, [&](const std::vector<int>& d) {
    // Height-1 part: one block, any image <= min domain.
    for (int a = 1; a <= d.front(); ++a) {
      std::vector<std::pair<int, int>> pairs;
      for (int x : d) pairs.emplace_back(x, a);
      out.emplace_back(n, pairs);
    }
    drp_high_for_domain(n.n, d, out);
  });
  return ElementSet(std::move(out));
}

ElementSet enumerate_dorp(ChainSize n, const EnumerationBounds& bounds) {
  check_bound(n.n, bounds.direct, "direct enumeration");
  std::vector<PartialMap> out;
  out.emplace_back(n);
  for_each_domain(n.n, [&](const std::vector<int>& d) {
    ls_for_domain(n.n, d, out);
    drp_high_for_domain(n.n, d, out);  // height >= 2 antitones are new
  });
  return ElementSet(std::move(out));
}

ElementSet enumerate_ideal(ChainSize n, int p, const EnumerationBounds& bounds) {
  if (p < 0 || p > n.n) {
    throw DomainError("ideal height p must be in [0, n]");
  }
  return enumerate_dorp(n, bounds).filtered(
      [p](const PartialMap& m) { return m.height() <= p; });
}

ElementSet enumerate_jstar(ChainSize n, int p, const EnumerationBounds& bounds) {
  if (p < 0 || p > n.n) {
    throw DomainError("J* height p must be in [0, n]");
  }
  return enumerate_dorp(n, bounds).filtered(
      [p](const PartialMap& m) { return m.height() == p; });
}

ElementSet idempotents_of(const ElementSet& carrier) {
  return carrier.filtered([](const PartialMap& m) { return is_idempotent(m); });
}

}  // namespace dorp
