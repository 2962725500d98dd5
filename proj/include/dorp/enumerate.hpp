// Enumerators for the monoid and its pieces.
//
// enumerate_all_partial_maps is the brute-force oracle substrate: every map,
// canonical order, guarded by a bound. The DORP/LS/DRP enumerators generate
// directly (domain, then convex kernel blocks, then an image chain under the
// decreasing constraint) so counting-scale n never touches the (n+1)^n space.

#ifndef DORP_ENUMERATE_HPP_
#define DORP_ENUMERATE_HPP_

#include <functional>

#include "dorp/element_set.hpp"
#include "dorp/partial_map.hpp"

namespace dorp {

struct EnumerationBounds {
  int oracle = 7;  // cap for all-maps enumeration
  int direct = 9;  // cap for direct enumeration of DORP_n and friends
};

// Calls fn once per partial map of [n], in canonical order.
void for_each_partial_map(ChainSize n, const EnumerationBounds& bounds,
                          const std::function<void(const PartialMap&)>& fn);

ElementSet enumerate_all_partial_maps(ChainSize n,
                                      const EnumerationBounds& bounds = {});

ElementSet enumerate_ls(ChainSize n, const EnumerationBounds& bounds = {});
ElementSet enumerate_drp(ChainSize n, const EnumerationBounds& bounds = {});
ElementSet enumerate_dorp(ChainSize n, const EnumerationBounds& bounds = {});

// I(n,p) = height <= p; J*_p = height exactly p.
ElementSet enumerate_ideal(ChainSize n, int p,
                           const EnumerationBounds& bounds = {});
ElementSet enumerate_jstar(ChainSize n, int p,
                           const EnumerationBounds& bounds = {});

ElementSet idempotents_of(const ElementSet& carrier);

}  // namespace dorp

#endif  // DORP_ENUMERATE_HPP_
