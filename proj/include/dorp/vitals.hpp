// Vital elements, the constructive factorizations, the generating sets
// G(p) and W(p), and the closed-form ranks.
//
// A vital element of height p has image y_1 < ... < y_p, convex domain
// {y_p, ..., y_p + p - 1} and sends y_p + j to y_{p-j}; its minimum domain
// point is fixed. The convex ones, delta_{p,i}, have image the run
// i, i-1, ..., i-p+1.

#ifndef DORP_VITALS_HPP_
#define DORP_VITALS_HPP_

#include <string>
#include <vector>

#include "dorp/bigint.hpp"
#include "dorp/element_set.hpp"
#include "dorp/partial_map.hpp"

namespace dorp {

struct VitalElement {
  PartialMap underlying;
  std::vector<int> image;  // y_1 < ... < y_p
  bool convex = false;
  bool extreme = false;
};

bool is_vital(const PartialMap& m);
bool is_convex_vital(const PartialMap& m);

// The unique vital element whose image is the given point set. Rejects
// heights outside [2, ceil(n/2)] and images with max + p - 1 > n (such an
// L*-class contains no antitone member, hence no vital element).
VitalElement vital_of_lstar_class(const std::vector<int>& image, ChainSize n);

// delta_{p,i}: domain i..i+p-1, i+j -> i-j. Requires p <= i <= n-p+1.
VitalElement convex_vital(ChainSize n, int p, int i);

// M(p): all convex vitals of height p, ascending i; size n - 2p + 2.
std::vector<VitalElement> convex_vitals(ChainSize n, int p);

enum class FactorTag { Idempotent, Vital, ConvexVital, IsotonePart };

struct Factor {
  PartialMap map;
  FactorTag tag;
};

struct FactorizationWord {
  std::vector<Factor> factors;

  PartialMap composed() const;
};

// Injective antitone map with convex domain = idempotents followed by the
// unique vital element of its L*-class.
FactorizationWord factor_injective_antitone(const PartialMap& rho);

// Any antitone map of height >= 2: kernel idempotent, collapse idempotents,
// then the factors of its injective convex-domain companion.
FactorizationWord factor_antitone(const PartialMap& rho);

// Non-convex vital = convex vital times an injective decreasing isotone map;
// the isotone part is expanded into idempotents by closure word recovery.
FactorizationWord factor_nonconvex_vital(const PartialMap& delta);

// delta_{p+1,i} followed by the identity on {i-p+1, ..., i+1} recovers
// delta_{p,i}. Extreme i (i = p or i = n-p+1) is rejected: the inflated
// domain would need a point outside the chain.
struct Deflation {
  VitalElement higher;   // delta_{p+1,i}
  PartialMap idempotent; // identity on {i-p+1, ..., i+1}
};
Deflation deflate_convex_vital(ChainSize n, int p, int i);

// G(p): idempotents of J*_p, plus M(p) in the reversible band.
ElementSet generating_set_G(ChainSize n, int p);

// W(p): the minimum generating set of I(n,p), including the extreme convex
// vitals of lower heights.
ElementSet generating_set_W(ChainSize n, int p);

enum class RankObject { ReesQuotient, Ideal, Monoid };

// The closed-form ranks. Monoid rank (3n-2) is exposed for n >= 2 only:
// DORP_1 needs both of its elements as generators, which the formula misses.
BigUint rank_formula(ChainSize n, RankObject object, int p = 0);

}  // namespace dorp

#endif  // DORP_VITALS_HPP_
