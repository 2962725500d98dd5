// Green's relations and their starred versions on DORP_n and its ideals:
// key-based characterizations on one side, definitional brute-force oracles
// on the other. The two are kept strictly independent so they can check
// each other.

#ifndef DORP_GREENS_HPP_
#define DORP_GREENS_HPP_

#include <string>
#include <vector>

#include "dorp/element_set.hpp"
#include "dorp/partial_map.hpp"

namespace dorp {

enum class Relation { L, R, Lstar, Rstar, Hstar, Dstar };

const char* relation_name(Relation rel);
Relation relation_from_name(const std::string& name);

// Canonical payload whose equality decides the relation:
//   L  : image list plus minimum preimage per image point
//   R  : the whole map (the monoid is R-trivial)
//   L* : image set
//   R* : kernel as a partition of the domain
//   H* : image set and kernel
//   D* : height
std::string relation_key(Relation rel, const PartialMap& m);

bool related(Relation rel, const PartialMap& a, const PartialMap& b);

struct EggBox {
  Relation relation;
  // Classes in canonical order (by first member), members in canonical order.
  std::vector<std::vector<PartialMap>> classes;

  std::string to_json() const;
};

EggBox egg_box(const ElementSet& carrier, Relation rel);

// --- Definitional oracles ------------------------------------------------
//
// These quantify over carrier + adjoined identity exactly as the displayed
// definitions do, and never consult the keys above. The per-pair forms are
// quadratic in the carrier, so they carry a size guard.

inline constexpr std::size_t kDefaultOracleElements = 20000;

bool definitional_star(Relation rel, const PartialMap& a, const PartialMap& b,
                       const ElementSet& carrier,
                       std::size_t size_bound = kDefaultOracleElements);
bool definitional_green(Relation rel, const PartialMap& a, const PartialMap& b,
                        const ElementSet& carrier,
                        std::size_t size_bound = kDefaultOracleElements);

// Partition of the carrier by the definitional relation, computed from
// per-element translation signatures (same relation, one pass). Supports
// L, R, L*, R* and D (transitive closure of L and R), keyed "D" via
// Relation::Dstar is *not* what this returns; pass the unstarred kinds.
std::vector<std::vector<PartialMap>> definitional_partition(
    const ElementSet& carrier, Relation rel);

// Transitive closure of definitional L and R classes (the unstarred D).
std::vector<std::vector<PartialMap>> definitional_join_partition(
    const ElementSet& carrier);

// Actual H*-class size of m inside DORP_n: 2 iff height >= 2 and
// max(im) <= min(dom), else 1. This corrects the case split printed in the
// source theorem, which over-counts non-reversible maps of small height.
int hstar_class_size(const PartialMap& m);

// The case split as printed: 2 iff 2 <= h <= ceil(n/2). Kept only so the
// verification report can list where it disagrees with the brute force.
int hstar_class_size_as_printed(const PartialMap& m);

// True iff some sigma in the carrier has m sigma m = m.
bool is_regular(const PartialMap& m, const ElementSet& carrier);

// --- Starred chain lemma -------------------------------------------------

struct StarChainResult {
  bool lrl_equals_dstar = false;  // L* o R* o L* == D*
  bool rlr_equals_dstar = false;  // R* o L* o R* == D*
};

// Checks both composition chains against height equality on the carrier.
StarChainResult star_chain_coincidence(const ElementSet& carrier);

// The witness pair (1->1,2->2), (2->2,3->3): in L* o R* via (2->1,3->2)
// but not in R* o L*. Returns true when the carrier reproduces this.
bool star_chain_witness_holds(const ElementSet& carrier);

}  // namespace dorp

#endif  // DORP_GREENS_HPP_
