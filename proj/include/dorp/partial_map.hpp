// Partial transformations of the chain {1,...,n} and their pointwise
// predicates: the value types everything else is built on.
//
// A map is stored as a fixed-size assignment table, entry x-1 holding the
// image of x or 0 for "undefined". Values are immutable after construction
// and cheap to copy, hash and compare, which the enumeration and closure
// layers rely on heavily.
//
// The canonical text form of a map is  n=<INT>;<src>-><dst>,...  with
// sources strictly increasing and no whitespace, e.g. "n=4;2->2,3->1".
// The empty map on [4] is "n=4;". Canonical order on maps is lexicographic
// order of these literals, byte for byte.

#ifndef DORP_PARTIAL_MAP_HPP_
#define DORP_PARTIAL_MAP_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dorp/errors.hpp"

namespace dorp {

// Largest chain the map representation supports. Enumeration bounds are
// configuration and sit well below this; the counting formulas have no cap.
inline constexpr int kMaxChain = 16;

struct ChainSize {
  int n;
  explicit ChainSize(int n_) : n(n_) {
    if (n_ < 1 || n_ > kMaxChain) {
      throw DomainError("chain size must be in [1, " +
                        std::to_string(kMaxChain) + "], got " +
                        std::to_string(n_));
    }
  }
};

struct MapClass {
  bool isotone;
  bool antitone;
  bool decreasing;
};

class PartialMap;

// Two-line form: kernel blocks A_1 < ... < A_p with their images aligned.
struct KernelDecomposition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> images;

  int height() const { return static_cast<int>(blocks.size()); }
};

class PartialMap {
 public:
  // The empty map on [n].
  explicit PartialMap(ChainSize n) : n_(static_cast<std::uint8_t>(n.n)) {
    assignment_.fill(0);
  }

  // From explicit (source, destination) pairs.
  PartialMap(ChainSize n, const std::vector<std::pair<int, int>>& pairs)
      : PartialMap(n) {
    for (auto [x, y] : pairs) set(x, y);
  }

  static PartialMap identity(ChainSize n) {
    PartialMap m(n);
    for (int x = 1; x <= n.n; ++x) m.set(x, x);
    return m;
  }

  // Identity restricted to the given points.
  static PartialMap identity_on(ChainSize n, const std::vector<int>& points) {
    PartialMap m(n);
    for (int x : points) m.set(x, x);
    return m;
  }

  static PartialMap parse(const std::string& literal);
  std::string literal() const;

  int n() const { return n_; }
  bool defined(int x) const { return assignment_[x - 1] != 0; }
  int value(int x) const { return assignment_[x - 1]; }

  bool empty() const;
  int width() const;
  int height() const;
  std::vector<int> domain() const;
  std::vector<int> image() const;  // sorted, deduplicated
  std::vector<int> fixed_points() const;
  int min_domain() const;  // 0 when empty
  int max_image() const;   // 0 when empty

  KernelDecomposition kernel_decomposition() const;

  friend bool operator==(const PartialMap& a, const PartialMap& b) {
    return a.n_ == b.n_ && a.assignment_ == b.assignment_;
  }
  friend bool operator!=(const PartialMap& a, const PartialMap& b) {
    return !(a == b);
  }

  std::size_t hash() const;

  friend PartialMap compose(const PartialMap& a, const PartialMap& b);

 private:
  void set(int x, int y) {
    check_point(x);
    check_point(y);
    if (assignment_[x - 1] != 0) {
      throw DomainError("duplicate source " + std::to_string(x));
    }
    assignment_[x - 1] = static_cast<std::uint8_t>(y);
  }
  void check_point(int x) const {
    if (x < 1 || x > n_) {
      throw DomainError("point " + std::to_string(x) + " outside [1, " +
                        std::to_string(static_cast<int>(n_)) + "]");
    }
  }

  std::uint8_t n_;
  std::array<std::uint8_t, kMaxChain> assignment_;
};

struct PartialMapHash {
  std::size_t operator()(const PartialMap& m) const { return m.hash(); }
};

// Canonical order: lexicographic on the serialized literal.
bool canonical_less(const PartialMap& a, const PartialMap& b);

struct CanonicalLess {
  bool operator()(const PartialMap& a, const PartialMap& b) const {
    return canonical_less(a, b);
  }
};

// Right-hand composition: x(ab) = (xa)b.
PartialMap compose(const PartialMap& a, const PartialMap& b);

MapClass classify(const PartialMap& m);
bool is_isotone(const PartialMap& m);
bool is_antitone(const PartialMap& m);
bool is_decreasing(const PartialMap& m);
bool in_dorp(const PartialMap& m);
bool is_idempotent(const PartialMap& m);

// Same kernel blocks, image written in opposite order. Returns nullopt when
// the reversal leaves the monoid (max image above min domain or height too
// large); throws DomainError if the input itself is not in DORP_n.
std::optional<PartialMap> reverse(const PartialMap& m);

// The witness rho' with rho rho' rho = rho and rho rho', rho' rho idempotent
// in DORP_n. rho' itself lives in the full partial transformation monoid.
PartialMap inverse_witness(const PartialMap& m);

}  // namespace dorp

#endif  // DORP_PARTIAL_MAP_HPP_
