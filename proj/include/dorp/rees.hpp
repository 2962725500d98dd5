// Elements of the Rees quotient RQ_p(n): a partial map of height exactly p,
// or the absorbing zero. Products that drop below height p collapse to zero.

#ifndef DORP_REES_HPP_
#define DORP_REES_HPP_

#include <string>

#include "dorp/partial_map.hpp"

namespace dorp {

class ReesElement {
 public:
  static ReesElement zero(ChainSize n, int p) {
    ReesElement out{PartialMap(n), p, true};
    return out;
  }

  static ReesElement of(const PartialMap& m, int p) {
    if (m.height() != p) {
      throw DomainError("ReesElement: map has height " +
                        std::to_string(m.height()) + ", expected " +
                        std::to_string(p));
    }
    return ReesElement{m, p, false};
  }

  bool is_zero() const { return zero_; }
  int p() const { return p_; }
  int n() const { return map_.n(); }
  const PartialMap& map() const {
    if (zero_) throw DomainError("zero element carries no map");
    return map_;
  }

  std::string literal() const { return zero_ ? "0" : map_.literal(); }

  friend bool operator==(const ReesElement& a, const ReesElement& b) {
    if (a.p_ != b.p_ || a.map_.n() != b.map_.n()) return false;
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.map_ == b.map_;
  }
  friend bool operator!=(const ReesElement& a, const ReesElement& b) {
    return !(a == b);
  }

  std::size_t hash() const { return zero_ ? 0x5eed : map_.hash(); }

 private:
  ReesElement(const PartialMap& m, int p, bool zero)
      : map_(m), p_(p), zero_(zero) {}

  PartialMap map_;
  int p_;
  bool zero_;
};

struct ReesElementHash {
  std::size_t operator()(const ReesElement& e) const { return e.hash(); }
};

// Zero sorts before every map.
inline bool canonical_less(const ReesElement& a, const ReesElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
  return canonical_less(a.map(), b.map());
}

struct ReesCanonicalLess {
  bool operator()(const ReesElement& a, const ReesElement& b) const {
    return canonical_less(a, b);
  }
};

inline ReesElement rees_product(const ReesElement& a, const ReesElement& b) {
  if (a.p() != b.p() || a.n() != b.n()) {
    throw DomainError("rees_product: elements from different quotients");
  }
  if (a.is_zero() || b.is_zero()) return ReesElement::zero(ChainSize(a.n()), a.p());
  PartialMap prod = compose(a.map(), b.map());
  if (prod.height() < a.p()) return ReesElement::zero(ChainSize(a.n()), a.p());
  return ReesElement::of(prod, a.p());
}

}  // namespace dorp

#endif  // DORP_REES_HPP_
