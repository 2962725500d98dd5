// A finite, deduplicated set of partial maps in canonical order.

#ifndef DORP_ELEMENT_SET_HPP_
#define DORP_ELEMENT_SET_HPP_

#include <functional>
#include <vector>

#include "dorp/partial_map.hpp"

namespace dorp {

class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<PartialMap> members);

  bool contains(const PartialMap& m) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  int n() const { return members_.empty() ? 0 : members_.front().n(); }

  const std::vector<PartialMap>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  ElementSet filtered(const std::function<bool(const PartialMap&)>& keep) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<PartialMap> members_;  // canonical order, no duplicates
};

}  // namespace dorp

#endif  // DORP_ELEMENT_SET_HPP_
