#include "dorp/element_set.hpp"

#include <algorithm>
#include <functional>

namespace dorp {

ElementSet::ElementSet(std::vector<PartialMap> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), CanonicalLess{});
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (const auto& m : members_) {
    if (m.n() != members_.front().n()) {
      throw SizeMismatchError("element set members must share one chain size");
    }
  }
}

bool ElementSet::contains(const PartialMap& m) const {
  return std::binary_search(members_.begin(), members_.end(), m,
                            CanonicalLess{});
}

ElementSet ElementSet::filtered(
    const std::function<bool(const PartialMap&)>& keep) const {
  std::vector<PartialMap> out;
  for (const auto& m : members_) {
    if (keep(m)) out.push_back(m);
  }
  return ElementSet(std::move(out));
}

}  // namespace dorp
