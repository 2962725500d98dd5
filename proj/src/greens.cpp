#include "dorp/greens.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace dorp {

const char* relation_name(Relation rel) {
  switch (rel) {
    case Relation::L: return "L";
    case Relation::R: return "R";
    case Relation::Lstar: return "L*";
    case Relation::Rstar: return "R*";
    case Relation::Hstar: return "H*";
    case Relation::Dstar: return "D*";
  }
  return "?";
}

Relation relation_from_name(const std::string& name) {
  if (name == "L" || name == "l") return Relation::L;
  if (name == "R" || name == "r") return Relation::R;
  if (name == "L*" || name == "lstar") return Relation::Lstar;
  if (name == "R*" || name == "rstar") return Relation::Rstar;
  if (name == "H*" || name == "hstar") return Relation::Hstar;
  if (name == "D*" || name == "dstar") return Relation::Dstar;
  throw DomainError("unknown relation name: " + name);
}

namespace {

void append_image_set(const PartialMap& m, std::string& key) {
  for (int v : m.image()) key.push_back(static_cast<char>(v));
}

void append_kernel(const PartialMap& m, std::string& key) {
  // Blocks in increasing order, '|'-separated; includes the domain.
  for (const auto& block : m.kernel_decomposition().blocks) {
    for (int x : block) key.push_back(static_cast<char>(x));
    key.push_back('|');
  }
}

}  // namespace

std::string relation_key(Relation rel, const PartialMap& m) {
  std::string key;
  switch (rel) {
    case Relation::L: {
      // Sorted images with the minimum preimage of each.
      auto kd = m.kernel_decomposition();
      std::vector<std::pair<int, int>> by_image;
      for (std::size_t i = 0; i < kd.blocks.size(); ++i) {
        by_image.emplace_back(kd.images[i], kd.blocks[i].front());
      }
      std::sort(by_image.begin(), by_image.end());
      for (auto [a, pre] : by_image) {
        key.push_back(static_cast<char>(a));
        key.push_back(static_cast<char>(pre));
      }
      break;
    }
    case Relation::R:
      key = m.literal();
      break;
    case Relation::Lstar:
      append_image_set(m, key);
      break;
    case Relation::Rstar:
      append_kernel(m, key);
      break;
    case Relation::Hstar:
      append_image_set(m, key);
      key.push_back('/');
      append_kernel(m, key);
      break;
    case Relation::Dstar:
      key.push_back(static_cast<char>(m.height()));
      break;
  }
  return key;
}

bool related(Relation rel, const PartialMap& a, const PartialMap& b) {
  if (a.n() != b.n()) {
    throw SizeMismatchError("related: maps live on different chains");
  }
  return relation_key(rel, a) == relation_key(rel, b);
}

EggBox egg_box(const ElementSet& carrier, Relation rel) {
  std::map<std::string, std::vector<PartialMap>> by_key;
  for (const auto& m : carrier) {
    by_key[relation_key(rel, m)].push_back(m);
  }
  EggBox out;
  out.relation = rel;
  for (auto& [key, members] : by_key) {
    out.classes.push_back(std::move(members));  // members already canonical
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) {
              return canonical_less(a.front(), b.front());
            });
  return out;
}

std::string EggBox::to_json() const {
  std::ostringstream out;
  out << "{\"classes\":[";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i) out << ",";
    out << "[";
    for (std::size_t j = 0; j < classes[i].size(); ++j) {
      if (j) out << ",";
      out << "\"" << classes[i][j].literal() << "\"";
    }
    out << "]";
  }
  out << "],\"relation\":\"" << relation_name(relation) << "\"}";
  return out.str();
}

namespace {

std::vector<PartialMap> with_identity(const ElementSet& carrier) {
  std::vector<PartialMap> q(carrier.begin(), carrier.end());
  PartialMap id = PartialMap::identity(ChainSize(carrier.n()));
  if (!carrier.contains(id)) q.push_back(id);
  return q;
}

}  // namespace

bool definitional_star(Relation rel, const PartialMap& a, const PartialMap& b,
                       const ElementSet& carrier, std::size_t size_bound) {
  if (rel != Relation::Lstar && rel != Relation::Rstar) {
    throw DomainError("definitional_star: only L* and R* have this form");
  }
  if (carrier.size() > size_bound) {
    throw ResourceLimitError("definitional star oracle capped at " +
                             std::to_string(size_bound) + " elements");
  }
  std::vector<PartialMap> q = with_identity(carrier);
  for (const auto& x : q) {
    for (const auto& y : q) {
      bool lhs, rhs;
      if (rel == Relation::Lstar) {
        lhs = compose(a, x) == compose(a, y);
        rhs = compose(b, x) == compose(b, y);
      } else {
        lhs = compose(x, a) == compose(y, a);
        rhs = compose(x, b) == compose(y, b);
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool definitional_green(Relation rel, const PartialMap& a, const PartialMap& b,
                        const ElementSet& carrier, std::size_t size_bound) {
  if (rel != Relation::L && rel != Relation::R) {
    throw DomainError("definitional_green: only L and R have this form");
  }
  if (carrier.size() > size_bound) {
    throw ResourceLimitError("definitional Green oracle capped at " +
                             std::to_string(size_bound) + " elements");
  }
  auto principal = [&](const PartialMap& g) {
    std::vector<PartialMap> ideal;
    ideal.push_back(g);
    for (const auto& x : carrier) {
      ideal.push_back(rel == Relation::L ? compose(x, g) : compose(g, x));
    }
    std::sort(ideal.begin(), ideal.end(), CanonicalLess{});
    ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
    return ideal;
  };
  return principal(a) == principal(b);
}

namespace {

// Index of each product of m against the carrier-with-identity, relabeled
// by first occurrence: equal signatures <=> definitionally related.
std::vector<int> translation_signature(const PartialMap& m,
                                       const std::vector<PartialMap>& q,
                                       bool left_translations) {
  std::unordered_map<PartialMap, int, PartialMapHash> labels;
  std::vector<int> sig;
  sig.reserve(q.size());
  for (const auto& x : q) {
    PartialMap prod = left_translations ? compose(x, m) : compose(m, x);
    auto [it, inserted] = labels.emplace(prod, static_cast<int>(labels.size()));
    sig.push_back(it->second);
  }
  return sig;
}

// Principal ideal of m as a sorted member list.
std::vector<PartialMap> principal_ideal(const PartialMap& m,
                                        const std::vector<PartialMap>& q,
                                        bool left) {
  std::vector<PartialMap> ideal;
  ideal.reserve(q.size());
  for (const auto& x : q) {
    ideal.push_back(left ? compose(x, m) : compose(m, x));
  }
  std::sort(ideal.begin(), ideal.end(), CanonicalLess{});
  ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
  return ideal;
}

std::vector<std::vector<PartialMap>> group_by_signature(
    const ElementSet& carrier,
    const std::function<std::string(const PartialMap&)>& sig) {
  std::map<std::string, std::vector<PartialMap>> by_key;
  for (const auto& m : carrier) by_key[sig(m)].push_back(m);
  std::vector<std::vector<PartialMap>> classes;
  for (auto& [k, v] : by_key) classes.push_back(std::move(v));
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return canonical_less(a.front(), b.front());
  });
  return classes;
}

std::string ints_to_key(const std::vector<int>& v) {
  std::string key;
  key.reserve(v.size() * 2);
  for (int x : v) {
    key.push_back(static_cast<char>(x & 0xff));
    key.push_back(static_cast<char>((x >> 8) & 0xff));
  }
  return key;
}

std::string maps_to_key(const std::vector<PartialMap>& v) {
  std::string key;
  for (const auto& m : v) {
    key += m.literal();
    key.push_back('|');
  }
  return key;
}

}  // namespace

std::vector<std::vector<PartialMap>> definitional_partition(
    const ElementSet& carrier, Relation rel) {
  std::vector<PartialMap> q = with_identity(carrier);
  switch (rel) {
    case Relation::Lstar:
      return group_by_signature(carrier, [&](const PartialMap& m) {
        return ints_to_key(translation_signature(m, q, /*left=*/false));
      });
    case Relation::Rstar:
      return group_by_signature(carrier, [&](const PartialMap& m) {
        return ints_to_key(translation_signature(m, q, /*left=*/true));
      });
    case Relation::L:
      return group_by_signature(carrier, [&](const PartialMap& m) {
        return maps_to_key(principal_ideal(m, q, /*left=*/true));
      });
    case Relation::R:
      return group_by_signature(carrier, [&](const PartialMap& m) {
        return maps_to_key(principal_ideal(m, q, /*left=*/false));
      });
    default:
      throw DomainError("definitional_partition: unsupported relation");
  }
}

std::vector<std::vector<PartialMap>> definitional_join_partition(
    const ElementSet& carrier) {
  // Union-find over the definitional L and R classes.
  std::vector<PartialMap> elems(carrier.begin(), carrier.end());
  std::unordered_map<PartialMap, std::size_t, PartialMapHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<std::size_t> parent(elems.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  for (Relation rel : {Relation::L, Relation::R}) {
    for (const auto& cls : definitional_partition(carrier, rel)) {
      for (std::size_t j = 1; j < cls.size(); ++j) {
        unite(index.at(cls[0]), index.at(cls[j]));
      }
    }
  }
  std::map<std::size_t, std::vector<PartialMap>> groups;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    groups[find(i)].push_back(elems[i]);
  }
  std::vector<std::vector<PartialMap>> classes;
  for (auto& [root, members] : groups) classes.push_back(std::move(members));
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return canonical_less(a.front(), b.front());
  });
  return classes;
}

int hstar_class_size(const PartialMap& m) {
  if (m.height() < 2) return 1;
  return m.max_image() <= m.min_domain() ? 2 : 1;
}

int hstar_class_size_as_printed(const PartialMap& m) {
  int h = m.height();
  return (2 <= h && h <= (m.n() + 1) / 2) ? 2 : 1;
}

bool is_regular(const PartialMap& m, const ElementSet& carrier) {
  for (const auto& sigma : carrier) {
    if (compose(compose(m, sigma), m) == m) return true;
  }
  return false;
}

StarChainResult star_chain_coincidence(const ElementSet& carrier) {
  // (a,b) in L* o R* o L* depends only on (im a, im b): it holds iff some
  // kernel is realized together with both images. Likewise with the roles
  // swapped for R* o L* o R*. D* is height equality.
  std::map<std::string, std::set<std::string>> kernels_of_image;
  std::map<std::string, std::set<std::string>> images_of_kernel;
  std::map<std::string, int> image_height;
  std::map<std::string, int> kernel_height;
  for (const auto& m : carrier) {
    std::string im = relation_key(Relation::Lstar, m);
    std::string ker = relation_key(Relation::Rstar, m);
    kernels_of_image[im].insert(ker);
    images_of_kernel[ker].insert(im);
    image_height[im] = m.height();
    kernel_height[ker] = m.height();
  }
  auto intersects = [](const std::set<std::string>& a,
                       const std::set<std::string>& b) {
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
      if (*it == *jt) return true;
      if (*it < *jt) ++it; else ++jt;
    }
    return false;
  };
  StarChainResult out;
  out.lrl_equals_dstar = true;
  out.rlr_equals_dstar = true;
  for (const auto& [im1, ker1] : kernels_of_image) {
    for (const auto& [im2, ker2] : kernels_of_image) {
      bool chain = intersects(ker1, ker2);
      bool dstar = image_height[im1] == image_height[im2];
      if (chain != dstar) out.lrl_equals_dstar = false;
    }
  }
  for (const auto& [k1, ims1] : images_of_kernel) {
    for (const auto& [k2, ims2] : images_of_kernel) {
      bool chain = intersects(ims1, ims2);
      bool dstar = kernel_height[k1] == kernel_height[k2];
      if (chain != dstar) out.rlr_equals_dstar = false;
    }
  }
  return out;
}

bool star_chain_witness_holds(const ElementSet& carrier) {
  if (carrier.n() < 3) return false;
  ChainSize n{carrier.n()};
  PartialMap rho(n, {{1, 1}, {2, 2}});
  PartialMap sigma(n, {{2, 2}, {3, 3}});
  PartialMap gamma(n, {{2, 1}, {3, 2}});
  if (!carrier.contains(rho) || !carrier.contains(sigma) ||
      !carrier.contains(gamma)) {
    return false;
  }
  // rho L* gamma R* sigma must hold...
  if (!related(Relation::Lstar, rho, gamma) ||
      !related(Relation::Rstar, gamma, sigma)) {
    return false;
  }
  // ...and no delta gives rho R* delta L* sigma.
  for (const auto& delta : carrier) {
    if (related(Relation::Rstar, rho, delta) &&
        related(Relation::Lstar, delta, sigma)) {
      return false;
    }
  }
  return true;
}

}  // namespace dorp
