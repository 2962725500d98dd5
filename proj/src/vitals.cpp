#include "dorp/vitals.hpp"

#include <algorithm>

#include "dorp/closure.hpp"
#include "dorp/counting.hpp"
#include "dorp/enumerate.hpp"

namespace dorp {

namespace {

int ceil_half(int n) { return (n + 1) / 2; }

VitalElement make_vital(ChainSize n, const std::vector<int>& image) {
  int p = static_cast<int>(image.size());
  int yp = image.back();
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < p; ++j) {
    pairs.emplace_back(yp + j, image[static_cast<std::size_t>(p - 1 - j)]);
  }
  VitalElement out{PartialMap(n, pairs), image, false, false};
  out.convex = image.front() == yp - p + 1;
  out.extreme = out.convex && (yp == p || yp == n.n - p + 1);
  return out;
}

}  // namespace

bool is_vital(const PartialMap& m) {
  int p = m.height();
  if (p < 2 || p > ceil_half(m.n())) return false;
  if (m.width() != p) return false;
  std::vector<int> image = m.image();
  int yp = image.back();
  if (yp + p - 1 > m.n()) return false;
  for (int j = 0; j < p; ++j) {
    int x = yp + j;
    if (!m.defined(x) || m.value(x) != image[static_cast<std::size_t>(p - 1 - j)]) {
      return false;
    }
  }
  return true;
}

bool is_convex_vital(const PartialMap& m) {
  if (!is_vital(m)) return false;
  std::vector<int> image = m.image();
  return image.front() == image.back() - static_cast<int>(image.size()) + 1;
}

VitalElement vital_of_lstar_class(const std::vector<int>& image, ChainSize n) {
  std::vector<int> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  int p = static_cast<int>(sorted.size());
  if (p < 2 || p > ceil_half(n.n)) {
    throw DomainError("vital elements have height in [2, ceil(n/2)]");
  }
  if (sorted.front() < 1 || sorted.back() + p - 1 > n.n) {
    throw DomainError("no vital element has image {" +
                      std::to_string(sorted.front()) + ",...," +
                      std::to_string(sorted.back()) + "} on a chain of size " +
                      std::to_string(n.n));
  }
  return make_vital(n, sorted);
}

VitalElement convex_vital(ChainSize n, int p, int i) {
  if (p < 2 || p > ceil_half(n.n)) {
    throw DomainError("convex vitals have height in [2, ceil(n/2)]");
  }
  if (i < p || i > n.n - p + 1) {
    throw DomainError("convex vital index i must satisfy p <= i <= n-p+1");
  }
  std::vector<int> image;
  for (int v = i - p + 1; v <= i; ++v) image.push_back(v);
  return make_vital(n, image);
}

std::vector<VitalElement> convex_vitals(ChainSize n, int p) {
  if (p < 2 || p > ceil_half(n.n)) {
    throw DomainError("convex vitals have height in [2, ceil(n/2)]");
  }
  std::vector<VitalElement> out;
  for (int i = p; i <= n.n - p + 1; ++i) out.push_back(convex_vital(n, p, i));
  return out;
}

PartialMap FactorizationWord::composed() const {
  if (factors.empty()) {
    throw DomainError("cannot compose an empty word");
  }
  PartialMap out = factors.front().map;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    out = compose(out, factors[i].map);
  }
  return out;
}

FactorizationWord factor_injective_antitone(const PartialMap& rho) {
  if (!in_dorp(rho) || !is_antitone(rho) || rho.height() < 2 ||
      rho.height() != rho.width()) {
    throw DomainError("expected an injective antitone map of height >= 2");
  }
  int p = rho.height();
  int t = rho.min_domain();
  std::vector<int> dom = rho.domain();
  if (dom.back() != t + p - 1) {
    throw DomainError("expected a convex domain");
  }
  std::vector<int> a = rho.image();  // a_1 < ... < a_p
  int ap = a.back();
  ChainSize n{rho.n()};

  FactorizationWord word;
  // Identity on the domain.
  word.factors.push_back({PartialMap::identity_on(n, dom), FactorTag::Idempotent});
  // eps_i walks the domain leftwards onto a_p, a_p+1, ...
  for (int i = 1; i <= p; ++i) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j <= i - 2; ++j) pairs.emplace_back(ap + j, ap + j);
    pairs.emplace_back(ap + i - 1, ap + i - 1);
    if (t + i - 1 != ap + i - 1) pairs.emplace_back(t + i - 1, ap + i - 1);
    for (int j = i; j <= p - 1; ++j) pairs.emplace_back(t + j, t + j);
    std::sort(pairs.begin(), pairs.end());
    word.factors.push_back({PartialMap(n, pairs), FactorTag::Idempotent});
  }
  // The unique vital element of the L*-class.
  word.factors.push_back(
      {vital_of_lstar_class(a, n).underlying, FactorTag::Vital});
  return word;
}

FactorizationWord factor_antitone(const PartialMap& rho) {
  if (!in_dorp(rho) || !is_antitone(rho) || rho.height() < 2) {
    throw DomainError("expected an antitone map of height >= 2");
  }
  ChainSize n{rho.n()};
  KernelDecomposition kd = rho.kernel_decomposition();
  int p = kd.height();
  std::vector<int> t;  // block minima t_1 < ... < t_p
  t.reserve(static_cast<std::size_t>(p));
  for (const auto& block : kd.blocks) t.push_back(block.front());
  std::vector<int> a = rho.image();

  FactorizationWord word;
  // Kernel idempotent: each block onto its minimum.
  {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < kd.blocks.size(); ++i) {
      for (int x : kd.blocks[i]) pairs.emplace_back(x, t[i]);
    }
    std::sort(pairs.begin(), pairs.end());
    word.factors.push_back({PartialMap(n, pairs), FactorTag::Idempotent});
  }
  // xi_i collapses {t_1 + i, ..., t_{i+1}} onto t_1 + i.
  for (int i = 1; i <= p - 1; ++i) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j <= i - 1; ++j) pairs.emplace_back(t[0] + j, t[0] + j);
    for (int x = t[0] + i; x <= t[static_cast<std::size_t>(i)]; ++x) {
      pairs.emplace_back(x, t[0] + i);
    }
    for (int j = i + 1; j <= p - 1; ++j) {
      pairs.emplace_back(t[static_cast<std::size_t>(j)],
                         t[static_cast<std::size_t>(j)]);
    }
    std::sort(pairs.begin(), pairs.end());
    word.factors.push_back({PartialMap(n, pairs), FactorTag::Idempotent});
  }
  // The injective companion on the convex run starting at t_1.
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < p; ++j) {
    pairs.emplace_back(t[0] + j, a[static_cast<std::size_t>(p - 1 - j)]);
  }
  FactorizationWord tail = factor_injective_antitone(PartialMap(n, pairs));
  word.factors.insert(word.factors.end(), tail.factors.begin(),
                      tail.factors.end());
  return word;
}

FactorizationWord factor_nonconvex_vital(const PartialMap& delta) {
  if (!is_vital(delta)) {
    throw DomainError("expected a vital element");
  }
  if (is_convex_vital(delta)) {
    throw DomainError("expected a non-convex vital element");
  }
  ChainSize n{delta.n()};
  std::vector<int> y = delta.image();
  int p = static_cast<int>(y.size());
  int yp = y.back();

  FactorizationWord word;
  word.factors.push_back(
      {convex_vital(n, p, yp).underlying, FactorTag::ConvexVital});
  // gamma: y_p - p + k -> y_k, an injective decreasing isotone map.
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= p; ++k) {
    pairs.emplace_back(yp - p + k, y[static_cast<std::size_t>(k - 1)]);
  }
  PartialMap gamma(n, pairs);
  // Expand gamma over the idempotents of I(n,p) by word recovery.
  ElementSet idem = idempotents_of(enumerate_ideal(n, p));
  std::vector<PartialMap> gens(idem.begin(), idem.end());
  auto trace = closure<PartialMap, PartialMap (*)(const PartialMap&, const PartialMap&),
                       PartialMapHash, CanonicalLess>(
      gens, &compose, CanonicalLess{});
  for (const PartialMap& e : word_for(gamma, trace)) {
    word.factors.push_back({e, FactorTag::Idempotent});
  }
  return word;
}

Deflation deflate_convex_vital(ChainSize n, int p, int i) {
  if (p < 2 || p > ceil_half(n.n) - 1) {
    throw DomainError("deflation needs 2 <= p <= ceil(n/2) - 1");
  }
  if (i == p || i == n.n - p + 1) {
    throw DomainError("extreme convex vital delta_{" + std::to_string(p) +
                      "," + std::to_string(i) +
                      "} has no higher-height factorization");
  }
  if (i < p || i > n.n - p + 1) {
    throw DomainError("convex vital index i must satisfy p <= i <= n-p+1");
  }
  Deflation out{convex_vital(n, p + 1, i), PartialMap(n)};
  std::vector<int> run;
  for (int x = i - p + 1; x <= i + 1; ++x) run.push_back(x);
  out.idempotent = PartialMap::identity_on(n, run);
  return out;
}

namespace {

std::vector<PartialMap> idempotents_of_height(ChainSize n, int p) {
  ElementSet jstar = enumerate_jstar(n, p);
  std::vector<PartialMap> out;
  for (const auto& m : jstar) {
    if (is_idempotent(m)) out.push_back(m);
  }
  return out;
}

}  // namespace

ElementSet generating_set_G(ChainSize n, int p) {
  if (p < 1 || p > n.n) {
    throw DomainError("G(p) needs 1 <= p <= n");
  }
  std::vector<PartialMap> members = idempotents_of_height(n, p);
  if (2 <= p && p <= ceil_half(n.n)) {
    for (const auto& v : convex_vitals(n, p)) members.push_back(v.underlying);
  }
  return ElementSet(std::move(members));
}

ElementSet generating_set_W(ChainSize n, int p) {
  if (p < 0 || p > n.n - 1) {
    throw DomainError("W(p) needs 0 <= p <= n-1");
  }
  int c = ceil_half(n.n);
  std::vector<PartialMap> members;
  if (p <= 1) {
    members = idempotents_of_height(n, p);
    return ElementSet(std::move(members));
  }
  int extremes_up_to;  // heights 2..extremes_up_to contribute their extremes
  if (p <= c) {
    for (const auto& m : generating_set_G(n, p)) members.push_back(m);
    extremes_up_to = p - 1;
  } else {
    members = idempotents_of_height(n, p);
    for (const auto& v : convex_vitals(n, c)) members.push_back(v.underlying);
    extremes_up_to = c - 1;
  }
  for (int i = 2; i <= extremes_up_to; ++i) {
    members.push_back(convex_vital(n, i, i).underlying);
    members.push_back(convex_vital(n, i, n.n - i + 1).underlying);
  }
  return ElementSet(std::move(members));
}

BigUint rank_formula(ChainSize n, RankObject object, int p) {
  switch (object) {
    case RankObject::ReesQuotient: {
      if (p < 1 || p > n.n - 1) {
        throw DomainError("rank RQ_p(n) needs 1 <= p <= n-1");
      }
      BigUint base = count_rstar_classes(n.n, p);
      if (2 <= p && p <= ceil_half(n.n)) {
        return BigUint(static_cast<std::uint64_t>(n.n - 2 * p + 2)) + base;
      }
      return base;
    }
    case RankObject::Ideal: {
      if (p < 0 || p > n.n - 1) {
        throw DomainError("rank I(n,p) needs 0 <= p <= n-1");
      }
      if (p == 0) return BigUint(1);
      if (p == 1) return pow_u(2, static_cast<unsigned>(n.n)) - BigUint(1);
      return BigUint(static_cast<std::uint64_t>(n.n - 2)) +
             count_rstar_classes(n.n, p);
    }
    case RankObject::Monoid: {
      if (n.n < 2) {
        throw DomainError(
            "rank of the monoid is exposed for n >= 2 only; DORP_1 needs "
            "both of its elements");
      }
      return BigUint(static_cast<std::uint64_t>(3 * n.n - 2));
    }
  }
  throw DomainError("unknown rank object");
}

}  // namespace dorp
