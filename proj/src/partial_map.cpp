#include "dorp/partial_map.hpp"

#include <algorithm>
#include <cstring>

namespace dorp {

namespace {

// Writes the literal into buf (must hold >= 8 + 7*kMaxChain bytes).
int format_literal(const PartialMap& m, char* buf) {
  int pos = 0;
  auto put_int = [&](int v) {
    char tmp[4];
    int len = 0;
    do {
      tmp[len++] = static_cast<char>('0' + v % 10);
      v /= 10;
    } while (v != 0);
    while (len-- > 0) buf[pos++] = tmp[len];
  };
  buf[pos++] = 'n';
  buf[pos++] = '=';
  put_int(m.n());
  buf[pos++] = ';';
  bool first = true;
  for (int x = 1; x <= m.n(); ++x) {
    if (!m.defined(x)) continue;
    if (!first) buf[pos++] = ',';
    first = false;
    put_int(x);
    buf[pos++] = '-';
    buf[pos++] = '>';
    put_int(m.value(x));
  }
  return pos;
}

}  // namespace

std::string PartialMap::literal() const {
  char buf[8 + 7 * kMaxChain];
  int len = format_literal(*this, buf);
  return std::string(buf, static_cast<std::size_t>(len));
}

bool canonical_less(const PartialMap& a, const PartialMap& b) {
  char ba[8 + 7 * kMaxChain];
  char bb[8 + 7 * kMaxChain];
  int la = format_literal(a, ba);
  int lb = format_literal(b, bb);
  int cmp = std::memcmp(ba, bb, static_cast<std::size_t>(std::min(la, lb)));
  if (cmp != 0) return cmp < 0;
  return la < lb;
}

PartialMap PartialMap::parse(const std::string& literal) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad map literal \"" + literal + "\": " + why);
  };
  auto read_int = [&]() {
    if (pos >= literal.size() || literal[pos] < '0' || literal[pos] > '9') {
      throw fail("expected digit at offset " + std::to_string(pos));
    }
    int v = 0;
    while (pos < literal.size() && literal[pos] >= '0' && literal[pos] <= '9') {
      v = v * 10 + (literal[pos] - '0');
      if (v > 1000) throw fail("number too large");
      ++pos;
    }
    return v;
  };
  if (literal.rfind("n=", 0) != 0) throw fail("must start with \"n=\"");
  pos = 2;
  int n = read_int();
  if (n < 1 || n > kMaxChain) throw fail("chain size out of range");
  if (pos >= literal.size() || literal[pos] != ';') throw fail("expected ';'");
  ++pos;
  PartialMap out{ChainSize(n)};
  int prev_src = 0;
  while (pos < literal.size()) {
    if (prev_src != 0) {
      if (literal[pos] != ',') throw fail("expected ','");
      ++pos;
    }
    int src = read_int();
    if (src <= prev_src) throw fail("sources must be strictly increasing");
    if (pos + 1 >= literal.size() || literal[pos] != '-' ||
        literal[pos + 1] != '>') {
      throw fail("expected \"->\"");
    }
    pos += 2;
    int dst = read_int();
    if (src > n || dst < 1 || dst > n) throw fail("point outside chain");
    out.set(src, dst);
    prev_src = src;
  }
  return out;
}

std::size_t PartialMap::hash() const {
  // FNV-1a over n and the assignment table.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ull;
  };
  mix(n_);
  for (int i = 0; i < n_; ++i) mix(assignment_[i]);
  return static_cast<std::size_t>(h);
}

bool PartialMap::empty() const {
  for (int i = 0; i < n_; ++i) {
    if (assignment_[i] != 0) return false;
  }
  return true;
}

int PartialMap::width() const {
  int w = 0;
  for (int i = 0; i < n_; ++i) w += assignment_[i] != 0;
  return w;
}

int PartialMap::height() const {
  bool seen[kMaxChain + 1] = {};
  int h = 0;
  for (int i = 0; i < n_; ++i) {
    int v = assignment_[i];
    if (v != 0 && !seen[v]) {
      seen[v] = true;
      ++h;
    }
  }
  return h;
}

std::vector<int> PartialMap::domain() const {
  std::vector<int> d;
  for (int x = 1; x <= n_; ++x) {
    if (defined(x)) d.push_back(x);
  }
  return d;
}

std::vector<int> PartialMap::image() const {
  bool seen[kMaxChain + 1] = {};
  for (int i = 0; i < n_; ++i) {
    if (assignment_[i] != 0) seen[assignment_[i]] = true;
  }
  std::vector<int> im;
  for (int v = 1; v <= n_; ++v) {
    if (seen[v]) im.push_back(v);
  }
  return im;
}

std::vector<int> PartialMap::fixed_points() const {
  std::vector<int> f;
  for (int x = 1; x <= n_; ++x) {
    if (defined(x) && value(x) == x) f.push_back(x);
  }
  return f;
}

int PartialMap::min_domain() const {
  for (int x = 1; x <= n_; ++x) {
    if (defined(x)) return x;
  }
  return 0;
}

int PartialMap::max_image() const {
  int best = 0;
  for (int x = 1; x <= n_; ++x) {
    if (defined(x)) best = std::max(best, value(x));
  }
  return best;
}

KernelDecomposition PartialMap::kernel_decomposition() const {
  // Group the domain by image value, then order blocks by their minimum.
  // Equal-image points need not be consecutive for arbitrary maps, so the
  // grouping cannot assume convexity.
  KernelDecomposition out;
  std::vector<int> block_of_image(n_ + 1, -1);
  for (int x = 1; x <= n_; ++x) {
    if (!defined(x)) continue;
    int v = value(x);
    if (block_of_image[v] == -1) {
      block_of_image[v] = static_cast<int>(out.blocks.size());
      out.blocks.emplace_back();
      out.images.push_back(v);
    }
    out.blocks[static_cast<std::size_t>(block_of_image[v])].push_back(x);
  }
  // Order blocks by their minimum element.
  std::vector<std::size_t> order(out.blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return out.blocks[i].front() < out.blocks[j].front();
  });
  KernelDecomposition sorted;
  for (std::size_t i : order) {
    sorted.blocks.push_back(std::move(out.blocks[i]));
    sorted.images.push_back(out.images[i]);
  }
  return sorted;
}

PartialMap compose(const PartialMap& a, const PartialMap& b) {
  if (a.n() != b.n()) {
    throw SizeMismatchError("compose: chain sizes " + std::to_string(a.n()) +
                            " and " + std::to_string(b.n()) + " differ");
  }
  PartialMap out{ChainSize(a.n())};
  for (int i = 0; i < a.n_; ++i) {
    std::uint8_t mid = a.assignment_[i];
    if (mid != 0) out.assignment_[i] = b.assignment_[mid - 1];
  }
  return out;
}

bool is_isotone(const PartialMap& m) {
  int prev = 0;
  for (int x = 1; x <= m.n(); ++x) {
    if (!m.defined(x)) continue;
    if (prev != 0 && m.value(x) < prev) return false;
    prev = m.value(x);
  }
  return true;
}

bool is_antitone(const PartialMap& m) {
  int prev = 0;
  bool first = true;
  for (int x = 1; x <= m.n(); ++x) {
    if (!m.defined(x)) continue;
    if (!first && m.value(x) > prev) return false;
    prev = m.value(x);
    first = false;
  }
  return true;
}

bool is_decreasing(const PartialMap& m) {
  for (int x = 1; x <= m.n(); ++x) {
    if (m.defined(x) && m.value(x) > x) return false;
  }
  return true;
}

MapClass classify(const PartialMap& m) {
  return MapClass{is_isotone(m), is_antitone(m), is_decreasing(m)};
}

bool in_dorp(const PartialMap& m) {
  return is_decreasing(m) && (is_isotone(m) || is_antitone(m));
}

bool is_idempotent(const PartialMap& m) { return compose(m, m) == m; }

std::optional<PartialMap> reverse(const PartialMap& m) {
  if (!in_dorp(m)) {
    throw DomainError("reverse: map " + m.literal() + " is not in DORP_n");
  }
  KernelDecomposition kd = m.kernel_decomposition();
  int p = kd.height();
  if (p <= 1) return m;  // reversal of a single column is itself
  std::vector<int> images = kd.images;
  std::sort(images.begin(), images.end());
  // Reversible iff a_p <= min A_1 (the height bound follows automatically).
  if (images.back() > kd.blocks.front().front()) return std::nullopt;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < p; ++i) {
    int old_rank =
        static_cast<int>(std::lower_bound(images.begin(), images.end(),
                                          kd.images[static_cast<std::size_t>(
                                              i)]) -
                         images.begin());
    int new_image = images[static_cast<std::size_t>(p - 1 - old_rank)];
    for (int x : kd.blocks[static_cast<std::size_t>(i)]) {
      pairs.emplace_back(x, new_image);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return PartialMap(ChainSize(m.n()), pairs);
}

PartialMap inverse_witness(const PartialMap& m) {
  if (!in_dorp(m)) {
    throw DomainError("inverse_witness: map " + m.literal() +
                      " is not in DORP_n");
  }
  KernelDecomposition kd = m.kernel_decomposition();
  int p = kd.height();
  if (p == 0) return m;  // empty map is its own witness
  // With c_i = min A_i, the witness sends the image carried by block i back
  // to c_i; that matches both the isotone and the antitone construction.
  std::vector<int> mins;
  mins.reserve(static_cast<std::size_t>(p));
  for (const auto& block : kd.blocks) mins.push_back(block.front());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < p; ++i) {
    pairs.emplace_back(kd.images[static_cast<std::size_t>(i)],
                       mins[static_cast<std::size_t>(i)]);
  }
  std::sort(pairs.begin(), pairs.end());
  return PartialMap(ChainSize(m.n()), pairs);
}

}  // namespace dorp
