#include <doctest.h>

#include <algorithm>

#include "dorp/closure.hpp"
#include "dorp/enumerate.hpp"
#include "dorp/rees.hpp"
#include "dorp/vitals.hpp"

using namespace dorp;

namespace {

PartialMap pm(const std::string& literal) { return PartialMap::parse(literal); }

PartialMap mult(const PartialMap& a, const PartialMap& b) {
  return compose(a, b);
}

using MapTrace = GenerationTrace<PartialMap, PartialMapHash>;

MapTrace close_maps(const std::vector<PartialMap>& gens,
                    const ClosureOptions& opts = {}) {
  return closure<PartialMap, PartialMap (*)(const PartialMap&, const PartialMap&),
                 PartialMapHash, CanonicalLess>(gens, &mult, CanonicalLess{},
                                                opts);
}

std::vector<PartialMap> members_of(const ElementSet& set) {
  return {set.begin(), set.end()};
}

}  // namespace

TEST_CASE("closure basics") {
  PartialMap id = PartialMap::identity(ChainSize(3));
  MapTrace trivial = close_maps({id});
  CHECK(trivial.members == std::vector<PartialMap>{id});

  // The idempotents of height one on [2] generate all of I(2,1).
  ElementSet e1 = idempotents_of(enumerate_jstar(ChainSize(2), 1));
  REQUIRE(e1.size() == 3);
  MapTrace trace = close_maps(members_of(e1));
  CHECK(ElementSet(trace.members) == enumerate_ideal(ChainSize(2), 1));
}

TEST_CASE("word recovery") {
  ElementSet e1 = idempotents_of(enumerate_jstar(ChainSize(2), 1));
  MapTrace trace = close_maps(members_of(e1));

  PartialMap gen = pm("n=2;2->2");
  CHECK(word_for(gen, trace) == std::vector<PartialMap>{gen});

  std::vector<PartialMap> empty_word = word_for(pm("n=2;"), trace);
  CHECK(empty_word.size() == 2);
  CHECK(compose(empty_word[0], empty_word[1]) == pm("n=2;"));

  std::vector<PartialMap> w = word_for(pm("n=2;2->1"), trace);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == pm("n=2;2->2"));
  CHECK(w[1] == pm("n=2;1->1,2->1"));

  CHECK_THROWS_AS(word_for(PartialMap::identity(ChainSize(2)), trace),
                  NotGeneratedError);

  // Every recovered word recomposes to its element.
  ElementSet w32 = generating_set_W(ChainSize(3), 2);
  MapTrace t32 = close_maps(members_of(w32));
  for (const auto& m : t32.members) {
    std::vector<PartialMap> word = word_for(m, t32);
    PartialMap prod = word.front();
    for (std::size_t i = 1; i < word.size(); ++i) prod = compose(prod, word[i]);
    CHECK(prod == m);
  }
}

TEST_CASE("closure is idempotent and monotone as an operator") {
  ElementSet dorp3 = enumerate_dorp(ChainSize(3));
  std::vector<PartialMap> gens = {pm("n=3;2->2,3->1"), pm("n=3;1->1,2->1"),
                                  pm("n=3;3->3")};
  MapTrace once = close_maps(gens);
  MapTrace twice = close_maps(once.members);
  CHECK(once.members == twice.members);

  std::vector<PartialMap> more = gens;
  more.push_back(pm("n=3;1->1,2->2"));
  MapTrace larger = close_maps(more);
  for (const auto& m : once.members) {
    CHECK(larger.contains(m));
  }
}

TEST_CASE("closure report JSON") {
  ElementSet e1 = idempotents_of(enumerate_jstar(ChainSize(2), 1));
  MapTrace trace = close_maps(members_of(e1));
  CHECK(closure_report_json(trace) ==
        "{\"capped\":false,\"closure_size\":5,\"generator_count\":3,"
        "\"rounds\":2}");
}

TEST_CASE("closure cap") {
  ElementSet w = generating_set_W(ChainSize(4), 3);
  ClosureOptions opts;
  opts.cap = 10;
  CHECK_THROWS_AS(close_maps(members_of(w), opts), ResourceLimitError);
}

TEST_CASE("thread count does not change the trace") {
  ElementSet w = generating_set_W(ChainSize(4), 3);
  ClosureOptions seq;
  ClosureOptions par;
  par.jobs = 3;
  MapTrace a = close_maps(members_of(w), seq);
  MapTrace b = close_maps(members_of(w), par);
  CHECK(a.members == b.members);
  for (const auto& m : a.members) {
    if (a.parents.count(m) == 0) {
      CHECK(b.parents.count(m) == 0);
    } else {
      CHECK(a.parents.at(m) == b.parents.at(m));
    }
  }
}

TEST_CASE("rees product") {
  ChainSize n{4};
  int p = 2;
  ReesElement zero = ReesElement::zero(n, p);
  ReesElement d22 = ReesElement::of(pm("n=4;2->2,3->1"), p);
  ReesElement e = ReesElement::of(pm("n=4;1->1,2->2"), p);
  CHECK(rees_product(zero, d22) == zero);
  CHECK(rees_product(d22, zero) == zero);
  CHECK(rees_product(d22, d22) == zero);      // height drops to 1
  CHECK(rees_product(e, e) == e);             // idempotent stays
  CHECK_THROWS_AS(ReesElement::of(pm("n=4;1->1"), 2), DomainError);
  CHECK_THROWS_AS(rees_product(d22, ReesElement::zero(n, 3)), DomainError);
}

TEST_CASE("rees product is associative") {
  for (int n = 2; n <= 4; ++n) {
    for (int p = 1; p <= n - 1; ++p) {
      std::vector<ReesElement> carrier;
      carrier.push_back(ReesElement::zero(ChainSize(n), p));
      for (const auto& m : enumerate_jstar(ChainSize(n), p)) {
        carrier.push_back(ReesElement::of(m, p));
      }
      for (const auto& a : carrier) {
        for (const auto& b : carrier) {
          ReesElement ab = rees_product(a, b);
          for (const auto& c : carrier) {
            CHECK(rees_product(ab, c) == rees_product(a, rees_product(b, c)));
          }
        }
      }
    }
  }
}

TEST_CASE("is_generating") {
  auto rmult = [](const ReesElement& a, const ReesElement& b) {
    return rees_product(a, b);
  };
  ChainSize n{4};
  int p = 2;
  std::vector<ReesElement> carrier;
  carrier.push_back(ReesElement::zero(n, p));
  for (const auto& m : enumerate_jstar(n, p)) {
    carrier.push_back(ReesElement::of(m, p));
  }
  std::vector<ReesElement> gens;
  for (const auto& m : generating_set_G(n, p)) {
    gens.push_back(ReesElement::of(m, p));
  }
  bool full = is_generating<ReesElement, decltype(rmult), ReesElementHash,
                            ReesCanonicalLess>(gens, carrier, rmult,
                                               ReesCanonicalLess{});
  CHECK(full);

  // Dropping the extreme convex vital delta_{2,2} loses its whole cluster.
  ReesElement d22 = ReesElement::of(pm("n=4;2->2,3->1"), p);
  std::vector<ReesElement> without;
  for (const auto& g : gens) {
    if (g != d22) without.push_back(g);
  }
  CHECK(!(is_generating<ReesElement, decltype(rmult), ReesElementHash,
                        ReesCanonicalLess>(without, carrier, rmult,
                                           ReesCanonicalLess{})));

  ElementSet dorp2 = enumerate_dorp(ChainSize(2));
  std::vector<PartialMap> only_id = {PartialMap::identity(ChainSize(2))};
  CHECK(!(is_generating<PartialMap, PartialMap (*)(const PartialMap&, const PartialMap&),
                        PartialMapHash, CanonicalLess>(
      only_id, members_of(dorp2), &mult, CanonicalLess{})));
}
