#include <doctest.h>

#include <algorithm>
#include <map>

#include "dorp/closure.hpp"
#include "dorp/counting.hpp"
#include "dorp/enumerate.hpp"
#include "dorp/greens.hpp"
#include "dorp/rees.hpp"
#include "dorp/vitals.hpp"

using namespace dorp;

namespace {

PartialMap pm(const std::string& literal) { return PartialMap::parse(literal); }

PartialMap mult(const PartialMap& a, const PartialMap& b) {
  return compose(a, b);
}

std::vector<ReesElement> rees_carrier(int n, int p) {
  std::vector<ReesElement> out;
  out.push_back(ReesElement::zero(ChainSize(n), p));
  for (const auto& m : enumerate_jstar(ChainSize(n), p)) {
    out.push_back(ReesElement::of(m, p));
  }
  return out;
}

}  // namespace

TEST_CASE("vital elements") {
  VitalElement v = vital_of_lstar_class({1, 2}, ChainSize(4));
  CHECK(v.underlying == pm("n=4;2->2,3->1"));
  CHECK(v.convex);
  CHECK(v.extreme);  // i = p = 2

  VitalElement w = vital_of_lstar_class({1, 3}, ChainSize(4));
  CHECK(w.underlying == pm("n=4;3->3,4->1"));
  CHECK(!w.convex);

  CHECK_THROWS_AS(vital_of_lstar_class({2}, ChainSize(4)), DomainError);
  // The class with image {3,4} has no antitone member on [4].
  CHECK_THROWS_AS(vital_of_lstar_class({3, 4}, ChainSize(4)), DomainError);

  CHECK(is_vital(pm("n=4;2->2,3->1")));
  CHECK(is_convex_vital(pm("n=4;2->2,3->1")));
  CHECK(is_vital(pm("n=4;3->3,4->1")));
  CHECK(!is_convex_vital(pm("n=4;3->3,4->1")));
  CHECK(!is_vital(pm("n=4;2->1,3->2")));  // isotone
  CHECK(!is_vital(pm("n=4;1->1")));       // height 1
}

TEST_CASE("convex vitals M(p)") {
  std::vector<VitalElement> m42 = convex_vitals(ChainSize(4), 2);
  REQUIRE(m42.size() == 2);
  CHECK(m42[0].underlying == pm("n=4;2->2,3->1"));
  CHECK(m42[1].underlying == pm("n=4;3->3,4->2"));
  CHECK(m42[0].extreme);
  CHECK(m42[1].extreme);

  std::vector<VitalElement> m53 = convex_vitals(ChainSize(5), 3);
  REQUIRE(m53.size() == 1);
  CHECK(m53[0].underlying == pm("n=5;3->3,4->2,5->1"));
  CHECK(m53[0].extreme);  // odd chain: the two extremes coincide

  CHECK_THROWS_AS(convex_vitals(ChainSize(4), 3), DomainError);

  for (int n = 2; n <= 12; ++n) {
    std::uint64_t total = 0;
    for (int p = 2; p <= (n + 1) / 2; ++p) {
      auto mp = convex_vitals(ChainSize(n), p);
      CHECK(BigUint(mp.size()) == count_convex_vitals(n, p));
      total += mp.size();
    }
    CHECK(BigUint(total) == count_convex_vitals_total(n));
  }
}

TEST_CASE("every vital is antitone injective decreasing with fixed minimum") {
  for (int n = 2; n <= 8; ++n) {
    int vitals = 0;
    for (const auto& m : enumerate_dorp(ChainSize(n))) {
      if (!is_vital(m)) continue;
      ++vitals;
      CHECK(is_antitone(m));
      CHECK(is_decreasing(m));
      CHECK(m.height() == m.width());
      CHECK(m.value(m.min_domain()) == m.min_domain());
    }
    if (n >= 3) CHECK(vitals > 0);
  }
}

TEST_CASE("unique vital per feasible L* class") {
  // Classes whose image tops out too high contain no antitone member and
  // hence no vital element; every other class of band height has exactly one.
  for (int n = 2; n <= 6; ++n) {
    ElementSet dorp_n = enumerate_dorp(ChainSize(n));
    std::map<std::string, std::vector<PartialMap>> by_image;
    for (const auto& m : dorp_n) {
      by_image[relation_key(Relation::Lstar, m)].push_back(m);
    }
    for (const auto& [key, cls] : by_image) {
      int p = cls.front().height();
      if (p < 2 || p > (n + 1) / 2) continue;
      std::vector<int> image = cls.front().image();
      bool feasible = image.back() + p - 1 <= n;
      int vitals = 0, strict_antitones = 0;
      for (const auto& m : cls) {
        vitals += is_vital(m);
        strict_antitones += is_antitone(m) && m.height() >= 2;
      }
      if (feasible) {
        CHECK(vitals == 1);
        CHECK(vital_of_lstar_class(image, ChainSize(n)).underlying ==
              *std::find_if(cls.begin(), cls.end(), is_vital));
      } else {
        CHECK(vitals == 0);
        CHECK(strict_antitones == 0);
      }
    }
  }
}

TEST_CASE("factor injective antitone") {
  FactorizationWord w = factor_injective_antitone(pm("n=5;4->2,5->1"));
  CHECK(w.composed() == pm("n=5;4->2,5->1"));
  CHECK(w.factors.back().tag == FactorTag::Vital);
  CHECK(w.factors.back().map == pm("n=5;2->2,3->1"));

  CHECK(factor_injective_antitone(pm("n=4;3->2,4->1")).composed() ==
        pm("n=4;3->2,4->1"));

  // A vital element factors through itself.
  FactorizationWord v = factor_injective_antitone(pm("n=4;2->2,3->1"));
  CHECK(v.composed() == pm("n=4;2->2,3->1"));
  CHECK(v.factors.back().map == pm("n=4;2->2,3->1"));

  CHECK_THROWS_AS(factor_injective_antitone(pm("n=4;1->1,2->2")), DomainError);
  CHECK_THROWS_AS(factor_injective_antitone(pm("n=4;2->2,3->1,4->1")),
                  DomainError);  // not injective
}

TEST_CASE("factor antitone") {
  PartialMap rho = pm("n=4;2->2,3->1,4->1");
  FactorizationWord w = factor_antitone(rho);
  CHECK(w.composed() == rho);
  for (const auto& f : w.factors) {
    CHECK(in_dorp(f.map));
  }

  PartialMap gap = pm("n=5;2->2,4->1");
  CHECK(factor_antitone(gap).composed() == gap);

  CHECK_THROWS_AS(factor_antitone(pm("n=4;1->1,2->2")), DomainError);
}

TEST_CASE("factorizations recompose exhaustively up to n=5") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& m : enumerate_dorp(ChainSize(n))) {
      if (!is_antitone(m) || m.height() < 2) continue;
      CHECK(factor_antitone(m).composed() == m);
      std::vector<int> dom = m.domain();
      bool convex = dom.back() - dom.front() + 1 == static_cast<int>(dom.size());
      if (m.height() == m.width() && convex) {
        CHECK(factor_injective_antitone(m).composed() == m);
      }
    }
  }
}

TEST_CASE("factor nonconvex vital") {
  PartialMap delta = pm("n=4;3->3,4->1");
  FactorizationWord w = factor_nonconvex_vital(delta);
  CHECK(w.composed() == delta);
  CHECK(w.factors.front().tag == FactorTag::ConvexVital);
  CHECK(w.factors.front().map == pm("n=4;3->3,4->2"));
  for (std::size_t i = 1; i < w.factors.size(); ++i) {
    CHECK(is_idempotent(w.factors[i].map));
  }

  PartialMap big = pm("n=6;4->4,5->2,6->1");
  FactorizationWord wb = factor_nonconvex_vital(big);
  CHECK(wb.composed() == big);
  CHECK(wb.factors.front().map == pm("n=6;4->4,5->3,6->2"));

  CHECK_THROWS_AS(factor_nonconvex_vital(pm("n=4;2->2,3->1")), DomainError);
  CHECK_THROWS_AS(factor_nonconvex_vital(pm("n=4;1->1,2->2")), DomainError);
}

TEST_CASE("deflate convex vital") {
  Deflation d = deflate_convex_vital(ChainSize(5), 2, 3);
  CHECK(d.higher.underlying == pm("n=5;3->3,4->2,5->1"));
  CHECK(d.idempotent == pm("n=5;2->2,3->3,4->4"));
  CHECK(compose(d.higher.underlying, d.idempotent) == pm("n=5;3->3,4->2"));

  Deflation d6 = deflate_convex_vital(ChainSize(6), 2, 4);
  CHECK(compose(d6.higher.underlying, d6.idempotent) ==
        convex_vital(ChainSize(6), 2, 4).underlying);

  CHECK_THROWS_AS(deflate_convex_vital(ChainSize(4), 2, 2), DomainError);
  CHECK_THROWS_AS(deflate_convex_vital(ChainSize(6), 2, 5), DomainError);
}

TEST_CASE("descent between consecutive heights") {
  for (int n = 2; n <= 6; ++n) {
    ElementSet dorp_n = enumerate_dorp(ChainSize(n));
    int c = (n + 1) / 2;
    for (int p = 0; p <= n - 2; ++p) {
      std::vector<PartialMap> gens;
      for (const auto& m : dorp_n) {
        if (m.height() == p + 1) gens.push_back(m);
      }
      if (2 <= p && p <= c) {
        gens.push_back(convex_vital(ChainSize(n), p, p).underlying);
        gens.push_back(convex_vital(ChainSize(n), p, n - p + 1).underlying);
      }
      auto trace =
          closure<PartialMap, PartialMap (*)(const PartialMap&, const PartialMap&),
                  PartialMapHash, CanonicalLess>(gens, &mult, CanonicalLess{});
      for (const auto& m : dorp_n) {
        if (m.height() == p) CHECK(trace.contains(m));
      }
    }
  }
}

TEST_CASE("generating sets") {
  ElementSet w0 = generating_set_W(ChainSize(4), 0);
  REQUIRE(w0.size() == 1);
  CHECK(w0.members().front().empty());

  ElementSet w21 = generating_set_W(ChainSize(2), 1);
  std::vector<std::string> literals;
  for (const auto& m : w21) literals.push_back(m.literal());
  CHECK(literals == std::vector<std::string>{"n=2;1->1", "n=2;1->1,2->1",
                                             "n=2;2->2"});

  CHECK(generating_set_W(ChainSize(4), 2).size() == 19);
  CHECK_THROWS_AS(generating_set_W(ChainSize(4), 4), DomainError);
  CHECK_THROWS_AS(generating_set_G(ChainSize(4), 0), DomainError);

  // Constructed sizes match the closed forms.
  for (int n = 2; n <= 7; ++n) {
    for (int p = 1; p <= n - 1; ++p) {
      CHECK(BigUint(generating_set_G(ChainSize(n), p).size()) ==
            rank_formula(ChainSize(n), RankObject::ReesQuotient, p));
    }
    for (int p = 0; p <= n - 1; ++p) {
      CHECK(BigUint(generating_set_W(ChainSize(n), p).size()) ==
            rank_formula(ChainSize(n), RankObject::Ideal, p));
    }
  }
}

TEST_CASE("W size lemma from its components") {
  // (n-2) + sum C(n,r)C(r-1,p-1) re-derived piece by piece: idempotents of
  // height p, the convex vitals of the band top (n-2c+2 of them, which is
  // where an odd chain's coinciding extremes are absorbed), and a pair of
  // extremes for each height strictly between 1 and the band top.
  for (int n = 2; n <= 10; ++n) {
    int c = (n + 1) / 2;
    for (int p = 2; p <= n - 1; ++p) {
      BigUint sum = count_rstar_classes(n, p);
      int top = std::min(p, c);
      if (top >= 2) sum += count_convex_vitals(n, top);
      if (top >= 3) sum += BigUint(static_cast<std::uint64_t>(2 * (top - 2)));
      CHECK(sum == rank_formula(ChainSize(n), RankObject::Ideal, p));
    }
  }
}

TEST_CASE("rank formulas") {
  CHECK(rank_formula(ChainSize(3), RankObject::Ideal, 1) == BigUint(7));
  CHECK(rank_formula(ChainSize(4), RankObject::ReesQuotient, 2) == BigUint(19));
  CHECK(rank_formula(ChainSize(5), RankObject::Monoid) == BigUint(13));
  CHECK_THROWS_AS(rank_formula(ChainSize(1), RankObject::Monoid), DomainError);
  CHECK_THROWS_AS(rank_formula(ChainSize(4), RankObject::ReesQuotient, 4),
                  DomainError);
}

TEST_CASE("irreducibles by pair scan") {
  auto rmult = [](const ReesElement& a, const ReesElement& b) {
    return rees_product(a, b);
  };
  // RQ_2(1): exactly the three idempotents of height one.
  auto c21 = rees_carrier(2, 1);
  auto irr21 = irreducibles<ReesElement, decltype(rmult), ReesElementHash>(
      c21, rmult);
  CHECK(irr21.size() == 3);

  // RQ_4(2): the extreme convex vital delta_{2,2} admits a nontrivial
  // factorization, so the scan finds 18 of the 19 generators.
  auto c42 = rees_carrier(4, 2);
  auto irr42 = irreducibles<ReesElement, decltype(rmult), ReesElementHash>(
      c42, rmult);
  CHECK(irr42.size() == 18);
  ReesElement d22 = ReesElement::of(pm("n=4;2->2,3->1"), 2);
  CHECK(std::find(irr42.begin(), irr42.end(), d22) == irr42.end());
  // The witness pair behind that factorization.
  ReesElement left = ReesElement::of(pm("n=4;2->2,3->3"), 2);
  ReesElement right = ReesElement::of(pm("n=4;2->2,3->1,4->1"), 2);
  CHECK(rees_product(left, right) == d22);

  // Ideals: the same cluster effect.
  std::vector<PartialMap> i42;
  for (const auto& m : enumerate_ideal(ChainSize(4), 2)) i42.push_back(m);
  CHECK(irreducibles<PartialMap, PartialMap (*)(const PartialMap&, const PartialMap&),
                     PartialMapHash>(i42, &mult)
            .size() == 18);
  std::vector<PartialMap> i43;
  for (const auto& m : enumerate_ideal(ChainSize(4), 3)) i43.push_back(m);
  CHECK(irreducibles<PartialMap, PartialMap (*)(const PartialMap&, const PartialMap&),
                     PartialMapHash>(i43, &mult)
            .size() == 8);

  std::vector<PartialMap> dorp4;
  for (const auto& m : enumerate_dorp(ChainSize(4))) dorp4.push_back(m);
  CHECK(irreducibles<PartialMap, PartialMap (*)(const PartialMap&, const PartialMap&),
                     PartialMapHash>(dorp4, &mult)
            .size() == 9);
}
