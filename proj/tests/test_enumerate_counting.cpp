#include <doctest.h>

#include <algorithm>

#include "dorp/counting.hpp"
#include "dorp/enumerate.hpp"

using namespace dorp;

TEST_CASE("all partial maps") {
  CHECK(enumerate_all_partial_maps(ChainSize(1)).size() == 2);
  CHECK(enumerate_all_partial_maps(ChainSize(2)).size() == 9);
  ElementSet maps = enumerate_all_partial_maps(ChainSize(3));
  CHECK(maps.size() == 64);
  CHECK(std::is_sorted(maps.begin(), maps.end(), CanonicalLess{}));
  CHECK(maps.members().front().literal() == "n=3;");
  // Streaming order agrees with the set's canonical order.
  std::size_t i = 0;
  for_each_partial_map(ChainSize(3), {}, [&](const PartialMap& m) {
    CHECK(m == maps.members()[i++]);
  });
  EnumerationBounds tight;
  tight.oracle = 3;
  CHECK_THROWS_AS(enumerate_all_partial_maps(ChainSize(4), tight),
                  ResourceLimitError);
}

TEST_CASE("direct enumeration equals filtering") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<PartialMap> filtered;
    for_each_partial_map(ChainSize(n), {}, [&](const PartialMap& m) {
      if (in_dorp(m)) filtered.push_back(m);
    });
    CHECK(enumerate_dorp(ChainSize(n)) == ElementSet(filtered));

    std::vector<PartialMap> ls_filtered;
    for_each_partial_map(ChainSize(n), {}, [&](const PartialMap& m) {
      if (is_isotone(m) && is_decreasing(m)) ls_filtered.push_back(m);
    });
    CHECK(enumerate_ls(ChainSize(n)) == ElementSet(ls_filtered));

    std::vector<PartialMap> drp_filtered;
    for_each_partial_map(ChainSize(n), {}, [&](const PartialMap& m) {
      if (is_antitone(m) && is_decreasing(m)) drp_filtered.push_back(m);
    });
    CHECK(enumerate_drp(ChainSize(n)) == ElementSet(drp_filtered));
  }
}

TEST_CASE("known orders") {
  int dorp_sizes[] = {0, 2, 6, 23, 97, 425, 1918};
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_dorp(ChainSize(n)).size() ==
          static_cast<std::size_t>(dorp_sizes[n]));
    CHECK(order_dorp(n) == BigUint(static_cast<std::uint64_t>(dorp_sizes[n])));
    CHECK(BigUint(enumerate_ls(ChainSize(n)).size()) == schroder(n));
  }
  CHECK(order_dorp(7).to_decimal() == "8920");
  CHECK(order_dorp(8).to_decimal() == "42680");
  CHECK(order_dorp(12).to_decimal() == "27364584");
  for (int n = 6; n <= 8; ++n) {
    CHECK(BigUint(enumerate_dorp(ChainSize(n)).size()) == order_dorp(n));
    CHECK(BigUint(enumerate_ls(ChainSize(n)).size()) == schroder(n));
    BigUint drp_formula(1);  // the empty map plus the nonempty heights
    for (int p = 1; p <= (n + 1) / 2; ++p) drp_formula += count_Fp(n, p);
    CHECK(BigUint(enumerate_drp(ChainSize(n)).size()) == drp_formula);
  }
  // The direct enumerator at its default cap.
  CHECK(enumerate_dorp(ChainSize(9)).size() == 209265);
  CHECK_THROWS_AS(enumerate_dorp(ChainSize(10)), ResourceLimitError);
}

TEST_CASE("height-one maps are both isotone and antitone") {
  for (const auto& m : enumerate_dorp(ChainSize(4))) {
    if (m.height() > 1) continue;
    MapClass cls = classify(m);
    CHECK(cls.isotone);
    CHECK(cls.antitone);
  }
}

TEST_CASE("ideal and jstar") {
  ElementSet i21 = enumerate_ideal(ChainSize(2), 1);
  std::vector<std::string> literals;
  for (const auto& m : i21) literals.push_back(m.literal());
  CHECK(literals == std::vector<std::string>{"n=2;", "n=2;1->1", "n=2;1->1,2->1",
                                             "n=2;2->1", "n=2;2->2"});
  for (int n = 1; n <= 5; ++n) {
    ElementSet jn = enumerate_jstar(ChainSize(n), n);
    REQUIRE(jn.size() == 1);
    CHECK(jn.members().front() == PartialMap::identity(ChainSize(n)));
    ElementSet i0 = enumerate_ideal(ChainSize(n), 0);
    REQUIRE(i0.size() == 1);
    CHECK(i0.members().front().empty());
    // I(n,p) is the disjoint union of the J*_q below it.
    for (int p = 0; p <= n; ++p) {
      std::size_t total = 0;
      for (int q = 0; q <= p; ++q) {
        total += enumerate_jstar(ChainSize(n), q).size();
      }
      CHECK(enumerate_ideal(ChainSize(n), p).size() == total);
    }
  }
  CHECK_THROWS_AS(enumerate_ideal(ChainSize(3), 4), DomainError);
}

TEST_CASE("a_n and F values") {
  std::uint64_t a[] = {0, 0, 0, 1, 7, 31, 112, 362, 1094, 3167};
  for (int n = 1; n <= 9; ++n) CHECK(count_a(n) == BigUint(a[n]));
  CHECK(count_F(4, 3, 2) == BigUint(2));
  CHECK(count_F(2, 2, 2).is_zero());
  CHECK(count_F(4, 2, 2) == BigUint(5));
  // F(n,p) vanishes above the reversibility threshold.
  for (int n = 1; n <= 8; ++n) {
    for (int p = (n + 1) / 2 + 1; p <= n; ++p) {
      CHECK(count_Fp(n, p).is_zero());
    }
  }
}

TEST_CASE("F against brute force at small n") {
  for (int n = 1; n <= 5; ++n) {
    ElementSet drp = enumerate_drp(ChainSize(n));
    for (int r = 1; r <= n; ++r) {
      for (int p = 1; p <= n; ++p) {
        std::size_t brute = 0;
        for (const auto& m : drp) {
          if (m.width() == r && m.height() == p) ++brute;
        }
        CHECK(count_F(n, r, p) == BigUint(brute));
      }
    }
    // The union sizes behind the order theorem. The closed forms count
    // nonempty maps, so the empty map accounts for the +1 on each side.
    BigUint fp_sum(0);
    for (int p = 1; p <= (n + 1) / 2; ++p) fp_sum += count_Fp(n, p);
    CHECK(BigUint(drp.size()) == fp_sum + BigUint(1));
    ElementSet ls = enumerate_ls(ChainSize(n));
    std::size_t overlap = 0;
    for (const auto& m : drp) {
      if (ls.contains(m)) ++overlap;
    }
    CHECK(BigUint(overlap) == count_Fp(n, 1) + BigUint(1));
  }
}

TEST_CASE("binomial identity") {
  CHECK(binomial_identity_check(0, 0, 0));
  CHECK(binomial_identity_check(3, 2, 1));
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; n <= 8; ++n) {
      for (int k = 0; k <= 8; ++k) {
        CHECK(binomial_identity_check(m, n, k));
      }
    }
  }
}

TEST_CASE("idempotent counts") {
  std::uint64_t expected[] = {0, 2, 5, 14, 41, 122};
  for (int n = 1; n <= 5; ++n) {
    ElementSet dorp_n = enumerate_dorp(ChainSize(n));
    CHECK(idempotents_of(dorp_n).size() == expected[n]);
    CHECK(count_idempotents_formula(n) == BigUint(expected[n]));
    CHECK(idempotents_of(dorp_n) ==
          idempotents_of(enumerate_ls(ChainSize(n))));
  }
  CHECK(count_idempotents_formula(40).to_decimal() == "6078832729528464401");
}

TEST_CASE("count table serialization") {
  CountTable table;
  table.columns = {"n", "value"};
  table.rows.push_back({4, {}, {}, order_dorp(4)});
  CHECK(table.to_csv() == "n,value\n4,97\n");
  CHECK(table.to_json("order") ==
        "{\"rows\":[{\"n\":4,\"value\":\"97\"}],\"schema\":1,\"table\":\"order\"}");

  CountTable f;
  f.columns = {"n", "r", "p", "value"};
  f.rows.push_back({4, 3, 2, count_F(4, 3, 2)});
  CHECK(f.to_csv() == "n,r,p,value\n4,3,2,2\n");
}

TEST_CASE("class count formulas") {
  CHECK(count_rstar_classes(2, 1) == BigUint(3));
  CHECK(count_lstar_classes(2, 1) == BigUint(2));
  CHECK(count_rstar_classes(4, 2) == BigUint(17));
  CHECK(count_rstar_classes(5, 5) == BigUint(1));
  CHECK(count_lstar_classes(5, 5) == BigUint(1));
}
