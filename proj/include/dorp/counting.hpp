// Exact closed-form counting: Schroder numbers, the F(n,r,p) family and the
// order of the monoid, all in arbitrary precision.

#ifndef DORP_COUNTING_HPP_
#define DORP_COUNTING_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dorp/bigint.hpp"

namespace dorp {

// C(a, b), zero whenever b < 0 or b > a, so every formula below is total.
BigUint binomial(int a, int b);

// Large Schroder numbers: s_0 = 1, s_n = (1/(n+1)) sum C(n+1,n-r) C(n+r,r).
BigUint schroder(int n);

// Antitone decreasing maps of width r and height p: C(r-1,p-1) C(n+1,r+p).
BigUint count_F(int n, int r, int p);

// Fixed height: sum of count_F over the feasible widths.
BigUint count_Fp(int n, int p);

// a_n = sum_{p=2}^{ceil(n/2)} F(n,p).
BigUint count_a(int n);

// |DORP_n| = s_n + a_n.
BigUint order_dorp(int n);

// |E(DORP_n)| = (3^n + 1) / 2.
BigUint count_idempotents_formula(int n);

// sum_{j=k}^{m} C(j,k) C(m+n-j,n) == C(m+n+1,n+k+1).
bool binomial_identity_check(int m, int n, int k);

// Number of R*-classes in J*_p: sum_{r=p}^{n} C(n,r) C(r-1,p-1).
BigUint count_rstar_classes(int n, int p);

// Number of L*-classes in J*_p: C(n,p).
BigUint count_lstar_classes(int n, int p);

// |M(p)| = n - 2p + 2 and the closed form for the total over p.
BigUint count_convex_vitals(int n, int p);
BigUint count_convex_vitals_total(int n);

// A table of named count rows; the CLI's CSV/JSON payload.
struct CountRow {
  int n = 0;
  std::optional<int> r;
  std::optional<int> p;
  BigUint value;
};

struct CountTable {
  std::vector<std::string> columns;  // e.g. {"n", "p", "value"}
  std::vector<CountRow> rows;

  std::string to_csv() const;
  std::string to_json(const std::string& table_name) const;
};

}  // namespace dorp

#endif  // DORP_COUNTING_HPP_
