#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "ditri/simplex.hpp"

namespace ditri {

struct IdentityViolation {
  std::string family;   // one of the keys listed in identity_families()
  std::string simplex;  // the simplex the identity failed on
  int i = 0;
  int j = 0;
  std::string detail;
};

struct IdentityReport {
  std::size_t simplices_checked = 0;
  std::size_t checks = 0;
  bool budget_exhausted = false;
  std::vector<IdentityViolation> violations;

  bool ok() const { return violations.empty(); }
};

inline const std::vector<std::string>& identity_families() {
  static const std::vector<std::string> names{
      "d_i d_j = d_{j-1} d_i (i<j)",
      "s_i s_{j-1} = s_j s_i (i<j)",
      "d_i s_j = s_{j-1} d_i (i<j)",
      "d_i s_j = s_j d_{i-1} (i>j+1)",
      "d_i s_i = d_{i+1} s_i = id",
  };
  return names;
}

inline constexpr std::size_t unlimited_budget = std::numeric_limits<std::size_t>::max();

/// Checks all five identity families on every simplex (degenerate ones
/// included) of dimension <= max_dim, stopping after `budget` simplices.
template <EnumerableSimplicialSet S>
IdentityReport verify_identities(const S& s, int max_dim, std::size_t budget = unlimited_budget) {
  using X = simplex_t<S>;
  IdentityReport report;
  const auto& fam = identity_families();

  auto check = [&](const X& x, int family, int i, int j, auto&& lhs, auto&& rhs) {
    ++report.checks;
    std::string detail;
    try {
      const X l = lhs();
      const X r = rhs();
      if (l == r) return;
      detail = simplex_name(s, l) + " != " + simplex_name(s, r);
    } catch (const Error& e) {
      detail = e.what();
    }
    report.violations.push_back(
        IdentityViolation{fam[static_cast<std::size_t>(family)], simplex_name(s, x), i, j, detail});
  };

  const int top = std::min(max_dim, s.max_dim());
  for (int k = 0; k <= top; ++k) {
    for (const auto& c0 : s.cells(k)) {
      const typename S::cell_type c(c0);
      for (int m = k; m <= max_dim; ++m) {
        for (const X& x : degeneracies_of(c, k, m)) {
          if (report.simplices_checked >= budget) {
            report.budget_exhausted = true;
            return report;
          }
          ++report.simplices_checked;
          for (int j = 0; j <= m; ++j)
            for (int i = 0; i < j; ++i)
              if (m >= 2)
                check(x, 0, i, j, [&] { return face(s, face(s, x, j), i); },
                      [&] { return face(s, face(s, x, i), j - 1); });
          for (int j = 1; j <= m + 1; ++j)
            for (int i = 0; i < j; ++i)
              check(x, 1, i, j, [&] { return degeneracy(degeneracy(x, j - 1), i); },
                    [&] { return degeneracy(degeneracy(x, i), j); });
          for (int j = 0; j <= m; ++j) {
            for (int i = 0; i <= m + 1; ++i) {
              if (i < j && m >= 1)
                check(x, 2, i, j, [&] { return face(s, degeneracy(x, j), i); },
                      [&] { return degeneracy(face(s, x, i), j - 1); });
              if (i > j + 1 && m >= 1)
                check(x, 3, i, j, [&] { return face(s, degeneracy(x, j), i); },
                      [&] { return degeneracy(face(s, x, i - 1), j); });
            }
            check(x, 4, j, j, [&] { return face(s, degeneracy(x, j), j); }, [&] { return x; });
            check(x, 4, j + 1, j, [&] { return face(s, degeneracy(x, j), j + 1); },
                  [&] { return x; });
          }
        }
      }
    }
  }
  return report;
}

}  // namespace ditri
