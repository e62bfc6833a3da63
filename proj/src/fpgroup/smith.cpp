#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "lat34/fpgroup.hpp"

namespace lat34 {

std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::int64_t> diag;
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Pivot: nonzero entry of least absolute value in the remaining block.
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) break;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        std::int64_t q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        std::int64_t q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (m[t][t] == 0) break;
    diag.push_back(std::llabs(m[t][t]));
  }
  for (std::size_t k = diag.size(); k < std::min(rows, cols); ++k) diag.push_back(0);
  return diag;
}

std::vector<std::int64_t> abelianization(const Presentation& pres) {
  const int n = pres.generator_count();
  std::vector<std::vector<std::int64_t>> m;
  for (const Word& r : pres.relators()) {
    std::vector<std::int64_t> row(n, 0);
    for (Letter l : r.letters()) row[generator_of(l)] += l > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  std::vector<std::int64_t> factors;
  std::vector<std::int64_t> diag = m.empty() ? std::vector<std::int64_t>{} : smith_diagonal(m);
  std::size_t nonzero = 0;
  for (std::int64_t d : diag) {
    if (d != 0) {
      ++nonzero;
      if (d != 1) factors.push_back(d);
    }
  }
  std::sort(factors.begin(), factors.end());
  for (std::size_t k = nonzero; k < static_cast<std::size_t>(n); ++k) factors.push_back(0);
  return factors;
}

}  // namespace lat34
