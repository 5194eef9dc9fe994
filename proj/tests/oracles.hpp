#ifndef MONODROMY_TESTS_ORACLES_HPP
#define MONODROMY_TESTS_ORACLES_HPP

// Independent reference computations for the test suites. Nothing here
// shares code with the library beyond the IntMatrix container.

#include <cstdint>
#include <numeric>
#include <vector>

#include "monodromy/int_matrix.hpp"

namespace oracle
{

using monodromy::linalg::Int;
using monodromy::linalg::IntMatrix;

// Laplace expansion; fine for the tiny matrices the oracles feed it.
inline Int det(std::vector<std::vector<Int>> const &m)
{
  std::size_t n = m.size();
  if (n == 0)
    return 1;
  if (n == 1)
    return m[0][0];
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0)
      continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c)
          row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Int term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start,
                    std::vector<std::size_t> &cur,
                    std::vector<std::vector<std::size_t>> &out)
{
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from gcds of k x k minors.
inline std::vector<Int> invariant_factors(IntMatrix const &a)
{
  std::vector<Int> factors;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(a.rows(), k, 0, cur, rs);
    subsets(a.cols(), k, 0, cur, cs);
    Int g = 0;
    for (auto const &r : rs)
      for (auto const &c : cs) {
        std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            m[i][j] = a(r[i], c[j]);
        g = std::gcd(g, det(m));
      }
    if (g == 0)
      break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

// Rank over the rationals by fraction-free elimination in 128-bit integers.
inline std::size_t rational_rank(IntMatrix const &a)
{
  std::vector<std::vector<__int128>> m(a.rows(), std::vector<__int128>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      m[r][c] = a(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && m[p][c] == 0)
      ++p;
    if (p == a.rows())
      continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (m[r][c] == 0)
        continue;
      __int128 f = m[r][c], g = m[rank][c];
      for (std::size_t k = c; k < a.cols(); ++k)
        m[r][k] = m[r][k] * g - m[rank][k] * f;
      // keep entries small
      __int128 d = 0;
      for (std::size_t k = c; k < a.cols(); ++k) {
        __int128 x = m[r][k] < 0 ? -m[r][k] : m[r][k];
        while (x != 0) {
          __int128 t = d % x;
          d = x;
          x = t;
        }
      }
      if (d > 1)
        for (std::size_t k = c; k < a.cols(); ++k)
          m[r][k] /= d;
    }
    ++rank;
  }
  return rank;
}

// Artin's action of B_n on the free group F_n, generators 1..n, inverses
// negative. Images of the free generators as reduced words; faithful.
using FreeWord = std::vector<int>;

inline FreeWord free_reduce(FreeWord const &w)
{
  FreeWord out;
  for (int c : w) {
    if (!out.empty() && out.back() == -c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

inline std::vector<FreeWord> artin_images(int n, std::vector<int> const &braid)
{
  std::vector<FreeWord> imgs;
  for (int i = 1; i <= n; ++i)
    imgs.push_back({i});
  for (int g : braid) {
    int i = g > 0 ? g : -g;
    auto phi = [&](int x) {
      int a = x > 0 ? x : -x;
      FreeWord r{a};
      if (g > 0 && a == i)
        r = {i, i + 1, -i};
      else if (g > 0 && a == i + 1)
        r = {i};
      else if (g < 0 && a == i)
        r = {i + 1};
      else if (g < 0 && a == i + 1)
        r = {-(i + 1), i, i + 1};
      if (x < 0) {
        FreeWord inv;
        for (auto it = r.rbegin(); it != r.rend(); ++it)
          inv.push_back(-*it);
        return inv;
      }
      return r;
    };
    for (auto &im : imgs) {
      FreeWord next;
      for (int x : im)
        for (int y : phi(x))
          next.push_back(y);
      im = free_reduce(next);
    }
  }
  return imgs;
}

} // namespace oracle

#endif
