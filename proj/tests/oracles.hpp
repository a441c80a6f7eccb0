#pragma once

// Test-only oracles, independent of the library implementations they check.

#include "dtl/diagram.hpp"
#include "dtl/linalg.hpp"
#include "dtl/ring.hpp"

#include <random>
#include <vector>

namespace oracle {

// determinant by Laplace cofactor expansion along the first row
inline dtl::RingElem laplace_det(const dtl::Mat& m) {
  using namespace dtl;
  if (m.rows() != m.cols()) throw std::invalid_argument("laplace_det: not square");
  std::size_t n = m.rows();
  if (n == 0) return RingElem::one(m.spec());
  if (n == 1) return m.at(0, 0);
  RingElem det = RingElem::zero(m.spec());
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    Mat minor(n - 1, n - 1, m.spec());
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    RingElem term = m.at(0, j) * laplace_det(minor);
    det = j % 2 == 0 ? det + term : det - term;
  }
  return det;
}

inline long double_factorial(int k) {  // (2n-1)!! for k = 2n-1
  long r = 1;
  for (int i = k; i >= 1; i -= 2) r *= i;
  return r;
}

inline long catalan(int n) {
  long r = 1;
  for (int i = 0; i < n; ++i) r = r * 2 * (2 * i + 1) / (i + 2);
  return r;
}

inline long bell(int n) {
  std::vector<std::vector<long>> tri(static_cast<std::size_t>(n) + 1);
  tri[0] = {1};
  for (int i = 1; i <= n; ++i) {
    tri[static_cast<std::size_t>(i)].push_back(tri[static_cast<std::size_t>(i - 1)].back());
    for (int j = 0; j < i; ++j)
      tri[static_cast<std::size_t>(i)].push_back(
          tri[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
          tri[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]);
  }
  return tri[static_cast<std::size_t>(n)][0];
}

inline long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// sum_k [C(r,k) C(s,k) k!]^2 (r-k)! (s-k)!
inline long walled_count(int r, int s) {
  long total = 0;
  for (int k = 0; k <= std::min(r, s); ++k) {
    long a = binom(r, k) * binom(s, k) * factorial(k);
    total += a * a * factorial(r - k) * factorial(s - k);
  }
  return total;
}

// brute-force filter of rank-(r+s) Brauer diagrams by the wall predicate
inline long walled_filter_count(int r, int s) {
  auto all = dtl::enumerate_diagrams(dtl::DiagramParams::brauer_n(r + s));
  long c = 0;
  for (const auto& d : all) {
    dtl::DiagramParams wp = dtl::DiagramParams::walled_rs(r, s);
    try {
      dtl::Diagram w(wp, d.blocks());
      ++c;
    } catch (const std::invalid_argument&) {
    }
  }
  return c;
}

// independent strand depth: distance to the west face in the dual region
// tree of the chord diagram, computed through explicit region construction
inline int region_tree_depth(const dtl::Diagram& x, std::size_t strand) {
  int n = x.rank();
  auto pos = [&](int v) { return v < n ? v : 3 * n - v - 1; };
  std::vector<std::pair<int, int>> iv;
  for (const auto& b : x.blocks()) {
    int u = pos(b[0]), v = pos(b[1]);
    if (u > v) std::swap(u, v);
    iv.push_back({u, v});
  }
  // region of a point strictly between boundary positions: set of chords
  // containing it; walk from just inside chord `strand` toward the west gap
  // (before position 0), counting chord crossings, trying both sides
  auto crossings_from = [&](double start) {
    int count = 0;
    for (std::size_t j = 0; j < iv.size(); ++j) {
      if (iv[j].first < start && start < iv[j].second) ++count;  // chords separating
    }
    return count;
  };
  double inside = iv[strand].first + 0.5;   // a point just inside the chord
  double outside = iv[strand].second + 0.5; // a point just outside
  // crossing count from a region = number of chords containing the point
  int via_inside = crossings_from(inside);
  int via_outside = crossings_from(outside);
  return 1 + std::min(via_inside - 1, via_outside);
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240817);
  return gen;
}

inline dtl::RingElem random_poly(const dtl::RingSpecPtr& spec, int max_terms = 3,
                                 int max_exp = 2, int max_coeff = 4) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  std::uniform_int_distribution<int> ex(-max_exp, max_exp);
  std::uniform_int_distribution<int> co(-max_coeff, max_coeff);
  dtl::RingElem r = dtl::RingElem::zero(spec);
  int terms = nt(rng());
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(spec->arity());
    for (auto& v : e) v = ex(rng());
    r += dtl::RingElem::monomial(spec, std::move(e), co(rng()));
  }
  return r;
}

}  // namespace oracle
