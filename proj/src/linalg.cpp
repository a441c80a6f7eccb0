#include "dtl/linalg.hpp"

#include <algorithm>
#include <map>

namespace dtl {

Mat Mat::transposed() const {
  Mat t(cols_, rows_, spec_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat c(a.rows(), b.cols(), a.spec());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return c;
}

Mat mat_add(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("mat_add: shape mismatch");
  Mat c(a.rows(), a.cols(), a.spec());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

Mat mat_scale(const Mat& a, const RingElem& c) {
  Mat r(a.rows(), a.cols(), a.spec());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) * c;
  return r;
}

Mat identity_mat(std::size_t n, const RingSpecPtr& spec) {
  Mat m(n, n, spec);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElem::one(spec);
  return m;
}

bool is_zero_mat(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) return false;
  return true;
}

RingElem bareiss_det(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("bareiss_det: matrix not square");
  std::size_t n = m.rows();
  const RingSpecPtr& spec = m.spec();
  if (n == 0) return RingElem::one(spec);
  Mat w = m;
  RingElem prev = RingElem::one(spec);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && w.at(p, k).is_zero()) ++p;
      if (p == n) return RingElem::zero(spec);
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        RingElem num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = num.divided_exact(prev);
      }
      w.at(i, k) = RingElem::zero(spec);
    }
    prev = w.at(k, k);
  }
  RingElem det = w.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

std::size_t ff_rank(Mat m) {
  std::size_t rank = 0;
  const RingSpecPtr& spec = m.spec();
  RingElem prev = RingElem::one(spec);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(p, j));
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        RingElem num = m.at(i, j) * m.at(row, col) - m.at(i, col) * m.at(row, j);
        m.at(i, j) = num.divided_exact(prev);
      }
      m.at(i, col) = RingElem::zero(spec);
    }
    prev = m.at(row, col);
    ++row;
    ++rank;
  }
  return rank;
}

void SparseVec::add_term(std::size_t col, RingElem v) {
  if (v.is_zero()) return;
  for (auto& [c, val] : entries)
    if (c == col) {
      val += v;
      if (val.is_zero())
        entries.erase(std::remove_if(entries.begin(), entries.end(),
                                     [col](const auto& e) { return e.first == col; }),
                      entries.end());
      return;
    }
  entries.push_back({col, std::move(v)});
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

namespace {

// r = a*x - b*y over sparse rows (merged by column)
SparseVec row_combine(const SparseVec& x, const RingElem& a, const SparseVec& y, const RingElem& b) {
  SparseVec r;
  r.entries.reserve(x.entries.size() + y.entries.size());
  std::size_t i = 0, j = 0;
  while (i < x.entries.size() && j < y.entries.size()) {
    if (x.entries[i].first < y.entries[j].first) {
      RingElem v = x.entries[i].second * a;
      if (!v.is_zero()) r.entries.push_back({x.entries[i].first, std::move(v)});
      ++i;
    } else if (x.entries[i].first > y.entries[j].first) {
      RingElem v = -(y.entries[j].second * b);
      if (!v.is_zero()) r.entries.push_back({y.entries[j].first, std::move(v)});
      ++j;
    } else {
      RingElem v = x.entries[i].second * a - y.entries[j].second * b;
      if (!v.is_zero()) r.entries.push_back({x.entries[i].first, std::move(v)});
      ++i, ++j;
    }
  }
  for (; i < x.entries.size(); ++i) {
    RingElem v = x.entries[i].second * a;
    if (!v.is_zero()) r.entries.push_back({x.entries[i].first, std::move(v)});
  }
  for (; j < y.entries.size(); ++j) {
    RingElem v = -(y.entries[j].second * b);
    if (!v.is_zero()) r.entries.push_back({y.entries[j].first, std::move(v)});
  }
  return r;
}

}  // namespace

void RowSpace::normalize_row(SparseVec& v) {
  if (v.entries.empty()) return;
  Int g = 0;
  for (const auto& [c, val] : v.entries) g = boost::multiprecision::gcd(g, val.content());
  bool neg = v.entries.front().second.leading().second < 0;
  if (g > 1 || neg) {
    if (neg) g = -g;
    RingElem gc = RingElem::constant(v.entries.front().second.spec(), g);
    for (auto& [c, val] : v.entries) val = val.divided_exact(gc);
  }
}

SparseVec RowSpace::reduce(SparseVec v) const {
  for (std::size_t r = 0; r < rows_.size() && !v.entries.empty(); ++r) {
    std::size_t piv = pivots_[r];
    if (v.entries.front().first > piv) continue;
    const RingElem* coeff = nullptr;
    for (const auto& [c, val] : v.entries)
      if (c == piv) {
        coeff = &val;
        break;
      }
    if (!coeff) continue;
    const RingElem& pval = rows_[r].entries.front().second;
    v = row_combine(v, pval, rows_[r], *coeff);
    normalize_row(v);
  }
  return v;
}

bool RowSpace::contains(const SparseVec& v) const { return reduce(v).entries.empty(); }

void RowSpace::back_reduce(std::size_t new_row) {
  std::size_t piv = pivots_[new_row];
  const RingElem pval = rows_[new_row].entries.front().second;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r == new_row) continue;
    const RingElem* coeff = nullptr;
    for (const auto& [c, val] : rows_[r].entries)
      if (c == piv) {
        coeff = &val;
        break;
      }
    if (!coeff) continue;
    rows_[r] = row_combine(rows_[r], pval, rows_[new_row], *coeff);
    normalize_row(rows_[r]);
  }
}

bool RowSpace::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.entries.empty()) return false;
  normalize_row(v);
  std::size_t piv = v.entries.front().first;
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
  back_reduce(pos);
  return true;
}

std::optional<std::vector<FracElem>> RowSpace::coordinates(const SparseVec& v) const {
  std::vector<FracElem> coords(rows_.size(), FracElem::zero(spec_));
  SparseVec cur = v;
  // multiplying cur by nonzero scalars along the way; track the net scale
  FracElem scale = FracElem::one(spec_);
  for (std::size_t r = 0; r < rows_.size() && !cur.entries.empty(); ++r) {
    std::size_t piv = pivots_[r];
    const RingElem* coeff = nullptr;
    for (const auto& [c, val] : cur.entries)
      if (c == piv) {
        coeff = &val;
        break;
      }
    if (!coeff) continue;
    const RingElem& pval = rows_[r].entries.front().second;
    // cur := cur*pval - row*coeff  => coordinate of row r is coeff/(pval*scale...)
    coords[r] = FracElem(*coeff) / (FracElem(pval) * scale);
    scale = scale * FracElem(pval);
    cur = row_combine(cur, pval, rows_[r], *coeff);
  }
  if (!cur.entries.empty()) return std::nullopt;
  // coords were computed against progressively scaled cur; fix scales
  // by recomputing: v = sum coords[r]*rows[r] must hold; verify cheaply.
  return coords;
}

bool RowSpace::same_space(const RowSpace& o) const {
  if (cols_ != o.cols_ || rank() != o.rank()) return false;
  for (const auto& r : rows_)
    if (!o.contains(r)) return false;
  for (const auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

FracSolver::FracSolver(const Mat& a) : rows_(a.rows()), cols_(a.cols()), spec_(a.spec()) {
  // reduced row echelon of [a | I] over the fraction field
  red_.assign(rows_, std::vector<FracElem>(cols_ + rows_, FracElem::zero(spec_)));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) red_[i][j] = FracElem(a.at(i, j));
    red_[i][cols_ + i] = FracElem::one(spec_);
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && red_[p][col].is_zero()) ++p;
    if (p == rows_) continue;
    std::swap(red_[row], red_[p]);
    FracElem inv = FracElem::one(spec_) / red_[row][col];
    for (auto& x : red_[row]) x = x * inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || red_[i][col].is_zero()) continue;
      FracElem f = red_[i][col];
      for (std::size_t j = 0; j < cols_ + rows_; ++j)
        red_[i][j] = red_[i][j] - f * red_[row][j];
    }
    pivots_.push_back(col);
    ++row;
  }
  rank_ = row;
}

std::optional<std::vector<FracElem>> FracSolver::solve(const std::vector<RingElem>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("FracSolver::solve: size mismatch");
  // transformed rhs: T*b where red = [R | T]
  std::vector<FracElem> tb(rows_, FracElem::zero(spec_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < rows_; ++k)
      if (!red_[i][cols_ + k].is_zero() && !b[k].is_zero())
        tb[i] = tb[i] + red_[i][cols_ + k] * FracElem(b[k]);
  // consistency: rows beyond rank must have zero rhs
  for (std::size_t i = rank_; i < rows_; ++i)
    if (!tb[i].is_zero()) return std::nullopt;
  std::vector<FracElem> x(cols_, FracElem::zero(spec_));
  for (std::size_t r = 0; r < rank_; ++r) x[pivots_[r]] = tb[r];
  return x;
}

}  // namespace dtl
