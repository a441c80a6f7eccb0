#pragma once

#include "dtl/ring.hpp"

#include <optional>
#include <vector>

namespace dtl {

// Dense row-major matrix of ring elements.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const RingSpecPtr& spec)
      : rows_(rows), cols_(cols), a_(rows * cols, RingElem::zero(spec)), spec_(spec) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingSpecPtr& spec() const { return spec_; }

  RingElem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const RingElem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Mat transposed() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<RingElem> a_;
  RingSpecPtr spec_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, const RingElem& c);
Mat identity_mat(std::size_t n, const RingSpecPtr& spec);
bool is_zero_mat(const Mat& m);

// Fraction-free determinant by Bareiss elimination; divisions are exact.
RingElem bareiss_det(const Mat& m);

// Rank over the fraction field, fraction-free.
std::size_t ff_rank(Mat m);

// Sparse vector over a fixed column index set.
struct SparseVec {
  std::vector<std::pair<std::size_t, RingElem>> entries;  // ascending column order
  void add_term(std::size_t col, RingElem v);
  bool empty() const { return entries.empty(); }
};

// Row space in fraction-free reduced echelon form.  Rows are RingElem
// vectors with pivot columns strictly increasing; each row is normalized by
// integer content and sign.  Rank queries, membership tests and coordinate
// extraction are exact over the fraction field.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols, RingSpecPtr spec)
      : cols_(cols), spec_(std::move(spec)) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const RingSpecPtr& spec() const { return spec_; }

  // Inserts the vector, reducing against the current rows; returns true if
  // it enlarged the space.
  bool insert(SparseVec v);

  // Residue of v after reduction (scaled by a nonzero ring element).
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const;

  // Coordinates of v in terms of the reduced rows; nullopt if not a member.
  std::optional<std::vector<FracElem>> coordinates(const SparseVec& v) const;

  bool same_space(const RowSpace& o) const;

  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t cols_;
  RingSpecPtr spec_;
  std::vector<SparseVec> rows_;      // pivot column ascending
  std::vector<std::size_t> pivots_;  // pivot column of each row
  void back_reduce(std::size_t new_row);
  static void normalize_row(SparseVec& v);
};

// Dense solver over the fraction field: returns x with a*x = b, or nullopt
// when the system is inconsistent; a need not be square (least solution via
// echelon; free variables set to zero).
class FracSolver {
 public:
  explicit FracSolver(const Mat& a);
  std::size_t rank() const { return rank_; }
  // solve for a column vector b (as RingElem entries)
  std::optional<std::vector<FracElem>> solve(const std::vector<RingElem>& b) const;

 private:
  std::size_t rows_, cols_, rank_ = 0;
  RingSpecPtr spec_;
  std::vector<std::vector<FracElem>> red_;  // reduced echelon of [a | I]
  std::vector<std::size_t> pivots_;
};

}  // namespace dtl
