#pragma once

#include "dtl/diagram.hpp"
#include "dtl/linalg.hpp"
#include "dtl/ring.hpp"

#include <map>
#include <memory>
#include <unordered_map>

namespace dtl {

// Formal R-linear combination of same-family, same-rank diagrams.
class AlgElem {
 public:
  AlgElem() = default;
  AlgElem(DiagramParams params, RingSpecPtr spec)
      : params_(params), spec_(std::move(spec)) {}
  AlgElem(const Diagram& d, RingSpecPtr spec);

  const DiagramParams& params() const { return params_; }
  const RingSpecPtr& spec() const { return spec_; }
  const std::map<Diagram, RingElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Diagram& d, RingElem coeff);
  AlgElem operator+(const AlgElem& o) const;
  AlgElem operator-(const AlgElem& o) const;
  AlgElem operator-() const;
  AlgElem scaled(const RingElem& c) const;
  bool operator==(const AlgElem& o) const {
    return params_ == o.params_ && terms_ == o.terms_;
  }
  bool operator!=(const AlgElem& o) const { return !(*this == o); }

  std::string str() const;  // sorted (diagram, coefficient) list

 private:
  DiagramParams params_;
  RingSpecPtr spec_;
  std::map<Diagram, RingElem> terms_;
};

// loop factor of one composition: delta^loops, times the label traces
// eps([0]) = 1, eps([k]) = delta_{min(k, m-k)} for contour loops
RingElem loop_factor(const ComposeResult& r, const RingSpecPtr& spec);

AlgElem mul(const AlgElem& a, const AlgElem& b);
AlgElem involute(const AlgElem& a);

// rank n -> n+1 inclusion (partition: level k -> k+1; walled: iota adds a
// strand on the right)
AlgElem iota(const AlgElem& a);
AlgElem iota_left(const AlgElem& a);  // walled: add a strand on the left
// rank n -> n-1 closure; partition dispatches on level parity
AlgElem closure(const AlgElem& a);
AlgElem closure_left(const AlgElem& a);  // walled

DiagramParams iota_params(const DiagramParams& p);
DiagramParams iota_left_params(const DiagramParams& p);
DiagramParams closure_params(const DiagramParams& p);

// normalized trace; identity has trace 1
RingElem trace_eps(const AlgElem& a);
RingElem trace_eps(const Diagram& d, const RingSpecPtr& spec);

// Indexed diagram basis with a product cache.
class AlgebraCtx {
 public:
  AlgebraCtx(DiagramParams params, RingSpecPtr spec);

  const DiagramParams& params() const { return params_; }
  const RingSpecPtr& ring() const { return spec_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Diagram>& basis() const { return basis_; }
  const Diagram& diagram(std::size_t i) const { return basis_[i]; }
  std::size_t index_of(const Diagram& d) const;

  struct MonoProd {
    std::size_t result;
    RingElem coeff;
  };
  const MonoProd& product(std::size_t i, std::size_t j);

  SparseVec to_vec(const AlgElem& a) const;
  AlgElem from_vec(const SparseVec& v) const;
  AlgElem basis_elem(std::size_t i) const;

 private:
  DiagramParams params_;
  RingSpecPtr spec_;
  std::vector<Diagram> basis_;
  std::map<Diagram, std::size_t> index_;
  std::unordered_map<std::uint64_t, MonoProd> cache_;
};

// Reduced echelon span of algebra elements over the fraction field.
class SpanBasis {
 public:
  explicit SpanBasis(std::shared_ptr<AlgebraCtx> ctx)
      : ctx_(std::move(ctx)), space_(ctx_->dim(), ctx_->ring()) {}

  std::shared_ptr<AlgebraCtx> ctx() const { return ctx_; }
  std::size_t rank() const { return space_.rank(); }
  bool insert(const AlgElem& a) { return space_.insert(ctx_->to_vec(a)); }
  bool contains(const AlgElem& a) const { return space_.contains(ctx_->to_vec(a)); }
  // membership where every coordinate lies in R
  bool contains_integrally(const AlgElem& a) const;
  std::optional<std::vector<FracElem>> coordinates(const AlgElem& a) const {
    return space_.coordinates(ctx_->to_vec(a));
  }
  const RowSpace& space() const { return space_; }

 private:
  std::shared_ptr<AlgebraCtx> ctx_;
  RowSpace space_;
};

bool span_equal(const SpanBasis& a, const SpanBasis& b);

// Two-sided ideal generated by `gens`, as a reduced span inside the algebra.
SpanBasis ideal_span(std::shared_ptr<AlgebraCtx> ctx, const std::vector<AlgElem>& gens);
// Span of basis diagrams with at most `r` through strands (propagating blocks).
SpanBasis through_span(std::shared_ptr<AlgebraCtx> ctx, int r);

// Named generators of the algebra (used for exhaustive axiom checks and the
// CLI element grammar).
std::vector<std::pair<std::string, Diagram>> family_generators(const DiagramParams& params);

// e_j / s_j / p_j / a^{(j)}:k / f_j / id by name, e.g. "e1", "s2", "a1:1"
Diagram generator_by_name(const DiagramParams& params, const std::string& name);

}  // namespace dtl
