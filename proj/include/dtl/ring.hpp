#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtl {

using Int = boost::multiprecision::cpp_int;

// Ground ring of exact computations: integer Laurent polynomials in a fixed
// ordered list of variables.  Variable 0 is always "delta"; the contour
// families add trace parameters "delta_1".."delta_k".
class RingSpec {
 public:
  explicit RingSpec(std::vector<std::string> vars);

  std::size_t arity() const { return vars_.size(); }
  const std::string& var(std::size_t i) const { return vars_[i]; }
  const std::vector<std::string>& vars() const { return vars_; }
  int index_of(const std::string& name) const;  // -1 if absent

  bool operator==(const RingSpec& o) const { return vars_ == o.vars_; }

 private:
  std::vector<std::string> vars_;
};

using RingSpecPtr = std::shared_ptr<const RingSpec>;

// Z[delta^{+-1}]
RingSpecPtr delta_ring();
// Z[delta^{+-1}, delta_1^{+-1}, ..., delta_{floor(m/2)}^{+-1}]
RingSpecPtr contour_ring(int modulus);

// Exponent vectors are compared in graded lexicographic order so every
// element has a canonical sorted term list and equality is structural.
int gradlex_cmp(const std::vector<int>& a, const std::vector<int>& b);

class RingElem {
 public:
  using Term = std::pair<std::vector<int>, Int>;

  RingElem() = default;  // zero over the shared delta ring
  explicit RingElem(RingSpecPtr spec) : spec_(std::move(spec)) {}

  static RingElem zero(RingSpecPtr spec) { return RingElem(std::move(spec)); }
  static RingElem constant(RingSpecPtr spec, Int c);
  static RingElem one(RingSpecPtr spec) { return constant(std::move(spec), 1); }
  // coeff * prod var_i^exp_i
  static RingElem monomial(RingSpecPtr spec, std::vector<int> exps, Int coeff);
  // delta^k over the plain delta ring of `spec`
  static RingElem delta_pow(RingSpecPtr spec, int k);

  const RingSpecPtr& spec() const { return spec_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // leading term under graded lex (largest); requires nonzero
  const Term& leading() const;
  Int content() const;  // gcd of coefficients, non-negative
  int total_degree() const;  // of the leading term

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator-() const;
  RingElem operator*(const RingElem& o) const;
  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }
  RingElem scaled(const Int& c) const;
  RingElem shifted(const std::vector<int>& exps) const;  // * monomial

  // Exact division; throws std::domain_error when the division is not exact.
  RingElem divided_exact(const RingElem& d) const;
  bool divides(const RingElem& d, RingElem* quot = nullptr) const;  // d | *this

  bool operator==(const RingElem& o) const { return terms_ == o.terms_; }
  bool operator!=(const RingElem& o) const { return !(*this == o); }
  // structural order (for use as map keys); ring specs must agree
  bool operator<(const RingElem& o) const;

  std::string str() const;
  static RingElem parse(const RingSpecPtr& spec, const std::string& text);

  // fails (throws std::invalid_argument) unless specs are compatible
  static void check_same_spec(const RingElem& a, const RingElem& b);

 private:
  RingSpecPtr spec_;
  std::vector<Term> terms_;  // graded-lex descending, no zero coefficients

  void normalize();
  friend class FracElem;
};

// Quotient of two ring elements; realizes computations over the fraction
// field F.  Normalization: denominator nonzero with positive leading
// coefficient, and numerator/denominator reduced by their joint integer
// content (no multivariate gcd, a canonical nonzero test is all we need).
class FracElem {
 public:
  FracElem() = default;
  FracElem(RingElem num, RingElem den);
  explicit FracElem(RingElem num);

  static FracElem zero(const RingSpecPtr& spec);
  static FracElem one(const RingSpecPtr& spec);

  const RingElem& num() const { return num_; }
  const RingElem& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  FracElem operator+(const FracElem& o) const;
  FracElem operator-(const FracElem& o) const;
  FracElem operator-() const;
  FracElem operator*(const FracElem& o) const;
  FracElem operator/(const FracElem& o) const;
  bool operator==(const FracElem& o) const;
  bool operator!=(const FracElem& o) const { return !(*this == o); }

  // true iff the quotient lies in R itself; the ring value is reported
  bool is_ring_element(RingElem* value = nullptr) const;

  std::string str() const;

 private:
  RingElem num_, den_;
  void normalize();
};

}  // namespace dtl
