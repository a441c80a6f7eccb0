#include "dtl/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace dtl {

RingSpec::RingSpec(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.empty() || vars_[0] != "delta")
    throw std::invalid_argument("RingSpec: variable list must start with 'delta'");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j])
        throw std::invalid_argument("RingSpec: duplicate variable " + vars_[i]);
}

int RingSpec::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

RingSpecPtr delta_ring() {
  static RingSpecPtr spec = std::make_shared<RingSpec>(std::vector<std::string>{"delta"});
  return spec;
}

RingSpecPtr contour_ring(int modulus) {
  if (modulus < 1) throw std::invalid_argument("contour_ring: modulus must be >= 1");
  std::vector<std::string> vars{"delta"};
  for (int k = 1; k <= modulus / 2; ++k) vars.push_back("delta_" + std::to_string(k));
  return std::make_shared<RingSpec>(std::move(vars));
}

int gradlex_cmp(const std::vector<int>& a, const std::vector<int>& b) {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

void RingElem::check_same_spec(const RingElem& a, const RingElem& b) {
  if (a.spec_ == b.spec_) return;
  if (a.spec_ && b.spec_ && *a.spec_ == *b.spec_) return;
  throw std::invalid_argument("RingElem: mismatched ring specs");
}

RingElem RingElem::constant(RingSpecPtr spec, Int c) {
  RingElem r(std::move(spec));
  if (c != 0) r.terms_.push_back({std::vector<int>(r.spec_->arity(), 0), std::move(c)});
  return r;
}

RingElem RingElem::monomial(RingSpecPtr spec, std::vector<int> exps, Int coeff) {
  RingElem r(std::move(spec));
  if (exps.size() != r.spec_->arity())
    throw std::invalid_argument("RingElem::monomial: exponent arity mismatch");
  if (coeff != 0) r.terms_.push_back({std::move(exps), std::move(coeff)});
  return r;
}

RingElem RingElem::delta_pow(RingSpecPtr spec, int k) {
  std::vector<int> e(spec->arity(), 0);
  e[0] = k;
  return monomial(std::move(spec), std::move(e), 1);
}

bool RingElem::is_one() const {
  return terms_.size() == 1 && terms_[0].second == 1 &&
         std::all_of(terms_[0].first.begin(), terms_[0].first.end(), [](int e) { return e == 0; });
}

bool RingElem::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_[0].first.begin(), terms_[0].first.end(), [](int e) { return e == 0; });
}

const RingElem::Term& RingElem::leading() const {
  if (terms_.empty()) throw std::domain_error("RingElem::leading: zero element");
  return terms_.front();
}

Int RingElem::content() const {
  Int g = 0;
  for (const auto& t : terms_) g = boost::multiprecision::gcd(g, t.second);
  return g;
}

int RingElem::total_degree() const {
  if (terms_.empty()) return 0;
  return std::accumulate(terms_[0].first.begin(), terms_[0].first.end(), 0);
}

void RingElem::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return gradlex_cmp(a.first, b.first) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& t) { return t.second == 0; }),
            out.end());
  terms_ = std::move(out);
}

RingElem RingElem::operator+(const RingElem& o) const {
  check_same_spec(*this, o);
  RingElem r(spec_ ? spec_ : o.spec_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  // merge two descending term lists
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = gradlex_cmp(terms_[i].first, o.terms_[j].first);
    if (c > 0)
      r.terms_.push_back(terms_[i++]);
    else if (c < 0)
      r.terms_.push_back(o.terms_[j++]);
    else {
      Int s = terms_[i].second + o.terms_[j].second;
      if (s != 0) r.terms_.push_back({terms_[i].first, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

RingElem RingElem::operator-() const {
  RingElem r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
  check_same_spec(*this, o);
  RingElem r(spec_ ? spec_ : o.spec_);
  if (terms_.empty() || o.terms_.empty()) return r;
  std::map<std::vector<int>, Int> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      std::vector<int> e(a.first.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.first[k] + b.first[k];
      acc[std::move(e)] += a.second * b.second;
    }
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.push_back({e, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return gradlex_cmp(a.first, b.first) > 0; });
  return r;
}

RingElem RingElem::scaled(const Int& c) const {
  RingElem r(spec_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

RingElem RingElem::shifted(const std::vector<int>& exps) const {
  RingElem r(spec_);
  r.terms_ = terms_;
  for (auto& t : r.terms_)
    for (std::size_t k = 0; k < exps.size(); ++k) t.first[k] += exps[k];
  return r;
}

bool RingElem::divides(const RingElem& d, RingElem* quot) const {
  if (d.is_zero()) return false;
  check_same_spec(*this, d);
  RingElem rem = *this;
  RingElem q(spec_ ? spec_ : d.spec_);
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    const Term& ld = d.leading();
    if (lr.second % ld.second != 0) return false;
    std::vector<int> e(lr.first.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = lr.first[k] - ld.first[k];
    RingElem t = monomial(rem.spec_, e, lr.second / ld.second);
    q += t;
    RingElem next = rem - t * d;
    // leading term must strictly drop, otherwise division cannot terminate
    if (!next.is_zero() && gradlex_cmp(next.leading().first, lr.first) >= 0) return false;
    rem = std::move(next);
  }
  if (quot) *quot = std::move(q);
  return true;
}

RingElem RingElem::divided_exact(const RingElem& d) const {
  RingElem q;
  if (!divides(d, &q)) throw std::domain_error("RingElem: inexact division");
  return q;
}

bool RingElem::operator<(const RingElem& o) const {
  // structural: compare term lists
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = gradlex_cmp(terms_[i].first, o.terms_[i].first);
    if (c != 0) return c < 0;
    if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
  }
  return terms_.size() < o.terms_.size();
}

namespace {

void print_monomial(std::ostream& os, const RingSpec& spec, const std::vector<int>& e, const Int& c) {
  Int a = c < 0 ? Int(-c) : c;
  bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
  bool printed = false;
  if (a != 1 || !any_var) {
    os << a.str();
    printed = true;
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (printed) os << "*";
    os << spec.var(i);
    if (e[i] != 1) os << "^" << e[i];
    printed = true;
  }
}

}  // namespace

std::string RingElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    print_monomial(os, *spec_, e, c);
  }
  return os.str();
}

namespace {

struct Parser {
  const RingSpec& spec;
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }

  Int parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return Int(s.substr(start, pos - start));
  }

  // one product of integer factors and powered variables
  void parse_term(std::vector<int>& exps, Int& coeff) {
    exps.assign(spec.arity(), 0);
    coeff = 1;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
        coeff *= parse_int();
      } else if (pos < s.size() &&
                 (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
          ++pos;
        std::string name = s.substr(start, pos - start);
        int vi = spec.index_of(name);
        if (vi < 0) fail("unknown variable '" + name + "'");
        int power = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          Int p = parse_int();
          power = static_cast<int>(p.convert_to<long>());
        }
        exps[static_cast<std::size_t>(vi)] += power;
      } else {
        fail("expected coefficient or variable");
      }
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
  }
};

}  // namespace

RingElem RingElem::parse(const RingSpecPtr& spec, const std::string& text) {
  Parser p{*spec, text};
  RingElem out = RingElem::zero(spec);
  p.skip_ws();
  if (p.eof()) throw std::invalid_argument("parse error: empty ring element");
  bool first = true;
  while (!p.eof()) {
    int sign = 1;
    p.skip_ws();
    if (p.s[p.pos] == '+' || p.s[p.pos] == '-') {
      sign = p.s[p.pos] == '-' ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      p.fail("expected '+' or '-'");
    }
    std::vector<int> exps;
    Int coeff;
    p.parse_term(exps, coeff);
    out += RingElem::monomial(spec, std::move(exps), coeff * sign);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------

FracElem::FracElem(RingElem num, RingElem den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("FracElem: zero denominator");
  RingElem::check_same_spec(num_, den_);
  normalize();
}

FracElem::FracElem(RingElem num)
    : num_(std::move(num)), den_(RingElem::one(num_.spec() ? num_.spec() : delta_ring())) {}

FracElem FracElem::zero(const RingSpecPtr& spec) {
  return FracElem(RingElem::zero(spec), RingElem::one(spec));
}

FracElem FracElem::one(const RingSpecPtr& spec) {
  return FracElem(RingElem::one(spec), RingElem::one(spec));
}

void FracElem::normalize() {
  if (num_.is_zero()) {
    den_ = RingElem::one(den_.spec());
    return;
  }
  if (den_.leading().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = boost::multiprecision::gcd(num_.content(), den_.content());
  if (g > 1) {
    RingElem gc = RingElem::constant(num_.spec(), g);
    num_ = num_.divided_exact(gc);
    den_ = den_.divided_exact(gc);
  }
  // cheap exact-quotient reduction; keeps entries small when division happens
  // to be exact (the common case in fraction-free elimination)
  RingElem q;
  if (!den_.is_one() && num_.divides(den_, &q)) {
    num_ = std::move(q);
    den_ = RingElem::one(den_.spec());
  }
}

FracElem FracElem::operator+(const FracElem& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return FracElem(num_ + o.num_, den_);
  return FracElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FracElem FracElem::operator-(const FracElem& o) const { return *this + (-o); }

FracElem FracElem::operator-() const {
  FracElem r(*this);
  r.num_ = -r.num_;
  return r;
}

FracElem FracElem::operator*(const FracElem& o) const {
  if (is_zero() || o.is_zero()) return zero(num_.spec() ? num_.spec() : o.num_.spec());
  return FracElem(num_ * o.num_, den_ * o.den_);
}

FracElem FracElem::operator/(const FracElem& o) const {
  if (o.is_zero()) throw std::domain_error("FracElem: division by zero");
  return FracElem(num_ * o.den_, den_ * o.num_);
}

bool FracElem::operator==(const FracElem& o) const { return (num_ * o.den_) == (o.num_ * den_); }

bool FracElem::is_ring_element(RingElem* value) const {
  if (num_.is_zero()) {
    if (value) *value = num_;
    return true;
  }
  RingElem q;
  if (num_.divides(den_, &q)) {
    if (value) *value = std::move(q);
    return true;
  }
  return false;
}

std::string FracElem::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace dtl
