#include "dtl/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace dtl {

AlgElem::AlgElem(const Diagram& d, RingSpecPtr spec)
    : params_(d.params()), spec_(std::move(spec)) {
  terms_[d] = RingElem::one(spec_);
}

void AlgElem::add_term(const Diagram& d, RingElem coeff) {
  if (d.params() != params_) throw std::invalid_argument("AlgElem: diagram tag mismatch");
  if (coeff.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
  if (params_ != o.params_) throw std::invalid_argument("AlgElem: tag mismatch");
  AlgElem r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, c);
  return r;
}

AlgElem AlgElem::operator-(const AlgElem& o) const { return *this + (-o); }

AlgElem AlgElem::operator-() const {
  AlgElem r = *this;
  for (auto& [d, c] : r.terms_) c = -c;
  return r;
}

AlgElem AlgElem::scaled(const RingElem& c) const {
  AlgElem r(params_, spec_);
  if (c.is_zero()) return r;
  for (const auto& [d, v] : terms_) r.terms_[d] = v * c;
  return r;
}

std::string AlgElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*" << d.str();
    first = false;
  }
  return os.str();
}

RingElem loop_factor(const ComposeResult& r, const RingSpecPtr& spec) {
  RingElem f = RingElem::delta_pow(spec, r.loops);
  int m = r.diagram.params().modulus;
  for (int label : r.loop_labels) {
    if (label == 0) continue;
    int k = std::min(label, m - label);
    int vi = spec->index_of("delta_" + std::to_string(k));
    if (vi < 0) throw std::logic_error("loop_factor: missing trace variable");
    std::vector<int> e(spec->arity(), 0);
    e[static_cast<std::size_t>(vi)] = 1;
    f = f * RingElem::monomial(spec, std::move(e), 1);
  }
  return f;
}

AlgElem mul(const AlgElem& a, const AlgElem& b) {
  if (a.params() != b.params()) throw std::invalid_argument("mul: tag mismatch");
  AlgElem r(a.params(), a.spec());
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) {
      ComposeResult cr = compose(da, db);
      r.add_term(cr.diagram, ca * cb * loop_factor(cr, a.spec()));
    }
  return r;
}

AlgElem involute(const AlgElem& a) {
  AlgElem r(a.params(), a.spec());
  for (const auto& [d, c] : a.terms()) r.add_term(involute(d), c);
  return r;
}

DiagramParams iota_params(const DiagramParams& p) {
  DiagramParams q = p;
  switch (p.family) {
    case Family::brauer:
    case Family::tl:
    case Family::contour:
      ++q.rank;
      break;
    case Family::walled:
      ++q.rank;  // adds a right column
      break;
    case Family::partition:
      if (p.odd_level) {
        q.odd_level = false;  // X'_n inside X_n, same points
      } else {
        ++q.rank;
        q.odd_level = true;
      }
      break;
  }
  return q;
}

DiagramParams iota_left_params(const DiagramParams& p) {
  if (p.family != Family::walled) throw std::invalid_argument("iota_left: walled only");
  DiagramParams q = p;
  ++q.rank;
  ++q.wall;
  return q;
}

DiagramParams closure_params(const DiagramParams& p) {
  DiagramParams q = p;
  switch (p.family) {
    case Family::brauer:
    case Family::tl:
    case Family::contour:
    case Family::walled:
      if (p.rank == 0) throw std::invalid_argument("closure: rank 0");
      --q.rank;
      break;
    case Family::partition:
      if (p.partition_level() == 0) throw std::invalid_argument("closure: level 0");
      if (p.odd_level) {
        --q.rank;
        q.odd_level = false;
      } else {
        q.odd_level = true;  // X_n -> X'_n
      }
      break;
  }
  return q;
}

namespace {

Diagram iota_diagram(const Diagram& d, const DiagramParams& q) {
  int n = d.rank();
  if (d.params().family == Family::partition && d.params().odd_level)
    return Diagram(q, d.blocks(), d.labels());
  // reindex bottoms and add the new strand
  std::vector<std::vector<int>> blocks;
  for (const auto& b : d.blocks()) {
    std::vector<int> nb;
    for (int v : b) nb.push_back(v < n ? v : v + 1);
    blocks.push_back(std::move(nb));
  }
  blocks.push_back({n, 2 * n + 1});
  std::vector<int> labels = d.labels();
  if (!labels.empty()) labels.push_back(0);
  return Diagram(q, std::move(blocks), std::move(labels));
}

}  // namespace

AlgElem iota(const AlgElem& a) {
  DiagramParams q = iota_params(a.params());
  AlgElem r(q, a.spec());
  for (const auto& [d, c] : a.terms()) r.add_term(iota_diagram(d, q), c);
  return r;
}

AlgElem iota_left(const AlgElem& a) {
  DiagramParams q = iota_left_params(a.params());
  AlgElem r(q, a.spec());
  int n = a.params().rank;
  for (const auto& [d, c] : a.terms()) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : d.blocks()) {
      std::vector<int> nb;
      for (int v : b) nb.push_back(v < n ? v + 1 : v + 2);
      blocks.push_back(std::move(nb));
    }
    blocks.push_back({0, n + 1});
    r.add_term(Diagram(q, std::move(blocks)), c);
  }
  return r;
}

namespace {

// close the rightmost column of a matching diagram
void closure_matching_term(const Diagram& d, const RingElem& c, AlgElem& out,
                           const RingSpecPtr& spec, const DiagramParams& q) {
  int n = d.rank();
  auto p = d.partners();
  int m = d.params().modulus;
  auto norm = [m](int l) { return m > 0 ? ((l % m) + m) % m : 0; };
  RingElem coeff = c;
  std::vector<std::vector<int>> blocks;
  std::vector<int> labels;
  int tn = n - 1, bn = 2 * n - 1;
  if (p[tn] == bn) {
    // closing forms a loop
    ComposeResult fake;
    fake.loops = 1;
    if (d.params().family == Family::contour) fake.loop_labels.push_back(norm(d.strand_label_at(tn)));
    fake.diagram = d;
    coeff = coeff * loop_factor(fake, spec);
    for (std::size_t i = 0; i < d.blocks().size(); ++i) {
      const auto& b = d.blocks()[i];
      if (b[0] == tn || b[1] == bn || b[0] == bn) continue;
      std::vector<int> nb;
      for (int v : b) nb.push_back(v < n ? v : v - 1);
      blocks.push_back(std::move(nb));
      if (!d.labels().empty()) labels.push_back(d.labels()[i]);
    }
  } else {
    // join the partners of T_n and B_n
    int u = p[tn], v = p[bn];
    int label = d.strand_label_at(tn) + d.strand_label_at(bn);
    for (std::size_t i = 0; i < d.blocks().size(); ++i) {
      const auto& b = d.blocks()[i];
      if (b[0] == tn || b[1] == tn || b[0] == bn || b[1] == bn) continue;
      std::vector<int> nb;
      for (int w : b) nb.push_back(w < n ? w : w - 1);
      blocks.push_back(std::move(nb));
      if (!d.labels().empty()) labels.push_back(d.labels()[i]);
    }
    std::vector<int> nb{u < n ? u : u - 1, v < n ? v : v - 1};
    blocks.push_back(std::move(nb));
    if (!d.labels().empty()) labels.push_back(norm(label));
  }
  if (d.params().family != Family::contour) labels.clear();
  out.add_term(Diagram(q, std::move(blocks), std::move(labels)), coeff);
}

}  // namespace

AlgElem closure(const AlgElem& a) {
  DiagramParams q = closure_params(a.params());
  AlgElem r(q, a.spec());
  int n = a.params().rank;
  if (a.params().family == Family::partition) {
    if (!a.params().odd_level) {
      // merge the blocks containing T_n and B_n
      for (const auto& [d, c] : a.terms()) {
        std::vector<std::vector<int>> blocks = d.blocks();
        std::size_t bi = blocks.size(), bj = blocks.size();
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          if (std::find(blocks[i].begin(), blocks[i].end(), n - 1) != blocks[i].end()) bi = i;
          if (std::find(blocks[i].begin(), blocks[i].end(), 2 * n - 1) != blocks[i].end()) bj = i;
        }
        if (bi != bj) {
          blocks[bi].insert(blocks[bi].end(), blocks[bj].begin(), blocks[bj].end());
          blocks.erase(blocks.begin() + static_cast<long>(bj));
        }
        r.add_term(Diagram(q, std::move(blocks)), c);
      }
    } else {
      // remove {T_n,B_n} with a delta, or intersect blocks with the rest
      for (const auto& [d, c] : a.terms()) {
        std::vector<std::vector<int>> blocks;
        bool pure_pair = false;
        for (const auto& b : d.blocks()) {
          if (b.size() == 2 && b[0] == n - 1 && b[1] == 2 * n - 1) {
            pure_pair = true;
            continue;
          }
          std::vector<int> nb;
          for (int v : b) {
            if (v == n - 1 || v == 2 * n - 1) continue;
            nb.push_back(v < n ? v : v - 1);
          }
          if (!nb.empty()) blocks.push_back(std::move(nb));
        }
        RingElem coeff = pure_pair ? c * RingElem::delta_pow(a.spec(), 1) : c;
        r.add_term(Diagram(q, std::move(blocks)), coeff);
      }
    }
    return r;
  }
  for (const auto& [d, c] : a.terms()) closure_matching_term(d, c, r, a.spec(), q);
  return r;
}

namespace {

AlgElem mirror_elem(const AlgElem& a) {
  DiagramParams q = a.params();
  if (q.family == Family::walled) q.wall = q.rank - q.wall;
  AlgElem r(q, a.spec());
  for (const auto& [d, c] : a.terms()) r.add_term(mirror(d), c);
  return r;
}

}  // namespace

AlgElem closure_left(const AlgElem& a) {
  if (a.params().family != Family::walled)
    throw std::invalid_argument("closure_left: walled only");
  return mirror_elem(closure(mirror_elem(a)));
}

RingElem trace_eps(const Diagram& d, const RingSpecPtr& spec) {
  int n = d.rank();
  if (d.params().family == Family::partition) {
    // components of the closure graph
    std::vector<int> parent(2 * n);
    for (int i = 0; i < 2 * n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& b : d.blocks())
      for (std::size_t i = 1; i < b.size(); ++i) parent[find(b[0])] = find(b[i]);
    for (int i = 0; i < n; ++i) parent[find(i)] = find(n + i);
    std::set<int> roots;
    for (int i = 0; i < 2 * n; ++i) roots.insert(find(i));
    int c = static_cast<int>(roots.size());
    return RingElem::delta_pow(spec, c - n);
  }
  // matchings: walk closed components of the full closure
  auto p = d.partners();
  std::vector<bool> seen(2 * n, false);
  int loops = 0;
  RingElem f = RingElem::one(spec);
  int m = d.params().modulus;
  for (int v = 0; v < 2 * n; ++v) {
    if (seen[v]) continue;
    int label = 0, cur = v;
    do {
      seen[cur] = true;
      label += d.strand_label_at(cur);
      int w = p[cur];
      seen[w] = true;
      cur = w < n ? w + n : w - n;  // closure arc T_i - B_i
    } while (cur != v);
    ++loops;
    if (m > 0) {
      int l = ((label % m) + m) % m;
      if (l != 0) {
        int k = std::min(l, m - l);
        int vi = spec->index_of("delta_" + std::to_string(k));
        std::vector<int> e(spec->arity(), 0);
        e[static_cast<std::size_t>(vi)] = 1;
        f = f * RingElem::monomial(spec, std::move(e), 1);
      }
    }
  }
  return f * RingElem::delta_pow(spec, loops - n);
}

RingElem trace_eps(const AlgElem& a) {
  RingElem t = RingElem::zero(a.spec());
  for (const auto& [d, c] : a.terms()) t += c * trace_eps(d, a.spec());
  return t;
}

AlgebraCtx::AlgebraCtx(DiagramParams params, RingSpecPtr spec)
    : params_(params), spec_(std::move(spec)), basis_(enumerate_diagrams(params)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
}

std::size_t AlgebraCtx::index_of(const Diagram& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) throw std::invalid_argument("AlgebraCtx: diagram not in basis");
  return it->second;
}

const AlgebraCtx::MonoProd& AlgebraCtx::product(std::size_t i, std::size_t j) {
  std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | j;
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  ComposeResult cr = compose(basis_[i], basis_[j]);
  MonoProd mp{index_of(cr.diagram), loop_factor(cr, spec_)};
  return cache_.emplace(key, std::move(mp)).first->second;
}

SparseVec AlgebraCtx::to_vec(const AlgElem& a) const {
  if (a.params() != params_) throw std::invalid_argument("AlgebraCtx::to_vec: tag mismatch");
  SparseVec v;
  for (const auto& [d, c] : a.terms()) v.entries.push_back({index_of(d), c});
  std::sort(v.entries.begin(), v.entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

AlgElem AlgebraCtx::from_vec(const SparseVec& v) const {
  AlgElem a(params_, spec_);
  for (const auto& [i, c] : v.entries) a.add_term(basis_[i], c);
  return a;
}

AlgElem AlgebraCtx::basis_elem(std::size_t i) const { return AlgElem(basis_[i], spec_); }

bool SpanBasis::contains_integrally(const AlgElem& a) const {
  auto coords = coordinates(a);
  if (!coords) return false;
  for (const auto& c : *coords)
    if (!c.is_ring_element()) return false;
  return true;
}

bool span_equal(const SpanBasis& a, const SpanBasis& b) {
  return a.space().same_space(b.space());
}

SpanBasis ideal_span(std::shared_ptr<AlgebraCtx> ctx, const std::vector<AlgElem>& gens) {
  SpanBasis span(ctx);
  std::size_t n = ctx->dim();
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < n; ++i) {
      AlgElem xg = mul(ctx->basis_elem(i), g);
      for (std::size_t j = 0; j < n; ++j) span.insert(mul(xg, ctx->basis_elem(j)));
    }
  }
  return span;
}

SpanBasis through_span(std::shared_ptr<AlgebraCtx> ctx, int r) {
  SpanBasis span(ctx);
  for (std::size_t i = 0; i < ctx->dim(); ++i)
    if (through_count(ctx->diagram(i)) <= r) span.insert(ctx->basis_elem(i));
  return span;
}

std::vector<std::pair<std::string, Diagram>> family_generators(const DiagramParams& params) {
  std::vector<std::pair<std::string, Diagram>> out;
  int n = params.rank;
  switch (params.family) {
    case Family::brauer:
      for (int j = 1; j < n; ++j) out.push_back({"e" + std::to_string(j), e_diagram(params, j)});
      for (int j = 1; j < n; ++j) out.push_back({"s" + std::to_string(j), s_diagram(params, j)});
      break;
    case Family::tl:
      for (int j = 1; j < n; ++j) out.push_back({"e" + std::to_string(j), e_diagram(params, j)});
      break;
    case Family::walled: {
      int r = params.wall;
      for (int j = 1; j < n; ++j)
        if (j != r) out.push_back({"s" + std::to_string(j), s_diagram(params, j)});
      if (r >= 1 && n > r)
        out.push_back({"g", walled_e_diagram(params, r, r + 1)});
      break;
    }
    case Family::partition: {
      int level = params.partition_level();
      int smax = params.odd_level ? n - 2 : n - 1;
      for (int j = 1; j <= smax; ++j)
        out.push_back({"s" + std::to_string(j), s_diagram(params, j)});
      for (int k = 1; k < level; ++k)
        out.push_back({"p" + std::to_string(k), p_diagram(params, k)});
      break;
    }
    case Family::contour: {
      for (int j = 1; j < n; ++j) out.push_back({"e" + std::to_string(j), e_diagram(params, j)});
      int dmax = std::min(params.depth, n);
      for (int j = 1; j <= dmax; ++j)
        out.push_back({"a" + std::to_string(j) + ":1", contour_label_diagram(params, j, 1)});
      break;
    }
  }
  return out;
}

Diagram generator_by_name(const DiagramParams& params, const std::string& name) {
  if (name == "id") return identity_diagram(params);
  if (name.size() >= 2) {
    char kind = name[0];
    std::string rest = name.substr(1);
    if (kind == 'a') {
      auto colon = rest.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("generator 'a' needs a label: a<i>:<k>");
      int j = std::stoi(rest.substr(0, colon));
      int k = std::stoi(rest.substr(colon + 1));
      return contour_label_diagram(params, j, k);
    }
    int j = std::stoi(rest);
    switch (kind) {
      case 'e':
        return e_diagram(params, j);
      case 's':
        return s_diagram(params, j);
      case 'p':
        return p_diagram(params, j);
      case 'f': {
        if (params.family != Family::walled)
          throw std::invalid_argument("generator 'f' is walled-only");
        return walled_e_diagram(params, 1, params.rank);
      }
      default:
        break;
    }
  }
  throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace dtl
