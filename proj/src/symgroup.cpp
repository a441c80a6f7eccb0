#include "dtl/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace dtl {

Perm Perm::transposition(int n, int i) {
  Perm p(n);
  std::swap(p.img[i], p.img[i + 1]);
  return p;
}

Perm Perm::operator*(const Perm& q) const {
  Perm r(n());
  for (int i = 0; i < n(); ++i) r.img[i] = img[q.img[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r(n());
  for (int i = 0; i < n(); ++i) r.img[img[i]] = i;
  return r;
}

int Perm::sign() const {
  int s = 1;
  std::vector<bool> seen(img.size(), false);
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = static_cast<int>(i);
    while (!seen[j]) {
      seen[j] = true;
      j = img[j];
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::vector<int> Perm::adjacent_word() const {
  std::vector<int> w;
  std::vector<int> a = img;
  // bubble sort; recorded swaps multiply to the permutation
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < a.size() - i; ++j)
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        w.push_back(static_cast<int>(j));
      }
  // a was sorted by applying swaps left-to-right; the permutation is the
  // reverse product of those transpositions
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do {
    Perm p(n);
    p.img = v;
    out.push_back(p);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

YoungDiagram::YoungDiagram(std::vector<int> r) : rows(std::move(r)) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0) throw std::invalid_argument("YoungDiagram: rows must be positive");
    if (i > 0 && rows[i] > rows[i - 1])
      throw std::invalid_argument("YoungDiagram: rows must be weakly decreasing");
  }
}

int YoungDiagram::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

std::string YoungDiagram::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ",";
    os << rows[i];
  }
  os << "]";
  return os.str();
}

YoungDiagram YoungDiagram::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || (t.front() != '[' && t.front() != '(') ||
      (t.back() != ']' && t.back() != ')'))
    throw std::invalid_argument("YoungDiagram: expected bracketed row list: " + s);
  t = t.substr(1, t.size() - 2);
  std::vector<int> rows;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) rows.push_back(std::stoi(item));
  return YoungDiagram(rows);
}

std::vector<YoungDiagram> partitions_of(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(YoungDiagram(cur));
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominates_strictly(const YoungDiagram& a, const YoungDiagram& b) {
  if (a.size() != b.size() || a == b) return false;
  int pa = 0, pb = 0;
  std::size_t m = std::max(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < m; ++i) {
    pa += i < a.rows.size() ? a.rows[i] : 0;
    pb += i < b.rows.size() ? b.rows[i] : 0;
    if (pa < pb) return false;
  }
  return true;
}

int branching_multiplicity(const YoungDiagram& a, const YoungDiagram& b) {
  const YoungDiagram& big = a.size() > b.size() ? a : b;
  const YoungDiagram& small = a.size() > b.size() ? b : a;
  if (big.size() != small.size() + 1) return 0;
  auto ups = add_one_box(small);
  return std::find(ups.begin(), ups.end(), big) != ups.end() ? 1 : 0;
}

std::vector<YoungDiagram> add_one_box(const YoungDiagram& d) {
  std::vector<YoungDiagram> out;
  for (std::size_t i = 0; i <= d.rows.size(); ++i) {
    std::vector<int> r = d.rows;
    if (i < r.size())
      ++r[i];
    else
      r.push_back(1);
    if (i == 0 || r[i] <= r[i - 1]) out.push_back(YoungDiagram(r));
  }
  return out;
}

std::vector<YoungDiagram> remove_one_box(const YoungDiagram& d) {
  std::vector<YoungDiagram> out;
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    std::vector<int> r = d.rows;
    --r[i];
    if (r[i] == 0) r.erase(r.begin() + static_cast<long>(i));
    bool ok = true;
    for (std::size_t j = 0; j + 1 < r.size(); ++j)
      if (r[j] < r[j + 1]) ok = false;
    if (ok && (i + 1 == d.rows.size() || d.rows[i] > d.rows[i + 1] || r.size() < d.rows.size()))
      out.push_back(YoungDiagram(r));
  }
  // dedupe (removals from equal-length rows coincide)
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void fill_tableaux(const YoungDiagram& shape, Tableau& t, std::vector<int>& row_len, int next,
                   std::vector<Tableau>& out) {
  int n = shape.size();
  if (next > n) {
    out.push_back(t);
    return;
  }
  for (std::size_t r = 0; r < shape.rows.size(); ++r) {
    int c = row_len[r];
    if (c >= shape.rows[r]) continue;
    if (r > 0 && row_len[r - 1] <= c) continue;  // column condition
    t[r].push_back(next);
    ++row_len[r];
    fill_tableaux(shape, t, row_len, next + 1, out);
    --row_len[r];
    t[r].pop_back();
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const YoungDiagram& shape) {
  std::vector<Tableau> out;
  Tableau t(shape.rows.size());
  std::vector<int> row_len(shape.rows.size(), 0);
  fill_tableaux(shape, t, row_len, 1, out);
  return out;
}

long tableau_count(const YoungDiagram& shape) {
  int n = shape.size();
  long num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  long hooks = 1;
  for (std::size_t r = 0; r < shape.rows.size(); ++r)
    for (int c = 0; c < shape.rows[r]; ++c) {
      int arm = shape.rows[r] - c - 1;
      int leg = 0;
      for (std::size_t r2 = r + 1; r2 < shape.rows.size(); ++r2)
        if (shape.rows[r2] > c) ++leg;
      hooks *= arm + leg + 1;
    }
  return num / hooks;
}

void SpechtModule::build() {
  int n = shape_.size();
  standard_ = standard_tableaux(shape_);

  // enumerate tabloids: ordered set partitions with prescribed row sizes
  std::vector<int> assign(n, -1);
  std::vector<int> quota(shape_.rows.begin(), shape_.rows.end());
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      std::vector<std::vector<int>> rows(shape_.rows.size());
      for (int i = 0; i < n; ++i) rows[assign[i]].push_back(i + 1);
      tabloid_index_[rows] = static_cast<int>(tabloids_.size());
      tabloids_.push_back(std::move(rows));
      return;
    }
    for (std::size_t r = 0; r < quota.size(); ++r) {
      if (quota[r] == 0) continue;
      --quota[r];
      assign[v] = static_cast<int>(r);
      rec(v + 1);
      ++quota[r];
    }
  };
  rec(0);

  auto tabloid_of = [&](const Tableau& t) {
    std::vector<std::vector<int>> rows;
    for (const auto& r : t) {
      std::vector<int> s(r);
      std::sort(s.begin(), s.end());
      rows.push_back(std::move(s));
    }
    return rows;
  };

  // column stabilizer elements of a tableau, with signs
  auto polytabloid = [&](const Tableau& t) {
    std::vector<Int> v(tabloids_.size(), 0);
    int cols = shape_.rows.empty() ? 0 : shape_.rows[0];
    std::vector<std::vector<int>> columns(cols);
    for (std::size_t r = 0; r < t.size(); ++r)
      for (std::size_t c = 0; c < t[r].size(); ++c) columns[c].push_back(t[r][c]);
    // iterate over products of column permutations
    std::function<void(std::size_t, std::vector<int>&, int)> go =
        [&](std::size_t col, std::vector<int>& relabel, int sign) {
          if (col == columns.size()) {
            Tableau moved(t.size());
            for (std::size_t r = 0; r < t.size(); ++r)
              for (int x : t[r]) moved[r].push_back(relabel[x - 1]);
            v[tabloid_index_[tabloid_of(moved)]] += sign;
            return;
          }
          std::vector<int> perm = columns[col];
          std::sort(perm.begin(), perm.end());
          do {
            // sign of the permutation sending columns[col] -> perm
            int s = 1;
            std::vector<int> p(perm.size());
            for (std::size_t i = 0; i < perm.size(); ++i)
              p[i] = static_cast<int>(std::find(columns[col].begin(), columns[col].end(),
                                                perm[i]) -
                                      columns[col].begin());
            std::vector<bool> seen(p.size(), false);
            for (std::size_t i = 0; i < p.size(); ++i) {
              if (seen[i]) continue;
              int len = 0;
              std::size_t j = i;
              while (!seen[j]) {
                seen[j] = true;
                j = static_cast<std::size_t>(p[j]);
                ++len;
              }
              if (len % 2 == 0) s = -s;
            }
            for (std::size_t i = 0; i < perm.size(); ++i) relabel[columns[col][i] - 1] = perm[i];
            go(col + 1, relabel, sign * s);
            for (std::size_t i = 0; i < perm.size(); ++i)
              relabel[columns[col][i] - 1] = columns[col][i];
          } while (std::next_permutation(perm.begin(), perm.end()));
        };
    std::vector<int> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 1);
    go(0, relabel, 1);
    return v;
  };

  for (const auto& t : standard_) poly_.push_back(polytabloid(t));

  // action of s_i on the tabloid basis, then re-express on polytabloids
  int f = dim();
  RingSpecPtr R = delta_ring();
  Mat pt(static_cast<std::size_t>(tabloids_.size()), static_cast<std::size_t>(f), R);
  for (int a = 0; a < f; ++a)
    for (std::size_t b = 0; b < tabloids_.size(); ++b)
      pt.at(b, static_cast<std::size_t>(a)) = RingElem::constant(R, poly_[a][b]);
  FracSolver solver(pt);
  if (solver.rank() != static_cast<std::size_t>(f))
    throw std::logic_error("SpechtModule: polytabloids not independent");

  actions_.resize(std::max(0, n - 1));
  for (int i = 1; i < n; ++i) {
    std::vector<std::vector<Int>> m(f, std::vector<Int>(f, 0));
    for (int a = 0; a < f; ++a) {
      // apply s_i to polytabloid a in tabloid coordinates
      std::vector<RingElem> acted(tabloids_.size(), RingElem::zero(R));
      for (std::size_t b = 0; b < tabloids_.size(); ++b) {
        if (poly_[a][b] == 0) continue;
        std::vector<std::vector<int>> rows = tabloids_[b];
        for (auto& row : rows)
          for (auto& x : row) {
            if (x == i)
              x = i + 1;
            else if (x == i + 1)
              x = i;
          }
        for (auto& row : rows) std::sort(row.begin(), row.end());
        acted[static_cast<std::size_t>(tabloid_index_[rows])] += RingElem::constant(R, poly_[a][b]);
      }
      auto sol = solver.solve(acted);
      if (!sol) throw std::logic_error("SpechtModule: action not in polytabloid span");
      for (int c = 0; c < f; ++c) {
        RingElem val;
        if (!(*sol)[c].is_ring_element(&val) || !val.is_constant())
          throw std::logic_error("SpechtModule: action matrix not integral");
        m[c][a] = val.is_zero() ? Int(0) : val.leading().second;
      }
    }
    actions_[i - 1] = std::move(m);
  }
}

SpechtModule::SpechtModule(YoungDiagram shape) : shape_(std::move(shape)) { build(); }

const std::vector<std::vector<Int>>& SpechtModule::action(int i) const {
  if (i < 1 || i >= shape_.size())
    throw std::invalid_argument("SpechtModule::action: index out of range");
  return actions_[i - 1];
}

std::vector<std::vector<Int>> SpechtModule::action_of(const Perm& p) const {
  int f = dim();
  std::vector<std::vector<Int>> m(f, std::vector<Int>(f, 0));
  for (int i = 0; i < f; ++i) m[i][i] = 1;
  // word reads as a group product, rightmost letter applied first
  for (int w : p.adjacent_word()) {
    const auto& a = actions_[w];
    std::vector<std::vector<Int>> r(f, std::vector<Int>(f, 0));
    for (int i = 0; i < f; ++i)
      for (int k = 0; k < f; ++k) {
        if (m[i][k] == 0) continue;
        for (int j = 0; j < f; ++j) r[i][j] += m[i][k] * a[k][j];
      }
    m = std::move(r);
  }
  return m;
}

std::vector<std::vector<Int>> SpechtModule::gram() const {
  int f = dim();
  std::vector<std::vector<Int>> g(f, std::vector<Int>(f, 0));
  for (int a = 0; a < f; ++a)
    for (int b = 0; b < f; ++b)
      for (std::size_t t = 0; t < tabloids_.size(); ++t) g[a][b] += poly_[a][t] * poly_[b][t];
  return g;
}

GroupAlgElem ga_mul(const GroupAlgElem& a, const GroupAlgElem& b) {
  GroupAlgElem r;
  for (const auto& [p, cp] : a)
    for (const auto& [q, cq] : b) {
      Int& v = r[p * q];
      v += cp * cq;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

GroupAlgElem ga_involute(const GroupAlgElem& a) {
  GroupAlgElem r;
  for (const auto& [p, c] : a) r[p.inverse()] += c;
  return r;
}

std::size_t GroupAlgebra::dim() const {
  std::size_t d = 1;
  for (int i = 2; i <= n_; ++i) d *= static_cast<std::size_t>(i);
  return d;
}

Perm tableau_perm(const YoungDiagram& shape, const Tableau& t) {
  int n = shape.size();
  Perm d(n);
  int next = 1;
  for (std::size_t r = 0; r < shape.rows.size(); ++r)
    for (int c = 0; c < shape.rows[r]; ++c) {
      // superstandard entry `next` maps to t's entry in the same cell
      d.img[next - 1] = t[r][static_cast<std::size_t>(c)] - 1;
      ++next;
    }
  return d;
}

GroupAlgElem murphy_element(const YoungDiagram& shape, const Tableau& s, const Tableau& t) {
  int n = shape.size();
  Perm ds = tableau_perm(shape, s);
  Perm dt = tableau_perm(shape, t);
  Perm dsi = ds.inverse();
  // row stabilizer of the row-reading tableau: product of symmetric groups on
  // the consecutive value blocks
  GroupAlgElem out;
  std::vector<std::vector<int>> rows;
  int next = 0;
  for (int len : shape.rows) {
    std::vector<int> vals(static_cast<std::size_t>(len));
    std::iota(vals.begin(), vals.end(), next);
    next += len;
    rows.push_back(std::move(vals));
  }
  std::function<void(std::size_t, Perm)> go = [&](std::size_t r, Perm w) {
    if (r == rows.size()) {
      out[dsi * w * dt] += 1;
      return;
    }
    std::vector<int> vals = rows[r];
    std::sort(vals.begin(), vals.end());
    std::vector<int> base = vals;
    do {
      Perm p(n);
      for (std::size_t i = 0; i < vals.size(); ++i) p.img[base[i]] = vals[i];
      go(r + 1, w * p);
    } while (std::next_permutation(vals.begin(), vals.end()));
  };
  go(0, Perm(n));
  return out;
}

}  // namespace dtl
