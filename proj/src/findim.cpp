#include "sdop/findim.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "sdop/linalg.hpp"

namespace sdop {

int SuperMonomial::degree() const {
  int d = static_cast<int>(xis.size());
  for (const auto& [ij, e] : xs) d += e;
  return d;
}

void SuperPoly::add(const SuperMonomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms[m] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  for (const auto& [m, c] : o.terms) add(m, c);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
  for (const auto& [m, c] : o.terms) add(m, -c);
  return *this;
}

SuperPoly operator*(const Rat& s, SuperPoly p) {
  if (s.is_zero()) return SuperPoly{};
  for (auto& [m, c] : p.terms) c *= s;
  return p;
}

SuperPoly SuperPoly::one() {
  SuperPoly p;
  p.terms[SuperMonomial{}] = Rat(1);
  return p;
}

SuperPoly SuperPoly::variable(const SuperVar& v) {
  SuperMonomial m;
  if (v.odd)
    m.xis.push_back({v.i, v.j});
  else
    m.xs[{v.i, v.j}] = 1;
  SuperPoly p;
  p.terms[m] = Rat(1);
  return p;
}

namespace {

// Merge two sorted xi lists; returns false on a repeated variable and
// otherwise reports the Koszul sign of the shuffle.
bool merge_xis(const std::vector<std::pair<int, int>>& a,
               const std::vector<std::pair<int, int>>& b,
               std::vector<std::pair<int, int>>* out, int* sign) {
  out->clear();
  out->reserve(a.size() + b.size());
  *sign = 1;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      out->push_back(a[i++]);
    } else {
      // b[j] crosses the remaining a-elements.
      if ((a.size() - i) % 2 == 1) *sign = -*sign;
      out->push_back(b[j++]);
    }
  }
  while (i < a.size()) out->push_back(a[i++]);
  while (j < b.size()) out->push_back(b[j++]);
  return true;
}

}  // namespace

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  SuperPoly r;
  std::vector<std::pair<int, int>> merged;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      int sign;
      if (!merge_xis(ma.xis, mb.xis, &merged, &sign)) continue;
      SuperMonomial m;
      m.xis = merged;
      m.xs = ma.xs;
      for (const auto& [ij, e] : mb.xs) m.xs[ij] += e;
      r.add(m, Rat(sign) * ca * cb);
    }
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const SuperPoly& p) {
  if (p.terms.empty()) return os << "0";
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (const auto& [ij, e] : m.xs) {
      os << "*x" << ij.first << "_" << ij.second;
      if (e > 1) os << "^" << e;
    }
    for (const auto& ij : m.xis) os << "*xi" << ij.first << "_" << ij.second;
  }
  return os;
}

SuperPoly var_mul(const SuperVar& v, const SuperPoly& p) {
  SuperPoly r;
  for (const auto& [m, c] : p.terms) {
    SuperMonomial nm = m;
    if (v.odd) {
      std::pair<int, int> key{v.i, v.j};
      auto pos = std::lower_bound(nm.xis.begin(), nm.xis.end(), key);
      if (pos != nm.xis.end() && *pos == key) continue;
      int before = static_cast<int>(pos - nm.xis.begin());
      nm.xis.insert(pos, key);
      r.add(nm, Rat(neg_one_pow(before)) * c);
    } else {
      nm.xs[{v.i, v.j}] += 1;
      r.add(nm, c);
    }
  }
  return r;
}

SuperPoly var_derivative(const SuperVar& u, const SuperPoly& p) {
  SuperPoly r;
  for (const auto& [m, c] : p.terms) {
    if (u.odd) {
      std::pair<int, int> key{u.i, u.j};
      auto pos = std::lower_bound(m.xis.begin(), m.xis.end(), key);
      if (pos == m.xis.end() || *pos != key) continue;
      SuperMonomial nm = m;
      int before = static_cast<int>(pos - m.xis.begin());
      nm.xis.erase(nm.xis.begin() + before);
      r.add(nm, Rat(neg_one_pow(before)) * c);
    } else {
      auto it = m.xs.find({u.i, u.j});
      if (it == m.xs.end()) continue;
      SuperMonomial nm = m;
      int e = it->second;
      if (e == 1)
        nm.xs.erase({u.i, u.j});
      else
        nm.xs[{u.i, u.j}] = e - 1;
      r.add(nm, Rat(e) * c);
    }
  }
  return r;
}

SuperPoly FirstOrderOp::apply(const SuperPoly& p) const {
  SuperPoly r;
  for (const auto& t : terms)
    r += t.coeff * var_mul(t.to, var_derivative(t.from, p));
  return r;
}

std::vector<FirstOrderOp> radical_ops(BorelKind borel, int n, int l) {
  if (n < l) throw std::invalid_argument("radical_ops requires n >= l");
  std::vector<FirstOrderOp> ops;
  auto sum_op = [&](bool to_odd, int ti, bool from_odd, int fi, const std::string& nm) {
    FirstOrderOp op;
    op.name = nm;
    for (int j = 1; j <= l; ++j)
      op.terms.push_back({Rat(1), SuperVar{to_odd, ti, j}, SuperVar{from_odd, fi, j}});
    ops.push_back(std::move(op));
  };
  switch (borel) {
    case BorelKind::B1:
      for (int i = 1; i <= n; ++i) sum_op(true, i, false, i, "xi" + std::to_string(i) + " d/dx" + std::to_string(i));
      for (int i = 1; i + 1 <= n; ++i) sum_op(false, i, true, i + 1, "x" + std::to_string(i) + " d/dxi" + std::to_string(i + 1));
      break;
    case BorelKind::B2:
      for (int i = 1; i <= n; ++i) sum_op(false, i, true, i, "x" + std::to_string(i) + " d/dxi" + std::to_string(i));
      for (int i = 1; i + 1 <= n; ++i) sum_op(true, i, false, i + 1, "xi" + std::to_string(i) + " d/dx" + std::to_string(i + 1));
      break;
    case BorelKind::BPrime:
      for (int j = 1; j + 1 <= l; ++j) {
        FirstOrderOp op;
        op.name = "gl(l) simple " + std::to_string(j);
        for (int i = 1; i <= n; ++i) {
          op.terms.push_back({Rat(1), SuperVar{true, i, j}, SuperVar{true, i, j + 1}});
          op.terms.push_back({Rat(1), SuperVar{false, i, j}, SuperVar{false, i, j + 1}});
        }
        ops.push_back(std::move(op));
      }
      break;
  }
  return ops;
}

std::vector<FirstOrderOp> lowering_ops(BorelKind borel, int n, int l) {
  if (n < l) throw std::invalid_argument("lowering_ops requires n >= l");
  std::vector<FirstOrderOp> ops;
  auto sum_op = [&](bool to_odd, int ti, bool from_odd, int fi) {
    FirstOrderOp op;
    for (int j = 1; j <= l; ++j)
      op.terms.push_back({Rat(1), SuperVar{to_odd, ti, j}, SuperVar{from_odd, fi, j}});
    ops.push_back(std::move(op));
  };
  switch (borel) {
    case BorelKind::B1:
      for (int i = 1; i <= n; ++i) sum_op(false, i, true, i);
      for (int i = 1; i + 1 <= n; ++i) sum_op(true, i + 1, false, i);
      break;
    case BorelKind::B2:
      for (int i = 1; i <= n; ++i) sum_op(true, i, false, i);
      for (int i = 1; i + 1 <= n; ++i) sum_op(false, i + 1, true, i);
      break;
    case BorelKind::BPrime:
      for (int j = 1; j + 1 <= l; ++j) {
        FirstOrderOp op;
        for (int i = 1; i <= n; ++i) {
          op.terms.push_back({Rat(1), SuperVar{true, i, j + 1}, SuperVar{true, i, j}});
          op.terms.push_back({Rat(1), SuperVar{false, i, j + 1}, SuperVar{false, i, j}});
        }
        ops.push_back(std::move(op));
      }
      break;
  }
  return ops;
}

namespace {

// Determinant of the first r x r minor of the matrix with x^1..x^{nx} rows
// followed by repeated xi^{sup} rows.
SuperPoly var_minor(int nx, int sup, int r, int n, int l) {
  if (r > l) throw std::invalid_argument("minor size exceeds l");
  if (r == 0) return SuperPoly::one();
  if (r > nx && sup > n) throw std::invalid_argument("matrix needs superscript beyond n");
  auto entry = [&](int row, int col) -> SuperVar {
    if (row <= nx) return SuperVar{false, row, col};  // x^row_col
    return SuperVar{true, sup, col};                  // xi^sup_col
  };
  SuperPoly det;
  std::vector<int> perm(r);
  for (int a = 0; a < r; ++a) perm[a] = a;
  do {
    int psign = 1;
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        if (perm[a] > perm[b]) psign = -psign;
    SuperPoly term = SuperPoly::one();
    for (int row = 1; row <= r; ++row)
      term = term * SuperPoly::variable(entry(row, perm[row - 1] + 1));
    det += Rat(psign) * term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

SuperPoly findim_minor(int i, int r, int n, int l) {
  return var_minor(i - 1, i, r, n, l);
}

long Partition::size() const {
  long s = 0;
  for (long p : parts) s += p;
  return s;
}

long Partition::length() const {
  long c = 0;
  for (long p : parts)
    if (p > 0) ++c;
  return c;
}

long Partition::col_len(long j) const {
  long c = 0;
  for (long p : parts) c += (p >= j) ? 1 : 0;
  return c;
}

SuperPoly findim_hwv(const Partition& lambda, BorelKind borel, int n, int l) {
  if (borel == BorelKind::BPrime) throw std::invalid_argument("findim_hwv: borel must be B1 or B2");
  if (lambda.length() > l) throw std::invalid_argument("partition longer than l");
  if (n < l) throw std::invalid_argument("findim_hwv requires n >= l");
  long top = lambda.parts.empty() ? 0 : lambda.parts.front();
  SuperPoly r = SuperPoly::one();
  for (long i = 1; i <= top; ++i) {
    int sz = static_cast<int>(lambda.col_len(i));
    // Column matrices: x^1..x^{i-1} over xi^i rows for the first Borel;
    // x^1..x^i over xi^i rows for the second.
    if (borel == BorelKind::B1)
      r = r * var_minor(static_cast<int>(i) - 1, static_cast<int>(i), sz, n, l);
    else
      r = r * var_minor(static_cast<int>(i), static_cast<int>(i), sz, n, l);
  }
  return r;
}

bool annihilation_check(const SuperPoly& f, const std::vector<FirstOrderOp>& ops) {
  for (const auto& op : ops)
    if (!op.apply(f).is_zero()) return false;
  return true;
}

GlnnWeight phi_weight(const Partition& lambda, BorelKind borel, int n) {
  auto pos = [](long v) { return std::max(v, 0L); };
  GlnnWeight w;
  w.xi_deg.resize(n);
  w.x_deg.resize(n);
  auto part = [&](long i) {
    return (i >= 1 && i <= static_cast<long>(lambda.parts.size())) ? lambda.parts[i - 1] : 0;
  };
  for (int i = 1; i <= n; ++i) {
    if (borel == BorelKind::B1) {
      w.xi_deg[i - 1] = pos(lambda.col_len(i) - (i - 1));
      w.x_deg[i - 1] = pos(part(i) - i);
    } else {
      w.xi_deg[i - 1] = pos(lambda.col_len(i) - i);
      w.x_deg[i - 1] = pos(part(i) - (i - 1));
    }
  }
  return w;
}

namespace {

std::vector<SuperMonomial> enumerate_degree(int n, int l, int k) {
  // All variables in a fixed order: xi first, then x.
  std::vector<std::pair<int, int>> idx;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= l; ++j) idx.push_back({i, j});
  std::vector<SuperMonomial> out;
  SuperMonomial cur;
  std::function<void(size_t, int, bool)> rec = [&](size_t v, int rem, bool on_x) {
    if (!on_x) {
      if (v == idx.size()) {
        rec(0, rem, true);
        return;
      }
      rec(v + 1, rem, false);
      if (rem > 0) {
        cur.xis.push_back(idx[v]);
        rec(v + 1, rem - 1, false);
        cur.xis.pop_back();
      }
      return;
    }
    if (v == idx.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      if (e > 0) cur.xs[idx[v]] = e;
      rec(v + 1, rem - e, true);
    }
    cur.xs.erase(idx[v]);
  };
  rec(0, k, false);
  for (auto& m : out) std::sort(m.xis.begin(), m.xis.end());
  return out;
}

struct WeightKey {
  std::vector<long> xi_deg, x_deg, color_deg;
  auto operator<=>(const WeightKey&) const = default;
};

WeightKey weight_of_monomial(const SuperMonomial& m, int n, int l) {
  WeightKey w;
  w.xi_deg.assign(n, 0);
  w.x_deg.assign(n, 0);
  w.color_deg.assign(l, 0);
  for (const auto& ij : m.xis) {
    w.xi_deg[ij.first - 1]++;
    w.color_deg[ij.second - 1]++;
  }
  for (const auto& [ij, e] : m.xs) {
    w.x_deg[ij.first - 1] += e;
    w.color_deg[ij.second - 1] += e;
  }
  return w;
}

// Span dimension tracker with incremental exact elimination.
class SpanTracker {
 public:
  explicit SpanTracker(size_t dim) : dim_(dim) {}

  // Returns true if the vector was independent and got added.
  bool add(RatRow v) {
    for (const auto& [piv, row] : rows_) {
      if (v[piv].is_zero()) continue;
      Rat f = v[piv];
      for (size_t j = 0; j < dim_; ++j) v[j] -= f * row[j];
    }
    size_t piv = dim_;
    for (size_t j = 0; j < dim_; ++j)
      if (!v[j].is_zero()) { piv = j; break; }
    if (piv == dim_) return false;
    Rat inv = Rat(1) / v[piv];
    for (size_t j = 0; j < dim_; ++j) v[j] *= inv;
    rows_.emplace_back(piv, std::move(v));
    return true;
  }

  size_t dim() const { return rows_.size(); }
  const std::vector<std::pair<size_t, RatRow>>& rows() const { return rows_; }

 private:
  size_t dim_;
  std::vector<std::pair<size_t, RatRow>> rows_;
};

}  // namespace

DecomposeReport decompose_bruteforce(int n, int l, int k, BorelKind borel) {
  if (n < l) throw std::invalid_argument("decompose_bruteforce requires n >= l");
  DecomposeReport rep;
  std::vector<SuperMonomial> basis = enumerate_degree(n, l, k);
  rep.space_dim = static_cast<long>(basis.size());
  std::map<SuperMonomial, size_t> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  std::map<WeightKey, std::vector<size_t>> buckets;
  for (size_t i = 0; i < basis.size(); ++i)
    buckets[weight_of_monomial(basis[i], n, l)].push_back(i);

  std::vector<FirstOrderOp> raising = radical_ops(borel, n, l);
  for (auto& op : radical_ops(BorelKind::BPrime, n, l)) raising.push_back(op);

  std::vector<SuperPoly> singulars;
  for (const auto& [wkey, cols] : buckets) {
    // Stack the raising operators over this weight space.
    using RowKey = std::pair<size_t, SuperMonomial>;  // (operator, image monomial)
    std::vector<std::map<RowKey, Rat>> colvals(cols.size());
    std::map<RowKey, size_t> rowmap;
    for (size_t c = 0; c < cols.size(); ++c) {
      SuperPoly mono;
      mono.terms[basis[cols[c]]] = Rat(1);
      for (size_t o = 0; o < raising.size(); ++o) {
        SuperPoly img = raising[o].apply(mono);
        for (const auto& [m, coef] : img.terms) {
          RowKey key{o, m};
          rowmap.try_emplace(key, rowmap.size());
          colvals[c][key] = coef;
        }
      }
    }
    RatMat m(rowmap.size(), RatRow(cols.size(), Rat(0)));
    for (size_t c = 0; c < cols.size(); ++c)
      for (const auto& [rkey, val] : colvals[c]) m[rowmap[rkey]][c] = val;
    for (const auto& ker : nullspace(m, static_cast<int>(cols.size()))) {
      SuperPoly v;
      for (size_t c = 0; c < cols.size(); ++c) v.add(basis[cols[c]], ker[c]);
      singulars.push_back(std::move(v));
      rep.singular_count++;
      // Record the component weights.
      std::vector<long> gl_wt = wkey.color_deg;
      GlnnWeight nn{wkey.xi_deg, wkey.x_deg};
      rep.components.push_back({gl_wt, nn});
    }
  }

  // Expected components: partitions of k with length <= l.
  std::vector<std::vector<long>> expected;
  std::vector<long> cur;
  std::function<void(long, long)> gen = [&](long rem, long maxpart) {
    if (rem == 0) {
      expected.push_back(cur);
      return;
    }
    for (long p = std::min(rem, maxpart); p >= 1; --p) {
      if (static_cast<int>(cur.size()) == l) return;
      cur.push_back(p);
      gen(rem - p, p);
      cur.pop_back();
    }
  };
  if (k == 0) expected.push_back({});
  else gen(k, k);
  rep.expected_count = static_cast<long>(expected.size());

  // The singular gl(l)/gl(n|n) weights must be exactly the predicted pairs.
  std::vector<std::vector<long>> got_partitions;
  for (const auto& [gl_wt, nn_wt] : rep.components) {
    std::vector<long> trimmed = gl_wt;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    got_partitions.push_back(trimmed);
    Partition lam;
    lam.parts = trimmed;
    bool sorted = std::is_sorted(trimmed.rbegin(), trimmed.rend());
    if (!sorted || !(phi_weight(lam, borel, n) == nn_wt)) rep.weights_match = false;
  }
  auto norm = [](std::vector<std::vector<long>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (norm(got_partitions) != norm(expected)) rep.weights_match = false;

  // Lowering closures: each component generates an independent subspace and
  // together they fill the degree-k space.
  std::vector<FirstOrderOp> lowering = lowering_ops(borel, n, l);
  for (auto& op : lowering_ops(BorelKind::BPrime, n, l)) lowering.push_back(op);
  SpanTracker total(basis.size());
  for (const auto& sv : singulars) {
    SpanTracker span(basis.size());
    std::vector<SuperPoly> frontier{sv};
    auto to_row = [&](const SuperPoly& p) {
      RatRow row(basis.size(), Rat(0));
      for (const auto& [m, c] : p.terms) row[index.at(m)] = c;
      return row;
    };
    span.add(to_row(sv));
    while (!frontier.empty()) {
      std::vector<SuperPoly> next;
      for (const auto& f : frontier) {
        for (const auto& op : lowering) {
          SuperPoly img = op.apply(f);
          if (img.is_zero()) continue;
          if (span.add(to_row(img))) next.push_back(img);
        }
      }
      frontier = std::move(next);
    }
    rep.closure_dim_sum += static_cast<long>(span.dim());
    for (const auto& [piv, row] : span.rows()) total.add(row);
  }
  if (static_cast<long>(total.dim()) != rep.closure_dim_sum) rep.weights_match = false;
  return rep;
}

bool det_identity_check(int q, int t, int r, int extra_rows) {
  if (!(r >= t && t > q)) throw std::invalid_argument("det_identity_check needs r >= t > q");
  if (t - q - 1 - extra_rows < 0) throw std::invalid_argument("too many even rows");
  // Odd families: superscript 1 plays xi^q, superscript 2 plays xi^s.
  auto xvar = [](int a, int j) { return SuperVar{false, a, j}; };
  auto xivar = [](int fam, int j) { return SuperVar{true, fam, j}; };

  auto det = [&](int size, const std::function<SuperVar(int, int)>& entry) {
    SuperPoly acc;
    std::vector<int> perm(size);
    for (int a = 0; a < size; ++a) perm[a] = a;
    do {
      int psign = 1;
      for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b)
          if (perm[a] > perm[b]) psign = -psign;
      SuperPoly term = SuperPoly::one();
      for (int row = 1; row <= size; ++row)
        term = term * SuperPoly::variable(entry(row, perm[row - 1] + 1));
      acc += Rat(psign) * term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
  };

  SuperPoly d1 = det(r, [&](int row, int col) {
    return (row <= q) ? xvar(row, col) : xivar(1, col);
  });
  SuperPoly d2 = det(t, [&](int row, int col) {
    if (row <= q) return xvar(row, col);
    if (row == q + 1) return xivar(1, col);
    if (row <= q + 1 + extra_rows) return xvar(row, col);
    return xivar(2, col);
  });
  return (d1 * d2).is_zero();
}

}  // namespace sdop
