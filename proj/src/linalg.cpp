#include "sympres/linalg.hpp"

#include <algorithm>

namespace sympres {

SVec svec_unit(int i, const Rat& c) {
  if (is_zero(c)) return {};
  return {{i, c}};
}

bool svec_is_zero(const SVec& v) { return v.empty(); }

const Rat* svec_get(const SVec& v, int i) {
  auto it = std::lower_bound(v.begin(), v.end(), i,
                             [](const auto& e, int k) { return e.first < k; });
  if (it != v.end() && it->first == i) return &it->second;
  return nullptr;
}

SVec svec_scale(const SVec& v, const Rat& c) {
  if (is_zero(c)) return {};
  SVec r(v);
  for (auto& [i, x] : r) x *= c;
  return r;
}

SVec svec_axpy(const Rat& c, const SVec& x, const SVec& y) {
  if (is_zero(c)) return y;
  SVec r;
  r.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      r.emplace_back(x[i].first, c * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      r.push_back(y[j]);
      ++j;
    } else {
      Rat v = y[j].second + c * x[i].second;
      if (!is_zero(v)) r.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

SVec svec_add(const SVec& a, const SVec& b) { return svec_axpy(1, a, b); }
SVec svec_sub(const SVec& a, const SVec& b) { return svec_axpy(-1, b, a); }

Rat svec_dot(const SVec& a, const SVec& b) {
  Rat s = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first)
      ++i;
    else if (b[j].first < a[i].first)
      ++j;
    else {
      s += a[i].second * b[j].second;
      ++i;
      ++j;
    }
  }
  return s;
}

SVec svec_collect(std::vector<std::pair<int, Rat>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SVec r;
  for (auto& [i, v] : terms) {
    if (!r.empty() && r.back().first == i)
      r.back().second += v;
    else
      r.emplace_back(i, std::move(v));
  }
  r.erase(std::remove_if(r.begin(), r.end(),
                         [](const auto& e) { return is_zero(e.second); }),
          r.end());
  return r;
}

bool svec_colinear(const SVec& a, const SVec& b, Rat* c_out) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return false;
  Rat c = a[0].second / b[0].second;
  for (size_t k = 0; k < a.size(); ++k) {
    if (a[k].first != b[k].first) return false;
    if (a[k].second != c * b[k].second) return false;
  }
  if (c_out) *c_out = c;
  return true;
}

SMat SMat::identity(int n) {
  SMat m(n, n);
  for (int i = 0; i < n; ++i) m.col[i] = svec_unit(i);
  return m;
}

long long SMat::nnz() const {
  long long s = 0;
  for (const auto& c : col) s += (long long)c.size();
  return s;
}

SVec smat_apply(const SMat& m, const SVec& v) {
  std::vector<std::pair<int, Rat>> terms;
  for (const auto& [j, c] : v)
    for (const auto& [i, a] : m.col[j]) terms.emplace_back(i, a * c);
  return svec_collect(std::move(terms));
}

SMat smat_mul(const SMat& a, const SMat& b) {
  if (a.cols != b.rows) throw HardError("matrix dimension mismatch in product");
  SMat r(a.rows, b.cols);
  for (int j = 0; j < b.cols; ++j) r.col[j] = smat_apply(a, b.col[j]);
  return r;
}

SMat smat_add(const SMat& a, const SMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw HardError("matrix dimension mismatch in sum");
  SMat r(a.rows, a.cols);
  for (int j = 0; j < a.cols; ++j) r.col[j] = svec_add(a.col[j], b.col[j]);
  return r;
}

SMat smat_sub(const SMat& a, const SMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw HardError("matrix dimension mismatch in sum");
  SMat r(a.rows, a.cols);
  for (int j = 0; j < a.cols; ++j) r.col[j] = svec_sub(a.col[j], b.col[j]);
  return r;
}

SMat smat_scale(const SMat& a, const Rat& c) {
  SMat r(a.rows, a.cols);
  for (int j = 0; j < a.cols; ++j) r.col[j] = svec_scale(a.col[j], c);
  return r;
}

SMat smat_transpose(const SMat& a) {
  SMat r(a.cols, a.rows);
  for (int j = 0; j < a.cols; ++j)
    for (const auto& [i, v] : a.col[j]) r.col[i].emplace_back(j, v);
  return r;
}

bool smat_eq(const SMat& a, const SMat& b) {
  return a.rows == b.rows && a.cols == b.cols && a.col == b.col;
}

bool smat_is_zero(const SMat& a) {
  for (const auto& c : a.col)
    if (!c.empty()) return false;
  return true;
}

bool SpanBuilder::insert(SVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  int piv = v[0].first;
  Rat lead = v[0].second;
  if (lead != 1) {
    Rat inv = Rat(1) / lead;
    for (auto& [i, x] : v) x *= inv;
  }
  // back-reduce existing rows against the new pivot
  for (auto& row : rows_) {
    const Rat* c = svec_get(row, piv);
    if (c) row = svec_axpy(-*c, v, row);
  }
  row_of_pivot_[piv] = (int)rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

SVec SpanBuilder::reduce(SVec v) const {
  for (;;) {
    int hit = -1;
    const Rat* coeff = nullptr;
    for (const auto& [i, x] : v) {
      auto it = row_of_pivot_.find(i);
      if (it != row_of_pivot_.end()) {
        hit = it->second;
        coeff = &x;
        break;
      }
    }
    if (hit < 0) return v;
    Rat c = -*coeff;
    v = svec_axpy(c, rows_[hit], v);
  }
}

std::vector<SVec> SpanBuilder::rows_sorted() const {
  std::vector<SVec> r;
  r.reserve(rows_.size());
  for (const auto& [p, idx] : row_of_pivot_) r.push_back(rows_[idx]);
  return r;
}

std::vector<int> SpanBuilder::pivots_sorted() const {
  std::vector<int> p;
  p.reserve(row_of_pivot_.size());
  for (const auto& [piv, idx] : row_of_pivot_) p.push_back(piv);
  return p;
}

std::vector<int> SpanBuilder::nonpivots() const {
  std::vector<int> np;
  auto it = row_of_pivot_.begin();
  for (int i = 0; i < n_; ++i) {
    while (it != row_of_pivot_.end() && it->first < i) ++it;
    if (it == row_of_pivot_.end() || it->first != i) np.push_back(i);
  }
  return np;
}

std::vector<Rat> SpanBuilder::coords(const SVec& v) const {
  // rows are in RREF, so the coefficient along a row is v at its pivot
  std::vector<Rat> c;
  c.reserve(row_of_pivot_.size());
  for (const auto& [piv, idx] : row_of_pivot_) {
    const Rat* x = svec_get(v, piv);
    c.push_back(x ? *x : Rat(0));
  }
  return c;
}

std::vector<SVec> kernel_basis(const SMat& m) {
  // row-reduce m; kernel vectors come from the free columns
  struct Row {
    SVec r;  // indices are column indices of m
  };
  // build sparse rows
  std::vector<SVec> rows(m.rows);
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.col[j]) rows[i].emplace_back(j, v);

  SpanBuilder rowspace(m.cols);
  for (auto& r : rows) rowspace.insert(std::move(r));

  auto rref = rowspace.rows_sorted();
  auto pivs = rowspace.pivots_sorted();
  std::vector<int> pivot_row_of_col(m.cols, -1);
  for (size_t k = 0; k < pivs.size(); ++k) pivot_row_of_col[pivs[k]] = (int)k;

  std::vector<SVec> ker;
  for (int f = 0; f < m.cols; ++f) {
    if (pivot_row_of_col[f] >= 0) continue;
    std::vector<std::pair<int, Rat>> terms;
    terms.emplace_back(f, Rat(1));
    for (size_t k = 0; k < pivs.size(); ++k) {
      const Rat* c = svec_get(rref[k], f);
      if (c) terms.emplace_back(pivs[k], -*c);
    }
    ker.push_back(svec_collect(std::move(terms)));
  }
  return ker;
}

bool solve(const SMat& m, const SVec& b, SVec* x_out) {
  // Eliminate on columns, keeping the invariant rows[k] = m * exprs[k].
  std::vector<SVec> rows, exprs;
  std::map<int, int> row_of_pivot;
  auto eliminate = [&](SVec& v, SVec& e, int dir) {
    for (;;) {
      int hit = -1;
      Rat coeff;
      for (const auto& [i, x] : v) {
        auto it = row_of_pivot.find(i);
        if (it != row_of_pivot.end()) {
          hit = it->second;
          coeff = x;
          break;
        }
      }
      if (hit < 0) break;
      v = svec_axpy(-coeff, rows[hit], v);
      e = svec_axpy(dir * coeff, exprs[hit], e);
    }
  };
  for (int j = 0; j < m.cols; ++j) {
    SVec v = m.col[j];
    SVec e = svec_unit(j);
    eliminate(v, e, -1);
    if (!v.empty()) {
      Rat inv = Rat(1) / v[0].second;
      row_of_pivot[v[0].first] = (int)rows.size();
      rows.push_back(svec_scale(v, inv));
      exprs.push_back(svec_scale(e, inv));
    }
  }
  SVec r = b, x;
  eliminate(r, x, +1);
  if (!r.empty()) return false;
  if (x_out) *x_out = x;
  return true;
}

const std::uint64_t kPrime1 = 2147483647ull;  // 2^31 - 1
const std::uint64_t kPrime2 = 2147483629ull;

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = (unsigned __int128)r * b % p;
    b = (unsigned __int128)b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t rat_mod(const Rat& x, std::uint64_t p) {
  Int num = x.get_num(), den = x.get_den();
  std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
  std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (d == 0) throw HardError("denominator divisible by modular prime");
  return (unsigned __int128)n * pow_mod(d, p - 2, p) % p;
}

}  // namespace

int rank_mod(const SMat& m, std::uint64_t p) {
  // dense elimination over F_p on a row-major copy
  std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(m.cols, 0));
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.col[j]) a[i][j] = rat_mod(v, p);
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pr = -1;
    for (int r = rank; r < m.rows; ++r)
      if (a[r][c]) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[rank], a[pr]);
    std::uint64_t inv = pow_mod(a[rank][c], p - 2, p);
    for (int j = c; j < m.cols; ++j) a[rank][j] = (unsigned __int128)a[rank][j] * inv % p;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || !a[r][c]) continue;
      std::uint64_t f = p - a[r][c];
      for (int j = c; j < m.cols; ++j)
        a[r][j] = (a[r][j] + (unsigned __int128)f * a[rank][j]) % p;
    }
    ++rank;
  }
  return rank;
}

int rank_exact(const SMat& m) {
  SpanBuilder span(m.rows);
  for (const auto& c : m.col) span.insert(c);
  return span.dim();
}

}  // namespace sympres
