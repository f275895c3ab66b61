#include "sympres/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sympres {

Weight weight_zero(int g) { return Weight(g, 0); }

Weight fundamental(int g, int k) {
  if (k < 0 || k > g) throw HardError("fundamental weight index out of range");
  Weight w(g, 0);
  for (int i = 0; i < k; ++i) w[i] = 1;
  return w;
}

Weight weight_add(const Weight& a, const Weight& b) {
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  Weight r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Weight weight_neg(const Weight& a) {
  Weight r(a);
  for (auto& x : r) x = -x;
  return r;
}

Weight weight_scale(int k, const Weight& a) {
  Weight r(a);
  for (auto& x : r) x *= k;
  return r;
}

Weight from_fundamental_coords(const std::vector<int>& n) {
  int g = (int)n.size();
  Weight w(g, 0);
  int acc = 0;
  for (int i = g - 1; i >= 0; --i) {
    acc += n[i];
    w[i] = acc;
  }
  return w;
}

std::vector<int> to_fundamental_coords(const Weight& w) {
  if (!is_dominant(w)) throw HardError("fundamental coordinates require a dominant weight");
  int g = (int)w.size();
  std::vector<int> n(g, 0);
  for (int i = 0; i < g; ++i) n[i] = w[i] - (i + 1 < g ? w[i + 1] : 0);
  return n;
}

bool is_dominant(const Weight& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  return w.empty() || w.back() >= 0;
}

Weight dominant_rep(const Weight& w) {
  Weight r(w);
  for (auto& x : r) x = std::abs(x);
  std::sort(r.rbegin(), r.rend());
  return r;
}

Weight rho(int g) {
  if (g < 1) throw HardError("rho requires genus >= 1");
  Weight w(g);
  for (int i = 0; i < g; ++i) w[i] = g - i;
  return w;
}

const std::vector<Weight>& positive_roots(int g) {
  static std::mutex mu;
  static std::map<int, std::vector<Weight>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g);
  if (it != cache.end()) return it->second;
  std::vector<Weight> roots;
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      Weight r = weight_zero(g);
      r[i] = 1;
      r[j] = -1;
      roots.push_back(r);
      r[j] = 1;
      roots.push_back(r);
    }
  for (int i = 0; i < g; ++i) {
    Weight r = weight_zero(g);
    r[i] = 2;
    roots.push_back(r);
  }
  return cache.emplace(g, std::move(roots)).first->second;
}

long long euler_form(const Weight& a, const Weight& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += (long long)a[i] * b[i];
  return s;
}

std::set<Weight> weyl_orbit(const Weight& w) {
  std::set<Weight> orbit;
  Weight base = dominant_rep(w);
  std::sort(base.begin(), base.end());
  do {
    // sign flips on nonzero coordinates
    std::vector<int> nz;
    for (int i = 0; i < (int)base.size(); ++i)
      if (base[i] != 0) nz.push_back(i);
    for (unsigned long long mask = 0; mask < (1ull << nz.size()); ++mask) {
      Weight v(base);
      for (size_t k = 0; k < nz.size(); ++k)
        if (mask & (1ull << k)) v[nz[k]] = -v[nz[k]];
      orbit.insert(v);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return orbit;
}

long long weyl_orbit_size(const Weight& w) {
  // distinct permutations of |coords| times 2^(number of nonzeros)
  Weight d = dominant_rep(w);
  long long perms = 1;
  for (int i = 1; i <= (int)d.size(); ++i) perms *= i;
  int i = 0;
  int nonzero = 0;
  while (i < (int)d.size()) {
    int j = i;
    while (j < (int)d.size() && d[j] == d[i]) ++j;
    for (int k = 1; k <= j - i; ++k) perms /= k;
    if (d[i] != 0) nonzero += j - i;
    i = j;
  }
  return perms << nonzero;
}

Int weyl_dim(const Weight& lambda, int g) {
  if ((int)lambda.size() != g) throw HardError("weight length does not match genus");
  if (!is_dominant(lambda)) throw HardError("weyl_dim requires a dominant weight");
  Weight r = rho(g);
  Weight lr = weight_add(lambda, r);
  Int num = 1, den = 1;
  for (const auto& a : positive_roots(g)) {
    num *= euler_form(lr, a);
    den *= euler_form(r, a);
  }
  Int q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw HardError("Weyl dimension formula produced a non-integer");
  return q;
}

bool root_lattice_leq(const Weight& b, const Weight& a) {
  // a - b must have nonnegative partial sums and even total
  long long partial = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    partial += a[i] - b[i];
    if (partial < 0) return false;
  }
  return partial % 2 == 0;
}

namespace {

const char* kSubscripts[10] = {"₀", "₁", "₂", "₃", "₄",
                               "₅", "₆", "₇", "₈", "₉"};

std::string subscript(int k) {
  std::string s;
  for (char c : std::to_string(k)) s += kSubscripts[c - '0'];
  return s;
}

}  // namespace

std::string weight_name(const Weight& w) {
  auto n = to_fundamental_coords(w);
  std::string s;
  for (int k = 0; k < (int)n.size(); ++k) {
    if (n[k] == 0) continue;
    if (!s.empty()) s += "+";
    if (n[k] > 1) s += std::to_string(n[k]);
    s += "λ";
    s += subscript(k + 1);
  }
  return s.empty() ? "0" : s;
}

std::string weight_coords(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

Weight parse_weight(const std::string& text, int g) {
  std::string t;
  for (char c : text)
    if (!isspace((unsigned char)c)) t += c;
  if (t.empty()) throw HardError("empty weight");
  if (t[0] == '(') {
    if (t.back() != ')') throw HardError("unbalanced parentheses in weight: " + text);
    Weight w;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(std::stoi(item));
    if ((int)w.size() != g) throw HardError("weight has wrong length for genus");
    if (!is_dominant(w)) throw HardError("weight is not dominant: " + text);
    return w;
  }
  // forms like "2λ2+λ3", "2L2+L3", "0"
  if (t == "0") return weight_zero(g);
  std::vector<int> n(g, 0);
  size_t i = 0;
  while (i < t.size()) {
    if (t[i] == '+') ++i;
    int coef = 1;
    size_t j = i;
    while (j < t.size() && isdigit((unsigned char)t[j])) ++j;
    if (j > i) coef = std::stoi(t.substr(i, j - i));
    i = j;
    bool lam = false;
    if (i < t.size() && (t[i] == 'L' || t[i] == 'l')) {
      lam = true;
      ++i;
    } else if (i + 1 < t.size() && (unsigned char)t[i] == 0xCE && (unsigned char)t[i + 1] == 0xBB) {
      lam = true;
      i += 2;  // UTF-8 lambda
    }
    if (!lam) throw HardError("cannot parse weight: " + text);
    j = i;
    while (j < t.size() && isdigit((unsigned char)t[j])) ++j;
    if (j == i) throw HardError("missing fundamental-weight index in: " + text);
    int k = std::stoi(t.substr(i, j - i));
    if (k < 1 || k > g) throw HardError("fundamental-weight index out of range in: " + text);
    n[k - 1] += coef;
    i = j;
  }
  return from_fundamental_coords(n);
}

}  // namespace sympres
