#include "sympres/character.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace sympres {

long long Character::mult(const Weight& w) const {
  auto it = dom.find(dominant_rep(w));
  return it == dom.end() ? 0 : it->second;
}

Int Character::mass() const {
  Int m = 0;
  for (const auto& [w, c] : dom) m += Int(c) * weyl_orbit_size(w);
  return m;
}

bool Character::genuine() const {
  for (const auto& [w, c] : dom)
    if (c < 0) return false;
  return true;
}

Int Decomposition::mass() const {
  Int m = 0;
  for (const auto& [w, c] : parts) m += Int(c) * weyl_dim(w, g);
  return m;
}

std::string Decomposition::text() const {
  if (parts.empty()) return "0";
  std::string s;
  // descending lex on epsilon-coordinates
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    for (long long k = 0; k < it->second; ++k) {
      if (!s.empty()) s += " + ";
      s += "V(" + weight_name(it->first) + ")";
    }
  }
  return s;
}

std::string Decomposition::json() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [w, c] : parts) {
    if (!first) s += ",";
    first = false;
    s += "\"" + weight_coords(w) + "\":" + std::to_string(c);
  }
  return s + "}";
}

Character trivial_char(int g) {
  Character c;
  c.g = g;
  c.dom[weight_zero(g)] = 1;
  return c;
}

Character char_of_weight_multiset(int g, const std::map<Weight, long long>& full) {
  Character c;
  c.g = g;
  for (const auto& [w, m] : full)
    if (is_dominant(w) && m != 0) c.dom[w] = m;
  return c;
}

namespace {

void prune(Character& c) {
  for (auto it = c.dom.begin(); it != c.dom.end();)
    it = it->second == 0 ? c.dom.erase(it) : std::next(it);
}

// dominant weights mu with lambda - mu in the positive root cone
void dominated_rec(const Weight& lambda, Weight& mu, int pos, std::vector<Weight>& out) {
  int g = (int)lambda.size();
  if (pos == g) {
    if (root_lattice_leq(mu, lambda)) out.push_back(mu);
    return;
  }
  int hi = pos == 0 ? lambda[0] : std::min(mu[pos - 1], lambda[0]);
  // partial-sum domination prunes the branch early
  long long lsum = 0, msum = 0;
  for (int i = 0; i <= pos; ++i) lsum += lambda[i];
  for (int i = 0; i < pos; ++i) msum += mu[i];
  for (int v = std::min<long long>(hi, lsum - msum); v >= 0; --v) {
    mu[pos] = v;
    dominated_rec(lambda, mu, pos + 1, out);
  }
  mu[pos] = 0;
}

std::vector<Weight> dominated_weights(const Weight& lambda) {
  std::vector<Weight> out;
  Weight mu = weight_zero((int)lambda.size());
  dominated_rec(lambda, mu, 0, out);
  return out;
}

}  // namespace

Character irr_char(const Weight& lambda, int g) {
  if ((int)lambda.size() != g) throw HardError("weight length does not match genus");
  if (!is_dominant(lambda)) throw HardError("irr_char requires a dominant weight");
  static std::mutex mu;
  static std::map<std::pair<int, Weight>, Character> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({g, lambda});
    if (it != memo.end()) return it->second;
  }

  Weight r = rho(g);
  Weight lr = weight_add(lambda, r);
  long long norm_l = euler_form(lr, lr);

  auto cands = dominated_weights(lambda);
  // process from the top: larger height of mu first
  std::sort(cands.begin(), cands.end(), [](const Weight& a, const Weight& b) {
    long long sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    if (sa != sb) return sa > sb;
    return a > b;
  });

  std::map<Weight, long long> mults;  // dominant rep -> multiplicity
  mults[lambda] = 1;
  for (const auto& m : cands) {
    if (m == lambda) continue;
    Weight mr = weight_add(m, r);
    long long denom = norm_l - euler_form(mr, mr);
    if (denom <= 0) throw HardError("Freudenthal denominator not positive");
    long long acc = 0;
    // every weight of V(lambda) has all |coords| <= lambda_1, bounding k
    for (const auto& alpha : positive_roots(g)) {
      for (int k = 1; k <= lambda[0]; ++k) {
        Weight w = weight_add(m, weight_scale(k, alpha));
        auto it = mults.find(dominant_rep(w));
        if (it != mults.end()) acc += it->second * euler_form(w, alpha);
      }
    }
    long long num = 2 * acc;
    if (num % denom != 0) throw HardError("Freudenthal recursion produced a non-integer");
    long long v = num / denom;
    if (v != 0) mults[m] = v;
  }

  Character c;
  c.g = g;
  for (const auto& [w, m] : mults)
    if (m != 0) c.dom[w] = m;

  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(std::make_pair(g, lambda), std::move(c)).first->second;
}

std::map<Weight, long long> expand(const Character& a) {
  std::map<Weight, long long> full;
  for (const auto& [w, m] : a.dom)
    for (const auto& v : weyl_orbit(w)) full[v] = m;
  return full;
}

Character char_add(const Character& a, const Character& b) {
  if (a.g != b.g) throw HardError("genus mismatch");
  Character c(a);
  for (const auto& [w, m] : b.dom) c.dom[w] += m;
  prune(c);
  return c;
}

Character char_sub(const Character& a, const Character& b) {
  if (a.g != b.g) throw HardError("genus mismatch");
  Character c(a);
  for (const auto& [w, m] : b.dom) c.dom[w] -= m;
  prune(c);
  return c;
}

Character char_scale(long long k, const Character& a) {
  Character c(a);
  for (auto& [w, m] : c.dom) m *= k;
  prune(c);
  return c;
}

Character tensor_char(const Character& a, const Character& b) {
  if (a.g != b.g) throw HardError("genus mismatch");
  auto fa = expand(a);
  auto fb = expand(b);
  if (fa.size() > fb.size()) std::swap(fa, fb);
  Character c;
  c.g = a.g;
  for (const auto& [u, mu] : fa)
    for (const auto& [v, mv] : fb) {
      Weight w = weight_add(u, v);
      if (is_dominant(w)) c.dom[w] += mu * mv;
    }
  prune(c);
  return c;
}

Character adams(const Character& a, int k) {
  if (k < 1) throw HardError("Adams operation requires k >= 1");
  Character c;
  c.g = a.g;
  for (const auto& [w, m] : a.dom) c.dom[weight_scale(k, w)] = m;
  return c;
}

Character schur_power_char(const Character& a, int k, SchurKind kind) {
  if (k < 0) throw HardError("negative Schur power");
  // Newton recursion: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} psi_i,
  // and the same without signs for complete symmetric powers.
  std::vector<Character> p(k + 1, trivial_char(a.g));
  for (int i = 1; i <= k; ++i) p[i] = adams(a, i);
  std::vector<Character> e(k + 1, trivial_char(a.g));
  for (int n = 1; n <= k; ++n) {
    Character acc;
    acc.g = a.g;
    for (int i = 1; i <= n; ++i) {
      Character term = tensor_char(e[n - i], p[i]);
      long long sign = (kind == SchurKind::Exterior && i % 2 == 0) ? -1 : 1;
      acc = char_add(acc, char_scale(sign, term));
    }
    for (auto& [w, m] : acc.dom) {
      if (m % n != 0) throw HardError("Schur power recursion produced a non-integer");
      m /= n;
    }
    prune(acc);
    e[n] = acc;
  }
  return e[k];
}

namespace {
int moebius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}
}  // namespace

Character free_lie_char(const Character& a, int n) {
  if (n < 1) throw HardError("free Lie degree must be >= 1");
  Character acc;
  acc.g = a.g;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    Character pw = trivial_char(a.g);
    Character ad = adams(a, d);
    for (int i = 0; i < n / d; ++i) pw = tensor_char(pw, ad);
    acc = char_add(acc, char_scale(mu, pw));
  }
  for (auto& [w, m] : acc.dom) {
    if (m % n != 0) throw HardError("free Lie character formula produced a non-integer");
    m /= n;
  }
  prune(acc);
  return acc;
}

Decomposition decompose_char(const Character& a) {
  Character rest(a);
  Decomposition d;
  d.g = a.g;
  while (!rest.dom.empty()) {
    auto top = std::prev(rest.dom.end());  // lex-largest dominant weight
    if (top->second < 0)
      throw HardError("negative multiplicity at " + weight_coords(top->first) +
                      ": input is a virtual character");
    Weight lam = top->first;
    long long m = top->second;
    d.parts[lam] += m;
    rest = char_sub(rest, char_scale(m, irr_char(lam, a.g)));
    for (const auto& [w, c] : rest.dom)
      if (c < 0)
        throw HardError("negative multiplicity at " + weight_coords(w) +
                        ": input is a virtual character");
  }
  return d;
}

Decomposition tensor_decompose_klimyk(const Weight& lambda, const Weight& mu, int g) {
  Character cmu = irr_char(mu, g);
  Weight r = rho(g);
  std::map<Weight, long long> acc;
  for (const auto& [nu, m] : expand(cmu)) {
    Weight x = weight_add(weight_add(lambda, nu), r);
    // strictly dominant conjugate with sign; drop singular points
    int sign = 1;
    Weight y(x);
    for (auto& c : y) {
      if (c < 0) {
        c = -c;
        sign = -sign;
      }
    }
    bool singular = false;
    for (int c : y)
      if (c == 0) singular = true;
    // bubble sort to count transpositions
    for (size_t i = 0; i + 1 < y.size() && !singular; ++i)
      for (size_t j = 0; j + 1 < y.size() - i; ++j)
        if (y[j] < y[j + 1]) {
          std::swap(y[j], y[j + 1]);
          sign = -sign;
        }
    for (size_t i = 0; i + 1 < y.size(); ++i)
      if (y[i] == y[i + 1]) singular = true;
    if (singular) continue;
    acc[weight_sub(y, r)] += sign * m;
  }
  Decomposition d;
  d.g = g;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw HardError("Klimyk formula produced a negative multiplicity");
    if (m > 0) d.parts[w] = m;
  }
  return d;
}

}  // namespace sympres
