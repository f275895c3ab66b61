#pragma once

// The character ring of Sp(2g). Characters are Weyl-invariant and stored
// sparsely on dominant-chamber representatives; the full weight support is
// expanded on demand. Virtual characters (negative multiplicities) are legal
// intermediates; decompose_char rejects them.

#include <map>
#include <string>

#include "sympres/rootsys.hpp"

namespace sympres {

struct Character {
  int g = 0;
  std::map<Weight, long long> dom;  // dominant representative -> multiplicity

  long long mult(const Weight& w) const;  // any weight (via its dominant rep)
  Int mass() const;                       // total dimension
  bool genuine() const;                   // all multiplicities >= 0
};

struct Decomposition {
  int g = 0;
  std::map<Weight, long long> parts;  // highest weight -> multiplicity

  Int mass() const;  // sum mult * weyl_dim
  bool operator==(const Decomposition&) const = default;

  std::string text() const;               // "V(2λ₂+λ₃) + V(λ₁+λ₂) + V(λ₃)"
  std::string json() const;               // {"(1,1,1)":1,...}, keys sorted
};

Character trivial_char(int g);
Character char_of_weight_multiset(int g, const std::map<Weight, long long>& full);

// weight multiplicities of V(lambda) by Freudenthal's recursion; memoized
Character irr_char(const Weight& lambda, int g);

// full (orbit-expanded) support
std::map<Weight, long long> expand(const Character& a);

Character char_add(const Character& a, const Character& b);
Character char_sub(const Character& a, const Character& b);
Character char_scale(long long k, const Character& a);
Character tensor_char(const Character& a, const Character& b);
Character adams(const Character& a, int k);

enum class SchurKind { Exterior, Symmetric };
Character schur_power_char(const Character& a, int k, SchurKind kind);

// character of the degree-n piece of the free Lie algebra on a module
// with character a: (1/n) sum_{d|n} mu(d) adams(a,d)^{tensor n/d}
Character free_lie_char(const Character& a, int n);

// greedy decomposition into irreducibles (lex-largest dominant weight first)
Decomposition decompose_char(const Character& a);

// Klimyk-formula tensor decomposition; independent cross-check oracle for
// decompose_char(tensor_char(irr,irr))
Decomposition tensor_decompose_klimyk(const Weight& lambda, const Weight& mu, int g);

}  // namespace sympres
