#pragma once

// Weight-lattice and Weyl-group combinatorics for the root system C_g,
// plus the Weyl dimension formula. Weights live in epsilon-coordinates:
// the weight of a_j is e_j, the weight of b_j is -e_j, and the fundamental
// weight lambda_k is (1,...,1,0,...,0) with k ones.

#include <set>
#include <string>
#include <vector>

#include "sympres/rat.hpp"

namespace sympres {

using Weight = std::vector<int>;  // epsilon-coordinates, length = genus

Weight weight_zero(int g);
Weight fundamental(int g, int k);             // lambda_k
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);
Weight weight_scale(int k, const Weight& a);

// lambda = sum n_k lambda_k  ->  epsilon coordinates (partial-sum transform)
Weight from_fundamental_coords(const std::vector<int>& n);
// inverse transform; requires a dominant weight
std::vector<int> to_fundamental_coords(const Weight& w);

bool is_dominant(const Weight& w);
// representative of the Weyl orbit in the dominant chamber (|coords| sorted desc)
Weight dominant_rep(const Weight& w);

// half-sum of positive roots: (g, g-1, ..., 1)
Weight rho(int g);

// positive roots of C_g: e_i - e_j, e_i + e_j (i<j), 2 e_i
const std::vector<Weight>& positive_roots(int g);

// Euclidean pairing on epsilon-coordinates (an invariant form for C_g)
long long euler_form(const Weight& a, const Weight& b);

// full orbit under signed coordinate permutations
std::set<Weight> weyl_orbit(const Weight& w);
long long weyl_orbit_size(const Weight& w);

// dim V(lambda) by the Weyl dimension formula, exact integer arithmetic
Int weyl_dim(const Weight& lambda, int g);

// is (a - b) a nonnegative integer combination of positive roots?
bool root_lattice_leq(const Weight& b, const Weight& a);

// rendering: (3,3,1) -> "2λ₂+λ₃"; zero weight -> "0"
std::string weight_name(const Weight& w);
std::string weight_coords(const Weight& w);  // "(3,3,1)"

// CLI weight syntax: "2λ2+λ3", ASCII "2L2+L3", or "(3,3,1)"
Weight parse_weight(const std::string& text, int g);

}  // namespace sympres
