#pragma once

// Exact rational sparse linear algebra: sparse vectors/matrices, an
// incremental row-space builder in reduced echelon form (deterministic,
// pivots at lowest index), dense elimination for small blocks, and a
// word-size modular mirror for two-prime rank certification.

#include <cstdint>
#include <map>
#include <vector>

#include "sympres/rat.hpp"

namespace sympres {

// sparse vector: (index, value) pairs, strictly increasing indices, no zeros
using SVec = std::vector<std::pair<int, Rat>>;

SVec svec_unit(int i, const Rat& c = 1);
bool svec_is_zero(const SVec& v);
const Rat* svec_get(const SVec& v, int i);
SVec svec_scale(const SVec& v, const Rat& c);
// y + c*x
SVec svec_axpy(const Rat& c, const SVec& x, const SVec& y);
SVec svec_add(const SVec& a, const SVec& b);
SVec svec_sub(const SVec& a, const SVec& b);
Rat svec_dot(const SVec& a, const SVec& b);
// collect (index, value) pairs in arbitrary order into a normalized SVec
SVec svec_collect(std::vector<std::pair<int, Rat>> terms);
// true if a == c*b for some nonzero c (outputs c); both nonzero
bool svec_colinear(const SVec& a, const SVec& b, Rat* c_out);

struct SMat {
  int rows = 0, cols = 0;
  std::vector<SVec> col;  // column-major

  SMat() = default;
  SMat(int r, int c) : rows(r), cols(c), col(c) {}
  static SMat identity(int n);
  long long nnz() const;
};

SVec smat_apply(const SMat& m, const SVec& v);
SMat smat_mul(const SMat& a, const SMat& b);
SMat smat_add(const SMat& a, const SMat& b);
SMat smat_sub(const SMat& a, const SMat& b);
SMat smat_scale(const SMat& a, const Rat& c);
SMat smat_transpose(const SMat& a);
bool smat_eq(const SMat& a, const SMat& b);
bool smat_is_zero(const SMat& a);

// Incremental reduced-row-echelon span. Rows keep pivot coefficient 1 and
// are fully reduced against each other; insertion order does not change the
// resulting row set (RREF is canonical for the span).
class SpanBuilder {
 public:
  explicit SpanBuilder(int ambient_dim) : n_(ambient_dim) {}

  // returns true if v enlarged the span
  bool insert(SVec v);
  // normal form of v modulo the span (zero iff contained)
  SVec reduce(SVec v) const;
  bool contains(const SVec& v) const { return svec_is_zero(reduce(v)); }

  int dim() const { return (int)rows_.size(); }
  int ambient() const { return n_; }
  // rows sorted by pivot index
  std::vector<SVec> rows_sorted() const;
  std::vector<int> pivots_sorted() const;
  std::vector<int> nonpivots() const;

  // coefficients of v along rows_sorted(); requires contains(v)
  std::vector<Rat> coords(const SVec& v) const;

 private:
  int n_;
  std::vector<SVec> rows_;
  std::map<int, int> row_of_pivot_;
};

// kernel of the linear map with the given columns acting from
// R^cols -> R^rows; returned as sparse vectors in the domain
std::vector<SVec> kernel_basis(const SMat& m);

// solve m x = b exactly; returns empty optional-like flag via bool
bool solve(const SMat& m, const SVec& b, SVec* x_out);

// ---- modular mirror -------------------------------------------------------

// rank of m modulo prime p (entries reduced via modular inverse of
// denominators; denominators divisible by p are a hard error)
int rank_mod(const SMat& m, std::uint64_t p);

// exact rank (Gaussian elimination over Q)
int rank_exact(const SMat& m);

extern const std::uint64_t kPrime1, kPrime2;  // both > 2^30

}  // namespace sympres
