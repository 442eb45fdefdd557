#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/error.hpp"

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;

Int dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Int& c, const Vec& v);
Vec negate(const Vec& v);
bool is_zero(const Vec& v);
// gcd of the absolute values of all entries; 0 for the zero vector.
Int content(const Vec& v);
// v / content(v), direction preserved.  Zero vector is refused.
Vec primitive_part(const Vec& v);

// Dense row-major integer matrix.  Row count zero is legal (empty lattices).
class Mat {
 public:
  Mat(std::size_t rows, std::size_t cols);
  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  std::vector<Vec> row_list() const;
  Mat transpose() const;
  Mat operator*(const Mat& other) const;
  bool operator==(const Mat& other) const;

  // Exact determinant (Bareiss fraction-free elimination), square only.
  Int det() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// a = u * d * v with u, v unimodular and d rectangular-diagonal,
// d(0,0) | d(1,1) | ... , all diagonal entries >= 0.
struct SmithResult {
  Mat u, d, v;
  std::vector<Int> diagonal() const;  // min(rows, cols) entries
};
SmithResult smith_normal_form(const Mat& a);

// t * a = h with t unimodular; h is the row-style Hermite form: row echelon,
// positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows sink to the bottom.
struct HermiteResult {
  Mat h, t;
  std::size_t rank;  // number of nonzero rows of h
};
HermiteResult hermite_normal_form(const Mat& a);

// Canonical basis (Hermite rows) of the subgroup of Z^n generated by the
// given points.  Empty input yields the trivial subgroup.
std::vector<Vec> subgroup_basis(const std::vector<Vec>& points, std::size_t ambient_rank);

// Z^n / <generators> as free part plus invariant factors (each > 1, each
// dividing the next).
struct QuotientStructure {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;
  bool operator==(const QuotientStructure& o) const {
    return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
  }
};
QuotientStructure quotient_structure(std::size_t ambient_rank, const std::vector<Vec>& generators);

// Basis of { x : x * a = 0 } (row vectors), canonicalized via Hermite form.
// Kernel lattices are saturated by construction.
std::vector<Vec> integer_row_kernel(const Mat& a);

// Inverse of a unimodular square matrix; refuses anything else.
Mat inverse_unimodular(const Mat& a);

// The saturation (R-span intersected with Z^n) of the lattice generated by
// `gens`, plus a complement extending it to a basis of Z^n.  `sat` rows are in
// Hermite form; stacking sat then complement is unimodular.
struct SpanBasis {
  std::vector<Vec> sat;
  std::vector<Vec> complement;
};
SpanBasis span_lattice_basis(std::size_t ambient_rank, const std::vector<Vec>& gens);

// Integer coordinates of p in the Hermite-form basis rows (back substitution).
// nullopt when p is not in the generated lattice.
std::optional<Vec> coordinates_in_hermite_basis(const std::vector<Vec>& hermite_rows, const Vec& p);

// Canonical coset representative of p modulo the lattice spanned by the
// Hermite rows: every pivot coordinate lands in [0, pivot).
Vec reduce_mod_lattice(const std::vector<Vec>& hermite_rows, Vec p);

// Exact solve x * a = b over Q for a row vector x (a has full row rank on the
// used rows); nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_left_rational(const Mat& a, const Vec& b);

bool lex_less(const Vec& a, const Vec& b);

}  // namespace toric
