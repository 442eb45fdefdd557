#include "toric/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace toric {

Int dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Int& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vec negate(const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

bool is_zero(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Int content(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Vec primitive_part(const Vec& v) {
  Int g = content(v);
  if (g == 0) throw DomainError("ZERO_VECTOR", "primitive part of the zero vector is undefined");
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ParseError("row length does not match column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

std::vector<Vec> Mat::row_list() const {
  std::vector<Vec> rs;
  rs.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rs.push_back(row(i));
  return rs;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& other) const {
  assert(cols_ == other.rows_);
  Mat r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += aik * other(k, j);
    }
  return r;
}

bool Mat::operator==(const Mat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

Int Mat::det() const {
  assert(rows_ == cols_);
  std::size_t n = rows_;
  if (n == 0) return 1;
  Mat w = *this;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        // Bareiss: division is exact.
        w(i, j) = num / prev;
      }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

std::vector<Int> SmithResult::diagonal() const {
  std::size_t k = std::min(d.rows(), d.cols());
  std::vector<Int> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = d(i, i);
  return out;
}

namespace {

// Elementary operations maintaining u * a * v = a0.  Row ops on `a` update u
// by right-multiplying with the inverse (column ops on u); column ops on `a`
// update v by left-multiplying with the inverse (row ops on v).
struct SmithWork {
  Mat a, u, v;

  void row_swap(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < u.rows(); ++r) std::swap(u(r, i), u(r, j));
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t c = 0; c < v.cols(); ++c) std::swap(v(i, c), v(j, c));
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t r = 0; r < u.rows(); ++r) u(r, i) = -u(r, i);
  }
  // a: row_i += k * row_j
  void row_add(std::size_t i, std::size_t j, const Int& k) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += k * a(j, c);
    for (std::size_t r = 0; r < u.rows(); ++r) u(r, j) -= k * u(r, i);
  }
  // a: col_i += k * col_j
  void col_add(std::size_t i, std::size_t j, const Int& k) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += k * a(r, j);
    for (std::size_t c = 0; c < v.cols(); ++c) v(j, c) -= k * v(i, c);
  }
  // rows (i, j) <- [[p, q], [r, s]] * (rows), with p*s - q*r = 1
  void row_combine(std::size_t i, std::size_t j, const Int& p, const Int& q, const Int& r,
                   const Int& s) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Int x = a(i, c), y = a(j, c);
      a(i, c) = p * x + q * y;
      a(j, c) = r * x + s * y;
    }
    for (std::size_t rr = 0; rr < u.rows(); ++rr) {
      Int x = u(rr, i), y = u(rr, j);
      u(rr, i) = s * x - r * y;
      u(rr, j) = -q * x + p * y;
    }
  }
  // cols (i, j) <- (cols) * [[p, r], [q, s]] pattern: new col_i = p*col_i + q*col_j,
  // new col_j = r*col_i + s*col_j, with p*s - q*r = 1
  void col_combine(std::size_t i, std::size_t j, const Int& p, const Int& q, const Int& r,
                   const Int& s) {
    for (std::size_t rr = 0; rr < a.rows(); ++rr) {
      Int x = a(rr, i), y = a(rr, j);
      a(rr, i) = p * x + q * y;
      a(rr, j) = r * x + s * y;
    }
    for (std::size_t c = 0; c < v.cols(); ++c) {
      Int x = v(i, c), y = v(j, c);
      v(i, c) = s * x - r * y;
      v(j, c) = -q * x + p * y;
    }
  }
};

void gcd_ext(const Int& a, const Int& b, Int& g, Int& p, Int& q) {
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

SmithResult smith_normal_form(const Mat& a0) {
  std::size_t m = a0.rows(), n = a0.cols();
  SmithWork w{a0, Mat::identity(m), Mat::identity(n)};
  std::size_t t = 0;
  std::size_t steps = std::min(m, n);
  while (t < steps) {
    // pick the smallest-magnitude nonzero entry of the trailing block as pivot
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (w.a(i, j) == 0) continue;
        Int mag = abs(w.a(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    if (pi != t) w.row_swap(t, pi);
    if (pj != t) w.col_swap(t, pj);

    for (;;) {
      // clear column t below the pivot
      for (std::size_t i = t + 1; i < m; ++i) {
        if (w.a(i, t) == 0) continue;
        if (w.a(i, t) % w.a(t, t) == 0) {
          w.row_add(i, t, -(w.a(i, t) / w.a(t, t)));
        } else {
          Int g, p, q;
          gcd_ext(w.a(t, t), w.a(i, t), g, p, q);
          w.row_combine(t, i, p, q, -(w.a(i, t) / g), w.a(t, t) / g);
        }
      }
      // clear row t right of the pivot
      for (std::size_t j = t + 1; j < n; ++j) {
        if (w.a(t, j) == 0) continue;
        if (w.a(t, j) % w.a(t, t) == 0) {
          w.col_add(j, t, -(w.a(t, j) / w.a(t, t)));
        } else {
          Int g, p, q;
          gcd_ext(w.a(t, t), w.a(t, j), g, p, q);
          w.col_combine(t, j, p, q, -(w.a(t, j) / g), w.a(t, t) / g);
        }
      }
      bool column_clean = true;
      for (std::size_t i = t + 1; i < m && column_clean; ++i)
        if (w.a(i, t) != 0) column_clean = false;
      if (!column_clean) continue;

      // pivot must divide the whole trailing block
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (w.a(i, j) % w.a(t, t) != 0) {
            w.row_add(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    ++t;
  }
  for (std::size_t i = 0; i < steps; ++i)
    if (w.a(i, i) < 0) w.row_negate(i);
  return SmithResult{w.u, w.a, w.v};
}

namespace {

// Row op applied to both h and t keeps t * a = h.
struct HermiteWork {
  Mat h, t;

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < h.cols(); ++c) std::swap(h(i, c), h(j, c));
    for (std::size_t c = 0; c < t.cols(); ++c) std::swap(t(i, c), t(j, c));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < h.cols(); ++c) h(i, c) = -h(i, c);
    for (std::size_t c = 0; c < t.cols(); ++c) t(i, c) = -t(i, c);
  }
  void add_row(std::size_t i, std::size_t j, const Int& k) {
    for (std::size_t c = 0; c < h.cols(); ++c) h(i, c) += k * h(j, c);
    for (std::size_t c = 0; c < t.cols(); ++c) t(i, c) += k * t(j, c);
  }
  void combine(std::size_t i, std::size_t j, const Int& p, const Int& q, const Int& r,
               const Int& s) {
    for (std::size_t c = 0; c < h.cols(); ++c) {
      Int x = h(i, c), y = h(j, c);
      h(i, c) = p * x + q * y;
      h(j, c) = r * x + s * y;
    }
    for (std::size_t c = 0; c < t.cols(); ++c) {
      Int x = t(i, c), y = t(j, c);
      t(i, c) = p * x + q * y;
      t(j, c) = r * x + s * y;
    }
  }
};

}  // namespace

HermiteResult hermite_normal_form(const Mat& a) {
  std::size_t m = a.rows(), n = a.cols();
  HermiteWork w{a, Mat::identity(m)};
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t i0 = r;
    while (i0 < m && w.h(i0, c) == 0) ++i0;
    if (i0 == m) continue;
    if (i0 != r) w.swap_rows(r, i0);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (w.h(i, c) == 0) continue;
      Int g, p, q;
      gcd_ext(w.h(r, c), w.h(i, c), g, p, q);
      w.combine(r, i, p, q, -(w.h(i, c) / g), w.h(r, c) / g);
    }
    if (w.h(r, c) < 0) w.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), w.h(i, c).get_mpz_t(), w.h(r, c).get_mpz_t());
      if (q != 0) w.add_row(i, r, -q);
    }
    ++r;
  }
  return HermiteResult{w.h, w.t, r};
}

std::vector<Vec> subgroup_basis(const std::vector<Vec>& points, std::size_t ambient_rank) {
  HermiteResult hr = hermite_normal_form(Mat::from_rows(points, ambient_rank));
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < hr.rank; ++i) basis.push_back(hr.h.row(i));
  return basis;
}

QuotientStructure quotient_structure(std::size_t ambient_rank, const std::vector<Vec>& generators) {
  if (generators.empty()) return QuotientStructure{ambient_rank, {}};
  SmithResult s = smith_normal_form(Mat::from_rows(generators, ambient_rank));
  QuotientStructure q;
  std::size_t nonzero = 0;
  for (const Int& d : s.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) q.invariant_factors.push_back(d);
  }
  q.free_rank = ambient_rank - nonzero;
  return q;
}

std::vector<Vec> integer_row_kernel(const Mat& a) {
  HermiteResult hr = hermite_normal_form(a);
  std::vector<Vec> raw;
  for (std::size_t i = hr.rank; i < a.rows(); ++i) raw.push_back(hr.t.row(i));
  return subgroup_basis(raw, a.rows());
}

Mat inverse_unimodular(const Mat& a) {
  if (a.rows() != a.cols()) throw DomainError("NOT_UNIMODULAR", "matrix is not square");
  HermiteResult hr = hermite_normal_form(a);
  if (!(hr.h == Mat::identity(a.rows())))
    throw DomainError("NOT_UNIMODULAR", "matrix is not unimodular over the integers");
  return hr.t;
}

SpanBasis span_lattice_basis(std::size_t ambient_rank, const std::vector<Vec>& gens) {
  SpanBasis out;
  if (gens.empty()) {
    out.complement = Mat::identity(ambient_rank).row_list();
    return out;
  }
  SmithResult s = smith_normal_form(Mat::from_rows(gens, ambient_rank));
  std::size_t r = 0;
  for (const Int& d : s.diagonal())
    if (d != 0) ++r;
  std::vector<Vec> sat_raw;
  for (std::size_t i = 0; i < r; ++i) sat_raw.push_back(s.v.row(i));
  out.sat = subgroup_basis(sat_raw, ambient_rank);
  for (std::size_t i = r; i < ambient_rank; ++i) out.complement.push_back(s.v.row(i));
  return out;
}

namespace {

std::size_t pivot_column(const Vec& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return j;
  return row.size();
}

}  // namespace

std::optional<Vec> coordinates_in_hermite_basis(const std::vector<Vec>& hermite_rows,
                                                const Vec& p) {
  Vec rest = p;
  Vec coords;
  coords.reserve(hermite_rows.size());
  for (const Vec& row : hermite_rows) {
    std::size_t piv = pivot_column(row);
    assert(piv < row.size());
    if (rest[piv] % row[piv] != 0) return std::nullopt;
    Int q = rest[piv] / row[piv];
    rest = sub(rest, scale(q, row));
    coords.push_back(q);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

Vec reduce_mod_lattice(const std::vector<Vec>& hermite_rows, Vec p) {
  for (const Vec& row : hermite_rows) {
    std::size_t piv = pivot_column(row);
    assert(piv < row.size());
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), p[piv].get_mpz_t(), row[piv].get_mpz_t());
    if (q != 0) p = sub(p, scale(q, row));
  }
  return p;
}

std::optional<std::vector<Rat>> solve_left_rational(const Mat& a, const Vec& b) {
  // x * a = b  <=>  a^T x^T = b^T; Gaussian elimination over Q, free
  // variables pinned to zero.
  std::size_t m = a.rows(), n = a.cols();
  if (b.size() != n) throw ParseError("right-hand side length mismatch");
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug[i][j] = Rat(a(j, i));
    aug[i][m] = Rat(b[i]);
  }
  std::vector<std::size_t> pivot_of_col(m, n);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && aug[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(aug[p], aug[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      Rat f = aug[i][col] / aug[row][col];
      for (std::size_t j = col; j <= m; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (aug[i][m] != 0) return std::nullopt;
  std::vector<Rat> x(m, Rat(0));
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t p = pivot_of_col[col];
    if (p < n) x[col] = aug[p][m] / aug[p][col];
  }
  return x;
}

}  // namespace toric
