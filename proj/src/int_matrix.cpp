#include "monodromy/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "monodromy/errors.hpp"

namespace monodromy::linalg
{

namespace
{

[[noreturn]] void overflow(char const *op)
{ throw Error(Errc::overflow, std::string("int64 overflow in ") + op); }

void require_dims(bool ok, char const *what)
{
  if (!ok)
    throw Error(Errc::dimension, what);
}

} // namespace

Int add(Int a, Int b)
{
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    overflow("add");
  return r;
}

Int sub(Int a, Int b)
{
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    overflow("sub");
  return r;
}

Int mul(Int a, Int b)
{
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    overflow("mul");
  return r;
}

Int neg(Int a)
{ return sub(0, a); }

Int gcd(Int a, Int b)
{
  a = a < 0 ? neg(a) : a;
  b = b < 0 ? neg(b) : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Int fill)
: _rows(rows), _cols(cols), _data(rows * cols, fill)
{}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
{
  _rows = rows.size();
  _cols = _rows == 0 ? 0 : rows.begin()->size();
  _data.reserve(_rows * _cols);
  for (auto const &r : rows) {
    require_dims(r.size() == _cols, "ragged initializer");
    _data.insert(_data.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntVector IntMatrix::column(std::size_t c) const
{
  IntVector v(_rows);
  for (std::size_t r = 0; r < _rows; ++r)
    v[r] = (*this)(r, c);
  return v;
}

void IntMatrix::set_column(std::size_t c, std::span<Int const> v)
{
  require_dims(v.size() == _rows, "set_column length");
  for (std::size_t r = 0; r < _rows; ++r)
    (*this)(r, c) = v[r];
}

IntMatrix IntMatrix::transpose() const
{
  IntMatrix t(_cols, _rows);
  for (std::size_t r = 0; r < _rows; ++r)
    for (std::size_t c = 0; c < _cols; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0,
                           std::size_t nr, std::size_t nc) const
{
  require_dims(r0 + nr <= _rows && c0 + nc <= _cols, "block out of range");
  IntMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

bool IntMatrix::is_zero() const
{ return std::all_of(_data.begin(), _data.end(), [](Int x) { return x == 0; }); }

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
  if (i == j)
    return;
  for (std::size_t c = 0; c < _cols; ++c)
    std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
  if (i == j)
    return;
  for (std::size_t r = 0; r < _rows; ++r)
    std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int k)
{
  if (k == 0)
    return;
  for (std::size_t c = 0; c < _cols; ++c)
    (*this)(dst, c) = add((*this)(dst, c), mul(k, (*this)(src, c)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int k)
{
  if (k == 0)
    return;
  for (std::size_t r = 0; r < _rows; ++r)
    (*this)(r, dst) = add((*this)(r, dst), mul(k, (*this)(r, src)));
}

void IntMatrix::negate_row(std::size_t i)
{
  for (std::size_t c = 0; c < _cols; ++c)
    (*this)(i, c) = neg((*this)(i, c));
}

void IntMatrix::negate_col(std::size_t j)
{
  for (std::size_t r = 0; r < _rows; ++r)
    (*this)(r, j) = neg((*this)(r, j));
}

IntMatrix operator*(IntMatrix const &a, IntMatrix const &b)
{
  require_dims(a.cols() == b.rows(), "matrix product shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Int x = a(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0)
          p(i, j) = add(p(i, j), mul(x, b(k, j)));
    }
  return p;
}

IntMatrix operator+(IntMatrix const &a, IntMatrix const &b)
{
  require_dims(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum shape mismatch");
  IntMatrix s(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      s(r, c) = add(a(r, c), b(r, c));
  return s;
}

IntMatrix operator-(IntMatrix const &a, IntMatrix const &b)
{
  require_dims(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape mismatch");
  IntMatrix s(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      s(r, c) = sub(a(r, c), b(r, c));
  return s;
}

IntMatrix operator-(IntMatrix const &a)
{
  IntMatrix s(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      s(r, c) = neg(a(r, c));
  return s;
}

IntVector operator*(IntMatrix const &a, std::span<Int const> v)
{
  require_dims(a.cols() == v.size(), "matrix-vector shape mismatch");
  IntVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    out[r] = dot(a.row(r), v);
  return out;
}

Int dot(std::span<Int const> a, std::span<Int const> b)
{
  require_dims(a.size() == b.size(), "dot length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0)
      s = add(s, mul(a[i], b[i]));
  return s;
}

IntVector axpy(Int k, std::span<Int const> x, std::span<Int const> y)
{
  require_dims(x.size() == y.size(), "axpy length mismatch");
  IntVector out(y.begin(), y.end());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = add(out[i], mul(k, x[i]));
  return out;
}

bool is_zero(std::span<Int const> v)
{ return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; }); }

std::string to_string(IntMatrix const &m)
{
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::vector<Int> SmithForm::invariant_factors() const
{
  std::vector<Int> f;
  for (std::size_t i = 0; i < rank; ++i)
    f.push_back(diag(i, i));
  return f;
}

bool SmithForm::torsion_free() const
{
  for (std::size_t i = 0; i < rank; ++i)
    if (diag(i, i) != 1)
      return false;
  return true;
}

namespace
{

// Row operations are mirrored on `left` and, inverted, on `left_inverse`.
struct Reducer
{
  SmithForm &s;

  void swap_rows(std::size_t i, std::size_t j)
  {
    s.diag.swap_rows(i, j);
    s.left.swap_rows(i, j);
    s.left_inverse.swap_cols(i, j);
  }

  void add_row(std::size_t dst, std::size_t src, Int k)
  {
    s.diag.add_row_multiple(dst, src, k);
    s.left.add_row_multiple(dst, src, k);
    s.left_inverse.add_col_multiple(src, dst, neg(k));
  }

  void negate_row(std::size_t i)
  {
    s.diag.negate_row(i);
    s.left.negate_row(i);
    s.left_inverse.negate_col(i);
  }

  void swap_cols(std::size_t i, std::size_t j)
  {
    s.diag.swap_cols(i, j);
    s.right.swap_cols(i, j);
  }

  void add_col(std::size_t dst, std::size_t src, Int k)
  {
    s.diag.add_col_multiple(dst, src, k);
    s.right.add_col_multiple(dst, src, k);
  }

  void negate_col(std::size_t j)
  {
    s.diag.negate_col(j);
    s.right.negate_col(j);
  }
};

} // namespace

SmithForm smith_normal_form(IntMatrix const &a)
{
  std::size_t const m = a.rows();
  std::size_t const n = a.cols();

  SmithForm s{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n), 0};
  Reducer red{s};
  IntMatrix &d = s.diag;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // pivot: smallest non-zero absolute value in the trailing block
    auto find_pivot = [&](std::size_t &pr, std::size_t &pc) {
      Int best = 0;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c) {
          Int v = std::llabs(d(r, c));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      return best != 0;
    };

    std::size_t pr = 0, pc = 0;
    if (!find_pivot(pr, pc))
      break;

    for (;;) {
      red.swap_rows(t, pr);
      red.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (d(r, t) == 0)
          continue;
        red.add_row(r, t, neg(d(r, t) / d(t, t)));
        if (d(r, t) != 0)
          clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (d(t, c) == 0)
          continue;
        red.add_col(c, t, neg(d(t, c) / d(t, t)));
        if (d(t, c) != 0)
          clean = false;
      }

      if (clean) {
        // divisibility: fold any offending row into row t and retry
        std::size_t bad = m;
        for (std::size_t r = t + 1; r < m && bad == m; ++r)
          for (std::size_t c = t + 1; c < n; ++c)
            if (d(r, c) % d(t, t) != 0) {
              bad = r;
              break;
            }
        if (bad == m)
          break;
        red.add_row(t, bad, 1);
      }

      pr = t;
      pc = t;
      Int best = std::llabs(d(t, t));
      for (std::size_t r = t; r < m; ++r)
        if (d(r, t) != 0 && std::llabs(d(r, t)) < best) {
          best = std::llabs(d(r, t));
          pr = r;
          pc = t;
        }
      for (std::size_t c = t; c < n; ++c)
        if (d(t, c) != 0 && std::llabs(d(t, c)) < best) {
          best = std::llabs(d(t, c));
          pr = t;
          pc = c;
        }
    }

    if (d(t, t) < 0)
      red.negate_row(t);
    ++s.rank;
  }

  return s;
}

bool is_unimodular(IntMatrix const &a)
{
  if (!a.square())
    return false;
  auto s = smith_normal_form(a);
  return s.rank == a.rows() && s.torsion_free();
}

IntMatrix unimodular_inverse(IntMatrix const &a)
{
  if (!a.square())
    throw Error(Errc::dimension, "inverse of non-square matrix");
  auto s = smith_normal_form(a);
  if (s.rank != a.rows() || !s.torsion_free())
    throw Error(Errc::invariant_violation, "matrix is not unimodular");
  // L A R = I  =>  A^-1 = R L
  return s.right * s.left;
}

} // namespace monodromy::linalg
