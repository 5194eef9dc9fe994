#ifndef MONODROMY_INT_MATRIX_HPP
#define MONODROMY_INT_MATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace monodromy::linalg
{

using Int = std::int64_t;
using IntVector = std::vector<Int>;

// Overflow-checked primitives. Overflow throws Error{Errc::overflow}.
Int add(Int a, Int b);
Int sub(Int a, Int b);
Int mul(Int a, Int b);
Int neg(Int a);
Int gcd(Int a, Int b);

// Dense row-major integer matrix. All arithmetic is exact and checked.
class IntMatrix
{
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return _rows; }
  std::size_t cols() const noexcept { return _cols; }
  bool square() const noexcept { return _rows == _cols; }

  Int &operator()(std::size_t r, std::size_t c) { return _data[r * _cols + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return _data[r * _cols + c]; }

  std::span<Int const> row(std::size_t r) const
  { return {_data.data() + r * _cols, _cols}; }

  IntVector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<Int const> v);

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const;

  friend bool operator==(IntMatrix const &, IntMatrix const &) = default;

  std::vector<Int> const &data() const noexcept { return _data; }

  // elementary operations used by the Smith reduction
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, Int k);
  void add_col_multiple(std::size_t dst, std::size_t src, Int k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

private:
  std::size_t _rows = 0;
  std::size_t _cols = 0;
  std::vector<Int> _data;
};

IntMatrix operator*(IntMatrix const &a, IntMatrix const &b);
IntMatrix operator+(IntMatrix const &a, IntMatrix const &b);
IntMatrix operator-(IntMatrix const &a, IntMatrix const &b);
IntMatrix operator-(IntMatrix const &a);
IntVector operator*(IntMatrix const &a, std::span<Int const> v);

Int dot(std::span<Int const> a, std::span<Int const> b);
IntVector axpy(Int k, std::span<Int const> x, std::span<Int const> y); // k*x + y
bool is_zero(std::span<Int const> v);

std::string to_string(IntMatrix const &m);

/// Smith normal form with unimodular transforms: left * A * right == diag.
///
/// `left_inverse` is maintained alongside `left` so callers can lift
/// quotient coordinates back without inverting. Diagonal entries are
/// non-negative and each divides the next; `rank` counts the non-zero ones.
struct SmithForm
{
  IntMatrix diag;
  IntMatrix left;
  IntMatrix left_inverse;
  IntMatrix right;
  std::size_t rank = 0;

  std::vector<Int> invariant_factors() const;
  bool torsion_free() const; // all non-zero invariant factors equal 1
};

SmithForm smith_normal_form(IntMatrix const &a);

/// True iff `a` is square with determinant +1 or -1.
bool is_unimodular(IntMatrix const &a);

/// Inverse of a unimodular matrix; throws Error{Errc::invariant_violation}
/// otherwise.
IntMatrix unimodular_inverse(IntMatrix const &a);

} // namespace monodromy::linalg

#endif // MONODROMY_INT_MATRIX_HPP
