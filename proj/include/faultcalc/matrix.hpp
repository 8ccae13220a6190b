#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "faultcalc/dim.hpp"
#include "faultcalc/dist.hpp"

namespace faultcalc {

/// Tolerance for the column-stochastic and sharp predicates.
inline constexpr double kStructuralTolerance = 1e-9;

/// Dense nonnegative matrix typed `cols → rows`: columns are inputs, rows are
/// outputs. A column-stochastic (CS) matrix is a probabilistic function.
/// Entries are stored row-major and never change after construction.
class Matrix {
 public:
  /// All-zero matrix.
  Matrix(Dim cols, Dim rows);
  /// `entries` is row-major, |rows|·|cols| long, every entry ≥ 0.
  Matrix(Dim cols, Dim rows, std::vector<double> entries);

  static Matrix identity(const Dim& d);
  /// The sharp matrix of an ordinary function; throws TruncationError if f
  /// leaves `rows`.
  static Matrix from_function(const Dim& cols, const Dim& rows, const std::function<Value(const Value&)>& f);
  /// Column vector `Unit → rows` holding a distribution.
  static Matrix column(const Dim& rows, const Dist& d);
  /// Column vector `Unit → rows` with a single 1 at `v`.
  static Matrix point(const Dim& rows, const Value& v);
  /// The all-ones row `A → Unit` (the unique sharp function into Unit).
  static Matrix bang(const Dim& a);

  const Dim& cols() const { return cols_; }
  const Dim& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return cols_.size(); }

  double at(std::size_t r, std::size_t c) const { return data_[r * num_cols() + c]; }
  /// Cell addressed by Dim elements: row value, column value.
  double at(const Value& row, const Value& col) const;
  std::span<const double> data() const { return data_; }
  double column_sum(std::size_t c) const;

 private:
  Dim cols_;
  Dim rows_;
  std::vector<double> data_;
};

bool same_type(const Matrix& m, const Matrix& n);
bool column_stochastic(const Matrix& m, double tol = kStructuralTolerance);
bool is_sharp(const Matrix& m, double tol = kStructuralTolerance);
/// For a sharp matrix, the row index holding the 1 in each column.
std::vector<std::size_t> sharp_image(const Matrix& m);
/// Largest absolute entry difference; DimensionError unless same type.
double max_abs_diff(const Matrix& m, const Matrix& n);
bool bitwise_equal(const Matrix& m, const Matrix& n);

/// M · N for M : B → C, N : A → B.
Matrix compose(const Matrix& m, const Matrix& n);
Matrix converse(const Matrix& m);
/// [M|N] : Sum(A,B) → C.
Matrix junc(const Matrix& m, const Matrix& n);
/// M stacked above N : C → Sum(A,B).
Matrix split(const Matrix& m, const Matrix& n);
/// Block diagonal M ⊕ N : Sum(A,B) → Sum(C,D).
Matrix oplus(const Matrix& m, const Matrix& n);
/// Kronecker product M ⊗ N : Product(B,A) → Product(Y,X).
Matrix kron(const Matrix& m, const Matrix& n);
/// Khatri-Rao product M △ N : A → Product(B,C).
Matrix khatri(const Matrix& m, const Matrix& n);
Matrix hadamard(const Matrix& m, const Matrix& n);
/// p·M + (1−p)·N.
Matrix mat_choice(Probability p, const Matrix& m, const Matrix& n);
/// Entrywise sum of equally typed matrices (not CS in general).
Matrix add(const Matrix& m, const Matrix& n);
Matrix scale(double s, const Matrix& m);

/// Injections i1 : A → Sum(A,B) and i2 : B → Sum(A,B).
Matrix inject_left(const Dim& a, const Dim& b);
Matrix inject_right(const Dim& a, const Dim& b);
/// fst = id ⊗ ! and snd = ! ⊗ id.
Matrix fst_matrix(const Dim& b, const Dim& c);
Matrix snd_matrix(const Dim& b, const Dim& c);

/// Reinterprets a matrix over differently structured Dims of equal sizes.
Matrix relabel(const Matrix& m, const Dim& cols, const Dim& rows);

/// Cell (b,a) = mass of b in f(a). TruncationError if some f(a) puts mass
/// outside `rows`.
Matrix from_probfn(const ProbFn& f, const Dim& cols, const Dim& rows);
/// Column lookup; DomainError for inputs outside cols or non-CS columns.
ProbFn to_probfn(const Matrix& m);

/// Row-major CSV; numbers are the shortest fixed-notation decimal that
/// round-trips (at most 17 significant digits). With `header`, a first row of
/// column labels and a leading label cell per row.
void write_csv(std::ostream& os, const Matrix& m, bool header = false);
/// Space-aligned table rounded to `digits` decimals.
void write_table(std::ostream& os, const Matrix& m, int digits = 4, bool header = true);
std::string format_number(double x);

}  // namespace faultcalc
