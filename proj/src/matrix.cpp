#include "faultcalc/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "faultcalc/errors.hpp"
#include "faultcalc/kernels.hpp"

namespace faultcalc {

namespace {

kernels::Shape shape(const Matrix& m) { return {m.num_rows(), m.num_cols()}; }

[[noreturn]] void mismatch(const char* op, const Dim& expected, const Dim& got) {
  throw DimensionError(std::string(op) + ": dimension mismatch, " + describe(expected) + " vs " + describe(got));
}

void require_same_type(const char* op, const Matrix& m, const Matrix& n) {
  if (!(m.cols() == n.cols())) mismatch(op, m.cols(), n.cols());
  if (!(m.rows() == n.rows())) mismatch(op, m.rows(), n.rows());
}

}  // namespace

Matrix::Matrix(Dim cols, Dim rows) : cols_(std::move(cols)), rows_(std::move(rows)) {
  data_.assign(rows_.size() * cols_.size(), 0.0);
}

Matrix::Matrix(Dim cols, Dim rows, std::vector<double> entries)
    : cols_(std::move(cols)), rows_(std::move(rows)), data_(std::move(entries)) {
  if (data_.size() != rows_.size() * cols_.size()) {
    throw DimensionError("matrix entries: expected " + std::to_string(rows_.size() * cols_.size()) + ", got " +
                         std::to_string(data_.size()));
  }
  for (double x : data_) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("matrix entries must be finite and nonnegative");
  }
}

Matrix Matrix::identity(const Dim& d) {
  std::vector<double> e(d.size() * d.size(), 0.0);
  for (std::size_t i = 0; i < d.size(); ++i) e[i * d.size() + i] = 1.0;
  return Matrix(d, d, std::move(e));
}

Matrix Matrix::from_function(const Dim& cols, const Dim& rows, const std::function<Value(const Value&)>& f) {
  std::vector<double> e(rows.size() * cols.size(), 0.0);
  for (std::size_t a = 0; a < cols.size(); ++a) {
    const Value b = f(cols.element(a));
    auto r = rows.index_of(b);
    if (!r) {
      throw TruncationError("value " + render(b) + " (from input " + render(cols.element(a)) + ") lies outside " +
                            describe(rows));
    }
    e[*r * cols.size() + a] = 1.0;
  }
  return Matrix(cols, rows, std::move(e));
}

Matrix Matrix::column(const Dim& rows, const Dist& d) {
  return from_probfn(ProbFn([d](const Value&) { return d; }), Dim::unit(), rows);
}

Matrix Matrix::point(const Dim& rows, const Value& v) {
  return from_function(Dim::unit(), rows, [v](const Value&) { return v; });
}

Matrix Matrix::bang(const Dim& a) { return Matrix(a, Dim::unit(), std::vector<double>(a.size(), 1.0)); }

double Matrix::at(const Value& row, const Value& col) const {
  auto r = rows_.index_of(row);
  auto c = cols_.index_of(col);
  if (!r || !c) throw DomainError("cell (" + render(row) + ", " + render(col) + ") outside matrix type");
  return at(*r, *c);
}

double Matrix::column_sum(std::size_t c) const {
  double s = 0.0;
  for (std::size_t r = 0; r < num_rows(); ++r) s += at(r, c);
  return s;
}

bool same_type(const Matrix& m, const Matrix& n) { return m.cols() == n.cols() && m.rows() == n.rows(); }

bool column_stochastic(const Matrix& m, double tol) {
  for (std::size_t c = 0; c < m.num_cols(); ++c) {
    if (std::abs(m.column_sum(c) - 1.0) > tol) return false;
  }
  return true;
}

bool is_sharp(const Matrix& m, double tol) {
  if (!column_stochastic(m, tol)) return false;
  for (std::size_t c = 0; c < m.num_cols(); ++c) {
    bool found = false;
    for (std::size_t r = 0; r < m.num_rows() && !found; ++r) found = std::abs(m.at(r, c) - 1.0) <= tol;
    if (!found) return false;
  }
  return true;
}

std::vector<std::size_t> sharp_image(const Matrix& m) {
  if (!is_sharp(m)) throw DomainError("matrix is not sharp");
  std::vector<std::size_t> img(m.num_cols());
  for (std::size_t c = 0; c < m.num_cols(); ++c) {
    for (std::size_t r = 0; r < m.num_rows(); ++r) {
      if (std::abs(m.at(r, c) - 1.0) <= kStructuralTolerance) {
        img[c] = r;
        break;
      }
    }
  }
  return img;
}

double max_abs_diff(const Matrix& m, const Matrix& n) {
  require_same_type("max_abs_diff", m, n);
  double d = 0.0;
  for (std::size_t i = 0; i < m.data().size(); ++i) d = std::max(d, std::abs(m.data()[i] - n.data()[i]));
  return d;
}

bool bitwise_equal(const Matrix& m, const Matrix& n) {
  return same_type(m, n) && std::equal(m.data().begin(), m.data().end(), n.data().begin());
}

Matrix compose(const Matrix& m, const Matrix& n) {
  if (!(m.cols() == n.rows())) mismatch("compose", m.cols(), n.rows());
  std::vector<double> out(m.num_rows() * n.num_cols());
  kernels::parallel::matmul(m.data(), shape(m), n.data(), shape(n), out);
  return Matrix(n.cols(), m.rows(), std::move(out));
}

Matrix converse(const Matrix& m) {
  std::vector<double> out(m.data().size());
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    for (std::size_t c = 0; c < m.num_cols(); ++c) out[c * m.num_rows() + r] = m.at(r, c);
  }
  return Matrix(m.rows(), m.cols(), std::move(out));
}

Matrix junc(const Matrix& m, const Matrix& n) {
  if (!(m.rows() == n.rows())) mismatch("junc", m.rows(), n.rows());
  const std::size_t cols = m.num_cols() + n.num_cols();
  std::vector<double> out(m.num_rows() * cols);
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    std::copy_n(m.data().begin() + r * m.num_cols(), m.num_cols(), out.begin() + r * cols);
    std::copy_n(n.data().begin() + r * n.num_cols(), n.num_cols(), out.begin() + r * cols + m.num_cols());
  }
  return Matrix(Dim::sum(m.cols(), n.cols()), m.rows(), std::move(out));
}

Matrix split(const Matrix& m, const Matrix& n) {
  if (!(m.cols() == n.cols())) mismatch("split", m.cols(), n.cols());
  std::vector<double> out(m.data().begin(), m.data().end());
  out.insert(out.end(), n.data().begin(), n.data().end());
  return Matrix(m.cols(), Dim::sum(m.rows(), n.rows()), std::move(out));
}

Matrix oplus(const Matrix& m, const Matrix& n) {
  const std::size_t cols = m.num_cols() + n.num_cols();
  const std::size_t rows = m.num_rows() + n.num_rows();
  std::vector<double> out(rows * cols, 0.0);
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    std::copy_n(m.data().begin() + r * m.num_cols(), m.num_cols(), out.begin() + r * cols);
  }
  for (std::size_t r = 0; r < n.num_rows(); ++r) {
    std::copy_n(n.data().begin() + r * n.num_cols(), n.num_cols(),
                out.begin() + (m.num_rows() + r) * cols + m.num_cols());
  }
  return Matrix(Dim::sum(m.cols(), n.cols()), Dim::sum(m.rows(), n.rows()), std::move(out));
}

Matrix kron(const Matrix& m, const Matrix& n) {
  std::vector<double> out(m.data().size() * n.data().size());
  kernels::parallel::kron(m.data(), shape(m), n.data(), shape(n), out);
  return Matrix(Dim::product(m.cols(), n.cols()), Dim::product(m.rows(), n.rows()), std::move(out));
}

Matrix khatri(const Matrix& m, const Matrix& n) {
  if (!(m.cols() == n.cols())) mismatch("khatri", m.cols(), n.cols());
  std::vector<double> out(m.num_rows() * n.num_rows() * m.num_cols());
  kernels::parallel::khatri(m.data(), shape(m), n.data(), shape(n), out);
  return Matrix(m.cols(), Dim::product(m.rows(), n.rows()), std::move(out));
}

Matrix hadamard(const Matrix& m, const Matrix& n) {
  require_same_type("hadamard", m, n);
  std::vector<double> out(m.data().size());
  kernels::parallel::hadamard(m.data(), n.data(), out);
  return Matrix(m.cols(), m.rows(), std::move(out));
}

Matrix mat_choice(Probability p, const Matrix& m, const Matrix& n) {
  require_same_type("mat_choice", m, n);
  std::vector<double> out(m.data().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.value() * m.data()[i] + p.complement() * n.data()[i];
  return Matrix(m.cols(), m.rows(), std::move(out));
}

Matrix add(const Matrix& m, const Matrix& n) {
  require_same_type("add", m, n);
  std::vector<double> out(m.data().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = m.data()[i] + n.data()[i];
  return Matrix(m.cols(), m.rows(), std::move(out));
}

Matrix scale(double s, const Matrix& m) {
  std::vector<double> out(m.data().begin(), m.data().end());
  for (double& x : out) x *= s;
  return Matrix(m.cols(), m.rows(), std::move(out));
}

Matrix inject_left(const Dim& a, const Dim& b) {
  return Matrix::from_function(a, Dim::sum(a, b), [](const Value& x) { return Value::left(x); });
}

Matrix inject_right(const Dim& a, const Dim& b) {
  return Matrix::from_function(b, Dim::sum(a, b), [](const Value& y) { return Value::right(y); });
}

Matrix fst_matrix(const Dim& b, const Dim& c) {
  return relabel(kron(Matrix::identity(b), Matrix::bang(c)), Dim::product(b, c), b);
}

Matrix snd_matrix(const Dim& b, const Dim& c) {
  return relabel(kron(Matrix::bang(b), Matrix::identity(c)), Dim::product(b, c), c);
}

Matrix relabel(const Matrix& m, const Dim& cols, const Dim& rows) {
  if (cols.size() != m.num_cols() || rows.size() != m.num_rows()) {
    throw DimensionError("relabel: sizes differ, " + describe(m.cols()) + "→" + describe(m.rows()) + " vs " +
                         describe(cols) + "→" + describe(rows));
  }
  return Matrix(cols, rows, std::vector<double>(m.data().begin(), m.data().end()));
}

Matrix from_probfn(const ProbFn& f, const Dim& cols, const Dim& rows) {
  std::vector<double> e(rows.size() * cols.size(), 0.0);
  for (std::size_t a = 0; a < cols.size(); ++a) {
    const Dist d = f(cols.element(a));
    for (const auto& [b, m] : d.support()) {
      auto r = rows.index_of(b);
      if (!r) {
        throw TruncationError("value " + render(b) + " (from input " + render(cols.element(a)) + ") lies outside " +
                              describe(rows));
      }
      e[*r * cols.size() + a] = m;
    }
  }
  return Matrix(cols, rows, std::move(e));
}

ProbFn to_probfn(const Matrix& m) {
  return ProbFn([m](const Value& a) {
    auto c = m.cols().index_of(a);
    if (!c) throw DomainError("input " + render(a) + " outside " + describe(m.cols()));
    std::vector<Dist::Entry> entries;
    for (std::size_t r = 0; r < m.num_rows(); ++r) {
      if (m.at(r, *c) > 0.0) entries.emplace_back(m.rows().element(r), m.at(r, *c));
    }
    return Dist(entries);
  });
}

std::string format_number(double x) {
  char buf[400];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& os, const Matrix& m, bool header) {
  if (header) {
    for (std::size_t c = 0; c < m.num_cols(); ++c) os << ',' << csv_field(render(m.cols().element(c)));
    os << '\n';
  }
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    if (header) os << csv_field(render(m.rows().element(r))) << ',';
    for (std::size_t c = 0; c < m.num_cols(); ++c) {
      if (c) os << ',';
      os << format_number(m.at(r, c));
    }
    os << '\n';
  }
}

void write_table(std::ostream& os, const Matrix& m, int digits, bool header) {
  std::vector<std::vector<std::string>> cells(m.num_rows() + (header ? 1 : 0));
  if (header) {
    cells[0].push_back("");
    for (std::size_t c = 0; c < m.num_cols(); ++c) cells[0].push_back(render(m.cols().element(c)));
  }
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    auto& row = cells[r + (header ? 1 : 0)];
    if (header) row.push_back(render(m.rows().element(r)));
    for (std::size_t c = 0; c < m.num_cols(); ++c) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.*f", digits, m.at(r, c));
      row.push_back(buf);
    }
  }
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << "  ";
      os << std::string(width[i] - row[i].size(), ' ') << row[i];
    }
    os << '\n';
  }
}

}  // namespace faultcalc
