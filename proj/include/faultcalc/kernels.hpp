#pragma once

#include <cstddef>
#include <span>

// Dense row-major kernels behind the Matrix combinators.
//
// `serial` is the reference implementation; `parallel` distributes output
// rows over OpenMP threads. Every output cell is accumulated by exactly one
// thread in the same order as the serial loop, so both produce bitwise
// identical results.
namespace faultcalc::kernels {

struct Shape {
  std::size_t rows;
  std::size_t cols;
  std::size_t size() const { return rows * cols; }
};

namespace serial {

/// out(m×n) = a(m×k) · b(k×n).
void matmul(std::span<const double> a, Shape sa, std::span<const double> b, Shape sb, std::span<double> out);
/// out((y,x),(b,a)) = m(y,b)·n(x,a); out is (ma.rows·nb.rows) × (ma.cols·nb.cols).
void kron(std::span<const double> m, Shape sm, std::span<const double> n, Shape sn, std::span<double> out);
/// Column-wise Kronecker: out((b,c),a) = m(b,a)·n(c,a); equal column counts.
void khatri(std::span<const double> m, Shape sm, std::span<const double> n, Shape sn, std::span<double> out);
void hadamard(std::span<const double> m, std::span<const double> n, std::span<double> out);

}  // namespace serial

namespace parallel {

void matmul(std::span<const double> a, Shape sa, std::span<const double> b, Shape sb, std::span<double> out);
void kron(std::span<const double> m, Shape sm, std::span<const double> n, Shape sn, std::span<double> out);
void khatri(std::span<const double> m, Shape sm, std::span<const double> n, Shape sn, std::span<double> out);
void hadamard(std::span<const double> m, std::span<const double> n, std::span<double> out);

}  // namespace parallel

/// Work (multiply-adds) below which the parallel kernels stay on one thread.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

}  // namespace faultcalc::kernels
