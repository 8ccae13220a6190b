#include "faultcalc/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace faultcalc::kernels {

namespace serial {

void matmul(std::span<const double> a, Shape sa, std::span<const double> b, Shape sb, std::span<double> out) {
  for (std::size_t i = 0; i < sa.rows; ++i) {
    for (std::size_t j = 0; j < sb.cols; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < sa.cols; ++k) acc += a[i * sa.cols + k] * b[k * sb.cols + j];
      out[i * sb.cols + j] = acc;
    }
  }
}

void kron(std::span<const double> m, Shape sm, std::span<const double> n, Shape sn, std::span<double> out) {
  const std::size_t out_cols = sm.cols * sn.cols;
  for (std::size_t y = 0; y < sm.rows; ++y) {
    for (std::size_t x = 0; x < sn.rows; ++x) {
      const std::size_t r = y * sn.rows + x;
      for (std::size_t b = 0; b < sm.cols; ++b) {
        const double myb = m[y * sm.cols + b];
        for (std::size_t a = 0; a < sn.cols; ++a) out[r * out_cols + b * sn.cols + a] = myb * n[x * sn.cols + a];
      }
    }
  }
}

void khatri(std::span<const double> m, Shape sm, std::span<const double> n, Shape sn, std::span<double> out) {
  const std::size_t cols = sm.cols;
  for (std::size_t b = 0; b < sm.rows; ++b) {
    for (std::size_t c = 0; c < sn.rows; ++c) {
      const std::size_t r = b * sn.rows + c;
      for (std::size_t a = 0; a < cols; ++a) out[r * cols + a] = m[b * cols + a] * n[c * cols + a];
    }
  }
}

void hadamard(std::span<const double> m, std::span<const double> n, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = m[i] * n[i];
}

}  // namespace serial

namespace parallel {

void matmul(std::span<const double> a, Shape sa, std::span<const double> b, Shape sb, std::span<double> out) {
  const auto rows = static_cast<std::int64_t>(sa.rows);
  const bool big = sa.rows * sa.cols * sb.cols >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (big)
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < sb.cols; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < sa.cols; ++k) acc += a[i * sa.cols + k] * b[k * sb.cols + j];
      out[i * sb.cols + j] = acc;
    }
  }
}

void kron(std::span<const double> m, Shape sm, std::span<const double> n, Shape sn, std::span<double> out) {
  const std::size_t out_cols = sm.cols * sn.cols;
  const auto out_rows = static_cast<std::int64_t>(sm.rows * sn.rows);
  const bool big = out.size() >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (big)
  for (std::int64_t r = 0; r < out_rows; ++r) {
    const std::size_t y = r / sn.rows;
    const std::size_t x = r % sn.rows;
    for (std::size_t b = 0; b < sm.cols; ++b) {
      const double myb = m[y * sm.cols + b];
      for (std::size_t a = 0; a < sn.cols; ++a) out[r * out_cols + b * sn.cols + a] = myb * n[x * sn.cols + a];
    }
  }
}

void khatri(std::span<const double> m, Shape sm, std::span<const double> n, Shape sn, std::span<double> out) {
  const std::size_t cols = sm.cols;
  const auto out_rows = static_cast<std::int64_t>(sm.rows * sn.rows);
  const bool big = out.size() >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (big)
  for (std::int64_t r = 0; r < out_rows; ++r) {
    const std::size_t b = r / sn.rows;
    const std::size_t c = r % sn.rows;
    for (std::size_t a = 0; a < cols; ++a) out[r * cols + a] = m[b * cols + a] * n[c * cols + a];
  }
}

void hadamard(std::span<const double> m, std::span<const double> n, std::span<double> out) {
  const auto size = static_cast<std::int64_t>(out.size());
  const bool big = out.size() >= kParallelThreshold;
#pragma omp parallel for simd schedule(static) if (big)
  for (std::int64_t i = 0; i < size; ++i) out[i] = m[i] * n[i];
}

}  // namespace parallel

}  // namespace faultcalc::kernels
