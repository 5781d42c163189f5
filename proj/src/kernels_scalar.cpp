#include "bhwalk/kernels.hpp"

namespace bhw::kernels {

namespace {

void gemv_t_scalar(const double* A, int rows, int cols, const double* x,
                   double* y) {
  for (int j = 0; j < cols; ++j) {
    const double* col = A + static_cast<long>(j) * rows;
    double acc = 0.0;
    for (int r = 0; r < rows; ++r) acc += col[r] * x[r];
    y[j] = acc;
  }
}

void gemv_n_scalar(const double* A, int rows, int cols, const double* x,
                   double* y) {
  for (int r = 0; r < rows; ++r) y[r] = 0.0;
  for (int j = 0; j < cols; ++j) {
    const double* col = A + static_cast<long>(j) * rows;
    const double xj = x[j];
    for (int r = 0; r < rows; ++r) y[r] += xj * col[r];
  }
}

void phase_apply_scalar(const double* c, const double* s, double* re,
                        double* im, int n) {
  for (int k = 0; k < n; ++k) {
    const double r = re[k], i = im[k];
    re[k] = r * c[k] + i * s[k];
    im[k] = i * c[k] - r * s[k];
  }
}

void abs2_scalar(const double* re, const double* im, double* out, int n) {
  for (int k = 0; k < n; ++k) out[k] = re[k] * re[k] + im[k] * im[k];
}

double sum_abs2_scalar(const double* re, const double* im, int n) {
  double acc = 0.0;
  for (int k = 0; k < n; ++k) acc += re[k] * re[k] + im[k] * im[k];
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{gemv_t_scalar, gemv_n_scalar, phase_apply_scalar,
                       abs2_scalar, sum_abs2_scalar, "scalar"};
  return ops;
}

}  // namespace bhw::kernels
