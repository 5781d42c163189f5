#pragma once

namespace bhw::kernels {

// Dense kernels on the evolve/observable hot paths. Matrices are
// column-major with leading dimension = rows. A scalar reference
// implementation always exists; an AVX2+FMA variant is selected at
// runtime when the CPU supports it. Set BHWALK_KERNELS=scalar|avx2
// to force a backend (equivalence tests rely on this).
struct Ops {
  // y = A^T x
  void (*gemv_t)(const double* A, int rows, int cols, const double* x,
                 double* y);
  // y = A x
  void (*gemv_n)(const double* A, int rows, int cols, const double* x,
                 double* y);
  // (re + i im)[k] *= (c[k] - i s[k])
  void (*phase_apply)(const double* c, const double* s, double* re, double* im,
                      int n);
  // out[k] = re[k]^2 + im[k]^2
  void (*abs2)(const double* re, const double* im, double* out, int n);
  double (*sum_abs2)(const double* re, const double* im, int n);
  const char* name;
};

const Ops& scalar_ops();

// true when the AVX2 variant was compiled in and this CPU has AVX2+FMA
bool avx2_available();
const Ops& avx2_ops();

// scalar or AVX2, chosen once per process (env override wins)
const Ops& active_ops();

}  // namespace bhw::kernels
