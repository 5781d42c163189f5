#include "bhwalk/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "bhwalk/errors.hpp"

namespace bhw::kernels {

bool avx2_available() {
#if defined(BHWALK_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

#if !defined(BHWALK_HAVE_AVX2)
const Ops& avx2_ops() {
  throw Error("AVX2 kernels were not compiled into this build");
}
#endif

namespace {

const Ops& select() {
  if (const char* env = std::getenv("BHWALK_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return scalar_ops();
    if (std::strcmp(env, "avx2") == 0) {
      if (!avx2_available())
        throw Error("BHWALK_KERNELS=avx2 requested but AVX2 is unavailable");
      return avx2_ops();
    }
    std::fprintf(stderr,
                 "warning: unknown BHWALK_KERNELS value '%s', using automatic "
                 "selection\n",
                 env);
  }
  return avx2_available() ? avx2_ops() : scalar_ops();
}

}  // namespace

const Ops& active_ops() {
  static const Ops& chosen = select();
  return chosen;
}

}  // namespace bhw::kernels
