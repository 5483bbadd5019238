#pragma once

#include "tph/matrix.hpp"

#include <cstddef>
#include <vector>

// Hot exact-arithmetic loops. Each kernel has a straightforward serial
// reference and an OpenMP variant that must agree with it bit for bit; the
// unsuffixed entry points pick one by problem size.
namespace tph::kernels {

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

ExactMatrix matmul_serial(const ExactMatrix& lhs, const ExactMatrix& rhs);
ExactMatrix matmul_omp(const ExactMatrix& lhs, const ExactMatrix& rhs);
ExactMatrix matmul(const ExactMatrix& lhs, const ExactMatrix& rhs);

RrefResult rref_serial(ExactMatrix m);
RrefResult rref_omp(ExactMatrix m);
RrefResult rref(ExactMatrix m);

/// Work sizes at or above these use the OpenMP variants (unless already inside
/// a parallel region).
inline constexpr std::size_t kMatmulParallelWork = 16384; // rows * inner * cols
inline constexpr std::size_t kRrefParallelWork = 1024;    // rows * cols

} // namespace tph::kernels
