#pragma once

namespace ssne {

// Sets the worker count for all OpenMP kernels (and the BLAS backend where
// the environment allows). 0 = hardware default.
void set_num_threads(int threads);
int num_threads();

}  // namespace ssne
