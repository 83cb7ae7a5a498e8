#pragma once

// Big-integer linear algebra kernels. Each kernel has a serial reference
// implementation and an OpenMP implementation with identical results; the
// rest of the library calls through the dispatching front-ends at the bottom,
// which honour the process-wide backend switch.

#include <vector>

#include "ietlab/matrix.hpp"

namespace ietlab::kernels {

enum class Backend { Serial, OpenMP };

void set_backend(Backend backend);
Backend backend();
int max_threads();

namespace serial {

TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b);
IntVector apply(const TransitionMatrix& a, const IntVector& v);
// Left-prefix products P_k = M_1 ... M_k for k = 0..factors.size().
std::vector<TransitionMatrix> prefix_products(const std::vector<TransitionMatrix>& factors);
// Suffix chains t_{k-1} = M_k t_k starting from each seed; result[s][k] = t_k.
std::vector<std::vector<IntVector>> suffix_chains(const std::vector<TransitionMatrix>& factors,
                                                  const std::vector<IntVector>& seeds);

}  // namespace serial

namespace omp {

TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b);
IntVector apply(const TransitionMatrix& a, const IntVector& v);
std::vector<TransitionMatrix> prefix_products(const std::vector<TransitionMatrix>& factors);
std::vector<std::vector<IntVector>> suffix_chains(const std::vector<TransitionMatrix>& factors,
                                                  const std::vector<IntVector>& seeds);

}  // namespace omp

TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b);
IntVector apply(const TransitionMatrix& a, const IntVector& v);
std::vector<TransitionMatrix> prefix_products(const std::vector<TransitionMatrix>& factors);
std::vector<std::vector<IntVector>> suffix_chains(const std::vector<TransitionMatrix>& factors,
                                                  const std::vector<IntVector>& seeds);

}  // namespace ietlab::kernels
