#include "ietlab/kernels.hpp"

#include <omp.h>

#include <atomic>
#include <exception>
#include <stdexcept>

namespace ietlab {

namespace kernels {

namespace {

std::atomic<Backend> g_backend{Backend::OpenMP};

void check_square(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
}

void check_apply(const TransitionMatrix& a, const IntVector& v) {
  if (a.size() != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
}

BigInt dot_row(const TransitionMatrix& a, int row, const IntVector& v) {
  BigInt acc = 0;
  const int n = static_cast<int>(a.size());
  for (int k = 1; k <= n; ++k) {
    if (sgn(a(row, k)) != 0 && sgn(v[static_cast<std::size_t>(k - 1)]) != 0) {
      mpz_addmul(acc.get_mpz_t(), a(row, k).get_mpz_t(),
                 v[static_cast<std::size_t>(k - 1)].get_mpz_t());
    }
  }
  return acc;
}

BigInt dot_entry(const TransitionMatrix& a, const TransitionMatrix& b, int row, int col) {
  BigInt acc = 0;
  const int n = static_cast<int>(a.size());
  for (int k = 1; k <= n; ++k) {
    if (sgn(a(row, k)) != 0 && sgn(b(k, col)) != 0) {
      mpz_addmul(acc.get_mpz_t(), a(row, k).get_mpz_t(), b(k, col).get_mpz_t());
    }
  }
  return acc;
}

std::vector<IntVector> chain_from(const std::vector<TransitionMatrix>& factors,
                                  const IntVector& seed) {
  std::vector<IntVector> chain(factors.size() + 1);
  chain.back() = seed;
  for (std::size_t k = factors.size(); k > 0; --k) {
    chain[k - 1] = serial::apply(factors[k - 1], chain[k]);
  }
  return chain;
}

}  // namespace

void set_backend(Backend backend) { g_backend.store(backend); }
Backend backend() { return g_backend.load(); }
int max_threads() { return omp_get_max_threads(); }

namespace serial {

TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b) {
  check_square(a, b);
  const int n = static_cast<int>(a.size());
  TransitionMatrix out(a.size());
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) out(r, c) = dot_entry(a, b, r, c);
  return out;
}

IntVector apply(const TransitionMatrix& a, const IntVector& v) {
  check_apply(a, v);
  IntVector out(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) out[r] = dot_row(a, static_cast<int>(r + 1), v);
  return out;
}

std::vector<TransitionMatrix> prefix_products(const std::vector<TransitionMatrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("prefix_products: no factors");
  std::vector<TransitionMatrix> out;
  out.reserve(factors.size() + 1);
  out.push_back(TransitionMatrix::identity(factors.front().size()));
  for (const auto& f : factors) out.push_back(multiply(out.back(), f));
  return out;
}

std::vector<std::vector<IntVector>> suffix_chains(const std::vector<TransitionMatrix>& factors,
                                                  const std::vector<IntVector>& seeds) {
  std::vector<std::vector<IntVector>> out;
  out.reserve(seeds.size());
  for (const auto& seed : seeds) out.push_back(chain_from(factors, seed));
  return out;
}

}  // namespace serial

namespace omp {

TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b) {
  check_square(a, b);
  const int n = static_cast<int>(a.size());
  TransitionMatrix out(a.size());
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) out(r, c) = dot_entry(a, b, r, c);
  return out;
}

IntVector apply(const TransitionMatrix& a, const IntVector& v) {
  check_apply(a, v);
  const int n = static_cast<int>(v.size());
  IntVector out(v.size());
#pragma omp parallel for schedule(static)
  for (int r = 0; r < n; ++r) out[static_cast<std::size_t>(r)] = dot_row(a, r + 1, v);
  return out;
}

std::vector<TransitionMatrix> prefix_products(const std::vector<TransitionMatrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("prefix_products: no factors");
  std::vector<TransitionMatrix> out;
  out.reserve(factors.size() + 1);
  out.push_back(TransitionMatrix::identity(factors.front().size()));
  for (const auto& f : factors) out.push_back(multiply(out.back(), f));
  return out;
}

std::vector<std::vector<IntVector>> suffix_chains(const std::vector<TransitionMatrix>& factors,
                                                  const std::vector<IntVector>& seeds) {
  const int count = static_cast<int>(seeds.size());
  std::vector<std::vector<IntVector>> out(seeds.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < count; ++s) {
    try {
      out[static_cast<std::size_t>(s)] = chain_from(factors, seeds[static_cast<std::size_t>(s)]);
    } catch (...) {
#pragma omp critical(ietlab_suffix_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace omp

TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b) {
  return backend() == Backend::OpenMP ? omp::multiply(a, b) : serial::multiply(a, b);
}

IntVector apply(const TransitionMatrix& a, const IntVector& v) {
  return backend() == Backend::OpenMP ? omp::apply(a, v) : serial::apply(a, v);
}

std::vector<TransitionMatrix> prefix_products(const std::vector<TransitionMatrix>& factors) {
  return backend() == Backend::OpenMP ? omp::prefix_products(factors)
                                      : serial::prefix_products(factors);
}

std::vector<std::vector<IntVector>> suffix_chains(const std::vector<TransitionMatrix>& factors,
                                                  const std::vector<IntVector>& seeds) {
  return backend() == Backend::OpenMP ? omp::suffix_chains(factors, seeds)
                                      : serial::suffix_chains(factors, seeds);
}

}  // namespace kernels
}  // namespace ietlab
