#ifndef NCHODGE_TESTS_RANDOM_OBJECTS_HPP
#define NCHODGE_TESTS_RANDOM_OBJECTS_HPP

#include <random>

#include "nchodge/complex.hpp"
#include "nchodge/linalg.hpp"

namespace nchodge::testing {

inline Matrix<BigRational> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi,
                                         double density) {
  std::uniform_int_distribution<int> v(lo, hi);
  std::bernoulli_distribution keep(density);
  Matrix<BigRational> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (keep(rng)) m.set(i, j, BigRational(v(rng)));
    }
  }
  return m;
}

// d^{k+1} is built to kill im d^k: d^{k+1} = M * (projection onto a complement of im d^k).
inline ChainComplex<BigRational> random_complex(std::mt19937& rng, int length, std::size_t maxdim) {
  std::uniform_int_distribution<std::size_t> dd(0, maxdim);
  std::vector<std::size_t> dims;
  for (int k = 0; k < length; ++k) dims.push_back(dd(rng));
  std::vector<Matrix<BigRational>> d;
  Matrix<BigRational> prev;  // d^{k-1}
  for (int k = 0; k + 1 < length; ++k) {
    Matrix<BigRational> m = random_matrix(rng, dims[k + 1], dims[k], -3, 3, 0.7);
    if (k > 0) {
      // Precompose with a map vanishing on im(prev): rows of the left kernel.
      Matrix<BigRational> left = kernel_basis(prev.transpose()).transpose();  // annihilates im(prev)
      Matrix<BigRational> mix = random_matrix(rng, dims[k + 1], left.rows(), -3, 3, 0.7);
      m = mix * left;
    }
    d.push_back(m);
    prev = m;
  }
  return ChainComplex<BigRational>(0, std::move(dims), std::move(d));
}

// P diag(+-1) P^{-1} for a random invertible P.
inline Matrix<BigRational> random_involution(std::mt19937& rng, std::size_t n) {
  Matrix<BigRational> p;
  do {
    p = random_matrix(rng, n, n, -2, 2, 0.8);
  } while (rank(p) != n);
  std::bernoulli_distribution sign(0.5);
  Matrix<BigRational> d(n, n);
  for (std::size_t i = 0; i < n; ++i) d.set(i, i, BigRational(sign(rng) ? 1 : -1));
  return p * d * solve(p, Matrix<BigRational>::identity(n));
}

}  // namespace nchodge::testing

#endif  // NCHODGE_TESTS_RANDOM_OBJECTS_HPP
