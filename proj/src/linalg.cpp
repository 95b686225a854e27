#include "monadforge/linalg.hpp"

namespace monadforge {

std::size_t rank(const Matrix<Rational>& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<Integer> a(R * C);
  Integer l;
  for (std::size_t i = 0; i < R; ++i) {
    l = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) {
      a[i * C + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * C + j]; };

  // Every entry stays an integer minor of the scaled matrix, so the
  // division by the previous pivot is exact.
  Integer prev = 1, t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && sgn(at(p, c)) == 0) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = c; j < C; ++j) std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        t = at(r, c) * at(i, j);
        mpz_submul(t.get_mpz_t(), at(i, c).get_mpz_t(), at(r, j).get_mpz_t());
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

}  // namespace monadforge
