#include "alcove/lattice.hpp"

namespace alcove {

// Row operations are mirrored on U and column operations on V so that
// U·A·V = D holds throughout. Pivots are chosen by smallest absolute value
// among the remaining block to keep coefficient growth down.
SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // smallest nonzero pivot in the trailing block
      std::size_t pi = m, pj = n;
      Integer best;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          Integer mag = abs(d(i, j));
          if (pi == m || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == m) goto done;  // trailing block is zero
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_columns(t, pj);
      v.swap_columns(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_column_multiple(j, t, -q);
        v.add_column_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
done:
  SmithDecomposition result{std::move(u), std::move(d), std::move(v), {}};
  result.factors.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) result.factors.push_back(result.D(t, t));
  return result;
}

}  // namespace alcove
