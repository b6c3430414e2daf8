#include "hhc/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>

#include "hhc/error.hpp"

namespace hhc {
namespace {

using Row = std::vector<mpz_class>;

// Elimination state. When `track` is false the transform matrices stay empty.
class Reducer {
 public:
  Reducer(const IntegerMatrix& a, bool track) : m_(a.rows()), n_(a.cols()), track_(track) {
    rows_.assign(m_, Row(n_));
    for (std::size_t r = 0; r < m_; ++r)
      for (std::size_t c = 0; c < n_; ++c) rows_[r][c] = a(r, c);
    if (track_) {
      u_.assign(m_, Row(m_));
      for (std::size_t i = 0; i < m_; ++i) u_[i][i] = 1;
      v_.assign(n_, Row(n_));
      for (std::size_t i = 0; i < n_; ++i) v_[i][i] = 1;
    }
  }

  void diagonalize() {
    const std::size_t limit = std::min(m_, n_);
    for (std::size_t t = 0; t < limit; ++t) {
      auto pivot = find_pivot(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      rank_ = t + 1;
      while (true) {
        bool dirty = clear_column(t);
        dirty = clear_row(t) || dirty;
        if (!dirty) break;
      }
    }
  }

  // gcd/lcm pass on the diagonal so that d_i | d_j for i < j, then make it nonnegative.
  void fix_divisibility() {
    for (std::size_t i = 0; i < rank_; ++i) {
      for (std::size_t j = i + 1; j < rank_; ++j) {
        const mpz_class& a = rows_[i][i];
        const mpz_class& b = rows_[j][j];
        if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0) continue;
        combine(i, j);
      }
    }
    for (std::size_t i = 0; i < rank_; ++i) {
      if (rows_[i][i] < 0) {
        rows_[i][i] = -rows_[i][i];
        if (track_)
          for (auto& x : u_[i]) x = -x;
      }
    }
  }

  std::size_t rank() const { return rank_; }
  std::vector<mpz_class> diagonal() const {
    std::vector<mpz_class> d;
    for (std::size_t i = 0; i < rank_; ++i) d.push_back(rows_[i][i]);
    return d;
  }

  IntegerMatrix work() const { return to_matrix(rows_, m_, n_); }
  IntegerMatrix left() const { return to_matrix(u_, m_, m_); }
  // v_ is stored transposed (one Row per column) so that column operations are row operations.
  IntegerMatrix right() const { return to_matrix(v_, n_, n_).transposed(); }

 private:
  static IntegerMatrix to_matrix(const std::vector<Row>& rows, std::size_t m, std::size_t n) {
    IntegerMatrix out(m, n);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) out(r, c) = rows[r][c];
    return out;
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    const mpz_class* best_val = nullptr;
    for (std::size_t r = t; r < m_; ++r) {
      const Row& row = rows_[r];
      for (std::size_t c = t; c < n_; ++c) {
        const mpz_class& x = row[c];
        if (x == 0) continue;
        if (!best_val || mpz_cmpabs(x.get_mpz_t(), best_val->get_mpz_t()) < 0) {
          best = {r, c};
          best_val = &x;
          if (mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0) return best;
        }
      }
    }
    return best;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(rows_[a], rows_[b]);
    if (track_) std::swap(u_[a], u_[b]);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : rows_) std::swap(row[a], row[b]);
    if (track_) std::swap(v_[a], v_[b]);
  }

  // row[dst] -= q * row[src], touching only the support of row[src].
  void row_axpy(std::size_t dst, std::size_t src, const mpz_class& q, std::size_t from) {
    Row& d = rows_[dst];
    const Row& s = rows_[src];
    for (std::size_t c = from; c < n_; ++c) {
      if (s[c] != 0) mpz_submul(d[c].get_mpz_t(), q.get_mpz_t(), s[c].get_mpz_t());
    }
    if (track_) {
      Row& ud = u_[dst];
      const Row& us = u_[src];
      for (std::size_t c = 0; c < m_; ++c) {
        if (us[c] != 0) mpz_submul(ud[c].get_mpz_t(), q.get_mpz_t(), us[c].get_mpz_t());
      }
    }
  }

  // col[dst] -= q * col[src]; below-diagonal part of col[src] is already zero when called.
  void col_axpy(std::size_t dst, std::size_t src, const mpz_class& q, std::size_t from) {
    for (std::size_t r = from; r < m_; ++r) {
      const mpz_class& s = rows_[r][src];
      if (s != 0) mpz_submul(rows_[r][dst].get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
    }
    if (track_) {
      Row& vd = v_[dst];
      const Row& vs = v_[src];
      for (std::size_t c = 0; c < n_; ++c) {
        if (vs[c] != 0) mpz_submul(vd[c].get_mpz_t(), q.get_mpz_t(), vs[c].get_mpz_t());
      }
    }
  }

  // Returns true when the pivot changed (a smaller remainder was swapped in).
  bool clear_column(std::size_t t) {
    bool changed = false;
    mpz_class q;
    for (std::size_t r = t + 1; r < m_; ++r) {
      if (rows_[r][t] == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), rows_[r][t].get_mpz_t(), rows_[t][t].get_mpz_t());
      if (q != 0) row_axpy(r, t, q, t);
      if (rows_[r][t] != 0) {
        swap_rows(t, r);
        changed = true;
        r = t;  // restart the sweep with the smaller pivot
      }
    }
    return changed;
  }

  bool clear_row(std::size_t t) {
    bool changed = false;
    mpz_class q;
    for (std::size_t c = t + 1; c < n_; ++c) {
      if (rows_[t][c] == 0) continue;
      mpz_tdiv_q(q.get_mpz_t(), rows_[t][c].get_mpz_t(), rows_[t][t].get_mpz_t());
      if (q != 0) col_axpy(c, t, q, t);
      if (rows_[t][c] != 0) {
        swap_cols(t, c);
        changed = true;
        c = t;
      }
    }
    return changed;
  }

  // diag(a, b) at (i, i), (j, j) -> diag(gcd, lcm) by unimodular operations.
  void combine(std::size_t i, std::size_t j) {
    mpz_class a = rows_[i][i];
    mpz_class b = rows_[j][j];
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (track_) {
      // col_i += col_j
      for (std::size_t c = 0; c < n_; ++c) v_[i][c] += v_[j][c];
      // rows (i, j) <- [[s, t], [-b/g, a/g]] * rows (i, j)
      mpz_class bg = b / g, ag = a / g;
      for (std::size_t c = 0; c < m_; ++c) {
        mpz_class ri = s * u_[i][c] + t * u_[j][c];
        mpz_class rj = -bg * u_[i][c] + ag * u_[j][c];
        u_[i][c] = std::move(ri);
        u_[j][c] = std::move(rj);
      }
      // col_j -= (t*b/g) * col_i
      mpz_class k = t * b / g;
      for (std::size_t c = 0; c < n_; ++c) v_[j][c] -= k * v_[i][c];
    }
    rows_[i][i] = g;
    rows_[j][j] = a / g * b;
  }

  std::size_t m_, n_;
  bool track_;
  std::size_t rank_ = 0;
  std::vector<Row> rows_;
  std::vector<Row> u_;
  std::vector<Row> v_;
};

}  // namespace

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

SmithForm smith_normal_form(const IntegerMatrix& a) {
  Reducer red(a, true);
  red.diagonalize();
  red.fix_divisibility();
  return SmithForm{red.left(), red.work(), red.right()};
}

InvariantFactors invariant_factors(const IntegerMatrix& a) {
  Reducer red(a, false);
  red.diagonalize();
  red.fix_divisibility();
  return InvariantFactors{red.rank(), red.diagonal()};
}

std::vector<mpz_class> normalize_diagonal(std::vector<mpz_class> entries) {
  std::vector<mpz_class> d;
  for (auto& x : entries) {
    if (x != 0) d.push_back(abs(x));
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t()) != 0) continue;
      mpz_class g = gcd(d[i], d[j]);
      mpz_class l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  return d;
}

std::size_t rank_mod_prime(const IntegerMatrix& a, const mpz_class& p) {
  const std::size_t m = a.rows(), n = a.cols();
  if (p < (mpz_class(1) << 31)) {
    const std::uint64_t pp = p.get_ui();
    std::vector<std::vector<std::uint64_t>> rows(m, std::vector<std::uint64_t>(n));
    mpz_class r;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpz_fdiv_r(r.get_mpz_t(), a(i, j).get_mpz_t(), p.get_mpz_t());
        rows[i][j] = r.get_ui();
      }
    auto inverse = [pp](std::uint64_t x) {
      std::uint64_t result = 1, base = x, e = pp - 2;
      while (e) {
        if (e & 1) result = result * base % pp;
        base = base * base % pp;
        e >>= 1;
      }
      return result;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
      std::size_t piv = rank;
      while (piv < m && rows[piv][c] == 0) ++piv;
      if (piv == m) continue;
      std::swap(rows[piv], rows[rank]);
      const std::uint64_t inv = inverse(rows[rank][c]);
      for (std::size_t j = c; j < n; ++j) rows[rank][j] = rows[rank][j] * inv % pp;
      for (std::size_t i = rank + 1; i < m; ++i) {
        const std::uint64_t f = rows[i][c];
        if (f == 0) continue;
        for (std::size_t j = c; j < n; ++j) {
          if (rows[rank][j] != 0) rows[i][j] = (rows[i][j] + (pp - f) * rows[rank][j]) % pp;
        }
      }
      ++rank;
    }
    return rank;
  }
  // Large primes: Smith form over Z, then count factors not divisible by p.
  auto inv = invariant_factors(a);
  std::size_t rank = 0;
  for (const auto& d : inv.factors) rank += (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) == 0);
  return rank;
}

}  // namespace hhc
