#include "hhc/cohomology.hpp"

#include <utility>

#include "hhc/error.hpp"
#include "hhc/smith.hpp"

namespace hhc {
namespace {

void check_shapes(const IntegerMatrix& d_in, const IntegerMatrix& d_out) {
  if (d_out.cols() != d_in.rows()) {
    throw Error(ErrorCode::InvalidInput, "differentials are not composable: d_out has " +
                                             std::to_string(d_out.cols()) + " columns, d_in has " +
                                             std::to_string(d_in.rows()) + " rows");
  }
}

IntegerMatrix scaled_identity(std::size_t n, const mpz_class& m) {
  IntegerMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = m;
  return out;
}

// ker(d_out)/im(d_in) over Z/m for arbitrary m, computed on integer lifts.
CohomologyGroup cohomology_mod(const IntegerMatrix& d_in, const IntegerMatrix& d_out, const mpz_class& m) {
  const std::size_t n = d_in.rows();
  CohomologyGroup out;
  if (n == 0) return out;

  // Lattice K = {x in Z^n : d_out x = 0 mod m}, from the integer kernel of [d_out | m I].
  IntegerMatrix stacked = d_out.hconcat(scaled_identity(d_out.rows(), m));
  SmithForm kernel_snf = smith_normal_form(stacked);
  std::size_t r = 0;
  while (r < std::min(stacked.rows(), stacked.cols()) && kernel_snf.S(r, r) != 0) ++r;
  IntegerMatrix gens(n, stacked.cols() - r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = r; j < stacked.cols(); ++j) gens(i, j - r) = kernel_snf.V(i, j);

  // K = U'^{-1} D Z^n; coordinates of im(d_in) + m Z^n in that basis are D^{-1} U' [d_in | m I].
  SmithForm basis = smith_normal_form(gens);
  IntegerMatrix image = basis.U * d_in.hconcat(scaled_identity(n, m));
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class d = basis.S(i, i);
    for (std::size_t j = 0; j < image.cols(); ++j) image(i, j) /= d;
  }
  for (const auto& f : invariant_factors(image).factors) {
    if (f == 1) continue;
    if (f == m) {
      ++out.free_rank;
    } else {
      out.torsion.push_back(f);
    }
  }
  return out;
}

// Integral complex reduced mod m: H^n ⊗ Z/m ⊕ Tor(H^{n+1}, Z/m), read off the invariant factors.
CohomologyGroup cohomology_uct(const IntegerMatrix& d_in, const IntegerMatrix& d_out, const mpz_class& m) {
  CohomologyGroup out;
  const InvariantFactors in = invariant_factors(d_in);
  const InvariantFactors next = invariant_factors(d_out);
  std::vector<mpz_class> parts(d_in.rows() - in.rank - next.rank, m);
  for (const auto& f : in.factors) parts.push_back(gcd(f, m));
  for (const auto& f : next.factors) parts.push_back(gcd(f, m));
  for (auto& f : normalize_diagonal(std::move(parts))) {
    if (f == 1) continue;
    if (f == m) {
      ++out.free_rank;
    } else {
      out.torsion.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

std::size_t rational_rank(const IntegerMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<mpz_class>> rows(m, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
  // Bareiss elimination keeps every entry an integer minor.
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t piv = rank;
    while (piv < m && rows[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(rows[piv], rows[rank]);
    const mpz_class& p = rows[rank][c];
    for (std::size_t i = rank + 1; i < m; ++i) {
      mpz_class f = rows[i][c];
      for (std::size_t j = c + 1; j < n; ++j) {
        mpz_class v = p * rows[i][j] - f * rows[rank][j];
        mpz_divexact(rows[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t field_rank(const IntegerMatrix& a, const Ring& ring) {
  if (ring.kind() == Ring::Kind::Rationals) return rational_rank(a);
  if (!ring.is_field()) throw Error(ErrorCode::InvalidInput, "rank requested over non-field " + ring.name());
  return rank_mod_prime(a, ring.modulus());
}

CohomologyGroup cohomology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out, const Ring& ring) {
  check_shapes(d_in, d_out);
  const std::size_t n = d_in.rows();
  CohomologyGroup out;
  switch (ring.kind()) {
    case Ring::Kind::Integers:
    case Ring::Kind::Rationals: {
      if (!(d_out * d_in).is_zero()) throw Error(ErrorCode::CompositionNonzero, "d_out * d_in != 0");
      if (ring.kind() == Ring::Kind::Rationals) {
        out.free_rank = n - rational_rank(d_out) - rational_rank(d_in);
        return out;
      }
      InvariantFactors inv = invariant_factors(d_in);
      out.free_rank = n - rational_rank(d_out) - inv.rank;
      for (const auto& f : inv.factors) {
        if (f > 1) out.torsion.push_back(f);
      }
      return out;
    }
    case Ring::Kind::IntegersModM: {
      const mpz_class& m = ring.modulus();
      if (!(d_out * d_in).is_zero_mod(m)) {
        throw Error(ErrorCode::CompositionNonzero, "d_out * d_in != 0 mod " + m.get_str());
      }
      if (ring.is_field()) {
        out.free_rank = n - rank_mod_prime(d_out, m) - rank_mod_prime(d_in, m);
        return out;
      }
      if ((d_out * d_in).is_zero()) return cohomology_uct(d_in, d_out, m);
      return cohomology_mod(d_in, d_out, m);
    }
  }
  return out;
}

CohomologyGroup direct_sum(const CohomologyGroup& a, const CohomologyGroup& b, const Ring& ring) {
  CohomologyGroup out;
  std::vector<mpz_class> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  const bool composite = ring.kind() == Ring::Kind::IntegersModM && !ring.is_field();
  if (!composite) {
    out.free_rank = a.free_rank + b.free_rank;
    for (auto& f : normalize_diagonal(std::move(all)))
      if (f != 1) out.torsion.push_back(std::move(f));
    return out;
  }
  const mpz_class& m = ring.modulus();
  all.insert(all.end(), a.free_rank + b.free_rank, m);
  for (auto& f : normalize_diagonal(std::move(all))) {
    if (f == 1) continue;
    if (f == m) {
      ++out.free_rank;
    } else {
      out.torsion.push_back(std::move(f));
    }
  }
  return out;
}

std::string render(const CohomologyGroup& g, const Ring& ring) {
  if (g.is_zero()) return "0";
  std::string s;
  for (const auto& t : g.torsion) {
    if (!s.empty()) s += " ⊕ ";
    s += "Z/" + t.get_str();
  }
  if (g.free_rank > 0) {
    std::string base;
    switch (ring.kind()) {
      case Ring::Kind::Integers: base = "Z"; break;
      case Ring::Kind::Rationals: base = "Q"; break;
      case Ring::Kind::IntegersModM: base = "Z/" + ring.modulus().get_str(); break;
    }
    if (g.free_rank > 1) {
      if (ring.kind() == Ring::Kind::IntegersModM) base = "(" + base + ")";
      base += "^" + std::to_string(g.free_rank);
    }
    if (!s.empty()) s += " ⊕ ";
    s += base;
  }
  return s;
}

}  // namespace hhc
