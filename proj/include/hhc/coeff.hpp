#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "hhc/error.hpp"

namespace hhc {

/// Exact scalar. Integers and residues are stored with denominator 1.
using Scalar = mpq_class;

/// Coefficient ring k: the integers, Z/m (m >= 2) or the rationals.
class Ring {
 public:
  enum class Kind { Integers, IntegersModM, Rationals };

  static Ring integers();
  static Ring rationals();
  /// Throws InvalidInput when m < 2.
  static Ring modulo(const mpz_class& m);
  /// Accepts "Z", "Q", "Z/m".
  static Ring parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  const mpz_class& modulus() const noexcept { return modulus_; }

  /// Q or Z/p with p prime.
  bool is_field() const;
  /// True only for Z/2, where every sign is +1.
  bool characteristic_two() const { return kind_ == Kind::IntegersModM && modulus_ == 2; }

  /// Canonical representative: reduced fraction, residue in [0, m), or integer.
  /// Throws InvalidInput for a fraction over Z or a non-invertible denominator mod m.
  Scalar normalize(const Scalar& x) const;
  void normalize_in_place(Scalar& x) const;
  bool is_zero(const Scalar& x) const { return normalize(x) == 0; }
  bool equal(const Scalar& a, const Scalar& b) const { return normalize(a - b) == 0; }

  std::string name() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Ring(Kind kind, mpz_class modulus) : kind_(kind), modulus_(std::move(modulus)) {}

  Kind kind_;
  mpz_class modulus_;  // 0 unless IntegersModM
};

}  // namespace hhc
