#include "hhc/coeff.hpp"

#include <cctype>

namespace hhc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::CompositionNonzero: return "CompositionNonzero";
    case ErrorCode::NotGroupRing: return "NotGroupRing";
    case ErrorCode::NotAmalgam: return "NotAmalgam";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::SliceMismatch: return "SliceMismatch";
    case ErrorCode::UnsupportedArity: return "UnsupportedArity";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

Ring Ring::integers() { return Ring(Kind::Integers, 0); }
Ring Ring::rationals() { return Ring(Kind::Rationals, 0); }

Ring Ring::modulo(const mpz_class& m) {
  if (m < 2) {
    throw Error(ErrorCode::InvalidInput, "modulus must be at least 2, got " + m.get_str());
  }
  return Ring(Kind::IntegersModM, m);
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "Z/") {
    auto digits = text.substr(2);
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::InvalidInput, "bad modulus in ring '" + std::string(text) + "'");
      }
    }
    return modulo(mpz_class(std::string(digits)));
  }
  throw Error(ErrorCode::InvalidInput, "unknown ring '" + std::string(text) + "' (use Z, Q or Z/m)");
}

bool Ring::is_field() const {
  if (kind_ == Kind::Rationals) return true;
  if (kind_ == Kind::IntegersModM) return mpz_probab_prime_p(modulus_.get_mpz_t(), 30) > 0;
  return false;
}

Scalar Ring::normalize(const Scalar& x) const {
  Scalar y = x;
  normalize_in_place(y);
  return y;
}

void Ring::normalize_in_place(Scalar& x) const {
  x.canonicalize();
  switch (kind_) {
    case Kind::Rationals:
      return;
    case Kind::Integers:
      if (x.get_den() != 1) {
        throw Error(ErrorCode::InvalidInput, "fraction " + x.get_str() + " is not an integer");
      }
      return;
    case Kind::IntegersModM: {
      mpz_class num = x.get_num();
      if (x.get_den() != 1) {
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), modulus_.get_mpz_t()) == 0) {
          throw Error(ErrorCode::InvalidInput,
                      "denominator of " + x.get_str() + " is not invertible mod " + modulus_.get_str());
        }
        num *= inv;
      }
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t());
      x = Scalar(r);
      return;
    }
  }
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::IntegersModM: return "Z/" + modulus_.get_str();
  }
  return "?";
}

}  // namespace hhc
