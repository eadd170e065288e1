#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agpir/errors.hpp"

namespace agpir {

// Canonical representative of a field element: an integer in [0, q) encoding
// the residue mod p (prime fields) or the coefficient vector of the residue
// polynomial in base-p positional encoding (extension fields). Equality of
// elements is integer equality.
using FieldElem = std::uint32_t;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  // Coefficients of a degree-m irreducible polynomial over F_p,
  // low-degree-first (size m+1). Required iff m > 1.
  std::vector<std::uint32_t> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Exact arithmetic in F_q for q = p (prime) or q = 2^m (binary extension with
// an explicit modulus polynomial). Immutable after construction; all
// operations are pure and safe for concurrent use.
class Field {
 public:
  Field() : Field(FieldSpec{}) {}  // F_2
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  std::uint32_t extension_degree() const { return spec_.m; }
  std::uint32_t q() const { return q_; }

  FieldElem zero() const { return 0; }
  FieldElem one() const { return 1; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;  // extended Euclid; throws on a == 0
  FieldElem div(FieldElem a, FieldElem b) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const;  // square-and-multiply

  bool is_element(std::uint64_t v) const { return v < q_; }
  FieldElem element(std::uint64_t v) const;  // checked conversion

  // Canonical integer, or a polynomial in the generator for binary
  // extensions when pretty is set (e.g. "a^4+a^3+a^2+1").
  std::string to_string(FieldElem a, bool pretty = false) const;

  friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  FieldSpec spec_;
  std::uint32_t q_ = 0;
  std::uint32_t mod_bits_ = 0;  // modulus as a bitmask, binary extensions only
  bool binary_ext_ = false;
};

bool is_prime(std::uint64_t n);

}  // namespace agpir
