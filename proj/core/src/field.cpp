#include "agpir/field.hpp"

#include <bit>
#include <sstream>

namespace agpir {

namespace {

constexpr std::uint64_t kMaxQ = std::uint64_t{1} << 20;

// Bit-packed polynomials over F_2: bit i is the coefficient of x^i.
int gf2_deg(std::uint32_t a) { return a == 0 ? -1 : std::bit_width(a) - 1; }

std::uint32_t gf2_mod(std::uint32_t a, std::uint32_t b) {
  const int db = gf2_deg(b);
  while (gf2_deg(a) >= db) a ^= b << (gf2_deg(a) - db);
  return a;
}

std::uint32_t gf2_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t mod, int m) {
  std::uint32_t r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> m) & 1u) a ^= mod;
  }
  return r;
}

// Inverse of a modulo mod in F_2[x], standard extended Euclid.
std::uint32_t gf2_invmod(std::uint32_t a, std::uint32_t mod) {
  std::uint32_t r0 = mod, r1 = a;
  std::uint32_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    // quotient of r0 by r1
    std::uint32_t q = 0, r = r0;
    const int d1 = gf2_deg(r1);
    while (gf2_deg(r) >= d1) {
      const int shift = gf2_deg(r) - d1;
      q ^= std::uint32_t{1} << shift;
      r ^= r1 << shift;
    }
    r0 = r1;
    r1 = r;
    // s = s0 + q * s1 in F_2[x]
    std::uint32_t qs = 0, qq = q, ss = s1;
    while (qq != 0) {
      if (qq & 1u) qs ^= ss;
      qq >>= 1;
      ss <<= 1;
    }
    const std::uint32_t s = s0 ^ qs;
    s0 = s1;
    s1 = s;
  }
  // r0 = gcd(a, mod) = 1 for irreducible mod and a != 0
  return s0;
}

bool gf2_irreducible(std::uint32_t f, int m) {
  if (m < 1) return false;
  // Trial division against all monic polynomials of degree 1..m/2.
  for (int d = 1; 2 * d <= m; ++d) {
    const std::uint32_t lead = std::uint32_t{1} << d;
    for (std::uint32_t low = 0; low < lead; ++low) {
      if (gf2_mod(f, lead | low) == 0) return false;
    }
  }
  return true;
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  s0 %= static_cast<std::int64_t>(p);
  if (s0 < 0) s0 += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(s0);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) {
    throw Error("field: characteristic " + std::to_string(spec_.p) + " is not prime");
  }
  if (spec_.m < 1) throw Error("field: extension degree must be positive");
  if (spec_.m > 1 && spec_.p != 2) {
    throw Error("field: extension fields are supported only in characteristic 2");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec_.m; ++i) {
    q *= spec_.p;
    if (q > kMaxQ) throw Error("field: q = p^m exceeds the supported range 2^20");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (spec_.m == 1) {
    if (!spec_.modulus.empty()) {
      throw Error("field: modulus is only valid for extension fields (m > 1)");
    }
    binary_ext_ = false;
    return;
  }

  binary_ext_ = true;
  if (spec_.modulus.size() != spec_.m + 1) {
    throw Error("field: modulus must list m+1 coefficients, low degree first");
  }
  mod_bits_ = 0;
  for (std::size_t i = 0; i < spec_.modulus.size(); ++i) {
    const std::uint32_t c = spec_.modulus[i];
    if (c >= spec_.p) throw Error("field: modulus coefficient out of range");
    if (c) mod_bits_ |= std::uint32_t{1} << i;
  }
  if (((mod_bits_ >> spec_.m) & 1u) == 0) {
    throw Error("field: modulus must be monic of degree m");
  }
  if (!gf2_irreducible(mod_bits_, static_cast<int>(spec_.m))) {
    throw Error("field: modulus polynomial is reducible over F_2");
  }
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
  if (binary_ext_) return a ^ b;
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<FieldElem>(s >= q_ ? s - q_ : s);
}

FieldElem Field::sub(FieldElem a, FieldElem b) const {
  if (binary_ext_) return a ^ b;
  return a >= b ? a - b : static_cast<FieldElem>(a + q_ - b);
}

FieldElem Field::neg(FieldElem a) const {
  if (binary_ext_) return a;
  return a == 0 ? 0 : q_ - a;
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  if (binary_ext_) {
    return gf2_mulmod(a, b, mod_bits_, static_cast<int>(spec_.m));
  }
  return static_cast<FieldElem>((std::uint64_t{a} * b) % q_);
}

FieldElem Field::inv(FieldElem a) const {
  if (a == 0) throw Error("field: inversion of zero");
  if (binary_ext_) return gf2_invmod(a, mod_bits_);
  return static_cast<FieldElem>(inv_mod_prime(a, q_));
}

FieldElem Field::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
  FieldElem r = 1, base = a;
  while (e != 0) {
    if (e & 1u) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

FieldElem Field::element(std::uint64_t v) const {
  if (v >= q_) {
    throw Error("field: value " + std::to_string(v) + " is not a canonical element of F_" +
                std::to_string(q_));
  }
  return static_cast<FieldElem>(v);
}

std::string Field::to_string(FieldElem a, bool pretty) const {
  if (!pretty || !binary_ext_) return std::to_string(a);
  if (a == 0) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = static_cast<int>(spec_.m) - 1; i >= 0; --i) {
    if (((a >> i) & 1u) == 0) continue;
    if (!first) out << "+";
    if (i == 0) {
      out << "1";
    } else if (i == 1) {
      out << "a";
    } else {
      out << "a^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace agpir
