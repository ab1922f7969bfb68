#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace bqa {

/// Element of GF(P). P must be prime; the modulus is a template parameter so
/// elements stay a plain value type.
template <std::uint32_t P>
class PrimeField {
  static_assert(P >= 2, "modulus must be at least 2");

 public:
  constexpr PrimeField() = default;
  constexpr PrimeField(std::int64_t v)  // NOLINT(google-explicit-constructor)
      : v_(static_cast<std::uint32_t>(((v % static_cast<std::int64_t>(P)) + P) % P)) {}

  [[nodiscard]] constexpr std::uint32_t value() const { return v_; }
  [[nodiscard]] constexpr bool is_zero() const { return v_ == 0; }
  [[nodiscard]] constexpr bool is_one() const { return v_ == 1; }

  [[nodiscard]] constexpr PrimeField inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero");
    // Fermat: a^(P-2)
    std::uint64_t base = v_, result = 1, e = P - 2;
    while (e) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    PrimeField r;
    r.v_ = static_cast<std::uint32_t>(result);
    return r;
  }

  constexpr PrimeField& operator+=(PrimeField o) {
    v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) + o.v_) % P);
    return *this;
  }
  constexpr PrimeField& operator-=(PrimeField o) {
    v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) + P - o.v_) % P);
    return *this;
  }
  constexpr PrimeField& operator*=(PrimeField o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % P);
    return *this;
  }
  constexpr PrimeField& operator/=(PrimeField o) { return *this *= o.inverse(); }

  friend constexpr PrimeField operator+(PrimeField a, PrimeField b) { return a += b; }
  friend constexpr PrimeField operator-(PrimeField a, PrimeField b) { return a -= b; }
  friend constexpr PrimeField operator*(PrimeField a, PrimeField b) { return a *= b; }
  friend constexpr PrimeField operator/(PrimeField a, PrimeField b) { return a /= b; }
  friend constexpr PrimeField operator-(PrimeField a) { return PrimeField{} - a; }
  friend constexpr bool operator==(PrimeField a, PrimeField b) { return a.v_ == b.v_; }

  friend std::ostream& operator<<(std::ostream& os, PrimeField a) { return os << a.v_; }

 private:
  std::uint32_t v_ = 0;
};

}  // namespace bqa
