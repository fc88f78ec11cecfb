#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley8p {

/// Raised when two independently computed quantities that must agree do not.
/// Signals a bug (or a false mathematical claim), never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Non-negative residue of `a` modulo `m` (m > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n);

/// An odd prime p. Construction is the single validation point for every
/// entry that takes p.
class OddPrime {
 public:
  explicit OddPrime(std::int64_t p);
  /// For values that already passed validation (e.g. carried inside elements).
  static OddPrime unchecked(int p) {
    OddPrime out;
    out.p_ = p;
    return out;
  }

  int value() const { return p_; }
  int twice() const { return 2 * p_; }
  operator int() const { return p_; }  // NOLINT(google-explicit-constructor)

 private:
  OddPrime() = default;
  int p_ = 3;
};

std::int64_t euler_phi(std::int64_t n);

/// Ascending list of positive divisors of n.
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Least m >= 1 with u^m = 1 (mod modulus). Throws std::invalid_argument when
/// gcd(u, modulus) != 1.
int mult_order(std::int64_t u, std::int64_t modulus);

/// An element of the unit group Z_{2p}^*: odd, different from p, in [1, 2p).
class UnitResidue {
 public:
  UnitResidue(std::int64_t value, OddPrime p);

  int value() const { return value_; }
  int modulus() const { return 2 * p_; }
  OddPrime prime() const { return OddPrime::unchecked(p_); }

  friend bool operator==(const UnitResidue&, const UnitResidue&) = default;

 private:
  int value_;
  int p_;
};

/// All units of Z_{2p} in ascending order (p - 1 of them).
std::vector<UnitResidue> units_2p(OddPrime p);

/// Smallest generator of the cyclic group Z_{2p}^*.
UnitResidue primitive_root_2p(OddPrime p);

/// Least i >= 0 with z^i = u (mod 2p). Throws std::invalid_argument if z does
/// not generate Z_{2p}^*.
int discrete_log(UnitResidue z, UnitResidue u);

/// The unit x with x - alpha*x = t (mod 2p), for alpha != 1 and t a nonzero
/// even residue. Found by scanning all units; a count other than one hit is a
/// ConsistencyError.
UnitResidue unique_x(UnitResidue alpha, std::int64_t t);

}  // namespace cayley8p
