#include "fsk/field.hpp"

#include <string>

#include "fsk/error.hpp"

namespace fsk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::DecompositionFailure: return "decomposition-failure";
    case ErrorKind::IterationCap: return "iteration-cap";
    case ErrorKind::NoTestElement: return "no-test-element";
    case ErrorKind::SocleNotOneDimensional: return "socle-not-one-dimensional";
    case ErrorKind::NoUSolution: return "no-u-solution";
    case ErrorKind::AvoidanceFailure: return "avoidance-failure";
    case ErrorKind::BoundExceeded: return "bound-exceeded";
    case ErrorKind::CertificateFailure: return "certificate-failure";
    case ErrorKind::DomainSelectionFailure: return "domain-selection-failure";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Parse: return "parse-error";
  }
  return "unknown";
}

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) {
  if (p < 2 || p > 2147483647ULL || !is_prime(p))
    throw Error(ErrorKind::InvalidArgument,
                "characteristic " + std::to_string(p) + " is not a prime in [2, 2^31-1]");
  p_ = static_cast<Coeff>(p);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  return static_cast<Coeff>(powmod64(a, e, p_));
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_p");
  return pow(a, p_ - 2);
}

bool PrimeField::is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace fsk
