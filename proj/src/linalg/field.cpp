#include "frobrig/errors.hpp"
#include "frobrig/linalg.hpp"

namespace frobrig {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroRing: return "ZeroRing";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::NotArtinian: return "NotArtinian";
    case ErrorCode::CapUnstable: return "CapUnstable";
    case ErrorCode::ContainmentViolation: return "ContainmentViolation";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::PositiveDepth: return "PositiveDepth";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::Io: return "IoError";
  }
  return "Unknown";
}

}  // namespace frobrig

namespace frobrig::linalg {

bool is_prime(uint64_t n) noexcept {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime)
    throw Error(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " exceeds " + std::to_string(kMaxPrime));
}

uint32_t PrimeField::reduce(int64_t v) const noexcept {
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const noexcept {
  uint64_t result = 1 % p_;
  uint64_t base = a % p_;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<uint32_t>(result);
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a % p_ == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero in F_p");
  // Extended Euclid.
  int64_t t = 0, new_t = 1;
  int64_t r = p_, new_r = a % p_;
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return reduce(t);
}

}  // namespace frobrig::linalg
