#include <algorithm>

#include "frobrig/errors.hpp"
#include "frobrig/ringkit.hpp"

namespace frobrig::ringkit {

RingElement::RingElement(AlgebraPtr alg, Coeffs coeffs, bool truncated)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)), truncated_(truncated) {
  if (!alg_) throw Error(ErrorCode::InvalidArgument, "ring element without an algebra");
  if (coeffs_.size() != alg_->dim()) throw Error(ErrorCode::InvalidArgument, "coefficient vector has wrong length");
  for (auto& c : coeffs_) c %= alg_->p();
}

RingElement RingElement::zero(const AlgebraPtr& alg) { return RingElement(alg, Coeffs(alg->dim(), 0)); }

RingElement RingElement::one(const AlgebraPtr& alg) {
  Coeffs c(alg->dim(), 0);
  c[0] = 1;
  return RingElement(alg, std::move(c));
}

RingElement RingElement::variable(const AlgebraPtr& alg, size_t v) {
  bool t = false;
  Coeffs c = alg->normal_form(Polynomial::variable(alg->p(), alg->num_vars(), v), &t);
  return RingElement(alg, std::move(c), t);
}

bool RingElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint32_t c) { return c == 0; });
}

int RingElement::degree() const noexcept {
  int d = -1;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i]) d = std::max(d, alg_->basis_degree(i));
  return d;
}

int RingElement::min_degree() const noexcept {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i]) return alg_->basis_degree(i);  // basis is sorted by degree
  return -1;
}

bool RingElement::is_homogeneous() const noexcept { return degree() == min_degree(); }

void RingElement::check_same(const RingElement& o) const {
  if (alg_ != o.alg_) throw Error(ErrorCode::InvalidArgument, "ring elements belong to different algebras");
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same(o);
  Coeffs c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = alg_->field().add(coeffs_[i], o.coeffs_[i]);
  return RingElement(alg_, std::move(c), truncated_ || o.truncated_);
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_same(o);
  Coeffs c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = alg_->field().sub(coeffs_[i], o.coeffs_[i]);
  return RingElement(alg_, std::move(c), truncated_ || o.truncated_);
}

RingElement RingElement::operator-() const {
  Coeffs c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = alg_->field().neg(coeffs_[i]);
  return RingElement(alg_, std::move(c), truncated_);
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same(o);
  Coeffs c(coeffs_.size(), 0);
  alg_->multiply_add(coeffs_, o.coeffs_, c);
  bool t = truncated_ || o.truncated_;
  if (!alg_->artinian() && !is_zero() && !o.is_zero() && degree() + o.degree() >= alg_->cap()) t = true;
  return RingElement(alg_, std::move(c), t);
}

RingElement RingElement::scaled(uint32_t s) const {
  Coeffs c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = alg_->field().mul(coeffs_[i], s % alg_->p());
  return RingElement(alg_, std::move(c), truncated_);
}

RingElement RingElement::inverse() const {
  if (!is_unit()) throw Error(ErrorCode::InvalidArgument, "element is not a unit");
  // u = u0 (1 - n) with n in m, so u^{-1} = u0^{-1} (1 + n + n^2 + ...).
  const uint32_t inv0 = alg_->field().inv(coeffs_[0]);
  const RingElement one_ = one(alg_);
  const RingElement n = one_ - scaled(inv0);
  RingElement sum = one_;
  RingElement power = one_;
  for (size_t k = 0; k <= alg_->dim() + 1; ++k) {
    power = power * n;
    if (power.is_zero()) return sum.scaled(inv0);
    sum = sum + power;
  }
  throw Error(ErrorCode::InvalidArgument, "element is not invertible: its non-unit part is not nilpotent");
}

RingElement nf(const AlgebraPtr& alg, const Polynomial& f) {
  bool t = false;
  Coeffs c = alg->normal_form(f, &t);
  return RingElement(alg, std::move(c), t);
}

RingElement frob_power(const RingElement& e, int r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "Frobenius exponent r must be >= 1");
  RingElement cur = e;
  for (int step = 0; step < r; ++step) {
    RingElement result = RingElement::one(e.algebra());
    RingElement base = cur;
    for (uint32_t k = e.algebra()->p(); k; k >>= 1) {
      if (k & 1) result = result * base;
      if (k > 1) base = base * base;
    }
    cur = result;
  }
  return cur;
}

}  // namespace frobrig::ringkit
