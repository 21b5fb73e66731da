#include <algorithm>
#include <numeric>
#include <sstream>

#include "frobrig/errors.hpp"
#include "frobrig/ringkit.hpp"

namespace frobrig::ringkit {

int total_degree(const Exponents& e) noexcept { return std::accumulate(e.begin(), e.end(), 0); }

bool grevlex_greater(const Exponents& a, const Exponents& b) noexcept {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool divides(const Exponents& a, const Exponents& b) noexcept {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Polynomial Polynomial::constant(uint32_t p, size_t num_vars, uint32_t c) {
  Polynomial f(p, num_vars);
  f.add_term(Exponents(num_vars, 0), c);
  return f;
}

Polynomial Polynomial::monomial(uint32_t p, const Exponents& e, uint32_t c) {
  Polynomial f(p, e.size());
  f.add_term(e, c);
  return f;
}

Polynomial Polynomial::variable(uint32_t p, size_t num_vars, size_t index) {
  Exponents e(num_vars, 0);
  e.at(index) = 1;
  return monomial(p, e);
}

uint32_t Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

uint32_t Polynomial::constant_term() const { return coefficient(Exponents(num_vars_, 0)); }

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, _] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int Polynomial::min_degree() const {
  if (terms_.empty()) return -1;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, _] : terms_) d = std::min(d, total_degree(e));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total_degree(t.first) == d; });
}

void Polynomial::add_term(const Exponents& e, uint32_t c) {
  if (e.size() != num_vars_) throw Error(ErrorCode::InvalidArgument, "exponent vector has wrong length");
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (p_ != o.p_ || num_vars_ != o.num_vars_)
    throw Error(ErrorCode::InvalidArgument, "polynomials over different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, p_ - c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(p_, num_vars_);
  Exponents e(num_vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, static_cast<uint32_t>(static_cast<uint64_t>(ca) * cb % p_));
    }
  return r;
}

Polynomial Polynomial::scaled(uint32_t c) const {
  Polynomial r(p_, num_vars_);
  c %= p_;
  if (c == 0) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace(e, static_cast<uint32_t>(static_cast<uint64_t>(a) * c % p_));
  return r;
}

Polynomial Polynomial::times_monomial(const Exponents& m, uint32_t c) const {
  Polynomial r(p_, num_vars_);
  c %= p_;
  if (c == 0) return r;
  Exponents e(num_vars_);
  for (const auto& [ea, a] : terms_) {
    for (size_t i = 0; i < num_vars_; ++i) e[i] = ea[i] + m[i];
    r.terms_.emplace(e, static_cast<uint32_t>(static_cast<uint64_t>(a) * c % p_));
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(linalg::PrimeField(p_).inv(lead_coefficient()));
}

Polynomial Polynomial::pow(uint64_t e) const {
  Polynomial result = constant(p_, num_vars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::truncated(int cap) const {
  Polynomial r(p_, num_vars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) < cap) r.terms_.emplace(e, c);
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const bool is_const = total_degree(e) == 0;
    bool wrote = false;
    if (c != 1 || is_const) {
      out << c;
      wrote = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << vars.at(i);
      if (e[i] > 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace frobrig::ringkit
