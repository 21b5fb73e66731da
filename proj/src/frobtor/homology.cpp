#include <algorithm>
#include <limits>

#include "frobrig/errors.hpp"
#include "homology_counter.hpp"

namespace frobrig::frobtor {

std::string Length::to_string() const {
  switch (kind) {
    case Kind::Infinite: return "INF";
    case Kind::Unstable: return "UNSTABLE";
    default: return std::to_string(value);
  }
}

const resolve::Expansion& HomologyCounter::expansion(size_t n) {
  if (cache_.size() < C_.differentials.size()) cache_.resize(C_.differentials.size());
  auto& slot = cache_[n - 1];
  if (!slot) {
    const auto& d = C_.d(n);
    slot = C_.graded() ? resolve::expand(d, C_.shifts[n - 1], C_.shifts[n], C_.weight) : resolve::expand(d);
  }
  return *slot;
}

const HomologyProfile& HomologyCounter::profile(size_t j) {
  if (j > C_.length()) throw Error(ErrorCode::InvalidArgument, "homological index beyond the complex");
  if (j == C_.length() && C_.open_end)
    throw Error(ErrorCode::InvalidArgument, "the complex continues past F_" + std::to_string(j) + "; compute one more step");
  if (profiles_.size() < C_.ranks.size()) profiles_.resize(C_.ranks.size());
  auto& slot = profiles_[j];
  if (!slot) slot = compute(j);
  return *slot;
}

HomologyProfile HomologyCounter::compute(size_t j) {
  const auto& A = *C_.algebra;
  const size_t dim = A.dim();
  const size_t nj = C_.ranks[j] * dim;
  HomologyProfile out;
  if (nj == 0) {
    out.graded = C_.graded();
    out.top_exact = std::numeric_limits<int>::max();
    return out;
  }

  // Coordinates of F_j on which d_j is computed exactly.
  const int e = j >= 1 ? std::max(C_.d(j).max_degree(), 0) : 0;
  std::vector<bool> T(nj, true);
  if (!A.artinian())
    for (size_t k = 0; k < nj; ++k) T[k] = A.basis_degree(k % dim) + e < A.cap();

  bool graded = C_.graded();
  std::map<int, long long> h;
  auto label = [&](size_t k) { return graded ? C_.shifts[j][k / dim] + C_.weight * A.basis_degree(k % dim) : 0; };
  auto subtract = [&](const std::map<int, size_t>& ranks, long long sign) {
    for (const auto& [t, r] : ranks) h[t] -= sign * static_cast<long long>(r);
  };

  const resolve::Expansion* in = j >= 1 && !C_.d(j).is_zero() ? &expansion(j) : nullptr;
  const resolve::Expansion* out_ex = j < C_.length() && !C_.d(j + 1).is_zero() ? &expansion(j + 1) : nullptr;
  if (graded && ((in && !in->map.graded()) || (out_ex && !out_ex->map.graded()))) graded = false;

  for (size_t k = 0; k < nj; ++k)
    if (T[k]) ++h[label(k)];
  if (in) {
    std::vector<bool> cols(in->map.cols());
    for (size_t c = 0; c < cols.size(); ++c) cols[c] = T[in->col_generator[c] * dim + in->col_basis[c]];
    subtract(linalg::rank_by_label(in->map, {}, cols), 1);
  }
  if (out_ex) {
    subtract(linalg::rank_by_label(out_ex->map), 1);
    if (!A.artinian()) {
      std::vector<bool> rows(nj);
      bool any = false;
      for (size_t k = 0; k < nj; ++k) any |= rows[k] = !T[k];
      if (any) subtract(linalg::rank_by_label(out_ex->map, rows, {}), -1);
    }
  }

  long long total = 0;
  for (const auto& [_, v] : h) total += v;
  out.total = static_cast<size_t>(total);
  out.graded = graded;
  if (!graded) return out;
  if (A.artinian()) {
    out.top_exact = std::numeric_limits<int>::max();
  } else {
    const int low = *std::min_element(C_.shifts[j].begin(), C_.shifts[j].end());
    out.top_exact = low + C_.weight * (A.cap() - e) - 1;
  }
  for (const auto& [t, v] : h)
    if (t <= out.top_exact && v != 0) out.exact[t] = static_cast<size_t>(v);
  return out;
}

CapLadder::CapLadder(const FreeComplex& C) : C_(C) {
  small_.emplace(C_);
  if (C_.algebra->artinian()) return;
  if (C_.wide)
    wide_.emplace(*C_.wide);
  else
    wide_.emplace(wide_complex_.emplace(C_.with_algebra(C_.algebra->with_cap(resolve::wide_cap(C_.algebra->cap())))));
}

// The complex at the far cap is converted only as far as it is queried.
void CapLadder::extend_far(size_t length) {
  const FreeComplex& w = C_.wide ? *C_.wide : *wide_complex_;
  length = std::min(length, w.length());
  if (!far_complex_) {
    FreeComplex f;
    f.algebra = far_algebra_;
    f.weight = w.weight;
    f.minimal = w.minimal;
    f.ranks.push_back(w.ranks[0]);
    if (w.graded()) f.shifts.push_back(w.shifts[0]);
    far_complex_.emplace(std::move(f));
    far_.emplace(*far_complex_);
  }
  FreeComplex& f = *far_complex_;
  while (f.length() < length) {
    const size_t n = f.length() + 1;
    f.differentials.push_back(w.d(n).with_algebra(far_algebra_));
    f.ranks.push_back(w.ranks[n]);
    if (w.graded()) f.shifts.push_back(w.shifts[n]);
  }
  f.open_end = f.length() < w.length() || w.open_end;
}

std::optional<Length> CapLadder::from_profile(const HomologyProfile& lower, const HomologyProfile& upper,
                                              int lower_cap, int upper_cap) const {
  if (!lower.graded || !upper.graded) return std::nullopt;
  for (const auto& [t, v] : upper.exact) {
    if (t > lower.top_exact) break;
    const auto it = lower.exact.find(t);
    if (it == lower.exact.end() || it->second != v) return Length::unstable();
  }
  for (const auto& [t, v] : lower.exact) {
    const auto it = upper.exact.find(t);
    if (it == upper.exact.end() || it->second != v) return Length::unstable();
  }
  const int top = upper.exact.empty() ? lower.top_exact : upper.exact.rbegin()->first;
  const int steps = std::max(2, (upper_cap - lower_cap + 1) / 2);
  if (upper.top_exact - top < C_.weight * steps) return std::nullopt;
  size_t sum = 0;
  for (const auto& [_, v] : upper.exact) sum += v;
  return Length::finite(sum);
}

Length CapLadder::at(size_t j) {
  const size_t a = small_->at(j);
  if (!wide_) return Length::finite(a);
  const size_t b = wide_->at(j);
  if (a == b) return Length::finite(a);

  const FreeComplex& w = C_.wide ? *C_.wide : *wide_complex_;
  const int cap_a = C_.algebra->cap(), cap_b = w.algebra->cap();
  if (auto verdict = from_profile(small_->profile(j), wide_->profile(j), cap_a, cap_b)) return *verdict;

  size_t span = C_.ranks[j];
  if (j >= 1) span += C_.ranks[j - 1];
  if (j < C_.length()) span += C_.ranks[j + 1];
  if (!far_algebra_) far_algebra_ = w.algebra->with_cap(resolve::wide_cap(cap_b));
  if (span * far_algebra_->dim() > kFarBudget) return a < b ? Length::infinite() : Length::unstable();
  extend_far(j + 1);
  const size_t c = far_->at(j);
  if (b == c) return Length::finite(b);
  if (auto verdict = from_profile(wide_->profile(j), far_->profile(j), cap_b, far_complex_->algebra->cap()))
    if (verdict->kind != Length::Kind::Unstable) return *verdict;
  if (a < b && b < c) return Length::infinite();
  return Length::unstable();
}

size_t homology_at_cap(const FreeComplex& C, size_t j) { return HomologyCounter(C).at(j); }

Length homology_length(const FreeComplex& C, size_t j) { return CapLadder(C).at(j); }

}  // namespace frobrig::frobtor
