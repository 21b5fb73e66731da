#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "frobrig/frobtor.hpp"

namespace frobrig::frobtor {

// Homology dimensions of one complex at one cap, expanding each differential
// at most once. For graded complexes the count is also split by label; the
// labels up to `top_exact` are those on which truncation has no effect.
struct HomologyProfile {
  size_t total = 0;
  bool graded = false;
  int top_exact = 0;
  std::map<int, size_t> exact;  ///< nonzero dimensions at labels <= top_exact
};

class HomologyCounter {
 public:
  explicit HomologyCounter(const FreeComplex& C) : C_(C), cache_(C.differentials.size()), profiles_(C.ranks.size()) {}

  size_t at(size_t j) { return profile(j).total; }
  const HomologyProfile& profile(size_t j);

 private:
  const resolve::Expansion& expansion(size_t n);
  HomologyProfile compute(size_t j);

  const FreeComplex& C_;
  std::vector<std::optional<resolve::Expansion>> cache_;
  std::vector<std::optional<HomologyProfile>> profiles_;
};

// Lengths of a complex over a possibly non-Artinian algebra. The value at
// the working cap D is compared with the value at D' = 2D - 2. When they
// differ and the complex is graded, a profile at D' that vanishes on the
// upper half of the labels it adds (and on at least two degrees) gives an
// exact value. Otherwise a third cap D'' = 2D' - 2 decides, provided the
// expansion stays within `kFarBudget` coordinates: D' and D'' agreeing gives
// an exact value, growth at both steps gives INFINITE. Beyond the budget a
// growing value is reported INFINITE; anything else is UNSTABLE.
class CapLadder {
 public:
  static constexpr size_t kFarBudget = 12000;

  explicit CapLadder(const FreeComplex& C);
  CapLadder(const CapLadder&) = delete;
  CapLadder& operator=(const CapLadder&) = delete;

  Length at(size_t j);

 private:
  void extend_far(size_t length);
  std::optional<Length> from_profile(const HomologyProfile& lower, const HomologyProfile& upper, int lower_cap,
                                     int upper_cap) const;

  const FreeComplex& C_;
  ringkit::AlgebraPtr far_algebra_;
  std::optional<FreeComplex> wide_complex_, far_complex_;
  std::optional<HomologyCounter> small_, wide_, far_;
};

}  // namespace frobrig::frobtor
