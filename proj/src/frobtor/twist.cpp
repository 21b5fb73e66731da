#include <algorithm>

#include "frobrig/errors.hpp"
#include "frobrig/frobtor.hpp"

namespace frobrig::frobtor {

namespace {

FreeComplex twist_at_cap(const FreeComplex& C, int r, int64_t q) {
  FreeComplex t = C;
  t.wide.reset();
  const auto table = C.algebra->frobenius_table(r);
  for (auto& d : t.differentials) d = d.frobenius(table);
  for (auto& s : t.shifts)
    for (auto& v : s) v = static_cast<int>(v * q);
  t.minimal = t.entries_in_maximal_ideal();
  return t;
}

}  // namespace

FreeComplex twist(const FreeComplex& C, int r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "twist exponent r must be at least 1");
  int64_t q = 1;
  for (int i = 0; i < r; ++i) {
    q *= C.algebra->p();
    if (q > (int64_t{1} << 30)) throw Error(ErrorCode::InvalidArgument, "p^r is too large");
  }
  FreeComplex t = twist_at_cap(C, r, q);
  if (!C.algebra->artinian()) {
    const FreeComplex w =
        C.wide ? *C.wide : C.with_algebra(C.algebra->with_cap(resolve::wide_cap(C.algebra->cap())));
    t.wide = std::make_shared<FreeComplex>(twist_at_cap(w, r, q));
  }
  return t;
}

int required_cap(const FreeComplex& F, int r) {
  int maxdeg = 0;
  for (const auto& d : F.differentials) maxdeg = std::max(maxdeg, d.max_degree());
  int64_t q = 1;
  for (int i = 0; i < r; ++i) q *= F.algebra->p();
  return static_cast<int>(q * maxdeg + 2);
}

}  // namespace frobrig::frobtor
