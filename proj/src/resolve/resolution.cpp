#include "frobrig/errors.hpp"
#include "frobrig/resolve.hpp"

namespace frobrig::resolve {

bool FreeComplex::is_complex() const {
  for (size_t n = 1; n < differentials.size(); ++n)
    if (!(d(n) * d(n + 1)).is_zero()) return false;
  return true;
}

bool FreeComplex::entries_in_maximal_ideal() const {
  for (const auto& m : differentials)
    if (!m.entries_in_maximal_ideal()) return false;
  return true;
}

FreeComplex FreeComplex::from_differentials(const AlgebraPtr& alg, std::vector<RMatrix> ds,
                                            std::optional<size_t> rank0) {
  FreeComplex c;
  c.algebra = alg;
  c.ranks.push_back(ds.empty() ? rank0.value_or(0) : ds.front().rows());
  for (size_t n = 0; n < ds.size(); ++n) {
    if (ds[n].algebra() != alg) throw Error(ErrorCode::InvalidArgument, "differential over a different algebra");
    if (ds[n].rows() != c.ranks.back())
      throw Error(ErrorCode::InvalidArgument, "differential d_" + std::to_string(n + 1) + " has the wrong number of rows");
    c.ranks.push_back(ds[n].cols());
  }
  c.differentials = std::move(ds);
  if (auto s = infer_complex_shifts(alg, c.ranks, c.differentials)) c.shifts = std::move(*s);
  c.minimal = c.entries_in_maximal_ideal();
  return c;
}

FreeComplex FreeComplex::with_algebra(const AlgebraPtr& alg) const {
  FreeComplex c = *this;
  c.algebra = alg;
  for (auto& m : c.differentials) m = m.with_algebra(alg);
  c.wide.reset();
  return c;
}

namespace {

FreeComplex resolve_at_cap(const ModulePresentation& M, size_t N, const std::vector<int>* gen_shifts, int weight) {
  FreeComplex c;
  c.algebra = M.algebra();
  c.minimal = true;
  c.weight = weight;
  c.ranks.push_back(M.generators());
  std::vector<std::vector<int>> shifts;
  bool graded = false;
  if (N >= 1) {
    const RMatrix& d1 = M.relations();
    if (auto gr = infer_grading(d1, gen_shifts, weight)) {
      graded = true;
      shifts.push_back(gr->rows);
      shifts.push_back(gr->cols);
    }
    c.differentials.push_back(d1);
    c.ranks.push_back(d1.cols());
  } else if (auto gr = infer_grading(M.relations(), gen_shifts, weight)) {
    graded = true;
    shifts.push_back(gr->rows);
  }
  for (size_t n = 1; n < N; ++n) {
    const RMatrix& dn = c.differentials.back();
    if (dn.cols() == 0) {
      c.differentials.emplace_back(c.algebra, 0, 0);
      c.ranks.push_back(0);
      if (graded) shifts.emplace_back();
      continue;
    }
    Syzygy s = graded ? syzygy_at_cap(dn, shifts[n - 1], shifts[n], weight) : syzygy_at_cap(dn);
    if (graded && s.shifts.size() != s.matrix.cols()) graded = false;
    if (graded) shifts.push_back(std::move(s.shifts));
    c.ranks.push_back(s.matrix.cols());
    c.differentials.push_back(std::move(s.matrix));
  }
  if (graded) c.shifts = std::move(shifts);
  c.open_end = c.ranks.back() > 0 && !M.is_free();
  return c;
}

void require_agreement(const FreeComplex& small, const FreeComplex& wide) {
  const int cap = small.algebra->cap();
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::CapUnstable, "resolution " + what + " changes between caps " + std::to_string(cap) + " and " +
                                            std::to_string(wide.algebra->cap()) + "; raise the degree cap");
  };
  if (small.ranks != wide.ranks) fail("ranks");
  for (size_t n = 1; n <= small.length(); ++n) {
    const RMatrix narrowed = wide.d(n).truncated(cap).with_algebra(small.algebra);
    if (!(narrowed == small.d(n))) fail("differential d_" + std::to_string(n));
  }
}

}  // namespace

FreeComplex minimal_free_resolution(const ModulePresentation& M, size_t N) {
  return minimal_free_resolution(M, N, {}, 1);
}

FreeComplex minimal_free_resolution(const ModulePresentation& M, size_t N, const std::vector<int>& generator_shifts,
                                    int weight) {
  if (weight < 1) throw Error(ErrorCode::InvalidArgument, "label weight must be positive");
  const std::vector<int>* gs = nullptr;
  if (!generator_shifts.empty()) {
    if (generator_shifts.size() != M.generators())
      throw Error(ErrorCode::InvalidArgument, "generator shift count does not match the module");
    gs = &generator_shifts;
  }
  FreeComplex c = resolve_at_cap(M, N, gs, weight);
  if (M.algebra()->artinian()) return c;
  const ModulePresentation Mw = M.with_cap(wide_cap(M.algebra()->cap()));
  auto w = std::make_shared<FreeComplex>(resolve_at_cap(Mw, N, gs, weight));
  require_agreement(c, *w);
  c.wide = std::move(w);
  return c;
}

std::vector<size_t> betti_numbers(const ModulePresentation& M, size_t N) { return minimal_free_resolution(M, N).ranks; }

}  // namespace frobrig::resolve
