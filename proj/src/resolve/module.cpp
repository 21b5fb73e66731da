#include "frobrig/errors.hpp"
#include "frobrig/resolve.hpp"

namespace frobrig::resolve {

ModulePresentation::ModulePresentation(AlgebraPtr alg, std::vector<std::vector<ringkit::Polynomial>> rows,
                                       std::string name)
    : alg_(std::move(alg)),
      source_(std::move(rows)),
      relations_(RMatrix::from_polynomials(alg_, source_)),
      name_(std::move(name)) {
  minimize();
}

ModulePresentation::ModulePresentation(const RMatrix& relations, std::string name)
    : alg_(relations.algebra()), source_(relations.to_polynomials()), relations_(relations), name_(std::move(name)) {
  minimize();
}

ModulePresentation ModulePresentation::from_spec(const AlgebraPtr& alg, const ringkit::ModuleSpec& spec) {
  for (const auto& row : spec.rows)
    for (const auto& f : row)
      if (f.p() != alg->p() || f.num_vars() != alg->num_vars())
        throw Error(ErrorCode::InvalidArgument, "module '" + spec.name + "' is written over a different ring");
  return ModulePresentation(alg, spec.rows, spec.name);
}

ModulePresentation ModulePresentation::residue_field(const AlgebraPtr& alg) {
  std::vector<ringkit::Polynomial> row;
  for (size_t v = 0; v < alg->num_vars(); ++v) row.push_back(ringkit::Polynomial::variable(alg->p(), alg->num_vars(), v));
  return ModulePresentation(alg, {row}, "k");
}

ModulePresentation ModulePresentation::free(const AlgebraPtr& alg, size_t rank) {
  return ModulePresentation(alg, std::vector<std::vector<ringkit::Polynomial>>(rank), "R^" + std::to_string(rank));
}

ModulePresentation ModulePresentation::with_cap(int cap) const {
  if (cap == alg_->cap()) return *this;
  return ModulePresentation(alg_->with_cap(cap), source_, name_);
}

ModulePresentation ModulePresentation::with_algebra(const AlgebraPtr& alg) const {
  if (alg == alg_) return *this;
  return ModulePresentation(alg, source_, name_);
}

void ModulePresentation::minimize() {
  // A unit entry u at (i, j) makes generator i redundant: clear row i with
  // column operations against column j, then drop both.
  for (;;) {
    bool found = false;
    size_t ui = 0, uj = 0;
    for (size_t j = 0; j < relations_.cols() && !found; ++j)
      for (size_t i = 0; i < relations_.rows() && !found; ++i)
        if (relations_.entry(i, j)[0] != 0) {
          found = true;
          ui = i;
          uj = j;
        }
    if (!found) break;
    const RingElement inv = relations_.element(ui, uj).inverse();
    for (size_t l = 0; l < relations_.cols(); ++l) {
      if (l == uj || relations_.entry_is_zero(ui, l)) continue;
      const RingElement factor = relations_.element(ui, l) * inv;
      for (size_t i = 0; i < relations_.rows(); ++i) {
        if (relations_.entry_is_zero(i, uj)) continue;
        relations_.set(i, l, relations_.element(i, l) - factor * relations_.element(i, uj));
      }
    }
    relations_ = relations_.without_row_and_column(ui, uj);
  }
  std::vector<Coeffs> columns;
  for (size_t j = 0; j < relations_.cols(); ++j) {
    auto c = relations_.column(j);
    columns.emplace_back(c.begin(), c.end());
  }
  relations_ = relations_.select_columns(minimal_generators(alg_, relations_.rows(), columns));
}

bool is_free(const ModulePresentation& M) { return M.is_free(); }

}  // namespace frobrig::resolve
