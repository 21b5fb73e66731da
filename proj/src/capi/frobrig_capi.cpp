#include "frobrig/frobrig.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "frobrig/errors.hpp"
#include "frobrig/frobtor.hpp"
#include "frobrig/invariants.hpp"
#include "frobrig/report.hpp"
#include "frobrig/resolve.hpp"
#include "frobrig/ringkit.hpp"

using namespace frobrig;

struct frobrig_ring {
  ringkit::RingDocument doc;
  ringkit::AlgebraPtr algebra;
  mutable std::once_flag invariants_once;
  mutable std::optional<invariants::InvariantReport> invariants;

  const invariants::InvariantReport& report() const {
    std::call_once(invariants_once, [this] { invariants = invariants::invariant_report(algebra); });
    return *invariants;
  }
};

struct frobrig_module {
  const frobrig_ring* ring;
  resolve::ModulePresentation presentation;
  std::optional<resolve::FreeComplex> resolution;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_warnings;

// Resolutions whose total F_p-dimension passes this get a warning.
constexpr size_t kWarnDimension = 10000;

template <typename F>
frobrig_status guarded(F&& body) {
  last_error.clear();
  last_warnings.clear();
  try {
    body();
    return FROBRIG_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<frobrig_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
  } catch (...) {
    last_error = "internal error";
  }
  return FROBRIG_E_INTERNAL;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

report::Format to_format(frobrig_format f) {
  if (f != FROBRIG_FORMAT_TEXT && f != FROBRIG_FORMAT_JSON) throw Error(ErrorCode::InvalidArgument, "unknown output format");
  return f == FROBRIG_FORMAT_JSON ? report::Format::Json : report::Format::Text;
}

const resolve::FreeComplex& resolution(frobrig_module* m, size_t length) {
  auto& cached = m->resolution;
  if (!cached || (cached->length() < length && cached->open_end)) {
    cached = resolve::minimal_free_resolution(m->presentation, length);
    size_t total = 0;
    for (size_t l : cached->ranks) total += l;
    total *= m->presentation.algebra()->dim();
    if (total > kWarnDimension)
      last_warnings += "resolution of " + m->presentation.name() + " spans " + std::to_string(total) +
                       " coordinates over F_p; expect long run times\n";
  }
  return *cached;
}

void check_r(int r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
}

}  // namespace

extern "C" {

const char* frobrig_version(void) { return "0.1.0"; }

const char* frobrig_status_name(frobrig_status status) {
  if (status == FROBRIG_OK) return "OK";
  if (status == FROBRIG_E_INTERNAL) return "InternalError";
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* frobrig_last_error(void) { return last_error.c_str(); }
const char* frobrig_last_warnings(void) { return last_warnings.c_str(); }
void frobrig_string_free(char* s) { std::free(s); }

frobrig_status frobrig_ring_parse(const char* text, int cap_override, frobrig_ring** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    auto ring = std::make_unique<frobrig_ring>();
    ring->doc = ringkit::parse_document(text);
    if (cap_override > 0) ring->doc.ring.cap = cap_override;
    ring->algebra = ringkit::build_algebra(ring->doc.ring);
    *out = ring.release();
  });
}

void frobrig_ring_free(frobrig_ring* ring) { delete ring; }

frobrig_status frobrig_ring_describe(const frobrig_ring* ring, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = copy_string(ringkit::print_presentation(ring->doc.ring));
  });
}

frobrig_status frobrig_ring_dim(const frobrig_ring* ring, size_t* out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = ring->algebra->dim();
  });
}

frobrig_status frobrig_ring_is_artinian(const frobrig_ring* ring, int* out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = ring->algebra->artinian() ? 1 : 0;
  });
}

frobrig_status frobrig_ring_module_count(const frobrig_ring* ring, size_t* out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = ring->doc.modules.size();
  });
}

frobrig_status frobrig_ring_module_name(const frobrig_ring* ring, size_t index, const char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    if (index >= ring->doc.modules.size()) throw Error(ErrorCode::InvalidArgument, "module index out of range");
    *out = ring->doc.modules[index].name.c_str();
  });
}

frobrig_status frobrig_check(const frobrig_ring* ring, frobrig_format format, char** out) {
  return guarded([&] {
    require(ring, "ring");
    require(out, "out");
    *out = copy_string(report::render(ring->report(), to_format(format)));
  });
}

frobrig_status frobrig_module_get(const frobrig_ring* ring, const char* name_or_expression, frobrig_module** out) {
  return guarded([&] {
    require(ring, "ring");
    require(name_or_expression, "module");
    require(out, "out");
    *out = nullptr;
    const std::string key = name_or_expression;
    for (const auto& spec : ring->doc.modules)
      if (spec.name == key) {
        *out = new frobrig_module{ring, resolve::ModulePresentation::from_spec(ring->algebra, spec), std::nullopt};
        return;
      }
    const auto spec = ringkit::parse_module_expression(key, ring->doc.ring, key);
    *out = new frobrig_module{ring, resolve::ModulePresentation::from_spec(ring->algebra, spec), std::nullopt};
  });
}

void frobrig_module_free(frobrig_module* module) { delete module; }

frobrig_status frobrig_module_is_free(const frobrig_module* module, int* out) {
  return guarded([&] {
    require(module, "module");
    require(out, "out");
    *out = module->presentation.is_free() ? 1 : 0;
  });
}

frobrig_status frobrig_betti(frobrig_module* module, size_t N, size_t* ranks, size_t capacity) {
  return guarded([&] {
    require(module, "module");
    require(ranks, "ranks");
    if (capacity < N + 1) throw Error(ErrorCode::InvalidArgument, "rank buffer too small");
    const auto& F = resolution(module, N);
    for (size_t j = 0; j <= N; ++j) ranks[j] = j < F.ranks.size() ? F.ranks[j] : 0;
  });
}

frobrig_status frobrig_resolve(frobrig_module* module, size_t N, frobrig_format format, char** out) {
  return guarded([&] {
    require(module, "module");
    require(out, "out");
    const auto fmt = to_format(format);
    auto F = resolution(module, N);
    while (F.length() > N) {
      F.differentials.pop_back();
      F.ranks.pop_back();
      if (!F.shifts.empty()) F.shifts.pop_back();
      F.open_end = true;
    }
    *out = copy_string(report::render_resolution(module->presentation.name(), F, fmt));
  });
}

frobrig_status frobrig_tor_lengths(frobrig_module* module, int r, size_t N, int64_t* lengths, size_t capacity) {
  return guarded([&] {
    require(module, "module");
    require(lengths, "lengths");
    check_r(r);
    if (capacity < N + 1) throw Error(ErrorCode::InvalidArgument, "length buffer too small");
    const auto table = frobtor::tor_table(resolution(module, N + 1), r, N, module->presentation.name());
    for (const auto& row : table.rows) {
      switch (row.length.kind) {
        case frobtor::Length::Kind::Finite: lengths[row.j] = static_cast<int64_t>(row.length.value); break;
        case frobtor::Length::Kind::Infinite: lengths[row.j] = FROBRIG_LENGTH_INFINITE; break;
        case frobtor::Length::Kind::Unstable: lengths[row.j] = FROBRIG_LENGTH_UNSTABLE; break;
      }
    }
  });
}

frobrig_status frobrig_tor(frobrig_module* module, int r, size_t N, frobrig_format format, char** out) {
  return guarded([&] {
    require(module, "module");
    require(out, "out");
    check_r(r);
    const auto fmt = to_format(format);
    const auto table = frobtor::tor_table(resolution(module, N + 1), r, N, module->presentation.name());
    *out = copy_string(report::render(table, fmt));
  });
}

frobrig_status frobrig_rigidity(frobrig_module* module, int r, size_t N, frobrig_format format, char** out,
                                int* flagged) {
  return guarded([&] {
    require(module, "module");
    require(out, "out");
    check_r(r);
    const auto fmt = to_format(format);
    const auto& F = resolution(module, N + 1);
    const auto rep = frobtor::rigidity_probe(module->presentation, F, module->ring->report(), r, N);
    if (flagged) *flagged = rep.flagged() ? 1 : 0;
    *out = copy_string(report::render(rep, fmt));
  });
}

frobrig_status frobrig_ratio(frobrig_module* module, int r, size_t N, frobrig_format format, char** out) {
  return guarded([&] {
    require(module, "module");
    require(out, "out");
    check_r(r);
    *out = copy_string(report::render(frobtor::ratio_report(module->presentation, r, N), to_format(format)));
  });
}

frobrig_status frobrig_balance(frobrig_module* module, int r, size_t N, frobrig_format format, char** out,
                               int* all_equal) {
  return guarded([&] {
    require(module, "module");
    require(out, "out");
    check_r(r);
    const auto fmt = to_format(format);
    const auto rep = frobtor::tor_balance_oracle(module->presentation, r, N);
    if (all_equal) *all_equal = rep.all_equal() ? 1 : 0;
    *out = copy_string(report::render_balance(module->presentation.name(), r, rep, fmt));
  });
}

void frobrig_search_params_default(frobrig_search_params* params) {
  if (!params) return;
  static const int default_r[] = {1, 2};
  const report::SearchParams d;
  params->family = "mixed";
  params->seed = d.seed;
  params->trials = d.trials;
  params->max_vars = d.max_vars;
  params->max_relation_degree = d.max_relation_degree;
  params->max_module_size = d.max_module_size;
  params->r_values = default_r;
  params->r_count = 2;
  params->N = d.N;
}

frobrig_status frobrig_search(const frobrig_search_params* params, frobrig_format format, char** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    const auto fmt = to_format(format);
    report::SearchParams sp;
    if (params->family) sp.family = params->family;
    sp.seed = params->seed;
    sp.trials = params->trials;
    sp.max_vars = params->max_vars;
    sp.max_relation_degree = params->max_relation_degree;
    sp.max_module_size = params->max_module_size;
    if (params->r_count > 0) {
      require(params->r_values, "r_values");
      sp.r_values.assign(params->r_values, params->r_values + params->r_count);
    }
    for (int r : sp.r_values) check_r(r);
    sp.N = params->N;
    *out = copy_string(report::render(report::run_search(sp), fmt));
  });
}

}  // extern "C"
