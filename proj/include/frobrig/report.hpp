#pragma once

// Text and JSON rendering of computed reports, and the randomized witness
// search driven by the `search` command.

#include <cstdint>
#include <string>
#include <vector>

#include "frobrig/frobtor.hpp"
#include "frobrig/invariants.hpp"
#include "frobrig/resolve.hpp"

namespace frobrig::report {

enum class Format { Text, Json };

std::string render(const invariants::InvariantReport& rep, Format f);
std::string render(const frobtor::TorTable& table, Format f);
std::string render(const frobtor::RigidityReport& rep, Format f);
std::string render(const frobtor::RatioReport& rep, Format f);
std::string render_balance(const std::string& module, int r, const frobtor::BalanceReport& rep, Format f);
std::string render_resolution(const std::string& module, const resolve::FreeComplex& F, Format f);

/// Several reports of one kind: text blocks separated by a blank line, or a
/// JSON array.
std::string join(const std::vector<std::string>& parts, Format f);

struct SearchParams {
  std::string family = "mixed";  ///< mixed | msq0 | depth1 | artinian
  uint64_t seed = 0;
  size_t trials = 100;
  size_t max_vars = 3;        ///< <= 3
  int max_relation_degree = 3;  ///< <= 3
  size_t max_module_size = 3;   ///< generators and relations, <= 3
  std::vector<int> r_values{1, 2};
  size_t N = 4;
};

struct Witness {
  size_t trial = 0;
  std::string ring;
  std::string module;
  int r = 1;
  size_t j = 0;
  size_t depth = 0;
  bool contradiction = false;  ///< depth 0 together with (0:m^p) not in m^p: should be impossible
};

struct SearchSummary {
  SearchParams params;
  size_t evaluated = 0;   ///< (trial, r) pairs with a complete Tor table
  size_t skipped = 0;     ///< trials whose ring or module could not be handled at its cap
  size_t free_modules = 0;
  std::vector<Witness> witnesses;
  size_t contradictions = 0;
  size_t window_checked = 0;     ///< depth > 0 instances with r above the c_y threshold
  size_t window_vanishing = 0;   ///< of those, instances with a vanishing window
  size_t window_violations = 0;  ///< vanishing window with infinite pd
  size_t flagged = 0;            ///< instances with any inconsistent rigidity verdict
  std::vector<std::string> skip_reasons;  ///< "trial i: reason", in trial order
};

/// Deterministic in (params): trial i draws from a generator seeded with
/// (seed, i).
SearchSummary run_search(const SearchParams& params);

std::string render(const SearchSummary& s, Format f);

}  // namespace frobrig::report
