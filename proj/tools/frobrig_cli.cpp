// frobrig command line: ring invariants, Frobenius-twisted Tor tables,
// rigidity probes and the randomized witness search.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobrig/frobrig.h"

namespace {

constexpr size_t kMaxN = 12;

enum Exit { kOk = 0, kInputError = 1, kFlagged = 2 };

struct Options {
  std::string file;
  std::vector<int> r;  // empty: {1} for module commands, library default for search
  size_t N = 4;
  int cap = 0;
  std::string format = "text";
  std::vector<std::string> modules;
  uint64_t seed = 0;
  size_t trials = 100;
  std::string family = "mixed";
  size_t vars = 3;
  int degree = 3;
  size_t size = 3;
};

struct Ring {
  frobrig_ring* ptr = nullptr;
  ~Ring() { frobrig_ring_free(ptr); }
};

struct Module {
  frobrig_module* ptr = nullptr;
  ~Module() { frobrig_module_free(ptr); }
};

struct Text {
  char* ptr = nullptr;
  ~Text() { frobrig_string_free(ptr); }
};

int fail(frobrig_status st) {
  std::cerr << "error: " << frobrig_status_name(st) << ": " << frobrig_last_error() << '\n';
  return kInputError;
}

void flush_warnings() {
  const std::string w = frobrig_last_warnings();
  if (!w.empty()) std::cerr << "warning: " << w;
}

frobrig_format format_of(const Options& o) { return o.format == "json" ? FROBRIG_FORMAT_JSON : FROBRIG_FORMAT_TEXT; }

// Several JSON documents are wrapped into one array.
void emit(const Options& o, const std::vector<std::string>& parts) {
  if (o.format == "json" && parts.size() > 1) {
    std::cout << "[\n";
    for (size_t i = 0; i < parts.size(); ++i) {
      std::string p = parts[i];
      while (!p.empty() && p.back() == '\n') p.pop_back();
      std::cout << p << (i + 1 < parts.size() ? ",\n" : "\n");
    }
    std::cout << "]\n";
    return;
  }
  for (size_t i = 0; i < parts.size(); ++i) std::cout << (i ? "\n" : "") << parts[i];
}

int load(const Options& o, Ring& ring) {
  std::ifstream in(o.file);
  if (!in) {
    std::cerr << "error: IoError: cannot open '" << o.file << "'\n";
    return kInputError;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  if (auto st = frobrig_ring_parse(buf.str().c_str(), o.cap, &ring.ptr); st != FROBRIG_OK) return fail(st);
  return kOk;
}

std::vector<std::string> module_names(const Options& o, const Ring& ring) {
  if (!o.modules.empty()) return o.modules;
  size_t count = 0;
  frobrig_ring_module_count(ring.ptr, &count);
  std::vector<std::string> names;
  for (size_t i = 0; i < count; ++i) {
    const char* name = nullptr;
    frobrig_ring_module_name(ring.ptr, i, &name);
    names.emplace_back(name);
  }
  if (names.empty()) names.emplace_back("k");
  return names;
}

int run_check(const Options& o) {
  Ring ring;
  if (int rc = load(o, ring)) return rc;
  Text out;
  if (auto st = frobrig_check(ring.ptr, format_of(o), &out.ptr); st != FROBRIG_OK) return fail(st);
  std::cout << out.ptr;
  return kOk;
}

enum class Command { Tor, Rigidity, Ratio, Balance, Resolve };

int run_module_command(const Options& o, Command cmd) {
  Ring ring;
  if (int rc = load(o, ring)) return rc;
  int exit_code = kOk;
  std::vector<std::string> parts;
  for (const auto& name : module_names(o, ring)) {
    Module m;
    if (auto st = frobrig_module_get(ring.ptr, name.c_str(), &m.ptr); st != FROBRIG_OK) return fail(st);
    if (cmd == Command::Resolve) {
      Text out;
      auto st = frobrig_resolve(m.ptr, o.N, format_of(o), &out.ptr);
      flush_warnings();
      if (st != FROBRIG_OK) return fail(st);
      parts.emplace_back(out.ptr);
      continue;
    }
    for (int r : o.r.empty() ? std::vector<int>{1} : o.r) {
      Text out;
      frobrig_status st = FROBRIG_OK;
      int flag = 0, equal = 1;
      switch (cmd) {
        case Command::Tor: st = frobrig_tor(m.ptr, r, o.N, format_of(o), &out.ptr); break;
        case Command::Rigidity: st = frobrig_rigidity(m.ptr, r, o.N, format_of(o), &out.ptr, &flag); break;
        case Command::Ratio: st = frobrig_ratio(m.ptr, r, o.N, format_of(o), &out.ptr); break;
        case Command::Balance: st = frobrig_balance(m.ptr, r, o.N, format_of(o), &out.ptr, &equal); break;
        case Command::Resolve: break;
      }
      flush_warnings();
      if (st != FROBRIG_OK) return fail(st);
      if (flag || !equal) exit_code = kFlagged;
      parts.emplace_back(out.ptr);
    }
  }
  emit(o, parts);
  return exit_code;
}

int run_search(const Options& o) {
  frobrig_search_params params;
  frobrig_search_params_default(&params);
  params.family = o.family.c_str();
  params.seed = o.seed;
  params.trials = o.trials;
  params.max_vars = o.vars;
  params.max_relation_degree = o.degree;
  params.max_module_size = o.size;
  if (!o.r.empty()) {
    params.r_values = o.r.data();
    params.r_count = o.r.size();
  }
  params.N = o.N;
  Text out;
  if (auto st = frobrig_search(&params, format_of(o), &out.ptr); st != FROBRIG_OK) return fail(st);
  std::cout << out.ptr;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius-twisted Tor over local F_p-algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", frobrig_version());
  Options o;

  auto add_common = [&](CLI::App* sub, bool module_options) {
    sub->add_option("file", o.file, "ring file")->required()->check(CLI::ExistingFile);
    sub->add_option("--cap", o.cap, "degree cap override")->check(CLI::Range(2, 10000));
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    if (module_options) {
      sub->add_option("--module", o.modules, "module name from the file or an inline expression (repeatable)");
      sub->add_option("--N", o.N, "homological bound")->check(CLI::Range(size_t{0}, kMaxN));
    }
  };
  auto add_r = [&](CLI::App* sub) {
    sub->add_option("--r", o.r, "twist exponents, e.g. --r 1,2")->delimiter(',')->check(CLI::Range(1, 8));
  };

  auto* check = app.add_subcommand("check", "ring invariants: socle condition, c(R), depth, c_y(R)");
  add_common(check, false);

  auto* tor = app.add_subcommand("tor", "table of Tor_j(M, ^phi^r R)");
  add_common(tor, true);
  add_r(tor);
  auto* rigidity = app.add_subcommand("rigidity", "test the rigidity statements on a module");
  add_common(rigidity, true);
  add_r(rigidity);
  auto* ratio = app.add_subcommand("ratio", "length ratios Tor_j(M, ^phi^r R) / Tor_j(M, k)");
  add_common(ratio, true);
  add_r(ratio);
  auto* balance = app.add_subcommand("balance", "compare with a resolution of ^phi^r R tensored with M");
  add_common(balance, true);
  add_r(balance);
  auto* resolve = app.add_subcommand("resolve", "minimal free resolution");
  add_common(resolve, true);

  auto* search = app.add_subcommand("search", "randomized search for nontrivial Tor vanishing");
  search->add_option("--family", o.family, "ring family")->check(CLI::IsMember({"mixed", "msq0", "depth1", "artinian"}));
  search->add_option("--seed", o.seed, "random seed");
  search->add_option("--trials", o.trials, "number of trials");
  search->add_option("--vars", o.vars, "largest variable count")->check(CLI::Range(1, 3));
  search->add_option("--degree", o.degree, "largest relation degree")->check(CLI::Range(2, 3));
  search->add_option("--size", o.size, "largest generator and relation count")->check(CLI::Range(1, 3));
  search->add_option("--N", o.N, "homological bound")->check(CLI::Range(size_t{0}, kMaxN));
  search->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  add_r(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  if (*check) return run_check(o);
  if (*tor) return run_module_command(o, Command::Tor);
  if (*rigidity) return run_module_command(o, Command::Rigidity);
  if (*ratio) return run_module_command(o, Command::Ratio);
  if (*balance) return run_module_command(o, Command::Balance);
  if (*resolve) return run_module_command(o, Command::Resolve);
  if (*search) return run_search(o);
  return kInputError;
}
