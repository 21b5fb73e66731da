#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "frobrig/report.hpp"

namespace frobrig::report {

using nlohmann::ordered_json;

namespace {

ordered_json length_json(const frobtor::Length& l) {
  if (l.is_finite()) return l.value;
  return l.to_string();
}

ordered_json table_json(const frobtor::TorTable& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json o;
    o["j"] = row.j;
    o["length"] = length_json(row.length);
    o["betti"] = row.betti;
    if (row.ratio) o["ratio"] = row.ratio->to_string();
    rows.push_back(std::move(o));
  }
  ordered_json o;
  o["module"] = t.module;
  o["r"] = t.r;
  o["rows"] = std::move(rows);
  o["verdicts"] = t.verdicts;
  return o;
}

// Left-aligned first column, right-aligned rest.
std::string aligned(const std::vector<std::vector<std::string>>& cells) {
  if (cells.empty()) return "";
  std::vector<size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      line += c == 0 ? row[c] + pad : "  " + pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string table_text(const frobtor::TorTable& t) {
  std::ostringstream out;
  out << "Tor_j(" << t.module << ", ^phi^" << t.r << " R)\n";
  std::vector<std::vector<std::string>> cells{{"j", "length", "betti", "ratio"}};
  for (const auto& row : t.rows)
    cells.push_back({std::to_string(row.j), row.length.to_string(), std::to_string(row.betti),
                     row.ratio ? row.ratio->to_string() : "-"});
  out << aligned(cells);
  for (const auto& v : t.verdicts) out << "verdict: " << v << '\n';
  return out.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string render(const invariants::InvariantReport& rep, Format f) {
  std::vector<std::string> seq;
  for (const auto& y : rep.regular_sequence) seq.push_back(y.to_string(rep.variables));

  if (f == Format::Json) {
    ordered_json o;
    o["ring"] = rep.ring;
    o["p"] = rep.p;
    o["cap"] = rep.cap;
    o["artinian"] = rep.artinian;
    o["graded"] = rep.graded;
    o["field"] = rep.field;
    if (rep.length) o["length"] = *rep.length;
    if (rep.nilpotency) o["nilpotency_index"] = *rep.nilpotency;
    o["condition1"] = rep.condition1;
    o["depth"] = rep.depth;
    o["depth_at_cap"] = rep.depth_at_cap;
    o["regular_sequence"] = seq;
    if (rep.c) o["c"] = *rep.c;
    if (rep.c_y) o["c_y"] = *rep.c_y;
    o["r_threshold"] = rep.r_threshold;
    o["socle_dim"] = rep.socle_dim;
    o["notes"] = rep.notes;
    return dump(o);
  }
  std::vector<std::vector<std::string>> cells{
      {"ring", rep.ring},
      {"artinian", yes_no(rep.artinian)},
      {"graded", yes_no(rep.graded)},
  };
  if (rep.length) cells.push_back({"length", std::to_string(*rep.length)});
  if (rep.nilpotency) cells.push_back({"nilpotency index", std::to_string(*rep.nilpotency)});
  cells.push_back({"socle condition", yes_no(rep.condition1)});
  cells.push_back({"depth", std::to_string(rep.depth) + (rep.depth_at_cap ? " (at cap)" : "")});
  if (!seq.empty()) {
    std::string s;
    for (const auto& y : seq) s += (s.empty() ? "" : ", ") + y;
    cells.push_back({"regular sequence", s});
  }
  if (rep.c) cells.push_back({"c(R)", std::to_string(*rep.c)});
  if (rep.c_y) cells.push_back({"c_y(R)", std::to_string(*rep.c_y)});
  cells.push_back({"r threshold", std::to_string(rep.r_threshold)});
  cells.push_back({"socle dimension", std::to_string(rep.socle_dim)});
  std::ostringstream out;
  for (const auto& row : cells) out << row[0] << std::string(18 - std::min<size_t>(row[0].size(), 17), ' ') << row[1] << '\n';
  for (const auto& n : rep.notes) out << "note: " << n << '\n';
  return out.str();
}

std::string render(const frobtor::TorTable& table, Format f) {
  return f == Format::Json ? dump(table_json(table)) : table_text(table);
}

std::string render(const frobtor::RigidityReport& rep, Format f) {
  if (f == Format::Json) {
    ordered_json o;
    o["module"] = rep.table.module;
    o["r"] = rep.table.r;
    o["table"] = table_json(rep.table);
    if (rep.first_vanishing) o["first_vanishing"] = *rep.first_vanishing;
    o["later_nonvanishing"] = rep.later_nonvanishing;
    o["is_free"] = rep.is_free;
    if (rep.pd_finite) o["pd_finite"] = *rep.pd_finite;
    o["condition1"] = rep.condition1;
    o["depth"] = rep.depth;
    if (rep.c) o["c"] = *rep.c;
    if (rep.c_y) o["c_y"] = *rep.c_y;
    ordered_json vs = ordered_json::array();
    for (const auto& v : rep.verdicts)
      vs.push_back({{"rule", v.rule}, {"applicable", v.applicable}, {"consistent", v.consistent}, {"detail", v.detail}});
    o["verdicts"] = std::move(vs);
    o["flagged"] = rep.flagged();
    return dump(o);
  }
  std::ostringstream out;
  out << table_text(rep.table);
  out << "first vanishing j: " << (rep.first_vanishing ? std::to_string(*rep.first_vanishing) : "none") << '\n';
  if (rep.first_vanishing) out << "later nonvanishing: " << yes_no(rep.later_nonvanishing) << '\n';
  out << "free: " << yes_no(rep.is_free) << '\n';
  out << "pd finite: " << (rep.pd_finite ? yes_no(*rep.pd_finite) : "unknown") << '\n';
  std::vector<std::vector<std::string>> cells{{"rule", "status", "detail"}};
  for (const auto& v : rep.verdicts)
    cells.push_back({v.rule, !v.applicable ? "n/a" : v.consistent ? "consistent" : "FLAGGED", v.detail});
  out << aligned(cells);
  out << (rep.flagged() ? "result: FLAGGED\n" : "result: consistent\n");
  return out.str();
}

std::string render(const frobtor::RatioReport& rep, Format f) {
  if (f == Format::Json) {
    ordered_json o;
    o["table"] = table_json(rep.table);
    if (rep.ring_length) o["ring_length"] = *rep.ring_length;
    o["constancy_applicable"] = rep.constancy_applicable;
    if (rep.constant) o["constant"] = *rep.constant;
    o["verdict"] = rep.verdict;
    return dump(o);
  }
  std::ostringstream out;
  frobtor::TorTable t = rep.table;
  t.verdicts.clear();
  out << table_text(t);
  if (rep.ring_length) out << "length of R: " << *rep.ring_length << '\n';
  out << "verdict: " << rep.verdict << '\n';
  return out.str();
}

std::string render_balance(const std::string& module, int r, const frobtor::BalanceReport& rep, Format f) {
  if (f == Format::Json) {
    ordered_json rows = ordered_json::array();
    for (size_t j = 0; j < rep.equal.size(); ++j)
      rows.push_back({{"j", j},
                      {"frobenius", length_json(rep.frobenius_side[j])},
                      {"module_side", rep.module_side[j]},
                      {"equal", static_cast<bool>(rep.equal[j])}});
    ordered_json o;
    o["module"] = module;
    o["r"] = r;
    o["rows"] = std::move(rows);
    o["all_equal"] = rep.all_equal();
    return dump(o);
  }
  std::ostringstream out;
  out << "balance check for " << module << ", r = " << r << '\n';
  std::vector<std::vector<std::string>> cells{{"j", "twisted F(M)", "F(^phi R) (x) M", "equal"}};
  for (size_t j = 0; j < rep.equal.size(); ++j)
    cells.push_back({std::to_string(j), rep.frobenius_side[j].to_string(), std::to_string(rep.module_side[j]),
                     yes_no(rep.equal[j])});
  out << aligned(cells);
  out << (rep.all_equal() ? "result: equal\n" : "result: MISMATCH\n");
  return out.str();
}

std::string render_resolution(const std::string& module, const resolve::FreeComplex& F, Format f) {
  if (f == Format::Json) {
    ordered_json ds = ordered_json::array();
    for (const auto& d : F.differentials) {
      ordered_json rows = ordered_json::array();
      for (const auto& row : d.to_polynomials()) {
        ordered_json r = ordered_json::array();
        for (const auto& e : row) r.push_back(e.to_string(F.algebra->variables()));
        rows.push_back(std::move(r));
      }
      ds.push_back({{"rows", d.rows()}, {"cols", d.cols()}, {"entries", std::move(rows)}});
    }
    ordered_json o;
    o["module"] = module;
    o["ring"] = ringkit::print_presentation(F.algebra->presentation());
    o["ranks"] = F.ranks;
    o["graded"] = F.graded();
    o["minimal"] = F.minimal;
    o["differentials"] = std::move(ds);
    return dump(o);
  }
  std::ostringstream out;
  out << "minimal free resolution of " << module << " over " << ringkit::print_presentation(F.algebra->presentation())
      << '\n';
  out << "ranks:";
  for (size_t l : F.ranks) out << ' ' << l;
  out << '\n';
  for (size_t n = 1; n <= F.length(); ++n) {
    const auto& d = F.d(n);
    if (d.rows() * d.cols() == 0) continue;
    if (d.rows() * d.cols() > 64) {
      out << "d_" << n << ": " << d.rows() << " x " << d.cols() << " (not shown)\n";
      continue;
    }
    out << "d_" << n << " =\n" << d.to_string();
    if (out.str().back() != '\n') out << '\n';
  }
  return out.str();
}

std::string join(const std::vector<std::string>& parts, Format f) {
  if (f == Format::Json) {
    if (parts.size() == 1) return parts[0];
    ordered_json arr = ordered_json::array();
    for (const auto& p : parts) arr.push_back(ordered_json::parse(p));
    return dump(arr);
  }
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? "\n" : "") + parts[i];
  return out;
}

std::string render(const SearchSummary& s, Format f) {
  if (f == Format::Json) {
    ordered_json ws = ordered_json::array();
    for (const auto& w : s.witnesses)
      ws.push_back({{"trial", w.trial},
                    {"ring", w.ring},
                    {"module", w.module},
                    {"r", w.r},
                    {"j", w.j},
                    {"depth", w.depth},
                    {"contradiction", w.contradiction}});
    ordered_json o;
    o["family"] = s.params.family;
    o["seed"] = s.params.seed;
    o["trials"] = s.params.trials;
    o["r_values"] = s.params.r_values;
    o["N"] = s.params.N;
    o["evaluated"] = s.evaluated;
    o["skipped"] = s.skipped;
    o["free_modules"] = s.free_modules;
    o["witnesses"] = std::move(ws);
    o["contradictions"] = s.contradictions;
    o["window"] = {{"checked", s.window_checked}, {"vanishing", s.window_vanishing}, {"violations", s.window_violations}};
    o["flagged"] = s.flagged;
    o["skip_reasons"] = s.skip_reasons;
    return dump(o);
  }
  std::ostringstream out;
  out << "search: family " << s.params.family << ", seed " << s.params.seed << ", " << s.params.trials << " trials, N "
      << s.params.N << ", r in {";
  for (size_t i = 0; i < s.params.r_values.size(); ++i) out << (i ? "," : "") << s.params.r_values[i];
  out << "}\n";
  std::vector<std::vector<std::string>> cells{
      {"evaluated", std::to_string(s.evaluated)},
      {"skipped", std::to_string(s.skipped)},
      {"free modules", std::to_string(s.free_modules)},
      {"witnesses", std::to_string(s.witnesses.size())},
      {"contradictions", std::to_string(s.contradictions)},
      {"window checks", std::to_string(s.window_checked)},
      {"vanishing windows", std::to_string(s.window_vanishing)},
      {"window violations", std::to_string(s.window_violations)},
      {"flagged verdicts", std::to_string(s.flagged)},
  };
  out << aligned(cells);
  for (const auto& w : s.witnesses)
    out << "witness: trial " << w.trial << ", " << w.ring << ", M = " << w.module << ", r = " << w.r << ", Tor_" << w.j
        << " = 0, depth " << w.depth << (w.contradiction ? " [CONTRADICTION]" : "") << '\n';
  for (const auto& r : s.skip_reasons) out << "skipped: " << r << '\n';
  if (s.witnesses.empty()) out << "no witnesses: every vanishing Tor_j came from a free module or none occurred\n";
  return out.str();
}

}  // namespace frobrig::report
