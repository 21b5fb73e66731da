#include <cctype>
#include <set>
#include <sstream>

#include "frobrig/errors.hpp"
#include "frobrig/ringkit.hpp"

namespace frobrig::ringkit {

namespace {

enum class Tok { Ident, Int, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
    } else if (std::string_view("[](),/*^+-=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), tl, tc});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool peek_symbol(char c) const { return peek().kind == Tok::Symbol && peek().text[0] == c; }
  bool peek_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg + (t.kind == Tok::End ? " (at end of input)" : " near '" + t.text + "'"), t.line, t.column);
  }

  Token take() { return toks_[pos_++]; }
  void expect_symbol(char c) {
    if (!peek_symbol(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_word(std::string_view w) {
    if (!peek_word(w)) fail("expected '" + std::string(w) + "'");
    ++pos_;
  }
  uint64_t take_int(const char* what) {
    if (peek().kind != Tok::Int) fail(std::string("expected ") + what);
    const Token t = take();
    if (t.text.size() > 18) throw ParseError("integer too large", t.line, t.column);
    return std::stoull(t.text);
  }
  std::string take_ident(const char* what) {
    if (peek().kind != Tok::Ident) fail(std::string("expected ") + what);
    return take().text;
  }

  RingPresentation ring() {
    RingPresentation pres;
    expect_word("ring");
    const Token ft = peek();
    uint64_t p = 0;
    if (peek_word("F")) {
      ++pos_;
      p = take_int("characteristic");
    } else if (ft.kind == Tok::Ident && ft.text.size() > 1 && ft.text[0] == 'F' &&
               std::all_of(ft.text.begin() + 1, ft.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      ++pos_;
      p = std::stoull(ft.text.substr(1));
    } else {
      fail("expected 'F' followed by the characteristic");
    }
    if (!linalg::is_prime(p)) throw ParseError("characteristic " + std::to_string(p) + " is not prime", ft.line, ft.column);
    if (p > linalg::kMaxPrime)
      throw ParseError("characteristic " + std::to_string(p) + " exceeds the supported maximum " +
                           std::to_string(linalg::kMaxPrime),
                       ft.line, ft.column);
    pres.p = static_cast<uint32_t>(p);

    expect_symbol('[');
    std::set<std::string> seen;
    do {
      const Token vt = peek();
      std::string v = take_ident("variable name");
      if (!seen.insert(v).second) throw ParseError("duplicate variable '" + v + "'", vt.line, vt.column);
      pres.variables.push_back(v);
    } while (peek_symbol(',') && (++pos_, true));
    expect_symbol(']');
    expect_symbol('/');
    expect_symbol('(');
    if (!peek_symbol(')')) {
      do {
        const Token rt = peek();
        Polynomial f = poly(pres);
        if (f.constant_term() != 0)
          throw ParseError("relation has a nonzero constant term (the quotient would be the zero ring)", rt.line,
                           rt.column);
        pres.relations.push_back(std::move(f));
      } while (peek_symbol(',') && (++pos_, true));
    }
    expect_symbol(')');
    if (peek_word("cap")) {
      ++pos_;
      const Token ct = peek();
      uint64_t cap = take_int("degree cap");
      if (cap < 2 || cap > 10000) throw ParseError("degree cap must lie in [2, 10000]", ct.line, ct.column);
      pres.cap = static_cast<int>(cap);
    }
    return pres;
  }

  Polynomial poly(const RingPresentation& ring) {
    Polynomial f(ring.p, ring.variables.size());
    bool negate = false;
    if (peek_symbol('-')) {
      ++pos_;
      negate = true;
    } else if (peek_symbol('+')) {
      ++pos_;
    }
    for (;;) {
      Polynomial t = term(ring);
      f = negate ? f - t : f + t;
      if (peek_symbol('+')) {
        ++pos_;
        negate = false;
      } else if (peek_symbol('-')) {
        ++pos_;
        negate = true;
      } else {
        break;
      }
    }
    return f;
  }

  Polynomial term(const RingPresentation& ring) {
    const size_t n = ring.variables.size();
    uint32_t coeff = 1;
    Exponents e(n, 0);
    bool need_factor = true;
    if (peek().kind == Tok::Int) {
      coeff = static_cast<uint32_t>(take_int("coefficient") % ring.p);
      if (!peek_symbol('*')) return Polynomial::constant(ring.p, n, coeff);
      ++pos_;
    }
    while (need_factor) {
      const Token vt = peek();
      const std::string name = take_ident("variable");
      size_t idx = 0;
      while (idx < n && ring.variables[idx] != name) ++idx;
      if (idx == n) throw ParseError("unknown variable '" + name + "'", vt.line, vt.column);
      int power = 1;
      if (peek_symbol('^')) {
        ++pos_;
        const Token pt = peek();
        uint64_t k = take_int("exponent");
        if (k > 100000) throw ParseError("exponent too large", pt.line, pt.column);
        power = static_cast<int>(k);
      }
      e[idx] += power;
      need_factor = peek_symbol('*') && (++pos_, true);
    }
    return Polynomial::monomial(ring.p, e, coeff);
  }

  ModuleSpec module_expr(const RingPresentation& ring, std::string name, size_t start_pos) {
    ModuleSpec spec;
    spec.name = std::move(name);
    if (peek_word("k")) {
      ++pos_;
      spec.kind = ModuleSpec::Kind::ResidueField;
      spec.generators = 1;
      std::vector<Polynomial> row;
      for (size_t v = 0; v < ring.variables.size(); ++v)
        row.push_back(Polynomial::variable(ring.p, ring.variables.size(), v));
      spec.rows.push_back(std::move(row));
    } else if (peek_word("free")) {
      ++pos_;
      spec.kind = ModuleSpec::Kind::Free;
      spec.generators = take_int("rank");
      spec.rows.assign(spec.generators, {});
    } else if (peek_word("coker")) {
      ++pos_;
      spec.kind = ModuleSpec::Kind::Cokernel;
      expect_symbol('[');
      do {
        expect_symbol('[');
        std::vector<Polynomial> row;
        if (!peek_symbol(']')) {
          do {
            row.push_back(poly(ring));
          } while (peek_symbol(',') && (++pos_, true));
        }
        expect_symbol(']');
        if (!spec.rows.empty() && row.size() != spec.rows.front().size())
          fail("matrix rows have different lengths");
        spec.rows.push_back(std::move(row));
      } while (peek_symbol(',') && (++pos_, true));
      expect_symbol(']');
      spec.generators = spec.rows.size();
    } else {
      fail("expected 'k', 'free' or 'coker'");
    }
    std::ostringstream src;
    for (size_t i = start_pos; i < pos_; ++i) {
      const auto& t = toks_[i];
      if (i > start_pos && t.kind != Tok::Symbol && toks_[i - 1].kind != Tok::Symbol) src << ' ';
      src << t.text;
    }
    spec.source = src.str();
    return spec;
  }

  size_t position() const { return pos_; }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

}  // namespace

RingPresentation parse_presentation(std::string_view text) {
  Parser parser(text);
  RingPresentation pres = parser.ring();
  if (!parser.at_end()) parser.fail("unexpected trailing input");
  return pres;
}

RingDocument parse_document(std::string_view text) {
  Parser parser(text);
  RingDocument doc;
  doc.ring = parser.ring();
  std::set<std::string> names;
  while (!parser.at_end()) {
    parser.expect_word("module");
    const Token nt = parser.peek();
    std::string name = parser.take_ident("module name");
    if (!names.insert(name).second) throw ParseError("duplicate module '" + name + "'", nt.line, nt.column);
    parser.expect_symbol('=');
    doc.modules.push_back(parser.module_expr(doc.ring, name, parser.position()));
  }
  return doc;
}

ModuleSpec parse_module_expression(std::string_view text, const RingPresentation& ring, std::string name) {
  Parser parser(text);
  ModuleSpec spec = parser.module_expr(ring, std::move(name), 0);
  if (!parser.at_end()) parser.fail("unexpected trailing input");
  return spec;
}

Polynomial parse_polynomial(std::string_view text, const RingPresentation& ring) {
  Parser parser(text);
  Polynomial f = parser.poly(ring);
  if (!parser.at_end()) parser.fail("unexpected trailing input");
  return f;
}

std::string print_presentation(const RingPresentation& pres) {
  std::ostringstream out;
  out << "ring F " << pres.p << " [";
  for (size_t i = 0; i < pres.variables.size(); ++i) out << (i ? "," : "") << pres.variables[i];
  out << "] / (";
  for (size_t i = 0; i < pres.relations.size(); ++i) out << (i ? ", " : "") << pres.relations[i].to_string(pres.variables);
  out << ") cap " << pres.cap;
  return out.str();
}

}  // namespace frobrig::ringkit
