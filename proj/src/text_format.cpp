// Parser and printer for the presentation text format.

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>

#include "tight/error.hpp"
#include "tight/presentation.hpp"

namespace tight {

namespace {

constexpr long kMaxExponent = 1'000'000;
constexpr std::size_t kMaxWordLength = 10'000'000;

class Cursor {
 public:
  Cursor(std::string_view text, int line, int column) : text_(text), line_(line), col0_(column) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  // Identifier (letters/digits), no leading whitespace skipping beyond ws.
  std::string_view ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  std::optional<long> integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      return std::nullopt;
    }
    if (text_[start] == '+') ++start;
    long v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc()) fail("integer out of range", start);
    return v;
  }
  // Exponent right after '^' (no whitespace allowed before the '^').
  std::optional<long> exponent_suffix() {
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::size_t at = pos_;
      auto k = integer();
      if (!k) fail("expected integer exponent after '^'", at);
      if (*k == 0) fail("zero exponent", at);
      if (std::labs(*k) > kMaxExponent) fail("exponent too large", at);
      return k;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError(line_, col0_ + static_cast<int>(at), msg);
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int col0_;
};

Word parse_product(Cursor& cur, bool nested) {
  Word out;
  while (true) {
    const char c = cur.peek();
    if (c == '\0') {
      if (nested) cur.fail("missing ')'");
      break;
    }
    if (c == ')') {
      if (!nested) cur.fail("unbalanced ')'");
      break;
    }
    Word atom;
    if (cur.consume('(')) {
      atom = parse_product(cur, true);
      if (!cur.consume(')')) cur.fail("missing ')'");
      if (auto k = cur.exponent_suffix()) atom = atom.pow(*k);
    } else {
      const std::size_t at = cur.pos();
      const std::string_view name = cur.ident();
      if (name.empty()) cur.fail(std::string("unexpected character '") + c + "'");
      int gen = 0;
      if (name == "s1") {
        gen = 1;
      } else if (name == "s2") {
        gen = 2;
      } else {
        cur.fail("unknown generator '" + std::string(name) + "'", at);
      }
      long k = 1;
      if (auto e = cur.exponent_suffix()) k = *e;
      atom = Word::power(gen, k);
    }
    if (out.size() + atom.size() > kMaxWordLength) cur.fail("word too long");
    out *= atom;
  }
  return out;
}

struct Declaration {
  std::string_view text;
  int line;
  int column;  // 1-based column of text[0]
};

std::vector<Declaration> split_declarations(std::string_view text) {
  std::vector<Declaration> out;
  int line = 1;
  std::size_t line_start = 0;
  std::size_t decl_start = 0;
  bool in_comment = false;
  auto flush = [&](std::size_t end) {
    out.push_back({text.substr(decl_start, end - decl_start), line,
                   static_cast<int>(decl_start - line_start) + 1});
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '\n';
    if (c == '\n') {
      if (!in_comment) flush(i);
      in_comment = false;
      ++line;
      line_start = i + 1;
      decl_start = i + 1;
    } else if (in_comment) {
      continue;
    } else if (c == '#') {
      flush(i);
      in_comment = true;
    } else if (c == ';') {
      flush(i);
      decl_start = i + 1;
    }
  }
  return out;
}

std::string format_exponent_run(int gen, long k) {
  std::string s = "s" + std::to_string(gen);
  if (k != 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

Word parse_word(std::string_view text) {
  Cursor cur(text, 1, 1);
  if (cur.at_end()) cur.fail("empty word");
  return parse_product(cur, false).reduced();
}

std::string format_word(const Word& w) {
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    if (!out.empty()) out += ' ';
    out += format_exponent_run(ls[i].gen, static_cast<long>(j - i) * ls[i].sign);
    i = j;
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  std::optional<GpParams> gp;
  std::vector<Word> rels;
  int gp_line = 0;
  for (const Declaration& d : split_declarations(text)) {
    Cursor cur(d.text, d.line, d.column);
    if (cur.at_end()) continue;
    const std::size_t kw_at = cur.pos();
    const std::string_view kw = cur.ident();
    if (kw == "gp") {
      if (gp) cur.fail("duplicate gp declaration (first on line " + std::to_string(gp_line) + ")",
                       kw_at);
      GpParams g;
      auto p = cur.integer();
      auto q = cur.integer();
      if (!p || !q) cur.fail("gp expects: gp <p> <q> : <i1> <j1> <i2> <j2>");
      if (*p <= 0 || *q <= 0) cur.fail("p and q must be positive");
      if (*p > kMaxExponent || *q > kMaxExponent) cur.fail("p or q too large");
      if (!cur.consume(':')) cur.fail("expected ':' after gp <p> <q>");
      long vals[4];
      for (long& v : vals) {
        auto x = cur.integer();
        if (!x) cur.fail("gp expects four residues after ':' (arity)");
        v = *x;
      }
      if (!cur.at_end()) cur.fail("trailing input after gp residues (arity)");
      g.p = static_cast<int>(*p);
      g.q = static_cast<int>(*q);
      g.i1 = vals[0];
      g.j1 = vals[1];
      g.i2 = vals[2];
      g.j2 = vals[3];
      gp = g;
      gp_line = d.line;
    } else if (kw == "rel") {
      if (cur.at_end()) cur.fail("rel expects a word");
      Word w = parse_product(cur, false).reduced();
      if (!w.empty()) rels.push_back(std::move(w));
    } else {
      cur.fail(kw.empty() ? "expected 'gp' or 'rel'" : "unknown keyword '" + std::string(kw) + "'",
               kw_at);
    }
  }

  if (gp) {
    gp->extra_relators = std::move(rels);
    return Presentation::family(*gp);
  }
  if (rels.empty()) throw ParseError(1, 1, "empty presentation");
  int p = 0;
  int q = 0;
  for (const Word& w : rels) {
    if (const int g = w.pure_power_gen(); g != 0) {
      const int k = static_cast<int>(std::labs(w.exponent_sum(g)));
      (g == 1 ? p : q) = std::gcd(g == 1 ? p : q, k);
    }
  }
  if (p == 0) throw ParseError(1, 1, "missing pure power relator s1^p");
  if (q == 0) throw ParseError(1, 1, "missing pure power relator s2^q");
  return Presentation::plain(p, q, std::move(rels));
}

std::string format_presentation(const Presentation& pres) {
  std::ostringstream os;
  if (auto g = pres.params()) {
    os << "gp " << g->p << ' ' << g->q << " : " << g->i1 << ' ' << g->j1 << ' ' << g->i2 << ' '
       << g->j2 << '\n';
  } else {
    os << "rel " << format_exponent_run(1, pres.declared_p()) << '\n';
    os << "rel " << format_exponent_run(2, pres.declared_q()) << '\n';
    os << "rel (s1 s2)^2\n";
  }
  for (const Word& w : pres.extra_relators()) os << "rel " << format_word(w) << '\n';
  return os.str();
}

std::string describe(const Presentation& pres) {
  std::string s = format_presentation(pres);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (char& c : s) {
    if (c == '\n') c = ';';
  }
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += s[i];
    if (s[i] == ';') out += ' ';
  }
  return out;
}

}  // namespace tight
