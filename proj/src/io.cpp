#include "fsk/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "fsk/parse.hpp"
#include "json.hpp"

namespace fsk {

namespace {

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Comment-free copy of the input with offset -> (line, column) lookup.
class Source {
 public:
  explicit Source(std::string_view text) : text_(text) {
    bool comment = false;
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        comment = false;
        line_starts_.push_back(i + 1);
      } else if (text_[i] == '#') {
        comment = true;
      }
      if (comment) text_[i] = ' ';
    }
  }
  const std::string& text() const { return text_; }
  std::pair<std::size_t, std::size_t> position(std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    const std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    return {line, offset - line_starts_[line - 1] + 1};
  }
  [[noreturn]] void fail(std::size_t offset, const std::string& msg) const {
    auto [l, c] = position(offset);
    throw ParseError(l, c, msg);
  }

 private:
  std::string text_;
  std::vector<std::size_t> line_starts_;
};

// A slice [begin, end) of the source.
struct Span {
  std::size_t begin = 0, end = 0;
};

class Cursor {
 public:
  Cursor(const Source& src, Span s) : src_(src), pos_(s.begin), end_(s.end) {}
  void skip_ws() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(src_.text()[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= end_;
  }
  std::size_t pos() const { return pos_; }
  char peek() {
    skip_ws();
    return pos_ < end_ ? src_.text()[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) src_.fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < end_ && !std::isdigit(static_cast<unsigned char>(src_.text()[pos_])))
      while (pos_ < end_ && is_ident_char(src_.text()[pos_])) ++pos_;
    if (pos_ == start) src_.fail(start, "expected an identifier");
    return src_.text().substr(start, pos_ - start);
  }
  // Up to (not including) the first top-level character in `stops`.
  Span until(std::string_view stops) {
    skip_ws();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < end_) {
      const char c = src_.text()[pos_];
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      ++pos_;
    }
    std::size_t stop = pos_;
    while (stop > start && std::isspace(static_cast<unsigned char>(src_.text()[stop - 1]))) --stop;
    return {start, stop};
  }

 private:
  const Source& src_;
  std::size_t pos_, end_;
};

struct Statement {
  std::string keyword;
  Span span;  // after the keyword
  std::size_t start;
};

const std::vector<std::string> kKeywords{"ring", "ideal", "extend", "hint"};

std::vector<Statement> split_statements(const Source& src) {
  const std::string& t = src.text();
  std::vector<Statement> out;
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t j = i;
    while (j < t.size() && (t[j] == ' ' || t[j] == '\t' || t[j] == '\r')) ++j;
    std::size_t k = j;
    while (k < t.size() && is_ident_char(t[k])) ++k;
    const std::string word = t.substr(j, k - j);
    if (std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end()) {
      if (!out.empty()) out.back().span.end = i;
      out.push_back({word, {k, t.size()}, j});
    } else if (out.empty()) {
      std::size_t nl = t.find('\n', i);
      if (nl == std::string::npos) nl = t.size();
      for (std::size_t c = i; c < nl; ++c)
        if (!std::isspace(static_cast<unsigned char>(t[c]))) src.fail(c, "expected ring, ideal, extend or hint");
    }
    std::size_t nl = t.find('\n', i);
    i = nl == std::string::npos ? t.size() : nl + 1;
  }
  return out;
}

std::string text_of(const Source& src, Span s) { return src.text().substr(s.begin, s.end - s.begin); }

std::vector<Polynomial> polys_at(const Source& src, Span s, const RingPtr& ring) {
  auto [l, c] = src.position(s.begin);
  return parse_polynomial_list(text_of(src, s), ring, l, c);
}

Polynomial poly_at(const Source& src, Span s, const RingPtr& ring) {
  auto [l, c] = src.position(s.begin);
  return parse_polynomial(text_of(src, s), ring, l, c);
}

RingPresentation parse_ring(const Source& src, Span span) {
  Cursor cur(src, span);
  cur.expect('{');
  std::optional<std::uint64_t> p;
  std::vector<std::string> vars;
  std::optional<Span> mod;
  std::size_t p_at = 0;
  while (cur.peek() != '}') {
    if (cur.at_end()) src.fail(cur.pos(), "unterminated ring block");
    cur.skip_ws();
    const std::size_t key_at = cur.pos();
    const std::string key = cur.ident();
    cur.expect('=');
    Span value = cur.until(";}");
    if (key == "p") {
      const std::string v = text_of(src, value);
      if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        src.fail(value.begin, "p must be a positive integer");
      p = std::stoull(v);
      p_at = value.begin;
    } else if (key == "vars") {
      Cursor vc(src, value);
      while (!vc.at_end()) {
        if (vc.peek() == ',') vc.expect(',');
        const std::size_t at = vc.pos();
        std::string v = vc.ident();
        if (std::find(vars.begin(), vars.end(), v) != vars.end()) src.fail(at, "duplicate variable " + v);
        vars.push_back(std::move(v));
      }
    } else if (key == "mod") {
      mod = value;
    } else {
      src.fail(key_at, "unknown ring field " + key);
    }
    if (cur.peek() == ';') cur.expect(';');
  }
  cur.expect('}');
  if (!cur.at_end()) src.fail(cur.pos(), "unexpected text after ring block");
  if (!p) src.fail(span.begin, "ring block needs p");
  if (vars.empty()) src.fail(span.begin, "ring block needs vars");
  RingPtr r;
  try {
    r = Ring::make(*p, vars);
  } catch (const Error& e) {
    src.fail(p_at, e.what());
  }
  if (!mod) return RingPresentation(r, Ideal(r));
  auto gens = polys_at(src, *mod, r);
  for (const auto& g : gens)
    if (g.is_zero()) src.fail(mod->begin, "zero relation");
  return RingPresentation(r, Ideal(r, gens));
}

struct Stanza {
  std::string var;
  std::size_t var_at = 0;
  std::vector<Span> rels;
  std::optional<std::pair<Span, Span>> frac;
  std::size_t at = 0;
};

Stanza parse_stanza(const Source& src, Cursor& cur) {
  Stanza st;
  st.at = cur.pos();
  cur.expect('{');
  while (cur.peek() != '}') {
    if (cur.at_end()) src.fail(cur.pos(), "unterminated extend block");
    cur.skip_ws();
    const std::size_t key_at = cur.pos();
    const std::string key = cur.ident();
    cur.expect('=');
    if (key == "var") {
      cur.skip_ws();
      st.var_at = cur.pos();
      st.var = cur.ident();
    } else if (key == "rel") {
      st.rels.push_back(cur.until(";}"));
    } else if (key == "frac") {
      Span num = cur.until("/;}");
      cur.expect('/');
      st.frac = std::make_pair(num, cur.until(";}"));
    } else {
      src.fail(key_at, "unknown extend field " + key);
    }
    if (cur.peek() == ';') cur.expect(';');
  }
  cur.expect('}');
  if (st.rels.empty()) src.fail(st.at, "extend block needs a rel");
  if (st.var.empty() && st.frac) src.fail(st.at, "frac needs a var");
  return st;
}

// The monic relation of `var` must be monic with coefficients in the base ring.
void check_monic(const Source& src, Span at, const Polynomial& f, std::size_t var, std::size_t nadjoined) {
  const long long deg = f.degree_in(var);
  bool ok = deg > 0;
  bool lead = false;
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < nadjoined; ++i)
      if (i != var && t.mono[i]) ok = false;
    if (static_cast<long long>(t.mono[var]) == deg) {
      bool pure = t.coeff == 1;
      for (std::size_t i = nadjoined; i < t.mono.size(); ++i) pure = pure && t.mono[i] == 0;
      ok = ok && pure;
      lead = true;
    }
  }
  if (!ok || !lead) src.fail(at.begin, "first rel must be monic in its var over the base ring");
}

ExtensionPresentation assemble_extension(const Source& src, const RingPresentation& R,
                                         const std::vector<Stanza>& stanzas) {
  ExtensionPresentation S;
  S.base = R;
  std::vector<std::optional<std::size_t>> index;
  for (const auto& st : stanzas) {
    if (st.var.empty()) {
      index.push_back(std::nullopt);
      continue;
    }
    if (R.ring->index_of(st.var) || std::find(S.adjoined.begin(), S.adjoined.end(), st.var) != S.adjoined.end())
      src.fail(st.var_at, "variable " + st.var + " is already in use");
    index.push_back(S.adjoined.size());
    S.adjoined.push_back(st.var);
  }
  S.ring = ExtensionPresentation::extension_ring(R, S.adjoined);
  S.monic.assign(S.adjoined.size(), Polynomial(S.ring));
  S.free_over_base.assign(S.adjoined.size(), true);
  for (std::size_t i = 0; i < stanzas.size(); ++i) {
    const Stanza& st = stanzas[i];
    std::size_t first_extra = 0;
    if (index[i]) {
      const std::size_t v = *index[i];
      S.monic[v] = poly_at(src, st.rels[0], S.ring);
      check_monic(src, st.rels[0], S.monic[v], v, S.adjoined.size());
      S.free_over_base[v] = st.rels.size() == 1 && !st.frac;
      first_extra = 1;
      if (st.frac) {
        Polynomial X = poly_at(src, st.frac->second, S.ring);
        if (X.is_zero()) src.fail(st.frac->second.begin, "zero denominator");
        S.birational.push_back({v, poly_at(src, st.frac->first, S.ring), X});
      }
    }
    for (std::size_t k = first_extra; k < st.rels.size(); ++k) {
      Polynomial g = poly_at(src, st.rels[k], S.ring);
      if (g.is_zero()) src.fail(st.rels[k].begin, "zero relation");
      S.relations.push_back(g);
    }
  }
  return S;
}

}  // namespace

JobSpec parse_spec(std::string_view text) {
  const Source src(text);
  const auto statements = split_statements(src);
  if (statements.empty() || statements[0].keyword != "ring") {
    src.fail(statements.empty() ? 0 : statements[0].start, "the file must start with a ring block");
  }
  JobSpec job;
  job.ring = parse_ring(src, statements[0].span);
  std::vector<std::pair<std::string, std::vector<Stanza>>> stanzas;
  for (std::size_t i = 1; i < statements.size(); ++i) {
    const Statement& s = statements[i];
    Cursor cur(src, s.span);
    cur.skip_ws();
    const std::size_t name_at = cur.pos();
    if (s.keyword == "ring") src.fail(s.start, "only one ring block is allowed");
    const std::string name = cur.ident();
    if (s.keyword == "ideal") {
      cur.expect('=');
      Span body = cur.until("");
      for (const auto& [n, I] : job.ideals)
        if (n == name) src.fail(name_at, "ideal " + name + " is defined twice");
      job.ideals.emplace_back(name, Ideal(job.ring.ring, polys_at(src, body, job.ring.ring)));
    } else if (s.keyword == "hint") {
      cur.expect('=');
      bool known = false;
      for (const auto& [n, I] : job.ideals) known = known || n == name;
      if (!known) src.fail(name_at, "hint for unknown ideal " + name);
      std::vector<Ideal> primes;
      while (!cur.at_end()) {
        cur.expect('[');
        Span body = cur.until("]");
        cur.expect(']');
        primes.emplace_back(job.ring.ring, polys_at(src, body, job.ring.ring));
      }
      if (primes.empty()) src.fail(name_at, "hint lists no primes");
      job.hints.emplace_back(name, std::move(primes));
    } else {
      Stanza st = parse_stanza(src, cur);
      if (!cur.at_end()) src.fail(cur.pos(), "unexpected text after extend block");
      auto it = std::find_if(stanzas.begin(), stanzas.end(), [&](const auto& e) { return e.first == name; });
      if (it == stanzas.end()) {
        stanzas.emplace_back(name, std::vector<Stanza>{});
        it = stanzas.end() - 1;
      }
      it->second.push_back(std::move(st));
    }
  }
  for (const auto& [name, sts] : stanzas) job.extensions.emplace_back(name, assemble_extension(src, job.ring, sts));
  return job;
}

JobSpec read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

const Ideal& JobSpec::ideal(const std::string& name) const {
  for (const auto& [n, I] : ideals)
    if (n == name) return I;
  throw Error(ErrorKind::InvalidArgument, "no ideal named " + name);
}

const ExtensionPresentation& JobSpec::extension(const std::string& name) const {
  for (const auto& [n, S] : extensions)
    if (n == name) return S;
  throw Error(ErrorKind::InvalidArgument, "no extension named " + name);
}

std::vector<Ideal> JobSpec::hints_for(const std::string& name) const {
  for (const auto& [n, h] : hints)
    if (n == name) return h;
  return {};
}

EnumerateOptions JobSpec::enumerate_options() const {
  EnumerateOptions o;
  for (const auto& [n, h] : hints) o.hints.emplace_back(ideal(n) + ring.J, h);
  return o;
}

namespace {

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string ideal_body(const Ideal& I) {
  auto s = I.canonical_strings();
  return s.empty() ? "0" : join(s, ", ");
}

}  // namespace

std::string print_ring(const RingPresentation& R) {
  std::string out = "ring { p = " + std::to_string(R.ring->p()) + " ; vars = " + join(R.ring->names(), " ");
  if (!R.J.is_zero()) out += " ; mod = " + ideal_body(R.J);
  return out + " }\n";
}

std::string print_extension(const ExtensionPresentation& S, const std::string& name) {
  const std::size_t m = S.nadjoined();
  // Extra relations go with the last adjoined variable they mention; those
  // over the base ring get a stanza of their own.
  std::vector<std::vector<Polynomial>> extra(m);
  std::vector<Polynomial> base;
  for (const auto& g : S.relations) {
    std::optional<std::size_t> last;
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < m; ++i)
        if (t.mono[i] && (!last || i > *last)) last = i;
    if (last) extra[*last].push_back(g);
    else base.push_back(g);
  }
  std::string out;
  for (std::size_t v = 0; v < m; ++v) {
    out += "extend " + name + " { var = " + S.adjoined[v] + " ; rel = " + S.monic[v].to_string();
    for (const auto& g : extra[v]) out += " ; rel = " + g.to_string();
    for (const auto& b : S.birational)
      if (b.var == v) out += " ; frac = " + b.c.to_string() + " / " + b.X.to_string();
    out += " }\n";
  }
  if (!base.empty()) {
    out += "extend " + name + " {";
    for (std::size_t i = 0; i < base.size(); ++i) out += std::string(i ? " ;" : "") + " rel = " + base[i].to_string();
    out += " }\n";
  }
  return out;
}

std::string print_spec(const JobSpec& job) {
  std::string out = print_ring(job.ring);
  for (const auto& [n, I] : job.ideals) out += "ideal " + n + " = " + ideal_body(I) + "\n";
  for (const auto& [n, h] : job.hints) {
    out += "hint " + n + " =";
    for (const auto& P : h) out += " [ " + ideal_body(P) + " ]";
    out += "\n";
  }
  for (const auto& [n, S] : job.extensions) out += print_extension(S, n);
  return out;
}

std::string emit_lattice(const CompatibleLattice& L, const RingPresentation& R, LatticeFormat format) {
  if (format == LatticeFormat::Dot) {
    std::string out = "digraph lattice {\n";
    for (std::size_t i = 0; i < L.ideals.size(); ++i)
      out += "  n" + std::to_string(i) + " [label=\"" + L.ideals[i].to_string() + "\"];\n";
    for (const auto& [a, b] : L.hasse()) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    return out + "}\n";
  }
  using nlohmann::json;
  auto lists = [](const std::vector<Ideal>& ideals) {
    json a = json::array();
    for (const auto& I : ideals) a.push_back(I.canonical_strings());
    return a;
  };
  json j;
  j["p"] = R.ring->p();
  j["ring"] = {{"vars", R.ring->names()}, {"mod", R.J.canonical_strings()}};
  j["compatible_primes"] = lists(L.primes);
  j["minimal_primes"] = lists(L.minimal_primes);
  j["ideals"] = lists(L.ideals);
  json edges = json::array();
  for (const auto& [a, b] : L.edges) edges.push_back({a, b});
  j["containments"] = edges;
  return j.dump(2) + "\n";
}

std::string report_json(const VerificationReport& rep) {
  using nlohmann::json;
  auto flagged = [](const std::vector<std::pair<Ideal, bool>>& xs, const char* key) {
    json a = json::array();
    for (const auto& [I, ok] : xs) a.push_back({{"prime", I.canonical_strings()}, {key, ok}});
    return a;
  };
  json j;
  j["tau"] = rep.tau.canonical_strings();
  j["equals_input"] = rep.equals_input;
  j["etale_certified"] = flagged(rep.etale_certified, "certified");
  j["split_at"] = flagged(rep.split_at, "split");
  j["class_death"] = flagged(rep.class_death, "dies");
  j["radical_check"] = rep.radical_check;
  j["compatible"] = rep.compatible;
  return j.dump(2) + "\n";
}

}  // namespace fsk
