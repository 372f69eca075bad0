#include "lgca/io.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace lgca {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(Errc::parse, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

GraphFile parse_graph_file(const std::string& text) {
  std::optional<std::vector<std::string>> vertices;
  std::vector<std::array<std::string, 3>> edges;
  std::optional<FamilyMode> mode;
  std::vector<std::vector<std::string>> raw_sets;

  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t colon = line.find(':');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (colon == std::string::npos) parse_fail(lineno, "expected 'directive: ...'");

    std::string head = line.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               head.end());
    std::vector<std::string> args = split_ws(line.substr(colon + 1));

    if (head == "vertices") {
      if (vertices) parse_fail(lineno, "second 'vertices:' directive");
      if (args.empty()) parse_fail(lineno, "'vertices:' needs at least one name");
      for (std::size_t i = 0; i < args.size(); ++i)
        if (std::find(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(i), args[i]) !=
            args.begin() + static_cast<std::ptrdiff_t>(i))
          parse_fail(lineno, "duplicate vertex '" + args[i] + "'");
      vertices = args;
    } else if (head == "edge") {
      if (!vertices) parse_fail(lineno, "'edge:' before 'vertices:'");
      if (args.size() != 3) parse_fail(lineno, "'edge:' needs source, label, target");
      for (const std::string& end : {args[0], args[2]})
        if (std::find(vertices->begin(), vertices->end(), end) == vertices->end())
          fail(Errc::unknown_vertex,
               "undeclared vertex " + end + ", line " + std::to_string(lineno));
      edges.push_back({args[0], args[1], args[2]});
    } else if (head == "family") {
      if (mode) parse_fail(lineno, "second 'family:' directive");
      if (args.size() != 1) parse_fail(lineno, "'family:' needs one mode");
      if (args[0] == "explicit")
        mode = FamilyMode::explicit_sets;
      else if (args[0] == "accommodating-closure")
        mode = FamilyMode::accommodating_closure;
      else if (args[0] == "normal-closure")
        mode = FamilyMode::normal_closure;
      else
        parse_fail(lineno, "unknown family mode '" + args[0] + "'");
    } else if (head == "set") {
      if (!vertices) parse_fail(lineno, "'set:' before 'vertices:'");
      raw_sets.push_back(args);
    } else {
      parse_fail(lineno, "unknown directive '" + head + "'");
    }
  }

  if (!vertices) fail(Errc::parse, "missing 'vertices:' directive");
  if (!mode) fail(Errc::parse, "missing 'family:' directive");

  LabeledGraph g(*vertices, edges);
  std::vector<VertexSet> sets;
  for (const auto& names : raw_sets) {
    VertexSet s;
    for (const auto& n : names) {
      auto v = g.vertex_index(n);
      if (!v) fail(Errc::unknown_vertex, "set uses undeclared vertex '" + n + "'");
      s.insert(*v);
    }
    sets.push_back(s);
  }
  return {std::move(g), *mode, std::move(sets)};
}

LabeledSpace make_space(const GraphFile& f, ClosureOptions opts,
                        std::optional<FamilyMode> override_mode) {
  FamilyMode mode = override_mode.value_or(f.mode);
  SetFamily base(f.sets);
  switch (mode) {
    case FamilyMode::explicit_sets:
      return LabeledSpace(f.graph, base);
    case FamilyMode::accommodating_closure:
      return LabeledSpace(f.graph, accommodating_closure(f.graph, base, opts));
    case FamilyMode::normal_closure:
      return LabeledSpace(f.graph, normal_closure(f.graph, base, opts));
  }
  fail(Errc::precondition, "unreachable family mode");
}

std::optional<Word> segment_word(const LabeledGraph& g, const std::string& text) {
  // Labels may be several characters; try longer matches first and
  // backtrack. Alphabets are tiny, so this stays cheap.
  std::vector<std::string> labels = g.alphabet();
  std::sort(labels.begin(), labels.end(),
            [](const std::string& a, const std::string& b) { return a.size() > b.size(); });

  std::vector<int> syms;
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (position, next label rank)
  std::size_t pos = 0, rank = 0;
  while (true) {
    if (pos == text.size()) return Word(syms);
    bool advanced = false;
    for (; rank < labels.size(); ++rank) {
      const std::string& l = labels[rank];
      if (text.compare(pos, l.size(), l) == 0) {
        stack.emplace_back(pos, rank + 1);
        syms.push_back(*g.label_index(l));
        pos += l.size();
        rank = 0;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    if (stack.empty()) return std::nullopt;
    std::tie(pos, rank) = stack.back();
    stack.pop_back();
    syms.pop_back();
  }
}

VertexSet parse_vertex_set(const LabeledGraph& g, const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') fail(Errc::parse, "unbalanced '{' in vertex set");
    body = body.substr(1, body.size() - 2);
  }
  VertexSet out;
  std::string name;
  std::istringstream is(body);
  while (std::getline(is, name, ',')) {
    name.erase(std::remove_if(name.begin(), name.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               name.end());
    if (name.empty()) continue;
    auto v = g.vertex_index(name);
    if (!v) fail(Errc::unknown_vertex, "unknown vertex '" + name + "'");
    out.insert(*v);
  }
  return out;
}

namespace {

// Cursor-based scanner for term expressions.
class TermParser {
public:
  TermParser(const LabeledSpace& s, const std::string& text) : space_(s), text_(text) {}

  AlgebraElement parse() {
    skip_ws();
    if (peek() == '0' && at_end_after(pos_ + 1)) return {};
    AlgebraElement out;
    Rational sign = accept('-') ? -1 : 1;
    parse_signed_term(out, sign);
    skip_ws();
    while (!at_end()) {
      char op = take();
      if (op != '+' && op != '-') syntax("expected '+' or '-'");
      parse_signed_term(out, op == '-' ? -1 : 1);
      skip_ws();
    }
    return out;
  }

private:
  void parse_signed_term(AlgebraElement& out, Rational sign) {
    skip_ws();
    Rational coeff = sign;
    if (peek_rational()) {
      coeff *= parse_rational();
      skip_ws();
      if (!accept('*')) syntax("expected '*' after a coefficient");
      skip_ws();
    }
    Word left, right;
    bool have_left = false;
    if (peek() == 's' && peek_at(pos_ + 1) == '[') {
      left = parse_word_bracket(2);
      have_left = true;
      skip_ws();
    }
    if (peek() != 'p') syntax(have_left ? "expected 'p{...}' after 's[...]'" : "expected an atom");
    ++pos_;
    VertexSet mid = parse_id_braces();
    skip_ws();
    if (peek() == 's' && peek_at(pos_ + 1) == '*' && peek_at(pos_ + 2) == '[') {
      right = parse_word_bracket(3);
    }
    if (auto t = canonicalize(space_, left, mid, right)) out.add(*t, coeff);
  }

  bool peek_rational() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    if (c == '-') {
      char n = peek_at(pos_ + 1);
      return std::isdigit(static_cast<unsigned char>(n));
    }
    return false;
  }

  Rational parse_rational() {
    long long num = parse_int();
    if (accept('/')) return {num, parse_int()};
    return num;
  }

  long long parse_int() {
    bool neg = accept('-');
    if (!std::isdigit(static_cast<unsigned char>(peek()))) syntax("expected a number");
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (take() - '0');
    return neg ? -v : v;
  }

  Word parse_word_bracket(int prefix_len) {
    pos_ += prefix_len;  // past "s[" or "s*["
    std::size_t close = text_.find(']', pos_);
    if (close == std::string::npos) syntax("missing ']'");
    std::string body = text_.substr(pos_, close - pos_);
    pos_ = close + 1;
    body.erase(std::remove_if(body.begin(), body.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               body.end());
    auto w = segment_word(space_.graph(), body);
    if (!w) fail(Errc::unknown_label, "cannot read '" + body + "' as a label word");
    return *w;
  }

  VertexSet parse_id_braces() {
    if (!accept('{')) syntax("expected '{'");
    std::size_t close = text_.find('}', pos_);
    if (close == std::string::npos) syntax("missing '}'");
    std::string body = text_.substr(pos_, close - pos_);
    pos_ = close + 1;
    return parse_vertex_set(space_.graph(), body);
  }

  [[noreturn]] void syntax(const std::string& what) {
    fail(Errc::parse, "term syntax, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool at_end_after(std::size_t p) const {
    return text_.find_first_not_of(" \t\r\n", p) == std::string::npos;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char peek_at(std::size_t p) const { return p < text_.size() ? text_[p] : '\0'; }
  char take() { return text_[pos_++]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  const LabeledSpace& space_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_term(const LabeledSpace& s, const std::string& text) {
  return TermParser(s, text).parse();
}

std::string render(const LabeledGraph& g, const CanonicalTerm& t) {
  std::string mid = render(g, t.mid);
  mid = "p{" + mid.substr(1, mid.size() - 2) + "}";
  std::string out;
  if (!t.left.empty()) out += "s[" + render(g, t.left) + "] ";
  out += mid;
  if (!t.right.empty()) out += " s*[" + render(g, t.right) + "]";
  return out;
}

std::string render(const LabeledGraph& g, const AlgebraElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : e.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < Rational(0)) out += "-";
    } else {
      out += c < Rational(0) ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.str() + " * ";
    out += render(g, t);
    first = false;
  }
  return out;
}

std::string render_family(const LabeledGraph& g, const SetFamily& fam) {
  std::string out;
  for (VertexSet s : fam.members()) out += render(g, s) + "\n";
  return out;
}

std::string render_decomposition(const LabeledGraph& g, const Decomposition& d) {
  std::string summary, detail;
  for (const auto& b : d.blocks) {
    if (!summary.empty()) summary += " ⊕ ";
    summary += "M_" + std::to_string(b.size()) + " @ " + render(g, b.sink_set);
    detail += "M_" + std::to_string(b.size()) + " @ sinks=" + render(g, b.sink_set) + " basis=[";
    for (std::size_t i = 0; i < b.basis.size(); ++i) {
      if (i) detail += ", ";
      detail += render(g, b.basis[i]);
    }
    detail += "]\n";
  }
  return summary + "\n" + detail + "dim = " + std::to_string(d.total_matrix_dim()) + "\n";
}

void dump_matrices(std::ostream& os, const LabeledGraph& g, const Rep& r) {
  auto put = [&](const std::string& name, const IntMatrix& m) {
    os << "# gen " << name << " dim " << r.dim << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (j) os << ' ';
        os << m(i, j);
      }
      os << "\n";
    }
  };
  for (const auto& [l, m] : r.gen_s) put("s[" + g.label_name(l) + "]", m);
  for (const auto& [a, m] : r.gen_p) {
    std::string set = render(g, a);
    put("p{" + set.substr(1, set.size() - 2) + "}", m);
  }
}

}  // namespace lgca
