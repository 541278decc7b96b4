#include "tropval/format.hpp"

#include <sstream>

namespace tropval {

namespace {

struct Tok {
  std::string text;
  int line;
  int col;
};

std::vector<Tok> tokenize(std::string_view text) {
  std::vector<Tok> out;
  int line = 1, col = 1;
  std::string cur;
  int tl = 0, tc = 0;
  auto flush = [&]() {
    if (!cur.empty()) {
      out.push_back({cur, tl, tc});
      cur.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '#') {
      flush();
      while (i < text.size() && text[i] != '\n') ++i;
      ++line;
      col = 1;
      continue;
    }
    if (ch == '\n') {
      flush();
      out.push_back({"\n", line, col});
      ++line;
      col = 1;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      flush();
      ++col;
      continue;
    }
    if (ch == '{' || ch == '}' || ch == ':') {
      flush();
      out.push_back({std::string(1, ch), line, col});
      ++col;
      continue;
    }
    if (cur.empty()) {
      tl = line;
      tc = col;
    }
    cur += ch;
    ++col;
  }
  flush();
  return out;
}

[[noreturn]] void fail(const Tok& at, const std::string& msg) {
  throw StructuralError("line " + std::to_string(at.line) + ", col " + std::to_string(at.col) +
                        ": " + msg);
}

class TokStream {
public:
  explicit TokStream(std::vector<Tok> toks) : toks_(std::move(toks)) {}

  bool done() {
    skip_newlines();
    return pos_ >= toks_.size();
  }
  Tok next_word(const std::string& what) {
    skip_newlines();
    if (pos_ >= toks_.size())
      throw StructuralError("unexpected end of document: expected " + what);
    return toks_[pos_++];
  }
  /// Words up to the end of the current line.
  std::vector<Tok> rest_of_line() {
    std::vector<Tok> out;
    while (pos_ < toks_.size() && toks_[pos_].text != "\n") out.push_back(toks_[pos_++]);
    return out;
  }

private:
  void skip_newlines() {
    while (pos_ < toks_.size() && toks_[pos_].text == "\n") ++pos_;
  }
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

int resolve(const Tok& t, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == t.text) return static_cast<int>(i);
  fail(t, "unknown element '" + t.text + "'");
}

std::vector<int> parse_table(TokStream& ts, const std::vector<std::string>& names,
                             const std::string& which) {
  const std::size_t n = names.size();
  std::vector<int> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t cidx = 0; cidx < n; ++cidx) {
      Tok t = ts.next_word(which + " table entry");
      table.push_back(resolve(t, names));
    }
  return table;
}

}  // namespace

CarrierPtr parse_carrier(std::string_view text) {
  TokStream ts(tokenize(text));
  Tok head = ts.next_word("'semiring' or 'carrier'");
  if (head.text == "carrier") {
    Tok kind = ts.next_word("carrier kind");
    if (kind.text == "maxplus_z") return std::make_shared<GradedCarrier>(false);
    if (kind.text == "maxplus_n") return std::make_shared<GradedCarrier>(true);
    if (kind.text == "ratfunc") return std::make_shared<RatFuncField>();
    fail(kind, "unknown carrier kind '" + kind.text + "'");
  }
  if (head.text != "semiring") fail(head, "expected 'semiring' or 'carrier'");

  Tok nameTok = ts.next_word("semiring name");
  Tok kw = ts.next_word("'elements'");
  if (kw.text != "elements") fail(kw, "expected 'elements'");
  std::vector<std::string> names;
  for (const Tok& t : ts.rest_of_line()) names.push_back(t.text);
  if (names.size() < 2) fail(kw, "need at least 2 elements (zero ring rejected)");

  kw = ts.next_word("'zero'");
  if (kw.text != "zero") fail(kw, "expected 'zero'");
  int zero = resolve(ts.next_word("zero element"), names);
  kw = ts.next_word("'one'");
  if (kw.text != "one") fail(kw, "expected 'one'");
  int one = resolve(ts.next_word("one element"), names);

  kw = ts.next_word("'add'");
  if (kw.text != "add") fail(kw, "expected 'add'");
  auto add = parse_table(ts, names, "add");
  kw = ts.next_word("'mul'");
  if (kw.text != "mul") fail(kw, "expected 'mul'");
  auto mul = parse_table(ts, names, "mul");
  if (!ts.done()) {
    Tok t = ts.next_word("end of document");
    fail(t, "trailing content '" + t.text + "'");
  }
  return std::make_shared<FiniteSemiring>(nameTok.text, std::move(names), zero, one,
                                          std::move(add), std::move(mul));
}

std::string serialize(const FiniteSemiring& s) {
  std::ostringstream os;
  const auto& names = s.element_names();
  const int n = static_cast<int>(names.size());
  os << "semiring " << s.name() << "\n";
  os << "elements";
  for (const auto& e : names) os << " " << e;
  os << "\n";
  os << "zero " << names[static_cast<std::size_t>(s.zero_index())] << "\n";
  os << "one " << names[static_cast<std::size_t>(s.one_index())] << "\n";
  os << "add\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) os << (j ? " " : "") << names[static_cast<std::size_t>(s.addi(i, j))];
    os << "\n";
  }
  os << "mul\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) os << (j ? " " : "") << names[static_cast<std::size_t>(s.muli(i, j))];
    os << "\n";
  }
  return os.str();
}

std::vector<int> parse_subset_line(std::string_view text, const FiniteSemiring& s,
                                   std::string* subset_name) {
  TokStream ts(tokenize(text));
  Tok kw = ts.next_word("'subset'");
  if (kw.text != "subset") fail(kw, "expected 'subset'");
  Tok name = ts.next_word("subset name");
  if (subset_name) *subset_name = name.text;
  kw = ts.next_word("'of'");
  if (kw.text != "of") fail(kw, "expected 'of'");
  Tok sr = ts.next_word("semiring name");
  if (sr.text != s.name()) fail(sr, "subset refers to semiring '" + sr.text + "', expected '" + s.name() + "'");
  kw = ts.next_word("':'");
  if (kw.text != ":") fail(kw, "expected ':'");
  std::vector<int> out;
  while (!ts.done()) {
    Tok t = ts.next_word("element");
    int i = resolve(t, s.element_names());
    for (int j : out)
      if (j == i) fail(t, "duplicate element '" + t.text + "'");
    out.push_back(i);
  }
  return out;
}

std::vector<std::vector<int>> parse_partition(std::string_view text, const FiniteSemiring& s) {
  TokStream ts(tokenize(text));
  Tok kw = ts.next_word("'partition'");
  if (kw.text != "partition") fail(kw, "expected 'partition'");
  kw = ts.next_word("'of'");
  if (kw.text != "of") fail(kw, "expected 'of'");
  Tok sr = ts.next_word("carrier name");
  if (sr.text != s.name()) fail(sr, "partition refers to carrier '" + sr.text + "', expected '" + s.name() + "'");
  kw = ts.next_word("':'");
  if (kw.text != ":") fail(kw, "expected ':'");
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(s.size(), false);
  while (!ts.done()) {
    Tok t = ts.next_word("'{'");
    if (t.text != "{") fail(t, "expected '{'");
    std::vector<int> cls;
    while (true) {
      Tok u = ts.next_word("element or '}'");
      if (u.text == "}") break;
      int i = resolve(u, s.element_names());
      if (seen[static_cast<std::size_t>(i)]) fail(u, "element '" + u.text + "' in two classes");
      seen[static_cast<std::size_t>(i)] = true;
      cls.push_back(i);
    }
    if (cls.empty()) fail(t, "empty class");
    classes.push_back(std::move(cls));
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw StructuralError("partition does not cover element '" + s.element_names()[i] + "'");
  return classes;
}

}  // namespace tropval
