#include "semiheap/formats.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace semiheap {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::optional<Token> peek() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    std::size_t end = pos_;
    while (end < text_.size() && !is_space(text_[end])) ++end;
    return Token{text_.substr(pos_, end - pos_), line_, column_};
  }

  Token next(const char* expecting) {
    auto t = peek();
    if (!t) throw ParseError(line_, column_, std::string("unexpected end of input, expected ") + expecting);
    column_ += t->text.size();
    pos_ += t->text.size();
    return *t;
  }

  /// Next token only if it sits on `line`.
  std::optional<Token> next_on_line(std::size_t line) {
    auto t = peek();
    if (!t || t->line != line) return std::nullopt;
    return next("");
  }

  void expect_end() {
    if (auto t = peek()) throw ParseError(t->line, t->column, "trailing garbage '" + std::string(t->text) + "'");
  }

  [[nodiscard]] bool at_end() { return !peek().has_value(); }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::size_t to_number(const Token& t, std::string_view digits) {
  std::size_t value = 0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc() || ptr != end)
    throw ParseError(t.line, t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  return value;
}

Index read_index(Lexer& lx, std::size_t bound, const char* what) {
  const Token t = lx.next(what);
  const std::size_t v = to_number(t, t.text);
  if (v >= bound)
    throw ParseError(t.line, t.column,
                     std::string(what) + " " + std::to_string(v) + " out of range 0.." +
                         (bound == 0 ? std::string("(empty)") : std::to_string(bound - 1)));
  return static_cast<Index>(v);
}

std::vector<Index> read_indices(Lexer& lx, std::size_t count, std::size_t bound, const char* what) {
  std::vector<Index> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(read_index(lx, bound, what));
  return out;
}

// Header `keyword k=v ...` on one line. Every key in `required` must appear,
// keys in `optional` may; anything else is rejected.
struct Header {
  Token keyword;
  std::map<std::string, std::size_t, std::less<>> values;

  [[nodiscard]] std::optional<std::size_t> get(std::string_view key) const {
    if (auto it = values.find(key); it != values.end()) return it->second;
    return std::nullopt;
  }
};

Header read_header(Lexer& lx, std::string_view keyword, std::initializer_list<std::string_view> required,
                   std::initializer_list<std::string_view> optional = {}) {
  Header h{lx.next("a header line"), {}};
  if (h.keyword.text != keyword)
    throw ParseError(h.keyword.line, h.keyword.column,
                     "expected header '" + std::string(keyword) + "', got '" + std::string(h.keyword.text) + "'");
  while (auto t = lx.next_on_line(h.keyword.line)) {
    const auto eq = t->text.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(t->line, t->column, "expected key=value, got '" + std::string(t->text) + "'");
    const auto key = t->text.substr(0, eq);
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) throw ParseError(t->line, t->column, "unknown key '" + std::string(key) + "'");
    if (h.values.contains(key)) throw ParseError(t->line, t->column, "repeated key '" + std::string(key) + "'");
    h.values.emplace(std::string(key), to_number(*t, t->text.substr(eq + 1)));
  }
  for (auto key : required)
    if (!h.values.contains(key))
      throw ParseError(h.keyword.line, h.keyword.column, "missing key '" + std::string(key) + "'");
  return h;
}

// Rejects header sizes whose payload would not fit in memory.
void check_size(const Header& h, std::size_t count) {
  if (count > (std::size_t{1} << 28))
    throw ParseError(h.keyword.line, h.keyword.column, "payload of " + std::to_string(count) + " entries is too large");
}

ShfDocument read_shf(Lexer& lx) {
  const Header h = read_header(lx, "semiheap", {"n"}, {"pt"});
  const std::size_t n = *h.get("n");
  if (n > 640) throw ParseError(h.keyword.line, h.keyword.column, "n too large");
  check_size(h, n * n * n);
  ShfDocument doc;
  if (auto pt = h.get("pt")) {
    if (*pt >= n)
      throw ParseError(h.keyword.line, h.keyword.column, "basepoint " + std::to_string(*pt) + " out of range");
    doc.basepoint = static_cast<Index>(*pt);
  }
  doc.table = TernaryTable(n, read_indices(lx, n * n * n, n, "entry"));
  return doc;
}

ActionTable read_act(Lexer& lx) {
  const Header h = read_header(lx, "action", {"m", "n"});
  const std::size_t m = *h.get("m"), n = *h.get("n");
  if (n > 1 << 14 || m > 1 << 28) throw ParseError(h.keyword.line, h.keyword.column, "size too large");
  check_size(h, m * n * n);
  return ActionTable(m, n, read_indices(lx, m * n * n, m, "entry"));
}

void write_rows(std::ostringstream& os, std::span<const Index> values, std::size_t width) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    os << values[i];
    os << ((i + 1) % width == 0 || i + 1 == values.size() ? '\n' : ' ');
  }
}

}  // namespace

ShfDocument parse_shf(std::string_view text) {
  Lexer lx(text);
  auto doc = read_shf(lx);
  lx.expect_end();
  return doc;
}

std::vector<ShfDocument> parse_shf_stream(std::string_view text) {
  Lexer lx(text);
  std::vector<ShfDocument> out;
  while (!lx.at_end()) out.push_back(read_shf(lx));
  return out;
}

FiniteGroup parse_grp(std::string_view text) {
  Lexer lx(text);
  const Header h = read_header(lx, "group", {"n", "e"});
  const std::size_t n = *h.get("n"), e = *h.get("e");
  if (n > 1 << 13) throw ParseError(h.keyword.line, h.keyword.column, "n too large");
  if (e >= n) throw ParseError(h.keyword.line, h.keyword.column, "identity " + std::to_string(e) + " out of range");
  auto mul = read_indices(lx, n * n, n, "entry");
  lx.expect_end();
  return FiniteGroup(n, std::move(mul), static_cast<Index>(e));
}

HomDocument parse_hom(std::string_view text) {
  Lexer lx(text);
  const Header h = read_header(lx, "hom", {"n", "m"});
  HomDocument doc{*h.get("n"), *h.get("m"), {}};
  check_size(h, doc.source_size);
  doc.map = read_indices(lx, doc.source_size, doc.target_size, "image");
  lx.expect_end();
  return doc;
}

ActionTable parse_act(std::string_view text) {
  Lexer lx(text);
  auto a = read_act(lx);
  lx.expect_end();
  return a;
}

DiscreteSemiheapBundle parse_bnd(std::string_view text) {
  Lexer lx(text);
  const Header top = read_header(lx, "bundle", {"charts"});
  const std::size_t c = *top.get("charts");
  check_size(top, c);
  const Header base = read_header(lx, "base", {"m"});
  const std::size_t M = *base.get("m");
  const Header proj = read_header(lx, "projection", {"p"});
  const std::size_t P = *proj.get("p");
  check_size(proj, P);
  IndexMap projection = read_indices(lx, P, M, "base point");
  const Token shf_at = *lx.peek();
  auto shf = read_shf(lx);
  if (shf.table.size() == 0) throw ParseError(shf_at.line, shf_at.column, "structure semiheap must be non-empty");
  const Token act_at = *lx.peek();
  auto action = read_act(lx);
  if (action.space_size() != P || action.semiheap_size() != shf.table.size())
    throw ParseError(act_at.line, act_at.column, "action shape does not match projection and semiheap");
  const std::size_t n = shf.table.size();

  std::vector<BundleChart> charts(c);
  for (std::size_t i = 0; i < c; ++i) {
    const Header h = read_header(lx, "cover", {"i", "size"});
    if (*h.get("i") != i) throw ParseError(h.keyword.line, h.keyword.column, "covers must be numbered in order");
    check_size(h, *h.get("size"));
    charts[i].cover = read_indices(lx, *h.get("size"), M, "cover point");
  }
  for (std::size_t i = 0; i < c; ++i) {
    const Header h = read_header(lx, "chart", {"i", "size"});
    if (*h.get("i") != i) throw ParseError(h.keyword.line, h.keyword.column, "charts must be numbered in order");
    const std::size_t size = *h.get("size");
    check_size(h, size);
    for (std::size_t k = 0; k < size; ++k) {
      const Token t = lx.next("a pair p:q");
      const auto colon = t.text.find(':');
      if (colon == std::string_view::npos)
        throw ParseError(t.line, t.column, "expected p:q, got '" + std::string(t.text) + "'");
      const std::size_t p = to_number(t, t.text.substr(0, colon));
      const std::size_t q = to_number(t, t.text.substr(colon + 1));
      if (p >= P) throw ParseError(t.line, t.column, "total-space point " + std::to_string(p) + " out of range");
      if (q >= M * n) throw ParseError(t.line, t.column, "product point " + std::to_string(q) + " out of range");
      charts[i].assignment.emplace_back(static_cast<Index>(p), static_cast<Index>(q));
    }
  }
  lx.expect_end();
  return DiscreteSemiheapBundle(M, std::move(projection), FiniteSemiheap::certify(std::move(shf.table)),
                                std::move(action), std::move(charts));
}

std::string write_shf(const TernaryTable& t, std::optional<Index> basepoint) {
  std::ostringstream os;
  os << "semiheap n=" << t.size();
  if (basepoint) os << " pt=" << *basepoint;
  os << '\n';
  write_rows(os, t.entries(), t.size());
  return os.str();
}

std::string write_grp(const FiniteGroup& g) {
  std::ostringstream os;
  os << "group n=" << g.order() << " e=" << g.identity() << '\n';
  write_rows(os, g.cayley_table(), g.order());
  return os.str();
}

std::string write_hom(std::span<const Index> map, std::size_t target_size) {
  std::ostringstream os;
  os << "hom n=" << map.size() << " m=" << target_size << '\n';
  write_rows(os, map, map.size());
  return os.str();
}

std::string write_act(const ActionTable& a) {
  std::ostringstream os;
  os << "action m=" << a.space_size() << " n=" << a.semiheap_size() << '\n';
  write_rows(os, a.entries(), a.semiheap_size());
  return os.str();
}

std::string write_bnd(const DiscreteSemiheapBundle& b) {
  std::ostringstream os;
  os << "bundle charts=" << b.charts().size() << '\n';
  os << "base m=" << b.base_size() << '\n';
  os << "projection p=" << b.total_size() << '\n';
  write_rows(os, b.projection(), b.total_size());
  os << write_shf(b.structure().table()) << write_act(b.action());
  for (std::size_t i = 0; i < b.charts().size(); ++i) {
    const auto& cover = b.charts()[i].cover;
    os << "cover i=" << i << " size=" << cover.size() << '\n';
    write_rows(os, cover, cover.size());
  }
  for (std::size_t i = 0; i < b.charts().size(); ++i) {
    const auto& a = b.charts()[i].assignment;
    os << "chart i=" << i << " size=" << a.size() << '\n';
    for (std::size_t k = 0; k < a.size(); ++k)
      os << a[k].first << ':' << a[k].second << (k + 1 == a.size() ? '\n' : ' ');
  }
  return os.str();
}

}  // namespace semiheap
