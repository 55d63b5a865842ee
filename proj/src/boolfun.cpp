#include "plateau/boolfun.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace plateau {

namespace {

int infer_n(std::size_t length) {
  if (length < 2 || !std::has_single_bit(length))
    throw NonPowerOfTwoLength("truth table length " + std::to_string(length) +
                              " is not a power of two >= 2");
  int n = std::countr_zero(length);
  if (n > kMaxVariables)
    throw TooManyVariables("n = " + std::to_string(n) + " exceeds the limit " +
                           std::to_string(kMaxVariables));
  return n;
}

// Self-inverse binary Moebius transform: XOR-fold each coordinate axis.
void mobius_in_place(std::vector<std::uint8_t>& a, int n) {
  for (int k = 0; k < n; ++k) {
    const std::uint32_t bit = 1u << k;
    for (std::uint32_t i = 0; i < a.size(); ++i)
      if (i & bit) a[i] ^= a[i ^ bit];
  }
}

}  // namespace

std::uint32_t point_mask_from_variables(std::uint32_t variable_mask, int n) {
  std::uint32_t point = 0;
  for (int v = 1; v <= n; ++v)
    if (variable_mask & (1u << (v - 1))) point |= 1u << (n - v);
  return point;
}

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> truth_table)
    : n_(n), tt_(std::move(truth_table)) {
  if (n < 1) throw PreconditionViolation("n must be positive");
  if (n > kMaxVariables)
    throw TooManyVariables("n = " + std::to_string(n) + " exceeds the limit " +
                           std::to_string(kMaxVariables));
  if (tt_.size() != (std::size_t{1} << n))
    throw NonPowerOfTwoLength("truth table has " + std::to_string(tt_.size()) +
                              " entries, expected 2^" + std::to_string(n));
  for (std::uint8_t b : tt_)
    if (b > 1) throw ParseError("truth table entry must be 0 or 1", 0);
}

BooleanFunction BooleanFunction::from_truth_table(
    std::vector<std::uint8_t> bits) {
  int n = infer_n(bits.size());
  return BooleanFunction(n, std::move(bits));
}

BooleanFunction BooleanFunction::from_bit_string(std::string_view bits) {
  std::vector<std::uint8_t> tt;
  tt.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    char c = bits[i];
    if (c != '0' && c != '1')
      throw ParseError(std::string("invalid truth table character '") + c +
                           "'",
                       i);
    tt.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return from_truth_table(std::move(tt));
}

BooleanFunction BooleanFunction::from_hex_string(std::string_view hex) {
  if (hex.empty() || !std::has_single_bit(hex.size()))
    throw NonPowerOfTwoLength(
        "hex truth table must have a power-of-two digit count, got " +
        std::to_string(hex.size()));
  std::vector<std::uint8_t> tt;
  tt.reserve(hex.size() * 4);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    char c = hex[i];
    int v;
    if (c >= '0' && c <= '9')
      v = c - '0';
    else if (c >= 'a' && c <= 'f')
      v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F')
      v = c - 'A' + 10;
    else
      throw ParseError(std::string("invalid hex digit '") + c + "'", i);
    for (int b = 3; b >= 0; --b)
      tt.push_back(static_cast<std::uint8_t>((v >> b) & 1));
  }
  return from_truth_table(std::move(tt));
}

BooleanFunction BooleanFunction::from_packed(int n, std::uint64_t word) {
  if (n < 1 || n > 6)
    throw PreconditionViolation("from_packed supports 1 <= n <= 6");
  std::vector<std::uint8_t> tt(std::size_t{1} << n);
  for (std::size_t i = 0; i < tt.size(); ++i)
    tt[i] = static_cast<std::uint8_t>((word >> i) & 1);
  return BooleanFunction(n, std::move(tt));
}

std::int64_t BooleanFunction::weight() const {
  std::int64_t w = 0;
  for (std::uint8_t b : tt_) w += b;
  return w;
}

bool BooleanFunction::is_balanced() const {
  return weight() == static_cast<std::int64_t>(tt_.size() / 2);
}

std::vector<std::uint32_t> BooleanFunction::support() const {
  std::vector<std::uint32_t> s;
  for (std::uint32_t i = 0; i < tt_.size(); ++i)
    if (tt_[i]) s.push_back(i);
  return s;
}

int BooleanFunction::degree() const { return function_to_anf(*this).degree(); }

std::string BooleanFunction::to_bit_string() const {
  std::string s(tt_.size(), '0');
  for (std::size_t i = 0; i < tt_.size(); ++i)
    if (tt_[i]) s[i] = '1';
  return s;
}

std::string BooleanFunction::to_hex_string() const {
  if (n_ < 2)
    throw PreconditionViolation("hex form requires n >= 2");
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(tt_.size() / 4);
  for (std::size_t i = 0; i < tt_.size(); i += 4) {
    int v = (tt_[i] << 3) | (tt_[i + 1] << 2) | (tt_[i + 2] << 1) | tt_[i + 3];
    s.push_back(digits[v]);
  }
  return s;
}

AnfPolynomial::AnfPolynomial(int n, std::set<std::uint32_t> monomials)
    : n_(n), monomials_(std::move(monomials)) {
  if (n < 1) throw PreconditionViolation("n must be positive");
  if (n > kMaxVariables)
    throw TooManyVariables("n = " + std::to_string(n) + " exceeds the limit " +
                           std::to_string(kMaxVariables));
  for (std::uint32_t m : monomials_)
    if (n < 32 && (m >> n) != 0)
      throw VariableOutOfRange("monomial uses a variable beyond x" +
                                   std::to_string(n),
                               0);
}

int AnfPolynomial::degree() const {
  int d = 0;
  for (std::uint32_t m : monomials_) d = std::max(d, std::popcount(m));
  return d;
}

std::string AnfPolynomial::to_string() const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (std::uint32_t m : monomials_) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int v = 1; v <= n_; ++v) {
      if (m & (1u << (v - 1))) {
        if (!first) out += "*";
        out += "x" + std::to_string(v);
        first = false;
      }
    }
  }
  return out;
}

namespace {

// Recursive-descent ANF parser.  Positions in errors are zero-based offsets
// into the original text (whitespace included).
class AnfParser {
 public:
  AnfParser(std::string_view text, int n) : text_(text), n_(n) {}

  AnfPolynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    std::set<std::uint32_t> monomials;
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (!at_end())
        throw ParseError("'0' must be the whole expression", pos_);
      return AnfPolynomial(n_, {});
    }
    toggle(monomials, parse_term());
    skip_ws();
    while (!at_end()) {
      expect('+');
      toggle(monomials, parse_term());
      skip_ws();
    }
    return AnfPolynomial(n_, std::move(monomials));
  }

 private:
  static void toggle(std::set<std::uint32_t>& s, std::uint32_t m) {
    auto [it, inserted] = s.insert(m);
    if (!inserted) s.erase(it);  // XOR cancellation
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  // term := factor ('*' factor)* ; the result is a single monomial mask
  // because parentheses may only contain products.
  std::uint32_t parse_term() {
    std::uint32_t mask = parse_factor();
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      mask |= parse_factor();  // x*x = x
    }
    return mask;
  }

  std::uint32_t parse_factor() {
    skip_ws();
    if (at_end()) throw ParseError("expected a factor", pos_);
    char c = peek();
    if (c == '1') {
      ++pos_;
      return 0;
    }
    if (c == '(') {
      ++pos_;
      std::uint32_t mask = parse_term();
      expect(')');
      return mask;
    }
    if (c == 'x' || c == 'X') return parse_variable();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::uint32_t parse_variable() {
    std::size_t start = pos_;
    ++pos_;  // consume 'x'
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected a variable index after 'x'", pos_);
    long index = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      index = index * 10 + (peek() - '0');
      if (index > kMaxVariables)
        throw VariableOutOfRange("variable index " + std::to_string(index) +
                                     " out of range",
                                 start);
      ++pos_;
    }
    if (index < 1 || index > n_)
      throw VariableOutOfRange("variable x" + std::to_string(index) +
                                   " out of range for n = " +
                                   std::to_string(n_),
                               start);
    return 1u << (index - 1);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

AnfPolynomial parse_anf(std::string_view text, int n) {
  if (n < 1 || n > kMaxVariables)
    throw TooManyVariables("n = " + std::to_string(n) + " out of range");
  return AnfParser(text, n).parse();
}

BooleanFunction anf_to_function(const AnfPolynomial& p) {
  std::vector<std::uint8_t> a(std::size_t{1} << p.n(), 0);
  for (std::uint32_t m : p.monomials())
    a[point_mask_from_variables(m, p.n())] ^= 1;
  mobius_in_place(a, p.n());
  return BooleanFunction(p.n(), std::move(a));
}

AnfPolynomial function_to_anf(const BooleanFunction& f) {
  std::vector<std::uint8_t> a = f.truth_table();
  mobius_in_place(a, f.n());
  std::set<std::uint32_t> monomials;
  for (std::uint32_t i = 0; i < a.size(); ++i)
    if (a[i]) {
      // Convert the point mask back into a variable mask (the map is its
      // own inverse up to the bit-order swap).
      std::uint32_t vars = 0;
      for (int v = 1; v <= f.n(); ++v)
        if (i & (1u << (f.n() - v))) vars |= 1u << (v - 1);
      monomials.insert(vars);
    }
  return AnfPolynomial(f.n(), std::move(monomials));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

BooleanFunction parse_function_line(std::string_view line) {
  std::string_view s = trim(line);
  if (s.rfind("tt:", 0) == 0) return BooleanFunction::from_bit_string(trim(s.substr(3)));
  if (s.rfind("hex:", 0) == 0) return BooleanFunction::from_hex_string(trim(s.substr(4)));
  if (s.rfind("anf:", 0) == 0) {
    std::string_view rest = s.substr(4);
    std::size_t colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("anf line needs the form anf:<n>:<expression>", 0);
    std::string_view n_text = trim(rest.substr(0, colon));
    int n = 0;
    for (char c : n_text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("invalid variable count in anf line", 0);
      n = n * 10 + (c - '0');
      if (n > kMaxVariables)
        throw TooManyVariables("n = " + std::to_string(n) +
                               " exceeds the limit " +
                               std::to_string(kMaxVariables));
    }
    if (n_text.empty()) throw ParseError("missing variable count in anf line", 0);
    return anf_to_function(parse_anf(rest.substr(colon + 1), n));
  }
  throw ParseError("unknown record prefix (expected tt:, hex:, or anf:)", 0);
}

std::vector<TtRecord> read_tt_stream(std::istream& in) {
  std::vector<TtRecord> records;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    try {
      records.push_back({parse_function_line(s), std::string(s), number});
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what(), 0);
    }
  }
  return records;
}

std::vector<TtRecord> read_tt_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_tt_stream(in);
}

}  // namespace plateau
