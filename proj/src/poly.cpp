#include "mcperm/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace mcperm {

namespace {

constexpr std::string_view kVarNames = "qtsuvw";

std::size_t vi(Var v) { return static_cast<std::size_t>(v); }

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Recursive descent over
//   expr   := term (('+' | '-') term)*
//   term   := ('+' | '-')* factor (['*'] factor)*
//   factor := atom ('^' digits)?
//   atom   := digits | variable | '(' expr ')'
class TermParser {
 public:
  explicit TermParser(std::string_view text) : s_(text) {}

  MultiPolynomial parse() {
    skip_ws();
    if (done()) throw error("empty polynomial");
    MultiPolynomial out = expr();
    skip_ws();
    if (!done()) throw error(peek() == ')' ? "unbalanced ')'" : "expected '+' or '-'");
    return out;
  }

 private:
  MultiPolynomial expr() {
    MultiPolynomial out = term();
    while (true) {
      skip_ws();
      if (peek() != '+' && peek() != '-') return out;
      const bool minus = get() == '-';
      MultiPolynomial rhs = term();
      if (minus)
        out -= rhs;
      else
        out += rhs;
    }
  }

  MultiPolynomial term() {
    bool negative = false;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      negative ^= get() == '-';
      skip_ws();
    }
    MultiPolynomial out = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
      } else if (!starts_atom()) {
        break;
      }
      out *= factor();
    }
    return negative ? -out : out;
  }

  MultiPolynomial factor() {
    MultiPolynomial base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::string d = digits();
    std::uint32_t e = 0;
    const auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), e);
    if (ec != std::errc()) throw error("exponent out of range");
    return power(base, e);
  }

  MultiPolynomial atom() {
    skip_ws();
    if (done()) throw error("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(peek()))) return MultiPolynomial(BigInt(digits()));
    if (peek() == '(') {
      ++pos_;
      MultiPolynomial inner = expr();
      skip_ws();
      if (peek() != ')') throw error("expected ')'");
      ++pos_;
      return inner;
    }
    if (kVarNames.find(peek()) != std::string_view::npos) {
      const Var v = parse_var(std::string_view(&s_[pos_], 1));
      ++pos_;
      return MultiPolynomial::variable(v);
    }
    throw error("unexpected character");
  }

  bool starts_atom() const {
    const char c = peek();
    return c != '\0' && (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || kVarNames.find(c) != std::string_view::npos);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw error("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                                 std::string(s_) + "'");
  }

  void skip_ws() {
    while (peek() == ' ' || peek() == '\t') ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Var parse_var(std::string_view name) {
  if (name.size() == 1) {
    const auto pos = kVarNames.find(name[0]);
    if (pos != std::string_view::npos) return static_cast<Var>(pos);
  }
  throw std::invalid_argument("unknown variable '" + std::string(name) + "' (expected one of q,t,s,u,v,w)");
}

char var_name(Var v) { return kVarNames[vi(v)]; }

std::uint64_t total_degree(const Exponents& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GradedOrder::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return b < a;
}

Exponents mono(std::initializer_list<std::pair<Var, std::uint32_t>> factors) {
  Exponents e{};
  for (auto [v, x] : factors) e[vi(v)] += x;
  return e;
}

MultiPolynomial::MultiPolynomial(long long constant) : MultiPolynomial(BigInt(constant)) {}

MultiPolynomial::MultiPolynomial(const BigInt& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

MultiPolynomial MultiPolynomial::variable(Var v, std::uint32_t exponent) {
  Exponents e{};
  e[vi(v)] = exponent;
  return monomial(1, e);
}

MultiPolynomial MultiPolynomial::monomial(const BigInt& coeff, const Exponents& exps) {
  MultiPolynomial p;
  p.add_term(exps, coeff);
  return p;
}

MultiPolynomial MultiPolynomial::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t == "0") return {};
  return TermParser(t).parse();
}

BigInt MultiPolynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t MultiPolynomial::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[vi(v)]);
  return d;
}

void MultiPolynomial::add_term(const Exponents& exps, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(const MultiPolynomial& other) {
  *this = *this * other;
  return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  MultiPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exps(ea, eb), ca * cb);
  return out;
}

MultiPolynomial operator-(const MultiPolynomial& a) {
  MultiPolynomial out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string MultiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string body;
    const bool constant = total_degree(e) == 0;
    if (constant || mag != 1) body = mag.str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += '*';
      body += kVarNames[i];
      if (e[i] > 1) body += "^" + std::to_string(e[i]);
    }
    out += body;
    first = false;
  }
  return out;
}

MultiPolynomial power(const MultiPolynomial& p, std::uint64_t exponent) {
  MultiPolynomial result = 1;
  MultiPolynomial base = p;
  while (exponent) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

MultiPolynomial substitute(const MultiPolynomial& p, const Bindings& bindings) {
  // Powers of each bound value are memoized per call.
  std::array<std::vector<MultiPolynomial>, kNumVars> cache;
  auto bound_power = [&](std::size_t var, std::uint32_t e) -> const MultiPolynomial& {
    auto& pw = cache[var];
    if (pw.empty()) pw.emplace_back(1);
    const MultiPolynomial& value = bindings.at(static_cast<Var>(var));
    while (pw.size() <= e) pw.push_back(pw.back() * value);
    return pw[e];
  };

  MultiPolynomial out;
  for (const auto& [e, c] : p.terms()) {
    Exponents rest{};
    MultiPolynomial term = MultiPolynomial::monomial(c, {});
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (bindings.count(static_cast<Var>(i)))
        term *= bound_power(i, e[i]);
      else
        rest[i] = e[i];
    }
    for (const auto& [te, tc] : term.terms()) out.add_term(add_exps(te, rest), tc);
  }
  return out;
}

Bindings parse_bindings(std::string_view text) {
  Bindings out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw std::invalid_argument("binding '" + std::string(item) + "' lacks '='");
      std::string_view name = item.substr(0, eq);
      while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
      out[parse_var(name)] = MultiPolynomial::parse(item.substr(eq + 1));
    }
    start = comma + 1;
  }
  return out;
}

MultiPolynomial q_bracket(int n) {
  if (n < 0) throw std::invalid_argument("q_bracket needs n >= 0");
  MultiPolynomial out;
  for (int i = 0; i < n; ++i) out.add_term(mono({{Var::q, static_cast<std::uint32_t>(i)}}), 1);
  return out;
}

}  // namespace mcperm
