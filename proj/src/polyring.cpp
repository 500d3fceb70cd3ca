#include "arrowribbon/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace arrowribbon {

namespace {

bool is_numeric(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

std::string_view strip_zeros(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return s;
}

bool family_has_label(Family f) {
  return f == Family::b || f == Family::x || f == Family::y || f == Family::alpha || f == Family::named;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::a: return "a";
    case Family::c: return "c";
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::d: return "d";
    case Family::t: return "t";
    case Family::q: return "q";
    case Family::X: return "X";
    case Family::Y: return "Y";
    case Family::Z: return "Z";
    case Family::x: return "x";
    case Family::y: return "y";
    case Family::b: return "b";
    case Family::alpha: return "alpha";
    case Family::K: return "K";
    case Family::named: return "";
  }
  return "";
}

}  // namespace

std::strong_ordering compare_labels(std::string_view lhs, std::string_view rhs) {
  const bool ln = is_numeric(lhs);
  const bool rn = is_numeric(rhs);
  if (ln != rn) return ln ? std::strong_ordering::less : std::strong_ordering::greater;
  if (ln) {
    auto l = strip_zeros(lhs);
    auto r = strip_zeros(rhs);
    if (l.size() != r.size()) return l.size() <=> r.size();
    if (auto cmp = l.compare(r); cmp != 0) return cmp <=> 0;
  }
  return lhs.compare(rhs) <=> 0;
}

VarSymbol VarSymbol::k(int half_index) {
  if (half_index <= 0) throw Error(Errc::InvalidArgument, "K index must be a positive half-integer");
  return VarSymbol{Family::K, {}, half_index};
}

std::strong_ordering operator<=>(const VarSymbol& lhs, const VarSymbol& rhs) {
  if (lhs.family != rhs.family) return lhs.family <=> rhs.family;
  if (lhs.family == Family::K) return lhs.half_index <=> rhs.half_index;
  if (family_has_label(lhs.family)) return compare_labels(lhs.label, rhs.label);
  return std::strong_ordering::equal;
}

std::string VarSymbol::to_string() const {
  switch (family) {
    case Family::b:
    case Family::x:
    case Family::y:
    case Family::alpha:
      return std::string(family_name(family)) + "[" + label + "]";
    case Family::K:
      if (half_index % 2 == 0) return "K[" + std::to_string(half_index / 2) + "]";
      return "K[" + std::to_string(half_index) + "/2]";
    case Family::named:
      return label;
    default:
      return family_name(family);
  }
}

std::string format_exponent(Quarters q) {
  if (q % 4 == 0) return std::to_string(q / 4);
  if (q % 2 == 0) return std::to_string(q / 2) + "/2";
  return std::to_string(q) + "/4";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& l, const Factor& r) { return l.first < r.first; });
  for (auto& f : factors) {
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
      if (factors_.back().second == 0) factors_.pop_back();
    } else if (f.second != 0) {
      factors_.push_back(std::move(f));
    }
  }
}

Monomial Monomial::var(VarSymbol v, Quarters q) { return Monomial({{std::move(v), q}}); }

Quarters Monomial::degree() const {
  Quarters total = 0;
  for (const auto& [v, e] : factors_) total += e;
  return total;
}

Quarters Monomial::exponent(const VarSymbol& v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const VarSymbol& key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::has_fractional_exponent() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second % kWhole != 0; });
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + rhs.factors_.size());
  auto i = factors_.begin();
  auto j = rhs.factors_.begin();
  while (i != factors_.end() || j != rhs.factors_.end()) {
    if (j == rhs.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      if (Quarters e = i->second + j->second; e != 0) out.factors_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.second = -f.second;
  return out;
}

Monomial Monomial::pow_quarters(Quarters q) const {
  Monomial out;
  for (const auto& [v, e] : factors_) {
    const long long scaled = static_cast<long long>(e) * q;
    if (scaled % kWhole != 0) {
      throw Error(Errc::NonInvertibleSubstitution,
                  "exponent " + format_exponent(e) + " of " + v.to_string() + " raised to " + format_exponent(q) +
                      " is not a multiple of 1/4");
    }
    if (scaled != 0) out.factors_.emplace_back(v, static_cast<Quarters>(scaled / kWhole));
  }
  return out;
}

bool TermOrder::operator()(const Monomial& lhs, const Monomial& rhs) const {
  const Quarters dl = lhs.degree();
  const Quarters dr = rhs.degree();
  if (dl != dr) return dl < dr;
  const auto& l = lhs.factors();
  const auto& r = rhs.factors();
  std::size_t i = 0, j = 0;
  while (i < l.size() && j < r.size()) {
    if (l[i].first < r[j].first) return l[i].second > 0;
    if (r[j].first < l[i].first) return r[j].second < 0;
    if (l[i].second != r[j].second) return l[i].second > r[j].second;
    ++i;
    ++j;
  }
  if (i < l.size()) return l[i].second > 0;
  if (j < r.size()) return r[j].second < 0;
  return false;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Integer(constant));
}

LaurentPoly::LaurentPoly(Monomial m, Integer coeff) {
  if (coeff != 0) terms_.emplace(std::move(m), std::move(coeff));
}

bool LaurentPoly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const auto& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

bool LaurentPoly::has_variable(Family f) const {
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) {
      if (v.family == f) return true;
    }
  }
  return false;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) out.add_term(ml * mr, cl * cr);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

// ------------------------------------------------------------ substitution

namespace {

LaurentPoly power_of_image(const VarSymbol& v, const LaurentPoly& image, Quarters e) {
  if (e % kWhole == 0 && e >= 0) return image.pow(static_cast<unsigned>(e / kWhole));
  if (e % kWhole == 0) {
    if (!image.is_unit_monomial()) {
      throw Error(Errc::NonInvertibleSubstitution,
                  "negative power of " + v.to_string() + " substituted by non-monomial " + format(image));
    }
    const auto& [m, c] = *image.terms().begin();
    const int n = e / kWhole;
    Integer sign = (c < 0 && (n % 2 != 0)) ? Integer(-1) : Integer(1);
    return LaurentPoly(m.pow_quarters(e), sign);
  }
  if (image.size() != 1 || image.terms().begin()->second != 1) {
    throw Error(Errc::NonInvertibleSubstitution,
                "fractional power of " + v.to_string() + " substituted by " + format(image));
  }
  return LaurentPoly(image.terms().begin()->first.pow_quarters(e));
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const Substitution& sigma) {
  std::map<std::pair<VarSymbol, Quarters>, LaurentPoly> cache;
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    LaurentPoly term(1);
    for (const auto& [v, e] : m.factors()) {
      auto it = sigma.find(v);
      if (it == sigma.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto cached = cache.find(key);
      if (cached == cache.end()) cached = cache.emplace(key, power_of_image(v, it->second, e)).first;
      term *= cached->second;
    }
    term *= LaurentPoly(Monomial(std::move(kept)), c);
    out += term;
  }
  return out;
}

LaurentPoly drop_k_variables(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    for (const auto& f : m.factors()) {
      if (f.first.family != Family::K) kept.push_back(f);
    }
    out.add_term(Monomial(std::move(kept)), c);
  }
  return out;
}

// ------------------------------------------------------------- text format

std::string format(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Integer mag = negative ? Integer(-c) : c;
    if (m.is_one()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    bool first_factor = true;
    for (const auto& [v, e] : m.factors()) {
      if (!first_factor) os << '*';
      first_factor = false;
      os << v.to_string();
      if (e != kWhole) os << '^' << format_exponent(e);
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly run() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    LaurentPoly out;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = term();
      out.add_term(m, sign < 0 ? Integer(-c) : c);
    }
    return out;
  }

 private:
  std::pair<Monomial, Integer> term() {
    skip_ws();
    Integer coeff = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(digits());
      skip_ws();
      if (at_end() || peek() == '+' || peek() == '-') return {Monomial{}, coeff};
      if (peek() == '*') {
        get();
        skip_ws();
      }
    }
    std::vector<Monomial::Factor> factors;
    factors.push_back(factor());
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      get();
      factors.push_back(factor());
    }
    // K[0] parses to the constant 1 and is dropped here.
    std::erase_if(factors, [](const Monomial::Factor& f) { return f.first.family == Family::K && f.first.half_index == 0; });
    return {Monomial(std::move(factors)), coeff};
  }

  Monomial::Factor factor() {
    skip_ws();
    VarSymbol v = variable();
    skip_ws();
    Quarters e = kWhole;
    if (!at_end() && peek() == '^') {
      get();
      e = exponent();
    }
    return {std::move(v), e};
  }

  VarSymbol variable() {
    const std::size_t start = pos_;
    std::string name;
    while (!at_end() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_' ||
                         (!name.empty() && std::isdigit(static_cast<unsigned char>(peek()))))) {
      name.push_back(get());
    }
    if (name.empty()) fail("expected variable", start);
    skip_ws();
    const bool bracket = !at_end() && peek() == '[';
    if (!bracket) {
      static const std::map<std::string, Family> plain = {
          {"a", Family::a}, {"c", Family::c}, {"A", Family::A}, {"B", Family::B}, {"d", Family::d},
          {"t", Family::t}, {"q", Family::q}, {"X", Family::X}, {"Y", Family::Y}, {"Z", Family::Z}};
      if (auto it = plain.find(name); it != plain.end()) return VarSymbol::plain(it->second);
      if (name == "b" || name == "alpha" || name == "K") fail("variable '" + name + "' needs an index", start);
      return VarSymbol::named(name);
    }
    get();
    std::string index;
    while (!at_end() && peek() != ']') index.push_back(get());
    if (at_end()) fail("unterminated '['", start);
    get();
    index.erase(std::remove_if(index.begin(), index.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
                index.end());
    if (index.empty()) fail("empty index", start);
    if (name == "K") {
      VarSymbol k{Family::K, {}, 0};
      if (auto slash = index.find('/'); slash != std::string::npos) {
        if (index.substr(slash + 1) != "2" || !is_numeric(index.substr(0, slash))) fail("bad K index", start);
        k.half_index = std::stoi(index.substr(0, slash));
      } else {
        if (!is_numeric(index)) fail("bad K index", start);
        k.half_index = 2 * std::stoi(index);
      }
      return k;
    }
    if (name == "b") return VarSymbol::edge(Family::b, index);
    if (name == "x") return VarSymbol::edge(Family::x, index);
    if (name == "y") return VarSymbol::edge(Family::y, index);
    if (name == "alpha") return VarSymbol::edge(Family::alpha, index);
    fail("variable '" + name + "' does not take an index", start);
  }

  Quarters exponent() {
    skip_ws();
    bool paren = false;
    if (!at_end() && peek() == '(') {
      paren = true;
      get();
      skip_ws();
    }
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) sign = get() == '-' ? -1 : 1;
    skip_ws();
    const long long num = std::stoll(digits());
    long long den = 1;
    skip_ws();
    if (!at_end() && peek() == '/') {
      get();
      skip_ws();
      den = std::stoll(digits());
      if (den != 1 && den != 2 && den != 4) fail("exponent denominator must be 1, 2 or 4");
    }
    if (paren) {
      skip_ws();
      if (at_end() || get() != ')') fail("expected ')'");
    }
    return static_cast<Quarters>(sign * num * (kWhole / den));
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(get());
    if (out.empty()) fail("expected digits");
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, std::optional<std::size_t> at = std::nullopt) const {
    throw Error(Errc::Parse, "polynomial syntax error at position " + std::to_string(at.value_or(pos_)) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed == "0") return {};
  return PolyParser(text).run();
}

}  // namespace arrowribbon
