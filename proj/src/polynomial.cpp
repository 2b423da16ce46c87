#include "metalie/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "metalie/error.hpp"

namespace metalie {

Monomial Monomial::variable(std::size_t i, std::uint16_t e) {
  if (i >= kMaxVars) throw ConfigurationError("variable index out of range");
  Monomial m;
  m.exp_[i] = e;
  m.degree_ = e;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t e = std::uint32_t{exp_[i]} + o.exp_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw ResourceError("exponent overflow");
    m.exp_[i] = static_cast<std::uint16_t>(e);
  }
  m.degree_ = degree_ + o.degree_;
  return m;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp_[i] > o.exp_[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& divisor) const noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp_[i] = exp_[i] - divisor.exp_[i];
  m.degree_ = degree_ - divisor.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& o) const noexcept {
  Monomial m;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp_[i] = std::max(exp_[i], o.exp_[i]);
    d += m.exp_[i];
  }
  m.degree_ = d;
  return m;
}

std::size_t Monomial::support_end() const noexcept {
  for (std::size_t i = kMaxVars; i > 0; --i)
    if (exp_[i - 1]) return i;
  return 0;
}

int compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = kMaxVars; i > 0; --i) {
    if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? 1 : -1;
  }
  return 0;
}

Ring::Ring(std::uint32_t p, std::size_t nvars) : field_(p), nvars_(nvars) {
  if (nvars > kMaxVars)
    throw ConfigurationError("at most " + std::to_string(kMaxVars) + " variables are supported");
}

Polynomial Polynomial::constant(const Ring& ring, std::int64_t c) {
  Polynomial f(ring);
  Coeff v = ring.field().reduce(c);
  if (v) f.terms_.push_back({Monomial{}, v});
  return f;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t i) {
  if (i >= ring.nvars()) throw ConfigurationError("variable index out of range");
  return monomial(ring, Monomial::variable(i), 1);
}

Polynomial Polynomial::monomial(const Ring& ring, const Monomial& m, Coeff c) {
  Polynomial f(ring);
  c %= ring.p();
  if (c) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  const Field& k = ring.field();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  Polynomial f(ring);
  for (auto& t : terms) {
    Coeff c = t.coeff % ring.p();
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff = k.add(f.terms_.back().coeff, c);
      if (f.terms_.back().coeff == 0) f.terms_.pop_back();
    } else if (c) {
      f.terms_.push_back({t.mono, c});
    }
  }
  return f;
}

int Polynomial::total_degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

Coeff Polynomial::constant_term() const noexcept {
  if (terms_.empty() || !terms_.back().mono.is_one()) return 0;
  return terms_.back().coeff;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (!(ring_ == o.ring_)) throw ConfigurationError("polynomials over different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial f(ring_);
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back({t.mono, ring_.field().neg(t.coeff)});
  return f;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  const Field& k = ring_.field();
  Polynomial f(ring_);
  f.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      f.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      f.terms_.push_back(o.terms_[j++]);
    } else {
      Coeff s = k.add(terms_[i].coeff, o.terms_[j].coeff);
      if (s) f.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) f.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) f.terms_.push_back(o.terms_[j]);
  return f;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const Field& k = ring_.field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, k.mul(a.coeff, b.coeff)});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_.p();
  Polynomial f(ring_);
  if (c == 0) return f;
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back({t.mono, ring_.field().mul(t.coeff, c)});
  return f;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  c %= ring_.p();
  Polynomial f(ring_);
  if (c == 0) return f;
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back({t.mono * m, ring_.field().mul(t.coeff, c)});
  return f;
}

Polynomial Polynomial::sub_mul_term(const Polynomial& o, const Monomial& m, Coeff c) const {
  check_ring(o);
  const Field& k = ring_.field();
  c %= ring_.p();
  if (c == 0 || o.is_zero()) return *this;
  Coeff nc = k.neg(c);
  Polynomial f(ring_);
  f.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    Monomial om = o.terms_[j].mono * m;
    int cmp = compare(terms_[i].mono, om);
    if (cmp > 0) {
      f.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      f.terms_.push_back({om, k.mul(o.terms_[j++].coeff, nc)});
    } else {
      Coeff s = k.add(terms_[i].coeff, k.mul(o.terms_[j].coeff, nc));
      if (s) f.terms_.push_back({om, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) f.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) f.terms_.push_back({o.terms_[j].mono * m, k.mul(o.terms_[j].coeff, nc)});
  return f;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_.field().inv(lead().coeff));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Coeff Polynomial::evaluate(std::span<const Coeff> point) const {
  if (point.size() != ring_.nvars()) throw ConfigurationError("evaluation point has wrong length");
  const Field& k = ring_.field();
  Coeff total = 0;
  for (const auto& t : terms_) {
    Coeff v = t.coeff;
    for (std::size_t i = 0; i < ring_.nvars(); ++i)
      if (t.mono[i]) v = k.mul(v, k.pow(point[i], t.mono[i]));
    total = k.add(total, v);
  }
  return total;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images, const Ring& target) const {
  if (images.size() != ring_.nvars()) throw ConfigurationError("substitution has wrong length");
  if (target.p() != ring_.p()) throw ConfigurationError("substitution changes characteristic");
  Polynomial total(target);
  for (const auto& t : terms_) {
    Polynomial v = constant(target, t.coeff);
    for (std::size_t i = 0; i < ring_.nvars(); ++i)
      if (t.mono[i]) v *= images[i].pow(t.mono[i]);
    total += v;
  }
  return total;
}

std::string format_monomial(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(i + 1);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    if (t.mono.is_one()) {
      s += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) s += std::to_string(t.coeff) + '*';
      s += format_monomial(t.mono);
    }
  }
  return s;
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ConfigurationError("division by the zero polynomial");
  const Ring& ring = a.ring();
  const Field& k = ring.field();
  Coeff inv = k.inv(b.lead().coeff);
  Polynomial q(ring), rem(ring), cur = a;
  std::vector<Term> qterms, rterms;
  while (!cur.is_zero()) {
    const Term t = cur.lead();
    if (b.lead().mono.divides(t.mono)) {
      Monomial m = t.mono.divide(b.lead().mono);
      Coeff c = k.mul(t.coeff, inv);
      qterms.push_back({m, c});
      cur = cur.sub_mul_term(b, m, c);
    } else {
      rterms.push_back(t);
      cur = cur - Polynomial::monomial(ring, t.mono, t.coeff);
    }
  }
  return {Polynomial::from_terms(ring, std::move(qterms)), Polynomial::from_terms(ring, std::move(rterms))};
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  auto [q, rem] = divide(a, b);
  if (!rem.is_zero()) return std::nullopt;
  return q;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial f = expr();
    skip();
    if (pos_ != text_.size()) throw SyntaxError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return f;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::uint64_t number() {
    skip();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) throw SyntaxError("number too large", start);
      v = v * 10 + static_cast<unsigned>(text_[pos_++] - '0');
    }
    if (pos_ == start) throw SyntaxError("expected a number", start);
    return v;
  }

  Polynomial expr() {
    Polynomial f(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    for (;;) {
      Polynomial t = product();
      f = negate ? f - t : f + t;
      if (accept('+')) negate = false;
      else if (accept('-')) negate = true;
      else return f;
    }
  }

  Polynomial product() {
    Polynomial f = power();
    while (accept('*')) f *= power();
    return f;
  }

  Polynomial power() {
    Polynomial f = atom();
    if (accept('^')) {
      std::size_t at = pos_;
      std::uint64_t e = number();
      if (e > 1000) throw SyntaxError("exponent too large", at);
      f = f.pow(static_cast<unsigned>(e));
    }
    return f;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = number();
      return Polynomial::constant(ring_, static_cast<std::int64_t>(v % ring_.p()));
    }
    if (c == 'x') {
      std::size_t at = pos_++;
      std::uint64_t i = number();
      if (i < 1 || i > ring_.nvars()) throw SyntaxError("unknown variable x" + std::to_string(i), at);
      return Polynomial::variable(ring_, static_cast<std::size_t>(i - 1));
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

void monomials_rec(std::size_t nvars, std::size_t var, unsigned remaining, Monomial cur,
                   std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    out.push_back(cur * Monomial::variable(var, static_cast<std::uint16_t>(remaining)));
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e)
    monomials_rec(nvars, var + 1, remaining - e, cur * Monomial::variable(var, static_cast<std::uint16_t>(e)),
                  out);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) { return PolyParser(text, ring).parse(); }

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  monomials_rec(nvars, 0, degree, Monomial{}, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compare(a, b) > 0; });
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned bound) {
  std::vector<Monomial> out;
  for (unsigned d = bound + 1; d > 0; --d) {
    auto part = monomials_of_degree(nvars, d - 1);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Polynomial> enumerate_polynomials(const Ring& ring, const std::vector<Monomial>& support,
                                              std::size_t cap) {
  const std::uint32_t p = ring.p();
  double count = 1;
  for (std::size_t i = 0; i < support.size(); ++i) count *= p;
  if (count > static_cast<double>(cap))
    throw ResourceError("polynomial enumeration of " + std::to_string(static_cast<long double>(count)) +
                        " candidates exceeds cap " + std::to_string(cap));
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Coeff> digits(support.size(), 0);
  for (;;) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < support.size(); ++i)
      if (digits[i]) terms.push_back({support[i], digits[i]});
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

}  // namespace metalie
