#include "mpc/rotation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mpc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// One additive term: either a rational or [rational *] theta.
void apply_term(CutExpr& c, std::string_view term, int sgn) {
  term = trim(term);
  if (term.empty()) throw std::invalid_argument("malformed cut expression");
  auto pos = term.find("theta");
  if (pos == std::string_view::npos) {
    c.a += sgn * parse_rational(term);
    return;
  }
  std::string_view coef = trim(term.substr(0, pos));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  Rat b = coef.empty() ? Rat(1) : parse_rational(coef);
  if (trim(term.substr(pos + 5)).size() != 0)
    throw std::invalid_argument("malformed cut expression");
  c.b += sgn * b;
}

}  // namespace

CutExpr parse_cut_expr(std::string_view s) {
  CutExpr c{Rat(0), Rat(0)};
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("empty cut expression");
  std::size_t start = 0;
  int sgn = 1;
  if (s[0] == '+' || s[0] == '-') {
    sgn = s[0] == '-' ? -1 : 1;
    start = 1;
  }
  std::size_t i = start;
  for (; i <= s.size(); ++i) {
    if (i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/')) {
      apply_term(c, s.substr(start, i - start), sgn);
      if (i < s.size()) sgn = s[i] == '-' ? -1 : 1;
      start = i + 1;
    }
  }
  return c;
}

std::string format_cut_expr(const CutExpr& c) {
  if (c.b == 0) return format_rational(c.a);
  std::string theta_part =
      (c.b == 1 ? "theta" : c.b == -1 ? "-theta" : format_rational(c.b) + "*theta");
  if (c.a == 0) return theta_part;
  if (c.b > 0) return format_rational(c.a) + "+" + theta_part;
  return format_rational(c.a) + theta_part;  // theta_part carries the minus
}

RotationSpec::RotationSpec(std::vector<std::uint64_t> cf_terms, std::vector<CutExpr> cuts)
    : cf_(std::move(cf_terms)), cuts_(std::move(cuts)) {
  if (cf_.size() < 2)
    throw std::invalid_argument("need at least 2 continued-fraction coefficients");
  for (auto a : cf_)
    if (a == 0) throw std::invalid_argument("continued-fraction coefficients must be positive");
  // Convergents of [0; a_1 .. a_m].
  BigInt h_prev = 1, h = 0;  // h_{-1}, h_0
  BigInt k_prev = 0, k = 1;
  conv_.push_back(Rat(0));
  for (auto a : cf_) {
    BigInt h_next = BigInt(a) * h + h_prev;
    BigInt k_next = BigInt(a) * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    conv_.push_back(Rat(h, k));
  }
  if (cuts_.size() < 2) throw std::invalid_argument("need at least 2 cuts");
  // c_r = c_0 + 1 and strict increase.
  const CutExpr& first = cuts_.front();
  const CutExpr& last = cuts_.back();
  if (last.a - first.a != 1 || last.b != first.b)
    throw std::invalid_argument("last cut must equal first cut plus 1");
  for (std::size_t i = 0; i + 1 < cuts_.size(); ++i) {
    if (sign(cuts_[i + 1].a - cuts_[i].a, cuts_[i + 1].b - cuts_[i].b) <= 0)
      throw std::invalid_argument("cuts must be strictly increasing");
  }
}

int RotationSpec::sign(const Rat& a, const Rat& b) const {
  if (b == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
  Rat q = -a / b;
  int sb = b > 0 ? 1 : -1;
  for (std::size_t t = 1; t < conv_.size(); ++t) {
    const Rat& lo = std::min(conv_[t - 1], conv_[t]);
    const Rat& hi = std::max(conv_[t - 1], conv_[t]);
    if (q <= lo) return sb;    // theta > q
    if (q >= hi) return -sb;   // theta < q
  }
  throw PrecisionExhausted();
}

BigInt RotationSpec::floor_n_theta(std::uint64_t n) const {
  if (n == 0) return 0;
  BigInt bn(n);
  for (std::size_t t = 1; t < conv_.size(); ++t) {
    const Rat& lo = std::min(conv_[t - 1], conv_[t]);
    const Rat& hi = std::max(conv_[t - 1], conv_[t]);
    BigInt flo = rat_floor(bn * lo);
    Rat nhi = bn * hi;
    BigInt fhi = rat_floor(nhi);
    if (Rat(fhi) == nhi) --fhi;  // n*theta < n*hi strictly
    if (flo == fhi) return flo;
  }
  throw HorizonExceeded();
}

Letter RotationSpec::eval(std::uint64_t n) const {
  BigInt f = floor_n_theta(n);
  // {n*theta} = A + B*theta with A = -floor, B = n.
  Rat A = -Rat(f);
  Rat B = n;
  // Normalize into [c_0, c_0 + 1).
  while (sign(A - cuts_.front().a, B - cuts_.front().b) < 0) A += 1;
  while (sign(A - cuts_.back().a, B - cuts_.back().b) >= 0) A -= 1;
  for (int i = alphabet_size() - 1; i >= 0; --i) {
    if (sign(A - cuts_[i].a, B - cuts_[i].b) >= 0) return static_cast<Letter>(i);
  }
  throw std::logic_error("rotation evaluation fell through the cut intervals");
}

RotationSpec RotationSpec::truncated(std::size_t terms) const {
  std::vector<std::uint64_t> cf(cf_.begin(), cf_.begin() + std::min(terms, cf_.size()));
  return RotationSpec(std::move(cf), cuts_);
}

RotationSpec fibonacci_rotation(std::size_t cf_terms) {
  std::vector<std::uint64_t> cf(cf_terms, 1);
  std::vector<CutExpr> cuts{{Rat(0), Rat(0)}, {Rat(1), Rat(-1)}, {Rat(1), Rat(0)}};
  return RotationSpec(std::move(cf), std::move(cuts));
}

RotationSpec rotation_three_letters(std::size_t cf_terms) {
  std::vector<std::uint64_t> cf(cf_terms, 1);
  std::vector<CutExpr> cuts{{Rat(0), Rat(0)},
                            {Rat(1, 3), Rat(0)},
                            {Rat(2, 3), Rat(0)},
                            {Rat(1), Rat(0)}};
  return RotationSpec(std::move(cf), std::move(cuts));
}

}  // namespace mpc
