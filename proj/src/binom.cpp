#include "cutset/binom.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "cutset/errors.hpp"

namespace cutset {

namespace {

constexpr int kTriangleMax = 300;

// Row a holds C(a, 0..a). Built once; read-only afterwards.
const std::vector<std::vector<Nat>>& pascal_triangle() {
  static const std::vector<std::vector<Nat>> rows = [] {
    std::vector<std::vector<Nat>> t(kTriangleMax + 1);
    for (int a = 0; a <= kTriangleMax; ++a) {
      t[a].resize(a + 1);
      t[a][0] = 1;
      t[a][a] = 1;
      for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
    }
    return t;
  }();
  return rows;
}

Nat binomial_multiplicative(int a, int b) {
  b = std::min(b, a - b);
  Nat r = 1;
  for (int i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

// Largest a in [lo, hi] with C(a, b) <= K, given C(lo, b) <= K.
int largest_top_at_most(const Nat& K, int b, int lo, int hi) {
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    if (binomial(mid, b) <= K) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

// Smallest hi > lo with C(hi, b) > K, by doubling the distance from b.
int exceeding_top(const Nat& K, int b) {
  constexpr int kMaxTop = std::numeric_limits<int>::max() / 2;
  int step = 1;
  while (binomial(b + step, b) <= K) {
    if (step > kMaxTop - b) throw PreconditionError("cascade: K is too large for level " + std::to_string(b));
    step *= 2;
  }
  return b + step;
}

}  // namespace

Nat binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (a <= kTriangleMax) return pascal_triangle()[a][b];
  return binomial_multiplicative(a, b);
}

CascadeRep cascade(const Nat& K, int m) {
  if (m < 1) throw PreconditionError("cascade: m must be >= 1");
  if (K < 1) throw PreconditionError("cascade: K must be >= 1");

  CascadeRep rep{m, {}};
  Nat rest = K;
  int cap = -1;
  for (int i = m; i >= 1 && rest > 0; --i) {
    int hi = cap >= 0 ? cap : exceeding_top(rest, i) - 1;
    int a = largest_top_at_most(rest, i, i, hi);
    rep.terms.push_back({a, i});
    rest -= binomial(a, i);
    cap = a - 1;
  }
  if (rest != 0) throw std::logic_error("cascade: greedy decomposition did not terminate");
  return rep;
}

Nat eval(const CascadeRep& rep) {
  Nat sum = 0;
  for (const auto& t : rep.terms) sum += binomial(t.top, t.bottom);
  return sum;
}

bool is_well_formed(const CascadeRep& rep) {
  if (rep.m < 1 || rep.terms.empty()) return false;
  for (std::size_t k = 0; k < rep.terms.size(); ++k) {
    const auto& t = rep.terms[k];
    if (t.bottom != rep.m - static_cast<int>(k) || t.bottom < 1 || t.top < t.bottom) return false;
    if (k > 0 && t.top >= rep.terms[k - 1].top) return false;
  }
  return true;
}

Nat boundary(const Nat& K, int m) {
  if (m < 1) throw PreconditionError("boundary: m must be >= 1");
  if (K <= 0) return 0;
  Nat sum = 0;
  for (const auto& t : cascade(K, m).terms) sum += binomial(t.top, t.bottom - 1);
  return sum;
}

std::string to_string(const CascadeRep& rep) {
  std::string out;
  for (const auto& t : rep.terms) {
    if (!out.empty()) out += '+';
    out += "C(" + std::to_string(t.top) + "," + std::to_string(t.bottom) + ")";
  }
  return out;
}

CascadeRep parse_cascade(std::string_view text) {
  CascadeRep rep;
  std::size_t pos = 0;
  auto fail = [&](const char* what) {
    throw ParseError("cascade '" + std::string(text) + "': " + what);
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) fail("unexpected character");
    ++pos;
  };
  auto number = [&] {
    int v = 0;
    auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{}) fail("expected integer");
    pos = static_cast<std::size_t>(p - text.data());
    return v;
  };
  while (pos < text.size()) {
    if (!rep.terms.empty()) expect('+');
    expect('C');
    expect('(');
    int top = number();
    expect(',');
    int bottom = number();
    expect(')');
    rep.terms.push_back({top, bottom});
  }
  if (rep.terms.empty()) fail("empty");
  rep.m = rep.terms.front().bottom;
  if (!is_well_formed(rep)) fail("terms violate the cascade constraints");
  return rep;
}

std::string with_separators(const Nat& value) {
  std::string digits = value.str();
  bool negative = !digits.empty() && digits.front() == '-';
  if (negative) digits.erase(0, 1);
  std::string out;
  int count = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (count > 0 && count % 3 == 0) out += ',';
    out += *it;
    ++count;
  }
  if (negative) out += '-';
  std::reverse(out.begin(), out.end());
  return out;
}

Nat parse_nat(std::string_view text) {
  std::size_t start = (!text.empty() && text.front() == '-') ? 1 : 0;
  if (text.size() == start) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  return Nat(std::string(text));
}

}  // namespace cutset
