#include "cutset/canonical.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "cutset/errors.hpp"

namespace cutset {

namespace {

void require_omega(const Profile& p, const char* op) {
  if (!in_omega(p)) throw PreconditionError(std::string(op) + ": profile is outside Omega_n");
}

// u_0..u_upto.
std::vector<Nat> u_prefix(const Profile& p, int upto) {
  std::vector<Nat> u(static_cast<std::size_t>(upto) + 1);
  u[0] = 1;
  for (int m = 0; m < upto; ++m) u[m + 1] = boundary(u[m] - p.f[m], p.n - m);
  return u;
}

// v_downto..v_n, stored at their level index (entries below downto unset).
std::vector<Nat> v_suffix(const Profile& p, int downto) {
  std::vector<Nat> v(static_cast<std::size_t>(p.n) + 1);
  v[p.n] = 1;
  for (int m = p.n; m > downto; --m) v[m - 1] = boundary(v[m] - p.f[m], m);
  return v;
}

Nat slack_at(const Profile& p, const std::vector<Nat>& u, const std::vector<Nat>& v, int m) {
  return binomial(p.n, m) + p.f[m] - u[m] - v[m];
}

Segment up_segment(const Profile& p, const UVVectors& uv, int i) {
  const Nat size = binomial(p.n, i);
  Nat start = size - uv.u[i] + 1;
  Nat end = std::min<Nat>(size - uv.u[i] + p.f[i], size);
  return Segment{p.n, i, start, end};
}

Segment down_segment(const Profile& p, const UVVectors& uv, int i) {
  Nat start = std::max<Nat>(1, uv.v[i] - p.f[i] + 1);
  return Segment{p.n, i, start, uv.v[i]};
}

Family difference(const Family& a, const Family& b) {
  Family out{a.n, a.level, {}};
  std::set_difference(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                      std::back_inserter(out.members), SquashedLess{});
  return out;
}

Segment segment_of(const Family& fam) {
  if (fam.empty()) return Segment{fam.n, fam.level, 1, 0};
  Nat lo = rank(fam.members.front());
  Nat hi = rank(fam.members.back());
  if (hi - lo + 1 != fam.size())
    throw std::logic_error("simulate_sets: canonical level is not a contiguous segment");
  return Segment{fam.n, fam.level, lo, hi};
}

}  // namespace

bool in_omega(const Profile& p) {
  if (p.n < 0 || p.f.size() != static_cast<std::size_t>(p.n) + 1) return false;
  for (int m = 0; m <= p.n; ++m)
    if (p.f[m] < 0 || p.f[m] > binomial(p.n, m)) return false;
  return true;
}

Profile make_profile(std::vector<Nat> f) {
  if (f.empty()) throw PreconditionError("profile must have at least one entry");
  Profile p{static_cast<int>(f.size()) - 1, std::move(f)};
  require_omega(p, "profile");
  return p;
}

UVVectors uv(const Profile& p) {
  require_omega(p, "uv");
  return UVVectors{u_prefix(p, p.n), v_suffix(p, 0)};
}

Feasibility is_cutset_profile(const Profile& p, CheckMode mode) {
  require_omega(p, "is_cutset_profile");
  Feasibility out;
  out.check_level = p.n / 2;
  if (mode == CheckMode::single_level) {
    const auto u = u_prefix(p, out.check_level);
    const auto v = v_suffix(p, out.check_level);
    Nat s = slack_at(p, u, v, out.check_level);
    out.feasible = s >= 0;
    out.slack.emplace_back(out.check_level, std::move(s));
    return out;
  }
  const auto vecs = uv(p);
  for (int m = 0; m <= p.n; ++m) out.slack.emplace_back(m, slack_at(p, vecs.u, vecs.v, m));
  out.feasible = out.slack[out.check_level].second >= 0;
  for (const auto& [m, s] : out.slack) {
    if ((s >= 0) != out.feasible)
      throw std::logic_error("is_cutset_profile: verdict differs at level " + std::to_string(m));
  }
  return out;
}

bool feasible(const Profile& p) { return is_cutset_profile(p).feasible; }

const Segment& CanonicalCollection::segment(int level) const {
  if (level < 0 || level > profile.n) throw PreconditionError("segment: level outside 0..n");
  return level <= pivot ? up[level] : down[level - pivot - 1];
}

std::vector<Nat> CanonicalCollection::counts() const {
  std::vector<Nat> c;
  for (int i = 0; i <= profile.n; ++i) c.push_back(segment(i).size());
  return c;
}

CanonicalCollection canonical(const Profile& p, int pivot) {
  require_omega(p, "canonical");
  if (pivot < 0 || pivot > p.n) throw PreconditionError("canonical: pivot outside 0..n");
  CanonicalCollection c{p, pivot, {}, {}, uv(p)};
  for (int i = 0; i <= pivot; ++i) c.up.push_back(up_segment(p, c.uv, i));
  for (int i = pivot + 1; i <= p.n; ++i) c.down.push_back(down_segment(p, c.uv, i));
  return c;
}

void check_level_budget(int n, std::uint64_t budget) {
  if (binomial(n, n / 2) > budget)
    throw BudgetExceeded("levels of 2^[" + std::to_string(n) + "] exceed the materialization budget of " +
                         std::to_string(budget));
}

std::vector<Family> emit_sets(const CanonicalCollection& c, std::uint64_t budget) {
  check_level_budget(c.profile.n, budget);
  std::vector<Family> out;
  for (int i = 0; i <= c.profile.n; ++i) out.push_back(materialize(c.segment(i)));
  return out;
}

CanonicalCollection simulate_sets(const Profile& p, int pivot, std::uint64_t budget) {
  require_omega(p, "simulate_sets");
  if (pivot < 0 || pivot > p.n) throw PreconditionError("simulate_sets: pivot outside 0..n");
  check_level_budget(p.n, budget);
  const int n = p.n;

  CanonicalCollection c{p, pivot, {}, {}, {}};
  c.uv.u.resize(n + 1);
  c.uv.v.resize(n + 1);

  std::vector<Family> up_sets(n + 1), down_sets(n + 1);

  Family reach = make_family(n, 0, {Subset{}});
  for (int m = 0; m <= n; ++m) {
    if (m > 0) reach = shade(reach);
    const Nat size = reach.size();
    c.uv.u[m] = size;
    Family taken = m == 0 ? initial(p.f[0], 0, n)
                          : difference(last(size, m, n), last(size - p.f[m], m, n));
    up_sets[m] = taken;
    if (m < n) reach = difference(reach, taken);
  }

  Subset ground;
  for (int x = 1; x <= n; ++x) ground.elements.push_back(x);
  reach = make_family(n, n, {ground});
  for (int m = n; m >= 0; --m) {
    if (m < n) reach = shadow(reach);
    const Nat size = reach.size();
    c.uv.v[m] = size;
    Family taken = m == n ? last(p.f[n], n, n)
                          : difference(initial(size, m, n), initial(size - p.f[m], m, n));
    down_sets[m] = taken;
    if (m > 0) reach = difference(reach, taken);
  }

  for (int i = 0; i <= pivot; ++i) c.up.push_back(segment_of(up_sets[i]));
  for (int i = pivot + 1; i <= n; ++i) c.down.push_back(segment_of(down_sets[i]));
  return c;
}

}  // namespace cutset
