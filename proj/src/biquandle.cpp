#include "twistcolor/biquandle.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace twistcolor {
namespace {

struct Analysis {
  AxiomReport report;
  std::optional<PairMap> side;
  std::optional<ElemMap> shift;
};

using Triple = std::array<Elem, 3>;

Triple apply_left(const PairMap& r, Triple t) {
  Pair p = r(t[0], t[1]);
  return {p.first, p.second, t[2]};
}

Triple apply_right(const PairMap& r, Triple t) {
  Pair p = r(t[1], t[2]);
  return {t[0], p.first, p.second};
}

// Kuhn's augmenting-path matching of x -> candidate y; returns the matched s
// or the first x that cannot be matched.
std::optional<ElemMap> match_shift(const std::vector<std::vector<Elem>>& candidates, Elem& unmatched) {
  const std::size_t n = candidates.size();
  std::vector<int> owner(n, -1);
  std::function<bool(Elem, std::vector<bool>&)> augment = [&](Elem x, std::vector<bool>& seen) {
    for (Elem y : candidates[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      if (owner[y] < 0 || augment(static_cast<Elem>(owner[y]), seen)) {
        owner[y] = static_cast<int>(x);
        return true;
      }
    }
    return false;
  };
  for (Elem x = 0; x < n; ++x) {
    std::vector<bool> seen(n, false);
    if (!augment(x, seen)) {
      unmatched = x;
      return std::nullopt;
    }
  }
  ElemMap s(n);
  for (Elem y = 0; y < n; ++y) s[owner[y]] = y;
  return s;
}

Analysis analyze(const PairMap& r) {
  const std::size_t n = r.carrier_size();
  Analysis out;

  AxiomResult bij{kBijective};
  {
    std::vector<int> from(n * n, -1);
    for (Elem x = 0; x < n && bij.pass; ++x)
      for (Elem y = 0; y < n; ++y) {
        Pair p = r(x, y);
        std::size_t i = r.index(p.first, p.second);
        if (from[i] >= 0) {
          Pair q = {static_cast<Elem>(from[i] / n), static_cast<Elem>(from[i] % n)};
          bij.pass = false;
          bij.witness = {q.first, q.second, x, y};
          bij.detail = "R(x1,y1) == R(x2,y2)";
          break;
        }
        from[i] = static_cast<int>(r.index(x, y));
      }
  }
  out.report.add(bij);

  AxiomResult yb{kYangBaxter};
  for (Elem x = 0; x < n && yb.pass; ++x)
    for (Elem y = 0; y < n && yb.pass; ++y)
      for (Elem z = 0; z < n; ++z) {
        Triple t{x, y, z};
        Triple lhs = apply_left(r, apply_right(r, apply_left(r, t)));
        Triple rhs = apply_right(r, apply_left(r, apply_right(r, t)));
        if (lhs != rhs) {
          yb.pass = false;
          yb.witness = {x, y, z};
          yb.detail = "(Rx1)(1xR)(Rx1) != (1xR)(Rx1)(1xR)";
          break;
        }
      }
  out.report.add(yb);

  AxiomResult side{kSideways};
  {
    std::vector<Pair> s(n * n);
    std::vector<bool> defined(n * n, false);
    for (Elem x1 = 0; x1 < n && side.pass; ++x1)
      for (Elem x2 = 0; x2 < n; ++x2) {
        Pair p = r(x1, x2);
        std::size_t i = r.index(x1, p.first);
        if (defined[i]) {
          side.pass = false;
          side.witness = {x1, p.first};
          side.detail = "sideways relation is not single-valued at (x1,x3)";
          break;
        }
        defined[i] = true;
        s[i] = {x2, p.second};
      }
    if (side.pass) {
      // all n^2 keys are hit exactly once, so S is total; check injectivity
      PairMap sm(n, std::move(s));
      if (!sm.is_bijection()) {
        side.pass = false;
        std::vector<int> from(n * n, -1);
        for (std::size_t i = 0; i < n * n; ++i) {
          Pair v = sm.values()[i];
          std::size_t j = sm.index(v.first, v.second);
          if (from[j] >= 0) {
            side.witness = {static_cast<Elem>(from[j] / n), static_cast<Elem>(from[j] % n),
                            static_cast<Elem>(i / n), static_cast<Elem>(i % n)};
            break;
          }
          from[j] = static_cast<int>(i);
        }
        side.detail = "sideways map is not injective";
      } else {
        out.side = std::move(sm);
      }
    }
  }
  out.report.add(side);

  AxiomResult sh{kShift};
  {
    std::vector<std::vector<Elem>> candidates(n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (r(x, y) == Pair{x, y}) candidates[x].push_back(y);
    Elem bad = 0;
    auto s = match_shift(candidates, bad);
    if (!s) {
      sh.pass = false;
      sh.witness = {bad};
      sh.detail = candidates[bad].empty() ? "no y with R(x,y) = (x,y)"
                                          : "no bijection s with R(x,s(x)) = (x,s(x))";
    } else if (out.side) {
      out.shift = std::move(s);
    }
  }
  out.report.add(sh);
  return out;
}

}  // namespace

Biquandle::Biquandle(PairMap r) : r_(std::move(r)) {
  if (r_.carrier_size() == 0) throw Error(ErrorKind::invalid_argument, "biquandle carrier must be non-empty");
  Analysis a = analyze(r_);
  report_ = std::move(a.report);
  side_ = std::move(a.side);
  shift_ = std::move(a.shift);
}

bool Biquandle::is_birack() const {
  return report_.passed(kBijective) && report_.passed(kYangBaxter) && report_.passed(kSideways);
}

const PairMap& Biquandle::sideways() const {
  if (!side_) throw Error(ErrorKind::axiom_violation, "B2' fails: sideways map does not exist");
  return *side_;
}

const ElemMap& Biquandle::shift() const {
  if (!shift_) throw Error(ErrorKind::axiom_violation, "B2'/B3' fails: shift map does not exist");
  return *shift_;
}

AxiomReport check_biquandle(const PairMap& r) { return analyze(r).report; }

PairMap sideways(const Biquandle& x) { return x.sideways(); }
ElemMap shift(const Biquandle& x) { return x.shift(); }

Biquandle derived_biquandle(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  std::vector<Pair> v(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) v[std::size_t(x) * n + y] = {y, q.op(x, y)};
  return Biquandle(PairMap(n, std::move(v)));
}

Biquandle inverse_biquandle(const Biquandle& x) { return Biquandle(x.R().inverse()); }

Biquandle conjugate_by_tau(const Biquandle& x) { return Biquandle(x.R().conjugate_by_tau()); }

Elem encode_pair(Elem a, Elem b, std::size_t n2) noexcept { return static_cast<Elem>(a * n2 + b); }

Pair decode_pair(Elem e, std::size_t n2) noexcept {
  return {static_cast<Elem>(e / n2), static_cast<Elem>(e % n2)};
}

Biquandle direct_product(const Biquandle& x1, const Biquandle& x2) {
  const std::size_t n1 = x1.size(), n2 = x2.size(), n = n1 * n2;
  std::vector<Pair> v(n * n);
  for (Elem u = 0; u < n; ++u)
    for (Elem w = 0; w < n; ++w) {
      auto [a1, b1] = decode_pair(u, n2);
      auto [a2, b2] = decode_pair(w, n2);
      Pair ra = x1(a1, a2);
      Pair rb = x2(b1, b2);
      v[std::size_t(u) * n + w] = {encode_pair(ra.first, rb.first, n2), encode_pair(ra.second, rb.second, n2)};
    }
  return Biquandle(PairMap(n, std::move(v)));
}

ElemMap product_map(const ElemMap& f1, const ElemMap& f2) {
  const std::size_t n2 = f2.size();
  ElemMap f(f1.size() * n2);
  for (Elem a = 0; a < f1.size(); ++a)
    for (Elem b = 0; b < n2; ++b) f[encode_pair(a, b, n2)] = encode_pair(f1[a], f2[b], n2);
  return f;
}

bool is_homomorphism(const PairMap& source, const PairMap& target, const ElemMap& h) {
  const std::size_t n = source.carrier_size();
  if (h.size() != n) throw Error(ErrorKind::malformed, "homomorphism table has the wrong length");
  require_in_range(target.carrier_size(), h, "homomorphism table");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Pair p = source(x, y);
      if (Pair{h[p.first], h[p.second]} != target(h[x], h[y])) return false;
    }
  return true;
}

bool is_homomorphism(const Biquandle& source, const Biquandle& target, const ElemMap& h) {
  return is_homomorphism(source.R(), target.R(), h);
}

std::vector<BiquandleHomomorphism> automorphisms(const Biquandle& x, std::size_t max_order) {
  const std::size_t n = x.size();
  if (n > max_order)
    throw Error(ErrorKind::resource, "automorphism search over " + std::to_string(n) +
                                         "! maps exceeds the order cap " + std::to_string(max_order));
  std::vector<BiquandleHomomorphism> out;
  ElemMap h = identity_map(n);
  do {
    if (is_homomorphism(x.R(), x.R(), h)) out.push_back({h});
  } while (std::next_permutation(h.begin(), h.end()));
  return out;
}

}  // namespace twistcolor
