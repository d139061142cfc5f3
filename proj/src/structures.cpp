#include "twistcolor/structures.hpp"

#include <array>

namespace twistcolor {
namespace {

using Triple = std::array<Elem, 3>;

Triple left(const PairMap& m, Triple t) {
  Pair p = m(t[0], t[1]);
  return {p.first, p.second, t[2]};
}

Triple right(const PairMap& m, Triple t) {
  Pair p = m(t[1], t[2]);
  return {t[0], p.first, p.second};
}

void require_same_carrier(std::size_t n, const PairMap& m, const char* what) {
  if (m.carrier_size() != n)
    throw Error(ErrorKind::malformed, std::string(what) + " is defined on a carrier of size " +
                                          std::to_string(m.carrier_size()) + ", expected " + std::to_string(n));
}

void require_automorphism(const Biquandle& x, const ElemMap& f, const char* what) {
  if (f.size() != x.size() || !is_permutation(f) || !is_homomorphism(x, x, f))
    throw Error(ErrorKind::invalid_argument, std::string(what) + " is not an automorphism of the biquandle");
}

}  // namespace

AxiomReport check_v_structure(const Biquandle& x, const PairMap& v) {
  const std::size_t n = x.size();
  require_same_carrier(n, v, "V");
  AxiomReport report;

  AxiomResult vb{kVBiquandle};
  Biquandle as_biquandle(v);
  if (const AxiomResult* bad = as_biquandle.report().first_failure()) {
    vb.pass = false;
    vb.witness = bad->witness;
    vb.detail = "(X, V) fails " + bad->name;
  }
  report.add(vb);

  AxiomResult inv{kVInvolution};
  for (Elem a = 0; a < n && inv.pass; ++a)
    for (Elem b = 0; b < n; ++b)
      if (v(v(a, b)) != Pair{a, b}) {
        inv.pass = false;
        inv.witness = {a, b};
        inv.detail = "V(V(x,y)) != (x,y)";
        break;
      }
  report.add(inv);

  const PairMap& r = x.R();
  AxiomResult mixed{kVMixedYB};
  for (Elem a = 0; a < n && mixed.pass; ++a)
    for (Elem b = 0; b < n && mixed.pass; ++b)
      for (Elem c = 0; c < n; ++c) {
        Triple t{a, b, c};
        Triple lhs = left(v, right(v, left(r, t)));
        Triple rhs = right(r, left(v, right(v, t)));
        if (lhs != rhs) {
          mixed.pass = false;
          mixed.witness = {a, b, c};
          mixed.detail = "(Vx1)(1xV)(Rx1) != (1xR)(Vx1)(1xV)";
          break;
        }
      }
  report.add(mixed);
  return report;
}

VStructuredBiquandle::VStructuredBiquandle(Biquandle base, PairMap v)
    : base_(std::move(base)), v_(std::move(v)), v_report_(check_v_structure(base_, v_)) {}

PairMap twist_conjugate(const PairMap& r, const ElemMap& t) {
  const std::size_t n = r.carrier_size();
  std::vector<Pair> out(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Pair p = r(t[a], t[b]);
      out[r.index(a, b)] = {t[p.first], t[p.second]};
    }
  return PairMap(n, std::move(out));
}

PairMap v_conjugate(const PairMap& r, const PairMap& v) { return v.after(r.after(v)); }

AxiomReport check_t_structure(const VStructuredBiquandle& xv, const ElemMap& t) {
  const std::size_t n = xv.size();
  if (t.size() != n)
    throw Error(ErrorKind::malformed, "T has " + std::to_string(t.size()) + " entries, expected " + std::to_string(n));
  require_in_range(n, t, "T");
  const PairMap& v = xv.V();
  AxiomReport report;

  AxiomResult inv{kTInvolution};
  for (Elem a = 0; a < n; ++a)
    if (t[t[a]] != a) {
      inv.pass = false;
      inv.witness = {a};
      inv.detail = "T(T(x)) != x";
      break;
    }
  report.add(inv);

  AxiomResult slide{kTSlide};
  AxiomResult slide_dual{kTSlideDual};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Pair vab = v(a, b);
      if (slide.pass && v(t[a], b) != Pair{vab.first, t[vab.second]}) {
        slide.pass = false;
        slide.witness = {a, b};
        slide.detail = "V(T x, y) != (p1 V(x,y), T p2 V(x,y))";
      }
      if (slide_dual.pass && v(a, t[b]) != Pair{t[vab.first], vab.second}) {
        slide_dual.pass = false;
        slide_dual.witness = {a, b};
        slide_dual.detail = "V(x, T y) != (T p1 V(x,y), p2 V(x,y))";
      }
    }
  report.add(slide);

  AxiomResult twist{kTTwist};
  const PairMap lhs = twist_conjugate(xv.base().R(), t);
  const PairMap rhs = v_conjugate(xv.base().R(), v);
  for (Elem a = 0; a < n && twist.pass; ++a)
    for (Elem b = 0; b < n; ++b)
      if (lhs(a, b) != rhs(a, b)) {
        twist.pass = false;
        twist.witness = {a, b};
        twist.detail = "(TxT)R(TxT) != VRV";
        break;
      }
  report.add(twist);
  report.add(slide_dual);
  return report;
}

VTStructure::VTStructure(VStructuredBiquandle xv, ElemMap t)
    : xv_(std::move(xv)), t_(std::move(t)), t_report_(check_t_structure(xv_, t_)) {}

VTStructure::VTStructure(Biquandle base, PairMap v, ElemMap t)
    : VTStructure(VStructuredBiquandle(std::move(base), std::move(v)), std::move(t)) {}

std::string VTStructure::certificate() const {
  return biquandle_report().digest() + "-" + v_report().digest() + "-" + t_report_.digest();
}

VStructuredBiquandle virtual_v(const Biquandle& x, const ElemMap& f) {
  require_automorphism(x, f, "f");
  const std::size_t n = x.size();
  const ElemMap finv = inverse_permutation(f);
  std::vector<Pair> v(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) v[std::size_t(a) * n + b] = {finv[b], f[a]};
  return VStructuredBiquandle(x, PairMap(n, std::move(v)));
}

Biquandle twisted_product_biquandle(const Biquandle& x0) { return direct_product(x0, conjugate_by_tau(x0)); }

VStructuredBiquandle twisted_product_v(const Biquandle& x0, const ElemMap& f) {
  require_automorphism(x0, f, "f");
  return virtual_v(twisted_product_biquandle(x0), product_map(f, f));
}

VTStructure twisted_product(const Biquandle& x0, const ElemMap& f, const ElemMap& g) {
  require_automorphism(x0, f, "f");
  require_automorphism(x0, g, "g");
  if (compose(f, f) != identity_map(x0.size()))
    throw Error(ErrorKind::precondition, "twisted product needs f^2 = 1; only the v-structure is defined");
  if (compose(f, g) != compose(g, f))
    throw Error(ErrorKind::precondition, "twisted product needs fg = gf; only the v-structure is defined");

  const std::size_t n0 = x0.size();
  const ElemMap ginv = inverse_permutation(g);
  ElemMap t(n0 * n0);
  for (Elem a = 0; a < n0; ++a)
    for (Elem b = 0; b < n0; ++b) t[encode_pair(a, b, n0)] = encode_pair(ginv[b], g[a], n0);
  VTStructure s(twisted_product_v(x0, f), std::move(t));
  s.set_pair_base(n0);
  return s;
}

namespace {

ElemMap pair_swap(std::size_t n0) {
  ElemMap t(n0 * n0);
  for (Elem a = 0; a < n0; ++a)
    for (Elem b = 0; b < n0; ++b) t[encode_pair(a, b, n0)] = encode_pair(b, a, n0);
  return t;
}

template <class F>
PairMap pair_carrier_map(std::size_t n0, F&& rule) {
  const std::size_t n = n0 * n0;
  std::vector<Pair> v(n * n);
  for (Elem u = 0; u < n; ++u)
    for (Elem w = 0; w < n; ++w) {
      auto [a1, b1] = decode_pair(u, n0);
      auto [a2, b2] = decode_pair(w, n0);
      auto [p, q] = rule(a1, b1, a2, b2);
      v[std::size_t(u) * n + w] = {encode_pair(p.first, p.second, n0), encode_pair(q.first, q.second, n0)};
    }
  return PairMap(n, std::move(v));
}

}  // namespace

VTStructure standard_twisted_product(const FiniteQuandle& q) {
  const std::size_t n0 = q.size();
  PairMap r = pair_carrier_map(n0, [&](Elem a1, Elem b1, Elem a2, Elem b2) {
    return std::pair{Pair{a2, q.op(b2, b1)}, Pair{q.op(a1, a2), b1}};
  });
  VTStructure s(Biquandle(std::move(r)), PairMap::transposition(n0 * n0), pair_swap(n0));
  s.set_pair_base(n0);
  return s;
}

VTStructure remark_structure(const FiniteQuandle& q) {
  const std::size_t n0 = q.size();
  PairMap r = pair_carrier_map(n0, [&](Elem a1, Elem b1, Elem a2, Elem b2) {
    return std::pair{Pair{a2, q.dual_op(b2, b1)}, Pair{q.op(a1, a2), b1}};
  });
  VTStructure s(Biquandle(std::move(r)), PairMap::transposition(n0 * n0), pair_swap(n0));
  s.set_pair_base(n0);
  return s;
}

RemarkComparison remark_counterexample(const FiniteQuandle& q) {
  VTStructure s = remark_structure(q);
  RemarkComparison out{twist_conjugate(s.R(), s.T()), v_conjugate(s.R(), s.V())};
  const std::size_t n = s.size();
  out.equal = true;
  for (Elem u = 0; u < n && out.equal; ++u)
    for (Elem w = 0; w < n; ++w)
      if (out.lhs(u, w) != out.rhs(u, w)) {
        out.equal = false;
        out.witness = Pair{u, w};
        break;
      }
  return out;
}

}  // namespace twistcolor
