#pragma once

#include <optional>

#include "twistcolor/biquandle.hpp"
#include "twistcolor/core.hpp"
#include "twistcolor/quandle.hpp"

namespace twistcolor {

/// Axiom names used in v- and t-structure reports.
inline constexpr const char* kVBiquandle = "V-biquandle";
inline constexpr const char* kVInvolution = "V^2=1";
inline constexpr const char* kVMixedYB = "mixed-YB";
inline constexpr const char* kTInvolution = "T^2=1";
inline constexpr const char* kTSlide = "V(Tx1)=(1xT)V";
inline constexpr const char* kTSlideDual = "V(1xT)=(Tx1)V";
inline constexpr const char* kTTwist = "(TxT)R(TxT)=VRV";

/// v-structure axioms:
///   (X, V) is a biquandle, V^2 = 1, and
///   (V x 1)(1 x V)(R x 1) = (1 x R)(V x 1)(1 x V) on X^3.
AxiomReport check_v_structure(const Biquandle& x, const PairMap& v);

class VStructuredBiquandle {
 public:
  VStructuredBiquandle(Biquandle base, PairMap v);

  const Biquandle& base() const noexcept { return base_; }
  const PairMap& V() const noexcept { return v_; }
  std::size_t size() const noexcept { return base_.size(); }
  const AxiomReport& v_report() const noexcept { return v_report_; }
  bool verified() const noexcept { return base_.is_biquandle() && v_report_.all_pass(); }

 private:
  Biquandle base_;
  PairMap v_;
  AxiomReport v_report_;
};

/// t-structure axioms: T^2 = 1, V(T x 1) = (1 x T)V, (T x T)R(T x T) = VRV,
/// plus the consequence V(1 x T) = (T x 1)V.
AxiomReport check_t_structure(const VStructuredBiquandle& xv, const ElemMap& t);

/// (X, R, V, T) together with the reports of all three axiom suites, which
/// serve as its verification certificate.
class VTStructure {
 public:
  VTStructure(VStructuredBiquandle xv, ElemMap t);
  VTStructure(Biquandle base, PairMap v, ElemMap t);

  std::size_t size() const noexcept { return xv_.size(); }
  const Biquandle& base() const noexcept { return xv_.base(); }
  const PairMap& R() const noexcept { return xv_.base().R(); }
  const PairMap& V() const noexcept { return xv_.V(); }
  const ElemMap& T() const noexcept { return t_; }
  const VStructuredBiquandle& v_structured() const noexcept { return xv_; }

  const AxiomReport& biquandle_report() const noexcept { return xv_.base().report(); }
  const AxiomReport& v_report() const noexcept { return xv_.v_report(); }
  const AxiomReport& t_report() const noexcept { return t_report_; }
  bool verified() const noexcept { return xv_.verified() && t_report_.all_pass(); }
  /// Concatenated digests of the three reports.
  std::string certificate() const;

  /// When the carrier is a square Q x Q this is |Q|; zero otherwise.
  std::size_t pair_base() const noexcept { return pair_base_; }
  void set_pair_base(std::size_t n0) { pair_base_ = n0; }

 private:
  VStructuredBiquandle xv_;
  ElemMap t_;
  AxiomReport t_report_;
  std::size_t pair_base_ = 0;
};

/// V(x1, x2) = (f^-1 x2, f x1) for an automorphism f of X.
VStructuredBiquandle virtual_v(const Biquandle& x, const ElemMap& f);

/// Biquandle on X0 x X0: the direct product of (X0, R0) and (X0, tau R0 tau).
Biquandle twisted_product_biquandle(const Biquandle& x0);
/// The twisted product biquandle with V_f((a1,b1),(a2,b2)) = ((f^-1 a2, f^-1 b2), (f a1, f b1)).
VStructuredBiquandle twisted_product_v(const Biquandle& x0, const ElemMap& f);
/// Adds T_g(a, b) = (g^-1 b, g a). Throws precondition unless f^2 = 1 and
/// fg = gf; use twisted_product_v for the v-structured part alone.
VTStructure twisted_product(const Biquandle& x0, const ElemMap& f, const ElemMap& g);

/// R((a1,b1),(a2,b2)) = ((a2, b2*b1), (a1*a2, b1)), V = tau, T(a,b) = (b,a).
VTStructure standard_twisted_product(const FiniteQuandle& q);

/// The quadruple that replaces b2*b1 by b2 *bar b1 in R. Returned unverified;
/// it is a vt-structure only for involutory quandles.
VTStructure remark_structure(const FiniteQuandle& q);

struct RemarkComparison {
  PairMap lhs;  // (T x T) R' (T x T)
  PairMap rhs;  // V R' V
  bool equal = false;
  std::optional<Pair> witness;  // first ((a1,b1),(a2,b2)) pair where they differ
};
RemarkComparison remark_counterexample(const FiniteQuandle& q);

/// (T x T) . R . (T x T) and V . R . V as tables.
PairMap twist_conjugate(const PairMap& r, const ElemMap& t);
PairMap v_conjugate(const PairMap& r, const PairMap& v);

}  // namespace twistcolor
