#pragma once

#include <optional>
#include <vector>

#include "twistcolor/core.hpp"
#include "twistcolor/quandle.hpp"

namespace twistcolor {

/// Axiom names used in biquandle reports.
inline constexpr const char* kBijective = "bijective";
inline constexpr const char* kYangBaxter = "B1";
inline constexpr const char* kSideways = "B2'";
inline constexpr const char* kShift = "B3'";

/// A candidate biquandle (X, R). The full axiom report is computed on
/// construction; the sideways map S is cached whenever B2' holds and the
/// shift s whenever B2' and B3' hold.
class Biquandle {
 public:
  explicit Biquandle(PairMap r);

  std::size_t size() const noexcept { return r_.carrier_size(); }
  const PairMap& R() const noexcept { return r_; }
  Pair operator()(Elem x, Elem y) const { return r_(x, y); }

  const AxiomReport& report() const noexcept { return report_; }
  bool is_biquandle() const noexcept { return report_.all_pass(); }
  bool is_birack() const;

  /// Throws axiom_violation when B2' fails.
  const PairMap& sideways() const;
  /// Throws axiom_violation when B2' or B3' fails.
  const ElemMap& shift() const;

  friend bool operator==(const Biquandle& a, const Biquandle& b) { return a.r_ == b.r_; }

 private:
  PairMap r_;
  AxiomReport report_;
  std::optional<PairMap> side_;
  std::optional<ElemMap> shift_;
};

/// Runs all four checks (bijective, B1, B2', B3') without failing fast.
AxiomReport check_biquandle(const PairMap& r);

/// S with S(x1,x3) = (x2,x4) iff R(x1,x2) = (x3,x4).
PairMap sideways(const Biquandle& x);
ElemMap shift(const Biquandle& x);

/// R(x,y) = (y, x*y)
Biquandle derived_biquandle(const FiniteQuandle& q);
Biquandle inverse_biquandle(const Biquandle& x);
Biquandle conjugate_by_tau(const Biquandle& x);

/// Carrier X1 x X2 with (a,b) encoded as a*n2 + b; R acts by R1 on the first
/// coordinates and R2 on the second.
Biquandle direct_product(const Biquandle& x1, const Biquandle& x2);
Elem encode_pair(Elem a, Elem b, std::size_t n2) noexcept;
Pair decode_pair(Elem e, std::size_t n2) noexcept;
/// f1 x f2 on the encoded product carrier.
ElemMap product_map(const ElemMap& f1, const ElemMap& f2);

struct BiquandleHomomorphism {
  ElemMap map;
};

/// (h x h) . R_source == R_target . (h x h)
bool is_homomorphism(const PairMap& source, const PairMap& target, const ElemMap& h);
bool is_homomorphism(const Biquandle& source, const Biquandle& target, const ElemMap& h);

inline constexpr std::size_t kDefaultAutomorphismCap = 8;

/// All automorphisms by brute force over n! permutations, in lexicographic
/// order (identity first). Throws resource when n exceeds `max_order`.
std::vector<BiquandleHomomorphism> automorphisms(const Biquandle& x,
                                                 std::size_t max_order = kDefaultAutomorphismCap);

}  // namespace twistcolor
