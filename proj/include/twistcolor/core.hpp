#pragma once

// Shared vocabulary: carrier elements, finite maps on X and X^2, errors and
// axiom reports. Every carrier is {0, ..., n-1}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace twistcolor {

using Elem = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

struct Pair {
  Elem first = 0;
  Elem second = 0;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

enum class ErrorKind {
  invalid_argument,  // bad constructor parameter (size 0, non-unit, ...)
  malformed,         // table entry out of range, wrong shape
  axiom_violation,   // a required axiom does not hold
  precondition,      // operation called outside its domain
  parse,             // text/JSON input could not be parsed
  unsupported,       // valid input the operation does not handle
  resource,          // search cap exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A map X -> X stored as a table; index is the argument.
using ElemMap = std::vector<Elem>;

ElemMap identity_map(std::size_t n);
bool is_permutation(const ElemMap& f);
ElemMap inverse_permutation(const ElemMap& f);
/// (outer . inner)(x) = outer(inner(x))
ElemMap compose(const ElemMap& outer, const ElemMap& inner);

/// A map X^2 -> X^2 on a carrier of size n, stored row-major: entry x*n+y.
class PairMap {
 public:
  PairMap() = default;
  PairMap(std::size_t n, std::vector<Pair> values);

  static PairMap identity(std::size_t n);
  static PairMap transposition(std::size_t n);

  std::size_t carrier_size() const noexcept { return n_; }
  Pair operator()(Elem x, Elem y) const { return values_[index(x, y)]; }
  Pair operator()(Pair p) const { return (*this)(p.first, p.second); }
  std::size_t index(Elem x, Elem y) const noexcept { return std::size_t(x) * n_ + y; }
  const std::vector<Pair>& values() const noexcept { return values_; }

  bool is_bijection() const;
  /// Requires is_bijection().
  PairMap inverse() const;
  /// tau . this . tau, i.e. (x,y) -> swap(this(y,x)).
  PairMap conjugate_by_tau() const;
  /// (this . inner)
  PairMap after(const PairMap& inner) const;

  friend bool operator==(const PairMap&, const PairMap&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Pair> values_;
};

/// One axiom outcome. `witness` holds the offending elements (empty on pass).
struct AxiomResult {
  std::string name;
  bool pass = true;
  std::vector<Elem> witness;
  std::string detail;
};

class AxiomReport {
 public:
  AxiomReport() = default;
  explicit AxiomReport(std::vector<AxiomResult> results) : results_(std::move(results)) {}

  void add(AxiomResult r) { results_.push_back(std::move(r)); }
  const std::vector<AxiomResult>& results() const noexcept { return results_; }
  bool all_pass() const noexcept;
  /// Throws precondition if no axiom of that name was checked.
  const AxiomResult& at(std::string_view name) const;
  bool passed(std::string_view name) const { return at(name).pass; }
  /// First failing axiom, or nullptr.
  const AxiomResult* first_failure() const noexcept;
  /// Short stable digest of names and outcomes; used as a verification certificate.
  std::string digest() const;

 private:
  std::vector<AxiomResult> results_;
};

/// Checks that every entry of a table lies in [0, n); throws malformed otherwise.
void require_in_range(std::size_t n, const ElemMap& table, std::string_view what);
void require_in_range(std::size_t n, const std::vector<Pair>& table, std::string_view what);

}  // namespace twistcolor
