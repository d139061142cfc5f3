#pragma once

// Local move checks. Each move family is described once as an unoriented
// picture (strands with crossing/bar events and local directions); every
// orientation of its strands is realized as a pair of tangles and the two
// sides are compared through their boundary profiles.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistcolor/coloring.hpp"
#include "twistcolor/diagram.hpp"
#include "twistcolor/structures.hpp"

namespace twistcolor {

enum class MoveFamily { R1, R2, R3, V1, V2, V3, V4, T1, T2, T3 };

inline constexpr std::array<MoveFamily, 10> kAllMoveFamilies = {
    MoveFamily::R1, MoveFamily::R2, MoveFamily::R3, MoveFamily::V1, MoveFamily::V2,
    MoveFamily::V3, MoveFamily::V4, MoveFamily::T1, MoveFamily::T2, MoveFamily::T3};

std::string_view family_name(MoveFamily f);
std::optional<MoveFamily> parse_family(std::string_view name);

/// Both sides list their boundary endpoints in the same order, so the
/// endpoint correspondence is positional.
struct MoveInstance {
  MoveFamily family;
  std::string variant;
  Tangle left;
  Tangle right;
};

std::vector<MoveInstance> enumerate_move_instances(MoveFamily family);

/// For every coloring of boundary_in, the boundary_out colors reached and
/// how many internal colorings reach them.
struct BoundaryProfile {
  using Key = std::pair<std::vector<Elem>, std::vector<Elem>>;
  std::map<Key, std::uint64_t> entries;

  std::uint64_t total() const;
  friend bool operator==(const BoundaryProfile&, const BoundaryProfile&) = default;
};

BoundaryProfile boundary_profile(const Tangle& t, const ColoringRules& rules,
                                 std::uint64_t node_budget = kDefaultNodeBudget);
BoundaryProfile boundary_profile(const Tangle& t, const VTStructure& s);

/// Joins out-endpoint `out_index` of `a` to in-endpoint `in_index` of `b`.
/// Boundary order: a.in, b.in without in_index; a.out without out_index, b.out.
Tangle glue(const Tangle& a, std::size_t out_index, const Tangle& b, std::size_t in_index);
/// Relational composition matching glue().
BoundaryProfile compose_profiles(const BoundaryProfile& a, std::size_t out_index, const BoundaryProfile& b,
                                 std::size_t in_index);

struct ProfileMismatch {
  std::vector<Elem> in;
  std::vector<Elem> out;
  std::uint64_t left_count = 0;
  std::uint64_t right_count = 0;
};

struct VariantResult {
  std::string id;
  bool pass = true;
  std::optional<ProfileMismatch> witness;
};

struct FamilyReport {
  MoveFamily family;
  std::vector<VariantResult> variants;
  bool pass() const;
};

struct MoveReport {
  std::vector<FamilyReport> families;
  bool all_pass() const;
  std::vector<MoveFamily> failing_families() const;
};

/// Compares both sides of every instance of the given families (all ten by
/// default). Works on unverified structures too; failures are report content.
MoveReport check_move_invariance(const ColoringRules& rules,
                                 const std::vector<MoveFamily>& families = {kAllMoveFamilies.begin(),
                                                                            kAllMoveFamilies.end()});
MoveReport check_move_invariance(const VTStructure& s);

}  // namespace twistcolor
