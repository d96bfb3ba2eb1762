#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cnp/errors.hpp"

namespace cnp {

enum class MaximalKind { NotMaximal, IsolatedMaximal, CantorMaximal };

// One orbit type of the end space. Isolated maximal orbits are modeled as a
// single point; Cantor maximal orbits self-accumulate; everything else is an
// infinite non-maximal orbit described by what it accumulates onto.
struct OrbitSpec {
  std::string id;
  MaximalKind maximal_kind = MaximalKind::NotMaximal;
  bool planar = true;
  std::set<std::string> accumulates_to;
  std::optional<std::string> unique_max_accumulation;
};

struct Genus {
  bool infinite = false;
  int value = 0;  // meaningful only when !infinite

  static Genus finite(int n) { return Genus{false, n}; }
  static Genus inf() { return Genus{true, 0}; }
  bool operator==(const Genus&) const = default;
};

class EndSpace {
 public:
  EndSpace() = default;
  EndSpace(std::vector<OrbitSpec> orbits, Genus genus);

  const std::vector<OrbitSpec>& orbits() const { return orbits_; }
  const OrbitSpec& orbit(const std::string& id) const;
  bool has_orbit(const std::string& id) const;
  Genus genus() const { return genus_; }

  // Orbit ids reachable from `id` through accumulation (excluding id itself
  // unless it lies on a cycle through another orbit).
  const std::set<std::string>& reachable(const std::string& id) const;

  // Maximal orbits reachable from `id` (includes id itself when maximal).
  std::set<std::string> reachable_maximal(const std::string& id) const;

  // The orbits strictly below `id` in the accumulation order: every z != id
  // with id in reachable(z). Any clopen set containing a point of `id`
  // contains points of all of these.
  std::set<std::string> below(const std::string& id) const;

  // Derived unique maximal accumulation: set iff the orbit is non-maximal
  // and exactly one maximal orbit is reachable and that orbit is isolated.
  std::optional<std::string> derived_unique_max(const std::string& id) const;

  std::set<std::string> maximal_orbit_ids() const;

 private:
  std::vector<OrbitSpec> orbits_;
  Genus genus_;
  std::map<std::string, int> index_;
  std::map<std::string, std::set<std::string>> reach_;

  void validate();
};

// --- complexity calculus -------------------------------------------------

std::set<std::string> maximal_orbits(const EndSpace& space);
int zeta_surface(const EndSpace& space);

struct AnchorBlock {
  enum class Kind { IsolatedMax, CantorHalf, PBlock };
  Kind kind;
  std::string orbit;  // the maximal orbit the block carries / is attached to
  int half = 0;       // 1 or 2 for CantorHalf
  std::string name() const;
};

struct AnchorDecomposition {
  std::vector<AnchorBlock> a_blocks;
  std::vector<AnchorBlock> p_blocks;
  int boundary_count = 0;

  std::vector<AnchorBlock> all_blocks() const;
};

AnchorDecomposition anchor_decomposition(const EndSpace& space);

// --- clopen profiles ------------------------------------------------------

enum class Content { None, Partial, All };

Content complement_content(Content c);

// Symbolic clopen subset of the end space, tracked at orbit granularity.
struct ClopenProfile {
  std::set<std::string> isolated_max_contained;
  std::map<std::string, Content> cantor_content;  // per Cantor maximal orbit
  std::map<std::string, Content> nonmax_content;  // per non-maximal orbit
  std::set<std::string> unique_acc_touched;       // derived, see normalize()

  bool empty() const;
  bool operator==(const ClopenProfile&) const = default;
};

// Fills in unique_acc_touched from nonmax_content and checks clopen
// consistency (content is downward closed; All propagates upward).
ClopenProfile normalize_profile(const EndSpace& space, ClopenProfile p);

ClopenProfile profile_complement(const EndSpace& space,
                                 const ClopenProfile& p);

// Union of two disjoint pieces of a common partition. Partial+Partial stays
// Partial unless together they exhaust the orbit, which the caller signals
// through `exhaustive` (true when the two inputs partition the whole space).
ClopenProfile profile_union(const EndSpace& space, const ClopenProfile& a,
                            const ClopenProfile& b, bool exhaustive);

ClopenProfile full_profile(const EndSpace& space);

int zeta_clopen(const ClopenProfile& profile, const EndSpace& space);

struct SmallnessResult {
  bool small = false;
  std::string reason;
};

SmallnessResult is_small(const ClopenProfile& profile, const EndSpace& space);

// Anchor blocks whose content can absorb the profile (orbit-preserving).
std::vector<AnchorBlock> fitting_blocks(const ClopenProfile& profile,
                                        const EndSpace& space);

// Whether the complementary component behind the block has infinite genus.
bool block_nonplanar(const AnchorBlock& b, const EndSpace& space);

// Independent brute-force check: tries to embed the profile content into a
// single anchor block respecting orbit preservation. Used as the oracle the
// fast rule path must agree with.
SmallnessResult is_small_oracle(const ClopenProfile& profile,
                                const EndSpace& space);

int four_way_selector(const ClopenProfile& x1, const ClopenProfile& x2,
                      const ClopenProfile& x3, const ClopenProfile& x4,
                      const EndSpace& space);

// --- shift tracks ---------------------------------------------------------

struct ShiftTrack {
  enum class Kind { BetweenBlocks, UniqueAcc };
  Kind kind;
  std::string block_a;  // block name (negative side, levels k <= 0)
  std::string block_b;  // block name or P-block name (levels k > 0)
  std::set<std::string> carried_orbits;  // orbit ids riding the track
  bool planar = true;
  int truncation = 0;  // J: levels run k in [-J, J]

  std::string name() const;
  // The symbolic content of one level W^k: Partial on each carried orbit.
  ClopenProfile level_profile(const EndSpace& space) const;
};

std::vector<ShiftTrack> shift_orbit_decomposition(
    const EndSpace& space, const AnchorDecomposition& decomp,
    int truncation = 8);

}  // namespace cnp
