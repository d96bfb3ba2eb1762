#include "cnp/endspace.hpp"

#include <algorithm>
#include <deque>

namespace cnp {

EndSpace::EndSpace(std::vector<OrbitSpec> orbits, Genus genus)
    : orbits_(std::move(orbits)), genus_(genus) {
  for (int i = 0; i < static_cast<int>(orbits_.size()); ++i) {
    auto [it, fresh] = index_.emplace(orbits_[i].id, i);
    require(fresh, ErrorKind::BadInput,
            "duplicate orbit id: " + orbits_[i].id);
  }
  validate();
}

const OrbitSpec& EndSpace::orbit(const std::string& id) const {
  auto it = index_.find(id);
  require(it != index_.end(), ErrorKind::BadInput, "unknown orbit id: " + id);
  return orbits_[it->second];
}

bool EndSpace::has_orbit(const std::string& id) const {
  return index_.count(id) > 0;
}

void EndSpace::validate() {
  require(!orbits_.empty(), ErrorKind::BadInput, "end space has no orbits");
  for (const auto& o : orbits_) {
    for (const auto& t : o.accumulates_to)
      require(index_.count(t) > 0, ErrorKind::BadInput,
              "orbit " + o.id + " accumulates to unknown orbit " + t);
    switch (o.maximal_kind) {
      case MaximalKind::IsolatedMaximal:
        require(o.accumulates_to.empty(), ErrorKind::InconsistentFlags,
                "isolated maximal orbit " + o.id + " must not accumulate");
        break;
      case MaximalKind::CantorMaximal:
        require(o.accumulates_to == std::set<std::string>{o.id},
                ErrorKind::InconsistentFlags,
                "Cantor maximal orbit " + o.id +
                    " must accumulate exactly to itself");
        break;
      case MaximalKind::NotMaximal:
        require(!o.accumulates_to.empty(), ErrorKind::InconsistentFlags,
                "non-maximal orbit " + o.id + " must accumulate somewhere");
        break;
    }
  }

  // Reachability closure.
  for (const auto& o : orbits_) {
    std::set<std::string> seen;
    std::deque<std::string> queue(o.accumulates_to.begin(),
                                  o.accumulates_to.end());
    while (!queue.empty()) {
      std::string cur = queue.front();
      queue.pop_front();
      if (!seen.insert(cur).second) continue;
      for (const auto& t : orbit(cur).accumulates_to)
        if (!seen.count(t)) queue.push_back(t);
    }
    reach_[o.id] = std::move(seen);
  }

  bool any_maximal = false;
  for (const auto& o : orbits_) {
    const auto& r = reach_.at(o.id);
    bool has_strict_successor = false;
    for (const auto& t : r)
      if (t != o.id) has_strict_successor = true;
    if (o.maximal_kind == MaximalKind::NotMaximal) {
      require(has_strict_successor, ErrorKind::InconsistentFlags,
              "orbit " + o.id + " flagged non-maximal but has no successor");
    } else {
      any_maximal = true;
      require(!has_strict_successor, ErrorKind::InconsistentFlags,
              "orbit " + o.id + " flagged maximal but has a strict successor");
    }
    if (o.unique_max_accumulation) {
      auto derived = derived_unique_max(o.id);
      require(derived && *derived == *o.unique_max_accumulation,
              ErrorKind::InconsistentFlags,
              "orbit " + o.id +
                  ": declared unique_max_accumulation does not match the "
                  "accumulation relations");
    }
    if (!o.planar)
      require(genus_.infinite, ErrorKind::BadInput,
              "non-planar orbit " + o.id + " requires infinite genus");
  }
  require(any_maximal, ErrorKind::BadInput,
          "stable end space needs at least one maximal orbit");
}

const std::set<std::string>& EndSpace::reachable(const std::string& id) const {
  auto it = reach_.find(id);
  require(it != reach_.end(), ErrorKind::BadInput, "unknown orbit id: " + id);
  return it->second;
}

std::set<std::string> EndSpace::reachable_maximal(const std::string& id) const {
  std::set<std::string> out;
  const auto& o = orbit(id);
  if (o.maximal_kind != MaximalKind::NotMaximal) out.insert(id);
  for (const auto& t : reachable(id))
    if (orbit(t).maximal_kind != MaximalKind::NotMaximal) out.insert(t);
  return out;
}

std::set<std::string> EndSpace::below(const std::string& id) const {
  std::set<std::string> out;
  for (const auto& o : orbits_)
    if (o.id != id && reachable(o.id).count(id)) out.insert(o.id);
  return out;
}

std::optional<std::string> EndSpace::derived_unique_max(
    const std::string& id) const {
  const auto& o = orbit(id);
  if (o.maximal_kind != MaximalKind::NotMaximal) return std::nullopt;
  auto maxima = reachable_maximal(id);
  if (maxima.size() != 1) return std::nullopt;
  const auto& m = *maxima.begin();
  if (orbit(m).maximal_kind != MaximalKind::IsolatedMaximal)
    return std::nullopt;
  return m;
}

std::set<std::string> EndSpace::maximal_orbit_ids() const {
  std::set<std::string> out;
  for (const auto& o : orbits_)
    if (o.maximal_kind != MaximalKind::NotMaximal) out.insert(o.id);
  return out;
}

std::set<std::string> maximal_orbits(const EndSpace& space) {
  // Validation already cross-checked flags against reachability.
  return space.maximal_orbit_ids();
}

namespace {

std::set<std::string> unique_acc_targets(const EndSpace& space) {
  std::set<std::string> targets;
  for (const auto& o : space.orbits())
    if (auto m = space.derived_unique_max(o.id)) targets.insert(*m);
  return targets;
}

}  // namespace

int zeta_surface(const EndSpace& space) {
  int cantor = 0, isolated = 0;
  for (const auto& o : space.orbits()) {
    if (o.maximal_kind == MaximalKind::CantorMaximal) ++cantor;
    if (o.maximal_kind == MaximalKind::IsolatedMaximal) ++isolated;
  }
  return 2 * cantor + isolated +
         static_cast<int>(unique_acc_targets(space).size());
}

std::string AnchorBlock::name() const {
  switch (kind) {
    case Kind::IsolatedMax:
      return "A[" + orbit + "]";
    case Kind::CantorHalf:
      return "A[" + orbit + "#" + std::to_string(half) + "]";
    case Kind::PBlock:
      return "P[" + orbit + "]";
  }
  return "?";
}

std::vector<AnchorBlock> AnchorDecomposition::all_blocks() const {
  std::vector<AnchorBlock> out = a_blocks;
  out.insert(out.end(), p_blocks.begin(), p_blocks.end());
  return out;
}

AnchorDecomposition anchor_decomposition(const EndSpace& space) {
  AnchorDecomposition d;
  for (const auto& o : space.orbits()) {
    if (o.maximal_kind == MaximalKind::CantorMaximal) {
      d.a_blocks.push_back({AnchorBlock::Kind::CantorHalf, o.id, 1});
      d.a_blocks.push_back({AnchorBlock::Kind::CantorHalf, o.id, 2});
    } else if (o.maximal_kind == MaximalKind::IsolatedMaximal) {
      d.a_blocks.push_back({AnchorBlock::Kind::IsolatedMax, o.id, 0});
    }
  }
  for (const auto& m : unique_acc_targets(space))
    d.p_blocks.push_back({AnchorBlock::Kind::PBlock, m, 0});
  std::sort(d.a_blocks.begin(), d.a_blocks.end(),
            [](const AnchorBlock& a, const AnchorBlock& b) {
              return std::pair(a.orbit, a.half) < std::pair(b.orbit, b.half);
            });
  std::sort(d.p_blocks.begin(), d.p_blocks.end(),
            [](const AnchorBlock& a, const AnchorBlock& b) {
              return a.orbit < b.orbit;
            });
  d.boundary_count =
      static_cast<int>(d.a_blocks.size() + d.p_blocks.size());
  return d;
}

Content complement_content(Content c) {
  switch (c) {
    case Content::None:
      return Content::All;
    case Content::All:
      return Content::None;
    default:
      return Content::Partial;
  }
}

bool ClopenProfile::empty() const {
  if (!isolated_max_contained.empty()) return false;
  for (const auto& [k, v] : cantor_content)
    if (v != Content::None) return false;
  for (const auto& [k, v] : nonmax_content)
    if (v != Content::None) return false;
  return true;
}

namespace {

Content content_of(const EndSpace& space, const ClopenProfile& p,
                   const std::string& orbit_id) {
  const auto& o = space.orbit(orbit_id);
  switch (o.maximal_kind) {
    case MaximalKind::IsolatedMaximal:
      return p.isolated_max_contained.count(orbit_id) ? Content::All
                                                      : Content::None;
    case MaximalKind::CantorMaximal: {
      auto it = p.cantor_content.find(orbit_id);
      return it == p.cantor_content.end() ? Content::None : it->second;
    }
    case MaximalKind::NotMaximal: {
      auto it = p.nonmax_content.find(orbit_id);
      return it == p.nonmax_content.end() ? Content::None : it->second;
    }
  }
  return Content::None;
}

}  // namespace

ClopenProfile normalize_profile(const EndSpace& space, ClopenProfile p) {
  for (const auto& id : p.isolated_max_contained)
    require(space.orbit(id).maximal_kind == MaximalKind::IsolatedMaximal,
            ErrorKind::BadInput, "profile lists non-isolated orbit " + id);
  for (const auto& [id, c] : p.cantor_content)
    require(space.orbit(id).maximal_kind == MaximalKind::CantorMaximal,
            ErrorKind::BadInput, "profile cantor entry not Cantor: " + id);
  for (const auto& [id, c] : p.nonmax_content)
    require(space.orbit(id).maximal_kind == MaximalKind::NotMaximal,
            ErrorKind::BadInput, "profile nonmax entry not non-maximal: " + id);

  // A clopen set containing a point of an orbit contains points of every
  // orbit accumulating onto it; containing all of an orbit forces all of
  // every orbit it accumulates onto.
  for (const auto& o : space.orbits()) {
    Content c = content_of(space, p, o.id);
    if (c == Content::None) continue;
    for (const auto& z : space.below(o.id))
      require(content_of(space, p, z) != Content::None, ErrorKind::BadInput,
              "inconsistent profile: " + o.id + " touched but " + z +
                  " (accumulating onto it) untouched");
    if (c == Content::All) {
      for (const auto& up : space.reachable(o.id)) {
        if (up == o.id) continue;
        require(content_of(space, p, up) == Content::All, ErrorKind::BadInput,
                "inconsistent profile: all of " + o.id +
                    " contained but its accumulation target " + up +
                    " is not fully contained");
      }
    }
  }

  p.unique_acc_touched.clear();
  for (const auto& o : space.orbits()) {
    if (o.maximal_kind != MaximalKind::NotMaximal) continue;
    if (content_of(space, p, o.id) == Content::None) continue;
    if (auto m = space.derived_unique_max(o.id)) p.unique_acc_touched.insert(*m);
  }
  return p;
}

ClopenProfile profile_complement(const EndSpace& space,
                                 const ClopenProfile& p) {
  ClopenProfile c;
  for (const auto& o : space.orbits()) {
    switch (o.maximal_kind) {
      case MaximalKind::IsolatedMaximal:
        if (!p.isolated_max_contained.count(o.id))
          c.isolated_max_contained.insert(o.id);
        break;
      case MaximalKind::CantorMaximal:
        c.cantor_content[o.id] =
            complement_content(content_of(space, p, o.id));
        break;
      case MaximalKind::NotMaximal:
        c.nonmax_content[o.id] =
            complement_content(content_of(space, p, o.id));
        break;
    }
  }
  return normalize_profile(space, c);
}

ClopenProfile profile_union(const EndSpace& space, const ClopenProfile& a,
                            const ClopenProfile& b, bool exhaustive) {
  ClopenProfile u;
  for (const auto& o : space.orbits()) {
    Content ca = content_of(space, a, o.id);
    Content cb = content_of(space, b, o.id);
    require(!(ca == Content::All && cb != Content::None) &&
                !(cb == Content::All && ca != Content::None),
            ErrorKind::BadInput, "profiles not disjoint at orbit " + o.id);
    Content cu;
    if (ca == Content::None && cb == Content::None)
      cu = Content::None;
    else if (ca == Content::All || cb == Content::All)
      cu = Content::All;
    else if (ca == Content::Partial && cb == Content::Partial)
      cu = exhaustive ? Content::All : Content::Partial;
    else
      cu = Content::Partial;
    switch (o.maximal_kind) {
      case MaximalKind::IsolatedMaximal:
        if (cu != Content::None) u.isolated_max_contained.insert(o.id);
        break;
      case MaximalKind::CantorMaximal:
        u.cantor_content[o.id] = cu;
        break;
      case MaximalKind::NotMaximal:
        u.nonmax_content[o.id] = cu;
        break;
    }
  }
  return normalize_profile(space, u);
}

ClopenProfile full_profile(const EndSpace& space) {
  ClopenProfile p;
  for (const auto& o : space.orbits()) {
    switch (o.maximal_kind) {
      case MaximalKind::IsolatedMaximal:
        p.isolated_max_contained.insert(o.id);
        break;
      case MaximalKind::CantorMaximal:
        p.cantor_content[o.id] = Content::All;
        break;
      case MaximalKind::NotMaximal:
        p.nonmax_content[o.id] = Content::All;
        break;
    }
  }
  return normalize_profile(space, p);
}

int zeta_clopen(const ClopenProfile& profile, const EndSpace& space) {
  ClopenProfile p = normalize_profile(space, profile);
  int score = 0;
  for (const auto& [id, c] : p.cantor_content) {
    if (c == Content::Partial) score += 1;
    if (c == Content::All) score += 2;
  }
  // Isolated maximal ends are charged together with the orbits uniquely
  // accumulating onto them: the pair (A-block, P-block) is needed exactly
  // when a whole such orbit is inside; a point or partial chunks alone fit
  // a single stable neighborhood.
  for (const auto& o : space.orbits()) {
    if (o.maximal_kind != MaximalKind::IsolatedMaximal) continue;
    bool in_x = p.isolated_max_contained.count(o.id) > 0;
    bool any_all = false, any_touch = false;
    for (const auto& y : space.orbits()) {
      auto m = space.derived_unique_max(y.id);
      if (!m || *m != o.id) continue;
      auto it = p.nonmax_content.find(y.id);
      Content c = it == p.nonmax_content.end() ? Content::None : it->second;
      if (c == Content::All) any_all = true;
      if (c != Content::None) any_touch = true;
    }
    if (in_x)
      score += 1 + (any_all ? 1 : 0);
    else if (any_touch)
      score += 1;
  }
  return score;
}

namespace {

// Orbits whose points appear inside a given anchor block.
std::set<std::string> block_trace(const EndSpace& space,
                                  const AnchorBlock& b) {
  std::set<std::string> t;
  switch (b.kind) {
    case AnchorBlock::Kind::IsolatedMax:
    case AnchorBlock::Kind::CantorHalf:
      t.insert(b.orbit);
      for (const auto& z : space.below(b.orbit)) t.insert(z);
      break;
    case AnchorBlock::Kind::PBlock:
      for (const auto& o : space.orbits()) {
        auto m = space.derived_unique_max(o.id);
        if (m && *m == b.orbit) t.insert(o.id);
      }
      break;
  }
  return t;
}

// Can the profile content be carried into block b by an orbit-preserving
// homeomorphism? Isolated maximal points are immovable; full infinite orbits
// never fit a single block; partial chunks fit wherever the orbit shows up.
bool fits_block(const ClopenProfile& p, const EndSpace& space,
                const AnchorBlock& b, std::string* why) {
  auto trace = block_trace(space, b);
  for (const auto& id : p.isolated_max_contained) {
    if (!(b.kind == AnchorBlock::Kind::IsolatedMax && b.orbit == id)) {
      if (why) *why = "isolated maximal end " + id + " pinned outside " + b.name();
      return false;
    }
  }
  for (const auto& [id, c] : p.cantor_content) {
    if (c == Content::None) continue;
    if (c == Content::All) {
      if (why) *why = "full Cantor orbit " + id + " meets both halves";
      return false;
    }
    if (!(b.kind == AnchorBlock::Kind::CantorHalf && b.orbit == id)) {
      if (why) *why = "Cantor chunk of " + id + " cannot enter " + b.name();
      return false;
    }
  }
  for (const auto& [id, c] : p.nonmax_content) {
    if (c == Content::None) continue;
    if (c == Content::All) {
      if (why) *why = "full orbit " + id + " meets several blocks";
      return false;
    }
    if (!trace.count(id)) {
      if (why) *why = "orbit " + id + " has no points in " + b.name();
      return false;
    }
  }
  return true;
}

}  // namespace

SmallnessResult is_small(const ClopenProfile& profile, const EndSpace& space) {
  ClopenProfile p = normalize_profile(space, profile);
  if (p.empty()) return {true, "empty set"};
  int z = zeta_clopen(p, space);
  if (z >= 2) return {false, "zeta(X) = " + std::to_string(z) + " >= 2"};
  auto decomp = anchor_decomposition(space);
  std::string last_why;
  for (const auto& b : decomp.all_blocks()) {
    std::string why;
    if (fits_block(p, space, b, &why))
      return {true, "fits block " + b.name()};
    last_why = why;
  }
  return {false, "no block admits the content (" + last_why + ")"};
}

std::vector<AnchorBlock> fitting_blocks(const ClopenProfile& profile,
                                        const EndSpace& space) {
  ClopenProfile p = normalize_profile(space, profile);
  std::vector<AnchorBlock> out;
  for (const auto& b : anchor_decomposition(space).all_blocks()) {
    std::string why;
    if (fits_block(p, space, b, &why)) out.push_back(b);
  }
  return out;
}

bool block_nonplanar(const AnchorBlock& b, const EndSpace& space) {
  auto nonplanar = [&](const std::string& id) {
    return !space.orbit(id).planar;
  };
  switch (b.kind) {
    case AnchorBlock::Kind::IsolatedMax:
    case AnchorBlock::Kind::CantorHalf: {
      if (nonplanar(b.orbit)) return true;
      for (const auto& z : space.below(b.orbit))
        if (nonplanar(z)) return true;
      return false;
    }
    case AnchorBlock::Kind::PBlock: {
      for (const auto& o : space.orbits()) {
        auto m = space.derived_unique_max(o.id);
        if (m && *m == b.orbit && nonplanar(o.id)) return true;
      }
      return false;
    }
  }
  return false;
}

SmallnessResult is_small_oracle(const ClopenProfile& profile,
                                const EndSpace& space) {
  // Independent path: re-derive block traces from raw reachability and test
  // every piece of content directly, without the zeta shortcut.
  ClopenProfile p = normalize_profile(space, profile);
  if (p.empty()) return {true, "empty set"};
  auto decomp = anchor_decomposition(space);
  for (const auto& b : decomp.all_blocks()) {
    bool ok = true;
    for (const auto& o : space.orbits()) {
      Content c = content_of(space, p, o.id);
      if (c == Content::None) continue;
      bool orbit_in_block = false;
      switch (b.kind) {
        case AnchorBlock::Kind::IsolatedMax:
        case AnchorBlock::Kind::CantorHalf:
          orbit_in_block =
              (o.id == b.orbit) || space.reachable(o.id).count(b.orbit);
          break;
        case AnchorBlock::Kind::PBlock: {
          auto m = space.derived_unique_max(o.id);
          orbit_in_block = m && *m == b.orbit;
          break;
        }
      }
      if (!orbit_in_block) {
        ok = false;
        break;
      }
      // A single block never holds a whole infinite orbit; the only whole
      // orbits are isolated maximal singletons sitting in their own block.
      if (c == Content::All && o.maximal_kind != MaximalKind::IsolatedMaximal) {
        ok = false;
        break;
      }
      if (o.maximal_kind == MaximalKind::IsolatedMaximal &&
          !(b.kind == AnchorBlock::Kind::IsolatedMax && b.orbit == o.id)) {
        ok = false;
        break;
      }
    }
    if (ok) return {true, "embeds in " + b.name()};
  }
  return {false, "no embedding into a single block"};
}

int four_way_selector(const ClopenProfile& x1, const ClopenProfile& x2,
                      const ClopenProfile& x3, const ClopenProfile& x4,
                      const EndSpace& space) {
  require(zeta_surface(space) >= 5, ErrorKind::HypothesisViolation,
          "four_way_selector needs zeta(Sigma) >= 5");
  std::vector<ClopenProfile> xs = {
      normalize_profile(space, x1), normalize_profile(space, x2),
      normalize_profile(space, x3), normalize_profile(space, x4)};
  for (const auto& x : xs)
    require(!x.empty(), ErrorKind::HypothesisViolation,
            "four_way_selector: empty part in the decomposition");

  // Partition check, orbit by orbit.
  for (const auto& o : space.orbits()) {
    std::vector<Content> cs;
    for (const auto& x : xs) cs.push_back(content_of(space, x, o.id));
    int all = 0, partial = 0;
    for (auto c : cs) {
      if (c == Content::All) ++all;
      if (c == Content::Partial) ++partial;
    }
    bool ok;
    if (o.maximal_kind == MaximalKind::IsolatedMaximal)
      ok = (all == 1 && partial == 0);
    else
      ok = (all == 1 && partial == 0) || (all == 0 && partial >= 2);
    require(ok, ErrorKind::HypothesisViolation,
            "four profiles do not partition orbit " + o.id);
  }

  // Union of parts i,j inside the full partition: an orbit is exhausted by
  // the pair exactly when the other two parts miss it.
  auto pair_union = [&](int i, int j, int k, int l) {
    ClopenProfile u;
    for (const auto& o : space.orbits()) {
      Content ci = content_of(space, xs[i], o.id);
      Content cj = content_of(space, xs[j], o.id);
      Content ck = content_of(space, xs[k], o.id);
      Content cl = content_of(space, xs[l], o.id);
      bool touched = ci != Content::None || cj != Content::None;
      bool others_empty = ck == Content::None && cl == Content::None;
      Content cu = !touched ? Content::None
                            : (others_empty ? Content::All : Content::Partial);
      switch (o.maximal_kind) {
        case MaximalKind::IsolatedMaximal:
          if (touched) u.isolated_max_contained.insert(o.id);
          break;
        case MaximalKind::CantorMaximal:
          u.cantor_content[o.id] = cu;
          break;
        case MaximalKind::NotMaximal:
          u.nonmax_content[o.id] = cu;
          break;
      }
    }
    return normalize_profile(space, u);
  };
  require(!is_small(pair_union(0, 1, 2, 3), space).small,
          ErrorKind::HypothesisViolation, "X1 u X2 is small");
  require(!is_small(pair_union(2, 3, 0, 1), space).small,
          ErrorKind::HypothesisViolation, "X3 u X4 is small");

  for (int i = 0; i < 4; ++i) {
    if (!is_small(xs[i], space).small &&
        !is_small(profile_complement(space, xs[i]), space).small)
      return i + 1;
  }
  fail(ErrorKind::Internal,
       "no selectable part despite valid hypotheses; this contradicts the "
       "zeta subadditivity bound");
}

std::string ShiftTrack::name() const {
  if (kind == Kind::BetweenBlocks) return "O(" + block_a + "," + block_b + ")";
  return "O(" + block_a + ")";
}

ClopenProfile ShiftTrack::level_profile(const EndSpace& space) const {
  ClopenProfile p;
  for (const auto& id : carried_orbits) {
    const auto& o = space.orbit(id);
    if (o.maximal_kind == MaximalKind::CantorMaximal)
      p.cantor_content[id] = Content::Partial;
    else if (o.maximal_kind == MaximalKind::NotMaximal)
      p.nonmax_content[id] = Content::Partial;
  }
  return normalize_profile(space, p);
}

std::vector<ShiftTrack> shift_orbit_decomposition(
    const EndSpace& space, const AnchorDecomposition& decomp, int truncation) {
  std::vector<ShiftTrack> tracks;
  const auto& as = decomp.a_blocks;
  auto trace_nonmax = [&](const AnchorBlock& b) {
    std::set<std::string> t = space.below(b.orbit);
    return t;
  };
  for (size_t i = 0; i < as.size(); ++i) {
    for (size_t j = i + 1; j < as.size(); ++j) {
      std::set<std::string> shared;
      if (as[i].kind == AnchorBlock::Kind::CantorHalf &&
          as[j].kind == AnchorBlock::Kind::CantorHalf &&
          as[i].orbit == as[j].orbit) {
        // The two halves of one Cantor orbit share the orbit itself.
        shared.insert(as[i].orbit);
      }
      auto ti = trace_nonmax(as[i]);
      auto tj = trace_nonmax(as[j]);
      for (const auto& id : ti)
        if (tj.count(id)) shared.insert(id);
      if (shared.empty()) continue;
      ShiftTrack t;
      t.kind = ShiftTrack::Kind::BetweenBlocks;
      t.block_a = as[i].name();
      t.block_b = as[j].name();
      t.carried_orbits = shared;
      t.truncation = truncation;
      t.planar = true;
      for (const auto& id : shared)
        if (!space.orbit(id).planar) t.planar = false;
      tracks.push_back(std::move(t));
    }
  }
  for (const auto& pb : decomp.p_blocks) {
    std::set<std::string> carried;
    for (const auto& o : space.orbits()) {
      auto m = space.derived_unique_max(o.id);
      if (m && *m == pb.orbit) carried.insert(o.id);
    }
    if (carried.empty()) continue;
    ShiftTrack t;
    t.kind = ShiftTrack::Kind::UniqueAcc;
    t.block_a = AnchorBlock{AnchorBlock::Kind::IsolatedMax, pb.orbit, 0}.name();
    t.block_b = pb.name();
    t.carried_orbits = carried;
    t.truncation = truncation;
    t.planar = true;
    for (const auto& id : carried)
      if (!space.orbit(id).planar) t.planar = false;
    tracks.push_back(std::move(t));
  }
  std::sort(tracks.begin(), tracks.end(),
            [](const ShiftTrack& a, const ShiftTrack& b) {
              return a.name() < b.name();
            });
  return tracks;
}

}  // namespace cnp
