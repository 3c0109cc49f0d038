#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thickmix/numeric.hpp"
#include "thickmix/words.hpp"
#include "thickmix/zsets.hpp"

namespace thickmix::returnsets {

/// [word]_offset: points whose letters from `offset` on spell `word`.
/// Shifts act by n.[A]_k = [A]_{k-n}, from (Sx)_i = x_{i+1}.
struct CylinderSet {
  words::Block word;
  std::int64_t offset = 0;

  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;
};

CylinderSet shifted(const CylinderSet& c, std::int64_t n);

/// Longest factor of the Chacon system guaranteed to occur inside window(K):
/// every factor of length <= l_{K-1} + 1 already occurs in B_K.
std::int64_t window_reach(unsigned depth);

/// Smallest depth whose reach covers `span` letters; throws depth_exceeds_cap.
unsigned required_depth(std::int64_t span, unsigned cap = words::kDefaultDepthCap);

bool occurs(const CylinderSet& c, const words::Window& w);

enum class Method { brute_force, structured };

struct ReturnSetReport {
  zsets::ZSet set;
  Method method;
  std::vector<CylinderSet> cylinders;  // brute force: {a, b}
  unsigned level = 0;                  // structured: k
  std::int64_t shift = 0;              // structured: m
  unsigned depth = 0;                  // window depth, or truncation level
};

/// N(a, b) on `range` by scanning window(K): n belongs iff a placed at
/// a.offset - n and b placed at b.offset occur together somewhere.
ReturnSetReport return_set_bruteforce(const CylinderSet& a, const CylinderSet& b, unsigned K,
                                      const zsets::Interval& range);

/// N([B_k], m.[B_k]) = m + (H_k + H_{k+1} + ...), truncated at level K.
ReturnSetReport return_set_structured(unsigned k, std::int64_t m, unsigned K,
                                      const zsets::Interval& range);

/// Intersection of N([B_k], j.[B_k]) over |j| <= l_k.
ReturnSetReport script_m(unsigned k, unsigned K, const zsets::Interval& range);

/// m + a with a = l_k + ... + l_{k+(m-n)-1}; lies in both m.N and n.N.
/// Arguments are swapped when m < n.
Integer weak_mixing_witness(unsigned k, std::int64_t m, std::int64_t n);

struct BlockCover {
  unsigned level = 0;
  std::int64_t shift = 0;  // [A]_offset is contained in shift.[B_level]
  std::size_t occurrences_checked = 0;
  std::size_t occurrences_at_edge = 0;  // cover would leave the window; not checked
};

/// Searches levels 1..K and shifts for a block cover of every occurrence of
/// `a` in window(K). Throws empty_cylinder or no_cover_found.
BlockCover cylinder_to_block_cover(const CylinderSet& a, unsigned K);

/// g + N(a, b) == N(a, g.b) on `range`.
bool shift_identity_check(const CylinderSet& a, const CylinderSet& b, std::int64_t g, unsigned K,
                          const zsets::Interval& range);

// Thick-set constructions.

enum class ThickMethod { chacon_intervals, generic_basis };

enum class PieceSource {
  certified_search,  // run found inside the computed M_i
  closed_form_run,   // middle of interval_run(i, 2 l_i + i)
  basis_delta,       // delta_m and its gamma translates
};

struct ThickPiece {
  unsigned level = 0;
  zsets::ZSet elements{zsets::Interval::none()};
  PieceSource source = PieceSource::certified_search;
  /// Location of the piece as a run (chacon) or of delta_m (generic).
  zsets::Run run{0, 0};
  /// closed_form_run: a run contained in N([B_level],[B_level]) covering
  /// [x - l_level, x + l_level] for every element x.
  std::optional<zsets::Run> container;
  std::optional<Integer> delta;
  std::vector<Integer> gammas;
};

struct ThickSetConstruction {
  ThickMethod method = ThickMethod::chacon_intervals;
  unsigned depth = 0;
  std::vector<ThickPiece> pieces;
  zsets::ZSet union_set{zsets::Interval::none()};
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;
  std::vector<words::Block> basis;  // generic only
};

ThickSetConstruction build_thick_n_chacon(unsigned m_max, unsigned K);

/// 0, 1, -1, 2, -2, ...
Integer gamma_at(std::size_t i);

/// Nonempty cylinders [w]_0 with 1 <= |w| <= max_length, by (length, word).
std::vector<words::Block> cylinder_basis(unsigned max_length, unsigned K);

ThickSetConstruction build_thick_n_generic(unsigned basis_depth, unsigned m_max, unsigned K);

enum class Evidence { computed, run_containment, brute_force, undecided };

struct Membership {
  Evidence how = Evidence::undecided;
  bool member = false;
};

/// Whether x lies in M_level: by computing M_level at truncation K when x
/// is in certified territory, else through a container run of some piece of
/// level >= `level` (N_i is contained in N_level for i >= level).
Membership script_m_membership(const Integer& x, unsigned level, unsigned K,
                               const ThickSetConstruction& known);

struct MixingDefect {
  std::vector<Integer> outside;  // union elements not in N([B_k]_0, [B_k]_0)
  std::size_t brute_checked = 0;
  std::size_t certified = 0;
  std::size_t undecided = 0;
};

/// Elements of the construction outside N([B_k]_0, [B_k]_0): brute force
/// where the depth cap reaches, container runs beyond it.
MixingDefect mixing_defect(const ThickSetConstruction& c, unsigned k);

}  // namespace thickmix::returnsets
