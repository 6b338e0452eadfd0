#pragma once

#include "waring/instance.hpp"
#include "waring/position.hpp"
#include "waring/terracini.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace waring {

enum class VerdictKind { RankDeficient, IdentifiableSmallRank, IdentifiableTerracini, Inconclusive };

std::string_view to_string(VerdictKind kind);

/// Outcome of the identifiability pipeline. The pipeline is one-sided: it
/// certifies identifiability or gives up, it never claims the opposite.
struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  unsigned degree = 0;
  unsigned n = 0;
  std::size_t r = 0;
  std::size_t rank_of_md = 0;
  std::optional<TerraciniReport> terracini;
  std::optional<PositionReport> position;
  std::optional<FamilyObstruction> obstruction;
  std::vector<std::string> notes;
  OpCounter s0_ops;
  OpCounter total_ops;

  bool identifiable() const noexcept {
    return kind == VerdictKind::IdentifiableSmallRank || kind == VerdictKind::IdentifiableTerracini;
  }
};

/// Checks d = 8 + 2n, matching list lengths, r <= 3n + 11, distinct points
/// and nonzero coefficients. Returns n.
unsigned validate_instance(const Instance& inst);

struct NonRedundancy {
  bool non_redundant = false;
  std::size_t rank = 0;
  OpCounter ops;
};

/// Rank of M_d, the matrix with rows power_form(P_i, d).
NonRedundancy non_redundant(const Instance& inst);

struct IdentifyOptions {
  /// Attach the position report and family obstruction to the verdict.
  bool diagnostics = false;
  /// Use the single-threaded kernels (benchmarks time one thread per trial).
  bool serial = false;
};

/// S0: rank of M_d below r means A is redundant.
/// S1: r <= 4 + n is identifiable outright.
/// S2: the Terracini test decides between identifiable and inconclusive.
Verdict identify(const Instance& inst, const IdentifyOptions& options = {});

}  // namespace waring
