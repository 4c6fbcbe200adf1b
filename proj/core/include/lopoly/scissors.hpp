#pragma once

// Piecewise-unimodular dissection of P_G induced by a sequence of weighted NNI
// moves, and its lattice-point verification against P_{G'}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lopoly/graph.hpp"
#include "lopoly/nni.hpp"
#include "lopoly/polytope.hpp"
#include "lopoly/weighted_nni.hpp"

namespace lopoly {

enum class Sense { weak_ge, strict_lt };

/// normal . w >= 0 or normal . w < 0
struct HalfSpace {
  IntVector normal;
  Sense sense = Sense::weak_ge;

  bool holds(const RatVector& w) const;
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

struct Piece {
  std::vector<HalfSpace> region;
  UnimodularMap map;
  std::vector<PieceCase> cases;  // one per move

  bool claims(const RatVector& w) const;
};

struct Decomposition {
  Graph source;
  Graph target;
  MoveSequence move_trace;
  std::vector<NniSite> sites;
  std::vector<Piece> pieces;
};

/// Splits P_G move by move along the pulled-back case hyperplanes, dropping
/// children that miss P_G (exact LP at t = 1). The last step applies the edge
/// relabel of `seq`, so maps land in the target's coordinates.
Decomposition build_decomposition(const Graph& g, const MoveSequence& seq);

/// Index of the piece whose half-open region contains w, if any.
std::optional<std::size_t> locate_piece(const Decomposition& d, const RatVector& w);

/// Image of w (which must lie in tP_G) under its piece's map.
RatVector evaluate_piecewise(const Decomposition& d, const RatVector& w, const Rational& t = 1);

/// Weight replay of the move trace followed by the relabel.
RatVector replay_point(const Decomposition& d, const RatVector& w);

struct DilationCheck {
  std::int64_t t = 0;
  std::uint64_t source_points = 0;
  std::uint64_t target_points = 0;
  std::vector<std::uint64_t> per_piece;
};

struct VerifyReport {
  std::vector<DilationCheck> dilations;
  std::vector<std::string> failures;  // each with a witness
  bool determinants_ok = true;
  bool ok() const { return failures.empty() && determinants_ok; }
};

VerifyReport verify_decomposition(const Decomposition& d, const std::vector<std::int64_t>& dilations);

}  // namespace lopoly
