#pragma once

#include "waring/form.hpp"
#include "waring/hilbert.hpp"

#include <optional>
#include <vector>

namespace waring {

/// Largest number of points of Z on one curve of a given kind, together with
/// the curve and the indices of the points on it.
struct CurveIncidence {
  std::size_t count = 0;
  std::optional<Form> witness;
  std::vector<std::size_t> members;
};

/// Maximum number of collinear points. The witness line is reported once
/// count >= 2; a single point has no witness.
CurveIncidence max_collinear(const PointSet& z);

/// Maximum number of points on one conic, reducible conics included.
///
/// Irreducible conics through >= 5 points of Z are found as the unique conic
/// through some 5-subset. Reducible conics are line pairs: the best pair is a
/// line L together with the best line through the points off L.
CurveIncidence max_on_conic(const PointSet& z);

struct CubicContainment {
  bool contained = false;
  std::optional<Form> witness;
};

/// Whether Z lies on a cubic, i.e. h_Z(3) < 10.
CubicContainment contained_in_cubic(const PointSet& z);

struct PositionReport {
  CurveIncidence collinear;
  CurveIncidence conic;
  CubicContainment cubic;
};

PositionReport analyze_position(const PointSet& z);

enum class FamilyKind { None, CollinearFamily, ConicFamily };

std::string_view to_string(FamilyKind kind);

/// Special positions that force a positive-dimensional family of
/// decompositions in degree 8 + 2n: at least 5 + n collinear points, or at
/// least 9 + 2n points on a conic. Lines are checked first.
struct FamilyObstruction {
  FamilyKind kind = FamilyKind::None;
  std::size_t threshold = 0;
  std::vector<std::size_t> witness;
};

FamilyObstruction family_obstruction(const PointSet& z, unsigned n);
FamilyObstruction family_obstruction(const PositionReport& report, unsigned n);

}  // namespace waring
