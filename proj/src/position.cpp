#include "waring/position.hpp"

#include "waring/linalg.hpp"
#include "combinations.hpp"

namespace waring {

namespace {

using detail::first_combination;
using detail::next_combination;

Form form_from_integers(unsigned degree, const std::vector<Integer>& coeffs) {
  std::vector<Scalar> values(coeffs.begin(), coeffs.end());
  return Form(degree, std::move(values));
}

// Line through two distinct points: the cross product of their coordinates.
std::vector<Integer> line_through(const ProjPoint& p, const ProjPoint& q) {
  std::vector<Integer> l = {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
  make_primitive(l);
  return l;
}

bool on_line(const std::vector<Integer>& l, const ProjPoint& p) { return l[0] * p[0] + l[1] * p[1] + l[2] * p[2] == 0; }

// Some line through p: the line joining p with the first coordinate vertex
// different from it.
std::vector<Integer> some_line_through(const ProjPoint& p) {
  for (const ProjPoint& vertex : {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0)}) {
    if (!(vertex == p)) return line_through(p, vertex);
  }
  return {0, 0, 1};  // unreachable: p cannot equal both vertices
}

std::vector<std::size_t> vanishing_members(const Form& f, const PointSet& z) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (f.evaluate(z[i]) == 0) out.push_back(i);
  return out;
}

struct LineHit {
  std::size_t count = 0;
  std::vector<Integer> line;
};

LineHit best_line(const PointSet& z) {
  LineHit best;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      auto l = line_through(z[i], z[j]);
      std::size_t count = 0;
      for (const auto& p : z) count += on_line(l, p) ? 1 : 0;
      if (count > best.count) best = {count, std::move(l)};
    }
  }
  return best;
}

}  // namespace

CurveIncidence max_collinear(const PointSet& z) {
  CurveIncidence out;
  if (z.empty()) return out;
  if (z.size() == 1) {
    out.count = 1;
    out.members = {0};
    return out;
  }
  const LineHit hit = best_line(z);
  out.witness = form_from_integers(1, hit.line);
  out.members = vanishing_members(*out.witness, z);
  out.count = out.members.size();
  return out;
}

CurveIncidence max_on_conic(const PointSet& z) {
  CurveIncidence out;
  if (z.empty()) return out;
  if (z.size() <= 5) {
    out.count = z.size();
    out.witness = form_from_integers(2, kernel_basis(evaluation_matrix(z, 2)).front());
    for (std::size_t i = 0; i < z.size(); ++i) out.members.push_back(i);
    return out;
  }

  auto consider = [&](Form conic) {
    auto members = vanishing_members(conic, z);
    if (members.size() > out.count) {
      out.count = members.size();
      out.members = std::move(members);
      out.witness = std::move(conic);
    }
  };

  // Irreducible conics: each one through >= 5 points of Z is the unique conic
  // through any 5 of them.
  std::vector<std::size_t> combo = first_combination(5);
  do {
    const auto kernel = kernel_basis(evaluation_matrix(z.subset(combo), 2));
    if (kernel.size() == 1) consider(form_from_integers(2, kernel.front()));
  } while (next_combination(combo, z.size()));

  // Line pairs: a line L through two points of Z and the best line through
  // the points off L.
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const auto l = line_through(z[i], z[j]);
      std::vector<ProjPoint> off;
      for (const auto& p : z)
        if (!on_line(l, p)) off.push_back(p);
      std::vector<Integer> m;
      if (off.empty()) {
        m = l;
      } else if (off.size() == 1) {
        m = some_line_through(off.front());
      } else {
        m = best_line(PointSet(std::move(off))).line;
      }
      consider(multiply(form_from_integers(1, l), form_from_integers(1, m)));
    }
  }
  return out;
}

CubicContainment contained_in_cubic(const PointSet& z) {
  CubicContainment out;
  const auto kernel = kernel_basis(evaluation_matrix(z, 3));
  if (!kernel.empty()) {
    out.contained = true;
    out.witness = form_from_integers(3, kernel.front());
  }
  return out;
}

PositionReport analyze_position(const PointSet& z) {
  return {max_collinear(z), max_on_conic(z), contained_in_cubic(z)};
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::None: return "None";
    case FamilyKind::CollinearFamily: return "CollinearFamily";
    case FamilyKind::ConicFamily: return "ConicFamily";
  }
  return "Unknown";
}

FamilyObstruction family_obstruction(const PositionReport& report, unsigned n) {
  FamilyObstruction out;
  const std::size_t line_threshold = 5 + static_cast<std::size_t>(n);
  const std::size_t conic_threshold = 9 + 2 * static_cast<std::size_t>(n);
  if (report.collinear.count >= line_threshold) {
    out = {FamilyKind::CollinearFamily, line_threshold, report.collinear.members};
  } else if (report.conic.count >= conic_threshold) {
    out = {FamilyKind::ConicFamily, conic_threshold, report.conic.members};
  }
  return out;
}

FamilyObstruction family_obstruction(const PointSet& z, unsigned n) {
  PositionReport report;
  report.collinear = max_collinear(z);
  if (report.collinear.count < 5 + static_cast<std::size_t>(n)) report.conic = max_on_conic(z);
  return family_obstruction(report, n);
}

}  // namespace waring
