#include "waring/identify.hpp"

#include "waring/error.hpp"
#include "waring/hilbert.hpp"
#include "waring/linalg.hpp"

namespace waring {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::RankDeficient: return "RankDeficient";
    case VerdictKind::IdentifiableSmallRank: return "IdentifiableSmallRank";
    case VerdictKind::IdentifiableTerracini: return "IdentifiableTerracini";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

unsigned validate_instance(const Instance& inst) {
  if (inst.degree < 8 || inst.degree % 2 != 0) {
    throw Error(ErrorKind::UnsupportedDegree, "degree " + std::to_string(inst.degree) + " is not of the form 8 + 2n");
  }
  const unsigned n = (inst.degree - 8) / 2;
  if (inst.points.size() != inst.coefficients.size()) {
    throw Error(ErrorKind::InvalidInstance, std::to_string(inst.points.size()) + " points but " +
                                                std::to_string(inst.coefficients.size()) + " coefficients");
  }
  if (inst.points.empty()) throw Error(ErrorKind::InvalidInstance, "empty decomposition");
  const std::size_t limit = 3 * static_cast<std::size_t>(n) + 11;
  if (inst.points.size() > limit) {
    throw Error(ErrorKind::LengthOutOfRange,
                "r = " + std::to_string(inst.points.size()) + " exceeds 3n + 11 = " + std::to_string(limit));
  }
  static_cast<void>(PointSet(inst.points));  // throws DuplicatePoint
  for (std::size_t i = 0; i < inst.coefficients.size(); ++i) {
    if (inst.coefficients[i] == 0) {
      throw Error(ErrorKind::ZeroCoefficient, "coefficient " + std::to_string(i) + " is zero");
    }
  }
  return n;
}

namespace {

NonRedundancy non_redundant_impl(const Instance& inst, bool serial) {
  Matrix md(0, basis_size(inst.degree));
  for (const auto& p : inst.points) md.append_row(power_form(p, inst.degree).coeffs());
  const RankResult rr = serial ? rank_serial(md) : rank(md);
  return {rr.rank == inst.length(), rr.rank, rr.ops};
}

}  // namespace

NonRedundancy non_redundant(const Instance& inst) { return non_redundant_impl(inst, false); }

Verdict identify(const Instance& inst, const IdentifyOptions& options) {
  Verdict v;
  v.n = validate_instance(inst);
  v.degree = inst.degree;
  v.r = inst.length();

  if (options.diagnostics) {
    v.position = analyze_position(PointSet(inst.points));
    v.obstruction = family_obstruction(*v.position, v.n);
  }

  // S0
  const NonRedundancy nr = non_redundant_impl(inst, options.serial);
  v.rank_of_md = nr.rank;
  v.s0_ops = nr.ops;
  v.total_ops = nr.ops;
  if (!nr.non_redundant) {
    v.kind = VerdictKind::RankDeficient;
    v.notes.push_back("v_d(A) is linearly dependent (rank " + std::to_string(nr.rank) + " < r = " +
                      std::to_string(v.r) + "), so A is redundant and T has a decomposition of length < r");
    return v;
  }

  // S1
  if (v.r <= 4 + static_cast<std::size_t>(v.n)) {
    v.kind = VerdictKind::IdentifiableSmallRank;
    v.notes.push_back("r <= (d+1)/2: a non-redundant decomposition this short is minimal and unique");
    return v;
  }

  // S2
  v.terracini = options.serial ? terracini_dimension_serial(inst) : terracini_dimension(inst);
  v.total_ops += v.terracini->ops;
  if (v.terracini->full) {
    v.kind = VerdictKind::IdentifiableTerracini;
    v.notes.push_back("Terracini space has the expected dimension 3r - 1: A is minimal and T is identifiable");
  } else {
    v.kind = VerdictKind::Inconclusive;
    v.notes.push_back("Terracini space is deficient (q = " + std::to_string(v.terracini->q) + " < 3r = " +
                      std::to_string(3 * v.r) + "); uniqueness of A is undecided, identifiability is not refuted");
    if (v.obstruction && v.obstruction->kind != FamilyKind::None) {
      v.notes.push_back(std::string(to_string(v.obstruction->kind)) + ": " +
                        std::to_string(v.obstruction->witness.size()) +
                        " points in special position (threshold " + std::to_string(v.obstruction->threshold) +
                        ") account for the deficiency");
    }
  }
  return v;
}

}  // namespace waring
