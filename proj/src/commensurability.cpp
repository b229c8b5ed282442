#include "fibcomm/commensurability.hpp"
#include "fibcomm/error.hpp"

#include <cmath>
#include <deque>

namespace fibcomm::commensurability {

SymmetryAction::SymmetryAction(std::size_t betti, std::vector<lattice::IntMatrix> generators,
                               std::size_t bound)
    : betti_(betti), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.rows() != betti || g.cols() != betti)
      fail(ErrorCode::ValidationError,
           "symmetry generator " + std::to_string(i) + " is not " + std::to_string(betti) + "x" +
               std::to_string(betti));
    if (abs(lattice::determinant(g)) != 1)
      fail(ErrorCode::ValidationError,
           "symmetry generator " + std::to_string(i) + " is not unimodular (|det| != 1)");
  }
  // Finite group: the orbit of every basis vector must close up below the bound.
  for (std::size_t i = 0; i < betti; ++i) {
    IntVector e(betti, 0);
    e[i] = 1;
    try {
      orbit_with_witnesses(*this, CohomologyClass(e), bound);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::OrbitOverflow) throw;
      fail(ErrorCode::ValidationError, "symmetry group does not appear finite: " + std::string(err.what()));
    }
  }
}

CohomologyClass SymmetryAction::apply(std::size_t generator, const CohomologyClass& omega) const {
  if (omega.size() != betti_) fail(ErrorCode::DimensionMismatch, "class length differs from Betti number");
  const auto& g = generators_.at(generator);
  IntVector out(betti_);
  for (std::size_t r = 0; r < betti_; ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < betti_; ++c) acc += g(r, c) * static_cast<long>(omega[c]);
    out[r] = to_int64(acc);
  }
  return CohomologyClass(std::move(out));
}

CohomologyClass apply_witness(const SymmetryAction& action, const OrbitWitness& w,
                              const CohomologyClass& source) {
  CohomologyClass x = source;
  for (auto g : w.word) x = action.apply(g, x);
  return w.sign < 0 ? -x : x;
}

std::map<CohomologyClass, OrbitWitness> orbit_with_witnesses(const SymmetryAction& action,
                                                             const CohomologyClass& omega,
                                                             std::size_t bound) {
  if (omega.size() != action.betti())
    fail(ErrorCode::DimensionMismatch, "class length differs from Betti number");
  std::map<CohomologyClass, OrbitWitness> seen;
  std::deque<CohomologyClass> queue;
  auto visit = [&](const CohomologyClass& x, OrbitWitness w) {
    if (seen.contains(x)) return;
    if (seen.size() >= bound)
      fail(ErrorCode::OrbitOverflow, "orbit exceeds " + std::to_string(bound) + " elements");
    seen.emplace(x, std::move(w));
    queue.push_back(x);
  };
  visit(omega, OrbitWitness{{}, 1});
  visit(-omega, OrbitWitness{{}, -1});
  while (!queue.empty()) {
    const CohomologyClass x = queue.front();
    queue.pop_front();
    const OrbitWitness wx = seen.at(x);
    for (std::size_t g = 0; g < action.generators().size(); ++g) {
      // Undo the sign, apply g, reapply the sign: keeps the witness a plain word.
      const CohomologyClass base = wx.sign < 0 ? -x : x;
      const CohomologyClass y = action.apply(g, base);
      OrbitWitness wy = wx;
      wy.word.push_back(g);
      visit(wx.sign < 0 ? -y : y, wy);
      wy.sign = -wy.sign;
      visit(wx.sign < 0 ? y : -y, wy);
    }
  }
  return seen;
}

std::vector<CohomologyClass> symmetry_orbit(const SymmetryAction& action, const CohomologyClass& omega,
                                            std::size_t bound) {
  std::vector<CohomologyClass> out;
  for (const auto& [c, w] : orbit_with_witnesses(action, omega, bound)) out.push_back(c);
  return out;
}

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
  case VerdictKind::Symmetric: return "Symmetric";
  case VerdictKind::NonCommensurable: return "NonCommensurable";
  case VerdictKind::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

VerdictKind verdict_kind_from_string(std::string_view s) {
  if (s == "Symmetric") return VerdictKind::Symmetric;
  if (s == "NonCommensurable") return VerdictKind::NonCommensurable;
  if (s == "Undetermined") return VerdictKind::Undetermined;
  fail(ErrorCode::ParseError, "unknown verdict kind '" + std::string(s) + "'");
}

std::optional<double> PairVerdict::gap() const {
  if (!entropy1 || !entropy2) return std::nullopt;
  return std::fabs(*entropy1 - *entropy2);
}

namespace {

void require_fibration_class(const norm::NormBall& ball, const norm::FiberedFace& face,
                             const CohomologyClass& omega) {
  if (!lattice::is_primitive(omega))
    fail(ErrorCode::NotPrimitive, "class " + omega.to_string() + " is not primitive");
  if (!face.fibered)
    fail(ErrorCode::NotInCone, "face " + std::to_string(face.id) + " is not fibered");
  if (!norm::cone_contains(face, ball, omega))
    fail(ErrorCode::NotInCone,
         "class " + omega.to_string() + " is not inside the cone of face " + std::to_string(face.id));
}

} // namespace

PairVerdict classify_pair(const ManifoldFlags& flags, const SymmetryAction& action,
                          const norm::NormBall& ball, const norm::FiberedFace& face1,
                          const norm::FiberedFace& face2, const CohomologyClass& omega1,
                          const CohomologyClass& omega2, double tol, double root_tol) {
  require_fibration_class(ball, face1, omega1);
  require_fibration_class(ball, face2, omega2);

  PairVerdict v;
  const auto orbit = orbit_with_witnesses(action, omega1);
  if (auto it = orbit.find(omega2); it != orbit.end()) {
    v.kind = VerdictKind::Symmetric;
    v.reason = (omega2 == omega1 || omega2 == -omega1) ? reason::kOrbitIdentity : reason::kOrbitSymmetry;
    v.witness = it->second;
    return v;
  }

  const auto r1 = entropy::normalized_entropy(ball, face1, omega1, root_tol);
  const auto r2 = entropy::normalized_entropy(ball, face2, omega2, root_tol);
  v.entropy1 = r1.entropy;
  v.entropy2 = r2.entropy;
  if (std::fabs(r1.entropy - r2.entropy) > 100 * tol) {
    v.kind = VerdictKind::NonCommensurable;
    v.reason = reason::kEntropyGap;
  } else if (flags.no_hidden_symmetries) {
    v.kind = VerdictKind::NonCommensurable;
    v.reason = reason::kNoHiddenSymmetries;
  } else if (flags.all_fibrations_minimal) {
    v.kind = VerdictKind::NonCommensurable;
    v.reason = reason::kUniqueMinimalElement;
  } else {
    v.kind = VerdictKind::Undetermined;
    v.reason = reason::kNoRule;
  }
  return v;
}

MinimalityGate volume_minimality_gate(double volume, std::int64_t cusps, std::int64_t degree) {
  if (!(volume > 0) || !std::isfinite(volume)) fail(ErrorCode::InvalidArgument, "volume must be positive");
  if (cusps < 0) fail(ErrorCode::InvalidArgument, "cusp count must be nonnegative");
  if (degree < 2) fail(ErrorCode::InvalidArgument, "covering degree must be at least 2");

  MinimalityGate g;
  g.quotient_volume = volume / static_cast<double>(degree);
  g.min_quotient_cusps = (cusps + degree - 1) / degree;
  if (cusps == 0) {
    g.possible = true;
    g.reason = "closed-no-bound";
  } else if (g.quotient_volume < kCuspedMinimumVolume - kVolumeTol) {
    g.possible = false;
    g.reason = "below-cusped-minimum-2V0";
  } else if (g.min_quotient_cusps >= 2 && g.quotient_volume < kTwoCuspMinimumVolume - kVolumeTol) {
    g.possible = false;
    g.reason = "below-two-cusp-minimum-V8";
  } else {
    g.possible = true;
    g.reason = "no-bound-violated";
  }
  return g;
}

} // namespace fibcomm::commensurability
