#pragma once

#include "fibcomm/entropy.hpp"
#include "fibcomm/lattice.hpp"
#include "fibcomm/norm.hpp"
#include "fibcomm/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fibcomm::commensurability {

inline constexpr std::size_t kDefaultOrbitBound = 4096;

/// Volume of the regular ideal tetrahedron, 3 * Lobachevsky(pi/3).
inline constexpr double kTetrahedronVolume = 1.0149416064096536;
/// Volume of the regular ideal octahedron, 8 * Lobachevsky(pi/4).
inline constexpr double kOctahedronVolume = 3.6638623767088760;
/// Minimal volume of an orientable cusped hyperbolic 3-manifold.
inline constexpr double kCuspedMinimumVolume = 2 * kTetrahedronVolume;
/// Minimal volume of an orientable hyperbolic 3-manifold with >= 2 cusps.
inline constexpr double kTwoCuspMinimumVolume = kOctahedronVolume;
/// Slack for volumes that are only known to ~10 decimals.
inline constexpr double kVolumeTol = 1e-6;

/// Induced action of manifold symmetries on H^1, by unimodular matrices acting
/// on coordinate columns.
class SymmetryAction {
public:
  SymmetryAction(std::size_t betti, std::vector<lattice::IntMatrix> generators,
                 std::size_t bound = kDefaultOrbitBound);

  std::size_t betti() const { return betti_; }
  const std::vector<lattice::IntMatrix>& generators() const { return generators_; }
  CohomologyClass apply(std::size_t generator, const CohomologyClass& omega) const;

private:
  std::size_t betti_;
  std::vector<lattice::IntMatrix> generators_;
};

/// target = sign * g_{word.back()} ... g_{word.front()} * source
struct OrbitWitness {
  std::vector<std::size_t> word;
  int sign = 1;

  friend bool operator==(const OrbitWitness&, const OrbitWitness&) = default;
};

CohomologyClass apply_witness(const SymmetryAction& action, const OrbitWitness& w,
                              const CohomologyClass& source);

/// Orbit of omega under the generated group and negation, with one witness
/// per element (shortest word found by breadth-first closure).
std::map<CohomologyClass, OrbitWitness> orbit_with_witnesses(const SymmetryAction& action,
                                                             const CohomologyClass& omega,
                                                             std::size_t bound = kDefaultOrbitBound);

/// Sorted orbit of omega, closed under negation.
std::vector<CohomologyClass> symmetry_orbit(const SymmetryAction& action, const CohomologyClass& omega,
                                            std::size_t bound = kDefaultOrbitBound);

struct ManifoldFlags {
  bool no_hidden_symmetries = false;
  bool all_fibrations_minimal = false;
  std::optional<double> volume;
  std::optional<std::int64_t> cusps;
};

enum class VerdictKind { Symmetric, NonCommensurable, Undetermined };

std::string_view to_string(VerdictKind kind);
VerdictKind verdict_kind_from_string(std::string_view s);

namespace reason {
inline constexpr std::string_view kOrbitIdentity = "orbit-identity";
inline constexpr std::string_view kOrbitSymmetry = "orbit-symmetry";
inline constexpr std::string_view kEntropyGap = "entropy-gap";
inline constexpr std::string_view kNoHiddenSymmetries = "no-hidden-symmetries";
inline constexpr std::string_view kUniqueMinimalElement = "unique-minimal-element";
inline constexpr std::string_view kNoRule = "no-rule-applies";
} // namespace reason

struct PairVerdict {
  VerdictKind kind = VerdictKind::Undetermined;
  std::string reason;
  std::optional<OrbitWitness> witness;
  std::optional<double> entropy1;
  std::optional<double> entropy2;

  std::optional<double> gap() const;

  friend bool operator==(const PairVerdict&, const PairVerdict&) = default;
};

/// First matching rule wins: symmetry orbit, entropy gap > 100 tol, no hidden
/// symmetries, every fibration minimal, otherwise undetermined. Never answers
/// "commensurable".
PairVerdict classify_pair(const ManifoldFlags& flags, const SymmetryAction& action,
                          const norm::NormBall& ball, const norm::FiberedFace& face1,
                          const norm::FiberedFace& face2, const CohomologyClass& omega1,
                          const CohomologyClass& omega2, double tol = entropy::kDefaultCompareTol,
                          double root_tol = laurent::kDefaultRootTol);

struct MinimalityGate {
  bool possible = true;
  std::string reason;
  double quotient_volume = 0;
  std::int64_t min_quotient_cusps = 0;

  friend bool operator==(const MinimalityGate&, const MinimalityGate&) = default;
};

/// Whether a manifold of this volume and cusp count can cover another by the
/// given degree, judged only by the minimal-volume bounds for cusped manifolds.
MinimalityGate volume_minimality_gate(double volume, std::int64_t cusps, std::int64_t degree);

} // namespace fibcomm::commensurability
