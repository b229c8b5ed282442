#pragma once

#include "fibcomm/commensurability.hpp"
#include "fibcomm/laurent.hpp"
#include "fibcomm/norm.hpp"
#include "fibcomm/types.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibcomm::descriptor {

enum class NormSourceKind { Newton, DualVertices };

/// Everything the toolkit knows about one fibered manifold. Built only by
/// parse_descriptor, which checks every invariant eagerly.
struct ManifoldDescriptor {
  std::string name;
  std::size_t betti = 0;
  std::vector<std::string> basis_labels;
  std::optional<std::string> volume_text; // decimal string as written
  commensurability::ManifoldFlags flags;
  std::vector<lattice::IntMatrix> symmetry_generators;
  NormSourceKind norm_kind = NormSourceKind::DualVertices;
  std::optional<laurent::LaurentPolynomial> norm_polynomial;
  std::vector<IntVector> declared_vertices;
  std::map<std::string, CohomologyClass> named_classes;
  /// Provenance annotations keyed by JSON pointer of the annotated object.
  std::map<std::string, std::string> sources;

  // Derived data.
  std::optional<norm::NormBall> ball;
  std::vector<norm::FiberedFace> faces;

  const norm::NormBall& norm_ball() const { return *ball; }
  commensurability::SymmetryAction symmetries() const;
  const norm::FiberedFace& face(std::size_t id) const;
  /// First fibered face whose open cone contains omega.
  const norm::FiberedFace* fibered_face_containing(const CohomologyClass& omega) const;
  bool has_fibered_face() const;
};

ManifoldDescriptor parse_descriptor(std::string_view text);
ManifoldDescriptor load_descriptor(const std::filesystem::path& path);

/// Canonical JSON form; parse_descriptor(to_json(d).dump()) reproduces d.
nlohmann::json to_json(const ManifoldDescriptor& d);

nlohmann::json polynomial_to_json(const laurent::LaurentPolynomial& p);
laurent::LaurentPolynomial polynomial_from_json(const nlohmann::json& j, std::size_t arity,
                                                const std::string& where = "");

/// Names of the descriptors compiled into the toolkit.
std::vector<std::string> bundled_names();
std::string_view bundled_text(std::string_view name);
ManifoldDescriptor bundled_descriptor(std::string_view name);

bool operator==(const ManifoldDescriptor& a, const ManifoldDescriptor& b);

} // namespace fibcomm::descriptor
