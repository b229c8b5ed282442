#include "fibcomm/descriptor.hpp"
#include "fibcomm/error.hpp"
#include "fibcomm_bundled_data.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace fibcomm::descriptor {

using json = nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& msg) {
  fail(ErrorCode::ParseError, "at " + (where.empty() ? std::string("/") : where) + ": " + msg);
}

[[noreturn]] void invalid(const std::string& invariant) {
  fail(ErrorCode::ValidationError, "descriptor violates: " + invariant);
}

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, "missing field \"" + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  parse_fail(where, "expected an integer");
}

Integer as_big(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  parse_fail(where, "expected an integer (JSON integer or decimal string)");
}

bool as_bool(const json& j, const std::string& where) {
  if (j.is_boolean()) return j.get<bool>();
  parse_fail(where, "expected a boolean");
}

std::string as_string(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  parse_fail(where, "expected a string");
}

IntVector as_int_vector(const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], child(where, i)));
  return out;
}

// Accepts either a bare value or {"value": ..., "source": ...}.
const json& unwrap_value(const json& j, const std::string& where, std::string& value_where) {
  if (j.is_object()) {
    value_where = child(where, "value");
    return field(j, "value", where);
  }
  value_where = where;
  return j;
}

void collect_sources(const json& j, const std::string& where, std::map<std::string, std::string>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "source") {
        if (!it->is_string()) parse_fail(child(where, "source"), "source annotation must be a string");
        out[where.empty() ? "/" : where] = it->get<std::string>();
      } else {
        collect_sources(*it, child(where, it.key()), out);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) collect_sources(j[i], child(where, i), out);
  }
}

bool same_face(const norm::FiberedFace& a, const norm::FiberedFace& b) {
  return a.id == b.id && a.supporting_vertex == b.supporting_vertex && a.fibered == b.fibered &&
         a.polynomial == b.polynomial;
}

} // namespace

laurent::LaurentPolynomial polynomial_from_json(const json& j, std::size_t arity, const std::string& where) {
  const json& terms = field(j, "terms", where);
  const std::string tw = child(where, "terms");
  if (!terms.is_array()) parse_fail(tw, "expected an array of terms");
  laurent::LaurentPolynomial p(arity);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string w = child(tw, i);
    IntVector e = as_int_vector(field(terms[i], "exp", w), child(w, "exp"));
    if (e.size() != arity)
      invalid("polynomial exponent length equals Betti number (" + child(w, "exp") + " has length " +
              std::to_string(e.size()) + ", expected " + std::to_string(arity) + ")");
    p.add_term(e, as_big(field(terms[i], "coeff", w), child(w, "coeff")));
  }
  return p;
}

json polynomial_to_json(const laurent::LaurentPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json coeff = c.fits_slong_p() ? json(static_cast<std::int64_t>(c.get_si())) : json(c.get_str());
    terms.push_back({{"exp", e}, {"coeff", coeff}});
  }
  return json{{"terms", terms}};
}

commensurability::SymmetryAction ManifoldDescriptor::symmetries() const {
  return commensurability::SymmetryAction(betti, symmetry_generators);
}

const norm::FiberedFace& ManifoldDescriptor::face(std::size_t id) const {
  for (const auto& f : faces)
    if (f.id == id) return f;
  fail(ErrorCode::InvalidArgument, "descriptor '" + name + "' has no face with id " + std::to_string(id));
}

const norm::FiberedFace* ManifoldDescriptor::fibered_face_containing(const CohomologyClass& omega) const {
  for (const auto& f : faces)
    if (f.fibered && norm::cone_contains(f, *ball, omega)) return &f;
  return nullptr;
}

bool ManifoldDescriptor::has_fibered_face() const {
  return std::any_of(faces.begin(), faces.end(), [](const auto& f) { return f.fibered; });
}

ManifoldDescriptor parse_descriptor(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) parse_fail("", "empty descriptor");
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!root.is_object()) parse_fail("", "descriptor must be a JSON object");

  ManifoldDescriptor d;
  collect_sources(root, "", d.sources);
  d.name = as_string(field(root, "name", ""), "/name");
  const std::int64_t betti = as_int(field(root, "betti", ""), "/betti");
  if (betti < 1) invalid("betti >= 1");
  d.betti = static_cast<std::size_t>(betti);

  if (root.contains("basis_labels")) {
    const json& labels = root["basis_labels"];
    if (!labels.is_array()) parse_fail("/basis_labels", "expected an array of strings");
    for (std::size_t i = 0; i < labels.size(); ++i)
      d.basis_labels.push_back(as_string(labels[i], child("/basis_labels", i)));
    if (d.basis_labels.size() != d.betti) invalid("basis_labels has exactly betti entries");
  } else {
    for (std::size_t i = 0; i < d.betti; ++i) d.basis_labels.push_back("e" + std::to_string(i + 1));
  }

  if (root.contains("volume")) {
    std::string vw;
    const json& v = unwrap_value(root["volume"], "/volume", vw);
    const std::string s = as_string(v, vw);
    char* end = nullptr;
    errno = 0;
    const double x = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno != 0) parse_fail(vw, "volume is not a decimal number");
    if (!(x > 0)) invalid("volume > 0");
    d.volume_text = s;
    d.flags.volume = x;
  }
  if (root.contains("cusps")) {
    std::string cw;
    const std::int64_t c = as_int(unwrap_value(root["cusps"], "/cusps", cw), cw);
    if (c < 0) invalid("cusps >= 0");
    d.flags.cusps = c;
  }
  if (root.contains("flags")) {
    const json& f = root["flags"];
    if (!f.is_object()) parse_fail("/flags", "expected an object");
    if (f.contains("no_hidden_symmetries"))
      d.flags.no_hidden_symmetries = as_bool(f["no_hidden_symmetries"], "/flags/no_hidden_symmetries");
    if (f.contains("all_fibrations_minimal"))
      d.flags.all_fibrations_minimal = as_bool(f["all_fibrations_minimal"], "/flags/all_fibrations_minimal");
  }

  if (root.contains("symmetries")) {
    const json& gens = field(root["symmetries"], "generators", "/symmetries");
    if (!gens.is_array()) parse_fail("/symmetries/generators", "expected an array of matrices");
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string w = child("/symmetries/generators", g);
      if (!gens[g].is_array()) parse_fail(w, "expected a matrix (array of rows)");
      std::vector<IntVector> rows;
      for (std::size_t r = 0; r < gens[g].size(); ++r) rows.push_back(as_int_vector(gens[g][r], child(w, r)));
      if (rows.size() != d.betti || std::any_of(rows.begin(), rows.end(), [&](const IntVector& r) {
            return r.size() != d.betti;
          }))
        invalid("symmetry generator " + std::to_string(g) + " is betti x betti");
      d.symmetry_generators.push_back(lattice::IntMatrix::from_rows(rows));
    }
  }
  (void)d.symmetries(); // unimodular + finite, throws ValidationError

  const json& ns = field(root, "norm_source", "");
  const std::string kind = as_string(field(ns, "kind", "/norm_source"), "/norm_source/kind");
  try {
    if (kind == "newton") {
      d.norm_kind = NormSourceKind::Newton;
      d.norm_polynomial = polynomial_from_json(field(ns, "polynomial", "/norm_source"), d.betti,
                                               "/norm_source/polynomial");
      if (d.norm_polynomial->is_zero()) invalid("norm polynomial is nonzero");
      d.ball = norm::norm_from_newton(*d.norm_polynomial);
    } else if (kind == "dual_vertices") {
      d.norm_kind = NormSourceKind::DualVertices;
      const json& vs = field(ns, "vertices", "/norm_source");
      if (!vs.is_array()) parse_fail("/norm_source/vertices", "expected an array of vectors");
      for (std::size_t i = 0; i < vs.size(); ++i) {
        IntVector v = as_int_vector(vs[i], child("/norm_source/vertices", i));
        if (v.size() != d.betti) invalid("dual vertex " + std::to_string(i) + " has length betti");
        d.declared_vertices.push_back(std::move(v));
      }
      d.ball = norm::NormBall(d.betti, d.declared_vertices);
    } else {
      parse_fail("/norm_source/kind", "expected \"newton\" or \"dual_vertices\", got \"" + kind + "\"");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError) throw;
    invalid(std::string("norm ball is well formed (") + e.what() + ")");
  }

  // Symmetries of the manifold preserve the norm: S^T maps D onto D.
  const auto& dual = d.ball->dual_vertices();
  for (std::size_t g = 0; g < d.symmetry_generators.size(); ++g) {
    const auto t = d.symmetry_generators[g].transpose();
    for (const auto& v : dual) {
      BigVector bv;
      for (auto c : v) bv.emplace_back(static_cast<long>(c));
      const BigVector img = t.apply(bv);
      IntVector iv;
      for (const auto& x : img) iv.push_back(to_int64(x));
      if (!std::binary_search(dual.begin(), dual.end(), iv))
        invalid("symmetry generator " + std::to_string(g) + " preserves the norm ball");
    }
  }

  if (!d.ball->is_degenerate()) d.faces = norm::top_faces(*d.ball);
  if (root.contains("faces")) {
    const json& fs = root["faces"];
    if (!fs.is_array()) parse_fail("/faces", "expected an array of faces");
    std::set<std::size_t> ids;
    std::set<IntVector> claimed;
    std::vector<norm::FiberedFace> listed;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const std::string w = child("/faces", i);
      const std::int64_t id = as_int(field(fs[i], "id", w), child(w, "id"));
      if (id < 0) invalid("face ids are nonnegative");
      if (!ids.insert(static_cast<std::size_t>(id)).second) invalid("face ids are unique");
      IntVector v = as_int_vector(field(fs[i], "dual_vertex", w), child(w, "dual_vertex"));
      auto match = std::find_if(d.faces.begin(), d.faces.end(),
                                [&](const auto& f) { return f.supporting_vertex == v; });
      if (match == d.faces.end())
        invalid("face " + std::to_string(id) + " is supported by a vertex of the norm ball");
      if (!claimed.insert(v).second) invalid("each top face is listed at most once");
      norm::FiberedFace f;
      f.id = static_cast<std::size_t>(id);
      f.supporting_vertex = v;
      f.fibered = fs[i].contains("fibered") ? as_bool(fs[i]["fibered"], child(w, "fibered")) : false;
      if (fs[i].contains("polynomial"))
        f.polynomial = polynomial_from_json(fs[i]["polynomial"], d.betti, child(w, "polynomial"));
      listed.push_back(std::move(f));
    }
    std::size_t next_id = ids.empty() ? 0 : *ids.rbegin() + 1;
    std::vector<norm::FiberedFace> merged;
    for (auto& f : d.faces) {
      auto it = std::find_if(listed.begin(), listed.end(),
                             [&](const auto& l) { return l.supporting_vertex == f.supporting_vertex; });
      if (it != listed.end()) {
        merged.push_back(*it);
      } else {
        f.id = next_id++;
        merged.push_back(f);
      }
    }
    d.faces = std::move(merged);
  }

  if (root.contains("named_classes")) {
    const json& nc = root["named_classes"];
    if (!nc.is_object()) parse_fail("/named_classes", "expected an object");
    for (auto it = nc.begin(); it != nc.end(); ++it) {
      const std::string w = child("/named_classes", it.key());
      IntVector v = as_int_vector(it->is_object() ? field(*it, "value", w) : *it,
                                  it->is_object() ? child(w, "value") : w);
      if (v.size() != d.betti)
        invalid("named class '" + it.key() + "' has length betti (got " + std::to_string(v.size()) + ", expected " +
                std::to_string(d.betti) + ")");
      d.named_classes.emplace(it.key(), CohomologyClass(std::move(v)));
    }
  }
  return d;
}

ManifoldDescriptor load_descriptor(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open descriptor file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_descriptor(buf.str());
  } catch (const Error& e) {
    fail(e.code(), path.string() + ": " + e.what());
  }
}

json to_json(const ManifoldDescriptor& d) {
  auto annotate = [&](json obj, const std::string& where) {
    if (auto it = d.sources.find(where); it != d.sources.end()) obj["source"] = it->second;
    return obj;
  };
  json root;
  root["name"] = d.name;
  root["betti"] = d.betti;
  root["basis_labels"] = d.basis_labels;
  if (d.volume_text) root["volume"] = annotate(json{{"value", *d.volume_text}}, "/volume");
  if (d.flags.cusps) root["cusps"] = annotate(json{{"value", *d.flags.cusps}}, "/cusps");
  root["flags"] = annotate(json{{"no_hidden_symmetries", d.flags.no_hidden_symmetries},
                                {"all_fibrations_minimal", d.flags.all_fibrations_minimal}},
                           "/flags");
  json gens = json::array();
  for (const auto& g : d.symmetry_generators) {
    json rows = json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(to_int64(g(r, c)));
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  root["symmetries"] = annotate(json{{"generators", gens}}, "/symmetries");
  if (d.norm_kind == NormSourceKind::Newton) {
    root["norm_source"] = annotate(
        json{{"kind", "newton"}, {"polynomial", polynomial_to_json(*d.norm_polynomial)}}, "/norm_source");
  } else {
    root["norm_source"] =
        annotate(json{{"kind", "dual_vertices"}, {"vertices", d.declared_vertices}}, "/norm_source");
  }
  json faces = json::array();
  std::size_t i = 0;
  for (const auto& f : d.faces) {
    json jf{{"id", f.id}, {"dual_vertex", f.supporting_vertex}, {"fibered", f.fibered}};
    if (f.polynomial) jf["polynomial"] = polynomial_to_json(*f.polynomial);
    faces.push_back(annotate(jf, "/faces/" + std::to_string(i++)));
  }
  root["faces"] = faces;
  json named = json::object();
  for (const auto& [label, c] : d.named_classes) named[label] = c.coords();
  root["named_classes"] = named;
  if (auto it = d.sources.find("/"); it != d.sources.end()) root["source"] = it->second;
  return root;
}

bool operator==(const ManifoldDescriptor& a, const ManifoldDescriptor& b) {
  if (a.faces.size() != b.faces.size()) return false;
  for (std::size_t i = 0; i < a.faces.size(); ++i)
    if (!same_face(a.faces[i], b.faces[i])) return false;
  return a.name == b.name && a.betti == b.betti && a.basis_labels == b.basis_labels &&
         a.volume_text == b.volume_text && a.flags.no_hidden_symmetries == b.flags.no_hidden_symmetries &&
         a.flags.all_fibrations_minimal == b.flags.all_fibrations_minimal && a.flags.cusps == b.flags.cusps &&
         a.symmetry_generators == b.symmetry_generators && a.norm_kind == b.norm_kind &&
         a.norm_polynomial == b.norm_polynomial && a.declared_vertices == b.declared_vertices &&
         a.named_classes == b.named_classes && a.ball == b.ball;
}

std::vector<std::string> bundled_names() {
  std::vector<std::string> out;
  for (const auto& entry : bundled::kDescriptors) out.emplace_back(entry.name);
  return out;
}

std::string_view bundled_text(std::string_view name) {
  for (const auto& entry : bundled::kDescriptors)
    if (entry.name == name) return entry.text;
  fail(ErrorCode::InvalidArgument, "no bundled descriptor named '" + std::string(name) + "'");
}

ManifoldDescriptor bundled_descriptor(std::string_view name) { return parse_descriptor(bundled_text(name)); }

} // namespace fibcomm::descriptor
