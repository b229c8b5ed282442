#include "fibcomm/cli.hpp"
#include "fibcomm/commensurability.hpp"
#include "fibcomm/covers.hpp"
#include "fibcomm/descriptor.hpp"
#include "fibcomm/entropy.hpp"
#include "fibcomm/error.hpp"
#include "fibcomm/lattice.hpp"
#include "fibcomm/norm.hpp"
#include "fibcomm/payload.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace fibcomm;

namespace {

// JSON crosses the boundary as text; the Python side decodes it.
using Json = nlohmann::json;

descriptor::ManifoldDescriptor manifold(const std::string& name_or_path) {
  const bool path = name_or_path.find('/') != std::string::npos || name_or_path.ends_with(".json");
  return path ? descriptor::load_descriptor(name_or_path) : descriptor::bundled_descriptor(name_or_path);
}

const norm::FiberedFace& face_of(const descriptor::ManifoldDescriptor& d, const CohomologyClass& w) {
  const auto* f = d.fibered_face_containing(w);
  if (!f) fail(ErrorCode::NotInCone, w.to_string() + " lies in no fibered cone");
  return *f;
}

std::vector<std::vector<std::string>> matrix_rows(const lattice::IntMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).get_str());
  return out;
}

} // namespace

PYBIND11_MODULE(_fibcomm, m) {
  static py::exception<Error> error(m, "FibcommError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(to_string(e.code())) + ": " + e.what();
      PyErr_SetString(error.ptr(), msg.c_str());
    }
  });

  m.def("run", [](const std::vector<std::string>& args) {
    const auto o = cli::run_command(args);
    std::string out = o.json_output ? o.report.payload.dump(2) : o.report.table;
    return std::make_tuple(o.exit_code, out, o.diagnostic);
  });

  m.def("bundled_names", &descriptor::bundled_names);

  m.def("descriptor_json", [](const std::string& name) { return descriptor::to_json(manifold(name)).dump(); });

  m.def("norm", [](const std::string& name, const std::vector<std::int64_t>& w) {
    return evaluate_norm(manifold(name).norm_ball(), CohomologyClass(w)).get_str();
  });

  m.def("entropy", [](const std::string& name, const std::vector<std::int64_t>& w) {
    const auto d = manifold(name);
    const CohomologyClass c(w);
    return Json(entropy::normalized_entropy(d.norm_ball(), face_of(d, c), c)).dump();
  });

  m.def("classify", [](const std::string& name, const std::vector<std::int64_t>& a,
                       const std::vector<std::int64_t>& b) {
    const auto d = manifold(name);
    const CohomologyClass x(a), y(b);
    return Json(commensurability::classify_pair(d.flags, d.symmetries(), d.norm_ball(), face_of(d, x),
                                                face_of(d, y), x, y))
        .dump();
  });

  m.def("volume_gate", [](double volume, std::int64_t cusps, std::int64_t degree) {
    return Json(commensurability::volume_minimality_gate(volume, cusps, degree)).dump();
  });

  m.def("analyze_cover", [](const std::vector<std::int64_t>& w1, const std::vector<std::int64_t>& w2,
                            std::int64_t chi1, std::int64_t chi2, std::int64_t n, bool conjugate) {
    const covers::FibrationPair p{CohomologyClass(w1), CohomologyClass(w2), chi1, chi2, conjugate};
    return Json(covers::analyze_cover(p, n)).dump();
  });

  m.def("smith_normal_form", [](const std::vector<std::vector<std::int64_t>>& rows) {
    const auto s = lattice::smith_normal_form(lattice::IntMatrix::from_rows(rows));
    return std::make_tuple(matrix_rows(s.left), matrix_rows(s.diag), matrix_rows(s.right));
  });
}
