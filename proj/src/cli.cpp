#include "fibcomm/cli.hpp"
#include "fibcomm/commensurability.hpp"
#include "fibcomm/covers.hpp"
#include "fibcomm/descriptor.hpp"
#include "fibcomm/entropy.hpp"
#include "fibcomm/error.hpp"
#include "fibcomm/lattice.hpp"
#include "fibcomm/norm.hpp"
#include "fibcomm/payload.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

namespace fibcomm::cli {

using json = nlohmann::json;
using descriptor::ManifoldDescriptor;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(trim(cur));
  if (!s.empty() && s.back() == ',') out.push_back("");
  return out;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

std::string vector_text(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + rational_text(v[i]);
  return out + ")";
}

std::string vector_text(const IntVector& v) { return CohomologyClass(v).to_string(); }

std::string render_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) width[c] = head[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      s += r[c];
      if (c + 1 < r.size()) s += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(head);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows) line(r);
  return out.str();
}

// ---------------------------------------------------------------------------
// argument parsing helpers

struct Context {
  ManifoldDescriptor desc;
  double root_tol = laurent::kDefaultRootTol;
  double compare_tol = entropy::kDefaultCompareTol;
};

std::optional<CohomologyClass> named(const Context& ctx, std::string tok) {
  bool negate = false;
  if (!tok.empty() && tok.front() == '-' && ctx.desc.named_classes.contains(tok.substr(1))) {
    negate = true;
    tok = tok.substr(1);
  }
  auto it = ctx.desc.named_classes.find(tok);
  if (it == ctx.desc.named_classes.end()) return std::nullopt;
  return negate ? -it->second : it->second;
}

void check_length(const Context& ctx, std::size_t n, const std::string& tok) {
  if (n != ctx.desc.betti)
    fail(ErrorCode::DimensionMismatch, "class '" + tok + "' has " + std::to_string(n) + " coordinates but " +
                                           ctx.desc.name + " has Betti number " + std::to_string(ctx.desc.betti));
}

CohomologyClass parse_class(const Context& ctx, const std::string& raw) {
  const std::string tok = trim(raw);
  if (auto c = named(ctx, tok)) return *c;
  IntVector v;
  for (const auto& part : split_commas(tok)) {
    std::int64_t x = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw UsageError("cannot read class '" + raw + "': expected comma-separated integers or a named class");
    v.push_back(x);
  }
  check_length(ctx, v.size(), tok);
  return CohomologyClass(std::move(v));
}

RationalVector parse_point(const Context& ctx, const std::string& raw) {
  const std::string tok = trim(raw);
  if (auto c = named(ctx, tok)) return to_rational(*c);
  RationalVector v;
  for (const auto& part : split_commas(tok)) {
    Rational q;
    if (part.empty() || q.set_str(part, 10) != 0 || sgn(q.get_den()) == 0)
      throw UsageError("cannot read point '" + raw + "': expected comma-separated rationals like 1/2,1");
    q.canonicalize();
    v.push_back(q);
  }
  check_length(ctx, v.size(), tok);
  return v;
}

Rational parse_rational(const std::string& raw) {
  Rational q;
  if (q.set_str(trim(raw), 10) != 0 || sgn(q.get_den()) == 0)
    throw UsageError("cannot read rational '" + raw + "'");
  q.canonicalize();
  return q;
}

const norm::FiberedFace& fibered_face_for(const Context& ctx, const CohomologyClass& omega) {
  if (!ctx.desc.has_fibered_face())
    fail(ErrorCode::ValidationError, "descriptor '" + ctx.desc.name + "' has no fibered face");
  if (omega.is_zero()) fail(ErrorCode::ZeroClass, "the zero class is not a fibration");
  if (!lattice::is_primitive(omega))
    fail(ErrorCode::NotPrimitive, "class " + omega.to_string() + " is not primitive");
  const auto* face = ctx.desc.fibered_face_containing(omega);
  if (!face) fail(ErrorCode::NotInCone, "class " + omega.to_string() + " lies in no open fibered cone");
  return *face;
}

const norm::FiberedFace& face_by_id(const Context& ctx, std::int64_t id) {
  if (id < 0) throw UsageError("face ids are nonnegative");
  return ctx.desc.face(static_cast<std::size_t>(id));
}

json base_payload(const Context& ctx, const std::string& command) {
  return json{{"command", command}, {"manifold", ctx.desc.name}};
}

std::string witness_text(const commensurability::OrbitWitness& w) {
  std::string s = w.sign < 0 ? "-" : "+";
  if (w.word.empty()) return s + "id";
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) s += "g" + std::to_string(*it);
  return s;
}

// ---------------------------------------------------------------------------
// commands

Report cmd_norm_eval(const Context& ctx, const std::string& cls) {
  const auto p = parse_point(ctx, cls);
  const Rational n = norm::evaluate_norm(ctx.desc.norm_ball(), p);
  Report r;
  r.payload = base_payload(ctx, "norm eval");
  r.payload["class"] = rational_vector_to_json(p);
  r.payload["norm"] = rational_to_json(n);
  r.payload["norm_value"] = n.get_d();
  r.table = render_table({"class", "norm"}, {{vector_text(p), rational_text(n)}});
  return r;
}

Report cmd_faces(const Context& ctx) {
  Report r;
  r.payload = base_payload(ctx, "faces");
  json faces = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : ctx.desc.faces) {
    json jf{{"id", f.id}, {"dual_vertex", f.supporting_vertex}, {"fibered", f.fibered},
            {"polynomial", f.polynomial.has_value()}};
    std::string verts = "unbounded";
    try {
      json jv = json::array();
      verts.clear();
      for (const auto& v : norm::face_vertices(f, ctx.desc.norm_ball())) {
        jv.push_back(rational_vector_to_json(v));
        verts += (verts.empty() ? "" : " ") + vector_text(v);
      }
      jf["vertices"] = jv;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnboundedCone) throw;
      jf["vertices"] = nullptr;
      verts = "unbounded";
    }
    faces.push_back(jf);
    rows.push_back({std::to_string(f.id), vector_text(f.supporting_vertex), f.fibered ? "yes" : "no",
                    f.polynomial ? "yes" : "no", verts});
  }
  r.payload["count"] = ctx.desc.faces.size();
  r.payload["faces"] = faces;
  r.table = render_table({"face", "dual vertex", "fibered", "polynomial", "vertices"}, rows) +
            std::to_string(ctx.desc.faces.size()) + " top faces\n";
  return r;
}

Report cmd_enumerate(const Context& ctx, std::int64_t face_id, std::int64_t max_norm) {
  const auto& face = face_by_id(ctx, face_id);
  const auto classes = norm::enumerate_primitive_classes(face, ctx.desc.norm_ball(), max_norm);
  Report r;
  r.payload = base_payload(ctx, "enumerate");
  r.payload["face"] = face.id;
  r.payload["max_norm"] = max_norm;
  json items = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : classes) {
    const Rational n = norm::evaluate_norm(ctx.desc.norm_ball(), c);
    items.push_back({{"class", c}, {"norm", rational_to_json(n)}});
    rows.push_back({c.to_string(), rational_text(n)});
  }
  r.payload["classes"] = items;
  r.table = render_table({"class", "norm"}, rows);
  return r;
}

std::vector<std::string> record_row(const entropy::EntropyRecord& rec) {
  return {rec.cls.to_string(), rational_text(rec.norm), format_number(rec.dilatation), format_number(rec.entropy)};
}

Report cmd_entropy(const Context& ctx, const std::string& cls) {
  const auto omega = parse_class(ctx, cls);
  const auto& face = fibered_face_for(ctx, omega);
  const auto rec = entropy::normalized_entropy(ctx.desc.norm_ball(), face, omega, ctx.root_tol);
  Report r;
  r.payload = base_payload(ctx, "entropy");
  r.payload["face"] = face.id;
  r.payload["record"] = rec;
  auto row = record_row(rec);
  row.insert(row.begin() + 1, std::to_string(face.id));
  r.table = render_table({"class", "face", "norm", "dilatation", "entropy"}, {row});
  return r;
}

std::string write_svg(const std::vector<std::pair<double, double>>& pts, const std::string& from,
                      const std::string& to) {
  const double w = 640, h = 400, ml = 70, mr = 20, mt = 30, mb = 50;
  double lo = pts.front().second, hi = lo;
  for (const auto& p : pts) lo = std::min(lo, p.second), hi = std::max(hi, p.second);
  if (hi - lo < 1e-12) hi = lo + 1e-12;
  auto sx = [&](double s) { return ml + s * (w - ml - mr); };
  auto sy = [&](double y) { return h - mb - (y - lo) / (hi - lo) * (h - mt - mb); };
  std::ostringstream o;
  o << std::setprecision(6);
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
    << ' ' << h << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\"" << h - mb
    << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
  o << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (const auto& p : pts) o << sx(p.first) << ',' << sy(p.second) << ' ';
  o << "\"/>\n";
  for (const auto& p : pts) o << "<circle cx=\"" << sx(p.first) << "\" cy=\"" << sy(p.second) << "\" r=\"2.5\"/>\n";
  o << "<text x=\"" << ml << "\" y=\"" << h - 15 << "\" font-size=\"12\">" << from << "</text>\n";
  o << "<text x=\"" << w - mr << "\" y=\"" << h - 15 << "\" font-size=\"12\" text-anchor=\"end\">" << to
    << "</text>\n";
  o << "<text x=\"" << ml - 5 << "\" y=\"" << sy(hi) + 4 << "\" font-size=\"11\" text-anchor=\"end\">"
    << format_number(hi) << "</text>\n";
  o << "<text x=\"" << ml - 5 << "\" y=\"" << sy(lo) + 4 << "\" font-size=\"11\" text-anchor=\"end\">"
    << format_number(lo) << "</text>\n";
  o << "<text x=\"" << w / 2 << "\" y=\"" << mt - 10 << "\" font-size=\"13\" text-anchor=\"middle\">1/ent along "
    << from << " to " << to << "</text>\n";
  o << "</svg>\n";
  return o.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
  if (!out) fail(ErrorCode::InvalidArgument, "failed writing " + path);
}

struct TableArgs {
  std::int64_t face = 0;
  std::int64_t max_norm = 0;
  std::string csv, svg, from, to;
  std::int64_t samples = 16;
};

Report cmd_entropy_table(const Context& ctx, const TableArgs& a) {
  const auto& face = face_by_id(ctx, a.face);
  if (!face.fibered) fail(ErrorCode::NotInCone, "face " + std::to_string(face.id) + " is not fibered");
  const auto& ball = ctx.desc.norm_ball();
  std::vector<entropy::EntropyRecord> records;
  for (const auto& c : norm::enumerate_primitive_classes(face, ball, a.max_norm))
    records.push_back(entropy::normalized_entropy(ball, face, c, ctx.root_tol));

  Report r;
  r.payload = base_payload(ctx, "entropy-table");
  r.payload["face"] = face.id;
  r.payload["max_norm"] = a.max_norm;
  r.payload["records"] = records;
  std::vector<std::vector<std::string>> rows;
  for (const auto& rec : records) rows.push_back(record_row(rec));
  r.table = render_table({"class", "norm", "dilatation", "entropy"}, rows);

  r.payload["csv"] = nullptr;
  if (!a.csv.empty()) {
    std::string text = "class,norm,dilatation,entropy\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) text += (i ? "," : "") + csv_field(row[i]);
      text += '\n';
    }
    write_file(a.csv, text);
    r.payload["csv"] = a.csv;
    r.table += "wrote " + a.csv + "\n";
  }

  r.payload["svg"] = nullptr;
  if (!a.svg.empty()) {
    if (a.from.empty() || a.to.empty()) throw UsageError("--svg needs --from and --to");
    if (a.samples < 2) throw UsageError("--samples must be at least 2");
    const auto p = entropy::rescale_to_face(ball, parse_point(ctx, a.from));
    const auto q = entropy::rescale_to_face(ball, parse_point(ctx, a.to));
    std::vector<std::pair<double, double>> pts;
    json samples = json::array();
    for (std::int64_t k = 0; k < a.samples; ++k) {
      const Rational s(k, a.samples - 1);
      RationalVector m(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) m[i] = (1 - s) * p[i] + s * q[i];
      const double inv = 1.0 / entropy::ent_at_face_point(ball, face, entropy::rescale_to_face(ball, m), ctx.root_tol);
      pts.emplace_back(s.get_d(), inv);
      samples.push_back({{"s", rational_to_json(s)}, {"inverse_entropy", inv}});
    }
    write_file(a.svg, write_svg(pts, vector_text(p), vector_text(q)));
    r.payload["svg"] = a.svg;
    r.payload["samples"] = samples;
    r.table += "wrote " + a.svg + "\n";
  }
  return r;
}

Report cmd_concavity(const Context& ctx, std::int64_t face_id, const std::string& p_raw, const std::string& q_raw,
                     const std::string& s_raw) {
  const auto& face = face_by_id(ctx, face_id);
  const auto p = parse_point(ctx, p_raw);
  const auto q = parse_point(ctx, q_raw);
  const Rational s = parse_rational(s_raw);
  const auto probe = entropy::concavity_probe(ctx.desc.norm_ball(), face, p, q, s, ctx.compare_tol, ctx.root_tol);
  Report r;
  r.payload = base_payload(ctx, "concavity");
  r.payload["face"] = face.id;
  r.payload["p"] = rational_vector_to_json(p);
  r.payload["q"] = rational_vector_to_json(q);
  r.payload["s"] = rational_to_json(s);
  r.payload["probe"] = probe;
  r.table = render_table({"lhs", "rhs", "margin", "strict"},
                         {{format_number(probe.lhs), format_number(probe.rhs), format_number(probe.margin()),
                           probe.strict ? "yes" : "no"}});
  return r;
}

Report cmd_classify(const Context& ctx, const std::string& a_raw, const std::string& b_raw) {
  const auto a = parse_class(ctx, a_raw);
  const auto b = parse_class(ctx, b_raw);
  const auto& fa = fibered_face_for(ctx, a);
  const auto& fb = fibered_face_for(ctx, b);
  const auto v = commensurability::classify_pair(ctx.desc.flags, ctx.desc.symmetries(), ctx.desc.norm_ball(), fa, fb,
                                                 a, b, ctx.compare_tol, ctx.root_tol);
  Report r;
  r.payload = base_payload(ctx, "classify");
  r.payload["a"] = a;
  r.payload["b"] = b;
  r.payload["verdict"] = v;
  auto opt = [](const std::optional<double>& x) { return x ? format_number(*x) : std::string("-"); };
  r.table = render_table({"a", "b", "verdict", "reason", "witness", "entropy a", "entropy b", "gap"},
                         {{a.to_string(), b.to_string(), std::string(commensurability::to_string(v.kind)), v.reason,
                           v.witness ? witness_text(*v.witness) : "-", opt(v.entropy1), opt(v.entropy2),
                           opt(v.gap())}});
  return r;
}

covers::FibrationPair make_pair(const Context& ctx, const std::string& w1, const std::string& w2,
                                bool assume_conjugate, bool& from_orbit) {
  covers::FibrationPair pair;
  pair.omega1 = parse_class(ctx, w1);
  pair.omega2 = parse_class(ctx, w2);
  auto chi = [&](const CohomologyClass& c) {
    const Rational n = norm::evaluate_norm(ctx.desc.norm_ball(), c);
    if (n.get_den() != 1) fail(ErrorCode::Internal, "norm of an integral class is not an integer");
    return -to_int64(n.get_num());
  };
  pair.chi1 = chi(pair.omega1);
  pair.chi2 = chi(pair.omega2);
  from_orbit = false;
  if (pair.omega1.size() == pair.omega2.size()) {
    const auto orbit = commensurability::orbit_with_witnesses(ctx.desc.symmetries(), pair.omega1);
    from_orbit = orbit.contains(pair.omega2);
  }
  pair.conjugate_monodromies = from_orbit || assume_conjugate;
  pair.validate();
  return pair;
}

json pair_json(const covers::FibrationPair& p, bool from_orbit) {
  return {{"omega1", p.omega1}, {"omega2", p.omega2}, {"chi1", p.chi1}, {"chi2", p.chi2},
          {"conjugate_monodromies", p.conjugate_monodromies},
          {"conjugacy_source", p.conjugate_monodromies ? (from_orbit ? "symmetry-orbit" : "assumed") : "none"}};
}

std::vector<std::string> cover_row(const covers::CoverReport& c) {
  return {std::to_string(c.degree), std::to_string(c.components), std::to_string(c.component_degree),
          std::to_string(c.component_chi), c.fibers_homeomorphic ? "yes" : "no",
          c.nonsymmetric_commensurable ? "yes" : "no"};
}

const std::vector<std::string> kCoverHead = {"n", "components", "component degree", "component chi",
                                             "homeomorphic", "nonsymmetric commensurable"};

Report cmd_cover(const Context& ctx, const std::string& w1, const std::string& w2, std::int64_t n,
                 bool assume_conjugate) {
  bool from_orbit = false;
  const auto pair = make_pair(ctx, w1, w2, assume_conjugate, from_orbit);
  const auto rep = covers::analyze_cover(pair, n);
  Report r;
  r.payload = base_payload(ctx, "cover");
  r.payload["pair"] = pair_json(pair, from_orbit);
  r.payload["report"] = rep;
  r.table = "m = " + rep.m.get_str() + "\n" + render_table(kCoverHead, {cover_row(rep)});
  return r;
}

Report cmd_cover_search(const Context& ctx, const std::string& w1, const std::string& w2, std::int64_t n_max,
                        bool assume_conjugate) {
  bool from_orbit = false;
  const auto pair = make_pair(ctx, w1, w2, assume_conjugate, from_orbit);
  const auto reports = covers::search_nonsymmetric(pair, n_max);
  Report r;
  r.payload = base_payload(ctx, "cover-search");
  r.payload["pair"] = pair_json(pair, from_orbit);
  r.payload["m"] = covers::kernel_gcd(pair).get_str();
  r.payload["n_max"] = n_max;
  r.payload["reports"] = reports;
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : reports) rows.push_back(cover_row(c));
  r.table = "m = " + covers::kernel_gcd(pair).get_str() + "\n" + render_table(kCoverHead, rows);
  return r;
}

Report cmd_minimality(const Context& ctx, std::int64_t degree, std::optional<std::string> volume_text,
                      std::optional<std::int64_t> cusps) {
  double volume = 0;
  if (volume_text) {
    char* end = nullptr;
    volume = std::strtod(volume_text->c_str(), &end);
    if (volume_text->empty() || end != volume_text->c_str() + volume_text->size())
      throw UsageError("cannot read volume '" + *volume_text + "'");
  } else if (ctx.desc.flags.volume) {
    volume = *ctx.desc.flags.volume;
  } else {
    fail(ErrorCode::ValidationError, "descriptor '" + ctx.desc.name + "' has no volume; pass --volume");
  }
  if (!cusps) {
    if (!ctx.desc.flags.cusps)
      fail(ErrorCode::ValidationError, "descriptor '" + ctx.desc.name + "' has no cusp count; pass --cusps");
    cusps = *ctx.desc.flags.cusps;
  }
  const auto g = commensurability::volume_minimality_gate(volume, *cusps, degree);
  Report r;
  r.payload = base_payload(ctx, "minimality");
  r.payload["volume"] = volume;
  r.payload["cusps"] = *cusps;
  r.payload["degree"] = degree;
  r.payload["gate"] = g;
  r.table = render_table({"volume", "cusps", "degree", "quotient volume", "possible", "reason"},
                         {{format_number(volume), std::to_string(*cusps), std::to_string(degree),
                           format_number(g.quotient_volume), g.possible ? "yes" : "no", g.reason}});
  return r;
}

Report cmd_descriptor(const Context& ctx) {
  Report r;
  r.payload = descriptor::to_json(ctx.desc);
  r.table = r.payload.dump(2) + "\n";
  return r;
}

} // namespace

std::string format_number(double x) {
  std::ostringstream o;
  o << std::setprecision(12) << x;
  return o.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Outcome run_command(const std::vector<std::string>& args) {
  CLI::App app{"Fibered faces, normalized entropy and fibered commensurability", "fibcomm"};
  app.require_subcommand(1);

  std::string manifold = "six22";
  std::string descriptor_path;
  bool json_output = false;
  Context ctx;
  app.add_option("--manifold", manifold, "bundled descriptor name")->capture_default_str();
  app.add_option("--descriptor", descriptor_path, "descriptor JSON file (overrides --manifold)");
  app.add_flag("--json", json_output, "print the machine payload instead of the table");
  app.add_option("--tol", ctx.root_tol, "root isolation tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--compare-tol", ctx.compare_tol, "entropy comparison tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::function<Report()> action;
  std::string cls, a, b, p, q, s, w1, w2;
  std::int64_t face = 0, max_norm = 0, n = 0, n_max = 0, degree = 0;
  bool assume_conjugate = false;
  std::optional<std::string> volume;
  std::optional<std::int64_t> cusps;
  TableArgs table;

  auto* norm_cmd = app.add_subcommand("norm", "Thurston norm operations");
  norm_cmd->require_subcommand(1);
  auto* eval = norm_cmd->add_subcommand("eval", "evaluate the norm of a class");
  eval->add_option("--class", cls, "comma-separated rationals or a named class")->required();
  eval->callback([&] { action = [&] { return cmd_norm_eval(ctx, cls); }; });

  app.add_subcommand("faces", "list the top-dimensional faces of the norm ball")->callback([&] {
    action = [&] { return cmd_faces(ctx); };
  });

  auto* en = app.add_subcommand("enumerate", "primitive classes in a face's open cone");
  en->add_option("--face", face)->required();
  en->add_option("--max-norm", max_norm)->required();
  en->callback([&] { action = [&] { return cmd_enumerate(ctx, face, max_norm); }; });

  auto* ent = app.add_subcommand("entropy", "dilatation and normalized entropy of a class");
  ent->add_option("--class", cls)->required();
  ent->callback([&] { action = [&] { return cmd_entropy(ctx, cls); }; });

  auto* et = app.add_subcommand("entropy-table", "entropy records for every class up to a norm bound");
  et->add_option("--face", table.face)->required();
  et->add_option("--max-norm", table.max_norm)->required();
  et->add_option("--csv", table.csv, "write the records as CSV");
  et->add_option("--svg", table.svg, "write an SVG of 1/ent along --from..--to");
  et->add_option("--from", table.from);
  et->add_option("--to", table.to);
  et->add_option("--samples", table.samples)->capture_default_str();
  et->callback([&] { action = [&] { return cmd_entropy_table(ctx, table); }; });

  auto* cc = app.add_subcommand("concavity", "probe strict concavity of 1/ent on a face");
  cc->add_option("--face", face)->required();
  cc->add_option("--p", p)->required();
  cc->add_option("--q", q)->required();
  cc->add_option("--s", s)->required();
  cc->callback([&] { action = [&] { return cmd_concavity(ctx, face, p, q, s); }; });

  auto* cl = app.add_subcommand("classify", "symmetric / non-commensurable / undetermined");
  cl->add_option("--a", a)->required();
  cl->add_option("--b", b)->required();
  cl->callback([&] { action = [&] { return cmd_classify(ctx, a, b); }; });

  auto* cv = app.add_subcommand("cover", "preimage of the second fiber in the degree-n cyclic cover");
  cv->add_option("--w1", w1)->required();
  cv->add_option("--w2", w2)->required();
  cv->add_option("--n", n)->required();
  cv->add_flag("--assume-conjugate", assume_conjugate, "take the monodromies as conjugate");
  cv->callback([&] { action = [&] { return cmd_cover(ctx, w1, w2, n, assume_conjugate); }; });

  auto* cs = app.add_subcommand("cover-search", "degrees whose cover gives commensurable non-symmetric fibrations");
  cs->add_option("--w1", w1)->required();
  cs->add_option("--w2", w2)->required();
  cs->add_option("--n-max", n_max)->required();
  cs->add_flag("--assume-conjugate", assume_conjugate, "take the monodromies as conjugate");
  cs->callback([&] { action = [&] { return cmd_cover_search(ctx, w1, w2, n_max, assume_conjugate); }; });

  auto* mn = app.add_subcommand("minimality", "volume bounds on covering a smaller manifold");
  mn->add_option("--degree", degree)->required();
  mn->add_option("--volume", volume, "override the descriptor volume");
  mn->add_option("--cusps", cusps, "override the descriptor cusp count");
  mn->callback([&] { action = [&] { return cmd_minimality(ctx, degree, volume, cusps); }; });

  app.add_subcommand("descriptor", "print the descriptor in canonical JSON")->callback([&] {
    action = [&] { return cmd_descriptor(ctx); };
  });

  Outcome out;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out.report.table = app.help();
    return out;
  } catch (const CLI::CallForAllHelp&) {
    out.report.table = app.help("", CLI::AppFormatMode::All);
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = kExitUsage;
    out.diagnostic = std::string("usage error: ") + e.what() + "\nrun with --help for the grammar";
    return out;
  }
  out.json_output = json_output;

  try {
    ctx.desc = descriptor_path.empty() ? descriptor::bundled_descriptor(manifold)
                                       : descriptor::load_descriptor(descriptor_path);
    out.report = action();
  } catch (const UsageError& e) {
    out.exit_code = kExitUsage;
    out.diagnostic = std::string("usage error: ") + e.what();
    out.report.payload = {{"error", {{"code", "UsageError"}, {"message", e.what()}}}};
  } catch (const Error& e) {
    out.exit_code = kExitDomainError;
    out.diagnostic = "error[" + std::string(to_string(e.code())) + "]: " + e.what();
    out.report.payload = {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}};
  }
  return out;
}

} // namespace fibcomm::cli
