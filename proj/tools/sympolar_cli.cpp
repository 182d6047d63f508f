// JSON-in/JSON-out front end for the sympolar library.
//
// Exit codes: 0 = success or positive verdict, 1 = valid input with a
// negative verdict (not a blob, not quantized, not pure, verify failure),
// 2 = invalid input or internal failure (error object on stdout).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympolar/capacity.hpp"
#include "sympolar/ellipsoid.hpp"
#include "sympolar/gaussian.hpp"
#include "sympolar/matcore.hpp"
#include "sympolar/oracle.hpp"
#include "sympolar/symplectic.hpp"
#include "sympolar/verify.hpp"

using nlohmann::json;
using namespace sympolar;

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double tol = 1e-9;
  std::optional<double> hbar;  // overrides the document value
  std::uint64_t seed = 0;
  std::string level = "full";
  std::string plane = "X";
};

json read_document(const std::string& path) {
  try {
    if (path == "-") {
      return json::parse(std::cin);
    }
    std::ifstream in(path);
    if (!in) throw CliError("cannot open input file: " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw CliError(std::string("malformed JSON: ") + e.what());
  }
}

Mat parse_matrix(const json& rows, const std::string& field) {
  if (!rows.is_array() || rows.empty()) {
    throw CliError("field '" + field + "' must be a non-empty array of rows");
  }
  const int r = static_cast<int>(rows.size());
  if (!rows[0].is_array() || rows[0].empty()) {
    throw CliError("field '" + field + "' must hold rows of numbers");
  }
  const int c = static_cast<int>(rows[0].size());
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c) {
      throw CliError("field '" + field + "' has ragged rows");
    }
    for (int j = 0; j < c; ++j) {
      if (!rows[i][j].is_number()) {
        throw CliError("field '" + field + "' contains a non-numeric entry");
      }
      m(i, j) = rows[i][j].get<double>();
    }
  }
  return m;
}

json matrix_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

struct Document {
  int n = 0;
  double hbar = 1.0;
  std::string kind;
  json raw;
};

Document parse_header(const json& j, const Options& opt) {
  if (!j.is_object()) throw CliError("document must be a JSON object");
  Document doc;
  doc.raw = j;
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() <= 0) {
    throw CliError("document needs a positive integer field 'n'");
  }
  doc.n = j["n"].get<int>();
  if (j.contains("hbar")) {
    if (!j["hbar"].is_number() || !(j["hbar"].get<double>() > 0.0)) {
      throw CliError("field 'hbar' must be a positive number");
    }
    doc.hbar = j["hbar"].get<double>();
  }
  if (opt.hbar) doc.hbar = *opt.hbar;
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw CliError("document needs a string field 'kind'");
  }
  doc.kind = j["kind"].get<std::string>();
  return doc;
}

void require_kind(const Document& doc, const std::string& kind) {
  if (doc.kind != kind) {
    throw CliError("command expects kind '" + kind + "', document has '" + doc.kind + "'");
  }
}

// Wraps the matcore validation so that bad numerics surface as exit-2
// input errors rather than uncaught exceptions.
PosDefMatrix make_posdef(const Mat& m, const std::string& what) {
  try {
    return PosDefMatrix(SymMatrix(m));
  } catch (const std::exception& e) {
    throw CliError(what + ": " + e.what());
  }
}

enum class Space { kAny, kConfig, kPhase };

Ellipsoid load_ellipsoid(const Document& doc, Space space) {
  require_kind(doc, "ellipsoid_M");
  const Mat m = parse_matrix(doc.raw.at("data"), "data");
  if (m.rows() != m.cols()) throw CliError("shape matrix must be square");
  const bool config = m.rows() == doc.n;
  const bool phase = m.rows() == 2 * doc.n;
  if (!config && !phase) {
    throw CliError("shape matrix must be n x n or 2n x 2n for n = " + std::to_string(doc.n));
  }
  if (space == Space::kConfig && !config) {
    throw CliError("command expects a configuration-space (n x n) ellipsoid");
  }
  if (space == Space::kPhase && !phase) {
    throw CliError("command expects a phase-space (2n x 2n) ellipsoid");
  }
  return Ellipsoid(make_posdef(m, "shape matrix"), doc.hbar);
}

MixedGaussian load_sigma(const Document& doc) {
  require_kind(doc, "covariance_Sigma");
  const Mat m = parse_matrix(doc.raw.at("data"), "data");
  if (m.rows() != 2 * doc.n || m.cols() != 2 * doc.n) {
    throw CliError("covariance matrix must be 2n x 2n");
  }
  std::vector<double> z0(2 * doc.n, 0.0);
  if (doc.raw.contains("z0")) {
    const json& c = doc.raw["z0"];
    if (!c.is_array() || static_cast<int>(c.size()) != 2 * doc.n) {
      throw CliError("field 'z0' must be a 2n-vector");
    }
    for (int i = 0; i < 2 * doc.n; ++i) z0[i] = c[i].get<double>();
  }
  return MixedGaussian(make_posdef(m, "covariance matrix"), std::move(z0), doc.hbar);
}

PureGaussian load_pure(const Document& doc) {
  require_kind(doc, "pure_gaussian");
  const Mat x = parse_matrix(doc.raw.at("X"), "X");
  const Mat y = parse_matrix(doc.raw.at("Y"), "Y");
  if (x.rows() != doc.n || x.cols() != doc.n || y.rows() != doc.n || y.cols() != doc.n) {
    throw CliError("X and Y must be n x n");
  }
  try {
    return PureGaussian(PosDefMatrix(SymMatrix(x)), SymMatrix(y), doc.hbar);
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliError(std::string("pure_gaussian document: ") + e.what());
  }
}

json ellipsoid_doc(const Ellipsoid& e, int n) {
  return json{{"kind", "ellipsoid_M"},
              {"n", n},
              {"hbar", e.hbar()},
              {"data", matrix_json(e.shape_mat())}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_polar_dual(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const Ellipsoid x = load_ellipsoid(doc, Space::kAny);
  json out = ellipsoid_doc(polar_dual(x), doc.n);
  out["tol"] = opt.tol;
  emit(out);
  return 0;
}

int cmd_sympl_dual(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const Ellipsoid omega = load_ellipsoid(doc, Space::kPhase);
  json out = ellipsoid_doc(symplectic_polar_dual(omega), doc.n);
  out["tol"] = opt.tol;
  emit(out);
  return 0;
}

int cmd_williamson(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const Ellipsoid omega = load_ellipsoid(doc, Space::kPhase);
  const Williamson w = williamson(omega.shape());

  std::vector<double> d(2 * doc.n);
  for (int j = 0; j < doc.n; ++j) d[j] = d[doc.n + j] = w.lambda[j];
  const double recon =
      (w.s0.mat().transpose() * Mat::diag(d) * w.s0.mat() - omega.shape_mat()).frobenius();

  json out{{"kind", "symplectic_S"},
           {"n", doc.n},
           {"hbar", doc.hbar},
           {"data", matrix_json(w.s0.mat())},
           {"lambda", w.lambda},
           {"reconstruction_residual", recon},
           {"tol", opt.tol}};
  emit(out);
  return 0;
}

int cmd_blob_check(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const Ellipsoid omega = load_ellipsoid(doc, Space::kPhase);
  const BlobReport r = is_blob(omega, std::max(opt.tol, kDefaultSymp));
  json out{{"is_blob", r.is_blob},
           {"cond0_residual", r.cond0_residual},
           {"rs_residuals", {r.rs_residuals.first, r.rs_residuals.second}},
           {"tol", opt.tol}};
  if (r.witness_s) out["witness_S"] = matrix_json(r.witness_s->mat());
  emit(out);
  return r.is_blob ? 0 : 1;
}

int cmd_quantized_check(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const Ellipsoid omega = load_ellipsoid(doc, Space::kPhase);
  const std::vector<double> lam = symplectic_eigenvalues(omega.shape());
  const bool quantized = is_quantized(omega, opt.tol);
  emit(json{{"is_quantized", quantized},
            {"symplectic_eigenvalues", lam},
            {"tol", opt.tol}});
  return quantized ? 0 : 1;
}

int cmd_capacity(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const Ellipsoid omega = load_ellipsoid(doc, Space::kPhase);
  const std::vector<double> lam = symplectic_eigenvalues(omega.shape());
  const CapacityResult r = capacity_ellipsoid(omega);
  emit(json{{"value", r.value},
            {"formula", "ellipsoid"},
            {"lambda_max", lam.back()},
            {"hbar", omega.hbar()},
            {"tol", opt.tol}});
  return 0;
}

int cmd_cmax_product(const Options& opt, const std::string& file,
                     const std::string& second) {
  const Document doc = parse_header(read_document(file), opt);
  const Ellipsoid x = load_ellipsoid(doc, Space::kConfig);
  Ellipsoid p = second.empty() ? polar_dual(x)
                               : load_ellipsoid(parse_header(read_document(second), opt),
                                                Space::kConfig);
  const CapacityResult r = cmax_product(x, p, opt.tol);
  emit(json{{"value", r.value},
            {"formula", "product_cmax"},
            {"hbar", x.hbar()},
            {"tol", opt.tol}});
  return 0;
}

CoordPlane parse_plane(const std::string& plane) {
  if (plane == "X" || plane == "x") return CoordPlane::X;
  if (plane == "P" || plane == "p") return CoordPlane::P;
  throw CliError("--plane must be X or P");
}

int cmd_project(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const Ellipsoid omega = load_ellipsoid(doc, Space::kPhase);
  json out = ellipsoid_doc(project(omega, parse_plane(opt.plane)), doc.n);
  out["plane"] = opt.plane;
  out["tol"] = opt.tol;
  emit(out);
  return 0;
}

int cmd_intersect(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const Ellipsoid omega = load_ellipsoid(doc, Space::kPhase);
  json out = ellipsoid_doc(intersect(omega, parse_plane(opt.plane)), doc.n);
  out["plane"] = opt.plane;
  out["tol"] = opt.tol;
  emit(out);
  return 0;
}

int cmd_john(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const Ellipsoid x = load_ellipsoid(doc, Space::kConfig);
  json out = ellipsoid_doc(john_of_product(x), doc.n);
  out["tol"] = opt.tol;
  emit(out);
  return 0;
}

int cmd_gaussian_wigner(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const PureGaussian psi = load_pure(doc);
  const PosDefMatrix g = wigner_matrix(psi);
  json out = ellipsoid_doc(Ellipsoid(g, psi.hbar), doc.n);
  out["det"] = determinant(g.mat());
  out["symplectic"] = is_symplectic(g.mat(), std::max(opt.tol, kDefaultSymp));
  out["tol"] = opt.tol;
  emit(out);
  return 0;
}

int cmd_gaussian_purity(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const MixedGaussian rho = load_sigma(doc);
  const double mu = purity(rho);
  json out{{"purity", mu}, {"hbar", rho.hbar}, {"tol", opt.tol}};
  if (mu > 1.0 + opt.tol) {
    out["warning"] = "purity exceeds 1; covariance violates the quantum condition";
  }
  emit(out);
  return 0;
}

int cmd_quantum_check(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const MixedGaussian rho = load_sigma(doc);
  const QuantumVerdict v = quantum_check(rho, opt.tol);
  emit(json{{"is_quantum", v.is_quantum},
            {"min_hermitian_eig", v.min_hermitian_eig},
            {"min_sympl_eig_of_sigma", v.min_sympl_eig_of_sigma},
            {"purity", v.purity},
            {"hbar", rho.hbar},
            {"tol", opt.tol}});
  return v.is_quantum ? 0 : 1;
}

int cmd_tomography_check(const Options& opt, const std::string& file) {
  const Document doc = parse_header(read_document(file), opt);
  const MixedGaussian rho = load_sigma(doc);
  const TomographyResult t = tomography_pure_test(rho, opt.tol);
  emit(json{{"is_pure", t.is_pure},
            {"residuals", {t.residuals.first, t.residuals.second}},
            {"tol", opt.tol}});
  return t.is_pure ? 0 : 1;
}

int cmd_verify(const Options& opt, const std::string& suite_name) {
  Suite suite;
  if (suite_name == "geometry") suite = Suite::kGeometry;
  else if (suite_name == "capacity") suite = Suite::kCapacity;
  else if (suite_name == "gaussian") suite = Suite::kGaussian;
  else if (suite_name == "all") suite = Suite::kAll;
  else throw CliError("suite must be one of geometry, capacity, gaussian, all");

  Level level;
  if (opt.level == "quick") level = Level::kQuick;
  else if (opt.level == "full") level = Level::kFull;
  else throw CliError("--level must be quick or full");

  const VerifyReport report = run_verify(suite, opt.seed, level);
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    std::cerr << c.key << ": " << c.pass << " pass, " << c.fail
              << " fail, max residual " << c.max_residual << "\n";
    checks.push_back(json{{"key", c.key},
                          {"pass", c.pass},
                          {"fail", c.fail},
                          {"max_residual", c.max_residual}});
  }
  emit(json{{"suite", suite_name},
            {"level", opt.level},
            {"seed", opt.seed},
            {"checks", checks},
            {"all_passed", report.all_passed()}});
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic phase-space geometry toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--tol", opt.tol, "comparison tolerance (relative)")
      ->check(CLI::PositiveNumber);
  double hbar_flag = 0.0;
  auto* hbar_opt = app.add_option("--hbar", hbar_flag, "override the document hbar")
                       ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for randomized verification");
  app.add_option("--level", opt.level, "verification level: quick or full");

  std::string file = "-";
  std::string second_file;
  std::string suite = "all";

  // Global flags are accepted on either side of the subcommand name.
  auto add_sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "input document (JSON file, or - for stdin)");
  };

  auto* c_polar = add_sub("polar-dual", "dual ellipsoid A -> A^{-1}");
  add_file(c_polar);
  auto* c_sympl = add_sub("sympl-dual", "symplectic dual M -> -J M^{-1} J");
  add_file(c_sympl);
  auto* c_will = add_sub("williamson", "Williamson factorization of M");
  add_file(c_will);
  auto* c_blob = add_sub("blob-check", "is the ellipsoid a quantum blob");
  add_file(c_blob);
  auto* c_quant = add_sub("quantized-check", "does the ellipsoid contain a blob");
  add_file(c_quant);
  auto* c_cap = add_sub("capacity", "symplectic capacity of an ellipsoid");
  add_file(c_cap);
  auto* c_cmax = add_sub("cmax-product", "largest capacity of X x P");
  add_file(c_cmax);
  c_cmax->add_option("second", second_file, "momentum factor P (defaults to the dual of X)");
  auto* c_proj = add_sub("project", "orthogonal projection onto a coordinate plane");
  add_file(c_proj);
  c_proj->add_option("--plane", opt.plane, "coordinate plane: X or P");
  auto* c_inter = add_sub("intersect", "intersection with a coordinate plane");
  add_file(c_inter);
  c_inter->add_option("--plane", opt.plane, "coordinate plane: X or P");
  auto* c_john = add_sub("john", "inscribed ellipsoid of X x X^hbar");
  add_file(c_john);
  auto* c_gw = add_sub("gaussian-wigner", "Wigner matrix of a pure Gaussian");
  add_file(c_gw);
  auto* c_gp = add_sub("gaussian-purity", "purity of a Gaussian state");
  add_file(c_gp);
  auto* c_qc = add_sub("quantum-check", "quantum condition on a covariance matrix");
  add_file(c_qc);
  auto* c_tomo = add_sub("tomography-check", "closed-form tomographic purity test");
  add_file(c_tomo);
  auto* c_verify = add_sub("verify", "run the randomized verification suites");
  c_verify->add_option("suite", suite, "geometry, capacity, gaussian, or all");

  CLI11_PARSE(app, argc, argv);
  if (hbar_opt->count() > 0) opt.hbar = hbar_flag;

  try {
    if (c_polar->parsed()) return cmd_polar_dual(opt, file);
    if (c_sympl->parsed()) return cmd_sympl_dual(opt, file);
    if (c_will->parsed()) return cmd_williamson(opt, file);
    if (c_blob->parsed()) return cmd_blob_check(opt, file);
    if (c_quant->parsed()) return cmd_quantized_check(opt, file);
    if (c_cap->parsed()) return cmd_capacity(opt, file);
    if (c_cmax->parsed()) return cmd_cmax_product(opt, file, second_file);
    if (c_proj->parsed()) return cmd_project(opt, file);
    if (c_inter->parsed()) return cmd_intersect(opt, file);
    if (c_john->parsed()) return cmd_john(opt, file);
    if (c_gw->parsed()) return cmd_gaussian_wigner(opt, file);
    if (c_gp->parsed()) return cmd_gaussian_purity(opt, file);
    if (c_qc->parsed()) return cmd_quantum_check(opt, file);
    if (c_tomo->parsed()) return cmd_tomography_check(opt, file);
    if (c_verify->parsed()) return cmd_verify(opt, suite);
    throw CliError("no subcommand dispatched");
  } catch (const std::exception& e) {
    // Parse errors echo raw input bytes, which may not be valid UTF-8; replace
    // them instead of letting dump() throw inside the error handler.
    const json err{{"error", {{"type", "invalid_input"}, {"message", e.what()}}}};
    std::cout << err.dump(2, ' ', false, json::error_handler_t::replace) << "\n";
    return 2;
  }
}
