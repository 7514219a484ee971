// rzeta: command-line surface for the walk-zeta / Ronkin / amoeba toolkit.
#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rz/amoeba.hpp"
#include "rz/closed_forms.hpp"
#include "rz/errors.hpp"
#include "rz/io.hpp"
#include "rz/laurent.hpp"
#include "rz/polytope.hpp"
#include "rz/quadrature.hpp"
#include "rz/ronkin.hpp"
#include "rz/simulate.hpp"
#include "rz/spectral_zeta.hpp"
#include "rz/tropical.hpp"
#include "rz/verify.hpp"
#include "rz/walk_model.hpp"

namespace {

using namespace rz;

struct Options {
  std::string model = "rw";
  std::string coin_file;
  std::string laurent_file;
  int d = 1;
  long long N = 0;
  double xi = 0.7853981633974483;  // pi/4
  std::vector<double> u;
  int r_max = 10;
  int nodes = 16;
  double tol = 1e-10;
  std::vector<double> box;
  int resolution = 200;
  int steps = 10;
  int p = 0;  // measure exponent; 0 = by walk class
  bool measure_dump = false;
  std::string out;
  std::string format = "csv";
};

void emit(const Options& opt, const std::string& content) {
  if (opt.out.empty())
    std::cout << content;
  else
    write_file(opt.out, content);
}

CoinMatrix make_coin(const Options& opt) {
  if (opt.model == "rw") return rw_coin(opt.d);
  if (opt.model == "qw-m") return qw_coin(opt.xi, Shift::M);
  if (opt.model == "qw-f") return qw_coin(opt.xi, Shift::F);
  if (opt.model == "custom-coin-file") {
    if (opt.coin_file.empty()) throw config_error("--coin-file is required");
    return load_coin(opt.coin_file);
  }
  throw config_error("model '" + opt.model + "' does not define a coin");
}

LaurentPolynomial make_laurent(const Options& opt, double u) {
  if (opt.model == "rw") return p_rw(opt.d, u);
  if (opt.model == "qw-m") return p_qw(opt.xi, u, Shift::M);
  if (opt.model == "qw-f") return p_qw(opt.xi, u, Shift::F);
  if (opt.model == "custom-laurent-file") {
    if (opt.laurent_file.empty()) throw config_error("--laurent-file is required");
    return load_laurent(opt.laurent_file);
  }
  throw config_error("model '" + opt.model + "' does not define a polynomial");
}

std::vector<double> u_values(const Options& opt) {
  if (opt.u.empty()) throw config_error("at least one --u value is required");
  return opt.u;
}

std::array<double, 4> box4(const Options& opt) {
  if (opt.box.size() != 4)
    throw config_error("--box requires four numbers: x1_lo x1_hi x2_lo x2_hi");
  return {opt.box[0], opt.box[1], opt.box[2], opt.box[3]};
}

std::optional<double> closed_form_value(const Options& opt, const CoinMatrix& coin,
                                        double u) {
  try {
    if (coin.walk_class() == WalkClass::RW && coin.d() <= 2)
      return rw_log_zeta_closed(coin.d(), u, 60);
    if (coin.qw_angle())
      return qw_log_zeta_closed(*coin.qw_angle(), u, coin.shift());
  } catch (const domain_error&) {
  }
  return std::nullopt;
}

int cmd_zeta(const Options& opt) {
  if (opt.N < 1) throw config_error("zeta requires --N >= 1");
  const CoinMatrix coin = make_coin(opt);
  const TorusSpec torus(coin.d(), opt.N);
  std::ostringstream out;
  out << "model,d,N,u,value_re,value_im\n";
  for (double u : u_values(opt)) {
    const ZetaResult z = finite_zeta(coin, torus, u);
    out << opt.model << ',' << coin.d() << ',' << opt.N << ',' << format_double(u)
        << ',' << format_double(z.value.real()) << ','
        << format_double(z.value.imag()) << '\n';
  }
  emit(opt, out.str());
  return 0;
}

int cmd_logzeta(const Options& opt) {
  const CoinMatrix coin = make_coin(opt);
  const QuadratureSpec quad(opt.nodes, opt.tol);
  std::ostringstream out;
  out << "model,d,N,u,value,closed_form,diag_nodes,diag_err\n";
  for (double u : u_values(opt)) {
    const ZetaResult z = log_zeta(coin, u, quad);
    out << opt.model << ',' << coin.d() << ",inf," << format_double(u) << ','
        << format_double(z.value.real()) << ',';
    if (const auto closed = closed_form_value(opt, coin, u))
      out << format_double(*closed);
    out << ',' << z.diag.nodes << ',' << format_double(z.diag.delta) << '\n';
  }
  emit(opt, out.str());
  return 0;
}

int cmd_cr(const Options& opt) {
  const CoinMatrix coin = make_coin(opt);
  std::ostringstream out;
  out << "r,finite_re,finite_im,limit_re,limit_im\n";
  for (int r = 1; r <= opt.r_max; ++r) {
    out << r << ',';
    if (opt.N >= 1) {
      const Complex c = c_r_finite(coin, TorusSpec(coin.d(), opt.N), r);
      out << format_double(c.real()) << ',' << format_double(c.imag());
    } else {
      out << ',';
    }
    const Complex c = c_r_limit(coin, r, QuadratureSpec(opt.nodes, opt.tol));
    out << ',' << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
  }
  emit(opt, out.str());
  return 0;
}

int cmd_ronkin(const Options& opt) {
  if (opt.u.size() != 1) throw config_error("ronkin requires exactly one --u value");
  const LaurentPolynomial p = make_laurent(opt, opt.u[0]);
  const int k = p.dim();
  if (k > 2) throw config_error("the ronkin grid command supports k <= 2");
  if (opt.box.size() != static_cast<std::size_t>(2 * k))
    throw config_error("--box requires lo/hi per variable");
  const QuadratureSpec quad(opt.nodes, opt.tol);

  std::ostringstream out;
  for (int j = 0; j < k; ++j) out << "x_" << j + 1 << ',';
  out << "value,singular_flag\n";
  const int n = opt.resolution;
  std::vector<int> idx(k, 0);
  while (true) {
    std::vector<double> x(k);
    for (int j = 0; j < k; ++j) {
      const double lo = opt.box[2 * j], hi = opt.box[2 * j + 1];
      x[j] = n == 1 ? lo : lo + (hi - lo) * idx[j] / (n - 1);
    }
    const RonkinEvaluation r = ronkin_eval(p, x, quad);
    for (int j = 0; j < k; ++j) out << format_double(x[j]) << ',';
    out << format_double(r.value) << ',' << (r.singular_flag ? 1 : 0) << '\n';
    int j = k - 1;
    while (j >= 0 && ++idx[j] == n) idx[j--] = 0;
    if (j < 0) break;
  }
  emit(opt, out.str());
  return 0;
}

int cmd_correspond(const Options& opt) {
  std::ostringstream out;
  out << "model,u,log_zeta,ronkin,difference\n";
  const QuadratureSpec quad(opt.nodes, opt.tol);
  for (double u : u_values(opt)) {
    CorrespondenceReport rep;
    if (opt.model == "rw")
      rep = correspondence_rw(opt.d, u, quad);
    else if (opt.model == "qw-m")
      rep = correspondence_qw(opt.xi, u, Shift::M, quad);
    else if (opt.model == "qw-f")
      rep = correspondence_qw(opt.xi, u, Shift::F, quad);
    else
      throw config_error("correspond supports the rw/qw-m/qw-f models");
    out << opt.model << ',' << format_double(u) << ','
        << format_double(rep.log_zeta_value) << ',' << format_double(rep.ronkin_value)
        << ',' << format_double(rep.difference) << '\n';
  }
  emit(opt, out.str());
  return 0;
}

int cmd_amoeba(const Options& opt) {
  if (opt.u.size() != 1) throw config_error("amoeba requires exactly one --u value");
  const LaurentPolynomial p = make_laurent(opt, opt.u[0]);
  const std::array<double, 4> box = box4(opt);
  if (opt.format == "csv") {
    // point cloud over the x1 columns of the raster grid
    std::ostringstream out;
    out << "x1,x2\n";
    const int n = opt.resolution;
    for (int col = 0; col < n; ++col) {
      const double x1 = box[0] + (col + 0.5) * (box[1] - box[0]) / n;
      const double prefix[1] = {x1};
      for (const auto& pt : amoeba_slice(p, prefix, 2 * n).points)
        out << format_double(pt[0]) << ',' << format_double(pt[1]) << '\n';
    }
    emit(opt, out.str());
    return 0;
  }
  const AmoebaRaster raster = amoeba_complement_components(
      p, box, opt.resolution, QuadratureSpec(opt.nodes, opt.tol), true);
  if (opt.format == "json")
    emit(opt, raster_to_json(raster));
  else if (opt.format == "svg")
    emit(opt, raster_to_svg(raster));
  else if (opt.format == "pgm")
    emit(opt, raster_to_pgm(raster));
  else
    throw config_error("amoeba formats: csv|json|svg|pgm");
  if (!raster.warning.empty()) std::cerr << "warning: " << raster.warning << "\n";
  return 0;
}

LaurentPolynomial tropical_input(const Options& opt) {
  // u = 1 rescaled family polynomials unless a u value is given
  if (opt.model == "rw" && opt.u.empty()) return p_rw_simplified(opt.d);
  if (opt.model == "qw-m" && opt.u.empty()) return p_qw_simplified(Shift::M, opt.xi);
  if (opt.model == "qw-f" && opt.u.empty()) return p_qw_simplified(Shift::F, opt.xi);
  return make_laurent(opt, opt.u.empty() ? 1.0 : opt.u[0]);
}

int cmd_tropical(const Options& opt) {
  const PolyhedralComplex complex = trop_hypersurface(tropicalize(tropical_input(opt)));
  if (opt.format == "svg")
    emit(opt, complex_to_svg(complex));
  else
    emit(opt, complex_to_json(complex));
  return 0;
}

int cmd_newton(const Options& opt) {
  const LatticePolytope poly = newton_polytope(tropical_input(opt));
  if (opt.format == "svg")
    emit(opt, polytope_to_svg(poly));
  else
    emit(opt, polytope_to_json(poly));
  return 0;
}

int cmd_simulate(const Options& opt) {
  const CoinMatrix coin = make_coin(opt);
  const int dim = coin.size();
  Eigen::VectorXcd psi;
  if (coin.walk_class() == WalkClass::RW || coin.walk_class() == WalkClass::CRW)
    psi = Eigen::VectorXcd::Constant(dim, Complex(1.0 / dim, 0.0));
  else {
    psi = Eigen::VectorXcd::Zero(dim);
    psi[0] = Complex(1.0, 0.0);
  }
  WalkState state = opt.N >= 1
                        ? delta_state(TorusSpec(coin.d(), opt.N), psi)
                        : delta_state_lattice(coin.d(), psi);
  for (int s = 0; s < opt.steps; ++s) state = evolve(state, coin);
  if (opt.measure_dump) {
    const int p = opt.p != 0 ? opt.p : default_measure_exponent(coin.walk_class());
    emit(opt, measure_to_csv(state, p));
  } else {
    emit(opt, state_to_csv(state));
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  std::ostringstream out;
  bool all = true;
  for (const CheckResult& res : run_all_checks()) {
    all = all && res.passed;
    out << (res.passed ? "ok   " : "FAIL ") << res.id;
    if (!res.passed && !res.detail.empty()) out << ": " << res.detail;
    out << '\n';
    if (!opt.out.empty()) continue;
    std::cout << (res.passed ? "ok   " : "FAIL ") << res.id;
    if (!res.passed && !res.detail.empty()) std::cout << ": " << res.detail;
    std::cout << std::endl;
  }
  if (!opt.out.empty()) write_file(opt.out, out.str());
  return all ? 0 : 1;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

int fail(int code, const std::string& kind, const std::string& message) {
  std::cerr << "{\"error\":\"" << kind << "\",\"message\":\"" << json_escape(message)
            << "\"}\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_env();

  CLI::App app{"walk zeta functions, Ronkin functions, amoebas, tropical geometry"};
  app.require_subcommand(1);
  Options opt;

  std::string command;
  for (const char* name : {"zeta", "logzeta", "cr", "ronkin", "correspond", "amoeba",
                           "tropical", "newton", "simulate", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--model", opt.model,
                    "rw | qw-m | qw-f | custom-coin-file | custom-laurent-file");
    sub->add_option("--coin-file", opt.coin_file);
    sub->add_option("--laurent-file", opt.laurent_file);
    sub->add_option("--d", opt.d);
    sub->add_option("--N", opt.N);
    sub->add_option("--xi", opt.xi);
    sub->add_option("--u", opt.u)->expected(-1);
    sub->add_option("--r-max", opt.r_max);
    sub->add_option("--nodes", opt.nodes);
    sub->add_option("--tol", opt.tol);
    sub->add_option("--box", opt.box)->expected(-1);
    sub->add_option("--resolution", opt.resolution);
    sub->add_option("--steps", opt.steps);
    sub->add_option("--p", opt.p);
    sub->add_flag("--measure", opt.measure_dump);
    sub->add_option("--out", opt.out);
    sub->add_option("--format", opt.format, "csv | json | svg | pgm");
    sub->callback([&command, name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    return fail(2, "config", e.what());
  }

  try {
    if (command == "zeta") return cmd_zeta(opt);
    if (command == "logzeta") return cmd_logzeta(opt);
    if (command == "cr") return cmd_cr(opt);
    if (command == "ronkin") return cmd_ronkin(opt);
    if (command == "correspond") return cmd_correspond(opt);
    if (command == "amoeba") return cmd_amoeba(opt);
    if (command == "tropical") return cmd_tropical(opt);
    if (command == "newton") return cmd_newton(opt);
    if (command == "simulate") return cmd_simulate(opt);
    if (command == "verify") return cmd_verify(opt);
    return fail(2, "config", "unknown command");
  } catch (const rz::config_error& e) {
    return fail(2, "config", e.what());
  } catch (const rz::domain_error& e) {
    return fail(3, "domain", e.what());
  } catch (const rz::accuracy_error& e) {
    return fail(4, "accuracy", e.what());
  } catch (const std::exception& e) {
    return fail(2, "config", e.what());
  }
}
