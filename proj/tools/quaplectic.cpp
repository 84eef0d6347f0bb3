#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quaplectic/catalog.hpp"
#include "quaplectic/central_extension.hpp"
#include "quaplectic/contraction.hpp"
#include "quaplectic/fock.hpp"
#include "quaplectic/grid_oscillator.hpp"
#include "quaplectic/limits.hpp"
#include "quaplectic/transforms.hpp"

namespace {

using namespace quap;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size())
      throw std::invalid_argument("malformed number: " + item);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

FrameParams params3(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 3)
    throw std::invalid_argument("expected three comma-separated values");
  return {v[0], v[1], v[2]};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open for writing: " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string matrix_csv(const Eigen::MatrixXd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i + j > 0) out += ',';
      out += fmt(m(i, j));
    }
  out += '\n';
  return out;
}

std::string spectrum_csv(const SpectrumReport& report) {
  std::string out = "index,eigenvalue,method\n";
  for (Eigen::Index i = 0; i < report.eigenvalues.size(); ++i)
    out += std::to_string(i) + "," + fmt(report.eigenvalues(i)) + "," +
           report.method + "\n";
  return out;
}

LieAlgebra load_algebra(const std::string& name, const std::string& path) {
  if (!path.empty()) return algebra_from_json(read_file(path));
  if (!name.empty()) return builtin_algebra(name);
  throw std::invalid_argument("need --algebra or --in");
}

Eigen::MatrixXcd parse_eps(const std::string& text, int modes) {
  if (text.empty()) return {};
  const auto v = parse_list(text);
  if (static_cast<int>(v.size()) != 2 * modes * modes)
    throw std::invalid_argument(
        "eps block needs modes*modes re,im pairs in row-major order");
  Eigen::MatrixXcd eps(modes, modes);
  for (int a = 0; a < modes; ++a)
    for (int b = 0; b < modes; ++b)
      eps(a, b) = {v[2 * (a * modes + b)], v[2 * (a * modes + b) + 1]};
  return eps;
}

struct FockArgs {
  int p = 1;
  int q = 1;
  int cutoff = 10;
  int margin = 2;
  std::string eps;
};

void add_fock_args(CLI::App* sc, FockArgs& args) {
  sc->add_option("--p", args.p, "timelike mode count");
  sc->add_option("--q", args.q, "spacelike mode count");
  sc->add_option("--cutoff", args.cutoff, "per-mode occupation cap");
  sc->add_option("--margin", args.margin, "interior margin");
  sc->add_option("--eps", args.eps, "Hermitian block, re,im pairs row-major");
}

RepresentationBundle bundle_from(const FockArgs& args) {
  return build_rep({args.p, args.q}, {args.cutoff, args.margin},
                   parse_eps(args.eps, args.p + args.q));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noninertial phase-space transforms and quaplectic representations"};
  app.require_subcommand(1);

  double c = 1.0, b = 1.0, hbar = 1.0;
  std::string kind_name = "reciprocal", params_text, p1_text, p2_text;
  std::string rates_text, point_text, out_path, in_path, algebra_name;
  std::string schedule_name = "b", preset, op_name = "number";
  double tol = 1e-12, half_width = 8.0;
  int wave_k = 1, max_order = 4, grid_points = 201, grid_levels = 5;
  FockArgs fock;

  auto* sc_transform = app.add_subcommand("transform", "build a 4x4 frame transform");
  sc_transform->add_option("--kind", kind_name);
  sc_transform->add_option("--params", params_text)->required();
  sc_transform->add_option("--point", point_text, "map a t,q,p,e point");
  sc_transform->add_option("--out", out_path, "write the matrix as flat CSV");
  sc_transform->add_option("--c", c);
  sc_transform->add_option("--b", b);

  auto* sc_compose = app.add_subcommand("compose", "compose frame parameters");
  sc_compose->add_option("--kind", kind_name);
  sc_compose->add_option("--p1", p1_text)->required();
  sc_compose->add_option("--p2", p2_text)->required();
  sc_compose->add_option("--c", c);
  sc_compose->add_option("--b", b);

  auto* sc_rates = app.add_subcommand("rates", "transform parameter time-rates");
  sc_rates->add_option("--params", params_text)->required();
  sc_rates->add_option("--rates", rates_text)->required();
  sc_rates->add_option("--c", c);
  sc_rates->add_option("--b", b);

  auto* sc_null = app.add_subcommand("null-surface", "fixed-point locus report");
  sc_null->add_option("--params", params_text)->required();
  sc_null->add_option("--c", c);
  sc_null->add_option("--b", b);

  auto* sc_limits = app.add_subcommand("limits", "bounded-force limit diagnostics");
  sc_limits->add_option("--params", params_text)->required();
  sc_limits->add_option("--schedule", schedule_name)
      ->check(CLI::IsMember({"b", "joint"}));

  auto* sc_integrate = app.add_subcommand("integrate", "finite transform of a uniformly accelerated frame");
  sc_integrate->add_option("--params", params_text)->required();
  sc_integrate->add_option("--point", point_text);

  auto* sc_scales = app.add_subcommand("scales", "dimensional scales from c, b, hbar");
  sc_scales->add_option("--c", c);
  sc_scales->add_option("--b", b);
  sc_scales->add_option("--hbar", hbar);

  auto* sc_jacobi = app.add_subcommand("jacobi", "Jacobi identity residual");
  sc_jacobi->add_option("--algebra", algebra_name);
  sc_jacobi->add_option("--in", in_path, "algebra JSON file");
  sc_jacobi->add_option("--out", out_path, "re-export the algebra as JSON");
  sc_jacobi->add_option("--tol", tol);

  auto* sc_extend = app.add_subcommand("extend", "central extension count");
  sc_extend->add_option("--algebra", algebra_name);
  sc_extend->add_option("--in", in_path);
  sc_extend->add_option("--out", out_path, "write the leading cocycle as flat CSV");

  auto* sc_contract = app.add_subcommand("contract", "singular limit of an algebra");
  sc_contract->add_option("--algebra", algebra_name);
  sc_contract->add_option("--in", in_path);
  sc_contract->add_option("--preset", preset)->required();
  sc_contract->add_option("--out", out_path, "write the contracted algebra as JSON");

  auto* sc_repcheck = app.add_subcommand("rep-check", "ladder-representation residuals");
  add_fock_args(sc_repcheck, fock);

  auto* sc_casimir = app.add_subcommand("casimir", "invariant chains and commutation");
  add_fock_args(sc_casimir, fock);
  sc_casimir->add_option("--max-order", max_order);

  auto* sc_spectrum = app.add_subcommand("spectrum", "eigenvalues of a named operator");
  add_fock_args(sc_spectrum, fock);
  sc_spectrum->add_option("--op", op_name,
                          "number|u|c1..c4|d1..d4|wave1..wave4|grid");
  sc_spectrum->add_option("--half-width", half_width);
  sc_spectrum->add_option("--points", grid_points);
  sc_spectrum->add_option("--levels", grid_levels);
  sc_spectrum->add_option("--out", out_path, "write CSV here instead of stdout");

  auto* sc_wave = app.add_subcommand("wave", "order-k wave operator");
  add_fock_args(sc_wave, fock);
  sc_wave->add_option("--k", wave_k);
  sc_wave->add_option("--out", out_path, "write the spectrum CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const Constants consts{c, b, hbar};

    if (*sc_transform) {
      consts.validate();
      const auto t = build_transform(transform_kind_from_string(kind_name),
                                     params3(params_text), consts);
      for (int i = 0; i < 4; ++i)
        std::printf("%s %s %s %s\n", fmt(t.matrix(i, 0)).c_str(),
                    fmt(t.matrix(i, 1)).c_str(), fmt(t.matrix(i, 2)).c_str(),
                    fmt(t.matrix(i, 3)).c_str());
      if (!point_text.empty()) {
        const auto v = parse_list(point_text);
        if (v.size() != 4) throw std::invalid_argument("point needs four values");
        PhaseFrameT<double> x{v[0], v[1], v[2], v[3]};
        const auto y = apply_transform(t, x);
        std::printf("point %s %s %s %s\n", fmt(y.dt).c_str(), fmt(y.dq).c_str(),
                    fmt(y.dp).c_str(), fmt(y.de).c_str());
      }
      if (!out_path.empty()) write_file(out_path, matrix_csv(t.matrix));
      return 0;
    }

    if (*sc_compose) {
      consts.validate();
      const auto law = transform_kind_from_string(kind_name);
      const auto composed =
          compose(law, params3(p2_text), params3(p1_text), consts);
      std::printf("%s %s %s\n", fmt(composed.v).c_str(), fmt(composed.f).c_str(),
                  fmt(composed.r).c_str());
      return 0;
    }

    if (*sc_rates) {
      consts.validate();
      const auto rv = parse_list(rates_text);
      if (rv.size() != 3) throw std::invalid_argument("rates needs three values");
      const RateVectorT<double> in{rv[0], rv[1], rv[2]};
      const auto out = rates_transform(params3(params_text), in, consts);
      std::printf("%s %s %s\n", fmt(out.dv_dt).c_str(), fmt(out.df_dt).c_str(),
                  fmt(out.dr_dt).c_str());
      return 0;
    }

    if (*sc_null) {
      consts.validate();
      const auto report = null_surface(params3(params_text), consts);
      std::printf("residual %s\n", fmt(report.residual).c_str());
      std::printf("fixed_point %d\n", report.is_fixed_point ? 1 : 0);
      return 0;
    }

    if (*sc_limits) {
      const auto schedule =
          schedule_name == "b" ? default_b_schedule() : default_joint_schedule();
      const auto report = limit_check(params3(params_text), schedule);
      std::printf("slope_vs_b %s\n", fmt(report.slope_vs_b).c_str());
      for (size_t i = 0; i < schedule.size(); ++i)
        std::printf("c %s b %s err_vs_binf %s err_vs_hamilton %s\n",
                    fmt(schedule[i].c).c_str(), fmt(schedule[i].b).c_str(),
                    fmt(report.err_vs_binf[i]).c_str(),
                    fmt(report.err_vs_hamilton[i]).c_str());
      return 0;
    }

    if (*sc_integrate) {
      const auto frame = integrate_frame(params3(params_text));
      std::printf("jacobian_residuals %s %s %s\n", fmt(frame.residuals[0]).c_str(),
                  fmt(frame.residuals[1]).c_str(), fmt(frame.residuals[2]).c_str());
      std::printf("offset %s %s %s %s\n", fmt(frame.offset(0)).c_str(),
                  fmt(frame.offset(1)).c_str(), fmt(frame.offset(2)).c_str(),
                  fmt(frame.offset(3)).c_str());
      if (!point_text.empty()) {
        const auto v = parse_list(point_text);
        if (v.size() != 4) throw std::invalid_argument("point needs four values");
        const Eigen::Vector4d y = map_point(frame, Eigen::Vector4d(v.data()));
        std::printf("point %s %s %s %s\n", fmt(y(0)).c_str(), fmt(y(1)).c_str(),
                    fmt(y(2)).c_str(), fmt(y(3)).c_str());
      }
      return 0;
    }

    if (*sc_scales) {
      consts.validate();
      const auto s = scales(consts);
      std::printf("lambda_t %s\n", fmt(s.lambda_t).c_str());
      std::printf("lambda_q %s\n", fmt(s.lambda_q).c_str());
      std::printf("lambda_p %s\n", fmt(s.lambda_p).c_str());
      std::printf("lambda_e %s\n", fmt(s.lambda_e).c_str());
      return 0;
    }

    if (*sc_jacobi) {
      const auto algebra = load_algebra(algebra_name, in_path);
      const double residual = jacobi_residual(algebra);
      std::printf("jacobi_residual %s\n", fmt(residual).c_str());
      if (!out_path.empty()) write_file(out_path, to_json(algebra) + "\n");
      return residual > tol ? 2 : 0;
    }

    if (*sc_extend) {
      const auto solution = central_extensions(load_algebra(algebra_name, in_path));
      std::printf("h2_dim %d\n", solution.h2_dim);
      if (!out_path.empty() && !solution.cocycles.empty())
        write_file(out_path, matrix_csv(solution.cocycles.front()));
      return 0;
    }

    if (*sc_contract) {
      const auto algebra = load_algebra(algebra_name, in_path);
      const auto contracted = contract(algebra, preset_weights(preset, algebra));
      const auto fp = fingerprint(contracted);
      std::printf("dim %d\n", fp.dim);
      std::printf("derived_series");
      for (int d : fp.derived_series) std::printf(" %d", d);
      std::printf("\nlower_central_series");
      for (int d : fp.lower_central_series) std::printf(" %d", d);
      std::printf("\ncenter_dim %d\n", fp.center_dim);
      std::printf("killing_positive %d\n", fp.killing_positive);
      std::printf("killing_negative %d\n", fp.killing_negative);
      if (!out_path.empty()) write_file(out_path, to_json(contracted) + "\n");
      return 0;
    }

    if (*sc_repcheck) {
      const auto rep = bundle_from(fock);
      const auto r = commutator_residuals(rep);
      std::printf("ccr %s\n", fmt(r.max_ccr).c_str());
      std::printf("ladder_ladder %s\n", fmt(r.max_ladder_ladder).c_str());
      std::printf("unitary_ladder %s\n", fmt(r.max_unitary_ladder).c_str());
      std::printf("unitary_unitary %s\n", fmt(r.max_unitary_unitary).c_str());
      std::printf("w_ladder %s\n", fmt(r.max_w_ladder).c_str());
      std::printf("w_equals_minus_eps %s\n", fmt(r.w_equals_minus_eps).c_str());
      std::printf("w_first_term_only %s\n", fmt(r.w_first_term_only).c_str());
      const double worst =
          std::max({r.max_ccr, r.max_ladder_ladder, r.max_unitary_ladder,
                    r.max_unitary_unitary, r.max_w_ladder, r.w_equals_minus_eps});
      return worst > 1e-10 ? 2 : 0;
    }

    if (*sc_casimir) {
      const auto rep = bundle_from(fock);
      const auto set = casimir_ops(rep, max_order);
      std::printf("max_mutual_commutator %s\n",
                  fmt(set.max_mutual_commutator).c_str());
      std::printf("max_c_generator_commutator %s\n",
                  fmt(set.max_c_generator_commutator).c_str());
      std::printf("max_d_unitary_commutator %s\n",
                  fmt(set.max_d_unitary_commutator).c_str());
      std::printf("c2_crosscheck %s\n", fmt(set.c2_crosscheck).c_str());
      for (int k = 0; k < max_order; ++k) {
        const auto& cs = set.c_spectra[k].eigenvalues;
        const auto& ds = set.d_spectra[k].eigenvalues;
        std::printf("%s min %s max %s\n", set.c_ops[k].label.c_str(),
                    fmt(cs(0)).c_str(), fmt(cs(cs.size() - 1)).c_str());
        std::printf("%s min %s max %s\n", set.d_ops[k].label.c_str(),
                    fmt(ds(0)).c_str(), fmt(ds(ds.size() - 1)).c_str());
      }
      const double worst =
          std::max({set.max_mutual_commutator, set.max_c_generator_commutator,
                    set.max_d_unitary_commutator});
      return worst > 1e-8 ? 2 : 0;
    }

    if (*sc_spectrum) {
      SpectrumReport report;
      if (op_name == "grid") {
        report = oscillator_spectrum_grid(half_width, grid_points, grid_levels);
      } else {
        const auto rep = bundle_from(fock);
        Eigen::MatrixXcd op;
        if (op_name == "number") {
          op = rep.number_op;
        } else if (op_name == "u") {
          op = rep.u_op;
        } else if (op_name.size() == 2 &&
                   (op_name[0] == 'c' || op_name[0] == 'd') &&
                   op_name[1] >= '1' && op_name[1] <= '4') {
          const int k = op_name[1] - '0';
          const auto set = casimir_ops(rep, k);
          op = op_name[0] == 'c' ? set.c_ops[k - 1].mat : set.d_ops[k - 1].mat;
        } else if (op_name.rfind("wave", 0) == 0 && op_name.size() == 5) {
          op = wave_operator(rep, op_name[4] - '0').mat;
        } else {
          throw std::invalid_argument("unknown operator: " + op_name);
        }
        report = interior_spectrum(rep, op);
      }
      const std::string csv = spectrum_csv(report);
      if (out_path.empty())
        std::fputs(csv.c_str(), stdout);
      else
        write_file(out_path, csv);
      return 0;
    }

    if (*sc_wave) {
      const auto rep = bundle_from(fock);
      const auto op = wave_operator(rep, wave_k);
      const double herm = (op.mat - op.mat.adjoint()).cwiseAbs().maxCoeff();
      std::printf("label %s\n", op.label.c_str());
      std::printf("hermiticity_residual %s\n", fmt(herm).c_str());
      if (!out_path.empty()) write_file(out_path, spectrum_csv(interior_spectrum(rep, op.mat)));
      return wave_k <= 2 && herm > 1e-10 ? 2 : 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
