// wavset: command-line front end. JSON in, JSON out (CSV for samples and
// frame vectors). Exit status: 0 success, 1 negative predicate verdict,
// 2 input or precondition error.
#include "wavset/acceptance.hpp"
#include "wavset/analysis.hpp"
#include "wavset/congruence.hpp"
#include "wavset/error.hpp"
#include "wavset/families.hpp"
#include "wavset/frames.hpp"
#include "wavset/interpolation.hpp"
#include "wavset/serialize.hpp"
#include "wavset/unitary_lab.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace wavset;

namespace {

struct Options {
  std::uint64_t seed = 20240607ULL;
  std::optional<double> tol;
  std::string out;
  bool pretty = false;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

void write_text(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + o.out);
  f << text;
}

void emit(const Options& o, const Json& j) { write_text(o, (o.pretty ? j.dump(2) : j.dump()) + "\n"); }

// A file of numbers, or the list itself, separated by commas or whitespace.
std::vector<double> read_numbers(const std::string& arg) {
  std::string text = arg;
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  for (char& ch : text)
    if (ch == ',' || ch == ';') ch = ' ';
  std::istringstream is(text);
  std::vector<double> out;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "not a number: " + tok);
    }
  }
  return out;
}

std::string matrix_csv(const Matrix& m) {
  std::ostringstream os;
  os.precision(17);
  os << "index";
  for (Eigen::Index r = 0; r < m.rows(); ++r) os << ",re" << r << ",im" << r;
  os << "\n";
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    os << c;
    for (Eigen::Index r = 0; r < m.rows(); ++r) os << "," << m(r, c).real() << "," << m(r, c).imag();
    os << "\n";
  }
  return os.str();
}

double tol_or(const Options& o, double fallback) { return o.tol.value_or(fallback); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wavelet sets, interpolation maps, finite unitary systems and frames"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "RNG seed for randomized commands");
  app.add_option("--tol", opt.tol, "Tolerance override where the command has one");
  app.add_option("--out", opt.out, "Write output to this path instead of stdout");
  app.add_flag("--pretty", opt.pretty, "Indent JSON output");

  int status = 0;

  // verify
  auto* verify = app.add_subcommand("verify", "Wavelet-set verdict with witnesses");
  std::string set_path, factor = "2";
  verify->add_option("--set,-e", set_path, "PiSet JSON")->required();
  verify->add_option("--factor", factor, "Dilation factor p/q (default 2)");
  verify->callback([&] {
    const auto v = is_wavelet_set(pi_set_from_json(read_json(set_path)), parse_rational(factor));
    emit(opt, to_json(v));
    status = v.is_wavelet_set ? 0 : 1;
  });

  // family
  auto* family = app.add_subcommand("family", "Emit a member of a shipped wavelet-set family");
  std::string family_name, param;
  std::string subset_path;
  family->add_option("--name", family_name, "shannon | shannon-path | journe | journe-path | subset-ext | d-dilation")
      ->required();
  family->add_option("--param", param, "Family parameter p/q (multiple of pi for paths; d for d-dilation)");
  family->add_option("--set", subset_path, "PiSet JSON for A (subset-ext)");
  family->callback([&] {
    auto need_param = [&] {
      if (param.empty()) throw Error(ErrorCode::InvalidInput, "--param is required for " + family_name);
      return param;
    };
    PiSet e;
    if (family_name == "shannon") e = shannon();
    else if (family_name == "journe") e = journe();
    else if (family_name == "shannon-path") e = shannon_path(PiRational::parse(need_param()));
    else if (family_name == "journe-path") e = journe_path(PiRational::parse(need_param()));
    else if (family_name == "d-dilation") e = d_dilation_set(parse_rational(need_param()));
    else if (family_name == "subset-ext") {
      if (subset_path.empty()) throw Error(ErrorCode::InvalidInput, "--set is required for subset-ext");
      e = subset_extension(pi_set_from_json(read_json(subset_path)));
    } else {
      throw Error(ErrorCode::InvalidInput, "unknown family " + family_name);
    }
    emit(opt, to_json(e));
  });

  // interp
  auto* interp = app.add_subcommand("interp", "Interpolation map and torsion, or the coefficient criterion");
  std::string e_path, f_path, criterion_path;
  int kmax = 4;
  interp->add_option("-e,--e", e_path, "Source wavelet set");
  interp->add_option("-f,--f", f_path, "Target wavelet set");
  interp->add_option("--kmax", kmax, "Largest torsion order tried");
  interp->add_option("--criterion", criterion_path, "CoefficientFamily JSON");
  interp->callback([&] {
    if (!criterion_path.empty()) {
      const auto fam = family_from_json(read_json(criterion_path));
      const auto report = coefficient_report(fam, tol_or(opt, kUnitarityTol));
      Json j = to_json(report);
      if (report.unitary) j["symbol"] = to_json(interpolated_symbol(fam));
      emit(opt, j);
      status = report.unitary ? 0 : 1;
      return;
    }
    if (e_path.empty() || f_path.empty())
      throw Error(ErrorCode::InvalidInput, "interp needs --e and --f, or --criterion");
    const auto m = build_sigma(pi_set_from_json(read_json(e_path)), pi_set_from_json(read_json(f_path)));
    const auto t = torsion_order(m, kmax);
    emit(opt, {{"map", to_json(m)},
               {"kmax", kmax},
               {"torsion_order", t ? Json(*t) : Json(nullptr)},
               {"involution", t && *t <= 2},
               {"measure_preserving", check_measure_preserving(m)}});
  });

  // gram
  auto* gram = app.add_subcommand("gram", "Gram window of the wavelet system of a symbol");
  std::string symbol_path, phase_path;
  int n_win = 2;
  long l_win = 6;
  gram->add_option("--symbol", symbol_path, "FrequencySymbol or PiSet JSON")->required();
  gram->add_option("--phase", phase_path, "Real DilationPeriodicFunction applied as a phase (symbol must be a set)");
  gram->add_option("--n", n_win, "Dilation exponents -n..n");
  gram->add_option("--l", l_win, "Translations -l..l");
  gram->callback([&] {
    const Json js = read_json(symbol_path);
    FrequencySymbol sym;
    if (!phase_path.empty()) {
      sym = phase_modulate(pi_set_from_json(js), periodic_from_json(read_json(phase_path)));
    } else {
      sym = symbol_from_json(js);
    }
    const auto w = gram_window(sym, n_win, l_win);
    Json j = to_json(w);
    j["identity"] = w.deviation <= tol_or(opt, 1e-10);
    emit(opt, j);
  });

  // sample
  auto* sample = app.add_subcommand("sample", "Time-domain samples of a symbol as CSV (t, re, im)");
  std::string grid_arg;
  sample->add_option("--symbol", symbol_path, "FrequencySymbol or PiSet JSON")->required();
  sample->add_option("--grid", grid_arg, "CSV file or inline comma-separated t values")->required();
  sample->callback([&] {
    const auto sym = symbol_from_json(read_json(symbol_path));
    const auto grid = read_numbers(grid_arg);
    const auto vals = time_samples(sym, grid);
    std::ostringstream os;
    os.precision(17);
    os << "t,re,im\n";
    for (std::size_t i = 0; i < grid.size(); ++i) os << grid[i] << "," << vals[i].real() << "," << vals[i].imag() << "\n";
    write_text(opt, os.str());
  });

  // lab
  auto* lab = app.add_subcommand("lab", "Finite unitary systems");
  lab->require_subcommand(1);
  std::string system_path, x_path, psi_path, eta_path, lambda_arg = "0";
  double alpha = 0.7853981633974483;
  auto add_system = [&](CLI::App* c) { c->add_option("--system", system_path, "UnitarySystem JSON")->required(); };
  auto system = [&] { return system_from_json(read_json(system_path)); };
  auto vec = [&](const std::string& p) { return vector_from_json(read_json(p)); };

  auto* regular = lab->add_subcommand("regular", "Regular representation of a group table");
  regular->add_option("--table", system_path, "JSON with \"group_table\"")->required();
  regular->callback([&] { emit(opt, to_json(system())); });

  auto* wander = lab->add_subcommand("wandering", "Wandering and complete-wandering verdicts");
  add_system(wander);
  wander->add_option("--x", x_path, "Vector JSON")->required();
  wander->callback([&] {
    const auto u = system();
    const auto x = vec(x_path);
    const bool w = is_wandering_vector(u, x, tol_or(opt, 1e-10));
    emit(opt, {{"wandering", w}, {"complete", is_complete_wandering_vector(u, x, tol_or(opt, 1e-10))}});
    status = w ? 0 : 1;
  });

  auto* local = lab->add_subcommand("local-commutant", "Basis of the local commutant at x");
  add_system(local);
  local->add_option("--x", x_path, "Vector JSON")->required();
  local->callback([&] { emit(opt, to_json(local_commutant(system(), vec(x_path), tol_or(opt, kRankTol)))); });

  auto* comm = lab->add_subcommand("commutant", "Basis of the commutant");
  add_system(comm);
  comm->callback([&] { emit(opt, to_json(commutant(system(), tol_or(opt, kRankTol)))); });

  auto* interp_u = lab->add_subcommand("interpolate", "Interpolation unitary between complete wandering vectors");
  add_system(interp_u);
  interp_u->add_option("--psi", psi_path)->required();
  interp_u->add_option("--eta", eta_path)->required();
  interp_u->callback([&] {
    const Matrix v = interpolation_unitary(system(), vec(psi_path), vec(eta_path), tol_or(opt, 1e-10));
    const Matrix id = Matrix::Identity(v.rows(), v.cols());
    emit(opt, {{"unitary", to_json(v)}, {"symmetry", max_abs(v * v - id) <= tol_or(opt, 1e-10)}});
  });

  auto* riesz = lab->add_subcommand("riesz", "Is psi1 + lambda psi2 a complete Riesz vector");
  add_system(riesz);
  riesz->add_option("--psi", psi_path)->required();
  riesz->add_option("--eta", eta_path, "Second vector")->required();
  riesz->add_option("--lambda", lambda_arg, "re[,im]");
  riesz->callback([&] {
    const auto parts = read_numbers(lambda_arg);
    if (parts.empty() || parts.size() > 2) throw Error(ErrorCode::InvalidInput, "--lambda takes re or re,im");
    const Complex lambda(parts[0], parts.size() > 1 ? parts[1] : 0.0);
    const bool ok = riesz_combination_check(system(), vec(psi_path), vec(eta_path), lambda);
    emit(opt, {{"riesz", ok}});
    status = ok ? 0 : 1;
  });

  auto* pair = lab->add_subcommand("pair-test", "rho = cos a psi + i sin a eta wandering, and V^2 = I");
  add_system(pair);
  pair->add_option("--psi", psi_path)->required();
  pair->add_option("--eta", eta_path)->required();
  pair->add_option("--alpha", alpha, "Angle in (0, pi/2)");
  pair->callback([&] {
    const auto r = interpolation_pair_test(system(), vec(psi_path), vec(eta_path), alpha, tol_or(opt, 1e-10));
    emit(opt, {{"rho_is_wandering", r.rho_is_wandering}, {"v_squared_is_identity", r.v_squared_is_identity}});
  });

  auto* fvec = lab->add_subcommand("frame-vector", "Classify x against a complete wandering psi");
  add_system(fvec);
  fvec->add_option("--psi", psi_path)->required();
  fvec->add_option("--x", x_path)->required();
  fvec->callback([&] {
    const auto r = parseval_frame_vector_check(system(), vec(psi_path), vec(x_path), tol_or(opt, 1e-10));
    emit(opt, {{"kind", frame_vector_kind_name(r.kind)},
               {"a", to_json(r.a)},
               {"partial_isometry", r.partial_isometry},
               {"complete", r.complete}});
  });

  // frames
  auto* frames = app.add_subcommand("frames", "Frame bounds, Parseval test, Naimark complement, multiplexing");
  std::string frame_path, g_path, y_path, op = "bounds";
  bool csv = false;
  frames->add_option("--frame", frame_path, "Synthesis matrix JSON (n x k, vectors as columns)")->required();
  frames->add_option("--op", op, "bounds | parseval | naimark | disjoint | multiplex")->required();
  frames->add_option("--g", g_path, "Second frame for disjoint/multiplex");
  frames->add_option("--x", x_path, "Vector for multiplex");
  frames->add_option("--y", y_path, "Vector for multiplex");
  frames->add_flag("--csv", csv, "naimark: write the complement's vectors as CSV");
  frames->callback([&] {
    const Matrix f = matrix_from_json(read_json(frame_path));
    const double tol = tol_or(opt, 1e-10);
    auto need = [](const std::string& p, const char* flag) {
      if (p.empty()) throw Error(ErrorCode::InvalidInput, std::string(flag) + " is required");
      return p;
    };
    if (op == "bounds") {
      const auto b = frame_bounds(f);
      emit(opt, {{"lower", b.lower}, {"upper", b.upper}, {"is_frame", b.is_frame},
                 {"frame_operator", to_json(frame_operator(f))}});
      status = b.is_frame ? 0 : 1;
    } else if (op == "parseval") {
      const bool p = is_parseval(f, tol);
      emit(opt, {{"parseval", p}});
      status = p ? 0 : 1;
    } else if (op == "naimark") {
      const Matrix g = naimark_complement(f, tol);
      if (csv) write_text(opt, matrix_csv(g));
      else emit(opt, {{"complement", to_json(g)}});
    } else if (op == "disjoint") {
      const bool d = strongly_disjoint(f, matrix_from_json(read_json(need(g_path, "--g"))), tol);
      emit(opt, {{"strongly_disjoint", d}});
      status = d ? 0 : 1;
    } else if (op == "multiplex") {
      const Matrix g = matrix_from_json(read_json(need(g_path, "--g")));
      const auto [x2, y2] = multiplex_roundtrip(f, g, vec(need(x_path, "--x")), vec(need(y_path, "--y")), tol);
      emit(opt, {{"x", to_json(Matrix(x2))}, {"y", to_json(Matrix(y2))}});
    } else {
      throw Error(ErrorCode::InvalidInput, "unknown frames op " + op);
    }
  });

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Rank-one, projection and ellipsoidal-tight-frame synthesis");
  std::string matrix_path, weights_arg;
  int projections = 0, etf = 0;
  decompose->add_option("--matrix", matrix_path, "Hermitian matrix JSON (B, or T for --etf)")->required();
  auto* w_opt = decompose->add_option("--weights", weights_arg, "CSV weights");
  auto* p_opt = decompose->add_option("--projections", projections, "k rank-one projections");
  auto* e_opt = decompose->add_option("--etf", etf, "ETF length k");
  w_opt->excludes(p_opt)->excludes(e_opt);
  p_opt->excludes(e_opt);
  decompose->callback([&] {
    const Matrix b = matrix_from_json(read_json(matrix_path));
    if (!weights_arg.empty()) {
      emit(opt, to_json(weighted_decomposition(b, read_numbers(weights_arg))));
    } else if (projections > 0) {
      emit(opt, to_json(projection_decomposition(b, projections)));
    } else if (etf > 0) {
      const auto r = etf_construct(b, etf);
      emit(opt, {{"frame", to_json(r.frame)}, {"bound", r.bound}});
    } else {
      throw Error(ErrorCode::InvalidInput, "decompose needs --weights, --projections or --etf");
    }
  });

  // suite
  auto* suite = app.add_subcommand("suite", "Run the acceptance battery and emit one JSON report");
  bool timing = false;
  suite->add_flag("--timing", timing, "Include wall-clock times (breaks byte-identical output)");
  suite->callback([&] {
    const auto report = run_acceptance(opt.seed);
    emit(opt, to_json(report, timing));
    status = report.passed ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << Json{{"error", {{"code", error_code_name(ErrorCode::InvalidInput)}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << Json{{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", {{"code", error_code_name(ErrorCode::Internal)}, {"message", e.what()}}}}.dump() << "\n";
    return 2;
  }
  return status;
}
