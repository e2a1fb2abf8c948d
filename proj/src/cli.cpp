#include "tensorbraid/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tensorbraid/identities.hpp"
#include "tensorbraid/tensor_braiding.hpp"

namespace tensorbraid {

namespace {

constexpr unsigned kMaxSweepBound = 12;
constexpr unsigned kMaxGrade = 8;

// Bad flags or unusable input files; reported with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool all = false;
  std::vector<std::string> names;
  std::optional<unsigned> bound;
  std::string out_path;
  unsigned jobs = 1;
  std::uint64_t seed = 1;

  std::string rmatrix;
  std::string rmatrix_prime;
  std::string map;
  std::string operator_path;
  std::string q;
  std::optional<unsigned> max_grade;
  double tol = 1e-9;
  bool exact = false;
};

unsigned default_bound(const std::string& name) {
  if (name.rfind("sytso", 0) == 0 || name == "robrbin") return 5;
  if (name == "shaiden") return 7;
  if (name.rfind("beta_", 0) == 0 && name != "beta_exchange") return 8;
  if (name.rfind("shuffle_", 0) == 0 || name == "omega_recursion") return 8;
  return 6;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  return file;
}

std::string residual_text(double v) {
  std::ostringstream s;
  s << std::setprecision(3) << std::scientific << v;
  return s.str();
}

std::string numeric_record(const NumericReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["holds"] = r.holds;
  j["max_residual"] = r.max_residual;
  j["relative_residual"] = r.relative_residual;
  j["worst"] = r.worst;
  j["elapsed_ms"] = r.elapsed.count();
  return j.dump();
}

int cmd_identities(const Options& o, std::ostream& out, std::ostream& err) {
  const auto known = identity_names();
  std::vector<std::string> names = o.all ? known : o.names;
  if (names.empty()) throw InputError("identities: give --all or at least one --name");
  for (const auto& name : names) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw InputError("unknown identity '" + name + "'");
    }
  }
  if (o.bound && *o.bound > kMaxSweepBound) {
    throw InputError("--bound above the safety limit " + std::to_string(kMaxSweepBound));
  }
  std::optional<std::ofstream> file;
  if (!o.out_path.empty()) file = open_output(o.out_path);

  bool ok = true;
  for (const auto& name : names) {
    const unsigned bound = o.bound.value_or(default_bound(name));
    const auto reports = sweep(name, bound, o.jobs, o.seed);
    std::size_t failed = 0;
    double elapsed = 0.0;
    for (const auto& r : reports) {
      elapsed += r.elapsed.count();
      if (!r.holds) {
        ++failed;
        err << "FAILED " << report_record(r) << '\n';
      }
      if (file) *file << report_record(r) << '\n';
    }
    ok = ok && failed == 0;
    out << name << " bound=" << bound << " cases=" << reports.size() << " failed=" << failed << " elapsed_ms="
        << std::fixed << std::setprecision(1) << elapsed << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

template <class T>
T parse_q(const Options& o) {
  if (o.q.empty()) throw InputError("--q is required");
  T q;
  try {
    q = parse_scalar<T>(o.q);
  } catch (const std::exception& e) {
    throw InputError("bad --q value '" + o.q + "': " + e.what());
  }
  if (ScalarTraits<T>::is_zero(q)) throw InputError("q must be non-zero");
  return q;
}

unsigned require_grade(const Options& o) {
  if (!o.max_grade) throw InputError("--max-grade is required");
  if (*o.max_grade > kMaxGrade) throw InputError("--max-grade above the limit " + std::to_string(kMaxGrade));
  return *o.max_grade;
}

template <class T>
RMatrix<T> load_valid_rmatrix(const std::string& path, double tol) {
  if (path.empty()) throw InputError("an R-matrix path is required");
  auto r = load_rmatrix<T>(path);
  const auto check = check_rmatrix(r, tol);
  if (!check.ok) {
    throw InputError(path + ": not an invertible solution of the braid relation (residual " +
                     residual_text(check.ybe_residual) + ")");
  }
  return r;
}

template <class T>
GradedOperator<double> as_double(const GradedOperator<T>& op) {
  if constexpr (std::is_same_v<T, double>) {
    return op;
  } else {
    GradedOperator<double>::Blocks blocks;
    for (const auto& [label, m] : op.blocks()) {
      std::vector<double> data;
      data.reserve(m.data().size());
      for (const auto& v : m.data()) data.push_back(v.to_double());
      blocks.emplace(label, DenseMatrix<double>(m.rows(), m.cols(), std::move(data)));
    }
    return GradedOperator<double>::from_blocks(op.dim(), op.q().to_double(), op.max_grade(), std::move(blocks),
                                               Triangularity::Unchecked);
  }
}

template <class T>
int cmd_rmatrix_check(const Options& o, std::ostream& out, std::ostream&) {
  if (o.rmatrix.empty()) throw InputError("--rmatrix is required");
  const auto r = load_rmatrix<T>(o.rmatrix);
  const auto check = check_rmatrix(r, o.tol);
  out << "dim=" << r.dim << " ybe_residual=" << residual_text(check.ybe_residual)
      << " invertible=" << (check.invertible ? "yes" : "no") << " ok=" << (check.ok ? "yes" : "no") << '\n';
  return check.ok ? kExitOk : kExitVerificationFailed;
}

template <class T>
int cmd_build(const Options& o, std::ostream& out, std::ostream&) {
  const auto r = load_valid_rmatrix<T>(o.rmatrix, o.tol);
  const T q = parse_q<T>(o);
  const unsigned g = require_grade(o);
  const auto op = assemble(r, q, g, o.tol);
  const auto conditions = block_condition_numbers(as_double(op));
  out << "blocks=" << op.blocks().size() << " dim=" << op.dim() << " max_grade=" << g << '\n';
  for (const auto& [label, cond] : conditions) {
    out << "  block " << label.a << ' ' << label.b << ' ' << label.c << " size=" << op.block(label)->rows()
        << " cond=" << residual_text(cond) << '\n';
  }
  if (!o.out_path.empty()) open_output(o.out_path) << graded_operator_to_json(op) << '\n';
  return kExitOk;
}

template <class T>
int cmd_verify_ybe(const Options& o, std::ostream& out, std::ostream&) {
  GradedOperator<T> op;
  if (!o.operator_path.empty()) {
    if (!o.rmatrix.empty()) throw InputError("give either --operator or --rmatrix, not both");
    op = load_graded_operator<T>(o.operator_path);
  } else {
    const auto r = load_valid_rmatrix<T>(o.rmatrix, o.tol);
    op = assemble(r, parse_q<T>(o), require_grade(o), o.tol);
  }
  const unsigned g = o.max_grade.value_or(op.max_grade());
  if (g > op.max_grade()) throw InputError("grade exceeds the operator's max grade");
  std::optional<std::ofstream> file;
  if (!o.out_path.empty()) file = open_output(o.out_path);
  bool ok = true;
  for (unsigned grade = 0; grade <= g; ++grade) {
    const auto report = check_ybe_graded(op, grade, o.tol);
    ok = ok && report.holds;
    out << "grade " << grade << " max_residual=" << residual_text(report.max_residual)
        << " relative=" << residual_text(report.relative_residual) << (report.holds ? " ok" : " FAILED") << '\n';
    if (file) *file << numeric_record(report) << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

template <class T>
int cmd_functoriality(const Options& o, std::ostream& out, std::ostream& err) {
  const auto r = load_valid_rmatrix<T>(o.rmatrix, o.tol);
  const auto rp = load_valid_rmatrix<T>(o.rmatrix_prime, o.tol);
  if (o.map.empty()) throw InputError("--map is required");
  const auto f = load_intertwiner<T>(o.map);
  if (f.source_dim != r.dim || f.target_dim != rp.dim) throw InputError("map dimensions do not match the R-matrices");
  const T q = parse_q<T>(o);
  const unsigned g = require_grade(o);

  const double pre = intertwiner_residual(f, r, rp);
  const bool pre_ok = ScalarTraits<T>::exact ? pre == 0.0 : pre <= o.tol;
  if (!pre_ok) {
    err << "map does not intertwine the R-matrices: residual=" << residual_text(pre) << '\n';
    return kExitPrecondition;
  }
  const auto op = assemble(r, q, g, o.tol);
  const auto op_prime = assemble(rp, q, g, o.tol);
  std::optional<std::ofstream> file;
  if (!o.out_path.empty()) file = open_output(o.out_path);
  bool ok = true;
  for (unsigned grade = 0; grade <= g; ++grade) {
    const auto report = check_functoriality(op, op_prime, f, grade, o.tol);
    ok = ok && report.holds;
    out << "grade " << grade << " max_residual=" << residual_text(report.max_residual)
        << " relative=" << residual_text(report.relative_residual) << (report.holds ? " ok" : " FAILED") << '\n';
    if (file) *file << numeric_record(report) << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

template <template <class> class Command>
int dispatch(const Options& o, std::ostream& out, std::ostream& err) {
  if (!(o.tol > 0)) throw InputError("--tol must be positive");
  return o.exact ? Command<Rational>{}(o, out, err) : Command<double>{}(o, out, err);
}

#define TENSORBRAID_COMMAND(name)                                                 \
  template <class T>                                                              \
  struct name##_t {                                                               \
    int operator()(const Options& o, std::ostream& out, std::ostream& err) const { \
      return name<T>(o, out, err);                                                \
    }                                                                             \
  };
TENSORBRAID_COMMAND(cmd_rmatrix_check)
TENSORBRAID_COMMAND(cmd_build)
TENSORBRAID_COMMAND(cmd_verify_ybe)
TENSORBRAID_COMMAND(cmd_functoriality)
#undef TENSORBRAID_COMMAND

void add_numeric_flags(CLI::App* sub, Options& o) {
  sub->add_option("--tol", o.tol, "Tolerance (relative, floating point mode)")->capture_default_str();
  sub->add_flag("--exact", o.exact, "Exact rational arithmetic");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Braid-ring identities and tensor-space braidings", "tensorbraid"};
  app.require_subcommand(1);

  auto* identities = app.add_subcommand("identities", "Run exact identity sweeps");
  identities->add_flag("--all", o.all, "Every registered identity");
  identities->add_option("--name", o.names, "Identity name (repeatable)");
  identities->add_option("--bound", o.bound, "Bound on the parameter sum");
  identities->add_option("--out", o.out_path, "Report file (JSON lines)");
  identities->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  identities->add_option("--seed", o.seed, "Seed for randomized identities");

  auto* rcheck = app.add_subcommand("rmatrix-check", "Check the braid relation and invertibility of an R-matrix");
  rcheck->add_option("--rmatrix", o.rmatrix, "R-matrix file");
  add_numeric_flags(rcheck, o);

  auto* build = app.add_subcommand("build", "Assemble the graded braiding and export it");
  build->add_option("--rmatrix", o.rmatrix, "R-matrix file");
  build->add_option("--q", o.q, "Value of q");
  build->add_option("--max-grade", o.max_grade, "Largest total grade");
  build->add_option("--out", o.out_path, "Operator file (JSON)");
  add_numeric_flags(build, o);

  auto* ybe = app.add_subcommand("verify-ybe", "Check the Yang-Baxter equation grade by grade");
  ybe->add_option("--rmatrix", o.rmatrix, "R-matrix file");
  ybe->add_option("--operator", o.operator_path, "Operator file written by build");
  ybe->add_option("--q", o.q, "Value of q (with --rmatrix)");
  ybe->add_option("--max-grade", o.max_grade, "Check grades 0..g");
  ybe->add_option("--out", o.out_path, "Report file (JSON lines)");
  add_numeric_flags(ybe, o);

  auto* functor = app.add_subcommand("functoriality", "Check that f^{(x)n} intertwines two graded braidings");
  functor->add_option("--rmatrix", o.rmatrix, "Source R-matrix file");
  functor->add_option("--rmatrix-prime", o.rmatrix_prime, "Target R-matrix file");
  functor->add_option("--map", o.map, "Linear map file");
  functor->add_option("--q", o.q, "Value of q");
  functor->add_option("--max-grade", o.max_grade, "Check grades 0..g");
  functor->add_option("--out", o.out_path, "Report file (JSON lines)");
  add_numeric_flags(functor, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (identities->parsed()) return cmd_identities(o, out, err);
    if (rcheck->parsed()) return dispatch<cmd_rmatrix_check_t>(o, out, err);
    if (build->parsed()) return dispatch<cmd_build_t>(o, out, err);
    if (ybe->parsed()) return dispatch<cmd_verify_ybe_t>(o, out, err);
    if (functor->parsed()) return dispatch<cmd_functoriality_t>(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitInternalError;
}

}  // namespace tensorbraid
