#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "poincare/json_io.hpp"
#include "poincare/poincare.hpp"

namespace poincare::cli {

namespace {

using nlohmann::json;
namespace codec = poincare::json;

// Input problems that are the caller's fault: unreadable files, malformed
// JSON, wrong document shape.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

json parse_inline(const std::string& flag, const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(); }

struct Options {
  std::string series_file;
  std::vector<std::string> spec_files;
  int order = 0;
  int max_weight = 0;
  int max_order = 4;
  int max_index = 10;
  std::string method = "both";
  bool skip_dim_check = false;
  std::string partition;
  std::optional<std::string> inner;
  std::string x = "[]";
  std::string y = "[]";
  std::string shape;
  std::string weight;
  std::string mu;
  std::string gamma;
  std::string lambda;
};

QuantumSpaceSpec load_spec(const std::string& path) {
  return codec::decode_spec(read_json_file(path));
}

int cmd_dual(const Options& o, std::ostream& out) {
  const auto series = codec::decode_series(read_json_file(o.series_file));
  out << dump(codec::encode(dual_series(series.truncated(o.order)))) << '\n';
  return kSuccess;
}

int cmd_dims(const Options& o, std::ostream& out) {
  const auto spec = load_spec(o.spec_files.front());
  out << dump(codec::encode(comodule_dims(spec, o.max_weight))) << '\n';
  return kSuccess;
}

int cmd_e_series(const Options& o, std::ostream& out) {
  const auto spec = load_spec(o.spec_files.front());
  const auto check = o.skip_dim_check ? DimensionCheck::skip : DimensionCheck::enforce;
  auto coeffs = [](const TruncatedSeries& s) { return codec::encode(s)["coeffs"]; };
  if (o.method == "dims") {
    out << dump({{"coeffs", coeffs(e_series_via_dims(spec, o.order, check))}}) << '\n';
    return kSuccess;
  }
  if (o.method == "star") {
    out << dump({{"coeffs", coeffs(e_series_via_star(spec, o.order))}}) << '\n';
    return kSuccess;
  }
  const auto by_dims = e_series_via_dims(spec, o.order, check);
  const auto by_star = e_series_via_star(spec, o.order);
  if (by_dims == by_star) {
    out << dump({{"coeffs", coeffs(by_dims)}, {"agreement", true}}) << '\n';
    return kSuccess;
  }
  out << dump({{"agreement", false},
               {"coeffs_dims", coeffs(by_dims)},
               {"coeffs_star", coeffs(by_star)}})
      << '\n';
  return kDomainError;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto spec = load_spec(o.spec_files.front());
  out << dump(codec::encode(classify(spec, o.max_weight))) << '\n';
  return kSuccess;
}

int cmd_check_tp(const Options& o, std::ostream& out) {
  const auto series = codec::decode_series(read_json_file(o.series_file));
  const auto report = check_p_sequence(series.coeffs(), {o.max_order, o.max_index});
  out << dump(codec::encode(report)) << '\n';
  return kSuccess;
}

int cmd_check_pp(const Options& o, std::ostream& out) {
  const auto f = codec::decode_factored(read_json_file(o.series_file));
  out << dump(codec::encode(check_pp_sequence(f, {o.max_order, o.max_index}))) << '\n';
  return kSuccess;
}

int cmd_hecke_sum(const Options& o, std::ostream& out) {
  const auto sum = hecke_sum(load_spec(o.spec_files[0]), load_spec(o.spec_files[1]));
  out << dump(codec::encode(sum)) << '\n';
  return kSuccess;
}

int cmd_schur(const Options& o, std::ostream& out) {
  const auto spec = load_spec(o.spec_files.front());
  const auto outer = codec::decode_partition(parse_inline("--partition", o.partition));
  const auto inner = o.inner ? codec::decode_partition(parse_inline("--inner", *o.inner))
                             : Partition{};
  const SkewShape shape(outer, inner);
  const auto sp = specialization(spec, std::max(outer.weight(), 1));
  json result{{"partition", codec::encode(outer)},
              {"value", codec::encode(skew_schur_value(sp, shape))}};
  if (o.inner) result["inner"] = codec::encode(inner);
  out << dump(result) << '\n';
  return kSuccess;
}

int cmd_super_schur(const Options& o, std::ostream& out) {
  const auto x = codec::decode_rationals(parse_inline("--x", o.x));
  const auto y = codec::decode_rationals(parse_inline("--y", o.y));
  const auto lambda = codec::decode_partition(parse_inline("--partition", o.partition));
  out << dump({{"value", codec::encode(super_schur_value(x, y, lambda))}}) << '\n';
  return kSuccess;
}

int cmd_kostka(const Options& o, std::ostream& out) {
  const auto shape = codec::decode_partition(parse_inline("--shape", o.shape));
  const auto weight = codec::decode_integers(parse_inline("--weight", o.weight));
  out << dump({{"value", kostka(shape, weight).get_si()}}) << '\n';
  return kSuccess;
}

int cmd_lr(const Options& o, std::ostream& out) {
  const auto mu = codec::decode_partition(parse_inline("--mu", o.mu));
  const auto gamma = codec::decode_partition(parse_inline("--gamma", o.gamma));
  const auto lambda = codec::decode_partition(parse_inline("--lambda", o.lambda));
  out << dump({{"value", lr_coefficient(mu, gamma, lambda).get_si()}}) << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poincare series of quadratic algebras attached to Hecke operators"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> handler;

  auto add = [&](const std::string& name, const std::string& help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };
  auto nonneg = CLI::NonNegativeNumber;

  auto* dual = add("dual", "dual series q(t) = 1/p(-t)", cmd_dual);
  dual->add_option("--series", o.series_file, "series JSON file")->required();
  dual->add_option("--order", o.order, "truncation order")->required()->check(nonneg);

  auto* dims = add("dims", "simple comodule dimension table", cmd_dims);
  dims->add_option("--spec", o.spec_files, "quantum space spec JSON")->required()->expected(1);
  dims->add_option("--max-weight", o.max_weight)->required()->check(nonneg);

  auto* es = add("e-series", "Poincare series of the bialgebra E", cmd_e_series);
  es->add_option("--spec", o.spec_files)->required()->expected(1);
  es->add_option("--order", o.order)->required()->check(nonneg);
  es->add_option("--method", o.method)->check(CLI::IsMember({"dims", "star", "both"}));
  es->add_flag("--skip-dim-check", o.skip_dim_check,
               "sum raw Schur values without integrality checks");

  auto* cl = add("classify", "rank / super-rank classification", cmd_classify);
  cl->add_option("--spec", o.spec_files)->required()->expected(1);
  cl->add_option("--max-weight", o.max_weight)->required()->check(nonneg);

  auto* tp = add("check-tp", "bounded total-positivity check", cmd_check_tp);
  tp->add_option("--series", o.series_file)->required();
  tp->add_option("--max-order", o.max_order)->required()->check(CLI::PositiveNumber);
  tp->add_option("--max-index", o.max_index)->required()->check(CLI::PositiveNumber);

  auto* pp = add("check-pp", "PP-sequence certification of Edrei data", cmd_check_pp);
  pp->add_option("--series", o.series_file, "factored series JSON")->required();
  pp->add_option("--max-order", o.max_order)->check(CLI::PositiveNumber);
  pp->add_option("--max-index", o.max_index)->check(CLI::PositiveNumber);

  auto* hs = add("hecke-sum", "Hecke sum of two specs", cmd_hecke_sum);
  hs->add_option("--spec", o.spec_files)->required()->expected(2);

  auto* sc = add("schur", "(skew) Schur value at a spec", cmd_schur);
  sc->add_option("--spec", o.spec_files)->required()->expected(1);
  sc->add_option("--partition", o.partition)->required();
  sc->add_option("--inner", o.inner);

  auto* ss = add("super-schur", "hook Schur function value", cmd_super_schur);
  ss->add_option("--x", o.x);
  ss->add_option("--y", o.y);
  ss->add_option("--partition", o.partition)->required();

  auto* ko = add("kostka", "Kostka number", cmd_kostka);
  ko->add_option("--shape", o.shape)->required();
  ko->add_option("--weight", o.weight)->required();

  auto* lr = add("lr", "Littlewood-Richardson coefficient", cmd_lr);
  lr->add_option("--mu", o.mu)->required();
  lr->add_option("--gamma", o.gamma)->required();
  lr->add_option("--lambda", o.lambda)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  try {
    return handler(o, out);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const codec::SchemaError& e) {
    err << "malformed input: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    out << dump(codec::encode(e)) << '\n';
    return kDomainError;
  }
}

}  // namespace poincare::cli
