#include "thermoid/cli/app.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thermoid/cli/expression.hpp"
#include "thermoid/derivcalc/enumerate.hpp"
#include "thermoid/error.hpp"
#include "thermoid/models/evaluate.hpp"
#include "thermoid/models/state_grid.hpp"
#include "thermoid/models/sweep.hpp"
#include "thermoid/polyalg/parse.hpp"
#include "thermoid/prover/constraints.hpp"
#include "thermoid/prover/discovery.hpp"
#include "thermoid/prover/expand.hpp"
#include "thermoid/prover/report.hpp"
#include "thermoid/prover/verify.hpp"

namespace thermoid::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

polyalg::MonomialOrder order_from_name(const std::string& name) {
  if (name == "lex") return polyalg::MonomialOrder::lex();
  if (name == "grlex") return polyalg::MonomialOrder::grlex();
  throw UsageError("unknown order '" + name + "' (expected lex or grlex)");
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(models::parse_number(item));
  if (out.empty()) throw UsageError("empty coefficient list");
  return out;
}

struct ModelOptions {
  std::string kind = "ideal";
  std::string gamma = "5/3";
  std::string a = "1";
  std::string b = "1/2";
  std::string gamma_coeffs = "7/5";

  models::GasModel build() const {
    if (kind == "ideal") return models::GasModel::ideal_gas(models::parse_number(gamma));
    if (kind == "vdw")
      return models::GasModel::van_der_waals(models::parse_number(a), models::parse_number(b),
                                             models::parse_number(gamma));
    if (kind == "synthesis")
      return models::GasModel::synthesis(parse_number_list(gamma_coeffs), models::parse_number(a),
                                         models::parse_number(b));
    throw UsageError("unknown model '" + kind + "' (expected ideal, vdw or synthesis)");
  }
};

std::vector<models::GasModel> default_models() {
  return {models::GasModel::ideal_gas(5.0 / 3), models::GasModel::ideal_gas(7.0 / 5),
          models::GasModel::van_der_waals(1, 0.5, 7.0 / 5)};
}

std::vector<models::StatePoint> default_states() { return models::state_grid(1.5, 3, 3, 1.5, 3, 3); }

class App {
 public:
  App(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int expand(const std::string& text, bool reduce, bool as_json) {
    const Expression e = parse_expression(text);
    ratfun::RationalFunction value = prover::expand(e);
    if (reduce) value = prover::ConstraintSystem::instance().reduce(value);
    if (as_json)
      out_ << json{{"input", text}, {"reduced", reduce}, {"numerator", value.numerator().to_string(ratfun::kCanonicalOrder)},
                   {"denominator", value.denominator().to_string(ratfun::kCanonicalOrder)},
                   {"value", value.to_string()}}.dump(2)
           << '\n';
    else
      out_ << value.to_string() << '\n';
    return 0;
  }

  int verify(const std::string& file, const std::vector<std::string>& inline_ids, const std::string& grid,
             bool no_constraints, bool as_json) {
    std::vector<prover::Identity> ids;
    if (!file.empty()) ids = prover::parse_identity_file(read_file(file));
    for (const std::string& text : inline_ids) ids.push_back(prover::Identity::parse(text));
    if (ids.empty()) throw UsageError("no identities given (use --file or pass them inline)");
    const std::vector<models::StatePoint> states = grid.empty() ? default_states() : models::parse_state_grid(grid);
    return verify_batch(ids, states, no_constraints, as_json);
  }

  int eval(const ModelOptions& opts, const std::string& at, const std::string& text, bool as_json) {
    const models::GasModel model = opts.build();
    const models::StatePoint s = models::parse_state(at);
    const double value = models::eval_quantity(model, parse_expression(text), s);
    if (as_json)
      out_ << json{{"model", model.name()}, {"x", s.x}, {"y", s.y}, {"expression", text}, {"value", value}}.dump(2)
           << '\n';
    else
      out_ << std::setprecision(15) << value << '\n';
    return 0;
  }

  int groebner(const std::string& file, const std::string& order_name, bool as_json) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open '" + file + "'");
    const polyalg::RelationFile rf = polyalg::read_relation_file(in);
    const polyalg::MonomialOrder order = order_from_name(order_name);
    polyalg::BuchbergerStats stats;
    const polyalg::GroebnerBasis gb = rf.relations.empty() ? polyalg::GroebnerBasis(rf.vars, {}, order, true)
                                                           : polyalg::buchberger(rf.relations, order, &stats);
    print_basis(gb, as_json, {{"pairs_considered", stats.pairs_considered},
                              {"coprime_skips", stats.coprime_skips},
                              {"chain_skips", stats.chain_skips},
                              {"zero_reductions", stats.zero_reductions}});
    return 0;
  }

  int discover(const std::string& order_name, bool as_json) {
    const prover::ReferenceSystem& sys = prover::reference_system();
    const polyalg::MonomialOrder order = order_from_name(order_name);
    const auto t0 = std::chrono::steady_clock::now();
    const polyalg::GroebnerBasis gb = prover::discover(sys.relations, sys.vars, order);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const prover::BasisComparison cmp = prover::compare_with_reference(gb);
    std::size_t relations_in = 0;
    for (const auto& r : sys.relations) relations_in += gb.contains(r) ? 1 : 0;
    json summary{{"relations", sys.relations.size()},
                 {"relations_in_basis_ideal", relations_in},
                 {"reference_elements", cmp.reference_total},
                 {"reference_in_computed", cmp.reference_in_computed},
                 {"computed_in_reference", cmp.computed_in_reference},
                 {"identical_reduced_bases", cmp.identical_reduced_bases},
                 {"failures", cmp.failures.size()},
                 {"seconds", seconds}};
    print_basis(gb, as_json, summary);
    if (!as_json)
      for (const std::string& f : cmp.failures) out_ << "failure: " << f << '\n';
    return cmp.ideals_equal() && relations_in == sys.relations.size() ? 0 : 1;
  }

  int enumerate(const std::string& kind, bool list, std::size_t limit) {
    derivcalc::SpecKind k;
    if (kind == "triples")
      k = derivcalc::SpecKind::triples;
    else if (kind == "jacobians")
      k = derivcalc::SpecKind::jacobians;
    else if (kind == "seconds")
      k = derivcalc::SpecKind::seconds;
    else
      throw UsageError("unknown kind '" + kind + "' (expected triples, jacobians or seconds)");
    if (!list) {
      out_ << derivcalc::count(k) << '\n';
      return 0;
    }
    std::size_t printed = 0;
    auto emit = [&](auto&& stream) {
      for (const auto& spec : stream) {
        if (limit != 0 && printed == limit) break;
        out_ << derivcalc::to_string(spec) << '\n';
        ++printed;
      }
    };
    if (k == derivcalc::SpecKind::triples)
      emit(derivcalc::triples());
    else if (k == derivcalc::SpecKind::jacobians)
      emit(derivcalc::jacobians());
    else
      emit(derivcalc::seconds());
    return 0;
  }

  int maxwell(bool as_json) {
    const std::vector<prover::Identity> ids = prover::maxwell_relations();
    return verify_batch(ids, default_states(), false, as_json);
  }

  int selftest() {
    bool ok = true;
    auto line = [&](bool pass, const std::string& what) {
      out_ << (pass ? "PASS " : "FAIL ") << what << '\n';
      ok = ok && pass;
    };
    const std::vector<models::GasModel> ms = default_models();
    for (const models::GasModel& m : ms) {
      const auto grid = m.default_grid();
      const models::JacobianCheck jc = models::check_jacobian(m, grid, 1e-9);
      std::ostringstream os;
      os << "jacobian " << m.name() << " max |J-1| = " << jc.max_deviation;
      line(jc.passed, os.str());
    }
    {
      const models::GasModel synth = models::GasModel::synthesis({1.4, 0.02}, 0.5, 0.25);
      const auto grid = synth.default_grid();
      const models::JacobianCheck jc = models::check_jacobian(synth, grid, 1e-6);
      std::ostringstream os;
      os << "jacobian " << synth.name() << " max |J-1| = " << jc.max_deviation;
      line(jc.passed, os.str());
    }
    for (const models::GasModel& m : ms) {
      const models::StatePoint s{2, 3};
      const models::SweepResult r = models::sweep_triples(m, s);
      std::ostringstream os;
      os << "triples " << m.name() << " at " << models::to_string(s) << ": " << r.checked << " checked, "
         << r.degenerate << " degenerate, max deviation " << r.max_deviation << " (" << r.worst << ")";
      line(r.max_deviation <= 1e-5, os.str());
    }
    {
      const models::StatePoint s{2, 3};
      const models::SweepResult r = models::sweep_seconds(ms.front(), s, 200, 20240601);
      std::ostringstream os;
      os << "seconds " << ms.front().name() << " sample of 200: " << r.checked << " checked, " << r.degenerate
         << " degenerate, max deviation " << r.max_deviation << " (" << r.worst << ")";
      line(r.max_deviation <= 1e-4, os.str());
    }
    const auto states = default_states();
    for (const prover::Identity& id : prover::maxwell_relations()) {
      const prover::VerificationReport rep = prover::verify(id, ms, states);
      line(rep.status == prover::Status::proved && rep.max_relative_residual < 1e-8,
           "maxwell " + id.label + ": " + std::string(prover::to_string(rep.status)));
    }
    out_ << (ok ? "selftest passed" : "selftest FAILED") << '\n';
    return ok ? 0 : 1;
  }

 private:
  int verify_batch(const std::vector<prover::Identity>& ids, const std::vector<models::StatePoint>& states,
                   bool no_constraints, bool as_json) {
    const std::vector<models::GasModel> ms = default_models();
    prover::VerifyOptions opts;
    opts.use_constraints = !no_constraints;
    std::size_t proved = 0;
    json reports = json::array();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const prover::VerificationReport rep = prover::verify(ids[i], ms, states, opts);
      proved += rep.status == prover::Status::proved ? 1 : 0;
      if (as_json) {
        reports.push_back(prover::report_json(rep));
      } else {
        if (i != 0) out_ << '\n';
        out_ << prover::format_report(rep);
      }
    }
    if (as_json)
      out_ << json{{"reports", reports}, {"proved", proved}, {"total", ids.size()}}.dump(2) << '\n';
    else
      out_ << "\nsummary: " << proved << '/' << ids.size() << " proved\n";
    return proved == ids.size() ? 0 : 1;
  }

  void print_basis(const polyalg::GroebnerBasis& gb, bool as_json, const json& extra) {
    if (as_json) {
      json j = extra;
      j["order"] = std::string(gb.order().name());
      j["vars"] = gb.vars().names();
      j["basis"] = json::array();
      for (const auto& g : gb.generators()) j["basis"].push_back(g.to_string(gb.order()));
      out_ << j.dump(2) << '\n';
      return;
    }
    out_ << "order: " << gb.order().name() << '\n';
    out_ << "size: " << gb.size() << '\n';
    for (const auto& [key, value] : extra.items()) out_ << key << ": " << value.dump() << '\n';
    out_ << "basis:\n";
    for (const auto& g : gb.generators()) out_ << "  " << g.to_string(gb.order()) << '\n';
  }

  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Symbolic and numeric checks of thermodynamic derivative identities"};
  cli.require_subcommand(1);
  App app(out, err);
  int status = 0;
  bool as_json = false;

  std::string expr_text;
  bool reduce = false;
  auto* expand_cmd = cli.add_subcommand("expand", "Rewrite an expression over the primitive alphabet");
  expand_cmd->add_option("expression", expr_text, "Expression, e.g. \"D(3,1,2)\"")->required();
  expand_cmd->add_flag("--reduce", reduce, "Reduce modulo the Maxwell constraint ideal");
  expand_cmd->add_flag("--json", as_json, "Machine-readable output");

  std::string file;
  std::vector<std::string> identities;
  std::string grid;
  bool no_constraints = false;
  auto* verify_cmd = cli.add_subcommand("verify", "Prove or refute identities \"LHS = RHS\"");
  verify_cmd->add_option("--file", file, "Identity file, one per line");
  verify_cmd->add_option("identity", identities, "Inline identities");
  verify_cmd->add_option("--grid", grid, "State grid x0:x1:n,y0:y1:m for the numeric check");
  verify_cmd->add_flag("--no-constraints", no_constraints, "Do not reduce modulo the constraint ideal");
  verify_cmd->add_flag("--json", as_json, "Machine-readable output");

  ModelOptions model;
  std::string at;
  auto* eval_cmd = cli.add_subcommand("eval", "Evaluate an expression on a gas model");
  eval_cmd->add_option("--model", model.kind, "ideal, vdw or synthesis")->capture_default_str();
  eval_cmd->add_option("--gamma", model.gamma, "Adiabatic exponent (ideal, vdw)")->capture_default_str();
  eval_cmd->add_option("--a", model.a, "Attraction parameter (vdw, synthesis)")->capture_default_str();
  eval_cmd->add_option("--b", model.b, "Excluded volume (vdw, synthesis)")->capture_default_str();
  eval_cmd->add_option("--gamma-coeffs", model.gamma_coeffs, "Coefficients of gamma(w), comma separated")
      ->capture_default_str();
  eval_cmd->add_option("--at", at, "State x,y")->required();
  eval_cmd->add_option("expression", expr_text, "Expression")->required();
  eval_cmd->add_flag("--json", as_json, "Machine-readable output");

  std::string order = "lex";
  auto* gb_cmd = cli.add_subcommand("groebner", "Reduced Groebner basis of a relation file");
  gb_cmd->add_option("--file", file, "Relation file with a 'vars:' header")->required();
  gb_cmd->add_option("--order", order, "lex or grlex")->capture_default_str();
  gb_cmd->add_flag("--json", as_json, "Machine-readable output");

  auto* discover_cmd = cli.add_subcommand("discover", "Groebner basis of the built-in derivative relations");
  discover_cmd->add_option("--order", order, "lex or grlex")->capture_default_str();
  discover_cmd->add_flag("--json", as_json, "Machine-readable output");

  std::string kind;
  bool list = false;
  std::size_t limit = 0;
  auto* enum_cmd = cli.add_subcommand("enumerate", "Count or list coded derivatives");
  enum_cmd->add_option("kind", kind, "triples, jacobians or seconds")->required();
  enum_cmd->add_flag("--list", list, "List instead of counting");
  enum_cmd->add_option("--limit", limit, "Stop listing after N entries (0 = all)");

  auto* maxwell_cmd = cli.add_subcommand("maxwell", "Verify the four Maxwell relations");
  maxwell_cmd->add_flag("--json", as_json, "Machine-readable output");

  auto* selftest_cmd = cli.add_subcommand("selftest", "Symbolic versus numeric sweep");

  std::vector<std::string> argv_storage{"thermoid"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_storage) argv.push_back(s.c_str());

  try {
    cli.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // --help and --version report success; usage errors share the exit status of other failures.
    const int code = cli.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*expand_cmd) status = app.expand(expr_text, reduce, as_json);
    else if (*verify_cmd) status = app.verify(file, identities, grid, no_constraints, as_json);
    else if (*eval_cmd) status = app.eval(model, at, expr_text, as_json);
    else if (*gb_cmd) status = app.groebner(file, order, as_json);
    else if (*discover_cmd) status = app.discover(order, as_json);
    else if (*enum_cmd) status = app.enumerate(kind, list, limit);
    else if (*maxwell_cmd) status = app.maxwell(as_json);
    else if (*selftest_cmd) status = app.selftest();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}

}  // namespace thermoid::cli
