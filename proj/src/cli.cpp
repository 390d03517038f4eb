#include "carlitz/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "carlitz/acceptance.hpp"
#include "carlitz/analytics.hpp"
#include "carlitz/division.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/json_io.hpp"
#include "carlitz/motive.hpp"
#include "carlitz/parser.hpp"
#include "carlitz/relations.hpp"

namespace carlitz {

namespace {

struct RunConfig {
  std::uint32_t p = 3, m = 1, e = 1;
  std::int64_t ram = 2, prec = 200, t_deg = 40;
  std::uint64_t seed = AcceptanceConfig{}.seed;
  bool json = false;

  FieldConfig field() const {
    FieldConfig c;
    c.p = p;
    c.m = m;
    c.e = e;
    c.ram = ram;
    c.default_prec = prec;
    return c;
  }
};

// Verification targets backed by an acceptance criterion.
const std::map<std::string, int> kVerifyTargets = {
    {"omega-fe", 1},      {"period", 2},     {"torsion-log", 3},  {"kernel", 4},
    {"exp-log", 5},       {"lalpha-fe", 6},  {"zeta-relation", 7}, {"module-law", 8},
    {"independence", 9},  {"log-reduction", 10}, {"motives", 11}, {"norms", 12},
};

class Session {
 public:
  Session(const RunConfig& cfg, std::istream& in, std::ostream& out) : cfg_(cfg), in_(in), out_(out) {}

  void start() { f_ = make_field(cfg_.field()); }

  LocalElement element(const std::string& arg) { return parse_field_value(text(arg), f_); }

  std::string text(const std::string& arg) {
    if (arg != "-") return arg;
    if (!stdin_) {
      stdin_ = std::string(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
      while (!stdin_->empty() && std::isspace(static_cast<unsigned char>(stdin_->back()))) stdin_->pop_back();
    }
    return *stdin_;
  }

  void emit(const LocalElement& x) {
    if (cfg_.json)
      out_ << to_json(x).dump() << "\n";
    else
      out_ << x.to_string() << "\n";
  }

  void emit(const TateSeries& s) {
    if (cfg_.json) {
      out_ << to_json(s).dump() << "\n";
      return;
    }
    for (std::int64_t j = 0; j <= s.t_deg(); ++j) out_ << "t^" << j << ": " << s.coeff(j).to_string() << "\n";
    out_ << "tail: " << (s.tail() ? s.tail()->kind_name() : "none") << "\n";
  }

  int verdict(const std::string& target, bool pass, const std::string& detail) {
    if (cfg_.json) {
      Json j;
      j["target"] = target;
      j["pass"] = pass;
      j["detail"] = detail;
      out_ << j.dump() << "\n";
    } else {
      out_ << (pass ? "PASS" : "FAIL") << " " << target << ": " << detail << "\n";
    }
    return pass ? kExitOk : kExitFail;
  }

  AcceptanceConfig acceptance() const {
    AcceptanceConfig a;
    a.field = cfg_.field();
    a.t_deg = cfg_.t_deg;
    a.seed = cfg_.seed;
    return a;
  }

  int verify(const std::string& target, const std::string& alpha, const std::string& file) {
    if (target == "presentation") return verify_presentation(file);
    if (target == "lalpha-fe" && !alpha.empty()) return verify_lalpha(alpha);
    auto it = kVerifyTargets.find(target);
    if (it == kVerifyTargets.end()) throw ConfigError("unknown verify target '" + target + "'");
    auto r = run_criterion(it->second, acceptance());
    return verdict(target, r.pass, r.detail);
  }

  int verify_lalpha(const std::string& alpha) {
    auto a = element(alpha);
    auto th = LocalElement::theta(f_);
    auto L = build_L_alpha(a, cfg_.t_deg, cfg_.prec);
    auto tq = TateSeries::t_minus(th.twist(1));
    auto fe = tq * L - tq.scale(a) - L.twist(1, cfg_.prec);
    auto d = L.eval_entire(th) - carlitz_log(a, cfg_.prec);
    const bool pass = fe.is_zero_at_precision() && d.is_zero();
    return verdict("lalpha-fe", pass, "twisted equation " + std::string(fe.is_zero_at_precision() ? "0" : "nonzero") +
                                          ", L(theta) - log(alpha) " +
                                          (d.is_zero() ? "0 mod pi^" + std::to_string(d.prec()) : "nonzero"));
  }

  int verify_presentation(const std::string& file) {
    if (file.empty()) throw ConfigError("verify presentation needs --file (or --file - for stdin)");
    std::string body;
    if (file == "-") {
      body = text("-");
    } else {
      std::ifstream is(file);
      if (!is) throw ConfigError("cannot read " + file);
      body = std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
    }
    Json j;
    try {
      j = Json::parse(body);
    } catch (const Json::parse_error& e) {
      throw ConfigError(std::string("JSON: ") + e.what());
    }
    auto p = presentation_from_json(j, f_);
    auto t = check_trivialization(p);
    auto d = check_anderson_det(p);
    std::string detail = p.name + ": trivialization " + (t.pass ? "0" : "nonzero") + " mod pi^" +
                         std::to_string(t.certified_prec);
    if (d)
      detail += ", det Phi = " + d->c.to_string() + " (t - theta)^" + std::to_string(d->s);
    else
      detail += ", det Phi is not c (t - theta)^s";
    return verdict("presentation", t.pass, detail);
  }

  int relations(const std::string& alphas_text, const SearchBounds& b) {
    RelationRun run;
    std::stringstream ss(text(alphas_text));
    std::string part;
    while (std::getline(ss, part, ','))
      if (part.find_first_not_of(" \t") != std::string::npos) run.alphas.push_back(element(part));
    run.bounds = b;
    run.search = search_relations(f_, run.alphas, b);
    std::vector<RelationVector> kept;
    for (const auto& rel : run.search.relations) {
      auto cert = certify_relation(rel, run.alphas, b);
      run.certs.push_back(cert);
      if (!cert.certified) continue;
      kept.push_back(rel);
      run.evaluated.push_back(evaluate_relation_at_theta(rel, run.alphas, cert, b.prec));
    }
    run.report = gamma_report(run.alphas, kept);
    if (cfg_.json) {
      out_ << to_json(run).dump() << "\n";
      return kExitOk;
    }
    out_ << "kernel dim " << run.search.kernel_dim << " (" << run.search.rows << " x " << run.search.cols << ")\n";
    for (std::size_t i = 0; i < run.search.relations.size(); ++i)
      out_ << "relation " << i << ": " << run.search.relations[i].to_string() << " ["
           << (run.certs[i].certified ? "certified" : "not certified") << " at prec " << run.certs[i].prec
           << ", t_deg " << run.certs[i].t_deg << "]\n";
    for (const auto& e : run.evaluated) {
      out_ << "at theta: c_const = " << e.c_const.to_string() << ", c_pitilde = " << e.c_pitilde.to_string();
      for (std::size_t i = 0; i < e.c_log.size(); ++i) out_ << ", c_log" << i << " = " << e.c_log[i].to_string();
      if (e.artifact) out_ << " (artifact, log_q norm " << e.artifact_norm.log_q.str() << ")";
      out_ << "\n";
    }
    for (const auto& g : run.report.gamma_polys) {
      out_ << "gamma: const = " << g.constant.to_string() << ", X0: " << g.x0.to_string();
      for (std::size_t i = 0; i < g.xs.size(); ++i) out_ << ", X" << i + 1 << ": " << g.xs[i].to_string();
      out_ << "\n";
    }
    out_ << "dim Gamma_X = " << run.report.gamma_dim << " (" << run.report.gamma_dim_label << ")\n";
    return kExitOk;
  }

  int reduce(const std::string& arg) {
    auto r = reduce_log(element(arg), cfg_.prec);
    if (cfg_.json) {
      out_ << to_json(r).dump() << "\n";
    } else {
      out_ << "alpha = " << r.alpha.to_string() << "\n"
           << "n = " << r.n << "\n"
           << "C_{t^n}(alpha) - beta: " << r.action_residual.to_string() << "\n"
           << "exp(theta^n log alpha) - beta: " << r.exp_residual.to_string() << "\n"
           << (r.verified() ? "PASS" : "FAIL") << "\n";
    }
    return r.verified() ? kExitOk : kExitFail;
  }

  int selftest() {
    auto results = run_all(acceptance());
    bool all = true;
    Json arr = Json::array();
    for (const auto& r : results) {
      all = all && r.pass;
      if (cfg_.json)
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      else
        out_ << format_result(r) << "\n";
    }
    if (cfg_.json) out_ << arr.dump() << "\n";
    return all ? kExitOk : kExitFail;
  }

  const FieldPtr& field() const { return f_; }

 private:
  const RunConfig& cfg_;
  std::istream& in_;
  std::ostream& out_;
  FieldPtr f_;
  std::optional<std::string> stdin_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact Carlitz module arithmetic over F_{q^e}((pi))", "carlitz"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--p", cfg.p, "characteristic")->envname("CARLITZ_P");
  app.add_option("--m", cfg.m, "q = p^m")->envname("CARLITZ_M");
  app.add_option("--e", cfg.e, "residue field F_{q^e}")->envname("CARLITZ_E");
  app.add_option("--ram", cfg.ram, "theta = -pi^-ram")->envname("CARLITZ_RAM");
  app.add_option("--prec", cfg.prec, "absolute pi-adic precision")->envname("CARLITZ_PREC");
  app.add_option("--tdeg", cfg.t_deg, "t-truncation degree")->envname("CARLITZ_TDEG");
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->envname("CARLITZ_SEED");
  app.add_flag("--json", cfg.json, "JSON output")->envname("CARLITZ_JSON");

  std::string x, poly, target, alpha, file, alphas;
  SearchBounds b;
  auto* pitilde = app.add_subcommand("pitilde", "the Carlitz period");
  auto* omega = app.add_subcommand("omega", "Omega as a t-series");
  auto* cexp = app.add_subcommand("cexp", "Carlitz exponential");
  cexp->add_option("x", x, "element, or - for stdin")->required();
  auto* clog = app.add_subcommand("clog", "Carlitz logarithm");
  clog->add_option("x", x, "element, or - for stdin")->required();
  auto* lalpha = app.add_subcommand("lalpha", "L_alpha as a t-series");
  lalpha->alias("laplha");
  lalpha->add_option("alpha", x, "element, or - for stdin")->required();
  auto* caction = app.add_subcommand("caction", "Carlitz action C_a(x) for a in F_q[t]");
  caction->add_option("a", poly, "polynomial in t")->required();
  caction->add_option("x", x, "element, or - for stdin")->required();
  auto* reduce = app.add_subcommand("reduce-log", "write beta = C_{t^n}(alpha) with alpha in the log domain");
  reduce->add_option("beta", x, "element, or - for stdin")->required();
  auto* verify = app.add_subcommand("verify", "check an identity");
  std::vector<std::string> names{"presentation"};
  for (const auto& [k, v] : kVerifyTargets) names.push_back(k);
  verify->add_option("target", target, "what to check")->required()->check(CLI::IsMember(names));
  verify->add_option("--alpha", alpha, "alpha for lalpha-fe");
  verify->add_option("--file", file, "presentation JSON, or - for stdin");
  auto* rel = app.add_subcommand("relations", "search for relations among 1, Omega, Omega L_alpha_i");
  rel->add_option("--alphas", alphas, "comma-separated elements")->required();
  rel->add_option("--dt", b.d_t, "t-degree bound");
  rel->add_option("--vlo", b.v_lo, "window start");
  rel->add_option("--vhi", b.v_hi, "window end");
  rel->add_option("--margin", b.margin, "certification factor");
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Session s(cfg, in, out);
  try {
    s.start();
    if (*pitilde) {
      s.emit(pi_tilde(s.field(), cfg.prec));
    } else if (*omega) {
      s.emit(build_omega(s.field(), cfg.t_deg, cfg.prec));
    } else if (*cexp) {
      s.emit(carlitz_exp(s.element(x), cfg.prec));
    } else if (*clog) {
      s.emit(carlitz_log(s.element(x), cfg.prec));
    } else if (*lalpha) {
      s.emit(build_L_alpha(s.element(x), cfg.t_deg, cfg.prec));
    } else if (*caction) {
      s.emit(carlitz_action(parse_fq_poly(s.text(poly), s.field()), s.element(x)));
    } else if (*reduce) {
      return s.reduce(x);
    } else if (*verify) {
      return s.verify(target, alpha, file);
    } else if (*rel) {
      b.prec = cfg.prec;
      b.t_deg = cfg.t_deg;
      return s.relations(alphas, b);
    } else if (*self) {
      return s.selftest();
    }
    return kExitOk;
  } catch (const ExtensionRequired& e) {
    err << "error: " << e.what() << "\n";
    return kExitExtension;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace carlitz
