#include "carlitz/json_io.hpp"

#include <map>

#include "carlitz/errors.hpp"

namespace carlitz {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(std::string("JSON: missing key \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ConfigError(std::string("JSON: ") + what + " must be an integer");
  return j.get<std::int64_t>();
}

Json residue_coords(const FieldPtr& f, Residue c) {
  return Json(f->residue().coords(c));
}

Residue residue_from(const FieldPtr& f, const Json& j) {
  if (!j.is_array() || j.size() != f->residue().degree())
    throw ConfigError("JSON: residue needs " + std::to_string(f->residue().degree()) + " coordinates");
  std::vector<std::uint32_t> c;
  for (const auto& x : j) {
    auto v = as_int(x, "coordinate");
    if (v < 0 || v >= static_cast<std::int64_t>(f->p())) throw ConfigError("JSON: coordinate out of range");
    c.push_back(static_cast<std::uint32_t>(v));
  }
  return f->residue().from_coords(c);
}

Json rational_json(Rational r) { return Json::array({r.num, r.den}); }

Rational rational_from(const Json& a, std::size_t i) {
  return Rational(as_int(a.at(i), "rational"), as_int(a.at(i + 1), "rational"));
}

Json fq_poly_json(const FqPoly& p) {
  Json a = Json::array();
  for (Residue c : p.coeffs()) a.push_back(residue_coords(p.field(), c));
  return a;
}

Json rational_matrix_json(const TPolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

TPolyMatrix poly_matrix_from(const Json& j, const FieldPtr& f, std::size_t r) {
  if (!j.is_array() || j.size() != r) throw ConfigError("JSON: matrix must have r rows");
  TPolyMatrix m(f, r, r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != r) throw ConfigError("JSON: matrix must have r columns");
    for (std::size_t k = 0; k < r; ++k) m.at(i, k) = tpoly_from_json(j[i][k], f);
  }
  return m;
}

Provenance provenance_from(const std::string& s) {
  for (auto p : {Provenance::One, Provenance::CarlitzN, Provenance::XAlphas, Provenance::Tensor, Provenance::Dual})
    if (provenance_name(p) == s) return p;
  throw ConfigError("JSON: unknown provenance " + s);
}

}  // namespace

Json to_json(const LocalElement& x) {
  const auto& f = x.field();
  const auto& c = f->config();
  Json coeffs = Json::array();
  for (const auto& [e, d] : x.terms()) coeffs.push_back(Json::array({e, residue_coords(f, d)}));
  Json j;
  j["p"] = c.p;
  j["m"] = c.m;
  j["e"] = c.e;
  j["ram"] = c.ram;
  j["prec"] = x.is_exact() ? Json(nullptr) : Json(x.prec());
  j["coeffs"] = std::move(coeffs);
  return j;
}

LocalElement element_from_json(const Json& j, const FieldPtr& f) {
  const auto& c = f->config();
  if (as_int(need(j, "p"), "p") != c.p || as_int(need(j, "m"), "m") != c.m || as_int(need(j, "e"), "e") != c.e ||
      as_int(need(j, "ram"), "ram") != c.ram)
    throw ConfigError("JSON: element belongs to a different working field");
  const Json& pj = need(j, "prec");
  const std::int64_t prec = pj.is_null() ? kExact : as_int(pj, "prec");
  std::map<std::int64_t, Residue> terms;
  const Json& cj = need(j, "coeffs");
  if (!cj.is_array()) throw ConfigError("JSON: coeffs must be an array");
  std::optional<std::int64_t> last;
  for (const auto& t : cj) {
    if (!t.is_array() || t.size() != 2) throw ConfigError("JSON: coefficient must be [exp, coords]");
    const auto e = as_int(t[0], "exponent");
    if (last && e <= *last) throw ConfigError("JSON: coefficients must be sorted by exponent");
    last = e;
    if (e >= prec) throw ConfigError("JSON: coefficient at or beyond the precision");
    terms[e] = residue_from(f, t[1]);
  }
  return LocalElement::from_terms(f, terms, prec);
}

Json to_json(const TailPtr& t) {
  if (!t) return nullptr;
  Json j;
  j["kind"] = t->kind_name();
  const auto& p = t->int_params();
  switch (t->kind()) {
    case TailBound::Kind::Omega:
      j["ram"] = p[0];
      j["q"] = p[1];
      break;
    case TailBound::Kind::LAlpha:
      j["v_alpha"] = p[0];
      j["ram"] = p[1];
      j["q"] = p[2];
      break;
    case TailBound::Kind::Twist:
      j["n"] = p[0];
      j["q"] = p[1];
      break;
    case TailBound::Kind::Polynomial: {
      Json v = Json::array();
      for (auto x : p) v.push_back(x >= kInfVal ? Json(nullptr) : Json(x));
      j["vals"] = std::move(v);
      break;
    }
    case TailBound::Kind::Linear:
    case TailBound::Kind::User:
      j["c0"] = rational_json(Rational(p[0], p[1]));
      j["slope"] = rational_json(Rational(p[2], p[3]));
      break;
    default:
      break;
  }
  if (!t->children().empty()) {
    Json ch = Json::array();
    for (const auto& c : t->children()) ch.push_back(to_json(c));
    j["children"] = std::move(ch);
  }
  return j;
}

TailPtr tail_from_json(const Json& j) {
  if (j.is_null()) return nullptr;
  const std::string kind = need(j, "kind").get<std::string>();
  auto child = [&](std::size_t i) {
    const Json& ch = need(j, "children");
    if (!ch.is_array() || ch.size() <= i) throw ConfigError("JSON: tail " + kind + " is missing a child");
    auto c = tail_from_json(ch[i]);
    if (!c) throw ConfigError("JSON: null child tail");
    return c;
  };
  auto rat = [&](const char* key) {
    const Json& a = need(j, key);
    if (!a.is_array() || a.size() != 2) throw ConfigError("JSON: rational must be [num, den]");
    if (as_int(a[1], "denominator") == 0) throw ConfigError("JSON: zero denominator");
    return rational_from(a, 0);
  };
  if (kind == "OMEGA") return TailBound::omega(as_int(need(j, "ram"), "ram"), as_int(need(j, "q"), "q"));
  if (kind == "LALPHA")
    return TailBound::lalpha(as_int(need(j, "v_alpha"), "v_alpha"), as_int(need(j, "ram"), "ram"),
                             as_int(need(j, "q"), "q"));
  if (kind == "PRODUCT") return TailBound::product(child(0), child(1));
  if (kind == "SUM") return TailBound::sum(child(0), child(1));
  if (kind == "TWIST") return TailBound::twist(child(0), as_int(need(j, "n"), "n"), as_int(need(j, "q"), "q"));
  if (kind == "POLYNOMIAL") {
    std::vector<std::int64_t> v;
    for (const auto& x : need(j, "vals")) v.push_back(x.is_null() ? kInfVal : as_int(x, "valuation"));
    return TailBound::polynomial(std::move(v));
  }
  if (kind == "LINEAR") return TailBound::linear(rat("c0"), rat("slope"));
  if (kind == "USER") return TailBound::user(rat("c0"), rat("slope"));
  throw ConfigError("JSON: unknown tail kind " + kind);
}

Json to_json(const TateSeries& s) {
  Json c = Json::array();
  for (const auto& x : s.coeffs()) c.push_back(to_json(x));
  Json j;
  j["t_deg"] = s.t_deg();
  j["coeffs"] = std::move(c);
  j["tail"] = to_json(s.tail());
  return j;
}

TateSeries series_from_json(const Json& j, const FieldPtr& f) {
  const auto t_deg = as_int(need(j, "t_deg"), "t_deg");
  const Json& cj = need(j, "coeffs");
  if (!cj.is_array() || static_cast<std::int64_t>(cj.size()) != t_deg + 1)
    throw ConfigError("JSON: series needs t_deg + 1 coefficients");
  std::vector<LocalElement> c;
  for (const auto& x : cj) c.push_back(element_from_json(x, f));
  auto tail = j.contains("tail") ? tail_from_json(j.at("tail")) : nullptr;
  // A POLYNOMIAL tail ending inside the stored range marks an exact polynomial.
  if (tail && tail->kind() == TailBound::Kind::Polynomial && tail->support_end() && *tail->support_end() <= t_deg) {
    bool exact = true;
    for (const auto& x : c) exact = exact && x.is_exact();
    if (exact) return TateSeries(f, std::move(c), true);
  }
  return TateSeries(f, std::move(c), false, tail);
}

Json to_json(const TPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

TPoly tpoly_from_json(const Json& j, const FieldPtr& f) {
  if (!j.is_array()) throw ConfigError("JSON: polynomial must be a coefficient array");
  std::vector<LocalElement> c;
  for (const auto& x : j) {
    c.push_back(element_from_json(x, f));
    if (!c.back().is_exact()) throw ConfigError("JSON: polynomial coefficients must be exact");
  }
  return TPoly(f, std::move(c));
}

Json to_json(const RatFun& r) { return Json::array({fq_poly_json(r.num), fq_poly_json(r.den)}); }

Json to_json(const NormInfo& n) {
  Json j;
  j["valuation"] = n.valuation ? Json(*n.valuation) : Json(nullptr);
  j["log_q"] = n.log_q.str();
  j["upper_bound"] = n.upper_bound;
  return j;
}

Json to_json(const MotivePresentation& p) {
  Json j;
  j["name"] = p.name;
  j["r"] = p.rank;
  if (p.phi_untwisted) {
    j["phi"] = rational_matrix_json(p.phi_untwisted->num);
    j["phi_den"] = to_json(p.phi_untwisted->den);
  } else {
    j["phi"] = nullptr;
  }
  j["phi_twisted"] = rational_matrix_json(p.phi_twisted.num);
  j["phi_twisted_den"] = to_json(p.phi_twisted.den);
  Json psi = Json::array();
  for (std::size_t i = 0; i < p.psi.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < p.psi.cols(); ++k) row.push_back(to_json(p.psi.at(i, k)));
    psi.push_back(std::move(row));
  }
  j["psi"] = std::move(psi);
  j["provenance"] = provenance_name(p.provenance);
  return j;
}

MotivePresentation presentation_from_json(const Json& j, const FieldPtr& f) {
  MotivePresentation p;
  p.name = need(j, "name").get<std::string>();
  const auto r = as_int(need(j, "r"), "r");
  if (r < 1) throw ConfigError("JSON: rank must be positive");
  p.rank = static_cast<std::size_t>(r);
  p.provenance = provenance_from(need(j, "provenance").get<std::string>());
  auto den = [&](const char* key) {
    return j.contains(key) ? tpoly_from_json(j.at(key), f) : TPoly::from_int(f, 1);
  };
  const Json& phi = need(j, "phi");
  if (!phi.is_null()) p.phi_untwisted = RationalMatrix{poly_matrix_from(phi, f, p.rank), den("phi_den")};
  if (j.contains("phi_twisted") && !j.at("phi_twisted").is_null())
    p.phi_twisted = RationalMatrix{poly_matrix_from(j.at("phi_twisted"), f, p.rank), den("phi_twisted_den")};
  else if (p.phi_untwisted)
    p.phi_twisted = p.phi_untwisted->twist(1);
  else
    throw ConfigError("JSON: presentation needs phi or phi_twisted");
  const Json& psi = need(j, "psi");
  if (!psi.is_array() || psi.size() != p.rank) throw ConfigError("JSON: psi must have r rows");
  p.psi = SeriesMatrix(f, p.rank, p.rank);
  for (std::size_t i = 0; i < p.rank; ++i) {
    if (!psi[i].is_array() || psi[i].size() != p.rank) throw ConfigError("JSON: psi must have r columns");
    for (std::size_t k = 0; k < p.rank; ++k) p.psi.at(i, k) = series_from_json(psi[i][k], f);
  }
  return p;
}

Json to_json(const ReductionResult& r) {
  Json j;
  j["alpha"] = to_json(r.alpha);
  j["n"] = r.n;
  j["action_residual"] = to_json(r.action_residual.norm());
  j["exp_residual"] = to_json(r.exp_residual.norm());
  j["verified"] = r.verified();
  return j;
}

Json to_json(const RelationRun& run) {
  Json j;
  Json alphas = Json::array();
  for (const auto& a : run.alphas) alphas.push_back(to_json(a));
  j["alphas"] = std::move(alphas);
  const auto& b = run.bounds;
  j["bounds"] = {{"d_t", b.d_t}, {"v_lo", b.v_lo}, {"v_hi", b.v_hi}, {"prec", b.prec},
                 {"t_deg", b.t_deg}, {"margin", b.margin}, {"kernel_dim", run.search.kernel_dim}};
  Json rels = Json::array();
  for (const auto& r : run.report.relations) {
    Json slots = Json::array();
    for (const auto& s : r.slots) slots.push_back(to_json(s));
    rels.push_back({{"slots", std::move(slots)}});
  }
  j["relations"] = std::move(rels);
  Json ev = Json::array();
  for (const auto& e : run.evaluated) {
    Json logs = Json::array();
    for (const auto& c : e.c_log) logs.push_back(to_json(c));
    ev.push_back({{"c_const", to_json(e.c_const)},
                  {"c_pitilde", to_json(e.c_pitilde)},
                  {"c_log", std::move(logs)},
                  {"artifact_norm", to_json(e.artifact_norm)}});
  }
  j["evaluated"] = std::move(ev);
  Json polys = Json::array(), forms = Json::array();
  for (const auto& g : run.report.gamma_polys) {
    Json xi = Json::array();
    for (const auto& x : g.xs) xi.push_back(to_json(x));
    polys.push_back({{"X0", to_json(g.x0)}, {"Xi", std::move(xi)}, {"const", to_json(g.constant)}});
    Json form = Json::array();
    for (const auto& x : g.f_form) form.push_back(to_json(x));
    forms.push_back(std::move(form));
  }
  j["gamma"] = {{"dim", run.report.gamma_dim},
                {"label", run.report.gamma_dim_label},
                {"polys", std::move(polys)},
                {"v_forms", std::move(forms)}};
  std::int64_t cp = b.prec * b.margin, ct = b.t_deg * b.margin;
  if (!run.certs.empty()) {
    cp = run.certs.front().prec;
    ct = run.certs.front().t_deg;
  }
  j["certified_at"] = {{"prec", cp}, {"t_deg", ct}};
  return j;
}

}  // namespace carlitz
