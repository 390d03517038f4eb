#include "carlitz/relations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "carlitz/analytics.hpp"
#include "carlitz/errors.hpp"

namespace carlitz {

void SearchBounds::validate() const {
  if (d_t < 0) throw ConfigError("d_t must be nonnegative");
  if (v_lo > v_hi) throw ConfigError("empty exponent window");
  if (prec <= 0 || t_deg < 0) throw ConfigError("prec must be positive and t_deg nonnegative");
  if (margin < 1) throw ConfigError("margin must be at least 1");
}

std::string RelationVector::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << slots[i].to_string() << ")";
    if (i > 0) os << "*X" << i - 1;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// The series 1, Omega, Omega L_alpha_i at the given truncation.
std::vector<TateSeries> build_slots(const FieldPtr& f, const std::vector<LocalElement>& alphas, std::int64_t t_deg,
                                    std::int64_t prec) {
  std::vector<TateSeries> g;
  g.push_back(TateSeries::constant(LocalElement::from_int(f, 1)));
  const TateSeries omega = build_omega(f, t_deg, prec);
  g.push_back(omega);
  for (const auto& a : alphas) g.push_back(omega * build_L_alpha(a, t_deg, prec));
  return g;
}

void check_alphas(const FieldPtr& f, const std::vector<LocalElement>& alphas) {
  for (const auto& a : alphas) {
    if (!a.is_exact()) throw Error("alphas must be exact");
    if (!same_field(a.field(), f)) throw ConfigError("alphas from different fields");
    if (a.zero_state() != ZeroState::ExactZero && a.valuation_lower_bound() <= f->log_domain_bound())
      throw OutsideLogDomain();
  }
}

TateSeries combine(const RelationVector& rel, const std::vector<TateSeries>& g) {
  TateSeries acc = TateSeries::zero(g.front().field());
  for (std::size_t i = 0; i < rel.slots.size(); ++i) {
    if (rel.slots[i].is_zero()) continue;
    acc = acc + rel.slots[i].to_series() * g[i];
  }
  return acc;
}

// Streaming reduced row echelon form over the residue field.
class Rref {
 public:
  Rref(const ResidueField& rf, std::size_t cols) : rf_(rf), cols_(cols), pivot_of_col_(cols, -1) {}

  void add(std::vector<Residue> row) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Residue c = row[pivots_[r]];
      if (c != 0) axpy(row, rows_[r], rf_.neg(c));
    }
    std::size_t p = 0;
    while (p < cols_ && row[p] == 0) ++p;
    if (p == cols_) return;
    const Residue inv = rf_.inv(row[p]);
    for (auto& x : row) x = rf_.mul(x, inv);
    for (auto& other : rows_) {
      const Residue c = other[p];
      if (c != 0) axpy(other, row, rf_.neg(c));
    }
    pivot_of_col_[p] = static_cast<int>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(row));
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Residue>>& rows() const { return rows_; }

  // One vector per free column: x_free = 1, x_pivot = -R[pivot][free].
  std::vector<std::vector<Residue>> kernel() const {
    std::vector<std::vector<Residue>> out;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (pivot_of_col_[c] >= 0) continue;
      std::vector<Residue> v(cols_, 0);
      v[c] = 1;
      for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = rf_.neg(rows_[r][c]);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  void axpy(std::vector<Residue>& y, const std::vector<Residue>& x, Residue a) const {
    for (std::size_t k = 0; k < cols_; ++k)
      if (x[k] != 0) y[k] = rf_.add(y[k], rf_.mul(a, x[k]));
  }

  const ResidueField& rf_;
  std::size_t cols_;
  std::vector<int> pivot_of_col_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Residue>> rows_;
};

// Fraction-free elimination: does `v` add rank over k(t) to `basis`?
bool extends_rank(std::vector<std::pair<std::size_t, std::vector<TPoly>>>& basis, std::vector<TPoly> v) {
  for (const auto& [p, b] : basis) {
    if (v[p].is_zero()) continue;
    const TPoly bp = b[p], vp = v[p];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = bp * v[k] - vp * b[k];
  }
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) {
      basis.emplace_back(k, std::move(v));
      return true;
    }
  return false;
}

// An exact element of F_q (digit at pi^0 only), if it is one.
std::optional<Residue> as_fq(const LocalElement& c) {
  if (c.zero_state() == ZeroState::ExactZero) return Residue{0};
  if (!c.is_exact() || !c.is_monomial() || *c.valuation() != 0) return std::nullopt;
  if (!c.field()->in_fq(c.leading())) return std::nullopt;
  return c.leading();
}

std::optional<FqPoly> as_fq_poly(const TPoly& p) {
  std::vector<Residue> c;
  for (const auto& x : p.coeffs()) {
    auto r = as_fq(x);
    if (!r) return std::nullopt;
    c.push_back(*r);
  }
  return FqPoly(p.field(), c);
}

TPoly to_tpoly(const FqPoly& p) {
  std::vector<LocalElement> c;
  for (Residue r : p.coeffs()) c.push_back(LocalElement::constant(p.field(), r));
  return TPoly(p.field(), c);
}

}  // namespace

SearchResult search_relations(const std::vector<LocalElement>& alphas, const SearchBounds& b) {
  if (alphas.empty()) throw Error("no alphas to take the field from; use the overload with a field");
  return search_relations(alphas.front().field(), alphas, b);
}

SearchResult search_relations(const FieldPtr& f, const std::vector<LocalElement>& alphas, const SearchBounds& b) {
  b.validate();
  check_alphas(f, alphas);
  const ResidueField& rf = f->residue();
  const std::int64_t e_lo = b.exp_lo(f->ram()), e_hi = b.exp_hi(f->ram());
  const std::int64_t n_exp = e_hi - e_lo + 1;
  const std::size_t nslots = alphas.size() + 2;
  const std::int64_t per_slot = (b.d_t + 1) * n_exp;
  const std::size_t cols = nslots * static_cast<std::size_t>(per_slot);

  const auto g = build_slots(f, alphas, b.t_deg, b.prec);
  std::int64_t n_lo = e_lo, n_hi = kExact;
  for (std::size_t s = 1; s < nslots; ++s)
    for (std::int64_t k = 0; k <= b.t_deg; ++k) {
      const LocalElement c = g[s].coeff(k);
      n_lo = std::min(n_lo, c.valuation_lower_bound() + e_lo);
      n_hi = std::min(n_hi, c.prec() + e_lo);
    }
  SearchResult res;
  res.cols = cols;
  res.rows = static_cast<std::size_t>((b.t_deg + 1) * std::max<std::int64_t>(n_hi - n_lo, 0));
  if (res.rows < cols)
    throw UnderdeterminedSystem("linear system has " + std::to_string(res.rows) + " equations for " +
                                std::to_string(cols) + " unknowns; raise prec or t_deg");

  auto col = [&](std::size_t s, std::int64_t j, std::int64_t m) {
    return s * static_cast<std::size_t>(per_slot) + static_cast<std::size_t>(j * n_exp + (m - e_lo));
  };
  Rref rref(rf, cols);
  for (std::int64_t k = 0; k <= b.t_deg && rref.rank() < cols; ++k)
    for (std::int64_t n = n_lo; n < n_hi && rref.rank() < cols; ++n) {
      std::vector<Residue> row(cols, 0);
      bool any = false;
      for (std::int64_t j = 0; j <= std::min(b.d_t, k); ++j)
        for (std::int64_t m = e_lo; m <= e_hi; ++m) {
          if (k == j && n == m) {
            row[col(0, j, m)] = 1;
            any = true;
          }
          for (std::size_t s = 1; s < nslots; ++s) {
            const Residue d = g[s].coeff(k - j).coeff(n - m);
            if (d != 0) {
              row[col(s, j, m)] = d;
              any = true;
            }
          }
        }
      if (any) rref.add(std::move(row));
    }

  const auto kernel = rref.kernel();
  res.kernel_dim = kernel.size();

  auto to_relation = [&](const std::vector<Residue>& v) {
    RelationVector rel;
    for (std::size_t s = 0; s < nslots; ++s) {
      std::vector<LocalElement> coeffs(static_cast<std::size_t>(b.d_t + 1), LocalElement::zero(f));
      for (std::int64_t j = 0; j <= b.d_t; ++j) {
        std::map<std::int64_t, Residue> terms;
        for (std::int64_t m = e_lo; m <= e_hi; ++m)
          if (Residue d = v[col(s, j, m)]; d != 0) terms[m] = d;
        coeffs[static_cast<std::size_t>(j)] = LocalElement::from_terms(f, terms);
      }
      rel.slots.emplace_back(f, coeffs);
    }
    return rel;
  };

  std::size_t target = 0;
  {
    std::vector<std::pair<std::size_t, std::vector<TPoly>>> probe;
    for (const auto& v : kernel)
      if (extends_rank(probe, to_relation(v).slots)) ++target;
  }

  // Multiples of a relation by nonconstant elements of kbar[t] also lie in
  // the kernel. Taking kernel vectors supported in boxes of increasing
  // t-degree, then pi-span, then offset picks primitive representatives.
  std::vector<std::pair<std::size_t, std::vector<TPoly>>> indep;
  for (std::int64_t d = 0; d <= b.d_t && res.relations.size() < target; ++d)
    for (std::int64_t w = 0; w < n_exp && res.relations.size() < target; ++w)
      for (std::int64_t lo = e_lo; lo + w <= e_hi && res.relations.size() < target; ++lo) {
        // Combinations y of the kernel basis vanishing outside the box.
        Rref cons(rf, kernel.size());
        for (std::size_t s = 0; s < nslots; ++s)
          for (std::int64_t j = 0; j <= b.d_t; ++j)
            for (std::int64_t m = e_lo; m <= e_hi; ++m) {
              if (j <= d && m >= lo && m <= lo + w) continue;
              std::vector<Residue> row(kernel.size());
              bool any = false;
              for (std::size_t i = 0; i < kernel.size(); ++i) {
                row[i] = kernel[i][col(s, j, m)];
                any = any || row[i] != 0;
              }
              if (any) cons.add(std::move(row));
            }
        if (cons.rank() == kernel.size()) continue;
        Rref box(rf, cols);
        for (const auto& y : cons.kernel()) {
          std::vector<Residue> v(cols, 0);
          for (std::size_t i = 0; i < kernel.size(); ++i)
            if (y[i] != 0)
              for (std::size_t c = 0; c < cols; ++c)
                if (kernel[i][c] != 0) v[c] = rf.add(v[c], rf.mul(y[i], kernel[i][c]));
          box.add(std::move(v));
        }
        auto rows = box.rows();
        std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
          return std::find_if(x.begin(), x.end(), [](Residue r) { return r != 0; }) - x.begin() <
                 std::find_if(y.begin(), y.end(), [](Residue r) { return r != 0; }) - y.begin();
        });
        for (const auto& v : rows) {
          RelationVector rel = to_relation(v);
          if (extends_rank(indep, rel.slots)) res.relations.push_back(std::move(rel));
        }
      }
  return res;
}

Certification certify_relation(const RelationVector& rel, const std::vector<LocalElement>& alphas,
                               const SearchBounds& b) {
  Certification c;
  c.prec = b.prec * b.margin;
  c.t_deg = b.t_deg * b.margin;
  if (rel.slots.empty() || std::all_of(rel.slots.begin(), rel.slots.end(), [](const TPoly& p) { return p.is_zero(); }))
    return c;
  const FieldPtr& f = rel.slots.front().field();
  check_alphas(f, alphas);
  if (rel.slots.size() != alphas.size() + 2) throw Error("relation has the wrong number of slots");
  const TateSeries r = combine(rel, build_slots(f, alphas, c.t_deg, c.prec));
  c.residual = r.gauss_norm();
  c.certified = r.is_zero_at_precision();
  return c;
}

EvaluatedRelation evaluate_relation_at_theta(const RelationVector& rel, const std::vector<LocalElement>& alphas,
                                             const Certification& cert, std::int64_t prec) {
  if (!cert.certified) throw NotCertified("relation did not vanish at the certification precision");
  const FieldPtr& f = rel.slots.front().field();
  const LocalElement th = LocalElement::theta(f);
  EvaluatedRelation e;
  e.c_const = rel.slots[1].eval(th);
  e.c_pitilde = -rel.slots[0].eval(th);
  LocalElement acc = e.c_const + e.c_pitilde * pi_tilde(f, prec);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    e.c_log.push_back(rel.slots[i + 2].eval(th));
    acc += e.c_log.back() * carlitz_log(alphas[i], prec);
  }
  e.residual = acc;
  e.artifact_norm = e.c_const.norm();
  e.artifact = e.c_const.zero_state() != ZeroState::ExactZero;
  return e;
}

RelationReport gamma_report(const std::vector<LocalElement>& alphas, const std::vector<RelationVector>& relations) {
  RelationReport rep;
  rep.relations = relations;
  const std::size_t r = alphas.size();
  for (const auto& rel : relations) {
    if (rel.slots.size() != r + 2) throw Error("relation has the wrong number of slots");
    const FieldPtr& f = rel.slots.front().field();
    // Scale by the first nonzero coefficient among the const and X_1..X_r slots.
    std::optional<LocalElement> lead;
    for (std::size_t s = 0; s < rel.slots.size() && !lead; ++s) {
      if (s == 1 || rel.slots[s].is_zero()) continue;
      for (const auto& c : rel.slots[s].coeffs())
        if (c.zero_state() != ZeroState::ExactZero) {
          lead = c;
          break;
        }
    }
    if (!lead) throw GammaExtractionFailed("relation involves Omega alone");
    const LocalElement scale = lead->scale(f->residue().inv(lead->leading()));
    if (!scale.is_monomial()) throw GammaExtractionFailed("leading coefficient is not a monomial");
    const LocalElement sinv = scale.inv();

    GammaPoly gp;
    gp.scale = scale;
    std::vector<FqPoly> parts;
    for (std::size_t s = 0; s < rel.slots.size(); ++s) {
      if (s == 1) continue;
      auto p = as_fq_poly(rel.slots[s].scale(sinv));
      if (!p) throw GammaExtractionFailed("slot " + std::to_string(s) + " is not in F_q(t) after scaling");
      parts.push_back(*p);
    }
    const FqPoly one = FqPoly::constant(f, 1);
    const FqPoly& cst = parts[0];
    gp.constant = RatFun::from_poly(cst);
    gp.x0 = RatFun::from_poly(-cst);
    FqPoly content;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      gp.xs.push_back(RatFun::from_poly(parts[i]));
      if (!parts[i].is_zero()) content = content.is_zero() ? parts[i].monic() : gcd(content, parts[i]);
    }
    if (content.is_zero()) {
      gp.b0 = RatFun::from_poly(one);
      for (std::size_t i = 1; i < parts.size(); ++i) gp.f_form.push_back(RatFun::from_poly(FqPoly(f, {})));
    } else {
      Residue u = 0;
      for (std::size_t i = 1; i < parts.size() && u == 0; ++i)
        if (!parts[i].is_zero()) u = parts[i].divmod(content).first.leading();
      const FqPoly c = content.scale(u);
      for (std::size_t i = 1; i < parts.size(); ++i) gp.f_form.push_back(RatFun::from_poly(parts[i].divmod(c).first));
      gp.b0 = RatFun::from_poly(c + one);
    }
    gp.f_of_b = RatFun::from_poly(cst);
    gp.f = rel.slots[1].scale(sinv) + to_tpoly(cst);
    rep.gamma_polys.push_back(std::move(gp));
  }
  rep.gamma_dim = r + 1 - relations.size();
  rep.gamma_dim_label = "conjectural transcendence degree of kbar(pi~, log_C alpha_i) over kbar";
  return rep;
}

}  // namespace carlitz
