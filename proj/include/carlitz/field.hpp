#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace carlitz {

/// Packed element of F_{q^e}: the integer sum c_i p^i of its coordinates on
/// the power basis of the modulus.
using Residue = std::uint32_t;

/// Parameters of the working field K_w = F_{q^e}((pi)) with theta = -pi^(-ram).
struct FieldConfig {
  std::uint32_t p = 3;
  std::uint32_t m = 1;
  std::uint32_t e = 1;
  std::int64_t ram = 2;
  std::int64_t default_prec = 200;

  std::uint64_t q() const;
  /// Throws ConfigError when p is not prime, ram is not a multiple of q-1,
  /// the residue field is too large for table arithmetic, or prec < 1.
  void validate() const;
};

/// Table-driven arithmetic in F_{p^d}. The modulus is the smallest monic
/// irreducible of degree d over F_p, ordered by the integer encoding of its
/// lower coefficients, so every build produces the same field.
class ResidueField {
 public:
  ResidueField(std::uint32_t p, std::uint32_t degree);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return d_; }
  std::uint32_t size() const { return n_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Residue add(Residue a, Residue b) const;
  Residue sub(Residue a, Residue b) const;
  Residue neg(Residue a) const;
  Residue mul(Residue a, Residue b) const;
  Residue inv(Residue a) const;
  Residue pow(Residue a, std::int64_t k) const;
  /// a^(p^k) for any integer k (negative k gives the inverse Frobenius).
  Residue frobenius(Residue a, std::int64_t k) const;

  Residue from_int(std::int64_t n) const;
  std::vector<std::uint32_t> coords(Residue a) const;
  Residue from_coords(const std::vector<std::uint32_t>& c) const;

  /// Multiplication by direct polynomial reduction, bypassing the tables.
  Residue mul_reference(Residue a, Residue b) const;

  bool is_prime_field() const { return d_ == 1; }

 private:
  std::uint32_t p_;
  std::uint32_t d_;
  std::uint32_t n_;
  std::vector<std::uint32_t> modulus_;  // c_0..c_{d-1}, leading 1 implied
  std::vector<std::uint32_t> log_;
  std::vector<Residue> exp_;
  std::vector<Residue> add_table_;
  std::vector<Residue> neg_table_;
};

/// Immutable bundle of a validated config and its residue field. Shared by
/// every element built over it.
class Field {
 public:
  explicit Field(FieldConfig cfg);

  const FieldConfig& config() const { return cfg_; }
  const ResidueField& residue() const { return residue_; }
  std::uint64_t q() const { return q_; }
  std::uint32_t p() const { return cfg_.p; }
  std::int64_t ram() const { return cfg_.ram; }
  std::int64_t default_prec() const { return cfg_.default_prec; }
  /// pi-exponent of zeta_theta, i.e. -ram/(q-1).
  std::int64_t zeta_exponent() const { return -cfg_.ram / static_cast<std::int64_t>(q_ - 1); }
  /// Largest log-domain valuation excluded: z is in the domain iff val(z) > this.
  std::int64_t log_domain_bound() const {
    return -static_cast<std::int64_t>(q_) * cfg_.ram / static_cast<std::int64_t>(q_ - 1);
  }

  /// c^(q^n) in the residue field.
  Residue frob_q(Residue c, std::int64_t n) const;
  bool in_fq(Residue c) const { return frob_q(c, 1) == c; }
  /// Elements of F_q inside F_{q^e}, in increasing encoding order.
  const std::vector<Residue>& fq_elements() const { return fq_; }

  bool compatible(const Field& other) const;
  std::string describe() const;

 private:
  FieldConfig cfg_;
  ResidueField residue_;
  std::uint64_t q_;
  std::vector<Residue> fq_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(const FieldConfig& cfg);
bool same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace carlitz
