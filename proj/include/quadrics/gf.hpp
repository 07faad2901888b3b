#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace quadrics {

/// Raw field element value, an index in [0, q). Arithmetic goes through the
/// owning Field; use Elem when cross-field mixups must be caught.
using Fel = std::uint16_t;

bool is_prime(long long v);

/// The finite field F_q, q = p^m, as F_p[t]/(modulus). Element a0 + a1*t +
/// ... + a_{m-1}*t^{m-1} is encoded as the integer a0 + a1*p + ... (digits
/// little-endian, always reduced). All operations are table lookups after
/// construction; instances are immutable and safe to share across threads.
class Field {
public:
  /// Default cardinality cap for desk-scale enumeration work.
  static constexpr int kDefaultCap = 64;
  /// Absolute ceiling (table memory), independent of the configured cap.
  static constexpr int kHardCap = 1024;

  /// Builds F_{p^m} with the deterministic modulus: the monic irreducible of
  /// degree m over F_p whose coefficient vector, read as a base-p integer
  /// with the constant term least significant, is smallest.
  /// Throws std::invalid_argument for non-prime p, m < 1, or q over the cap.
  static Field make(int p, int m = 1, int cap = kDefaultCap);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  /// Modulus coefficients, little-endian, size m+1, monic.
  const std::vector<int>& modulus() const { return modulus_; }

  Fel zero() const { return 0; }
  Fel one() const { return 1; }

  Fel add(Fel a, Fel b) const { return add_[std::size_t(a) * q_ + b]; }
  Fel sub(Fel a, Fel b) const { return add(a, neg_[b]); }
  Fel mul(Fel a, Fel b) const { return mul_[std::size_t(a) * q_ + b]; }
  Fel neg(Fel a) const { return neg_[a]; }
  Fel inv(Fel a) const;  // throws std::domain_error on 0
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
  Fel pow(Fel a, long long e) const;  // negative e via inverse

  /// True iff some b satisfies b*b == a (0 counts as a square).
  bool is_square(Fel a) const { return sqrt_[a] != kNoSqrt; }
  /// A square root of a; throws std::domain_error if a is not a square.
  Fel sqrt(Fel a) const;

  /// Integer -> constant element, reduced mod p (handles negatives).
  Fel from_int(long long v) const;
  /// Little-endian coefficient vector (size <= m), residues reduced mod p.
  Fel from_coeffs(std::span<const int> c) const;
  /// Little-endian residue vector of length m.
  std::vector<int> coeffs(Fel a) const;

  /// "3" for prime fields, "[a0,a1,...]" for extensions.
  std::string str(Fel a) const;

  bool operator==(const Field& o) const {
    return p_ == o.p_ && modulus_ == o.modulus_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  const Fel* add_table() const { return add_.data(); }
  const Fel* mul_table() const { return mul_.data(); }

private:
  Field() = default;
  static constexpr Fel kNoSqrt = 0xffff;

  int p_ = 0, m_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<Fel> add_, mul_;  // q*q, row-major
  std::vector<Fel> neg_, inv_, sqrt_;
};

/// A field element together with its field, with cross-field checks on every
/// operation. Convenience layer over Field's raw interface.
class Elem {
public:
  Elem(const Field& f, Fel v) : field_(&f), value_(v) {}

  const Field& field() const { return *field_; }
  Fel value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  friend Elem operator+(Elem a, Elem b) { return {a.same(b), a.field_->add(a.value_, b.value_)}; }
  friend Elem operator-(Elem a, Elem b) { return {a.same(b), a.field_->sub(a.value_, b.value_)}; }
  friend Elem operator*(Elem a, Elem b) { return {a.same(b), a.field_->mul(a.value_, b.value_)}; }
  friend Elem operator/(Elem a, Elem b) { return {a.same(b), a.field_->div(a.value_, b.value_)}; }
  Elem operator-() const { return {*field_, field_->neg(value_)}; }
  Elem inv() const { return {*field_, field_->inv(value_)}; }
  Elem pow(long long e) const { return {*field_, field_->pow(value_, e)}; }

  friend bool operator==(Elem a, Elem b) { a.same(b); return a.value_ == b.value_; }
  friend bool operator!=(Elem a, Elem b) { return !(a == b); }

  std::string str() const { return field_->str(value_); }

private:
  Elem(const Field* f, Fel v) : field_(f), value_(v) {}
  const Field* same(const Elem& o) const;  // throws on field mismatch

  const Field* field_;
  Fel value_;
};

/// F_{q^k} together with the embedding of the base field.
struct FieldExtension {
  Field field;             // F_{p^{m*k}}
  std::vector<Fel> embed;  // embed[a] = image of base element a
};

/// Extends F_q to F_{q^k}; the embedding sends the base generator to the
/// smallest root of the base modulus in the extension. k = 1 yields the same
/// field with the identity embedding.
FieldExtension extend_field(const Field& base, int k, int cap = Field::kDefaultCap);

}  // namespace quadrics
