#pragma once

#include "tropval/elem.hpp"
#include "tropval/report.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tropval {

/// A computable commutative semiring. All operations are pure and total on
/// valid elements; carrier values are immutable after construction and safe
/// to share between threads.
class Carrier {
public:
  virtual ~Carrier() = default;

  virtual std::string name() const = 0;
  virtual bool finite() const = 0;
  /// Number of elements; finite carriers only.
  virtual std::size_t size() const;
  /// i-th element; finite carriers only.
  virtual Elem element(int i) const;

  virtual Elem zero() const = 0;
  virtual Elem one() const = 0;
  virtual Elem add(const Elem& a, const Elem& b) const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  virtual bool eq(const Elem& a, const Elem& b) const { return a == b; }

  /// Native total order, when the carrier carries one (graded carriers, the
  /// rational-function field, symbolic supertropical carriers).
  virtual std::optional<bool> leq(const Elem& a, const Elem& b) const {
    (void)a;
    (void)b;
    return std::nullopt;
  }

  /// Deterministic element sample. Finite carriers enumerate everything;
  /// infinite carriers produce a reproducible sample of at most `budget`
  /// elements from the documented generation scheme.
  virtual std::vector<Elem> sample(std::size_t budget, std::uint64_t seed) const = 0;

  virtual std::string show(const Elem& e) const = 0;

  /// Multiplicative inverse, when one exists and is computable.
  virtual std::optional<Elem> invert(const Elem& e) const = 0;

  bool is_zero(const Elem& e) const { return eq(e, zero()); }
  bool is_one(const Elem& e) const { return eq(e, one()); }
};

using CarrierPtr = std::shared_ptr<const Carrier>;

/// Default sampling seed; every sampled check in the toolkit is reproducible
/// from (seed, budget).
inline constexpr std::uint64_t kDefaultSeed = 20160920u;

std::vector<Elem> all_elements(const Carrier& c);

/// Commutative semiring given by element names and full Cayley tables.
class FiniteSemiring final : public Carrier,
                             public std::enable_shared_from_this<FiniteSemiring> {
public:
  /// Validates shape only (squareness, index ranges, n >= 2); semiring axioms
  /// are the business of verify_semiring.
  FiniteSemiring(std::string name, std::vector<std::string> elems, int zero, int one,
                 std::vector<int> add, std::vector<int> mul);

  std::string name() const override { return name_; }
  bool finite() const override { return true; }
  std::size_t size() const override { return names_.size(); }
  Elem element(int i) const override { return FinIdx{i}; }

  Elem zero() const override { return FinIdx{zero_}; }
  Elem one() const override { return FinIdx{one_}; }
  Elem add(const Elem& a, const Elem& b) const override { return FinIdx{addi(fin(a), fin(b))}; }
  Elem mul(const Elem& a, const Elem& b) const override { return FinIdx{muli(fin(a), fin(b))}; }
  /// The addition-derived relation x <= y iff x + y = y; the total order of
  /// the carrier exactly when it is bipotent.
  std::optional<bool> leq(const Elem& a, const Elem& b) const override {
    return addi(fin(a), fin(b)) == fin(b);
  }
  std::vector<Elem> sample(std::size_t, std::uint64_t) const override { return all_elements(*this); }
  std::string show(const Elem& e) const override { return names_[static_cast<std::size_t>(fin(e))]; }
  std::optional<Elem> invert(const Elem& e) const override;

  int addi(int a, int b) const { return add_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)]; }
  int muli(int a, int b) const { return mul_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)]; }
  int zero_index() const { return zero_; }
  int one_index() const { return one_; }
  const std::vector<std::string>& element_names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 when unknown

private:
  std::string name_;
  std::vector<std::string> names_;
  int zero_, one_;
  std::vector<int> add_, mul_;
};

using FiniteSemiringPtr = std::shared_ptr<const FiniteSemiring>;

/// Integer-graded max-plus carrier: BOTTOM plus elements u^k. Addition is max
/// in grade order with BOTTOM least, multiplication adds grades. The _N
/// variant restricts grades to k >= 0.
class GradedCarrier final : public Carrier {
public:
  explicit GradedCarrier(bool nat_only) : nat_(nat_only) {}

  std::string name() const override { return nat_ ? "maxplus_n" : "maxplus_z"; }
  bool finite() const override { return false; }
  Elem zero() const override { return GradeElem{true, 0}; }
  Elem one() const override { return GradeElem{false, 0}; }
  Elem add(const Elem& a, const Elem& b) const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  std::optional<bool> leq(const Elem& a, const Elem& b) const override;
  std::vector<Elem> sample(std::size_t budget, std::uint64_t seed) const override;
  std::string show(const Elem& e) const override;
  std::optional<Elem> invert(const Elem& e) const override;
  bool nat_only() const { return nat_; }

private:
  bool nat_;
};

/// The ordered field Q(t) with t a positive infinitesimal; the computable
/// stand-in for the totally ordered fields of the source examples.
class RatFuncField final : public Carrier {
public:
  std::string name() const override { return "ratfunc"; }
  bool finite() const override { return false; }
  Elem zero() const override { return RatFunc{}; }
  Elem one() const override { return RatFunc::from_int(1); }
  Elem add(const Elem& a, const Elem& b) const override { return rf(a) + rf(b); }
  Elem mul(const Elem& a, const Elem& b) const override { return rf(a) * rf(b); }
  std::optional<bool> leq(const Elem& a, const Elem& b) const override { return rf(a) <= rf(b); }
  /// Deterministic scheme: a fixed preamble of landmark elements, then
  /// fractions with numerator/denominator degree <= 3 and coefficients in
  /// {-2..2} drawn from mt19937_64(seed), reduced and deduplicated.
  std::vector<Elem> sample(std::size_t budget, std::uint64_t seed) const override;
  std::string show(const Elem& e) const override { return rf(e).to_string(); }
  std::optional<Elem> invert(const Elem& e) const override;

  static const RatFunc& rf(const Elem& e) { return std::get<RatFunc>(e); }
};

/// Value semiring of the absolute-value map on Q(t): the nonnegative rational
/// functions with addition = max and field multiplication. Bipotent and
/// cancellative.
class AbsValueCarrier final : public Carrier {
public:
  std::string name() const override { return "ratfunc_abs"; }
  bool finite() const override { return false; }
  Elem zero() const override { return RatFunc{}; }
  Elem one() const override { return RatFunc::from_int(1); }
  Elem add(const Elem& a, const Elem& b) const override {
    return RatFuncField::rf(a) <= RatFuncField::rf(b) ? b : a;
  }
  Elem mul(const Elem& a, const Elem& b) const override {
    return RatFuncField::rf(a) * RatFuncField::rf(b);
  }
  std::optional<bool> leq(const Elem& a, const Elem& b) const override {
    return RatFuncField::rf(a) <= RatFuncField::rf(b);
  }
  std::vector<Elem> sample(std::size_t budget, std::uint64_t seed) const override;
  std::string show(const Elem& e) const override { return RatFuncField::rf(e).to_string(); }
  std::optional<Elem> invert(const Elem& e) const override;
};

using MapFn = std::function<Elem(const Elem&)>;

/// Symbolic ordered supertropical carrier OSTR(T, G, rho) for infinite data:
/// tangible part T = N \ {0}, ghost part G = M \ {0}, with N, M bipotent
/// carriers and rho : N -> M the connecting homomorphism. Elements are
/// tagged; the order follows the extended-order rules, the addition the
/// ghost-companion rule.
class OstrCarrier final : public Carrier {
public:
  OstrCarrier(std::string name, CarrierPtr tangible_side, CarrierPtr ghost_side, MapFn rho);

  std::string name() const override { return name_; }
  bool finite() const override { return false; }
  Elem zero() const override { return STElem{STElem::Zero, FinIdx{0}}; }
  Elem one() const override { return STElem{STElem::Tangible, to_base(tan_->one())}; }
  Elem ghost_one() const { return STElem{STElem::Ghost, to_base(gh_->one())}; }
  Elem add(const Elem& a, const Elem& b) const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  std::optional<bool> leq(const Elem& a, const Elem& b) const override;
  std::vector<Elem> sample(std::size_t budget, std::uint64_t seed) const override;
  std::string show(const Elem& e) const override;
  std::optional<Elem> invert(const Elem& e) const override;

  /// Ghost companion x -> ex as an element of the ghost-side carrier M
  /// (zero of M for x = 0).
  Elem nu_ghost(const Elem& e) const;
  const CarrierPtr& tangible_side() const { return tan_; }
  const CarrierPtr& ghost_side() const { return gh_; }
  const MapFn& rho() const { return rho_; }

private:
  std::string name_;
  CarrierPtr tan_, gh_;
  MapFn rho_;
};

/// Quotient of a totally ordered carrier by a class-representative map;
/// operations are computed upstairs and normalized. Used for quotients by
/// order-compatible relations on infinite carriers.
class NormalizedQuotientCarrier final : public Carrier {
public:
  NormalizedQuotientCarrier(std::string name, CarrierPtr base, MapFn normalize)
      : name_(std::move(name)), base_(std::move(base)), norm_(std::move(normalize)) {}

  std::string name() const override { return name_; }
  bool finite() const override { return false; }
  Elem zero() const override { return norm_(base_->zero()); }
  Elem one() const override { return norm_(base_->one()); }
  Elem add(const Elem& a, const Elem& b) const override { return norm_(base_->add(a, b)); }
  Elem mul(const Elem& a, const Elem& b) const override { return norm_(base_->mul(a, b)); }
  bool eq(const Elem& a, const Elem& b) const override { return norm_(a) == norm_(b); }
  std::optional<bool> leq(const Elem& a, const Elem& b) const override {
    if (eq(a, b)) return true;
    return base_->leq(norm_(a), norm_(b));
  }
  std::vector<Elem> sample(std::size_t budget, std::uint64_t seed) const override;
  std::string show(const Elem& e) const override { return "[" + base_->show(norm_(e)) + "]"; }
  std::optional<Elem> invert(const Elem& e) const override;
  const CarrierPtr& base() const { return base_; }

private:
  std::string name_;
  CarrierPtr base_;
  MapFn norm_;
};

/// All units of a finite carrier, in index order.
std::vector<Elem> finite_units(const Carrier& c);

}  // namespace tropval
