#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace extpow {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class RingKind { Integers, ModRing, PrimeField, PolyRing };

/// An exact commutative ring: Z, Z/k, F_p, or a polynomial ring over one of
/// those.  Instances are immutable and shared; equality is structural.
class Ring {
public:
    static RingPtr integers();
    static RingPtr mod_ring(const mpz_class& k);      // k >= 2
    static RingPtr prime_field(const mpz_class& p);   // p prime
    static RingPtr polynomial(RingPtr base, std::vector<std::string> vars);

    RingKind kind() const { return kind_; }
    const mpz_class& modulus() const { return modulus_; }
    const RingPtr& base() const { return base_; }
    const std::vector<std::string>& vars() const { return vars_; }

    bool is_field() const { return kind_ == RingKind::PrimeField; }
    bool is_modular() const {
        return kind_ == RingKind::ModRing || kind_ == RingKind::PrimeField;
    }
    bool two_invertible() const;
    bool same(const Ring& other) const;
    std::string describe() const;

    int var_index(const std::string& name) const;

    Ring(RingKind kind, mpz_class modulus, RingPtr base,
         std::vector<std::string> vars);

private:
    RingKind kind_;
    mpz_class modulus_;
    RingPtr base_;
    std::vector<std::string> vars_;
};

/// Dense exponent vector over the declared variables of a polynomial ring.
using Exponents = std::vector<std::uint32_t>;

/// Sparse polynomial payload: monomial -> coefficient, canonical form
/// (coefficients reduced in the base ring, zero terms absent).
using PolyTerms = std::map<Exponents, mpz_class>;

/// An exact element of a Ring.  Value type; all arithmetic is exact and the
/// representation is canonical, so equality is representational equality.
class RingElem {
public:
    RingElem() = default;
    RingElem(RingPtr ring, const mpz_class& value);
    RingElem(RingPtr ring, long value);

    static RingElem zero(const RingPtr& ring);
    static RingElem one(const RingPtr& ring);
    static RingElem variable(const RingPtr& ring, const std::string& name);
    static RingElem from_poly(RingPtr ring, PolyTerms terms);

    const RingPtr& ring() const { return ring_; }
    bool valid() const { return ring_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;
    bool is_constant() const;  // true for non-poly payloads as well

    /// Constant term as an element of the base (or self for scalars).
    mpz_class constant_value() const;

    std::optional<RingElem> inverse() const;

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator-() const;
    RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
    RingElem& operator-=(const RingElem& o) { return *this = *this - o; }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }
    bool operator<(const RingElem& o) const;  // deterministic total order

    RingElem pow(unsigned e) const;

    /// Scalar payload (throws on polynomials).
    const mpz_class& scalar() const;
    const PolyTerms& poly_terms() const;
    bool is_poly_payload() const;

    /// Maps this element into `target` through the evident coefficient
    /// homomorphism, substituting `assign` for the variables.  Every
    /// variable occurring in the payload must be assigned unless the target
    /// ring declares it too.
    RingElem map_to(const RingPtr& target,
                    const std::map<std::string, RingElem>& assign = {}) const;

    /// True when every monomial of the payload carries a positive exponent
    /// of `var` (used for "argument lies in the ideal (var)" checks).
    bool divisible_by_variable(const std::string& var) const;

    std::string to_string() const;

private:
    void canonicalize();

    RingPtr ring_;
    std::variant<mpz_class, PolyTerms> payload_;
};

void require_same_ring(const RingElem& a, const RingElem& b);

mpz_class mod_reduce(const mpz_class& v, const mpz_class& k);
mpz_class ext_gcd(const mpz_class& a, const mpz_class& b, mpz_class& x,
                  mpz_class& y);

}  // namespace extpow
