#include "extpow/ring.hpp"

#include <algorithm>
#include <sstream>

namespace extpow {

namespace {

bool probably_prime(const mpz_class& p) {
    return mpz_probab_prime_p(p.get_mpz_t(), 30) != 0;
}

}  // namespace

Ring::Ring(RingKind kind, mpz_class modulus, RingPtr base,
           std::vector<std::string> vars)
    : kind_(kind),
      modulus_(std::move(modulus)),
      base_(std::move(base)),
      vars_(std::move(vars)) {}

RingPtr Ring::integers() {
    static RingPtr z = std::make_shared<Ring>(RingKind::Integers, mpz_class(0),
                                              nullptr,
                                              std::vector<std::string>{});
    return z;
}

RingPtr Ring::mod_ring(const mpz_class& k) {
    if (k < 2) throw std::invalid_argument("modular ring requires k >= 2");
    return std::make_shared<Ring>(RingKind::ModRing, k, nullptr,
                                  std::vector<std::string>{});
}

RingPtr Ring::prime_field(const mpz_class& p) {
    if (p < 2 || !probably_prime(p))
        throw std::invalid_argument("prime field requires a prime modulus");
    return std::make_shared<Ring>(RingKind::PrimeField, p, nullptr,
                                  std::vector<std::string>{});
}

RingPtr Ring::polynomial(RingPtr base, std::vector<std::string> vars) {
    if (!base) throw std::invalid_argument("polynomial ring needs a base");
    if (base->kind() == RingKind::PolyRing)
        throw std::invalid_argument("nested polynomial rings not supported");
    if (vars.empty())
        throw std::invalid_argument("polynomial ring needs variables");
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw std::invalid_argument("duplicate variable name");
    return std::make_shared<Ring>(RingKind::PolyRing, mpz_class(0),
                                  std::move(base), std::move(vars));
}

bool Ring::two_invertible() const {
    switch (kind_) {
        case RingKind::Integers: return false;
        case RingKind::ModRing:
        case RingKind::PrimeField: return mpz_odd_p(modulus_.get_mpz_t());
        case RingKind::PolyRing: return base_->two_invertible();
    }
    return false;
}

bool Ring::same(const Ring& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case RingKind::Integers: return true;
        case RingKind::ModRing:
        case RingKind::PrimeField: return modulus_ == other.modulus_;
        case RingKind::PolyRing:
            return vars_ == other.vars_ && base_->same(*other.base_);
    }
    return false;
}

std::string Ring::describe() const {
    switch (kind_) {
        case RingKind::Integers: return "Z";
        case RingKind::ModRing: return "Z/" + modulus_.get_str();
        case RingKind::PrimeField: return "F_" + modulus_.get_str();
        case RingKind::PolyRing: {
            std::string s = base_->describe() + "[";
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (i) s += ",";
                s += vars_[i];
            }
            return s + "]";
        }
    }
    return "?";
}

int Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

mpz_class mod_reduce(const mpz_class& v, const mpz_class& k) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
    return r;
}

mpz_class ext_gcd(const mpz_class& a, const mpz_class& b, mpz_class& x,
                  mpz_class& y) {
    mpz_class g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return g;
}

RingElem::RingElem(RingPtr ring, const mpz_class& value)
    : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("null ring");
    if (ring_->kind() == RingKind::PolyRing) {
        PolyTerms t;
        if (value != 0)
            t.emplace(Exponents(ring_->vars().size(), 0), value);
        payload_ = std::move(t);
    } else {
        payload_ = value;
    }
    canonicalize();
}

RingElem::RingElem(RingPtr ring, long value)
    : RingElem(std::move(ring), mpz_class(value)) {}

RingElem RingElem::zero(const RingPtr& ring) { return RingElem(ring, 0L); }
RingElem RingElem::one(const RingPtr& ring) { return RingElem(ring, 1L); }

RingElem RingElem::variable(const RingPtr& ring, const std::string& name) {
    if (ring->kind() != RingKind::PolyRing)
        throw std::invalid_argument("variables live in polynomial rings");
    int idx = ring->var_index(name);
    if (idx < 0) throw std::invalid_argument("unknown variable " + name);
    PolyTerms t;
    Exponents e(ring->vars().size(), 0);
    e[static_cast<std::size_t>(idx)] = 1;
    t.emplace(std::move(e), mpz_class(1));
    return from_poly(ring, std::move(t));
}

RingElem RingElem::from_poly(RingPtr ring, PolyTerms terms) {
    if (ring->kind() != RingKind::PolyRing)
        throw std::invalid_argument("poly payload needs a polynomial ring");
    RingElem e;
    e.ring_ = std::move(ring);
    e.payload_ = std::move(terms);
    e.canonicalize();
    return e;
}

void RingElem::canonicalize() {
    if (std::holds_alternative<mpz_class>(payload_)) {
        if (ring_->is_modular())
            std::get<mpz_class>(payload_) =
                mod_reduce(std::get<mpz_class>(payload_), ring_->modulus());
        return;
    }
    auto& terms = std::get<PolyTerms>(payload_);
    const auto& base = ring_->base();
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->first.size() != ring_->vars().size())
            throw std::invalid_argument("exponent vector arity mismatch");
        if (base->is_modular())
            it->second = mod_reduce(it->second, base->modulus());
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
}

bool RingElem::is_poly_payload() const {
    return std::holds_alternative<PolyTerms>(payload_);
}

const mpz_class& RingElem::scalar() const {
    if (is_poly_payload())
        throw std::logic_error("polynomial payload has no scalar value");
    return std::get<mpz_class>(payload_);
}

const PolyTerms& RingElem::poly_terms() const {
    if (!is_poly_payload())
        throw std::logic_error("scalar payload has no polynomial terms");
    return std::get<PolyTerms>(payload_);
}

bool RingElem::is_zero() const {
    if (is_poly_payload()) return poly_terms().empty();
    return scalar() == 0;
}

bool RingElem::is_one() const {
    if (is_poly_payload()) {
        const auto& t = poly_terms();
        if (t.size() != 1) return false;
        const auto& [e, c] = *t.begin();
        return std::all_of(e.begin(), e.end(),
                           [](std::uint32_t x) { return x == 0; }) &&
               c == 1;
    }
    return scalar() == 1;
}

bool RingElem::is_constant() const {
    if (!is_poly_payload()) return true;
    const auto& t = poly_terms();
    if (t.empty()) return true;
    if (t.size() != 1) return false;
    const auto& e = t.begin()->first;
    return std::all_of(e.begin(), e.end(),
                       [](std::uint32_t x) { return x == 0; });
}

mpz_class RingElem::constant_value() const {
    if (!is_poly_payload()) return scalar();
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    const auto& t = poly_terms();
    return t.empty() ? mpz_class(0) : t.begin()->second;
}

bool RingElem::is_unit() const {
    const Ring& r = *ring_;
    switch (r.kind()) {
        case RingKind::Integers: {
            const mpz_class& v = scalar();
            return v == 1 || v == -1;
        }
        case RingKind::ModRing:
        case RingKind::PrimeField: {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), scalar().get_mpz_t(),
                    r.modulus().get_mpz_t());
            return g == 1;
        }
        case RingKind::PolyRing: {
            if (!is_constant()) return false;
            RingElem c(r.base(), constant_value());
            return c.is_unit();
        }
    }
    return false;
}

std::optional<RingElem> RingElem::inverse() const {
    const Ring& r = *ring_;
    switch (r.kind()) {
        case RingKind::Integers: {
            if (is_unit()) return *this;
            return std::nullopt;
        }
        case RingKind::ModRing:
        case RingKind::PrimeField: {
            mpz_class x, y;
            mpz_class g = ext_gcd(scalar(), r.modulus(), x, y);
            if (g != 1) return std::nullopt;
            return RingElem(ring_, x);
        }
        case RingKind::PolyRing: {
            if (!is_constant()) return std::nullopt;
            RingElem c(r.base(), constant_value());
            auto ci = c.inverse();
            if (!ci) return std::nullopt;
            return RingElem(ring_, ci->scalar());
        }
    }
    return std::nullopt;
}

RingElem RingElem::operator+(const RingElem& o) const {
    require_same_ring(*this, o);
    if (!is_poly_payload()) {
        RingElem r;
        r.ring_ = ring_;
        r.payload_ = scalar() + o.scalar();
        r.canonicalize();
        return r;
    }
    PolyTerms out = poly_terms();
    for (const auto& [e, c] : o.poly_terms()) out[e] += c;
    return from_poly(ring_, std::move(out));
}

RingElem RingElem::operator-(const RingElem& o) const {
    return *this + (-o);
}

RingElem RingElem::operator-() const {
    if (!is_poly_payload()) {
        RingElem r;
        r.ring_ = ring_;
        r.payload_ = mpz_class(-scalar());
        r.canonicalize();
        return r;
    }
    PolyTerms out;
    for (const auto& [e, c] : poly_terms()) out.emplace(e, -c);
    return from_poly(ring_, std::move(out));
}

RingElem RingElem::operator*(const RingElem& o) const {
    require_same_ring(*this, o);
    if (!is_poly_payload()) {
        RingElem r;
        r.ring_ = ring_;
        r.payload_ = scalar() * o.scalar();
        r.canonicalize();
        return r;
    }
    PolyTerms out;
    const std::size_t nv = ring_->vars().size();
    for (const auto& [ea, ca] : poly_terms()) {
        for (const auto& [eb, cb] : o.poly_terms()) {
            Exponents e(nv);
            for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            out[std::move(e)] += ca * cb;
        }
    }
    return from_poly(ring_, std::move(out));
}

bool RingElem::operator==(const RingElem& o) const {
    if (!ring_ || !o.ring_) return ring_ == o.ring_;
    if (!ring_->same(*o.ring_)) return false;
    return payload_ == o.payload_;
}

bool RingElem::operator<(const RingElem& o) const {
    require_same_ring(*this, o);
    if (!is_poly_payload()) return scalar() < o.scalar();
    return poly_terms() < o.poly_terms();
}

RingElem RingElem::pow(unsigned e) const {
    RingElem acc = one(ring_);
    RingElem b = *this;
    while (e) {
        if (e & 1u) acc *= b;
        b *= b;
        e >>= 1u;
    }
    return acc;
}

RingElem RingElem::map_to(const RingPtr& target,
                          const std::map<std::string, RingElem>& assign) const {
    if (!is_poly_payload()) {
        if (target->kind() == RingKind::PolyRing)
            return RingElem(target, scalar());
        return RingElem(target, scalar());
    }
    RingElem acc = RingElem::zero(target);
    const auto& names = ring_->vars();
    for (const auto& [e, c] : poly_terms()) {
        RingElem term(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            RingElem v;
            auto it = assign.find(names[i]);
            if (it != assign.end()) {
                v = it->second;
                if (!v.ring()->same(*target))
                    throw std::invalid_argument(
                        "assignment value in wrong ring");
            } else if (target->kind() == RingKind::PolyRing &&
                       target->var_index(names[i]) >= 0) {
                v = RingElem::variable(target, names[i]);
            } else {
                throw std::invalid_argument("unassigned variable " + names[i]);
            }
            term *= v.pow(e[i]);
        }
        acc += term;
    }
    return acc;
}

bool RingElem::divisible_by_variable(const std::string& var) const {
    if (!is_poly_payload()) return is_zero();
    int idx = ring_->var_index(var);
    if (idx < 0) return is_zero();
    for (const auto& [e, c] : poly_terms())
        if (e[static_cast<std::size_t>(idx)] == 0) return false;
    return true;
}

std::string RingElem::to_string() const {
    if (!is_poly_payload()) return scalar().get_str();
    if (poly_terms().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest monomial first reads more naturally.
    for (auto it = poly_terms().rbegin(); it != poly_terms().rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = c;
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        first = false;
        if (a < 0) a = -a;
        bool has_var = std::any_of(e.begin(), e.end(),
                                   [](std::uint32_t x) { return x > 0; });
        if (a != 1 || !has_var) os << a.get_str();
        bool star = (a != 1 || !has_var);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            star = true;
            os << ring_->vars()[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

void require_same_ring(const RingElem& a, const RingElem& b) {
    if (!a.ring() || !b.ring() || !a.ring()->same(*b.ring()))
        throw std::invalid_argument("mixed ring specs");
}

}  // namespace extpow
