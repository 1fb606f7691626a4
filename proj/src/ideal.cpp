#include "extpow/ideal.hpp"

namespace extpow {

bool Ideal::is_zero() const {
    for (const auto& g : generators)
        if (!g.is_zero()) return false;
    return true;
}

bool Ideal::is_unit() const {
    if (normal_form) return normal_form->is_unit();
    for (const auto& g : generators)
        if (g.is_unit()) return true;
    return false;
}

Ideal ideal_generate(const RingPtr& ring, const std::vector<RingElem>& gens) {
    for (const auto& g : gens)
        if (!g.ring()->same(*ring))
            throw std::invalid_argument("mixed ring specs");

    Ideal ideal;
    ideal.ring = ring;
    ideal.generators = gens;

    switch (ring->kind()) {
        case RingKind::Integers: {
            mpz_class g = 0;
            for (const auto& x : gens)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.scalar().get_mpz_t());
            ideal.normal_form = RingElem(ring, g);
            break;
        }
        case RingKind::ModRing:
        case RingKind::PrimeField: {
            mpz_class g = ring->modulus();
            for (const auto& x : gens)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.scalar().get_mpz_t());
            if (g == ring->modulus()) g = 0;  // zero ideal
            ideal.normal_form = RingElem(ring, g);
            break;
        }
        case RingKind::PolyRing:
            break;  // generators verbatim, no normal form
    }
    return ideal;
}

bool ideal_membership(const Ideal& ideal, const RingElem& x) {
    if (!x.ring()->same(*ideal.ring))
        throw std::invalid_argument("mixed ring specs");
    const Ring& r = *ideal.ring;
    if (r.kind() == RingKind::PolyRing)
        throw std::invalid_argument(
            "ideal membership unsupported for polynomial rings");

    const mpz_class& nf = ideal.normal_form->scalar();
    switch (r.kind()) {
        case RingKind::Integers: {
            if (nf == 0) return x.scalar() == 0;
            return mpz_divisible_p(x.scalar().get_mpz_t(), nf.get_mpz_t()) != 0;
        }
        case RingKind::ModRing:
        case RingKind::PrimeField: {
            // (d) = {0, d, 2d, ...} inside Z/k for d | k.
            if (nf == 0) return x.is_zero();
            return mpz_divisible_p(x.scalar().get_mpz_t(), nf.get_mpz_t()) != 0;
        }
        default:
            return false;
    }
}

}  // namespace extpow
