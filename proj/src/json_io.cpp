#include "extpow/json_io.hpp"

namespace extpow {

namespace {

Json mpz_to_json(const mpz_class& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

mpz_class mpz_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}

}  // namespace

Json ring_to_json(const RingPtr& ring) {
    Json j;
    switch (ring->kind()) {
        case RingKind::Integers: j["kind"] = "z"; break;
        case RingKind::ModRing:
            j["kind"] = "zmod";
            j["modulus"] = mpz_to_json(ring->modulus());
            break;
        case RingKind::PrimeField:
            j["kind"] = "fp";
            j["modulus"] = mpz_to_json(ring->modulus());
            break;
        case RingKind::PolyRing:
            j["kind"] = "poly";
            j["vars"] = ring->vars();
            j["base"] = ring_to_json(ring->base());
            break;
    }
    return j;
}

RingPtr ring_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "z") return Ring::integers();
    if (kind == "zmod") return Ring::mod_ring(mpz_from_json(j.at("modulus")));
    if (kind == "fp")
        return Ring::prime_field(mpz_from_json(j.at("modulus")));
    if (kind == "poly")
        return Ring::polynomial(ring_from_json(j.at("base")),
                                j.at("vars").get<std::vector<std::string>>());
    throw std::invalid_argument("unknown ring kind: " + kind);
}

RingPtr parse_ring_flag(const std::string& flag) {
    if (flag == "z") return Ring::integers();
    auto starts = [&](const char* p) { return flag.rfind(p, 0) == 0; };
    if (starts("zmod:")) return Ring::mod_ring(mpz_class(flag.substr(5)));
    if (starts("fp:")) return Ring::prime_field(mpz_class(flag.substr(3)));
    if (starts("poly")) {
        std::string rest = flag.substr(4);
        std::string vars_part = "xi,zeta";
        std::string base_part = "z";
        auto at = rest.find('@');
        if (at != std::string::npos) {
            base_part = rest.substr(at + 1);
            rest = rest.substr(0, at);
        }
        if (!rest.empty()) {
            if (rest[0] != ':')
                throw std::invalid_argument("bad ring flag: " + flag);
            vars_part = rest.substr(1);
        }
        std::vector<std::string> vars;
        std::stringstream ss(vars_part);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) vars.push_back(tok);
        return Ring::polynomial(parse_ring_flag(base_part), std::move(vars));
    }
    throw std::invalid_argument("bad ring flag: " + flag);
}

Json elem_to_json(const RingElem& x) {
    if (!x.is_poly_payload()) return mpz_to_json(x.scalar());
    Json terms = Json::array();
    for (const auto& [e, c] : x.poly_terms()) {
        Json t;
        t["monomial"] = e;
        t["coeff"] = mpz_to_json(c);
        terms.push_back(std::move(t));
    }
    return terms;
}

RingElem elem_from_json(const Json& j, const RingPtr& ring) {
    if (j.is_array()) {
        if (ring->kind() != RingKind::PolyRing)
            throw std::invalid_argument("polynomial payload for scalar ring");
        PolyTerms terms;
        for (const auto& t : j) {
            Exponents e = t.at("monomial").get<Exponents>();
            terms[e] += mpz_from_json(t.at("coeff"));
        }
        return RingElem::from_poly(ring, std::move(terms));
    }
    if (j.is_string() && ring->kind() == RingKind::PolyRing &&
        ring->var_index(j.get<std::string>()) >= 0)
        return RingElem::variable(ring, j.get<std::string>());
    return RingElem(ring, mpz_from_json(j));
}

Json matrix_to_json(const Matrix& m) {
    Json j;
    j["ring"] = ring_to_json(m.ring());
    Json rows = Json::array();
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 1; c <= m.cols(); ++c)
            row.push_back(elem_to_json(m.at(i, c)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Matrix matrix_from_json(const Json& j, RingPtr ring_hint) {
    RingPtr ring = ring_hint;
    if (j.contains("ring")) ring = ring_from_json(j.at("ring"));
    if (!ring) throw std::invalid_argument("matrix JSON without a ring");
    const Json& rows = j.contains("rows") ? j.at("rows") : j;
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("matrix JSON needs a rows array");
    const std::size_t r = rows.size();
    const std::size_t c = rows[0].size();
    Matrix m(ring, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("ragged matrix JSON");
        for (std::size_t k = 0; k < c; ++k)
            m.at(i + 1, k + 1) = elem_from_json(rows[i][k], ring);
    }
    return m;
}

Json group_word_to_json(const GroupWord& w) {
    Json factors = Json::array();
    for (const auto& letter : w.letters()) {
        Json gen;
        gen["op"] = "gen";
        if (std::holds_alternative<Transvection>(letter.gen)) {
            const auto& t = std::get<Transvection>(letter.gen);
            gen["kind"] = "transvection";
            gen["i"] = t.i;
            gen["j"] = t.j;
            gen["arg"] = elem_to_json(t.arg);
        } else {
            gen["kind"] = "matrix";
            gen["matrix"] = matrix_to_json(std::get<Matrix>(letter.gen));
        }
        if (letter.exponent == -1) {
            Json inv;
            inv["op"] = "inv";
            inv["of"] = std::move(gen);
            factors.push_back(std::move(inv));
        } else {
            factors.push_back(std::move(gen));
        }
    }
    if (factors.size() == 1) return factors[0];
    Json j;
    j["op"] = "prod";
    j["factors"] = std::move(factors);
    return j;
}

GroupWord group_word_from_json(const Json& j, const RingPtr& ring,
                               std::size_t size) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "gen") {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "transvection") {
            Transvection t(size, j.at("i").get<int>(), j.at("j").get<int>(),
                           elem_from_json(j.at("arg"), ring));
            return GroupWord::from(t, ring);
        }
        if (kind == "matrix")
            return GroupWord::from(matrix_from_json(j.at("matrix"), ring));
        throw std::invalid_argument("unknown generator kind: " + kind);
    }
    if (op == "inv")
        return group_word_from_json(j.at("of"), ring, size).inverse();
    if (op == "prod") {
        GroupWord w(ring, size);
        for (const auto& f : j.at("factors"))
            w.append(group_word_from_json(f, ring, size));
        return w;
    }
    if (op == "comm")
        return GroupWord::commutator(
            group_word_from_json(j.at("x"), ring, size),
            group_word_from_json(j.at("y"), ring, size));
    if (op == "conj")
        return GroupWord::conjugate(
            group_word_from_json(j.at("by"), ring, size),
            group_word_from_json(j.at("of"), ring, size));
    throw std::invalid_argument("unknown word op: " + op);
}

Json ext_letter_to_json(const ExtLetter& l) {
    Json j;
    j["I"] = l.I.str();
    j["J"] = l.J.str();
    j["arg"] = elem_to_json(l.arg);
    return j;
}

ExtLetter ext_letter_from_json(const Json& j, const RingPtr& ring) {
    return ExtLetter{WeightIndex::parse(j.at("I").get<std::string>()),
                     WeightIndex::parse(j.at("J").get<std::string>()),
                     elem_from_json(j.at("arg"), ring)};
}

Json ext_word_to_json(const ExtWord& w) {
    Json atoms = Json::array();
    for (const auto& a : w.atoms) {
        Json ja;
        if (a.kind == WordAtom::Kind::Ext) {
            ja["kind"] = "ext";
            ja["I"] = a.I.str();
            ja["J"] = a.J.str();
        } else {
            ja["kind"] = "wedge";
            ja["i"] = a.i;
            ja["j"] = a.j;
        }
        ja["arg"] = elem_to_json(a.arg);
        atoms.push_back(std::move(ja));
    }
    return atoms;
}

ExtWord ext_word_from_json(const Json& j, const RingPtr& ring) {
    ExtWord w;
    for (const auto& ja : j) {
        const std::string kind = ja.at("kind").get<std::string>();
        if (kind == "ext") {
            w.append(WordAtom::ext(
                WeightIndex::parse(ja.at("I").get<std::string>()),
                WeightIndex::parse(ja.at("J").get<std::string>()),
                elem_from_json(ja.at("arg"), ring)));
        } else if (kind == "wedge") {
            w.append(WordAtom::wedge(ja.at("i").get<int>(),
                                     ja.at("j").get<int>(),
                                     elem_from_json(ja.at("arg"), ring)));
        } else {
            throw std::invalid_argument("unknown atom kind: " + kind);
        }
    }
    return w;
}

Json ideal_to_json(const Ideal& ideal) {
    Json j;
    j["ring"] = ring_to_json(ideal.ring);
    Json gens = Json::array();
    for (const auto& g : ideal.generators) gens.push_back(elem_to_json(g));
    j["generators"] = std::move(gens);
    if (ideal.normal_form)
        j["normal_form"] = elem_to_json(*ideal.normal_form);
    return j;
}

Json derivation_to_json(const Derivation& d) {
    Json j;
    j["n"] = d.ctx->n();
    j["m"] = d.ctx->m();
    j["ring"] = ring_to_json(d.ring);
    Json steps = Json::array();
    for (const auto& s : d.steps) {
        Json js;
        switch (s.kind) {
            case StepKind::Given:
                js["kind"] = "given";
                js["I"] = s.given.I.str();
                js["J"] = s.given.J.str();
                js["arg"] = elem_to_json(s.given.arg);
                js["aux"] = s.aux;
                break;
            case StepKind::ExtGen:
                js["kind"] = "ext-gen";
                js["i"] = s.i;
                js["j"] = s.j;
                js["arg"] = elem_to_json(s.gen_arg);
                break;
            case StepKind::Commute:
                js["kind"] = "commute";
                js["a"] = s.a;
                js["b"] = s.b;
                break;
            case StepKind::Product:
                js["kind"] = "product";
                js["a"] = s.a;
                js["b"] = s.b;
                break;
            case StepKind::Inverse:
                js["kind"] = "inverse";
                js["a"] = s.a;
                break;
            case StepKind::ScaleByHalf:
                js["kind"] = "scale-by-half";
                js["a"] = s.a;
                break;
        }
        if (s.claim) js["claim"] = ext_letter_to_json(*s.claim);
        if (!s.note.empty()) js["note"] = s.note;
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    j["conclusion"] = ext_letter_to_json(d.conclusion);
    return j;
}

Json weight_poly_to_json(const WeightPoly& p) {
    Json j;
    j["n"] = p.ctx->n();
    j["m"] = p.ctx->m();
    j["ring"] = ring_to_json(p.ring);
    j["alternating"] = p.alternating;
    Json terms = Json::array();
    for (const auto& [mono, c] : p.terms) {
        Json t;
        Json vars = Json::array();
        for (std::size_t v = 0; v < mono.size(); ++v) {
            if (!mono[v]) continue;
            vars.push_back(Json::array(
                {p.ctx->unrank(v + 1).str(), static_cast<int>(mono[v])}));
        }
        t["monomial"] = std::move(vars);
        t["coeff"] = elem_to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json quadric_system_to_json(const QuadricSystem& sys) {
    Json j;
    switch (sys.provenance) {
        case QuadricSystem::Provenance::Form: j["provenance"] = "form"; break;
        case QuadricSystem::Provenance::PartitionIdeal:
            j["provenance"] = "partition-ideal";
            break;
        case QuadricSystem::Provenance::PlueckerSym:
            j["provenance"] = "pluecker-sym";
            break;
        case QuadricSystem::Provenance::PlueckerAlt:
            j["provenance"] = "pluecker-alt";
            break;
    }
    j["degree"] = sys.degree;
    j["alternating"] = sys.alternating;
    Json gens = Json::array();
    for (const auto& g : sys.generators)
        gens.push_back(weight_poly_to_json(g));
    j["generators"] = std::move(gens);
    return j;
}

Json zfactorization_to_json(const ZFactorization& f) {
    Json pairs = Json::array();
    for (const auto& p : f.pairs) {
        Json jp;
        jp["conjugator"] = ext_word_to_json(p.conjugator);
        jp["base"] = ext_letter_to_json(p.base);
        pairs.push_back(std::move(jp));
    }
    Json j;
    j["pairs"] = std::move(pairs);
    return j;
}

Json stabilizer_report_to_json(const StabilizerReport& rep) {
    Json j;
    j["member"] = rep.member;
    if (rep.multiplier) j["multiplier"] = elem_to_json(*rep.multiplier);
    if (rep.failing_generator)
        j["failing_generator"] = *rep.failing_generator;
    return j;
}

std::vector<LevelGenerator> level_generators_from_json(const Json& j,
                                                       const RingPtr& ring) {
    std::vector<LevelGenerator> out;
    for (const auto& e : j) {
        ExtLetter l = ext_letter_from_json(e, ring);
        out.push_back(LevelGenerator{l.I, l.J, l.arg});
    }
    return out;
}

}  // namespace extpow
