#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include "extpow/json_io.hpp"
#include "extpow/verify.hpp"

namespace {

using namespace extpow;

Json read_json_arg(const std::string& arg) {
    if (arg == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return Json::parse(buf.str());
    }
    // Inline JSON or a file path.
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '['))
        return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open " + arg);
    Json j;
    in >> j;
    return j;
}

RingElem parse_elem(const std::string& text, const RingPtr& ring) {
    if (ring->kind() == RingKind::PolyRing && ring->var_index(text) >= 0)
        return RingElem::variable(ring, text);
    if (!text.empty() &&
        (text[0] == '{' || text[0] == '[' || text[0] == '"'))
        return elem_from_json(Json::parse(text), ring);
    return RingElem(ring, mpz_class(text));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct CommonOpts {
    int n = 0, m = 0;
    std::string ring_flag;
};

CtxPtr make_ctx(const CommonOpts& c) {
    return ExteriorContext::make(c.n, c.m);
}

int run_verify(const std::string& suite, std::uint64_t seed, bool pretty) {
    auto names = verify::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw CLI::ValidationError("verify",
                                   "unknown suite '" + suite + "'");
    auto results = verify::run_suite(suite, seed);
    std::string missing;
    bool coverage = true;
    if (suite == "all") coverage = verify::coverage_complete(&missing);

    int failures = 0;
    if (pretty) {
        for (const auto& r : results) {
            std::ostringstream line;
            line << (r.pass ? "PASS " : "FAIL ") << r.id;
            std::cout << line.str() << "  (" << r.detail << ")  ["
                      << r.seconds << "s]\n";
            if (!r.pass) ++failures;
        }
        if (suite == "all")
            std::cout << (coverage ? "PASS" : "FAIL")
                      << " operation coverage"
                      << (coverage ? "" : ": missing " + missing) << "\n";
        std::cout << (failures == 0 && coverage ? "all checks passed"
                                                : "FAILURES PRESENT")
                  << " (seed " << seed << ")\n";
    } else {
        Json out;
        out["suite"] = suite;
        out["seed"] = seed;
        Json checks = Json::array();
        for (const auto& r : results) {
            Json c;
            c["id"] = r.id;
            c["pass"] = r.pass;
            c["detail"] = r.detail;
            checks.push_back(std::move(c));
            if (!r.pass) ++failures;
        }
        out["checks"] = std::move(checks);
        if (suite == "all") out["coverage_complete"] = coverage;
        out["failures"] = failures + (coverage ? 0 : 1);
        emit(out);
    }
    return failures == 0 && coverage ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "extpow: exact exterior powers of matrix groups over commutative "
        "rings"};
    app.require_subcommand(1);

    CommonOpts c;
    std::map<const CLI::App*, std::string> ring_defaults;
    std::string matrix_arg, gens_arg, system_name = "pluecker";
    std::string I_str, J_str, K_str, L_str;
    std::string xi_str = "xi", zeta_str, arg_str;
    std::string mod_str, suite = "all";
    int ti = 0, tj = 0, kk = 0;
    bool pretty = false, evaluate = false, alternating = false;
    std::uint64_t seed = 42;

    auto add_nm = [&](CLI::App* sub, bool need_ring,
                      const char* default_ring) {
        sub->add_option("--n", c.n, "ambient degree n")->required();
        sub->add_option("--m", c.m, "exterior power m")->required();
        auto* opt = sub->add_option("--ring", c.ring_flag,
                                    "ring flag: z | zmod:k | fp:p | "
                                    "poly[:VARS][@base]");
        if (need_ring)
            opt->required();
        else
            ring_defaults[sub] = default_ring;
        return opt;
    };
    auto ring_for = [&](const CLI::App* sub) {
        std::string flag = c.ring_flag;
        if (flag.empty()) {
            auto it = ring_defaults.find(sub);
            flag = it == ring_defaults.end() ? "z" : it->second;
        }
        return parse_ring_flag(flag);
    };

    auto* power = app.add_subcommand("power",
                                     "exterior power of a square matrix");
    add_nm(power, true, "");
    power->add_option("--matrix", matrix_arg, "matrix JSON (path, inline, -)")
        ->required();

    auto* transvection = app.add_subcommand(
        "transvection", "decomposition of wedge^m t_{i,j}(arg)");
    add_nm(transvection, false, "poly:xi");
    transvection->add_option("--i", ti)->required();
    transvection->add_option("--j", tj)->required();
    transvection->add_option("--arg", arg_str, "argument (default xi)");
    transvection->add_flag("--evaluate", evaluate,
                           "also emit the evaluated matrix");

    auto* commutator = app.add_subcommand(
        "commutator",
        "classified commutator [t_{I,J}(xi), wedge^m t_{i,j}(zeta)]");
    add_nm(commutator, false, "poly:xi,zeta");
    commutator->add_option("--I", I_str)->required();
    commutator->add_option("--J", J_str)->required();
    commutator->add_option("--i", ti)->required();
    commutator->add_option("--j", tj)->required();
    commutator->add_option("--xi", xi_str, "argument of t_{I,J}");
    commutator->add_option("--zeta", zeta_str, "argument of the wedge gen");

    auto* level = app.add_subcommand("level",
                                     "level ideal of cited transvections");
    add_nm(level, true, "");
    level->add_option("--gens", gens_arg,
                      "JSON list of {I, J, arg} (path, inline, -)")
        ->required();

    auto* witness = app.add_subcommand("witness", "closure-move derivations");
    witness->require_subcommand(1);
    auto* weq = witness->add_subcommand("equalize",
                                        "same-height position change");
    add_nm(weq, false, "poly:xi");
    weq->add_option("--I", I_str)->required();
    weq->add_option("--J", J_str)->required();
    weq->add_option("--K", K_str)->required();
    weq->add_option("--L", L_str)->required();
    weq->add_option("--xi", xi_str);
    weq->add_flag("--pretty", pretty, "print a transcript");
    auto* wlo = witness->add_subcommand("lower", "height-lowering derivation");
    add_nm(wlo, false, "poly:xi");
    wlo->add_option("--I", I_str)->required();
    wlo->add_option("--J", J_str)->required();
    wlo->add_option("--K", K_str)->required();
    wlo->add_option("--L", L_str)->required();
    wlo->add_option("--xi", xi_str);
    wlo->add_flag("--pretty", pretty);
    auto* wra = witness->add_subcommand("raise", "height-raising derivation");
    add_nm(wra, false, "poly:xi,zeta,zeta1");
    wra->add_option("--k", kk, "source height")->required();
    wra->add_option("--xi", xi_str);
    wra->add_flag("--pretty", pretty);
    auto* wzf = witness->add_subcommand(
        "zfactor", "factor z_{I,J}(xi,zeta) into conjugated level letters");
    add_nm(wzf, false, "poly:xi,zeta");
    wzf->add_option("--I", I_str)->required();
    wzf->add_option("--J", J_str)->required();
    wzf->add_option("--xi", xi_str);
    wzf->add_option("--zeta", zeta_str);
    auto* wpe = witness->add_subcommand(
        "perfect", "express a generator as a single commutator");
    add_nm(wpe, false, "poly:xi,zeta");
    wpe->add_option("--I", I_str);
    wpe->add_option("--J", J_str);
    wpe->add_option("--i", ti);
    wpe->add_option("--j", tj);
    wpe->add_option("--xi", xi_str);
    wpe->add_option("--zeta", zeta_str);

    auto* form = app.add_subcommand("form", "the invariant form f_{n,m}");
    add_nm(form, false, "z");

    auto* pluecker = app.add_subcommand("pluecker",
                                        "generalized Pluecker quadrics");
    add_nm(pluecker, false, "z");
    pluecker->add_flag("--alternating", alternating,
                       "exterior-square flavor");

    auto* stab = app.add_subcommand("stab", "stabilizer membership");
    add_nm(stab, true, "");
    stab->add_option("--matrix", matrix_arg, "N x N matrix JSON")->required();
    stab->add_option("--system", system_name,
                     "form | pluecker | pluecker-alt | partition");

    auto* congr = app.add_subcommand("congr", "congruence membership mod A");
    add_nm(congr, true, "");
    congr->add_option("--matrix", matrix_arg, "N x N matrix JSON")
        ->required();
    congr->add_option("--mod", mod_str, "normal form generator of A")
        ->required();

    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    verify_cmd->add_option("--suite", suite,
                           "functorial | formula-m | commutators | level | "
                           "stabilizer | all");
    verify_cmd->add_option("--seed", seed, "random seed (default 42)");
    verify_cmd->add_flag("--pretty", pretty, "aligned text output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*power) {
            RingPtr ring = ring_for(power);
            CtxPtr ctx = make_ctx(c);
            Matrix a = matrix_from_json(read_json_arg(matrix_arg), ring);
            emit(matrix_to_json(exterior_power(ctx, a)));
            return 0;
        }
        if (*transvection) {
            RingPtr ring = ring_for(transvection);
            CtxPtr ctx = make_ctx(c);
            RingElem arg = arg_str.empty()
                               ? parse_elem("xi", ring)
                               : parse_elem(arg_str, ring);
            ExtWord w = transvection_decomposition(ctx, ti, tj, arg);
            Json out;
            out["word"] = ext_word_to_json(w);
            if (evaluate)
                out["matrix"] = matrix_to_json(evaluate_word(ctx, w, ring));
            emit(out);
            return 0;
        }
        if (*commutator) {
            RingPtr ring = ring_for(commutator);
            CtxPtr ctx = make_ctx(c);
            RingElem xi = parse_elem(xi_str, ring);
            RingElem zeta = zeta_str.empty() ? parse_elem("zeta", ring)
                                             : parse_elem(zeta_str, ring);
            ExtLetter t{WeightIndex::parse(I_str), WeightIndex::parse(J_str),
                        xi};
            CommResult r = classify_commutator(ctx, t, ti, tj, zeta);
            Json out;
            switch (r.kind) {
                case CommCase::Identity: out["case"] = "identity"; break;
                case CommCase::Single: out["case"] = "single"; break;
                case CommCase::Triple: out["case"] = "triple"; break;
                case CommCase::Irreducible:
                    out["case"] = "irreducible";
                    break;
            }
            Json fs = Json::array();
            for (const auto& f : r.factors)
                fs.push_back(ext_letter_to_json(f));
            out["factors"] = std::move(fs);
            out["word"] = ext_word_to_json(r.word);
            if (r.kind == CommCase::Irreducible)
                out["matrix"] =
                    matrix_to_json(evaluate_word(ctx, r.word, ring));
            emit(out);
            return 0;
        }
        if (*level) {
            RingPtr ring = ring_for(level);
            CtxPtr ctx = make_ctx(c);
            auto gens =
                level_generators_from_json(read_json_arg(gens_arg), ring);
            emit(ideal_to_json(compute_level(ctx, ring, gens)));
            return 0;
        }
        if (*witness) {
            const CLI::App* active = *weq    ? static_cast<CLI::App*>(weq)
                                     : *wlo  ? wlo
                                     : *wra  ? wra
                                     : *wzf  ? wzf
                                              : wpe;
            RingPtr ring = ring_for(active);
            CtxPtr ctx = make_ctx(c);
            if (*weq || *wlo) {
                RingElem xi = parse_elem(xi_str, ring);
                Derivation d =
                    *weq ? equalize_witness(ctx, WeightIndex::parse(I_str),
                                            WeightIndex::parse(J_str),
                                            WeightIndex::parse(K_str),
                                            WeightIndex::parse(L_str), xi)
                         : lower_height_witness(
                               ctx, WeightIndex::parse(I_str),
                               WeightIndex::parse(J_str),
                               WeightIndex::parse(K_str),
                               WeightIndex::parse(L_str), xi);
                if (pretty)
                    std::cout << d.transcript();
                else
                    emit(derivation_to_json(d));
                return 0;
            }
            if (*wra) {
                RingElem xi = parse_elem(xi_str, ring);
                RingElem zeta = parse_elem("zeta", ring);
                RingElem zeta1 = parse_elem("zeta1", ring);
                Derivation d = raise_height_witness(ctx, kk, xi, zeta, zeta1);
                if (pretty)
                    std::cout << d.transcript();
                else
                    emit(derivation_to_json(d));
                return 0;
            }
            if (*wzf) {
                RelativeGenerator z{WeightIndex::parse(I_str),
                                    WeightIndex::parse(J_str),
                                    parse_elem(xi_str, ring),
                                    zeta_str.empty()
                                        ? parse_elem("zeta", ring)
                                        : parse_elem(zeta_str, ring)};
                emit(zfactorization_to_json(
                    relative_generator_factorization(ctx, z)));
                return 0;
            }
            if (*wpe) {
                PerfectnessWitness w =
                    !I_str.empty()
                        ? perfectness_witness(
                              ctx,
                              ExtLetter{WeightIndex::parse(I_str),
                                        WeightIndex::parse(J_str),
                                        parse_elem(xi_str, ring)})
                        : perfectness_witness(
                              ctx, ti, tj,
                              zeta_str.empty()
                                  ? parse_elem("zeta", ring)
                                  : parse_elem(zeta_str, ring));
                Json out;
                ExtWord wx, wy;
                wx.append(w.x);
                wy.append(w.y);
                out["x"] = ext_word_to_json(wx);
                out["y"] = ext_word_to_json(wy);
                out["word"] = ext_word_to_json(w.word());
                emit(out);
                return 0;
            }
        }
        if (*form) {
            RingPtr ring = ring_for(form);
            emit(weight_poly_to_json(build_form(make_ctx(c), ring)));
            return 0;
        }
        if (*pluecker) {
            RingPtr ring = ring_for(pluecker);
            emit(quadric_system_to_json(
                build_pluecker(make_ctx(c), ring, alternating)));
            return 0;
        }
        if (*stab) {
            RingPtr ring = ring_for(stab);
            CtxPtr ctx = make_ctx(c);
            Matrix g = matrix_from_json(read_json_arg(matrix_arg), ring);
            StabilizerReport r;
            if (system_name == "form") {
                r = stabilizer_check(build_form(ctx, ring), g);
            } else if (system_name == "pluecker") {
                r = stabilizer_check(build_pluecker(ctx, ring, false), g);
            } else if (system_name == "pluecker-alt") {
                r = stabilizer_check(build_pluecker(ctx, ring, true), g);
            } else if (system_name == "partition") {
                r = stabilizer_check(build_partition_ideal(ctx, ring), g);
            } else {
                throw std::invalid_argument("unknown system: " + system_name);
            }
            emit(stabilizer_report_to_json(r));
            return 0;
        }
        if (*congr) {
            RingPtr ring = ring_for(congr);
            CtxPtr ctx = make_ctx(c);
            Matrix g = matrix_from_json(read_json_arg(matrix_arg), ring);
            Ideal A = ideal_generate(ring, {parse_elem(mod_str, ring)});
            Json out;
            out["member"] = congruence_membership(ctx, g, A);
            out["system"] = canonical_system_name(c.n, c.m);
            emit(out);
            return 0;
        }
        if (*verify_cmd) return run_verify(suite, seed, pretty);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
