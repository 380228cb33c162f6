// orthant: exact irreducibility toolkit for monic polynomials over formal
// power series. Subcommands: parse, polyhedron, initial-form, criterion,
// factor, verify. Exit codes: 0 completed (any verdict), 1 input error,
// 2 internal assertion.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orthant/criterion.hpp"
#include "orthant/json_io.hpp"
#include "orthant/oracle.hpp"
#include "orthant/parser.hpp"

namespace {

using namespace orthant;

struct CommonOpts {
    std::string field = "q";
    std::uint64_t p = 0;
    std::string vars_csv;
    std::string input;
    std::int64_t order = 16;
    std::uint64_t seed = kDefaultSeed;
    std::int64_t degree_bound = 8;
    bool text = false;
    bool json_out = false;
    std::string weights_csv;  // initial-form only
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.erase(item.begin());
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.pop_back();
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string read_input(const CommonOpts& o) {
    if (!o.input.empty()) return o.input;
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    std::string s = ss.str();
    if (s.empty()) throw InputError("NoInput", "no polynomial given (argument or stdin)");
    return s;
}

FieldCtx make_field(const CommonOpts& o) {
    if (o.field == "q" || o.field == "Q" || o.field == "rationals") return FieldCtx::rationals();
    if (o.field == "fp" || o.field == "Fp") {
        if (o.p == 0) throw InputError("BadField", "--field fp requires --p <prime>");
        return FieldCtx::prime_field(o.p);
    }
    throw InputError("BadField", "unknown field '" + o.field + "' (use q or fp)");
}

std::vector<Rat> parse_weights(const std::string& csv, std::size_t n) {
    auto items = split_csv(csv);
    if (items.size() != n)
        throw InputError("BadWeights", "expected " + std::to_string(n) + " weights, got " +
                                           std::to_string(items.size()));
    std::vector<Rat> w;
    w.reserve(items.size());
    for (const auto& it : items) {
        if (it.find('.') != std::string::npos)
            throw InputError("BadWeights", "weights must be exact rationals, not floats: '" + it + "'");
        w.push_back(Rat::parse(it));
    }
    return w;
}

void emit(const json& j, const CommonOpts& o, const std::string& text_form) {
    if (o.text && !o.json_out)
        std::cout << text_form;
    else
        std::cout << j.dump(2) << "\n";
}

json preamble(const std::string& command, const FieldCtx& f,
              const std::vector<std::string>& vars) {
    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;
    j["field"] = to_json(f);
    j["vars"] = vars;
    return j;
}

template <Field K>
int run_typed(const std::string& cmd, const CommonOpts& o, const typename K::Ctx& ctx,
              const FieldCtx& fdesc) {
    auto input = read_input(o);
    auto parsed = parse_poly<K>(input, ctx, split_csv(o.vars_csv), o.order);
    const auto& P = parsed.poly;
    const auto& names = parsed.vars;

    if (cmd == "parse") {
        json j = preamble("parse", fdesc, names);
        j["canonical"] = P.str(names);
        j["degree"] = P.degree();
        j["nvars"] = P.nvars();
        j["order"] = parsed.order;
        emit(j, o, P.str(names) + "\n");
        return 0;
    }

    if (cmd == "polyhedron") {
        auto gens = delta_generators(P);
        auto delta = delta_vertices(gens);
        json j = preamble("polyhedron", fdesc, names);
        j["polyhedron"] = to_json(delta);
        if (auto fw = face_witness(P, delta)) j["face_witness"] = to_json(*fw);
        std::ostringstream t;
        t << "generators:";
        for (const auto& g : delta.generators) t << " " << g.str();
        t << "\nvertices:";
        for (const auto& v : delta.vertices) t << " " << v.point.str();
        t << "\n";
        emit(j, o, t.str());
        return 0;
    }

    if (cmd == "initial-form") {
        if (o.weights_csv.empty())
            throw InputError("BadWeights", "initial-form requires --weights w1,...,wn");
        WeightVector w(parse_weights(o.weights_csv, P.nvars()));
        auto ext = omega_extension(P, w);
        auto in_form = initial_form(P, ext);
        json j = preamble("initial-form", fdesc, names);
        j["omega"] = json::array();
        for (const auto& wv : ext.w) j["omega"].push_back(wv.str());
        j["omega_last"] = ext.w_last->str();
        j["initial_form"] = in_form.str(names);
        emit(j, o, in_form.str(names) + "\nomega_" + std::to_string(P.nvars() + 1) + " = " +
                       ext.w_last->str() + "\n");
        return 0;
    }

    if (cmd == "criterion" || cmd == "factor") {
        CriterionOptions copt{o.order, o.degree_bound, o.seed};
        auto verdict = apply_criterion(P, copt);
        json j = preamble(cmd, fdesc, names);
        j["input"] = P.str(names);
        j["verdict"] = to_json(verdict, names);
        std::ostringstream t;
        t << verdict_kind_name(verdict.kind) << ": " << verdict.reason << "\n";
        if (verdict.certificate) {
            t << "F1 = " << verdict.certificate->f1.str(names) << "\n";
            t << "F2 = " << verdict.certificate->f2.str(names) << "\n";
            t << "verified mod (x)^" << verdict.certificate->order << "\n";
        }
        emit(j, o, t.str());
        return 0;
    }

    if (cmd == "verify") {
        if (P.degree() != 2)
            throw InputError("BadDegree", "verify cross-checks the d = 2 oracle; input has degree " +
                                              std::to_string(P.degree()));
        CriterionOptions copt{o.order, o.degree_bound, o.seed};
        auto verdict = apply_criterion(P, copt);
        auto oracle = factor_d2(P, o.order);
        bool contradiction = (verdict.kind == VerdictKind::Reducible) && !oracle.factors;
        bool factors_match = false;
        if (verdict.kind == VerdictKind::Reducible && oracle.factors) {
            const auto& c = *verdict.certificate;
            const std::int64_t m = std::min(c.order, o.order);
            auto of1 = oracle.factors->first.truncated(m);
            auto of2 = oracle.factors->second.truncated(m);
            auto cf1 = c.f1.truncated(m);
            auto cf2 = c.f2.truncated(m);
            factors_match = (cf1.same_terms(of1) && cf2.same_terms(of2)) ||
                            (cf1.same_terms(of2) && cf2.same_terms(of1));
        }
        json j = preamble("verify", fdesc, names);
        j["verdict"] = to_json(verdict, names);
        json jo;
        jo["factored"] = static_cast<bool>(oracle.factors);
        if (oracle.factors) {
            jo["f1"] = oracle.factors->first.str(names);
            jo["f2"] = oracle.factors->second.str(names);
        } else {
            jo["obstruction"] = oracle.obstruction;
        }
        j["oracle"] = jo;
        j["consistent"] = !contradiction;
        if (verdict.kind == VerdictKind::Reducible && oracle.factors)
            j["factors_match"] = factors_match;
        std::ostringstream t;
        t << "criterion: " << verdict_kind_name(verdict.kind) << "\noracle: "
          << (oracle.factors ? "factored" : "no factorization (" + oracle.obstruction + ")")
          << "\nconsistent: " << (!contradiction ? "yes" : "NO") << "\n";
        emit(j, o, t.str());
        if (contradiction)
            throw InternalError("OracleContradiction",
                                "criterion produced a certificate but the oracle proves "
                                "no degree-2 factorization exists");
        return 0;
    }

    throw InputError("BadCommand", "unknown subcommand " + cmd);
}

int dispatch(const std::string& cmd, const CommonOpts& o) {
    auto fdesc = make_field(o);
    if (fdesc.kind == FieldCtx::Kind::Rationals) return run_typed<Rat>(cmd, o, RatCtx{}, fdesc);
    return run_typed<Fp>(cmd, o, FpCtx{fdesc.p}, fdesc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthant: Newton-polyhedron irreducibility toolkit for monic polynomials "
                 "over formal power series"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string cmd;
    for (const std::string name :
         {"parse", "polyhedron", "initial-form", "criterion", "factor", "verify"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input", o.input, "polynomial expression (stdin when omitted)");
        sub->add_option("--field", o.field, "coefficient field: q (default) or fp");
        sub->add_option("--p", o.p, "prime modulus for --field fp");
        sub->add_option("--vars", o.vars_csv, "x-variable names, comma-separated (inferred when omitted)");
        sub->add_option("--order", o.order, "truncation / certificate order (default 16)");
        sub->add_option("--seed", o.seed, "seed for randomized F_p splitting (default 42)");
        sub->add_option("--degree-bound", o.degree_bound,
                        "rational factorization degree bound (default 8)");
        if (name == std::string("initial-form"))
            sub->add_option("--weights", o.weights_csv, "strictly positive rational weights w1,...,wn");
        sub->add_flag("--text", o.text, "human-readable output");
        sub->add_flag("--json", o.json_out, "JSON output (default)");
        sub->callback([&cmd, name] { cmd = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        return dispatch(cmd, o);
    } catch (const InternalError& e) {
        std::cerr << "internal error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
