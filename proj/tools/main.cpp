#include "fpalg/parse.hpp"
#include "fpalg/presentation_file.hpp"
#include "fpalg/print.hpp"
#include "fpalg/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using fpalg::OrderedJson;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string format = "text";
    std::string algebra;
    std::string expr;
    std::string name;
    std::string file;
    std::string pair;
    unsigned dim = 0;
    unsigned max_degree = 8;
};

bool structured(const Options& opt) { return opt.format == "structured"; }

void emit(const OrderedJson& payload) { std::cout << payload.dump(2) << "\n"; }

OrderedJson envelope(const std::string& command) {
    return OrderedJson{{"tool", "fpalg"}, {"command", command}};
}

const fpalg::Presentation& algebra_or_fail(const std::string& name) {
    auto which = fpalg::builtin_from_name(name);
    if (!which)
        throw fpalg::Error("unknown algebra '" + name +
                           "'; built-ins: sl2, so3, acsa, sl2_z2, acsa_z2, racah");
    return fpalg::builtin(*which);
}

const fpalg::RewriteSystem& system_or_fail(const fpalg::Presentation& pres) {
    if (!pres.system)
        throw fpalg::Error("algebra '" + pres.name +
                           "' carries no rewrite system");
    return *pres.system;
}

int run_normalize(const Options& opt) {
    const auto& pres = algebra_or_fail(opt.algebra);
    const auto& system = system_or_fail(pres);
    fpalg::Poly input = fpalg::parse_expr(opt.expr, pres.alphabet);
    fpalg::Poly normal = system.normalize(input);
    if (structured(opt)) {
        OrderedJson out = envelope("normalize");
        out["algebra"] = pres.name;
        out["input"] = opt.expr;
        out["normal_form"] = fpalg::to_string(normal, pres.alphabet);
        emit(out);
    } else {
        std::cout << fpalg::to_string(normal, pres.alphabet) << "\n";
    }
    return kExitPass;
}

int run_confluence(const Options& opt) {
    const auto& pres = algebra_or_fail(opt.algebra);
    const auto& system = system_or_fail(pres);
    fpalg::ConfluenceReport report = system.check_confluence();
    if (structured(opt)) {
        OrderedJson out = envelope("confluence");
        out["algebra"] = pres.name;
        out.update(fpalg::render_json(report, pres.alphabet));
        emit(out);
    } else {
        std::cout << fpalg::render_text(report, pres.alphabet);
    }
    return report.confluent ? kExitPass : kExitFail;
}

bool is_racah_source(const fpalg::Hom& hom) {
    return hom.source.alphabet == fpalg::builtin(fpalg::Builtin::Racah).alphabet;
}

const fpalg::Hom& hom_or_fail(const std::string& name) {
    auto which = fpalg::builtin_hom_from_name(name);
    if (!which) {
        std::string known;
        for (const auto& n : fpalg::builtin_hom_names())
            known += (known.empty() ? "" : ", ") + n;
        throw fpalg::Error("unknown homomorphism '" + name + "'; built-ins: " + known);
    }
    return fpalg::builtin_hom(*which);
}

int emit_hom_reports(const Options& opt, const std::string& command,
                     const std::vector<fpalg::Report>& reports) {
    bool pass = true;
    for (const auto& report : reports) pass = pass && report.pass;
    if (structured(opt)) {
        OrderedJson out = envelope(command);
        out["verdict"] = pass ? "pass" : "fail";
        OrderedJson list = OrderedJson::array();
        for (const auto& report : reports)
            list.push_back(fpalg::render_json(report));
        out["reports"] = std::move(list);
        emit(out);
    } else {
        for (const auto& report : reports)
            std::cout << fpalg::render_text(report);
    }
    return pass ? kExitPass : kExitFail;
}

int run_verify_hom(const Options& opt) {
    if (opt.name.empty() == opt.file.empty())
        throw fpalg::Error("verify-hom needs exactly one of --name or --file");
    std::vector<fpalg::Report> reports;
    if (!opt.name.empty()) {
        const fpalg::Hom& hom = hom_or_fail(opt.name);
        reports.push_back(is_racah_source(hom) ? fpalg::verify_racah_hom(hom)
                                               : fpalg::verify_hom(hom));
    } else {
        fpalg::PresentationFile file = fpalg::load_presentation_file(opt.file);
        if (file.homs.empty())
            throw fpalg::Error("'" + opt.file + "' declares no homomorphism blocks");
        for (const auto& hom : file.homs)
            reports.push_back(fpalg::verify_hom(hom));
    }
    return emit_hom_reports(opt, "verify-hom", reports);
}

int run_verify_racah(const Options& opt) {
    const fpalg::Hom& hom = hom_or_fail(opt.name);
    if (!is_racah_source(hom))
        throw fpalg::Error("'" + opt.name + "' is not a hom out of the racah "
                           "presentation");
    return emit_hom_reports(opt, "verify-racah", {fpalg::verify_racah_hom(hom)});
}

int run_verify_inverse(const Options& opt) {
    std::size_t comma = opt.pair.find(',');
    if (comma == std::string::npos)
        throw fpalg::Error("--pair expects '<hom>,<hom>'");
    const fpalg::Hom& h1 = hom_or_fail(opt.pair.substr(0, comma));
    const fpalg::Hom& h2 = hom_or_fail(opt.pair.substr(comma + 1));
    return emit_hom_reports(opt, "verify-inverse",
                            {fpalg::verify_mutually_inverse(h1, h2)});
}

int run_verify_diagram(const Options& opt) {
    using fpalg::BuiltinHom;
    std::vector<fpalg::Hom> top{fpalg::builtin_hom(BuiltinHom::RacahToSl2),
                                fpalg::builtin_hom(BuiltinHom::InclSl2InSl2Z2),
                                fpalg::builtin_hom(BuiltinHom::Sl2Z2ToAcsaZ2)};
    std::vector<fpalg::Hom> bottom{fpalg::builtin_hom(BuiltinHom::RacahToAcsa),
                                   fpalg::builtin_hom(BuiltinHom::InclAcsaInAcsaZ2)};
    fpalg::Report into_acsa = fpalg::verify_diagram(top, bottom);

    std::vector<fpalg::Hom> top2{fpalg::builtin_hom(BuiltinHom::RacahToSl2),
                                 fpalg::builtin_hom(BuiltinHom::InclSl2InSl2Z2)};
    std::vector<fpalg::Hom> bottom2{
        fpalg::builtin_hom(BuiltinHom::RacahToAcsa),
        fpalg::builtin_hom(BuiltinHom::InclAcsaInAcsaZ2),
        fpalg::builtin_hom(BuiltinHom::AcsaZ2ToSl2Z2)};
    fpalg::Report into_sl2 = fpalg::verify_diagram(top2, bottom2);
    return emit_hom_reports(opt, "verify-diagram", {into_acsa, into_sl2});
}

int run_rep_check(const Options& opt) {
    const auto& pres = algebra_or_fail(opt.algebra);
    fpalg::RepReport report = [&] {
        switch (*fpalg::builtin_from_name(opt.algebra)) {
            case fpalg::Builtin::Sl2:
                return fpalg::verify_rep(*pres.system, fpalg::sl2_irrep(opt.dim));
            case fpalg::Builtin::So3:
                return fpalg::verify_rep(
                    *pres.system, fpalg::induced_rep(fpalg::InducedRep::So3, opt.dim));
            case fpalg::Builtin::Acsa:
                return fpalg::verify_rep(
                    *pres.system, fpalg::induced_rep(fpalg::InducedRep::Acsa, opt.dim));
            case fpalg::Builtin::Sl2Z2:
                return fpalg::verify_rep(
                    *pres.system,
                    fpalg::induced_rep(fpalg::InducedRep::Sl2Z2, opt.dim));
            case fpalg::Builtin::AcsaZ2:
                return fpalg::verify_rep(
                    *pres.system,
                    fpalg::induced_rep(fpalg::InducedRep::AcsaZ2, opt.dim));
            case fpalg::Builtin::Racah:
                return fpalg::verify_racah_rep(
                    fpalg::induced_rep(fpalg::InducedRep::RacahImages, opt.dim));
        }
        throw fpalg::Error("unknown algebra");
    }();
    if (structured(opt)) {
        OrderedJson out = envelope("rep-check");
        out["algebra"] = pres.name;
        out["n"] = opt.dim;
        out.update(fpalg::render_json(report));
        emit(out);
    } else {
        std::cout << fpalg::render_text(report);
    }
    return report.pass ? kExitPass : kExitFail;
}

int run_pbw_count(const Options& opt) {
    const auto& pres = algebra_or_fail(opt.algebra);
    const auto& system = system_or_fail(pres);
    if (structured(opt)) {
        OrderedJson out = envelope("pbw-count");
        out["algebra"] = pres.name;
        OrderedJson counts = OrderedJson::array();
        for (unsigned d = 0; d <= opt.max_degree; ++d)
            counts.push_back({{"degree", d},
                              {"count", fpalg::pbw_count(system, d)}});
        out["counts"] = std::move(counts);
        emit(out);
    } else {
        for (unsigned d = 0; d <= opt.max_degree; ++d)
            std::cout << "degree " << d << ": " << fpalg::pbw_count(system, d)
                      << "\n";
    }
    return kExitPass;
}

int run_verify_all(const Options& opt) {
    std::vector<fpalg::CriterionResult> results = fpalg::run_acceptance_suite();
    bool pass = true;
    for (const auto& r : results) pass = pass && r.pass;
    if (structured(opt)) {
        OrderedJson out = envelope("verify-all");
        out.update(fpalg::render_json(results));
        emit(out);
    } else {
        std::cout << fpalg::render_text(results);
    }
    return pass ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rewriting-based verifier for finitely presented "
                 "algebras over Q(i)"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format,
                        "output format: text (default) or structured")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    auto* normalize = app.add_subcommand(
        "normalize", "print the normal form of an expression");
    normalize->add_option("--algebra", opt.algebra, "built-in algebra name")
        ->required();
    normalize->add_option("--expr", opt.expr, "expression to normalize")
        ->required();
    add_format(normalize);

    auto* confluence = app.add_subcommand(
        "confluence", "check all critical pairs of an algebra's rewrite system");
    confluence->add_option("--algebra", opt.algebra, "built-in algebra name")
        ->required();
    add_format(confluence);

    auto* verify_hom = app.add_subcommand(
        "verify-hom", "verify that generator images preserve the relations");
    verify_hom->add_option("--name", opt.name, "built-in homomorphism name");
    verify_hom->add_option("--file", opt.file,
                           "presentation file with hom blocks to verify");
    add_format(verify_hom);

    auto* verify_racah = app.add_subcommand(
        "verify-racah",
        "verify a hom out of racah: commutator relations plus alpha, beta, "
        "gamma mapping to zero");
    verify_racah->add_option("--name", opt.name, "built-in homomorphism name")
        ->required();
    add_format(verify_racah);

    auto* verify_inverse = app.add_subcommand(
        "verify-inverse", "verify that two homs are mutually inverse");
    verify_inverse
        ->add_option("--pair", opt.pair, "comma-separated pair of hom names")
        ->required();
    add_format(verify_inverse);

    auto* verify_diagram = app.add_subcommand(
        "verify-diagram",
        "verify the commuting square of realizations in both orientations");
    add_format(verify_diagram);

    auto* rep_check = app.add_subcommand(
        "rep-check", "check the defining relations in an exact matrix "
                     "representation");
    rep_check->add_option("--algebra", opt.algebra, "built-in algebra name")
        ->required();
    rep_check
        ->add_option("--dim", opt.dim,
                     "representation parameter n; matrices have size n + 1")
        ->required();
    add_format(rep_check);

    auto* pbw = app.add_subcommand(
        "pbw-count", "count irreducible words per degree");
    pbw->add_option("--algebra", opt.algebra, "built-in algebra name")->required();
    pbw->add_option("--max-degree", opt.max_degree, "largest degree to report")
        ->required();
    add_format(pbw);

    auto* verify_all = app.add_subcommand(
        "verify-all", "run the complete twelve-part verification suite");
    add_format(verify_all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (normalize->parsed()) return run_normalize(opt);
        if (confluence->parsed()) return run_confluence(opt);
        if (verify_hom->parsed()) return run_verify_hom(opt);
        if (verify_racah->parsed()) return run_verify_racah(opt);
        if (verify_inverse->parsed()) return run_verify_inverse(opt);
        if (verify_diagram->parsed()) return run_verify_diagram(opt);
        if (rep_check->parsed()) return run_rep_check(opt);
        if (pbw->parsed()) return run_pbw_count(opt);
        if (verify_all->parsed()) return run_verify_all(opt);
    } catch (const fpalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "error: no command selected\n";
    return kExitUsage;
}
