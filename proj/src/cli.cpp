#include "sphkl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "sphkl/checks.hpp"
#include "sphkl/session.hpp"

namespace sphkl {

namespace {

struct Options {
    std::string datum;
    std::string specialize;
    std::string format = "human";
    bool strict = false;
    std::string lambda, mu;
    std::string u, w;
    int max_length = 8;
};

bool machine(const Options& o) { return o.format == "machine"; }

std::unique_ptr<Session> open_session(const Options& o)
{
    std::optional<std::map<std::string, int>> spec;
    if (!o.specialize.empty())
        spec = parse_specialization(o.specialize);
    return std::make_unique<Session>(load_datum(o.datum), spec);
}

std::string pass(bool b) { return b ? "PASS" : "FAIL"; }

std::string node_list(const AffineWeyl& W, const std::vector<int>& nodes)
{
    std::string s;
    for (int a : nodes)
        s += (s.empty() ? "" : " ") + W.node_name(a);
    return s.empty() ? "-" : s;
}

int cmd_validate(const Options& o, std::ostream& out)
{
    auto S = open_session(o);
    const auto& W = S->weyl();
    const auto& P = S->params();
    auto classes = W.parameter_classes();
    std::vector<int> special;
    for (int i = 0; i < W.num_finite_nodes(); ++i)
        if (P.tilde().special[i])
            special.push_back(i);
    std::vector<Monomial> gens = P.cone().generators();
    auto phi = phi_maps(gens, P.specialized() || P.equal_standard_parameters());
    std::string gen_text;
    for (const auto& g : gens)
        gen_text += (gen_text.empty() ? "" : ", ") + P.format(LaurentPoly(g));

    if (machine(o)) {
        out << "type " << S->datum().describe() << "\n";
        out << "rank " << W.rank() << "\n";
        for (int a = 0; a < W.num_nodes(); ++a)
            out << "node " << W.node_name(a) << " class " << classes[a] << " label " << P.node_labels()[a]
                << " parameter " << P.format(LaurentPoly(P.node(a))) << "\n";
        out << "special " << node_list(W, special) << "\n";
        out << "positive_cone " << gen_text << "\n";
        out << "phi_injective " << (phi.injective ? "true" : "false") << "\n";
        return kOk;
    }
    out << "root datum:      " << S->datum().describe() << " in rank " << W.rank() << "\n";
    out << "affine nodes:\n";
    for (int a = 0; a < W.num_nodes(); ++a)
        out << "  " << std::left << std::setw(4) << W.node_name(a) << " class " << classes[a] << "  v^s = "
            << P.format(LaurentPoly(P.node(a))) << "\n";
    out << "special roots:   " << node_list(W, special) << "\n";
    out << "L++ generators:  " << gen_text << "\n";
    out << "phi injective:   " << (phi.injective ? "yes" : "no") << " (" << phi.detail << ")\n";
    return kOk;
}

int cmd_length(const Options& o, std::ostream& out)
{
    auto S = open_session(o);
    out << S->weyl().length(S->weyl().parse(o.w)) << "\n";
    return kOk;
}

int cmd_word(const Options& o, std::ostream& out)
{
    auto S = open_session(o);
    const auto& W = S->weyl();
    ReducedWord rw = W.reduced_word(W.parse(o.w));
    std::string letters;
    for (int a : rw.letters)
        letters += (letters.empty() ? "" : " ") + W.node_name(a);
    if (letters.empty())
        letters = "-";
    // omega is the length-zero factor on the left.
    if (machine(o))
        out << "omega " << W.to_string(rw.omega) << "\nletters " << letters << "\n";
    else
        out << "omega = " << W.to_string(rw.omega) << ", word = " << letters << "\n";
    return kOk;
}

int cmd_leq(const Options& o, std::ostream& out)
{
    auto S = open_session(o);
    const auto& W = S->weyl();
    out << (W.bruhat_leq(W.parse(o.u), W.parse(o.w)) ? "true" : "false") << "\n";
    return kOk;
}

int cmd_schur(const Options& o, std::ostream& out)
{
    auto S = open_session(o);
    Coweight lam = S->parse_coweight(o.lambda);
    if (!S->datum().is_dominant(lam))
        throw std::invalid_argument("lambda " + vec_to_string(lam) + " is not dominant");
    out << "s" << vec_to_string(lam) << " = " << format_exp(S->rep().schur(lam), S->params().variable_names())
        << "\n";
    return kOk;
}

int cmd_hl(const Options& o, std::ostream& out)
{
    auto S = open_session(o);
    Coweight lam = S->parse_coweight(o.lambda);
    if (!S->datum().is_dominant(lam))
        throw std::invalid_argument("lambda " + vec_to_string(lam) + " is not dominant");
    const auto& R = S->rep();
    out << "P" << vec_to_string(lam) << " = " << R.format_expansion(R.expand_in_schur(R.hall_littlewood(lam)), "s")
        << "\n";
    return kOk;
}

int cmd_kl(const Options& o, std::ostream& out)
{
    auto S = open_session(o);
    Coweight lam = S->parse_coweight(o.lambda);
    if (!S->datum().is_dominant(lam))
        throw std::invalid_argument("lambda " + vec_to_string(lam) + " is not dominant");
    const auto& W = S->weyl();
    const auto& P = S->params();
    KLCertificate cert = S->spherical().kl_spherical(lam);

    // Rows in descending length, the leading term first.
    std::vector<std::pair<AffineElement, LaurentPoly>> rows(cert.element.terms().begin(), cert.element.terms().end());
    std::sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) {
        int lx = W.length(x.first), ly = W.length(y.first);
        if (lx != ly)
            return lx > ly;
        return W.to_string(x.first) < W.to_string(y.first);
    });
    auto membership = [&](const AffineElement& w, const LaurentPoly& c) {
        return w == cert.n_lambda ? std::string("leading") : to_string(P.cone().contains(c));
    };

    if (machine(o)) {
        out << "lambda " << vec_to_string(lam) << "\n";
        out << "n_lambda " << W.to_string(cert.n_lambda) << "\n";
        for (const auto& [w, c] : rows)
            out << "term " << W.to_string(w) << " | " << P.format(c) << " | " << membership(w, c) << "\n";
        out << "selfdual " << pass(cert.selfdual) << "\n";
        out << "leading " << pass(cert.leading_ok) << "\n";
        out << "positivity " << pass(cert.positivity_ok) << "\n";
        for (const auto& t : cert.offending)
            out << "offending " << W.to_string(t.w) << " | " << P.format(t.coeff) << " | " << to_string(t.membership)
                << "\n";
        out << "status " << pass(cert.ok()) << "\n";
    } else {
        std::size_t wcol = 8, ccol = 11;
        for (const auto& [w, c] : rows) {
            wcol = std::max(wcol, W.to_string(w).size());
            ccol = std::max(ccol, P.format(c).size());
        }
        out << "KL element for lambda = " << vec_to_string(lam) << ", n_lambda = " << W.to_string(cert.n_lambda)
            << " (length " << W.length(cert.n_lambda) << ")\n";
        out << "  " << std::left << std::setw(static_cast<int>(wcol)) << "w" << "  " << std::setw(static_cast<int>(ccol))
            << "coefficient" << "  in L++\n";
        for (const auto& [w, c] : rows)
            out << "  " << std::setw(static_cast<int>(wcol)) << W.to_string(w) << "  " << std::setw(static_cast<int>(ccol))
                << P.format(c) << "  " << membership(w, c) << "\n";
        out << "self-dual:       " << pass(cert.selfdual) << "\n";
        out << "leading coeff 1: " << pass(cert.leading_ok) << "\n";
        out << "positivity:      " << pass(cert.positivity_ok) << "\n";
        if (!cert.offending.empty()) {
            out << "offending terms:\n";
            for (const auto& t : cert.offending)
                out << "  " << W.to_string(t.w) << "  " << P.format(t.coeff) << "  (" << to_string(t.membership) << ")\n";
        }
    }
    return cert.ok() ? kOk : kCheckFailed;
}

int cmd_tensor(const Options& o, std::ostream& out)
{
    auto S = open_session(o);
    Coweight lam = S->parse_coweight(o.lambda), mu = S->parse_coweight(o.mu);
    for (const auto& x : {lam, mu})
        if (!S->datum().is_dominant(x))
            throw std::invalid_argument(vec_to_string(x) + " is not dominant");
    auto m = S->spherical().tensor_multiplicities(lam, mu);
    std::string line;
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        line += (line.empty() ? "" : "  ") + vec_to_string(it->first) + ":" + std::to_string(it->second);
    out << line << "\n";
    return kOk;
}

int cmd_wtmult(const Options& o, std::ostream& out)
{
    auto S = open_session(o);
    Coweight lam = S->parse_coweight(o.lambda), mu = S->parse_coweight(o.mu);
    for (const auto& x : {lam, mu})
        if (!S->datum().is_dominant(x))
            throw std::invalid_argument(vec_to_string(x) + " is not dominant");
    out << S->spherical().weight_multiplicity(lam, mu) << "\n";
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    auto S = open_session(o);
    auto results = checks::run_all(*S, o.max_length);
    bool ok = true;
    std::size_t width = 5;
    for (const auto& r : results)
        width = std::max(width, r.name.size());
    if (!machine(o))
        out << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::right << std::setw(6)
            << "cases" << "  " << std::setw(6) << "failed" << "  result\n";
    for (const auto& r : results) {
        // Zero cases means the check does not apply to these parameters.
        std::string verdict = r.cases == 0 ? "SKIP" : pass(r.passed());
        ok = ok && (r.cases == 0 || r.passed());
        if (machine(o)) {
            out << "check " << r.name << " | " << r.cases << " | " << r.failures << " | " << verdict << "\n";
        } else {
            out << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::right << std::setw(6)
                << r.cases << "  " << std::setw(6) << r.failures << "  " << verdict << "\n";
        }
        for (const auto& n : r.notes)
            out << "    " << n << "\n";
    }
    return ok ? kOk : kCheckFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Spherical Kazhdan-Lusztig elements of affine Hecke algebras with unequal parameters", "sphkl"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-d,--datum", o.datum, "root datum file, or the name of a bundled one (gl2, sp4, ...)")
            ->required();
        sub->add_option("--specialize", o.specialize, "specialize the parameters, e.g. v=1,v0=2");
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"human", "machine"}));
        sub->add_flag("--strict", o.strict, "exit nonzero when a theorem violation is reported");
    };
    std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers;
    auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
        CLI::App* s = app.add_subcommand(name, help);
        add_common(s);
        handlers[s] = fn;
        return s;
    };

    sub("validate", "check the datum and report parameter classes and special roots", cmd_validate);
    sub("length", "length of an element such as t[1,0]*s1", cmd_length)->add_option("element", o.w)->required();
    sub("word", "a reduced word", cmd_word)->add_option("element", o.w)->required();
    auto* leq = sub("leq", "Bruhat comparison u <= w", cmd_leq);
    leq->add_option("u", o.u)->required();
    leq->add_option("w", o.w)->required();
    sub("schur", "the character s_lambda", cmd_schur)->add_option("-l,--lambda", o.lambda)->required();
    sub("hl", "Hall-Littlewood polynomial in the s basis", cmd_hl)->add_option("-l,--lambda", o.lambda)->required();
    sub("kl", "KL element Psi(s_lambda) with its certificate", cmd_kl)->add_option("-l,--lambda", o.lambda)->required();
    for (auto [name, help, fn] : {std::tuple{"tensor", "multiplicities of s_nu in s_lambda s_mu", cmd_tensor},
                                  std::tuple{"wtmult", "dimension of the mu weight space of L_lambda", cmd_wtmult}}) {
        auto* s = sub(name, help, fn);
        s->add_option("-l,--lambda", o.lambda)->required();
        s->add_option("-m,--mu", o.mu)->required();
    }
    sub("verify", "run the cross-check suite", cmd_verify)
        ->add_option("-n,--max-length", o.max_length, "length bound for n_lambda")
        ->check(CLI::Range(0, 40));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    try {
        return handlers.at(chosen)(o, out);
    } catch (const TheoremViolation& e) {
        err << (o.strict ? "error" : "warning") << ": theorem violation: " << e.what() << "\n";
        return o.strict ? kTheoremViolation : kOk;
    } catch (const DatumError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternalError;
    }
}

} // namespace sphkl
