#include "cli.hpp"

#include "wzpi/errors.hpp"
#include "wzpi/report.hpp"
#include "wzpi/series.hpp"
#include "wzpi/term_parser.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace wzpi {

namespace {

struct Flags {
    int example = 0;
    std::string task_file;
    std::string term_file;
    std::string series_id;
    std::string cert_file;
    std::string closed;
    std::string at_k;
    std::vector<std::string> weighted;
    int digits = 60;
    int max_order = 6;
    std::string k_range = "0..20";
    bool json = false;
    std::string out_file;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("k range must look like A..B");
    try {
        std::size_t used = 0;
        const long a = std::stol(text.substr(0, dots), &used);
        if (used != dots) throw UsageError("bad k range '" + text + "'");
        const std::string rest = text.substr(dots + 2);
        const long b = std::stol(rest, &used);
        if (used != rest.size() || a < 0 || b < a) throw UsageError("bad k range '" + text + "'");
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("bad k range '" + text + "'");
    }
}

BigRational flag_rational(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

AlgebraicConstant flag_constant(const std::string& text) {
    try {
        return AlgebraicConstant::parse(text);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

void check_digits(int digits) {
    if (digits < 1) throw UsageError("--digits must be a positive integer");
}

// Writes the report to --out when given, otherwise to out.
void emit(const Flags& f, std::ostream& out, const std::string& text) {
    if (f.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream file(f.out_file, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + f.out_file + "'");
    file << text;
}

ProofOptions options_from(const Flags& f) {
    check_digits(f.digits);
    if (f.max_order < 1) throw UsageError("--max-order must be positive");
    ProofOptions o;
    o.max_order = f.max_order;
    o.digits = f.digits;
    std::tie(o.k_lo, o.k_hi) = parse_range(f.k_range);
    return o;
}

int cmd_prove(const Flags& f, std::ostream& out) {
    const ProofOptions opts = options_from(f);
    if ((f.example != 0) == !f.task_file.empty()) throw UsageError("prove needs exactly one of --example or --task");

    if (!f.task_file.empty()) {
        const ProofTask task = parse_task(read_file(f.task_file));
        const ProofReport rep = prove_pair(task, opts);
        emit(f, out, f.json ? dump(to_json(rep)) : render_text(rep));
        return rep.status == ProofStatus::FullyValidated ? kExitOk : kExitVerificationFailed;
    }

    const ExampleBundle* bundle = find_example(f.example);
    if (!bundle) throw UsageError("unknown example " + std::to_string(f.example) + " (expected 1..5)");
    BundleReport b;
    b.example = bundle->number;
    for (const auto& id : bundle->task_ids) b.tasks.push_back(prove_pair(*find_task(id), opts));
    if (bundle->identity_id) {
        ProofOptions zopts = opts;
        zopts.k_lo = 0;
        zopts.k_hi = 10;
        zopts.propagation_hi = 10;
        b.identity = verify_z_identity(*find_identity(*bundle->identity_id), {0, 1, 2, 3, 4, 5, 6}, true, zopts);
        for (const auto& link : theta_links())
            if (link.identity_id == *bundle->identity_id) b.links.push_back(check_theta_link(link, opts.digits));
    }

    if (b.tasks.size() == 1 && !b.identity) {
        const ProofReport& rep = b.tasks.front();
        emit(f, out, f.json ? dump(to_json(rep)) : render_text(rep));
        return rep.status == ProofStatus::FullyValidated ? kExitOk : kExitVerificationFailed;
    }
    emit(f, out, f.json ? dump(to_json(b, opts.digits)) : render_text(b, opts.digits));
    return b.passed(opts.digits) ? kExitOk : kExitVerificationFailed;
}

// Certificate file: "vars:", "term:", "P0:".."Pm:", "Rnum:", "Rden:" lines.
std::string render_certificate(const HyperTerm& term, const Telescoper& t) {
    const VarNames names = term.vars().names();
    std::ostringstream s;
    const std::string header = term.render();
    s << header.substr(0, header.find('\n')) << "\nterm: " << term.render_expr() << "\n";
    for (std::size_t i = 0; i < t.coeffs.size(); ++i) s << "P" << i << ": " << t.coeffs[i].to_string(names) << "\n";
    s << "Rnum: " << t.certificate.numerator().to_string(names) << "\n";
    s << "Rden: " << t.certificate.denominator().to_string(names) << "\n";
    return s.str();
}

std::pair<HyperTerm, Telescoper> parse_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string vars = "vars: n, k, z";
    std::string term_src;
    std::map<int, std::string> ps;
    std::string rnum;
    std::string rden = "1";
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
        const auto colon = line.find(':');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (colon == std::string::npos) throw ParseError("expected 'key: value'", line_no, 1);
        std::string key = line.substr(0, colon);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        const std::string value = line.substr(colon + 1);
        if (key == "vars") vars = line;
        else if (key == "term") term_src = value;
        else if (key == "Rnum") rnum = value;
        else if (key == "Rden") rden = value;
        else if (key.size() > 1 && key[0] == 'P' && key.find_first_not_of("0123456789", 1) == std::string::npos)
            ps[std::stoi(key.substr(1))] = value;
        else throw ParseError("unknown key '" + key + "'", line_no, 1);
    }
    if (term_src.empty() || ps.empty() || rnum.empty()) throw ParseError("certificate needs term, P0.. and Rnum", 1, 1);
    const HyperTerm term = parse_term(vars + "\n" + term_src + "\n");
    Telescoper t;
    for (const auto& [i, src] : ps) {
        if (i != static_cast<int>(t.coeffs.size())) throw ParseError("coefficients must be P0, P1, ... in order", 1, 1);
        t.coeffs.push_back(parse_polynomial(src, term.vars()));
    }
    t.order = static_cast<int>(t.coeffs.size()) - 1;
    t.certificate = RatFunc(parse_polynomial(rnum, term.vars()), parse_polynomial(rden, term.vars()));
    return {term, t};
}

int cmd_telescope(const Flags& f, std::ostream& out) {
    const ProofOptions opts = options_from(f);
    if (f.term_file.empty()) throw UsageError("telescope needs --term FILE");
    const HyperTerm term = parse_term(read_file(f.term_file));
    if (!term.vars().rec) throw UsageError("telescoping needs a recurrence variable in the term header");
    const auto t = find_telescoper(term, Var::N, Var::K, opts.max_order);
    if (!t) {
        emit(f, out, f.json ? dump({{"found", false}, {"maxOrder", opts.max_order}})
                            : "no telescoper up to order " + std::to_string(opts.max_order) + "\n");
        return kExitVerificationFailed;
    }
    const auto check = verify_certificate(term, *t, opts.k_lo, opts.k_hi);
    const bool ok = check.identity_holds;
    if (f.json) {
        nlohmann::json j = telescoper_json(*t);
        j["found"] = true;
        j["check"] = to_json(check);
        emit(f, out, dump(j));
    } else {
        std::ostringstream s;
        s << "# order " << t->order << "\n# operator " << render_operator(*t, term.vars().names()) << "\n"
          << "# identity " << (check.identity_holds ? "holds" : "FAILS") << "\n"
          << render_certificate(term, *t);
        emit(f, out, s.str());
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_cert(const Flags& f, std::ostream& out) {
    const ProofOptions opts = options_from(f);
    if (f.cert_file.empty()) throw UsageError("verify-cert needs a certificate file");
    const auto [term, t] = parse_certificate(read_file(f.cert_file));
    const auto check = verify_certificate(term, t, opts.k_lo, opts.k_hi);
    const bool ok = check.identity_holds && check.boundary_at_zero && check.tail_vanishes;
    if (f.json) {
        emit(f, out, dump(to_json(check)));
    } else {
        std::ostringstream s;
        s << "identity " << (check.identity_holds ? "holds" : "FAILS") << "\nboundary "
          << (check.boundary_at_zero ? "zero" : "NONZERO") << "\ntail " << (check.tail_vanishes ? "vanishes" : "NONZERO")
          << "\n";
        for (const auto& d : check.details) s << "  " << d << "\n";
        emit(f, out, s.str());
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_eval(const Flags& f, std::ostream& out) {
    check_digits(f.digits);
    if (f.series_id.empty() == f.term_file.empty()) throw UsageError("eval needs a series id or --term FILE");
    HyperTerm term;
    std::optional<AlgebraicConstant> closed;
    std::string label;
    if (!f.series_id.empty()) {
        const SeriesEntry* e = find_series(f.series_id);
        if (!e) throw UsageError("unknown series '" + f.series_id + "'");
        term = e->kernel;
        closed = e->closed;
        label = e->id;
    } else {
        term = parse_term(read_file(f.term_file));
        label = f.term_file;
    }
    if (!f.closed.empty()) closed = flag_constant(f.closed);

    Assignment at;
    if (!f.at_k.empty()) at[Var::K] = flag_rational(f.at_k);
    EvalResult r;
    if (!f.weighted.empty()) {
        if (f.weighted.size() != 3) throw UsageError("--weighted takes a b z0");
        const BigRational a = flag_rational(f.weighted[0]);
        const BigRational b = flag_rational(f.weighted[1]);
        const BigRational z0 = flag_rational(f.weighted[2]);
        if (!closed)
            for (const auto& link : theta_links())
                if (link.value && link.coefficients == term && link.a == a && link.b == b && link.z0 == z0)
                    closed = link.value;
        r = eval_weighted_series(term, a, b, z0, f.digits + 3, at);
    } else {
        r = eval_series(term, at, f.digits + 3);
    }

    std::optional<int> matched;
    if (closed) matched = matched_digits(r.enclosure(), closed->evaluate(working_bits(f.digits + 3)), f.digits);
    if (f.json) {
        nlohmann::json j = {{"series", label},
                            {"value", r.value.to_decimal(f.digits)},
                            {"termsUsed", r.terms_used},
                            {"tailBound", rational_json(r.tail_bound)},
                            {"digits", f.digits}};
        j["closedForm"] = closed ? nlohmann::json(closed->to_string()) : nlohmann::json(nullptr);
        j["matchedDigits"] = matched ? nlohmann::json(*matched) : nlohmann::json(nullptr);
        emit(f, out, dump(j));
    } else {
        std::ostringstream s;
        s << label << " = " << r.value.to_decimal(f.digits) << "\nterms " << r.terms_used << "\n";
        if (matched) s << "matched " << *matched << " digits vs " << closed->to_string() << "\n";
        emit(f, out, s.str());
    }
    if (matched && *matched < f.digits - 2) return kExitVerificationFailed;
    return kExitOk;
}

int cmd_list(const Flags& f, std::ostream& out) {
    nlohmann::json j;
    for (const auto& s : series_catalog())
        j["series"].push_back({{"id", s.id}, {"closed", s.closed.to_string()}, {"provenance", s.provenance},
                               {"source", s.source}});
    for (const auto& t : task_catalog()) j["tasks"].push_back({{"id", t.id}, {"source", render_task(t)}});
    for (const auto& z : identity_catalog())
        j["identities"].push_back({{"id", z.id}, {"left", z.left_source}, {"right", z.right_source}});
    for (const auto& b : example_bundles())
        j["examples"].push_back({{"number", b.number},
                                 {"tasks", b.task_ids},
                                 {"identity", b.identity_id ? nlohmann::json(*b.identity_id) : nlohmann::json(nullptr)}});
    if (f.json) {
        emit(f, out, dump(j));
        return kExitOk;
    }
    std::ostringstream s;
    s << "series:\n";
    for (const auto& e : series_catalog())
        s << "  " << std::left << std::setw(8) << e.id << " = " << e.closed.to_string() << "  (" << e.provenance << ")\n";
    s << "tasks:\n";
    for (const auto& t : task_catalog()) s << "  " << t.id << "\n";
    s << "identities:\n";
    for (const auto& z : identity_catalog()) s << "  " << z.id << "\n";
    s << "examples:\n";
    for (const auto& b : example_bundles()) {
        s << "  " << b.number << ":";
        for (const auto& id : b.task_ids) s << " " << id;
        if (b.identity_id) s << " + " << *b.identity_id;
        s << "\n";
    }
    emit(f, out, s.str());
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Flags f;
    CLI::App app{"Creative-telescoping prover for Ramanujan-type 1/pi series", "wzpi"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* c) {
        c->add_option("--digits", f.digits, "decimal digits")->default_val(60);
        c->add_option("--max-order", f.max_order, "largest telescoper order")->default_val(6);
        c->add_option("--k-range", f.k_range, "boundary check range A..B")->default_val("0..20");
        c->add_flag("--json", f.json, "JSON output");
        c->add_option("--out", f.out_file, "write the report to FILE");
    };
    auto* prove = app.add_subcommand("prove", "run a catalog example or a task file");
    prove->add_option("--example", f.example, "example number 1..5");
    prove->add_option("--task", f.task_file, "task file");
    common(prove);
    auto* tele = app.add_subcommand("telescope", "find a telescoper for a term file");
    tele->add_option("--term", f.term_file, "term file")->required();
    common(tele);
    auto* eval = app.add_subcommand("eval", "evaluate a catalog series or a term file");
    eval->add_option("series", f.series_id, "catalog series id");
    eval->add_option("--term", f.term_file, "term file");
    eval->add_option("--weighted", f.weighted, "a b z0: sum (a + b n) c_n z0^n")->expected(3);
    eval->add_option("--closed", f.closed, "closed form to compare with, e.g. 16/pi");
    eval->add_option("--k", f.at_k, "value of the recurrence variable");
    common(eval);
    auto* verify = app.add_subcommand("verify-cert", "check a certificate file");
    verify->add_option("file", f.cert_file, "certificate file")->required();
    common(verify);
    auto* list = app.add_subcommand("list", "show the built-in catalog");
    list->add_flag("--json", f.json, "JSON output");
    list->add_option("--out", f.out_file, "write the listing to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "wzpi: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (prove->parsed()) return cmd_prove(f, out);
        if (tele->parsed()) return cmd_telescope(f, out);
        if (eval->parsed()) return cmd_eval(f, out);
        if (verify->parsed()) return cmd_verify_cert(f, out);
        if (list->parsed()) return cmd_list(f, out);
    } catch (const UsageError& e) {
        err << "wzpi: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "wzpi: parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DivergenceError& e) {
        err << "wzpi: divergent series: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const DomainError& e) {
        err << "wzpi: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        err << "wzpi: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

} // namespace wzpi
