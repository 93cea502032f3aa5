#include "wzpi/catalog.hpp"

#include "wzpi/errors.hpp"
#include "wzpi/term_parser.hpp"

#include <sstream>

namespace wzpi {

namespace {

// Kernel building blocks in k.
const std::string kWL = "poch(-k,n)*poch(1/2,n)^2/(poch(1/2-k,n)^2*poch(1,n))";
const std::string kWR = "poch(-k,n)*poch(-k/2,n)*poch(1/2-k/2,n)/(poch(1/2-k,n)^2*poch(1,n))";
const std::string kBL = "poch(-3*k,n)*poch(1/3-k,n)*poch(1/6-2*k,n)/(poch(2/3-2*k,n)*poch(1/3-4*k,n)*poch(1,n))";
const std::string kBR = "poch(-k,n)*poch(1/3-k,n)*poch(2/3-k,n)/(poch(5/6-k,n)*poch(2/3-2*k,n)*poch(1,n))";

const std::string kQuarter = "poch(1/2,n)*poch(1/4,n)*poch(3/4,n)/poch(1,n)^3";
const std::string kSixth = "poch(1/2,n)*poch(1/6,n)*poch(5/6,n)/poch(1,n)^3";
const std::string kHalf = "poch(1/2,n)^3/poch(1,n)^3";

SeriesEntry make_series(std::string id, const std::string& expr, std::string_view closed, std::string provenance) {
    SeriesEntry e;
    e.id = std::move(id);
    e.source = "vars: n\n" + expr + "\n";
    e.kernel = parse_term(e.source);
    e.closed = AlgebraicConstant::parse(closed);
    e.provenance = std::move(provenance);
    return e;
}

std::vector<BigRational> default_samples() {
    return {BigRational(1, 4), BigRational(-1, 4), BigRational(2, 7)};
}

ProofTask make_task(std::string id, const std::string& left, const std::string& right, BigRational k_star,
                    std::string_view closed, std::string series_id, std::string anchor_id,
                    std::vector<BigRational> samples) {
    std::ostringstream text;
    text << "task: " << id << "\nvars: n, k\nleft: " << left << "\nright: " << right << "\nkstar: "
         << to_string(k_star) << "\nclosed: " << closed << "\nseries: " << series_id << "\n";
    if (!anchor_id.empty()) text << "anchor: " << anchor_id << "\n";
    text << "samples: ";
    for (std::size_t i = 0; i < samples.size(); ++i) text << (i ? ", " : "") << to_string(samples[i]);
    text << "\n";
    return parse_task(text.str());
}

ZIdentity make_identity(std::string id, const std::string& left, const std::string& right) {
    ZIdentity z;
    z.id = std::move(id);
    z.left_source = "vars: n, k, z\n" + left + "\n";
    z.right_source = "vars: n, k, z\n" + right + "\n";
    z.left = parse_term(z.left_source);
    z.right = parse_term(z.right_source);
    return z;
}

ThetaLink make_link(std::string identity, long a, long b, BigRational z0, std::string target, std::string_view factor,
                    std::optional<std::string_view> value) {
    ThetaLink l;
    l.identity_id = std::move(identity);
    l.source = "vars: n, z\n" + kHalf + "*z^n\n";
    l.coefficients = parse_term(l.source);
    l.a = a;
    l.b = b;
    l.z0 = std::move(z0);
    l.target_series = std::move(target);
    l.factor = AlgebraicConstant::parse(factor);
    if (value) l.value = AlgebraicConstant::parse(*value);
    return l;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

const std::vector<SeriesEntry>& series_catalog() {
    static const std::vector<SeriesEntry> entries = {
        make_series("65-8", kQuarter + "*(-1)^n*(16/63)^(2*n)*(65*n+8)", "9*sqrt(7)/pi", "Berndt-Chan-Liaw"),
        make_series("126-10", kSixth + "*(2/11)^(3*n)*(126*n+10)", "11/2*sqrt(33)/pi", "Borweins"),
        make_series("63-8", kSixth + "*(-4/5)^(3*n)*(63*n+8)", "5*sqrt(15)/pi", "Baruah-Berndt"),
        make_series("7-1", kQuarter + "*(32/81)^n*(7*n+1)", "9/2/pi", "Berndt-Chan-Liaw"),
        make_series("28-3", kSixth + "*(3/5)^(3*n)*(28*n+3)", "5*sqrt(5)/pi", "Borweins"),
        make_series("11-1", kSixth + "*(4/125)^n*(11*n+1)", "5/6*sqrt(15)/pi", "Ramanujan"),
        make_series("133-8", kSixth + "*(4/85)^(3*n)*(133*n+8)", "85/54*sqrt(255)/pi", "Ramanujan"),
        make_series("anchor", kHalf + "*(1/64)^n*(42*n+5)", "16/pi", "WZ-anchor"),
        make_series("anchor-8", kHalf + "*(-1/8)^n*(6*n+1)", "2*sqrt(2)/pi", "WZ-anchor"),
        make_series("anchor-4", kHalf + "*(1/4)^n*(6*n+1)", "4/pi", "WZ-anchor"),
    };
    return entries;
}

const SeriesEntry& anchor_series() { return *find_series("anchor"); }

const std::vector<ProofTask>& task_catalog() {
    static const std::vector<ProofTask> tasks = [] {
        const BigRational half(-1, 2);
        const BigRational sixth(-1, 6);
        std::vector<ProofTask> t;
        t.push_back(make_task("example-1", "3*(64/63)^k*" + kWL + "*(1/64)^n*(42*n+5)",
                              kWR + "*(-1)^n*(16/63)^(2*n)*(130*n-2*k+15)", half, "18*sqrt(7)/pi", "65-8",
                              "anchor", default_samples()));
        t.push_back(make_task("example-2", "11*(32/33)^(3*k)*" + kBL + "*(-1/8)^n*(6*n+1)",
                              kBR + "*(2/11)^(3*n)*(126*n+6*k+11)", sixth, "11/2*sqrt(33)/pi", "126-10",
                              "anchor-8", default_samples()));
        t.push_back(make_task(
            "example-3",
            "5*poch(-3*k,n)*poch(2/3+k,n)*poch(1/3-k,n)/(poch(5/6-k,n)*poch(2/3-2*k,n)*poch(1,n))*(1/64)^n*(42*n+5)",
            "(15/16)^(3*k)*" + kBR + "*(-64/125)^n*(252*n-42*k+25)", sixth, "80/pi", "63-8", "anchor",
            default_samples()));
        t.push_back(make_task("7-1", "3*(8/9)^k*" + kWL + "*(-1/8)^n*(6*n+1)", kWR + "*(32/81)^n*(14*n+2*k+3)",
                              half, "9/pi", "7-1", "anchor-8", default_samples()));
        t.push_back(make_task("28-3", "5*(4/5)^(3*k)*" + kBL + "*(-1)^n*(4*n+1)",
                              kBR + "*(3/5)^(3*n)*(28*n+12*k+5)", sixth, "5*sqrt(5)/pi", "28-3", "",
                              default_samples()));
        t.push_back(make_task("11-1", "5*(16/15)^(3*k)*" + kBL + "*(1/4)^n*(6*n+1)",
                              kBR + "*(4/125)^n*(66*n-6*k+5)", sixth, "5*sqrt(15)/pi", "11-1", "anchor-4",
                              default_samples()));
        t.push_back(make_task("133-8", "85*(256/255)^(3*k)*" + kBL + "*(1/64)^n*(42*n+5)",
                              kBR + "*(4/85)^(3*n)*(7182*n-42*k+425)", sixth, "85*sqrt(255)/pi", "133-8", "anchor",
                              default_samples()));
        return t;
    }();
    return tasks;
}

const std::vector<ZIdentity>& identity_catalog() {
    static const std::vector<ZIdentity> ids = {
        make_identity("whipple", kWL + "*z^n", "(1-z)^k*" + kWR + "*(-4)^n*z^n*(1-z)^(-2*n)"),
        make_identity("bailey", kBL + "*z^n", "(1-1/4*z)^(3*k)*" + kBR + "*27^n*z^(2*n)*(4-z)^(-3*n)"),
    };
    return ids;
}

const std::vector<ThetaLink>& theta_links() {
    static const std::vector<ThetaLink> links = {
        make_link("whipple", 5, 42, BigRational(1, 64), "65-8", "16/63*sqrt(7)", "16/pi"),
        make_link("whipple", 1, 6, BigRational(-1, 8), "7-1", "4/9*sqrt(2)", "2*sqrt(2)/pi"),
        make_link("bailey", 1, 6, BigRational(-1, 8), "126-10", "4/363*sqrt(66)", "2*sqrt(2)/pi"),
        make_link("bailey", 1, 4, BigRational(-1), "28-3", "2/25*sqrt(5)", "2/pi"),
        make_link("bailey", 1, 6, BigRational(1, 4), "11-1", "8/25*sqrt(15)", "4/pi"),
        make_link("bailey", 5, 42, BigRational(1, 64), "133-8", "288/7225*sqrt(255)", "16/pi"),
    };
    return links;
}

const std::vector<ExampleBundle>& example_bundles() {
    static const std::vector<ExampleBundle> bundles = {
        {1, {"example-1"}, std::nullopt},
        {2, {"example-2"}, std::nullopt},
        {3, {"example-3"}, std::nullopt},
        {4, {"example-1", "7-1"}, std::string("whipple")},
        {5, {"example-2", "28-3", "11-1", "133-8"}, std::string("bailey")},
    };
    return bundles;
}

const SeriesEntry* find_series(std::string_view id) {
    for (const auto& e : series_catalog())
        if (e.id == id) return &e;
    return nullptr;
}

const ProofTask* find_task(std::string_view id) {
    for (const auto& t : task_catalog())
        if (t.id == id) return &t;
    return nullptr;
}

const ZIdentity* find_identity(std::string_view id) {
    for (const auto& z : identity_catalog())
        if (z.id == id) return &z;
    return nullptr;
}

const ExampleBundle* find_example(int number) {
    for (const auto& b : example_bundles())
        if (b.number == number) return &b;
    return nullptr;
}

ProofTask parse_task(std::string_view text) {
    ProofTask task;
    std::string vars_line = "vars: n, k, z";
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int left_line = 0;
    int right_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto colon = body.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value'", line_no, 1);
        const std::string key = trim(std::string_view(body).substr(0, colon));
        const std::string value = trim(std::string_view(body).substr(colon + 1));
        const int col = static_cast<int>(line.find(':') + 2);
        try {
            if (key == "task") task.id = value;
            else if (key == "vars") vars_line = body;
            else if (key == "left") task.left_source = value, left_line = line_no;
            else if (key == "right") task.right_source = value, right_line = line_no;
            else if (key == "kstar") task.k_star = parse_rational(value);
            else if (key == "closed") task.closed = AlgebraicConstant::parse(value);
            else if (key == "series") task.series_id = value;
            else if (key == "anchor") task.anchor_id = value;
            else if (key == "samples") {
                std::istringstream items(value);
                std::string item;
                while (std::getline(items, item, ',')) task.carlson_samples.push_back(parse_rational(trim(item)));
            } else throw ParseError("unknown key '" + key + "'", line_no, 1);
        } catch (const DomainError& e) {
            throw ParseError(e.what(), line_no, col);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line_no, col);
        }
    }
    if (task.left_source.empty()) throw ParseError("missing 'left'", line_no, 1);
    if (task.right_source.empty()) throw ParseError("missing 'right'", line_no, 1);
    auto parse_side = [&](const std::string& src, int at) {
        try {
            return parse_term(vars_line + "\n" + src + "\n");
        } catch (const ParseError& e) {
            throw ParseError(std::string("in ") + (at == left_line ? "left" : "right") + ": " + e.what(), at, 1);
        }
    };
    task.left = parse_side(task.left_source, left_line);
    task.right = parse_side(task.right_source, right_line);
    if (!task.left.vars().rec || !task.right.vars().rec) throw ParseError("task kernels need a recurrence variable", 1, 1);
    if (task.id.empty()) task.id = "task";
    return task;
}

std::string render_task(const ProofTask& task) {
    std::ostringstream out;
    const TermVars& v = task.left.vars();
    out << "task: " << task.id << "\nvars: " << v.sum;
    if (v.rec) out << ", " << *v.rec;
    if (v.has_z) out << ", z";
    out << "\nleft: " << task.left.render_expr() << "\nright: " << task.right.render_expr() << "\n";
    if (task.k_star) out << "kstar: " << to_string(*task.k_star) << "\n";
    if (task.closed) out << "closed: " << task.closed->to_string() << "\n";
    if (!task.series_id.empty()) out << "series: " << task.series_id << "\n";
    if (!task.anchor_id.empty()) out << "anchor: " << task.anchor_id << "\n";
    if (!task.carlson_samples.empty()) {
        out << "samples: ";
        for (std::size_t i = 0; i < task.carlson_samples.size(); ++i)
            out << (i ? ", " : "") << to_string(task.carlson_samples[i]);
        out << "\n";
    }
    return out.str();
}

} // namespace wzpi
