#include "wzpi/hyperterm.hpp"

#include "wzpi/errors.hpp"

#include <algorithm>
#include <tuple>

namespace wzpi {

VarNames TermVars::names() const {
    VarNames out;
    out.names[slot(Var::N)] = sum;
    out.names[slot(Var::K)] = rec.value_or("k");
    out.names[slot(Var::Z)] = "z";
    return out;
}

std::optional<Var> TermVars::lookup(std::string_view name) const {
    if (name == sum) return Var::N;
    if (rec && name == *rec) return Var::K;
    if (has_z && name == "z") return Var::Z;
    return std::nullopt;
}

VarMask TermVars::discrete() const {
    return static_cast<VarMask>(mask_of(Var::N) | (rec ? mask_of(Var::K) : 0));
}

namespace {

VarMask declared_mask(const TermVars& v) {
    return static_cast<VarMask>(v.discrete() | (v.has_z ? mask_of(Var::Z) : 0));
}

BigRational constant_part(const Polynomial& p) { return p.coefficient(Exponents{}); }

BigRational linear_coefficient(const Polynomial& p, Var v) {
    Exponents e{};
    e[slot(v)] = 1;
    return p.coefficient(e);
}

bool integer_linear(const Polynomial& p) {
    if (p.total_degree() > 1) return false;
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return is_integer(t.second); });
}

BigRational rational_power(const BigRational& base, long e) {
    BigRational r = 1;
    const BigRational b = e >= 0 ? base : 1 / base;
    for (long i = 0; i < std::labs(e); ++i) r *= b;
    return r;
}

} // namespace

HyperTerm::HyperTerm(TermVars vars, BigRational constant, std::vector<PochFactor> poch,
                     std::vector<ExpFactor> exps, std::vector<PolyFactor> polys)
    : vars_(std::move(vars)), constant_(std::move(constant)), poch_(std::move(poch)), exps_(std::move(exps)),
      polys_(std::move(polys)) {
    canonicalize();
}

void HyperTerm::canonicalize() {
    const VarMask declared = declared_mask(vars_);
    const VarMask discrete = vars_.discrete();
    const VarNames names = vars_.names();
    auto check_declared = [&](const Polynomial& p) {
        if ((p.vars() & static_cast<VarMask>(~declared)) != 0)
            throw UsageError("factor uses an undeclared variable: " + p.to_string(names));
    };

    // Exponential factors first: constant exponents fold into other parts.
    std::vector<ExpFactor> exps;
    for (auto& f : exps_) {
        check_declared(f.base);
        check_declared(f.exponent);
        if (f.base.is_zero()) throw DomainError("zero base in exponential factor");
        if ((f.base.vars() & discrete) != 0) throw UsageError("exponential base depends on a discrete variable");
        if (!integer_linear(f.exponent) || f.exponent.involves(Var::Z))
            throw UsageError("exponent must be an integer linear form in the discrete variables");
        auto it = std::find_if(exps.begin(), exps.end(), [&](const ExpFactor& e) { return e.base == f.base; });
        if (it != exps.end()) it->exponent += f.exponent;
        else exps.push_back(f);
    }
    exps_.clear();
    for (auto& f : exps) {
        if (f.exponent.is_zero()) continue;
        if (f.exponent.is_constant()) {
            const long e = f.exponent.constant_value().get_num().get_si();
            if (f.base.is_constant()) constant_ *= rational_power(f.base.constant_value(), e);
            else polys_.push_back({f.base, static_cast<int>(e)});
            continue;
        }
        exps_.push_back(std::move(f));
    }

    std::vector<PolyFactor> polys;
    for (auto& f : polys_) {
        check_declared(f.value);
        if (f.value.is_zero()) throw DomainError("zero polynomial factor");
        auto [unit, normal] = f.value.unit_normal();
        constant_ *= rational_power(unit, f.power);
        if (normal.is_constant()) continue;
        auto it = std::find_if(polys.begin(), polys.end(), [&](const PolyFactor& p) { return p.value == normal; });
        if (it != polys.end()) it->power += f.power;
        else polys.push_back({std::move(normal), f.power});
    }
    polys_.clear();
    for (auto& f : polys)
        if (f.power != 0) polys_.push_back(std::move(f));

    std::vector<PochFactor> poch;
    for (auto& f : poch_) {
        check_declared(f.base);
        if ((mask_of(f.run) & discrete) == 0) throw UsageError("Pochhammer index is not a discrete variable");
        if (f.base.total_degree() > 1) throw UsageError("Pochhammer base must be linear");
        if (f.base.involves(f.run)) throw UsageError("Pochhammer base involves its own index");
        auto it = std::find_if(poch.begin(), poch.end(),
                               [&](const PochFactor& p) { return p.base == f.base && p.run == f.run; });
        if (it != poch.end()) it->power += f.power;
        else poch.push_back(f);
    }
    poch_.clear();
    for (auto& f : poch)
        if (f.power != 0) poch_.push_back(std::move(f));

    std::sort(poch_.begin(), poch_.end(), [&](const PochFactor& a, const PochFactor& b) {
        return std::make_tuple(slot(a.run), a.base.to_string(names), a.power) <
               std::make_tuple(slot(b.run), b.base.to_string(names), b.power);
    });
    std::sort(exps_.begin(), exps_.end(), [&](const ExpFactor& a, const ExpFactor& b) {
        return a.base.to_string(names) < b.base.to_string(names);
    });
    std::sort(polys_.begin(), polys_.end(), [&](const PolyFactor& a, const PolyFactor& b) {
        return std::make_tuple(a.value.to_string(names), a.power) < std::make_tuple(b.value.to_string(names), b.power);
    });
}

HyperTerm HyperTerm::times(const Polynomial& p, int power) const {
    auto polys = polys_;
    polys.push_back({p, power});
    return HyperTerm(vars_, constant_, poch_, exps_, std::move(polys));
}

HyperTerm HyperTerm::scaled(const BigRational& c) const {
    return HyperTerm(vars_, constant_ * c, poch_, exps_, polys_);
}

std::string HyperTerm::render_expr() const {
    const VarNames names = vars_.names();
    std::vector<std::string> parts;
    auto power_suffix = [](int p) { return p == 1 ? std::string() : "^" + std::to_string(p); };
    for (const auto& f : poch_)
        parts.push_back("poch(" + f.base.to_string(names) + "," + names[f.run] + ")" + power_suffix(f.power));
    for (const auto& f : exps_) {
        std::string e = f.exponent.to_string(names);
        const bool bare = f.exponent.term_count() == 1 && f.exponent.leading_coefficient() == 1;
        parts.push_back("(" + f.base.to_string(names) + ")^" + (bare ? e : "(" + e + ")"));
    }
    for (const auto& f : polys_) parts.push_back("(" + f.value.to_string(names) + ")" + power_suffix(f.power));
    std::string out;
    if (constant_ != 1 || parts.empty()) out = to_string(constant_);
    for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
    return out;
}

std::string HyperTerm::render() const {
    std::string header = "vars: " + vars_.sum;
    if (vars_.rec) header += ", " + *vars_.rec;
    if (vars_.has_z) header += ", z";
    return header + "\n" + render_expr() + "\n";
}

// ------------------------------------------------------------- shifting

RatFunc FactoredRatio::to_ratfunc() const {
    Polynomial num(1);
    Polynomial den(1);
    for (const auto& p : numer) num *= p;
    for (const auto& p : denom) den *= p;
    return RatFunc(num, den);
}

namespace {

void push_power(FactoredRatio& out, const Polynomial& p, int power) {
    if (power > 0) out.numer.push_back(p.pow(static_cast<unsigned>(power)));
    else if (power < 0) out.denom.push_back(p.pow(static_cast<unsigned>(-power)));
}

struct MovingPoch {
    Polynomial base;
    Var run;
    int power;
};

// (a + d)_r / (a)_r for integer d, as factor lists.
void poch_offset_ratio(FactoredRatio& out, const Polynomial& a, Var run, long d, int power) {
    const Polynomial r = Polynomial::variable(run);
    for (long t = 0; t < std::labs(d); ++t) {
        Polynomial up;
        Polynomial down;
        if (d > 0) {
            up = a + r + Polynomial(t);
            down = a + Polynomial(t);
        } else {
            up = a - Polynomial(t + 1);
            down = a + r - Polynomial(t + 1);
        }
        push_power(out, up, power);
        push_power(out, down, -power);
    }
}

} // namespace

FactoredRatio factored_shift_ratio(const HyperTerm& term, Var v, int shift) {
    FactoredRatio out;
    if (shift == 0) return out;

    std::vector<MovingPoch> moving;
    for (const auto& f : term.poch()) {
        if (f.run == v) {
            const Polynomial r = Polynomial::variable(f.run);
            for (int t = 0; t < std::abs(shift); ++t) {
                const Polynomial factor = shift > 0 ? f.base + r + Polynomial(t) : f.base + r - Polynomial(t + 1);
                push_power(out, factor, shift > 0 ? f.power : -f.power);
            }
        } else if (f.base.involves(v)) {
            moving.push_back({f.base.shift(v, shift), f.run, f.power});
            moving.push_back({f.base, f.run, -f.power});
        }
    }

    // Pair moving bases that differ by an integer constant.
    std::vector<bool> used(moving.size(), false);
    for (std::size_t i = 0; i < moving.size(); ++i) {
        if (used[i]) continue;
        const Polynomial& ref = moving[i].base;
        const Polynomial ref_linear = ref - Polynomial(constant_part(ref));
        int total = 0;
        std::vector<std::pair<long, int>> members;
        for (std::size_t j = i; j < moving.size(); ++j) {
            if (used[j] || moving[j].run != moving[i].run) continue;
            const Polynomial& b = moving[j].base;
            if (b - Polynomial(constant_part(b)) != ref_linear) continue;
            const BigRational d = constant_part(b) - constant_part(ref);
            if (!is_integer(d)) continue;
            used[j] = true;
            total += moving[j].power;
            members.emplace_back(d.get_num().get_si(), moving[j].power);
        }
        if (total != 0)
            throw DomainError("term is not hypergeometric in the shifted variable (unpaired Pochhammer base)");
        for (const auto& [d, p] : members)
            if (d != 0) poch_offset_ratio(out, ref, moving[i].run, d, p);
    }

    for (const auto& f : term.exps()) {
        const BigRational c = linear_coefficient(f.exponent, v);
        if (c == 0) continue;
        const BigRational scaled = c * shift;
        const long delta = scaled.get_num().get_si();
        push_power(out, f.base, static_cast<int>(delta));
    }
    for (const auto& f : term.polys()) {
        if (!f.value.involves(v)) continue;
        push_power(out, f.value.shift(v, shift), f.power);
        push_power(out, f.value, -f.power);
    }
    return out;
}

RatFunc shift_quotient(const HyperTerm& term, Var v) { return factored_shift_ratio(term, v, 1).to_ratfunc(); }

RatFunc shift_ratio(const HyperTerm& term, Var v, int shift) {
    return factored_shift_ratio(term, v, shift).to_ratfunc();
}

// ----------------------------------------------------------- evaluation

namespace {

Polynomial substitute_all(Polynomial p, const Assignment& at) {
    for (const auto& [v, value] : at) p = p.evaluate(v, value);
    return p;
}

long integer_value(const Assignment& at, Var v, const char* role) {
    const auto it = at.find(v);
    if (it == at.end()) throw UsageError(std::string("unassigned ") + role);
    if (!is_integer(it->second)) throw DomainError(std::string("non-integer value for ") + role);
    return it->second.get_num().get_si();
}

} // namespace

RatFunc eval_term(const HyperTerm& term, const Assignment& at) {
    FactoredRatio parts;
    for (const auto& f : term.poch()) {
        const Polynomial base = substitute_all(f.base, at);
        const long n = integer_value(at, f.run, "Pochhammer index");
        const bool inverted = (n < 0) != (f.power < 0);
        for (long t = 0; t < std::labs(n); ++t) {
            const Polynomial factor = n >= 0 ? base + Polynomial(t) : base - Polynomial(t + 1);
            push_power(parts, factor, inverted ? -std::abs(f.power) : std::abs(f.power));
        }
    }
    for (const auto& f : term.exps()) {
        const Polynomial e = substitute_all(f.exponent, at);
        if (!e.is_constant()) throw UsageError("exponent not fully assigned");
        const BigRational ev = e.constant_value();
        const Polynomial base = substitute_all(f.base, at);
        if (!is_integer(ev)) {
            if (base == Polynomial(1)) continue;
            throw DomainError("fractional exponent of a non-unit base in exact evaluation");
        }
        push_power(parts, base, static_cast<int>(ev.get_num().get_si()));
    }
    for (const auto& f : term.polys()) push_power(parts, substitute_all(f.value, at), f.power);

    for (const auto& d : parts.denom)
        if (d.is_zero()) throw PoleError("denominator factor vanishes at the evaluation point");
    for (const auto& p : parts.numer)
        if (p.is_zero()) return RatFunc();

    const bool all_constant = std::all_of(parts.numer.begin(), parts.numer.end(), [](const Polynomial& p) { return p.is_constant(); }) &&
                              std::all_of(parts.denom.begin(), parts.denom.end(), [](const Polynomial& p) { return p.is_constant(); });
    if (all_constant) {
        BigRational value = term.constant();
        for (const auto& p : parts.numer) value *= p.constant_value();
        for (const auto& p : parts.denom) value /= p.constant_value();
        return RatFunc(value);
    }
    parts.numer.emplace_back(term.constant());
    return parts.to_ratfunc();
}

BigRational eval_term_exact(const HyperTerm& term, const Assignment& at) {
    const RatFunc v = eval_term(term, at);
    if (!v.is_constant()) throw UsageError("eval_term_exact: term still depends on unassigned variables");
    return v.constant_value();
}

std::optional<long> termination_bound(const HyperTerm& term, Var sum_var, const Assignment& others) {
    auto concrete_base = [&](const PochFactor& f) {
        const Polynomial b = substitute_all(f.base, others);
        if (!b.is_constant()) throw UsageError("termination_bound: Pochhammer base not concrete under the assignment");
        return b.constant_value();
    };
    std::optional<long> bound;
    for (const auto& f : term.poch()) {
        if (f.run != sum_var || f.power < 0) continue;
        const BigRational a = concrete_base(f);
        if (is_integer(a) && a <= 0) {
            const long candidate = 1 - a.get_num().get_si();
            bound = bound ? std::min(*bound, candidate) : candidate;
        }
    }
    if (!bound) return std::nullopt;
    for (const auto& f : term.poch()) {
        if (f.run != sum_var || f.power > 0) continue;
        const BigRational b = concrete_base(f);
        if (is_integer(b) && b <= 0 && 1 - b.get_num().get_si() < *bound)
            throw PoleError("denominator Pochhammer vanishes inside the support");
    }
    for (const auto& f : term.polys()) {
        if (f.power > 0) continue;
        const Polynomial p = substitute_all(f.value, others);
        for (long n = 0; n < *bound; ++n)
            if (p.evaluate(sum_var, n).is_zero()) throw PoleError("denominator polynomial vanishes inside the support");
    }
    return bound;
}

} // namespace wzpi
