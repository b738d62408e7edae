#include "polygem/polygem2.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polygem/grammar.hpp"

namespace polygem {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_top_level(std::string_view s)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(')
            ++depth;
        if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::string generator_token(const ModuleId& m)
{
    return ModuleElement::generator(m).to_string();
}

// Summands and generator names of one side, numbering repeated names #k.
void add_side(const std::vector<SpaceFactor>& factors, GradedSum& sum,
              std::vector<std::string>& names)
{
    std::map<std::string, int> seen;
    for (const auto& f : factors) {
        for (const auto& m : f.primitive_summands()) {
            sum.add(m);
            const std::string token = generator_token(m);
            const int k = ++seen[token];
            names.push_back(k == 1 ? token : token + "#" + std::to_string(k));
        }
    }
}

// "Q0", "Q0Q1", "Q1...Q4"; empty when last < first.
std::string q_product(int first, int last)
{
    const auto q = [](int i) { return "Q" + std::to_string(i); };
    if (last < first)
        return "";
    if (last == first)
        return q(first);
    if (last == first + 1)
        return q(first) + q(last);
    return q(first) + "..." + q(last);
}

std::string apply_text(const std::string& op, const std::string& x)
{
    return op.empty() ? x : op + " (" + x + ")";
}

std::optional<std::size_t> find_summand(const GradedSum& sum, const GeneratorRef& g)
{
    int k = 0;
    for (std::size_t i = 0; i < sum.summands().size(); ++i)
        if (sum.summands()[i] == g.module && ++k == g.occurrence)
            return i;
    return std::nullopt;
}

std::vector<SpaceFactor> parse_factors(const std::string& list, int line, int min_m)
{
    std::vector<SpaceFactor> out;
    if (list.empty())
        return out;
    for (const auto& item : split_top_level(list)) {
        try {
            const auto f = parse_space_factor(item);
            if (f.kind == SpaceKind::MilgramE)
                throw std::invalid_argument("only Eilenberg-MacLane factors are allowed here");
            if (f.m < min_m)
                throw std::invalid_argument("F factors must be simply connected (m >= 2)");
            out.push_back(f);
        } catch (const std::invalid_argument& e) {
            throw InputError(line, e.what());
        }
    }
    return out;
}

// Sq^I iprime_t |-> Sq^I Sq^1 i_{t-1}; Free elements are returned as they are.
ModuleElement to_free(const ModuleElement& x)
{
    const ModuleId& m = x.module();
    if (m.kind == ModuleKind::Free)
        return x;
    if (m.kind != ModuleKind::Prime || m.param < 2)
        throw std::invalid_argument("no free realization for " + m.to_string());
    const auto target = ModuleId::free(m.param - 1);
    ModuleElement out(target, x.degree());
    for (const auto& l : x.labels()) {
        const SteenrodElement op = (l.empty() ? SteenrodElement::unit()
                                              : SteenrodElement(AdmissibleMonomial(l))) *
                                   SteenrodElement::sq(1);
        out += act(op, ModuleElement::generator(target));
    }
    return out;
}

bool in_image(const PrimitiveMap& f, const SumElement& y)
{
    const auto v = f.codomain().coordinates(y);
    return gf2::solve(f.matrix(y.degree()), f.codomain().dimension(y.degree()), v).has_value();
}

// Sq_0-iterates of a cokernel generator stay outside im f* through D.
bool certify_cokernel(const TwoPolyGemInput& in, std::size_t summand, int max_degree,
                      std::vector<std::string>& lines)
{
    SumElement y = in.l().inject(summand, ModuleElement::generator(in.l().summands()[summand]));
    int checked = 0;
    bool ok = true;
    while (y.degree() <= max_degree) {
        if (y.is_zero() || in_image(in.map, y)) {
            ok = false;
            lines.push_back("Sq0^" + std::to_string(checked) + " of " + in.l_names[summand] +
                            " lies in im f* in degree " + std::to_string(y.degree()));
            break;
        }
        ++checked;
        y = sq_zero(y);
    }
    if (ok)
        lines.push_back("Sq0^k " + in.l_names[summand] + " outside im f* for k < " +
                        std::to_string(checked) + " (degrees <= " + std::to_string(max_degree) +
                        ")");
    return ok && checked > 0;
}

std::string element_text(const TwoPolyGemInput& in, const std::vector<std::size_t>& gens,
                         const std::string& prefix)
{
    std::string s;
    for (std::size_t i : gens)
        s += (s.empty() ? "" : " + ") + prefix + in.m_names[i];
    return s;
}

}  // namespace

TwoPolyGemInput parse_two_polygem(std::string_view text)
{
    TwoPolyGemInput in;
    struct ValueLine {
        int line;
        std::string lhs, rhs;
    };
    std::vector<ValueLine> values;
    bool have_e = false, have_f = false;
    std::istringstream is{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s.front() == '#')
            continue;
        if (s.rfind("E:", 0) == 0 || s.rfind("F:", 0) == 0) {
            bool& have = s[0] == 'E' ? have_e : have_f;
            if (have)
                throw InputError(line, std::string("duplicate ") + s[0] + ": line");
            have = true;
            (s[0] == 'E' ? in.e_factors : in.f_factors) = parse_factors(trim(s.substr(2)), line, s[0] == 'E' ? 1 : 2);
            continue;
        }
        if (s.rfind("f(", 0) == 0) {
            const auto eq = s.find('=');
            const auto close = s.rfind(')', eq);
            if (eq == std::string::npos || close == std::string::npos || close < 2)
                throw InputError(line, "expected f(generator) = expression");
            values.push_back({line, trim(s.substr(2, close - 2)), trim(s.substr(eq + 1))});
            continue;
        }
        throw InputError(line, "expected 'E:', 'F:' or 'f(...) = ...'");
    }
    if (!have_e || !have_f)
        throw InputError(line, "both E: and F: lines are required");

    GradedSum m, l;
    add_side(in.f_factors, m, in.m_names);
    add_side(in.e_factors, l, in.l_names);
    in.map = PrimitiveMap(m, l);

    std::vector<bool> assigned(m.summands().size(), false);
    for (const auto& v : values) {
        try {
            const auto lhs = parse_terms(v.lhs);
            if (lhs.size() != 1 || !lhs.front().generator || !(lhs.front().op == SteenrodElement::unit()))
                throw std::invalid_argument("left side must be a single generator");
            const auto idx = find_summand(m, *lhs.front().generator);
            if (!idx)
                throw std::invalid_argument("no generator " + v.lhs + " on the F side");
            if (assigned[*idx])
                throw std::invalid_argument("value of " + v.lhs + " given twice");
            assigned[*idx] = true;
            const int degree = m.summands()[*idx].param;
            SumElement value(l, degree);
            for (const auto& t : parse_terms(v.rhs)) {
                if (!t.generator)
                    throw ParseError(t.position, "term needs a generator");
                const auto target = find_summand(l, *t.generator);
                if (!target)
                    throw ParseError(t.position, "no such generator on the E side");
                GeneratorRef plain = *t.generator;
                plain.occurrence = 1;
                Term single = t;
                single.generator = plain;
                const auto x = evaluate(single);
                if (x.degree() != degree)
                    throw ParseError(t.position, "term has degree " + std::to_string(x.degree()) +
                                                     ", expected " + std::to_string(degree));
                auto parts = value.parts();
                parts[*target] += x;
                value = SumElement::from_parts(std::move(parts), degree);
            }
            in.map.set_value(*idx, value);
        } catch (const std::invalid_argument& e) {
            throw InputError(v.line, e.what());
        }
    }
    return in;
}

IndecomposableMap indecomposables(const TwoPolyGemInput& in)
{
    IndecomposableMap q;
    const auto& ms = in.m().summands();
    const auto& ls = in.l().summands();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        std::vector<std::size_t> col;
        const auto& v = in.map.value(i);
        for (std::size_t j = 0; j < ls.size(); ++j)
            if (ls[j].param == ms[i].param &&
                std::count(v.part(j).labels().begin(), v.part(j).labels().end(), Label{}) == 1)
                col.push_back(j);
        q.columns.push_back(std::move(col));
    }

    std::vector<int> degrees;
    for (const auto& m : ms)
        degrees.push_back(m.param);
    for (const auto& m : ls)
        degrees.push_back(m.param);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    for (int d : degrees) {
        std::vector<std::size_t> mi, li;
        for (std::size_t i = 0; i < ms.size(); ++i)
            if (ms[i].param == d)
                mi.push_back(i);
        for (std::size_t j = 0; j < ls.size(); ++j)
            if (ls[j].param == d)
                li.push_back(j);
        auto column = [&](std::size_t i) {
            gf2::BitVec v(li.size());
            for (std::size_t j : q.columns[i])
                v.flip(static_cast<std::size_t>(std::find(li.begin(), li.end(), j) - li.begin()));
            return v;
        };
        if (q.kernel.empty()) {
            // Free-type generators first, then all of them.
            for (bool free_only : {true, false}) {
                std::vector<std::size_t> use;
                for (std::size_t i : mi)
                    if (!free_only || ms[i].kind == ModuleKind::Free)
                        use.push_back(i);
                std::vector<gf2::BitVec> cols;
                for (std::size_t i : use)
                    cols.push_back(column(i));
                const auto ker = gf2::nullspace(cols, li.size());
                if (!ker.empty()) {
                    q.injective = false;
                    for (std::size_t k : ker.front().support())
                        q.kernel.push_back(use[k]);
                    break;
                }
            }
        }
        gf2::EchelonBasis span(li.size());
        for (std::size_t i : mi)
            span.insert(column(i));
        for (std::size_t k = 0; k < li.size(); ++k)
            if (span.insert(gf2::BitVec::unit(li.size(), k)))
                q.cokernel.push_back(li[k]);
    }
    return q;
}

std::vector<std::string> Lemma2Certificate::lines() const
{
    auto mark = [](bool b) { return b ? "pass" : "FAIL"; };
    const std::string q = q_product(0, n - 1);
    const std::string top = "u^" + std::to_string(1 << (n - 1));
    const std::string wedge = n == 2 ? "u ^ u^2" : n == 3 ? "u ^ u^2 ^ u^4" : "u ^ u^2 ^ ... ^ " + top;
    return {
        std::string(mark(value_annihilated)) + "\t" + q +
            " kills the value on F2[x1..xt], t < " + std::to_string(n),
        std::string(mark(value_annihilated_in_module)) + "\t" + q + " kills the value in L",
        std::string(mark(sq_zero_relation)) + "\tSq0(omega) = " + q + " i(" + std::to_string(n) +
            ")",
        std::string(mark(wedge_model)) + "\tomega = " + wedge + " in F2[x1..x" + std::to_string(n) + "]",
        std::string(mark(nonzero_iterates == r_max + 1)) + "\t(Sq_1)^r omega != 0 for r <= " +
            std::to_string(r_max) + " (last " + last_iterate + ")",
    };
}

Lemma2Certificate lemma2_check(int n, const std::vector<ModuleElement>& value_terms, int r_max)
{
    if (n < 2)
        throw std::invalid_argument("lemma2_check needs n >= 2");
    if (r_max < 0)
        throw std::invalid_argument("iteration bound must be >= 0");
    Lemma2Certificate c;
    c.n = n;
    c.r_max = r_max;
    const auto q_all = milnor_product(0, n - 1);

    c.value_annihilated = true;
    c.value_annihilated_in_module = true;
    for (const auto& x : value_terms) {
        if (x.degree() != n)
            throw std::invalid_argument("value term " + x.to_string() + " is not in degree " +
                                        std::to_string(n));
        const auto& m = x.module();
        const bool shape = (m.kind == ModuleKind::Free && m.param < n) ||
                           (m.kind == ModuleKind::Prime && m.param < n && m.param >= 2);
        if (!shape)
            throw std::invalid_argument("value term " + x.to_string() +
                                        " must be Sq^I i(t) with |I| > 0 and ex(I) <= t");
        const auto poly = act_on_polynomial(q_all, embed_polynomial(to_free(x)));
        c.value_annihilated = c.value_annihilated && poly.is_zero();
        c.value_annihilated_in_module = c.value_annihilated_in_module && act(q_all, x).is_zero();
    }

    const auto w = omega(n);
    const auto in = ModuleElement::generator(ModuleId::free(n));
    c.sq_zero_relation = sq_zero(w) == act(q_all, in);
    const auto wedge = wedge_image(n);
    c.wedge_model = embed_polynomial(w) == wedge_polynomial(wedge);

    auto y = wedge;
    for (int r = 0; r <= r_max; ++r) {
        if (y.is_zero())
            break;
        ++c.nonzero_iterates;
        c.last_iterate = y.to_string();
        if (r < r_max)
            y = sq_one(y);
    }
    return c;
}

std::string to_string(Case c)
{
    switch (c) {
    case Case::Trivial:
        return "trivial";
    case Case::OneA:
        return "1a";
    case Case::OneB:
        return "1b";
    case Case::TwoA:
        return "2a";
    case Case::TwoB:
        return "2b";
    }
    return "?";
}

std::string CaseVerdict::to_tsv() const
{
    std::ostringstream os;
    os << "case\t" << to_string(tag) << '\n';
    os << "witness_kind\t" << (witness_kind.empty() ? "-" : witness_kind) << '\n';
    os << "witness\t" << (witness.empty() ? "-" : witness) << '\n';
    os << "certified\t" << (certified ? "yes" : "no") << '\n';
    os << "conclusion\t" << conclusion << '\n';
    for (const auto& l : certificate)
        os << "certificate\t" << l << '\n';
    return os.str();
}

CaseVerdict classify(const TwoPolyGemInput& in, int max_degree, int r_max)
{
    CaseVerdict v;
    const auto q = indecomposables(in);
    const bool all_f2 =
        std::all_of(in.e_factors.begin(), in.e_factors.end(),
                    [](const SpaceFactor& f) { return f.kind == SpaceKind::EMF2; }) &&
        std::all_of(in.f_factors.begin(), in.f_factors.end(),
                    [](const SpaceFactor& f) { return f.kind == SpaceKind::EMF2; });

    if (q.injective) {
        if (q.cokernel.empty()) {
            v.tag = Case::Trivial;
            v.conclusion = "reduced cohomology of X vanishes";
            bool iso = true;
            for (int d = 1; d <= max_degree && iso; ++d) {
                const auto dm = in.m().dimension(d), dl = in.l().dimension(d);
                iso = dm == dl && in.map.rank(d) == dl;
                if (!iso)
                    v.certificate.push_back("f* is not bijective in degree " + std::to_string(d));
            }
            if (iso)
                v.certificate.push_back("f* bijective on primitives through degree " +
                                        std::to_string(max_degree));
            v.certified = iso;
            return v;
        }
        v.tag = all_f2 ? Case::OneA : Case::TwoA;
        const std::size_t g = q.cokernel.front();
        v.witness = in.l_names[g];
        v.witness_kind = "cokernel generator";
        v.conclusion = "non-nilpotent class " + v.witness + " in U(L/M)";
        v.certified = certify_cokernel(in, g, max_degree, v.certificate);
        return v;
    }

    // A kernel element x of Q(f*), all of whose generators share degree n.
    const int n = in.m().summands()[q.kernel.front()].param;
    SumElement x(in.m(), n);
    bool free_type = true, prime_type = true;
    for (std::size_t i : q.kernel) {
        const auto& m = in.m().summands()[i];
        free_type = free_type && m.kind == ModuleKind::Free;
        prime_type = prime_type && m.kind == ModuleKind::Prime;
        x.set_part(i, ModuleElement::generator(m));
    }
    const auto value = in.map.apply(x);
    std::vector<ModuleElement> value_terms;
    for (const auto& p : value.parts())
        if (!p.is_zero())
            value_terms.push_back(p);

    if (free_type) {
        v.tag = Case::OneB;
        v.witness_kind = "omega";
        v.witness = apply_text(q_product(0, n - 2), element_text(in, q.kernel, ""));
        v.conclusion = "non-nilpotent exterior class from omega in Tor over sub-ker(f*)";
        if (n < 2) {
            v.certificate.push_back("n < 2: no omega");
            return v;
        }
        try {
            v.lemma2 = lemma2_check(n, value_terms, r_max);
        } catch (const std::invalid_argument& e) {
            v.certificate.push_back(std::string("value outside the lemma's shape: ") + e.what());
            return v;
        }
        for (const auto& l : v.lemma2->lines())
            v.certificate.push_back(l);
        const auto w = act(milnor_product(0, n - 2), x);
        const bool killed = in.map.apply(w).is_zero() && !w.is_zero();
        // Sq_0 injective on L in the degree of omega.
        const int dw = w.degree();
        const auto sq = sq_zero_image(in.l(), dw);
        const bool injective = gf2::rank(sq, in.l().dimension(2 * dw)) == in.l().dimension(dw);
        v.certificate.push_back(std::string(killed ? "pass" : "FAIL") + "\tf*(omega) = 0 in L");
        v.certificate.push_back(std::string(injective ? "pass" : "FAIL") +
                                "\tSq0 injective on L in degree " + std::to_string(dw));
        v.certified = v.lemma2->ok() && killed && injective;
        return v;
    }

    v.tag = Case::TwoB;
    // Does the value contain Sq^1 i(n-1)?
    std::optional<std::size_t> sq1_summand;
    for (std::size_t j = 0; j < in.l().summands().size() && !sq1_summand; ++j) {
        const auto& m = in.l().summands()[j];
        const auto& labels = value.part(j).labels();
        if (m.kind == ModuleKind::Free && m.param == n - 1 &&
            std::find(labels.begin(), labels.end(), Label{1}) != labels.end())
            sq1_summand = j;
    }
    if (sq1_summand) {
        v.witness_kind = "cokernel quotient F'(" + std::to_string(n - 1) + ")";
        v.witness = in.l_names[*sq1_summand];
        v.conclusion = "non-nilpotent class " + v.witness + " in the cokernel";
        if (n < 3) {
            v.certificate.push_back("n = 2 is below the bound n >= 3; not certified");
            return v;
        }
        v.certified = certify_cokernel(in, *sq1_summand, max_degree, v.certificate);
        return v;
    }

    v.witness_kind = "omega-prime";
    v.witness = apply_text(q_product(1, n - 3), element_text(in, q.kernel, ""));
    v.conclusion = "non-nilpotent exterior class from omega-prime in Tor over sub-ker(f*)";
    v.certificate.push_back("analogue of the vanishing lemma on F'(n) inside F(n-1)");
    if (!prime_type) {
        v.certificate.push_back("kernel element mixes F and F' generators; not certified");
        return v;
    }
    if (n < 3) {
        v.certificate.push_back("n = 2 is below the bound n >= 3; not certified");
        return v;
    }
    const auto w = act(milnor_product(1, n - 3), x);
    const bool killed = in.map.apply(w).is_zero() && !w.is_zero();
    v.certificate.push_back(std::string(killed ? "pass" : "FAIL") + "\tf*(omega') = 0 in L");
    bool realized = true;
    for (std::size_t i : q.kernel)
        realized = realized && to_free(w.part(i)) == omega(n - 1);
    v.certificate.push_back(std::string(realized ? "pass" : "FAIL") + "\tomega' = omega(" +
                            std::to_string(n - 1) + ") under iprime(n) -> Sq(1)*i(n-1)");
    v.lemma2 = lemma2_check(n - 1, {}, r_max);
    for (const auto& l : v.lemma2->lines())
        v.certificate.push_back(l);
    v.certified = killed && realized && v.lemma2->ok();
    return v;
}

PoincareSeries lemma3_dims(IntegralKind kind, int n, int max_degree)
{
    if (n < 2)
        throw std::invalid_argument("lemma3_dims needs n >= 2");
    // U(F'(n)) has a basis of square-free monomials in a basis of F'(n).
    const auto prime = [&](int m) { return unstable_algebra_series(ModuleId::prime(m), max_degree); };
    if (kind == IntegralKind::Z)
        return prime(n);
    return prime(n) * prime(n + 1);
}

}  // namespace polygem
