#include "polygem/unstable.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polygem {

namespace {

bool has_odd_entry(const Label& l)
{
    return std::any_of(l.begin(), l.end(), [](int e) { return e % 2 != 0; });
}

// Whether an admissible sequence survives as a label of the module.
bool keeps(const ModuleId& m, const Label& l)
{
    const int ex = AdmissibleMonomial::excess_of(l);
    switch (m.kind) {
    case ModuleKind::Free:
        return ex <= m.param;
    case ModuleKind::ReducedFree:
        return ex < m.param;
    case ModuleKind::Prime:
        return ex <= m.param && (l.empty() || l.back() != 1);
    case ModuleKind::SubI:
        return ex <= m.param && has_odd_entry(l);
    case ModuleKind::WedgeF1:
        break;
    }
    return false;
}

void cancel_pairs(std::vector<Label>& v)
{
    std::sort(v.begin(), v.end());
    std::vector<Label> out;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(v[i]);
        i = j;
    }
    v = std::move(out);
}

const char* generator_name(ModuleKind k)
{
    switch (k) {
    case ModuleKind::Free:
        return "i";
    case ModuleKind::ReducedFree:
        return "ibar";
    case ModuleKind::Prime:
        return "iprime";
    case ModuleKind::SubI:
        return "isub";
    case ModuleKind::WedgeF1:
        return "w";
    }
    return "?";
}

int wedge_degree(const Label& l)
{
    int d = 0;
    for (int a : l)
        d += 1 << a;
    return d;
}

// Sq^k on a wedge of distinct powers u^{2^a}: each factor contributes 0 or
// 2^a, and since the 2^a are distinct the split of k is unique.
bool square_wedge(int k, Label& l)
{
    const int d = wedge_degree(l);
    if ((k & ~d) != 0)
        return false;
    for (int& a : l) {
        if (k & (1 << a)) {
            if (a + 1 >= 30)
                throw std::overflow_error("wedge exponent out of range");
            ++a;
        }
    }
    std::sort(l.begin(), l.end());
    return std::adjacent_find(l.begin(), l.end()) == l.end();
}

}  // namespace

ModuleElement make_canonical(ModuleId m, int degree, std::vector<Label> labels)
{
    cancel_pairs(labels);
    ModuleElement e(m, degree);
    e.labels_ = std::move(labels);
    return e;
}

ModuleId ModuleId::free(int n)
{
    if (n < 1)
        throw std::invalid_argument("Free(n) needs n >= 1");
    return {ModuleKind::Free, n};
}

ModuleId ModuleId::reduced_free(int n)
{
    if (n < 1)
        throw std::invalid_argument("ReducedFree(n) needs n >= 1");
    return {ModuleKind::ReducedFree, n};
}

ModuleId ModuleId::prime(int n)
{
    if (n < 1)
        throw std::invalid_argument("Prime(n) needs n >= 1");
    return {ModuleKind::Prime, n};
}

ModuleId ModuleId::sub_i(int m)
{
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("SubI(m) needs an odd m >= 1");
    return {ModuleKind::SubI, m};
}

ModuleId ModuleId::wedge(int n)
{
    if (n < 1)
        throw std::invalid_argument("WedgeF1(n) needs n >= 1");
    return {ModuleKind::WedgeF1, n};
}

int ModuleId::bottom_degree() const
{
    switch (kind) {
    case ModuleKind::SubI:
        return param + 1;
    case ModuleKind::WedgeF1:
        return (1 << param) - 1;
    default:
        return param;
    }
}

std::string ModuleId::to_string() const
{
    const char* name = "";
    switch (kind) {
    case ModuleKind::Free:
        name = "Free";
        break;
    case ModuleKind::ReducedFree:
        name = "ReducedFree";
        break;
    case ModuleKind::Prime:
        name = "Prime";
        break;
    case ModuleKind::SubI:
        name = "SubI";
        break;
    case ModuleKind::WedgeF1:
        name = "WedgeF1";
        break;
    }
    return std::string(name) + "(" + std::to_string(param) + ")";
}

std::string label_violation(const ModuleId& m, const Label& l)
{
    if (m.kind == ModuleKind::WedgeF1) {
        if (static_cast<int>(l.size()) != m.param)
            return "wedge needs exactly " + std::to_string(m.param) + " factors";
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (l[i] < 0 || l[i] >= 30)
                return "wedge exponents must be powers of two";
            if (i && l[i] <= l[i - 1])
                return "wedge factors must be distinct and increasing";
        }
        return {};
    }
    for (int e : l)
        if (e <= 0)
            return "positive entries required";
    if (!AdmissibleMonomial::is_admissible(l))
        return "not admissible (need i_j >= 2*i_{j+1})";
    const int ex = AdmissibleMonomial::excess_of(l);
    switch (m.kind) {
    case ModuleKind::Free:
        if (ex > m.param)
            return "excess " + std::to_string(ex) + " exceeds " + std::to_string(m.param);
        break;
    case ModuleKind::ReducedFree:
        if (ex >= m.param)
            return "excess " + std::to_string(ex) + " must be below " + std::to_string(m.param);
        break;
    case ModuleKind::Prime:
        if (ex > m.param)
            return "excess " + std::to_string(ex) + " exceeds " + std::to_string(m.param);
        if (!l.empty() && l.back() == 1)
            return "word ends in Sq^1, which kills iprime";
        break;
    case ModuleKind::SubI:
        if (ex > m.param)
            return "excess " + std::to_string(ex) + " exceeds " + std::to_string(m.param);
        if (!has_odd_entry(l))
            return "SubI labels need an odd entry";
        break;
    case ModuleKind::WedgeF1:
        break;
    }
    return {};
}

int label_degree(const ModuleId& m, const Label& l)
{
    if (m.kind == ModuleKind::WedgeF1)
        return wedge_degree(l);
    return m.param + std::accumulate(l.begin(), l.end(), 0);
}

ModuleElement::ModuleElement(ModuleId module, int degree, std::vector<Label> labels)
    : module_(module), degree_(degree)
{
    for (const auto& l : labels) {
        if (auto why = label_violation(module, l); !why.empty())
            throw std::invalid_argument("invalid label for " + module.to_string() + ": " + why);
        if (label_degree(module, l) != degree)
            throw std::invalid_argument("label degree does not match element degree");
    }
    cancel_pairs(labels);
    labels_ = std::move(labels);
}

ModuleElement ModuleElement::generator(const ModuleId& m)
{
    if (!m.is_cyclic())
        throw std::invalid_argument(m.to_string() + " has no single generator");
    return make_canonical(m, m.param, {Label{}});
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& other)
{
    if (other.module_ != module_)
        throw std::invalid_argument("module mismatch in sum");
    if (other.is_zero())
        return *this;
    if (is_zero()) {
        *this = other;
        return *this;
    }
    if (other.degree_ != degree_)
        throw std::invalid_argument("degree mismatch in sum");
    std::vector<Label> merged;
    std::set_symmetric_difference(labels_.begin(), labels_.end(), other.labels_.begin(),
                                  other.labels_.end(), std::back_inserter(merged));
    labels_ = std::move(merged);
    return *this;
}

std::string ModuleElement::to_string() const
{
    if (labels_.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i)
            os << " + ";
        const auto& l = labels_[i];
        if (module_.kind == ModuleKind::WedgeF1) {
            os << "w(";
            for (std::size_t j = 0; j < l.size(); ++j)
                os << (j ? "," : "") << (1 << l[j]);
            os << ")";
            continue;
        }
        if (!l.empty()) {
            os << "Sq(";
            for (std::size_t j = 0; j < l.size(); ++j)
                os << (j ? "," : "") << l[j];
            os << ")*";
        }
        os << generator_name(module_.kind) << "(" << module_.param << ")";
    }
    return os.str();
}

std::vector<Label> basis(const ModuleId& m, int d)
{
    std::vector<Label> out;
    if (m.kind == ModuleKind::WedgeF1) {
        if (d > 0 && std::popcount(static_cast<unsigned>(d)) == m.param) {
            Label l;
            for (int a = 0; a < 31; ++a)
                if (d & (1 << a))
                    l.push_back(a);
            out.push_back(std::move(l));
        }
        return out;
    }
    const int inner = d - m.param;
    if (inner < 0)
        return out;
    for (const auto& mono : admissible_monomials(inner))
        if (keeps(m, mono.entries()))
            out.push_back(mono.entries());
    return out;
}

int dimension(const ModuleId& m, int d)
{
    return static_cast<int>(basis(m, d).size());
}

ModuleElement act(const SteenrodElement& a, const ModuleElement& x)
{
    if (a.is_zero())
        return ModuleElement(x.module(), x.degree());
    const int da = *a.degree();
    const ModuleId& m = x.module();
    std::vector<Label> out;
    if (m.kind == ModuleKind::WedgeF1) {
        for (const auto& mono : a.terms()) {
            for (Label l : x.labels()) {
                bool alive = true;
                const auto& e = mono.entries();
                for (auto it = e.rbegin(); it != e.rend() && alive; ++it)
                    alive = square_wedge(*it, l);
                if (alive)
                    out.push_back(std::move(l));
            }
        }
        return make_canonical(m, x.degree() + da, std::move(out));
    }
    const ModuleId ambient =
        m.kind == ModuleKind::SubI ? ModuleId{ModuleKind::Free, m.param} : m;
    for (const auto& mono : a.terms()) {
        for (const auto& l : x.labels()) {
            std::vector<int> word = mono.entries();
            word.insert(word.end(), l.begin(), l.end());
            const auto reduced = adem_reduce(word);
            for (const auto& r : reduced.terms())
                if (keeps(ambient, r.entries()))
                    out.push_back(r.entries());
        }
    }
    auto result = make_canonical(m, x.degree() + da, std::move(out));
    if (m.kind == ModuleKind::SubI) {
        for (const auto& l : result.labels())
            if (!has_odd_entry(l))
                throw std::logic_error("Steenrod action left " + m.to_string());
    }
    return result;
}

ModuleElement sq_zero(const ModuleElement& x)
{
    if (x.degree() < 0)
        throw std::invalid_argument("sq_zero needs a nonnegative degree");
    return act(SteenrodElement::sq(x.degree()), x);
}

ModuleElement sq_one(const ModuleElement& x)
{
    if (x.degree() < 1)
        throw std::invalid_argument("sq_one needs degree >= 1");
    return act(SteenrodElement::sq(x.degree() - 1), x);
}

PolyElement embed_polynomial(const ModuleElement& x)
{
    if (x.module().kind != ModuleKind::Free)
        throw std::invalid_argument("embed_polynomial needs a Free module element");
    const int n = x.module().param;
    const auto gen = PolyElement::product_of_variables(n);
    PolyElement out(n);
    for (const auto& l : x.labels())
        out += act_word_on_polynomial(l, gen);
    return out;
}

PolyElement wedge_polynomial(const ModuleElement& x)
{
    if (x.module().kind != ModuleKind::WedgeF1)
        throw std::invalid_argument("wedge_polynomial needs a WedgeF1 element");
    const int n = x.module().param;
    std::vector<PolyElement::Exponents> terms;
    for (const auto& l : x.labels()) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            PolyElement::Exponents e(n, 0);
            for (int j = 0; j < n; ++j)
                e[perm[j]] = 1 << l[j];
            terms.push_back(std::move(e));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return PolyElement(n, std::move(terms));
}

SteenrodElement milnor_product(int first, int last)
{
    SteenrodElement p = SteenrodElement::unit();
    for (int i = first; i <= last; ++i)
        p = p * milnor_q(i);
    return p;
}

ModuleElement omega(int n)
{
    if (n < 2)
        throw std::invalid_argument("omega(n) needs n >= 2");
    return act(milnor_product(0, n - 2), ModuleElement::generator(ModuleId::free(n)));
}

ModuleElement wedge_image(int n)
{
    Label l(n);
    std::iota(l.begin(), l.end(), 0);
    const auto m = ModuleId::wedge(n);
    return ModuleElement(m, label_degree(m, l), {l});
}

}  // namespace polygem
