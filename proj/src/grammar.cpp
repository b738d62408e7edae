#include "polygem/grammar.hpp"

#include <bit>
#include <cctype>

namespace polygem {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<Term> terms()
    {
        skip_space();
        std::vector<Term> out;
        if (at_end())
            fail("empty expression");
        if (peek() == '0') {
            const std::size_t start = pos_;
            ++pos_;
            skip_space();
            if (!at_end())
                fail_at(start, "0 must stand alone");
            return out;
        }
        for (;;) {
            out.push_back(term());
            skip_space();
            if (at_end())
                return out;
            expect('+');
            skip_space();
        }
    }

private:
    Term term()
    {
        Term t;
        t.position = pos_;
        t.op = SteenrodElement::unit();
        t.literal_label = Label{};
        int words = 0;
        bool seen_one = false;
        for (;;) {
            if (peek() == '1' && !seen_one && words == 0) {
                ++pos_;
                seen_one = true;
            } else if (starts_with("Sq(")) {
                auto entries = word();
                for (int e : entries)
                    t.op_degree += e;
                t.op = t.op * adem_reduce(entries);
                t.literal_label = ++words == 1 && AdmissibleMonomial::is_admissible(entries)
                                      ? std::optional<Label>(entries)
                                      : std::nullopt;
            } else {
                if (seen_one)
                    fail("1 cannot multiply a generator");
                t.generator = generator();
                return t;
            }
            skip_space();
            if (at_end() || peek() != '*')
                return t;
            ++pos_;
            skip_space();
        }
    }

    std::vector<int> word()
    {
        const std::size_t start = pos_;
        pos_ += 3;
        auto entries = int_list();
        for (int e : entries)
            if (e <= 0)
                fail_at(start, "positive entries required in Sq(...)");
        return entries;
    }

    GeneratorRef generator()
    {
        const std::size_t start = pos_;
        std::string name;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(peek())))
            name += text_[pos_++];
        if (name.empty())
            fail("expected Sq(...), 1, or a generator");
        expect('(');
        const auto args = int_list();
        GeneratorRef g;
        if (name == "w") {
            Label l;
            for (int a : args) {
                if (a <= 0 || !std::has_single_bit(static_cast<unsigned>(a)))
                    fail_at(start, "w(...) entries must be powers of two");
                l.push_back(std::countr_zero(static_cast<unsigned>(a)));
            }
            g.module = ModuleId::wedge(static_cast<int>(args.size()));
            if (auto why = label_violation(g.module, l); !why.empty())
                fail_at(start, "invalid label for " + g.module.to_string() + ": " + why);
            g.wedge_label = std::move(l);
        } else {
            if (args.size() != 1)
                fail_at(start, name + "(...) takes one degree");
            const int n = args.front();
            if (n < 1)
                fail_at(start, "generator degree must be positive");
            try {
                if (name == "i")
                    g.module = ModuleId::free(n);
                else if (name == "ibar")
                    g.module = ModuleId::reduced_free(n);
                else if (name == "iprime")
                    g.module = ModuleId::prime(n);
                else if (name == "isub")
                    g.module = ModuleId::sub_i(n);
                else
                    fail_at(start, "unknown generator '" + name + "'");
            } catch (const ParseError&) {
                throw;
            } catch (const std::invalid_argument& e) {
                fail_at(start, e.what());
            }
        }
        skip_space();
        if (!at_end() && peek() == '#') {
            ++pos_;
            const std::size_t at = pos_;
            g.occurrence = integer();
            if (g.occurrence < 1)
                fail_at(at, "occurrence index must be >= 1");
        }
        return g;
    }

    std::vector<int> int_list()
    {
        std::vector<int> out;
        skip_space();
        out.push_back(integer());
        skip_space();
        while (!at_end() && peek() == ',') {
            ++pos_;
            skip_space();
            out.push_back(integer());
            skip_space();
        }
        expect(')');
        return out;
    }

    int integer()
    {
        const std::size_t start = pos_;
        bool negative = false;
        if (!at_end() && peek() == '-') {
            negative = true;
            ++pos_;
        }
        long v = 0;
        bool any = false;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_++] - '0');
            any = true;
            if (v > 1'000'000)
                fail_at(start, "integer too large");
        }
        if (!any)
            fail_at(start, "expected an integer");
        return static_cast<int>(negative ? -v : v);
    }

    void expect(char c)
    {
        if (at_end() || peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }
    [[noreturn]] void fail_at(std::size_t p, const std::string& what) const
    {
        throw ParseError(p, what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ModuleElement GeneratorRef::element() const
{
    if (module.kind == ModuleKind::WedgeF1)
        return ModuleElement(module, label_degree(module, wedge_label), {wedge_label});
    if (module.kind == ModuleKind::SubI)
        throw std::invalid_argument("isub(m) has no generator; give a label such as Sq(1)*isub(m)");
    return ModuleElement::generator(module);
}

std::vector<Term> parse_terms(std::string_view text)
{
    return Parser(text).terms();
}

ModuleElement evaluate(const Term& t)
{
    if (!t.generator)
        throw ParseError(t.position, "term has no generator");
    const auto& g = *t.generator;
    if (g.module.kind != ModuleKind::WedgeF1 && t.literal_label) {
        const Label& l = *t.literal_label;
        if (auto why = label_violation(g.module, l); !why.empty())
            throw ParseError(t.position, "invalid label for " + g.module.to_string() + ": " + why);
        return ModuleElement(g.module, label_degree(g.module, l), {l});
    }
    if (t.op.is_zero()) {
        const int base = g.module.kind == ModuleKind::WedgeF1
                             ? label_degree(g.module, g.wedge_label)
                             : g.module.param;
        return ModuleElement(g.module, base + t.op_degree);
    }
    try {
        return act(t.op, g.element());
    } catch (const std::invalid_argument& e) {
        throw ParseError(t.position, e.what());
    }
}

SteenrodElement parse_steenrod(std::string_view text)
{
    SteenrodElement sum;
    for (const auto& t : parse_terms(text)) {
        if (t.generator)
            throw ParseError(t.position, "expected a Steenrod element, found a module term");
        sum += t.op;
    }
    return sum;
}

ModuleElement parse_module_element(std::string_view text)
{
    const auto terms = parse_terms(text);
    if (terms.empty())
        throw ParseError(0, "0 has no module; name a generator");
    std::optional<ModuleElement> sum;
    for (const auto& t : terms) {
        if (!t.generator)
            throw ParseError(t.position, "term has no generator");
        if (t.generator->occurrence != 1)
            throw ParseError(t.position, "#k suffixes only apply inside input files");
        const auto x = evaluate(t);
        if (!sum) {
            sum = x;
            continue;
        }
        if (!(x.module() == sum->module()) || x.degree() != sum->degree())
            throw ParseError(t.position, "terms must share module and degree");
        *sum += x;
    }
    return *sum;
}

ParsedElement parse_element(std::string_view text)
{
    const auto terms = parse_terms(text);
    for (const auto& t : terms)
        if (t.generator)
            return parse_module_element(text);
    return parse_steenrod(text);
}

ModuleId parse_module_id(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        throw std::invalid_argument("expected Kind(n), got '" + std::string(text) + "'");
    const std::string kind(text.substr(0, open));
    const std::string arg(text.substr(open + 1, text.size() - open - 2));
    if (arg.empty() || arg.size() > 6 ||
        arg.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad module parameter '" + arg + "'");
    const int n = std::stoi(arg);
    if (kind == "Free")
        return ModuleId::free(n);
    if (kind == "ReducedFree")
        return ModuleId::reduced_free(n);
    if (kind == "Prime")
        return ModuleId::prime(n);
    if (kind == "SubI")
        return ModuleId::sub_i(n);
    if (kind == "WedgeF1")
        return ModuleId::wedge(n);
    throw std::invalid_argument("unknown module kind '" + kind + "'");
}

}  // namespace polygem
