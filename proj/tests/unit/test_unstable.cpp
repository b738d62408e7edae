#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "oracle.hpp"
#include "polygem/gf2.hpp"
#include "polygem/unstable.hpp"

using namespace polygem;

namespace {

ModuleElement el(ModuleId m, std::vector<Label> labels)
{
    const int d = label_degree(m, labels.front());
    return ModuleElement(m, d, std::move(labels));
}

// Rank of a family of polynomials, via their monomial supports.
std::size_t poly_rank(const std::vector<PolyElement>& polys)
{
    std::vector<PolyElement::Exponents> all;
    for (const auto& p : polys)
        all.insert(all.end(), p.monomials().begin(), p.monomials().end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<gf2::BitVec> vecs;
    for (const auto& p : polys) {
        gf2::BitVec v(all.size());
        for (const auto& m : p.monomials())
            v.set(static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), m) - all.begin()));
        vecs.push_back(v);
    }
    return gf2::rank(vecs, all.size());
}

}  // namespace

TEST_CASE("basis examples")
{
    CHECK(basis(ModuleId::free(2), 5) == std::vector<Label>{{2, 1}});
    CHECK(basis(ModuleId::free(2), 2) == std::vector<Label>{{}});
    CHECK(basis(ModuleId::sub_i(7), 8) == std::vector<Label>{{1}});
    CHECK(basis(ModuleId::free(2), 1).empty());
    CHECK(basis(ModuleId::sub_i(7), 7).empty());
    CHECK(basis(ModuleId::wedge(2), 3) == std::vector<Label>{{0, 1}});
    CHECK(basis(ModuleId::wedge(2), 7).empty());
}

TEST_CASE("action examples")
{
    const auto i2 = ModuleElement::generator(ModuleId::free(2));
    CHECK(act(SteenrodElement::sq(2), i2) == el(ModuleId::free(2), {{2}}));
    const auto ibar2 = ModuleElement::generator(ModuleId::reduced_free(2));
    CHECK(act(SteenrodElement::sq(2), ibar2).is_zero());
    const auto w = el(ModuleId::wedge(2), {{0, 1}});
    CHECK(act(SteenrodElement::sq(2), w) == el(ModuleId::wedge(2), {{0, 2}}));
    CHECK(act(SteenrodElement::sq(2), w).to_string() == "w(1,4)");
}

TEST_CASE("Sq_0 and Sq_1")
{
    const auto i2 = ModuleElement::generator(ModuleId::free(2));
    CHECK(sq_zero(i2) == el(ModuleId::free(2), {{2}}));
    CHECK(sq_zero(ModuleElement::generator(ModuleId::reduced_free(2))).is_zero());
    const auto w = el(ModuleId::wedge(2), {{0, 1}});
    CHECK(sq_one(w) == el(ModuleId::wedge(2), {{0, 2}}));
    CHECK_THROWS_AS(sq_one(ModuleElement(ModuleId::free(1), 0)), std::invalid_argument);
}

TEST_CASE("polynomial embedding examples")
{
    const auto f2 = ModuleId::free(2);
    CHECK(embed_polynomial(ModuleElement::generator(f2)) == PolyElement::monomial({1, 1}));
    CHECK(embed_polynomial(el(f2, {{1}})) == PolyElement(2, {{2, 1}, {1, 2}}));
    // Sq^2 (x1^2 x2 + x1 x2^2) = x1^4 x2 + x1 x2^4 by Cartan.
    CHECK(embed_polynomial(el(f2, {{2, 1}})) == PolyElement(2, {{4, 1}, {1, 4}}));
    CHECK_THROWS_AS(embed_polynomial(ModuleElement::generator(ModuleId::prime(2))),
                    std::invalid_argument);
}

TEST_CASE("omega and its wedge realization")
{
    CHECK(omega(2) == el(ModuleId::free(2), {{1}}));
    CHECK(wedge_image(2).to_string() == "w(1,2)");
    // |Q_i| = 2^{i+1} - 1, so |omega(n)| = n + sum_{i<n-1} (2^{i+1} - 1) = 2^n - 1.
    CHECK(omega(3).degree() == 7);
    CHECK(omega(4).degree() == 15);
    for (int n = 2; n <= 4; ++n) {
        CHECK_FALSE(omega(n).is_zero());
        CHECK(embed_polynomial(omega(n)) == wedge_polynomial(wedge_image(n)));
    }
    CHECK_THROWS_AS(omega(1), std::invalid_argument);
}

TEST_CASE("faithfulness of the polynomial embedding")
{
    for (int n = 1; n <= 4; ++n) {
        for (int d = n; d <= 16; ++d) {
            std::vector<PolyElement> images;
            const auto m = ModuleId::free(n);
            for (const auto& l : basis(m, d))
                images.push_back(embed_polynomial(ModuleElement(m, d, {l})));
            CHECK(poly_rank(images) == images.size());
        }
    }
}

TEST_CASE("Free-module action is equivariant under the embedding")
{
    for (int n = 1; n <= 3; ++n) {
        const auto m = ModuleId::free(n);
        for (int d = n; d <= n + 6; ++d) {
            for (const auto& l : basis(m, d)) {
                const ModuleElement x(m, d, {l});
                for (int k = 1; k <= 6; ++k)
                    CHECK(embed_polynomial(act(SteenrodElement::sq(k), x)) ==
                          apply_square(k, embed_polynomial(x)));
            }
        }
    }
}

TEST_CASE("Sq_0 is injective on Free(n) and cuts out ReducedFree(n)")
{
    for (int n = 1; n <= 5; ++n) {
        const auto m = ModuleId::free(n);
        for (int d = n; d <= 12; ++d) {
            std::vector<Label> images;
            for (const auto& l : basis(m, d)) {
                const auto s = sq_zero(ModuleElement(m, d, {l}));
                REQUIRE(s.labels().size() == 1);
                images.push_back(s.labels().front());
            }
            std::sort(images.begin(), images.end());
            CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
        }
        for (int d = n; d <= 24; ++d) {
            const int image = d % 2 == 0 ? dimension(m, d / 2) : 0;
            CHECK(dimension(ModuleId::reduced_free(n), d) == dimension(m, d) - image);
        }
    }
}

TEST_CASE("Prime modules")
{
    for (int n = 2; n <= 5; ++n) {
        const auto p = ModuleId::prime(n);
        CHECK(act(SteenrodElement::sq(1), ModuleElement::generator(p)).is_zero());
        for (int d = n; d <= 20; ++d) {
            int ending_in_one = 0;
            for (const auto& l : basis(ModuleId::free(n), d))
                ending_in_one += (!l.empty() && l.back() == 1) ? 1 : 0;
            CHECK(dimension(p, d) == dimension(ModuleId::free(n), d) - ending_in_one);
        }
    }
    // Sq^1 Sq^2 = Sq^3 survives on iprime_3 while Sq^2 Sq^1 does not.
    const auto ip3 = ModuleElement::generator(ModuleId::prime(3));
    CHECK(act(SteenrodElement::sq(1) * SteenrodElement::sq(2), ip3).to_string() ==
          "Sq(3)*iprime(3)");
    CHECK(act(SteenrodElement::sq(2) * SteenrodElement::sq(1), ip3).is_zero());
}

TEST_CASE("SubI is closed under the action")
{
    for (int m : {3, 5, 7}) {
        const auto sub = ModuleId::sub_i(m);
        for (int d = m + 1; d <= m + 12; ++d)
            for (const auto& l : basis(sub, d))
                for (int k = 1; k <= 8; ++k)
                    CHECK_NOTHROW(act(SteenrodElement::sq(k), ModuleElement(sub, d, {l})));
    }
    CHECK_THROWS_AS(ModuleElement(ModuleId::sub_i(7), 9, {{2}}), std::invalid_argument);
}

TEST_CASE("wedge action matches the antisymmetrized polynomials")
{
    for (int n = 1; n <= 3; ++n) {
        const auto w = ModuleId::wedge(n);
        for (int d = 1; d <= 40; ++d) {
            for (const auto& l : basis(w, d)) {
                const ModuleElement x(w, d, {l});
                for (int k = 1; k <= 12; ++k)
                    CHECK(wedge_polynomial(act(SteenrodElement::sq(k), x)) ==
                          apply_square(k, wedge_polynomial(x)));
            }
        }
    }
}

TEST_CASE("iterated Sq_1 never vanishes on u ^ u^2 ^ ... ^ u^{2^{n-1}}")
{
    for (int n = 2; n <= 4; ++n) {
        auto x = wedge_image(n);
        for (int r = 0; r <= 20; ++r) {
            CHECK_FALSE(x.is_zero());
            x = sq_one(x);
        }
    }
}

TEST_CASE("element validation")
{
    CHECK_THROWS_AS(ModuleElement(ModuleId::free(2), 4, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(ModuleElement(ModuleId::free(2), 5, {{3}}), std::invalid_argument);
    CHECK_THROWS_AS(ModuleElement(ModuleId::prime(3), 4, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(ModuleElement::generator(ModuleId::free(2)) +
                        ModuleElement::generator(ModuleId::free(3)),
                    std::invalid_argument);
    CHECK(label_violation(ModuleId::free(2), {2, 2}).find("admissible") != std::string::npos);
    CHECK(label_violation(ModuleId::free(2), {4}).find("excess") != std::string::npos);
}
