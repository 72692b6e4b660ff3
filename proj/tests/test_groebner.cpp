#include "oracles.hpp"
#include "pfaffians/pfaffians.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace pfaffians;

namespace {

Monomial mono(std::initializer_list<std::pair<std::pair<int, int>, int>> entries)
{
    std::vector<Monomial::Entry> e;
    for (auto& [pt, exp] : entries)
        e.push_back({LatticePoint{pt.first, pt.second}, exp});
    return Monomial(std::move(e));
}

std::vector<Polynomial> generator_polynomials(const CogeneratorSpec& spec)
{
    std::vector<Polynomial> out;
    for (auto& g : natural_generators(spec))
        out.push_back(pfaffian_polynomial(g, spec.n));
    return out;
}

std::vector<Monomial> generator_adiags(const CogeneratorSpec& spec)
{
    std::vector<Monomial> out;
    for (auto& g : natural_generators(spec))
        out.push_back(adiag(g));
    return out;
}

} // namespace

TEST_CASE("normal form basics")
{
    auto f = pfaffian_polynomial(IndexTuple{1, 2, 3, 4}, 6);
    CHECK(normal_form(f, {f}).is_zero());
    CHECK(normal_form(Polynomial{}, {f}).is_zero());
    CHECK_THROWS_AS(normal_form(f, {Polynomial{}}), std::invalid_argument);

    // reduced polynomials keep no monomial divisible by a basis leading term
    auto g = pfaffian_polynomial(IndexTuple{1, 2, 3, 4, 5, 6}, 6);
    auto r = normal_form(g, {f});
    for (auto& t : r.terms())
        CHECK_FALSE(f.leading_term().monomial.divides(t.monomial));
    CHECK(normal_form(g - r, {f}).is_zero());
}

TEST_CASE("the witness element survives reduction by the natural generators")
{
    CogeneratorSpec spec(IndexTuple{1, 2, 4, 5}, 6);
    auto w = counterexample_witness(spec);
    auto r = normal_form(w.element, generator_polynomials(spec));
    REQUIRE_FALSE(r.is_zero());
    CHECK(initial_monomial(r) == mono({{{1, 5}, 1}, {{2, 4}, 1}, {{1, 3}, 1}}));
}

TEST_CASE("buchberger on a single polynomial")
{
    auto f = pfaffian_polynomial(IndexTuple{1, 2, 3, 4}, 5);
    auto comp = buchberger({f});
    REQUIRE(comp.computed_basis.size() == 1);
    CHECK(comp.computed_basis[0] == f.monic());
}

TEST_CASE("buchberger adds nothing for the G-Pfaffian [1,2,3,5]")
{
    CogeneratorSpec spec(IndexTuple{1, 2, 3, 5}, 6);
    auto comp = buchberger(generator_polynomials(spec));
    CHECK(monomial_span_equal(generator_adiags(spec), comp.leading_monomials()));
}

TEST_CASE("buchberger finds the new leading monomial for [1,2,4,5]")
{
    CogeneratorSpec spec(IndexTuple{1, 2, 4, 5}, 6);
    auto comp = buchberger(generator_polynomials(spec));
    auto lms = comp.leading_monomials();
    CHECK_FALSE(monomial_span_equal(generator_adiags(spec), lms));

    Monomial witness = mono({{{1, 5}, 1}, {{2, 4}, 1}, {{1, 3}, 1}});
    CHECK(std::count(lms.begin(), lms.end(), witness) >= 1);

    // the witness element is in the ideal: zero against the full basis,
    // nonzero against the generators alone
    auto w = counterexample_witness(spec);
    CHECK(normal_form(w.element, comp.computed_basis).is_zero());
    CHECK_FALSE(normal_form(w.element, generator_polynomials(spec)).is_zero());
}

TEST_CASE("computed bases self-certify")
{
    for (auto spec : {CogeneratorSpec(IndexTuple{1, 2, 4, 5}, 6),
                      CogeneratorSpec(IndexTuple{1, 3, 4, 6}, 6),
                      CogeneratorSpec(IndexTuple{1, 3, 5, 6}, 6)}) {
        auto gens = generator_polynomials(spec);
        auto comp = buchberger(gens);
        for (std::size_t i = 0; i < comp.computed_basis.size(); ++i)
            for (std::size_t j = i + 1; j < comp.computed_basis.size(); ++j) {
                auto s = s_polynomial(comp.computed_basis[i], comp.computed_basis[j]);
                CHECK(normal_form(s, comp.computed_basis).is_zero());
            }
        for (auto& g : gens)
            CHECK(normal_form(g, comp.computed_basis).is_zero());
    }
}

TEST_CASE("monomial span comparison")
{
    Monomial x12 = mono({{{1, 2}, 1}});
    Monomial x12x34 = mono({{{1, 2}, 1}, {{3, 4}, 1}});
    CHECK(monomial_span_equal({x12}, {x12, x12x34}));
    CHECK(monomial_span_equal({}, {}));
    CHECK_FALSE(monomial_span_equal({}, {x12}));
    CHECK_FALSE(monomial_span_equal({x12x34}, {x12}));

    CogeneratorSpec spec(IndexTuple{1, 3, 4, 6}, 6);
    std::vector<Polynomial> gens;
    for (auto& g : natural_generators(spec))
        gens.push_back(pfaffian_polynomial(g, 6));
    auto comp = buchberger(gens);
    CHECK(monomial_span_equal(generator_adiags(spec), comp.leading_monomials()));
}

TEST_CASE("budget exhaustion reports progress")
{
    CogeneratorSpec spec(IndexTuple{1, 2, 4, 5}, 6);
    BuchbergerLimits tight;
    tight.max_pairs = 1;
    try {
        buchberger(generator_polynomials(spec), tight);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.stats.pairs_reduced >= 1);
        CHECK(e.basis_size >= 4);
    }
}
