/// JSON codecs for the wire formats: monomials as [[i,j],e] lists sorted by
/// (i,j), polynomials as {"coeff","monomial"} lists, tableaux as column
/// lists, arrays as pair lists, facets as labelled sorted point lists.
#ifndef PFAFFIANS_JSON_IO_HPP
#define PFAFFIANS_JSON_IO_HPP

#include "pfaffians/complex.hpp"
#include "pfaffians/krs.hpp"
#include "pfaffians/multiplicity.hpp"
#include "pfaffians/polynomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>

namespace pfaffians {

using nlohmann::json;

inline json to_json(const Monomial& m)
{
    auto entries = m.entries();
    std::sort(entries.begin(), entries.end(),
              [](const Monomial::Entry& a, const Monomial::Entry& b) { return a.first < b.first; });
    json out = json::array();
    for (auto& [p, e] : entries)
        out.push_back(json::array({json::array({p.row, p.col}), e}));
    return out;
}

inline Monomial monomial_from_json(const json& j)
{
    std::vector<Monomial::Entry> entries;
    for (auto& item : j) {
        LatticePoint p{item.at(0).at(0).get<int>(), item.at(0).at(1).get<int>()};
        entries.push_back({p, item.at(1).get<int>()});
    }
    return Monomial(std::move(entries));
}

inline json to_json(const Polynomial& p)
{
    json out = json::array();
    for (auto& t : p.terms()) {
        json term;
        term["coeff"] = t.coefficient.str();
        term["monomial"] = to_json(t.monomial);
        out.push_back(std::move(term));
    }
    return out;
}

inline Polynomial polynomial_from_json(const json& j)
{
    std::vector<Term> terms;
    for (auto& item : j)
        terms.push_back(
            {Rational(item.at("coeff").get<std::string>()), monomial_from_json(item.at("monomial"))});
    return Polynomial::from_terms(std::move(terms));
}

inline json to_json(const Tableau& t)
{
    json out;
    out["columns"] = t.columns();
    return out;
}

inline Tableau tableau_from_json(const json& j)
{
    return Tableau(j.at("columns").get<std::vector<std::vector<int>>>());
}

inline json to_json(const TwoLinedArray& a)
{
    json pairs = json::array();
    for (auto& [u, v] : a.pairs)
        pairs.push_back(json::array({u, v}));
    json out;
    out["pairs"] = std::move(pairs);
    return out;
}

inline TwoLinedArray array_from_json(const json& j)
{
    TwoLinedArray a;
    for (auto& item : j.at("pairs"))
        a.pairs.push_back({item.at(0).get<int>(), item.at(1).get<int>()});
    return a;
}

inline json to_json(const IndexTuple& t) { return json(t.idx); }

inline json to_json(const Face& f)
{
    json out = json::array();
    for (auto p : f.points)
        out.push_back(json::array({p.row, p.col}));
    return out;
}

inline json to_json(const FacetSpec& f)
{
    json out;
    out["h"] = f.h;
    out["k"] = f.k;
    out["points"] = to_json(f.face());
    return out;
}

inline json to_json(const MultiplicityResult& r)
{
    json terms = json::array();
    for (auto& t : r.terms) {
        json term;
        term["h"] = t.h;
        term["k"] = t.k;
        term["routes"] = t.routes.str();
        term["det"] = t.determinant.str();
        term["term"] = t.contribution.str();
        terms.push_back(std::move(term));
    }
    json out;
    out["multiplicity"] = r.value.str();
    out["reduced_alpha"] = to_json(r.reduced.alpha);
    out["reduced_n"] = r.reduced.n;
    out["terms"] = std::move(terms);
    return out;
}

} // namespace pfaffians

#endif
