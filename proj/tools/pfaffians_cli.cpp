// Command-line surface: exact Pfaffian algebra, tableau correspondences,
// cogenerated-ideal computations and the verification suites, all with JSON
// output on stdout and diagnostics on stderr.
//
// Exit codes: 0 success/verified, 1 invalid input, 2 verification violation.

#include "pfaffians/json_io.hpp"
#include "pfaffians/pfaffians.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace {

using namespace pfaffians;
using nlohmann::json;

constexpr int kExitVerificationFailed = 2;

IndexTuple parse_tuple(const std::string& csv)
{
    std::vector<int> v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        v.push_back(std::stoi(item));
    return IndexTuple(std::move(v));
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::vector<LatticePoint> grid_points(int n)
{
    std::vector<LatticePoint> grid;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            grid.push_back({i, j});
    return grid;
}

/// Squarefree divisibility oracle: the face supports no forbidden monomial.
bool oracle_face(const Face& z, const std::vector<Monomial>& forbidden)
{
    for (auto& m : forbidden) {
        bool divides = true;
        for (auto& [p, e] : m.entries())
            if (!z.contains(p)) {
                divides = false;
                break;
            }
        if (divides)
            return false;
    }
    return true;
}

struct GBasisOutcome {
    json report;
    bool verified = false;
};

GBasisOutcome run_gbasis_check(const CogeneratorSpec& input)
{
    GBasisOutcome out;
    CogeneratorSpec spec = reduce_cogenerator(input);
    out.report["check"] = "gbasis";
    out.report["alpha"] = to_json(input.alpha);
    out.report["n"] = input.n;
    out.report["reduced_alpha"] = to_json(spec.alpha);
    out.report["reduced_n"] = spec.n;
    bool g = is_g_pfaffian(spec.alpha);
    out.report["g_pfaffian"] = g;

    auto gens = natural_generators(spec);
    std::vector<Polynomial> polys;
    std::vector<Monomial> adiags;
    for (auto& t : gens) {
        polys.push_back(pfaffian_polynomial(t, spec.n));
        adiags.push_back(adiag(t));
    }
    out.report["generator_count"] = gens.size();

    auto basis = buchberger(polys);
    out.report["basis_size"] = basis.computed_basis.size();
    out.report["pairs_reduced"] = basis.stats.pairs_reduced;
    bool span = monomial_span_equal(adiags, basis.leading_monomials());
    out.report["leading_span_equals_adiags"] = span;

    if (g) {
        bool families_ok =
            monomial_span_equal(initial_ideal_generators(spec, false), basis.leading_monomials()) &&
            monomial_span_equal(initial_ideal_generators(spec, true), basis.leading_monomials());
        out.report["initial_ideal_families_match"] = families_ok;
        out.verified = span && families_ok;
        out.report["verified"] = out.verified;
        return out;
    }

    // Not a G-Pfaffian: the natural generators cannot be a G-basis; emit the
    // constructive certificate.
    auto w = counterexample_witness(spec);
    json cert;
    cert["element"] = to_json(w.element);
    cert["witness_monomial"] = to_json(w.witness_monomial);
    cert["beta1"] = to_json(w.beta1);
    cert["gamma1"] = to_json(w.gamma1);
    cert["beta2"] = to_json(w.beta2);
    cert["gamma2"] = to_json(w.gamma2);
    cert["element_reduces_to_zero_against_basis"] =
        normal_form(w.element, basis.computed_basis).is_zero();
    bool escapes = true;
    for (auto& m : adiags)
        if (m.divides(w.witness_monomial))
            escapes = false;
    cert["witness_outside_generator_span"] = escapes;
    out.report["certificate"] = std::move(cert);
    out.verified = false;
    out.report["verified"] = false;
    return out;
}

int run_verify(const std::string& check, std::optional<CogeneratorSpec> spec, unsigned long seed,
               long samples, int max_entry, int max_cells, bool exhaustive)
{
    json report;
    report["check"] = check;
    report["seed"] = seed;

    auto need_spec = [&]() -> CogeneratorSpec {
        if (!spec)
            throw std::invalid_argument("verify --check " + check + " requires --alpha and --n");
        return *spec;
    };

    if (check == "gbasis") {
        auto out = run_gbasis_check(need_spec());
        emit(out.report);
        return out.verified ? 0 : kExitVerificationFailed;
    }

    if (check == "purity" || check == "ball" || check == "shelling") {
        CogeneratorSpec s = reduce_cogenerator(need_spec());
        report["reduced_alpha"] = to_json(s.alpha);
        report["reduced_n"] = s.n;
        auto facets = enumerate_facets(s);
        report["facet_count"] = facets.size();
        bool ok = false;
        if (check == "purity") {
            auto pr = verify_pure_and_dimension(s);
            int d = facet_cardinality_formula(s);
            report["pure"] = pr.pure;
            report["dimension"] = pr.dimension;
            report["formula_cardinality"] = d;
            ok = pr.pure && pr.dimension == d - 1;
        } else if (check == "ball") {
            ok = ball_certificate(facets);
            report["ball"] = ok;
        } else {
            auto order = shelling_order(facets);
            ok = verify_shelling(order);
            report["shelling"] = ok;
            json labels = json::array();
            for (auto& f : order)
                labels.push_back(json::array({f.h, f.k}));
            report["order"] = std::move(labels);
        }
        report["verified"] = ok;
        emit(report);
        return ok ? 0 : kExitVerificationFailed;
    }

    if (check == "face-oracle") {
        CogeneratorSpec s = reduce_cogenerator(need_spec());
        report["reduced_alpha"] = to_json(s.alpha);
        report["reduced_n"] = s.n;
        auto grid = grid_points(s.n);
        auto forbidden = initial_ideal_generators(s, false);
        long corpus = 0, disagreements = 0;
        json first_cert;
        auto compare = [&](const Face& z) {
            ++corpus;
            bool a = is_face(z, s);
            bool b = oracle_face(z, forbidden);
            if (a != b && disagreements++ == 0) {
                first_cert["subset"] = to_json(z);
                first_cert["is_face"] = a;
                first_cert["oracle"] = b;
            }
        };
        if (exhaustive) {
            if (grid.size() > 22)
                throw std::invalid_argument("face-oracle --exhaustive: grid too large, use samples");
            for (unsigned long long mask = 0; mask < (1ull << grid.size()); ++mask) {
                std::vector<LatticePoint> pts;
                for (std::size_t g = 0; g < grid.size(); ++g)
                    if (mask & (1ull << g))
                        pts.push_back(grid[g]);
                compare(Face(std::move(pts)));
            }
        } else {
            std::mt19937_64 rng(seed);
            const double densities[] = {0.15, 0.3, 0.5};
            for (long it = 0; it < samples; ++it) {
                double density = densities[it % 3];
                std::vector<LatticePoint> pts;
                for (auto p : grid)
                    if (std::uniform_real_distribution<>(0, 1)(rng) < density)
                        pts.push_back(p);
                compare(Face(std::move(pts)));
            }
        }
        report["corpus_size"] = corpus;
        report["disagreements"] = disagreements;
        if (disagreements > 0)
            report["certificate"] = first_cert;
        report["verified"] = disagreements == 0;
        emit(report);
        return disagreements == 0 ? 0 : kExitVerificationFailed;
    }

    if (check == "krs-square" || check == "width" || check == "roundtrip") {
        auto corpus = standard_d_tableaux(max_entry, max_cells);
        report["max_entry"] = max_entry;
        report["max_cells"] = max_cells;
        report["corpus_size"] = corpus.size();
        long violations = 0;
        json first_cert;
        std::map<std::vector<std::pair<int, int>>, const Tableau*> images;
        for (auto& t : corpus) {
            auto a = bkrs(t);
            bool ok = true;
            if (check == "krs-square") {
                ok = krs(t, t).monomial() == a.monomial() * a.monomial();
            } else if (check == "width") {
                ok = width(a) == t.length() / 2;
            } else {
                ok = bkrs_inverse(a) == t && !images.count(a.pairs);
                images[a.pairs] = &t;
            }
            if (!ok && violations++ == 0)
                first_cert["tableau"] = to_json(t);
        }
        report["violations"] = violations;
        if (violations > 0)
            report["certificate"] = first_cert;
        report["verified"] = violations == 0;
        emit(report);
        return violations == 0 ? 0 : kExitVerificationFailed;
    }

    if (check == "adiag") {
        auto tuples = all_index_tuples(max_entry, max_entry);
        report["max_entry"] = max_entry;
        report["corpus_size"] = tuples.size();
        long violations = 0;
        json first_cert;
        for (auto& t : tuples) {
            auto lt = initial_term(pfaffian_polynomial(t, max_entry));
            bool ok = lt.monomial == adiag(t) &&
                      (lt.coefficient == 1 || lt.coefficient == -1);
            if (!ok && violations++ == 0)
                first_cert["indices"] = to_json(t);
        }
        report["violations"] = violations;
        if (violations > 0)
            report["certificate"] = first_cert;
        report["verified"] = violations == 0;
        emit(report);
        return violations == 0 ? 0 : kExitVerificationFailed;
    }

    throw std::invalid_argument("unknown --check kind: " + check);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations for one-cogenerated Pfaffian ideals"};
    app.require_subcommand(1);

    std::string alpha_csv, indices_csv, tableau_json, tableau2_json, array_json, check_kind;
    int n = 0;
    int max_size = 0;
    bool minimal = false, count_only = false, exhaustive = false;
    unsigned long seed = 0;
    long samples = 100000;
    int max_entry = 6, max_cells = 8;
    std::size_t cap = 200000;

    auto* cmd_pf = app.add_subcommand("pfaffian", "Expand a Pfaffian into a polynomial");
    cmd_pf->add_option("--indices", indices_csv, "comma-separated index tuple")->required();
    cmd_pf->add_option("--n", n, "ambient matrix size")->required();

    auto* cmd_gen = app.add_subcommand("generators", "Natural generators of the cogenerated ideal");
    cmd_gen->add_option("--alpha", alpha_csv)->required();
    cmd_gen->add_option("--n", n)->required();
    cmd_gen->add_option("--max-size", max_size, "largest Pfaffian size (default 2t+2)");
    cmd_gen->add_option("--cap", cap, "candidate-count guard");

    auto* cmd_ini = app.add_subcommand("initial-ideal", "Initial-ideal generator families");
    cmd_ini->add_option("--alpha", alpha_csv)->required();
    cmd_ini->add_option("--n", n)->required();
    cmd_ini->add_flag("--minimal", minimal, "apply the minimality filters");

    auto* cmd_krs = app.add_subcommand("krs", "KRS of a standard bi-tableau (default (T,T))");
    cmd_krs->add_option("--tableau", tableau_json)->required();
    cmd_krs->add_option("--tableau2", tableau2_json);

    auto* cmd_bkrs = app.add_subcommand("bkrs", "Burge correspondence of a standard d-tableau");
    cmd_bkrs->add_option("--tableau", tableau_json)->required();

    auto* cmd_inv = app.add_subcommand("bkrs-inverse", "Tableau with the given BKRS image");
    cmd_inv->add_option("--array", array_json)->required();

    auto* cmd_fac = app.add_subcommand("facets", "Facets of the initial-ideal complex");
    cmd_fac->add_option("--alpha", alpha_csv)->required();
    cmd_fac->add_option("--n", n)->required();
    cmd_fac->add_flag("--count-only", count_only);
    cmd_fac->add_option("--cap", cap, "facet-count guard");

    auto* cmd_mult = app.add_subcommand("multiplicity", "Multiplicity via lattice-path determinants");
    cmd_mult->add_option("--alpha", alpha_csv)->required();
    cmd_mult->add_option("--n", n)->required();

    auto* cmd_cex = app.add_subcommand("counterexample", "G-basis failure witness");
    cmd_cex->add_option("--alpha", alpha_csv)->required();
    cmd_cex->add_option("--n", n)->required();

    auto* cmd_ver = app.add_subcommand("verify", "Verification suites");
    cmd_ver
        ->add_option("--check", check_kind,
                     "gbasis|purity|ball|shelling|face-oracle|krs-square|width|roundtrip|adiag")
        ->required();
    cmd_ver->add_option("--alpha", alpha_csv);
    cmd_ver->add_option("--n", n);
    cmd_ver->add_option("--seed", seed, "RNG seed for sampled checks");
    cmd_ver->add_option("--samples", samples, "sample count for face-oracle");
    cmd_ver->add_option("--max-entry", max_entry, "entry bound for tableau/adiag corpora");
    cmd_ver->add_option("--max-cells", max_cells, "cell bound for tableau corpora");
    cmd_ver->add_flag("--exhaustive", exhaustive, "scan all subsets in face-oracle");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_pf->parsed()) {
            IndexTuple t = parse_tuple(indices_csv);
            auto p = pfaffian_polynomial(t, n);
            json out;
            out["indices"] = to_json(t);
            out["n"] = n;
            out["polynomial"] = to_json(p);
            auto lt = initial_term(p);
            out["initial_term"]["coeff"] = lt.coefficient.str();
            out["initial_term"]["monomial"] = to_json(lt.monomial);
            emit(out);
        } else if (cmd_gen->parsed()) {
            CogeneratorSpec spec(parse_tuple(alpha_csv), n);
            auto gens = max_size > 0 ? natural_generators(spec, max_size, cap)
                                     : natural_generators(spec);
            json list = json::array();
            for (auto& g : gens)
                list.push_back(to_json(g));
            json out;
            out["alpha"] = to_json(spec.alpha);
            out["n"] = n;
            out["generators"] = std::move(list);
            emit(out);
        } else if (cmd_ini->parsed()) {
            CogeneratorSpec spec(parse_tuple(alpha_csv), n);
            auto gens = initial_ideal_generators(spec, minimal);
            json list = json::array();
            for (auto& m : gens)
                list.push_back(to_json(m));
            json out;
            out["alpha"] = to_json(spec.alpha);
            out["n"] = n;
            out["minimal"] = minimal;
            out["monomials"] = std::move(list);
            emit(out);
        } else if (cmd_krs->parsed()) {
            Tableau t1 = tableau_from_json(json::parse(tableau_json));
            Tableau t2 = tableau2_json.empty() ? t1 : tableau_from_json(json::parse(tableau2_json));
            auto a = krs(t1, t2);
            json out = to_json(a);
            out["monomial"] = to_json(a.monomial());
            emit(out);
        } else if (cmd_bkrs->parsed()) {
            Tableau t = tableau_from_json(json::parse(tableau_json));
            auto a = bkrs(t);
            json out = to_json(a);
            out["monomial"] = to_json(a.monomial());
            out["width"] = width(a);
            emit(out);
        } else if (cmd_inv->parsed()) {
            TwoLinedArray a = array_from_json(json::parse(array_json));
            emit(to_json(bkrs_inverse(a)));
        } else if (cmd_fac->parsed()) {
            CogeneratorSpec spec = reduce_cogenerator(CogeneratorSpec(parse_tuple(alpha_csv), n));
            auto facets = enumerate_facets(spec, cap);
            json out;
            out["alpha"] = json::parse("[" + alpha_csv + "]");
            out["n"] = n;
            out["reduced_alpha"] = to_json(spec.alpha);
            out["reduced_n"] = spec.n;
            out["count"] = facets.size();
            if (!count_only) {
                json list = json::array();
                for (auto& f : facets)
                    list.push_back(to_json(f));
                std::sort(list.begin(), list.end());
                out["facets"] = std::move(list);
            }
            emit(out);
        } else if (cmd_mult->parsed()) {
            CogeneratorSpec spec(parse_tuple(alpha_csv), n);
            emit(to_json(multiplicity_detailed(spec)));
        } else if (cmd_cex->parsed()) {
            CogeneratorSpec spec(parse_tuple(alpha_csv), n);
            auto w = counterexample_witness(spec);
            json out;
            out["alpha"] = to_json(spec.alpha);
            out["n"] = n;
            out["element"] = to_json(w.element);
            out["witness_monomial"] = to_json(w.witness_monomial);
            out["beta1"] = to_json(w.beta1);
            out["gamma1"] = to_json(w.gamma1);
            out["beta2"] = to_json(w.beta2);
            out["gamma2"] = to_json(w.gamma2);
            out["gap_index"] = w.gap_index;
            emit(out);
        } else if (cmd_ver->parsed()) {
            std::optional<CogeneratorSpec> spec;
            if (!alpha_csv.empty())
                spec = CogeneratorSpec(parse_tuple(alpha_csv), n);
            return run_verify(check_kind, spec, seed, samples, max_entry, max_cells, exhaustive);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
