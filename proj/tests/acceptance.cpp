// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "support.hpp"

#include <hnambu/cli.hpp>
#include <hnambu/cohomology.hpp>
#include <hnambu/constructions.hpp>
#include <hnambu/derivations.hpp>
#include <hnambu/fixtures.hpp>
#include <hnambu/identities.hpp>

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace hnambu;
namespace fx = hnambu::fixtures;

namespace {

const std::string source_dir = HNAMBU_SOURCE_DIR;

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

using Golden = std::map<std::string, std::string>;

Golden read_golden() {
    Golden g;
    std::istringstream in(cli::read_file(source_dir + "/golden/oracle_values.txt"));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto colon = line.find(": ");
        if (colon == std::string::npos) continue;
        g[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return g;
}

std::string golden_at(const Golden& g, const std::string& key) {
    const auto it = g.find(key);
    if (it == g.end()) throw std::runtime_error("golden value '" + key + "' missing");
    return it->second;
}

const char* verdict(bool holds) { return holds ? "holds" : "fails"; }

std::vector<Vector> stacked_rows(std::initializer_list<const Matrix*> blocks) {
    std::vector<Vector> rows;
    for (const Matrix* m : blocks)
        for (std::size_t r = 0; r < m->rows(); ++r) {
            const auto row = m->row(r);
            rows.emplace_back(row.begin(), row.end());
        }
    return rows;
}

MultiLinearMap identity_map(std::size_t d) {
    MultiLinearMap m({d}, d);
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t t[] = {i};
        m.set(t, i, 1);
    }
    return m;
}

// ---------------------------------------------------------------------------

Outcome fixture_validity(const Golden&) {
    Outcome o;
    const auto leib = verify_leibniz(fx::leib2());
    o.require(leib.holds && leib.instances == 8, "leib2 Leibniz identity on 8 instances");
    const auto nambu = verify_hom_nambu(fx::nambu4());
    o.require(nambu.holds && nambu.instances == 1024 && fx::nambu4().has_identity_twists(),
              "nambu4 identity with alpha = id on 1024 instances");
    o.note("leib2 " + std::to_string(leib.instances) + " instances, nambu4 " + std::to_string(nambu.instances) +
           " instances");
    return o;
}

Outcome twists_as_theorems(const Golden&) {
    Outcome o;
    const auto leib = fx::leib2();
    std::size_t twisted = 0;
    for (const auto& [name, f] : fx::leib2_endomorphisms()) {
        if (!verify_morphism(f, leib, leib).holds) continue;
        const auto t = twist_by_endomorphism(leib, f);
        o.require(verify_multiplicative(t).holds && verify_hom_nambu(t).holds, "twist of leib2 by " + name);
        ++twisted;
    }
    const auto base = fx::leib2_twist();
    std::size_t composed = 0;
    for (const auto& [name, f] : fx::leib2_endomorphisms()) {
        if (!verify_morphism(f, base, base).holds) continue;
        const auto c = compose_twist(base, f);
        o.require(verify_multiplicative(c).holds && verify_hom_nambu(c).holds, "composition on leib2_twist by " + name);
        ++composed;
    }
    o.require(twisted > 0 && composed > 0, "at least one endomorphism in each family");
    o.note(std::to_string(twisted) + " twists of leib2, " + std::to_string(composed) + " compositions on leib2_twist");
    return o;
}

Outcome derivations_vs_oracle(const Golden& g) {
    Outcome o;
    const std::size_t leib_dim = derivation_space(fx::leib2(), 0).size();
    const std::size_t oracle_dim = oracle::derivation_dim(oracle::leib2(), 0);
    o.require(leib_dim == oracle_dim, "dim Der(leib2) agrees with the oracle");
    o.require(leib_dim == 3, "dim Der_{alpha^0}(leib2) = 3 as stated (library " + std::to_string(leib_dim) +
                                 ", oracle " + std::to_string(oracle_dim) + ")");
    for (const auto& alg : {fx::nambu4(), fx::leib2_twist()})
        for (std::size_t k = 0; k <= 2; ++k) {
            const std::string key = "der." + alg.name() + ".k" + std::to_string(k);
            o.require(std::to_string(derivation_space(alg, k).size()) == golden_at(g, key), key + " golden value");
        }
    o.note("dim Der_{alpha^0}(leib2) = " + std::to_string(leib_dim) + " (oracle " + std::to_string(oracle_dim) +
           "); nambu4 and leib2_twist k=0..2 reproduce the golden dims");
    return o;
}

Outcome graded_der_algebra(const Golden&) {
    Outcome o;
    std::size_t pairs = 0, jacobi = 0;
    for (const auto& alg : fx::catalog()) {
        const auto g = assemble_der_algebra(alg, 3);
        o.require(g.closure.holds, alg.name() + " commutator and twist closure");
        o.require(g.hom_lie.holds, alg.name() + " antisymmetry and Hom-Jacobi");
        pairs += g.closure.instances;
        jacobi += g.hom_lie.instances;
    }
    o.note(std::to_string(pairs) + " closure instances, " + std::to_string(jacobi) + " Hom-Lie instances");
    return o;
}

Outcome inner_derivations(const Golden&) {
    Outcome o;
    std::size_t generators = 0, ideal = 0;
    for (const auto& alg : fx::catalog()) {
        for (std::size_t k = 0; k <= 2; ++k)
            for (const auto& ad : inner_space(alg, k).generators) {
                o.require(is_derivation(alg, ad, k + 1), alg.name() + " ad_" + std::to_string(k) + " degree");
                ++generators;
            }
        const auto r = check_inn_ideal(alg, 2);
        o.require(r.holds, alg.name() + " [Der, Inn] in Inn");
        ideal += r.instances;
    }
    o.note(std::to_string(generators) + " generators, " + std::to_string(ideal) + " ideal instances");
    return o;
}

Outcome tensor_constructions(const Golden& g) {
    Outcome o;
    const auto h = tensor_hom_leibniz(fx::nambu4());
    const auto hr = verify_hom_nambu(h);
    o.require(h.dim() == 16 && hr.holds && hr.instances == 4096 && verify_multiplicative(h).holds,
              "tensor Hom-Leibniz square of nambu4 on 4096 instances");
    std::string first, second;
    for (int run = 0; run < 2; ++run) {
        std::ostringstream table;
        for (const auto& alg : fx::catalog()) {
            const bool plain = tensor_leibniz(alg).verdict.holds;
            table << alg.name() << " plain " << verdict(plain) << "\n";
            if (run == 0) o.require(verdict(plain) == golden_at(g, "tensor_plain." + alg.name()), "plain " + alg.name());
            const bool hom = verify_hom_nambu(tensor_hom_leibniz(alg)).holds;
            if (run == 0) o.require(verdict(hom) == golden_at(g, "tensor_hom." + alg.name()), "hom " + alg.name());
            for (std::size_t k = 1; k < alg.arity(); ++k) {
                if ((alg.arity() - 1) % k != 0) continue;
                const bool power = tensor_power_nary(alg, k, (alg.arity() - 1) / k).verdict.holds;
                table << alg.name() << " power k=" << k << " " << verdict(power) << "\n";
                const std::string key = "tensor_power." + alg.name() + ".k" + std::to_string(k);
                if (run == 0) o.require(verdict(power) == golden_at(g, key), key);
            }
        }
        (run == 0 ? first : second) = table.str();
    }
    o.require(first == second, "verdicts stable across runs");
    o.note(std::to_string(hr.instances) + " instances on the 16-dimensional square; verdicts match golden values");
    return o;
}

Outcome omega_calculus(const Golden&) {
    Outcome o;
    std::size_t lifts = 0, sums = 0, composites = 0;
    for (const auto& alg : fx::catalog()) {
        const std::size_t d = alg.dim();
        for (std::size_t k = 0; k <= 2; ++k) {
            const auto a = derivation_space(alg, k);
            const auto b = omega_derivation_space(d, alg.bracket(), alg.alpha(), k);
            o.require(a.basis == b.basis, alg.name() + " bracket-as-omega equality k=" + std::to_string(k));
        }
        // Lift to the tensor power.
        const std::size_t n = alg.arity() - 1;
        const Matrix twist = kron_power(alg.alpha(), n);
        for (std::size_t k = 0; k <= 1; ++k) {
            auto mu = mu_map(alg.bracket(), 1, k, alg.alpha());
            for (std::size_t i = 2; i <= n; ++i) mu = mu + mu_map(alg.bracket(), i, k, alg.alpha());
            for (const auto& f : omega_derivation_space(d, alg.bracket(), alg.alpha(), 0).basis) {
                o.require(is_omega_derivation(lift_phi(f, n), mu, twist, 0), alg.name() + " lift");
                ++lifts;
            }
        }
        // Composite omega(omega, id, .., id).
        std::vector<MultiLinearMap> parts{alg.bracket()};
        for (std::size_t p = 1; p < alg.arity(); ++p) parts.push_back(identity_map(d));
        const auto sigma = compose_omega(alg.bracket(), parts);
        for (std::size_t t = 0; t <= 2; ++t) {
            const auto nested = omega_derivation_space(d, sigma, alg.alpha(), t);
            for (const auto& f : derivation_space(alg, t).basis) {
                o.require(is_omega_derivation(f, sigma, alg.alpha(), t) && in_span(f.flattened(), nested.flattened()),
                          alg.name() + " composite membership");
                ++composites;
            }
        }
        // Sum closure against every other fixture of the same shape, sharing this twist.
        for (const auto& other : fx::catalog()) {
            if (other.dim() != d || other.arity() != alg.arity()) continue;
            const Matrix ca = derivation_constraints(alg.bracket(), alg.alpha(), 0);
            const Matrix cb = derivation_constraints(other.bracket(), alg.alpha(), 0);
            const auto rows = stacked_rows({&ca, &cb});
            const auto both = rows.empty() ? nullspace(Matrix(0, d * d)) : nullspace(Matrix::from_rows(d * d, rows));
            for (const auto& v : both) {
                o.require(sum_closure_check(Matrix::from_flat(d, d, v), alg.bracket(), other.bracket(), alg.alpha(), 0),
                          alg.name() + " + " + other.name() + " sum closure");
                ++sums;
            }
        }
    }
    o.note(std::to_string(lifts) + " lifts, " + std::to_string(sums) + " sum-closure maps, " +
           std::to_string(composites) + " composite memberships");
    return o;
}

Outcome extension_equivalence(const Golden&) {
    Outcome o;
    std::mt19937 rng(2024);
    std::size_t checked = 0, cocycles = 0;
    for (const auto& alg : {fx::leib2(), fx::nambu4()}) {
        const auto rep = trivial_representation(alg, 1);
        const std::size_t len = checked_pow(alg.dim(), alg.arity());
        std::vector<Vector> samples;
        for (std::size_t u = 0; u < len; ++u) samples.push_back(unit_vector(len, u));
        for (const auto& z : cocycle_space(alg, rep)) samples.push_back(z);
        for (int i = 0; i < 20; ++i) samples.push_back(support::random_vector(rng, len, 4));
        for (const auto& coords : samples) {
            const auto f = Cochain::from_coordinates(alg.dim(), alg.arity(), 1, coords);
            const bool cocycle = cocycle_residual(alg, rep, f).holds;
            const bool ext = verify_hom_nambu(semidirect_algebra(alg, rep, f)).holds;
            o.require(cocycle == ext, alg.name() + " cochain equivalence");
            ++checked;
            if (cocycle) ++cocycles;
        }
    }
    o.note(std::to_string(checked) + " cochains, " + std::to_string(cocycles) + " cocycles");
    return o;
}

Outcome cohomology(const Golden& g) {
    Outcome o;
    std::vector<std::pair<HomNambuAlgebra, Representation>> pairs;
    for (const auto& alg : fx::catalog()) {
        pairs.emplace_back(alg, trivial_representation(alg, 1));
        pairs.emplace_back(alg, adjoint_representation(alg));
    }
    pairs.emplace_back(fx::leib2(), fx::leib2_functional());
    pairs.emplace_back(fx::leib2(), fx::leib2_last_slot());
    std::size_t used = 0, skipped = 0, round_trips = 0, witnesses = 0;
    for (const auto& [alg, rep] : pairs) {
        if (!verify_representation(alg, rep).holds) {
            ++skipped;
            continue;
        }
        ++used;
        const auto s = cochain_spaces(alg, rep);
        for (const auto& b : s.b_basis) o.require(in_span(b, s.z_basis), alg.name() + "/" + rep.name + " B in Z");
        // Coboundaries of invariant maps h (h alpha_j = h) split back.
        const std::size_t d = alg.dim(), m = rep.module_dim;
        std::vector<Vector> rows;
        for (const auto& a : alg.twists())
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < d; ++c) {
                    Vector row(m * d);
                    for (std::size_t t = 0; t < d; ++t) row[r * d + t] += a(t, c);
                    row[r * d + c] -= 1;
                    rows.push_back(std::move(row));
                }
        for (const auto& hv : nullspace(Matrix::from_rows(m * d, rows))) {
            const auto f = coboundary(alg, rep, Matrix::from_flat(m, d, hv));
            const auto h = split_check(alg, rep, f);
            o.require(h && coboundary(alg, rep, *h) == f, alg.name() + "/" + rep.name + " split round trip");
            ++round_trips;
        }
        if (s.ext_dim > 0) {
            for (const auto& z : s.z_basis) {
                if (in_span(z, s.b_basis)) continue;
                const auto f = Cochain::from_coordinates(d, alg.arity(), m, z);
                o.require(!split_check(alg, rep, f).has_value(), alg.name() + "/" + rep.name + " Z\\B witness");
                ++witnesses;
                break;
            }
        }
    }
    const auto ab = fx::catalog().front();
    o.require(ab.name() == "abelian1_2" && ext_dimension(ab, trivial_representation(ab, 1)) == 1,
              "ext(abelian(1,2), trivial) = 1");
    for (const auto& alg : {fx::leib2(), fx::nambu4()}) {
        const auto s = cochain_spaces(alg, trivial_representation(alg, 1));
        const std::string got =
            std::to_string(s.z_basis.size()) + " " + std::to_string(s.b_basis.size()) + " " + std::to_string(s.ext_dim);
        o.require(got == golden_at(g, "cohomology." + alg.name() + ".trivial1"), alg.name() + " Z B ext golden");
    }
    o.note(std::to_string(used) + " module pairs (" + std::to_string(skipped) + " non-modules skipped), " +
           std::to_string(round_trips) + " split round trips, " + std::to_string(witnesses) + " non-split witnesses");
    return o;
}

struct CaseLine {
    std::string name;
    std::vector<std::string> args;
};

std::vector<CaseLine> read_cases() {
    std::vector<CaseLine> out;
    std::istringstream in(cli::read_file(source_dir + "/golden/cases.txt"));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto a = line.find('|'), b = line.find('|', a + 1);
        CaseLine c;
        std::istringstream name(line.substr(0, a));
        name >> c.name;
        std::istringstream args(line.substr(b + 1));
        c.args.push_back("hnambu");
        for (std::string w; args >> w;) c.args.push_back(w);
        out.push_back(std::move(c));
    }
    return out;
}

Outcome determinism(const Golden&) {
    Outcome o;
    const auto cases = read_cases();
    std::vector<std::string> runs[2];
    for (auto& run : runs)
        for (const auto& c : cases) {
            std::ostringstream out, err;
            const int status = cli::run(c.args, out, err);
            run.push_back(out.str() + err.str() + "exit " + std::to_string(status) + "\n");
        }
    std::size_t golden_checked = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        o.require(runs[0][i] == runs[1][i], cases[i].name + " identical across runs");
        std::string expected;
        try {
            expected = cli::read_file(source_dir + "/golden/" + cases[i].name + ".txt");
        } catch (const std::exception&) {
            continue;
        }
        std::ostringstream out, err;
        cli::run(cases[i].args, out, err);
        o.require(out.str() == expected, cases[i].name + " matches its golden report");
        ++golden_checked;
    }
    o.note(std::to_string(cases.size()) + " CLI cases run twice, " + std::to_string(golden_checked) +
           " compared with golden reports");
    return o;
}

}  // namespace

int main() {
    std::filesystem::current_path(source_dir);
    const Golden golden = read_golden();
    struct Criterion {
        int id;
        std::string title;
        double budget;  // seconds; 0 means none
        std::function<Outcome(const Golden&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "fixture validity", 1, fixture_validity},
        {2, "twisting by endomorphisms", 1, twists_as_theorems},
        {3, "derivation dimensions vs oracle", 5, derivations_vs_oracle},
        {4, "graded derivation algebra", 10, graded_der_algebra},
        {5, "inner derivations", 10, inner_derivations},
        {6, "tensor constructions", 30, tensor_constructions},
        {7, "omega-derivation calculus", 10, omega_calculus},
        {8, "cocycles and extensions", 30, extension_equivalence},
        {9, "cohomology", 30, cohomology},
        {10, "CLI determinism", 0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(golden);
        } catch (const std::exception& e) {
            o.ok = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget > 0 && secs > c.budget) o.require(false, "time budget exceeded");
        std::ostringstream time;
        time << std::fixed << std::setprecision(2) << secs << " s";
        if (c.budget > 0) time << " of " << c.budget << " s";
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << time.str() << ")";
        for (const auto& n : o.notes) std::cout << "; " << n;
        std::cout << std::endl;
        if (!o.ok) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
    return failed == 0 ? 0 : 1;
}
