// Acceptance runner: one PASS/FAIL line per criterion, details indented below.
// Usage: acceptance [criterion numbers...]

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "isospec/search.hpp"
#include "isospec/spectrum.hpp"
#include "isospec/theta.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace isospec;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(const std::string& why)
    {
        pass = false;
        if (details.size() < 40) {
            details.push_back(why);
        }
    }
    void note(const std::string& what) { details.push_back(what); }
};

std::string show(const std::vector<std::int64_t>& v) { return props::show(v); }

std::string show(const IsospectralFamily& fam, bool with_u)
{
    std::string out = fam.space.name() + " q=" + std::to_string(fam.q) + ":";
    for (const auto& m : fam.members) {
        out += " " + show(m.s);
        if (with_u) {
            out += " u=" + std::to_string(m.u);
        }
    }
    return out;
}

// 1. Tables 1-6, zero missing and zero extra families.
Outcome tables()
{
    Outcome o;
    for (int t = 1; t <= 6; ++t) {
        const auto diff = verify_table(t);
        const bool with_u = golden_table(t).mode == UMode::Twisted;
        std::ostringstream line;
        line << "table " << t << ": missing " << diff.missing.size() << ", extra " << diff.extra.size();
        if (diff.ok()) {
            o.note(line.str());
            continue;
        }
        o.fail(line.str());
        for (const auto& fam : diff.missing) {
            o.fail("  missing " + show(fam, with_u));
        }
        for (const auto& fam : diff.extra) {
            o.fail("  extra " + show(fam, with_u));
        }
    }
    return o;
}

// 2. No untwisted isospectral pairs on S^3 and S^4 for q <= 100.
Outcome negative_search()
{
    Outcome o;
    for (const auto type : {SpaceType::OddSphere, SpaceType::EvenSphere}) {
        const auto space = SpaceKind::make(type, 2);
        const auto found = search({space, 1, 100, UMode::Untwisted, 2, 0});
        for (const auto& fam : found) {
            o.fail("found " + show(fam, false));
        }
        if (found.empty()) {
            o.note(space.name() + ": no families for q <= 100");
        }
    }
    return o;
}

// 3. Enumeration == Ehrhart expansion == Zagier sum, depth 3(n+1)q.
Outcome oracle_triangle()
{
    Outcome o;
    std::mt19937_64 rng(1003);
    std::size_t compared = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto family = GroupFamily::make(FamilyKind::D, n);
        for (std::int64_t q = 1; q <= 8; ++q) {
            auto pool = oracle::raw_parameters(oracle::Kind::D, q, n);
            std::shuffle(pool.begin(), pool.end(), rng);
            pool.resize(std::min<std::size_t>(pool.size(), 20));
            const auto depth = static_cast<std::size_t>(3 * (n + 1) * q);
            for (const auto& s : pool) {
                const auto L = CongruenceLattice::make(family, {q, s, 0});
                const auto brute = theta_truncated(L, depth, ThetaEngine::Enumerate).coeffs;
                const auto ehrhart = ehrhart_form(L).expand(depth);
                const auto zagier = zagier_theta(q, s, depth).coeffs;
                if (brute != ehrhart || brute != zagier) {
                    o.fail("n=" + std::to_string(n) + " q=" + std::to_string(q) + " s=" + show(s));
                }
                ++compared;
            }
        }
    }
    o.note(std::to_string(compared) + " lattices compared");
    return o;
}

// 4. Trivial group on S^d: C(d+k, k) - C(d+k-2, k-2).
Outcome sphere_oracle()
{
    Outcome o;
    for (std::int64_t d = 3; d <= 9; ++d) {
        const auto space = parse_space("s:" + std::to_string(d));
        const auto L = lattice_for(space, {1, std::vector<std::int64_t>(static_cast<std::size_t>(space.n), 0), 0});
        const auto table = spectrum_table(L, space, 26);
        for (const auto& e : table.entries) {
            if (e.multiplicity != oracle::sphere_multiplicity(d, e.k)) {
                o.fail("d=" + std::to_string(d) + " k=" + std::to_string(e.k));
            }
            if (d == 3 && e.multiplicity != (e.k + 1) * (e.k + 1)) {
                o.fail("S^3 k=" + std::to_string(e.k) + " is not (k+1)^2");
            }
        }
    }
    return o;
}

// 5. Sum of weight multiplicities == Weyl dimension, all families, n <= 4, k <= 8.
Outcome dimension_identity()
{
    Outcome o;
    std::vector<GroupFamily> families{GroupFamily::make(FamilyKind::C2, 2)};
    for (int n = 1; n <= 4; ++n) {
        families.push_back(GroupFamily::make(FamilyKind::A, n));
        families.push_back(GroupFamily::make(FamilyKind::B, n));
        if (n >= 2) {
            families.push_back(GroupFamily::make(FamilyKind::D, n));
        }
    }
    for (const auto& family : families) {
        for (std::int64_t k = 0; k <= 8; ++k) {
            const BigInt weyl = weyl_dimension(family, k);
            if (full_lattice_dimension(family, k) != weyl) {
                o.fail(to_string(family) + " k=" + std::to_string(k));
            }
        }
    }
    o.note(std::to_string(families.size()) + " families, k = 0..8");
    return o;
}

// 6. Coefficients of F against the weight sum, 50 random instances.
Outcome generating_function()
{
    Outcome o;
    std::mt19937_64 rng(2024);
    const std::vector<SpaceKind> spaces{parse_space("cp:2"), parse_space("cp:3"), parse_space("s:4"),
                                        parse_space("s:6"),  parse_space("hp1"),  parse_space("s:3"),
                                        parse_space("s:5")};
    std::uniform_int_distribution<std::size_t> pick_space(0, spaces.size() - 1);
    std::uniform_int_distribution<std::int64_t> pick_q(1, 8);
    for (int instance = 0; instance < 50; ++instance) {
        const auto& space = spaces[pick_space(rng)];
        const GroupFamily family = space.family();
        const std::int64_t q = pick_q(rng);
        const auto s = oracle::random_parameters(props::kind_of(family.kind), q, space.n, rng);
        const std::int64_t u = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q));
        const auto L = lattice_for(space, {q, s, u});
        const auto levels = static_cast<std::size_t>(4 * (space.n + 1) * q + 1);
        const auto F = spectral_generating_series(L, space, levels);
        // Shell counts by enumeration; the weight multiplicity depends on the
        // weight only through its norm, so one representative per shell.
        const auto shells = theta_truncated(L, levels, ThetaEngine::Enumerate).coeffs;
        const std::size_t dim = family.ambient_dim();
        auto representative = [&](std::int64_t j) {
            Weight mu{std::vector<std::int64_t>(dim, 0)};
            mu.coords[0] = j;
            if (family.kind == FamilyKind::A) {
                mu.coords[1] = -j;
            } else if (family.kind == FamilyKind::C2) {
                mu.coords[1] = j;
            }
            return mu;
        };
        for (std::size_t k = 0; k < levels; ++k) {
            BigInt sum = 0;
            for (std::size_t j = 0; j <= k; ++j) {
                if (shells[j] != 0) {
                    sum += shells[j] * weight_multiplicity(family, static_cast<std::int64_t>(k),
                                                           representative(static_cast<std::int64_t>(j)));
                }
            }
            if (sum != F[k]) {
                o.fail(space.name() + " q=" + std::to_string(q) + " s=" + show(s) + " u=" + std::to_string(u) +
                       " k=" + std::to_string(k));
                break;
            }
        }
    }
    o.note("50 instances");
    return o;
}

// 7. S^{2n} and S^{2n-1} give the same families, n <= 4, q <= 10.
Outcome duality()
{
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
        for (const auto mode : {UMode::Untwisted, UMode::Twisted}) {
            if (!duality_check(n, 10, mode)) {
                o.fail("n=" + std::to_string(n) + (mode == UMode::Twisted ? " twisted" : " untwisted"));
            }
        }
    }
    return o;
}

// 8. Worked examples.
Outcome worked_examples()
{
    Outcome o;
    const auto D2 = GroupFamily::make(FamilyKind::D, 2);
    const auto C2 = GroupFamily::make(FamilyKind::C2, 2);
    if (!theta_equal(CongruenceLattice::make(D2, {4, {0, 1}, 1}), CongruenceLattice::make(D2, {4, {1, 2}, 1}))) {
        o.fail("L_{4,(0,1),1} vs L_{4,(1,2),1}");
    }
    for (std::int64_t q = 3; q <= 21; q += 2) {
        if (!theta_equal(CongruenceLattice::make(D2, {q, {1, 2}, 1}), CongruenceLattice::make(D2, {q, {1, 2}, 2}))) {
            o.fail("L_{q,(1,2),1} vs L_{q,(1,2),2} at q=" + std::to_string(q));
        }
    }
    if (!theta_equal(CongruenceLattice::make(C2, {4, {0, 1}, 0}, true), CongruenceLattice::make(C2, {4, {1, 2}, 0}, true))) {
        o.fail("D_2 cap L_{4,(0,1)} vs D_2 cap L_{4,(1,2)}");
    }
    return o;
}

// 9. Non-cyclic example in SO(12).
Outcome noncyclic()
{
    Outcome o;
    for (const auto& c : noncyclic_example_check()) {
        if (!c.pass) {
            o.fail(c.name + " (" + c.detail + ")");
        }
    }
    return o;
}

// 10. Property suites.
Outcome properties()
{
    Outcome o;
    const std::pair<const char*, std::function<props::Failures()>> suites[] = {
        {"conjugacy equivalence (q <= 8, n <= 3)", [] { return props::conjugacy_equivalence(8); }},
        {"u <-> q - u symmetry", [] { return props::u_symmetry(10, 2); }},
        {"twisted/untwisted non-mixing", [] { return props::non_mixing(10, 3); }},
        {"membership periodicity", [] { return props::membership_periodicity(12, 40); }},
        {"isometric implies isospectral", [] { return props::isometric_implies_isospectral(10, 3); }},
    };
    for (const auto& [name, suite] : suites) {
        const auto failures = suite();
        if (failures.empty()) {
            o.note(std::string(name) + ": green");
        } else {
            o.fail(std::string(name) + ": " + std::to_string(failures.size()) + " failures, first " + failures.front());
        }
    }
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"table reproduction (Tables 1-6, exact)", tables},
        {"negative search S^3/S^4 untwisted q <= 100", negative_search},
        {"oracle triangle q <= 8, n <= 4, depth 3(n+1)q", oracle_triangle},
        {"q = 1 sphere multiplicities d = 3..9, k <= 25", sphere_oracle},
        {"weight sums equal Weyl dimensions n <= 4, k <= 8", dimension_identity},
        {"generating function vs multiplicity sums, 50 instances", generating_function},
        {"S^{2n} / S^{2n-1} duality n <= 4, q <= 10", duality},
        {"worked examples", worked_examples},
        {"non-cyclic example", noncyclic},
        {"property suites", properties},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        only.insert(std::stoi(argv[i]));
    }
    int failed = 0;
    for (int i = 0; i < 10; ++i) {
        if (!only.empty() && !only.contains(i + 1)) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << (outcome.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
             << criteria[i].first << " [" << secs << " s]";
        std::cout << line.str() << '\n';
        for (const auto& d : outcome.details) {
            std::cout << "    " << d << '\n';
        }
        std::cout.flush();
        failed += outcome.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
