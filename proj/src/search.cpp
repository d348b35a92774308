#include "isospec/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "isospec/error.hpp"
#include "isospec/theta.hpp"

namespace isospec {

namespace {

std::size_t comparison_terms(const GroupFamily& family, std::int64_t q, int depth_factor)
{
    if (depth_factor < 1) {
        throw Error(ErrorCode::InvalidArgument, "depth factor must be positive");
    }
    return static_cast<std::size_t>(depth_factor) * static_cast<std::size_t>(family.n + 1) *
           static_cast<std::size_t>(q);
}

std::uint64_t fingerprint(const std::vector<BigInt>& coeffs, std::size_t prefix)
{
    static const BigInt mask = (BigInt(1) << 64) - 1;
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < std::min(prefix, coeffs.size()); ++i) {
        h ^= static_cast<std::uint64_t>(BigInt(coeffs[i] & mask));
        h *= 1099511628211ULL;
    }
    return h;
}

unsigned resolve_threads(unsigned threads)
{
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    return threads;
}

std::vector<std::int64_t> characters(std::int64_t q, UMode mode)
{
    if (mode == UMode::Untwisted) {
        return {0};
    }
    std::vector<std::int64_t> us;
    for (std::int64_t u = 1; u <= q / 2; ++u) {
        us.push_back(u);
    }
    return us;
}

// Splits `members` into classes of equal theta series at the given depth.
std::vector<std::vector<std::size_t>> exact_classes(const std::vector<std::vector<BigInt>>& series,
                                                    const std::vector<std::size_t>& members)
{
    std::map<std::vector<BigInt>, std::vector<std::size_t>> classes;
    for (const auto idx : members) {
        classes[series[idx]].push_back(idx);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& [key, group] : classes) {
        out.push_back(std::move(group));
    }
    return out;
}

} // namespace

bool theta_equal(const CongruenceLattice& a, const CongruenceLattice& b, int depth_factor)
{
    if (a.family() != b.family() || a.even_sublattice() != b.even_sublattice()) {
        throw Error(ErrorCode::RankMismatch, "lattices belong to different families");
    }
    if (a.q() != b.q()) {
        return false;
    }
    const auto terms = comparison_terms(a.family(), a.q(), depth_factor);
    return theta_truncated(a, terms) == theta_truncated(b, terms);
}

bool is_isospectral(const SpaceKind& space, const CyclicParams& a, const CyclicParams& b,
                    int depth_factor)
{
    return theta_equal(lattice_for(space, a), lattice_for(space, b), depth_factor);
}

std::vector<IsospectralFamily> search_order(const SpaceKind& space, std::int64_t q, UMode mode,
                                            int depth_factor)
{
    const GroupFamily family = space.family();
    const auto terms = comparison_terms(family, q, depth_factor);
    const auto prefix = comparison_terms(family, q, 1);

    std::vector<FamilyMember> entries;
    std::vector<std::vector<BigInt>> series;
    for (const auto& s : enumerate_representatives(family, q)) {
        for (const std::int64_t u : characters(q, mode)) {
            const auto lattice = lattice_for(space, CyclicParams{q, s, u});
            entries.push_back({s, u});
            series.push_back(theta_truncated(lattice, terms).coeffs);
        }
    }

    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    std::vector<std::uint64_t> order; // first-seen order keeps the pass deterministic
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto key = fingerprint(series[i], prefix);
        auto [it, fresh] = buckets.try_emplace(key);
        if (fresh) {
            order.push_back(key);
        }
        it->second.push_back(i);
    }

    std::vector<IsospectralFamily> out;
    for (const auto key : order) {
        const auto& bucket = buckets[key];
        if (bucket.size() < 2) {
            continue;
        }
        for (const auto& group : exact_classes(series, bucket)) {
            if (group.size() < 2) {
                continue;
            }
            // Recheck at twice the comparison depth.
            std::vector<std::vector<BigInt>> deep(entries.size());
            for (const auto idx : group) {
                const auto lattice = lattice_for(space, CyclicParams{q, entries[idx].s, entries[idx].u});
                deep[idx] = theta_truncated(lattice, 2 * terms).coeffs;
            }
            for (const auto& confirmed : exact_classes(deep, group)) {
                if (confirmed.size() < 2) {
                    continue;
                }
                IsospectralFamily fam{space, q, {}};
                for (const auto idx : confirmed) {
                    fam.members.push_back(entries[idx]);
                }
                std::sort(fam.members.begin(), fam.members.end());
                out.push_back(std::move(fam));
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.members < y.members; });
    return out;
}

std::vector<IsospectralFamily> search(const SearchConfig& config)
{
    if (config.q_min < 1 || config.q_max < config.q_min) {
        throw Error(ErrorCode::InvalidArgument, "q range must satisfy 1 <= q_min <= q_max");
    }
    const auto count = static_cast<std::size_t>(config.q_max - config.q_min + 1);
    std::vector<std::vector<IsospectralFamily>> per_q(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    // Largest q first so the long jobs start early.
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            const std::size_t slot = count - 1 - i;
            try {
                per_q[slot] = search_order(config.space, config.q_min + static_cast<std::int64_t>(slot),
                                           config.mode, config.depth_factor);
            } catch (...) {
                const std::lock_guard<std::mutex> guard(failure_lock);
                failure = std::current_exception();
            }
        }
    };
    const unsigned threads = std::min<unsigned>(resolve_threads(config.threads),
                                                static_cast<unsigned>(count));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    std::vector<IsospectralFamily> out;
    for (auto& block : per_q) {
        for (auto& fam : block) {
            out.push_back(std::move(fam));
        }
    }
    return out;
}

bool duality_check(int n, std::int64_t q_max, UMode mode, unsigned threads)
{
    SearchConfig even{SpaceKind::make(SpaceType::EvenSphere, n), 1, q_max, mode, 2, threads};
    SearchConfig odd{SpaceKind::make(SpaceType::OddSphere, n), 1, q_max, mode, 2, threads};
    const auto a = search(even);
    const auto b = search(odd);
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].q != b[i].q || a[i].members != b[i].members) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Non-cyclic example in SO(12)
// ---------------------------------------------------------------------------

CodeLattice noncyclic_code_c()
{
    return CodeLattice::make(6, {{0, 0, 0, 0, 0, 0},
                                 {1, 1, 0, 0, 0, 0},
                                 {0, 0, 1, 1, 0, 0},
                                 {0, 0, 0, 0, 1, 1},
                                 {1, 1, 1, 1, 1, 1},
                                 {1, 1, 1, 1, 0, 0},
                                 {1, 1, 0, 0, 1, 1},
                                 {0, 0, 1, 1, 1, 1}});
}

CodeLattice noncyclic_code_c_prime()
{
    return CodeLattice::make(6, {{0, 0, 0, 0, 0, 0},
                                 {1, 1, 0, 0, 0, 0},
                                 {1, 0, 1, 0, 0, 0},
                                 {0, 1, 1, 0, 0, 0},
                                 {1, 1, 1, 1, 1, 1},
                                 {0, 1, 0, 1, 1, 1},
                                 {1, 0, 0, 1, 1, 1},
                                 {0, 0, 1, 1, 1, 1}});
}

namespace {

// Group elements are diagonal with blocks +-I_2; bit i set means block i is -I_2.
using Element = std::uint32_t;

Element block_mask(std::initializer_list<int> pattern)
{
    Element m = 0;
    int i = 0;
    for (const int b : pattern) {
        if (b < 0) {
            m |= 1U << i;
        }
        ++i;
    }
    return m;
}

// Eigenvalue multiset of an element of SO(12): each -I_2 block contributes -1 twice.
std::pair<int, int> eigenvalues(Element g)
{
    const int minus = 2 * std::popcount(g);
    return {12 - minus, minus};
}

std::string series_mismatch(const ThetaSeries& a, const ThetaSeries& b)
{
    for (std::size_t k = 0; k < std::min(a.terms(), b.terms()); ++k) {
        if (a.coeffs[k] != b.coeffs[k]) {
            return "first difference at index " + std::to_string(k);
        }
    }
    return "series agree";
}

} // namespace

std::vector<CheckResult> noncyclic_example_check()
{
    std::vector<CheckResult> out;
    const auto c = noncyclic_code_c();
    const auto cp = noncyclic_code_c_prime();

    auto compare = [&](const std::string& name, const CodeLattice& x, const CodeLattice& y,
                       Norm which, std::size_t terms) {
        const auto tx = theta_truncated(x, terms, which);
        const auto ty = theta_truncated(y, terms, which);
        out.push_back({name, tx == ty, series_mismatch(tx, ty)});
    };
    compare("one-norm theta to depth 60", c, cp, Norm::One, 61);
    compare("two-norm shells to squared norm 50", c, cp, Norm::Two, 51);
    // Lattices cut out by the characters of the generators: the duals of the spans.
    compare("generator lattices, one-norm theta to depth 60", c.dual(), cp.dual(), Norm::One, 61);
    compare("generator lattices, two-norm shells to squared norm 50", c.dual(), cp.dual(), Norm::Two, 51);

    const Element g1 = block_mask({-1, -1, 1, 1, 1, 1});
    const Element g2 = block_mask({1, 1, -1, -1, 1, 1});
    const Element g3 = block_mask({1, 1, 1, 1, -1, -1});
    const Element h1 = block_mask({-1, -1, 1, 1, 1, 1});
    const Element h2 = block_mask({-1, 1, -1, 1, 1, 1});
    const Element h3 = block_mask({-1, -1, -1, -1, -1, -1});

    struct Relation {
        const char* name;
        Element left;
        Element right;
        bool equal; // '=' in the relation rather than '~'
    };
    const Relation relations[] = {
        {"identity = identity'", 0, 0, true},
        {"g1 = g1'", g1, h1, true},
        {"g2 ~ g2'", g2, h2, false},
        {"g3 ~ g1'g2'", g3, h1 ^ h2, false},
        {"g1g2 ~ g2'g3'", g1 ^ g2, h2 ^ h3, false},
        {"g1g3 ~ g1'g2'g3'", g1 ^ g3, h1 ^ h2 ^ h3, false},
        {"g2g3 = g1'g3'", g2 ^ g3, h1 ^ h3, true},
        {"g1g2g3 = g3'", g1 ^ g2 ^ g3, h3, true},
    };
    std::vector<Element> left_seen;
    std::vector<Element> right_seen;
    for (const auto& r : relations) {
        const auto el = eigenvalues(r.left);
        const auto er = eigenvalues(r.right);
        const bool pass = el == er && (!r.equal || r.left == r.right);
        std::ostringstream detail;
        detail << "eigenvalue 1 x" << el.first << ", -1 x" << el.second << " vs 1 x" << er.first
               << ", -1 x" << er.second;
        out.push_back({std::string("almost conjugacy ") + r.name, pass, detail.str()});
        left_seen.push_back(r.left);
        right_seen.push_back(r.right);
    }
    std::sort(left_seen.begin(), left_seen.end());
    std::sort(right_seen.begin(), right_seen.end());
    const bool bijective = std::adjacent_find(left_seen.begin(), left_seen.end()) == left_seen.end() &&
                           std::adjacent_find(right_seen.begin(), right_seen.end()) == right_seen.end();
    out.push_back({"almost conjugacy pairing is a bijection", bijective,
                   "8 distinct elements on each side"});
    return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

ReportFormat parse_format(std::string_view text)
{
    if (text == "json") {
        return ReportFormat::Json;
    }
    if (text == "csv") {
        return ReportFormat::Csv;
    }
    if (text == "md" || text == "markdown") {
        return ReportFormat::Markdown;
    }
    throw Error(ErrorCode::UnknownFormat, "unknown format: " + std::string(text));
}

namespace {

std::string bracketed(const std::vector<std::int64_t>& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += std::to_string(s[i]);
    }
    return out + "]";
}

} // namespace

std::string family_report(const std::vector<IsospectralFamily>& families, const SpaceKind& space,
                          bool with_u, ReportFormat format)
{
    const GroupFamily family = space.family();
    std::ostringstream out;
    switch (format) {
    case ReportFormat::Json: {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& fam : families) {
            if (doc.empty() || doc.back()["q"] != fam.q) {
                doc.push_back({{"space", space.name()}, {"q", fam.q}, {"families", nlohmann::ordered_json::array()}});
            }
            nlohmann::ordered_json members = nlohmann::ordered_json::array();
            for (const auto& m : fam.members) {
                members.push_back({{"s", m.s},
                                   {"u", m.u},
                                   {"manifold", space.type == SpaceType::OddSphere &&
                                                    is_manifold(family, fam.q, m.s)},
                                   {"singularity_profile", singularity_profile(fam.q, m.s)}});
            }
            doc.back()["families"].push_back({{"members", members}});
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case ReportFormat::Csv:
        out << (with_u ? "family,q,s,u\n" : "family,q,s\n");
        for (std::size_t f = 0; f < families.size(); ++f) {
            for (const auto& m : families[f].members) {
                out << f + 1 << ',' << families[f].q << ",\"" << bracketed(m.s) << '"';
                if (with_u) {
                    out << ',' << m.u;
                }
                out << '\n';
            }
        }
        break;
    case ReportFormat::Markdown:
        out << (with_u ? "| family | q | s | u |\n|---:|---:|:---|---:|\n"
                       : "| family | q | s |\n|---:|---:|:---|\n");
        for (std::size_t f = 0; f < families.size(); ++f) {
            for (const auto& m : families[f].members) {
                out << "| " << f + 1 << " | " << families[f].q << " | " << bracketed(m.s) << " |";
                if (with_u) {
                    out << ' ' << m.u << " |";
                }
                out << '\n';
            }
        }
        break;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Table verification
// ---------------------------------------------------------------------------

namespace {

IsospectralFamily canonicalized(const IsospectralFamily& fam)
{
    IsospectralFamily out{fam.space, fam.q, {}};
    const GroupFamily family = fam.space.family();
    for (const auto& m : fam.members) {
        out.members.push_back({canonical_form(family, fam.q, m.s), m.u});
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

bool family_less(const IsospectralFamily& a, const IsospectralFamily& b)
{
    if (a.space.n != b.space.n) {
        return a.space.n < b.space.n;
    }
    if (a.q != b.q) {
        return a.q < b.q;
    }
    return a.members < b.members;
}

} // namespace

TableDiff verify_table(int number, std::int64_t q_max, unsigned threads)
{
    const GoldenTable& table = golden_table(number);
    const std::int64_t limit = q_max > 0 ? std::min(q_max, table.q_max) : table.q_max;
    std::vector<IsospectralFamily> expected;
    for (const auto& fam : table.families) {
        if (fam.q <= limit) {
            expected.push_back(canonicalized(fam));
        }
    }
    std::vector<IsospectralFamily> found;
    for (const int n : table.ranks) {
        const auto space = SpaceKind::make(table.space, n);
        for (auto& fam : search({space, 1, limit, table.mode, 2, threads})) {
            found.push_back(std::move(fam));
        }
    }
    std::sort(expected.begin(), expected.end(), family_less);
    std::sort(found.begin(), found.end(), family_less);
    TableDiff diff;
    std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(),
                        std::back_inserter(diff.missing), family_less);
    std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(),
                        std::back_inserter(diff.extra), family_less);
    return diff;
}

} // namespace isospec
