#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isospec/spectrum.hpp"
#include "isospec/weight_lattice.hpp"

namespace isospec {

/// Compares theta series up to depth_factor * (n + 1) * q coefficients.
/// Lattices of different order are never isospectral.
bool theta_equal(const CongruenceLattice& a, const CongruenceLattice& b, int depth_factor = 2);

bool is_isospectral(const SpaceKind& space, const CyclicParams& a, const CyclicParams& b,
                    int depth_factor = 2);

enum class UMode { Untwisted, Twisted };

struct SearchConfig {
    SpaceKind space;
    std::int64_t q_min = 1;
    std::int64_t q_max = 1;
    UMode mode = UMode::Untwisted;
    int depth_factor = 2;
    unsigned threads = 0; // 0 picks std::thread::hardware_concurrency()
};

struct FamilyMember {
    std::vector<std::int64_t> s; // canonical form
    std::int64_t u = 0;

    auto operator<=>(const FamilyMember&) const = default;
};

struct IsospectralFamily {
    SpaceKind space;
    std::int64_t q = 1;
    std::vector<FamilyMember> members; // sorted

    bool operator==(const IsospectralFamily&) const = default;
};

/// Families for a single order q, sorted by first member.
std::vector<IsospectralFamily> search_order(const SpaceKind& space, std::int64_t q, UMode mode,
                                            int depth_factor = 2);

/// All families with q in [q_min, q_max]; ordered by q, then by members.
std::vector<IsospectralFamily> search(const SearchConfig& config);

/// Families of S^{2n} and S^{2n-1} agree as (q, members) lists.
bool duality_check(int n, std::int64_t q_max, UMode mode, unsigned threads = 0);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The two binary-code lattices in Z^6 and their almost-conjugate groups.
CodeLattice noncyclic_code_c();
CodeLattice noncyclic_code_c_prime();
std::vector<CheckResult> noncyclic_example_check();

enum class ReportFormat { Json, Csv, Markdown };

ReportFormat parse_format(std::string_view text);

/// Renders families; `with_u` selects the three-column layout of the twisted tables.
std::string family_report(const std::vector<IsospectralFamily>& families, const SpaceKind& space,
                           bool with_u, ReportFormat format);

// Embedded copies of the six tables of isospectral families.

struct GoldenTable {
    int number = 0;
    SpaceType space = SpaceType::OddSphere;
    std::vector<int> ranks;
    UMode mode = UMode::Untwisted;
    std::int64_t q_max = 1;
    std::vector<IsospectralFamily> families; // as printed, not canonicalized
};

const std::vector<GoldenTable>& golden_tables();
const GoldenTable& golden_table(int number);

struct TableDiff {
    std::vector<IsospectralFamily> missing; // in the table, not found
    std::vector<IsospectralFamily> extra;   // found, not in the table

    bool ok() const noexcept { return missing.empty() && extra.empty(); }
};

/// Runs the searches behind a table (q up to min(q_max, table range)) and
/// compares canonicalized families.
TableDiff verify_table(int number, std::int64_t q_max = 0, unsigned threads = 0);

} // namespace isospec
