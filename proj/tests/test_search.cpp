#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "isospec/error.hpp"
#include "isospec/search.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace isospec;

namespace {

const SpaceKind S3 = SpaceKind::make(SpaceType::OddSphere, 2);
const SpaceKind S5 = SpaceKind::make(SpaceType::OddSphere, 3);
const SpaceKind HP = SpaceKind::make(SpaceType::HP1, 2);

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string table1_markdown()
{
    std::string out;
    for (int n = 2; n <= 4; ++n) {
        const auto space = SpaceKind::make(SpaceType::OddSphere, n);
        out += family_report(search({space, 1, 7, UMode::Twisted, 2, 1}), space, true, ReportFormat::Markdown);
    }
    return out;
}

} // namespace

TEST_SUITE("search") {

TEST_CASE("theta equality examples")
{
    const auto D2 = GroupFamily::make(FamilyKind::D, 2);
    const auto D3 = GroupFamily::make(FamilyKind::D, 3);
    const auto a = CongruenceLattice::make(D2, {4, {0, 1}, 1});
    const auto b = CongruenceLattice::make(D2, {4, {1, 2}, 1});
    CHECK(theta_equal(a, b));
    CHECK(theta_equal(a, a));
    CHECK_FALSE(theta_equal(CongruenceLattice::make(D3, {11, {1, 2, 3}, 0}),
                            CongruenceLattice::make(D3, {13, {1, 2, 3}, 0})));
    CHECK_THROWS_AS(theta_equal(a, CongruenceLattice::make(D3, {4, {0, 1, 1}, 1})), Error);
}

TEST_CASE("isospectral pairs from the tables")
{
    CHECK(is_isospectral(S5, {11, {1, 2, 3}, 0}, {11, {1, 2, 4}, 0}));
    CHECK(is_isospectral(HP, {12, {1, 2}, 0}, {12, {1, 4}, 0}));
    CHECK(is_isospectral(SpaceKind::make(SpaceType::CPn, 2), {6, {0, 1, 5}, 0}, {6, {1, 2, 3}, 0}));
    CHECK(is_isospectral(S5, {11, {1, 2, 3}, 0}, {11, {1, 2, 5}, 0})); // (1,2,5) is conjugate to (1,2,4)
    CHECK_FALSE(is_isospectral(S5, {11, {1, 2, 3}, 0}, {11, {1, 1, 2}, 0}));
}

TEST_CASE("untwisted S^5 search reproduces the n = 3 block of the table")
{
    const auto found = search({S5, 1, 15, UMode::Untwisted, 2, 0});
    const std::vector<IsospectralFamily> expected = {
        {S5, 11, {{{1, 2, 3}, 0}, {{1, 2, 4}, 0}}},
        {S5, 13, {{{1, 2, 3}, 0}, {{1, 2, 4}, 0}}},
        {S5, 13, {{{1, 2, 5}, 0}, {{1, 3, 4}, 0}}},
        {S5, 15, {{{1, 2, 6}, 0}, {{1, 3, 4}, 0}}},
    };
    REQUIRE(found.size() == expected.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        CHECK(found[i].q == expected[i].q);
        std::vector<FamilyMember> canon;
        for (const auto& m : expected[i].members) {
            canon.push_back({canonical_form(S5.family(), expected[i].q, m.s), 0});
        }
        std::sort(canon.begin(), canon.end());
        CHECK(found[i].members == canon);
    }
}

TEST_CASE("no untwisted isospectral pairs on S^3 and S^4 for small q")
{
    CHECK(search({S3, 1, 40, UMode::Untwisted, 2, 0}).empty());
    CHECK(search({SpaceKind::make(SpaceType::EvenSphere, 2), 1, 40, UMode::Untwisted, 2, 0}).empty());
}

TEST_CASE("tables that reproduce exactly")
{
    CHECK(verify_table(1).ok());
    CHECK(verify_table(5).ok());
    CHECK(verify_table(2, 11).ok());
    CHECK(verify_table(6, 19).ok());
}

TEST_CASE("search output is sorted and independent of the thread count")
{
    const SearchConfig one{S5, 1, 15, UMode::Twisted, 2, 1};
    SearchConfig many = one;
    many.threads = 4;
    const auto a = search(one);
    CHECK(a == search(many));
    for (std::size_t i = 1; i < a.size(); ++i) {
        CHECK((a[i - 1].q < a[i].q || (a[i - 1].q == a[i].q && a[i - 1].members < a[i].members)));
    }
}

TEST_CASE("duality between even and odd spheres")
{
    CHECK(duality_check(2, 7, UMode::Twisted));
    CHECK(duality_check(3, 15, UMode::Untwisted));
}

TEST_CASE("search completeness against all raw parameter pairs")
{
    // Brute force: every raw (s, u) against every other with enumeration-engine
    // theta series; the classes must be the search families after canonicalizing.
    for (const auto& space : {SpaceKind::make(SpaceType::CPn, 2), SpaceKind::make(SpaceType::EvenSphere, 1),
                              SpaceKind::make(SpaceType::EvenSphere, 2), HP, S3}) {
        const GroupFamily family = space.family();
        const auto kind = props::kind_of(family.kind);
        for (std::int64_t q = 1; q <= 6; ++q) {
            for (const auto mode : {UMode::Untwisted, UMode::Twisted}) {
                const std::size_t terms = 2 * static_cast<std::size_t>(family.n + 1) * static_cast<std::size_t>(q);
                std::map<std::vector<BigInt>, std::set<FamilyMember>> classes;
                for (const auto& s : oracle::raw_parameters(kind, q, family.n)) {
                    const auto full = oracle::full_exponents(kind, q, s);
                    const auto canon = canonical_form(family, q, s);
                    // L_{q, l s, l u} is isometric to L_{q, s, u}: find the units l
                    // carrying s onto its canonical form (up to order and signs).
                    std::vector<std::int64_t> carriers;
                    for (const std::int64_t l : units_mod(q)) {
                        std::vector<std::int64_t> image;
                        for (const auto v : full) {
                            const std::int64_t r = oracle::mod(l * v, q);
                            image.push_back(family.has_sign_symmetry() ? std::min(r, q - r) : r);
                        }
                        std::sort(image.begin(), image.end());
                        if (image == canon) {
                            carriers.push_back(l);
                        }
                    }
                    REQUIRE_FALSE(carriers.empty());
                    for (std::int64_t u = 0; u < q; ++u) {
                        if ((u == 0) != (mode == UMode::Untwisted)) {
                            continue;
                        }
                        const auto theta =
                            theta_truncated(lattice_for(space, {q, s, u}), terms, ThetaEngine::Enumerate).coeffs;
                        for (const auto l : carriers) {
                            const std::int64_t r = oracle::mod(l * u, q);
                            classes[theta].insert({canon, std::min(r, q - r)});
                        }
                    }
                }
                std::set<std::vector<FamilyMember>> expected;
                for (const auto& [theta, members] : classes) {
                    if (members.size() >= 2) {
                        expected.insert({members.begin(), members.end()});
                    }
                }
                std::set<std::vector<FamilyMember>> found;
                for (const auto& fam : search_order(space, q, mode)) {
                    found.insert(fam.members);
                }
                CAPTURE(space.name());
                CAPTURE(q);
                CHECK(found == expected);
            }
        }
    }
}

TEST_CASE("reports")
{
    CHECK(family_report({}, S3, true, ReportFormat::Markdown) == "| family | q | s | u |\n|---:|---:|:---|---:|\n");
    CHECK(family_report({}, S5, false, ReportFormat::Csv) == "family,q,s\n");
    CHECK(family_report({}, S5, false, ReportFormat::Json) == "[]\n");
    CHECK_THROWS_AS(parse_format("xml"), Error);
    CHECK(parse_format("md") == ReportFormat::Markdown);
}

TEST_CASE("JSON report follows the schema")
{
    const auto families = search({S5, 1, 15, UMode::Untwisted, 2, 0});
    const auto doc = nlohmann::json::parse(family_report(families, S5, false, ReportFormat::Json));
    REQUIRE(doc.is_array());
    std::int64_t last_q = 0;
    for (const auto& block : doc) {
        REQUIRE(block.is_object());
        CHECK(block.size() == 3);
        CHECK(block.at("space") == "s:5");
        CHECK(block.at("q").is_number_integer());
        CHECK(block.at("q").get<std::int64_t>() > last_q);
        last_q = block.at("q").get<std::int64_t>();
        REQUIRE(block.at("families").is_array());
        for (const auto& fam : block.at("families")) {
            CHECK(fam.size() == 1);
            REQUIRE(fam.at("members").is_array());
            CHECK(fam.at("members").size() >= 2);
            for (const auto& m : fam.at("members")) {
                CHECK(m.size() == 4);
                CHECK(m.at("s").is_array());
                CHECK(m.at("s").size() == 3);
                CHECK(m.at("u").is_number_integer());
                CHECK(m.at("manifold").is_boolean());
                CHECK(m.at("singularity_profile").is_array());
            }
        }
    }
    CHECK(last_q == 15);
    // q = 11: (1,2,3) and (1,2,4) act freely on S^5.
    CHECK(doc[0]["families"][0]["members"][0]["manifold"] == true);
}

TEST_CASE("Table 1 in Markdown matches the golden file")
{
    CHECK(table1_markdown() == read_file(std::string(ISOSPEC_GOLDEN_DIR) + "/table1.md"));
}

TEST_CASE("non-cyclic example")
{
    const auto checks = noncyclic_example_check();
    CHECK(checks.size() == 13);
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
    CHECK(noncyclic_code_c().words().size() == 8);
    CHECK(noncyclic_code_c_prime().words().size() == 8);
}

TEST_CASE("embedded tables")
{
    CHECK(golden_tables().size() == 6);
    CHECK(golden_table(2).q_max == 15);
    CHECK(golden_table(6).q_max == 20);
    CHECK_THROWS(golden_table(7));
}

} // TEST_SUITE
