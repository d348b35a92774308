#include "isospec/search.hpp"

#include "isospec/error.hpp"

namespace isospec {

namespace {

IsospectralFamily family(SpaceType type, std::int64_t q, std::vector<FamilyMember> members)
{
    const int length = static_cast<int>(members.front().s.size());
    const int n = type == SpaceType::CPn ? length - 1 : length;
    return {SpaceKind::make(type, n), q, std::move(members)};
}

std::vector<GoldenTable> build()
{
    std::vector<GoldenTable> tables;

    // Table 1
    {
        GoldenTable t{1, SpaceType::OddSphere, {2, 3, 4}, UMode::Twisted, 7, {}};
        t.families.push_back(family(SpaceType::OddSphere, 4, {{{0, 1}, 1}, {{1, 2}, 1}}));
        t.families.push_back(family(SpaceType::OddSphere, 5, {{{0, 1}, 1}, {{1, 2}, 1}, {{1, 2}, 2}}));
        t.families.push_back(family(SpaceType::OddSphere, 7, {{{1, 2}, 1}, {{1, 2}, 2}}));
        t.families.push_back(family(SpaceType::OddSphere, 4, {{{0, 0, 1}, 1}, {{0, 1, 2}, 1}, {{1, 2, 2}, 1}}));
        t.families.push_back(family(SpaceType::OddSphere, 4, {{{0, 1, 1}, 1}, {{1, 1, 2}, 1}}));
        t.families.push_back(family(SpaceType::OddSphere, 5, {{{0, 0, 1}, 1}, {{0, 1, 2}, 1}, {{0, 1, 2}, 2}}));
        t.families.push_back(family(SpaceType::OddSphere, 7, {{{0, 1, 2}, 1}, {{0, 1, 2}, 2}, {{1, 2, 3}, 1}, {{1, 2, 3}, 2}, {{1, 2, 3}, 3}}));
        t.families.push_back(family(SpaceType::OddSphere, 4, {{{0, 0, 0, 1}, 1}, {{0, 0, 1, 2}, 1}, {{0, 1, 2, 2}, 1}, {{1, 2, 2, 2}, 1}}));
        t.families.push_back(family(SpaceType::OddSphere, 4, {{{0, 0, 1, 1}, 1}, {{0, 1, 1, 2}, 1}, {{1, 1, 2, 2}, 1}}));
        t.families.push_back(family(SpaceType::OddSphere, 4, {{{0, 1, 1, 1}, 1}, {{1, 1, 1, 2}, 1}}));
        t.families.push_back(family(SpaceType::OddSphere, 5, {{{0, 0, 0, 1}, 1}, {{0, 0, 1, 2}, 1}, {{0, 0, 1, 2}, 2}}));
        t.families.push_back(family(SpaceType::OddSphere, 5, {{{0, 1, 1, 2}, 1}, {{1, 1, 2, 2}, 1}, {{1, 1, 2, 2}, 2}}));
        t.families.push_back(family(SpaceType::OddSphere, 7, {{{1, 1, 2, 2}, 1}, {{1, 1, 2, 3}, 1}}));
        t.families.push_back(family(SpaceType::OddSphere, 7, {{{0, 0, 1, 2}, 1}, {{0, 0, 1, 2}, 2}, {{0, 1, 2, 3}, 1}, {{0, 1, 2, 3}, 2}, {{0, 1, 2, 3}, 3}}));
        tables.push_back(std::move(t));
    }

    // Table 2
    {
        GoldenTable t{2, SpaceType::OddSphere, {2, 3, 4, 5}, UMode::Untwisted, 15, {}};
        t.families.push_back(family(SpaceType::OddSphere, 11, {{{1, 2, 3}, 0}, {{1, 2, 4}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 13, {{{1, 2, 3}, 0}, {{1, 2, 4}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 13, {{{1, 2, 5}, 0}, {{1, 3, 4}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 15, {{{1, 2, 6}, 0}, {{1, 3, 4}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 11, {{{0, 1, 2, 3}, 0}, {{0, 1, 2, 4}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 13, {{{0, 1, 2, 3}, 0}, {{0, 1, 2, 4}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 13, {{{0, 1, 2, 5}, 0}, {{0, 1, 3, 4}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 13, {{{1, 2, 3, 4}, 0}, {{1, 2, 3, 5}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 15, {{{0, 1, 2, 6}, 0}, {{0, 1, 3, 4}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 15, {{{1, 2, 5, 6}, 0}, {{1, 3, 4, 5}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 11, {{{0, 0, 1, 2, 3}, 0}, {{0, 0, 1, 2, 4}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 13, {{{0, 0, 1, 2, 3}, 0}, {{0, 0, 1, 2, 4}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 13, {{{0, 0, 1, 2, 5}, 0}, {{0, 0, 1, 3, 4}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 13, {{{0, 1, 2, 3, 4}, 0}, {{0, 1, 2, 3, 5}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 15, {{{0, 0, 1, 2, 6}, 0}, {{0, 0, 1, 3, 4}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 15, {{{0, 1, 2, 5, 6}, 0}, {{0, 1, 3, 4, 5}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 15, {{{1, 2, 5, 5, 6}, 0}, {{1, 3, 4, 5, 5}, 0}}));
        t.families.push_back(family(SpaceType::OddSphere, 15, {{{1, 2, 3, 6, 6}, 0}, {{1, 3, 3, 4, 6}, 0}}));
        tables.push_back(std::move(t));
    }

    // Table 3
    {
        GoldenTable t{3, SpaceType::CPn, {2, 3}, UMode::Twisted, 6, {}};
        t.families.push_back(family(SpaceType::CPn, 4, {{{0, 1, 3}, 1}, {{1, 1, 2}, 1}}));
        t.families.push_back(family(SpaceType::CPn, 6, {{{0, 1, 5}, 1}, {{1, 2, 3}, 1}}));
        t.families.push_back(family(SpaceType::CPn, 6, {{{0, 1, 5}, 2}, {{1, 2, 3}, 2}}));
        t.families.push_back(family(SpaceType::CPn, 6, {{{0, 1, 5}, 3}, {{1, 2, 3}, 3}}));
        t.families.push_back(family(SpaceType::CPn, 6, {{{1, 1, 4}, 1}, {{1, 1, 4}, 2}}));
        t.families.push_back(family(SpaceType::CPn, 4, {{{0, 0, 1, 3}, 1}, {{0, 1, 1, 2}, 1}, {{1, 2, 2, 3}, 1}}));
        t.families.push_back(family(SpaceType::CPn, 4, {{{0, 0, 1, 3}, 2}, {{0, 1, 1, 2}, 2}, {{1, 2, 2, 3}, 2}}));
        t.families.push_back(family(SpaceType::CPn, 4, {{{1, 1, 1, 1}, 1}, {{1, 1, 1, 1}, 2}, {{1, 1, 3, 3}, 1}}));
        t.families.push_back(family(SpaceType::CPn, 5, {{{1, 2, 3, 4}, 1}, {{1, 2, 3, 4}, 2}}));
        t.families.push_back(family(SpaceType::CPn, 6, {{{0, 0, 1, 5}, 1}, {{2, 3, 3, 4}, 1}}));
        t.families.push_back(family(SpaceType::CPn, 6, {{{0, 0, 1, 5}, 2}, {{2, 3, 3, 4}, 2}}));
        t.families.push_back(family(SpaceType::CPn, 6, {{{0, 0, 1, 5}, 3}, {{2, 3, 3, 4}, 3}}));
        t.families.push_back(family(SpaceType::CPn, 6, {{{1, 1, 1, 3}, 1}, {{1, 1, 1, 3}, 3}, {{1, 1, 5, 5}, 1}, {{1, 1, 5, 5}, 3}, {{1, 3, 3, 5}, 1}, {{1, 3, 3, 5}, 3}}));
        tables.push_back(std::move(t));
    }

    // Table 4
    {
        GoldenTable t{4, SpaceType::CPn, {2, 3}, UMode::Untwisted, 10, {}};
        t.families.push_back(family(SpaceType::CPn, 6, {{{0, 1, 5}, 0}, {{1, 2, 3}, 0}}));
        t.families.push_back(family(SpaceType::CPn, 9, {{{0, 1, 8}, 0}, {{1, 2, 6}, 0}}));
        t.families.push_back(family(SpaceType::CPn, 4, {{{0, 0, 1, 3}, 0}, {{0, 1, 1, 2}, 0}, {{1, 2, 2, 3}, 0}}));
        t.families.push_back(family(SpaceType::CPn, 6, {{{0, 0, 1, 5}, 0}, {{2, 3, 3, 4}, 0}}));
        t.families.push_back(family(SpaceType::CPn, 7, {{{0, 1, 2, 4}, 0}, {{1, 2, 5, 6}, 0}}));
        t.families.push_back(family(SpaceType::CPn, 8, {{{0, 0, 1, 7}, 0}, {{1, 2, 2, 3}, 0}, {{1, 4, 4, 7}, 0}}));
        t.families.push_back(family(SpaceType::CPn, 8, {{{0, 1, 1, 6}, 0}, {{1, 1, 2, 4}, 0}}));
        t.families.push_back(family(SpaceType::CPn, 8, {{{1, 1, 3, 3}, 0}, {{1, 1, 7, 7}, 0}}));
        t.families.push_back(family(SpaceType::CPn, 10, {{{0, 0, 1, 9}, 0}, {{2, 5, 5, 8}, 0}}));
        t.families.push_back(family(SpaceType::CPn, 10, {{{0, 1, 1, 8}, 0}, {{1, 2, 2, 5}, 0}}));
        tables.push_back(std::move(t));
    }

    // Table 5
    {
        GoldenTable t{5, SpaceType::HP1, {2}, UMode::Twisted, 9, {}};
        t.families.push_back(family(SpaceType::HP1, 4, {{{0, 1}, 1}, {{1, 2}, 1}}));
        t.families.push_back(family(SpaceType::HP1, 4, {{{0, 1}, 2}, {{1, 2}, 2}}));
        t.families.push_back(family(SpaceType::HP1, 5, {{{1, 1}, 2}, {{1, 2}, 1}, {{1, 2}, 2}}));
        t.families.push_back(family(SpaceType::HP1, 6, {{{0, 1}, 1}, {{2, 3}, 1}}));
        t.families.push_back(family(SpaceType::HP1, 6, {{{0, 1}, 2}, {{2, 3}, 2}}));
        t.families.push_back(family(SpaceType::HP1, 6, {{{0, 1}, 3}, {{2, 3}, 3}}));
        t.families.push_back(family(SpaceType::HP1, 6, {{{1, 1}, 1}, {{1, 1}, 3}, {{1, 3}, 1}, {{1, 3}, 3}}));
        t.families.push_back(family(SpaceType::HP1, 7, {{{1, 2}, 1}, {{1, 2}, 3}}));
        t.families.push_back(family(SpaceType::HP1, 8, {{{0, 1}, 1}, {{1, 4}, 3}}));
        t.families.push_back(family(SpaceType::HP1, 8, {{{0, 1}, 2}, {{1, 2}, 2}, {{1, 4}, 2}}));
        t.families.push_back(family(SpaceType::HP1, 8, {{{0, 1}, 3}, {{1, 4}, 1}}));
        t.families.push_back(family(SpaceType::HP1, 8, {{{0, 1}, 4}, {{1, 4}, 4}}));
        t.families.push_back(family(SpaceType::HP1, 8, {{{1, 1}, 1}, {{1, 1}, 3}, {{1, 3}, 1}, {{1, 3}, 3}}));
        t.families.push_back(family(SpaceType::HP1, 8, {{{1, 1}, 2}, {{1, 3}, 2}}));
        t.families.push_back(family(SpaceType::HP1, 8, {{{1, 2}, 1}, {{1, 2}, 3}}));
        t.families.push_back(family(SpaceType::HP1, 9, {{{1, 1}, 4}, {{1, 2}, 4}}));
        t.families.push_back(family(SpaceType::HP1, 9, {{{1, 3}, 2}, {{1, 3}, 4}}));
        tables.push_back(std::move(t));
    }

    // Table 6
    {
        GoldenTable t{6, SpaceType::HP1, {2}, UMode::Untwisted, 20, {}};
        t.families.push_back(family(SpaceType::HP1, 4, {{{0, 1}, 0}, {{1, 2}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 6, {{{0, 1}, 0}, {{2, 3}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 8, {{{0, 1}, 0}, {{1, 4}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 10, {{{0, 1}, 0}, {{2, 5}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 12, {{{0, 1}, 0}, {{1, 6}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 12, {{{1, 2}, 0}, {{1, 4}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 12, {{{2, 3}, 0}, {{3, 4}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 14, {{{0, 1}, 0}, {{2, 7}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 14, {{{1, 2}, 0}, {{1, 4}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 16, {{{0, 1}, 0}, {{1, 8}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 16, {{{1, 2}, 0}, {{1, 6}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 18, {{{0, 1}, 0}, {{2, 9}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 18, {{{1, 2}, 0}, {{1, 4}, 0}}));
        t.families.push_back(family(SpaceType::HP1, 18, {{{1, 6}, 0}, {{2, 3}, 0}}));
        tables.push_back(std::move(t));
    }
    return tables;
}

} // namespace

const std::vector<GoldenTable>& golden_tables()
{
    static const std::vector<GoldenTable> tables = build();
    return tables;
}

const GoldenTable& golden_table(int number)
{
    for (const auto& t : golden_tables()) {
        if (t.number == number) {
            return t;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "no table " + std::to_string(number));
}

} // namespace isospec
