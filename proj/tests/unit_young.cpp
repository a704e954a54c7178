#include <catch2/catch_amalgamated.hpp>

#include "specht/partition.hpp"
#include "specht/tableau.hpp"
#include "test_support.hpp"

using namespace specht;

TEST_CASE("partition validation and parsing", "[young]") {
    CHECK(Partition({5, 5, 2, 2, 2, 2}).n() == 18);
    CHECK(Partition().empty());
    CHECK(Partition::parse("5,5,2,2,2,2") == Partition({5, 5, 2, 2, 2, 2}));
    CHECK(Partition::parse(" 4 , 3 ,2") == Partition({4, 3, 2}));
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse("  ") == Partition());
    CHECK_THROWS_AS(Partition({2, 3}), invalid_input);
    CHECK_THROWS_AS(Partition({3, 0}), invalid_input);
    CHECK_THROWS_AS(Partition::parse("3,,1"), invalid_input);
    CHECK_THROWS_AS(Partition::parse("a"), invalid_input);
    CHECK(Partition({3, 1}).column_lengths() == std::vector<int>({2, 1, 1}));
}

TEST_CASE("run decomposition", "[young]") {
    using Runs = std::vector<std::pair<int, int>>;
    CHECK(run_decomposition(Partition({5, 5, 2, 2, 2, 2})) == Runs({{5, 2}, {2, 4}}));
    CHECK(run_decomposition(Partition({3})) == Runs({{3, 1}}));
    CHECK(run_decomposition(Partition({6, 6, 6, 3, 3, 3, 3, 3, 3})) == Runs({{6, 3}, {3, 6}}));
    CHECK(run_decomposition(Partition()) == Runs());

    for (int n = 1; n <= 8; ++n)
        for (const Partition& shape : all_partitions(n)) {
            std::vector<int> rebuilt;
            for (auto [value, mult] : run_decomposition(shape))
                rebuilt.insert(rebuilt.end(), static_cast<std::size_t>(mult), value);
            REQUIRE(rebuilt == shape.parts());
        }
}

TEST_CASE("splitting partitions", "[young]") {
    const auto figure1 = splitting_partitions(Partition({5, 5, 2, 2, 2, 2}));
    REQUIRE(figure1.size() == 2);
    CHECK(figure1[0].mu == Partition());
    CHECK(figure1[0].eta == Partition({5, 5, 2, 2, 2, 2}));
    CHECK(figure1[1].mu == Partition({2, 2, 2, 2}));
    CHECK(figure1[1].eta == Partition({3, 3}));

    const auto staircase = splitting_partitions(Partition({4, 3, 2}));
    REQUIRE(staircase.size() == 3);
    CHECK(staircase[0].mu == Partition());
    CHECK(staircase[1].mu == Partition({2}));
    CHECK(staircase[1].eta == Partition({2, 1}));
    CHECK(staircase[2].mu == Partition({3, 2}));
    CHECK(staircase[2].eta == Partition({1}));

    const auto row = splitting_partitions(Partition({9}));
    REQUIRE(row.size() == 1);
    CHECK(row[0].mu == Partition());

    for (int n = 1; n <= 8; ++n)
        for (const Partition& shape : all_partitions(n)) {
            const auto contexts = splitting_partitions(shape);
            REQUIRE(contexts.size() == run_decomposition(shape).size());
            for (const auto& ctx : contexts) {
                if (ctx.mu.empty()) continue;
                // strictly smaller than the smallest kept part
                const int smallest_kept =
                    ctx.lambda.part(ctx.lambda.rows() - ctx.mu.rows() - 1);
                CHECK(smallest_kept > ctx.mu.first_part());
                CHECK(ctx.mu.n() + ctx.eta.n() +
                          ctx.mu.first_part() * ctx.eta.rows() ==
                      shape.n());
            }
        }
}

TEST_CASE("t_star is the dominance greatest standard tableau", "[young]") {
    const Tableau fig1 = t_star(Partition({5, 5, 2, 2, 2, 2}));
    CHECK(fig1.rows()[0] == std::vector<int>({1, 2, 3, 4, 5}));
    CHECK(fig1.rows()[1] == std::vector<int>({6, 7, 8, 9, 10}));
    CHECK(fig1.rows()[2] == std::vector<int>({11, 12}));
    CHECK(fig1.rows()[5] == std::vector<int>({17, 18}));
    CHECK(fig1.standard());

    const Tableau small = t_star(Partition({2, 1}));
    CHECK(small.rows() == std::vector<std::vector<int>>({{1, 2}, {3}}));

    const Tableau fig2 = t_star(Partition({6, 6, 6, 3, 3, 3, 3, 3, 3}));
    CHECK(fig2.rows()[0] == std::vector<int>({1, 2, 3, 4, 5, 6}));
    CHECK(fig2.rows()[3] == std::vector<int>({19, 20, 21}));
    CHECK(fig2.rows()[8] == std::vector<int>({34, 35, 36}));

    for (int n = 1; n <= 6; ++n)
        for (const Partition& shape : all_partitions(n)) {
            const Tableau star = t_star(shape);
            REQUIRE(star.standard());
            for (const Tableau& t : standard_tableaux(shape))
                CHECK(dominance_leq(t, star));
        }
}

TEST_CASE("row straightening", "[young]") {
    const Partition shape({2, 1});
    const Tableau scrambled(shape, {{2, 1}, {3}});
    const Tableau sorted = row_straighten(scrambled);
    CHECK(sorted.rows() == std::vector<std::vector<int>>({{1, 2}, {3}}));
    CHECK(Tabloid::of(sorted) == Tabloid::of(scrambled));
    CHECK(row_straighten(sorted) == sorted);

    // Column-standard fillings straighten to standard tableaux.
    for (int n = 2; n <= 6; ++n)
        for (const Partition& sh : all_partitions(n)) {
            int checked = 0;
            for (const Tableau& t : test_support::brute_force_standard(sh)) {
                CHECK(row_straighten(t) == t);
                if (++checked > 10) break;
            }
        }
    const Tableau column_standard(Partition({2, 2}), {{1, 3}, {2, 4}});
    CHECK(column_standard.column_standard());
    CHECK(row_straighten(column_standard).standard());
}

TEST_CASE("dominance order", "[young]") {
    const Partition shape({2, 1});
    const Tableau greater(shape, {{1, 2}, {3}});
    const Tableau lesser(shape, {{1, 3}, {2}});
    CHECK(dominance_leq(lesser, greater));
    CHECK_FALSE(dominance_leq(greater, lesser));
    CHECK(dominance_leq(greater, greater));
    CHECK_THROWS_AS(
        dominance_leq(t_star(Partition({2, 1})), t_star(Partition({3}))), invalid_input);

    for (int n = 2; n <= 6; ++n)
        for (const Partition& sh : all_partitions(n)) {
            const auto tableaux = standard_tableaux(sh);
            for (const auto& a : tableaux)
                for (const auto& b : tableaux) {
                    if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                    for (const auto& c : tableaux)
                        if (dominance_leq(a, b) && dominance_leq(b, c))
                            CHECK(dominance_leq(a, c));
                }
        }
}

TEST_CASE("standard tableau enumeration", "[young]") {
    CHECK(standard_tableaux(Partition({2, 1})).size() == 2);
    CHECK(standard_tableaux(Partition({3, 2})).size() == 5);
    CHECK(standard_tableaux(Partition({7})).size() == 1);
    CHECK_THROWS_AS(standard_tableaux(Partition({15}), 14), cap_exceeded);

    for (int n = 1; n <= 6; ++n)
        for (const Partition& shape : all_partitions(n)) {
            auto enumerated = standard_tableaux(shape);
            auto brute = test_support::brute_force_standard(shape);
            REQUIRE(enumerated.size() == brute.size());
            CHECK(BigInt(enumerated.size()) == syt_count(shape));
            std::sort(brute.begin(), brute.end());
            auto sorted = enumerated;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == brute);
            // dominating tableaux first
            CHECK(enumerated.front() == t_star(shape));
            for (std::size_t i = 0; i < enumerated.size(); ++i)
                for (std::size_t j = i + 1; j < enumerated.size(); ++j)
                    CHECK_FALSE((dominance_leq(enumerated[i], enumerated[j]) &&
                                 !(enumerated[i] == enumerated[j])));
        }
}

TEST_CASE("subtableaux of the splitting context", "[young]") {
    const Partition fig1({5, 5, 2, 2, 2, 2});
    const Tableau t = t_star(fig1);
    const auto ctx = make_splitting_context(fig1, 1);

    const Tableau z = subtableau_z(ctx, t);
    CHECK(z.shape() == Partition({2, 2, 2, 2}));
    CHECK(z.support() == std::vector<int>({11, 12, 13, 14, 15, 16, 17, 18}));

    const Tableau u = subtableau_u(ctx, t);
    CHECK(u.shape() == Partition({3, 3}));
    CHECK(u.support() == std::vector<int>({3, 4, 5, 8, 9, 10}));

    const auto empty_ctx = make_splitting_context(fig1, 0);
    CHECK(subtableau_z(empty_ctx, t).shape() == Partition());
    CHECK(subtableau_u(empty_ctx, t) == t);

    const Partition fig2({6, 6, 6, 3, 3, 3, 3, 3, 3});
    const auto ctx2 = make_splitting_context(fig2, 1);
    const Tableau t2 = t_star(fig2);
    CHECK(subtableau_u(ctx2, t2).support() ==
          std::vector<int>({4, 5, 6, 10, 11, 12, 16, 17, 18}));
    const auto z2 = subtableau_z(ctx2, t2).support();
    CHECK(z2.front() == 19);
    CHECK(z2.back() == 36);
    CHECK(z2.size() == 18);

    CHECK_THROWS_AS(subtableau_z(ctx, t_star(Partition({3, 3}))), invalid_input);
}

TEST_CASE("tabloid canonical form", "[young]") {
    const Partition shape({2, 1});
    const Tableau a(shape, {{1, 2}, {3}});
    const Tableau b(shape, {{2, 1}, {3}});
    CHECK(Tabloid::of(a) == Tabloid::of(b));
    CHECK(Tabloid::of(a).rows() == std::vector<std::vector<int>>({{1, 2}, {3}}));
    CHECK(Tabloid::of(a).representative() == a);

    const Tableau c(shape, {{1, 3}, {2}});
    CHECK_FALSE(Tabloid::of(a) == Tabloid::of(c));

    // Action: the row map follows the entries.
    const Perm g = Perm::parse_cycles(3, "(1,3)");
    CHECK(act(Tabloid::of(a), g) == Tabloid::of(Tableau(shape, {{3, 2}, {1}})));
    CHECK_THROWS_AS(act(Tabloid::of(a), Perm(4)), invalid_input);
}

TEST_CASE("hook length count", "[young]") {
    CHECK(syt_count(Partition({2, 1})) == 2);
    CHECK(syt_count(Partition({3, 2})) == 5);
    CHECK(syt_count(Partition({4, 4, 4})) == 462);
    CHECK(syt_count(Partition({5, 5, 2, 2, 2, 2})) == 2382380);
}
