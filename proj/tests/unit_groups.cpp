#include <catch2/catch_amalgamated.hpp>

#include "specht/perm.hpp"
#include "specht/perm_group.hpp"
#include "test_support.hpp"

using namespace specht;

TEST_CASE("permutation basics", "[groups]") {
    const Perm g = Perm::parse_cycles(10, "(3,4,5)(8,9,10)");
    CHECK(g.cycle_string() == "(3,4,5)(8,9,10)");
    CHECK(g(3) == 4);
    CHECK(g(5) == 3);
    CHECK(g.sign() == 1);
    CHECK(g.order() == 3);
    CHECK(g.support() == std::vector<int>({3, 4, 5, 8, 9, 10}));
    CHECK(Perm::parse_cycles(4, "()").is_identity());
    CHECK(Perm::parse_cycles(4, "").is_identity());
    CHECK(Perm(0).is_identity());

    const Perm a = Perm::parse_cycles(3, "(1,2)");
    const Perm b = Perm::parse_cycles(3, "(2,3)");
    // left-to-right composition: x -> b(a(x))
    CHECK((a * b)(1) == 3);
    CHECK((a * b).cycle_string() == "(1,3,2)");
    CHECK((a * b).inverse() * (a * b) == Perm(3));
    CHECK(a.sign() == -1);

    CHECK_THROWS_AS(Perm::from_images({1, 1, 2}), invalid_input);
    CHECK_THROWS_AS(Perm::parse_cycles(3, "(1,4)"), invalid_input);
    CHECK_THROWS_AS(Perm::parse_cycles(3, "(1,2"), invalid_input);
    CHECK_THROWS_AS(a * Perm(4), invalid_input);

    CHECK(perm_power(Perm::parse_cycles(5, "(1,2,3,4,5)"), 5).is_identity());
    CHECK(conjugate(Perm::parse_cycles(4, "(1,2)"), Perm::parse_cycles(4, "(1,3)"))
              .cycle_string() == "(2,3)");
}

TEST_CASE("row and column stabilizers", "[groups]") {
    const Tableau fig1 = t_star(Partition({5, 5, 2, 2, 2, 2}));
    const PermGroup R = row_stabilizer(fig1);
    CHECK(R.order() == BigInt(120) * 120 * 2 * 2 * 2 * 2);

    const Tableau small = t_star(Partition({2, 1}));
    const PermGroup C = column_stabilizer(small);
    CHECK(C.elements() ==
          std::vector<Perm>({Perm(3), Perm::parse_cycles(3, "(1,3)")}));

    const PermGroup Rcolumn = row_stabilizer(t_star(Partition({1, 1, 1})));
    CHECK(Rcolumn.elements().size() == 1);

    for (int n = 2; n <= 6; ++n)
        for (const Partition& shape : all_partitions(n)) {
            const Tableau star = t_star(shape);
            BigInt row_order = 1, col_order = 1;
            for (int part : shape.parts()) row_order *= factorial(part);
            for (int len : shape.column_lengths()) col_order *= factorial(len);
            CHECK(BigInt(row_stabilizer(star).elements().size()) == row_order);
            CHECK(BigInt(column_stabilizer(star).elements().size()) == col_order);
        }
}

TEST_CASE("h group of equal-length column classes", "[groups]") {
    const Tableau fig1 = t_star(Partition({5, 5, 2, 2, 2, 2}));
    const PermGroup H = h_group(fig1);
    const PermGroup expected(
        18, {Perm::parse_cycles(18, "(3,4,5)(8,9,10)"), Perm::parse_cycles(18, "(3,4)(8,9)"),
             Perm::parse_cycles(18, "(1,2)(6,7)(11,12)(13,14)(15,16)(17,18)")});
    CHECK(H.same_elements(expected));
    CHECK(H.elements().size() == 12);
    CHECK(H.factor_sizes() == std::vector<int>({2, 3}));

    const PermGroup Hcolumn = h_group(t_star(Partition({1, 1, 1, 1})));
    CHECK(Hcolumn.elements().size() == 1);
    CHECK(Hcolumn.abstract_type() == "S_1");

    const PermGroup Hsquare = h_group(t_star(Partition({2, 2})));
    CHECK(Hsquare.elements() ==
          std::vector<Perm>({Perm(4), Perm::parse_cycles(4, "(1,2)(3,4)")}));

    // every h-group element stabilizes rows and permutes columns as blocks
    for (const Perm& g : H.elements()) {
        CHECK(stabilizes_rows(fig1, g));
        CHECK(permutes_columns_as_blocks(fig1, g));
    }
}

TEST_CASE("u and z groups of the worked examples", "[groups]") {
    const Partition fig1({5, 5, 2, 2, 2, 2});
    const Tableau t = t_star(fig1);
    const auto ctx = make_splitting_context(fig1, 1);

    const PermGroup U = u_group(ctx, t);
    REQUIRE(U.generators().size() == 2);
    CHECK(U.generators()[0].cycle_string() == "(3,4,5)(8,9,10)");
    CHECK(U.generators()[1].cycle_string() == "(3,4)(8,9)");
    CHECK(U.factor_sizes() == std::vector<int>({3}));
    CHECK(U.elements().size() == 6);

    const PermGroup Z = z_group(ctx, t);
    REQUIRE(Z.generators().size() == 2);
    CHECK(Z.generators()[0].cycle_string() == "(11,13,15,17)(12,14,16,18)");
    CHECK(Z.generators()[1].cycle_string() == "(11,13)(12,14)");
    CHECK(Z.elements().size() == 24);

    const PermGroup L = l_group(ctx, t);
    CHECK(L.elements().size() == 144);
    CHECK(L.abstract_type() == "S_3 x S_4");
    CHECK(U.subgroup_of(h_group(t)));
    for (const Perm& g : Z.elements()) CHECK(stabilizes_columns(t, g));

    // empty tail: the u group is the whole h group
    const auto empty_ctx = make_splitting_context(fig1, 0);
    CHECK(u_group(empty_ctx, t).same_elements(h_group(t)));
    CHECK(z_group(empty_ctx, t).elements().size() == 1);
    CHECK(l_group(empty_ctx, t).same_elements(h_group(t)));

    // second worked example
    const Partition fig2({6, 6, 6, 3, 3, 3, 3, 3, 3});
    const Tableau t2 = t_star(fig2);
    const auto ctx2 = make_splitting_context(fig2, 1);
    const PermGroup U2 = u_group(ctx2, t2);
    const PermGroup expected_u2(
        36, {Perm::parse_cycles(36, "(4,5,6)(10,11,12)(16,17,18)"),
             Perm::parse_cycles(36, "(4,5)(10,11)(16,17)")});
    CHECK(U2.same_elements(expected_u2));
    CHECK(U2.factor_sizes() == std::vector<int>({3}));
    const PermGroup Z2 = z_group(ctx2, t2);
    CHECK(Z2.factor_sizes() == std::vector<int>({6}));
    CHECK(Z2.order() == 720);
    CHECK(Z2.contains(Perm::parse_cycles(36, "(19,22,25)(20,23,26)(21,24,27)")));
    CHECK(Z2.contains(Perm::parse_cycles(36, "(28,31,34)(29,32,35)(30,33,36)")));

    CHECK_THROWS_AS(u_group(ctx, t2), invalid_input);
}

TEST_CASE("hook shapes give the product of two symmetric groups", "[groups]") {
    for (int n = 4; n <= 8; ++n)
        for (int k = 1; k <= n - 2; ++k) {
            std::vector<int> parts = {n - k};
            parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
            const Partition hook(parts);
            const auto contexts = splitting_partitions(hook);
            REQUIRE(contexts.size() == 2);
            const auto& ctx = contexts[1];
            REQUIRE(ctx.mu == Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
            const PermGroup L = l_group(ctx, t_star(hook));
            std::vector<int> sizes = {k, n - k - 1};
            std::sort(sizes.begin(), sizes.end());
            CHECK(L.factor_sizes() == sizes);
            CHECK(L.order() == factorial(k) * factorial(n - k - 1));
            CHECK(BigInt(L.elements().size()) == L.order());
        }
}

TEST_CASE("element enumeration and caps", "[groups]") {
    const PermGroup tiny(2, {Perm::parse_cycles(2, "(1,2)")});
    CHECK(tiny.elements() == std::vector<Perm>({Perm(2), Perm::parse_cycles(2, "(1,2)")}));

    std::vector<Perm> sym_gens = {Perm::parse_cycles(10, "(1,2)"),
                                  Perm::parse_cycles(10, "(1,2,3,4,5,6,7,8,9,10)")};
    CHECK_THROWS_AS(generate_elements(10, sym_gens, 1000), cap_exceeded);
}

TEST_CASE("sylow subgroups", "[groups]") {
    // one symmetric factor: orders match the p-valuation of m!
    for (int p : {2, 3, 5})
        for (int m = 1; m <= 8; ++m) {
            std::vector<std::vector<int>> blocks;
            for (int i = 1; i <= m; ++i) blocks.push_back({i});
            const PermGroup sym(m, factor_generators(m, SymmetricFactor{blocks},
                                                     FactorGenerators::AdjacentTranspositions),
                                std::vector<SymmetricFactor>{SymmetricFactor{blocks}});
            const PermGroup P = sylow_p(sym, p);
            CHECK(BigInt(P.elements().size()) == pow_int(p, nu_p_factorial(m, p)));
            CHECK(P.order() == pow_int(p, nu_p_factorial(m, p)));
            for (const Perm& x : P.elements()) CHECK(x.is_p_element(p));
            CHECK(P.subgroup_of(sym));
        }

    // the S_3 factor of the first worked example at p = 3
    const Partition fig1({5, 5, 2, 2, 2, 2});
    const Tableau t = t_star(fig1);
    const auto ctx = make_splitting_context(fig1, 1);
    const PermGroup P3 = sylow_p(u_group(ctx, t), 3);
    CHECK(P3.elements().size() == 3);
    CHECK(P3.generators().size() == 1);
    CHECK(P3.generators()[0].cycle_string() == "(3,4,5)(8,9,10)");

    const PermGroup L = l_group(ctx, t);
    CHECK(sylow_p(L, 2).order() == 16);
    CHECK(sylow_p(L, 2).elements().size() == 16);
    CHECK(sylow_p(L, 3).order() == 9);

    // brute-force fallback without structure
    const PermGroup stripped(L.degree(), L.generators());
    for (int p : {2, 3}) {
        const PermGroup P = sylow_p(stripped, p);
        CHECK(BigInt(P.elements().size()) == p_part(BigInt(144), p));
        CHECK(is_p_group(P, p));
        CHECK(P.subgroup_of(L));
    }
}

TEST_CASE("coset representatives", "[groups]") {
    const PermGroup klein(4,
                          {Perm::parse_cycles(4, "(1,2)"), Perm::parse_cycles(4, "(3,4)")});
    CHECK(right_coset_reps(klein, klein) == std::vector<Perm>({Perm(4)}));
    CHECK(right_coset_reps(PermGroup::trivial(4), klein).size() == 4);

    const PermGroup sub(4, {Perm::parse_cycles(4, "(1,2)")});
    const auto reps = right_coset_reps(sub, klein);
    REQUIRE(reps.size() == 2);
    // representatives are in distinct cosets
    CHECK_FALSE(sub.contains(reps[0] * reps[1].inverse()));

    const PermGroup outside(4, {Perm::parse_cycles(4, "(1,3)")});
    CHECK_THROWS_AS(right_coset_reps(outside, klein), invalid_input);

    // index-p subgroup of a p-group
    const PermGroup cyclic9(9, {Perm::parse_cycles(9, "(1,2,3,4,5,6,7,8,9)")});
    const auto maximals = maximal_subgroups(cyclic9, 3);
    REQUIRE(maximals.size() == 1);
    CHECK(right_coset_reps(maximals[0], cyclic9).size() == 3);
}

TEST_CASE("maximal subgroups of p-groups", "[groups]") {
    // elementary abelian of order p^2: p + 1 hyperplanes
    const PermGroup e9(6, {Perm::parse_cycles(6, "(1,2,3)"), Perm::parse_cycles(6, "(4,5,6)")});
    CHECK(maximal_subgroups(e9, 3).size() == 4);
    const PermGroup e4(4, {Perm::parse_cycles(4, "(1,2)"), Perm::parse_cycles(4, "(3,4)")});
    CHECK(maximal_subgroups(e4, 2).size() == 3);

    // cyclic of order p: only the trivial subgroup
    const PermGroup c3(3, {Perm::parse_cycles(3, "(1,2,3)")});
    const auto c3max = maximal_subgroups(c3, 3);
    REQUIRE(c3max.size() == 1);
    CHECK(c3max[0].elements().size() == 1);

    // elementary abelian of order 27: (3^3 - 1)/2 = 13 hyperplanes
    const Partition fig2({6, 6, 6, 3, 3, 3, 3, 3, 3});
    const auto ctx2 = make_splitting_context(fig2, 1);
    const PermGroup P = sylow_p(l_group(ctx2, t_star(fig2)), 3);
    const auto maximals = maximal_subgroups(P, 3);
    CHECK(maximals.size() == 13);
    for (const auto& M : maximals) {
        CHECK(M.elements().size() == 9);
        CHECK(M.subgroup_of(P));
    }

    // not a p-group
    const PermGroup s3(3, {Perm::parse_cycles(3, "(1,2)"), Perm::parse_cycles(3, "(1,2,3)")});
    CHECK_THROWS_AS(maximal_subgroups(s3, 2), invalid_input);

    // a non-elementary case: the dihedral Sylow 2-subgroup of S_4
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= 4; ++i) blocks.push_back({i});
    const PermGroup sym4(4, factor_generators(4, SymmetricFactor{blocks},
                                              FactorGenerators::AdjacentTranspositions),
                         std::vector<SymmetricFactor>{SymmetricFactor{blocks}});
    const PermGroup d8 = sylow_p(sym4, 2);
    REQUIRE(d8.elements().size() == 8);
    const auto d8max = maximal_subgroups(d8, 2);
    CHECK(d8max.size() == 3);
    // oracle: index-2 subgroups among all subgroups
    int index2 = 0;
    for (const auto& H : all_subgroups(d8))
        if (H.elements().size() == 4) ++index2;
    CHECK(index2 == 3);
}

TEST_CASE("conjugate groups follow tableau maps", "[groups]") {
    std::mt19937_64 rng(7);
    const Partition shape({3, 2, 2});
    const Tableau star = t_star(shape);
    std::vector<int> entries(7);
    std::iota(entries.begin(), entries.end(), 1);
    std::shuffle(entries.begin(), entries.end(), rng);
    const Tableau other = test_support::tableau_from_entries(shape, entries);
    const Perm g = tableau_map(star, other);
    REQUIRE(act(star, g) == other);
    for (const auto& ctx : splitting_partitions(shape)) {
        CHECK(conjugated(l_group(ctx, star), g).same_elements(l_group(ctx, other)));
        CHECK(conjugated(h_group(star), g).same_elements(h_group(other)));
    }
}
