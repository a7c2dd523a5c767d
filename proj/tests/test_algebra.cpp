#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "mtc/io.hpp"
#include "mtc/schellekens.hpp"
#include "test_helpers.hpp"

using namespace mtc;

namespace {

struct Model {
    ModularData md;
    FusionTable ft;
    PicardGroup pg;
    explicit Model(ModularData m) : md(std::move(m)), ft(fusion(md)), pg(picard_group(md, ft)) {}
};

std::vector<std::vector<int>> support_sets(const std::vector<Subgroup>& subs) {
    std::vector<std::vector<int>> out;
    for (const auto& s : subs)
        out.push_back(s.members);
    return out;
}

ModularData toric() {
    return load_modular_data_file(std::string(MTC_TEST_DATA_DIR) + "/toric_code.json");
}

} // namespace

TEST_CASE("admissible supports", "[algebra]") {
    const Model cyc(builtin_cyclic(4));
    CHECK(support_sets(admissible_supports(cyc.pg)) ==
          std::vector<std::vector<int>>{{0}, {0, 2}}); // full Z_4 fails theta_1^4 = -1

    const Model ising(builtin_su2(2));
    CHECK(support_sets(admissible_supports(ising.pg)) ==
          std::vector<std::vector<int>>{{0}, {0, 2}});

    for (const auto& md : mtc_test::all_builtins()) {
        const Model m{ModularData(md)};
        const auto admissible = admissible_supports(m.pg);
        REQUIRE(!admissible.empty());
        CHECK(admissible.front().members == std::vector<int>{0}); // trivial always admissible
    }
}

TEST_CASE("symmetrizer candidates on Z_2 supports", "[algebra]") {
    const Model cyc(builtin_cyclic(4));
    const Subgroup h{&cyc.pg, {0, 2}};
    const auto candidates = symmetrizer_candidates(cyc.pg, h);
    REQUIRE(candidates.size() == 2);
    CHECK(candidates[0].eval_labels(2, 2).is_one());
    CHECK(candidates[1].eval_labels(2, 2) == RootOfUnity::minus_one());

    const Model su4(builtin_su2(4));
    const auto c4 = symmetrizer_candidates(su4.pg, Subgroup{&su4.pg, {0, 4}});
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].eval_labels(4, 4).is_one());
    CHECK(c4[1].eval_labels(4, 4) == RootOfUnity::minus_one());
}

TEST_CASE("trivial support has exactly one empty candidate", "[algebra]") {
    for (const auto& md : mtc_test::all_builtins()) {
        const Model m{ModularData(md)};
        const auto candidates = symmetrizer_candidates(m.pg, trivial_subgroup(m.pg));
        REQUIRE(candidates.size() == 1);
        CHECK(candidates[0].eval_labels(0, 0).is_one());
    }
}

TEST_CASE("diagonal consistency of every candidate", "[algebra]") {
    auto models = mtc_test::all_builtins();
    models.push_back(toric());
    for (const auto& md : models) {
        INFO(md.name);
        const Model m{ModularData(md)};
        for (const auto& h : admissible_supports(m.pg))
            for (const auto& xi : symmetrizer_candidates(m.pg, h))
                for (int g : h.members) {
                    const RootOfUnity lhs = xi.eval_labels(g, g).pow(2);
                    const RootOfUnity rhs =
                        m.pg.q(g).pow(2) / m.pg.q(m.pg.mul(g, g));
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("candidates satisfy the symmetrizer relation on all pairs", "[algebra]") {
    const Model tc(toric());
    for (const auto& h : admissible_supports(tc.pg))
        for (const auto& xi : symmetrizer_candidates(tc.pg, h))
            for (int g : h.members)
                for (int k : h.members) {
                    const RootOfUnity rhs =
                        (tc.pg.q(g) * tc.pg.q(k)) / tc.pg.q(tc.pg.mul(g, k));
                    CHECK(xi.eval_labels(g, k) * xi.eval_labels(k, g) == rhs);
                }
}

TEST_CASE("alternating bihomomorphism groups", "[algebra]") {
    CHECK(alternating_bihoms(AbelianGroup::direct_product({6}), {0, 1, 2, 3, 4, 5}).size() == 1);
    CHECK(alternating_bihoms(AbelianGroup::direct_product({}), {0}).size() == 1);

    const AbelianGroup klein = AbelianGroup::direct_product({2, 2});
    const auto forms = alternating_bihoms(klein, {0, 1, 2, 3});
    REQUIRE(forms.size() == 2);
    for (const auto& f : forms)
        CHECK(f.is_alternating());
    // closed under pointwise product: a group of order 2
    CHECK(forms[0].pointwise_product(forms[1]) == forms[1]);
    CHECK(forms[1].pointwise_product(forms[1]) == forms[0]);

    // Z_2 x Z_4: gcd = 2 off-diagonal choices
    CHECK(alternating_bihoms(AbelianGroup::direct_product({2, 4}),
                             {0, 1, 2, 3, 4, 5, 6, 7})
              .size() == 2);
}

TEST_CASE("su2 level 2 enumeration (Ising chiral data)", "[algebra]") {
    const Model m(builtin_su2(2));
    const auto algebras = enumerate_schellekens(m.md, m.ft, m.pg);
    REQUIRE(algebras.size() == 2);

    CHECK(algebras[0].support.members == std::vector<int>{0}); // Cardy
    CHECK(algebras[1].support.members == std::vector<int>{0, 2});
    CHECK(algebras[1].ksb.eval_labels(2, 2) == RootOfUnity::minus_one());
    CHECK(algebras[1].z.z == IntMatrix::Identity(3, 3));

    // the +1 candidate is rejected by the exact T-check: its Z pairs 0 with 2
    const auto candidates = symmetrizer_candidates(m.pg, algebras[1].support);
    REQUIRE(candidates.size() == 2);
    const auto& plus = candidates[0];
    REQUIRE(plus.eval_labels(2, 2).is_one());
    const auto zq = ks_partition_function(m.md, m.ft, m.pg, algebras[1].support, plus);
    const auto zi = to_integer_matrix(zq);
    REQUIRE(zi.has_value());
    const Report inv = modular_invariance_report(m.md, *zi);
    CHECK(!inv.ok());
    CHECK(!inv.find("T invariance (exact)")->pass);
    CHECK((*zi)(0, 2) == 1); // theta_0 = 1 vs theta_2 = -1 on a populated entry
    CHECK(!(m.md.theta[0] == m.md.theta[2]));
}

TEST_CASE("su2 level 4 enumeration (D-type invariant)", "[algebra]") {
    const Model m(builtin_su2(4));
    const auto algebras = enumerate_schellekens(m.md, m.ft, m.pg);
    REQUIRE(algebras.size() == 2);

    const auto& dtype = algebras[1];
    CHECK(dtype.support.members == std::vector<int>{0, 4});
    CHECK(dtype.ksb.eval_labels(4, 4).is_one()); // Xi(4,4) = +1 survives here
    IntMatrix expected = IntMatrix::Zero(5, 5);
    expected(0, 0) = expected(0, 4) = expected(4, 0) = expected(4, 4) = 1;
    expected(2, 2) = 2;
    CHECK(dtype.z.z == expected);
}

TEST_CASE("cyclic Z_4 enumeration", "[algebra]") {
    const Model m(builtin_cyclic(4));
    const auto algebras = enumerate_schellekens(m.md, m.ft, m.pg);
    REQUIRE(algebras.size() == 2);
    CHECK(algebras[0].support.members == std::vector<int>{0});
    CHECK(algebras[1].support.members == std::vector<int>{0, 2});
    CHECK(algebras[1].ksb.eval_labels(2, 2) == RootOfUnity::minus_one());
    CHECK(is_physical(algebras[1].z.z));
    CHECK(is_modular_invariant(m.md, algebras[1].z.z));
}

TEST_CASE("the Cardy algebra is always first", "[algebra]") {
    for (const auto& md : mtc_test::all_builtins()) {
        INFO(md.name);
        const Model m{ModularData(md)};
        const auto algebras = enumerate_schellekens(m.md, m.ft, m.pg);
        REQUIRE(!algebras.empty());
        CHECK(algebras[0].support.members == std::vector<int>{0});
    }
}

TEST_CASE("validated KSB sets are torsors over the alternating forms", "[algebra]") {
    auto models = mtc_test::all_builtins();
    models.push_back(toric());
    for (const auto& md : models) {
        INFO(md.name);
        const Model m{ModularData(md)};
        const auto algebras = enumerate_schellekens(m.md, m.ft, m.pg);

        for (const auto& h : admissible_supports(m.pg)) {
            std::vector<Bihomomorphism> validated;
            for (const auto& alg : algebras)
                if (alg.support.members == h.members)
                    validated.push_back(alg.ksb);
            if (validated.empty())
                continue;
            const auto forms = alternating_bihoms(validated[0].group(), validated[0].labels());
            REQUIRE(validated.size() == forms.size());
            // the coset of the first validated KSB reproduces the whole set
            for (const auto& xi : forms) {
                const Bihomomorphism shifted = validated[0].pointwise_product(xi);
                CHECK(std::count(validated.begin(), validated.end(), shifted) == 1);
            }
        }
    }
}

TEST_CASE("validated algebras satisfy haploidity and the dimension bound", "[algebra]") {
    auto models = mtc_test::all_builtins();
    models.push_back(toric());
    for (const auto& md : models) {
        const Model m{ModularData(md)};
        for (const auto& alg : enumerate_schellekens(m.md, m.ft, m.pg))
            for (int u = 0; u < m.md.size(); ++u) {
                const int multiplicity = alg.support.contains(u) ? 1 : 0;
                if (multiplicity == 1)
                    CHECK(m.pg.is_invertible(u)); // only invertibles occur in A
                CHECK(static_cast<double>(multiplicity) <=
                      qdim(m.md, u).value.real() + m.md.tol);
            }
    }
}

TEST_CASE("charges restrict to characters on admissible supports", "[algebra]") {
    for (const auto& md : mtc_test::all_builtins()) {
        INFO(md.name);
        const Model m{ModularData(md)};
        for (const auto& h : admissible_supports(m.pg))
            for (int i = 0; i < m.md.size(); ++i)
                for (int g1 : h.members)
                    for (int g2 : h.members) {
                        const RootOfUnity lhs = charge(m.md, m.pg, i, m.pg.mul(g1, g2));
                        const RootOfUnity rhs =
                            charge(m.md, m.pg, i, g1) * charge(m.md, m.pg, i, g2);
                        CHECK(lhs == rhs);
                    }
    }
}

TEST_CASE("toric code enumeration has structure", "[algebra]") {
    const Model m(toric());
    REQUIRE(m.pg.size() == 4);
    CHECK(!m.pg.group().is_cyclic()); // Z_2 x Z_2

    const auto algebras = enumerate_schellekens(m.md, m.ft, m.pg);
    REQUIRE(!algebras.empty());
    CHECK(algebras[0].support.members == std::vector<int>{0});

    // the {1,f} support carries the electric/magnetic exchange invariant
    IntMatrix swap_em = IntMatrix::Zero(4, 4);
    swap_em(0, 0) = swap_em(1, 2) = swap_em(2, 1) = swap_em(3, 3) = 1;
    bool found = false;
    for (const auto& alg : algebras)
        if (alg.support.members == std::vector<int>{0, 3} && alg.z.z == swap_em)
            found = true;
    CHECK(found);

    // duplicates are flagged, never merged
    std::map<std::string, size_t> first_seen;
    for (size_t i = 0; i < algebras.size(); ++i) {
        std::ostringstream key;
        key << algebras[i].z.z;
        const auto [it, fresh] = first_seen.try_emplace(key.str(), i);
        if (!fresh) {
            REQUIRE(algebras[i].duplicate_of.has_value());
            CHECK(*algebras[i].duplicate_of == it->second);
        }
    }
}
