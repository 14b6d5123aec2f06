#include <doctest.h>

#include <numeric>

#include "hopffact/classify.hpp"

using namespace hopffact;

TEST_CASE("iso_criterion examples over GF(13), m=3, n=4") {
    const Field f = make_field(FieldSpec::gf(13));
    SUBCASE("t=1, t'=3 gives (l,s) = (0,3)") {
        const auto sol = iso_criterion(1, 3, 3, 4, f);
        REQUIRE(sol.has_value());
        CHECK(sol->l == 0);
        CHECK(sol->s == 3);
    }
    SUBCASE("(t,t) always solves with (0,1)") {
        for (int t = 0; t < 4; ++t) {
            const auto sol = iso_criterion(t, t, 3, 4, f);
            REQUIRE(sol.has_value());
            CHECK(sol->l == 0);
            CHECK(sol->s == 1);
        }
    }
    SUBCASE("t=1, t'=2 has no solution") {
        CHECK(!iso_criterion(1, 2, 3, 4, f).has_value());
    }
    SUBCASE("no primitive m-th root") {
        CHECK_THROWS_AS(iso_criterion(0, 0, 5, 4, f), NoPrimitiveRootError);
    }
}

TEST_CASE("iso_criterion is independent of the generator choice") {
    // re-run the scan with every alternate generator xi' = xi^c, gcd(c,nu)=1
    const Field f = make_field(FieldSpec::gf(13));
    const int m = 3, n = 4;
    const RootsOfUnity ru = roots_of_unity(f, n);
    const FieldElem q = primitive_root_of_unity(f, m);
    std::vector<FieldElem> qpow(m, f.one());
    for (int l = 1; l < m; ++l) qpow[l] = qpow[l - 1] * q;
    for (std::uint64_t c = 1; c < ru.nu; ++c) {
        if (std::gcd(c, ru.nu) != 1) continue;
        const FieldElem alt = ru.generator.pow(static_cast<std::int64_t>(c));
        for (int t = 0; t < static_cast<int>(ru.nu); ++t)
            for (int t2 = 0; t2 < static_cast<int>(ru.nu); ++t2) {
                bool found = false;
                for (int s = 0; s < n && !found; ++s) {
                    if (std::gcd(s, n) != 1) continue;
                    const FieldElem lhs = alt.pow(static_cast<std::int64_t>(s) * t2 - t);
                    for (int l = 0; l < m; ++l) found |= (lhs == qpow[l]);
                }
                CHECK(found == iso_criterion(t, t2, m, n, f).has_value());
            }
    }
}

TEST_CASE("canonical_representative") {
    const Field f = make_field(FieldSpec::gf(13));
    CHECK(canonical_representative(3, 3, 4, f) == 1);   // gcd(3, 4)
    CHECK(canonical_representative(0, 3, 4, f) == 4);   // gcd(0, k) = k
    CHECK(canonical_representative(2, 3, 4, f) == 2);
    // contract: T^{xi^t} is isomorphic to its representative
    for (const auto& [m, n] : {std::pair{3, 4}, {4, 6}, {3, 3}}) {
        const std::uint64_t nu = nu_of(f, n);
        for (std::uint64_t t = 0; t < nu; ++t) {
            const std::uint64_t rep = canonical_representative(t, m, n, f);
            CHECK(iso_criterion(static_cast<std::int64_t>(t),
                                static_cast<std::int64_t>(rep % nu), m, n, f)
                      .has_value());
        }
    }
}

TEST_CASE("count_classes on the published grids") {
    const Field f13 = make_field(FieldSpec::gf(13));
    SUBCASE("m=3, n=4 over GF(13)") {
        const ClassificationReport r = count_classes(3, 4, f13);
        CHECK(r.nu == 4);
        CHECK(r.d == 1);
        CHECK(r.nu_over_d_factorization.factors ==
              std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}});
        CHECK(r.count == 3);
        CHECK(r.representatives == std::vector<std::uint64_t>{1, 2, 4});
    }
    SUBCASE("m=4, n=6 over GF(13)") {
        const ClassificationReport r = count_classes(4, 6, f13);
        CHECK(r.nu == 6);
        CHECK(r.d == 2);
        CHECK(r.count == 2);
    }
    SUBCASE("m=3, n=3 over GF(13)") {
        const ClassificationReport r = count_classes(3, 3, f13);
        CHECK(r.nu == 3);
        CHECK(r.d == 3);
        CHECK(r.count == 1);
    }
    SUBCASE("m=2, n=2 over GF(5)") {
        const Field f5 = make_field(FieldSpec::gf(5));
        const ClassificationReport r = count_classes(2, 2, f5);
        CHECK(r.nu == 2);
        CHECK(r.d == 2);
        CHECK(r.count == 1);
    }
}

TEST_CASE("pairwise classes are exactly the canonical_representative fibers") {
    const Field f = make_field(FieldSpec::gf(13));
    for (const auto& [m, n] : {std::pair{3, 4}, {4, 6}, {3, 3}, {2, 6}}) {
        const ClassificationReport r = count_classes(m, n, f);
        for (std::uint64_t t = 0; t < r.nu; ++t)
            for (std::uint64_t t2 = 0; t2 < r.nu; ++t2) {
                const bool same_fiber = canonical_representative(t, m, n, f) ==
                                        canonical_representative(t2, m, n, f);
                CHECK(r.pairwise[t][t2] == same_fiber);
            }
    }
}

TEST_CASE("distinct divisors of nu/d are never isomorphic") {
    const Field f = make_field(FieldSpec::gf(13));
    for (const auto& [m, n] : {std::pair{3, 4}, {4, 6}, {2, 4}}) {
        const std::uint64_t nu = nu_of(f, n);
        const std::uint64_t d = std::gcd(static_cast<std::uint64_t>(m), nu);
        const auto divs = divisors(nu / d);
        for (std::uint64_t d1 : divs)
            for (std::uint64_t d2 : divs)
                if (d1 != d2)
                    CHECK(!iso_criterion(static_cast<std::int64_t>(d1 % nu),
                                         static_cast<std::int64_t>(d2 % nu), m, n, f)
                               .has_value());
    }
}

TEST_CASE("witness_isomorphism") {
    const Field f = make_field(FieldSpec::gf(13));
    SUBCASE("t=1 ~ t'=3: bezout data and exact inverses") {
        const IsoWitness w = witness_isomorphism(1, 3, 3, 4, f);
        CHECK(w.l == 0);
        CHECK(w.s == 3);
        CHECK(w.bezout.tau == 3);
        CHECK(w.bezout.mu == -2);
        CHECK(w.bezout.tau1 == 3);
        CHECK(w.bezout.tau2 == 0);
        CHECK(w.bezout.tau == w.bezout.alpha * 4 + w.bezout.tau1);
        CHECK(static_cast<std::int64_t>(w.l) * w.bezout.tau ==
              w.bezout.beta * 3 + w.bezout.tau2);
        CHECK(is_identity(w.forward.matrix * w.inverse.matrix));
        CHECK(is_identity(w.inverse.matrix * w.forward.matrix));
        CHECK(is_hopf_morphism(w.forward).pass());
        CHECK(is_hopf_morphism(w.inverse).pass());
        CHECK(is_bijective(w.forward));
    }
    SUBCASE("t = t' gives identity maps") {
        const IsoWitness w = witness_isomorphism(2, 2, 3, 4, f);
        CHECK(is_identity(w.forward.matrix));
        CHECK(is_identity(w.inverse.matrix));
    }
    SUBCASE("non-isomorphic pair throws") {
        CHECK_THROWS_AS(witness_isomorphism(1, 2, 3, 4, f), NotIsomorphicError);
    }
    SUBCASE("witnesses work over the cyclotomic backend") {
        const Field c12 = make_field(FieldSpec::cyc(12));
        const IsoWitness w = witness_isomorphism(1, 3, 3, 4, c12);
        CHECK(w.s == 3);
        CHECK(is_identity(w.forward.matrix * w.inverse.matrix));
    }
}

TEST_CASE("automorphism_group") {
    const Field f = make_field(FieldSpec::gf(13));
    SUBCASE("t=0: S^0 = {(0,s) : gcd(s,n)=1} of order phi(n)") {
        for (int n : {2, 3, 4, 6}) {
            const AutGroup g = automorphism_group(0, 3, n, f);
            CHECK(g.order == totient(n));
            for (const auto& [l, s] : g.elements) {
                CHECK(l == 0);
                CHECK(std::gcd(s, n) == 1);
            }
            CHECK(g.elements.front() == std::pair<int, int>{0, 1 % n});
        }
    }
    SUBCASE("t=1, m=3, n=4: only the identity survives") {
        const AutGroup g = automorphism_group(1, 3, 4, f);
        CHECK(g.order == 1);
        CHECK(g.elements == std::vector<std::pair<int, int>>{{0, 1}});
    }
    SUBCASE("field_star stays symbolic") {
        CHECK(automorphism_group(0, 3, 4, f).field_star_symbolic);
    }
}

TEST_CASE("brute_force_hopf_isos over GF(7), (m,n) = (3,2)") {
    const Field f = make_field(FieldSpec::gf(7));
    const FieldElem q = primitive_root_of_unity(f, 3);
    const RootsOfUnity ru = roots_of_unity(f, 2);
    const HopfAlgebra t1 = t_quantum_group(f, 3, q, 2, ru.generator);       // T^{xi}
    const HopfAlgebra t0 = t_quantum_group(f, 3, q, 2, f.one());            // T^{xi^0}

    SUBCASE("automorphism count of T^{xi} is (p-1) |S^1| = 6") {
        const auto isos = brute_force_hopf_isos(t1, t1, 3, 2);
        CHECK(isos.size() == 6);
        for (const auto& iso : isos) {
            CHECK(is_hopf_morphism(iso).pass());
            CHECK(is_bijective(iso));
        }
    }
    SUBCASE("T^{xi} and T^{xi^0} are in distinct classes") {
        CHECK(brute_force_hopf_isos(t1, t0, 3, 2).empty());
    }
    SUBCASE("dimension mismatch is empty immediately") {
        const HopfAlgebra small = t_quantum_group(f, 3, q, 1, f.one());
        CHECK(brute_force_hopf_isos(t1, small, 3, 2).empty());
    }
    SUBCASE("budget precondition") {
        CHECK_THROWS_AS(brute_force_hopf_isos(t1, t1, 3, 2, 10), BudgetExceededError);
    }
}

TEST_CASE("criterion and brute-force oracle agree") {
    SUBCASE("GF(7), (m,n) = (3,2): all 4 ordered exponent pairs") {
        const Field f = make_field(FieldSpec::gf(7));
        const FieldElem q = primitive_root_of_unity(f, 3);
        const RootsOfUnity ru = roots_of_unity(f, 2);
        for (int t = 0; t < 2; ++t)
            for (int t2 = 0; t2 < 2; ++t2) {
                const HopfAlgebra h1 =
                    t_quantum_group(f, 3, q, 2, ru.generator.pow(t));
                const HopfAlgebra h2 =
                    t_quantum_group(f, 3, q, 2, ru.generator.pow(t2));
                const bool criterion = iso_criterion(t, t2, 3, 2, f).has_value();
                const bool found = !brute_force_hopf_isos(h1, h2, 3, 2).empty();
                CHECK(criterion == found);
            }
    }
    SUBCASE("GF(5), (m,n) = (2,2)") {
        const Field f = make_field(FieldSpec::gf(5));
        const FieldElem q = primitive_root_of_unity(f, 2);
        const RootsOfUnity ru = roots_of_unity(f, 2);
        for (int t = 0; t < 2; ++t)
            for (int t2 = 0; t2 < 2; ++t2) {
                const HopfAlgebra h1 = t_quantum_group(f, 2, q, 2, ru.generator.pow(t));
                const HopfAlgebra h2 = t_quantum_group(f, 2, q, 2, ru.generator.pow(t2));
                const bool criterion = iso_criterion(t, t2, 2, 2, f).has_value();
                CHECK(criterion == !brute_force_hopf_isos(h1, h2, 2, 2).empty());
            }
    }
}

TEST_CASE("report rendering is deterministic and complete") {
    const Field f = make_field(FieldSpec::gf(13));
    const ClassificationReport r = count_classes(3, 4, f);
    const std::string j1 = report_json(r), j2 = report_json(count_classes(3, 4, f));
    CHECK(j1 == j2);
    CHECK(j1.find("\"count\": 3") != std::string::npos);
    CHECK(j1.find("\"representatives\": [") != std::string::npos);

    const std::string csv = report_csv(r);
    // one row per ordered (t, t') pair
    std::size_t pair_rows = 0;
    std::istringstream is(csv);
    std::string line;
    bool in_pairs = false;
    while (std::getline(is, line)) {
        if (line == "t,t_prime,isomorphic") {
            in_pairs = true;
            continue;
        }
        if (line.empty()) in_pairs = false;
        if (in_pairs) ++pair_rows;
    }
    CHECK(pair_rows == r.nu * r.nu);

    const std::string text = report_text(r);
    CHECK(text.find("isomorphism classes: 3") != std::string::npos);
}
