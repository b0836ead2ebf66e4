#include <doctest.h>

#include <garnir/io.hpp>
#include <garnir/omega.hpp>

#include <sstream>

using namespace garnir;

TEST_CASE("pinned eigenvalue zeros and nonzeros") {
    CHECK(omega(5, 4, 2, 1) == 0);
    CHECK(omega(9, 7, 3, 2) == 0);
    CHECK(omega(5, 4, 2, 0) != 0);
    CHECK(omega(5, 4, 2, 2) != 0);
    CHECK(omega(4, 3, 2, 1) != 0);
    CHECK_THROWS_AS(omega(3, 4, 1, 0), shape_error);
    CHECK_THROWS_AS(omega(4, 3, 4, 0), shape_error);
    CHECK_THROWS_AS(omega(4, 3, 0, 0), shape_error);
    CHECK_THROWS_AS(omega(4, 3, 1, 4), shape_error);
}

TEST_CASE("top component always lies in the kernel") {
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= n; ++m)
            for (int l = 1; l <= m; ++l) CHECK(omega(n, m, l, m) == 0);
}

TEST_CASE("closed forms at the extreme exchange sizes") {
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= n; ++m) {
            for (int i = 0; i <= m; ++i) {
                CHECK(omega(n, m, 1, i) == BigInt((m - i) * (n - i + 1)));
                BigInt expect = 1 - binomial(n - i, m - i) *
                                        ((m - i) % 2 ? -1 : 1);
                CHECK(omega(n, m, m, i) == expect);
            }
        }
}

TEST_CASE("omega table invariants") {
    const OmegaTable table(6, 4);
    for (int l = 1; l <= 4; ++l) CHECK(table.value(l, 4) == 0);
    for (int i = 0; i <= 4; ++i)
        CHECK(table.value(1, i) == BigInt((4 - i) * (6 - i + 1)));
    CHECK_THROWS_AS(table.value(5, 0), shape_error);
    CHECK_THROWS_AS(table.value(0, 0), shape_error);
}

TEST_CASE("trace identity") {
    CHECK(trace_identity_check(1, 1, 1));
    CHECK(trace_identity_check(8, 7, 3));
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= n; ++m)
            for (int l = 1; l <= m; ++l) CHECK(trace_identity_check(n, m, l));
}

TEST_CASE("alternating exchange condition") {
    CHECK_FALSE(mms_condition(5, 4, 2));
    CHECK_FALSE(mms_condition(7, 3, 2));
    CHECK(mms_condition(4, 3, 2));
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= n; ++m) CHECK(mms_condition(n, m, 1));
}

TEST_CASE("zero scans") {
    SUBCASE("no zeros below n = 5 with l < m") {
        const ScanResult r = scan_zero_tuples(4, /*ell_lt_m=*/true);
        CHECK(r.zeros.empty());
        CHECK(r.triples.empty());
    }

    SUBCASE("n <= 7 zeros, l < m") {
        const ScanResult r = scan_zero_tuples(7, /*ell_lt_m=*/true);
        const std::vector<ZeroTuple> expected = {
            {5, 4, 2, 1}, {6, 4, 3, 2}, {6, 6, 4, 3},
            {6, 6, 5, 3}, {7, 3, 2, 1}, {7, 5, 3, 1},
            {7, 6, 5, 3}, {7, 6, 5, 4}, {7, 7, 5, 4},
        };
        CHECK(r.zeros == expected);
        CHECK(r.triples.size() == 8);  // (7,6,5) carries two zeros
        CHECK(r.triples_with_count(2) == 1);
    }

    SUBCASE("domain sizes") {
        const ScanResult le = scan_zero_tuples(50);
        CHECK(le.total_triples == 22100);
        const ScanResult lt = scan_zero_tuples(5, /*ell_lt_m=*/true);
        // sum over m <= n <= 5 of (m-1)
        CHECK(lt.total_triples == 0 + 1 + (1 + 2) + (1 + 2 + 3) +
                                      (1 + 2 + 3 + 4));
    }

    SUBCASE("csv format") {
        const ScanResult r = scan_zero_tuples(5, /*ell_lt_m=*/true);
        std::ostringstream out;
        write_scan_csv(r, out);
        CHECK(out.str() == "n,m,l,i\n5,4,2,1\n");
    }

    SUBCASE("summary phrasing") {
        const ScanResult r = scan_zero_tuples(7, /*ell_lt_m=*/true);
        CHECK(scan_summary(r) ==
              "8 triples with zeros; 7 with one zero; 1 with two");
    }
}

TEST_CASE("scans are deterministic across runs") {
    const ScanResult a = scan_zero_tuples(20);
    const ScanResult b = scan_zero_tuples(20);
    CHECK(a.zeros == b.zeros);
    CHECK(a.triples == b.triples);
    CHECK(a.total_triples == b.total_triples);
}

TEST_CASE("equivalence of the two condition families, small range") {
    CHECK(condition_equivalence_check(5));
    CHECK(condition_equivalence_check(12));
}

TEST_CASE("scan json is well-formed and ordered") {
    const ScanResult r = scan_zero_tuples(5, /*ell_lt_m=*/true);
    const ordered_json j = scan_to_json(r);
    CHECK(j["n_max"] == 5);
    CHECK(j["domain"] == "l<m");
    CHECK(j["zeros"].size() == 1);
    CHECK(j["zeros"][0]["n"] == 5);
    CHECK(j["zeros"][0]["i"] == 1);
}
