/// @file test_so4.cpp
/// @brief Deformed commutators, derived generators, relation verification and
///        Casimirs on hand-computable representations.
///
/// The one-dimensional representation with all three generators equal to
/// [1/2]+ is the sharpest hand oracle in the suite: every product is scalar,
/// so all derived generators, relation residuals, and both Casimir forms have
/// closed hand-checked values (frozen below).

#include "doctest.h"
#include "qso4/so4.hpp"

using namespace qso4;

namespace {

Scalar q() { return q_pow(HalfInt(1)); }
Scalar qi() { return q_pow(HalfInt(-1)); }

So4Rep one_dim_nonclassical() {
    So4Rep rep;
    rep.dim = 1;
    rep.I21 = Matrix<Scalar>(1, 1);
    rep.I32 = Matrix<Scalar>(1, 1);
    rep.I43 = Matrix<Scalar>(1, 1);
    rep.I21(0, 0) = qplus(kHalf);
    rep.I32(0, 0) = qplus(kHalf);
    rep.I43(0, 0) = qplus(kHalf);
    rep.provenance = "hand-built";
    return rep;
}

So4Rep zero_rep(std::size_t n) {
    So4Rep rep;
    rep.dim = n;
    rep.I21 = Matrix<Scalar>(n, n);
    rep.I32 = Matrix<Scalar>(n, n);
    rep.I43 = Matrix<Scalar>(n, n);
    rep.provenance = "hand-built";
    return rep;
}

}  // namespace

TEST_SUITE("so4") {
    TEST_CASE("deformed commutator basics") {
        Matrix<Scalar> a(1, 1), b(1, 1);
        a(0, 0) = Scalar(3);
        b(0, 0) = q();
        // On scalars, [a,b]_q = (q^(1/2) - q^(-1/2)) a b.
        CHECK(q_comm(a, b)(0, 0) == (q_pow(kHalf) - q_pow(-kHalf)) * Scalar(3) * q());
        CHECK(q_comm(a, b, CommVariant::QInv)(0, 0) ==
              (q_pow(-kHalf) - q_pow(kHalf)) * Scalar(3) * q());
        Matrix<Scalar> wrong(2, 1);
        CHECK_THROWS_AS(q_comm(a, wrong), ShapeMismatch);
    }

    TEST_CASE("zero representation passes all relations") {
        const So4Rep rep = zero_rep(2);
        const RelationReport report = verify_relations(rep);
        CHECK(report.all_pass());
        CHECK(report.entries.size() == 10);
        CHECK(report.entries.at("(6)").passes);
        CHECK(report.entries.at("(15)").passes);
        CHECK(report.i41_routes_agree);
    }

    TEST_CASE("one-dimensional nonclassical representation") {
        const So4Rep rep = one_dim_nonclassical();
        const Scalar sigma = qplus(kHalf);

        SUBCASE("relations hold exactly") {
            const RelationReport report = verify_relations(rep);
            CHECK(report.all_pass());
        }

        SUBCASE("perturbing a generator breaks the cubic relations") {
            So4Rep bad = rep;
            bad.I32(0, 0) = sigma + Scalar(1);
            CHECK(!verify_relations(bad).all_pass());
        }

        SUBCASE("derived generators are hand-checkable") {
            const DerivedGenerators d = derived_generators(rep);
            // [sigma, sigma]_q = (q^(1/2) - q^(-1/2)) sigma^2 = sigma, since
            // sigma = 1/(q^(1/2) - q^(-1/2)).
            CHECK(d.I31(0, 0) == sigma);
            CHECK(d.I42(0, 0) == sigma);
            CHECK(d.I41(0, 0) == sigma);
            CHECK(d.I31m(0, 0) == -sigma);
            CHECK(d.I42m(0, 0) == -sigma);
            CHECK(d.I41m(0, 0) == -sigma);
            CHECK(d.i41_routes_agree);
        }

        SUBCASE("Casimirs: frozen closed forms, documented form deviation") {
            const CasimirPair cp = casimirs(rep);
            const Scalar sigma2 = sigma * sigma;
            // First Casimir: (q^(-1) - 1 + q) sigma^2, which equals the
            // highest-weight closed form [3/2]+ [1/2]+.
            CHECK(cp.c4(0, 0) == (qi() - Scalar(1) + q()) * sigma2);
            CHECK(cp.c4(0, 0) == qplus(3 * kHalf) * qplus(kHalf));
            // Expanded second Casimir matches the highest-weight closed form
            // (q^2 + q^(-2)) [1/2]+ [3/2]+ - [1][3].
            const Scalar expected_c4p =
                (q_pow(HalfInt(2)) + q_pow(HalfInt(-2))) * qplus(kHalf) * qplus(3 * kHalf) -
                qint(HalfInt(1)) * qint(HalfInt(3));
            CHECK(cp.c4p(0, 0) == expected_c4p);
            // The compact printed form evaluates to a DIFFERENT scalar on this
            // nonclassical representation — the deviation is the documented
            // erratum, frozen here exactly.
            const Scalar compact_value =
                (q_pow(HalfInt(2)) + q_pow(HalfInt(-2)) - q() - qi()) * sigma2;
            CHECK(cp.c4p_compact(0, 0) == compact_value);
            CHECK(!cp.forms_agree);
            CHECK(cp.c4p_compact(0, 0) != cp.c4p(0, 0));
            // Spot value at s = 2 (q = 4): sigma = 2/3, so c4 = (13/4)(4/9).
            CHECK(cp.c4(0, 0).evaluate_rational(2) == GaussRat(mpq_class(13, 9)));
        }
    }

    TEST_CASE("form mismatch on a classical-family diagonal throws") {
        // A deliberately inconsistent triple whose I21 looks classical
        // (diagonal i[m] values): the two second-Casimir forms will not agree,
        // and on the classical family that must be reported loudly.
        So4Rep bad = zero_rep(1);
        bad.I21(0, 0) = Scalar::i() * qint(HalfInt(1));
        bad.I32(0, 0) = Scalar(2);
        bad.I43(0, 0) = Scalar::i() * qint(HalfInt(1));
        CHECK_THROWS_AS(casimirs(bad), FormMismatch);
    }

    TEST_CASE("weight eigenvalue matching") {
        // Classical values are i[m] with the sign of m recoverable.
        const WeightEigenvalue w1 =
            match_weight_eigenvalue(Scalar::i() * qint(3 * kHalf), HalfInt(4));
        CHECK(w1.family == WeightFamily::Classical);
        CHECK(w1.m == 3 * kHalf);
        const WeightEigenvalue w2 =
            match_weight_eigenvalue(-(Scalar::i() * qint(HalfInt(2))), HalfInt(4));
        CHECK(w2.family == WeightFamily::Classical);
        CHECK(w2.m == HalfInt(-2));
        // Zero is classical (m = 0).
        CHECK(match_weight_eigenvalue(Scalar(0), HalfInt(4)).family == WeightFamily::Classical);
        // Nonclassical values are +-[m]+ with |m| and the sign recoverable.
        const WeightEigenvalue w3 = match_weight_eigenvalue(-qplus(kHalf), HalfInt(4));
        CHECK(w3.family == WeightFamily::Nonclassical);
        CHECK(w3.m == kHalf);
        CHECK(w3.sign == -1);
        // Garbage matches neither family.
        CHECK(match_weight_eigenvalue(Scalar(7), HalfInt(6)).family == WeightFamily::Unknown);

        Matrix<Scalar> mixed(2, 2);
        mixed(0, 0) = Scalar::i() * qint(HalfInt(1));
        mixed(1, 1) = qplus(HalfInt(1));
        CHECK(sniff_weight_family(mixed, HalfInt(4)) == WeightFamily::Mixed);
    }

    TEST_CASE("report bookkeeping") {
        const So4Rep rep = one_dim_nonclassical();
        const RelationReport short_only = verify_relations(rep, /*include_long=*/false);
        CHECK(short_only.entries.size() == 5);
        CHECK(short_only.all_pass());
        So4Rep bad = rep;
        bad.I32(0, 0) = Scalar(1);
        const RelationReport r = verify_relations(bad);
        CHECK(!r.all_pass());
        CHECK(r.entries.at("(6)").residual_nonzeros > 0);
    }
}
