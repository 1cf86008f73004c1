//! A-polynomials of the twist knot family: elimination against printed
//! reference forms, recursion against elimination, Newton polygons, and
//! the structural verification suite.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

use taucert::apoly::{
    a_polynomial, hoste_shanahan, monic_slope_poly, newton_polygon, verify_diff_divisibility,
    verify_res_extremes, verify_unit_extremes, APoly, Provenance, VAR_L, VAR_M,
};
use taucert::exact::{parse_unipoly, MultiPoly};
use taucert::rep::TwistKnotFamily;
use taucert::resultant::check_derivative_divisibility;
use taucert::Error;

fn p(text: &str) -> MultiPoly {
    text.parse().unwrap()
}

fn elim(m: i64) -> APoly {
    a_polynomial(&TwistKnotFamily::new(m).unwrap()).unwrap()
}

fn assert_poly_eq(a: &MultiPoly, b: &MultiPoly) {
    assert!((a - b).is_zero(), "polynomials differ:\n  left:  {a}\n  right: {b}");
}

/// Reference A-polynomial of J(2,-2), the figure-eight knot, as commonly
/// printed; the canonical sign convention negates it.
fn figure_eight_printed() -> MultiPoly {
    p("L^2*M^4 - L*M^8 + L*M^6 + 2*L*M^4 + L*M^2 - L + M^4")
}

/// Reference A-polynomial of J(2,4), the 5_2 knot; already in canonical
/// sign.
fn five_two_printed() -> MultiPoly {
    p("-L^3 + L^2 - 2*L^2*M^2 - 2*L^2*M^4 + L^2*M^8 - L^2*M^10 - L*M^4 + L*M^6 - 2*L*M^10 - 2*L*M^12 + L*M^14 - M^14")
}

// --- elimination ---

#[test]
fn trefoil_eliminant_is_degree_one() {
    let a = elim(1);
    assert_poly_eq(a.poly(), &p("L + M^6"));
    assert_eq!(a.degree_l(), 1);
    assert_eq!(a.provenance(), Provenance::Eliminant);
}

#[test]
fn figure_eight_eliminant_matches_printed_form() {
    let a = elim(-1);
    let printed = figure_eight_printed();
    assert!(MultiPoly::eq_up_to_unit_and_sign(a.poly(), &printed));
    // Canonical sign is the graded-lex-positive one, the printed form's
    // negative.
    assert_poly_eq(a.poly(), &-&printed);
    assert_eq!(a.degree_l(), 2);
}

#[test]
fn five_two_eliminant_matches_printed_form() {
    let a = elim(2);
    assert_poly_eq(a.poly(), &five_two_printed());
    assert_eq!(a.degree_l(), 3);
}

#[test]
fn figure_eight_value_at_one_one() {
    let one = MultiPoly::constant(1);
    let printed =
        figure_eight_printed().substitute(VAR_L, &one).unwrap().substitute(VAR_M, &one).unwrap();
    assert_eq!(printed.as_constant().unwrap(), BigInt::from(4));
    let canon =
        elim(-1).poly().substitute(VAR_L, &one).unwrap().substitute(VAR_M, &one).unwrap();
    assert_eq!(canon.as_constant().unwrap(), BigInt::from(-4));
}

#[test]
fn five_two_at_fourth_root_of_unity_is_a_cube() {
    // All M-exponents are even, so M^2 = -1 is an exact integer
    // substitution; the value collapses to a perfect cube in L, which is
    // why three distinct characters share one boundary restriction there.
    let a = elim(2);
    let mut value = MultiPoly::constant(0);
    for (e, c) in a.poly().coefficients_in(VAR_M) {
        assert_eq!(e % 2, 0, "odd M-exponent {e}");
        let sign = if (e / 2) % 2 == 0 { 1 } else { -1 };
        value = &value + &(&c * &MultiPoly::constant(sign));
    }
    let cube = p("L - 1").pow(3);
    assert!(MultiPoly::eq_up_to_unit_and_sign(&value, &cube));
    assert_poly_eq(&value, &-&cube);
}

// --- recursion ---

#[test]
fn unknot_recursion_is_one() {
    let a = hoste_shanahan(0).unwrap();
    assert!(a.poly().is_one());
    assert_eq!(a.provenance(), Provenance::Recursion);
    assert_eq!(a.degree_l(), 0);
}

#[test]
fn recursion_delegates_to_elimination_at_base_indices() {
    for m in [-1, 1, 2] {
        let a = hoste_shanahan(m).unwrap();
        assert_eq!(a.provenance(), Provenance::Eliminant);
        assert_poly_eq(a.poly(), elim(m).poly());
    }
}

#[test]
fn ascending_recursion_agrees_with_elimination() {
    for m in [3, 4] {
        let rec = hoste_shanahan(m).unwrap();
        assert_eq!(rec.provenance(), Provenance::Recursion);
        assert_poly_eq(rec.poly(), elim(m).poly());
    }
}

#[test]
fn descending_recursion_agrees_with_elimination() {
    for m in [-2, -3] {
        let rec = hoste_shanahan(m).unwrap();
        assert_eq!(rec.provenance(), Provenance::Recursion);
        assert_poly_eq(rec.poly(), elim(m).poly());
    }
}

#[test]
fn recursion_operands_satisfy_derivative_divisibility() {
    // The two recursion operands vanish to high order at L = -1 relative
    // to M^2 - 1, which is what pushes the divisibility of the family's
    // derivatives through the recursion step.
    let x = p("-L + L^2 + 2*L*M^2 + M^4 + 2*L*M^4 + L^2*M^4 + 2*L*M^6 + M^8 - L*M^8");
    let y = {
        let base = p("L + M^2");
        let sq = &base * &base;
        &p("M^4") * &(&sq * &sq)
    };
    let base = p("M^2 - 1");
    let minus_one = MultiPoly::constant(-1);
    for k in 0..2u32 {
        let value = x.scaled_derivative(VAR_L, k).unwrap().substitute(VAR_L, &minus_one).unwrap();
        value.divide_exact(&base.pow(2 - k)).unwrap_or_else(|e| {
            panic!("x operand: order {k} not divisible by (M^2-1)^{}: {e}", 2 - k)
        });
    }
    for k in 0..4u32 {
        let value = y.scaled_derivative(VAR_L, k).unwrap().substitute(VAR_L, &minus_one).unwrap();
        value.divide_exact(&base.pow(4 - k)).unwrap_or_else(|e| {
            panic!("y operand: order {k} not divisible by (M^2-1)^{}: {e}", 4 - k)
        });
    }
}

// --- inversion symmetry ---

#[test]
fn inversion_symmetry_up_to_units() {
    let inv_l = MultiPoly::monomial(&[VAR_L], &[-1], BigInt::one());
    let inv_m = MultiPoly::monomial(&[VAR_M], &[-1], BigInt::one());
    for m in [-3, -2, -1, 1, 2, 3] {
        let a = hoste_shanahan(m).unwrap();
        let flipped =
            a.poly().substitute(VAR_L, &inv_l).unwrap().substitute(VAR_M, &inv_m).unwrap();
        assert!(
            MultiPoly::eq_up_to_unit_and_sign(a.poly(), &flipped),
            "m = {m}: A(L,M) differs from A(1/L,1/M) beyond a unit"
        );
    }
}

// --- Newton polygons ---

#[test]
fn newton_polygon_of_figure_eight() {
    let np = newton_polygon(&elim(-1)).unwrap();
    assert_eq!(np.vertices(), &[(0, 4), (1, 0), (2, 4), (1, 8)]);
    assert_eq!(
        np.slopes(),
        &[Some((-4, 1)), Some((4, 1)), Some((-4, 1)), Some((4, 1))]
    );
    assert!(!np.is_degenerate());
    assert!(np.all_slopes_even());
}

#[test]
fn newton_polygon_slopes_even_across_family() {
    for m in [-3, -2, -1, 1, 2, 3] {
        let np = newton_polygon(&hoste_shanahan(m).unwrap()).unwrap();
        // The trefoil is degree 1 in L, so its polygon is a segment.
        assert_eq!(np.is_degenerate(), m == 1, "m = {m}");
        assert!(np.all_slopes_even(), "m = {m}: slopes {:?}", np.slopes());
    }
}

#[test]
fn newton_polygon_degenerate_supports() {
    // Constant support: one vertex, no sides.
    let np = newton_polygon(&hoste_shanahan(0).unwrap()).unwrap();
    assert_eq!(np.vertices(), &[(0, 0)]);
    assert!(np.slopes().is_empty());
    assert!(np.is_degenerate());
    assert!(!np.all_slopes_even());

    // Collinear support: normalization strips the unit monomial L*M and
    // leaves the segment from (0,0) to (2,4).
    let seg = APoly::from_raw(99, p("L*M + L^3*M^5")).unwrap();
    let np = newton_polygon(&seg).unwrap();
    assert_eq!(np.vertices(), &[(0, 0), (2, 4)]);
    assert_eq!(np.slopes(), &[Some((2, 1))]);
    assert!(np.is_degenerate());
}

// --- unit extremes ---

#[test]
fn unit_extremes_of_figure_eight() {
    let report = verify_unit_extremes(&elim(-1)).unwrap();
    assert_eq!(report.leading_l_degree, 2);
    assert_eq!(report.leading_m_power, 4);
    assert_eq!(report.leading_sign, -1);
    assert_eq!(report.trailing_l_degree, 0);
    assert_eq!(report.trailing_m_power, 4);
    assert_eq!(report.trailing_sign, -1);
}

#[test]
fn unit_extremes_of_five_two() {
    let report = verify_unit_extremes(&elim(2)).unwrap();
    assert_eq!(report.leading_l_degree, 3);
    assert_eq!(report.leading_m_power, 0);
    assert_eq!(report.leading_sign, -1);
    assert_eq!(report.trailing_l_degree, 0);
    assert_eq!(report.trailing_m_power, 14);
    assert_eq!(report.trailing_sign, -1);
}

#[test]
fn unit_extremes_reject_planted_counterexample() {
    let planted = APoly::from_raw(7, p("2*L^2 + M")).unwrap();
    assert_poly_eq(planted.poly(), &p("2*L^2 + M"));
    let err = verify_unit_extremes(&planted).unwrap_err();
    match err {
        Error::CertificationFailed(msg) => {
            assert!(msg.contains("leading"), "message: {msg}");
            assert!(msg.contains("not a unit monomial"), "message: {msg}");
        }
        other => panic!("expected certification failure, got {other:?}"),
    }
}

// --- slope resultant extremes ---

#[test]
fn res_extremes_are_units_for_sample_slopes() {
    for (m, pp, q) in [(-1i64, 1i64, 1i64), (2, -1, 3), (-1, 1, 5)] {
        let report = verify_res_extremes(&elim(m), pp, q).unwrap();
        assert_eq!(report.p, pp);
        assert_eq!(report.q, q);
        assert!(report.high_degree > report.low_degree, "m={m} p={pp} q={q}");
        assert!(report.low_coeff == 1 || report.low_coeff == -1);
        assert!(report.high_coeff == 1 || report.high_coeff == -1);
    }
}

#[test]
fn res_extremes_reject_bad_slopes() {
    let a = elim(-1);
    assert!(matches!(verify_res_extremes(&a, 1, 0), Err(Error::InvalidInput(_))));
    assert!(matches!(verify_res_extremes(&a, 1, -2), Err(Error::InvalidInput(_))));
    assert!(matches!(verify_res_extremes(&a, 2, 1), Err(Error::InvalidInput(_))));
}

// --- derivative divisibility at L = -1 ---

#[test]
fn diff_divisibility_five_two_quotients() {
    let report = verify_diff_divisibility(2).unwrap();
    assert_eq!(report.degree, 3);
    // Quotients for the opposite overall sign of A are commonly printed;
    // the canonical sign flips them all.
    let expected = [
        p("-2*M^8 - 4*M^6 - 5*M^4 - 4*M^2 - 2"),
        p("M^10 - M^6 - 4*M^4 - 6*M^2 - 5"),
        p("-M^8 - 2*M^2 - 4"),
    ];
    assert_eq!(report.quotients.len(), expected.len());
    for (got, want) in report.quotients.iter().zip(&expected) {
        assert_poly_eq(got, want);
    }
}

#[test]
fn diff_divisibility_across_family() {
    for (m, degree) in [(-1i64, 2u32), (-2, 4), (1, 1), (3, 5)] {
        let report = verify_diff_divisibility(m).unwrap();
        assert_eq!(report.m, m);
        assert_eq!(report.degree, degree);
        assert_eq!(report.quotients.len(), degree as usize);
        for q in &report.quotients {
            assert!(!q.is_zero());
        }
    }
}

// --- slope resultant divisibility certificates ---

#[test]
fn slope_resultant_divisibility_grid() {
    let minus_one = MultiPoly::constant(-1);
    for m in [-3i64, -2, -1, 1, 2, 3] {
        let a = hoste_shanahan(m).unwrap();
        let d = u32::try_from(TwistKnotFamily::new(m).unwrap().phi_degree()).unwrap();
        for pp in [1i32, -1] {
            for q in [1i32, 3, 5] {
                let g = &MultiPoly::monomial(&[VAR_L, VAR_M], &[q, pp], BigInt::one())
                    - &MultiPoly::constant(1);
                let cert = check_derivative_divisibility(a.poly(), &g, VAR_L, &minus_one, d)
                    .unwrap_or_else(|e| panic!("m={m} p={pp} q={q}: {e}"));
                assert!(cert.verify(), "m={m} p={pp} q={q}: certificate fails to re-verify");
            }
        }
    }
}

// --- monic slope polynomials ---

#[test]
fn slope_polys_are_monic_with_unit_value() {
    for (m, q) in [(-1i64, 1i64), (1, 1), (-2, 1), (2, 3)] {
        let f = monic_slope_poly(m, q).unwrap();
        assert_eq!(f.var(), "s");
        assert!(f.is_monic(), "m={m} q={q}: {f}");
        assert!(f.eval_int(&BigInt::one()).abs().is_one(), "m={m} q={q}: f(1) not a unit");
    }
}

#[test]
fn slope_poly_even_denominator_matches_known_eliminant() {
    // q = 2 sits outside the unit-value theorem, and indeed f(1) = -49;
    // the polynomial itself is still monic and matches the lens-space
    // eliminant of the figure-eight at slope 1/2.
    let f = monic_slope_poly(-1, 2).unwrap();
    let expected = parse_unipoly(
        "s^14 + 2*s^13 + s^12 - 4*s^10 - 8*s^9 - 10*s^8 - 13*s^7 - 10*s^6 - 8*s^5 - 4*s^4 + s^2 + 2*s + 1",
        "s",
    )
    .unwrap();
    assert_eq!(f, expected);
    assert_eq!(f.eval_int(&BigInt::one()), BigInt::from(-49));
    assert_eq!(f.eval_int(&BigInt::from(-1)), BigInt::one());
}

#[test]
fn slope_poly_rejects_nonpositive_q() {
    assert!(matches!(monic_slope_poly(-1, 0), Err(Error::InvalidInput(_))));
    assert!(matches!(monic_slope_poly(-1, -3), Err(Error::InvalidInput(_))));
}

// --- raw-candidate auditing ---

#[test]
fn from_raw_logs_removed_factors() {
    // (L - 1)^2 * (L + M)^2 * 3 * L * M: content, unit monomial, abelian
    // factor, and repeated factor all get stripped and logged.
    let raw = &(&(&p("L - 1").pow(2) * &p("L + M").pow(2)) * &p("3")) * &p("L*M");
    let audited = APoly::from_raw(5, raw).unwrap();
    assert_poly_eq(audited.poly(), &p("L + M"));
    let stages: Vec<&str> = audited.removed_factors().iter().map(|f| f.stage.as_str()).collect();
    assert!(stages.contains(&"unit-monomial"), "stages: {stages:?}");
    assert!(stages.contains(&"integer-content"), "stages: {stages:?}");
    assert!(stages.contains(&"abelian-factor"), "stages: {stages:?}");
    assert!(stages.contains(&"repeated-factor"), "stages: {stages:?}");
    let abelian = audited
        .removed_factors()
        .iter()
        .find(|f| f.stage == "abelian-factor")
        .unwrap();
    assert_eq!(abelian.multiplicity, 2);
}

#[test]
fn from_raw_rejects_zero() {
    assert!(matches!(
        APoly::from_raw(1, MultiPoly::constant(0)),
        Err(Error::Computation(_))
    ));
}

// --- properties ---

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// Recursion output stays within the family's structural envelope.
    #[test]
    fn recursion_output_is_structurally_sound(m in -4i64..=4) {
        prop_assume!(m != 0);
        let a = hoste_shanahan(m).unwrap();
        let d = i32::try_from(TwistKnotFamily::new(m).unwrap().phi_degree()).unwrap();
        prop_assert_eq!(a.degree_l(), d);
        prop_assert!(verify_unit_extremes(&a).is_ok());
        prop_assert!(newton_polygon(&a).unwrap().all_slopes_even());
    }
}
