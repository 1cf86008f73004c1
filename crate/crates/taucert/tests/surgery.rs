//! Dehn surgery pipeline: slope arithmetic, exact slope polynomials,
//! torsion values against tabulated references, annihilator certificates,
//! and the closed-form integer and 1/q certificates for the figure-eight
//! knot.

use num_bigint::BigInt;
use num_traits::Signed;

use taucert::exact::{parse_unipoly, MultiPoly, UniPoly};
use taucert::numeric::perron_check;
use taucert::rep::TwistKnotFamily;
use taucert::surgery::{
    integer_surgery_eliminant, integrality_chain, one_over_q_certificate, solve_representations,
    splice_condition_check, surgery_system, torsion_annihilator, torsion_eliminant,
    torsion_expression_with, SolutionPoint, SurgerySlope, TORSION_VAR,
};
use taucert::Error;

fn p(text: &str) -> MultiPoly {
    text.parse().unwrap()
}

fn family(m: i64) -> TwistKnotFamily {
    TwistKnotFamily::new(m).unwrap()
}

fn slope(p: i64, q: i64) -> SurgerySlope {
    SurgerySlope::new(p, q).unwrap()
}

fn assert_poly_eq(a: &MultiPoly, b: &MultiPoly) {
    assert!((a - b).is_zero(), "polynomials differ:\n  left:  {a}\n  right: {b}");
}

/// One tabulated row `(s, t, tau)` as `(re, im)` pairs.
type Row = ((f64, f64), (f64, f64), (f64, f64));

/// Asserts the computed solutions match the expected rows as multisets,
/// each entry within `tol` componentwise.
fn assert_table(points: &[SolutionPoint], expected: &[Row], tol: f64) {
    assert_eq!(points.len(), expected.len(), "row count");
    let mut used = vec![false; expected.len()];
    for pt in points {
        let s = (pt.s.re.to_f64(), pt.s.im.to_f64());
        let t = (pt.t.re.to_f64(), pt.t.im.to_f64());
        let tau = (pt.tau.re.to_f64(), pt.tau.im.to_f64());
        let hit = expected.iter().enumerate().position(|(i, row)| {
            !used[i]
                && (s.0 - row.0 .0).abs() < tol
                && (s.1 - row.0 .1).abs() < tol
                && (t.0 - row.1 .0).abs() < tol
                && (t.1 - row.1 .1).abs() < tol
                && (tau.0 - row.2 .0).abs() < tol
                && (tau.1 - row.2 .1).abs() < tol
        });
        match hit {
            Some(i) => used[i] = true,
            None => panic!("unmatched solution s={s:?} t={t:?} tau={tau:?}"),
        }
    }
}

// --- slopes ---

#[test]
fn slope_normalizes_denominator_sign() {
    assert_eq!(slope(1, -2), slope(-1, 2));
    assert_eq!(slope(-1, 2).q(), 2);
    assert_eq!(slope(-1, 2).p(), 1);
}

#[test]
fn slope_rejects_degenerate_input() {
    assert!(matches!(SurgerySlope::new(1, 0), Err(Error::InvalidInput(_))));
    assert!(matches!(SurgerySlope::new(4, 2), Err(Error::InvalidInput(_))));
    assert!(matches!(SurgerySlope::new(0, 3), Err(Error::InvalidInput(_))));
}

#[test]
fn slope_parse_accepts_fraction_and_integer() {
    assert_eq!(SurgerySlope::parse("2/3").unwrap(), slope(2, 3));
    assert_eq!(SurgerySlope::parse(" -1 / 2 ").unwrap(), slope(-1, 2));
    assert_eq!(SurgerySlope::parse("5").unwrap(), slope(5, 1));
    assert!(SurgerySlope::parse("x/y").is_err());
    assert_eq!(slope(2, 3).to_string(), "2/3");
}

#[test]
fn continuation_satisfies_defining_identity() {
    for p in -6i64..=6 {
        for q in 1i64..=5 {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let sl = slope(p, q);
            let (pc, qc) = sl.continuation();
            assert_eq!(sl.p() * qc - sl.q() * pc, 1, "slope {sl}");
            let (pa, qa) = sl.alternative_continuation();
            assert_eq!(sl.p() * qa - sl.q() * pa, 1, "slope {sl} alternative");
        }
    }
}

#[test]
fn continuation_picks_minimal_pair() {
    assert_eq!(slope(1, 1).continuation(), (0, 1));
    assert_eq!(slope(1, 2).continuation(), (0, 1));
    assert_eq!(slope(1, 3).continuation(), (0, 1));
    assert_eq!(slope(2, 3).continuation(), (-1, -1));
    assert_eq!(slope(2, 1).continuation(), (-1, 0));
    assert_eq!(slope(5, 1).continuation(), (-1, 0));
    assert_eq!(slope(-3, 1).continuation(), (-1, 0));
    assert_eq!(slope(0, 1).continuation(), (-1, 0));
}

// --- slope polynomials ---

/// Eliminant of the meridian eigenvalue for the half-integer slope 1/2 on
/// the figure-eight knot; its irreducibility forces the degree-14 form,
/// and its value -49 at 1 shows 1/(s0 - 1) need not be an algebraic
/// integer for even denominators.
#[test]
fn slope_polynomial_figure_eight_one_half() {
    let sys = surgery_system(&family(-1), slope(1, 2)).unwrap();
    let expected = UniPoly::from_i64(
        "s",
        &[1, 2, 1, 0, -4, -8, -10, -13, -10, -8, -4, 0, 1, 2, 1],
    );
    assert_eq!(sys.s_poly(), &expected);
    assert_eq!(sys.s_poly().eval_int(&BigInt::from(1)), BigInt::from(-49));
    // The same polynomial arises from the A-polynomial side.
    let from_apoly = taucert::apoly::monic_slope_poly(-1, 2).unwrap();
    assert_eq!(&from_apoly, sys.s_poly());
}

/// For the integer slope 4 on the figure-eight knot the specialized
/// A-polynomial is a unit times `(s^2 + 1)^2`, so the slope polynomial is
/// `s^2 + 1`.
#[test]
fn slope_polynomial_figure_eight_four() {
    let a = taucert::apoly::hoste_shanahan(-1).unwrap();
    let spec = a
        .poly()
        .substitute("L", &MultiPoly::monomial(&["M"], &[-4], BigInt::from(1)))
        .unwrap();
    let (spec, _) = spec.clear_units();
    let square = spec.to_unipoly("M").unwrap().sign_normalized();
    assert_eq!(square, UniPoly::from_i64("M", &[1, 0, 2, 0, 1]));

    let sys = surgery_system(&family(-1), slope(4, 1)).unwrap();
    assert_eq!(sys.s_poly(), &UniPoly::from_i64("s", &[1, 0, 1]));
}

/// The specialized A-polynomial of integer surgeries on the figure-eight
/// knot: `A(s^{-p}, s)` is a unit multiple of
/// `s^{2-p} + 2 s^{4-p} + s^{6-p} - s^{8-p} - s^{-p} + s^{4-2p} + s^4`.
#[test]
fn integer_locus_matches_closed_form() {
    let a = taucert::apoly::hoste_shanahan(-1).unwrap();
    for p_coef in [1i64, 2, 3, 5, -2] {
        let spec = a
            .poly()
            .substitute("L", &MultiPoly::monomial(&["M"], &[-(p_coef as i32)], BigInt::from(1)))
            .unwrap()
            .rename_var("M", "s")
            .unwrap();
        let (spec, _) = spec.clear_units();
        let closed = p(&format!(
            "s^{} + 2*s^{} + s^{} - s^{} - s^{} + s^{} + s^4",
            2 - p_coef,
            4 - p_coef,
            6 - p_coef,
            8 - p_coef,
            -p_coef,
            4 - 2 * p_coef
        ));
        let (closed, _) = closed.clear_units();
        assert!(
            (&spec - &closed).is_zero() || (&spec + &closed).is_zero(),
            "p = {p_coef}:\n  left:  {spec}\n  right: {closed}"
        );
    }
}

// --- torsion expressions ---

/// For integer slopes on the figure-eight knot with continuation
/// `(p', q') = (-1, 0)` the torsion collapses to
/// `2(s^2 - s + 1)/(s - 1)^2` on the Riley variety.
#[test]
fn torsion_expression_integer_slope_closed_form() {
    let fam = family(-1);
    let (n, d) = torsion_expression_with(&fam, (-1, 0)).unwrap();
    let phi = taucert::rep::riley_polynomial(&fam).unwrap();
    let lhs = &n * &p("s^2 - 2*s + 1");
    let rhs = &d * &p("2*s^2 - 2*s + 2");
    let diff = &lhs - &rhs;
    let (diff, _) = diff.clear_units();
    let reduced = diff.reduce_mod_in_var(&phi, "t").unwrap();
    assert!(reduced.is_zero(), "difference does not vanish on the variety: {reduced}");
}

/// Torsion values do not depend on the continuation choice.
#[test]
fn torsion_invariant_under_continuation_change() {
    use taucert::numeric::eval_multipoly;
    let fam = family(-1);
    let sl = slope(1, 1);
    let points = solve_representations(&fam, sl, 256).unwrap();
    let (n_alt, d_alt) = torsion_expression_with(&fam, sl.alternative_continuation()).unwrap();
    let mut compared = 0;
    for pt in &points {
        if !pt.acyclic {
            continue;
        }
        let point = [("s", &pt.s), ("t", &pt.t)];
        let alt = eval_multipoly(&n_alt, &point)
            .unwrap()
            .div(&eval_multipoly(&d_alt, &point).unwrap())
            .unwrap();
        assert!(
            alt.dist(&pt.tau).to_f64() < 1e-40 * (1.0 + pt.tau.abs().to_f64()),
            "continuation mismatch at s = {}", pt.s.re.to_f64()
        );
        compared += 1;
    }
    assert!(compared > 0);
}

// --- annihilators ---

/// Torsion polynomial of +1 surgery on the figure-eight knot.
#[test]
fn one_surgery_figure_eight_annihilator() {
    let cert = torsion_annihilator(&family(-1), slope(1, 1), 256).unwrap();
    let expected = UniPoly::from_i64(TORSION_VAR, &[-8, 20, -12, 1]);
    assert_eq!(cert.annihilator, expected);
    assert!(cert.monic);
    assert!(cert.verified, "reason: {:?}", cert.reason);
    // Exact-division witness against a recomputed eliminant.
    let sys = surgery_system(&family(-1), slope(1, 1)).unwrap();
    let eliminant = torsion_eliminant(&sys).unwrap();
    assert_eq!(cert.annihilator.mul(&cert.eliminant_quotient), eliminant);
    // The figure-eight 1/q slopes exclude trace -2 by the closed form of
    // the longitude image at s = -1.
    assert!(sys.removed_factors().iter().any(|r| r.stage == "trace-minus-two"));
}

const TABLE_2_3: [Row; 12] = [
    ((-0.200325, 0.979729), (-3.42754, 0.0), (0.738094, 0.0)),
    ((0.200325, 0.979729), (-3.42754, 0.0), (5.85638, 0.0)),
    ((-0.490393, 0.871501), (-2.21504, 0.0), (2.38654, 0.0)),
    ((-1.30664, 0.0498758), (-0.392004, 0.724199), (5.8872, -0.943648)),
    ((-0.264802, 0.964303), (-1.43838, 0.0), (8.4028, 0.0)),
    ((0.490393, 0.871501), (-2.21504, 0.0), (0.0164217, 0.0)),
    ((0.264802, 0.964303), (-1.43838, 0.0), (0.258749, 0.0)),
    ((1.30664, 0.0498758), (-0.392004, -0.724199), (-0.717017, 0.0236658)),
    ((-0.764207, 0.0291705), (-0.392004, -0.724199), (5.8872, 0.943648)),
    ((0.764207, 0.0291705), (-0.392004, 0.724199), (-0.717017, -0.0236658)),
    ((-0.615146, 0.0), (-0.135036, 0.0), (1.60981, 0.0)),
    ((0.615146, 0.0), (-0.135036, 0.0), (94.3908, 0.0)),
];

/// The twelve characters of 2/3 surgery on the figure-eight knot, with
/// meridian eigenvalues, Riley parameters, and torsions matching the
/// tabulated values.
#[test]
fn two_thirds_surgery_figure_eight_table() {
    let points = solve_representations(&family(-1), slope(2, 3), 256).unwrap();
    assert_table(&points, &TABLE_2_3, 1e-4);
    assert!(points.iter().all(|pt| pt.acyclic));
    // The torsion multiset is closed under complex conjugation.
    for pt in &points {
        let conj = pt.tau.conj();
        assert!(
            points.iter().any(|other| other.tau.dist(&conj).to_f64() < 1e-6),
            "conjugate of tau missing"
        );
    }
}

#[test]
fn two_thirds_surgery_slope_and_parameter_polynomials() {
    let sys = surgery_system(&family(-1), slope(2, 3)).unwrap();
    let expected_s = UniPoly::from_i64(
        "s",
        &[
            1, 0, -3, 0, -3, 0, 8, 0, 12, 0, -7, 0, -20, 0, -7, 0, 12, 0, 8, 0, -3, 0, -3, 0, 1,
        ],
    );
    assert_eq!(sys.s_poly(), &expected_s);
    // Every Riley parameter satisfies the degree-6 eliminant in t.
    let t_poly = UniPoly::from_i64("t", &[1, 10, 23, 31, 23, 8, 1]);
    let points = solve_representations(&family(-1), slope(2, 3), 256).unwrap();
    for pt in &points {
        let v = taucert::numeric::eval_unipoly(&t_poly, &pt.t).abs().to_f64();
        let scale = (1.0 + pt.t.abs().to_f64()).powi(6);
        assert!(v < 1e-10 * scale, "t eliminant residual {v}");
    }
}

/// The annihilator of the 2/3-surgery torsions is the degree-12 monic
/// factor appearing squared in the eliminant; its dominant root is a
/// Perron number between 94 and 95.
#[test]
fn two_thirds_surgery_annihilator_and_perron() {
    let cert = torsion_annihilator(&family(-1), slope(2, 3), 256).unwrap();
    let expected = UniPoly::from_i64(
        TORSION_VAR,
        &[
            1024, -66560, 253696, 153088, -866240, 254848, 627280, -561760, 196796, -34792,
            3142, -124, 1,
        ],
    );
    assert_eq!(cert.annihilator, expected);
    assert!(cert.verified, "reason: {:?}", cert.reason);
    assert_eq!(cert.factors.len(), 1);
    assert_eq!(cert.factors[0].multiplicity, 2);
    assert_eq!(cert.factors[0].matched_solutions.len(), 12);

    assert!(expected.eval_int(&BigInt::from(94)).is_negative());
    assert!(expected.eval_int(&BigInt::from(95)).is_positive());
    let report = perron_check(&expected, 256).unwrap();
    assert!(report.is_perron, "reason: {:?}", report.reason);
    assert_eq!(report.bracket, Some((BigInt::from(94), BigInt::from(95))));
}

const TABLE_5_2: [Row; 17] = [
    ((-0.471842, 0.881683), (-2.87048, 0.0), (2.81243, 0.0)),
    ((0.165381, 0.98623), (-3.68825, 0.0), (12.3508, 0.0)),
    ((-0.200082, 0.979779), (-2.2146, 0.0), (0.490587, 0.0)),
    ((0.0681942, 0.997672), (-2.41933, 0.0), (0.313753, 0.0)),
    ((1.29286, 1.35876), (-0.182462, -0.461334), (9.57556, -0.520417)),
    ((-1.26355, 0.363134), (0.158863, 1.07159), (3.6856, -0.147423)),
    ((-0.348139, 0.937443), (-1.1692, 0.0), (4.5522, 0.0)),
    ((1.0, 0.0), (0.21508, -1.30714), (0.0, 0.0)),
    ((1.0, 0.0), (0.21508, 1.30714), (0.0, 0.0)),
    ((1.0, 0.0), (0.56984, 0.0), (0.0, 0.0)),
    ((-0.859034, 0.511919), (-0.62449, 0.0), (7.42456, 0.0)),
    ((0.313791, 0.949492), (-1.80681, 0.0), (0.0670363, 0.0)),
    ((0.942666, 0.333737), (0.0622582, 0.0), (148.658, 0.0)),
    ((0.709501, 0.704704), (-1.66753, 0.0), (1.06479, 0.0)),
    ((-0.731039, 0.210094), (0.158863, -1.07159), (3.6856, 0.147423)),
    ((0.367529, 0.386263), (-0.182462, 0.461334), (9.57556, 0.520417)),
    ((-0.986232, 0.16537), (0.445642, 0.0), (5.74328, 0.0)),
];

/// The seventeen characters of 1/2 surgery on the 5_2 knot; exactly three
/// are parabolic (s = 1) and not acyclic, with torsion reported as zero.
#[test]
fn one_half_surgery_five_two_table() {
    let points = solve_representations(&family(2), slope(1, 2), 256).unwrap();
    assert_table(&points, &TABLE_5_2, 1e-3);
    let parabolic: Vec<&SolutionPoint> = points.iter().filter(|pt| !pt.acyclic).collect();
    assert_eq!(parabolic.len(), 3);
    for pt in &parabolic {
        assert!((pt.s.re.to_f64() - 1.0).abs() < 1e-20);
        assert!(pt.s.im.to_f64().abs() < 1e-20);
        assert!(pt.tau.abs().to_f64() == 0.0);
    }
}

/// The fourteen acyclic torsions of 1/2 surgery on 5_2 are the roots of a
/// monic degree-14 integer polynomial; its dominant root near 148.658 is
/// a Perron number.
#[test]
fn one_half_surgery_five_two_annihilator_and_perron() {
    let cert = torsion_annihilator(&family(2), slope(1, 2), 256).unwrap();
    let expected = UniPoly::from_i64(
        TORSION_VAR,
        &[
            13778944,
            -314212352,
            1942106112,
            -5260713984,
            7422475264,
            -6091473408,
            3141232640,
            -1067441024,
            245006784,
            -38203808,
            3993232,
            -269160,
            10760,
            -210,
            1,
        ],
    );
    assert_eq!(cert.annihilator, expected);
    assert!(cert.monic);
    assert!(cert.verified, "reason: {:?}", cert.reason);
    assert_eq!(cert.witnesses.len(), 14);

    let report = perron_check(&expected, 256).unwrap();
    assert!(report.is_perron, "reason: {:?}", report.reason);
    assert!(report.is_real);
    assert!((report.dominant.re.to_f64() - 148.658).abs() < 1e-3);
}

// --- closed-form certificates ---

/// Integer surgeries on the figure-eight knot: the trace-form eliminant
/// has leading coefficient +-16 and the parity-dependent constant factor
/// divides exactly, leaving a monic polynomial.
#[test]
fn integer_surgery_eliminant_structure() {
    for p_coef in [-5i64, -4, -3, -2, -1, 1, 2, 3, 4, 5] {
        let report = integer_surgery_eliminant(p_coef).unwrap();
        assert_eq!(report.leading_coefficient.abs(), BigInt::from(16), "p = {p_coef}");
        assert!(report.quotient.is_monic(), "p = {p_coef}");
        let expected_divisor = if p_coef.rem_euclid(2) == 1 {
            UniPoly::from_i64(TORSION_VAR, &[36, -48, 16])
        } else {
            UniPoly::constant(TORSION_VAR, 16)
        };
        assert_eq!(report.divisor, expected_divisor, "p = {p_coef}");
    }
    assert!(integer_surgery_eliminant(0).is_err());
}

/// For +1 surgery the monic quotient is divisible by the torsion
/// polynomial of the filled manifold.
#[test]
fn one_surgery_quotient_contains_torsion_polynomial() {
    let report = integer_surgery_eliminant(1).unwrap();
    let sigma = UniPoly::from_i64(TORSION_VAR, &[-8, 20, -12, 1]);
    let q = report.quotient.divide_exact(&sigma).unwrap();
    assert_eq!(q.mul(&sigma), report.quotient);
}

/// The even-parity divisibility hinges on the eliminant value at 1 being
/// `res_s(-s^2 - 1, A(s^{-p}, s))`, which is 0 or +-16.
#[test]
fn integer_surgery_value_at_one() {
    let h4 = integer_surgery_eliminant(4).unwrap().eliminant;
    let v = h4.eval_int(&BigInt::from(1)).abs();
    assert!(v == BigInt::from(0) || v == BigInt::from(16), "h(1) = {v}");
}

/// The 1/q certificate: `A(L, L^{-q})` has the double root -1, value 4 at
/// 1, quotient value 1 at 1, and a monic shifted-inverse annihilator.
#[test]
fn one_over_q_certificates() {
    for q in [1i64, 2, 3, -2] {
        let report = one_over_q_certificate(q).unwrap();
        assert_eq!(report.f.eval_int(&BigInt::from(1)), BigInt::from(4), "q = {q}");
        assert_eq!(report.h.eval_int(&BigInt::from(1)), BigInt::from(1), "q = {q}");
        assert!(report.shift_certificate.is_monic(), "q = {q}");
    }
    assert!(one_over_q_certificate(0).is_err());
}

/// Hand-expanded form of `A(L, L^{-1})` for the figure-eight knot.
#[test]
fn one_over_one_specialization_matches_expansion() {
    let report = one_over_q_certificate(1).unwrap();
    let expected = parse_unipoly("-L^8 + L^6 + L^5 + 2*L^4 + L^3 + L^2 - 1", "L").unwrap();
    assert_eq!(report.f, expected);
}

/// Odd-denominator integrality chains across the twist knot family: all
/// four station annihilators are monic.
#[test]
fn integrality_chains_are_monic() {
    for m in [-2i64, -1, 1, 2] {
        for q in [1i64, 3] {
            let chain = integrality_chain(m, q).unwrap();
            assert!(chain.verified, "(m, q) = ({m}, {q})");
            assert_eq!(chain.steps.len(), 4);
            for step in &chain.steps {
                assert!(step.annihilator.is_monic(), "(m, q) = ({m}, {q}) {}", step.quantity);
            }
        }
    }
    assert!(matches!(integrality_chain(-1, 2), Err(Error::InvalidInput(_))));
    assert!(matches!(integrality_chain(-1, 0), Err(Error::InvalidInput(_))));
}

// --- splices ---

/// The common-zero condition against the trefoil cable curve holds for
/// the trefoil and the figure-eight knot, with witness residuals at the
/// certificate tolerance.
#[test]
fn splice_condition_holds_for_trefoil_and_figure_eight() {
    for m in [1i64, -1] {
        let report = splice_condition_check(m).unwrap();
        assert!(report.satisfied, "m = {m}");
        let w = report.witness.expect("witness");
        assert!(w.curve_residual < 1e-10, "m = {m}");
        assert!(w.apoly_residual < 1e-10, "m = {m}");
        let l_unit = (w.l0.abs().to_f64() - 1.0).abs() < 1e-12 && w.l0.im.to_f64().abs() < 1e-12;
        let m_unit = (w.m0.abs().to_f64() - 1.0).abs() < 1e-12 && w.m0.im.to_f64().abs() < 1e-12;
        assert!(!(l_unit && m_unit), "degenerate witness for m = {m}");
    }
}

/// The unknot's A-polynomial is a unit, so the condition is vacuously
/// unsatisfied.
#[test]
fn splice_condition_fails_for_unknot() {
    let report = splice_condition_check(0).unwrap();
    assert!(!report.satisfied);
    assert!(report.witness.is_none());
}
