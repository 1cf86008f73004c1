//! Words, Fox calculus, the Riley representation, and the exterior torsion
//! ratio, pinned against printed reference values for J(2,-2) and J(2,4).

use proptest::prelude::*;

use taucert::exact::MultiPoly;
use taucert::rep::{
    complement_torsion, fox_derivative, fox_eval, longitude_eigenvalue, mat2_identity, mat2_mul,
    mat2_sub, parse_word, riley_polynomial, riley_rep, word_eval, Gen, TwistKnotFamily, Word,
};
use taucert::resultant::{resultant, PolyMatrix};

fn p(text: &str) -> MultiPoly {
    text.parse().unwrap()
}

fn mats_equal(a: &PolyMatrix, b: &PolyMatrix) -> bool {
    a.rows() == b.rows()
        && a.cols() == b.cols()
        && (0..a.rows()).all(|i| (0..a.cols()).all(|j| a.at(i, j) == b.at(i, j)))
}

// --- word grammar ---

#[test]
fn commutator_square_expands_to_eight_letters() {
    let w = parse_word("[y,x^-1]^2").unwrap();
    let expect = [
        (Gen::Y, 1),
        (Gen::X, -1),
        (Gen::Y, -1),
        (Gen::X, 1),
        (Gen::Y, 1),
        (Gen::X, -1),
        (Gen::Y, -1),
        (Gen::X, 1),
    ];
    assert_eq!(w.letters(), &expect);
}

#[test]
fn longitude_word_expands_to_sixteen_letters() {
    let lam = parse_word("[x,y^-1]^2[y,x^-1]^2").unwrap();
    assert_eq!(lam.len(), 16);
    assert_eq!(lam.exponent_sums(), (0, 0));
    let family = TwistKnotFamily::new(2).unwrap();
    assert_eq!(family.longitude(), &lam);
}

#[test]
fn zero_power_is_the_empty_word() {
    let w = parse_word("x^0").unwrap();
    assert!(w.is_empty());
}

#[test]
fn grouping_and_negative_powers() {
    let w = parse_word("(xy^-1)^2").unwrap();
    let expect = [(Gen::X, 1), (Gen::Y, -1), (Gen::X, 1), (Gen::Y, -1)];
    assert_eq!(w.letters(), &expect);
    let v = parse_word("x^-3").unwrap();
    assert_eq!(v.letters(), &[(Gen::X, -1); 3]);
    let nested = parse_word("[x,[y,x]]").unwrap();
    assert_eq!(nested.len(), 10);
}

#[test]
fn malformed_words_are_rejected() {
    assert!(parse_word("z").is_err());
    assert!(parse_word("x^").is_err());
    assert!(parse_word("[x,y").is_err());
    assert!(parse_word("(xy").is_err());
    assert!(parse_word("[xy]").is_err());
}

#[test]
fn free_reduction_cancels_adjacent_inverses() {
    let w = parse_word("x y y^-1 x^-1 y").unwrap();
    assert_eq!(w.freely_reduced().letters(), &[(Gen::Y, 1)]);
    let r = TwistKnotFamily::new(2).unwrap().relator();
    let reduced = r.freely_reduced();
    assert!(reduced.len() < r.len());
    assert_eq!(reduced.exponent_sums(), r.exponent_sums());
}

// --- the representation ---

#[test]
fn generator_images_have_determinant_one() {
    let rep = riley_rep();
    use taucert::rep::mat2_det;
    for (g, e) in [(Gen::X, 1), (Gen::X, -1), (Gen::Y, 1), (Gen::Y, -1)] {
        assert!(mat2_det(rep.image(g, e)).unwrap().is_one());
    }
    assert_eq!(rep.image(Gen::Y, 1).at(1, 0), &p("-t"));
}

#[test]
fn image_of_x_at_parabolic_point() {
    let rep = riley_rep();
    let one = MultiPoly::constant(1);
    let zero = MultiPoly::zero();
    let x = rep.image(Gen::X, 1);
    let at = |i: usize, j: usize| {
        x.at(i, j).substitute("s", &one).unwrap().substitute("t", &zero).unwrap()
    };
    assert!(at(0, 0).is_one() && at(0, 1).is_one());
    assert!(at(1, 0).is_zero() && at(1, 1).is_one());
}

#[test]
fn word_eval_inverts_and_respects_identity() {
    let rep = riley_rep();
    assert!(mats_equal(&word_eval(&Word::identity(), &rep).unwrap(), &mat2_identity()));
    let w = parse_word("[y,x^-1]^2 x y^-1").unwrap();
    let prod = mat2_mul(
        &word_eval(&w, &rep).unwrap(),
        &word_eval(&w.inverse(), &rep).unwrap(),
    )
    .unwrap();
    assert!(mats_equal(&prod, &mat2_identity()));
}

// --- Fox calculus ---

#[test]
fn fox_axioms() {
    let x = Word::gen(Gen::X);
    let dx = fox_derivative(&x, Gen::X);
    assert_eq!(dx, vec![(1, Word::identity())]);

    let x_inv = x.inverse();
    let dxi = fox_derivative(&x_inv, Gen::X);
    assert_eq!(dxi, vec![(-1, x_inv.clone())]);

    let xy = parse_word("xy").unwrap();
    let dy = fox_derivative(&xy, Gen::Y);
    assert_eq!(dy, vec![(1, Word::gen(Gen::X))]);
}

// --- Riley polynomials ---

#[test]
fn riley_polynomial_of_j2_4_matches_reference() {
    let family = TwistKnotFamily::new(2).unwrap();
    let phi = riley_polynomial(&family).unwrap();
    let expect = p("2*s^2*t^2 + 2*s^-2*t^2 - 3*t^2 - s^4*t - s^-4*t + 3*s^2*t + 3*s^-2*t - 6*t \
                    + 2*s^2 + 2*s^-2 - t^3 - 3");
    assert_eq!(phi, expect);
}

#[test]
fn riley_polynomial_of_j2_4_at_s_equals_i() {
    let family = TwistKnotFamily::new(2).unwrap();
    let phi = riley_polynomial(&family).unwrap();
    // s^4 ≡ 1 mod s^2 + 1, so s^4·φ reduces to φ(i, t), constant in s.
    let cleared = &phi * &p("s^4");
    let reduced = cleared.reduce_mod_in_var(&p("s^2 + 1"), "s").unwrap();
    assert_eq!(reduced, p("-t^3 - 7*t^2 - 14*t - 7"));
}

#[test]
fn riley_degree_matches_family_data() {
    for m in [-3i64, -2, -1, 1, 2, 3] {
        let family = TwistKnotFamily::new(m).unwrap();
        let phi = riley_polynomial(&family).unwrap();
        assert_eq!(
            phi.max_deg("t").unwrap() as usize,
            family.phi_degree(),
            "degree mismatch at m={m}"
        );
        let lc = phi.leading_coefficient_in("t");
        assert!(
            lc.as_unit_monomial().is_some(),
            "leading t-coefficient not a unit at m={m}: {lc}"
        );
    }
}

#[test]
fn representation_factors_exactly_on_the_riley_locus() {
    // ρ(w)ρ(x) - ρ(y)ρ(w) has all entries divisible by φ(s,t).
    let rep = riley_rep();
    for m in [-2i64, -1, 1, 2] {
        let family = TwistKnotFamily::new(m).unwrap();
        let phi = riley_polynomial(&family).unwrap();
        let w = word_eval(family.word(), &rep).unwrap();
        let lhs = mat2_mul(&w, rep.image(Gen::X, 1)).unwrap();
        let rhs = mat2_mul(rep.image(Gen::Y, 1), &w).unwrap();
        let diff = mat2_sub(&lhs, &rhs).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!(
                    diff.at(i, j).is_divisible_by(&phi),
                    "entry ({i},{j}) not divisible at m={m}"
                );
            }
        }
    }
}

// --- longitude eigenvalues ---

#[test]
fn longitude_eigenvalue_is_trivial_on_the_abelian_locus() {
    // At t=0 every generator image is upper triangular, so Λ(s,0) is the
    // product of the diagonal entries; the longitude has exponent sum zero.
    let zero = MultiPoly::zero();
    for m in [-2i64, -1, 1, 2] {
        let family = TwistKnotFamily::new(m).unwrap();
        let lam = longitude_eigenvalue(&family).unwrap();
        assert!(lam.substitute("t", &zero).unwrap().is_one(), "m={m}");
    }
}

#[test]
fn elimination_reaches_the_figure_eight_a_polynomial() {
    let family = TwistKnotFamily::new(-1).unwrap();
    let phi = riley_polynomial(&family).unwrap();
    let lam = longitude_eigenvalue(&family).unwrap();
    let eliminant = resultant(&(&MultiPoly::variable("L") - &lam), &phi, "t").unwrap();
    let printed = p("L^2*M^4 - L*M^8 + L*M^6 + 2*L*M^4 + L*M^2 - L + M^4")
        .rename_var("M", "s")
        .unwrap();
    assert!(!eliminant.is_zero());
    assert!(eliminant.is_divisible_by(&printed));
}

#[test]
fn elimination_reaches_the_j2_4_a_polynomial() {
    let family = TwistKnotFamily::new(2).unwrap();
    let phi = riley_polynomial(&family).unwrap();
    let lam = longitude_eigenvalue(&family).unwrap();
    let eliminant = resultant(&(&MultiPoly::variable("L") - &lam), &phi, "t").unwrap();
    let printed = p("-L^3 + L^2 - 2*L^2*M^2 - 2*L^2*M^4 + L^2*M^8 - L^2*M^10 \
                     - L*M^4 + L*M^6 - 2*L*M^10 - 2*L*M^12 + L*M^14 - M^14")
        .rename_var("M", "s")
        .unwrap();
    assert!(!eliminant.is_zero());
    assert!(eliminant.is_divisible_by(&printed));
}

// --- exterior torsion ---

#[test]
fn exterior_denominator_is_the_meridian_determinant() {
    let family = TwistKnotFamily::new(2).unwrap();
    let (_, d) = complement_torsion(&family).unwrap();
    assert_eq!(d, p("2 - s - s^-1"));
}

#[test]
fn figure_eight_torsion_reduces_to_trace_formula() {
    // τ(E) = 2 - 2 tr ρ(μ) = -2(s + s^{-1} - 1) on the locus φ = 0.
    let family = TwistKnotFamily::new(-1).unwrap();
    let (n, d) = complement_torsion(&family).unwrap();
    let phi = riley_polynomial(&family).unwrap();
    let target = p("-2*s - 2*s^-1 + 2");
    let excess = &n - &(&d * &target);
    assert!(excess.reduce_mod_in_var(&phi, "t").unwrap().is_zero());
}

#[test]
fn j2_4_torsion_at_s_equals_i_matches_reference() {
    // 2·τ(E(5_2)) = -t^3 - 3t^2 + 2t + 9 at s = i, modulo φ(i, t).
    let family = TwistKnotFamily::new(2).unwrap();
    let (n, d) = complement_torsion(&family).unwrap();
    let phi = riley_polynomial(&family).unwrap();
    let target = p("-t^3 - 3*t^2 + 2*t + 9");
    let excess = &n.mul_int(&2.into()) - &(&d * &target);
    let reduced = excess.reduce_mod_in_var(&phi, "t").unwrap();
    let modulus = p("s^2 + 1");
    if let Some(top) = reduced.max_deg("t") {
        for k in 0..=top {
            let c = reduced.coeff_of("t", k);
            if !c.is_zero() {
                assert!(c.is_divisible_by(&modulus), "t-coefficient {k} fails: {c}");
            }
        }
    }
}

// --- properties ---

fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec((any::<bool>(), any::<bool>()), 0..max_len).prop_map(|ls| {
        let mut w = Word::identity();
        for (gx, pos) in ls {
            let g = if gx { Gen::X } else { Gen::Y };
            let e = if pos { 1 } else { -1 };
            w = w.mul(&Word::letter(g, e).unwrap());
        }
        w
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn word_eval_is_a_homomorphism(u in word_strategy(8), v in word_strategy(8)) {
        let rep = riley_rep();
        let uv = word_eval(&u.mul(&v), &rep).unwrap();
        let sep = mat2_mul(&word_eval(&u, &rep).unwrap(), &word_eval(&v, &rep).unwrap()).unwrap();
        prop_assert!(mats_equal(&uv, &sep));
    }

    #[test]
    fn fox_fundamental_identity(w in word_strategy(10)) {
        // ρ(w) - I = ρ(∂w/∂x)(ρ(x) - I) + ρ(∂w/∂y)(ρ(y) - I), exactly.
        let rep = riley_rep();
        let lhs = mat2_sub(&word_eval(&w, &rep).unwrap(), &mat2_identity()).unwrap();
        let dx = fox_eval(&fox_derivative(&w, Gen::X), &rep).unwrap();
        let dy = fox_eval(&fox_derivative(&w, Gen::Y), &rep).unwrap();
        let ex = mat2_sub(rep.image(Gen::X, 1), &mat2_identity()).unwrap();
        let ey = mat2_sub(rep.image(Gen::Y, 1), &mat2_identity()).unwrap();
        let rhs = taucert::rep::mat2_add(
            &mat2_mul(&dx, &ex).unwrap(),
            &mat2_mul(&dy, &ey).unwrap(),
        ).unwrap();
        prop_assert!(mats_equal(&lhs, &rhs));
    }

    #[test]
    fn free_reduction_preserves_evaluation(w in word_strategy(10)) {
        let rep = riley_rep();
        let raw = word_eval(&w, &rep).unwrap();
        let reduced = word_eval(&w.freely_reduced(), &rep).unwrap();
        prop_assert!(mats_equal(&raw, &reduced));
    }
}
