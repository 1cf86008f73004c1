//! The Riley representation of twist-knot groups and the polynomials it
//! produces: Riley polynomials, longitude eigenvalues, and the exterior
//! torsion as an exact ratio.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::MultiPoly;
use crate::rep::fox::{fox_derivative, fox_eval};
use crate::rep::word::{parse_word, Gen, Word};
use crate::resultant::PolyMatrix;

/// Builds a 2×2 polynomial matrix from its entries in row order.
pub fn mat2(a: MultiPoly, b: MultiPoly, c: MultiPoly, d: MultiPoly) -> PolyMatrix {
    PolyMatrix::from_rows(vec![vec![a, b], vec![c, d]]).expect("2x2 shape")
}

/// The 2×2 identity matrix.
pub fn mat2_identity() -> PolyMatrix {
    mat2(MultiPoly::constant(1), MultiPoly::zero(), MultiPoly::zero(), MultiPoly::constant(1))
}

/// The 2×2 zero matrix.
pub fn mat2_zero() -> PolyMatrix {
    mat2(MultiPoly::zero(), MultiPoly::zero(), MultiPoly::zero(), MultiPoly::zero())
}

fn expect2x2(m: &PolyMatrix, what: &str) -> Result<()> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::Internal(format!("{what} expects 2x2 matrices")));
    }
    Ok(())
}

/// Exact product of two 2×2 polynomial matrices.
pub fn mat2_mul(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    expect2x2(a, "mat2_mul")?;
    expect2x2(b, "mat2_mul")?;
    let entry = |i: usize, j: usize| &(a.at(i, 0) * b.at(0, j)) + &(a.at(i, 1) * b.at(1, j));
    Ok(mat2(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)))
}

/// Entrywise sum.
pub fn mat2_add(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    expect2x2(a, "mat2_add")?;
    expect2x2(b, "mat2_add")?;
    Ok(mat2(
        a.at(0, 0) + b.at(0, 0),
        a.at(0, 1) + b.at(0, 1),
        a.at(1, 0) + b.at(1, 0),
        a.at(1, 1) + b.at(1, 1),
    ))
}

/// Entrywise difference.
pub fn mat2_sub(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix> {
    expect2x2(a, "mat2_sub")?;
    expect2x2(b, "mat2_sub")?;
    Ok(mat2(
        a.at(0, 0) - b.at(0, 0),
        a.at(0, 1) - b.at(0, 1),
        a.at(1, 0) - b.at(1, 0),
        a.at(1, 1) - b.at(1, 1),
    ))
}

/// Integer scalar multiple.
pub fn mat2_scale(a: &PolyMatrix, c: i64) -> PolyMatrix {
    let c = BigInt::from(c);
    mat2(
        a.at(0, 0).mul_int(&c),
        a.at(0, 1).mul_int(&c),
        a.at(1, 0).mul_int(&c),
        a.at(1, 1).mul_int(&c),
    )
}

/// Exact determinant of a 2×2 polynomial matrix.
pub fn mat2_det(a: &PolyMatrix) -> Result<MultiPoly> {
    expect2x2(a, "mat2_det")?;
    Ok(&(a.at(0, 0) * a.at(1, 1)) - &(a.at(0, 1) * a.at(1, 0)))
}

/// The adjugate, which is the inverse for determinant-one matrices.
pub fn mat2_adjugate(a: &PolyMatrix) -> Result<PolyMatrix> {
    expect2x2(a, "mat2_adjugate")?;
    Ok(mat2(a.at(1, 1).clone(), -a.at(0, 1), -a.at(1, 0), a.at(0, 0).clone()))
}

/// Images of the free generators under the Riley representation, with the
/// inverse images precomputed via the adjugate (each image has determinant
/// one as a polynomial identity).
#[derive(Clone, Debug)]
pub struct Rep2x2 {
    x: PolyMatrix,
    y: PolyMatrix,
    x_inv: PolyMatrix,
    y_inv: PolyMatrix,
}

impl Rep2x2 {
    /// The image of a single letter `g^e` with `e = ±1`.
    pub fn image(&self, g: Gen, exp: i8) -> &PolyMatrix {
        match (g, exp >= 0) {
            (Gen::X, true) => &self.x,
            (Gen::X, false) => &self.x_inv,
            (Gen::Y, true) => &self.y,
            (Gen::Y, false) => &self.y_inv,
        }
    }
}

/// The Riley representation over `Z[s^{±1}, t]`:
/// `x ↦ [[s, 1], [0, 1/s]]`, `y ↦ [[s, 0], [-t, 1/s]]`.
pub fn riley_rep() -> Rep2x2 {
    let s = MultiPoly::variable("s");
    let s_inv = MultiPoly::monomial(&["s"], &[-1], BigInt::from(1));
    let t = MultiPoly::variable("t");
    let one = MultiPoly::constant(1);
    let zero = MultiPoly::zero();

    let x = mat2(s.clone(), one, zero.clone(), s_inv.clone());
    let y = mat2(s, zero, -&t, s_inv);
    let x_inv = mat2_adjugate(&x).expect("2x2");
    let y_inv = mat2_adjugate(&y).expect("2x2");
    debug_assert!(mat2_det(&x).unwrap().is_one() && mat2_det(&y).unwrap().is_one());
    Rep2x2 { x, y, x_inv, y_inv }
}

/// Evaluates a word under the representation as an exact matrix product.
/// The empty word evaluates to the identity.
pub fn word_eval(w: &Word, rep: &Rep2x2) -> Result<PolyMatrix> {
    let mut acc = mat2_identity();
    for &(g, e) in w.letters() {
        acc = mat2_mul(&acc, rep.image(g, e))?;
    }
    Ok(acc)
}

/// A finite presentation: generator names plus freely reduced relators.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

/// The twist-knot family member `J(2, 2m)`: its defining word `w`, the
/// preferred longitude, and the degree data of its Riley polynomial.
///
/// The words are `w(m) = [y, x^{-1}]^m` and
/// `λ(m) = [x, y^{-1}]^m [y, x^{-1}]^m`, with negative `m` taking inverse
/// commutator powers.  The convention is pinned by three cross-checks: the
/// printed Riley polynomial of `J(2,4)`, the printed A-polynomials of
/// `J(2,-2)` and `J(2,4)`, and the closure of the A-polynomial recursion.
#[derive(Clone, Debug)]
pub struct TwistKnotFamily {
    m: i64,
    w: Word,
    longitude: Word,
}

impl TwistKnotFamily {
    pub fn new(m: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("twist parameter m must be nonzero".into()));
        }
        let w = parse_word("[y,x^-1]")?.pow(m);
        let longitude = parse_word("[x,y^-1]")?.pow(m).mul(&parse_word("[y,x^-1]")?.pow(m));
        Ok(TwistKnotFamily { m, w, longitude })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Knot table token, e.g. `J(2,4)` for m = 2.
    pub fn knot_name(&self) -> String {
        format!("J(2,{})", 2 * self.m)
    }

    /// The word `w` of the presentation `⟨x, y | wx = yw⟩`.
    pub fn word(&self) -> &Word {
        &self.w
    }

    /// The preferred longitude as a word in `x` and `y`.
    pub fn longitude(&self) -> &Word {
        &self.longitude
    }

    /// The relator `r = w x w^{-1} y^{-1}` of `⟨x, y | wx = yw⟩`.
    pub fn relator(&self) -> Word {
        self.w
            .mul(&Word::gen(Gen::X))
            .mul(&self.w.inverse())
            .mul(&Word::gen(Gen::Y).inverse())
    }

    /// The presentation `⟨x, y | w x w^{-1} y^{-1}⟩` with the relator
    /// freely reduced.
    pub fn presentation(&self) -> Presentation {
        Presentation {
            generators: vec!["x".into(), "y".into()],
            relators: vec![self.relator().freely_reduced()],
        }
    }

    /// Degree of the Riley polynomial in `t`: `2m - 1` for positive `m`,
    /// `-2m` for negative `m`.
    pub fn phi_degree(&self) -> usize {
        if self.m > 0 {
            (2 * self.m - 1) as usize
        } else {
            (-2 * self.m) as usize
        }
    }
}

/// The Riley polynomial `φ(s,t) = ρ(w)₁₁ + (s^{-1} - s) ρ(w)₁₂`.
///
/// Its vanishing characterizes the parameter pairs `(s, t)` at which the
/// representation factors through the knot group; the leading coefficient
/// in `t` is a unit.
///
/// The eigenvalue-difference factor is `s^{-1} - s` for the matrix images
/// used here; conjugating the images by `diag(1, -1)` flips both
/// off-diagonal signs and turns the factor into `s - s^{-1}`.  The choice
/// is pinned by four independent checks: the reference φ of `J(2,4)`, the
/// divisibility of `ρ(w)ρ(x) - ρ(y)ρ(w)` by φ, the reference A-polynomials
/// of `J(2,-2)` and `J(2,4)`, and the trace formula for the exterior
/// torsion of `J(2,-2)`.
pub fn riley_polynomial(family: &TwistKnotFamily) -> Result<MultiPoly> {
    let rep = riley_rep();
    let w = word_eval(family.word(), &rep)?;
    let s = MultiPoly::variable("s");
    let s_inv = MultiPoly::monomial(&["s"], &[-1], BigInt::from(1));
    let factor = &s_inv - &s;
    Ok(w.at(0, 0) + &(&factor * w.at(0, 1)))
}

/// The longitude eigenvalue `Λ(s,t) = ρ(λ)₁₁`, an exact Laurent polynomial
/// in `s` and polynomial in `t`.
pub fn longitude_eigenvalue(family: &TwistKnotFamily) -> Result<MultiPoly> {
    let rep = riley_rep();
    let lam = word_eval(family.longitude(), &rep)?;
    Ok(lam.at(0, 0).clone())
}

/// The exterior torsion as an exact ratio: `τ(E) = N_E / D_E` on the locus
/// `φ(s,t) = 0`, with `N_E = det ρ(∂r/∂y)` for the relator
/// `r = w x w^{-1} y^{-1}` and `D_E = det(ρ(x) - I₂) = 2 - s - s^{-1}`.
/// Acyclicity is not checked here; callers exclude zeros of `D_E`.
pub fn complement_torsion(family: &TwistKnotFamily) -> Result<(MultiPoly, MultiPoly)> {
    let rep = riley_rep();
    let r = family.relator();
    let dr_dy = fox_derivative(&r, Gen::Y);
    let numerator = mat2_det(&fox_eval(&dr_dy, &rep)?)?;
    let denominator = mat2_det(&mat2_sub(rep.image(Gen::X, 1), &mat2_identity())?)?;
    Ok((numerator, denominator))
}
