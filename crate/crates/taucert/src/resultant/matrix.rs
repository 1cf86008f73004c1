//! Sylvester matrices and exact determinants.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::unipoly::lagrange_interpolate;
use crate::exact::{MultiPoly, UniPoly};

/// Dense matrix of multivariate polynomials, row-major.
#[derive(Clone, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::InvalidInput("ragged matrix rows".into()));
            }
        }
        Ok(PolyMatrix { rows: nrows, cols: ncols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }
}

/// Builds the Sylvester matrix of `f` and `g` with respect to `var`:
/// `deg(g)` staircase rows of `f`-coefficients (descending), then `deg(f)`
/// rows of `g`-coefficients.  Unit monomials of `var` are cleared from both
/// inputs first, so Laurent inputs are accepted; the result is the matrix
/// of the cleared pair.  Errors when both inputs are constant in `var`.
pub fn sylvester_matrix(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<PolyMatrix> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidInput("sylvester matrix of the zero polynomial".into()));
    }
    let (f, g) = MultiPoly::unified(f, g);
    let (f, _) = f.clear_units_in(var);
    let (g, _) = g.clear_units_in(var);
    let m = f.max_deg(var).unwrap() as usize;
    let n = g.max_deg(var).unwrap() as usize;
    if m == 0 && n == 0 {
        return Err(Error::InvalidInput(format!(
            "both polynomials are constant in `{var}`"
        )));
    }
    let dim = m + n;
    let zero = MultiPoly::zero().in_context(f.vars())?;
    let mut rows: Vec<Vec<MultiPoly>> = Vec::with_capacity(dim);
    for i in 0..n {
        let mut row = vec![zero.clone(); dim];
        for j in 0..=m {
            row[i + j] = f.coeff_of(var, (m - j) as i32);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); dim];
        for j in 0..=n {
            row[i + j] = g.coeff_of(var, (n - j) as i32);
        }
        rows.push(row);
    }
    PolyMatrix::from_rows(rows)
}

/// Exact determinant: cofactor expansion for very small matrices, Bareiss
/// fraction-free elimination above.  Pivots prefer low total degree and few
/// terms so intermediate entries stay small.
pub fn determinant(m: &PolyMatrix) -> Result<MultiPoly> {
    if m.rows != m.cols {
        return Err(Error::InvalidInput(format!(
            "determinant of a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    if m.rows == 0 {
        return Ok(MultiPoly::constant(1));
    }
    let grid: Vec<Vec<MultiPoly>> = (0..m.rows)
        .map(|i| (0..m.cols).map(|j| m.at(i, j).clone()).collect())
        .collect();
    if m.rows <= 4 {
        Ok(det_cofactor(&grid))
    } else {
        det_bareiss(grid)
    }
}

fn det_cofactor(grid: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = grid.len();
    if n == 1 {
        return grid[0][0].clone();
    }
    let mut acc = MultiPoly::zero();
    for i in 0..n {
        if grid[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = (0..n)
            .filter(|&r| r != i)
            .map(|r| grid[r][1..].to_vec())
            .collect();
        let term = &grid[i][0] * &det_cofactor(&minor);
        acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn det_bareiss(mut grid: Vec<Vec<MultiPoly>>) -> Result<MultiPoly> {
    let n = grid.len();
    let mut sign = 1i8;
    let mut prev = MultiPoly::constant(1);
    for k in 0..n - 1 {
        // Pivot: nonzero entry of lowest total degree, then fewest terms,
        // then lowest row, to keep the fraction-free updates small.
        let pivot = (k..n)
            .filter(|&i| !grid[i][k].is_zero())
            .min_by_key(|&i| {
                (grid[i][k].total_degree().unwrap_or(0), grid[i][k].num_terms(), i)
            });
        let Some(p) = pivot else {
            return Ok(MultiPoly::zero());
        };
        if p != k {
            grid.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&grid[k][k] * &grid[i][j]) - &(&grid[i][k] * &grid[k][j]);
                grid[i][j] = num.divide_exact(&prev).map_err(|e| {
                    Error::Internal(format!("Bareiss division must be exact: {e}"))
                })?;
            }
            grid[i][k] = MultiPoly::zero();
        }
        prev = grid[k][k].clone();
    }
    let det = grid[n - 1][n - 1].clone();
    Ok(if sign < 0 { -&det } else { det })
}

/// Exact integer determinant by Bareiss elimination.
pub fn determinant_int(grid: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = grid.len();
    for r in grid {
        if r.len() != n {
            return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
        }
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let mut grid: Vec<Vec<BigInt>> = grid.to_vec();
    let mut sign = 1i8;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        let pivot = (k..n)
            .filter(|&i| !grid[i][k].is_zero())
            .min_by_key(|&i| (grid[i][k].magnitude().bits(), i));
        let Some(p) = pivot else {
            return Ok(BigInt::zero());
        };
        if p != k {
            grid.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &grid[k][k] * &grid[i][j] - &grid[i][k] * &grid[k][j];
                let (q, r) = num.div_rem(&prev);
                if !r.is_zero() {
                    return Err(Error::Internal("Bareiss division must be exact".into()));
                }
                grid[i][j] = q;
            }
            grid[i][k] = BigInt::zero();
        }
        prev = grid[k][k].clone();
    }
    let det = grid[n - 1][n - 1].clone();
    Ok(if sign < 0 { -det } else { det })
}

/// Resultant of `f` and `g` with respect to `var`, as the determinant of
/// their Sylvester matrix.  When one input is constant `c` in `var` the
/// degenerate value `c^deg(other)` is returned; both constant is an error.
/// Unit monomials of `var` are cleared first (the resultant of the cleared
/// pair is returned), so Laurent inputs are accepted.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidInput("resultant with the zero polynomial".into()));
    }
    let (fc, _) = f.clear_units_in(var);
    let (gc, _) = g.clear_units_in(var);
    let m = fc.max_deg(var).unwrap().max(0) as usize;
    let n = gc.max_deg(var).unwrap().max(0) as usize;
    match (m, n) {
        (0, 0) => Err(Error::InvalidInput(format!(
            "both polynomials are constant in `{var}`"
        ))),
        (0, _) => Ok(fc.pow(n as u32)),
        (_, 0) => Ok(gc.pow(m as u32)),
        _ => determinant(&sylvester_matrix(&fc, &gc, var)?),
    }
}

/// Resultant of two bivariate polynomials in `(keep, elim)` computed by
/// evaluation and interpolation: the result is univariate in `keep`, found
/// by specializing `keep` at enough integer nodes (skipping nodes where
/// either leading `elim`-coefficient vanishes, which would drop the
/// Sylvester dimension) and interpolating the integer determinants.
/// Requires both inputs non-Laurent and actually bivariate in the two
/// variables at most.
pub fn resultant_by_interpolation(
    f: &MultiPoly,
    g: &MultiPoly,
    elim: &str,
    keep: &str,
) -> Result<UniPoly> {
    for p in [f, g] {
        let c = p.compact();
        for v in c.vars() {
            if v != elim && v != keep {
                return Err(Error::InvalidInput(format!(
                    "resultant_by_interpolation: unexpected variable `{v}`"
                )));
            }
        }
        if c.is_laurent_in(elim) || c.is_laurent_in(keep) {
            return Err(Error::InvalidInput(
                "resultant_by_interpolation requires non-Laurent inputs".into(),
            ));
        }
    }
    // Clear unit monomials of the elimination variable, mirroring
    // `resultant`, so the two paths agree exactly.
    let (f, _) = f.clear_units_in(elim);
    let (g, _) = g.clear_units_in(elim);
    let (f, g) = (&f, &g);
    let df_e = f.max_deg(elim).unwrap_or(0).max(0);
    let dg_e = g.max_deg(elim).unwrap_or(0).max(0);
    if df_e == 0 || dg_e == 0 {
        return Err(Error::InvalidInput(
            "resultant_by_interpolation requires positive degree in the elimination variable"
                .into(),
        ));
    }
    let df_k = f.max_deg(keep).unwrap_or(0).max(0) as i64;
    let dg_k = g.max_deg(keep).unwrap_or(0).max(0) as i64;
    // deg_keep res <= deg_elim(g) * deg_keep(f) + deg_elim(f) * deg_keep(g)
    let bound = dg_e as i64 * df_k + df_e as i64 * dg_k;
    let lcf = f.leading_coefficient_in(elim);
    let lcg = g.leading_coefficient_in(elim);
    let mut nodes: Vec<(i64, BigInt)> = Vec::with_capacity(bound as usize + 1);
    let mut step = 0i64;
    while nodes.len() < (bound + 1) as usize {
        // Node sequence 0, 1, -1, 2, -2, ...
        let j = if step % 2 == 0 { -(step / 2) } else { (step + 1) / 2 };
        step += 1;
        if step > 8 * (bound + 2) {
            return Err(Error::Internal(
                "interpolation node search exhausted; leading coefficients vanish everywhere"
                    .into(),
            ));
        }
        if eval_is_zero(&lcf, keep, j)? || eval_is_zero(&lcg, keep, j)? {
            continue;
        }
        let fu = f.substitute(keep, &MultiPoly::constant(j))?.to_unipoly(elim)?;
        let gu = g.substitute(keep, &MultiPoly::constant(j))?.to_unipoly(elim)?;
        nodes.push((j, sylvester_det_int(&fu, &gu)?));
    }
    lagrange_interpolate(keep, &nodes)
}

fn eval_is_zero(p: &MultiPoly, var: &str, at: i64) -> Result<bool> {
    Ok(p.substitute(var, &MultiPoly::constant(at))?.is_zero())
}

fn sylvester_det_int(f: &UniPoly, g: &UniPoly) -> Result<BigInt> {
    let m = f.degree().ok_or_else(|| Error::Internal("zero specialization".into()))?;
    let n = g.degree().ok_or_else(|| Error::Internal("zero specialization".into()))?;
    let dim = m + n;
    let mut grid = vec![vec![BigInt::zero(); dim]; dim];
    for i in 0..n {
        for j in 0..=m {
            grid[i][i + j] = f.coeff(m - j);
        }
    }
    for i in 0..m {
        for j in 0..=n {
            grid[n + i][i + j] = g.coeff(n - j);
        }
    }
    determinant_int(&grid)
}
