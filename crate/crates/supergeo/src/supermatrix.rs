//! Matrices over supercommutative rings.
//!
//! Rows and columns are graded: a shape `(p|q)` means `p` even slots followed
//! by `q` odd slots. A matrix carries a parity label; the entry at `(r, c)`
//! must be zero or homogeneous of parity `label + row + column`. Operators
//! act on column vectors with coefficients written on the right of the basis,
//! so composition is the ordinary row-by-column product with left-factor
//! entries multiplied on the left.
//!
//! Elimination only ever pivots on unit entries (`c * m * (1 + nilpotent)`);
//! there is no pivoting on non-units, which suffices for every system this
//! crate needs to solve and keeps all arithmetic exact.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::superpoly::{ensure_same_table, Parity, SuperPolynomial, VarTable};

/// Graded size: `even` slots followed by `odd` slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub even: usize,
    pub odd: usize,
}

impl Shape {
    pub fn new(even: usize, odd: usize) -> Self {
        Shape { even, odd }
    }

    pub fn total(&self) -> usize {
        self.even + self.odd
    }

    pub fn parity_of(&self, idx: usize) -> Parity {
        if idx < self.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

/// A graded matrix in a fixed homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    table: Arc<VarTable>,
    rows: Shape,
    cols: Shape,
    parity: Parity,
    data: Vec<SuperPolynomial>,
}

impl SuperMatrix {
    pub fn zero(table: &Arc<VarTable>, rows: Shape, cols: Shape, parity: Parity) -> Self {
        SuperMatrix {
            table: table.clone(),
            rows,
            cols,
            parity,
            data: vec![SuperPolynomial::zero(table); rows.total() * cols.total()],
        }
    }

    pub fn identity(table: &Arc<VarTable>, shape: Shape) -> Self {
        let mut out = Self::zero(table, shape, shape, Parity::Even);
        for k in 0..shape.total() {
            let idx = k * shape.total() + k;
            out.data[idx] = SuperPolynomial::one(table);
        }
        out
    }

    /// Builds a matrix from rows, enforcing the entry-parity discipline.
    pub fn from_rows(
        table: &Arc<VarTable>,
        rows: Shape,
        cols: Shape,
        parity: Parity,
        entries: Vec<Vec<SuperPolynomial>>,
    ) -> Result<Self> {
        if entries.len() != rows.total() || entries.iter().any(|r| r.len() != cols.total()) {
            return Err(Error::ShapeMismatch(format!(
                "expected {} x {} entries",
                rows.total(),
                cols.total()
            )));
        }
        let mut out = Self::zero(table, rows, cols, parity);
        for (r, row) in entries.into_iter().enumerate() {
            for (c, e) in row.into_iter().enumerate() {
                out.set(r, c, e)?;
            }
        }
        Ok(out)
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn row_shape(&self) -> Shape {
        self.rows
    }

    pub fn col_shape(&self) -> Shape {
        self.cols
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn entry_parity(&self, r: usize, c: usize) -> Parity {
        self.parity + self.rows.parity_of(r) + self.cols.parity_of(c)
    }

    pub fn at(&self, r: usize, c: usize) -> &SuperPolynomial {
        &self.data[r * self.cols.total() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, e: SuperPolynomial) -> Result<()> {
        ensure_same_table(&SuperPolynomial::zero(&self.table), &e)?;
        if !e.parity_class().admits(self.entry_parity(r, c)) {
            return Err(Error::ParityMismatch(format!(
                "entry ({r},{c}) = {e} has the wrong parity for a {:?}-labelled matrix",
                self.parity
            )));
        }
        self.data[r * self.cols.total() + c] = e;
        Ok(())
    }

    pub fn matmul(&self, rhs: &SuperMatrix) -> Result<SuperMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        ensure_same_table(&self.data[0], &rhs.data[0])?;
        let mut out = Self::zero(&self.table, self.rows, rhs.cols, self.parity + rhs.parity);
        for r in 0..self.rows.total() {
            for c in 0..rhs.cols.total() {
                let mut acc = SuperPolynomial::zero(&self.table);
                for k in 0..self.cols.total() {
                    acc = &acc + &(self.at(r, k) * rhs.at(k, c));
                }
                out.data[r * out.cols.total() + c] = acc;
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &SuperMatrix) -> Result<SuperMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols || self.parity != rhs.parity {
            return Err(Error::ShapeMismatch("matrix addition shape/parity".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = &*a + b;
        }
        Ok(out)
    }

    pub fn neg(&self) -> SuperMatrix {
        self.scale(&-Scalar::one())
    }

    pub fn sub(&self, rhs: &SuperMatrix) -> Result<SuperMatrix> {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Scalar) -> SuperMatrix {
        let mut out = self.clone();
        for e in out.data.iter_mut() {
            *e = e.scale(c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.data.iter().enumerate().all(|(idx, e)| {
                let (r, c) = (idx / self.cols.total(), idx % self.cols.total());
                if r == c {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
    }

    /// Inverse of a square even matrix by Gauss-Jordan elimination with unit
    /// pivots.
    pub fn inverse(&self) -> Result<SuperMatrix> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
        }
        if self.parity != Parity::Even {
            return Err(Error::ParityMismatch(
                "only even matrices have an inverse with the same shape".into(),
            ));
        }
        let n = self.rows.total();
        let mut work: Vec<Vec<SuperPolynomial>> = (0..n)
            .map(|r| {
                let mut row: Vec<_> = (0..n).map(|c| self.at(r, c).clone()).collect();
                row.extend((0..n).map(|c| {
                    if r == c {
                        SuperPolynomial::one(&self.table)
                    } else {
                        SuperPolynomial::zero(&self.table)
                    }
                }));
                row
            })
            .collect();
        let reduced = reduce(&self.table, &mut work, n)?;
        if reduced.len() != n {
            return Err(Error::NotInvertible(format!(
                "rank defect: {} pivots in a {n} x {n} matrix",
                reduced.len()
            )));
        }
        let mut out = Self::zero(&self.table, self.rows, self.cols, Parity::Even);
        for &(r, c) in &reduced {
            // Pivot at column c came from row r, so row c of the inverse is
            // the right half of work row r.
            for j in 0..n {
                out.data[c * n + j] = work[r][n + j].clone();
            }
        }
        Ok(out)
    }

    /// Berezinian of an even `(1|1) x (1|1)` matrix `[[a, b], [c, d]]`,
    /// namely `(a - b d^-1 c) d^-1`; requires `d` to be a unit.
    pub fn berezinian(&self) -> Result<SuperPolynomial> {
        if self.rows != Shape::new(1, 1) || self.cols != Shape::new(1, 1) {
            return Err(Error::ShapeMismatch(
                "Berezinian implemented for (1|1) x (1|1) matrices".into(),
            ));
        }
        if self.parity != Parity::Even {
            return Err(Error::ParityMismatch("Berezinian of an odd matrix".into()));
        }
        let d_inv = self.at(1, 1).invert_unit()?;
        let schur = self.at(0, 0) - &(&(self.at(0, 1) * &d_inv) * self.at(1, 0));
        Ok(&schur * &d_inv)
    }

    /// Entries rendered canonically, row-major.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows.total())
            .map(|r| {
                (0..self.cols.total())
                    .map(|c| self.at(r, c).to_string())
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = self.render_rows();
        let strings: Vec<String> = rendered.iter().map(|r| r.join(", ")).collect();
        write!(f, "[[{}]]", strings.join("], ["))
    }
}

/// Gauss-Jordan elimination in place with unit pivots, pivoting only in the
/// first `pivot_cols` columns. Returns the `(row, column)` pivot pairs. Fails
/// with `NotInvertible` if a row remains that is nonzero in the pivot region
/// but has no unit entry there.
fn reduce(
    table: &Arc<VarTable>,
    rows: &mut [Vec<SuperPolynomial>],
    pivot_cols: usize,
) -> Result<Vec<(usize, usize)>> {
    let _ = table;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut used_rows = vec![false; rows.len()];
    let mut used_cols = vec![false; pivot_cols];
    loop {
        let mut found: Option<(usize, usize, SuperPolynomial)> = None;
        'search: for (r, used) in used_rows.iter().enumerate() {
            if *used {
                continue;
            }
            for (c, cused) in used_cols.iter().enumerate() {
                if *cused {
                    continue;
                }
                if let Ok(inv) = rows[r][c].invert_unit() {
                    found = Some((r, c, inv));
                    break 'search;
                }
            }
        }
        let Some((r, c, inv)) = found else {
            break;
        };
        for e in rows[r].iter_mut() {
            *e = &inv * e;
        }
        for other in 0..rows.len() {
            if other == r || rows[other][c].is_zero() {
                continue;
            }
            let factor = rows[other][c].clone();
            let pivot_row = rows[r].clone();
            for (e, p) in rows[other].iter_mut().zip(&pivot_row) {
                *e = &*e - &(&factor * p);
            }
        }
        used_rows[r] = true;
        used_cols[c] = true;
        pivots.push((r, c));
    }
    for (r, used) in used_rows.iter().enumerate() {
        if !*used && rows[r][..pivot_cols].iter().any(|e| !e.is_zero()) {
            return Err(Error::NotInvertible(format!(
                "row without a unit pivot: [{}]",
                rows[r][..pivot_cols]
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
    }
    Ok(pivots)
}

/// Basis of the solution module of `A x = 0`, found by unit-pivot
/// elimination; one basis vector per non-pivot column.
pub fn nullspace(
    table: &Arc<VarTable>,
    ncols: usize,
    mut rows: Vec<Vec<SuperPolynomial>>,
) -> Result<Vec<Vec<SuperPolynomial>>> {
    for row in &rows {
        if row.len() != ncols {
            return Err(Error::ShapeMismatch("ragged coefficient matrix".into()));
        }
    }
    let pivots = reduce(table, &mut rows, ncols)?;
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut x = vec![SuperPolynomial::zero(table); ncols];
        x[free] = SuperPolynomial::one(table);
        for &(r, c) in &pivots {
            x[c] = -&rows[r][free];
        }
        basis.push(x);
    }
    Ok(basis)
}

/// One solution of `A x = b`, or `Ok(None)` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(
    table: &Arc<VarTable>,
    ncols: usize,
    rows: Vec<Vec<SuperPolynomial>>,
    rhs: Vec<SuperPolynomial>,
) -> Result<Option<Vec<SuperPolynomial>>> {
    if rows.len() != rhs.len() {
        return Err(Error::ShapeMismatch("rhs length".into()));
    }
    let mut work: Vec<Vec<SuperPolynomial>> = rows
        .into_iter()
        .zip(rhs)
        .map(|(mut row, b)| {
            row.push(b);
            row
        })
        .collect();
    for row in &work {
        if row.len() != ncols + 1 {
            return Err(Error::ShapeMismatch("ragged coefficient matrix".into()));
        }
    }
    let pivots = reduce(table, &mut work, ncols)?;
    for (r, row) in work.iter().enumerate() {
        if pivots.iter().all(|&(pr, _)| pr != r) && !row[ncols].is_zero() {
            return Ok(None);
        }
    }
    let mut x = vec![SuperPolynomial::zero(table); ncols];
    for &(r, c) in &pivots {
        x[c] = work[r][ncols].clone();
    }
    Ok(Some(x))
}

/// Reduces a spanning set of vectors to a basis (unit pivots only). The span
/// is unchanged; returned vectors have a leading 1 in distinct positions.
pub fn span_basis(
    table: &Arc<VarTable>,
    ncols: usize,
    vectors: Vec<Vec<SuperPolynomial>>,
) -> Result<Vec<Vec<SuperPolynomial>>> {
    let mut rows = vectors;
    for row in &rows {
        if row.len() != ncols {
            return Err(Error::ShapeMismatch("ragged vector list".into()));
        }
    }
    let pivots = reduce(table, &mut rows, ncols)?;
    Ok(pivots.into_iter().map(|(r, _)| rows[r].clone()).collect())
}

/// Whether `v` lies in the span of `gens`.
pub fn in_span(
    table: &Arc<VarTable>,
    gens: &[Vec<SuperPolynomial>],
    v: &[SuperPolynomial],
) -> Result<bool> {
    let dim = v.len();
    let rows: Vec<Vec<SuperPolynomial>> = (0..dim)
        .map(|r| gens.iter().map(|g| g[r].clone()).collect())
        .collect();
    Ok(solve(table, gens.len(), rows, v.to_vec())?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_expression;

    fn table() -> Arc<VarTable> {
        VarTable::new(&[("a", true)], &["alpha", "beta"]).unwrap()
    }

    fn p(t: &Arc<VarTable>, s: &str) -> SuperPolynomial {
        parse_expression(s, t).unwrap()
    }

    fn mat(t: &Arc<VarTable>, parity: Parity, rows: [[&str; 2]; 2]) -> SuperMatrix {
        SuperMatrix::from_rows(
            t,
            Shape::new(1, 1),
            Shape::new(1, 1),
            parity,
            rows.iter()
                .map(|r| r.iter().map(|s| p(t, s)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn parity_discipline_is_enforced() {
        let t = table();
        // An even matrix must have odd off-diagonal entries.
        let bad = SuperMatrix::from_rows(
            &t,
            Shape::new(1, 1),
            Shape::new(1, 1),
            Parity::Even,
            vec![vec![p(&t, "a"), p(&t, "a")], vec![p(&t, "0"), p(&t, "1")]],
        );
        assert!(matches!(bad, Err(Error::ParityMismatch(_))));
    }

    #[test]
    fn triangular_inverse_matches_closed_form() {
        let t = table();
        let b = mat(&t, Parity::Even, [["a^-1", "-alpha"], ["0", "1"]]);
        let b_inv = b.inverse().unwrap();
        let expected = mat(&t, Parity::Even, [["a", "a*alpha"], ["0", "1"]]);
        assert_eq!(b_inv, expected);
        assert!(b.matmul(&b_inv).unwrap().is_identity());
        assert!(b_inv.matmul(&b).unwrap().is_identity());
    }

    #[test]
    fn inverse_with_odd_corrections() {
        let t = table();
        let m = mat(
            &t,
            Parity::Even,
            [["a + alpha*beta", "alpha"], ["beta", "1 - alpha*beta"]],
        );
        let m_inv = m.inverse().unwrap();
        assert!(m.matmul(&m_inv).unwrap().is_identity());
        assert!(m_inv.matmul(&m).unwrap().is_identity());
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let t = table();
        let m = mat(&t, Parity::Even, [["a", "0"], ["0", "0"]]);
        assert!(matches!(m.inverse(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn berezinian_is_multiplicative() {
        let t = table();
        let m1 = mat(&t, Parity::Even, [["a", "alpha"], ["beta", "1"]]);
        let m2 = mat(
            &t,
            Parity::Even,
            [["2", "3*alpha + beta"], ["alpha", "a^2"]],
        );
        let prod = m1.matmul(&m2).unwrap();
        let lhs = prod.berezinian().unwrap();
        let rhs = &m1.berezinian().unwrap() * &m2.berezinian().unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nullspace_and_solve_small_systems() {
        let t = table();
        // x + y = 0 over the scalars inside the ring.
        let rows = vec![vec![p(&t, "1"), p(&t, "1")]];
        let ns = nullspace(&t, 2, rows).unwrap();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0][0], p(&t, "-1"));
        assert_eq!(ns[0][1], p(&t, "1"));

        let rows = vec![
            vec![p(&t, "1"), p(&t, "1")],
            vec![p(&t, "1"), p(&t, "-1")],
        ];
        let sol = solve(&t, 2, rows, vec![p(&t, "2"), p(&t, "0")])
            .unwrap()
            .unwrap();
        assert_eq!(sol, vec![p(&t, "1"), p(&t, "1")]);

        let rows = vec![vec![p(&t, "1"), p(&t, "1")], vec![p(&t, "1"), p(&t, "1")]];
        let none = solve(&t, 2, rows, vec![p(&t, "0"), p(&t, "1")]).unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn span_reduction_and_membership() {
        let t = table();
        let u = vec![p(&t, "1"), p(&t, "-1"), p(&t, "0")];
        let twice = vec![p(&t, "2"), p(&t, "-2"), p(&t, "0")];
        let w = vec![p(&t, "0"), p(&t, "0"), p(&t, "a")];
        let basis = span_basis(&t, 3, vec![u.clone(), twice, w.clone()]).unwrap();
        assert_eq!(basis.len(), 2);
        assert!(in_span(&t, &basis, &u).unwrap());
        assert!(in_span(&t, &basis, &w).unwrap());
        let outside = vec![p(&t, "1"), p(&t, "1"), p(&t, "0")];
        assert!(!in_span(&t, &basis, &outside).unwrap());
    }
}
