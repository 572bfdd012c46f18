//! Supercommutant composition of rank `(1|1)` module structures.
//!
//! `M (x) N` for a left and a right rank `(1|1)` module is free of rank
//! `2|2` with ordered basis `e(x)e', f(x)f', e(x)f', f(x)e'` (two even slots,
//! then two odd). The supercommutant is the span of the homogeneous `w` with
//! `theta w = (-1)^{|w|} w theta`; it is free of rank `1|1`, with closed-form
//! basis `u = e(x)e' - f(x)f'`, `v = e(x)f' - f(x)e'` for the standard
//! structures. The products of two right structures are commutants after an
//! `i` twist on one side, and coincide with the `+i` and `-i` eigenspaces of
//! the even operator `phi (x) phi'`.

use std::sync::Arc;

use crate::dmodule::{Chirality, PhiModule};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::supermatrix::{self, Shape, SuperMatrix};
use crate::superpoly::{ensure_same_table, Parity, ParityClass, SuperPolynomial, VarTable};

/// Basis order of the tensor square: `(m-index, n-index)` pairs, even slots
/// first.
pub const TENSOR_SLOTS: [(usize, usize); 4] = [(0, 0), (1, 1), (0, 1), (1, 0)];

fn factor_parity(idx: usize) -> Parity {
    if idx == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// Parity of a tensor basis slot.
pub fn slot_parity(k: usize) -> Parity {
    let (a, b) = TENSOR_SLOTS[k];
    factor_parity(a) + factor_parity(b)
}

fn slot_index(a: usize, b: usize) -> usize {
    TENSOR_SLOTS
        .iter()
        .position(|&(x, y)| (x, y) == (a, b))
        .expect("tensor slot")
}

fn check_shape(phi: &SuperMatrix, what: &str) -> Result<()> {
    if phi.row_shape() != Shape::new(1, 1) || phi.col_shape() != Shape::new(1, 1) {
        return Err(Error::ShapeMismatch(format!("{what} must be (1|1) x (1|1)")));
    }
    if phi.parity() != Parity::Odd {
        return Err(Error::ParityMismatch(format!("{what} must be odd")));
    }
    Ok(())
}

/// Matrix of the left `theta`-action on the tensor, from the structure `f`
/// on the left factor: moving the coefficient past the right basis vector
/// costs `(-1)^{|f_entry| |n_b|}`.
fn left_tensor_matrix(f: &SuperMatrix) -> Vec<Vec<SuperPolynomial>> {
    let table = f.table();
    let mut rows = vec![vec![SuperPolynomial::zero(table); 4]; 4];
    for (k, &(a, b)) in TENSOR_SLOTS.iter().enumerate() {
        for r in 0..2 {
            let entry = f.at(r, a);
            if entry.is_zero() {
                continue;
            }
            let l = slot_index(r, b);
            // |entry| = 1 + |m_r| + |m_a|.
            let entry_parity = Parity::Odd + factor_parity(r) + factor_parity(a);
            let signed = if entry_parity == Parity::Odd && factor_parity(b) == Parity::Odd {
                -entry
            } else {
                entry.clone()
            };
            rows[l][k] = &rows[l][k] + &signed;
        }
    }
    rows
}

/// Matrix of the raw right `theta`-action on the tensor, from the `RightD`
/// structure `g` on the right factor: `n . theta = (-1)^{|n|} g(n)`.
fn right_tensor_matrix(g: &SuperMatrix) -> Vec<Vec<SuperPolynomial>> {
    let table = g.table();
    let mut rows = vec![vec![SuperPolynomial::zero(table); 4]; 4];
    for (k, &(a, b)) in TENSOR_SLOTS.iter().enumerate() {
        for s in 0..2 {
            let entry = g.at(s, b);
            if entry.is_zero() {
                continue;
            }
            let l = slot_index(a, s);
            let signed = if factor_parity(b) == Parity::Odd {
                -entry
            } else {
                entry.clone()
            };
            rows[l][k] = &rows[l][k] + &signed;
        }
    }
    rows
}

fn matrix_apply(m: &[Vec<SuperPolynomial>], v: &[SuperPolynomial]) -> Vec<SuperPolynomial> {
    let table = v[0].table();
    (0..m.len())
        .map(|l| {
            let mut acc = SuperPolynomial::zero(table);
            for (k, x) in v.iter().enumerate() {
                acc = &acc + &(&m[l][k] * x);
            }
            acc
        })
        .collect()
}

/// Whether the homogeneous coefficient vector of parity `p` satisfies
/// `theta w = (-1)^p w theta` for the given action matrices.
fn membership_holds(
    lmat: &[Vec<SuperPolynomial>],
    rmat: &[Vec<SuperPolynomial>],
    slot_par: &[Parity],
    v: &[SuperPolynomial],
    p: Parity,
) -> bool {
    let lhs = matrix_apply(lmat, v);
    let sigma: Vec<SuperPolynomial> = v
        .iter()
        .zip(slot_par)
        .map(|(c, &sp)| c.scale(&(p + sp).sign()))
        .collect();
    let rhs = matrix_apply(rmat, &sigma);
    lhs.iter()
        .zip(&rhs)
        .all(|(a, b)| *a == b.scale(&p.sign()))
}

/// Nullspace of the merged commutant system, split into parity-homogeneous
/// reduced generators `(even, odd)`. Works for any slot count.
fn merged_commutant(
    table: &Arc<VarTable>,
    slot_par: &[Parity],
    lmat: &[Vec<SuperPolynomial>],
    rmat: &[Vec<SuperPolynomial>],
) -> Result<(Vec<Vec<SuperPolynomial>>, Vec<Vec<SuperPolynomial>>)> {
    let dim = slot_par.len();
    // theta w = (-1)^{|w|} w theta merges across parities: the coefficient
    // condition is L c = R D c with D = diag((-1)^{slot parity}).
    let mut a = vec![vec![SuperPolynomial::zero(table); dim]; dim];
    for l in 0..dim {
        for k in 0..dim {
            let eps = slot_par[k].sign();
            a[l][k] = &lmat[l][k] - &rmat[l][k].scale(&eps);
        }
    }
    let gens = supermatrix::nullspace(table, dim, a)?;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for g in gens {
        for p in [Parity::Even, Parity::Odd] {
            let part: Vec<SuperPolynomial> = g
                .iter()
                .zip(slot_par)
                .map(|(c, &sp)| c.homogeneous_part(p + sp))
                .collect();
            if part.iter().any(|c| !c.is_zero()) {
                debug_assert!(membership_holds(lmat, rmat, slot_par, &part, p));
                if p == Parity::Even {
                    even.push(part);
                } else {
                    odd.push(part);
                }
            }
        }
    }
    Ok((
        supermatrix::span_basis(table, dim, even)?,
        supermatrix::span_basis(table, dim, odd)?,
    ))
}

/// A left and a right structure acting on the two tensor factors.
#[derive(Clone, Debug)]
pub struct BimoduleTensor {
    pub left_phi: SuperMatrix,
    pub right_phi: SuperMatrix,
}

impl BimoduleTensor {
    pub fn new(left_phi: SuperMatrix, right_phi: SuperMatrix) -> Result<Self> {
        check_shape(&left_phi, "left structure")?;
        check_shape(&right_phi, "right structure")?;
        ensure_same_table(left_phi.at(0, 0), right_phi.at(0, 0))?;
        Ok(BimoduleTensor {
            left_phi,
            right_phi,
        })
    }

    pub fn table(&self) -> &Arc<VarTable> {
        self.left_phi.table()
    }

    /// Left square `-1`, right square `+1` (the right structure is stored in
    /// the twisted convention `n . theta = (-1)^{|n|} phi'(n)`).
    pub fn check_structure(&self) -> Result<()> {
        let id = SuperMatrix::identity(self.table(), Shape::new(1, 1));
        if self.left_phi.matmul(&self.left_phi)? != id.neg() {
            return Err(Error::StructureMismatch(
                "left structure does not square to -1".into(),
            ));
        }
        if self.right_phi.matmul(&self.right_phi)? != id {
            return Err(Error::StructureMismatch(
                "right structure does not square to +1".into(),
            ));
        }
        Ok(())
    }

    /// The two actions commute as a bimodule: `L R = R sigma(L)` on
    /// matrices, the involution coming from the twisted right linearity.
    pub fn actions_commute(&self) -> bool {
        let l = left_tensor_matrix(&self.left_phi);
        let r = right_tensor_matrix(&self.right_phi);
        let table = self.table();
        let prod = |x: &[Vec<SuperPolynomial>], y: &[Vec<SuperPolynomial>], twist: bool| {
            let mut out = vec![vec![SuperPolynomial::zero(table); 4]; 4];
            for i in 0..4 {
                for j in 0..4 {
                    let mut acc = SuperPolynomial::zero(table);
                    for k in 0..4 {
                        let yy = if twist {
                            y[k][j].grade_involution()
                        } else {
                            y[k][j].clone()
                        };
                        acc = &acc + &(&x[i][k] * &yy);
                    }
                    out[i][j] = acc;
                }
            }
            out
        };
        prod(&l, &r, false) == prod(&r, &l, true)
    }
}

/// A rank `1|1` commutant basis: `u` even, `v` odd, as coefficient vectors
/// in the tensor basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutantBasis {
    pub u: Vec<SuperPolynomial>,
    pub v: Vec<SuperPolynomial>,
}

impl CommutantBasis {
    /// The closed form for the standard structures: `u = e(x)e' - f(x)f'`,
    /// `v = e(x)f' - f(x)e'`.
    pub fn closed_form(table: &Arc<VarTable>) -> Self {
        let one = SuperPolynomial::one(table);
        let zero = SuperPolynomial::zero(table);
        CommutantBasis {
            u: vec![one.clone(), -&one, zero.clone(), zero.clone()],
            v: vec![zero.clone(), zero, one.clone(), -&one],
        }
    }

    pub fn vectors(&self) -> Vec<Vec<SuperPolynomial>> {
        vec![self.u.clone(), self.v.clone()]
    }
}

/// Solves `theta w = (-1)^{|w|} w theta` over the rank `2|2` tensor and
/// returns the rank `1|1` basis.
pub fn supercommutant(t: &BimoduleTensor) -> Result<CommutantBasis> {
    t.check_structure()?;
    let table = t.table();
    let slot_par: Vec<Parity> = (0..4).map(slot_parity).collect();
    let lmat = left_tensor_matrix(&t.left_phi);
    let rmat = right_tensor_matrix(&t.right_phi);
    let (even, odd) = merged_commutant(table, &slot_par, &lmat, &rmat)?;
    if even.len() != 1 || odd.len() != 1 {
        return Err(Error::StructureMismatch(format!(
            "commutant rank {}|{}, expected 1|1",
            even.len(),
            odd.len()
        )));
    }
    if !membership_holds(&lmat, &rmat, &slot_par, &even[0], Parity::Even)
        || !membership_holds(&lmat, &rmat, &slot_par, &odd[0], Parity::Odd)
    {
        return Err(Error::StructureMismatch(
            "solver output fails the commutant condition".into(),
        ));
    }
    Ok(CommutantBasis {
        u: even[0].clone(),
        v: odd[0].clone(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxVariant {
    Plain,
    Opposite,
}

fn require_right_structure(s: &PhiModule) -> Result<()> {
    if s.chirality != Chirality::RightD {
        return Err(Error::StructureMismatch(
            "box products take right structures".into(),
        ));
    }
    s.check_structure()
}

/// The product of two right structures: `Plain` twists the left factor by
/// `i` and solves the skew-field commutant; `Opposite` solves the commutant
/// over the opposite skew field, twisting the right factor instead.
pub fn boxtimes(s: &PhiModule, s2: &PhiModule, variant: BoxVariant) -> Result<CommutantBasis> {
    require_right_structure(s)?;
    require_right_structure(s2)?;
    ensure_same_table(s.phi.at(0, 0), s2.phi.at(0, 0))?;
    let table = s.table();
    let i = Scalar::i();
    let (left, right) = match variant {
        BoxVariant::Plain => (s.phi.scale(&i), s2.phi.clone()),
        BoxVariant::Opposite => (s.phi.clone(), s2.phi.scale(&i)),
    };
    let slot_par: Vec<Parity> = (0..4).map(slot_parity).collect();
    let lmat = left_tensor_matrix(&left);
    let rmat = right_tensor_matrix(&right);
    let (even, odd) = merged_commutant(table, &slot_par, &lmat, &rmat)?;
    if even.len() != 1 || odd.len() != 1 {
        return Err(Error::StructureMismatch(format!(
            "box product rank {}|{}, expected 1|1",
            even.len(),
            odd.len()
        )));
    }
    Ok(CommutantBasis {
        u: even[0].clone(),
        v: odd[0].clone(),
    })
}

/// Membership in the first displayed condition: `i phi(s)(x)s' =
/// (-1)^{|s|} s(x)phi'(s')` as an identity of coefficient vectors.
pub fn plain_membership(
    s: &PhiModule,
    s2: &PhiModule,
    vec: &[SuperPolynomial],
) -> Result<bool> {
    let lmat = left_tensor_matrix(&s.phi.scale(&Scalar::i()));
    let rhs = sign_tensor_structure(&s2.phi);
    Ok(matrix_apply(&lmat, vec) == matrix_apply(&rhs, vec))
}

/// Membership in the second displayed condition: `phi(s)(x)s' =
/// i (-1)^{|s|} s(x)phi'(s')`.
pub fn opposite_membership(
    s: &PhiModule,
    s2: &PhiModule,
    vec: &[SuperPolynomial],
) -> Result<bool> {
    let lmat = left_tensor_matrix(&s.phi);
    let rhs = sign_tensor_structure(&s2.phi);
    let scaled: Vec<Vec<SuperPolynomial>> = rhs
        .iter()
        .map(|row| row.iter().map(|e| e.scale(&Scalar::i())).collect())
        .collect();
    Ok(matrix_apply(&lmat, vec) == matrix_apply(&scaled, vec))
}

/// Matrix of `s (x) s' -> (-1)^{|s|} s (x) phi'(s')`.
fn sign_tensor_structure(g: &SuperMatrix) -> Vec<Vec<SuperPolynomial>> {
    let table = g.table();
    let mut rows = vec![vec![SuperPolynomial::zero(table); 4]; 4];
    for (k, &(a, b)) in TENSOR_SLOTS.iter().enumerate() {
        for s in 0..2 {
            let entry = g.at(s, b);
            if entry.is_zero() {
                continue;
            }
            let l = slot_index(a, s);
            let signed = if factor_parity(a) == Parity::Odd {
                -entry
            } else {
                entry.clone()
            };
            rows[l][k] = &rows[l][k] + &signed;
        }
    }
    rows
}

/// The even operator `phi (x) phi'` with the Koszul sign
/// `(phi (x) phi')(s (x) s') = (-1)^{|s|} phi(s) (x) phi'(s')`.
pub fn compose_operator(s: &PhiModule, s2: &PhiModule) -> Result<SuperMatrix> {
    require_right_structure(s)?;
    require_right_structure(s2)?;
    ensure_same_table(s.phi.at(0, 0), s2.phi.at(0, 0))?;
    let table = s.table();
    let mut out = SuperMatrix::zero(
        table,
        Shape::new(2, 2),
        Shape::new(2, 2),
        Parity::Even,
    );
    for (k, &(a, b)) in TENSOR_SLOTS.iter().enumerate() {
        for r in 0..2 {
            let fe = s.phi.at(r, a);
            if fe.is_zero() {
                continue;
            }
            for t in 0..2 {
                let ge = s2.phi.at(t, b);
                if ge.is_zero() {
                    continue;
                }
                let l = slot_index(r, t);
                // sign = (-1)^{|m_a| + (1 + |m_r| + |m_a|)|n_t|}.
                let mut sign = factor_parity(a);
                if (Parity::Odd + factor_parity(r) + factor_parity(a)) == Parity::Odd
                    && factor_parity(t) == Parity::Odd
                {
                    sign = sign + Parity::Odd;
                }
                let term = (fe * ge).scale(&sign.sign());
                let updated = out.at(l, k) + &term;
                out.set(l, k, updated)?;
            }
        }
    }
    Ok(out)
}

/// Basis of the `+i` (`plus`) or `-i` eigenspace of an even operator `t`
/// with `t^2 = -1`, computed as the kernel of `t -/+ i`.
pub fn eigenspace(t: &SuperMatrix, plus: bool) -> Result<CommutantBasis> {
    let table = t.table();
    let square = t.matmul(t)?;
    if !square.neg().is_identity() {
        return Err(Error::StructureMismatch(format!(
            "operator square is {square}, expected -1"
        )));
    }
    let lambda = if plus { Scalar::i() } else { -Scalar::i() };
    let rows: Vec<Vec<SuperPolynomial>> = (0..4)
        .map(|r| {
            (0..4)
                .map(|c| {
                    if r == c {
                        t.at(r, c) - &SuperPolynomial::scalar(table, lambda.clone())
                    } else {
                        t.at(r, c).clone()
                    }
                })
                .collect()
        })
        .collect();
    let basis = supermatrix::nullspace(table, 4, rows)?;
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for h in basis {
        match vector_parity(&h) {
            Some(Parity::Even) => even.push(h),
            Some(Parity::Odd) => odd.push(h),
            None => {
                return Err(Error::StructureMismatch(
                    "eigenspace basis vector is not homogeneous".into(),
                ))
            }
        }
    }
    if even.len() != 1 || odd.len() != 1 {
        return Err(Error::StructureMismatch(format!(
            "eigenspace rank {}|{}, expected 1|1",
            even.len(),
            odd.len()
        )));
    }
    Ok(CommutantBasis {
        u: even.pop().expect("checked length"),
        v: odd.pop().expect("checked length"),
    })
}

/// The common module parity of a nonzero homogeneous tensor vector, where
/// component `k` of a parity-`p` vector is a polynomial of parity
/// `p + slot_parity(k)`.
fn vector_parity(h: &[SuperPolynomial]) -> Option<Parity> {
    for p in [Parity::Even, Parity::Odd] {
        let fits = h.iter().enumerate().all(|(k, c)| match c.parity_class() {
            ParityClass::Zero => true,
            ParityClass::Homogeneous(q) => q == p + slot_parity(k),
            ParityClass::Mixed => false,
        });
        if fits && h.iter().any(|c| !c.is_zero()) {
            return Some(p);
        }
    }
    None
}

/// Mutual containment of the spans of two bases.
pub fn spans_match(a: &CommutantBasis, b: &CommutantBasis) -> Result<bool> {
    let table = a.u[0].table();
    let ga = supermatrix::span_basis(table, 4, a.vectors())?;
    let gb = supermatrix::span_basis(table, 4, b.vectors())?;
    for v in a.vectors() {
        if !supermatrix::in_span(table, &gb, &v)? {
            return Ok(false);
        }
    }
    for v in b.vectors() {
        if !supermatrix::in_span(table, &ga, &v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Base-change matrix on the tensor induced by base changes `c`, `c2` of the
/// factors: moving the left coefficient past the new right basis vector
/// costs `(-1)^{|c_entry| |n_s|}`.
pub fn tensor_basis_matrix(
    c: &SuperMatrix,
    c2: &SuperMatrix,
) -> Result<Vec<Vec<SuperPolynomial>>> {
    ensure_same_table(c.at(0, 0), c2.at(0, 0))?;
    let table = c.table();
    let mut rows = vec![vec![SuperPolynomial::zero(table); 4]; 4];
    for (k, &(a, b)) in TENSOR_SLOTS.iter().enumerate() {
        for r in 0..2 {
            let ce = c.at(r, a);
            if ce.is_zero() {
                continue;
            }
            for s in 0..2 {
                let ce2 = c2.at(s, b);
                if ce2.is_zero() {
                    continue;
                }
                let l = slot_index(r, s);
                // |c_entry| = |m_r| + |m_a| for an even base change.
                let moves = (factor_parity(r) + factor_parity(a)) == Parity::Odd
                    && factor_parity(s) == Parity::Odd;
                let mut term = ce * ce2;
                if moves {
                    term = -&term;
                }
                rows[l][k] = &rows[l][k] + &term;
            }
        }
    }
    Ok(rows)
}

/// Applies a `4 x 4` coefficient matrix to a tensor coefficient vector.
pub fn apply_matrix(m: &[Vec<SuperPolynomial>], v: &[SuperPolynomial]) -> Vec<SuperPolynomial> {
    matrix_apply(m, v)
}

/// Rank of the commutant of the free module `D (x) V` over the scalars,
/// for `V` of the given even|odd rank; the Morita composite must return the
/// rank of `V`.
pub fn morita_commutant_rank(even_rank: usize, odd_rank: usize) -> Result<(usize, usize)> {
    let table = VarTable::new(&[], &[])?;
    let dim = even_rank + odd_rank;
    let v_par: Vec<Parity> = (0..dim)
        .map(|l| {
            if l < even_rank {
                Parity::Even
            } else {
                Parity::Odd
            }
        })
        .collect();
    // Slots: (1 (x) v_l) at 2l, (theta (x) v_l) at 2l + 1.
    let slot_par: Vec<Parity> = (0..2 * dim)
        .map(|k| {
            let l = k / 2;
            if k % 2 == 0 {
                v_par[l]
            } else {
                v_par[l].flip()
            }
        })
        .collect();
    let zero = SuperPolynomial::zero(&table);
    let one = SuperPolynomial::one(&table);
    let mut lmat = vec![vec![zero.clone(); 2 * dim]; 2 * dim];
    let mut rmat = vec![vec![zero.clone(); 2 * dim]; 2 * dim];
    for l in 0..dim {
        // theta (1 (x) v) = theta (x) v; theta (theta (x) v) = -(1 (x) v).
        lmat[2 * l + 1][2 * l] = one.clone();
        lmat[2 * l][2 * l + 1] = -&one;
        // (1 (x) v) theta = (-1)^{|v|} theta (x) v;
        // (theta (x) v) theta = -(-1)^{|v|} (1 (x) v).
        let s = v_par[l].sign();
        rmat[2 * l + 1][2 * l] = SuperPolynomial::scalar(&table, s.clone());
        rmat[2 * l][2 * l + 1] = SuperPolynomial::scalar(&table, -&s);
    }
    let (even, odd) = merged_commutant(&table, &slot_par, &lmat, &rmat)?;
    Ok((even.len(), odd.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_expression;
    use crate::sampling::Sampler;

    fn trivial() -> Arc<VarTable> {
        VarTable::new(&[], &[]).unwrap()
    }

    fn poly_table() -> Arc<VarTable> {
        VarTable::new(&[("z0", true)], &["zeta0"]).unwrap()
    }

    fn p(t: &Arc<VarTable>, s: &str) -> SuperPolynomial {
        parse_expression(s, t).unwrap()
    }

    fn odd_matrix(t: &Arc<VarTable>, rows: [[&str; 2]; 2]) -> SuperMatrix {
        SuperMatrix::from_rows(
            t,
            Shape::new(1, 1),
            Shape::new(1, 1),
            Parity::Odd,
            rows.iter()
                .map(|r| r.iter().map(|s| p(t, s)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn canonical_tensor(t: &Arc<VarTable>) -> BimoduleTensor {
        BimoduleTensor::new(
            odd_matrix(t, [["0", "-1"], ["1", "0"]]),
            odd_matrix(t, [["0", "1"], ["1", "0"]]),
        )
        .unwrap()
    }

    fn vecs(t: &Arc<VarTable>, raw: [&str; 4]) -> Vec<SuperPolynomial> {
        raw.iter().map(|s| p(t, s)).collect()
    }

    /// A random even invertible base change with unit diagonal.
    fn conjugator(s: &mut Sampler, t: &Arc<VarTable>) -> SuperMatrix {
        let d1 = s.unit(t, 1);
        let d2 = s.unit(t, 1);
        let o1 = s.odd(t, 1, 1);
        let o2 = s.odd(t, 1, 1);
        SuperMatrix::from_rows(
            t,
            Shape::new(1, 1),
            Shape::new(1, 1),
            Parity::Even,
            vec![vec![d1, o1], vec![o2, d2]],
        )
        .unwrap()
    }

    #[test]
    fn canonical_commutant_is_the_closed_form() {
        for t in [trivial(), poly_table()] {
            let tensor = canonical_tensor(&t);
            assert!(tensor.actions_commute());
            let basis = supercommutant(&tensor).unwrap();
            let closed = CommutantBasis::closed_form(&t);
            assert!(spans_match(&basis, &closed).unwrap());
            assert_eq!(basis.u, vecs(&t, ["1", "-1", "0", "0"]));
            assert_eq!(basis.v, vecs(&t, ["0", "0", "1", "-1"]));
        }
    }

    #[test]
    fn commutant_rejects_wrong_squares() {
        let t = trivial();
        let bad = BimoduleTensor::new(
            odd_matrix(&t, [["0", "1"], ["1", "0"]]),
            odd_matrix(&t, [["0", "1"], ["1", "0"]]),
        )
        .unwrap();
        assert!(matches!(
            supercommutant(&bad),
            Err(Error::StructureMismatch(_))
        ));
    }

    #[test]
    fn conjugated_commutant_transports_to_the_closed_form() {
        for (seed, t) in [(31u64, trivial()), (32u64, poly_table())] {
            let mut s = Sampler::new(seed);
            for _ in 0..10 {
                let c = conjugator(&mut s, &t);
                let c2 = conjugator(&mut s, &t);
                let tensor = canonical_tensor(&t);
                let left = c
                    .inverse()
                    .unwrap()
                    .matmul(&tensor.left_phi)
                    .unwrap()
                    .matmul(&c)
                    .unwrap();
                let right = c2
                    .inverse()
                    .unwrap()
                    .matmul(&tensor.right_phi)
                    .unwrap()
                    .matmul(&c2)
                    .unwrap();
                let conj = BimoduleTensor::new(left, right).unwrap();
                assert!(conj.actions_commute());
                let basis = supercommutant(&conj).unwrap();
                let k = tensor_basis_matrix(&c, &c2).unwrap();
                let transported = CommutantBasis {
                    u: apply_matrix(&k, &basis.u),
                    v: apply_matrix(&k, &basis.v),
                };
                let closed = CommutantBasis::closed_form(&t);
                assert!(spans_match(&transported, &closed).unwrap());
            }
        }
    }

    #[test]
    fn box_products_on_canonical_structures() {
        let t = trivial();
        let phi = PhiModule::new(
            odd_matrix(&t, [["0", "1"], ["1", "0"]]),
            Chirality::RightD,
        )
        .unwrap();
        let plain = boxtimes(&phi, &phi, BoxVariant::Plain).unwrap();
        assert_eq!(plain.u, vecs(&t, ["1", "-i", "0", "0"]));
        assert_eq!(plain.v, vecs(&t, ["0", "0", "1", "-i"]));
        assert!(plain_membership(&phi, &phi, &plain.u).unwrap());
        assert!(plain_membership(&phi, &phi, &plain.v).unwrap());

        let opp = boxtimes(&phi, &phi, BoxVariant::Opposite).unwrap();
        assert_eq!(opp.u, vecs(&t, ["1", "i", "0", "0"]));
        assert_eq!(opp.v, vecs(&t, ["0", "0", "1", "i"]));
        assert!(opposite_membership(&phi, &phi, &opp.u).unwrap());
        assert!(opposite_membership(&phi, &phi, &opp.v).unwrap());

        // Complementary: together the two products span rank 2|2.
        let all = supermatrix::span_basis(
            &t,
            4,
            vec![plain.u, plain.v, opp.u, opp.v],
        )
        .unwrap();
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn eigenspaces_match_the_box_products() {
        let t = trivial();
        let phi = PhiModule::new(
            odd_matrix(&t, [["0", "1"], ["1", "0"]]),
            Chirality::RightD,
        )
        .unwrap();
        let op = compose_operator(&phi, &phi).unwrap();
        assert!(op.matmul(&op).unwrap().neg().is_identity());
        let plus = eigenspace(&op, true).unwrap();
        let minus = eigenspace(&op, false).unwrap();
        let plain = boxtimes(&phi, &phi, BoxVariant::Plain).unwrap();
        let opp = boxtimes(&phi, &phi, BoxVariant::Opposite).unwrap();
        assert!(spans_match(&plus, &plain).unwrap());
        assert!(spans_match(&minus, &opp).unwrap());
    }

    #[test]
    fn eigenspace_box_equivalence_under_conjugation() {
        for (seed, t) in [(41u64, trivial()), (42u64, poly_table())] {
            let mut s = Sampler::new(seed);
            let base = odd_matrix(&t, [["0", "1"], ["1", "0"]]);
            for _ in 0..10 {
                let c = conjugator(&mut s, &t);
                let c2 = conjugator(&mut s, &t);
                let phi = PhiModule::new(
                    c.inverse().unwrap().matmul(&base).unwrap().matmul(&c).unwrap(),
                    Chirality::RightD,
                )
                .unwrap();
                let phi2 = PhiModule::new(
                    c2.inverse()
                        .unwrap()
                        .matmul(&base)
                        .unwrap()
                        .matmul(&c2)
                        .unwrap(),
                    Chirality::RightD,
                )
                .unwrap();
                let op = compose_operator(&phi, &phi2).unwrap();
                let plus = eigenspace(&op, true).unwrap();
                let minus = eigenspace(&op, false).unwrap();
                let plain = boxtimes(&phi, &phi2, BoxVariant::Plain).unwrap();
                let opp = boxtimes(&phi, &phi2, BoxVariant::Opposite).unwrap();
                assert!(spans_match(&plus, &plain).unwrap());
                assert!(spans_match(&minus, &opp).unwrap());
            }
        }
    }

    #[test]
    fn swapping_the_square_root_swaps_the_products() {
        // Twisting the left factor by -i instead of i yields exactly the
        // opposite product's solution space.
        let t = trivial();
        let phi_m = odd_matrix(&t, [["0", "1"], ["1", "0"]]);
        let phi = PhiModule::new(phi_m.clone(), Chirality::RightD).unwrap();
        let slot_par: Vec<Parity> = (0..4).map(slot_parity).collect();
        let lmat = left_tensor_matrix(&phi_m.scale(&-Scalar::i()));
        let rmat = right_tensor_matrix(&phi_m);
        let (even, odd) = merged_commutant(&t, &slot_par, &lmat, &rmat).unwrap();
        let swapped = CommutantBasis {
            u: even[0].clone(),
            v: odd[0].clone(),
        };
        let opp = boxtimes(&phi, &phi, BoxVariant::Opposite).unwrap();
        assert!(spans_match(&swapped, &opp).unwrap());
    }

    #[test]
    fn morita_ranks_match() {
        assert_eq!(morita_commutant_rank(1, 0).unwrap(), (1, 0));
        assert_eq!(morita_commutant_rank(0, 1).unwrap(), (0, 1));
        assert_eq!(morita_commutant_rank(1, 1).unwrap(), (1, 1));
    }
}
