//! The super skew field and its base extensions.
//!
//! An element is `r0 + theta * r1` with `r0`, `r1` in the coefficient ring,
//! `theta` odd, and `theta^2 = -1`. Coefficients pass `theta` by the grade
//! involution: `r * theta = theta * sigma(r)`. The opposite product follows
//! the sign rule `x *op y = (-1)^{|x||y|} y * x` on homogeneous elements.
//!
//! `psi_matrix` realizes `a (x) b` as the endomorphism `x -> (-1)^{|b||x|}
//! a x b` in the basis `{1, theta}`, and `azumaya_certificate` expresses the
//! four elementary matrices in the images of the basis tensors, with
//! coefficients that stay in half-integers.

use std::fmt;
use std::sync::Arc;

use num::BigRational;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::supermatrix::{self, Shape, SuperMatrix};
use crate::superpoly::{ensure_same_table, Parity, ParityClass, SuperPolynomial, VarTable};

/// Which of the two multiplications to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Plain,
    Opposite,
}

/// `r0 + theta * r1` over the ring of `r0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DElement {
    pub r0: SuperPolynomial,
    pub r1: SuperPolynomial,
}

impl DElement {
    pub fn new(r0: SuperPolynomial, r1: SuperPolynomial) -> Result<Self> {
        ensure_same_table(&r0, &r1)?;
        Ok(DElement { r0, r1 })
    }

    pub fn zero(table: &Arc<VarTable>) -> Self {
        DElement {
            r0: SuperPolynomial::zero(table),
            r1: SuperPolynomial::zero(table),
        }
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        DElement {
            r0: SuperPolynomial::one(table),
            r1: SuperPolynomial::zero(table),
        }
    }

    pub fn theta(table: &Arc<VarTable>) -> Self {
        DElement {
            r0: SuperPolynomial::zero(table),
            r1: SuperPolynomial::one(table),
        }
    }

    pub fn from_coefficient(r: SuperPolynomial) -> Self {
        let zero = SuperPolynomial::zero(r.table());
        DElement { r0: r, r1: zero }
    }

    pub fn table(&self) -> &Arc<VarTable> {
        self.r0.table()
    }

    pub fn is_zero(&self) -> bool {
        self.r0.is_zero() && self.r1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.r0.is_one() && self.r1.is_zero()
    }

    /// Parity of the element; `theta` itself is odd, so the `r1` slot counts
    /// with flipped parity.
    pub fn parity_class(&self) -> ParityClass {
        let c0 = self.r0.parity_class();
        let c1 = match self.r1.parity_class() {
            ParityClass::Homogeneous(p) => ParityClass::Homogeneous(p.flip()),
            other => other,
        };
        match (c0, c1) {
            (ParityClass::Zero, c) | (c, ParityClass::Zero) => c,
            (ParityClass::Homogeneous(p), ParityClass::Homogeneous(q)) if p == q => c0,
            _ => ParityClass::Mixed,
        }
    }

    pub fn homogeneous_part(&self, p: Parity) -> Self {
        DElement {
            r0: self.r0.homogeneous_part(p),
            r1: self.r1.homogeneous_part(p.flip()),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ensure_same_table(&self.r0, &other.r0)?;
        Ok(DElement {
            r0: &self.r0 + &other.r0,
            r1: &self.r1 + &other.r1,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        DElement {
            r0: -&self.r0,
            r1: -&self.r1,
        }
    }
}

impl fmt::Display for DElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + theta*({})", self.r0, self.r1)
    }
}

/// Product of two elements on the chosen side.
pub fn dmul(x: &DElement, y: &DElement, side: Side) -> Result<DElement> {
    ensure_same_table(&x.r0, &y.r0)?;
    match side {
        Side::Plain => {
            // (r0 + theta r1)(s0 + theta s1): moving coefficients across
            // theta applies the grade involution, and theta^2 = -1.
            let r0 = &(&x.r0 * &y.r0) - &(&x.r1.grade_involution() * &y.r1);
            let r1 = &(&x.r0.grade_involution() * &y.r1) + &(&x.r1 * &y.r0);
            Ok(DElement { r0, r1 })
        }
        Side::Opposite => {
            let mut acc = DElement::zero(x.table());
            for p in [Parity::Even, Parity::Odd] {
                let xp = x.homogeneous_part(p);
                if xp.is_zero() {
                    continue;
                }
                for q in [Parity::Even, Parity::Odd] {
                    let yq = y.homogeneous_part(q);
                    if yq.is_zero() {
                        continue;
                    }
                    let mut term = dmul(&yq, &xp, Side::Plain)?;
                    if p == Parity::Odd && q == Parity::Odd {
                        term = term.neg();
                    }
                    acc = acc.add(&term)?;
                }
            }
            Ok(acc)
        }
    }
}

/// Right action of the coefficient ring: `(r0 + theta r1) * r`.
pub fn dscale(x: &DElement, r: &SuperPolynomial) -> Result<DElement> {
    ensure_same_table(&x.r0, r)?;
    dmul(x, &DElement::from_coefficient(r.clone()), Side::Plain)
}

/// Two-sided inverse, when one exists. Tries the branch where the
/// theta-free coefficient is a unit first, then the branch where the theta
/// coefficient is.
pub fn dinvert(x: &DElement) -> Result<DElement> {
    if let Ok(i0) = x.r0.invert_unit() {
        let si0 = i0.grade_involution();
        let denom = &x.r0 + &(&(&x.r1.grade_involution() * &si0) * &x.r1);
        let s0 = denom.invert_unit()?;
        let s1 = -&(&(&si0 * &x.r1) * &s0);
        return Ok(DElement { r0: s0, r1: s1 });
    }
    if let Ok(i1) = x.r1.invert_unit() {
        let sr0 = x.r0.grade_involution();
        let inner = &(&(&x.r0 * &i1) * &sr0) + &x.r1.grade_involution();
        let s1 = -&inner.invert_unit()?;
        let s0 = -&(&(&i1 * &sr0) * &s1);
        return Ok(DElement { r0: s0, r1: s1 });
    }
    Err(Error::NotInvertible(format!(
        "{x} has no invertible coefficient"
    )))
}

fn parity_label(x: &DElement) -> Result<Parity> {
    match x.parity_class() {
        ParityClass::Zero => Ok(Parity::Even),
        ParityClass::Homogeneous(p) => Ok(p),
        ParityClass::Mixed => Err(Error::ParityMismatch(format!(
            "{x} is not homogeneous"
        ))),
    }
}

/// Matrix of `x -> (-1)^{|b||x|} a x b` in the basis `{1, theta}` (first
/// slot even, second odd), for homogeneous `a` and `b`.
pub fn psi_matrix(a: &DElement, b: &DElement) -> Result<SuperMatrix> {
    ensure_same_table(&a.r0, &b.r0)?;
    let table = a.table();
    let pa = parity_label(a)?;
    let pb = parity_label(b)?;
    let mut columns = Vec::new();
    for (x, x_par) in [
        (DElement::one(table), Parity::Even),
        (DElement::theta(table), Parity::Odd),
    ] {
        let mut y = dmul(&dmul(a, &x, Side::Plain)?, b, Side::Plain)?;
        if pb == Parity::Odd && x_par == Parity::Odd {
            y = y.neg();
        }
        columns.push(y);
    }
    SuperMatrix::from_rows(
        table,
        Shape::new(1, 1),
        Shape::new(1, 1),
        pa + pb,
        vec![
            vec![columns[0].r0.clone(), columns[1].r0.clone()],
            vec![columns[0].r1.clone(), columns[1].r1.clone()],
        ],
    )
}

/// The images of the four basis tensors together with the expansion of each
/// elementary matrix in them.
pub struct AzumayaCertificate {
    pub psi_images: [SuperMatrix; 4],
    pub basis_labels: [&'static str; 4],
    pub unit_labels: [&'static str; 4],
    /// `coefficients[u][k]`: elementary matrix `u` equals the sum over `k`
    /// of `coefficients[u][k] * psi_images[k]`.
    pub coefficients: [[Scalar; 4]; 4],
    pub injective: bool,
}

impl AzumayaCertificate {
    /// All expansion coefficients lie in `(1/2) Z`.
    pub fn half_integer_coefficients(&self) -> bool {
        let two = BigRational::from_integer(2.into());
        self.coefficients
            .iter()
            .flatten()
            .all(|c| num::Zero::is_zero(&c.im) && (&c.re * &two).is_integer())
    }
}

/// Builds the certificate over the given coefficient ring.
pub fn azumaya_certificate(table: &Arc<VarTable>) -> Result<AzumayaCertificate> {
    let one = DElement::one(table);
    let theta = DElement::theta(table);
    let tensors = [
        (&one, &one),
        (&theta, &one),
        (&one, &theta),
        (&theta, &theta),
    ];
    let basis_labels = ["1(x)1", "theta(x)1", "1(x)theta", "theta(x)theta"];
    let mut psis = Vec::new();
    for (a, b) in tensors {
        psis.push(psi_matrix(a, b)?);
    }

    let flatten = |m: &SuperMatrix| -> Vec<SuperPolynomial> {
        (0..2)
            .flat_map(|r| (0..2).map(move |c| m.at(r, c).clone()))
            .collect()
    };
    let columns: Vec<Vec<SuperPolynomial>> = psis.iter().map(flatten).collect();
    let rows: Vec<Vec<SuperPolynomial>> = (0..4)
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();

    let injective = supermatrix::nullspace(table, 4, rows.clone())?.is_empty();

    let unit_labels = ["E11", "E12", "E21", "E22"];
    let unit_positions = [(0usize, 0usize), (0, 1), (1, 0), (1, 1)];
    let mut coefficients: [[Scalar; 4]; 4] =
        std::array::from_fn(|_| std::array::from_fn(|_| Scalar::zero()));
    for (u, &(ur, uc)) in unit_positions.iter().enumerate() {
        let mut rhs = vec![SuperPolynomial::zero(table); 4];
        rhs[ur * 2 + uc] = SuperPolynomial::one(table);
        let sol = supermatrix::solve(table, 4, rows.clone(), rhs)?.ok_or_else(|| {
            Error::StructureMismatch(format!(
                "elementary matrix {} is not in the image",
                unit_labels[u]
            ))
        })?;
        for (k, val) in sol.into_iter().enumerate() {
            coefficients[u][k] = val.as_scalar().ok_or_else(|| {
                Error::StructureMismatch("non-constant expansion coefficient".into())
            })?;
        }
    }

    Ok(AzumayaCertificate {
        psi_images: [
            psis[0].clone(),
            psis[1].clone(),
            psis[2].clone(),
            psis[3].clone(),
        ],
        basis_labels,
        unit_labels,
        coefficients,
        injective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_expression;
    use crate::sampling::Sampler;

    fn table() -> Arc<VarTable> {
        VarTable::new(&[("t", true)], &["tau"]).unwrap()
    }

    fn p(t: &Arc<VarTable>, s: &str) -> SuperPolynomial {
        parse_expression(s, t).unwrap()
    }

    fn d(t: &Arc<VarTable>, r0: &str, r1: &str) -> DElement {
        DElement::new(p(t, r0), p(t, r1)).unwrap()
    }

    #[test]
    fn theta_squares() {
        let t = table();
        let theta = DElement::theta(&t);
        let plain = dmul(&theta, &theta, Side::Plain).unwrap();
        assert_eq!(plain, d(&t, "-1", "0"));
        // In the opposite algebra the Koszul sign flips the square.
        let opp = dmul(&theta, &theta, Side::Opposite).unwrap();
        assert_eq!(opp, d(&t, "1", "0"));
    }

    #[test]
    fn coefficients_pass_theta_with_the_involution() {
        let t = table();
        // tau * theta = theta * sigma(tau) = -theta * tau.
        let lhs = dmul(
            &DElement::from_coefficient(p(&t, "tau")),
            &DElement::theta(&t),
            Side::Plain,
        )
        .unwrap();
        assert_eq!(lhs, d(&t, "0", "-tau"));
    }

    #[test]
    fn plain_product_is_associative() {
        let t = table();
        let mut s = Sampler::new(11);
        for _ in 0..25 {
            let x = DElement::new(s.poly(&t, 3, 2, None), s.poly(&t, 3, 2, None)).unwrap();
            let y = DElement::new(s.poly(&t, 3, 2, None), s.poly(&t, 3, 2, None)).unwrap();
            let z = DElement::new(s.poly(&t, 3, 2, None), s.poly(&t, 3, 2, None)).unwrap();
            let left = dmul(&dmul(&x, &y, Side::Plain).unwrap(), &z, Side::Plain).unwrap();
            let right = dmul(&x, &dmul(&y, &z, Side::Plain).unwrap(), Side::Plain).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn opposite_product_is_associative() {
        let t = table();
        let mut s = Sampler::new(12);
        for _ in 0..25 {
            let x = DElement::new(s.poly(&t, 2, 1, None), s.poly(&t, 2, 1, None)).unwrap();
            let y = DElement::new(s.poly(&t, 2, 1, None), s.poly(&t, 2, 1, None)).unwrap();
            let z = DElement::new(s.poly(&t, 2, 1, None), s.poly(&t, 2, 1, None)).unwrap();
            let left = dmul(&dmul(&x, &y, Side::Opposite).unwrap(), &z, Side::Opposite).unwrap();
            let right = dmul(&x, &dmul(&y, &z, Side::Opposite).unwrap(), Side::Opposite).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn psi_images_match_closed_form() {
        let t = table();
        let one = DElement::one(&t);
        let theta = DElement::theta(&t);
        let m = |entries: [[&str; 2]; 2], par: Parity| {
            SuperMatrix::from_rows(
                &t,
                Shape::new(1, 1),
                Shape::new(1, 1),
                par,
                entries
                    .iter()
                    .map(|r| r.iter().map(|s| p(&t, s)).collect())
                    .collect(),
            )
            .unwrap()
        };
        assert!(psi_matrix(&one, &one).unwrap().is_identity());
        assert_eq!(
            psi_matrix(&theta, &one).unwrap(),
            m([["0", "-1"], ["1", "0"]], Parity::Odd)
        );
        assert_eq!(
            psi_matrix(&one, &theta).unwrap(),
            m([["0", "1"], ["1", "0"]], Parity::Odd)
        );
        assert_eq!(
            psi_matrix(&theta, &theta).unwrap(),
            m([["-1", "0"], ["0", "1"]], Parity::Even)
        );
    }

    #[test]
    fn psi_respects_the_twisted_tensor_product() {
        // (a (x) b)(c (x) d) = (-1)^{|b||c|} (a c) (x) (b *op d), and psi
        // must send it to the matrix product of the images.
        let t = table();
        let basis = [DElement::one(&t), DElement::theta(&t)];
        let par = [Parity::Even, Parity::Odd];
        for a in basis.iter() {
            for (bi, b) in basis.iter().enumerate() {
                for (ci, c) in basis.iter().enumerate() {
                    for d_el in basis.iter() {
                        let left = psi_matrix(a, b)
                            .unwrap()
                            .matmul(&psi_matrix(c, d_el).unwrap())
                            .unwrap();
                        let ac = dmul(a, c, Side::Plain).unwrap();
                        let bd = dmul(b, d_el, Side::Opposite).unwrap();
                        let mut right = psi_matrix(&ac, &bd).unwrap();
                        if par[bi] == Parity::Odd && par[ci] == Parity::Odd {
                            right = right.neg();
                        }
                        for r in 0..2 {
                            for cc in 0..2 {
                                assert_eq!(left.at(r, cc), right.at(r, cc));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inversion_closed_forms() {
        let t = table();
        // theta^{-1} = -theta.
        let theta = DElement::theta(&t);
        assert_eq!(dinvert(&theta).unwrap(), d(&t, "0", "-1"));
        // (t + theta tau)^{-1} = t^{-1} - theta t^{-2} tau.
        let x = d(&t, "t", "tau");
        assert_eq!(dinvert(&x).unwrap(), d(&t, "t^-1", "-t^-2*tau"));
    }

    #[test]
    fn random_units_invert_on_both_sides() {
        let t = VarTable::new(&[("t", true), ("y", false)], &["tau", "xi"]).unwrap();
        let mut s = Sampler::new(13);
        let one = DElement::one(&t);
        for k in 0..30 {
            let x = if k % 2 == 0 {
                DElement::new(s.unit(&t, 2), s.odd(&t, 2, 2)).unwrap()
            } else {
                DElement::new(s.odd(&t, 2, 2), s.unit(&t, 2)).unwrap()
            };
            let inv = dinvert(&x).unwrap();
            assert_eq!(dmul(&x, &inv, Side::Plain).unwrap(), one.clone());
            assert_eq!(dmul(&inv, &x, Side::Plain).unwrap(), one.clone());
        }
    }

    #[test]
    fn right_scaling_commutes_with_left_theta() {
        let t = table();
        let mut s = Sampler::new(14);
        let theta = DElement::theta(&t);
        for _ in 0..20 {
            let x = DElement::new(s.poly(&t, 3, 2, None), s.poly(&t, 3, 2, None)).unwrap();
            let r = s.poly(&t, 3, 2, None);
            let r2 = s.poly(&t, 3, 2, None);
            // (x r) r' = x (r r').
            let a = dscale(&dscale(&x, &r).unwrap(), &r2).unwrap();
            let b = dscale(&x, &(&r * &r2)).unwrap();
            assert_eq!(a, b);
            // theta (x r) = (theta x) r.
            let c = dmul(&theta, &dscale(&x, &r).unwrap(), Side::Plain).unwrap();
            let e = dscale(&dmul(&theta, &x, Side::Plain).unwrap(), &r).unwrap();
            assert_eq!(c, e);
        }
    }

    #[test]
    fn azumaya_coefficients_are_frozen_half_integers() {
        for t in [
            VarTable::new(&[], &[]).unwrap(),
            VarTable::new(&[("z0", true)], &["zeta0"]).unwrap(),
        ] {
            let cert = azumaya_certificate(&t).unwrap();
            assert!(cert.injective);
            assert!(cert.half_integer_coefficients());
            let h = |n: i64| Scalar::ratio(n, 2);
            let expected = [
                [h(1), h(0), h(0), h(-1)],
                [h(0), h(-1), h(1), h(0)],
                [h(0), h(1), h(1), h(0)],
                [h(1), h(0), h(0), h(1)],
            ];
            assert_eq!(cert.coefficients, expected);
        }
    }
}
