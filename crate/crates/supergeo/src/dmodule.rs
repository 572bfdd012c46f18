//! Modules over the super skew field in rank `(1|1)`.
//!
//! A left module structure is an odd operator `phi` with `phi^2 = -1`
//! (the square of left multiplication by `theta`); a right module structure
//! is an odd operator with `phi^2 = +1`, acting through `v . theta =
//! (-1)^{|v|} phi(v)`. `canonicalize` produces the base change that brings a
//! right structure with invertible `(0,1)` entry to the standard form
//! `[[0, 1], [1, 0]]`.

use std::sync::Arc;

use crate::dskew::DElement;
use crate::error::{Error, Result};
use crate::supermatrix::{Shape, SuperMatrix};
use crate::superpoly::{Parity, SuperPolynomial, VarTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chirality {
    LeftD,
    RightD,
}

/// A rank `(1|1)` module presented by its odd structure operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiModule {
    pub phi: SuperMatrix,
    pub chirality: Chirality,
}

impl PhiModule {
    pub fn new(phi: SuperMatrix, chirality: Chirality) -> Result<Self> {
        if phi.row_shape() != Shape::new(1, 1) || phi.col_shape() != Shape::new(1, 1) {
            return Err(Error::ShapeMismatch(
                "structure operator must be (1|1) x (1|1)".into(),
            ));
        }
        if phi.parity() != Parity::Odd {
            return Err(Error::ParityMismatch(
                "structure operator must be odd".into(),
            ));
        }
        Ok(PhiModule { phi, chirality })
    }

    pub fn table(&self) -> &Arc<VarTable> {
        self.phi.table()
    }

    /// The structure operator of the skew field acting on itself.
    pub fn canonical(table: &Arc<VarTable>, chirality: Chirality) -> Self {
        let m = canonical_matrix(table, chirality);
        PhiModule { phi: m, chirality }
    }

    /// Verifies the defining square: `-1` for left structures, `+1` for
    /// right structures.
    pub fn check_structure(&self) -> Result<()> {
        let square = self.phi.matmul(&self.phi)?;
        let identity = SuperMatrix::identity(self.table(), Shape::new(1, 1));
        let expected = match self.chirality {
            Chirality::LeftD => identity.neg(),
            Chirality::RightD => identity,
        };
        if square != expected {
            return Err(Error::StructureMismatch(format!(
                "phi^2 = {square}, expected {expected}"
            )));
        }
        Ok(())
    }
}

fn canonical_matrix(table: &Arc<VarTable>, chirality: Chirality) -> SuperMatrix {
    let one = SuperPolynomial::one(table);
    let zero = SuperPolynomial::zero(table);
    let top = match chirality {
        Chirality::LeftD => -&one,
        Chirality::RightD => one.clone(),
    };
    SuperMatrix::from_rows(
        table,
        Shape::new(1, 1),
        Shape::new(1, 1),
        Parity::Odd,
        vec![vec![zero.clone(), top], vec![one, zero]],
    )
    .expect("canonical structure matrix is well formed")
}

/// Matrix of the `theta`-action of the skew field on itself in the basis
/// `{1, theta}`: left multiplication for `LeftD`, the twisted right
/// multiplication `s -> (-1)^{|s|} s theta` for `RightD`.
pub fn phi_from_theta_action(table: &Arc<VarTable>, chirality: Chirality) -> Result<SuperMatrix> {
    use crate::dskew::{dmul, Side};
    let theta = DElement::theta(table);
    let basis = [
        (DElement::one(table), Parity::Even),
        (DElement::theta(table), Parity::Odd),
    ];
    let mut cols = Vec::new();
    for (b, p) in &basis {
        let image = match chirality {
            Chirality::LeftD => dmul(&theta, b, Side::Plain)?,
            Chirality::RightD => {
                let mut im = dmul(b, &theta, Side::Plain)?;
                if *p == Parity::Odd {
                    im = im.neg();
                }
                im
            }
        };
        cols.push(image);
    }
    SuperMatrix::from_rows(
        table,
        Shape::new(1, 1),
        Shape::new(1, 1),
        Parity::Odd,
        vec![
            vec![cols[0].r0.clone(), cols[1].r0.clone()],
            vec![cols[0].r1.clone(), cols[1].r1.clone()],
        ],
    )
}

/// The right action `v . (c + theta gamma) = v c + (-1)^{|v|} phi(v) gamma`,
/// extended additively from homogeneous `v`. Coordinates are written in a
/// homogeneous basis, first slot even, second odd.
pub fn right_action(
    m: &PhiModule,
    v: (&SuperPolynomial, &SuperPolynomial),
    d: &DElement,
) -> Result<(SuperPolynomial, SuperPolynomial)> {
    if m.chirality != Chirality::RightD {
        return Err(Error::InvalidArgument(
            "right_action needs a right module structure".into(),
        ));
    }
    let table = m.table();
    let mut out = (
        SuperPolynomial::zero(table),
        SuperPolynomial::zero(table),
    );
    for p in [Parity::Even, Parity::Odd] {
        let vp = (v.0.homogeneous_part(p), v.1.homogeneous_part(p.flip()));
        if vp.0.is_zero() && vp.1.is_zero() {
            continue;
        }
        let scaled = (&vp.0 * &d.r0, &vp.1 * &d.r0);
        let phi_v = (
            &(m.phi.at(0, 0) * &vp.0) + &(m.phi.at(0, 1) * &vp.1),
            &(m.phi.at(1, 0) * &vp.0) + &(m.phi.at(1, 1) * &vp.1),
        );
        let sign = p.sign();
        let twisted = (
            (&phi_v.0 * &d.r1).scale(&sign),
            (&phi_v.1 * &d.r1).scale(&sign),
        );
        out = (&out.0 + &(&scaled.0 + &twisted.0), &out.1 + &(&scaled.1 + &twisted.1));
    }
    Ok(out)
}

/// Rebuilds the structure operator from the action it generates and compares
/// with the stored one.
pub fn dictionary_roundtrip(m: &PhiModule) -> Result<bool> {
    let table = m.table();
    let one = SuperPolynomial::one(table);
    let zero = SuperPolynomial::zero(table);
    let theta = DElement::theta(table);
    let basis = [
        ((one.clone(), zero.clone()), Parity::Even),
        ((zero.clone(), one.clone()), Parity::Odd),
    ];
    let mut recovered: Vec<(SuperPolynomial, SuperPolynomial)> = Vec::new();
    match m.chirality {
        Chirality::RightD => {
            for ((v0, v1), p) in &basis {
                let acted = right_action(m, (v0, v1), &theta)?;
                let sign = p.sign();
                recovered.push((acted.0.scale(&sign), acted.1.scale(&sign)));
            }
        }
        Chirality::LeftD => {
            for ((v0, v1), _) in &basis {
                recovered.push((
                    &(m.phi.at(0, 0) * v0) + &(m.phi.at(0, 1) * v1),
                    &(m.phi.at(1, 0) * v0) + &(m.phi.at(1, 1) * v1),
                ));
            }
        }
    }
    Ok(recovered[0].0 == *m.phi.at(0, 0)
        && recovered[0].1 == *m.phi.at(1, 0)
        && recovered[1].0 == *m.phi.at(0, 1)
        && recovered[1].1 == *m.phi.at(1, 1))
}

/// Base change bringing a right structure to the standard form.
#[derive(Clone, Debug)]
pub struct CanonicalBasisCert {
    pub base_change: SuperMatrix,
    pub base_change_inv: SuperMatrix,
    pub conjugated: SuperMatrix,
}

/// For a right structure `[[alpha, a], [a^-1, -alpha]]` with `a` a unit,
/// returns `B = [[a^-1, -alpha], [0, 1]]` with `B phi B^-1 = [[0,1],[1,0]]`.
pub fn canonicalize(m: &PhiModule) -> Result<CanonicalBasisCert> {
    if m.chirality != Chirality::RightD {
        return Err(Error::InvalidArgument(
            "canonicalize expects a right module structure".into(),
        ));
    }
    let table = m.table();
    let a = m.phi.at(0, 1).clone();
    let a_inv = a.invert_unit().map_err(|_| {
        Error::NotAUnit(format!("(0,1) entry {a} of the structure operator"))
    })?;
    let alpha = m.phi.at(0, 0).clone();
    if *m.phi.at(1, 0) != a_inv || *m.phi.at(1, 1) != -&alpha {
        return Err(Error::StructureMismatch(
            "structure operator does not square to +1 in the required form".into(),
        ));
    }
    let zero = SuperPolynomial::zero(table);
    let one = SuperPolynomial::one(table);
    let base_change = SuperMatrix::from_rows(
        table,
        Shape::new(1, 1),
        Shape::new(1, 1),
        Parity::Even,
        vec![vec![a_inv, -&alpha], vec![zero, one]],
    )?;
    let base_change_inv = base_change.inverse()?;
    let conjugated = base_change.matmul(&m.phi)?.matmul(&base_change_inv)?;
    if conjugated != canonical_matrix(table, Chirality::RightD) {
        return Err(Error::StructureMismatch(format!(
            "conjugation produced {conjugated} instead of the standard form"
        )));
    }
    Ok(CanonicalBasisCert {
        base_change,
        base_change_inv,
        conjugated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_expression;
    use crate::sampling::Sampler;

    fn table() -> Arc<VarTable> {
        VarTable::new(&[("a", true)], &["alpha", "beta"]).unwrap()
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

    #[test]
    fn theta_action_matrices_are_the_canonical_ones() {
        let t = table();
        for chirality in [Chirality::LeftD, Chirality::RightD] {
            let built = phi_from_theta_action(&t, chirality).unwrap();
            assert_eq!(built, PhiModule::canonical(&t, chirality).phi);
        }
        // Left multiplication squares to -1, the twisted right action to +1.
        PhiModule::canonical(&t, Chirality::LeftD)
            .check_structure()
            .unwrap();
        PhiModule::canonical(&t, Chirality::RightD)
            .check_structure()
            .unwrap();
    }

    #[test]
    fn structure_check_distinguishes_the_chiralities() {
        let t = table();
        let left = canonical_matrix(&t, Chirality::LeftD);
        let wrong = PhiModule::new(left, Chirality::RightD).unwrap();
        assert!(matches!(
            wrong.check_structure(),
            Err(Error::StructureMismatch(_))
        ));
    }

    #[test]
    fn right_action_is_a_module_action() {
        use crate::dskew::{dmul, Side};
        let t = table();
        let m = PhiModule::canonical(&t, Chirality::RightD);
        let mut s = Sampler::new(21);
        for _ in 0..20 {
            let v = (s.poly(&t, 3, 2, None), s.poly(&t, 3, 2, None));
            let x = DElement::new(s.poly(&t, 2, 2, None), s.poly(&t, 2, 2, None)).unwrap();
            let y = DElement::new(s.poly(&t, 2, 2, None), s.poly(&t, 2, 2, None)).unwrap();
            let via_x = right_action(&m, (&v.0, &v.1), &x).unwrap();
            let step = right_action(&m, (&via_x.0, &via_x.1), &y).unwrap();
            let xy = dmul(&x, &y, Side::Plain).unwrap();
            let direct = right_action(&m, (&v.0, &v.1), &xy).unwrap();
            assert_eq!(step, direct);
        }
    }

    #[test]
    fn left_square_matrix_fails_as_a_right_action() {
        // With the left-multiplication matrix used as a right structure,
        // (v theta) theta no longer equals v theta^2 = -v.
        let t = table();
        let wrong = PhiModule {
            phi: canonical_matrix(&t, Chirality::LeftD),
            chirality: Chirality::RightD,
        };
        let theta = DElement::theta(&t);
        let e1 = (p(&t, "1"), p(&t, "0"));
        let once = right_action(&wrong, (&e1.0, &e1.1), &theta).unwrap();
        let twice = right_action(&wrong, (&once.0, &once.1), &theta).unwrap();
        assert_eq!(twice, (p(&t, "1"), p(&t, "0")));
    }

    #[test]
    fn dictionary_roundtrips() {
        let t = table();
        for chirality in [Chirality::LeftD, Chirality::RightD] {
            let m = PhiModule::canonical(&t, chirality);
            assert!(dictionary_roundtrip(&m).unwrap());
        }
        let generic = PhiModule::new(
            odd_matrix(&t, [["alpha", "a"], ["a^-1", "-alpha"]]),
            Chirality::RightD,
        )
        .unwrap();
        assert!(dictionary_roundtrip(&generic).unwrap());
    }

    #[test]
    fn canonicalize_generic_structure() {
        let t = table();
        let m = PhiModule::new(
            odd_matrix(&t, [["alpha", "a"], ["a^-1", "-alpha"]]),
            Chirality::RightD,
        )
        .unwrap();
        m.check_structure().unwrap();
        let cert = canonicalize(&m).unwrap();
        let expected_b = SuperMatrix::from_rows(
            &t,
            Shape::new(1, 1),
            Shape::new(1, 1),
            Parity::Even,
            vec![
                vec![p(&t, "a^-1"), p(&t, "-alpha")],
                vec![p(&t, "0"), p(&t, "1")],
            ],
        )
        .unwrap();
        let expected_b_inv = SuperMatrix::from_rows(
            &t,
            Shape::new(1, 1),
            Shape::new(1, 1),
            Parity::Even,
            vec![
                vec![p(&t, "a"), p(&t, "a*alpha")],
                vec![p(&t, "0"), p(&t, "1")],
            ],
        )
        .unwrap();
        assert_eq!(cert.base_change, expected_b);
        assert_eq!(cert.base_change_inv, expected_b_inv);
        assert_eq!(
            cert.conjugated,
            canonical_matrix(&t, Chirality::RightD)
        );
    }

    #[test]
    fn canonicalize_rejects_non_unit_corner() {
        let t = VarTable::new(&[("y", false)], &["alpha"]).unwrap();
        let m = PhiModule::new(
            odd_matrix(&t, [["0", "y"], ["0", "0"]]),
            Chirality::RightD,
        )
        .unwrap();
        assert!(matches!(canonicalize(&m), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn canonicalize_rejects_wrong_square() {
        let t = table();
        let m = PhiModule::new(
            odd_matrix(&t, [["0", "1"], ["2", "0"]]),
            Chirality::RightD,
        )
        .unwrap();
        assert!(matches!(
            canonicalize(&m),
            Err(Error::StructureMismatch(_))
        ));
    }

    #[test]
    fn randomized_instances_canonicalize() {
        let t = VarTable::new(&[], &["zeta0", "zeta1"]).unwrap();
        let mut s = Sampler::new(22);
        for _ in 0..50 {
            // a = c0 (1 + c1 zeta0 zeta1), alpha = c2 zeta0 + c3 zeta1.
            let c0 = s.nonzero_scalar();
            let c1 = s.scalar();
            let c2 = s.scalar();
            let c3 = s.scalar();
            let zz = p(&t, "zeta0*zeta1");
            let a = (&p(&t, "1") + &zz.scale(&c1)).scale(&c0);
            let alpha = &p(&t, "zeta0").scale(&c2) + &p(&t, "zeta1").scale(&c3);
            let a_inv = a.invert_unit().unwrap();
            let phi = SuperMatrix::from_rows(
                &t,
                Shape::new(1, 1),
                Shape::new(1, 1),
                Parity::Odd,
                vec![vec![alpha.clone(), a.clone()], vec![a_inv, -&alpha]],
            )
            .unwrap();
            let m = PhiModule::new(phi, Chirality::RightD).unwrap();
            m.check_structure().unwrap();
            let cert = canonicalize(&m).unwrap();
            assert!(cert
                .base_change
                .matmul(&cert.base_change_inv)
                .unwrap()
                .is_identity());
            assert_eq!(
                cert.conjugated,
                canonical_matrix(&t, Chirality::RightD)
            );
        }
    }
}
