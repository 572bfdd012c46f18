//! The multiplicative supergroup of rank `(1|1)`.
//!
//! Points are pairs `(t, tau)` with `t` an even unit and `tau` odd, with
//! product `(t t' + tau tau', t tau' + t' tau)`. The group embeds in
//! `(1|1) x (1|1)` matrices as `[[t, tau], [tau, t]]`, with Berezinian 1,
//! and is isomorphic to the units of the skew field via `t + theta tau`.
//! `coordinate_action` produces the substitution by which a point rescales
//! chosen even/odd coordinate pairs.

use std::fmt;
use std::sync::Arc;

use crate::dskew::DElement;
use crate::error::{Error, Result};
use crate::supermatrix::{Shape, SuperMatrix};
use crate::superpoly::{ensure_same_table, Parity, Substitution, SuperPolynomial, VarTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub t: SuperPolynomial,
    pub tau: SuperPolynomial,
}

impl GroupElement {
    pub fn new(t: SuperPolynomial, tau: SuperPolynomial) -> Result<Self> {
        ensure_same_table(&t, &tau)?;
        if !t.parity_class().admits(Parity::Even) {
            return Err(Error::ParityMismatch(format!("{t} is not even")));
        }
        if !tau.parity_class().admits(Parity::Odd) {
            return Err(Error::ParityMismatch(format!("{tau} is not odd")));
        }
        Ok(GroupElement { t, tau })
    }

    pub fn identity(table: &Arc<VarTable>) -> Self {
        GroupElement {
            t: SuperPolynomial::one(table),
            tau: SuperPolynomial::zero(table),
        }
    }

    pub fn table(&self) -> &Arc<VarTable> {
        self.t.table()
    }

    /// The even component must be a unit for the pair to be a group point.
    pub fn validate(&self) -> Result<()> {
        self.t.invert_unit().map(|_| ())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.t, self.tau)
    }
}

pub fn gmul(g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
    ensure_same_table(&g.t, &h.t)?;
    GroupElement::new(
        &(&g.t * &h.t) + &(&g.tau * &h.tau),
        &(&g.t * &h.tau) + &(&h.t * &g.tau),
    )
}

pub fn ginv(g: &GroupElement) -> Result<GroupElement> {
    let ti = g.t.invert_unit()?;
    let ti2 = &ti * &ti;
    GroupElement::new(ti, -&(&ti2 * &g.tau))
}

/// The matrix `[[t, tau], [tau, t]]`.
pub fn embed_sl11(g: &GroupElement) -> Result<SuperMatrix> {
    SuperMatrix::from_rows(
        g.table(),
        Shape::new(1, 1),
        Shape::new(1, 1),
        Parity::Even,
        vec![
            vec![g.t.clone(), g.tau.clone()],
            vec![g.tau.clone(), g.t.clone()],
        ],
    )
}

pub fn to_dstar(g: &GroupElement) -> DElement {
    DElement {
        r0: g.t.clone(),
        r1: g.tau.clone(),
    }
}

/// Reads a group point off a skew-field element; fails when the components
/// do not have group parities.
pub fn from_dstar(x: &DElement) -> Result<GroupElement> {
    GroupElement::new(x.r0.clone(), x.r1.clone())
}

/// Substitution rescaling each listed `(even, odd)` coordinate pair by the
/// inverse of the point: `z -> t^-1 z - t^-2 tau zeta` and `zeta -> t^-1
/// zeta - t^-2 tau z`.
pub fn coordinate_action(g: &GroupElement, pairs: &[(usize, usize)]) -> Result<Substitution> {
    let table = g.table();
    let ti = g.t.invert_unit()?;
    let ti2_tau = &(&ti * &ti) * &g.tau;
    let mut sub = Substitution::identity(table);
    for &(ze, zo) in pairs {
        let z = SuperPolynomial::even_var(table, ze)?;
        let zeta = SuperPolynomial::odd_var(table, zo)?;
        sub.set_even(ze, &(&ti * &z) - &(&ti2_tau * &zeta))?;
        sub.set_odd(zo, &(&ti * &zeta) - &(&ti2_tau * &z))?;
    }
    Ok(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dskew::{dinvert, dmul, Side};
    use crate::parse::parse_expression;

    fn table() -> Arc<VarTable> {
        VarTable::new(
            &[("t1", true), ("t2", true), ("t3", true)],
            &["s1", "s2", "s3"],
        )
        .unwrap()
    }

    fn p(t: &Arc<VarTable>, s: &str) -> SuperPolynomial {
        parse_expression(s, t).unwrap()
    }

    fn generic(t: &Arc<VarTable>, k: usize) -> GroupElement {
        GroupElement::new(
            p(t, &format!("t{k}")),
            p(t, &format!("s{k}")),
        )
        .unwrap()
    }

    #[test]
    fn group_laws_hold_symbolically() {
        let tab = table();
        let (g1, g2, g3) = (generic(&tab, 1), generic(&tab, 2), generic(&tab, 3));
        let e = GroupElement::identity(&tab);

        let assoc_l = gmul(&gmul(&g1, &g2).unwrap(), &g3).unwrap();
        let assoc_r = gmul(&g1, &gmul(&g2, &g3).unwrap()).unwrap();
        assert_eq!(assoc_l, assoc_r);

        assert_eq!(gmul(&g1, &e).unwrap(), g1);
        assert_eq!(gmul(&e, &g1).unwrap(), g1);

        let inv = ginv(&g1).unwrap();
        assert_eq!(gmul(&g1, &inv).unwrap(), e);
        assert_eq!(gmul(&inv, &g1).unwrap(), e);
    }

    #[test]
    fn inverse_closed_form() {
        let tab = table();
        let g = generic(&tab, 1);
        let inv = ginv(&g).unwrap();
        assert_eq!(inv.t, p(&tab, "t1^-1"));
        assert_eq!(inv.tau, p(&tab, "-t1^-2*s1"));
    }

    #[test]
    fn matrix_embedding_is_multiplicative_with_unit_berezinian() {
        let tab = table();
        let (g1, g2) = (generic(&tab, 1), generic(&tab, 2));
        let lhs = embed_sl11(&g1)
            .unwrap()
            .matmul(&embed_sl11(&g2).unwrap())
            .unwrap();
        let rhs = embed_sl11(&gmul(&g1, &g2).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(embed_sl11(&g1).unwrap().berezinian().unwrap().is_one());
        let prod = gmul(&g1, &g2).unwrap();
        assert!(embed_sl11(&prod).unwrap().berezinian().unwrap().is_one());
    }

    #[test]
    fn group_is_the_units_of_the_skew_field() {
        let tab = table();
        let (g1, g2) = (generic(&tab, 1), generic(&tab, 2));
        let prod = gmul(&g1, &g2).unwrap();
        let in_d = dmul(&to_dstar(&g1), &to_dstar(&g2), Side::Plain).unwrap();
        assert_eq!(to_dstar(&prod), in_d);
        assert_eq!(from_dstar(&in_d).unwrap(), prod);

        let inv_in_d = dinvert(&to_dstar(&g1)).unwrap();
        assert_eq!(to_dstar(&ginv(&g1).unwrap()), inv_in_d);
    }

    #[test]
    fn coordinate_actions_compose_through_the_group_law() {
        // Substituting through h and then through g is the substitution of
        // the product g h, on both an even and an odd coordinate.
        let tab = VarTable::new(
            &[("z0", false), ("a1", true), ("a2", true)],
            &["zeta0", "b1", "b2"],
        )
        .unwrap();
        let g = GroupElement::new(p(&tab, "a1"), p(&tab, "b1")).unwrap();
        let h = GroupElement::new(p(&tab, "a2"), p(&tab, "b2")).unwrap();
        let pairs = [(0usize, 0usize)];
        let s_g = coordinate_action(&g, &pairs).unwrap();
        let s_h = coordinate_action(&h, &pairs).unwrap();
        let s_gh = coordinate_action(&gmul(&g, &h).unwrap(), &pairs).unwrap();
        for name in ["z0", "zeta0"] {
            let v = p(&tab, name);
            let nested = s_g.apply(&s_h.apply(&v).unwrap()).unwrap();
            let direct = s_gh.apply(&v).unwrap();
            assert_eq!(nested, direct);
        }
    }

    #[test]
    fn identity_action_fixes_coordinates() {
        let tab = VarTable::new(&[("z0", false)], &["zeta0"]).unwrap();
        let e = GroupElement::identity(&tab);
        let s = coordinate_action(&e, &[(0, 0)]).unwrap();
        for name in ["z0", "zeta0"] {
            let v = p(&tab, name);
            assert_eq!(s.apply(&v).unwrap(), v);
        }
    }
}
