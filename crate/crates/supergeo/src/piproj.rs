//! Affine cells of parity-twisted projective superspace.
//!
//! The homogeneous coordinates are `n + 1` even variables `z0..zn` and
//! `n + 1` odd variables `zeta0..zetan`. The multiplicative supergroup of
//! invertible skew-field scalars acts by
//!
//! ```text
//! z    ->  t^-1 z  -  t^-2 tau zeta
//! zeta ->  t^-1 zeta  -  t^-2 tau z
//! ```
//!
//! simultaneously on every pair. On the chart where `z_i` is inverted the
//! invariant functions form a free polynomial algebra on the even and odd
//! generators
//!
//! ```text
//! w_i^j   =  z_j / z_i  -  zeta_i zeta_j / z_i^2
//! eta_i^j =  zeta_j / z_i  -  z_j zeta_i / z_i^2      (j != i)
//! ```
//!
//! [`CellContext`] carries one chart: it tests invariance, rewrites an
//! invariant uniquely in abstract cell variables `y_j`, `tau_j`
//! ([`CellContext::decompose`]), and substitutes the generators back
//! ([`CellContext::expand`]). [`BundleContext`] realises the chart times the
//! group as a trivial piece of the homogeneous coordinate space and checks
//! that the two directions are mutually inverse and equivariant.
//!
//! The tautological rank `1|1` sheaf is spanned by the sections
//! `s_j = z_j + theta zeta_j` and `sigma_j = zeta_j + theta z_j` of the
//! skew-field extension; left quotients of sections recover the transition
//! pair `(w, eta)`, whose matrices have Berezinian one and satisfy the
//! cocycle identities on double overlaps. [`invariant_functions`] searches a
//! degree-bounded slice of the coordinate ring for global invariants by
//! exact linear algebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::dskew::{dinvert, dmul, dscale, DElement, Side};
use crate::error::{Error, Result};
use crate::g11m::{coordinate_action, embed_sl11, ginv, gmul, GroupElement};
use crate::scalar::Scalar;
use crate::supermatrix::{self, SuperMatrix};
use crate::superpoly::{
    ensure_same_table, odd_indices, Substitution, SuperMonomial, SuperPolynomial, VarTable,
};

/// Builds the coordinate table `z0..zn`, `zeta0..zetan`, inverting the
/// listed even variables. With `with_group` the reserved pair `t`
/// (even invertible) and `tau` (odd) is appended for a generic group
/// element.
pub fn coordinate_table(
    n: usize,
    inverted: &[usize],
    with_group: bool,
) -> Result<Arc<VarTable>> {
    for &j in inverted {
        if j > n {
            return Err(Error::InvalidArgument(format!(
                "cannot invert z{j}: only {} coordinates",
                n + 1
            )));
        }
    }
    let mut even_names: Vec<String> = (0..=n).map(|j| format!("z{j}")).collect();
    let mut odd_names: Vec<String> = (0..=n).map(|j| format!("zeta{j}")).collect();
    if with_group {
        even_names.push("t".into());
        odd_names.push("tau".into());
    }
    let evens: Vec<(&str, bool)> = even_names
        .iter()
        .enumerate()
        .map(|(k, s)| (s.as_str(), k > n || inverted.contains(&k)))
        .collect();
    let odds: Vec<&str> = odd_names.iter().map(|s| s.as_str()).collect();
    VarTable::new(&evens, &odds)
}

/// The even invariant `z_j / z_i - zeta_i zeta_j / z_i^2` over any table
/// whose first coordinates follow the [`coordinate_table`] layout.
pub fn w_of(table: &Arc<VarTable>, i: usize, j: usize) -> Result<SuperPolynomial> {
    let zi_inv = SuperPolynomial::even_var(table, i)?.pow(-1)?;
    let first = &SuperPolynomial::even_var(table, j)? * &zi_inv;
    let odd_pair =
        &SuperPolynomial::odd_var(table, i)? * &SuperPolynomial::odd_var(table, j)?;
    let second = &odd_pair * &zi_inv.pow(2)?;
    Ok(&first - &second)
}

/// The odd invariant `zeta_j / z_i - z_j zeta_i / z_i^2`.
pub fn eta_of(table: &Arc<VarTable>, i: usize, j: usize) -> Result<SuperPolynomial> {
    let zi_inv = SuperPolynomial::even_var(table, i)?.pow(-1)?;
    let first = &SuperPolynomial::odd_var(table, j)? * &zi_inv;
    let even_odd =
        &SuperPolynomial::even_var(table, j)? * &SuperPolynomial::odd_var(table, i)?;
    let second = &even_odd * &zi_inv.pow(2)?;
    Ok(&first - &second)
}

/// One affine chart: the coordinate ring localized at `z_i`, the generic
/// group element `(t, tau)`, and the abstract cell variables `y_j`,
/// `tau_j` for `j != i`.
#[derive(Clone, Debug)]
pub struct CellContext {
    n: usize,
    i: usize,
    table: Arc<VarTable>,
    cell_table: Arc<VarTable>,
}

impl CellContext {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        if i > n {
            return Err(Error::InvalidArgument(format!(
                "cell index {i} exceeds dimension {n}"
            )));
        }
        let table = coordinate_table(n, &[i], true)?;
        let y_names: Vec<String> = (0..=n)
            .filter(|j| *j != i)
            .map(|j| format!("y{j}"))
            .collect();
        let tau_names: Vec<String> = (0..=n)
            .filter(|j| *j != i)
            .map(|j| format!("tau{j}"))
            .collect();
        let evens: Vec<(&str, bool)> = y_names.iter().map(|s| (s.as_str(), false)).collect();
        let odds: Vec<&str> = tau_names.iter().map(|s| s.as_str()).collect();
        let cell_table = VarTable::new(&evens, &odds)?;
        Ok(CellContext {
            n,
            i,
            table,
            cell_table,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn i(&self) -> usize {
        self.i
    }

    /// The localized coordinate ring, including the reserved pair `t`, `tau`.
    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    /// The free polynomial ring on the abstract generators `y_j`, `tau_j`.
    pub fn cell_table(&self) -> &Arc<VarTable> {
        &self.cell_table
    }

    pub fn z(&self, j: usize) -> Result<SuperPolynomial> {
        self.check_coordinate(j)?;
        SuperPolynomial::even_var(&self.table, j)
    }

    pub fn zeta(&self, j: usize) -> Result<SuperPolynomial> {
        self.check_coordinate(j)?;
        SuperPolynomial::odd_var(&self.table, j)
    }

    pub fn w(&self, j: usize) -> Result<SuperPolynomial> {
        self.check_off_cell(j)?;
        w_of(&self.table, self.i, j)
    }

    pub fn eta(&self, j: usize) -> Result<SuperPolynomial> {
        self.check_off_cell(j)?;
        eta_of(&self.table, self.i, j)
    }

    /// The invariant generators `(w_i^j, eta_i^j)` for `j != i`, ascending.
    pub fn generators(&self) -> Result<(Vec<SuperPolynomial>, Vec<SuperPolynomial>)> {
        let mut ws = Vec::new();
        let mut etas = Vec::new();
        for j in 0..=self.n {
            if j != self.i {
                ws.push(self.w(j)?);
                etas.push(self.eta(j)?);
            }
        }
        Ok((ws, etas))
    }

    /// Position of the coordinate `j != i` among the cell variables.
    pub fn cell_index(&self, j: usize) -> Result<usize> {
        self.check_off_cell(j)?;
        Ok(if j < self.i { j } else { j - 1 })
    }

    /// The generic group element `(t, tau)` built from the reserved pair.
    pub fn generic_group(&self) -> Result<GroupElement> {
        GroupElement::new(
            SuperPolynomial::even_var(&self.table, self.n + 1)?,
            SuperPolynomial::odd_var(&self.table, self.n + 1)?,
        )
    }

    /// The substitution acting on every coordinate pair at once.
    pub fn action(&self) -> Result<Substitution> {
        let pairs: Vec<(usize, usize)> = (0..=self.n).map(|j| (j, j)).collect();
        coordinate_action(&self.generic_group()?, &pairs)
    }

    /// Whether the generic group element fixes `p`. Errors with
    /// [`Error::ContextMismatch`] if `p` lives over another table or uses
    /// the reserved pair `t`, `tau`.
    pub fn is_invariant(&self, p: &SuperPolynomial) -> Result<bool> {
        ensure_same_table(p, &SuperPolynomial::zero(&self.table))?;
        let reserved = self.n + 1;
        for (mono, _) in p.terms() {
            if mono.even_exponent(reserved) != 0 || mono.has_odd(reserved) {
                return Err(Error::ContextMismatch(
                    "the reserved group variables t, tau may not appear in cell polynomials"
                        .into(),
                ));
            }
        }
        Ok(self.action()?.apply(p)? == *p)
    }

    /// Rewrites an invariant as a polynomial in the abstract generators.
    ///
    /// The terms free of `zeta_i` determine the candidate: the monomial
    /// `c z^E zeta_S z_i^-d` maps to `c y^E tau_S`, which is injective on
    /// such head terms. Expanding the candidate must reproduce the input
    /// exactly; a nonzero remainder would contradict the vanishing of
    /// invariants divisible by `zeta_i` and reports
    /// [`Error::LemmaViolation`].
    pub fn decompose(&self, p: &SuperPolynomial) -> Result<SuperPolynomial> {
        if !self.is_invariant(p)? {
            return Err(Error::NotInvariant(
                "input moves under the coordinate action".into(),
            ));
        }
        let mut candidate = SuperPolynomial::zero(&self.cell_table);
        for (mono, c) in p.terms() {
            if mono.has_odd(self.i) {
                continue;
            }
            let mut evens = vec![0i64; self.cell_table.even_count()];
            let mut degree = 0i64;
            for j in 0..=self.n {
                if j == self.i {
                    continue;
                }
                let e = mono.even_exponent(j);
                evens[self.cell_index(j)?] = e;
                degree += e;
            }
            let mut odds = 0u64;
            for j in odd_indices(mono.odd_mask()) {
                odds |= 1 << self.cell_index(j)?;
                degree += 1;
            }
            if mono.even_exponent(self.i) != -degree {
                return Err(Error::LemmaViolation(format!(
                    "head term {} z_i^{} does not have z_i-degree {}",
                    c,
                    mono.even_exponent(self.i),
                    -degree
                )));
            }
            candidate = &candidate
                + &SuperPolynomial::monomial(
                    &self.cell_table,
                    SuperMonomial::new(evens, odds),
                    c.clone(),
                )?;
        }
        let back = self.expand(&candidate)?;
        if &back != p {
            return Err(Error::LemmaViolation(
                "expanding the head-term candidate does not reproduce the input".into(),
            ));
        }
        Ok(candidate)
    }

    /// Substitutes `y_j -> w_i^j`, `tau_j -> eta_i^j` into a cell
    /// polynomial.
    pub fn expand(&self, c: &SuperPolynomial) -> Result<SuperPolynomial> {
        let mut sub = Substitution::new(&self.cell_table, &self.table);
        for j in 0..=self.n {
            if j == self.i {
                continue;
            }
            let k = self.cell_index(j)?;
            sub.set_even(k, self.w(j)?)?;
            sub.set_odd(k, self.eta(j)?)?;
        }
        sub.apply(c)
    }

    fn check_coordinate(&self, j: usize) -> Result<()> {
        if j > self.n {
            return Err(Error::InvalidArgument(format!(
                "coordinate index {j} exceeds dimension {}",
                self.n
            )));
        }
        Ok(())
    }

    fn check_off_cell(&self, j: usize) -> Result<()> {
        self.check_coordinate(j)?;
        if j == self.i {
            return Err(Error::InvalidArgument(format!(
                "generator index must differ from the cell index {}",
                self.i
            )));
        }
        Ok(())
    }
}

/// The chart times the group against the homogeneous coordinate patch:
/// `phi_star` pulls functions back along `(cell, group) -> coordinates`,
/// `psi_star` along the inverse. Both tables carry an extra generic pair
/// `u` (even invertible), `ups` (odd) used by the equivariance check.
#[derive(Clone, Debug)]
pub struct BundleContext {
    n: usize,
    i: usize,
    coord_table: Arc<VarTable>,
    total_table: Arc<VarTable>,
}

impl BundleContext {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        if i > n {
            return Err(Error::InvalidArgument(format!(
                "cell index {i} exceeds dimension {n}"
            )));
        }
        let mut even_names: Vec<String> = (0..=n).map(|j| format!("z{j}")).collect();
        even_names.push("u".into());
        let mut odd_names: Vec<String> = (0..=n).map(|j| format!("zeta{j}")).collect();
        odd_names.push("ups".into());
        let evens: Vec<(&str, bool)> = even_names
            .iter()
            .enumerate()
            .map(|(k, s)| (s.as_str(), k == i || k == n + 1))
            .collect();
        let odds: Vec<&str> = odd_names.iter().map(|s| s.as_str()).collect();
        let coord_table = VarTable::new(&evens, &odds)?;

        let mut total_evens: Vec<String> = vec!["t".into()];
        let mut total_odds: Vec<String> = vec!["tau".into()];
        for j in 0..=n {
            if j != i {
                total_evens.push(format!("w{j}"));
                total_odds.push(format!("eta{j}"));
            }
        }
        total_evens.push("u".into());
        total_odds.push("ups".into());
        let tevens: Vec<(&str, bool)> = total_evens
            .iter()
            .enumerate()
            .map(|(k, s)| (s.as_str(), k == 0 || k == n + 1))
            .collect();
        let todds: Vec<&str> = total_odds.iter().map(|s| s.as_str()).collect();
        let total_table = VarTable::new(&tevens, &todds)?;
        Ok(BundleContext {
            n,
            i,
            coord_table,
            total_table,
        })
    }

    pub fn coord_table(&self) -> &Arc<VarTable> {
        &self.coord_table
    }

    pub fn total_table(&self) -> &Arc<VarTable> {
        &self.total_table
    }

    fn slot(&self, j: usize) -> usize {
        1 + if j < self.i { j } else { j - 1 }
    }

    /// `t -> z_i`, `tau -> zeta_i`, `w_j -> w_i^j`, `eta_j -> eta_i^j`.
    pub fn phi_star(&self) -> Result<Substitution> {
        let mut sub = Substitution::new(&self.total_table, &self.coord_table);
        sub.set_even(0, SuperPolynomial::even_var(&self.coord_table, self.i)?)?;
        sub.set_odd(0, SuperPolynomial::odd_var(&self.coord_table, self.i)?)?;
        for j in 0..=self.n {
            if j == self.i {
                continue;
            }
            sub.set_even(self.slot(j), w_of(&self.coord_table, self.i, j)?)?;
            sub.set_odd(self.slot(j), eta_of(&self.coord_table, self.i, j)?)?;
        }
        Ok(sub)
    }

    /// `z_i -> t`, `zeta_i -> tau`, `z_j -> t w_j + tau eta_j`,
    /// `zeta_j -> t eta_j + tau w_j`.
    pub fn psi_star(&self) -> Result<Substitution> {
        let t = SuperPolynomial::even_var(&self.total_table, 0)?;
        let tau = SuperPolynomial::odd_var(&self.total_table, 0)?;
        let mut sub = Substitution::new(&self.coord_table, &self.total_table);
        sub.set_even(self.i, t.clone())?;
        sub.set_odd(self.i, tau.clone())?;
        for j in 0..=self.n {
            if j == self.i {
                continue;
            }
            let w = SuperPolynomial::even_var(&self.total_table, self.slot(j))?;
            let eta = SuperPolynomial::odd_var(&self.total_table, self.slot(j))?;
            sub.set_even(j, &(&t * &w) + &(&tau * &eta))?;
            sub.set_odd(j, &(&t * &eta) + &(&tau * &w))?;
        }
        Ok(sub)
    }

    /// Both composites fix every generator of their table.
    pub fn check_composites(&self) -> Result<()> {
        let phi = self.phi_star()?;
        let psi = self.psi_star()?;
        for idx in 0..self.total_table.even_count() {
            let v = SuperPolynomial::even_var(&self.total_table, idx)?;
            if psi.apply(&phi.apply(&v)?)? != v {
                return Err(Error::StructureMismatch(format!(
                    "composite fails on {}",
                    self.total_table.even_name(idx)
                )));
            }
        }
        for idx in 0..self.total_table.odd_count() {
            let v = SuperPolynomial::odd_var(&self.total_table, idx)?;
            if psi.apply(&phi.apply(&v)?)? != v {
                return Err(Error::StructureMismatch(format!(
                    "composite fails on {}",
                    self.total_table.odd_name(idx)
                )));
            }
        }
        for idx in 0..self.coord_table.even_count() {
            let v = SuperPolynomial::even_var(&self.coord_table, idx)?;
            if phi.apply(&psi.apply(&v)?)? != v {
                return Err(Error::StructureMismatch(format!(
                    "composite fails on {}",
                    self.coord_table.even_name(idx)
                )));
            }
        }
        for idx in 0..self.coord_table.odd_count() {
            let v = SuperPolynomial::odd_var(&self.coord_table, idx)?;
            if phi.apply(&psi.apply(&v)?)? != v {
                return Err(Error::StructureMismatch(format!(
                    "composite fails on {}",
                    self.coord_table.odd_name(idx)
                )));
            }
        }
        Ok(())
    }

    /// Acting by the generic pair `(u, ups)` on all coordinates commutes
    /// with `phi_star` when the total space is acted on through `(t, tau)`
    /// alone; in particular every `w_j`, `eta_j` pulls back to an invariant.
    pub fn check_equivariance(&self) -> Result<()> {
        let g_coord = GroupElement::new(
            SuperPolynomial::even_var(&self.coord_table, self.n + 1)?,
            SuperPolynomial::odd_var(&self.coord_table, self.n + 1)?,
        )?;
        let pairs: Vec<(usize, usize)> = (0..=self.n).map(|j| (j, j)).collect();
        let coord_act = coordinate_action(&g_coord, &pairs)?;
        let g_total = GroupElement::new(
            SuperPolynomial::even_var(&self.total_table, self.n + 1)?,
            SuperPolynomial::odd_var(&self.total_table, self.n + 1)?,
        )?;
        let total_act = coordinate_action(&g_total, &[(0, 0)])?;
        let phi = self.phi_star()?;
        let mut gens: Vec<SuperPolynomial> = Vec::new();
        for idx in 0..self.total_table.even_count() {
            gens.push(SuperPolynomial::even_var(&self.total_table, idx)?);
        }
        for idx in 0..self.total_table.odd_count() {
            gens.push(SuperPolynomial::odd_var(&self.total_table, idx)?);
        }
        for v in gens {
            let lhs = coord_act.apply(&phi.apply(&v)?)?;
            let rhs = phi.apply(&total_act.apply(&v)?)?;
            if lhs != rhs {
                return Err(Error::StructureMismatch(format!(
                    "equivariance fails on {v}"
                )));
            }
        }
        Ok(())
    }
}

/// The tautological sections `s_j = z_j + theta zeta_j` and
/// `sigma_j = zeta_j + theta z_j` over a [`coordinate_table`]-shaped ring.
pub fn sections(table: &Arc<VarTable>, j: usize) -> Result<(DElement, DElement)> {
    let z = SuperPolynomial::even_var(table, j)?;
    let zeta = SuperPolynomial::odd_var(table, j)?;
    Ok((
        DElement::new(z.clone(), zeta.clone())?,
        DElement::new(zeta, z)?,
    ))
}

/// On the chart of `ctx`, every pair of sections is the `i`-th pair scaled
/// by the transition coefficients:
/// `s_j = s_i w_i^j + sigma_i eta_i^j` and
/// `sigma_j = s_i eta_i^j + sigma_i w_i^j`.
pub fn section_relations(ctx: &CellContext) -> Result<()> {
    let (si, sigma_i) = sections(ctx.table(), ctx.i())?;
    for j in 0..=ctx.n() {
        if j == ctx.i() {
            continue;
        }
        let (sj, sigma_j) = sections(ctx.table(), j)?;
        let w = ctx.w(j)?;
        let eta = ctx.eta(j)?;
        let rhs_s = dscale(&si, &w)?.add(&dscale(&sigma_i, &eta)?)?;
        let rhs_sigma = dscale(&si, &eta)?.add(&dscale(&sigma_i, &w)?)?;
        if rhs_s != sj || rhs_sigma != sigma_j {
            return Err(Error::StructureMismatch(format!(
                "section relation fails between charts {} and {j}",
                ctx.i()
            )));
        }
    }
    Ok(())
}

/// Left quotient of sections: the components of `x^-1 y` in the skew
/// field. Errors with [`Error::NotAUnit`] when the denominator is not
/// invertible.
pub fn d_quotient(x: &DElement, y: &DElement) -> Result<(SuperPolynomial, SuperPolynomial)> {
    let inv = dinvert(x).map_err(|_| {
        Error::NotAUnit("the denominator section is not invertible on this chart".into())
    })?;
    let q = dmul(&inv, y, Side::Plain)?;
    Ok((q.r0, q.r1))
}

/// The transition matrix between charts `i` and `j` over the double
/// overlap, together with its Berezinian.
pub fn transition(n: usize, i: usize, j: usize) -> Result<(SuperMatrix, SuperPolynomial)> {
    if i == j {
        return Err(Error::InvalidArgument(
            "transition needs two distinct charts".into(),
        ));
    }
    let table = coordinate_table(n, &[i, j], false)?;
    let g = GroupElement::new(w_of(&table, i, j)?, eta_of(&table, i, j)?)?;
    g.validate()?;
    let m = embed_sl11(&g)?;
    let ber = m.berezinian()?;
    Ok((m, ber))
}

fn pair_table(n: usize, i: usize, j: usize) -> Result<Arc<VarTable>> {
    if i == j || i > n || j > n {
        return Err(Error::InvalidArgument("need two distinct charts".into()));
    }
    coordinate_table(n, &[i, j], false)
}

/// First inversion identity on a double overlap: `w_j^i = (w_i^j)^-1`.
pub fn even_inverse_identity(n: usize, i: usize, j: usize) -> Result<()> {
    let table = pair_table(n, i, j)?;
    if w_of(&table, j, i)? != w_of(&table, i, j)?.invert_unit()? {
        return Err(Error::StructureMismatch(format!(
            "inversion fails on the even transition between {i} and {j}"
        )));
    }
    Ok(())
}

/// Second inversion identity: `eta_j^i = -eta_i^j (w_i^j)^-2`.
pub fn odd_inverse_identity(n: usize, i: usize, j: usize) -> Result<()> {
    let table = pair_table(n, i, j)?;
    let expected = -&(&eta_of(&table, i, j)? * &w_of(&table, i, j)?.pow(-2)?);
    if eta_of(&table, j, i)? != expected {
        return Err(Error::StructureMismatch(format!(
            "inversion fails on the odd transition between {i} and {j}"
        )));
    }
    Ok(())
}

/// First composition identity, for any third chart `k`:
/// `w_j^k = w_i^k w_j^i - eta_i^k eta_j^i`, with only `z_i`, `z_j`
/// inverted.
pub fn even_composition_identity(n: usize, i: usize, j: usize, k: usize) -> Result<()> {
    if j == k || i == k || k > n {
        return Err(Error::InvalidArgument("need three distinct charts".into()));
    }
    let table = pair_table(n, i, j)?;
    let rhs = &(&w_of(&table, i, k)? * &w_of(&table, j, i)?)
        - &(&eta_of(&table, i, k)? * &eta_of(&table, j, i)?);
    if w_of(&table, j, k)? != rhs {
        return Err(Error::StructureMismatch(format!(
            "even cocycle fails for charts ({i}, {j}, {k})"
        )));
    }
    Ok(())
}

/// Second composition identity:
/// `eta_j^k = w_j^i eta_i^k + eta_j^i w_i^k`.
pub fn odd_composition_identity(n: usize, i: usize, j: usize, k: usize) -> Result<()> {
    if j == k || i == k || k > n {
        return Err(Error::InvalidArgument("need three distinct charts".into()));
    }
    let table = pair_table(n, i, j)?;
    let rhs = &(&w_of(&table, j, i)? * &eta_of(&table, i, k)?)
        + &(&eta_of(&table, j, i)? * &w_of(&table, i, k)?);
    if eta_of(&table, j, k)? != rhs {
        return Err(Error::StructureMismatch(format!(
            "odd cocycle fails for charts ({i}, {j}, {k})"
        )));
    }
    Ok(())
}

/// Both inversion identities, plus the check that the transition pairs are
/// mutually inverse group elements.
pub fn cocycle_pair(n: usize, i: usize, j: usize) -> Result<()> {
    even_inverse_identity(n, i, j)?;
    odd_inverse_identity(n, i, j)?;
    let table = pair_table(n, i, j)?;
    let gij = GroupElement::new(w_of(&table, i, j)?, eta_of(&table, i, j)?)?;
    let gji = GroupElement::new(w_of(&table, j, i)?, eta_of(&table, j, i)?)?;
    if ginv(&gij)? != gji || gmul(&gji, &gij)? != GroupElement::identity(&table) {
        return Err(Error::StructureMismatch(format!(
            "transition pairs between {i} and {j} are not mutually inverse"
        )));
    }
    Ok(())
}

/// Both composition identities on a double overlap.
pub fn cocycle_triple(n: usize, i: usize, j: usize, k: usize) -> Result<()> {
    even_composition_identity(n, i, j, k)?;
    odd_composition_identity(n, i, j, k)
}

/// All pair and triple cocycle identities for `n + 1` charts.
pub fn cocycle_identities(n: usize) -> Result<()> {
    for i in 0..=n {
        for j in 0..=n {
            if i == j {
                continue;
            }
            cocycle_pair(n, i, j)?;
            for k in 0..=n {
                if k != i && k != j {
                    cocycle_triple(n, i, j, k)?;
                }
            }
        }
    }
    Ok(())
}

/// Exhaustive degree-bounded search for global invariants.
///
/// Enumerates the monomials `z^E zeta_S` with every exponent bounded by
/// `degree_bound` in absolute value (nonnegative unless `laurent`), and
/// solves exactly for the linear combinations fixed by the generic group
/// element. Candidates of different total weight cannot mix, so the system
/// splits into small blocks.
pub fn invariant_functions(
    n: usize,
    degree_bound: i64,
    laurent: bool,
) -> Result<Vec<SuperPolynomial>> {
    if degree_bound < 0 {
        return Err(Error::InvalidArgument(
            "degree bound must be nonnegative".into(),
        ));
    }
    let inverted: Vec<usize> = if laurent { (0..=n).collect() } else { Vec::new() };
    let table = coordinate_table(n, &inverted, true)?;
    let g = GroupElement::new(
        SuperPolynomial::even_var(&table, n + 1)?,
        SuperPolynomial::odd_var(&table, n + 1)?,
    )?;
    let pairs: Vec<(usize, usize)> = (0..=n).map(|j| (j, j)).collect();
    let action = coordinate_action(&g, &pairs)?;

    let var_count = n + 1;
    let lo = if laurent { -degree_bound } else { 0 };
    let mut candidates: Vec<SuperMonomial> = Vec::new();
    let mut evens = vec![lo; var_count];
    'outer: loop {
        for mask in 0..(1u64 << var_count) {
            let mut full = evens.clone();
            full.push(0);
            candidates.push(SuperMonomial::new(full, mask));
        }
        let mut pos = 0;
        loop {
            if pos == var_count {
                break 'outer;
            }
            evens[pos] += 1;
            if evens[pos] > degree_bound {
                evens[pos] = lo;
                pos += 1;
            } else {
                break;
            }
        }
    }

    let mut groups: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (ci, m) in candidates.iter().enumerate() {
        let weight: i64 = (0..var_count).map(|j| m.even_exponent(j)).sum::<i64>()
            + m.odd_mask().count_ones() as i64;
        groups.entry(weight).or_default().push(ci);
    }

    let trivial = VarTable::new(&[], &[])?;
    let mut results: Vec<SuperPolynomial> = Vec::new();
    for group in groups.values() {
        let mut row_index: BTreeMap<SuperMonomial, usize> = BTreeMap::new();
        let mut cols: Vec<Vec<(usize, Scalar)>> = Vec::new();
        for &ci in group {
            let m_poly =
                SuperPolynomial::monomial(&table, candidates[ci].clone(), Scalar::one())?;
            let diff = &action.apply(&m_poly)? - &m_poly;
            let mut col = Vec::new();
            for (mono, c) in diff.terms() {
                let next = row_index.len();
                let r = *row_index.entry(mono.clone()).or_insert(next);
                col.push((r, c.clone()));
            }
            cols.push(col);
        }
        let mut rows =
            vec![vec![SuperPolynomial::zero(&trivial); group.len()]; row_index.len()];
        for (c, col) in cols.iter().enumerate() {
            for (r, s) in col {
                rows[*r][c] = SuperPolynomial::scalar(&trivial, s.clone());
            }
        }
        for vector in supermatrix::nullspace(&trivial, group.len(), rows)? {
            let mut f = SuperPolynomial::zero(&table);
            for (c, coeff) in vector.iter().enumerate() {
                let s = coeff.as_scalar().ok_or_else(|| {
                    Error::StructureMismatch("scalar solve produced a nonconstant".into())
                })?;
                if !s.is_zero() {
                    f = &f
                        + &SuperPolynomial::monomial(
                            &table,
                            candidates[group[c]].clone(),
                            s,
                        )?;
                }
            }
            debug_assert_eq!(action.apply(&f)?, f);
            results.push(f);
        }
    }
    results.sort_by_key(|f| f.to_string());
    Ok(results)
}
