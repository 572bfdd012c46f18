//! The invariant coordinates of an affine cell of Pi-projective superspace.
//!
//! On the cell where `z_i` is invertible, the scale-and-shear action of the
//! rank `1|1` multiplicative supergroup fixes the corrected ratios
//! `w_i^j = z_j/z_i - zeta_i zeta_j / z_i^2` and
//! `eta_i^j = zeta_j/z_i - z_j zeta_i / z_i^2`, while the naive ratio
//! `z_j/z_i` moves.

use supergeo::piproj::CellContext;

fn main() -> supergeo::Result<()> {
    let ctx = CellContext::new(2, 0)?;
    println!("cell: n = {}, chart i = {}", ctx.n(), ctx.i());
    for j in 1..=2 {
        let w = ctx.w(j)?;
        let eta = ctx.eta(j)?;
        println!("w_0^{j}   = {w}");
        println!("eta_0^{j} = {eta}");
        println!("  invariant: {} / {}", ctx.is_invariant(&w)?, ctx.is_invariant(&eta)?);
    }

    let naive = &ctx.z(1)? * &ctx.z(0)?.invert_unit()?;
    println!("naive ratio z1/z0 = {naive}");
    println!("  invariant: {}", ctx.is_invariant(&naive)?);
    let moved = ctx.action()?.apply(&naive)?;
    println!("  moved - original = {}", &moved - &naive);
    Ok(())
}
