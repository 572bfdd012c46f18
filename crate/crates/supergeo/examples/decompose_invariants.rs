//! Writing an invariant function on an affine cell as a polynomial in the
//! invariant generators, and expanding it back to coordinates.
//!
//! The decomposition reads off the `zeta_i`-free head terms degree by degree,
//! so it also certifies that the generators really do generate.

use supergeo::parse::parse_expression;
use supergeo::piproj::CellContext;

fn main() -> supergeo::Result<()> {
    let ctx = CellContext::new(1, 0)?;
    for expr in [
        "z1*z0^-1 - zeta0*zeta1*z0^-2",
        "zeta1*z0^-1 - z1*zeta0*z0^-2",
        "3*(z1*z0^-1 - zeta0*zeta1*z0^-2)^2 + 1/2",
    ] {
        let f = parse_expression(expr, ctx.table())?;
        let cell = ctx.decompose(&f)?;
        println!("{f}");
        println!("  = {cell}  in the generators");
        println!("  expands back: {}", ctx.expand(&cell)? == f);
    }

    // A non-invariant input is rejected with the reason.
    let bad = parse_expression("z1*z0^-1", ctx.table())?;
    match ctx.decompose(&bad) {
        Err(e) => println!("z1*z0^-1 is rejected: {e}"),
        Ok(_) => unreachable!("the naive ratio is not invariant"),
    }
    Ok(())
}
