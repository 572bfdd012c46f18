//! The multiplicative supergroup of rank `1|1`: its group law at generic
//! symbolic points, the embedding into `SL(1|1)` with Berezinian one, and the
//! dictionary with the units of the super skew field.

use supergeo::dskew::{dinvert, dmul, Side};
use supergeo::g11m::{embed_sl11, from_dstar, ginv, gmul, to_dstar, GroupElement};
use supergeo::superpoly::{SuperPolynomial, VarTable};

fn main() -> supergeo::Result<()> {
    let table = VarTable::new(&[("t1", true), ("t2", true)], &["s1", "s2"])?;
    let g = GroupElement::new(
        SuperPolynomial::even_var(&table, 0)?,
        SuperPolynomial::odd_var(&table, 0)?,
    )?;
    let h = GroupElement::new(
        SuperPolynomial::even_var(&table, 1)?,
        SuperPolynomial::odd_var(&table, 1)?,
    )?;

    println!("g        = {g}");
    println!("h        = {h}");
    println!("g h      = {}", gmul(&g, &h)?);
    println!("g^-1     = {}", ginv(&g)?);
    println!("g g^-1   = {}", gmul(&g, &ginv(&g)?)?);

    let eg = embed_sl11(&g)?;
    println!("embed(g)          = {eg}");
    println!("Ber(embed(g))     = {}", eg.berezinian()?);
    println!(
        "embed(g)embed(h)  = embed(gh): {}",
        eg.matmul(&embed_sl11(&h)?)? == embed_sl11(&gmul(&g, &h)?)?
    );

    // The same law transported to units of the skew field.
    let dg = to_dstar(&g);
    println!("as a skew unit    = {dg}");
    println!(
        "product matches   : {}",
        to_dstar(&gmul(&g, &h)?) == dmul(&dg, &to_dstar(&h), Side::Plain)?
    );
    println!(
        "inverse matches   : {}",
        to_dstar(&ginv(&g)?) == dinvert(&dg)?
    );
    println!("round trip        : {}", from_dstar(&dg)? == g);
    Ok(())
}
