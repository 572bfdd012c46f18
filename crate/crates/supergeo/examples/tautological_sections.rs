//! The tautological sections `s_j = z_j + theta zeta_j` of the Pi-invertible
//! sheaf of degree one: chart relations, quotients by the local frame, and
//! the transition matrices they induce.

use supergeo::piproj::{d_quotient, sections, transition, CellContext};

fn main() -> supergeo::Result<()> {
    let ctx = CellContext::new(1, 0)?;
    let table = ctx.table();
    let (s0, sigma0) = sections(table, 0)?;
    let (s1, sigma1) = sections(table, 1)?;
    println!("s_0     = {s0}");
    println!("sigma_0 = {sigma0}");
    println!("s_1     = {s1}");
    println!("sigma_1 = {sigma1}");

    // Dividing the chart-1 sections by the chart-0 frame recovers the
    // invariant generators, paired across parities.
    let (q_even, q_odd) = d_quotient(&s0, &s1)?;
    println!("s_1 / s_0     = {q_even} + theta ({q_odd})");
    let (r_even, r_odd) = d_quotient(&s0, &sigma1)?;
    println!("sigma_1 / s_0 = {r_even} + theta ({r_odd})");

    let (matrix, ber) = transition(1, 0, 1)?;
    println!("transition 0 -> 1 = {matrix}");
    println!("its Berezinian    = {ber}");
    Ok(())
}
