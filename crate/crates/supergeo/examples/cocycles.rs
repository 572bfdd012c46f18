//! The transition data of the degree-one sheaf satisfies the cocycle
//! conditions: inverse and composition identities for the invariant
//! generators, and the group-valued identities on ordered pairs and triples
//! of charts.

use supergeo::piproj::{
    cocycle_identities, even_composition_identity, even_inverse_identity,
    odd_composition_identity, odd_inverse_identity,
};

fn main() -> supergeo::Result<()> {
    let n = 2;
    even_inverse_identity(n, 0, 1)?;
    println!("w_1^0 = (w_0^1)^-1");
    odd_inverse_identity(n, 0, 1)?;
    println!("eta_1^0 = -eta_0^1 (w_0^1)^-2");
    even_composition_identity(n, 0, 1, 2)?;
    println!("w_1^2 = w_0^2 w_1^0 - eta_0^2 eta_1^0");
    odd_composition_identity(n, 0, 1, 2)?;
    println!("eta_1^2 = w_1^0 eta_0^2 + eta_1^0 w_0^2");

    for n in 1..=3usize {
        cocycle_identities(n)?;
        println!("all ordered pairs and triples check out for n = {n}");
    }
    Ok(())
}
