//! Global invariant functions on the coordinate space, degree by degree.
//!
//! Enumerates all monomials within a per-variable degree bound, solves the
//! exact linear system cutting out the invariants under the rank `1|1`
//! multiplicative supergroup, and prints the resulting basis. Up to the
//! bound, only the constants survive, matching the expected ring of global
//! functions.

use supergeo::piproj::invariant_functions;

fn main() -> supergeo::Result<()> {
    for (n, bound, laurent) in [(1usize, 4i64, false), (0, 4, true), (2, 2, false)] {
        let basis = invariant_functions(n, bound, laurent)?;
        let rendered: Vec<String> = basis.iter().map(|f| f.to_string()).collect();
        println!(
            "n = {n}, bound {bound}, {}: {{{}}}",
            if laurent { "laurent" } else { "polynomial" },
            rendered.join(", ")
        );
    }
    Ok(())
}
