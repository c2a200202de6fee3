//! Cayley and Kendall distances between two permutations, and the pieces
//! they are computed from.

use groupdist::{cayley_distance, kendall_distance, Permutation};

fn main() -> groupdist::Result<()> {
    let r: Permutation = "462531".parse()?;
    let s: Permutation = "236514".parse()?;

    let rel = s.inverse().compose(&r)?;
    println!("r = {r}, s = {s}");
    println!("s⁻¹∘r = {rel} with cycles {}", rel.cycles().display(false));
    println!("d_C(r, s) = {} (degree minus {} cycles)", cayley_distance(&r, &s)?, rel.count_cycles());
    println!("d_K(r, s) = {} (inversions)", kendall_distance(&r, &s)?);
    Ok(())
}
