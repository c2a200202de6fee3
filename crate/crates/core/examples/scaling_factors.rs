//! Exhaustive check that the left-embedded Kendall distance on Sym(L) is a
//! constant multiple of the Kendall distance.

use groupdist::scaling_factor;

fn main() -> groupdist::Result<()> {
    for degree in 3..=5 {
        let check = scaling_factor(degree)?;
        match check.factor {
            Some(k) => println!("L = {degree}: D_K = {k} · d_K on all {} pairs", check.pairs_checked),
            None => println!("L = {degree}: not proportional, e.g. {:?}", check.witness),
        }
    }
    Ok(())
}
