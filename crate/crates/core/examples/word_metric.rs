//! Word metrics: fewest generator steps between two elements.

use groupdist::{build_cyclic, GeneratingSet, SymmetricGroup};

fn main() -> groupdist::Result<()> {
    let z6 = GeneratingSet::from_labels(build_cyclic(6)?, &["θ1"])?;
    print!("{}", z6.distance_table()?.to_csv());

    let sym4 = SymmetricGroup::new(4)?;
    let adjacent = GeneratingSet::new(sym4.group().clone(), &sym4.adjacent_transpositions())?;
    let all = GeneratingSet::new(sym4.group().clone(), &sym4.transpositions())?;
    println!(
        "Sym(4) diameters: adjacent transpositions {}, all transpositions {}",
        adjacent.diameter(),
        all.diameter()
    );
    Ok(())
}
