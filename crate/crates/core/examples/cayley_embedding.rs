//! Distances on a finite group induced by its Cayley embedding.

use groupdist::{build_cyclic, build_klein, embed, Metric, Variant};

fn main() -> groupdist::Result<()> {
    for (name, group) in [("Klein", build_klein()), ("Z4", build_cyclic(4)?)] {
        let emb = embed(&group, Variant::Left)?;
        for metric in [Metric::Cayley, Metric::Kendall] {
            let m = emb.distance_matrix(metric)?;
            println!("{name}, {metric}: admissible {:?}, forbidden {:?}", m.admissible(), m.forbidden(emb.bound(metric)));
            print!("{}", m.to_csv());
        }
    }

    match embed(&build_klein(), Variant::Adjoint) {
        Ok(_) => println!("adjoint embedding accepted"),
        Err(e) => println!("adjoint embedding of an abelian group: {e}"),
    }
    Ok(())
}
