//! Building groups from multiplication tables and inspecting them.

use groupdist::{build_klein, FiniteGroup};

fn main() -> groupdist::Result<()> {
    let klein = build_klein();
    print!("{}", klein.to_gtab());

    let s3 = FiniteGroup::builtin("sym3")?;
    println!("Sym(3) is abelian: {}", s3.is_abelian());
    for a in 0..s3.order() {
        println!("  {} has inverse {} and order {}", s3.label(a), s3.label(s3.inv(a)?), s3.element_order(a)?);
    }

    // A Latin square with an identity that fails associativity.
    let text = "5\n1 2 3 4 5\n1 2 3 4 5\n2 1 4 5 3\n3 5 1 2 4\n4 3 5 1 2\n5 4 2 3 1\n";
    match FiniteGroup::from_gtab(text) {
        Ok(_) => println!("unexpectedly a group"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
