//! Turning a real series into ordinal patterns.

use groupdist::{ordinal_encode, pattern_histogram, RealSeries, TiePolicy};

fn main() -> groupdist::Result<()> {
    let x = RealSeries::new(vec![2.1, 0.3, 1.5, 2.4, 0.9, 0.9, 3.3, 1.0])?;
    let patterns = ordinal_encode(&x, 3, TiePolicy::IndexOrder)?;
    print!("{}", patterns.to_text());

    let jittered = ordinal_encode(&x, 3, TiePolicy::Jitter { amplitude: 1e-6, seed: 1 })?;
    for (p, count) in pattern_histogram(&jittered) {
        println!("{p}: {count}");
    }
    Ok(())
}
