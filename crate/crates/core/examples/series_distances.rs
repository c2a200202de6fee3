//! Element-wise and windowed distances between two pattern series.

use groupdist::seriesmetrics::{
    elementwise_distances, histogram, windowed_distances, Binning, Domain, Exponent, GroupSeries, PermutationMetric,
};
use groupdist::Metric;

fn main() -> groupdist::Result<()> {
    let alpha = GroupSeries::parse(Domain::symmetric(3)?, "123\n213\n123\n123\n132\n")?;
    let beta = GroupSeries::parse(Domain::symmetric(3)?, "321\n231\n231\n123\n312\n")?;
    let kendall = PermutationMetric::new(3, Metric::Kendall)?;

    let d = elementwise_distances(&alpha, &beta, &kendall)?;
    println!("element-wise: {:?}", d.values());
    for p in [Exponent::One, Exponent::Two, Exponent::Infinity] {
        let w = windowed_distances(&alpha, &beta, &kendall, 4, p)?;
        println!("W = 4, p = {p}: {:?}", w.values());
    }

    let w2 = windowed_distances(&alpha, &beta, &kendall, 2, Exponent::Two)?;
    println!("{}", histogram(&w2, Binning::RoundHalfUp, None)?.to_json());
    Ok(())
}
