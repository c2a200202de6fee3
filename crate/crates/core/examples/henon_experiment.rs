//! Coupled Hénon maps: how the support of the distance distribution changes
//! with the coupling strength.

use groupdist::simulate::{run_experiment, ExperimentConfig, HenonConfig};

fn main() -> groupdist::Result<()> {
    for coupling in [0.30, 0.55, 1.10] {
        let cfg = ExperimentConfig {
            henon: HenonConfig::with_coupling(coupling),
            degree: 4,
            ..ExperimentConfig::default()
        };
        let h = run_experiment(&cfg)?;
        let probs: Vec<String> = h.probabilities.iter().map(|p| format!("{p:.3}")).collect();
        println!("C = {coupling:.2}: P(d_K = 0..6) = [{}]", probs.join(", "));
    }
    Ok(())
}
