//! Tree inference and evaluation: simulation, neighbor joining,
//! Robinson–Foulds comparison and the rotation experiment.

mod newick;
mod nj;
mod sim;
mod tree;

pub use nj::neighbor_joining;
pub use sim::{rotate_randomly, simulate_dataset, taxon_name, SimParams};
pub use tree::{accuracy, rf_distance, Split, Tree};

use crate::error::Result;
use crate::io::DistanceMatrix;
use crate::matrix::{pairwise_matrix, Mode};
use crate::text::Alphabet;

/// Seed offset used to draw the rotations of a simulated dataset.
const ROTATION_SEED_OFFSET: u64 = 0x5eed_0f0f_f5e7;

/// Results of one simulate / rotate / infer / compare run.
///
/// `T3` is inferred from the unrotated data with the circular distance;
/// `T1` from the rotated data with the circular distance; `T2` from the
/// rotated data with the linear distance.
#[derive(Clone, Debug)]
pub struct ExperimentOutcome {
    pub params: SimParams,
    pub basic_circular: DistanceMatrix,
    pub rotated_circular: DistanceMatrix,
    pub rotated_linear: DistanceMatrix,
    pub circular_rf: usize,
    pub circular_accuracy: f64,
    pub linear_rf: usize,
    pub linear_accuracy: f64,
}

impl ExperimentOutcome {
    /// True when the circular matrices of the basic and rotated data agree bit for bit.
    pub fn circular_matrices_identical(&self) -> bool {
        bitwise_equal(&self.basic_circular, &self.rotated_circular)
    }

    /// Tab-separated report lines: seed, α, β, γ, δ, ε, mode, rf, accuracy.
    pub fn report_lines(&self) -> Vec<String> {
        let p = &self.params;
        [
            ("circular", self.circular_rf, self.circular_accuracy),
            ("linear", self.linear_rf, self.linear_accuracy),
        ]
        .iter()
        .map(|(mode, rf, acc)| {
            format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.6}",
                p.seed,
                p.taxa,
                p.root_length,
                p.substitution_rate,
                p.deletion_rate,
                p.insertion_rate,
                mode,
                rf,
                acc
            )
        })
        .collect()
    }
}

/// Header matching [`ExperimentOutcome::report_lines`].
pub const REPORT_HEADER: &str = "seed\ttaxa\tlength\tsub\tdel\tins\tmode\trf\taccuracy";

/// Compares two matrices including the bit patterns of every value.
pub fn bitwise_equal(a: &DistanceMatrix, b: &DistanceMatrix) -> bool {
    a.ids() == b.ids()
        && (0..a.len()).all(|i| {
            a.row(i)
                .iter()
                .zip(b.row(i))
                .all(|(x, y)| x.to_bits() == y.to_bits())
        })
}

/// Simulates a dataset, rotates every sequence arbitrarily and scores the
/// trees inferred from the rotated data against the tree inferred from the
/// unrotated data with the circular distance.
pub fn run_experiment(params: &SimParams, workers: usize) -> Result<ExperimentOutcome> {
    let (basic, _) = simulate_dataset(params)?;
    let rotated = rotate_randomly(&basic, params.seed.wrapping_add(ROTATION_SEED_OFFSET));
    let dna = Alphabet::dna();

    let basic_circular = pairwise_matrix(&basic, &dna, Mode::Circular, None, workers)?;
    let rotated_circular = pairwise_matrix(&rotated, &dna, Mode::Circular, None, workers)?;
    let rotated_linear = pairwise_matrix(&rotated, &dna, Mode::Linear, None, workers)?;

    let t3 = neighbor_joining(&basic_circular)?;
    let t1 = neighbor_joining(&rotated_circular)?;
    let t2 = neighbor_joining(&rotated_linear)?;

    Ok(ExperimentOutcome {
        params: *params,
        circular_rf: rf_distance(&t1, &t3)?,
        circular_accuracy: accuracy(&t1, &t3)?,
        linear_rf: rf_distance(&t2, &t3)?,
        linear_accuracy: accuracy(&t2, &t3)?,
        basic_circular,
        rotated_circular,
        rotated_linear,
    })
}
