//! Pairwise LW distance matrices.

use rayon::prelude::*;

use crate::compare::lw_between;
use crate::error::{Error, Result};
use crate::io::{DistanceMatrix, Sequence};
use crate::maw::{circular_maws, compute_maws, MawSet};
use crate::text::Alphabet;

/// Whether sequences are compared as linear or circular words.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Linear,
    Circular,
}

/// MAW sets of every sequence, computed once and shared by all pairs.
pub fn maw_sets(seqs: &[Sequence], alphabet: &Alphabet, mode: Mode) -> Result<Vec<MawSet>> {
    seqs.par_iter()
        .map(|s| {
            let text = s.encode(alphabet)?;
            match mode {
                Mode::Linear => compute_maws(&text, alphabet),
                Mode::Circular => circular_maws(&text, alphabet),
            }
        })
        .collect()
}

/// Computes the LW distance of every pair `i < j` on a pool of `workers`
/// threads and mirrors it. The result does not depend on `workers`.
pub fn pairwise_matrix(
    seqs: &[Sequence],
    alphabet: &Alphabet,
    mode: Mode,
    max_len: Option<usize>,
    workers: usize,
) -> Result<DistanceMatrix> {
    if seqs.len() < 2 {
        return Err(Error::TooFewSequences {
            needed: 2,
            got: seqs.len(),
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    pool.install(|| {
        let sets = maw_sets(seqs, alphabet, mode)?;
        let k = seqs.len();
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .collect();
        let values = pairs
            .par_iter()
            .map(|&(i, j)| lw_between(&sets[i], &sets[j], max_len).map(|r| r.lw))
            .collect::<Result<Vec<f64>>>()?;
        let mut matrix = DistanceMatrix::zeros(seqs.iter().map(|s| s.id.clone()).collect());
        for (&(i, j), v) in pairs.iter().zip(values) {
            matrix.set(i, j, v);
        }
        Ok(matrix)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seqs(items: &[&str]) -> Vec<Sequence> {
        items
            .iter()
            .enumerate()
            .map(|(i, s)| Sequence::new(format!("s{i}"), s.as_bytes()))
            .collect()
    }

    #[test]
    fn linear_ab_ba() {
        let a = Alphabet::new(*b"ab").unwrap();
        let m = pairwise_matrix(&seqs(&["ab", "ba"]), &a, Mode::Linear, None, 1).unwrap();
        assert_eq!(m.row(0), [0.0, 0.5]);
        assert_eq!(m.row(1), [0.5, 0.0]);
    }

    #[test]
    fn circular_ab_ba_is_zero() {
        let a = Alphabet::new(*b"ab").unwrap();
        let m = pairwise_matrix(&seqs(&["ab", "ba"]), &a, Mode::Circular, None, 2).unwrap();
        assert_eq!(m.row(0), [0.0, 0.0]);
    }

    #[test]
    fn identical_sequences_give_zero_matrix() {
        let a = Alphabet::dna();
        let m =
            pairwise_matrix(&seqs(&["ACGTTGCA", "ACGTTGCA"]), &a, Mode::Linear, None, 1).unwrap();
        assert!(m.row(0).iter().chain(m.row(1)).all(|&v| v == 0.0));
    }

    #[test]
    fn too_few_sequences() {
        let a = Alphabet::dna();
        assert!(matches!(
            pairwise_matrix(&seqs(&["ACGT"]), &a, Mode::Linear, None, 1),
            Err(Error::TooFewSequences { needed: 2, got: 1 })
        ));
    }

    #[test]
    fn foreign_symbols_are_reported() {
        let a = Alphabet::dna();
        assert!(matches!(
            pairwise_matrix(&seqs(&["ACGT", "ACNT"]), &a, Mode::Linear, None, 1),
            Err(Error::RecordSymbol(id, 'N')) if id == "s1"
        ));
    }
}
