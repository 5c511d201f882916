//! A small sequence-evolution simulator: a random binary tree with
//! per-branch substitutions and single-base insertions and deletions.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::tree::Tree;
use crate::error::{Error, Result};
use crate::io::Sequence;

const BASES: [u8; 4] = *b"ACGT";

/// Simulation parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimParams {
    /// Number of leaves.
    pub taxa: usize,
    /// Length of the root sequence.
    pub root_length: usize,
    /// Substitution probability per site per unit branch length.
    pub substitution_rate: f64,
    /// Deletion rate relative to substitution.
    pub deletion_rate: f64,
    /// Insertion rate relative to substitution.
    pub insertion_rate: f64,
    pub seed: u64,
}

impl SimParams {
    pub fn validate(&self) -> Result<()> {
        if self.taxa < 3 {
            return Err(Error::InvalidParameter(format!(
                "taxa must be at least 3, got {}",
                self.taxa
            )));
        }
        if self.root_length < 1 {
            return Err(Error::InvalidParameter(
                "root length must be at least 1".into(),
            ));
        }
        for (name, v) in [
            ("substitution", self.substitution_rate),
            ("deletion", self.deletion_rate),
            ("insertion", self.insertion_rate),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::InvalidParameter(format!(
                    "{name} rate {v} not in [0, 1]"
                )));
            }
        }
        Ok(())
    }
}

/// Leaf name of taxon `i` (zero-based).
pub fn taxon_name(i: usize) -> String {
    format!("t{}", i + 1)
}

/// Simulates leaf sequences along a random tree. Returns the sequences (in
/// taxon order) and the true tree. Fully determined by `params.seed`.
pub fn simulate_dataset(params: &SimParams) -> Result<(Vec<Sequence>, Tree)> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);

    // Random joins of the active subtrees give a rooted binary tree.
    let mut tree = Tree::new();
    let mut children: Vec<Vec<(usize, f64)>> = Vec::new();
    let mut active: Vec<usize> = (0..params.taxa)
        .map(|i| {
            children.push(Vec::new());
            tree.add_leaf(taxon_name(i))
        })
        .collect();
    while active.len() > 1 {
        active.shuffle(&mut rng);
        let a = active.pop().expect("two active");
        let b = active.pop().expect("two active");
        let p = tree.add_internal();
        children.push(Vec::new());
        for c in [a, b] {
            let len = rng.gen_range(0.5..1.5);
            tree.connect(p, c, len);
            children[p].push((c, len));
        }
        active.push(p);
    }
    let root = active[0];

    let root_seq: Vec<u8> = (0..params.root_length)
        .map(|_| BASES[rng.gen_range(0..4)])
        .collect();
    let mut seqs: Vec<Option<Vec<u8>>> = vec![None; tree.node_count()];
    let mut stack = vec![(root, root_seq)];
    while let Some((v, seq)) = stack.pop() {
        for &(c, len) in &children[v] {
            let child = evolve(&seq, params, len, &mut rng);
            stack.push((c, child));
        }
        seqs[v] = Some(seq);
    }

    let sequences = (0..params.taxa)
        .map(|i| Sequence::new(taxon_name(i), seqs[i].take().expect("leaf simulated")))
        .collect();
    Ok((sequences, tree))
}

fn evolve(parent: &[u8], p: &SimParams, branch: f64, rng: &mut impl Rng) -> Vec<u8> {
    let sub = (p.substitution_rate * branch).min(1.0);
    let del = (p.substitution_rate * p.deletion_rate * branch).min(1.0);
    let ins = (p.substitution_rate * p.insertion_rate * branch).min(1.0);
    let mut out = Vec::with_capacity(parent.len() + 8);
    for &base in parent {
        if rng.gen_bool(del) {
            continue;
        }
        if rng.gen_bool(sub) {
            let shift = rng.gen_range(1..4);
            let i = BASES.iter().position(|&b| b == base).unwrap_or(0);
            out.push(BASES[(i + shift) % 4]);
        } else {
            out.push(base);
        }
        if rng.gen_bool(ins) {
            out.push(BASES[rng.gen_range(0..4)]);
        }
    }
    if out.is_empty() {
        out.push(BASES[rng.gen_range(0..4)]);
    }
    out
}

/// Replaces each sequence by a rotation chosen uniformly in `[0, len)`.
pub fn rotate_randomly(seqs: &[Sequence], seed: u64) -> Vec<Sequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    seqs.iter()
        .map(|s| {
            let mut symbols = s.symbols.clone();
            if !symbols.is_empty() {
                let i = rng.gen_range(0..symbols.len());
                symbols.rotate_left(i);
            }
            Sequence::new(s.id.clone(), symbols)
        })
        .collect()
}
