//! Neighbor-joining (Saitou and Nei).

use super::tree::Tree;
use crate::error::{Error, Result};
use crate::io::DistanceMatrix;

/// Builds an unrooted binary tree by neighbor joining.
///
/// At each step the active pair minimizing `Q(i,j) = (r−2)·d(i,j) − R_i − R_j`
/// is joined; ties go to the smallest `(i, j)` in current order. Negative
/// branch lengths are clamped to zero. The last three nodes are attached to a
/// central node, which is where [`Tree::to_newick`] roots its output.
pub fn neighbor_joining(matrix: &DistanceMatrix) -> Result<Tree> {
    let k = matrix.len();
    if k < 3 {
        return Err(Error::TooFewTaxa { needed: 3, got: k });
    }
    let mut tree = Tree::new();
    let mut active: Vec<usize> = matrix
        .ids()
        .iter()
        .map(|id| tree.add_leaf(id.clone()))
        .collect();
    let mut d: Vec<Vec<f64>> = (0..k).map(|i| matrix.row(i).to_vec()).collect();

    while active.len() > 3 {
        let r = active.len();
        let totals: Vec<f64> = d.iter().map(|row| row.iter().sum()).collect();
        let scale = (r - 2) as f64;
        let (mut bi, mut bj, mut best) = (0, 1, f64::INFINITY);
        for i in 0..r {
            for j in i + 1..r {
                let q = scale * d[i][j] - totals[i] - totals[j];
                if q < best {
                    (bi, bj, best) = (i, j, q);
                }
            }
        }
        let dij = d[bi][bj];
        let li = 0.5 * dij + (totals[bi] - totals[bj]) / (2.0 * scale);
        let lj = dij - li;
        let u = tree.add_internal();
        tree.connect(u, active[bi], li.max(0.0));
        tree.connect(u, active[bj], lj.max(0.0));

        let merged: Vec<f64> = (0..r)
            .map(|m| {
                if m == bi {
                    0.0
                } else {
                    0.5 * (d[bi][m] + d[bj][m] - dij)
                }
            })
            .collect();
        for (m, row) in d.iter_mut().enumerate() {
            row[bi] = merged[m];
        }
        d[bi] = merged;
        d.remove(bj);
        for row in &mut d {
            row.remove(bj);
        }
        active[bi] = u;
        active.remove(bj);
    }

    let c = tree.add_internal();
    let (d01, d02, d12) = (d[0][1], d[0][2], d[1][2]);
    let lengths = [
        0.5 * (d01 + d02 - d12),
        0.5 * (d01 + d12 - d02),
        0.5 * (d02 + d12 - d01),
    ];
    for (&node, len) in active.iter().zip(lengths) {
        tree.connect(c, node, len.max(0.0));
    }
    Ok(tree)
}
