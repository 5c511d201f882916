//! Length-weighted (LW) distance between two MAW sets.
//!
//! Both sets are embedded in `w = x · $ · y`. Tuples are sorted by their
//! first letter and the rank of the suffix of `w` where their remainder
//! starts, which orders each set lexicographically. A single merge pass then
//! walks both lists, deciding equality with one LCE query per step.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::maw::{circular_maws, compute_maws, MawSet, MawTuple};
use crate::suffix::SuffixStructures;
use crate::text::{Alphabet, Text, SENTINEL};

/// The concatenation `x · $ · y` and its suffix structures.
#[derive(Debug)]
pub struct PairContext {
    w: Vec<u32>,
    m: usize,
    structures: SuffixStructures,
}

impl PairContext {
    pub fn new(x: &[u32], y: &[u32]) -> Result<Self> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::EmptySequence);
        }
        let mut w = Vec::with_capacity(x.len() + y.len() + 1);
        w.extend_from_slice(x);
        w.push(SENTINEL);
        w.extend_from_slice(y);
        let structures = SuffixStructures::build(&w)?;
        Ok(Self {
            w,
            m: x.len(),
            structures,
        })
    }

    pub fn w(&self) -> &[u32] {
        &self.w
    }

    /// Length of the `x` part.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Index of the first symbol of `y` in `w`.
    pub fn offset_y(&self) -> usize {
        self.m + 1
    }

    pub fn structures(&self) -> &SuffixStructures {
        &self.structures
    }
}

/// A tuple placed in `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderedEntry {
    /// The tuple relative to its own reference text.
    pub tuple: MawTuple,
    /// Start of the tuple's remainder in `w`.
    pub pos: usize,
    /// Rank of the suffix of `w` starting at `pos`.
    pub rank: usize,
    /// Decoded word length.
    pub len: usize,
}

/// A MAW set sorted lexicographically.
#[derive(Clone, Debug, Default)]
pub struct OrderedMawList {
    pub entries: Vec<OrderedEntry>,
}

impl OrderedMawList {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Decoded words in list order.
    pub fn words<'a>(&'a self, ctx: &'a PairContext) -> impl Iterator<Item = Vec<u32>> + 'a {
        self.entries.iter().map(|e| entry_word(e, ctx))
    }
}

fn entry_word(e: &OrderedEntry, ctx: &PairContext) -> Vec<u32> {
    let mut word = Vec::with_capacity(e.len);
    word.push(e.tuple.letter);
    word.extend_from_slice(&ctx.w[e.pos..e.pos + e.len - 1]);
    word
}

/// Sorts `tuples` (indexing into a text embedded in `ctx` at `base`) by
/// `(letter, rank)` with two counting-sort passes.
pub fn order_tuples(tuples: &[MawTuple], ctx: &PairContext, base: usize) -> OrderedMawList {
    let st = &ctx.structures;
    let entries: Vec<OrderedEntry> = tuples
        .iter()
        .map(|&tuple| {
            let pos = base + tuple.start;
            OrderedEntry {
                tuple,
                pos,
                rank: st.rank(pos),
                len: tuple.len(),
            }
        })
        .collect();
    let by_rank = counting_sort(entries, ctx.w.len(), |e| e.rank);
    let letters = by_rank.iter().map(|e| e.tuple.letter).max().unwrap_or(0) as usize + 1;
    let entries = counting_sort(by_rank, letters, |e| e.tuple.letter as usize);
    OrderedMawList { entries }
}

/// Orders a whole set; `base` is `0` for the `x` side and `ctx.offset_y()` for `y`.
pub fn order_maws(set: &MawSet, ctx: &PairContext, base: usize) -> OrderedMawList {
    order_tuples(set.tuples(), ctx, base)
}

fn counting_sort<T: Copy>(items: Vec<T>, buckets: usize, key: impl Fn(&T) -> usize) -> Vec<T> {
    if items.len() < 2 {
        return items;
    }
    let mut starts = vec![0usize; buckets + 1];
    for it in &items {
        starts[key(it) + 1] += 1;
    }
    for b in 0..buckets {
        starts[b + 1] += starts[b];
    }
    let mut out: Vec<Option<T>> = vec![None; items.len()];
    for it in items {
        let k = key(&it);
        out[starts[k]] = Some(it);
        starts[k] += 1;
    }
    out.into_iter()
        .map(|x| x.expect("every slot filled"))
        .collect()
}

/// Lexicographic comparison of the words of two entries of the same context.
pub fn tuple_compare(tx: &OrderedEntry, ty: &OrderedEntry, ctx: &PairContext) -> Ordering {
    match tx.tuple.letter.cmp(&ty.tuple.letter) {
        Ordering::Equal => {}
        other => return other,
    }
    let common = tx.len.min(ty.len) - 1;
    let l = ctx.structures.lce_unchecked(tx.pos, ty.pos);
    if l >= common {
        tx.len.cmp(&ty.len)
    } else {
        ctx.w[tx.pos + l].cmp(&ctx.w[ty.pos + l])
    }
}

/// One step of the merge of two ordered lists.
#[derive(Clone, Copy, Debug)]
pub enum MergeStep<'a> {
    OnlyX(&'a OrderedEntry),
    OnlyY(&'a OrderedEntry),
    Both(&'a OrderedEntry, &'a OrderedEntry),
}

/// Walks both lists in lexicographic order of their words.
pub fn merge_walk<'a>(
    xs: &'a OrderedMawList,
    ys: &'a OrderedMawList,
    ctx: &PairContext,
    mut visit: impl FnMut(MergeStep<'a>),
) {
    let (xs, ys) = (&xs.entries, &ys.entries);
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        match tuple_compare(&xs[i], &ys[j], ctx) {
            Ordering::Less => {
                visit(MergeStep::OnlyX(&xs[i]));
                i += 1;
            }
            Ordering::Greater => {
                visit(MergeStep::OnlyY(&ys[j]));
                j += 1;
            }
            Ordering::Equal => {
                debug_assert_eq!(entry_word(&xs[i], ctx), entry_word(&ys[j], ctx));
                visit(MergeStep::Both(&xs[i], &ys[j]));
                i += 1;
                j += 1;
            }
        }
    }
    xs[i..].iter().for_each(|e| visit(MergeStep::OnlyX(e)));
    ys[j..].iter().for_each(|e| visit(MergeStep::OnlyY(e)));
}

/// Outcome of an LW computation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LwResult {
    /// Σ 1/|w|² over the symmetric difference.
    pub lw: f64,
    /// Size of the symmetric difference.
    pub sym_diff_count: usize,
    /// Size of the union.
    pub union_count: usize,
}

/// LW over two ordered lists sharing `ctx`.
pub fn lw_ordered(xs: &OrderedMawList, ys: &OrderedMawList, ctx: &PairContext) -> LwResult {
    let mut res = LwResult {
        lw: 0.0,
        sym_diff_count: 0,
        union_count: 0,
    };
    merge_walk(xs, ys, ctx, |step| {
        res.union_count += 1;
        match step {
            MergeStep::OnlyX(e) | MergeStep::OnlyY(e) => {
                let l = e.len as f64;
                res.lw += 1.0 / (l * l);
                res.sym_diff_count += 1;
            }
            MergeStep::Both(..) => {}
        }
    });
    res
}

/// LW distance between two precomputed MAW sets, optionally restricted to
/// words of length at most `max_len`.
pub fn lw_between(mx: &MawSet, my: &MawSet, max_len: Option<usize>) -> Result<LwResult> {
    if mx.alphabet() != my.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let ctx = PairContext::new(mx.reference(), my.reference())?;
    let keep = |t: &&MawTuple| max_len.is_none_or(|l| t.len() <= l);
    let tx: Vec<MawTuple> = mx.tuples().iter().filter(keep).copied().collect();
    let ty: Vec<MawTuple> = my.tuples().iter().filter(keep).copied().collect();
    let xs = order_tuples(&tx, &ctx, 0);
    let ys = order_tuples(&ty, &ctx, ctx.offset_y());
    Ok(lw_ordered(&xs, &ys, &ctx))
}

/// LW distance between the MAW sets of two linear sequences.
pub fn lw_distance(
    x: &Text,
    y: &Text,
    alphabet: &Alphabet,
    max_len: Option<usize>,
) -> Result<LwResult> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mx = compute_maws(x, alphabet)?;
    let my = compute_maws(y, alphabet)?;
    lw_between(&mx, &my, max_len)
}

/// LW distance between the MAW sets of two circular sequences.
pub fn lw_distance_circular(x: &Text, y: &Text, alphabet: &Alphabet) -> Result<LwResult> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mx = circular_maws(x, alphabet)?;
    let my = circular_maws(y, alphabet)?;
    lw_between(&mx, &my, None)
}

/// `Mx ∪ My` as a set over `w`, in lexicographic order, common words once.
pub fn merge_union(xs: &OrderedMawList, ys: &OrderedMawList, ctx: &PairContext) -> Vec<MawTuple> {
    let mut out = Vec::with_capacity(xs.len() + ys.len());
    merge_walk(xs, ys, ctx, |step| {
        let e = match step {
            MergeStep::OnlyX(e) | MergeStep::OnlyY(e) | MergeStep::Both(e, _) => e,
        };
        out.push(MawTuple {
            letter: e.tuple.letter,
            start: e.pos,
            end: e.pos + e.len - 2,
        });
    });
    out
}
