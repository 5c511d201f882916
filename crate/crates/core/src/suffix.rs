//! Suffix array, inverse suffix array, LCP array and a sparse-table RMQ over
//! the LCP array, giving constant-time longest-common-extension queries.

use crate::error::{Error, Result};

const EMPTY: usize = usize::MAX;

/// Immutable suffix structures of one text.
#[derive(Clone, Debug)]
pub struct SuffixStructures {
    sa: Vec<usize>,
    isa: Vec<usize>,
    lcp: Vec<u32>,
    rmq: SparseTable,
}

impl SuffixStructures {
    /// Builds all structures for `text` (codes of any magnitude; `0` sorts first).
    pub fn build(text: &[u32]) -> Result<Self> {
        let n = text.len();
        if n == 0 {
            return Err(Error::EmptyText);
        }
        if n >= u32::MAX as usize {
            return Err(Error::TextTooLong(n));
        }
        let sa = suffix_array(text);
        let mut isa = vec![0; n];
        for (r, &p) in sa.iter().enumerate() {
            isa[p] = r;
        }
        let lcp = lcp_array(text, &sa, &isa);
        let rmq = SparseTable::new(&lcp);
        Ok(Self { sa, isa, lcp, rmq })
    }

    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    pub fn sa(&self) -> &[usize] {
        &self.sa
    }

    pub fn isa(&self) -> &[usize] {
        &self.isa
    }

    pub fn lcp(&self) -> &[u32] {
        &self.lcp
    }

    /// Rank of the suffix starting at `p`.
    #[inline]
    pub fn rank(&self, p: usize) -> usize {
        self.isa[p]
    }

    /// Longest common prefix of the suffixes starting at `p` and `q`.
    pub fn lce(&self, p: usize, q: usize) -> Result<usize> {
        let n = self.len();
        for position in [p, q] {
            if position >= n {
                return Err(Error::PositionOutOfRange { position, len: n });
            }
        }
        Ok(self.lce_unchecked(p, q))
    }

    /// [`lce`](Self::lce) without the range check; panics on out-of-range input.
    #[inline]
    pub fn lce_unchecked(&self, p: usize, q: usize) -> usize {
        if p == q {
            return self.len() - p;
        }
        let (mut r, mut s) = (self.isa[p], self.isa[q]);
        if r > s {
            std::mem::swap(&mut r, &mut s);
        }
        self.rmq.min(r + 1, s) as usize
    }
}

/// Range-minimum table with O(n log n) words and O(1) queries.
#[derive(Clone, Debug)]
struct SparseTable {
    // levels[k][i] = min(values[i .. i + 2^(k+1)])
    levels: Vec<Vec<u32>>,
    base: Vec<u32>,
}

impl SparseTable {
    fn new(values: &[u32]) -> Self {
        let n = values.len();
        let mut levels: Vec<Vec<u32>> = Vec::new();
        let mut width = 1;
        while 2 * width <= n {
            let prev: &[u32] = levels.last().map_or(values, |v| v.as_slice());
            let next = (0..=n - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        Self {
            levels,
            base: values.to_vec(),
        }
    }

    /// Minimum over the inclusive range `[l, r]`.
    #[inline]
    fn min(&self, l: usize, r: usize) -> u32 {
        debug_assert!(l <= r);
        let span = r - l + 1;
        let k = usize::BITS - 1 - span.leading_zeros();
        if k == 0 {
            return self.base[l];
        }
        let level = &self.levels[k as usize - 1];
        level[l].min(level[r + 1 - (1 << k)])
    }
}

/// Kasai et al. rank-and-scan LCP construction.
fn lcp_array(text: &[u32], sa: &[usize], isa: &[usize]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = isa[i];
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1];
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Suffix array by induced sorting (SA-IS). No terminator is required.
pub fn suffix_array(text: &[u32]) -> Vec<usize> {
    let upper = text.iter().copied().max().unwrap_or(0) as usize;
    let s: Vec<usize> = text.iter().map(|&c| c as usize).collect();
    sa_is(&s, upper)
}

fn sa_naive(s: &[usize]) -> Vec<usize> {
    let mut sa: Vec<usize> = (0..s.len()).collect();
    sa.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
    sa
}

// Symbols of `s` lie in `0..=upper`.
fn sa_is(s: &[usize], upper: usize) -> Vec<usize> {
    let n = s.len();
    match n {
        0 => return vec![],
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ if n < 10 => return sa_naive(s),
        _ => {}
    }

    // is_s[i]: suffix i is S-type (smaller than suffix i+1).
    let mut is_s = vec![false; n];
    for i in (0..n - 1).rev() {
        is_s[i] = if s[i] == s[i + 1] {
            is_s[i + 1]
        } else {
            s[i] < s[i + 1]
        };
    }

    // Bucket boundaries: sum_l[c] is the start of c's bucket (L-types first),
    // sum_s[c] the start of its S-type region.
    let mut sum_l = vec![0usize; upper + 2];
    let mut sum_s = vec![0usize; upper + 2];
    for i in 0..n {
        if is_s[i] {
            sum_l[s[i] + 1] += 1;
        } else {
            sum_s[s[i]] += 1;
        }
    }
    for c in 0..=upper {
        sum_s[c] += sum_l[c];
        sum_l[c + 1] += sum_s[c];
    }

    let mut sa = vec![EMPTY; n];
    let induce = |sa: &mut [usize], lms: &[usize]| {
        sa.fill(EMPTY);
        let mut buf = sum_s.clone();
        for &d in lms {
            if d == n {
                continue;
            }
            sa[buf[s[d]]] = d;
            buf[s[d]] += 1;
        }
        buf.copy_from_slice(&sum_l);
        sa[buf[s[n - 1]]] = n - 1;
        buf[s[n - 1]] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != EMPTY && v >= 1 && !is_s[v - 1] {
                sa[buf[s[v - 1]]] = v - 1;
                buf[s[v - 1]] += 1;
            }
        }
        buf.copy_from_slice(&sum_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != EMPTY && v >= 1 && is_s[v - 1] {
                buf[s[v - 1] + 1] -= 1;
                sa[buf[s[v - 1] + 1]] = v - 1;
            }
        }
    };

    let mut lms_map = vec![EMPTY; n + 1];
    let mut lms = Vec::new();
    for i in 1..n {
        if !is_s[i - 1] && is_s[i] {
            lms_map[i] = lms.len();
            lms.push(i);
        }
    }
    let m = lms.len();

    induce(&mut sa, &lms);

    if m > 0 {
        let mut sorted_lms: Vec<usize> = sa
            .iter()
            .copied()
            .filter(|&v| v != EMPTY && lms_map[v] != EMPTY)
            .collect();
        let mut rec_s = vec![0usize; m];
        let mut rec_upper = 0;
        rec_s[lms_map[sorted_lms[0]]] = 0;
        for i in 1..m {
            let (mut l, mut r) = (sorted_lms[i - 1], sorted_lms[i]);
            let end_l = if lms_map[l] + 1 < m {
                lms[lms_map[l] + 1]
            } else {
                n
            };
            let end_r = if lms_map[r] + 1 < m {
                lms[lms_map[r] + 1]
            } else {
                n
            };
            let mut same = true;
            if end_l - l != end_r - r {
                same = false;
            } else {
                while l < end_l {
                    if s[l] != s[r] {
                        break;
                    }
                    l += 1;
                    r += 1;
                }
                if l == n || s[l] != s[r] {
                    same = false;
                }
            }
            if !same {
                rec_upper += 1;
            }
            rec_s[lms_map[sorted_lms[i]]] = rec_upper;
        }

        let rec_sa = sa_is(&rec_s, rec_upper);
        for (slot, &r) in sorted_lms.iter_mut().zip(&rec_sa) {
            *slot = lms[r];
        }
        induce(&mut sa, &sorted_lms);
    }
    sa
}
