//! Minimal absent words.
//!
//! A word `aub` (letters `a`, `b`, possibly empty `u`) is a minimal absent
//! word of `y` when `aub` does not occur in `y` but `au` and `ub` do. Every
//! such `u` is right-branching in `y` (followed by `b` somewhere and, after
//! the occurrence preceded by `a`, by a different letter or the end of `y`),
//! so all MAWs are found by visiting the internal nodes of the suffix tree,
//! simulated here as LCP intervals over the suffix array.
//!
//! Each word is stored as a [`MawTuple`] `⟨a, i, j⟩` meaning `a · y[i..=j]`.

pub mod oracle;

use crate::error::{Error, Result};
use crate::suffix::SuffixStructures;
use crate::text::{Alphabet, Text};

/// `letter · reference[start..=end]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MawTuple {
    pub letter: u32,
    pub start: usize,
    pub end: usize,
}

impl MawTuple {
    /// Length of the decoded word.
    #[inline]
    pub fn len(&self) -> usize {
        self.end - self.start + 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The MAW set of one text, in tuple form.
#[derive(Clone, Debug)]
pub struct MawSet {
    reference: Text,
    alphabet: Alphabet,
    tuples: Vec<MawTuple>,
    period: Option<usize>,
}

impl MawSet {
    /// Text the tuples index into (`x`, or `xx` for a circular set).
    pub fn reference(&self) -> &Text {
        &self.reference
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn tuples(&self) -> &[MawTuple] {
        &self.tuples
    }

    /// Length of the circular word this set was built for, if any.
    pub fn declared_period(&self) -> Option<usize> {
        self.period
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Decodes one tuple of this set as letter codes.
    pub fn decode(&self, t: &MawTuple) -> Vec<u32> {
        decode(t, &self.reference)
    }

    /// All words as letter codes, in tuple order.
    pub fn words(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        self.tuples.iter().map(|t| self.decode(t))
    }

    /// All words as raw symbols, sorted lexicographically.
    pub fn sorted_symbol_words(&self) -> Vec<Vec<u8>> {
        let mut words: Vec<Vec<u8>> = self.words().map(|w| self.alphabet.decode(&w)).collect();
        words.sort_unstable();
        words
    }

    /// Keeps only words of length at most `max_len`.
    pub fn truncated(&self, max_len: usize) -> MawSet {
        MawSet {
            reference: self.reference.clone(),
            alphabet: self.alphabet.clone(),
            tuples: self
                .tuples
                .iter()
                .copied()
                .filter(|t| t.len() <= max_len)
                .collect(),
            period: self.period,
        }
    }
}

/// `letter · reference[start..=end]` as codes.
pub fn decode(t: &MawTuple, reference: &[u32]) -> Vec<u32> {
    let mut word = Vec::with_capacity(t.len());
    word.push(t.letter);
    word.extend_from_slice(&reference[t.start..=t.end]);
    word
}

/// Computes the minimal absent words (length ≥ 2) of a linear text.
pub fn compute_maws(text: &Text, alphabet: &Alphabet) -> Result<MawSet> {
    if text.is_empty() {
        return Err(Error::EmptyText);
    }
    alphabet.validate(text)?;
    let structures = SuffixStructures::build(text)?;
    let tuples = maw_tuples(text, &structures);
    Ok(MawSet {
        reference: text.clone(),
        alphabet: alphabet.clone(),
        tuples,
        period: None,
    })
}

/// MAWs of the circular word `x̃`: the MAWs of `xx` no longer than `|x|`.
pub fn circular_maws(text: &Text, alphabet: &Alphabet) -> Result<MawSet> {
    if text.is_empty() {
        return Err(Error::EmptySequence);
    }
    let m = text.len();
    let mut set = compute_maws(&text.doubled(), alphabet)?;
    set.tuples.retain(|t| t.len() <= m);
    set.period = Some(m);
    Ok(set)
}

/// Bitset over letter codes `1..=256`.
#[derive(Clone, Copy, Default, PartialEq, Eq)]
struct LetterSet([u64; 4]);

impl LetterSet {
    #[inline]
    fn single(code: u32) -> Self {
        let mut s = Self::default();
        s.insert(code);
        s
    }

    #[inline]
    fn insert(&mut self, code: u32) {
        let i = code as usize - 1;
        self.0[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    fn union(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a |= b;
        }
    }

    #[inline]
    fn minus(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= !b;
        }
        out
    }

    fn for_each(&self, mut f: impl FnMut(u32)) {
        for (w, &word) in self.0.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros();
                f((w as u32) * 64 + b + 1);
                bits &= bits - 1;
            }
        }
    }
}

/// A child of an LCP interval: a representative suffix start and the letters
/// preceding the suffixes below it.
#[derive(Clone, Copy)]
struct Child {
    pos: usize,
    left: LetterSet,
}

struct Node {
    depth: usize,
    first_child: usize,
}

/// Bottom-up traversal of the LCP intervals of `text`.
///
/// For a node `u` of depth `d`, `left(u)` is the set of letters `a` with `au`
/// occurring. A child reached by letter `b` has `left(child) = {a : aub
/// occurs}`, so the MAWs with middle `u` and last letter `b` are exactly
/// `left(u) \ left(child)`.
fn maw_tuples(text: &[u32], st: &SuffixStructures) -> Vec<MawTuple> {
    let n = text.len();
    let sa = st.sa();
    let lcp = st.lcp();
    let leaf = |k: usize| {
        let p = sa[k];
        Child {
            pos: p,
            left: if p > 0 {
                LetterSet::single(text[p - 1])
            } else {
                LetterSet::default()
            },
        }
    };

    let mut out = Vec::new();
    let mut children: Vec<Child> = Vec::with_capacity(n);
    let mut stack = vec![Node {
        depth: 0,
        first_child: 0,
    }];

    // Closes the top node, emits its MAWs and returns it as a child.
    let close = |node: Node, children: &mut Vec<Child>, out: &mut Vec<MawTuple>| -> Child {
        let d = node.depth;
        let kids = &children[node.first_child..];
        let mut left = LetterSet::default();
        for c in kids {
            left.union(&c.left);
        }
        if d == 0 {
            // The empty suffix is an occurrence of ε preceded by the last letter.
            left.insert(text[n - 1]);
        }
        for c in kids {
            if c.pos + d < n {
                left.minus(&c.left).for_each(|a| {
                    out.push(MawTuple {
                        letter: a,
                        start: c.pos,
                        end: c.pos + d,
                    })
                });
            }
        }
        let pos = kids[0].pos;
        children.truncate(node.first_child);
        Child { pos, left }
    };

    for k in 1..=n {
        let h = lcp.get(k).map_or(0, |&v| v as usize);
        let mut child = leaf(k - 1);
        while h < stack.last().expect("root stays on the stack").depth {
            children.push(child);
            let node = stack.pop().expect("non-root node");
            child = close(node, &mut children, &mut out);
        }
        if h > stack.last().expect("root").depth {
            stack.push(Node {
                depth: h,
                first_child: children.len(),
            });
        }
        children.push(child);
    }
    let root = stack.pop().expect("root");
    debug_assert!(stack.is_empty());
    close(root, &mut children, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn words(set: &MawSet) -> BTreeSet<String> {
        set.sorted_symbol_words()
            .into_iter()
            .map(|w| String::from_utf8(w).unwrap())
            .collect()
    }

    fn set_of(ws: &[&str]) -> BTreeSet<String> {
        ws.iter().map(|s| s.to_string()).collect()
    }

    fn linear(s: &str, letters: &str) -> MawSet {
        let a = Alphabet::new(letters.bytes()).unwrap();
        compute_maws(&a.encode(s.as_bytes()).unwrap(), &a).unwrap()
    }

    fn circular(s: &str, letters: &str) -> MawSet {
        let a = Alphabet::new(letters.bytes()).unwrap();
        circular_maws(&a.encode(s.as_bytes()).unwrap(), &a).unwrap()
    }

    #[test]
    fn abaab() {
        assert_eq!(
            words(&linear("abaab", "ab")),
            set_of(&["aaa", "aaba", "bab", "bb"])
        );
    }

    #[test]
    fn unary_text_has_single_long_maw() {
        assert_eq!(words(&linear("aaaa", "a")), set_of(&["aaaaa"]));
    }

    #[test]
    fn ab() {
        assert_eq!(words(&linear("ab", "ab")), set_of(&["aa", "ba", "bb"]));
    }

    #[test]
    fn letters_missing_from_text_produce_nothing() {
        assert_eq!(words(&linear("aaaa", "ab")), set_of(&["aaaaa"]));
    }

    #[test]
    fn single_letter_text() {
        assert_eq!(words(&linear("a", "ab")), set_of(&["aa"]));
    }

    #[test]
    fn circular_abaab() {
        let set = circular("abaab", "ab");
        assert_eq!(words(&set), set_of(&["aaa", "aabaa", "babab", "bb"]));
        assert_eq!(set.declared_period(), Some(5));
    }

    #[test]
    fn circular_unary_is_empty() {
        assert!(circular("aaaa", "a").is_empty());
    }

    #[test]
    fn circular_ab() {
        assert_eq!(words(&circular("ab", "ab")), set_of(&["aa", "bb"]));
    }

    #[test]
    fn decode_follows_tuple_layout() {
        let a = Alphabet::new(*b"ab").unwrap();
        let y = a.encode(b"abaab").unwrap();
        let t = MawTuple {
            letter: 2,
            start: 1,
            end: 1,
        };
        assert_eq!(a.decode(&decode(&t, &y)), b"bb");
        let x = a.encode(b"ab").unwrap();
        let t = MawTuple {
            letter: 1,
            start: 0,
            end: 0,
        };
        assert_eq!(a.decode(&decode(&t, &x)), b"aa");
        // every tuple of the computed set decodes to a member of the set
        let set = linear("abaab", "ab");
        for t in set.tuples() {
            let w = String::from_utf8(a.decode(&set.decode(t))).unwrap();
            assert!(words(&set).contains(&w));
            assert_eq!(w.len(), t.len());
        }
    }

    #[test]
    fn empty_inputs() {
        let a = Alphabet::new(*b"ab").unwrap();
        assert!(matches!(
            compute_maws(&Text::default(), &a),
            Err(Error::EmptyText)
        ));
        assert!(matches!(
            circular_maws(&Text::default(), &a),
            Err(Error::EmptySequence)
        ));
    }

    #[test]
    fn codes_outside_alphabet() {
        let a = Alphabet::new(*b"ab").unwrap();
        assert!(matches!(
            compute_maws(&Text::new(vec![1, 3]), &a),
            Err(Error::InvalidCode {
                code: 3,
                position: 1
            })
        ));
    }

    #[test]
    fn truncation_filters_by_length() {
        let set = linear("abaab", "ab").truncated(3);
        assert_eq!(words(&set), set_of(&["aaa", "bab", "bb"]));
    }
}
