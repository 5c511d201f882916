//! Brute-force reference implementations, used to check the suffix-array
//! based computations on small inputs. All functions work on letter codes
//! `1..=sigma` and return sets of decoded words.

use std::collections::{BTreeSet, HashSet};

pub type WordSet = BTreeSet<Vec<u32>>;

/// All factors (including the empty word) of `text` with length at most `max_len`.
fn factors(text: &[u32], max_len: usize) -> HashSet<Vec<u32>> {
    let mut set = HashSet::new();
    set.insert(Vec::new());
    for i in 0..text.len() {
        for j in i + 1..=text.len().min(i + max_len) {
            set.insert(text[i..j].to_vec());
        }
    }
    set
}

/// Minimal absent words of a factorial language given by its members.
fn minimal_absent(language: &HashSet<Vec<u32>>, sigma: u32) -> WordSet {
    let mut out = WordSet::new();
    for u in language {
        for a in 1..=sigma {
            let mut au = vec![a];
            au.extend_from_slice(u);
            if !language.contains(&au) {
                continue;
            }
            for b in 1..=sigma {
                let mut ub = u.clone();
                ub.push(b);
                let mut aub = au.clone();
                aub.push(b);
                if language.contains(&ub) && !language.contains(&aub) {
                    out.insert(aub);
                }
            }
        }
    }
    out
}

/// `{ aub : aub ∉ F(text), au, ub ∈ F(text) }`.
pub fn brute_force_maws(text: &[u32], sigma: u32) -> WordSet {
    if text.is_empty() {
        return WordSet::new();
    }
    minimal_absent(&factors(text, text.len()), sigma)
}

/// MAWs of the language of factors of `x^k` for all `k`.
pub fn brute_force_circular_maws(x: &[u32], sigma: u32) -> WordSet {
    let m = x.len();
    if m == 0 {
        return WordSet::new();
    }
    // Any member of length ≤ m + 2 is a factor of x repeated this often.
    let limit = m + 2;
    let reps = limit.div_ceil(m) + 1;
    let power: Vec<u32> = x.iter().copied().cycle().take(m * reps).collect();
    let language = factors(&power, limit);
    minimal_absent(&language, sigma)
        .into_iter()
        // longer candidates are absent only because of the length cap
        .filter(|w| w.len() <= limit)
        .collect()
}

/// MAWs of the finite language of factors of `xx` no longer than `|x|`.
pub fn brute_force_bounded_circular_maws(x: &[u32], sigma: u32) -> WordSet {
    let m = x.len();
    if m == 0 {
        return WordSet::new();
    }
    let doubled: Vec<u32> = x.iter().chain(x).copied().collect();
    minimal_absent(&factors(&doubled, m), sigma)
}

/// Number of distinct rotations of `x`.
pub fn distinct_rotations(x: &[u32]) -> usize {
    (0..x.len())
        .map(|i| {
            let mut r = x.to_vec();
            r.rotate_left(i);
            r
        })
        .collect::<HashSet<_>>()
        .len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enc(s: &str) -> Vec<u32> {
        s.bytes().map(|b| (b - b'a' + 1) as u32).collect()
    }

    fn set(ws: &[&str]) -> WordSet {
        ws.iter().map(|w| enc(w)).collect()
    }

    #[test]
    fn linear_examples() {
        assert_eq!(
            brute_force_maws(&enc("abaab"), 2),
            set(&["aaa", "aaba", "bab", "bb"])
        );
        assert_eq!(brute_force_maws(&[], 2), WordSet::new());
        assert_eq!(brute_force_maws(&enc("aab"), 2), set(&["ba", "bb", "aaa"]));
        assert_eq!(brute_force_maws(&enc("ab"), 2), set(&["aa", "ba", "bb"]));
    }

    #[test]
    fn circular_examples() {
        assert_eq!(
            brute_force_circular_maws(&enc("abaab"), 2),
            set(&["aaa", "aabaa", "babab", "bb"])
        );
        assert_eq!(brute_force_circular_maws(&enc("a"), 1), WordSet::new());
        assert_eq!(brute_force_circular_maws(&enc("ab"), 2), set(&["aa", "bb"]));
    }

    #[test]
    fn bounded_circular_examples() {
        assert_eq!(
            brute_force_bounded_circular_maws(&enc("abaab"), 2),
            set(&["aaa", "aabaa", "aababa", "abaaba", "ababaa", "baabab", "babaab", "babab", "bb"])
        );
        assert_eq!(
            brute_force_bounded_circular_maws(&enc("aa"), 1),
            set(&["aaa"])
        );
        assert_eq!(
            brute_force_bounded_circular_maws(&enc("ab"), 2),
            set(&["aa", "aba", "bab", "bb"])
        );
    }

    #[test]
    fn rotation_counts() {
        assert_eq!(distinct_rotations(&enc("abab")), 2);
        assert_eq!(distinct_rotations(&enc("aab")), 3);
        assert_eq!(distinct_rotations(&enc("aaa")), 1);
    }
}
