//! Alphabets and integer-coded texts.
//!
//! Letters are coded `1..=σ` in the order of their raw byte value. Code `0`
//! is the sentinel and never appears in a text produced by [`Alphabet::encode`].

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Code reserved for the separator placed between concatenated texts.
pub const SENTINEL: u32 = 0;

/// An ordered set of distinct raw symbols.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<u8>,
    ranks: [u32; 256],
}

impl Alphabet {
    /// Builds an alphabet from any collection of symbols; duplicates are merged.
    pub fn new(symbols: impl IntoIterator<Item = u8>) -> Result<Self> {
        let mut present = [false; 256];
        for s in symbols {
            present[s as usize] = true;
        }
        let letters: Vec<u8> = (0..=255u8).filter(|&b| present[b as usize]).collect();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut ranks = [SENTINEL; 256];
        for (r, &b) in letters.iter().enumerate() {
            ranks[b as usize] = r as u32 + 1;
        }
        Ok(Self { letters, ranks })
    }

    /// The fixed nucleotide alphabet `ACGT`.
    pub fn dna() -> Self {
        Self::new(*b"ACGT").expect("non-empty")
    }

    /// Number of letters, σ.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.ranks[symbol as usize] != SENTINEL
    }

    /// Code of `symbol`, if it belongs to the alphabet.
    pub fn code(&self, symbol: u8) -> Option<u32> {
        match self.ranks[symbol as usize] {
            SENTINEL => None,
            c => Some(c),
        }
    }

    /// Raw symbol of a letter code.
    pub fn symbol(&self, code: u32) -> Option<u8> {
        (code as usize)
            .checked_sub(1)
            .and_then(|i| self.letters.get(i).copied())
    }

    pub fn encode(&self, symbols: &[u8]) -> Result<Text> {
        let codes = symbols
            .iter()
            .enumerate()
            .map(|(position, &s)| {
                self.code(s).ok_or(Error::SymbolNotInAlphabet {
                    symbol: s as char,
                    position,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Text(codes))
    }

    /// Maps codes back to raw symbols; the sentinel is rendered as `$`.
    pub fn decode(&self, codes: &[u32]) -> Vec<u8> {
        codes
            .iter()
            .map(|&c| self.symbol(c).unwrap_or(b'$'))
            .collect()
    }

    /// Checks that every code of `text` is a letter of this alphabet.
    pub fn validate(&self, text: &[u32]) -> Result<()> {
        match text
            .iter()
            .position(|&c| c == SENTINEL || c as usize > self.len())
        {
            Some(position) => Err(Error::InvalidCode {
                code: text[position],
                position,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Alphabet")
            .field(&String::from_utf8_lossy(&self.letters))
            .finish()
    }
}

/// A text over integer codes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Text(pub Vec<u32>);

impl Text {
    pub fn new(codes: Vec<u32>) -> Self {
        Self(codes)
    }

    /// The text followed by itself, `xx`.
    pub fn doubled(&self) -> Text {
        let mut codes = Vec::with_capacity(2 * self.0.len());
        codes.extend_from_slice(&self.0);
        codes.extend_from_slice(&self.0);
        Text(codes)
    }

    /// The rotation `x[i..] x[..i]`.
    pub fn rotation(&self, i: usize) -> Text {
        let mut codes = self.0.clone();
        if !codes.is_empty() {
            codes.rotate_left(i % self.0.len());
        }
        Text(codes)
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl Deref for Text {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Text {
    fn from(codes: Vec<u32>) -> Self {
        Self(codes)
    }
}
