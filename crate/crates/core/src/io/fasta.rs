use std::collections::HashSet;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::text::{Alphabet, Text};

/// A named sequence of raw (uppercased) symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    pub id: String,
    pub symbols: Vec<u8>,
}

impl Sequence {
    pub fn new(id: impl Into<String>, symbols: impl Into<Vec<u8>>) -> Self {
        Self {
            id: id.into(),
            symbols: symbols.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn encode(&self, alphabet: &Alphabet) -> Result<Text> {
        alphabet.encode(&self.symbols).map_err(|e| match e {
            Error::SymbolNotInAlphabet { symbol, .. } => {
                Error::RecordSymbol(self.id.clone(), symbol)
            }
            other => other,
        })
    }
}

/// Where the alphabet of a dataset comes from.
#[derive(Clone, Debug, Default)]
#[allow(clippy::large_enum_variant)]
pub enum AlphabetChoice {
    /// Every distinct ASCII letter occurring in the dataset.
    #[default]
    Auto,
    Fixed(Alphabet),
}

/// A parsed and validated dataset.
#[derive(Clone, Debug)]
pub struct ParsedFasta {
    pub sequences: Vec<Sequence>,
    pub alphabet: Alphabet,
    /// Symbols removed in lenient mode.
    pub stripped: usize,
}

/// Reads MultiFASTA records.
///
/// The id is the first whitespace-delimited token of the header. Sequence
/// lines are concatenated with whitespace removed and ASCII letters
/// uppercased. Symbols outside the alphabet are an error unless `lenient`,
/// in which case they are dropped and counted.
pub fn parse_fasta<R: BufRead>(
    reader: R,
    alphabet: &AlphabetChoice,
    lenient: bool,
) -> Result<ParsedFasta> {
    let mut records: Vec<Sequence> = Vec::new();
    let mut ids = HashSet::new();
    for (index, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = index + 1;
        if let Some(header) = line.strip_prefix('>') {
            let id = header
                .split_whitespace()
                .next()
                .ok_or(Error::MissingId(lineno))?
                .to_string();
            if !ids.insert(id.clone()) {
                return Err(Error::DuplicateId(id));
            }
            records.push(Sequence::new(id, Vec::new()));
        } else {
            let data = line
                .bytes()
                .filter(|b| !b.is_ascii_whitespace())
                .map(|b| b.to_ascii_uppercase());
            match records.last_mut() {
                Some(rec) => rec.symbols.extend(data),
                None if line.trim().is_empty() => {}
                None => return Err(Error::DataBeforeHeader(lineno)),
            }
        }
    }

    let alphabet = match alphabet {
        AlphabetChoice::Fixed(a) => a.clone(),
        AlphabetChoice::Auto => {
            let letters: Vec<u8> = records
                .iter()
                .flat_map(|r| r.symbols.iter().copied())
                .filter(u8::is_ascii_alphabetic)
                .collect();
            match Alphabet::new(letters) {
                Ok(a) => a,
                Err(_) if records.is_empty() => Alphabet::dna(),
                Err(_) => return Err(Error::EmptyRecord(records[0].id.clone())),
            }
        }
    };

    let mut stripped = 0;
    for rec in &mut records {
        if let Some(&bad) = rec.symbols.iter().find(|&&b| !alphabet.contains(b)) {
            if !lenient {
                return Err(Error::RecordSymbol(rec.id.clone(), bad as char));
            }
            let before = rec.symbols.len();
            rec.symbols.retain(|&b| alphabet.contains(b));
            stripped += before - rec.symbols.len();
        }
        if rec.symbols.is_empty() {
            return Err(Error::EmptyRecord(rec.id.clone()));
        }
    }

    Ok(ParsedFasta {
        sequences: records,
        alphabet,
        stripped,
    })
}

/// Writes records with 60 symbols per line.
pub fn write_fasta<W: Write>(sequences: &[Sequence], mut out: W) -> Result<()> {
    for s in sequences {
        writeln!(out, ">{}", s.id)?;
        for chunk in s.symbols.chunks(60) {
            out.write_all(chunk)?;
            out.write_all(b"\n")?;
        }
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parse(s: &str) -> Result<ParsedFasta> {
        parse_fasta(s.as_bytes(), &AlphabetChoice::Auto, false)
    }

    #[test]
    fn multiline_records() {
        let p = parse(">s1\nAC\nGT\n>s2\nTTAA\n").unwrap();
        assert_eq!(
            p.sequences,
            vec![Sequence::new("s1", *b"ACGT"), Sequence::new("s2", *b"TTAA")]
        );
        assert_eq!(p.alphabet, Alphabet::dna());
    }

    #[test]
    fn header_token_and_uppercase() {
        let p = parse(">s1 desc here\nacgt\n").unwrap();
        assert_eq!(p.sequences, vec![Sequence::new("s1", *b"ACGT")]);
    }

    #[test]
    fn duplicate_id() {
        assert!(matches!(parse(">a\nAC\n>a\nGG\n"), Err(Error::DuplicateId(id)) if id == "a"));
    }

    #[test]
    fn empty_record() {
        assert!(matches!(parse(">a\n>b\nAC\n"), Err(Error::EmptyRecord(id)) if id == "a"));
    }

    #[test]
    fn data_before_header() {
        assert!(matches!(
            parse("ACGT\n>a\nAC\n"),
            Err(Error::DataBeforeHeader(1))
        ));
        assert!(parse("\n>a\nAC\n").is_ok());
    }

    #[test]
    fn missing_id() {
        assert!(matches!(parse(">\nAC\n"), Err(Error::MissingId(1))));
    }

    #[test]
    fn fixed_alphabet_rejects_or_strips() {
        let dna = AlphabetChoice::Fixed(Alphabet::dna());
        let input = ">a\nACNGT\n>b\nNNA\n";
        assert!(matches!(
            parse_fasta(input.as_bytes(), &dna, false),
            Err(Error::RecordSymbol(id, 'N')) if id == "a"
        ));
        let p = parse_fasta(input.as_bytes(), &dna, true).unwrap();
        assert_eq!(p.stripped, 3);
        assert_eq!(p.sequences[0].symbols, b"ACGT");
        assert_eq!(p.sequences[1].symbols, b"A");
    }

    #[test]
    fn auto_alphabet_excludes_non_letters() {
        let input = ">a\nAC-GT\n";
        assert!(matches!(parse(input), Err(Error::RecordSymbol(_, '-'))));
        let p = parse_fasta(input.as_bytes(), &AlphabetChoice::Auto, true).unwrap();
        assert_eq!(p.sequences[0].symbols, b"ACGT");
    }

    #[test]
    fn lenient_strip_to_empty_is_an_error() {
        let dna = AlphabetChoice::Fixed(Alphabet::dna());
        assert!(matches!(
            parse_fasta(">a\nNNN\n".as_bytes(), &dna, true),
            Err(Error::EmptyRecord(_))
        ));
    }

    proptest! {
        #[test]
        fn write_then_parse_round_trips(
            seqs in prop::collection::vec(("[a-z][a-z0-9_]{0,8}", "[ACGT]{1,200}"), 1..6)
        ) {
            let mut seen = HashSet::new();
            let seqs: Vec<Sequence> = seqs
                .into_iter()
                .filter(|(id, _)| seen.insert(id.clone()))
                .map(|(id, s)| Sequence::new(id, s.into_bytes()))
                .collect();
            let mut buf = Vec::new();
            write_fasta(&seqs, &mut buf).unwrap();
            let parsed = parse_fasta(buf.as_slice(), &AlphabetChoice::Fixed(Alphabet::dna()), false).unwrap();
            prop_assert_eq!(parsed.sequences, seqs);
        }
    }
}
