use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Width of the name field in strict PHYLIP.
pub const PHYLIP_NAME_WIDTH: usize = 10;

/// A symmetric matrix of distances with zero diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    ids: Vec<String>,
    values: Vec<f64>,
}

impl DistanceMatrix {
    /// A zero matrix over `ids`.
    pub fn zeros(ids: Vec<String>) -> Self {
        let k = ids.len();
        Self {
            ids,
            values: vec![0.0; k * k],
        }
    }

    /// Builds a matrix from full rows, checking shape, symmetry and the diagonal.
    pub fn from_rows(ids: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        let k = ids.len();
        if rows.len() != k || rows.iter().any(|r| r.len() != k) {
            return Err(Error::Phylip(format!("expected a {k}x{k} matrix")));
        }
        for (i, row) in rows.iter().enumerate() {
            if row[i] != 0.0 {
                return Err(Error::Phylip(format!("non-zero diagonal in row {}", i + 1)));
            }
            for (j, other) in rows.iter().enumerate().take(i) {
                if row[j] != other[i] {
                    return Err(Error::Phylip(format!(
                        "asymmetric entries at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self {
            ids,
            values: rows.into_iter().flatten().collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.len() + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let k = self.len();
        self.values[i * k + j] = v;
        self.values[j * k + i] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        let k = self.len();
        &self.values[i * k..(i + 1) * k]
    }
}

/// Writes a square strict-PHYLIP matrix. Names are left-aligned in a
/// 10-character field (longer names are truncated); each value is written
/// as a space followed by fixed notation with six decimals.
///
/// Returns the number of truncated names.
pub fn write_phylip<W: Write>(matrix: &DistanceMatrix, mut out: W) -> Result<usize> {
    let mut truncated = 0;
    let mut buf = String::new();
    buf.push_str(&format!("{}\n", matrix.len()));
    for (i, id) in matrix.ids().iter().enumerate() {
        if id.is_empty() {
            return Err(Error::EmptyName);
        }
        let name: String = id.chars().take(PHYLIP_NAME_WIDTH).collect();
        if name.len() < id.len() {
            truncated += 1;
        }
        buf.push_str(&format!("{name:<PHYLIP_NAME_WIDTH$}"));
        for v in matrix.row(i) {
            buf.push_str(&format!(" {v:.6}"));
        }
        buf.push('\n');
    }
    out.write_all(buf.as_bytes())?;
    out.flush()?;
    Ok(truncated)
}

/// Reads a square PHYLIP matrix. Strict 10-character names are accepted, as
/// are relaxed lines whose name is the first whitespace-delimited token.
pub fn read_phylip<R: BufRead>(reader: R) -> Result<DistanceMatrix> {
    let mut lines = reader
        .lines()
        .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()));
    let header = lines
        .next()
        .ok_or_else(|| Error::Phylip("missing taxon count".into()))??;
    let k: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Phylip(format!("bad taxon count {:?}", header.trim())))?;
    let mut ids = Vec::with_capacity(k);
    let mut rows = Vec::with_capacity(k);
    for r in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| Error::Phylip(format!("missing row {}", r + 1)))??;
        let (name, row) = parse_row(&line, k)
            .ok_or_else(|| Error::Phylip(format!("bad row {}: {line:?}", r + 1)))?;
        if name.is_empty() {
            return Err(Error::EmptyName);
        }
        ids.push(name);
        rows.push(row);
    }
    DistanceMatrix::from_rows(ids, rows)
}

fn parse_row(line: &str, k: usize) -> Option<(String, Vec<f64>)> {
    let values = |s: &str| -> Option<Vec<f64>> {
        let v: Vec<f64> = s
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .ok()?;
        (v.len() == k).then_some(v)
    };
    if let Some((cut, _)) = line.char_indices().nth(PHYLIP_NAME_WIDTH) {
        if let Some(v) = values(&line[cut..]) {
            return Some((line[..cut].trim().to_string(), v));
        }
    }
    let mut parts = line.splitn(2, char::is_whitespace);
    let name = parts.next()?.to_string();
    Some((name, values(parts.next().unwrap_or(""))?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn written(m: &DistanceMatrix) -> String {
        let mut buf = Vec::new();
        write_phylip(m, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn two_taxa_layout() {
        let mut m = DistanceMatrix::zeros(vec!["s1".into(), "s2".into()]);
        m.set(0, 1, 0.5);
        assert_eq!(
            written(&m),
            "2\ns1         0.000000 0.500000\ns2         0.500000 0.000000\n"
        );
    }

    #[test]
    fn single_taxon() {
        let m = DistanceMatrix::zeros(vec!["only".into()]);
        assert_eq!(written(&m), "1\nonly       0.000000\n");
    }

    #[test]
    fn six_decimal_rounding() {
        let mut m = DistanceMatrix::zeros(vec!["a".into(), "b".into()]);
        m.set(0, 1, 13.0 / 18.0);
        assert!(written(&m).contains(" 0.722222\n"));
        m.set(0, 1, 31.0 / 36.0);
        assert!(written(&m).contains(" 0.861111\n"));
    }

    #[test]
    fn long_names_are_truncated() {
        let m = DistanceMatrix::zeros(vec!["abcdefghijklmno".into()]);
        let mut buf = Vec::new();
        assert_eq!(write_phylip(&m, &mut buf).unwrap(), 1);
        assert_eq!(String::from_utf8(buf).unwrap(), "1\nabcdefghij 0.000000\n");
    }

    #[test]
    fn empty_name_is_an_error() {
        let m = DistanceMatrix::zeros(vec![String::new()]);
        assert!(matches!(
            write_phylip(&m, Vec::new()),
            Err(Error::EmptyName)
        ));
    }

    #[test]
    fn read_back_strict_and_relaxed() {
        let mut m = DistanceMatrix::zeros(vec!["s1".into(), "a long na".into(), "x".into()]);
        m.set(0, 1, 0.25);
        m.set(1, 2, 1.5);
        let back = read_phylip(written(&m).as_bytes()).unwrap();
        assert_eq!(back, m);
        let relaxed = "2\nalpha_long_name 0 1\nb 1 0\n";
        let r = read_phylip(relaxed.as_bytes()).unwrap();
        assert_eq!(r.ids(), ["alpha_long_name", "b"]);
        assert_eq!(r.get(0, 1), 1.0);
    }

    #[test]
    fn read_rejects_bad_input() {
        assert!(read_phylip("".as_bytes()).is_err());
        assert!(read_phylip("2\na 0 1\n".as_bytes()).is_err());
        assert!(read_phylip("2\na 0 1\nb 2 0\n".as_bytes()).is_err());
        assert!(read_phylip("x\n".as_bytes()).is_err());
    }
}
