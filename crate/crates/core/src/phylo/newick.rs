//! Newick reading and writing.

use std::fmt::Write as _;

use super::tree::Tree;
use crate::error::{Error, Result};

impl Tree {
    /// Writes the tree rooted at `root` with six-decimal branch lengths.
    pub fn to_newick_from(&self, root: usize) -> String {
        let mut out = String::new();
        self.write_subtree(root, usize::MAX, &mut out);
        out.push(';');
        out
    }

    /// Writes the tree rooted at its last internal node (or its only node).
    pub fn to_newick(&self) -> String {
        let root = (0..self.node_count())
            .rev()
            .find(|&v| self.name(v).is_none())
            .unwrap_or(0);
        self.to_newick_from(root)
    }

    fn write_subtree(&self, v: usize, from: usize, out: &mut String) {
        let children: Vec<(usize, f64)> = self.neighbors(v).filter(|&(u, _)| u != from).collect();
        if !children.is_empty() {
            out.push('(');
            for (i, &(u, len)) in children.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                self.write_subtree(u, v, out);
                let _ = write!(out, ":{len:.6}");
            }
            out.push(')');
        }
        if let Some(name) = self.name(v) {
            out.push_str(&quote(name));
        }
    }

    /// Parses a Newick string. Internal node labels are ignored; missing
    /// branch lengths are read as zero.
    pub fn from_newick(s: &str) -> Result<Tree> {
        let mut p = Parser {
            chars: s.trim().chars().collect(),
            pos: 0,
            tree: Tree::new(),
        };
        let root = p.subtree()?;
        p.skip_ws();
        if p.peek() == Some(':') {
            p.pos += 1;
            p.length()?;
        }
        p.skip_ws();
        if p.peek() != Some(';') {
            return Err(Error::Newick(format!("expected ';' at offset {}", p.pos)));
        }
        p.pos += 1;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(Error::Newick("trailing characters after ';'".into()));
        }
        let mut tree = p.tree;
        // A degree-1 unnamed root only adds a trivial edge.
        if tree.name(root).is_none() && tree.degree(root) == 1 {
            let (child, _) = tree.nodes[root].edges[0];
            tree.nodes[child].edges.retain(|&(u, _)| u != root);
            tree.nodes[root].edges.clear();
        }
        let mut names = tree.leaf_names();
        let total = names.len();
        names.dedup();
        if names.len() != total {
            return Err(Error::Newick("duplicate leaf names".into()));
        }
        Ok(tree)
    }
}

fn quote(name: &str) -> String {
    if name.chars().any(|c| "()[]':;, \t".contains(c)) {
        format!("'{}'", name.replace('\'', "''"))
    } else {
        name.to_string()
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    tree: Tree,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn subtree(&mut self) -> Result<usize> {
        self.skip_ws();
        if self.peek() == Some('(') {
            self.pos += 1;
            let node = self.tree.add_internal();
            loop {
                let child = self.subtree()?;
                self.skip_ws();
                let len = if self.peek() == Some(':') {
                    self.pos += 1;
                    self.length()?
                } else {
                    0.0
                };
                self.tree.connect(node, child, len);
                self.skip_ws();
                match self.peek() {
                    Some(',') => self.pos += 1,
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => {
                        return Err(Error::Newick(format!(
                            "expected ',' or ')' at offset {}",
                            self.pos
                        )))
                    }
                }
            }
            // internal label (e.g. support value), discarded
            self.label()?;
            Ok(node)
        } else {
            let name = self.label()?;
            if name.is_empty() {
                return Err(Error::Newick(format!(
                    "unnamed leaf at offset {}",
                    self.pos
                )));
            }
            Ok(self.tree.add_leaf(name))
        }
    }

    fn label(&mut self) -> Result<String> {
        self.skip_ws();
        if self.peek() == Some('\'') {
            self.pos += 1;
            let mut out = String::new();
            loop {
                match self.peek() {
                    None => return Err(Error::Newick("unterminated quoted label".into())),
                    Some('\'') if self.chars.get(self.pos + 1) == Some(&'\'') => {
                        out.push('\'');
                        self.pos += 2;
                    }
                    Some('\'') => {
                        self.pos += 1;
                        return Ok(out);
                    }
                    Some(c) => {
                        out.push(c);
                        self.pos += 1;
                    }
                }
            }
        }
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| !"():,;".contains(c) && !c.is_whitespace())
        {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn length(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_digit() || "+-.eE".contains(c))
        {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| Error::Newick(format!("bad branch length {text:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phylo::rf_distance;

    #[test]
    fn round_trip() {
        let s = "((a:0.100000,b:0.200000):0.050000,c:0.300000,d:0.400000);";
        let t = Tree::from_newick(s).unwrap();
        assert_eq!(t.leaf_names(), ["a", "b", "c", "d"]);
        assert_eq!(t.splits().len(), 1);
        let again = Tree::from_newick(&t.to_newick()).unwrap();
        assert_eq!(rf_distance(&t, &again).unwrap(), 0);
        assert_eq!(t.to_newick(), t.to_newick());
    }

    #[test]
    fn rooted_input_is_treated_as_unrooted() {
        let rooted = Tree::from_newick("((a,b),(c,d));").unwrap();
        let unrooted = Tree::from_newick("(a,b,(c,d));").unwrap();
        assert_eq!(rf_distance(&rooted, &unrooted).unwrap(), 0);
        assert!(rooted.is_binary());
    }

    #[test]
    fn labels_and_whitespace() {
        let t = Tree::from_newick(" ( 'x y':1, b:2e-1 ,(c,d)90:0.5 ) ;\n").unwrap();
        assert_eq!(t.leaf_names(), ["b", "c", "d", "x y"]);
        assert!(t.to_newick().contains("'x y'"));
    }

    #[test]
    fn malformed() {
        for bad in ["(a,b", "(a,b);x", "(a,,b);", "(a:x,b);", "(a,a,b);", ""] {
            assert!(Tree::from_newick(bad).is_err(), "{bad}");
        }
    }
}
