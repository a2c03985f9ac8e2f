//! Text format for input data and the built-in example table.
//!
//! ```text
//! name: trefoil
//! kind: seifert
//! A: [[-1, 1], [0, -1]]
//! notes: free text to the end of the line
//! ```
//!
//! Fibred entries carry `P:` and `J:`, dual-surface entries `Iplus:`,
//! `Iminus:` and `J:`. Matrices are bracketed rows of decimal integers,
//! `[]` is the empty matrix, whitespace between tokens is ignored and `#`
//! starts a comment outside `name` and `notes` values.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::data::{DualSurfaceData, FibredData, SeifertData};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EntryKind {
    Seifert,
    Fibred,
    DualSurface,
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EntryKind::Seifert => "seifert",
            EntryKind::Fibred => "fibred",
            EntryKind::DualSurface => "dual-surface",
        })
    }
}

impl FromStr for EntryKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "seifert" => Ok(EntryKind::Seifert),
            "fibred" => Ok(EntryKind::Fibred),
            "dual-surface" => Ok(EntryKind::DualSurface),
            other => Err(format!("unknown kind `{other}`")),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EntryData {
    Seifert(SeifertData),
    Fibred(FibredData),
    DualSurface(DualSurfaceData),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub data: EntryData,
    pub notes: String,
}

impl CatalogEntry {
    pub fn kind(&self) -> EntryKind {
        match self.data {
            EntryData::Seifert(_) => EntryKind::Seifert,
            EntryData::Fibred(_) => EntryKind::Fibred,
            EntryData::DualSurface(_) => EntryKind::DualSurface,
        }
    }

    pub fn seifert(name: &str, data: SeifertData) -> Self {
        CatalogEntry {
            name: name.to_string(),
            data: EntryData::Seifert(data),
            notes: String::new(),
        }
    }

    /// Renders in the text format; [`load_entry`] reads it back unchanged.
    pub fn render(&self) -> String {
        let mut out = format!("name: {}\nkind: {}\n", self.name, self.kind());
        match &self.data {
            EntryData::Seifert(s) => out += &format!("A: {}\n", s.matrix()),
            EntryData::Fibred(f) => {
                out += &format!("P: {}\nJ: {}\n", f.monodromy(), f.intersection());
            }
            EntryData::DualSurface(d) => {
                out += &format!(
                    "Iplus: {}\nIminus: {}\nJ: {}\n",
                    d.iota_plus(),
                    d.iota_minus(),
                    d.intersection()
                );
            }
        }
        if !self.notes.is_empty() {
            out += &format!("notes: {}\n", self.notes);
        }
        out
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

struct Scanner<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src,
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_trivia();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn word(&mut self) -> String {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
        {
            self.bump();
        }
        self.src[start..self.pos].to_string()
    }

    fn rest_of_line(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c != '\n') {
            self.bump();
        }
        self.src[start..self.pos].trim().to_string()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_trivia();
        let (line, col) = (self.line, self.col);
        let start = self.pos;
        if self.peek() == Some('-') {
            self.bump();
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        self.src[start..self.pos].parse().map_err(|_| Error::Parse {
            line,
            column: col,
            message: "expected an integer".into(),
        })
    }

    fn row(&mut self) -> Result<Vec<BigInt>> {
        self.expect('[')?;
        let mut row = Vec::new();
        self.skip_trivia();
        if self.peek() == Some(']') {
            self.bump();
            return Ok(row);
        }
        loop {
            row.push(self.integer()?);
            self.skip_trivia();
            match self.bump() {
                Some(',') => continue,
                Some(']') => return Ok(row),
                _ => return Err(self.error("expected `,` or `]` in matrix row")),
            }
        }
    }

    fn matrix(&mut self) -> Result<IntMatrix> {
        self.expect('[')?;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        self.skip_trivia();
        if self.peek() == Some(']') {
            self.bump();
            return Ok(IntMatrix::zeros(0, 0));
        }
        loop {
            self.skip_trivia();
            let (line, col) = (self.line, self.col);
            let row = self.row()?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::Parse {
                        line,
                        column: col,
                        message: format!("row has {} entries, expected {}", row.len(), first.len()),
                    });
                }
            }
            rows.push(row);
            self.skip_trivia();
            match self.bump() {
                Some(',') => continue,
                Some(']') => break,
                _ => return Err(self.error("expected `,` or `]` after matrix row")),
            }
        }
        IntMatrix::from_rows(rows)
    }
}

/// Parses and validates one entry.
pub fn load_entry(text: &str) -> Result<CatalogEntry> {
    let mut sc = Scanner::new(text);
    let mut name = None;
    let mut kind = None;
    let mut notes = String::new();
    let mut matrices: BTreeMap<String, (IntMatrix, usize, usize)> = BTreeMap::new();

    loop {
        sc.skip_trivia();
        if sc.peek().is_none() {
            break;
        }
        let (line, col) = (sc.line, sc.col);
        let key = sc.word();
        if key.is_empty() {
            return Err(sc.error(format!("expected a field name, found `{}`", sc.peek().unwrap())));
        }
        sc.expect(':')?;
        let duplicate = || Error::Parse {
            line,
            column: col,
            message: format!("duplicate field `{key}`"),
        };
        match key.as_str() {
            "name" => {
                if name.is_some() {
                    return Err(duplicate());
                }
                name = Some(sc.rest_of_line());
            }
            "notes" => notes = sc.rest_of_line(),
            "kind" => {
                if kind.is_some() {
                    return Err(duplicate());
                }
                sc.skip_trivia();
                let (kl, kc) = (sc.line, sc.col);
                let word = sc.word();
                kind = Some(word.parse::<EntryKind>().map_err(|message| Error::Parse {
                    line: kl,
                    column: kc,
                    message,
                })?);
            }
            "A" | "P" | "J" | "Iplus" | "Iminus" => {
                if matrices.contains_key(&key) {
                    return Err(duplicate());
                }
                let m = sc.matrix()?;
                matrices.insert(key, (m, line, col));
            }
            other => {
                return Err(Error::Parse {
                    line,
                    column: col,
                    message: format!("unknown field `{other}`"),
                })
            }
        }
    }

    let name = name.ok_or_else(|| sc.error("missing field `name`"))?;
    let kind = kind.ok_or_else(|| sc.error("missing field `kind`"))?;
    let wanted: &[&str] = match kind {
        EntryKind::Seifert => &["A"],
        EntryKind::Fibred => &["J", "P"],
        EntryKind::DualSurface => &["Iminus", "Iplus", "J"],
    };
    if let Some((key, (_, line, col))) = matrices.iter().find(|(k, _)| !wanted.contains(&k.as_str())) {
        return Err(Error::Parse {
            line: *line,
            column: *col,
            message: format!("field `{key}` does not belong to kind {kind}"),
        });
    }
    let mut take = |key: &str| {
        matrices
            .remove(key)
            .map(|(m, _, _)| m)
            .ok_or_else(|| sc.error(format!("missing field `{key}` for kind {kind}")))
    };
    let data = match kind {
        EntryKind::Seifert => EntryData::Seifert(SeifertData::new(take("A")?)?),
        EntryKind::Fibred => {
            let (p, j) = (take("P")?, take("J")?);
            EntryData::Fibred(FibredData::new(p, j)?)
        }
        EntryKind::DualSurface => {
            let (ip, im, j) = (take("Iplus")?, take("Iminus")?, take("J")?);
            EntryData::DualSurface(DualSurfaceData::new(ip, im, j)?)
        }
    };
    Ok(CatalogEntry { name, data, notes })
}

fn int(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64_rows(rows).expect("rectangular literal")
}

/// Small examples. Seifert matrices use `a_ij = lk(d_i, d_j^+)`, the
/// transpose of the Kearton/Levine convention.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    let standard = int(&[&[0, 1], &[-1, 0]]);
    let trefoil = int(&[&[-1, 1], &[0, -1]]);
    let entry = |name: &str, data: EntryData, notes: &str| CatalogEntry {
        name: name.into(),
        data,
        notes: notes.into(),
    };
    vec![
        entry(
            "unknot",
            EntryData::Seifert(SeifertData::unknot()),
            "genus 0, trivial Alexander module",
        ),
        entry(
            "trefoil",
            EntryData::Seifert(SeifertData::new(trefoil.clone()).unwrap()),
            "genus 1 Seifert surface",
        ),
        entry(
            "figure-eight",
            EntryData::Seifert(SeifertData::new(int(&[&[1, 1], &[0, -1]])).unwrap()),
            "genus 1 Seifert surface",
        ),
        entry(
            "cinquefoil",
            EntryData::Seifert(
                SeifertData::new(int(&[
                    &[-1, 1, 0, 0],
                    &[0, -1, 1, 0],
                    &[0, 0, -1, 1],
                    &[0, 0, 0, -1],
                ]))
                .unwrap(),
            ),
            "torus knot T(2,5), genus 2",
        ),
        entry(
            "trefoil-fibred",
            EntryData::Fibred(FibredData::new(int(&[&[1, -1], &[1, 0]]), standard.clone()).unwrap()),
            "punctured torus bundle with monodromy of order 6",
        ),
        entry(
            "figure-eight-fibred",
            EntryData::Fibred(FibredData::new(int(&[&[2, 1], &[1, 1]]), standard).unwrap()),
            "punctured torus bundle with Anosov monodromy",
        ),
        entry(
            "trefoil-dual",
            EntryData::DualSurface(
                DualSurfaceData::new(
                    trefoil.clone(),
                    trefoil.transpose(),
                    trefoil.checked_sub(&trefoil.transpose()).unwrap(),
                )
                .unwrap(),
            ),
            "Seifert surface of the trefoil as a dual surface: Iplus = A, Iminus = A^T, J = A - A^T",
        ),
    ]
}

pub fn lookup_builtin(name: &str) -> Result<CatalogEntry> {
    builtin_catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_file() {
        let e = load_entry("name: trefoil\nkind: seifert\nA: [[-1,1],[0,-1]]\n").unwrap();
        assert_eq!(e.name, "trefoil");
        match &e.data {
            EntryData::Seifert(s) => assert_eq!(s.matrix(), &int(&[&[-1, 1], &[0, -1]])),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknot_file() {
        let e = load_entry("name: unknot\nkind: seifert\nA: []\n").unwrap();
        assert_eq!(e.data, EntryData::Seifert(SeifertData::unknot()));
    }

    #[test]
    fn non_skew_intersection_form() {
        let text = "name: bad\nkind: fibred\nP: [[1,0],[0,1]]  J: [[0,1],[1,0]]\n";
        match load_entry(text) {
            Err(Error::Invariant { invariant, .. }) => assert_eq!(invariant, "J skew-symmetric"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = load_entry("name: x\nkind: seifert\nA: [[1, 2], [3]]\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 13, .. }), "{err:?}");
        let err = load_entry("name: x\nkind: seifert\nA: [[1, x]]\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 9, .. }), "{err:?}");
        let err = load_entry("name: x\nkind: knot\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 7, .. }), "{err:?}");
        let err = load_entry("name: x\nkind: seifert\nP: []\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, column: 1, .. }), "{err:?}");
        assert!(matches!(load_entry("kind: seifert\nA: []"), Err(Error::Parse { .. })));
        assert!(matches!(load_entry("name: a\nname: b\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn comments_and_layout() {
        let text = "# a fixture\nname: spaced out   \nkind: fibred # comment\nP: [[1, -1],\n    [1, 0]]\nJ: [[0,1],[-1,0]]\nnotes: anything # kept\n";
        let e = load_entry(text).unwrap();
        assert_eq!(e.name, "spaced out");
        assert_eq!(e.notes, "anything # kept");
        assert_eq!(e.kind(), EntryKind::Fibred);
    }

    #[test]
    fn builtins_round_trip() {
        for e in builtin_catalog() {
            assert_eq!(load_entry(&e.render()).unwrap(), e, "{}", e.name);
        }
        let expected = ["unknot", "trefoil", "figure-eight", "trefoil-fibred"];
        for name in expected {
            assert!(lookup_builtin(name).is_ok());
        }
        assert_eq!(lookup_builtin("nope"), Err(Error::UnknownEntry("nope".into())));
    }

    #[test]
    fn random_entries_round_trip() {
        for seed in 0..20 {
            let e = CatalogEntry::seifert("random", crate::random::random_seifert(seed as usize % 4, 3, seed));
            assert_eq!(load_entry(&e.render()).unwrap(), e);
        }
    }

    #[test]
    fn render_format() {
        let e = lookup_builtin("trefoil-fibred").unwrap();
        assert_eq!(
            e.render(),
            "name: trefoil-fibred\nkind: fibred\nP: [[1, -1], [1, 0]]\nJ: [[0, 1], [-1, 0]]\nnotes: punctured torus bundle with monodromy of order 6\n"
        );
    }
}
