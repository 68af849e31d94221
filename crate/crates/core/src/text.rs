//! Sectioned text payloads.
//!
//! ```text
//! # comment
//! [q1]
//! vars: x1, x2, x3
//! row: 1
//! row: 0, 1
//! row: 1/2, 0, -3
//! ```
//!
//! A section starts with `[name]`; each following line is `key: value`.
//! Quadratic forms list their Gram matrix lower-triangularly, one `row`
//! per line. Parse errors carry byte offsets into the whole payload.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::genus3::PairingData;
use crate::matrix::{PolyMatrix, RatMatrix};
use crate::poly::Poly;
use crate::quadform::QuadForm;
use crate::rational::{self, Rational};
use crate::twistor::ProjSubspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub key: String,
    pub value: String,
    /// Byte offset of `value` in the payload.
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub entries: Vec<Entry>,
    pub offset: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub sections: Vec<Section>,
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        let mut doc = Document::default();
        let mut start = 0;
        for raw in text.split_inclusive('\n') {
            let line_start = start;
            start += raw.len();
            let body = raw.split('#').next().unwrap_or("");
            let lead = body.len() - body.trim_start().len();
            let line = body.trim();
            if line.is_empty() {
                continue;
            }
            let at = line_start + lead;
            if let Some(rest) = line.strip_prefix('[') {
                let name = rest
                    .strip_suffix(']')
                    .ok_or_else(|| parse_err(at, "unterminated section header"))?
                    .trim();
                if name.is_empty() {
                    return Err(parse_err(at, "empty section name"));
                }
                doc.sections.push(Section {
                    name: name.to_string(),
                    entries: Vec::new(),
                    offset: at,
                });
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| parse_err(at, "expected `key: value`"))?;
            let section = doc
                .sections
                .last_mut()
                .ok_or_else(|| parse_err(at, "entry before any [section]"))?;
            let vlead = value.len() - value.trim_start().len();
            section.entries.push(Entry {
                key: key.trim().to_string(),
                value: value.trim().to_string(),
                offset: at + key.len() + 1 + vlead,
            });
        }
        Ok(doc)
    }

    pub fn section(&self, name: &str) -> Result<&Section> {
        self.sections
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::invalid(format!("missing [{name}] section")))
    }

    pub fn sections_named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Section> + 'a {
        self.sections.iter().filter(move |s| s.name == name)
    }
}

impl Section {
    pub fn all(&self, key: &str) -> Vec<&Entry> {
        self.entries.iter().filter(|e| e.key == key).collect()
    }

    pub fn get(&self, key: &str) -> Result<&Entry> {
        self.entries.iter().find(|e| e.key == key).ok_or_else(|| {
            parse_err(self.offset, format!("[{}] has no `{key}` entry", self.name))
        })
    }
}

impl Entry {
    pub fn poly(&self) -> Result<Poly> {
        Poly::parse(&self.value).map_err(|e| shift(e, self.offset))
    }

    /// Comma separated polynomials.
    pub fn polys(&self) -> Result<Vec<Poly>> {
        let mut out = Vec::new();
        let mut off = self.offset;
        for piece in self.value.split(',') {
            out.push(Poly::parse(piece).map_err(|e| shift(e, off))?);
            off += piece.len() + 1;
        }
        Ok(out)
    }

    pub fn rationals(&self) -> Result<Vec<Rational>> {
        let mut out = Vec::new();
        let mut off = self.offset;
        for piece in self.value.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            out.push(rational::parse(piece).map_err(|e| shift(e, off + lead))?);
            off += piece.len() + 1;
        }
        Ok(out)
    }

    pub fn names(&self) -> Vec<String> {
        self.value
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect()
    }
}

/// Lower-triangular `row` entries into a full symmetric matrix.
fn symmetric_from_rows(section: &Section, n: usize) -> Result<PolyMatrix> {
    let rows = section.all("row");
    if rows.len() != n {
        return Err(parse_err(
            section.offset,
            format!("[{}] needs {n} rows, found {}", section.name, rows.len()),
        ));
    }
    let mut m = PolyMatrix::from_fn(n, n, |_| Poly::parse("0").expect("literal"));
    for (i, row) in rows.iter().enumerate() {
        let vals = row.polys()?;
        if vals.len() != i + 1 {
            return Err(parse_err(
                row.offset,
                format!("row {} of a lower-triangular matrix needs {} entries", i + 1, i + 1),
            ));
        }
        for (j, v) in vals.into_iter().enumerate() {
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    Ok(m)
}

fn lower_rows(out: &mut String, m: &PolyMatrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = (0..=i).map(|j| m.get(i, j).to_string()).collect();
        let _ = writeln!(out, "row: {}", row.join(", "));
    }
}

pub fn write_quadform(name: &str, q: &QuadForm) -> String {
    let mut out = format!("[{name}]\nvars: {}\n", q.vars().join(", "));
    lower_rows(&mut out, q.gram());
    out
}

pub fn read_quadform(section: &Section) -> Result<QuadForm> {
    let vars = section.get("vars")?.names();
    let gram = symmetric_from_rows(section, vars.len())?;
    QuadForm::new(vars, gram)
}

pub fn write_pairing(name: &str, d: &PairingData) -> String {
    let mut out = format!("[{name}]\n");
    lower_rows(&mut out, d.q());
    let _ = writeln!(out, "p: {}", d.p());
    out
}

pub fn read_pairing(section: &Section) -> Result<PairingData> {
    let q = symmetric_from_rows(section, 4)?;
    let p = section.get("p")?.poly()?;
    PairingData::new(q, p)
}

/// Full rows, `row: a, b, …`.
pub fn write_poly_matrix(name: &str, m: &PolyMatrix) -> String {
    let mut out = format!("[{name}]\n");
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
        let _ = writeln!(out, "row: {}", row.join(", "));
    }
    out
}

pub fn read_poly_matrix(section: &Section) -> Result<PolyMatrix> {
    let rows = section.all("row");
    let parsed = rows.iter().map(|r| r.polys()).collect::<Result<Vec<_>>>()?;
    let cols = parsed.first().map_or(0, Vec::len);
    if let Some((r, _)) = rows.iter().zip(&parsed).find(|(_, p)| p.len() != cols) {
        return Err(parse_err(r.offset, "rows of different lengths"));
    }
    PolyMatrix::new(parsed.len(), cols, parsed.into_iter().flatten().collect())
}

pub fn write_rat_matrix(name: &str, m: &RatMatrix) -> String {
    let mut out = format!("[{name}]\n");
    for i in 0..m.rows() {
        let _ = writeln!(out, "row: {}", rational::format_list(&m.row(i)));
    }
    out
}

pub fn read_rat_matrix(section: &Section) -> Result<RatMatrix> {
    let rows = section
        .all("row")
        .iter()
        .map(|r| r.rationals())
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(rows)
}

/// `basis:` lines.
pub fn write_subspace(name: &str, s: &ProjSubspace) -> String {
    let mut out = format!("[{name}]\n");
    for v in s.basis() {
        let _ = writeln!(out, "basis: {}", rational::format_list(v));
    }
    out
}

pub fn read_subspace(section: &Section) -> Result<ProjSubspace> {
    let vecs = section
        .all("basis")
        .iter()
        .map(|e| e.rationals())
        .collect::<Result<Vec<_>>>()?;
    let n = vecs
        .first()
        .map(Vec::len)
        .ok_or_else(|| parse_err(section.offset, format!("[{}] has no basis vectors", section.name)))?;
    ProjSubspace::span(n, &vecs)
}
