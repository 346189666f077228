//! Line-oriented text format for structures, and rendering of check
//! reports.
//!
//! A document is a sequence of blocks. A block starts with a header line
//! beginning with `@`; the lines up to the next header are its entries.
//! `#` starts a comment. Indices are 1-based in the text and 0-based in
//! memory, and entries of a block are summed, so their order is irrelevant.
//! A name must be declared before it is referenced.
//!
//! ```text
//! @assoc F dim=1 unit=1
//! m 1 1 -> 1 : 1
//!
//! @3lie L dim=3
//! c 1 2 3 -> 1 : 1/2
//!
//! @action F on L
//! a 1 . 1 -> 1 : 1
//!
//! @rho L on F
//! ```

use std::collections::HashMap;
use std::fmt::{self, Write};

use crate::axioms::Report;
use crate::linalg::{fmt_vec, unit_vec, Matrix, Subspace, Vector};
use crate::model::{
    AAction, ActionData, CommAlgebra, CrossedModuleData, LieActionData, LieAlg, LieCrossedModule,
    LieRinehartPair, LinearFamily, PairFamily, RinehartTriple, ThreeLie,
};
use crate::scalar::Scalar;
use crate::structure::StructureConstants;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown reference `{name}`")]
    UnknownReference { line: usize, col: usize, name: String },
    #[error("{line}:{col}: index {index} out of range 1..={dim}")]
    IndexOutOfRange { line: usize, col: usize, index: usize, dim: usize },
    #[error("{line}:{col}: duplicate name `{name}`")]
    DuplicateName { line: usize, col: usize, name: String },
    /// The document parses but lacks a block an operation needs.
    #[error("{0}")]
    Missing(String),
}

/// An anchor or action family: over pairs for a 3-Lie source, over single
/// elements for a Lie source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Pair(PairFamily),
    Linear(LinearFamily),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Block {
    ThreeLie { name: String, algebra: ThreeLie },
    Lie { name: String, algebra: LieAlg },
    Assoc { name: String, algebra: CommAlgebra },
    /// `algebra` acts on `module`.
    Action { algebra: String, module: String, action: AAction },
    /// Anchor of `source` into the derivations of the algebra `target`.
    Rho { source: String, target: String, family: Family },
    /// Action of `source` on the algebra `target`.
    Beta { source: String, target: String, family: Family },
    Hom { name: String, src: String, dst: String, map: Matrix },
    Subspace { name: String, within: String, vectors: Vec<Vector> },
}

impl Block {
    fn name(&self) -> Option<&str> {
        match self {
            Block::ThreeLie { name, .. }
            | Block::Lie { name, .. }
            | Block::Assoc { name, .. }
            | Block::Hom { name, .. }
            | Block::Subspace { name, .. } => Some(name),
            _ => None,
        }
    }

    /// Key for the unnamed blocks, which may appear once per pair of names.
    fn pair_key(&self) -> Option<String> {
        match self {
            Block::Action { algebra, module, .. } => Some(format!("@action {algebra} on {module}")),
            Block::Rho { source, target, .. } => Some(format!("@rho {source} on {target}")),
            Block::Beta { source, target, .. } => Some(format!("@beta {source} on {target}")),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Document {
    pub blocks: Vec<Block>,
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Tok<'_>> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in body.char_indices().enumerate() {
        if ch.is_whitespace() {
            if let Some((b, c)) = start.take() {
                out.push(Tok { text: &body[b..byte], col: c + 1 });
            }
        } else if start.is_none() {
            start = Some((byte, col));
        }
    }
    if let Some((b, c)) = start {
        out.push(Tok { text: &body[b..], col: c + 1 });
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    ThreeLie,
    Lie,
    Assoc,
    Hom,
    Subspace,
}

struct Parser<'a> {
    line: usize,
    toks: Vec<Tok<'a>>,
    line_len: usize,
}

impl<'a> Parser<'a> {
    fn syntax(&self, col: usize, msg: impl Into<String>) -> FormatError {
        FormatError::Syntax { line: self.line, col, msg: msg.into() }
    }

    fn tok(&self, i: usize, what: &str) -> Result<Tok<'a>, FormatError> {
        self.toks.get(i).copied().ok_or_else(|| self.syntax(self.line_len + 1, format!("expected {what}")))
    }

    fn keyword(&self, i: usize, kw: &str) -> Result<(), FormatError> {
        let t = self.tok(i, &format!("`{kw}`"))?;
        if t.text != kw {
            return Err(self.syntax(t.col, format!("expected `{kw}`, found `{}`", t.text)));
        }
        Ok(())
    }

    fn arity(&self, n: usize, shape: &str) -> Result<(), FormatError> {
        if self.toks.len() > n {
            return Err(self.syntax(self.toks[n].col, format!("unexpected `{}`; expected `{shape}`", self.toks[n].text)));
        }
        if self.toks.len() < n {
            return Err(self.syntax(self.line_len + 1, format!("line ends early; expected `{shape}`")));
        }
        Ok(())
    }

    fn name(&self, i: usize) -> Result<(String, usize), FormatError> {
        let t = self.tok(i, "a name")?;
        let mut chars = t.text.chars();
        let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(self.syntax(t.col, format!("invalid name `{}`", t.text)));
        }
        Ok((t.text.to_string(), t.col))
    }

    /// 1-based index in `1..=dim`, returned 0-based.
    fn index(&self, i: usize, dim: usize) -> Result<usize, FormatError> {
        let t = self.tok(i, "an index")?;
        let v: usize = t
            .text
            .parse()
            .map_err(|_| self.syntax(t.col, format!("expected an index, found `{}`", t.text)))?;
        if v == 0 || v > dim {
            return Err(FormatError::IndexOutOfRange { line: self.line, col: t.col, index: v, dim });
        }
        Ok(v - 1)
    }

    fn scalar(&self, i: usize) -> Result<Scalar, FormatError> {
        let t = self.tok(i, "a coefficient")?;
        t.text.parse().map_err(|_| self.syntax(t.col, format!("invalid coefficient `{}`", t.text)))
    }

    fn key_value(&self, i: usize, key: &str) -> Result<usize, FormatError> {
        let t = self.tok(i, &format!("`{key}=N`"))?;
        let v = t
            .text
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix('='))
            .and_then(|r| r.parse().ok())
            .ok_or_else(|| self.syntax(t.col, format!("expected `{key}=N`, found `{}`", t.text)))?;
        Ok(v)
    }

    fn increasing(&self, first: usize, idx: &[usize], strict: bool) -> Result<(), FormatError> {
        for w in 1..idx.len() {
            if idx[w - 1] > idx[w] || (strict && idx[w - 1] == idx[w]) {
                let order = if strict { "strictly increasing" } else { "non-decreasing" };
                return Err(self.syntax(self.toks[first + w].col, format!("indices must be {order}")));
            }
        }
        Ok(())
    }
}

struct Declared {
    kind: Kind,
    dim: usize,
}

/// Parses a document. The first error aborts the parse.
pub fn parse(text: &str) -> Result<Document, FormatError> {
    let mut doc = Document::default();
    let mut names: HashMap<String, Declared> = HashMap::new();
    let mut pairs: HashMap<String, ()> = HashMap::new();
    let mut current: Option<Block> = None;

    for (ln, raw) in text.lines().enumerate() {
        let p = Parser { line: ln + 1, toks: tokenize(raw), line_len: raw.chars().count() };
        let Some(first) = p.toks.first().copied() else { continue };
        if first.text.starts_with('@') {
            if let Some(b) = current.take() {
                doc.blocks.push(b);
            }
            let block = header(&p, first, &names)?;
            if let Some(name) = block.name() {
                if names.contains_key(name) {
                    return Err(FormatError::DuplicateName { line: p.line, col: p.toks[1].col, name: name.to_string() });
                }
                let decl = match &block {
                    Block::ThreeLie { algebra, .. } => Declared { kind: Kind::ThreeLie, dim: algebra.dim() },
                    Block::Lie { algebra, .. } => Declared { kind: Kind::Lie, dim: algebra.dim() },
                    Block::Assoc { algebra, .. } => Declared { kind: Kind::Assoc, dim: algebra.dim() },
                    Block::Hom { .. } => Declared { kind: Kind::Hom, dim: 0 },
                    _ => Declared { kind: Kind::Subspace, dim: 0 },
                };
                names.insert(name.to_string(), decl);
            }
            if let Some(key) = block.pair_key() {
                if pairs.insert(key.clone(), ()).is_some() {
                    return Err(FormatError::DuplicateName { line: p.line, col: first.col, name: key });
                }
            }
            current = Some(block);
        } else {
            let Some(block) = current.as_mut() else {
                return Err(p.syntax(first.col, "entry outside of a block"));
            };
            entry(&p, block, &names)?;
        }
    }
    if let Some(b) = current.take() {
        doc.blocks.push(b);
    }
    Ok(doc)
}

fn lookup<'n>(
    p: &Parser,
    i: usize,
    names: &'n HashMap<String, Declared>,
    allowed: &[Kind],
    what: &str,
) -> Result<(String, &'n Declared), FormatError> {
    let (name, col) = p.name(i)?;
    let d = names
        .get(&name)
        .ok_or_else(|| FormatError::UnknownReference { line: p.line, col, name: name.clone() })?;
    if !allowed.contains(&d.kind) {
        return Err(p.syntax(col, format!("`{name}` is not {what}")));
    }
    Ok((name, d))
}

const ALGEBRAS: [Kind; 3] = [Kind::ThreeLie, Kind::Lie, Kind::Assoc];

fn header(p: &Parser, first: Tok, names: &HashMap<String, Declared>) -> Result<Block, FormatError> {
    match first.text {
        "@3lie" | "@lie" => {
            let (name, _) = p.name(1)?;
            let dim = p.key_value(2, "dim")?;
            p.arity(3, "@3lie NAME dim=N")?;
            Ok(if first.text == "@3lie" {
                Block::ThreeLie { name, algebra: ThreeLie::abelian(dim) }
            } else {
                Block::Lie { name, algebra: LieAlg::abelian(dim) }
            })
        }
        "@assoc" => {
            let (name, _) = p.name(1)?;
            let dim = p.key_value(2, "dim")?;
            let mut algebra = CommAlgebra::new(dim);
            if p.toks.len() > 3 {
                let u = p.key_value(3, "unit")?;
                if u == 0 || u > dim {
                    return Err(FormatError::IndexOutOfRange { line: p.line, col: p.toks[3].col, index: u, dim });
                }
                algebra.unit = Some(unit_vec(dim, u - 1));
            }
            p.arity(if algebra.unit.is_some() { 4 } else { 3 }, "@assoc NAME dim=N [unit=I]")?;
            Ok(Block::Assoc { name, algebra })
        }
        "@action" => {
            let (algebra, a) = lookup(p, 1, names, &[Kind::Assoc], "a commutative algebra")?;
            p.keyword(2, "on")?;
            let (module, l) = lookup(p, 3, names, &[Kind::ThreeLie, Kind::Lie], "a 3-Lie or Lie algebra")?;
            p.arity(4, "@action A on L")?;
            Ok(Block::Action { algebra, module, action: AAction::zero(a.dim, l.dim) })
        }
        "@rho" | "@beta" => {
            let (source, l) = lookup(p, 1, names, &[Kind::ThreeLie, Kind::Lie], "a 3-Lie or Lie algebra")?;
            p.keyword(2, "on")?;
            let rho = first.text == "@rho";
            let (target, t) = if rho {
                lookup(p, 3, names, &[Kind::Assoc], "a commutative algebra")?
            } else {
                lookup(p, 3, names, &[l.kind], if l.kind == Kind::Lie { "a Lie algebra" } else { "a 3-Lie algebra" })?
            };
            p.arity(4, if rho { "@rho L on A" } else { "@beta L on R" })?;
            let family = if l.kind == Kind::ThreeLie {
                Family::Pair(PairFamily::zero(l.dim, t.dim))
            } else {
                Family::Linear(LinearFamily::zero(l.dim, t.dim))
            };
            Ok(if rho { Block::Rho { source, target, family } } else { Block::Beta { source, target, family } })
        }
        "@hom" => {
            let (name, _) = p.name(1)?;
            p.keyword(2, ":")?;
            let (src, s) = lookup(p, 3, names, &ALGEBRAS, "an algebra")?;
            p.keyword(4, "->")?;
            let (dst, d) = lookup(p, 5, names, &ALGEBRAS, "an algebra")?;
            p.arity(6, "@hom NAME : SRC -> DST")?;
            Ok(Block::Hom { name, src, dst, map: Matrix::zeros(d.dim, s.dim) })
        }
        "@subspace" => {
            let (name, _) = p.name(1)?;
            p.keyword(2, "in")?;
            let (within, _) = lookup(p, 3, names, &ALGEBRAS, "an algebra")?;
            p.arity(4, "@subspace NAME in SRC")?;
            Ok(Block::Subspace { name, within, vectors: Vec::new() })
        }
        other => Err(p.syntax(first.col, format!("unknown block `{other}`"))),
    }
}

fn entry(p: &Parser, block: &mut Block, names: &HashMap<String, Declared>) -> Result<(), FormatError> {
    let dim_of = |n: &str| names.get(n).map_or(0, |d| d.dim);
    match block {
        Block::ThreeLie { algebra, .. } => {
            let n = algebra.dim();
            p.keyword(0, "c")?;
            let idx = [p.index(1, n)?, p.index(2, n)?, p.index(3, n)?];
            p.increasing(1, &idx, true)?;
            p.keyword(4, "->")?;
            let out = p.index(5, n)?;
            p.keyword(6, ":")?;
            let q = p.scalar(7)?;
            p.arity(8, "c I J K -> M : Q")?;
            add_constant(&mut algebra.bracket, &idx, out, q);
        }
        Block::Lie { algebra, .. } => {
            let n = algebra.dim();
            p.keyword(0, "c")?;
            let idx = [p.index(1, n)?, p.index(2, n)?];
            p.increasing(1, &idx, true)?;
            p.keyword(3, "->")?;
            let out = p.index(4, n)?;
            p.keyword(5, ":")?;
            let q = p.scalar(6)?;
            p.arity(7, "c I J -> M : Q")?;
            add_constant(&mut algebra.bracket, &idx, out, q);
        }
        Block::Assoc { algebra, .. } => {
            let n = algebra.dim();
            p.keyword(0, "m")?;
            let idx = [p.index(1, n)?, p.index(2, n)?];
            p.increasing(1, &idx, false)?;
            p.keyword(3, "->")?;
            let out = p.index(4, n)?;
            p.keyword(5, ":")?;
            let q = p.scalar(6)?;
            p.arity(7, "m I J -> K : Q")?;
            add_constant(&mut algebra.product, &idx, out, q);
        }
        Block::Action { algebra, module, action } => {
            let (m, n) = (dim_of(algebra), dim_of(module));
            p.keyword(0, "a")?;
            let i = p.index(1, m)?;
            p.keyword(2, ".")?;
            let j = p.index(3, n)?;
            p.keyword(4, "->")?;
            let k = p.index(5, n)?;
            p.keyword(6, ":")?;
            let q = p.scalar(7)?;
            p.arity(8, "a I . J -> K : Q")?;
            action.maps[i].add_at(k, j, &q);
        }
        Block::Rho { source, target, family } | Block::Beta { source, target, family } => {
            let (n, m) = (dim_of(source), dim_of(target));
            let tag = p.tok(0, "an entry")?;
            let expected = if names.get(target).is_some_and(|d| d.kind == Kind::Assoc) { "r" } else { "b" };
            p.keyword(0, expected).map_err(|_| p.syntax(tag.col, format!("expected `{expected}` entry")))?;
            match family {
                Family::Pair(f) => {
                    let idx = [p.index(1, n)?, p.index(2, n)?];
                    p.increasing(1, &idx, true)?;
                    p.keyword(3, ".")?;
                    let a = p.index(4, m)?;
                    p.keyword(5, "->")?;
                    let b = p.index(6, m)?;
                    p.keyword(7, ":")?;
                    let s = p.scalar(8)?;
                    p.arity(9, &format!("{expected} I J . P -> Q : S"))?;
                    f.add_entry(idx[0], idx[1], b, a, &s);
                }
                Family::Linear(f) => {
                    let i = p.index(1, n)?;
                    p.keyword(2, ".")?;
                    let a = p.index(3, m)?;
                    p.keyword(4, "->")?;
                    let b = p.index(5, m)?;
                    p.keyword(6, ":")?;
                    let s = p.scalar(7)?;
                    p.arity(8, &format!("{expected} I . P -> Q : S"))?;
                    f.maps[i].add_at(b, a, &s);
                }
            }
        }
        Block::Hom { map, .. } => {
            p.keyword(0, "h")?;
            let i = p.index(1, map.cols())?;
            p.keyword(2, "->")?;
            let j = p.index(3, map.rows())?;
            p.keyword(4, ":")?;
            let q = p.scalar(5)?;
            p.arity(6, "h I -> J : Q")?;
            map.add_at(j, i, &q);
        }
        Block::Subspace { within, vectors, .. } => {
            let n = dim_of(within);
            p.keyword(0, "v")?;
            p.keyword(1, ":")?;
            let v = (0..n).map(|i| p.scalar(2 + i)).collect::<Result<Vec<_>, _>>()?;
            p.arity(2 + n, "v : Q1 … Qn")?;
            vectors.push(v);
        }
    }
    Ok(())
}

fn add_constant(sc: &mut StructureConstants, idx: &[usize], out: usize, q: Scalar) {
    let mut v = vec![Scalar::zero(); sc.dim()];
    v[out] = q;
    sc.add(idx, &v).expect("indices were range-checked and ordered");
}

// ---------------------------------------------------------------------------
// Printing

fn write_constants(f: &mut fmt::Formatter<'_>, tag: &str, sc: &StructureConstants) -> fmt::Result {
    let mut entries: Vec<_> = sc.entries().collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    for (idx, v) in entries {
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                let ids: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
                writeln!(f, "{tag} {} -> {} : {c}", ids.join(" "), k + 1)?;
            }
        }
    }
    Ok(())
}

/// `prefix P -> Q : S` for every nonzero `m[Q][P]`, column-major.
fn write_matrix(f: &mut fmt::Formatter<'_>, prefix: &str, m: &Matrix) -> fmt::Result {
    for col in 0..m.cols() {
        for row in 0..m.rows() {
            let c = m.get(row, col);
            if !c.is_zero() {
                writeln!(f, "{prefix}{} -> {} : {c}", col + 1, row + 1)?;
            }
        }
    }
    Ok(())
}

fn write_family(f: &mut fmt::Formatter<'_>, tag: &str, family: &Family) -> fmt::Result {
    match family {
        Family::Pair(p) => {
            for ((i, j), m) in p.entries() {
                write_matrix(f, &format!("{tag} {} {} . ", i + 1, j + 1), m)?;
            }
        }
        Family::Linear(l) => {
            for (i, m) in l.maps.iter().enumerate() {
                write_matrix(f, &format!("{tag} {} . ", i + 1), m)?;
            }
        }
    }
    Ok(())
}

fn unit_index(a: &CommAlgebra) -> Option<usize> {
    let u = a.unit.as_ref()?;
    let nz: Vec<usize> = (0..u.len()).filter(|&i| !u[i].is_zero()).collect();
    match nz.as_slice() {
        [i] if u[*i].is_one() => Some(*i),
        _ => None,
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::ThreeLie { name, algebra } => {
                writeln!(f, "@3lie {name} dim={}", algebra.dim())?;
                write_constants(f, "c", &algebra.bracket)
            }
            Block::Lie { name, algebra } => {
                writeln!(f, "@lie {name} dim={}", algebra.dim())?;
                write_constants(f, "c", &algebra.bracket)
            }
            Block::Assoc { name, algebra } => {
                write!(f, "@assoc {name} dim={}", algebra.dim())?;
                if let Some(u) = unit_index(algebra) {
                    write!(f, " unit={}", u + 1)?;
                }
                writeln!(f)?;
                write_constants(f, "m", &algebra.product)
            }
            Block::Action { algebra, module, action } => {
                writeln!(f, "@action {algebra} on {module}")?;
                for (i, m) in action.maps.iter().enumerate() {
                    write_matrix(f, &format!("a {} . ", i + 1), m)?;
                }
                Ok(())
            }
            Block::Rho { source, target, family } => {
                writeln!(f, "@rho {source} on {target}")?;
                write_family(f, "r", family)
            }
            Block::Beta { source, target, family } => {
                writeln!(f, "@beta {source} on {target}")?;
                write_family(f, "b", family)
            }
            Block::Hom { name, src, dst, map } => {
                writeln!(f, "@hom {name} : {src} -> {dst}")?;
                write_matrix(f, "h ", map)
            }
            Block::Subspace { name, within, vectors } => {
                writeln!(f, "@subspace {name} in {within}")?;
                for v in vectors {
                    let cs: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                    writeln!(f, "v : {}", cs.join(" "))?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Reading structures out of a document

fn missing(msg: impl Into<String>) -> FormatError {
    FormatError::Missing(msg.into())
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn find(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name() == Some(name))
    }

    pub fn three_lie(&self, name: &str) -> Option<&ThreeLie> {
        match self.find(name)? {
            Block::ThreeLie { algebra, .. } => Some(algebra),
            _ => None,
        }
    }

    pub fn lie(&self, name: &str) -> Option<&LieAlg> {
        match self.find(name)? {
            Block::Lie { algebra, .. } => Some(algebra),
            _ => None,
        }
    }

    pub fn assoc(&self, name: &str) -> Option<&CommAlgebra> {
        match self.find(name)? {
            Block::Assoc { algebra, .. } => Some(algebra),
            _ => None,
        }
    }

    /// The first action block on `module`, with the acting algebra's name.
    pub fn action_on(&self, module: &str) -> Option<(&str, &AAction)> {
        self.blocks.iter().find_map(|b| match b {
            Block::Action { algebra, module: m, action } if m == module => Some((algebra.as_str(), action)),
            _ => None,
        })
    }

    fn rho_of(&self, source: &str) -> Option<(&str, &Family)> {
        self.blocks.iter().find_map(|b| match b {
            Block::Rho { source: s, target, family } if s == source => Some((target.as_str(), family)),
            _ => None,
        })
    }

    fn is_beta_target(&self, name: &str) -> bool {
        self.blocks.iter().any(|b| matches!(b, Block::Beta { target, .. } if target == name))
    }

    /// Names of 3-Lie algebras that carry an action and are not the target
    /// of a `@beta` block, in document order.
    pub fn triple_names(&self) -> Vec<&str> {
        self.algebra_names(true)
    }

    /// Names of Lie algebras that carry an action and are not the target of
    /// a `@beta` block, in document order.
    pub fn lie_pair_names(&self) -> Vec<&str> {
        self.algebra_names(false)
    }

    fn algebra_names(&self, three: bool) -> Vec<&str> {
        self.blocks
            .iter()
            .filter_map(|b| match b {
                Block::ThreeLie { name, .. } if three => Some(name.as_str()),
                Block::Lie { name, .. } if !three => Some(name.as_str()),
                _ => None,
            })
            .filter(|n| self.action_on(n).is_some() && !self.is_beta_target(n))
            .collect()
    }

    /// The triple on the 3-Lie algebra `l`: its action block names `A`, and
    /// a missing `@rho` block means the zero anchor.
    pub fn triple(&self, l: &str) -> Result<RinehartTriple, FormatError> {
        let alg = self.three_lie(l).ok_or_else(|| missing(format!("no 3-Lie algebra named `{l}`")))?;
        let (a_name, alpha) = self.action_on(l).ok_or_else(|| missing(format!("no `@action ... on {l}` block")))?;
        let a = self.assoc(a_name).expect("parser resolved the reference");
        let rho = match self.rho_of(l) {
            None => PairFamily::zero(alg.dim(), a.dim()),
            Some((t, Family::Pair(p))) if t == a_name => p.clone(),
            Some((t, _)) => return Err(missing(format!("`@rho {l} on {t}` must target `{a_name}`"))),
        };
        Ok(RinehartTriple::new(alg.clone(), a.clone(), rho, alpha.clone()).expect("dimensions come from the blocks"))
    }

    pub fn lie_pair(&self, g: &str) -> Result<LieRinehartPair, FormatError> {
        let alg = self.lie(g).ok_or_else(|| missing(format!("no Lie algebra named `{g}`")))?;
        let (a_name, alpha) = self.action_on(g).ok_or_else(|| missing(format!("no `@action ... on {g}` block")))?;
        let a = self.assoc(a_name).expect("parser resolved the reference");
        let rho = match self.rho_of(g) {
            None => LinearFamily::zero(alg.dim(), a.dim()),
            Some((t, Family::Linear(l))) if t == a_name => l.clone(),
            Some((t, _)) => return Err(missing(format!("`@rho {g} on {t}` must target `{a_name}`"))),
        };
        Ok(LieRinehartPair::new(alg.clone(), a.clone(), rho, alpha.clone()).expect("dimensions come from the blocks"))
    }

    /// The first triple in document order.
    pub fn primary_triple(&self) -> Result<(String, RinehartTriple), FormatError> {
        let name = *self
            .triple_names()
            .first()
            .ok_or_else(|| missing("no 3-Lie algebra with an `@action` block"))?;
        Ok((name.to_string(), self.triple(name)?))
    }

    /// `(source, target)` of every `@beta` block.
    pub fn beta_blocks(&self) -> Vec<(&str, &str)> {
        self.blocks
            .iter()
            .filter_map(|b| match b {
                Block::Beta { source, target, .. } => Some((source.as_str(), target.as_str())),
                _ => None,
            })
            .collect()
    }

    fn beta(&self, source: &str, target: &str) -> Option<&Family> {
        self.blocks.iter().find_map(|b| match b {
            Block::Beta { source: s, target: t, family } if s == source && t == target => Some(family),
            _ => None,
        })
    }

    /// The action of the triple on `l` on the 3-Lie algebra `r`; `R` must
    /// carry an action of the same `A`.
    pub fn action_data(&self, l: &str, r: &str) -> Result<ActionData, FormatError> {
        let source = self.triple(l)?;
        let Some(Family::Pair(beta)) = self.beta(l, r) else {
            return Err(missing(format!("no `@beta {l} on {r}` block")));
        };
        let r_alg = self.three_lie(r).ok_or_else(|| missing(format!("`{r}` is not a 3-Lie algebra")))?;
        let alpha_r = self.same_algebra_action(l, r)?;
        Ok(ActionData::new(source, r_alg.clone(), alpha_r, beta.clone()).expect("dimensions come from the blocks"))
    }

    pub fn lie_action_data(&self, g: &str, r: &str) -> Result<LieActionData, FormatError> {
        let source = self.lie_pair(g)?;
        let Some(Family::Linear(beta)) = self.beta(g, r) else {
            return Err(missing(format!("no `@beta {g} on {r}` block")));
        };
        let r_alg = self.lie(r).ok_or_else(|| missing(format!("`{r}` is not a Lie algebra")))?;
        let alpha_r = self.same_algebra_action(g, r)?;
        Ok(LieActionData::new(source, r_alg.clone(), alpha_r, beta.clone()).expect("dimensions come from the blocks"))
    }

    fn same_algebra_action(&self, l: &str, r: &str) -> Result<AAction, FormatError> {
        let (a, _) = self.action_on(l).ok_or_else(|| missing(format!("no `@action ... on {l}` block")))?;
        match self.action_on(r) {
            Some((b, act)) if a == b => Ok(act.clone()),
            Some((b, _)) => Err(missing(format!("`{r}` is acted on by `{b}`, expected `{a}`"))),
            None => Err(missing(format!("no `@action {a} on {r}` block"))),
        }
    }

    /// `(name, src, dst, matrix)` of every `@hom` block.
    pub fn homs(&self) -> Vec<(&str, &str, &str, &Matrix)> {
        self.blocks
            .iter()
            .filter_map(|b| match b {
                Block::Hom { name, src, dst, map } => Some((name.as_str(), src.as_str(), dst.as_str(), map)),
                _ => None,
            })
            .collect()
    }

    /// `(name, within, span)` of every `@subspace` block.
    pub fn subspaces(&self) -> Vec<(&str, &str, Subspace)> {
        self.blocks
            .iter()
            .filter_map(|b| match b {
                Block::Subspace { name, within, vectors } => {
                    let n = self.dim_of(within);
                    Some((name.as_str(), within.as_str(), Subspace::span(n, vectors)))
                }
                _ => None,
            })
            .collect()
    }

    fn dim_of(&self, name: &str) -> usize {
        match self.find(name) {
            Some(Block::ThreeLie { algebra, .. }) => algebra.dim(),
            Some(Block::Lie { algebra, .. }) => algebra.dim(),
            Some(Block::Assoc { algebra, .. }) => algebra.dim(),
            _ => 0,
        }
    }

    /// A crossed module: a `@hom` from `R` to `L` together with
    /// `@beta L on R`. Returns the hom name too.
    pub fn crossed_module(&self) -> Result<(String, CrossedModuleData), FormatError> {
        for (name, src, dst, map) in self.homs() {
            if self.beta(dst, src).is_some() && self.three_lie(dst).is_some() {
                let ad = self.action_data(dst, src)?;
                return Ok((name.to_string(), CrossedModuleData::new(ad, map.clone()).expect("dimensions")));
            }
        }
        Err(missing("no `@hom d : R -> L` with a matching `@beta L on R` block"))
    }

    pub fn lie_crossed_module(&self) -> Result<(String, LieCrossedModule), FormatError> {
        for (name, src, dst, map) in self.homs() {
            if self.beta(dst, src).is_some() && self.lie(dst).is_some() {
                let ad = self.lie_action_data(dst, src)?;
                return Ok((name.to_string(), LieCrossedModule::new(ad, map.clone()).expect("dimensions")));
            }
        }
        Err(missing("no Lie `@hom d : R -> G` with a matching `@beta G on R` block"))
    }
}

// ---------------------------------------------------------------------------
// Building documents

impl Document {
    fn push_named(&mut self, block: Block) -> Result<(), FormatError> {
        let name = block.name().expect("named block").to_string();
        match self.find(&name) {
            Some(existing) if *existing == block => Ok(()),
            Some(_) => Err(FormatError::DuplicateName { line: 0, col: 0, name }),
            None => {
                self.blocks.push(block);
                Ok(())
            }
        }
    }

    /// Adds `A` (unless an identical block of that name exists), `L`, the
    /// action and the anchor.
    pub fn push_triple(&mut self, l: &str, a: &str, t: &RinehartTriple) -> Result<(), FormatError> {
        self.push_named(Block::Assoc { name: a.into(), algebra: t.a.clone() })?;
        self.push_named(Block::ThreeLie { name: l.into(), algebra: t.l.clone() })?;
        self.blocks.push(Block::Action { algebra: a.into(), module: l.into(), action: t.alpha.clone() });
        self.blocks.push(Block::Rho { source: l.into(), target: a.into(), family: Family::Pair(t.rho.clone()) });
        Ok(())
    }

    pub fn push_lie_pair(&mut self, g: &str, a: &str, p: &LieRinehartPair) -> Result<(), FormatError> {
        self.push_named(Block::Assoc { name: a.into(), algebra: p.a.clone() })?;
        self.push_named(Block::Lie { name: g.into(), algebra: p.g.clone() })?;
        self.blocks.push(Block::Action { algebra: a.into(), module: g.into(), action: p.alpha.clone() });
        self.blocks.push(Block::Rho { source: g.into(), target: a.into(), family: Family::Linear(p.rho.clone()) });
        Ok(())
    }

    /// The source triple, `R`, the action of `A` on `R` and `β`.
    pub fn push_action_data(&mut self, l: &str, a: &str, r: &str, ad: &ActionData) -> Result<(), FormatError> {
        self.push_triple(l, a, &ad.source)?;
        self.push_named(Block::ThreeLie { name: r.into(), algebra: ad.r.clone() })?;
        self.blocks.push(Block::Action { algebra: a.into(), module: r.into(), action: ad.alpha_r.clone() });
        self.blocks.push(Block::Beta { source: l.into(), target: r.into(), family: Family::Pair(ad.beta.clone()) });
        Ok(())
    }

    pub fn push_lie_action_data(&mut self, g: &str, a: &str, r: &str, ad: &LieActionData) -> Result<(), FormatError> {
        self.push_lie_pair(g, a, &ad.source)?;
        self.push_named(Block::Lie { name: r.into(), algebra: ad.r.clone() })?;
        self.blocks.push(Block::Action { algebra: a.into(), module: r.into(), action: ad.alpha_r.clone() });
        self.blocks.push(Block::Beta { source: g.into(), target: r.into(), family: Family::Linear(ad.beta.clone()) });
        Ok(())
    }

    pub fn push_hom(&mut self, name: &str, src: &str, dst: &str, map: &Matrix) -> Result<(), FormatError> {
        self.push_named(Block::Hom { name: name.into(), src: src.into(), dst: dst.into(), map: map.clone() })
    }

    /// Stores the echelon basis of `s`.
    pub fn push_subspace(&mut self, name: &str, within: &str, s: &Subspace) -> Result<(), FormatError> {
        self.push_named(Block::Subspace { name: name.into(), within: within.into(), vectors: s.basis().to_vec() })
    }
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Machine,
}

fn one_based(t: &[usize]) -> Vec<String> {
    t.iter().map(|i| (i + 1).to_string()).collect()
}

/// One record per law, sorted by law id. Tuples are printed 1-based; at most
/// `witness_limit` witnesses per law.
pub fn render_report(report: &Report, format: ReportFormat, witness_limit: usize) -> String {
    let mut checks: Vec<_> = report.checks.iter().collect();
    checks.sort_by(|a, b| a.law.cmp(&b.law));
    let mut out = String::new();
    for c in checks {
        match format {
            ReportFormat::Machine => {
                let status = if c.passed { "pass" } else { "fail" };
                write!(out, "LAW={} STATUS={status} TUPLES={}", c.law, c.tuples_checked).unwrap();
                for w in c.witnesses.iter().take(witness_limit) {
                    let d: Vec<String> = w.defect.iter().map(|s| s.to_string()).collect();
                    write!(out, " WITNESS={}:{}", one_based(&w.tuple).join(","), d.join(",")).unwrap();
                }
                out.push('\n');
            }
            ReportFormat::Text => {
                if c.passed {
                    let noun = if c.tuples_checked == 1 { "tuple" } else { "tuples" };
                    writeln!(out, "pass  {}  ({} {noun})", c.law, c.tuples_checked).unwrap();
                } else {
                    writeln!(out, "FAIL  {}  ({} of {} tuples fail)", c.law, c.failures, c.tuples_checked).unwrap();
                    for w in c.witnesses.iter().take(witness_limit) {
                        writeln!(out, "      at ({}) [{}]: defect {}", one_based(&w.tuple).join(", "), c.pattern, fmt_vec(&w.defect))
                            .unwrap();
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn doc_of(name: &str) -> Document {
        let mut d = Document::new();
        let a = if name == "TDER" { "A" } else { "F" };
        d.push_triple(name, a, &catalog::get(name).unwrap()).unwrap();
        d
    }

    #[test]
    fn empty_file_is_empty_document() {
        assert_eq!(parse("").unwrap(), Document::new());
        assert_eq!(parse("# only a comment\n\n").unwrap(), Document::new());
    }

    #[test]
    fn catalog_round_trip() {
        for n in catalog::NAMES {
            let d = doc_of(n);
            let text = d.to_string();
            let back = parse(&text).unwrap();
            assert_eq!(back, d);
            assert_eq!(back.to_string(), text);
            assert_eq!(back.triple(n).unwrap(), catalog::get(n).unwrap());
        }
    }

    #[test]
    fn l0_has_four_blocks() {
        let d = parse(&doc_of("L0").to_string()).unwrap();
        assert_eq!(d.blocks.len(), 4);
    }

    #[test]
    fn out_of_range_index_is_located() {
        let text = "@3lie L dim=4\nc 1 2 5 -> 1 : 1\n";
        assert_eq!(parse(text), Err(FormatError::IndexOutOfRange { line: 2, col: 7, index: 5, dim: 4 }));
    }

    #[test]
    fn diagnostics() {
        assert!(matches!(parse("c 1 2 3 -> 1 : 1"), Err(FormatError::Syntax { line: 1, col: 1, .. })));
        assert!(matches!(parse("@action F on L"), Err(FormatError::UnknownReference { line: 1, col: 9, .. })));
        assert!(matches!(
            parse("@lie G dim=2\n@lie G dim=3"),
            Err(FormatError::DuplicateName { line: 2, col: 6, .. })
        ));
        assert!(matches!(parse("@3lie L dim=3\nc 2 1 3 -> 1 : 1"), Err(FormatError::Syntax { line: 2, col: 5, .. })));
        assert!(matches!(parse("@3lie L dim=3\nc 1 2 3 -> 1 : 1/0"), Err(FormatError::Syntax { line: 2, col: 16, .. })));
    }

    #[test]
    fn repeated_lines_are_summed() {
        let d = parse("@lie G dim=2\nc 1 2 -> 1 : 1/2\nc 1 2 -> 1 : 1/2 # again\n").unwrap();
        assert_eq!(d.lie("G").unwrap().br_basis(0, 1), vec![Scalar::one(), Scalar::zero()]);
    }

    #[test]
    fn machine_report_lines() {
        let rep = crate::axioms::check_3lie(&ThreeLie::abelian(3));
        let s = render_report(&rep, ReportFormat::Machine, 5);
        assert!(s.lines().all(|l| l.starts_with("LAW=") && l.contains("STATUS=pass")));
    }
}
