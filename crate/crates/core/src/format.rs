//! Line-oriented text formats for every document kind.
//!
//! ```text
//! algebra N2 dim 2 field Q flavor zinbiel
//! prod 1 1 -> 1*2
//! ```
//!
//! Indices are 1-based. Blank lines and lines starting with `#` are ignored.
//! Composite documents embed algebra blocks whose header carries a role word
//! (`base`, `a`, `b`, `primal`, `dual`). Serialization is canonical, so
//! `write(parse(text)) == text` for any text produced by a writer here.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::algebra::{Algebra, Flavor};
use crate::bialgebra::Bialgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::matched_pair::MatchedPair;
use crate::representation::Representation;
use crate::rota_baxter::RBOperator;
use crate::scalar::{Field, Scalar};
use crate::tensor::{BilinearForm, Tensor2};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Algebra(Algebra),
    Tensor2 { name: String, tensor: Tensor2 },
    Form { name: String, form: BilinearForm },
    Rep { base_name: String, rep: Representation },
    MatchedPair { name: String, pair: MatchedPair },
    Bialgebra { name: String, bialgebra: Bialgebra },
    RBOperator {
        name: String,
        rb: RBOperator,
        form: Option<BilinearForm>,
    },
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "algebra",
            Document::Tensor2 { .. } => "tensor2",
            Document::Form { .. } => "form",
            Document::Rep { .. } => "rep",
            Document::MatchedPair { .. } => "matched-pair",
            Document::Bialgebra { .. } => "bialgebra",
            Document::RBOperator { .. } => "rb-operator",
        }
    }
}

struct Line<'t> {
    no: usize,
    tokens: Vec<(usize, &'t str)>,
}

impl<'t> Line<'t> {
    fn err(&self, idx: usize, message: impl Into<String>) -> Error {
        let column = self
            .tokens
            .get(idx)
            .or(self.tokens.last())
            .map(|t| t.0)
            .unwrap_or(1);
        Error::Parse {
            line: self.no,
            column,
            message: message.into(),
        }
    }

    fn word(&self, idx: usize) -> Option<&'t str> {
        self.tokens.get(idx).map(|t| t.1)
    }

    fn expect(&self, idx: usize, word: &str) -> Result<()> {
        match self.word(idx) {
            Some(w) if w == word => Ok(()),
            Some(w) => Err(self.err(idx, format!("expected `{word}`, found `{w}`"))),
            None => Err(self.err(idx, format!("expected `{word}`"))),
        }
    }

    fn token(&self, idx: usize, what: &str) -> Result<&'t str> {
        self.word(idx).ok_or_else(|| self.err(idx, format!("missing {what}")))
    }

    fn usize_at(&self, idx: usize, what: &str) -> Result<usize> {
        let t = self.token(idx, what)?;
        t.parse::<usize>()
            .map_err(|_| self.err(idx, format!("bad {what} `{t}`")))
    }

    /// A 1-based index in `1..=dim`, returned 0-based.
    fn index_at(&self, idx: usize, dim: usize) -> Result<usize> {
        let i = self.usize_at(idx, "index")?;
        if i == 0 || i > dim {
            return Err(self.err(idx, format!("index {i} out of range 1..={dim}")));
        }
        Ok(i - 1)
    }

    fn scalar_at(&self, idx: usize, field: Field) -> Result<Scalar> {
        let t = self.token(idx, "coefficient")?;
        self.scalar(idx, t, field)
    }

    fn scalar(&self, idx: usize, text: &str, field: Field) -> Result<Scalar> {
        field
            .parse_scalar(text)
            .map_err(|e| self.err(idx, format!("bad coefficient `{text}`: {e}")))
    }

    fn field_at(&self, idx: usize) -> Result<Field> {
        let t = self.token(idx, "field")?;
        t.parse::<Field>().map_err(|e| self.err(idx, e.to_string()))
    }

    fn end(&self, idx: usize) -> Result<()> {
        match self.word(idx) {
            None => Ok(()),
            Some(w) => Err(self.err(idx, format!("unexpected `{w}`"))),
        }
    }

    /// `key i : a b ; c d` (or `key : ...` when `indexed` is false) as a
    /// `dim × dim` matrix.
    fn matrix_from(&self, start: usize, dim: usize, field: Field) -> Result<Matrix> {
        self.expect(start, ":")?;
        let mut rows = vec![Vec::new()];
        for idx in start + 1..self.tokens.len() {
            let t = self.tokens[idx].1;
            if t == ";" {
                rows.push(Vec::new());
            } else {
                let s = self.scalar(idx, t, field)?;
                rows.last_mut().expect("nonempty").push(s);
            }
        }
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(self.err(start, format!("expected a {dim}x{dim} matrix")));
        }
        Matrix::from_rows(field, rows)
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(no, raw)| {
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                return None;
            }
            let mut tokens = Vec::new();
            let mut start = None;
            for (col, (byte, ch)) in raw.char_indices().enumerate() {
                if ch.is_whitespace() {
                    if let Some((c, b)) = start.take() {
                        tokens.push((c + 1, &raw[b..byte]));
                    }
                } else if start.is_none() {
                    start = Some((col, byte));
                }
            }
            if let Some((c, b)) = start {
                tokens.push((c + 1, &raw[b..]));
            }
            Some(Line { no: no + 1, tokens })
        })
        .collect()
}

struct Cursor<'t> {
    lines: Vec<Line<'t>>,
    pos: usize,
}

impl<'t> Cursor<'t> {
    fn peek(&self) -> Option<&Line<'t>> {
        self.lines.get(self.pos)
    }

    fn next(&mut self) -> Option<&Line<'t>> {
        self.pos += 1;
        self.lines.get(self.pos - 1)
    }

    fn last_line_no(&self) -> usize {
        self.lines.last().map(|l| l.no).unwrap_or(1)
    }

    fn missing(&self, what: &str) -> Error {
        Error::Parse {
            line: self.last_line_no(),
            column: 1,
            message: format!("missing {what}"),
        }
    }

    /// An algebra header (optionally preceded by a role word) and its `prod` lines.
    fn algebra(&mut self, role: Option<&str>) -> Result<Algebra> {
        let missing = self.missing("algebra block");
        let line = self.next().ok_or(missing)?;
        let o = match role {
            Some(r) => {
                line.expect(0, r)?;
                1
            }
            None => 0,
        };
        line.expect(o, "algebra")?;
        let name = line.token(o + 1, "name")?.to_string();
        line.expect(o + 2, "dim")?;
        let dim = line.usize_at(o + 3, "dimension")?;
        if dim == 0 {
            return Err(line.err(o + 3, "dimension must be positive"));
        }
        line.expect(o + 4, "field")?;
        let field = line.field_at(o + 5)?;
        line.expect(o + 6, "flavor")?;
        let ft = line.token(o + 7, "flavor")?;
        let flavor = Flavor::from_token(ft).ok_or_else(|| line.err(o + 7, format!("unknown flavor `{ft}`")))?;
        line.end(o + 8)?;
        let mut entries = Vec::new();
        let mut seen = BTreeMap::new();
        while let Some(line) = self.peek() {
            if line.word(0) != Some("prod") {
                break;
            }
            let line = self.next().expect("peeked");
            let i = line.index_at(1, dim)?;
            let j = line.index_at(2, dim)?;
            if seen.insert((i, j), ()).is_some() {
                return Err(line.err(1, format!("duplicate product {} {}", i + 1, j + 1)));
            }
            line.expect(3, "->")?;
            let mut idx = 4;
            let mut ks = BTreeMap::new();
            loop {
                let t = line.token(idx, "term")?;
                let (c, k) = t
                    .rsplit_once('*')
                    .ok_or_else(|| line.err(idx, format!("expected `c*k`, found `{t}`")))?;
                let c = line.scalar(idx, c, field)?;
                let k = k
                    .parse::<usize>()
                    .ok()
                    .filter(|k| (1..=dim).contains(k))
                    .ok_or_else(|| line.err(idx, format!("bad basis index in `{t}`")))?;
                if ks.insert(k, ()).is_some() {
                    return Err(line.err(idx, format!("duplicate term for e{k}")));
                }
                entries.push((i, j, k - 1, c));
                idx += 1;
                match line.word(idx) {
                    None => break,
                    Some("+") => idx += 1,
                    Some(w) => return Err(line.err(idx, format!("expected `+`, found `{w}`"))),
                }
            }
        }
        Ok(Algebra::from_constants(name, field, dim, entries)?.declared(flavor))
    }

    /// `key i j = c` lines into a `dim × dim` matrix.
    fn pairs(&mut self, key: &str, dim: usize, field: Field) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, dim, dim);
        let mut seen = BTreeMap::new();
        while let Some(line) = self.peek() {
            if line.word(0) != Some(key) {
                break;
            }
            let line = self.next().expect("peeked");
            let i = line.index_at(1, dim)?;
            let j = line.index_at(2, dim)?;
            if seen.insert((i, j), ()).is_some() {
                return Err(line.err(1, format!("duplicate entry {} {}", i + 1, j + 1)));
            }
            line.expect(3, "=")?;
            m.set(i, j, line.scalar_at(4, field)?);
            line.end(5)?;
        }
        Ok(m)
    }

    /// `count` lines `key i : rows`, `i = 1..=count`, in order.
    fn operators(&mut self, key: &str, count: usize, dim: usize, field: Field) -> Result<Vec<Matrix>> {
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            let missing = self.missing(&format!("{key} {}", i + 1));
            let line = self.next().ok_or(missing)?;
            line.expect(0, key)?;
            let idx = line.usize_at(1, "index")?;
            if idx != i + 1 {
                return Err(line.err(1, format!("expected {key} {}, found {key} {idx}", i + 1)));
            }
            out.push(line.matrix_from(2, dim, field)?);
        }
        Ok(out)
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(l) => Err(l.err(0, format!("unexpected `{}`", l.word(0).unwrap_or("")))),
        }
    }
}

/// Header `<kind> <name> dim <n> field <F>` of tensor and form files.
fn grid_header(line: &Line<'_>, kind: &str) -> Result<(String, usize, Field)> {
    line.expect(0, kind)?;
    let name = line.token(1, "name")?.to_string();
    line.expect(2, "dim")?;
    let dim = line.usize_at(3, "dimension")?;
    line.expect(4, "field")?;
    let field = line.field_at(5)?;
    line.end(6)?;
    Ok((name, dim, field))
}

pub fn parse(text: &str) -> Result<Document> {
    let mut cur = Cursor { lines: lines(text), pos: 0 };
    let head = cur.peek().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "empty document".into(),
    })?;
    let kind = head.word(0).unwrap_or("");
    let doc = match kind {
        "algebra" => Document::Algebra(cur.algebra(None)?),
        "tensor2" => {
            let (name, dim, field) = grid_header(cur.next().expect("peeked"), "tensor2")?;
            let tensor = Tensor2::new(cur.pairs("r", dim, field)?)?;
            Document::Tensor2 { name, tensor }
        }
        "form" => {
            let line = cur.next().expect("peeked");
            let no = line.no;
            let (name, dim, field) = grid_header(line, "form")?;
            let form = BilinearForm::new(cur.pairs("w", dim, field)?)?;
            if !form.is_nondegenerate() {
                return Err(Error::Parse {
                    line: no,
                    column: 1,
                    message: format!("form `{name}` is degenerate"),
                });
            }
            Document::Form { name, form }
        }
        "rep" => {
            let line = cur.next().expect("peeked");
            line.expect(1, "base")?;
            let base_name = line.token(2, "algebra name")?.to_string();
            line.expect(3, "dim")?;
            let m = line.usize_at(4, "dimension")?;
            line.end(5)?;
            let no = line.no;
            let base = cur.algebra(Some("base"))?;
            if base.name() != base_name {
                return Err(Error::Parse {
                    line: no,
                    column: 1,
                    message: format!("base `{}` does not match header `{base_name}`", base.name()),
                });
            }
            let (n, f) = (base.dim(), base.field());
            let rho = cur.operators("rho", n, m, f)?;
            let mu = cur.operators("mu", n, m, f)?;
            Document::Rep {
                base_name,
                rep: Representation::new(base, m, rho, mu)?,
            }
        }
        "matched-pair" => {
            let line = cur.next().expect("peeked");
            let name = line.token(1, "name")?.to_string();
            line.end(2)?;
            let a = cur.algebra(Some("a"))?;
            let b = cur.algebra(Some("b"))?;
            let (n, m, f) = (a.dim(), b.dim(), a.field());
            let rho = cur.operators("rho", n, m, f)?;
            let mu = cur.operators("mu", n, m, f)?;
            let rho_p = cur.operators("rho'", m, n, f)?;
            let mu_p = cur.operators("mu'", m, n, f)?;
            Document::MatchedPair {
                name,
                pair: MatchedPair::new(a, b, rho, mu, rho_p, mu_p)?,
            }
        }
        "bialgebra" => {
            let line = cur.next().expect("peeked");
            let name = line.token(1, "name")?.to_string();
            line.end(2)?;
            let primal = cur.algebra(Some("primal"))?;
            let dual = cur.algebra(Some("dual"))?;
            Document::Bialgebra {
                name,
                bialgebra: Bialgebra::new(primal, dual)?,
            }
        }
        "rb-operator" => {
            let line = cur.next().expect("peeked");
            let name = line.token(1, "name")?.to_string();
            line.expect(2, "weight")?;
            let wt = line.token(3, "weight")?.to_string();
            line.end(4)?;
            let base = cur.algebra(Some("base"))?;
            let (n, f) = (base.dim(), base.field());
            let weight = f.parse_scalar(&wt)?;
            let missing = cur.missing("operator line `p : ...`");
            let pl = cur.next().ok_or(missing)?;
            pl.expect(0, "p")?;
            let p = pl.matrix_from(1, n, f)?;
            let form = match cur.peek() {
                Some(l) if l.word(0) == Some("w") => Some(BilinearForm::new(cur.pairs("w", n, f)?)?),
                _ => None,
            };
            Document::RBOperator {
                name,
                rb: RBOperator::new(base, p, weight)?,
                form,
            }
        }
        other => return Err(head.err(0, format!("unknown document kind `{other}`"))),
    };
    cur.finish()?;
    Ok(doc)
}

pub fn read(path: &Path) -> Result<Document> {
    parse(&std::fs::read_to_string(path)?)
}

fn algebra_block(out: &mut String, role: Option<&str>, a: &Algebra) {
    if let Some(r) = role {
        out.push_str(r);
        out.push(' ');
    }
    let _ = writeln!(
        out,
        "algebra {} dim {} field {} flavor {}",
        a.name(),
        a.dim(),
        a.field(),
        a.flavor().token()
    );
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let terms = a.basis_product(i, j);
            if terms.is_empty() {
                continue;
            }
            let body: Vec<String> = terms.iter().map(|(k, c)| format!("{c}*{}", k + 1)).collect();
            let _ = writeln!(out, "prod {} {} -> {}", i + 1, j + 1, body.join(" + "));
        }
    }
}

pub fn write_algebra(a: &Algebra) -> String {
    let mut out = String::new();
    algebra_block(&mut out, None, a);
    out
}

fn pair_lines(out: &mut String, key: &str, m: &Matrix) {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let c = m.get(i, j);
            if !c.is_zero() {
                let _ = writeln!(out, "{key} {} {} = {c}", i + 1, j + 1);
            }
        }
    }
}

fn operator_lines(out: &mut String, key: &str, ops: &[Matrix]) {
    for (i, op) in ops.iter().enumerate() {
        let _ = writeln!(out, "{key} {} : {}", i + 1, op.to_row_text());
    }
}

pub fn write(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::Algebra(a) => algebra_block(&mut out, None, a),
        Document::Tensor2 { name, tensor } => {
            let _ = writeln!(out, "tensor2 {name} dim {} field {}", tensor.dim(), tensor.field());
            pair_lines(&mut out, "r", tensor.matrix());
        }
        Document::Form { name, form } => {
            let _ = writeln!(out, "form {name} dim {} field {}", form.dim(), form.field());
            pair_lines(&mut out, "w", form.matrix());
        }
        Document::Rep { base_name, rep } => {
            let _ = writeln!(out, "rep base {base_name} dim {}", rep.space_dim());
            algebra_block(&mut out, Some("base"), rep.base());
            operator_lines(&mut out, "rho", rep.rho());
            operator_lines(&mut out, "mu", rep.mu());
        }
        Document::MatchedPair { name, pair } => {
            let _ = writeln!(out, "matched-pair {name}");
            algebra_block(&mut out, Some("a"), pair.a());
            algebra_block(&mut out, Some("b"), pair.b());
            operator_lines(&mut out, "rho", pair.rho());
            operator_lines(&mut out, "mu", pair.mu());
            operator_lines(&mut out, "rho'", pair.rho_prime());
            operator_lines(&mut out, "mu'", pair.mu_prime());
        }
        Document::Bialgebra { name, bialgebra } => {
            let _ = writeln!(out, "bialgebra {name}");
            algebra_block(&mut out, Some("primal"), bialgebra.primal());
            algebra_block(&mut out, Some("dual"), bialgebra.dual());
        }
        Document::RBOperator { name, rb, form } => {
            let _ = writeln!(out, "rb-operator {name} weight {}", rb.weight());
            algebra_block(&mut out, Some("base"), rb.base());
            let _ = writeln!(out, "p : {}", rb.operator().to_row_text());
            if let Some(w) = form {
                pair_lines(&mut out, "w", w.matrix());
            }
        }
    }
    out
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    match parse(text)? {
        Document::Algebra(a) => Ok(a),
        d => Err(Error::Precondition(format!("expected an algebra document, found {}", d.kind()))),
    }
}

pub fn parse_tensor2(text: &str) -> Result<Tensor2> {
    match parse(text)? {
        Document::Tensor2 { tensor, .. } => Ok(tensor),
        d => Err(Error::Precondition(format!("expected a tensor2 document, found {}", d.kind()))),
    }
}

pub fn write_tensor2(name: &str, t: &Tensor2) -> String {
    write(&Document::Tensor2 {
        name: name.to_string(),
        tensor: t.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn roundtrip(text: &str) -> Document {
        let doc = parse(text).unwrap();
        assert_eq!(write(&doc), text);
        assert_eq!(parse(&write(&doc)).unwrap(), doc);
        doc
    }

    #[test]
    fn minimal_algebra() {
        let doc = roundtrip("algebra Z dim 1 field Q flavor zinbiel\n");
        assert_eq!(doc, Document::Algebra(Algebra::zero("Z", Q, 1)));
    }

    #[test]
    fn algebra_with_fractions() {
        let text = "algebra X dim 3 field Q flavor unchecked\nprod 1 1 -> 1*2\nprod 1 2 -> -1/2*1 + 3*3\n";
        let a = parse_algebra(text).unwrap();
        assert_eq!(a.constant(0, 1, 0), &Q.ratio(-1, 2).unwrap());
        assert_eq!(write_algebra(&a), text);
    }

    #[test]
    fn prime_field_values_are_reduced() {
        let a = parse_algebra("algebra P dim 2 field Fp:7 flavor unchecked\nprod 1 1 -> -1*2\n").unwrap();
        assert_eq!(write_algebra(&a), "algebra P dim 2 field Fp:7 flavor unchecked\nprod 1 1 -> 6*2\n");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("algebra Z dim 1 field Q flavor zinbiel\nprod 1 1 -> 1/0*1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 13, .. }), "{e}");
        let e = parse("algebra Z dim 2 field Q flavor zinbiel\nprod 1 1 -> 1*2\nprod 1 1 -> 1*1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse("algebra Z dim 2 field Q flavor zinbiel\nprod 1 3 -> 1*2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 8, .. }), "{e}");
        assert!(parse("form W dim 2 field Q\nw 1 2 = 1\n").is_err());
        assert!(parse("algebra Z dim 1 field Fp:4 flavor zinbiel\n").is_err());
    }

    #[test]
    fn composite_documents_roundtrip() {
        let n2 = Algebra::zinbiel("N2", Q, 2, [(0, 0, 1, Q.one())]).unwrap();
        let b = Bialgebra::trivial(&n2);
        let docs = [
            Document::Bialgebra {
                name: "t".into(),
                bialgebra: b.clone(),
            },
            Document::MatchedPair {
                name: "mp".into(),
                pair: b.coregular_matched_pair(),
            },
            Document::Rep {
                base_name: "N2".into(),
                rep: Representation::coregular(&n2),
            },
            Document::Form {
                name: "w".into(),
                form: BilinearForm::standard(Q, 1),
            },
            Document::Tensor2 {
                name: "r".into(),
                tensor: Tensor2::from_ints(Q, &[&[1, -2], &[0, 3]]),
            },
            Document::RBOperator {
                name: "p".into(),
                rb: RBOperator::new(n2, Matrix::from_ints(Q, &[&[-1, 0], &[0, -1]]), Q.one()).unwrap(),
                form: Some(BilinearForm::new(Matrix::from_ints(Q, &[&[0, 1], &[-1, 0]])).unwrap()),
            },
        ];
        for d in docs {
            let text = write(&d);
            assert_eq!(parse(&text).unwrap(), d, "{text}");
            roundtrip(&text);
        }
    }
}
