//! Input documents: JSON with rationals as strings and 0-based indices.

use std::fmt;

use cohomlie::linalg::{rat, Matrix, Rational, Vector};
use cohomlie::{
    Cochain, CompatibleHomLieAlgebra, ExtensionCocycle, HomLieAlgebra, HomLieStructure,
    LinearGenerator, LinearOperator, Representation, StructureConstants,
};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub schema_version: String,
    pub dimension: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis_names: Vec<String>,
    pub alpha: Vec<Vec<String>>,
    /// One table for a Hom-Lie algebra, two for a compatible pair.
    pub brackets: Vec<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationBlock>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub operators: Vec<OperatorBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deformation: Option<DeformationBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionBlock>,
}

/// Value of an alternating map on `(e_i, e_j)`, `i < j`. Pairs not listed are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum RepresentationBlock {
    /// The algebra acting on itself.
    Adjoint,
    /// Zero action on a space of dimension `vdim`.
    Trivial { vdim: usize, beta: Vec<Vec<String>> },
    /// `actions[b][x]` is the `vdim × vdim` matrix of `e_x •_b ·`.
    Explicit {
        vdim: usize,
        beta: Vec<Vec<String>>,
        actions: Vec<Vec<Vec<Vec<String>>>>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorKindName {
    Nijenhuis,
    RotaBaxter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorBlock {
    pub name: String,
    pub kind: OperatorKindName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    pub matrix: Vec<Vec<String>>,
}

/// Higher coefficients `μ_{k,1..=order}` of a truncated deformation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationBlock {
    pub order: usize,
    pub coeffs1: Vec<Vec<Entry>>,
    pub coeffs2: Vec<Vec<Entry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocyclePair {
    pub f1: Vec<Entry>,
    pub f2: Vec<Entry>,
}

/// A cocycle with values in the representation, and optionally a second one
/// to compare against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionBlock {
    pub cocycle: CocyclePair,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compare: Option<CocyclePair>,
}

/// Malformed or out-of-range document content, with the offending field path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocumentError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.path, self.message)
        }
    }
}

impl std::error::Error for DocumentError {}

fn err(path: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError {
        path: path.into(),
        message: message.into(),
    }
}

type Parsed<T> = Result<T, DocumentError>;

/// Parses `p/q` or an integer. Decimal and exponent forms are rejected.
pub fn parse_rational(s: &str, path: &str) -> Parsed<Rational> {
    let t = s.trim();
    let ok = !t.is_empty()
        && t.chars().all(|c| c.is_ascii_digit() || c == '-' || c == '/' || c == '+');
    if !ok {
        return Err(err(path, format!("`{s}` is not a rational of the form p/q")));
    }
    let value: Rational = t
        .parse()
        .map_err(|_| err(path, format!("`{s}` is not a rational of the form p/q")))?;
    Ok(value)
}

pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn format_vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn format_matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vectors().iter().map(|r| format_vector(r)).collect()
}

fn parse_vector(v: &[String], len: usize, path: &str) -> Parsed<Vector> {
    if v.len() != len {
        return Err(err(path, format!("expected {len} entries, found {}", v.len())));
    }
    v.iter()
        .enumerate()
        .map(|(k, s)| parse_rational(s, &format!("{path}[{k}]")))
        .collect()
}

fn parse_matrix(rows: &[Vec<String>], r: usize, c: usize, path: &str) -> Parsed<Matrix> {
    if rows.len() != r {
        return Err(err(path, format!("expected {r} rows, found {}", rows.len())));
    }
    let parsed: Vec<Vector> = rows
        .iter()
        .enumerate()
        .map(|(k, row)| parse_vector(row, c, &format!("{path}[{k}]")))
        .collect::<Parsed<_>>()?;
    let entries: Vec<Rational> = parsed.into_iter().flatten().collect();
    Matrix::new(r, c, entries).map_err(|e| err(path, e.to_string()))
}

/// Alternating 2-cochain `Λ²K^dim → K^target` from an entry table.
fn parse_table(entries: &[Entry], dim: usize, target: usize, path: &str) -> Parsed<Cochain> {
    let mut seen = std::collections::BTreeSet::new();
    let mut values = Vec::with_capacity(entries.len());
    for (k, e) in entries.iter().enumerate() {
        let here = format!("{path}[{k}]");
        if e.i >= e.j {
            return Err(err(&here, format!("need i < j, found i = {}, j = {}", e.i, e.j)));
        }
        if e.j >= dim {
            return Err(err(&here, format!("index {} out of range for dimension {dim}", e.j)));
        }
        if !seen.insert((e.i, e.j)) {
            return Err(err(&here, format!("pair ({}, {}) listed twice", e.i, e.j)));
        }
        values.push(((e.i, e.j), parse_vector(&e.coefficients, target, &format!("{here}.coefficients"))?));
    }
    Ok(Cochain::from_fn(2, dim, target, |p| {
        values
            .iter()
            .find(|(key, _)| *key == (p[0], p[1]))
            .map_or_else(|| vec![rat(0); target], |(_, v)| v.clone())
    }))
}

/// Nonzero values of an arity-2 cochain as an entry table.
pub fn table_of(f: &Cochain) -> Vec<Entry> {
    let d = f.source_dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let v = f.on_basis(&[i, j]);
            if v.iter().any(|x| *x != rat(0)) {
                out.push(Entry {
                    i,
                    j,
                    coefficients: format_vector(&v),
                });
            }
        }
    }
    out
}

/// The structure described by the `alpha` and `brackets` fields.
#[derive(Clone, Debug)]
pub enum Algebra {
    Plain(HomLieAlgebra),
    Compatible(CompatibleHomLieAlgebra),
}

impl Algebra {
    pub fn dim(&self) -> usize {
        match self {
            Algebra::Plain(l) => l.dim(),
            Algebra::Compatible(c) => c.dim(),
        }
    }

    pub fn alpha(&self) -> &Matrix {
        match self {
            Algebra::Plain(l) => l.alpha(),
            Algebra::Compatible(c) => c.alpha(),
        }
    }

    pub fn bracket_count(&self) -> usize {
        match self {
            Algebra::Plain(_) => 1,
            Algebra::Compatible(_) => 2,
        }
    }

    /// A compatible view; a single bracket is paired with itself.
    pub fn as_compatible(&self) -> CompatibleHomLieAlgebra {
        match self {
            Algebra::Plain(l) => CompatibleHomLieAlgebra::from_pair(l, l).expect("same twist"),
            Algebra::Compatible(c) => c.clone(),
        }
    }
}

impl AlgebraDocument {
    /// Parses and validates a document.
    pub fn parse(text: &str) -> Parsed<AlgebraDocument> {
        let doc: AlgebraDocument = serde_json::from_str(text).map_err(|e| {
            err(
                format!("line {} column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    fn validate(&self) -> Parsed<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(err(
                "schema_version",
                format!("unsupported version `{}`", self.schema_version),
            ));
        }
        if !self.basis_names.is_empty() && self.basis_names.len() != self.dimension {
            return Err(err("basis_names", format!("expected {} names", self.dimension)));
        }
        let algebra = self.algebra()?;
        self.representation(&algebra)?;
        for k in 0..self.operators.len() {
            self.operator_at(k)?;
        }
        if self.deformation.is_some() {
            self.deformation_coefficients()?;
        }
        if self.extension.is_some() {
            self.extension_cocycles(&algebra)?;
        }
        Ok(())
    }

    pub fn algebra(&self) -> Parsed<Algebra> {
        let d = self.dimension;
        if d == 0 {
            return Err(err("dimension", "must be positive"));
        }
        let alpha = parse_matrix(&self.alpha, d, d, "alpha")?;
        let tables: Vec<StructureConstants> = self
            .brackets
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let f = parse_table(t, d, d, &format!("brackets[{k}]"))?;
                StructureConstants::from_cochain(f).map_err(|e| err(format!("brackets[{k}]"), e.to_string()))
            })
            .collect::<Parsed<_>>()?;
        let wrap = |e: cohomlie::Error| err("brackets", e.to_string());
        match tables.as_slice() {
            [b] => Ok(Algebra::Plain(HomLieAlgebra::new(alpha, b.clone()).map_err(wrap)?)),
            [b1, b2] => Ok(Algebra::Compatible(
                CompatibleHomLieAlgebra::new(alpha, b1.clone(), b2.clone()).map_err(wrap)?,
            )),
            _ => Err(err("brackets", format!("expected 1 or 2 tables, found {}", tables.len()))),
        }
    }

    /// The representation block, or the adjoint representation when absent.
    pub fn representation(&self, algebra: &Algebra) -> Parsed<Representation> {
        let d = self.dimension;
        let count = algebra.bracket_count();
        let adjoint = || match algebra {
            Algebra::Plain(l) => Representation::adjoint(l),
            Algebra::Compatible(c) => Representation::adjoint(c),
        };
        let path = "representation";
        match &self.representation {
            None | Some(RepresentationBlock::Adjoint) => Ok(adjoint()),
            Some(RepresentationBlock::Trivial { vdim, beta }) => {
                let beta = parse_matrix(beta, *vdim, *vdim, "representation.beta")?;
                Ok(Representation::trivial(d, count, beta))
            }
            Some(RepresentationBlock::Explicit { vdim, beta, actions }) => {
                let beta = parse_matrix(beta, *vdim, *vdim, "representation.beta")?;
                if actions.len() != count {
                    return Err(err(
                        "representation.actions",
                        format!("expected {count} action tables, found {}", actions.len()),
                    ));
                }
                let mut tables = Vec::with_capacity(count);
                for (b, table) in actions.iter().enumerate() {
                    if table.len() != d {
                        return Err(err(
                            format!("representation.actions[{b}]"),
                            format!("expected {d} matrices, found {}", table.len()),
                        ));
                    }
                    let ms = table
                        .iter()
                        .enumerate()
                        .map(|(x, m)| parse_matrix(m, *vdim, *vdim, &format!("representation.actions[{b}][{x}]")))
                        .collect::<Parsed<Vec<_>>>()?;
                    tables.push(ms);
                }
                Representation::new(beta, tables).map_err(|e| err(path, e.to_string()))
            }
        }
    }

    fn operator_at(&self, k: usize) -> Parsed<LinearOperator> {
        let block = &self.operators[k];
        let path = format!("operators[{k}]");
        let d = self.dimension;
        let matrix = parse_matrix(&block.matrix, d, d, &format!("{path}.matrix"))?;
        match (block.kind, &block.weight) {
            (OperatorKindName::Nijenhuis, None) => Ok(LinearOperator::nijenhuis(matrix)),
            (OperatorKindName::Nijenhuis, Some(_)) => {
                Err(err(format!("{path}.weight"), "Nijenhuis operators take no weight"))
            }
            (OperatorKindName::RotaBaxter, w) => {
                let weight = match w {
                    Some(w) => parse_rational(w, &format!("{path}.weight"))?,
                    None => rat(0),
                };
                Ok(LinearOperator::rota_baxter(matrix, weight))
            }
        }
    }

    /// Looks up an operator by name; with no name the document must hold exactly one.
    pub fn operator(&self, name: Option<&str>) -> Parsed<(String, LinearOperator)> {
        let index = match name {
            Some(n) => self
                .operators
                .iter()
                .position(|o| o.name == n)
                .ok_or_else(|| err("operators", format!("no operator named `{n}`")))?,
            None if self.operators.len() == 1 => 0,
            None => {
                return Err(err(
                    "operators",
                    format!("{} operators present; choose one with --operator", self.operators.len()),
                ))
            }
        };
        Ok((self.operators[index].name.clone(), self.operator_at(index)?))
    }

    /// `(μ_{1,1..=p}, μ_{2,1..=p})`.
    pub fn deformation_coefficients(&self) -> Parsed<(Vec<Cochain>, Vec<Cochain>)> {
        let block = self
            .deformation
            .as_ref()
            .ok_or_else(|| err("deformation", "document has no deformation block"))?;
        let d = self.dimension;
        if block.order == 0 {
            return Err(err("deformation.order", "must be at least 1"));
        }
        let mut out = (Vec::new(), Vec::new());
        for (name, list, sink) in [
            ("coeffs1", &block.coeffs1, &mut out.0),
            ("coeffs2", &block.coeffs2, &mut out.1),
        ] {
            if list.len() != block.order {
                return Err(err(
                    format!("deformation.{name}"),
                    format!("expected {} tables, found {}", block.order, list.len()),
                ));
            }
            for (k, t) in list.iter().enumerate() {
                sink.push(parse_table(t, d, d, &format!("deformation.{name}[{k}]"))?);
            }
        }
        Ok(out)
    }

    /// The cocycle and the optional comparison cocycle.
    pub fn extension_cocycles(
        &self,
        algebra: &Algebra,
    ) -> Parsed<(ExtensionCocycle, Option<ExtensionCocycle>)> {
        let block = self
            .extension
            .as_ref()
            .ok_or_else(|| err("extension", "document has no extension block"))?;
        let d = self.dimension;
        let vdim = self.representation(algebra)?.vdim();
        let pair = |p: &CocyclePair, path: &str| -> Parsed<ExtensionCocycle> {
            Ok(ExtensionCocycle::new(
                parse_table(&p.f1, d, vdim, &format!("{path}.f1"))?,
                parse_table(&p.f2, d, vdim, &format!("{path}.f2"))?,
            ))
        };
        let main = pair(&block.cocycle, "extension.cocycle")?;
        let compare = block
            .compare
            .as_ref()
            .map(|p| pair(p, "extension.compare"))
            .transpose()?;
        Ok((main, compare))
    }

    /// Document for an algebra with no optional blocks.
    pub fn from_algebra(algebra: &Algebra) -> AlgebraDocument {
        let brackets: Vec<Vec<Entry>> = match algebra {
            Algebra::Plain(l) => vec![table_of(l.bracket().as_cochain())],
            Algebra::Compatible(c) => c.brackets().iter().map(|b| table_of(b.as_cochain())).collect(),
        };
        AlgebraDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            dimension: algebra.dim(),
            basis_names: Vec::new(),
            alpha: format_matrix(algebra.alpha()),
            brackets,
            representation: None,
            operators: Vec::new(),
            deformation: None,
            extension: None,
        }
    }
}

/// Operator block for `op` under `name`.
pub fn operator_block(name: &str, op: &LinearOperator) -> OperatorBlock {
    let weight = op.weight().map(format_rational);
    OperatorBlock {
        name: name.to_string(),
        kind: if weight.is_some() {
            OperatorKindName::RotaBaxter
        } else {
            OperatorKindName::Nijenhuis
        },
        weight,
        matrix: format_matrix(&op.matrix),
    }
}

/// Deformation block of order 1 for a linear generator.
pub fn generator_block(g: &LinearGenerator) -> DeformationBlock {
    DeformationBlock {
        order: 1,
        coeffs1: vec![table_of(&g.omega1)],
        coeffs2: vec![table_of(&g.omega2)],
    }
}

pub fn cocycle_pair(z: &ExtensionCocycle) -> CocyclePair {
    CocyclePair {
        f1: table_of(&z.f1),
        f2: table_of(&z.f2),
    }
}

/// Representation block listing every action matrix.
pub fn explicit_representation(rep: &Representation) -> RepresentationBlock {
    RepresentationBlock::Explicit {
        vdim: rep.vdim(),
        beta: format_matrix(rep.beta()),
        actions: (0..rep.bracket_count())
            .map(|b| rep.action_table(b).iter().map(format_matrix).collect())
            .collect(),
    }
}
