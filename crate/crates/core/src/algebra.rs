//! Hom-Lie and compatible Hom-Lie algebras given by structure constants,
//! their representations, operator checks, and product constructions.
//!
//! Types here never enforce the algebra axioms; [`verify_structure`],
//! [`verify_representation`] and [`verify_operator`] evaluate the defining
//! identities on basis tuples and report every violation.

use num_traits::Zero;

use crate::cochain::{combinations, evaluate, Cochain};
use crate::cohomology::ce_coboundary;
use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, is_zero_vector, rat, unit_vector, vector_add, vector_sub,
    zero_vector, Matrix, Rational, Vector,
};

/// Skew-symmetric bilinear bracket on a `dim`-dimensional space, stored as
/// the values `[e_i, e_j]` for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    cochain: Cochain,
}

impl StructureConstants {
    pub fn zero(dim: usize) -> Self {
        StructureConstants {
            cochain: Cochain::zero(2, dim, dim),
        }
    }

    /// Builds a bracket from `(i, j, [e_i, e_j])` entries with `i < j`;
    /// unlisted pairs bracket to zero.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, Vector)]) -> Result<Self> {
        let mut table = vec![None; crate::cochain::binomial(dim, 2)];
        for (i, j, v) in entries {
            if i >= j || *j >= dim {
                return Err(Error::usage(format!(
                    "bracket entry ({i}, {j}) must satisfy i < j < {dim}"
                )));
            }
            if v.len() != dim {
                return Err(Error::usage(format!(
                    "bracket entry ({i}, {j}) has {} coefficients, expected {dim}",
                    v.len()
                )));
            }
            let idx = crate::cochain::combination_index(dim, &[*i, *j]);
            if table[idx].is_some() {
                return Err(Error::usage(format!("duplicate bracket entry ({i}, {j})")));
            }
            table[idx] = Some(v.clone());
        }
        Ok(StructureConstants {
            cochain: Cochain::from_fn(2, dim, dim, |combo| {
                let idx = crate::cochain::combination_index(dim, combo);
                table[idx].clone().unwrap_or_else(|| zero_vector(dim))
            }),
        })
    }

    /// Integer-coefficient shorthand for fixtures and tests.
    pub fn from_int_entries(dim: usize, entries: &[(usize, usize, &[i64])]) -> Self {
        let converted: Vec<(usize, usize, Vector)> = entries
            .iter()
            .map(|(i, j, v)| (*i, *j, v.iter().map(|&x| rat(x)).collect()))
            .collect();
        StructureConstants::from_entries(dim, &converted).expect("valid integer entries")
    }

    /// Wraps an arity-2 endomorphism cochain.
    pub fn from_cochain(cochain: Cochain) -> Result<Self> {
        if cochain.arity() != 2 || cochain.source_dim() != cochain.target_dim() {
            return Err(Error::usage(
                "a bracket must be an arity-2 endomorphism cochain",
            ));
        }
        Ok(StructureConstants { cochain })
    }

    pub fn dim(&self) -> usize {
        self.cochain.source_dim()
    }

    pub fn as_cochain(&self) -> &Cochain {
        &self.cochain
    }

    /// `[e_i, e_j]` for any indices; skew-symmetry and the zero diagonal are built in.
    pub fn on_basis(&self, i: usize, j: usize) -> Vector {
        self.cochain.on_basis(&[i, j])
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        evaluate(&self.cochain, &[x.to_vec(), y.to_vec()]).expect("vector lengths match dimension")
    }

    /// Nonzero entries `(i, j, [e_i, e_j])` with `i < j`.
    pub fn entries(&self) -> Vec<(usize, usize, Vector)> {
        combinations(self.dim(), 2)
            .into_iter()
            .enumerate()
            .map(|(c, pair)| (pair[0], pair[1], self.cochain.value_at(c)))
            .filter(|(_, _, v)| !is_zero_vector(v))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cochain.is_zero()
    }

    /// `λ·self + η·other`.
    pub fn combine(&self, lambda: &Rational, other: &StructureConstants, eta: &Rational) -> Self {
        StructureConstants {
            cochain: self.cochain.scale(lambda).add(&other.cochain.scale(eta)),
        }
    }

    /// `m ∘ [·,·]`.
    pub fn compose_left(&self, m: &Matrix) -> Self {
        StructureConstants {
            cochain: self.cochain.compose_left(m),
        }
    }
}

/// Shared view of plain and compatible Hom-Lie algebras.
pub trait HomLieStructure {
    fn dim(&self) -> usize;
    fn alpha(&self) -> &Matrix;
    fn brackets(&self) -> &[StructureConstants];
}

fn check_twist(alpha: &Matrix, brackets: &[StructureConstants]) -> Result<()> {
    if !alpha.is_square() {
        return Err(Error::usage("twist map must be square"));
    }
    if let Some(b) = brackets.iter().find(|b| b.dim() != alpha.rows()) {
        return Err(Error::usage(format!(
            "bracket on dimension {} does not match twist of size {}",
            b.dim(),
            alpha.rows()
        )));
    }
    Ok(())
}

/// A vector space with one skew bracket and a twist map `α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomLieAlgebra {
    alpha: Matrix,
    brackets: Vec<StructureConstants>,
}

impl HomLieAlgebra {
    pub fn new(alpha: Matrix, bracket: StructureConstants) -> Result<Self> {
        check_twist(&alpha, std::slice::from_ref(&bracket))?;
        Ok(HomLieAlgebra {
            alpha,
            brackets: vec![bracket],
        })
    }

    pub fn bracket(&self) -> &StructureConstants {
        &self.brackets[0]
    }

    /// The `n`-th derived algebra: bracket `αⁿ∘[·,·]`, twist `α^{n+1}`.
    pub fn derived(&self, n: usize) -> HomLieAlgebra {
        let power = self.alpha.pow(n);
        HomLieAlgebra {
            alpha: power.mul(&self.alpha),
            brackets: vec![self.brackets[0].compose_left(&power)],
        }
    }
}

impl HomLieStructure for HomLieAlgebra {
    fn dim(&self) -> usize {
        self.alpha.rows()
    }
    fn alpha(&self) -> &Matrix {
        &self.alpha
    }
    fn brackets(&self) -> &[StructureConstants] {
        &self.brackets
    }
}

/// One carrier and twist with two brackets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompatibleHomLieAlgebra {
    alpha: Matrix,
    brackets: Vec<StructureConstants>,
}

impl CompatibleHomLieAlgebra {
    pub fn new(
        alpha: Matrix,
        bracket1: StructureConstants,
        bracket2: StructureConstants,
    ) -> Result<Self> {
        let brackets = vec![bracket1, bracket2];
        check_twist(&alpha, &brackets)?;
        Ok(CompatibleHomLieAlgebra { alpha, brackets })
    }

    /// Pairs two Hom-Lie algebras sharing a twist.
    pub fn from_pair(first: &HomLieAlgebra, second: &HomLieAlgebra) -> Result<Self> {
        if first.alpha != second.alpha {
            return Err(Error::usage("the two algebras have different twist maps"));
        }
        CompatibleHomLieAlgebra::new(
            first.alpha.clone(),
            first.bracket().clone(),
            second.bracket().clone(),
        )
    }

    pub fn bracket1(&self) -> &StructureConstants {
        &self.brackets[0]
    }

    pub fn bracket2(&self) -> &StructureConstants {
        &self.brackets[1]
    }

    /// The Hom-Lie algebra carried by bracket `index` (0 or 1).
    pub fn component(&self, index: usize) -> HomLieAlgebra {
        HomLieAlgebra {
            alpha: self.alpha.clone(),
            brackets: vec![self.brackets[index].clone()],
        }
    }

    /// Each bracket replaced by `αⁿ∘[·,·]ᵢ`, twist by `α^{n+1}`.
    pub fn derived(&self, n: usize) -> CompatibleHomLieAlgebra {
        let power = self.alpha.pow(n);
        CompatibleHomLieAlgebra {
            alpha: power.mul(&self.alpha),
            brackets: self.brackets.iter().map(|b| b.compose_left(&power)).collect(),
        }
    }
}

impl HomLieStructure for CompatibleHomLieAlgebra {
    fn dim(&self) -> usize {
        self.alpha.rows()
    }
    fn alpha(&self) -> &Matrix {
        &self.alpha
    }
    fn brackets(&self) -> &[StructureConstants] {
        &self.brackets
    }
}

/// The Hom-Lie algebra with bracket `λ[·,·]₁ + η[·,·]₂`.
pub fn sum_bracket(c: &CompatibleHomLieAlgebra, lambda: &Rational, eta: &Rational) -> HomLieAlgebra {
    HomLieAlgebra {
        alpha: c.alpha.clone(),
        brackets: vec![c.brackets[0].combine(lambda, &c.brackets[1], eta)],
    }
}

/// Module `(V, β)` with one action table per bracket of the base:
/// `actions[b][i]` is the matrix of `e_i •_b (·)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    vdim: usize,
    beta: Matrix,
    actions: Vec<Vec<Matrix>>,
}

impl Representation {
    pub fn new(beta: Matrix, actions: Vec<Vec<Matrix>>) -> Result<Self> {
        if !beta.is_square() {
            return Err(Error::usage("β must be square"));
        }
        let vdim = beta.rows();
        let base_dim = actions.first().map_or(0, Vec::len);
        if actions.is_empty() || actions.len() > 2 {
            return Err(Error::usage("a representation has one or two action tables"));
        }
        for table in &actions {
            if table.len() != base_dim {
                return Err(Error::usage("action tables cover different base dimensions"));
            }
            if table.iter().any(|m| m.rows() != vdim || m.cols() != vdim) {
                return Err(Error::usage(format!("action matrices must be {vdim}x{vdim}")));
            }
        }
        Ok(Representation {
            vdim,
            beta,
            actions,
        })
    }

    /// All actions zero.
    pub fn trivial(base_dim: usize, bracket_count: usize, beta: Matrix) -> Self {
        let vdim = beta.rows();
        Representation {
            vdim,
            beta,
            actions: vec![vec![Matrix::zeros(vdim, vdim); base_dim]; bracket_count],
        }
    }

    /// The adjoint representation: `x •_b v = [x, v]_b`, `β = α`.
    pub fn adjoint<S: HomLieStructure + ?Sized>(s: &S) -> Self {
        let d = s.dim();
        let actions = s
            .brackets()
            .iter()
            .map(|b| {
                (0..d)
                    .map(|i| {
                        let cols: Vec<Vector> = (0..d).map(|k| b.on_basis(i, k)).collect();
                        Matrix::from_columns(d, &cols)
                    })
                    .collect()
            })
            .collect();
        Representation {
            vdim: d,
            beta: s.alpha().clone(),
            actions,
        }
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn base_dim(&self) -> usize {
        self.actions[0].len()
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn bracket_count(&self) -> usize {
        self.actions.len()
    }

    pub fn action_table(&self, b: usize) -> &[Matrix] {
        &self.actions[b]
    }

    /// Matrix of `x •_b (·)`.
    pub fn action_matrix(&self, b: usize, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.vdim, self.vdim);
        for (xi, a) in x.iter().zip(&self.actions[b]) {
            if !xi.is_zero() {
                m = m.add(&a.scale(xi));
            }
        }
        m
    }

    /// `x •_b v`.
    pub fn act(&self, b: usize, x: &[Rational], v: &[Rational]) -> Vector {
        let mut out = zero_vector(self.vdim);
        for (xi, a) in x.iter().zip(&self.actions[b]) {
            if !xi.is_zero() {
                add_scaled(&mut out, xi, &a.mul_vec(v));
            }
        }
        out
    }

    /// The single-action representation for bracket `b`.
    pub fn component(&self, b: usize) -> Representation {
        Representation {
            vdim: self.vdim,
            beta: self.beta.clone(),
            actions: vec![self.actions[b].clone()],
        }
    }

    /// Action `λ•₁ + η•₂` of a two-action representation.
    pub fn combined(&self, lambda: &Rational, eta: &Rational) -> Representation {
        let table = self.actions[0]
            .iter()
            .zip(&self.actions[1])
            .map(|(a, b)| a.scale(lambda).add(&b.scale(eta)))
            .collect();
        Representation {
            vdim: self.vdim,
            beta: self.beta.clone(),
            actions: vec![table],
        }
    }
}

/// One basis tuple at which an identity fails, with the nonzero defect.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub defect: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

/// Outcome of evaluating a set of identities on basis tuples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failing(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn extend(&mut self, prefix: &str, other: ValidationReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    /// Runs `defect` on each tuple and records a check; tuples are visited in
    /// the given order, which callers keep lexicographic.
    pub(crate) fn record(
        &mut self,
        name: impl Into<String>,
        tuples: impl IntoIterator<Item = Vec<usize>>,
        mut defect: impl FnMut(&[usize]) -> Vector,
    ) {
        let witnesses: Vec<Witness> = tuples
            .into_iter()
            .filter_map(|t| {
                let d = defect(&t);
                (!is_zero_vector(&d)).then_some(Witness {
                    indices: t,
                    defect: d,
                })
            })
            .collect();
        self.checks.push(Check {
            name: name.into(),
            passed: witnesses.is_empty(),
            witnesses,
        });
    }
}

fn suffixed(name: &str, b: usize, count: usize) -> String {
    if count == 1 {
        name.to_string()
    } else {
        format!("{name}[{}]", b + 1)
    }
}

fn pairs(d: usize) -> impl Iterator<Item = Vec<usize>> {
    combinations(d, 2).into_iter()
}

fn triples(d: usize) -> impl Iterator<Item = Vec<usize>> {
    combinations(d, 3).into_iter()
}

/// `[[x,y]_a, αz]_b + [[y,z]_a, αx]_b + [[z,x]_a, αy]_b` on basis vectors.
fn jacobiator(
    outer: &StructureConstants,
    inner: &StructureConstants,
    alpha: &Matrix,
    i: usize,
    j: usize,
    k: usize,
) -> Vector {
    let term = |a: usize, b: usize, c: usize| outer.bracket(&inner.on_basis(a, b), &alpha.column(c));
    let mut out = term(i, j, k);
    out = vector_add(&out, &term(j, k, i));
    vector_add(&out, &term(k, i, j))
}

/// Evaluates multiplicativity and the Hom-Jacobi identity for every bracket,
/// plus the mixed compatibility identity when there are two brackets.
///
/// Both identities are alternating in their arguments, so increasing index
/// tuples cover all basis tuples.
pub fn verify_structure<S: HomLieStructure + ?Sized>(s: &S) -> ValidationReport {
    let d = s.dim();
    let alpha = s.alpha();
    let brackets = s.brackets();
    let mut report = ValidationReport::default();
    for (b, bracket) in brackets.iter().enumerate() {
        report.record(suffixed("multiplicativity", b, brackets.len()), pairs(d), |t| {
            let lhs = alpha.mul_vec(&bracket.on_basis(t[0], t[1]));
            let rhs = bracket.bracket(&alpha.column(t[0]), &alpha.column(t[1]));
            vector_sub(&lhs, &rhs)
        });
        report.record(suffixed("hom-jacobi", b, brackets.len()), triples(d), |t| {
            jacobiator(bracket, bracket, alpha, t[0], t[1], t[2])
        });
    }
    if let [b1, b2] = brackets {
        report.record("compatibility", triples(d), |t| {
            vector_add(
                &jacobiator(b2, b1, alpha, t[0], t[1], t[2]),
                &jacobiator(b1, b2, alpha, t[0], t[1], t[2]),
            )
        });
    }
    report
}

/// Evaluates the representation identities of `rep` over `base`: β-equivariance
/// of each action, the twisted module identity, and for two actions the mixed
/// compatibility identity.
pub fn verify_representation<S: HomLieStructure + ?Sized>(
    base: &S,
    rep: &Representation,
) -> Result<ValidationReport> {
    let d = base.dim();
    let count = base.brackets().len();
    if rep.bracket_count() != count {
        return Err(Error::usage(format!(
            "representation has {} action tables, base has {count} brackets",
            rep.bracket_count()
        )));
    }
    if rep.base_dim() != d {
        return Err(Error::usage(format!(
            "representation acts by a {}-dimensional algebra, base has dimension {d}",
            rep.base_dim()
        )));
    }
    let alpha = base.alpha();
    let beta = rep.beta();
    let vdim = rep.vdim();
    let e = |i: usize| unit_vector(d, i);
    let v = |k: usize| unit_vector(vdim, k);
    let mut report = ValidationReport::default();
    for (b, bracket) in base.brackets().iter().enumerate() {
        let pairs_xv = (0..d).flat_map(|i| (0..vdim).map(move |k| vec![i, k]));
        report.record(suffixed("rep-equivariance", b, count), pairs_xv, |t| {
            let lhs = beta.mul_vec(&rep.act(b, &e(t[0]), &v(t[1])));
            let rhs = rep.act(b, &alpha.column(t[0]), &beta.column(t[1]));
            vector_sub(&lhs, &rhs)
        });
        let triples_xyv =
            pairs(d).flat_map(|p| (0..vdim).map(move |k| vec![p[0], p[1], k]));
        report.record(suffixed("rep-module", b, count), triples_xyv, |t| {
            let (x, y, k) = (t[0], t[1], t[2]);
            let lhs = rep.act(b, &bracket.on_basis(x, y), &beta.column(k));
            let first = rep.act(b, &alpha.column(x), &rep.act(b, &e(y), &v(k)));
            let second = rep.act(b, &alpha.column(y), &rep.act(b, &e(x), &v(k)));
            vector_sub(&lhs, &vector_sub(&first, &second))
        });
    }
    if let [b1, b2] = base.brackets() {
        let triples_xyv = pairs(d).flat_map(|p| (0..vdim).map(move |k| vec![p[0], p[1], k]));
        report.record("rep-compatibility", triples_xyv, |t| {
            let (x, y, k) = (t[0], t[1], t[2]);
            let bv = beta.column(k);
            let lhs = vector_add(
                &rep.act(1, &b1.on_basis(x, y), &bv),
                &rep.act(0, &b2.on_basis(x, y), &bv),
            );
            let ax = alpha.column(x);
            let ay = alpha.column(y);
            let (ex, ey, vk) = (e(x), e(y), v(k));
            let mut rhs = rep.act(0, &ax, &rep.act(1, &ey, &vk));
            rhs = vector_sub(&rhs, &rep.act(1, &ay, &rep.act(0, &ex, &vk)));
            rhs = vector_add(&rhs, &rep.act(1, &ax, &rep.act(0, &ey, &vk)));
            rhs = vector_sub(&rhs, &rep.act(0, &ay, &rep.act(1, &ex, &vk)));
            vector_sub(&lhs, &rhs)
        });
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    Nijenhuis,
    RotaBaxter(Rational),
}

/// Linear operator on the carrier of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOperator {
    pub matrix: Matrix,
    pub kind: OperatorKind,
}

impl LinearOperator {
    pub fn nijenhuis(matrix: Matrix) -> Self {
        LinearOperator {
            matrix,
            kind: OperatorKind::Nijenhuis,
        }
    }

    pub fn rota_baxter(matrix: Matrix, weight: Rational) -> Self {
        LinearOperator {
            matrix,
            kind: OperatorKind::RotaBaxter(weight),
        }
    }

    pub fn weight(&self) -> Option<&Rational> {
        match &self.kind {
            OperatorKind::RotaBaxter(w) => Some(w),
            OperatorKind::Nijenhuis => None,
        }
    }
}

/// `[Tx, y] + [x, Ty] + c·T[x, y]` on basis vectors.
fn operator_term(
    bracket: &StructureConstants,
    t: &Matrix,
    c: &Rational,
    x: usize,
    y: usize,
) -> Vector {
    let d = bracket.dim();
    let mut out = vector_add(
        &bracket.bracket(&t.column(x), &unit_vector(d, y)),
        &bracket.bracket(&unit_vector(d, x), &t.column(y)),
    );
    if !c.is_zero() {
        add_scaled(&mut out, c, &t.mul_vec(&bracket.on_basis(x, y)));
    }
    out
}

/// The bracket induced by an operator: `[Nx,y]+[x,Ny]−N[x,y]` for a
/// Nijenhuis operator, `[Rx,y]+[x,Ry]+λ[x,y]` for a Rota-Baxter operator of
/// weight `λ`. No operator identity is checked.
pub fn operator_bracket(bracket: &StructureConstants, op: &LinearOperator) -> StructureConstants {
    let d = bracket.dim();
    let t = &op.matrix;
    let cochain = Cochain::from_fn(2, d, d, |p| match &op.kind {
        OperatorKind::Nijenhuis => operator_term(bracket, t, &rat(-1), p[0], p[1]),
        OperatorKind::RotaBaxter(w) => {
            let mut v = operator_term(bracket, t, &Rational::zero(), p[0], p[1]);
            add_scaled(&mut v, w, &bracket.on_basis(p[0], p[1]));
            v
        }
    });
    StructureConstants { cochain }
}

/// Checks `α∘T = T∘α` and the Nijenhuis or Rota-Baxter identity for every
/// bracket of the carrier.
pub fn verify_operator<S: HomLieStructure + ?Sized>(
    s: &S,
    op: &LinearOperator,
) -> Result<ValidationReport> {
    let d = s.dim();
    let t = &op.matrix;
    if t.rows() != d || t.cols() != d {
        return Err(Error::usage(format!("operator must be {d}x{d}")));
    }
    let alpha = s.alpha();
    let mut report = ValidationReport::default();
    let commutator = alpha.mul(t).sub(&t.mul(alpha));
    report.record("alpha-commutation", (0..d).map(|i| vec![i]), |i| {
        commutator.column(i[0])
    });
    let count = s.brackets().len();
    for (b, bracket) in s.brackets().iter().enumerate() {
        let induced = operator_bracket(bracket, op);
        let name = match op.kind {
            OperatorKind::Nijenhuis => "nijenhuis",
            OperatorKind::RotaBaxter(_) => "rota-baxter",
        };
        // [Tx, Ty] = T([x, y]_T) in both cases
        report.record(suffixed(name, b, count), pairs(d), |p| {
            let lhs = bracket.bracket(&t.column(p[0]), &t.column(p[1]));
            let rhs = t.mul_vec(&induced.on_basis(p[0], p[1]));
            vector_sub(&lhs, &rhs)
        });
    }
    Ok(report)
}

/// The algebra with the operator-induced bracket and the same twist.
pub fn induced_bracket(l: &HomLieAlgebra, op: &LinearOperator) -> Result<HomLieAlgebra> {
    let report = verify_operator(l, op)?;
    if !report.passed() {
        return Err(Error::with_report("operator identities fail", report));
    }
    Ok(HomLieAlgebra {
        alpha: l.alpha.clone(),
        brackets: vec![operator_bracket(l.bracket(), op)],
    })
}

/// `−λ·id − R`, again a Rota-Baxter operator of weight `λ`.
pub fn rb_companion(r: &LinearOperator) -> Result<LinearOperator> {
    let OperatorKind::RotaBaxter(w) = &r.kind else {
        return Err(Error::usage("companion is defined for Rota-Baxter operators only"));
    };
    let n = r.matrix.rows();
    let m = Matrix::identity(n).scale(&-w.clone()).sub(&r.matrix);
    Ok(LinearOperator::rota_baxter(m, w.clone()))
}

/// Checks two Rota-Baxter operators of equal weight individually and for
/// pair compatibility; when everything holds returns the compatible algebra
/// `([·,·]_R, [·,·]_S)`.
pub fn rb_pair(
    l: &HomLieAlgebra,
    r: &LinearOperator,
    s: &LinearOperator,
) -> Result<(ValidationReport, Option<CompatibleHomLieAlgebra>)> {
    let (Some(wr), Some(ws)) = (r.weight(), s.weight()) else {
        return Err(Error::usage("both operators must be Rota-Baxter operators"));
    };
    if wr != ws {
        return Err(Error::usage(format!(
            "Rota-Baxter weights differ: {wr} vs {ws}"
        )));
    }
    let mut report = ValidationReport::default();
    report.extend("R:", verify_operator(l, r)?);
    report.extend("S:", verify_operator(l, s)?);
    let d = l.dim();
    let bracket = l.bracket();
    let zero = Rational::zero();
    report.record("rota-baxter-compatibility", pairs(d), |p| {
        let (x, y) = (p[0], p[1]);
        let lhs = vector_add(
            &bracket.bracket(&r.matrix.column(x), &s.matrix.column(y)),
            &bracket.bracket(&s.matrix.column(x), &r.matrix.column(y)),
        );
        let rhs = vector_add(
            &r.matrix.mul_vec(&operator_term(bracket, &s.matrix, &zero, x, y)),
            &s.matrix.mul_vec(&operator_term(bracket, &r.matrix, &zero, x, y)),
        );
        vector_sub(&lhs, &rhs)
    });
    let algebra = report.passed().then(|| CompatibleHomLieAlgebra {
        alpha: l.alpha.clone(),
        brackets: vec![operator_bracket(bracket, r), operator_bracket(bracket, s)],
    });
    Ok((report, algebra))
}

/// Bracket on `𝔤 ⊕ V`: `[(x,u),(y,v)] = ([x,y], x•v − y•u + f(x,y))`.
pub(crate) fn product_bracket(
    bracket: &StructureConstants,
    rep: &Representation,
    b: usize,
    twist: Option<&Cochain>,
) -> StructureConstants {
    let d = bracket.dim();
    let vdim = rep.vdim();
    let total = d + vdim;
    let cochain = Cochain::from_fn(2, total, total, |p| {
        let (i, j) = (p[0], p[1]);
        let mut out = zero_vector(total);
        if j < d {
            out[..d].clone_from_slice(&bracket.on_basis(i, j));
            if let Some(f) = twist {
                out[d..].clone_from_slice(&f.on_basis(&[i, j]));
            }
        } else if i < d {
            // (e_i, 0) against (0, v_k): e_i • v_k
            let value = rep.act(b, &unit_vector(d, i), &unit_vector(vdim, j - d));
            out[d..].clone_from_slice(&value);
        }
        out
    });
    StructureConstants { cochain }
}

/// Compatible algebra on `𝔤 ⊕ V` with twist `α ⊕ β` and brackets
/// `([x,y]ᵢ, x•ᵢv − y•ᵢu)`.
pub fn semidirect_product(
    c: &CompatibleHomLieAlgebra,
    v: &Representation,
) -> Result<CompatibleHomLieAlgebra> {
    let mut report = verify_structure(c);
    report.extend("", verify_representation(c, v)?);
    if !report.passed() {
        return Err(Error::with_report(
            "semidirect product needs a valid algebra and representation",
            report,
        ));
    }
    Ok(CompatibleHomLieAlgebra {
        alpha: c.alpha.direct_sum(v.beta()),
        brackets: (0..2)
            .map(|b| product_bracket(&c.brackets[b], v, b, None))
            .collect(),
    })
}

/// Hom-Lie algebra on `𝔤 ⊕ V` with bracket `([x,y], x•v − y•u + f(x,y))`
/// for a 2-cocycle `f`.
pub fn twisted_semidirect(
    l: &HomLieAlgebra,
    v: &Representation,
    f: &Cochain,
) -> Result<HomLieAlgebra> {
    let mut report = verify_structure(l);
    report.extend("", verify_representation(l, v)?);
    if !report.passed() {
        return Err(Error::with_report(
            "twisted semidirect product needs a valid algebra and representation",
            report,
        ));
    }
    if f.arity() != 2 || f.source_dim() != l.dim() || f.target_dim() != v.vdim() {
        return Err(Error::usage("twisting cochain must map Λ²𝔤 into V"));
    }
    if !ce_coboundary(l, v, f)?.is_zero() {
        return Err(Error::precondition("twisting cochain is not a 2-cocycle"));
    }
    Ok(HomLieAlgebra {
        alpha: l.alpha.direct_sum(v.beta()),
        brackets: vec![product_bracket(l.bracket(), v, 0, Some(f))],
    })
}
