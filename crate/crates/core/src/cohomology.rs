//! Chevalley–Eilenberg coboundary, the compatible complex, cohomology
//! dimensions with explicit bases, derivations, and the comparison map to the
//! sum algebra.

use num_traits::Zero;

use crate::algebra::{
    sum_bracket, verify_representation, verify_structure, CompatibleHomLieAlgebra, HomLieAlgebra,
    HomLieStructure, Representation, StructureConstants,
};
use crate::cochain::{combinations, eval_unchecked, hom_cochain_basis, Cochain};
use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, in_span, independent_subset, kernel_basis, rat, ratio, solve, unit_vector,
    zero_vector, Matrix, Rational, Vector,
};

/// Coboundary of `f` for one bracket and the matching action table, with no
/// membership checks.
pub(crate) fn coboundary_with(
    alpha: &Matrix,
    bracket: &StructureConstants,
    rep: &Representation,
    b: usize,
    f: &Cochain,
) -> Cochain {
    let d = alpha.rows();
    let vdim = rep.vdim();
    let n = f.arity();
    if n == 0 {
        let v = f.as_vector().expect("arity-0 cochain");
        return Cochain::from_fn(1, d, vdim, |x| rep.act(b, &unit_vector(d, x[0]), &v));
    }
    let twisted: Vec<Vector> = alpha.pow(n - 1).column_vectors();
    let alpha_cols: Vec<Vector> = alpha.column_vectors();
    Cochain::from_fn(n + 1, d, vdim, |combo| {
        let mut out = zero_vector(vdim);
        for i in 0..=n {
            let rest: Vec<usize> = combo
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &c)| c)
                .collect();
            let value = rep.act(b, &twisted[combo[i]], &f.on_basis(&rest));
            let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
            add_scaled(&mut out, &sign, &value);
        }
        for i in 0..=n {
            for j in i + 1..=n {
                let head = bracket.on_basis(combo[i], combo[j]);
                let mut args: Vec<&[Rational]> = vec![&head];
                for (k, &c) in combo.iter().enumerate() {
                    if k != i && k != j {
                        args.push(&alpha_cols[c]);
                    }
                }
                let value = eval_unchecked(f, &args);
                let sign = if (i + j) % 2 == 0 { rat(1) } else { rat(-1) };
                add_scaled(&mut out, &sign, &value);
            }
        }
        out
    })
}

fn check_rep_shape<S: HomLieStructure + ?Sized>(s: &S, v: &Representation) -> Result<()> {
    if v.bracket_count() != s.brackets().len() {
        return Err(Error::usage(format!(
            "representation has {} action tables, algebra has {} brackets",
            v.bracket_count(),
            s.brackets().len()
        )));
    }
    if v.base_dim() != s.dim() {
        return Err(Error::usage(format!(
            "representation acts by dimension {}, algebra has dimension {}",
            v.base_dim(),
            s.dim()
        )));
    }
    Ok(())
}

fn check_member(f: &Cochain, alpha: &Matrix, v: &Representation) -> Result<()> {
    if f.source_dim() != alpha.rows() || f.target_dim() != v.vdim() {
        return Err(Error::usage(format!(
            "cochain maps dimension {} to {}, expected {} to {}",
            f.source_dim(),
            f.target_dim(),
            alpha.rows(),
            v.vdim()
        )));
    }
    if !f.is_equivariant(alpha, v.beta()) {
        return Err(Error::precondition(if f.arity() == 0 {
            "vector is not fixed by β".to_string()
        } else {
            format!("arity-{} cochain is not equivariant", f.arity())
        }));
    }
    Ok(())
}

/// `δ_Hom f` for `f ∈ Cⁿ_Hom(𝔤, V)`; arity-0 cochains use `(δv)(x) = x•v`.
pub fn ce_coboundary(l: &HomLieAlgebra, v: &Representation, f: &Cochain) -> Result<Cochain> {
    check_rep_shape(l, v)?;
    check_member(f, l.alpha(), v)?;
    Ok(coboundary_with(l.alpha(), l.bracket(), v, 0, f))
}

/// Element of `Cⁿ_cHom(𝔤, V)`: one vector for `n = 0`, otherwise `n`
/// arity-`n` components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompatibleCochain {
    degree: usize,
    components: Vec<Cochain>,
}

impl CompatibleCochain {
    pub fn new(degree: usize, components: Vec<Cochain>) -> Result<Self> {
        let expected = degree.max(1);
        if components.len() != expected {
            return Err(Error::usage(format!(
                "degree {degree} needs {expected} components, got {}",
                components.len()
            )));
        }
        let first = &components[0];
        for c in &components {
            if c.arity() != degree
                || c.source_dim() != first.source_dim()
                || c.target_dim() != first.target_dim()
            {
                return Err(Error::usage(format!(
                    "components of a degree-{degree} cochain must share arity {degree} and dimensions"
                )));
            }
        }
        Ok(CompatibleCochain { degree, components })
    }

    pub fn from_vector(source_dim: usize, v: &[Rational]) -> Self {
        CompatibleCochain {
            degree: 0,
            components: vec![Cochain::from_vector(source_dim, v)],
        }
    }

    pub fn zero(degree: usize, source_dim: usize, target_dim: usize) -> Self {
        CompatibleCochain {
            degree,
            components: vec![Cochain::zero(degree, source_dim, target_dim); degree.max(1)],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[Cochain] {
        &self.components
    }

    pub fn source_dim(&self) -> usize {
        self.components[0].source_dim()
    }

    pub fn target_dim(&self) -> usize {
        self.components[0].target_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Cochain::is_zero)
    }

    pub fn add(&self, other: &CompatibleCochain) -> CompatibleCochain {
        self.zip(other, Cochain::add)
    }

    pub fn sub(&self, other: &CompatibleCochain) -> CompatibleCochain {
        self.zip(other, Cochain::sub)
    }

    pub fn scale(&self, c: &Rational) -> CompatibleCochain {
        CompatibleCochain {
            degree: self.degree,
            components: self.components.iter().map(|f| f.scale(c)).collect(),
        }
    }

    fn zip(
        &self,
        other: &CompatibleCochain,
        op: impl Fn(&Cochain, &Cochain) -> Cochain,
    ) -> CompatibleCochain {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        CompatibleCochain {
            degree: self.degree,
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }

    /// Concatenated coefficients of all components.
    pub fn to_flat(&self) -> Vector {
        self.components.iter().flat_map(Cochain::to_flat).collect()
    }

    pub fn from_flat(degree: usize, source_dim: usize, target_dim: usize, flat: &[Rational]) -> Self {
        let len = Cochain::zero(degree, source_dim, target_dim).flat_len();
        let components = (0..degree.max(1))
            .map(|k| Cochain::from_flat(degree, source_dim, target_dim, &flat[k * len..(k + 1) * len]))
            .collect();
        CompatibleCochain { degree, components }
    }
}

/// Basis of `C⁰_cHom`: `βv = v` and `x•₁v = x•₂v` for every basis `x`.
pub fn compatible_zero_cochains(c: &CompatibleHomLieAlgebra, v: &Representation) -> Result<Vec<Vector>> {
    check_rep_shape(c, v)?;
    let vdim = v.vdim();
    let mut rows: Vec<Vector> = v.beta().sub(&Matrix::identity(vdim)).row_vectors();
    for i in 0..c.dim() {
        let diff = v.action_table(0)[i].sub(&v.action_table(1)[i]);
        rows.extend(diff.row_vectors());
    }
    let m = Matrix::from_rows(&rows)?;
    Ok(if rows.is_empty() {
        (0..vdim).map(|k| unit_vector(vdim, k)).collect()
    } else {
        kernel_basis(&m)
    })
}

fn check_compatible_member(
    c: &CompatibleHomLieAlgebra,
    v: &Representation,
    f: &CompatibleCochain,
) -> Result<()> {
    for g in &f.components {
        check_member(g, c.alpha(), v)?;
    }
    if f.degree == 0 {
        let vec = f.components[0].as_vector().expect("arity-0 component");
        for i in 0..c.dim() {
            let x = unit_vector(c.dim(), i);
            if v.act(0, &x, &vec) != v.act(1, &x, &vec) {
                return Err(Error::precondition(format!(
                    "x•₁v ≠ x•₂v at basis vector {i}; not in C⁰_cHom"
                )));
            }
        }
    }
    Ok(())
}

fn compatible_coboundary_unchecked(
    c: &CompatibleHomLieAlgebra,
    v: &Representation,
    f: &CompatibleCochain,
) -> CompatibleCochain {
    let alpha = c.alpha();
    let d1 = |g: &Cochain| coboundary_with(alpha, c.bracket1(), v, 0, g);
    let d2 = |g: &Cochain| coboundary_with(alpha, c.bracket2(), v, 1, g);
    if f.degree == 0 {
        return CompatibleCochain {
            degree: 1,
            components: vec![d1(&f.components[0])],
        };
    }
    let n = f.degree;
    let first: Vec<Cochain> = f.components.iter().map(d1).collect();
    let second: Vec<Cochain> = f.components.iter().map(d2).collect();
    let components = (0..=n)
        .map(|i| match (i < n, i >= 1) {
            (true, true) => first[i].add(&second[i - 1]),
            (true, false) => first[i].clone(),
            (false, _) => second[i - 1].clone(),
        })
        .collect();
    CompatibleCochain {
        degree: n + 1,
        components,
    }
}

/// `δ_cHom`: component `i` of the image is `¹δfᵢ + ²δfᵢ₋₁`, with `f₀ = fₙ₊₁ = 0`;
/// in degree 0, `(δv)(x) = x•₁v`.
pub fn compatible_coboundary(
    c: &CompatibleHomLieAlgebra,
    v: &Representation,
    f: &CompatibleCochain,
) -> Result<CompatibleCochain> {
    check_rep_shape(c, v)?;
    check_compatible_member(c, v, f)?;
    Ok(compatible_coboundary_unchecked(c, v, f))
}

/// Cochain spaces that can be flattened to coordinates.
pub trait ComplexElement: Clone {
    fn to_flat(&self) -> Vector;
    fn is_zero(&self) -> bool;
}

impl ComplexElement for Cochain {
    fn to_flat(&self) -> Vector {
        Cochain::to_flat(self)
    }
    fn is_zero(&self) -> bool {
        Cochain::is_zero(self)
    }
}

impl ComplexElement for CompatibleCochain {
    fn to_flat(&self) -> Vector {
        CompatibleCochain::to_flat(self)
    }
    fn is_zero(&self) -> bool {
        CompatibleCochain::is_zero(self)
    }
}

/// Dimensions of one degree of a complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CohomologyDimensions {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
}

/// Cocycles, coboundaries and cohomology in one degree, with explicit bases.
///
/// `representatives` extends `coboundary_basis` to a basis of the cocycles;
/// class coordinates are taken with respect to it.
#[derive(Clone, Debug)]
pub struct CohomologyReport<T> {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_cohomology: usize,
    pub cochain_basis: Vec<T>,
    pub cocycle_basis: Vec<T>,
    pub coboundary_basis: Vec<T>,
    pub representatives: Vec<T>,
}

impl<T: ComplexElement> CohomologyReport<T> {
    pub fn dimensions(&self) -> CohomologyDimensions {
        CohomologyDimensions {
            degree: self.degree,
            dim_cochains: self.dim_cochains,
            dim_cocycles: self.dim_cocycles,
            dim_coboundaries: self.dim_coboundaries,
            dim_cohomology: self.dim_cohomology,
        }
    }

    /// Coordinates of the class of `z` in the representative basis. `z` must
    /// be a cocycle.
    pub fn class_coordinates(&self, z: &T) -> Result<Vector> {
        let target = z.to_flat();
        let columns: Vec<Vector> = self
            .representatives
            .iter()
            .chain(&self.coboundary_basis)
            .map(ComplexElement::to_flat)
            .collect();
        if columns.is_empty() {
            return if z.is_zero() {
                Ok(Vec::new())
            } else {
                Err(Error::precondition("cochain is not a cocycle"))
            };
        }
        let m = Matrix::from_columns(target.len(), &columns);
        let Some(solution) = solve(&m, &target)? else {
            return Err(Error::precondition("cochain is not a cocycle"));
        };
        Ok(solution[..self.representatives.len()].to_vec())
    }

    /// Whether `z` lies in the span of the coboundaries.
    pub fn is_coboundary(&self, z: &T) -> bool {
        let vectors: Vec<Vector> = self.coboundary_basis.iter().map(ComplexElement::to_flat).collect();
        in_span(&vectors, &z.to_flat())
    }
}

fn combine<T>(coefficients: &[Rational], basis: &[T], zero: &T, add_scaled_to: impl Fn(&T, &Rational, &T) -> T) -> T
where
    T: Clone,
{
    let mut acc = zero.clone();
    for (c, b) in coefficients.iter().zip(basis) {
        if !c.is_zero() {
            acc = add_scaled_to(&acc, c, b);
        }
    }
    acc
}

/// Linear-algebra core shared by both flavors.
fn assemble<T: ComplexElement>(
    degree: usize,
    previous: &[T],
    basis: Vec<T>,
    zero: &T,
    delta: impl Fn(&T) -> T,
    add_scaled_to: impl Fn(&T, &Rational, &T) -> T + Copy,
) -> Result<CohomologyReport<T>> {
    let images: Vec<Vector> = basis.iter().map(|b| delta(b).to_flat()).collect();
    let cocycle_basis: Vec<T> = if basis.is_empty() {
        Vec::new()
    } else {
        let rows = images[0].len();
        let m = Matrix::from_columns(rows, &images);
        if rows == 0 {
            basis.clone()
        } else {
            kernel_basis(&m)
                .iter()
                .map(|k| combine(k, &basis, zero, add_scaled_to))
                .collect()
        }
    };
    let flat_len = zero.to_flat().len();
    let boundaries: Vec<T> = previous.iter().map(&delta).collect();
    let boundary_vectors: Vec<Vector> = boundaries.iter().map(ComplexElement::to_flat).collect();
    let coboundary_basis: Vec<T> = independent_subset(&boundary_vectors, flat_len)
        .into_iter()
        .map(|i| boundaries[i].clone())
        .collect();
    if coboundary_basis.iter().any(|b| !delta(b).is_zero()) {
        return Err(Error::contract(format!(
            "a coboundary in degree {degree} is not a cocycle; δ∘δ ≠ 0"
        )));
    }
    let mut stacked: Vec<Vector> = coboundary_basis.iter().map(ComplexElement::to_flat).collect();
    stacked.extend(cocycle_basis.iter().map(ComplexElement::to_flat));
    let chosen = independent_subset(&stacked, flat_len);
    let representatives: Vec<T> = chosen
        .into_iter()
        .filter(|&i| i >= coboundary_basis.len())
        .map(|i| cocycle_basis[i - coboundary_basis.len()].clone())
        .collect();
    let dim_cocycles = cocycle_basis.len();
    let dim_coboundaries = coboundary_basis.len();
    if dim_coboundaries + representatives.len() != dim_cocycles {
        return Err(Error::contract(format!(
            "coboundaries in degree {degree} are not contained in the cocycles"
        )));
    }
    Ok(CohomologyReport {
        degree,
        dim_cochains: basis.len(),
        dim_cocycles,
        dim_coboundaries,
        dim_cohomology: dim_cocycles - dim_coboundaries,
        cochain_basis: basis,
        cocycle_basis,
        coboundary_basis,
        representatives,
    })
}

fn require_valid<S: HomLieStructure + ?Sized>(s: &S, v: &Representation) -> Result<()> {
    check_rep_shape(s, v)?;
    let mut report = verify_structure(s);
    report.extend("", verify_representation(s, v)?);
    if !report.passed() {
        return Err(Error::with_report(
            "cohomology needs a valid algebra and representation",
            report,
        ));
    }
    Ok(())
}

fn cochain_add_scaled(acc: &Cochain, c: &Rational, f: &Cochain) -> Cochain {
    acc.add(&f.scale(c))
}

fn compatible_add_scaled(acc: &CompatibleCochain, c: &Rational, f: &CompatibleCochain) -> CompatibleCochain {
    acc.add(&f.scale(c))
}

/// Basis of `Cⁿ_cHom`: `n` copies of one basis of `Cⁿ_Hom`, copy-major.
pub fn compatible_cochain_basis(
    c: &CompatibleHomLieAlgebra,
    v: &Representation,
    n: usize,
) -> Result<Vec<CompatibleCochain>> {
    let d = c.dim();
    let vdim = v.vdim();
    if n == 0 {
        return Ok(compatible_zero_cochains(c, v)?
            .iter()
            .map(|x| CompatibleCochain::from_vector(d, x))
            .collect());
    }
    let single = hom_cochain_basis(c.alpha(), v.beta(), n)?;
    let mut out = Vec::with_capacity(n * single.len());
    for slot in 0..n {
        for f in &single {
            let mut components = vec![Cochain::zero(n, d, vdim); n];
            components[slot] = f.clone();
            out.push(CompatibleCochain {
                degree: n,
                components,
            });
        }
    }
    Ok(out)
}

/// Chevalley–Eilenberg cohomology `Hⁿ_Hom(𝔤, V)`.
pub fn plain_cohomology(
    l: &HomLieAlgebra,
    v: &Representation,
    n: usize,
) -> Result<CohomologyReport<Cochain>> {
    require_valid(l, v)?;
    let (alpha, beta) = (l.alpha(), v.beta());
    let basis = hom_cochain_basis(alpha, beta, n)?;
    let previous = if n == 0 {
        Vec::new()
    } else {
        hom_cochain_basis(alpha, beta, n - 1)?
    };
    let zero = Cochain::zero(n, l.dim(), v.vdim());
    assemble(
        n,
        &previous,
        basis,
        &zero,
        |f| coboundary_with(alpha, l.bracket(), v, 0, f),
        cochain_add_scaled,
    )
}

/// Cohomology `Hⁿ_cHom(𝔤, V)` of the compatible complex.
pub fn compatible_cohomology(
    c: &CompatibleHomLieAlgebra,
    v: &Representation,
    n: usize,
) -> Result<CohomologyReport<CompatibleCochain>> {
    require_valid(c, v)?;
    let basis = compatible_cochain_basis(c, v, n)?;
    let previous = if n == 0 {
        Vec::new()
    } else {
        compatible_cochain_basis(c, v, n - 1)?
    };
    let zero = CompatibleCochain::zero(n, c.dim(), v.vdim());
    assemble(
        n,
        &previous,
        basis,
        &zero,
        |f| compatible_coboundary_unchecked(c, v, f),
        compatible_add_scaled,
    )
}

/// The structure whose cohomology is requested; the variant selects the flavor.
#[derive(Clone, Copy, Debug)]
pub enum Structure<'a> {
    Plain(&'a HomLieAlgebra),
    Compatible(&'a CompatibleHomLieAlgebra),
}

pub fn cohomology_dimensions(
    s: Structure<'_>,
    v: &Representation,
    n: usize,
) -> Result<CohomologyDimensions> {
    Ok(match s {
        Structure::Plain(l) => plain_cohomology(l, v, n)?.dimensions(),
        Structure::Compatible(c) => compatible_cohomology(c, v, n)?.dimensions(),
    })
}

/// Derivations `𝔤 → V` and inner derivations of a compatible algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    /// Basis of derivations as `vdim × dim` matrices.
    pub derivations: Vec<Matrix>,
    /// Basis of inner derivations `x ↦ x•₁v`, `v ∈ C⁰_cHom`.
    pub inner: Vec<Matrix>,
    pub outer_dim: usize,
}

/// Solves the derivation conditions directly on the entries of `D`:
/// `βD = Dα` and `D[x,y]ᵢ = x•ᵢDy − y•ᵢDx` for both brackets.
pub fn derivation_space(c: &CompatibleHomLieAlgebra, v: &Representation) -> Result<DerivationSpace> {
    check_rep_shape(c, v)?;
    let d = c.dim();
    let vdim = v.vdim();
    let unknowns = vdim * d;
    // D[r][s] is unknown number r * d + s
    let var = |r: usize, s: usize| r * d + s;
    let mut rows: Vec<Vector> = Vec::new();
    let (alpha, beta) = (c.alpha(), v.beta());
    for r in 0..vdim {
        for s in 0..d {
            let mut row = zero_vector(unknowns);
            for k in 0..vdim {
                row[var(k, s)] += beta.get(r, k);
            }
            for k in 0..d {
                row[var(r, k)] -= alpha.get(k, s);
            }
            rows.push(row);
        }
    }
    for (b, bracket) in c.brackets().iter().enumerate() {
        for pair in combinations(d, 2) {
            let (x, y) = (pair[0], pair[1]);
            let xy = bracket.on_basis(x, y);
            let ax = &v.action_table(b)[x];
            let ay = &v.action_table(b)[y];
            for r in 0..vdim {
                let mut row = zero_vector(unknowns);
                for (s, coeff) in xy.iter().enumerate() {
                    row[var(r, s)] += coeff;
                }
                for k in 0..vdim {
                    row[var(k, y)] -= ax.get(r, k);
                    row[var(k, x)] += ay.get(r, k);
                }
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..unknowns).map(|k| unit_vector(unknowns, k)).collect()
    } else {
        kernel_basis(&Matrix::from_rows(&rows)?)
    };
    let derivations: Vec<Matrix> = kernel
        .iter()
        .map(|k| Matrix::new(vdim, d, k.clone()).expect("shape matches unknowns"))
        .collect();
    let inner_candidates: Vec<Matrix> = compatible_zero_cochains(c, v)?
        .iter()
        .map(|w| {
            let cols: Vec<Vector> = (0..d).map(|i| v.act(0, &unit_vector(d, i), w)).collect();
            Matrix::from_columns(vdim, &cols)
        })
        .collect();
    let flat: Vec<Vector> = inner_candidates.iter().map(|m| m.entries().to_vec()).collect();
    let inner: Vec<Matrix> = independent_subset(&flat, unknowns)
        .into_iter()
        .map(|i| inner_candidates[i].clone())
        .collect();
    let derivation_flat: Vec<Vector> = derivations.iter().map(|m| m.entries().to_vec()).collect();
    if inner.iter().any(|m| !in_span(&derivation_flat, m.entries())) {
        return Err(Error::contract("an inner derivation fails the derivation identities"));
    }
    Ok(DerivationSpace {
        outer_dim: derivations.len() - inner.len(),
        derivations,
        inner,
    })
}

/// The sum algebra `(𝔤, [·,·]₁ + [·,·]₂, α)` and representation `(V, •₁ + •₂, β)`.
pub fn sum_structure(
    c: &CompatibleHomLieAlgebra,
    v: &Representation,
) -> Result<(HomLieAlgebra, Representation)> {
    check_rep_shape(c, v)?;
    let one = rat(1);
    Ok((sum_bracket(c, &one, &one), v.combined(&one, &one)))
}

/// `Δ₀(v) = ½v`, `Δₙ(f₁,…,fₙ) = f₁ + ⋯ + fₙ`.
pub fn comparison_map(f: &CompatibleCochain) -> Cochain {
    if f.degree == 0 {
        return f.components[0].scale(&ratio(1, 2));
    }
    let mut acc = Cochain::zero(f.degree, f.source_dim(), f.target_dim());
    for g in &f.components {
        acc = acc.add(g);
    }
    acc
}

/// Dimensions of `Hⁿ_cHom(𝔤, V)` next to `Hⁿ_Hom(𝔤₊, V₊)`.
pub fn compare_cohomology(
    c: &CompatibleHomLieAlgebra,
    v: &Representation,
    n: usize,
) -> Result<(CohomologyDimensions, CohomologyDimensions)> {
    let (sum, sum_rep) = sum_structure(c, v)?;
    Ok((
        compatible_cohomology(c, v, n)?.dimensions(),
        plain_cohomology(&sum, &sum_rep, n)?.dimensions(),
    ))
}
