//! Abelian extensions of a compatible Hom-Lie algebra by a vector space with
//! a twist, in split coordinates.

use num_traits::Zero;

use crate::algebra::{
    product_bracket, verify_representation, verify_structure, CompatibleHomLieAlgebra,
    HomLieStructure, Representation, StructureConstants,
};
use crate::cochain::{combinations, hom_cochain_basis, Cochain};
use crate::cohomology::{compatible_coboundary, compatible_cohomology, CompatibleCochain};
use crate::error::{Error, Result};
use crate::linalg::{solve, unit_vector, Matrix, Vector};

/// Pair `(f₁, f₂)` of 2-cochains `Λ²𝔤 → V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCocycle {
    pub f1: Cochain,
    pub f2: Cochain,
}

impl ExtensionCocycle {
    pub fn new(f1: Cochain, f2: Cochain) -> Self {
        ExtensionCocycle { f1, f2 }
    }

    pub fn zero(dim: usize, vdim: usize) -> Self {
        ExtensionCocycle::new(Cochain::zero(2, dim, vdim), Cochain::zero(2, dim, vdim))
    }

    pub fn from_compatible(c: &CompatibleCochain) -> Result<Self> {
        match c.components() {
            [f1, f2] if c.degree() == 2 => Ok(ExtensionCocycle::new(f1.clone(), f2.clone())),
            _ => Err(Error::usage("extension cocycles have degree 2")),
        }
    }

    pub fn as_compatible(&self) -> CompatibleCochain {
        CompatibleCochain::new(2, vec![self.f1.clone(), self.f2.clone()])
            .expect("two arity-2 components")
    }
}

/// `0 → V →ⁱ 𝔥 →ʲ 𝔤 → 0` with a splitting `s` commuting with the twists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianExtension {
    base: CompatibleHomLieAlgebra,
    beta: Matrix,
    total: CompatibleHomLieAlgebra,
    inclusion: Matrix,
    projection: Matrix,
    splitting: Matrix,
}

fn fail(msg: impl Into<String>) -> Error {
    Error::precondition(msg)
}

impl AbelianExtension {
    /// Validates the exact sequence, the morphism properties of `i` and `j`,
    /// the vanishing of brackets on `V`, and `α^𝔥 ∘ s = s ∘ α`.
    pub fn new(
        base: CompatibleHomLieAlgebra,
        beta: Matrix,
        total: CompatibleHomLieAlgebra,
        inclusion: Matrix,
        projection: Matrix,
        splitting: Matrix,
    ) -> Result<Self> {
        let d = base.dim();
        let vdim = beta.rows();
        let h = total.dim();
        if !beta.is_square() || h != d + vdim {
            return Err(Error::usage(format!(
                "total dimension {h} must equal {d} + {vdim}"
            )));
        }
        let shapes = [
            (&inclusion, h, vdim, "inclusion"),
            (&projection, d, h, "projection"),
            (&splitting, h, d, "splitting"),
        ];
        for (m, r, c, name) in shapes {
            if m.rows() != r || m.cols() != c {
                return Err(Error::usage(format!("{name} must be {r}x{c}")));
            }
        }
        if !projection.mul(&inclusion).is_zero() {
            return Err(fail("j ∘ i ≠ 0"));
        }
        if inclusion.rank() != vdim {
            return Err(fail("i is not injective"));
        }
        if projection.rank() != d {
            return Err(fail("j is not surjective"));
        }
        if projection.mul(&splitting) != Matrix::identity(d) {
            return Err(fail("j ∘ s ≠ id"));
        }
        let ah = total.alpha();
        if ah.mul(&inclusion) != inclusion.mul(&beta) {
            return Err(fail("i does not intertwine β with the total twist"));
        }
        if projection.mul(ah) != base.alpha().mul(&projection) {
            return Err(fail("j does not intertwine the twists"));
        }
        if ah.mul(&splitting) != splitting.mul(base.alpha()) {
            return Err(fail("splitting does not commute with the twists"));
        }
        for (k, (bh, bg)) in total.brackets().iter().zip(base.brackets()).enumerate() {
            for p in combinations(h, 2) {
                let image = projection.mul_vec(&bh.on_basis(p[0], p[1]));
                let expected = bg.bracket(&projection.column(p[0]), &projection.column(p[1]));
                if image != expected {
                    return Err(fail(format!("j is not a morphism for bracket {}", k + 1)));
                }
            }
            for p in combinations(vdim, 2) {
                let value = bh.bracket(&inclusion.column(p[0]), &inclusion.column(p[1]));
                if value.iter().any(|x| !x.is_zero()) {
                    return Err(fail(format!("bracket {} does not vanish on V", k + 1)));
                }
            }
        }
        Ok(AbelianExtension {
            base,
            beta,
            total,
            inclusion,
            projection,
            splitting,
        })
    }

    pub fn base(&self) -> &CompatibleHomLieAlgebra {
        &self.base
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn vdim(&self) -> usize {
        self.beta.rows()
    }

    pub fn total(&self) -> &CompatibleHomLieAlgebra {
        &self.total
    }

    pub fn inclusion(&self) -> &Matrix {
        &self.inclusion
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn splitting(&self) -> &Matrix {
        &self.splitting
    }

    /// The same extension with splitting `s + i∘τ`; requires `β∘τ = τ∘α`.
    pub fn with_splitting_shift(&self, tau: &Matrix) -> Result<AbelianExtension> {
        if tau.rows() != self.vdim() || tau.cols() != self.base.dim() {
            return Err(Error::usage(format!(
                "shift must be {}x{}",
                self.vdim(),
                self.base.dim()
            )));
        }
        AbelianExtension::new(
            self.base.clone(),
            self.beta.clone(),
            self.total.clone(),
            self.inclusion.clone(),
            self.projection.clone(),
            self.splitting.add(&self.inclusion.mul(tau)),
        )
    }

    /// Rows of `[s | i]⁻¹` that read off the `V`-coordinate.
    fn fiber_projection(&self) -> Matrix {
        let d = self.base.dim();
        let h = self.total.dim();
        let mut columns = self.splitting.column_vectors();
        columns.extend(self.inclusion.column_vectors());
        let inverse = Matrix::from_columns(h, &columns)
            .inverse()
            .expect("exact split sequence gives an isomorphism");
        let rows: Vec<usize> = (d..h).collect();
        let cols: Vec<usize> = (0..h).collect();
        inverse.select(&rows, &cols)
    }
}

/// Extension `𝔤 ⊕ V` with brackets `([x,y]ᵢ, x•ᵢv − y•ᵢu + fᵢ(x,y))` and twist `α ⊕ β`.
pub fn build_extension(
    c: &CompatibleHomLieAlgebra,
    rep: &Representation,
    z: &ExtensionCocycle,
) -> Result<AbelianExtension> {
    let mut report = verify_structure(c);
    report.extend("", verify_representation(c, rep)?);
    if !report.passed() {
        return Err(Error::with_report(
            "extension needs a valid algebra and representation",
            report,
        ));
    }
    let d = c.dim();
    let vdim = rep.vdim();
    for f in [&z.f1, &z.f2] {
        if f.arity() != 2 || f.source_dim() != d || f.target_dim() != vdim {
            return Err(Error::usage("cocycle components must map Λ²𝔤 into V"));
        }
    }
    if !compatible_coboundary(c, rep, &z.as_compatible())?.is_zero() {
        return Err(Error::precondition("pair is not a 2-cocycle"));
    }
    let brackets: Vec<StructureConstants> = [&z.f1, &z.f2]
        .iter()
        .enumerate()
        .map(|(k, f)| product_bracket(&c.brackets()[k], rep, k, Some(f)))
        .collect();
    let total = CompatibleHomLieAlgebra::new(
        c.alpha().direct_sum(rep.beta()),
        brackets[0].clone(),
        brackets[1].clone(),
    )?;
    let h = d + vdim;
    let inclusion = Matrix::from_columns(h, &(d..h).map(|k| unit_vector(h, k)).collect::<Vec<_>>());
    let splitting = Matrix::from_columns(h, &(0..d).map(|k| unit_vector(h, k)).collect::<Vec<_>>());
    let extension = AbelianExtension::new(
        c.clone(),
        rep.beta().clone(),
        total,
        inclusion,
        splitting.transpose(),
        splitting,
    )?;
    if !verify_structure(extension.total()).passed() {
        return Err(Error::contract("extension built from a cocycle is not valid"));
    }
    Ok(extension)
}

/// Induced actions `x•ᵢv = [s(x), i(v)]ᵢ` and cocycle `fᵢ(x,y)`, the
/// `V`-component of `[s(x), s(y)]ᵢ`.
pub fn extract_cocycle(e: &AbelianExtension) -> Result<(Representation, ExtensionCocycle)> {
    let d = e.base.dim();
    let vdim = e.vdim();
    let pv = e.fiber_projection();
    let s = &e.splitting;
    let i = &e.inclusion;
    let actions: Vec<Vec<Matrix>> = e
        .total
        .brackets()
        .iter()
        .map(|b| {
            (0..d)
                .map(|x| {
                    let cols: Vec<Vector> = (0..vdim)
                        .map(|v| pv.mul_vec(&b.bracket(&s.column(x), &i.column(v))))
                        .collect();
                    Matrix::from_columns(vdim, &cols)
                })
                .collect()
        })
        .collect();
    let rep = Representation::new(e.beta.clone(), actions)?;
    let report = verify_representation(&e.base, &rep)?;
    if !report.passed() {
        return Err(Error::with_report("induced representation is not valid", report));
    }
    let cocycle: Vec<Cochain> = e
        .total
        .brackets()
        .iter()
        .map(|b| {
            Cochain::from_fn(2, d, vdim, |p| {
                pv.mul_vec(&b.bracket(&s.column(p[0]), &s.column(p[1])))
            })
        })
        .collect();
    let z = ExtensionCocycle::new(cocycle[0].clone(), cocycle[1].clone());
    if !compatible_coboundary(&e.base, &rep, &z.as_compatible())?.is_zero() {
        return Err(Error::contract("extracted pair is not a 2-cocycle"));
    }
    Ok((rep, z))
}

/// Searches for `φ(s x + i v) = s′x + i′(v + τx)` with `f − f′ = δ_cHom τ`;
/// returns `φ` as a matrix, verified to be a morphism over `i` and `j`.
pub fn check_equivalence(e: &AbelianExtension, e_prime: &AbelianExtension) -> Result<Option<Matrix>> {
    if e.base != e_prime.base || e.beta != e_prime.beta {
        return Err(Error::usage("extensions have different base or fiber"));
    }
    let (rep, z) = extract_cocycle(e)?;
    let (rep_prime, z_prime) = extract_cocycle(e_prime)?;
    if rep != rep_prime {
        return Err(Error::usage("extensions induce different representations"));
    }
    let c = &e.base;
    let d = c.dim();
    let vdim = e.vdim();
    let difference = z.as_compatible().sub(&z_prime.as_compatible());
    let basis = hom_cochain_basis(c.alpha(), rep.beta(), 1)?;
    let target = difference.to_flat();
    let coefficients = if basis.is_empty() {
        difference.is_zero().then(Vec::new)
    } else {
        let columns: Vec<Vector> = basis
            .iter()
            .map(|t| {
                let tc = CompatibleCochain::new(1, vec![t.clone()])?;
                Ok(compatible_coboundary(c, &rep, &tc)?.to_flat())
            })
            .collect::<Result<_>>()?;
        solve(&Matrix::from_columns(target.len(), &columns), &target)?
    };
    let Some(coefficients) = coefficients else {
        return Ok(None);
    };
    let mut tau = Matrix::zeros(vdim, d);
    for (k, t) in coefficients.iter().zip(&basis) {
        tau = tau.add(&t.coefficients().scale(k));
    }
    let pv = e.fiber_projection();
    let phi = e_prime
        .splitting
        .mul(&e.projection)
        .add(&e_prime.inclusion.mul(&pv.add(&tau.mul(&e.projection))));
    verify_morphism(e, e_prime, &phi)?;
    Ok(Some(phi))
}

fn verify_morphism(e: &AbelianExtension, e_prime: &AbelianExtension, phi: &Matrix) -> Result<()> {
    if e_prime.projection.mul(phi) != e.projection || phi.mul(&e.inclusion) != e_prime.inclusion {
        return Err(Error::contract("φ does not commute with i and j"));
    }
    if phi.mul(e.total.alpha()) != e_prime.total.alpha().mul(phi) {
        return Err(Error::contract("φ does not commute with the twists"));
    }
    let h = e.total.dim();
    for (b, b_prime) in e.total.brackets().iter().zip(e_prime.total.brackets()) {
        for p in combinations(h, 2) {
            let lhs = phi.mul_vec(&b.on_basis(p[0], p[1]));
            let rhs = b_prime.bracket(&phi.column(p[0]), &phi.column(p[1]));
            if lhs != rhs {
                return Err(Error::contract("φ is not a bracket morphism"));
            }
        }
    }
    Ok(())
}

/// Coordinates of the extracted cocycle's class in the `H²_cHom(𝔤, V)`
/// representative basis.
pub fn ext_class(e: &AbelianExtension) -> Result<Vector> {
    let (rep, z) = extract_cocycle(e)?;
    compatible_cohomology(&e.base, &rep, 2)?.class_coordinates(&z.as_compatible())
}
