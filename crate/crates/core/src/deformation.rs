//! Linear, infinitesimal and finite-order deformations of a compatible
//! Hom-Lie algebra, Nijenhuis-generated trivial deformations, and obstructions.

use num_traits::Zero;

use crate::algebra::{
    operator_bracket, verify_operator, verify_structure, CompatibleHomLieAlgebra,
    HomLieStructure, LinearOperator, Representation, ValidationReport,
};
use crate::cochain::{is_mc_pair, nr_bracket, Cochain};
use crate::cohomology::{
    compatible_coboundary, compatible_cochain_basis, compatible_cohomology, coboundary_with,
    CompatibleCochain,
};
use crate::error::{Error, Result};
use crate::linalg::{rat, ratio, solve, unit_vector, vector_sub, Matrix, Rational, Vector};

/// Pair `(ω₁, ω₂)` of 2-cochains proposed as `([·,·]₁ + tω₁, [·,·]₂ + tω₂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearGenerator {
    pub omega1: Cochain,
    pub omega2: Cochain,
}

impl LinearGenerator {
    pub fn new(omega1: Cochain, omega2: Cochain) -> Self {
        LinearGenerator { omega1, omega2 }
    }

    pub fn zero(dim: usize) -> Self {
        LinearGenerator::new(Cochain::zero(2, dim, dim), Cochain::zero(2, dim, dim))
    }

    pub fn as_compatible(&self) -> CompatibleCochain {
        CompatibleCochain::new(2, vec![self.omega1.clone(), self.omega2.clone()])
            .expect("two arity-2 components")
    }
}

/// Residuals of the six bracket conditions, in the order
/// `[μ₁,ω₁]`, `[μ₂,ω₂]`, `[μ₁,ω₂]+[μ₂,ω₁]`, `[ω₁,ω₁]`, `[ω₂,ω₂]`, `[ω₁,ω₂]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearGeneratorReport {
    pub residuals: [Cochain; 6],
    pub is_cocycle: bool,
    pub is_compatible_structure: bool,
}

impl LinearGeneratorReport {
    /// Both halves hold, so the pair generates a linear deformation.
    pub fn generates(&self) -> bool {
        self.is_cocycle && self.is_compatible_structure
    }
}

fn require_valid(c: &CompatibleHomLieAlgebra) -> Result<()> {
    let report = verify_structure(c);
    if !report.passed() {
        return Err(Error::with_report("compatible Hom-Lie algebra is not valid", report));
    }
    Ok(())
}

fn check_generator_shape(c: &CompatibleHomLieAlgebra, g: &LinearGenerator) -> Result<()> {
    let d = c.dim();
    for w in [&g.omega1, &g.omega2] {
        if w.arity() != 2 || w.source_dim() != d || w.target_dim() != d {
            return Err(Error::usage(format!(
                "generator components must be arity-2 cochains on dimension {d}"
            )));
        }
        if !w.is_equivariant(c.alpha(), c.alpha()) {
            return Err(Error::precondition("generator component is not α-equivariant"));
        }
    }
    Ok(())
}

/// Evaluates the six bracket conditions for `(ω₁, ω₂)`.
///
/// The cocycle half is cross-checked against `δ_cHom(ω₁, ω₂)`, which must
/// equal `−([μ₁,ω₁], [μ₁,ω₂]+[μ₂,ω₁], [μ₂,ω₂])`.
pub fn check_linear_generator(
    c: &CompatibleHomLieAlgebra,
    g: &LinearGenerator,
) -> Result<LinearGeneratorReport> {
    require_valid(c)?;
    check_generator_shape(c, g)?;
    let alpha = c.alpha();
    let mu1 = c.bracket1().as_cochain();
    let mu2 = c.bracket2().as_cochain();
    let r1 = nr_bracket(mu1, &g.omega1, alpha)?;
    let r2 = nr_bracket(mu2, &g.omega2, alpha)?;
    let r3 = nr_bracket(mu1, &g.omega2, alpha)?.add(&nr_bracket(mu2, &g.omega1, alpha)?);
    let mc = is_mc_pair(&g.omega1, &g.omega2, alpha, None)?;
    let [r4, r5, r6] = mc.residuals;

    let adj = Representation::adjoint(c);
    let delta = compatible_coboundary(c, &adj, &g.as_compatible())?;
    let minus = rat(-1);
    let expected = [r1.scale(&minus), r3.scale(&minus), r2.scale(&minus)];
    if delta.components() != expected {
        return Err(Error::contract(
            "δ_cHom of the generator disagrees with its bracket residuals",
        ));
    }
    let is_cocycle = r1.is_zero() && r2.is_zero() && r3.is_zero();
    let is_compatible_structure = r4.is_zero() && r5.is_zero() && r6.is_zero();
    Ok(LinearGeneratorReport {
        residuals: [r1, r2, r3, r4, r5, r6],
        is_cocycle,
        is_compatible_structure,
    })
}

/// `ωᵢ(x,y) = [Nx,y]ᵢ + [x,Ny]ᵢ − N[x,y]ᵢ` for a Nijenhuis operator `N` of both brackets.
pub fn trivial_deformation_from_nijenhuis(
    c: &CompatibleHomLieAlgebra,
    n_op: &LinearOperator,
) -> Result<LinearGenerator> {
    let n_op = LinearOperator::nijenhuis(n_op.matrix.clone());
    let report = verify_operator(c, &n_op)?;
    if !report.passed() {
        return Err(Error::with_report("operator is not Nijenhuis for both brackets", report));
    }
    Ok(LinearGenerator::new(
        operator_bracket(c.bracket1(), &n_op).as_cochain().clone(),
        operator_bracket(c.bracket2(), &n_op).as_cochain().clone(),
    ))
}

/// Checks whether `id + tN` maps the deformation generated by `g` to the one
/// generated by `g_prime`.
///
/// For each bracket three identity families are evaluated on basis pairs:
/// `ωᵢ − ω′ᵢ = [x,Ny]ᵢ + [Nx,y]ᵢ − N[x,y]ᵢ`,
/// `Nωᵢ(x,y) = ω′ᵢ(x,Ny) + ω′ᵢ(Nx,y) + [Nx,Ny]ᵢ`, and `ω′ᵢ(Nx,Ny) = 0`.
/// A final check compares `(ω) − (ω′)` with `δ_cHom N`.
pub fn check_linear_equivalence(
    c: &CompatibleHomLieAlgebra,
    g: &LinearGenerator,
    g_prime: &LinearGenerator,
    n: &Matrix,
) -> Result<ValidationReport> {
    let d = c.dim();
    if n.rows() != d || n.cols() != d {
        return Err(Error::usage(format!("N must be {d}x{d}")));
    }
    check_generator_shape(c, g)?;
    check_generator_shape(c, g_prime)?;
    let alpha = c.alpha();
    if alpha.mul(n) != n.mul(alpha) {
        return Err(Error::precondition("N does not commute with α"));
    }
    let pairs = crate::cochain::combinations(d, 2);
    let e = |i: usize| unit_vector(d, i);
    let eval2 = |f: &Cochain, x: &[Rational], y: &[Rational]| {
        crate::cochain::eval_unchecked(f, &[x, y])
    };
    let mut report = ValidationReport::default();
    let sides = [
        (&g.omega1, &g_prime.omega1, c.bracket1()),
        (&g.omega2, &g_prime.omega2, c.bracket2()),
    ];
    for (k, (w, wp, bracket)) in sides.into_iter().enumerate() {
        let nb = operator_bracket(bracket, &LinearOperator::nijenhuis(n.clone()));
        report.record(format!("difference[{}]", k + 1), pairs.clone(), |p| {
            let lhs = vector_sub(&w.on_basis(p), &wp.on_basis(p));
            vector_sub(&lhs, &nb.on_basis(p[0], p[1]))
        });
        report.record(format!("image[{}]", k + 1), pairs.clone(), |p| {
            let (x, y) = (e(p[0]), e(p[1]));
            let (nx, ny) = (n.column(p[0]), n.column(p[1]));
            let lhs = n.mul_vec(&w.on_basis(p));
            let mut rhs = eval2(wp, &x, &ny);
            rhs = crate::linalg::vector_add(&rhs, &eval2(wp, &nx, &y));
            rhs = crate::linalg::vector_add(&rhs, &bracket.bracket(&nx, &ny));
            vector_sub(&lhs, &rhs)
        });
        report.record(format!("vanishing[{}]", k + 1), pairs.clone(), |p| {
            eval2(wp, &n.column(p[0]), &n.column(p[1]))
        });
    }
    let adj = Representation::adjoint(c);
    let n_cochain = CompatibleCochain::new(1, vec![Cochain::from_linear_map(n)])?;
    let delta = compatible_coboundary(c, &adj, &n_cochain)?;
    let difference = g.as_compatible().sub(&g_prime.as_compatible());
    let gap = difference.sub(&delta);
    let tuples = (0..2).flat_map(|k| pairs.iter().map(move |p| vec![k, p[0], p[1]]));
    report.record("coboundary", tuples.collect::<Vec<_>>(), |t| {
        gap.components()[t[0]].on_basis(&t[1..])
    });
    Ok(report)
}

/// Coordinates of the class of a cocycle generator in the `H²_cHom(𝔤, 𝔤)`
/// representative basis.
pub fn infinitesimal_class(c: &CompatibleHomLieAlgebra, g: &LinearGenerator) -> Result<Vector> {
    let report = check_linear_generator(c, g)?;
    if !report.is_cocycle {
        return Err(Error::precondition("generator is not a 2-cocycle"));
    }
    let adj = Representation::adjoint(c);
    compatible_cohomology(c, &adj, 2)?.class_coordinates(&g.as_compatible())
}

/// Truncated deformation `μ_{k,t} = Σ_{i≤p} tⁱ μ_{k,i}`; index 0 is the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderPDeformation {
    base: CompatibleHomLieAlgebra,
    coeffs1: Vec<Cochain>,
    coeffs2: Vec<Cochain>,
}

impl OrderPDeformation {
    /// `higher1[i−1]` and `higher2[i−1]` are `μ_{1,i}` and `μ_{2,i}` for `i = 1..=p`.
    pub fn new(
        base: &CompatibleHomLieAlgebra,
        higher1: Vec<Cochain>,
        higher2: Vec<Cochain>,
    ) -> Result<Self> {
        if higher1.is_empty() || higher1.len() != higher2.len() {
            return Err(Error::usage(
                "need equally many (at least one) higher coefficients for both brackets",
            ));
        }
        let d = base.dim();
        for f in higher1.iter().chain(&higher2) {
            if f.arity() != 2 || f.source_dim() != d || f.target_dim() != d {
                return Err(Error::usage(format!(
                    "deformation coefficients must be arity-2 cochains on dimension {d}"
                )));
            }
            if !f.is_equivariant(base.alpha(), base.alpha()) {
                return Err(Error::precondition("deformation coefficient is not α-equivariant"));
            }
        }
        let mut coeffs1 = vec![base.bracket1().as_cochain().clone()];
        coeffs1.extend(higher1);
        let mut coeffs2 = vec![base.bracket2().as_cochain().clone()];
        coeffs2.extend(higher2);
        Ok(OrderPDeformation {
            base: base.clone(),
            coeffs1,
            coeffs2,
        })
    }

    /// Order-1 deformation given by a linear generator.
    pub fn from_generator(base: &CompatibleHomLieAlgebra, g: &LinearGenerator) -> Result<Self> {
        OrderPDeformation::new(base, vec![g.omega1.clone()], vec![g.omega2.clone()])
    }

    pub fn order(&self) -> usize {
        self.coeffs1.len() - 1
    }

    pub fn base(&self) -> &CompatibleHomLieAlgebra {
        &self.base
    }

    /// `[μ_{1,0}, …, μ_{1,p}]`.
    pub fn coeffs1(&self) -> &[Cochain] {
        &self.coeffs1
    }

    pub fn coeffs2(&self) -> &[Cochain] {
        &self.coeffs2
    }

    /// Drops coefficients above order `p`.
    pub fn truncate(&self, p: usize) -> Result<Self> {
        if p == 0 || p > self.order() {
            return Err(Error::usage(format!(
                "truncation order {p} out of range 1..={}",
                self.order()
            )));
        }
        Ok(OrderPDeformation {
            base: self.base.clone(),
            coeffs1: self.coeffs1[..=p].to_vec(),
            coeffs2: self.coeffs2[..=p].to_vec(),
        })
    }

    /// Appends `(μ_{1,p+1}, μ_{2,p+1})`.
    pub fn extend(&self, top1: Cochain, top2: Cochain) -> Result<Self> {
        let mut higher1 = self.coeffs1[1..].to_vec();
        let mut higher2 = self.coeffs2[1..].to_vec();
        higher1.push(top1);
        higher2.push(top2);
        OrderPDeformation::new(&self.base, higher1, higher2)
    }
}

/// Residuals at one power `tⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderResiduals {
    pub n: usize,
    /// `¹δμ_{1,n} − ½Σ[μ_{1,i},μ_{1,j}]`, `²δμ_{2,n} − ½Σ[μ_{2,i},μ_{2,j}]`,
    /// `¹δμ_{2,n} + ²δμ_{1,n} − Σ[μ_{1,i},μ_{2,j}]` with `i, j ≥ 1`.
    pub identities: [Cochain; 3],
    /// Coefficient of `tⁿ` in `[μ_{1,t},μ_{1,t}]`, `[μ_{2,t},μ_{2,t}]`, `[μ_{1,t},μ_{2,t}]`.
    pub brackets: [Cochain; 3],
}

impl OrderResiduals {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(Cochain::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderPReport {
    pub order: usize,
    pub levels: Vec<OrderResiduals>,
}

impl OrderPReport {
    pub fn passed(&self) -> bool {
        self.levels.iter().all(OrderResiduals::passed)
    }

    /// First power of `t` at which an identity fails.
    pub fn first_failure(&self) -> Option<usize> {
        self.levels.iter().find(|l| !l.passed()).map(|l| l.n)
    }
}

/// `Σ_{i+j=n, i,j ≥ lo} [a_i, b_j]`.
fn convolution(a: &[Cochain], b: &[Cochain], n: usize, lo: usize, alpha: &Matrix) -> Result<Cochain> {
    let d = alpha.rows();
    let mut acc = Cochain::zero(3, d, d);
    for i in lo..=n.saturating_sub(lo) {
        let j = n - i;
        if j < lo || i >= a.len() || j >= b.len() {
            continue;
        }
        acc = acc.add(&nr_bracket(&a[i], &b[j], alpha)?);
    }
    Ok(acc)
}

/// Checks the system of identities for every `n ≤ p` and compares with the
/// coefficientwise brackets of the truncated series.
///
/// The two paths are related by `[μ_{k,t},μ_{k,t}]ₙ = −2·(identity residual)`
/// and `[μ_{1,t},μ_{2,t}]ₙ = −(mixed residual)` for `n ≥ 1`, with the factors
/// `−1` and `−½` at `n = 0`; any disagreement is a contract error.
pub fn verify_order_p(d: &OrderPDeformation) -> Result<OrderPReport> {
    let c = &d.base;
    let alpha = c.alpha();
    let adj = Representation::adjoint(c);
    let d1 = |f: &Cochain| coboundary_with(alpha, c.bracket1(), &adj, 0, f);
    let d2 = |f: &Cochain| coboundary_with(alpha, c.bracket2(), &adj, 1, f);
    let half = ratio(1, 2);
    let (m1, m2) = (&d.coeffs1, &d.coeffs2);
    let mut levels = Vec::with_capacity(d.order() + 1);
    for n in 0..=d.order() {
        let s11 = convolution(m1, m1, n, 1, alpha)?;
        let s22 = convolution(m2, m2, n, 1, alpha)?;
        let s12 = convolution(m1, m2, n, 1, alpha)?;
        let identities = [
            d1(&m1[n]).sub(&s11.scale(&half)),
            d2(&m2[n]).sub(&s22.scale(&half)),
            d1(&m2[n]).add(&d2(&m1[n])).sub(&s12),
        ];
        let brackets = [
            convolution(m1, m1, n, 0, alpha)?,
            convolution(m2, m2, n, 0, alpha)?,
            convolution(m1, m2, n, 0, alpha)?,
        ];
        let (same, mixed) = if n == 0 {
            (rat(-1), ratio(-1, 2))
        } else {
            (rat(-2), rat(-1))
        };
        let predicted = [
            identities[0].scale(&same),
            identities[1].scale(&same),
            identities[2].scale(&mixed),
        ];
        if predicted != brackets {
            return Err(Error::contract(format!(
                "bracket and identity residuals disagree at t^{n}"
            )));
        }
        levels.push(OrderResiduals {
            n,
            identities,
            brackets,
        });
    }
    Ok(OrderPReport {
        order: d.order(),
        levels,
    })
}

/// `Ob = (½Σ[μ_{1,i},μ_{1,j}], Σ[μ_{1,i},μ_{2,j}], ½Σ[μ_{2,i},μ_{2,j}])`
/// over `i + j = p + 1`, `i, j ≥ 1`; asserted to be a 3-cocycle.
pub fn obstruction(d: &OrderPDeformation) -> Result<CompatibleCochain> {
    let report = verify_order_p(d)?;
    if let Some(n) = report.first_failure() {
        return Err(Error::precondition(format!(
            "not an order-{} deformation: identities fail at t^{n}",
            d.order()
        )));
    }
    let alpha = d.base.alpha();
    let half = ratio(1, 2);
    let top = d.order() + 1;
    let ob = CompatibleCochain::new(
        3,
        vec![
            convolution(&d.coeffs1, &d.coeffs1, top, 1, alpha)?.scale(&half),
            convolution(&d.coeffs1, &d.coeffs2, top, 1, alpha)?,
            convolution(&d.coeffs2, &d.coeffs2, top, 1, alpha)?.scale(&half),
        ],
    )?;
    let adj = Representation::adjoint(&d.base);
    if !compatible_coboundary(&d.base, &adj, &ob)?.is_zero() {
        return Err(Error::contract("obstruction cochain is not a cocycle"));
    }
    Ok(ob)
}

/// Coordinates of `[Ob]` in the `H³_cHom(𝔤, 𝔤)` representative basis.
pub fn obstruction_class(d: &OrderPDeformation) -> Result<Vector> {
    let ob = obstruction(d)?;
    let adj = Representation::adjoint(&d.base);
    compatible_cohomology(&d.base, &adj, 3)?.class_coordinates(&ob)
}

/// Solves `δ_cHom(μ_{1,p+1}, μ_{2,p+1}) = Ob`; `None` when the obstruction
/// class is nonzero.
pub fn is_extensible(d: &OrderPDeformation) -> Result<Option<(Cochain, Cochain)>> {
    let ob = obstruction(d)?;
    let c = &d.base;
    let adj = Representation::adjoint(c);
    let basis = compatible_cochain_basis(c, &adj, 2)?;
    let target = ob.to_flat();
    let dim = c.dim();
    let solution = if basis.is_empty() {
        target.iter().all(Zero::is_zero).then(Vec::new)
    } else {
        let columns: Vec<Vector> = basis
            .iter()
            .map(|b| compatible_coboundary(c, &adj, b).map(|x| x.to_flat()))
            .collect::<Result<_>>()?;
        solve(&Matrix::from_columns(target.len(), &columns), &target)?
    };
    let Some(coefficients) = solution else {
        return Ok(None);
    };
    let mut pair = CompatibleCochain::zero(2, dim, dim);
    for (k, b) in coefficients.iter().zip(&basis) {
        if !k.is_zero() {
            pair = pair.add(&b.scale(k));
        }
    }
    let [top1, top2] = [pair.components()[0].clone(), pair.components()[1].clone()];
    let extended = d.extend(top1.clone(), top2.clone())?;
    if !verify_order_p(&extended)?.passed() {
        return Err(Error::contract(
            "solution of δ_cHom x = Ob does not extend the deformation",
        ));
    }
    Ok(Some((top1, top2)))
}
