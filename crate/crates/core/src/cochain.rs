//! Alternating cochains, their α-equivariant subspaces, and the
//! Nijenhuis–Richardson bracket.
//!
//! A cochain of arity `n` from a `d`-dimensional space into a
//! `t`-dimensional one is stored as a `t × C(d, n)` matrix: column `c` holds
//! the value on the `c`-th strictly increasing index tuple in lexicographic
//! order. Values on other tuples follow by alternation. Arity 0 is allowed
//! and stands for a single vector (a 0-cochain).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vector, kernel_basis, rat, zero_vector, Matrix, Rational, Vector};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All strictly increasing `k`-tuples drawn from `0..d`, in lexicographic order.
pub fn combinations(d: usize, k: usize) -> Vec<Vec<usize>> {
    if k > d {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(binomial(d, k));
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (0..k).rev().find(|&i| current[i] < d - k + i) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Position of a strictly increasing tuple in the order of [`combinations`].
pub fn combination_index(d: usize, combo: &[usize]) -> usize {
    let k = combo.len();
    let mut index = 0;
    let mut start = 0;
    for (i, &c) in combo.iter().enumerate() {
        for j in start..c {
            index += binomial(d - 1 - j, k - 1 - i);
        }
        start = c + 1;
    }
    index
}

/// Sorts `indices` and returns the permutation sign, or `None` on a repeat.
pub fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut sorted = indices.to_vec();
    let mut negative = false;
    // insertion sort; tuples are short
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] > sorted[j] {
            sorted.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sorted, negative))
}

/// Alternating multilinear map `Λⁿ(source) → target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    arity: usize,
    source_dim: usize,
    coeffs: Matrix,
}

impl Cochain {
    pub fn zero(arity: usize, source_dim: usize, target_dim: usize) -> Self {
        Cochain {
            arity,
            source_dim,
            coeffs: Matrix::zeros(target_dim, binomial(source_dim, arity)),
        }
    }

    pub fn from_coefficients(arity: usize, source_dim: usize, coeffs: Matrix) -> Result<Self> {
        let expected = binomial(source_dim, arity);
        if coeffs.cols() != expected {
            return Err(Error::usage(format!(
                "arity-{arity} cochain on dimension {source_dim} needs {expected} columns, got {}",
                coeffs.cols()
            )));
        }
        Ok(Cochain {
            arity,
            source_dim,
            coeffs,
        })
    }

    /// Builds a cochain from its values on increasing basis tuples.
    pub fn from_fn(
        arity: usize,
        source_dim: usize,
        target_dim: usize,
        mut value: impl FnMut(&[usize]) -> Vector,
    ) -> Self {
        let columns: Vec<Vector> = combinations(source_dim, arity)
            .iter()
            .map(|combo| {
                let v = value(combo);
                assert_eq!(v.len(), target_dim, "cochain value has wrong length");
                v
            })
            .collect();
        Cochain {
            arity,
            source_dim,
            coeffs: Matrix::from_columns(target_dim, &columns),
        }
    }

    /// Inverse of [`Cochain::to_flat`].
    pub fn from_flat(arity: usize, source_dim: usize, target_dim: usize, flat: &[Rational]) -> Self {
        let cols = binomial(source_dim, arity);
        Cochain {
            arity,
            source_dim,
            coeffs: Matrix::new(target_dim, cols, flat.to_vec()).expect("flat length"),
        }
    }

    /// A linear map viewed as an arity-1 cochain.
    pub fn from_linear_map(m: &Matrix) -> Self {
        Cochain {
            arity: 1,
            source_dim: m.cols(),
            coeffs: m.clone(),
        }
    }

    /// A vector viewed as an arity-0 cochain.
    pub fn from_vector(source_dim: usize, v: &[Rational]) -> Self {
        Cochain {
            arity: 0,
            source_dim,
            coeffs: Matrix::from_columns(v.len(), &[v.to_vec()]),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn coefficients(&self) -> &Matrix {
        &self.coeffs
    }

    /// Coordinates in the ambient space of all alternating maps, row-major.
    pub fn to_flat(&self) -> Vector {
        self.coeffs.entries().to_vec()
    }

    pub fn flat_len(&self) -> usize {
        self.coeffs.entries().len()
    }

    /// Value on the `index`-th increasing basis tuple.
    pub fn value_at(&self, index: usize) -> Vector {
        self.coeffs.column(index)
    }

    /// Value on an arbitrary tuple of basis indices.
    pub fn on_basis(&self, indices: &[usize]) -> Vector {
        assert_eq!(indices.len(), self.arity, "wrong number of arguments");
        match sort_with_sign(indices) {
            None => zero_vector(self.target_dim()),
            Some((sorted, negative)) => {
                let v = self.value_at(combination_index(self.source_dim, &sorted));
                if negative {
                    v.into_iter().map(|x| -x).collect()
                } else {
                    v
                }
            }
        }
    }

    /// The vector of an arity-0 cochain.
    pub fn as_vector(&self) -> Option<Vector> {
        (self.arity == 0).then(|| self.coeffs.column(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    fn same_shape(&self, other: &Cochain) -> bool {
        self.arity == other.arity
            && self.source_dim == other.source_dim
            && self.target_dim() == other.target_dim()
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert!(self.same_shape(other), "adding cochains of different shapes");
        Cochain {
            arity: self.arity,
            source_dim: self.source_dim,
            coeffs: self.coeffs.add(&other.coeffs),
        }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        assert!(self.same_shape(other), "subtracting cochains of different shapes");
        Cochain {
            arity: self.arity,
            source_dim: self.source_dim,
            coeffs: self.coeffs.sub(&other.coeffs),
        }
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        Cochain {
            arity: self.arity,
            source_dim: self.source_dim,
            coeffs: self.coeffs.scale(c),
        }
    }

    /// `m ∘ self`.
    pub fn compose_left(&self, m: &Matrix) -> Cochain {
        Cochain {
            arity: self.arity,
            source_dim: self.source_dim,
            coeffs: m.mul(&self.coeffs),
        }
    }

    /// Whether `β ∘ f = f ∘ α^∧n`.
    pub fn is_equivariant(&self, alpha: &Matrix, beta: &Matrix) -> bool {
        if alpha.rows() != self.source_dim || beta.rows() != self.target_dim() {
            return false;
        }
        let lhs = beta.mul(&self.coeffs);
        let rhs = self.coeffs.mul(&compound_matrix(alpha, self.arity));
        lhs == rhs
    }
}

/// Evaluates an alternating cochain on arbitrary vectors.
pub fn evaluate(f: &Cochain, args: &[Vector]) -> Result<Vector> {
    if args.len() != f.arity {
        return Err(Error::usage(format!(
            "cochain of arity {} given {} arguments",
            f.arity,
            args.len()
        )));
    }
    if let Some(bad) = args.iter().find(|a| a.len() != f.source_dim) {
        return Err(Error::usage(format!(
            "argument of length {} for source dimension {}",
            bad.len(),
            f.source_dim
        )));
    }
    let refs: Vec<&[Rational]> = args.iter().map(Vec::as_slice).collect();
    Ok(eval_unchecked(f, &refs))
}

/// Multilinear alternating extension: `f(v₁,…,v_k) = Σ_I det(v[I]) f(e_I)`.
pub(crate) fn eval_unchecked(f: &Cochain, args: &[&[Rational]]) -> Vector {
    let k = f.arity;
    let mut out = zero_vector(f.target_dim());
    for (c, combo) in combinations(f.source_dim, k).iter().enumerate() {
        let coefficient = minor_of_arguments(args, combo);
        if coefficient.is_zero() {
            continue;
        }
        for r in 0..out.len() {
            let x = f.coeffs.get(r, c);
            if !x.is_zero() {
                out[r] += &coefficient * x;
            }
        }
    }
    out
}

fn minor_of_arguments(args: &[&[Rational]], rows: &[usize]) -> Rational {
    match args.len() {
        0 => Rational::one(),
        1 => args[0][rows[0]].clone(),
        2 => &args[0][rows[0]] * &args[1][rows[1]] - &args[1][rows[0]] * &args[0][rows[1]],
        k => {
            let mut m = Matrix::zeros(k, k);
            for (i, &r) in rows.iter().enumerate() {
                for (j, a) in args.iter().enumerate() {
                    m.set(i, j, a[r].clone());
                }
            }
            m.determinant()
        }
    }
}

/// Matrix of `α^∧n` on `Λⁿ` in the lexicographic tuple basis; defined for every `n ≥ 0`.
pub(crate) fn compound_matrix(alpha: &Matrix, n: usize) -> Matrix {
    let d = alpha.rows();
    let combos = combinations(d, n);
    let size = combos.len();
    let mut m = Matrix::zeros(size, size);
    for (i, rows) in combos.iter().enumerate() {
        for (j, cols) in combos.iter().enumerate() {
            let minor = if n == 0 {
                Rational::one()
            } else {
                alpha.select(rows, cols).determinant()
            };
            m.set(i, j, minor);
        }
    }
    m
}

/// The compound matrix of `α`: entries are `n × n` minors, representing `α^∧n`.
pub fn exterior_power_matrix(alpha: &Matrix, n: usize) -> Result<Matrix> {
    if !alpha.is_square() {
        return Err(Error::usage("twist map must be square"));
    }
    if n == 0 || n > alpha.rows() {
        return Err(Error::usage(format!(
            "exterior power {n} out of range 1..={}",
            alpha.rows()
        )));
    }
    Ok(compound_matrix(alpha, n))
}

/// Basis of `{f : Λⁿ → V | β ∘ f = f ∘ α^∧n}`; for `n = 0`, the fixed vectors of `β`
/// as arity-0 cochains.
pub fn hom_cochain_basis(alpha: &Matrix, beta: &Matrix, n: usize) -> Result<Vec<Cochain>> {
    if !alpha.is_square() || !beta.is_square() {
        return Err(Error::usage("twist maps must be square"));
    }
    let d = alpha.rows();
    let t = beta.rows();
    let cols = binomial(d, n);
    if cols == 0 || t == 0 {
        return Ok(Vec::new());
    }
    let a = compound_matrix(alpha, n);
    let unknowns = t * cols;
    // row (r', c') of β·M − M·A, column (r, c) for the unknown M[r][c]
    let mut system = Matrix::zeros(unknowns, unknowns);
    for r in 0..t {
        for c in 0..cols {
            let unknown = r * cols + c;
            for rp in 0..t {
                let b = beta.get(rp, r);
                if !b.is_zero() {
                    let row = rp * cols + c;
                    let v = system.get(row, unknown) + b;
                    system.set(row, unknown, v);
                }
            }
            for cp in 0..cols {
                let x = a.get(c, cp);
                if !x.is_zero() {
                    let row = r * cols + cp;
                    let v = system.get(row, unknown) - x;
                    system.set(row, unknown, v);
                }
            }
        }
    }
    Ok(kernel_basis(&system)
        .iter()
        .map(|flat| Cochain::from_flat(n, d, t, flat))
        .collect())
}

struct Shuffle {
    inner: Vec<usize>,
    outer: Vec<usize>,
    negative: bool,
}

/// `(p, q)`-shuffles of `0..p+q`, listed by the lexicographic order of their first block.
fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let total = p + q;
    combinations(total, p)
        .into_iter()
        .map(|inner| {
            let outer: Vec<usize> = (0..total).filter(|i| !inner.contains(i)).collect();
            let inversions: usize = inner
                .iter()
                .map(|&s| outer.iter().filter(|&&o| o < s).count())
                .sum();
            Shuffle {
                inner,
                outer,
                negative: inversions % 2 == 1,
            }
        })
        .collect()
}

fn check_endomorphism_pair(p: &Cochain, q: &Cochain, alpha: &Matrix) -> Result<usize> {
    let d = alpha.rows();
    if !alpha.is_square() {
        return Err(Error::usage("twist map must be square"));
    }
    for (name, f) in [("left", p), ("right", q)] {
        if f.source_dim != d || f.target_dim() != d {
            return Err(Error::usage(format!(
                "{name} operand is not an endomorphism cochain on dimension {d}"
            )));
        }
        if f.arity == 0 {
            return Err(Error::usage(format!(
                "{name} operand has arity 0; the bracket is defined from arity 1 up"
            )));
        }
    }
    Ok(d)
}

/// `(P ⋄ Q)(x₁,…) = Σ_σ sign(σ) P(Q(x_σ(1),…,x_σ(n+1)), αⁿx_σ(n+2),…)` over
/// `(n+1, m)`-shuffles, where `P` has arity `m+1` and `Q` has arity `n+1`.
pub fn nr_diamond(p: &Cochain, q: &Cochain, alpha: &Matrix) -> Result<Cochain> {
    let d = check_endomorphism_pair(p, q, alpha)?;
    let m = p.arity - 1;
    let n = q.arity - 1;
    let arity = m + n + 1;
    let twist = alpha.pow(n).column_vectors();
    let shuffle_list = shuffles(n + 1, m);
    Ok(Cochain::from_fn(arity, d, d, |combo| {
        let mut acc = zero_vector(d);
        for s in &shuffle_list {
            let q_args: Vec<usize> = s.inner.iter().map(|&i| combo[i]).collect();
            let q_value = q.value_at(combination_index(d, &q_args));
            if is_zero_vector(&q_value) {
                continue;
            }
            let mut args: Vec<&[Rational]> = Vec::with_capacity(m + 1);
            args.push(&q_value);
            for &o in &s.outer {
                args.push(&twist[combo[o]]);
            }
            let value = eval_unchecked(p, &args);
            let sign = if s.negative { rat(-1) } else { rat(1) };
            add_scaled(&mut acc, &sign, &value);
        }
        acc
    }))
}

/// `[P, Q] = P ⋄ Q − (−1)^{mn} Q ⋄ P` with `m = arity(P) − 1`, `n = arity(Q) − 1`.
pub fn nr_bracket(p: &Cochain, q: &Cochain, alpha: &Matrix) -> Result<Cochain> {
    let left = nr_diamond(p, q, alpha)?;
    let right = nr_diamond(q, p, alpha)?;
    let m = p.arity - 1;
    let n = q.arity - 1;
    Ok(if (m * n).is_multiple_of(2) {
        left.sub(&right)
    } else {
        left.add(&right)
    })
}

/// Lifts `f : Λⁿ𝔤 → V` to the endomorphism cochain of `𝔤 ⊕ V` with
/// `f̃((x₁,v₁),…) = (0, f(x₁,…))`.
pub fn lift_to_product(f: &Cochain, g_dim: usize, v_dim: usize) -> Result<Cochain> {
    if f.source_dim != g_dim || f.target_dim() != v_dim {
        return Err(Error::usage(format!(
            "cochain maps dimension {} to {}, expected {g_dim} to {v_dim}",
            f.source_dim,
            f.target_dim()
        )));
    }
    let total = g_dim + v_dim;
    Ok(Cochain::from_fn(f.arity, total, total, |combo| {
        let mut out = zero_vector(total);
        if combo.iter().all(|&i| i < g_dim) {
            let value = f.value_at(combination_index(g_dim, combo));
            out[g_dim..].clone_from_slice(&value);
        }
        out
    }))
}

/// Residual cochains of the Maurer–Cartan equations for a pair of brackets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McReport {
    pub residuals: [Cochain; 3],
}

impl McReport {
    pub fn is_mc(&self) -> bool {
        self.residuals.iter().all(Cochain::is_zero)
    }
}

fn check_bracket_cochain(name: &str, mu: &Cochain, alpha: &Matrix) -> Result<()> {
    let d = alpha.rows();
    if mu.arity != 2 || mu.source_dim != d || mu.target_dim() != d {
        return Err(Error::usage(format!(
            "{name} must be an arity-2 endomorphism cochain on dimension {d}"
        )));
    }
    if !mu.is_equivariant(alpha, alpha) {
        return Err(Error::precondition(format!(
            "{name} is not α-equivariant (multiplicativity fails)"
        )));
    }
    Ok(())
}

/// Maurer–Cartan check for a pair of 2-cochains.
///
/// Without a base the residuals are `[μ₁,μ₁]`, `[μ₂,μ₂]`, `[μ₁,μ₂]`. With a base
/// `(θ₁, θ₂)`, which must itself be Maurer–Cartan, the residuals are those of
/// `(μ₁, μ₂)` in the algebra twisted by the base:
/// `2[θ₁,μ₁]+[μ₁,μ₁]`, `2[θ₂,μ₂]+[μ₂,μ₂]`, `[θ₁,μ₂]+[θ₂,μ₁]+[μ₁,μ₂]`.
pub fn is_mc_pair(
    mu1: &Cochain,
    mu2: &Cochain,
    alpha: &Matrix,
    base: Option<(&Cochain, &Cochain)>,
) -> Result<McReport> {
    check_bracket_cochain("first cochain", mu1, alpha)?;
    check_bracket_cochain("second cochain", mu2, alpha)?;
    let plain = [
        nr_bracket(mu1, mu1, alpha)?,
        nr_bracket(mu2, mu2, alpha)?,
        nr_bracket(mu1, mu2, alpha)?,
    ];
    let Some((theta1, theta2)) = base else {
        return Ok(McReport { residuals: plain });
    };
    check_bracket_cochain("first base cochain", theta1, alpha)?;
    check_bracket_cochain("second base cochain", theta2, alpha)?;
    if !is_mc_pair(theta1, theta2, alpha, None)?.is_mc() {
        return Err(Error::precondition("base pair is not a Maurer–Cartan element"));
    }
    let two = rat(2);
    let [r11, r22, r12] = plain;
    Ok(McReport {
        residuals: [
            nr_bracket(theta1, mu1, alpha)?.scale(&two).add(&r11),
            nr_bracket(theta2, mu2, alpha)?.scale(&two).add(&r22),
            nr_bracket(theta1, mu2, alpha)?
                .add(&nr_bracket(theta2, mu1, alpha)?)
                .add(&r12),
        ],
    })
}

/// `Σ cᵢ fᵢ` over cochains of equal shape; `None` for an empty list.
pub fn linear_combination(coefficients: &[Rational], cochains: &[Cochain]) -> Option<Cochain> {
    let first = cochains.first()?;
    let mut flat = zero_vector(first.flat_len());
    for (c, f) in coefficients.iter().zip(cochains) {
        add_scaled(&mut flat, c, &f.to_flat());
    }
    Some(Cochain::from_flat(
        first.arity,
        first.source_dim,
        first.target_dim(),
        &flat,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{ratio, unit_vector, vector_add, vector_scale, vector_sub};

    #[test]
    fn combinations_are_lexicographic_and_ranked() {
        let combos = combinations(4, 2);
        assert_eq!(
            combos,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        for d in 0..6 {
            for k in 0..=d + 1 {
                let all = combinations(d, k);
                assert_eq!(all.len(), binomial(d, k));
                for (i, c) in all.iter().enumerate() {
                    assert_eq!(combination_index(d, c), i);
                }
            }
        }
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn shuffles_have_expected_signs() {
        let s = shuffles(1, 1);
        assert_eq!(s.len(), 2);
        assert!(!s[0].negative);
        assert!(s[1].negative);
        let s = shuffles(2, 1);
        let signs: Vec<bool> = s.iter().map(|x| x.negative).collect();
        assert_eq!(signs, vec![false, true, false]);
    }

    fn d2_bracket1() -> Cochain {
        // [e1, e2] = e1
        Cochain::from_fn(2, 2, 2, |_| vec![rat(1), rat(0)])
    }

    #[test]
    fn evaluate_alternates_and_expands() {
        let mu = d2_bracket1();
        let e1 = unit_vector(2, 0);
        let e2 = unit_vector(2, 1);
        let a = evaluate(&mu, &[e1.clone(), e2.clone()]).unwrap();
        let b = evaluate(&mu, &[e2.clone(), e1.clone()]).unwrap();
        assert_eq!(a, vector_scale(&rat(-1), &b));
        let x = vec![rat(3), ratio(1, 2)];
        assert!(is_zero_vector(&evaluate(&mu, &[x.clone(), x]).unwrap()));
        let sum = vector_add(&e1, &e2);
        assert_eq!(evaluate(&mu, &[sum, e2]).unwrap(), vec![rat(1), rat(0)]);
        assert!(matches!(evaluate(&mu, &[e1]), Err(Error::Usage(_))));
    }

    #[test]
    fn exterior_power_examples() {
        let alpha = Matrix::from_ints(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        assert_eq!(exterior_power_matrix(&alpha, 1).unwrap(), alpha);
        assert_eq!(
            exterior_power_matrix(&Matrix::identity(4), 2).unwrap(),
            Matrix::identity(6)
        );
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            exterior_power_matrix(&swap, 2).unwrap(),
            Matrix::from_ints(&[&[-1]])
        );
        assert!(exterior_power_matrix(&swap, 3).is_err());
        assert!(exterior_power_matrix(&swap, 0).is_err());
    }

    #[test]
    fn hom_basis_dimensions() {
        let id3 = Matrix::identity(3);
        assert_eq!(hom_cochain_basis(&id3, &id3, 2).unwrap().len(), 9);
        assert_eq!(hom_cochain_basis(&id3, &id3, 4).unwrap().len(), 0);
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let basis = hom_cochain_basis(&swap, &swap, 0).unwrap();
        assert_eq!(basis.len(), 1);
        for f in hom_cochain_basis(&swap, &swap, 2).unwrap() {
            assert!(f.is_equivariant(&swap, &swap));
        }
    }

    #[test]
    fn diamond_of_linear_maps_is_composition() {
        let alpha = Matrix::identity(2);
        let p = Cochain::from_linear_map(&Matrix::from_ints(&[&[1, 2], &[0, 1]]));
        let q = Cochain::from_linear_map(&Matrix::from_ints(&[&[0, 1], &[3, 0]]));
        let pq = nr_diamond(&p, &q, &alpha).unwrap();
        assert_eq!(
            pq.coefficients(),
            &p.coefficients().mul(q.coefficients())
        );
    }

    #[test]
    fn diamond_with_linear_right_operand() {
        let alpha = Matrix::identity(2);
        let p = d2_bracket1();
        let q = Cochain::from_linear_map(&Matrix::from_ints(&[&[1, 1], &[2, 0]]));
        let pq = nr_diamond(&p, &q, &alpha).unwrap();
        // (p⋄q)(e1, e2) = p(q e1, e2) − p(q e2, e1)
        let e1 = unit_vector(2, 0);
        let e2 = unit_vector(2, 1);
        let qe1 = q.value_at(0);
        let qe2 = q.value_at(1);
        let expected = vector_sub(
            &evaluate(&p, &[qe1, e2.clone()]).unwrap(),
            &evaluate(&p, &[qe2, e1.clone()]).unwrap(),
        );
        assert_eq!(pq.value_at(0), expected);
        assert_eq!(
            evaluate(&pq, &[e2, e1]).unwrap(),
            vector_scale(&rat(-1), &expected)
        );
    }

    #[test]
    fn bracket_of_odd_degree_with_itself_doubles_diamond() {
        let alpha = Matrix::identity(2);
        let mu = d2_bracket1();
        let sq = nr_bracket(&mu, &mu, &alpha).unwrap();
        assert_eq!(sq, nr_diamond(&mu, &mu, &alpha).unwrap().scale(&rat(2)));
        let zero = Cochain::zero(2, 1, 1);
        assert!(nr_diamond(&zero, &zero, &Matrix::identity(1))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn lift_annihilates_fiber() {
        let f = Cochain::from_fn(2, 2, 1, |_| vec![rat(5)]);
        let lifted = lift_to_product(&f, 2, 1).unwrap();
        let x1 = vec![rat(1), rat(0), rat(0)];
        let x2 = vec![rat(0), rat(1), rat(0)];
        let v = vec![rat(0), rat(0), rat(1)];
        assert_eq!(
            evaluate(&lifted, &[x1.clone(), x2]).unwrap(),
            vec![rat(0), rat(0), rat(5)]
        );
        assert!(is_zero_vector(&evaluate(&lifted, &[x1, v]).unwrap()));
        assert!(lift_to_product(&Cochain::zero(2, 2, 1), 2, 1)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn mc_rejects_non_equivariant_bracket() {
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        // [e1, e2] = e1 + e2 is not equivariant for the swap twist
        let mu = Cochain::from_fn(2, 2, 2, |_| vec![rat(1), rat(1)]);
        let zero = Cochain::zero(2, 2, 2);
        assert!(matches!(
            is_mc_pair(&mu, &zero, &swap, None),
            Err(Error::Precondition { .. })
        ));
    }
}
