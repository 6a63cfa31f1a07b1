#![allow(dead_code)]

use cohomlie::linalg::{rat, ratio, Matrix, Rational, Vector};
use cohomlie::{hom_cochain_basis, Cochain, StructureConstants};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational with numerator in [-3, 3] and denominator in [1, 3].
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

pub fn random_vector(rng: &mut impl Rng, len: usize) -> Vector {
    (0..len).map(|_| small_rational(rng)).collect()
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::new(rows, cols, random_vector(rng, rows * cols)).unwrap()
}

/// Random element of the span of `basis`; `None` for an empty basis.
pub fn random_combination(rng: &mut impl Rng, basis: &[Cochain]) -> Option<Cochain> {
    let first = basis.first()?;
    let mut acc = Cochain::zero(first.arity(), first.source_dim(), first.target_dim());
    for b in basis {
        acc = acc.add(&b.scale(&small_rational(rng)));
    }
    Some(acc)
}

/// Random element of `Cⁿ_Hom` for twists `alpha`, `beta`.
pub fn random_equivariant(rng: &mut impl Rng, alpha: &Matrix, beta: &Matrix, n: usize) -> Cochain {
    let basis = hom_cochain_basis(alpha, beta, n).unwrap();
    random_combination(rng, &basis)
        .unwrap_or_else(|| Cochain::zero(n, alpha.rows(), beta.rows()))
}

pub fn random_bracket(rng: &mut impl Rng, dim: usize) -> StructureConstants {
    let entries: Vec<(usize, usize, Vector)> = (0..dim)
        .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, random_vector(rng, dim)))
        .collect();
    StructureConstants::from_entries(dim, &entries).unwrap()
}

/// Naive `[x,y]` from a dense table `table[i][j]`, used by oracles that must
/// not go through the library's cochain evaluation.
pub fn dense_table(b: &StructureConstants) -> Vec<Vec<Vector>> {
    let d = b.dim();
    (0..d)
        .map(|i| (0..d).map(|j| b.on_basis(i, j)).collect())
        .collect()
}

pub fn dense_bracket(table: &[Vec<Vector>], x: &[Rational], y: &[Rational]) -> Vector {
    let d = table.len();
    let mut out = vec![rat(0); d];
    for i in 0..d {
        for j in 0..d {
            let c = &x[i] * &y[j];
            for k in 0..d {
                out[k] += &c * &table[i][j][k];
            }
        }
    }
    out
}
