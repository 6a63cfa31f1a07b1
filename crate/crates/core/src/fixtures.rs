//! Small named algebras shared by tests, benchmarks and the command line tool.
//!
//! Indices are 0-based: `e1` of the usual presentation is basis vector 0.

use crate::algebra::{
    induced_bracket, CompatibleHomLieAlgebra, HomLieAlgebra, LinearOperator, StructureConstants,
};
use crate::linalg::{rat, Matrix, Rational};

/// One-dimensional abelian algebra with `α = id`.
pub fn ab1() -> HomLieAlgebra {
    HomLieAlgebra::new(Matrix::identity(1), StructureConstants::zero(1)).expect("shapes agree")
}

/// Four-dimensional example with `[e1,e2] = a e1 + a e2` and
/// `α: e1 ↦ e2, e2 ↦ e1, e3 ↦ 0, e4 ↦ e3`.
///
/// Multiplicativity fails for `a ≠ 0`.
pub fn g4a(a: Rational) -> HomLieAlgebra {
    let alpha = Matrix::from_ints(&[
        &[0, 1, 0, 0],
        &[1, 0, 0, 0],
        &[0, 0, 0, 1],
        &[0, 0, 0, 0],
    ]);
    let bracket = StructureConstants::from_entries(
        4,
        &[(0, 1, vec![a.clone(), a, rat(0), rat(0)])],
    )
    .expect("valid entries");
    HomLieAlgebra::new(alpha, bracket).expect("shapes agree")
}

/// Nijenhuis operator on [`g4a`]: swaps `e1, e2`, fixes `e3, e4`.
pub fn g4a_nijenhuis() -> LinearOperator {
    LinearOperator::nijenhuis(Matrix::from_ints(&[
        &[0, 1, 0, 0],
        &[1, 0, 0, 0],
        &[0, 0, 1, 0],
        &[0, 0, 0, 1],
    ]))
}

/// Two-dimensional example with `[e1,e2] = a e1 + a e2` and `α` swapping
/// `e1, e2`.
///
/// Multiplicativity fails for `a ≠ 0`.
pub fn g2a(a: Rational) -> HomLieAlgebra {
    let bracket = StructureConstants::from_entries(2, &[(0, 1, vec![a.clone(), a])])
        .expect("valid entries");
    HomLieAlgebra::new(Matrix::from_ints(&[&[0, 1], &[1, 0]]), bracket).expect("shapes agree")
}

/// `R = α` on [`g2a`], weight `−1`.
pub fn g2a_rota_baxter() -> LinearOperator {
    LinearOperator::rota_baxter(Matrix::from_ints(&[&[0, 1], &[1, 0]]), rat(-1))
}

/// Two-dimensional compatible algebra with `α = id`, `[e1,e2]₁ = e1`,
/// `[e1,e2]₂ = e2`.
pub fn d2() -> CompatibleHomLieAlgebra {
    CompatibleHomLieAlgebra::new(
        Matrix::identity(2),
        StructureConstants::from_int_entries(2, &[(0, 1, &[1, 0])]),
        StructureConstants::from_int_entries(2, &[(0, 1, &[0, 1])]),
    )
    .expect("shapes agree")
}

/// Nijenhuis operator `diag(1, 2)`, valid for both brackets of [`d2`].
pub fn d2_nijenhuis() -> LinearOperator {
    LinearOperator::nijenhuis(Matrix::diagonal(&[rat(1), rat(2)]))
}

/// Heisenberg algebra, `[e1,e2] = e3`, `α = id`.
pub fn h3() -> HomLieAlgebra {
    HomLieAlgebra::new(
        Matrix::identity(3),
        StructureConstants::from_int_entries(3, &[(0, 1, &[0, 0, 1])]),
    )
    .expect("shapes agree")
}

/// Nijenhuis operator `diag(1, 2, 1)` on [`h3`]; the induced bracket is `2[·,·]`.
pub fn h3_nijenhuis() -> LinearOperator {
    LinearOperator::nijenhuis(Matrix::diagonal(&[rat(1), rat(2), rat(1)]))
}

/// `(H3, [·,·]_N)` for `N =` [`h3_nijenhuis`].
pub fn h3_nijenhuis_pair() -> CompatibleHomLieAlgebra {
    let h3 = h3();
    let induced = induced_bracket(&h3, &h3_nijenhuis()).expect("diag(1, 2, 1) is Nijenhuis on H3");
    CompatibleHomLieAlgebra::from_pair(&h3, &induced).expect("same twist")
}
