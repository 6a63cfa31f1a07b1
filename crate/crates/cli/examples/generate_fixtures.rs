//! Regenerates the documents under `fixtures/`.
//!
//! Run with `cargo run -p cohomlie-cli --example generate_fixtures`.

use std::path::Path;

use cohomlie::linalg::{rat, unit_vector, Matrix, Vector};
use cohomlie::{
    compatible_cohomology, compatible_coboundary, fixtures, is_extensible, trivial_deformation_from_nijenhuis,
    Cochain, CompatibleCochain, CompatibleHomLieAlgebra, ExtensionCocycle, LinearGenerator,
    OrderPDeformation, Representation, StructureConstants,
};
use cohomlie_cli::document::{
    cocycle_pair, generator_block, operator_block, table_of, Algebra, AlgebraDocument, DeformationBlock,
    ExtensionBlock, RepresentationBlock,
};

fn write(dir: &Path, name: &str, doc: &AlgebraDocument) {
    let text = doc.to_json();
    AlgebraDocument::parse(&text).expect("generated document parses");
    std::fs::write(dir.join(format!("{name}.json")), text).expect("fixture directory is writable");
}

fn plain(l: &cohomlie::HomLieAlgebra) -> AlgebraDocument {
    AlgebraDocument::from_algebra(&Algebra::Plain(l.clone()))
}

fn compatible(c: &CompatibleHomLieAlgebra) -> AlgebraDocument {
    AlgebraDocument::from_algebra(&Algebra::Compatible(c.clone()))
}

/// Coefficients of `(I − tN)[(I + tN)x, (I + tN)y]` for `N² = 0`.
fn conjugated(b: &StructureConstants, n: &Matrix) -> Vec<Cochain> {
    let d = b.dim();
    let add = |a: Vector, c: Vector| -> Vector { a.iter().zip(&c).map(|(p, q)| p + q).collect() };
    let sub = |a: Vector, c: Vector| -> Vector { a.iter().zip(&c).map(|(p, q)| p - q).collect() };
    (1..=3)
        .map(|k| {
            Cochain::from_fn(2, d, d, |p| {
                let (x, y) = (unit_vector(d, p[0]), unit_vector(d, p[1]));
                let (nx, ny) = (n.mul_vec(&x), n.mul_vec(&y));
                let lin = add(b.bracket(&nx, &y), b.bracket(&x, &ny));
                match k {
                    1 => sub(lin, n.mul_vec(&b.bracket(&x, &y))),
                    2 => sub(b.bracket(&nx, &ny), n.mul_vec(&lin)),
                    _ => n.mul_vec(&b.bracket(&nx, &ny)).iter().map(|v| -v).collect(),
                }
            })
        })
        .collect()
}

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    std::fs::create_dir_all(&dir).expect("fixture directory is writable");

    write(&dir, "ab1", &plain(&fixtures::ab1()));

    for (name, a) in [("g4a", 1), ("g4a0", 0)] {
        let mut doc = plain(&fixtures::g4a(rat(a)));
        doc.operators.push(operator_block("N", &fixtures::g4a_nijenhuis()));
        write(&dir, name, &doc);
    }

    let mut g2a = plain(&fixtures::g2a(rat(1)));
    g2a.operators.push(operator_block("R", &fixtures::g2a_rota_baxter()));
    write(&dir, "g2a", &g2a);

    let d2 = fixtures::d2();
    let mut doc = compatible(&d2);
    doc.operators.push(operator_block("N", &fixtures::d2_nijenhuis()));
    write(&dir, "d2", &doc);

    let mut doc = plain(&fixtures::h3());
    doc.operators.push(operator_block("N", &fixtures::h3_nijenhuis()));
    write(&dir, "h3", &doc);

    let pair = fixtures::h3_nijenhuis_pair();
    let mut doc = compatible(&pair);
    doc.operators.push(operator_block("N", &fixtures::h3_nijenhuis()));
    write(&dir, "h3_pair", &doc);

    // order-1 deformation generated by the Nijenhuis operator on D2
    let g = trivial_deformation_from_nijenhuis(&d2, &fixtures::d2_nijenhuis()).expect("Nijenhuis on D2");
    let mut doc = compatible(&d2);
    doc.deformation = Some(generator_block(&g));
    write(&dir, "d2_deformation", &doc);

    // order-2 truncation of a conjugation by exp(tN), N = e₃ ↦ e₁
    let mut n = Matrix::zeros(3, 3);
    n.set(0, 2, rat(1));
    let c1 = conjugated(pair.bracket1(), &n);
    let c2 = conjugated(pair.bracket2(), &n);
    let mut doc = compatible(&pair);
    doc.deformation = Some(DeformationBlock {
        order: 2,
        coeffs1: c1[..2].iter().map(table_of).collect(),
        coeffs2: c2[..2].iter().map(table_of).collect(),
    });
    write(&dir, "h3_pair_deformation", &doc);

    // first obstructed infinitesimal deformation among representatives and their pairwise sums
    let adj = Representation::adjoint(&pair);
    let reps = compatible_cohomology(&pair, &adj, 2).expect("valid pair").representatives;
    let mut candidates = reps.clone();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            candidates.push(reps[i].add(&reps[j]));
        }
    }
    let obstructed = candidates
        .iter()
        .map(|z| LinearGenerator::new(z.components()[0].clone(), z.components()[1].clone()))
        .find(|g| {
            let d = OrderPDeformation::from_generator(&pair, g).expect("cocycle generator");
            is_extensible(&d).expect("order-1 deformation").is_none()
        })
        .expect("an obstructed generator exists");
    let mut doc = compatible(&pair);
    doc.deformation = Some(generator_block(&obstructed));
    write(&dir, "h3_pair_obstructed", &doc);

    // extensions by the adjoint representation
    let z = ExtensionCocycle::from_compatible(&reps[0]).expect("degree 2");
    let mut tau = Matrix::zeros(3, 3);
    tau.set(2, 0, rat(1));
    tau.set(1, 1, rat(-1));
    let t = CompatibleCochain::new(1, vec![Cochain::from_linear_map(&tau)]).expect("degree 1");
    let shifted = reps[0].add(&compatible_coboundary(&pair, &adj, &t).expect("valid cochain"));
    let zp = ExtensionCocycle::from_compatible(&shifted).expect("degree 2");
    let mut doc = compatible(&pair);
    doc.representation = Some(RepresentationBlock::Adjoint);
    doc.extension = Some(ExtensionBlock {
        cocycle: cocycle_pair(&z),
        compare: Some(cocycle_pair(&zp)),
    });
    write(&dir, "h3_pair_extension", &doc);

    doc.extension = Some(ExtensionBlock {
        cocycle: cocycle_pair(&z),
        compare: Some(cocycle_pair(&ExtensionCocycle::zero(3, 3))),
    });
    write(&dir, "h3_pair_extension_distinct", &doc);
}
