//! The bundled fixture corpus. Every constructor takes the field so the same
//! fixtures exist over `Q` and over `F_p`.

use crate::algebra::{Algebra, Flavor};
use crate::bialgebra::{Bialgebra, QuadraticAlgebra};
use crate::double::DoubleAlgebra;
use crate::error::Result;
use crate::report::{Clause, Report};
use crate::scalar::Field;
use crate::tensor::{BilinearForm, Tensor2};
use crate::yang_baxter::{Classification, RMatrix};

pub fn zero(field: Field, n: usize) -> Algebra {
    Algebra::zero(format!("Z0({n})"), field, n)
}

/// `e1∘e1 = e2`.
pub fn n2(field: Field) -> Algebra {
    Algebra::zinbiel("N2", field, 2, [(0, 0, 1, field.one())]).expect("N2 is Zinbiel")
}

/// `e1∘e2 = e3`.
pub fn h3(field: Field) -> Algebra {
    Algebra::zinbiel("H3", field, 3, [(0, 1, 2, field.one())]).expect("H3 is Zinbiel")
}

/// `e1∘e1 = e2`, `e1∘e2 = c·e3`, `e2∘e1 = c'·e3`, unchecked.
pub fn f3(field: Field, c: i64, c2: i64) -> Algebra {
    Algebra::from_constants(
        format!("F3({c},{c2})"),
        field,
        3,
        [(0, 0, 1, field.one()), (0, 1, 2, field.int(c)), (1, 0, 2, field.int(c2))],
    )
    .expect("indices in range")
}

/// Members of the `F3` family with `c, c' ∈ [-4, 4]` that pass the Zinbiel
/// check over `Q` (exactly those with `c = 2c'`), built over `field`.
pub fn f3_family(field: Field) -> Vec<Algebra> {
    let mut out = Vec::new();
    for c2 in -4..=4 {
        for c in -4..=4 {
            if f3(Field::Rational, c, c2).check_zinbiel().passed {
                out.push(f3(field, c, c2).with_flavor(Flavor::Zinbiel).expect("screened"));
            }
        }
    }
    out
}

/// Zero algebras of dimensions 1 to 4, `N2`, the screened `F3` family and `H3`.
pub fn algebras(field: Field) -> Vec<Algebra> {
    let mut out: Vec<Algebra> = (1..=4).map(|n| zero(field, n)).collect();
    out.push(n2(field));
    out.extend(f3_family(field));
    out.push(h3(field));
    out
}

/// Symmetric solutions of `⟦r,r⟧ = 0` found by exhaustive search over `F_7`,
/// frozen with entries written in `{-3..3}`. Each one also solves the
/// equation over `Q` and gives a nonzero dual product.
pub const FROZEN_ZYBE: &[(&str, &[&[i64]])] = &[
    ("N2", &[&[0, 1], &[1, 0]]),
    ("N2", &[&[0, -1], &[-1, -1]]),
    ("F3(2,1)", &[&[0, 0, 0], &[0, 0, 1], &[0, 1, 0]]),
    ("F3(2,1)", &[&[0, 0, 2], &[0, 1, 3], &[2, 3, 1]]),
    ("H3", &[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]),
    ("H3", &[&[-1, 0, -1], &[0, 0, -1], &[-1, -1, -1]]),
];

pub fn algebra_named(field: Field, name: &str) -> Option<Algebra> {
    algebras(field).into_iter().find(|a| a.name() == name)
}

pub fn zybe_fixtures(field: Field) -> Vec<RMatrix> {
    FROZEN_ZYBE
        .iter()
        .map(|(name, rows)| {
            let a = algebra_named(field, name).expect("fixture base is in the corpus");
            RMatrix::new(a, Tensor2::from_ints(field, rows)).expect("dimensions agree")
        })
        .collect()
}

/// Trivial bialgebras on every corpus algebra, their duals for nonzero
/// algebras, and the coboundary bialgebras of the frozen solutions.
pub fn bialgebras(field: Field) -> Vec<Bialgebra> {
    let mut out = Vec::new();
    for a in algebras(field) {
        let t = Bialgebra::trivial(&a);
        let dual = (!a.is_trivial()).then(|| t.dual_bialgebra());
        out.push(t);
        out.extend(dual);
    }
    out.extend(zybe_fixtures(field).iter().map(RMatrix::coboundary_bialgebra));
    out
}

pub fn doubles(field: Field) -> Result<Vec<DoubleAlgebra>> {
    bialgebras(field).iter().map(DoubleAlgebra::new).collect()
}

/// `Z0(2)` with `r = e1⊗e2 + e1⊗e1`, whose skew part is invertible.
pub fn z02_factorizable(field: Field) -> RMatrix {
    RMatrix::new(zero(field, 2), Tensor2::from_ints(field, &[&[1, 1], &[0, 0]])).expect("dimensions agree")
}

/// `Z0(3)` with a rank-two skew part: quasi-triangular, not factorizable.
pub fn z03_degenerate(field: Field) -> RMatrix {
    RMatrix::new(zero(field, 3), Tensor2::from_ints(field, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 1]]))
        .expect("dimensions agree")
}

/// Canonical r-matrices of every corpus double, plus `Z0(2)`.
pub fn factorizable_fixtures(field: Field) -> Result<Vec<RMatrix>> {
    let mut out: Vec<RMatrix> = doubles(field)?.iter().map(DoubleAlgebra::r_matrix).collect();
    out.push(z02_factorizable(field));
    Ok(out)
}

/// Factorizable fixtures, frozen solutions and the degenerate `Z0(3)` one.
pub fn quasi_triangular_fixtures(field: Field) -> Result<Vec<RMatrix>> {
    let mut out = zybe_fixtures(field);
    out.push(z03_degenerate(field));
    out.extend(factorizable_fixtures(field)?);
    Ok(out)
}

/// Doubles with their standard form, plus `Z0(2)` and `Z0(4)` with the
/// standard form.
pub fn quadratic_fixtures(field: Field) -> Result<Vec<QuadraticAlgebra>> {
    let mut out: Vec<QuadraticAlgebra> = doubles(field)?.iter().map(DoubleAlgebra::quadratic).collect();
    for n in [1, 2] {
        out.push(QuadraticAlgebra::new(zero(field, 2 * n), BilinearForm::standard(field, n))?);
    }
    Ok(out)
}

/// Everything `corpus-check` verifies, in one report.
pub fn check(field: Field) -> Result<Report> {
    let mut report = Report::new(format!("corpus over {field}"));
    for a in algebras(field) {
        let name = a.name().to_string();
        report.absorb(&name, a.check_zinbiel());
        report.absorb(&name, a.check_left_commutativity());
        report.absorb(&format!("{name}/sub-adjacent"), a.sub_adjacent()?.check_comm_assoc());
    }
    for (i, b) in bialgebras(field).iter().enumerate() {
        let tag = format!("bialgebra{}({})", i + 1, b.primal().name());
        report.absorb(&tag, b.check());
        let pair = b.to_matched_pair()?;
        report.absorb(&format!("{tag}/matched-pair"), pair.check());
        let manin = b.to_manin()?;
        report.absorb(&format!("{tag}/manin"), manin.check());
        report.push(Clause::fact(
            format!("{tag}/matched-pair-roundtrip"),
            Bialgebra::from_matched_pair(&pair)? == *b,
        ));
        report.push(Clause::fact(format!("{tag}/manin-roundtrip"), Bialgebra::from_manin(&manin)? == *b));
        let d = DoubleAlgebra::new(b)?;
        report.absorb(&format!("{tag}/double"), d.check());
        report.absorb(&format!("{tag}/double"), d.verify_factorizable());
    }
    for (i, r) in zybe_fixtures(field).iter().enumerate() {
        let tag = format!("zybe{}({})", i + 1, r.base().name());
        report.push(Clause::fact(format!("{tag}/bracket-vanishes"), r.bracket().is_zero()));
        let class = r.classify();
        report.push(
            Clause::fact(format!("{tag}/triangular"), matches!(class, Ok(Classification::Triangular)))
                .with_note(class.map(|c| c.to_string()).unwrap_or_else(|_| "rejected".into())),
        );
    }
    Ok(report)
}
