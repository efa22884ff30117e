//! Matched pairs of Zinbiel algebras and of commutative associative
//! algebras, with their bowtie products.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{Identity, Report, Shape, Suite};
use crate::representation::{check_family, combine, CommRepresentation, Representation};

/// `(A, B; ρ, μ, ρ', μ')` with `ρ, μ: A → End(B)` and `ρ', μ': B → End(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    a: Algebra,
    b: Algebra,
    rho: Vec<Matrix>,
    mu: Vec<Matrix>,
    rho_p: Vec<Matrix>,
    mu_p: Vec<Matrix>,
}

/// One of the four operator families of a matched pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMap {
    Rho,
    Mu,
    RhoPrime,
    MuPrime,
}

/// Three compatibility identities for `ρ, μ: A → End(B)` against
/// `ρ', μ': B → End(A)`, quantified over `x ∈ A` and `u, v ∈ B`.
#[allow(clippy::too_many_arguments)]
fn compatibility<'a>(
    names: [&str; 3],
    a: &'a Algebra,
    b: &'a Algebra,
    rho: &'a [Matrix],
    mu: &'a [Matrix],
    rho_p: &'a [Matrix],
    mu_p: &'a [Matrix],
    labels: (&str, &str),
) -> Vec<Identity<'a>> {
    let (n, m) = (a.dim(), b.dim());
    let args = [(labels.0, n), (labels.1, m), (labels.1, m)];
    let shape = Shape::vector(labels.1);
    let rho_of = move |x: &Vector| combine(rho, x, m);
    let mu_of = move |x: &Vector| combine(mu, x, m);
    vec![
        // u∘(μ(x)v) + μ(ρ'(v)x)u = μ(x)(u∘v + v∘u)
        Identity::new(names[0], &args, shape.clone(), move |t| {
            let (x, u, v) = (t[0], b.basis(t[1]), b.basis(t[2]));
            let lhs = &b.mul(&u, &mu[x].apply(&v)) + &mu_of(&rho_p[t[2]].column(x)).apply(&u);
            let rhs = mu[x].apply(&b.star(&u, &v));
            (lhs.into_vec(), rhs.into_vec())
        }),
        // ρ(x)(u∘v) − (ρ(x)u)∘v = ρ(μ'(u)x)v + (μ(x)u)∘v + ρ(ρ'(u)x)v
        Identity::new(names[1], &args, shape.clone(), move |t| {
            let (x, u, v) = (t[0], b.basis(t[1]), b.basis(t[2]));
            let lhs = &rho[x].apply(&b.mul(&u, &v)) - &b.mul(&rho[x].apply(&u), &v);
            let acts = &mu_p[t[1]].column(x) + &rho_p[t[1]].column(x);
            let rhs = &rho_of(&acts).apply(&v) + &b.mul(&mu[x].apply(&u), &v);
            (lhs.into_vec(), rhs.into_vec())
        }),
        // u∘(ρ(x)v) + μ(μ'(v)x)u − (μ(x)u)∘v = (ρ(x)u)∘v + ρ(μ'(u)x)v + ρ(ρ'(u)x)v
        Identity::new(names[2], &args, shape, move |t| {
            let (x, u, v) = (t[0], b.basis(t[1]), b.basis(t[2]));
            let lhs = &(&b.mul(&u, &rho[x].apply(&v)) + &mu_of(&mu_p[t[2]].column(x)).apply(&u))
                - &b.mul(&mu[x].apply(&u), &v);
            let acts = &mu_p[t[1]].column(x) + &rho_p[t[1]].column(x);
            let rhs = &b.mul(&rho[x].apply(&u), &v) + &rho_of(&acts).apply(&v);
            (lhs.into_vec(), rhs.into_vec())
        }),
    ]
}

impl MatchedPair {
    pub fn new(
        a: Algebra,
        b: Algebra,
        rho: Vec<Matrix>,
        mu: Vec<Matrix>,
        rho_p: Vec<Matrix>,
        mu_p: Vec<Matrix>,
    ) -> Result<MatchedPair> {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch(a.field().to_string(), b.field().to_string()));
        }
        check_family(&a, b.dim(), &rho)?;
        check_family(&a, b.dim(), &mu)?;
        check_family(&b, a.dim(), &rho_p)?;
        check_family(&b, a.dim(), &mu_p)?;
        Ok(MatchedPair {
            a,
            b,
            rho,
            mu,
            rho_p,
            mu_p,
        })
    }

    /// `(A, B; −L*−R*, R*, −𝓛*−𝓡*, 𝓡*)` where `B` is a product on the dual
    /// space of `A`. No validity check.
    pub fn coregular(a: &Algebra, dual: &Algebra) -> Result<MatchedPair> {
        if a.dim() != dual.dim() {
            return Err(Error::dims(a.dim(), dual.dim()));
        }
        let on_b = Representation::coregular(a);
        let on_a = Representation::coregular(dual);
        MatchedPair::new(
            a.clone(),
            dual.clone(),
            on_b.rho().to_vec(),
            on_b.mu().to_vec(),
            on_a.rho().to_vec(),
            on_a.mu().to_vec(),
        )
    }

    pub fn a(&self) -> &Algebra {
        &self.a
    }

    pub fn b(&self) -> &Algebra {
        &self.b
    }

    pub fn rho(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn mu(&self) -> &[Matrix] {
        &self.mu
    }

    pub fn rho_prime(&self) -> &[Matrix] {
        &self.rho_p
    }

    pub fn mu_prime(&self) -> &[Matrix] {
        &self.mu_p
    }

    /// `(B; ρ, μ)` as a representation of `A`.
    pub fn rep_on_b(&self) -> Representation {
        Representation::new(self.a.clone(), self.b.dim(), self.rho.clone(), self.mu.clone())
            .expect("shapes checked at construction")
    }

    /// `(A; ρ', μ')` as a representation of `B`.
    pub fn rep_on_a(&self) -> Representation {
        Representation::new(self.b.clone(), self.a.dim(), self.rho_p.clone(), self.mu_p.clone())
            .expect("shapes checked at construction")
    }

    pub fn check(&self) -> Report {
        let on_b = self.rep_on_b();
        let on_a = self.rep_on_a();
        let mut suite = Suite::new(format!("matched pair `{}` / `{}`", self.a.name(), self.b.name()));
        suite.extend(on_b.suite().prefixed("B"));
        suite.extend(on_a.suite().prefixed("A"));
        for id in compatibility(
            ["matched-pair-1", "matched-pair-2", "matched-pair-3"],
            &self.a,
            &self.b,
            &self.rho,
            &self.mu,
            &self.rho_p,
            &self.mu_p,
            ("e", "f"),
        ) {
            suite.identity(id);
        }
        for id in compatibility(
            ["matched-pair-4", "matched-pair-5", "matched-pair-6"],
            &self.b,
            &self.a,
            &self.rho_p,
            &self.mu_p,
            &self.rho,
            &self.mu,
            ("f", "e"),
        ) {
            suite.identity(id);
        }
        suite.run()
    }

    /// `(x+u)⋄(y+v) = x∘y + ρ'(u)y + μ'(v)x + u∘v + ρ(x)v + μ(y)u` on `A ⊕ B`.
    pub fn bowtie(&self) -> Algebra {
        let (n, m) = (self.a.dim(), self.b.dim());
        let mut entries: Vec<_> = self.a.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        entries.extend(self.b.entries().map(|(i, j, k, c)| (n + i, n + j, n + k, c.clone())));
        for i in 0..n {
            for bb in 0..m {
                for k in 0..m {
                    push(&mut entries, (i, n + bb, n + k), self.rho[i].get(k, bb));
                    push(&mut entries, (n + bb, i, n + k), self.mu[i].get(k, bb));
                }
                for k in 0..n {
                    push(&mut entries, (i, n + bb, k), self.mu_p[bb].get(k, i));
                    push(&mut entries, (n + bb, i, k), self.rho_p[bb].get(k, i));
                }
            }
        }
        Algebra::from_constants(
            format!("{}⋈{}", self.a.name(), self.b.name()),
            self.a.field(),
            n + m,
            entries,
        )
        .expect("indices in range")
    }

    /// `(A^c, B^c; ρ+μ, ρ'+μ')`; the pair must be valid.
    pub fn sub_adjacent(&self) -> Result<CommMatchedPair> {
        let report = self.check();
        if !report.passed {
            return Err(Error::invalid("matched pair", report));
        }
        let sum = |xs: &[Matrix], ys: &[Matrix]| xs.iter().zip(ys).map(|(x, y)| x + y).collect::<Vec<_>>();
        CommMatchedPair::new(
            self.a.sub_adjacent()?,
            self.b.sub_adjacent()?,
            sum(&self.rho, &self.mu),
            sum(&self.rho_p, &self.mu_p),
        )
    }

    /// Copy with one operator entry increased by one.
    pub fn bumped(&self, map: PairMap, i: usize, row: usize, col: usize) -> MatchedPair {
        let mut out = self.clone();
        let ops = match map {
            PairMap::Rho => &mut out.rho,
            PairMap::Mu => &mut out.mu,
            PairMap::RhoPrime => &mut out.rho_p,
            PairMap::MuPrime => &mut out.mu_p,
        };
        *ops[i].entry_mut(row, col) += &self.a.field().one();
        out
    }
}

fn push(entries: &mut Vec<(usize, usize, usize, crate::Scalar)>, at: (usize, usize, usize), c: &crate::Scalar) {
    if !c.is_zero() {
        entries.push((at.0, at.1, at.2, c.clone()));
    }
}

/// `(A, B; ζ, ζ')` for commutative associative `A`, `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommMatchedPair {
    a: Algebra,
    b: Algebra,
    zeta: Vec<Matrix>,
    zeta_p: Vec<Matrix>,
}

impl CommMatchedPair {
    pub fn new(a: Algebra, b: Algebra, zeta: Vec<Matrix>, zeta_p: Vec<Matrix>) -> Result<CommMatchedPair> {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch(a.field().to_string(), b.field().to_string()));
        }
        check_family(&a, b.dim(), &zeta)?;
        check_family(&b, a.dim(), &zeta_p)?;
        Ok(CommMatchedPair { a, b, zeta, zeta_p })
    }

    pub fn a(&self) -> &Algebra {
        &self.a
    }

    pub fn b(&self) -> &Algebra {
        &self.b
    }

    pub fn zeta(&self) -> &[Matrix] {
        &self.zeta
    }

    pub fn zeta_prime(&self) -> &[Matrix] {
        &self.zeta_p
    }

    pub fn check(&self) -> Report {
        let (a, b) = (&self.a, &self.b);
        let (n, m) = (a.dim(), b.dim());
        let on_b = CommRepresentation::new(a.clone(), m, self.zeta.clone()).expect("shapes checked");
        let on_a = CommRepresentation::new(b.clone(), n, self.zeta_p.clone()).expect("shapes checked");
        let mut suite = Suite::new(format!("commutative matched pair `{}` / `{}`", a.name(), b.name()));
        suite.extend(on_b.suite().prefixed("B"));
        suite.extend(on_a.suite().prefixed("A"));
        let (zeta, zeta_p) = (&self.zeta, &self.zeta_p);
        // ζ(x)(u∗v) = (ζ(x)u)∗v + ζ(ζ'(u)x)v
        suite.identity(Identity::new(
            "comm-matched-pair-1",
            &[("e", n), ("f", m), ("f", m)],
            Shape::vector("f"),
            move |t| {
                let (x, u, v) = (t[0], b.basis(t[1]), b.basis(t[2]));
                let lhs = zeta[x].apply(&b.mul(&u, &v));
                let rhs = &b.mul(&zeta[x].apply(&u), &v) + &combine(zeta, &zeta_p[t[1]].column(x), m).apply(&v);
                (lhs.into_vec(), rhs.into_vec())
            },
        ));
        // ζ'(u)(x∗y) = (ζ'(u)x)∗y + ζ'(ζ(x)u)y
        suite.identity(Identity::new(
            "comm-matched-pair-2",
            &[("f", m), ("e", n), ("e", n)],
            Shape::vector("e"),
            move |t| {
                let (u, x, y) = (t[0], a.basis(t[1]), a.basis(t[2]));
                let lhs = zeta_p[u].apply(&a.mul(&x, &y));
                let rhs =
                    &a.mul(&zeta_p[u].apply(&x), &y) + &combine(zeta_p, &zeta[t[1]].column(u), n).apply(&y);
                (lhs.into_vec(), rhs.into_vec())
            },
        ));
        let mut report = suite.run();
        report.subject = format!("commutative matched pair `{}` / `{}`", a.name(), b.name());
        report
    }

    /// `(x+u)∗(y+v) = x∗y + ζ'(u)y + ζ'(v)x + u∗v + ζ(x)v + ζ(y)u`.
    pub fn bowtie(&self) -> Algebra {
        let (n, m) = (self.a.dim(), self.b.dim());
        let mut entries: Vec<_> = self.a.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        entries.extend(self.b.entries().map(|(i, j, k, c)| (n + i, n + j, n + k, c.clone())));
        for i in 0..n {
            for bb in 0..m {
                for k in 0..m {
                    push(&mut entries, (i, n + bb, n + k), self.zeta[i].get(k, bb));
                    push(&mut entries, (n + bb, i, n + k), self.zeta[i].get(k, bb));
                }
                for k in 0..n {
                    push(&mut entries, (i, n + bb, k), self.zeta_p[bb].get(k, i));
                    push(&mut entries, (n + bb, i, k), self.zeta_p[bb].get(k, i));
                }
            }
        }
        Algebra::from_constants(
            format!("{}⋈{}", self.a.name(), self.b.name()),
            self.a.field(),
            n + m,
            entries,
        )
        .expect("indices in range")
    }

    /// Copy with one entry of `ζ` (`prime = false`) or `ζ'` increased by one.
    pub fn bumped(&self, prime: bool, i: usize, row: usize, col: usize) -> CommMatchedPair {
        let mut out = self.clone();
        let ops = if prime { &mut out.zeta_p } else { &mut out.zeta };
        *ops[i].entry_mut(row, col) += &self.a.field().one();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    const Q: Field = Field::Rational;

    fn n2() -> Algebra {
        Algebra::zinbiel("N2", Q, 2, [(0, 0, 1, Q.one())]).unwrap()
    }

    #[test]
    fn trivial_pair_of_lines() {
        let z = Algebra::zero("Z0", Q, 1);
        let mp = MatchedPair::coregular(&z, &z).unwrap();
        assert!(mp.check().passed);
        assert_eq!(mp.bowtie(), Algebra::zero("Z0(2)", Q, 2));
        let c = mp.sub_adjacent().unwrap();
        assert!(c.check().passed);
    }

    #[test]
    fn trivial_bialgebra_pair_of_n2() {
        let a = n2();
        let dual = Algebra::zero("N2*", Q, 2);
        let mp = MatchedPair::coregular(&a, &dual).unwrap();
        assert!(mp.check().passed);
        let semi = Representation::coregular(&a).semidirect_product();
        assert_eq!(mp.bowtie(), semi);
        let c = mp.sub_adjacent().unwrap();
        assert!(c.check().passed);
        assert_eq!(c.bowtie(), mp.bowtie().sub_adjacent().unwrap());
    }

    #[test]
    fn mutations_fail() {
        let a = n2();
        let dual = Algebra::zero("N2*", Q, 2);
        let mp = MatchedPair::coregular(&a, &dual).unwrap();
        let bad = mp.bumped(PairMap::RhoPrime, 0, 1, 0);
        assert!(!bad.check().passed);
        assert!(!bad.bowtie().check_zinbiel().passed);
        let c = mp.sub_adjacent().unwrap();
        assert!(!c.bumped(true, 0, 1, 0).check().passed);
    }
}
