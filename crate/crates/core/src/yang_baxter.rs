//! Coboundary bialgebras from a 2-tensor `r`, the Zinbiel Yang-Baxter
//! bracket, invariance, classification of `r`, the induced products on `A*`
//! and relative Rota-Baxter operators.

use std::fmt;
use std::rc::Rc;

use serde::Serialize;

use crate::algebra::{homomorphism_suite, Algebra};
use crate::bialgebra::Bialgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{Clause, Identity, Report, Shape, Suite};
use crate::representation::{combine, Representation};
use crate::scalar::Scalar;
use crate::tensor::{Slot, Tensor2, Tensor3};

/// `α(e_i) = (Id⊗(L_i+R_i) − L_i⊗Id) r` for every basis vector.
pub fn coboundary_alpha(a: &Algebra, r: &Tensor2) -> Vec<Tensor2> {
    let n = a.dim();
    let id = Matrix::identity(a.field(), n);
    (0..n)
        .map(|i| {
            let l = a.left_basis(i);
            let lr = &l + &a.right_basis(i);
            &r.apply(&id, &lr) - &r.apply(&l, &id)
        })
        .collect()
}

/// The product on `A*` whose dual is the cobracket `alpha`.
pub fn product_from_cobracket(name: &str, a: &Algebra, alpha: &[Tensor2]) -> Algebra {
    Algebra::from_fn(name, a.field(), a.dim(), |i, j, k| alpha[k].get(i, j).clone())
}

/// `J_α(x) = (Id⊗α)α(x) − (α⊗Id)α(x) − (σ⊗Id)(α⊗Id)α(x)`.
pub fn j_alpha(alpha: &[Tensor2], x: &Vector) -> Tensor3 {
    let n = x.len();
    let f = x.field();
    let mut ax = Tensor2::zeros(f, n);
    for (k, c) in x.iter().enumerate() {
        ax.add_scaled(c, &alpha[k]);
    }
    let mut t1 = Tensor3::zeros(f, n);
    let mut t2 = Tensor3::zeros(f, n);
    for u in 0..n {
        for v in 0..n {
            let c = ax.get(u, v);
            if c.is_zero() {
                continue;
            }
            for p in 0..n {
                for q in 0..n {
                    let s = alpha[v].get(p, q);
                    if !s.is_zero() {
                        t1.add_at(u, p, q, &(c * s));
                    }
                    let s = alpha[u].get(p, q);
                    if !s.is_zero() {
                        t2.add_at(p, q, v, &(c * s));
                    }
                }
            }
        }
    }
    &(&t1 - &t2) - &t2.swap12()
}

/// `⟦r,r⟧ = −r₁₃∘r₁₂ − r₂₃∘r₂₁ + r₁₃∗r₂₁ + r₁₂∗r₂₃ − r₁₃∗r₂₃`. With
/// `r = Σ r^{ab} e_a⊗e_b` the five terms are
/// `Σ e_a∘e_c ⊗ e_d ⊗ e_b`, `Σ e_d ⊗ e_a∘e_c ⊗ e_b`, `Σ e_a∗e_d ⊗ e_c ⊗ e_b`,
/// `Σ e_a ⊗ e_b∗e_c ⊗ e_d` and `Σ e_a ⊗ e_c ⊗ e_b∗e_d`, weighted by `r^{ab}r^{cd}`.
pub fn zybe_bracket(a: &Algebra, r: &Tensor2) -> Tensor3 {
    let n = a.dim();
    let f = a.field();
    let mut out = Tensor3::zeros(f, n);
    let nz: Vec<(usize, usize, &Scalar)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, r.get(i, j)))
        .filter(|(_, _, s)| !s.is_zero())
        .collect();
    let star = |i: usize, j: usize| a.basis_mul(i, j).as_slice().to_vec();
    let sym: Vec<Vec<Scalar>> = (0..n * n).map(|t| {
        let (i, j) = (t / n, t % n);
        let mut s = star(i, j);
        for (x, y) in s.iter_mut().zip(star(j, i)) {
            *x += &y;
        }
        s
    }).collect();
    for &(ia, ib, rab) in &nz {
        for &(ic, id, rcd) in &nz {
            let w = rab * rcd;
            for (k, c) in a.basis_product(ia, ic) {
                let v = &w * c;
                out.add_at(*k, id, ib, &-&v);
                out.add_at(id, *k, ib, &-&v);
            }
            for (k, c) in sym[ia * n + id].iter().enumerate() {
                if !c.is_zero() {
                    out.add_at(k, ic, ib, &(&w * c));
                }
            }
            for (k, c) in sym[ib * n + ic].iter().enumerate() {
                if !c.is_zero() {
                    out.add_at(ia, k, id, &(&w * c));
                }
            }
            for (k, c) in sym[ib * n + id].iter().enumerate() {
                if !c.is_zero() {
                    out.add_at(ia, ic, k, &-&(&w * c));
                }
            }
        }
    }
    out
}

/// `H(x) = L_x⊗Id⊗Id − Id⊗Id⊗(L_x+R_x)`.
pub fn h_apply(a: &Algebra, x: &Vector, t: &Tensor3) -> Tensor3 {
    let l = a.left(x);
    let lr = &l + &a.right(x);
    &t.apply_slot(Slot::First, &l) - &t.apply_slot(Slot::Third, &lr)
}

/// `(L_{x∘y}⊗Id − Id⊗L_{x∘y} − L_xL_y⊗Id + L_x⊗L_y) t`.
pub fn cocycle_obstruction(a: &Algebra, x: &Vector, y: &Vector, t: &Tensor2) -> Tensor2 {
    let id = Matrix::identity(a.field(), a.dim());
    let lxy = a.left(&a.mul(x, y));
    let lx = a.left(x);
    let ly = a.left(y);
    let lxly = &lx * &ly;
    let mut out = &t.apply(&lxy, &id) - &t.apply(&id, &lxy);
    out = &out - &t.apply(&lxly, &id);
    &out + &t.apply(&lx, &ly)
}

/// `Σ_{a,b} r^{ab} (L_{x∘e_a}⊗Id − Id⊗L_{x∘e_a} − L_xL_{e_a}⊗Id + L_x⊗L_{e_a})(r−σr) ⊗ e_b`.
pub fn bracket_correction(a: &Algebra, r: &Tensor2, x: &Vector) -> Tensor3 {
    let n = a.dim();
    let f = a.field();
    let s = r - &r.swap();
    let mut out = Tensor3::zeros(f, n);
    for ia in 0..n {
        if (0..n).all(|ib| r.get(ia, ib).is_zero()) {
            continue;
        }
        let m = cocycle_obstruction(a, x, &a.basis(ia), &s);
        if m.is_zero() {
            continue;
        }
        for ib in 0..n {
            let w = r.get(ia, ib);
            if w.is_zero() {
                continue;
            }
            for p in 0..n {
                for q in 0..n {
                    let v = m.get(p, q);
                    if !v.is_zero() {
                        out.add_at(p, q, ib, &(w * v));
                    }
                }
            }
        }
    }
    out
}

/// `(L_x⊗Id − Id⊗(L_x+R_x)) t = 0` for every basis `x`. For skew `t` two
/// operator reformulations are added together with their agreement:
/// `t₊(L*_xξ) + x∗t₊(ξ) = 0` and `I∘L*_x = −(L_x+R_x)∘I` with `I = t₊ − t₋`.
pub fn invariance_suite<'a>(a: &'a Algebra, t: &'a Tensor2) -> Suite<'a> {
    let n = a.dim();
    let shape = Shape::Matrix { rows: n, cols: n };
    let id = Matrix::identity(a.field(), n);
    let tp = t.matrix().transpose();
    let i_map = &tp - t.matrix();
    let forms = Rc::new(move |x: usize| {
        let l = a.left_basis(x);
        let lr = &l + &a.right_basis(x);
        let def = &t.apply(&l, &id) - &t.apply(&id, &lr);
        let lemma = &(&lr * &tp) - &(&tp * &l.transpose());
        let prop = &(&lr * &i_map) - &(&i_map * &l.transpose());
        (def.matrix().clone(), lemma, prop)
    });
    let mut suite = Suite::new(format!("invariance on `{}`", a.name()));
    let zero = Matrix::zeros(a.field(), n, n).entries().to_vec();
    let (z, f) = (zero.clone(), forms.clone());
    suite.identity(Identity::new("invariance", &[("e", n)], shape.clone(), move |x| {
        (f(x[0]).0.entries().to_vec(), z.clone())
    }));
    if t.is_skew() {
        let (z, f) = (zero.clone(), forms.clone());
        suite.identity(Identity::new("invariance-dual-form", &[("e", n)], shape.clone(), move |x| {
            (f(x[0]).1.entries().to_vec(), z.clone())
        }));
        let (z, f) = (zero, forms.clone());
        suite.identity(Identity::new("invariance-operator-form", &[("e", n)], shape, move |x| {
            (f(x[0]).2.entries().to_vec(), z.clone())
        }));
        let agree = (0..n).all(|x| {
            let (d, l, p) = forms(x);
            d.is_zero() == l.is_zero() && l.is_zero() == p.is_zero()
        });
        suite.fact(Clause::fact("three-way-agreement", agree));
    }
    suite
}

pub fn check_invariance(a: &Algebra, t: &Tensor2) -> Result<Report> {
    if t.dim() != a.dim() {
        return Err(Error::dims(a.dim(), t.dim()));
    }
    Ok(invariance_suite(a, t).run())
}

/// Coboundary bialgebra criterion: (i) `cocycle_obstruction(x, y, a) = 0`
/// for the skew part `a`, (ii) `H(x)⟦r,r⟧ = 0`, for all basis `x, y`. On
/// success the bialgebra `(A, (A*, ·_r))` is returned.
pub fn check_coboundary_bialgebra(a: &Algebra, r: &Tensor2) -> Result<(Report, Option<Bialgebra>)> {
    let rm = RMatrix::new(a.clone(), r.clone())?;
    let report = rm.coboundary_report();
    let emitted = report.passed.then(|| rm.coboundary_bialgebra());
    Ok((report, emitted))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    CoboundaryOnly,
    QuasiTriangular,
    Triangular,
    Factorizable,
}

impl Classification {
    pub fn token(&self) -> &'static str {
        match self {
            Classification::CoboundaryOnly => "coboundary-only",
            Classification::QuasiTriangular => "quasi-triangular",
            Classification::Triangular => "triangular",
            Classification::Factorizable => "factorizable",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A 2-tensor `r` on a Zinbiel algebra with its derived maps `A* → A`:
/// `r₊ = rᵀ`, `r₋ = r`, `I = r₊ − r₋` as matrices in the dual basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    base: Algebra,
    r: Tensor2,
    r_plus: Matrix,
    r_minus: Matrix,
    i_map: Matrix,
    skew: Tensor2,
    sym: Tensor2,
}

impl RMatrix {
    pub fn new(base: Algebra, r: Tensor2) -> Result<RMatrix> {
        if r.dim() != base.dim() {
            return Err(Error::dims(base.dim(), r.dim()));
        }
        if r.field() != base.field() {
            return Err(Error::FieldMismatch(base.field().to_string(), r.field().to_string()));
        }
        let r_plus = r.matrix().transpose();
        let r_minus = r.matrix().clone();
        let i_map = &r_plus - &r_minus;
        let skew = r.skew_part();
        let sym = r.sym_part();
        Ok(RMatrix {
            base,
            r,
            r_plus,
            r_minus,
            i_map,
            skew,
            sym,
        })
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn tensor(&self) -> &Tensor2 {
        &self.r
    }

    pub fn r_plus(&self) -> &Matrix {
        &self.r_plus
    }

    pub fn r_minus(&self) -> &Matrix {
        &self.r_minus
    }

    pub fn i_map(&self) -> &Matrix {
        &self.i_map
    }

    pub fn skew(&self) -> &Tensor2 {
        &self.skew
    }

    pub fn sym(&self) -> &Tensor2 {
        &self.sym
    }

    pub fn alpha(&self) -> Vec<Tensor2> {
        coboundary_alpha(&self.base, &self.r)
    }

    /// `(A*, ·_r)`, the product dual to the coboundary cobracket.
    pub fn dual_product(&self) -> Algebra {
        product_from_cobracket(&format!("{}*_r", self.base.name()), &self.base, &self.alpha())
    }

    /// `ξ·η = (L+R)ᵀ_{p(ξ)} η − R_{q(η)}ᵀ ξ` for maps `p, q: A* → A`.
    fn product_from_maps(&self, name: String, p: &Matrix, q: &Matrix) -> Algebra {
        let a = &self.base;
        let n = a.dim();
        let lr: Vec<Matrix> = (0..n)
            .map(|i| {
                let x = p.column(i);
                (&a.left(&x) + &a.right(&x)).transpose()
            })
            .collect();
        let rt: Vec<Matrix> = (0..n).map(|j| a.right(&q.column(j)).transpose()).collect();
        Algebra::from_fn(name, a.field(), n, |i, j, k| lr[i].get(k, j) - rt[j].get(k, i))
    }

    /// `ξ·_rη = −(L*_{r₊ξ}+R*_{r₊ξ})η + R*_{r₋η}ξ`, which agrees with
    /// [`RMatrix::dual_product`].
    pub fn dual_product_by_formula(&self) -> Algebra {
        self.product_from_maps(format!("{}*_r", self.base.name()), &self.r_plus, &self.r_minus)
    }

    /// The same formula with `r₊`, `r₋` both replaced by the symmetric part.
    pub fn symmetric_part_product(&self) -> Algebra {
        let s = self.sym.matrix();
        self.product_from_maps(format!("{}*_Λ", self.base.name()), s, s)
    }

    pub fn coboundary_bialgebra(&self) -> Bialgebra {
        Bialgebra::new(self.base.clone(), self.dual_product()).expect("dimensions agree")
    }

    pub fn bracket(&self) -> Tensor3 {
        zybe_bracket(&self.base, &self.r)
    }

    pub fn j_alpha(&self, x: &Vector) -> Tensor3 {
        j_alpha(&self.alpha(), x)
    }

    /// `J_α(x) = H(x)⟦r,r⟧ − correction(x)` for every basis `x`.
    pub fn bracket_identity_report(&self) -> Report {
        let a = &self.base;
        let n = a.dim();
        let alpha = self.alpha();
        let bracket = self.bracket();
        let suite = Suite::new(format!("bracket identity for r on `{}`", a.name())).with(Identity::new(
            "bracket-identity",
            &[("e", n)],
            Shape::Grid,
            |t| {
                let x = a.basis(t[0]);
                let lhs = j_alpha(&alpha, &x);
                let rhs = &h_apply(a, &x, &bracket) - &bracket_correction(a, &self.r, &x);
                (lhs.into_entries(), rhs.into_entries())
            },
        ));
        suite.run()
    }

    /// Conditions (i) and (ii) of the coboundary criterion.
    pub fn coboundary_report(&self) -> Report {
        let a = &self.base;
        let n = a.dim();
        let bracket = self.bracket();
        let zero2 = Matrix::zeros(a.field(), n, n).entries().to_vec();
        let zero3 = Tensor3::zeros(a.field(), n).into_entries();
        let mut suite = Suite::new(format!("coboundary criterion for r on `{}`", a.name()));
        suite.identity(Identity::new(
            "skew-part-cocycle",
            &[("e", n), ("e", n)],
            Shape::Matrix { rows: n, cols: n },
            |t| {
                let o = cocycle_obstruction(a, &a.basis(t[0]), &a.basis(t[1]), &self.skew);
                (o.matrix().entries().to_vec(), zero2.clone())
            },
        ));
        suite.identity(Identity::new("h-bracket", &[("e", n)], Shape::Grid, |t| {
            (h_apply(a, &a.basis(t[0]), &bracket).into_entries(), zero3.clone())
        }));
        suite.run()
    }

    pub fn invariance_report(&self) -> Report {
        invariance_suite(&self.base, &self.skew).run()
    }

    pub fn is_quasi_triangular(&self) -> bool {
        self.bracket().is_zero() && self.invariance_report().passed
    }

    pub fn is_factorizable(&self) -> bool {
        self.is_quasi_triangular() && self.i_map.is_invertible()
    }

    /// Refuses `r` failing the coboundary criterion.
    pub fn classify(&self) -> Result<Classification> {
        let report = self.coboundary_report();
        if !report.passed {
            return Err(Error::invalid("coboundary criterion", report));
        }
        Ok(if !self.is_quasi_triangular() {
            Classification::CoboundaryOnly
        } else if self.r.is_symmetric() {
            Classification::Triangular
        } else if self.i_map.is_invertible() {
            Classification::Factorizable
        } else {
            Classification::QuasiTriangular
        })
    }

    /// `⟨ξ, x∘a₊(η)⟩ + ⟨η, x∗a₊(ξ)⟩ = 0` for the skew part `a`.
    pub fn invariance_consequence_report(&self) -> Report {
        let a = &self.base;
        let n = a.dim();
        let ap = self.skew.matrix().transpose();
        let suite = Suite::new(format!("invariance consequence on `{}`", a.name())).with(Identity::new(
            "invariance-consequence",
            &[("f", n), ("f", n), ("e", n)],
            Shape::Grid,
            move |t| {
                let (xi, eta, x) = (t[0], t[1], t[2]);
                let lx = a.left_basis(x);
                let lr = &lx + &a.right_basis(x);
                let v = (&lx * &ap).get(xi, eta) + (&lr * &ap).get(eta, xi);
                (vec![v], vec![a.field().zero()])
            },
        ));
        suite.run()
    }

    /// `r₊` and `r₋` as algebra maps `(A*, ·_r) → A`.
    pub fn homomorphism_report(&self) -> Report {
        let dual = self.dual_product();
        let mut report = Report::new(format!("r-maps on `{}`", self.base.name()));
        report.absorb("r-plus", homomorphism_suite(&dual, &self.base, &self.r_plus).run());
        report.absorb("r-minus", homomorphism_suite(&dual, &self.base, &self.r_minus).run());
        report
    }

    /// `r₊(ξ·_rη) − r₊(ξ)∘r₊(η)`; equals `−⟦r,r⟧(ξ,·,η)` when the skew part
    /// is invariant.
    pub fn plus_defect(&self, xi: &Vector, eta: &Vector) -> Vector {
        let dual = self.dual_product();
        let a = &self.base;
        &self.r_plus.apply(&dual.mul(xi, eta)) - &a.mul(&self.r_plus.apply(xi), &self.r_plus.apply(eta))
    }

    /// `ξ·₊η = R*_{Iη}ξ`.
    pub fn product_plus(&self) -> Algebra {
        let a = &self.base;
        let n = a.dim();
        let rs: Vec<Matrix> = (0..n).map(|j| a.right(&self.i_map.column(j))).collect();
        Algebra::from_fn(format!("{}*_+", a.name()), a.field(), n, |i, j, k| -rs[j].get(i, k))
    }

    /// `ξ·₋η = L*_{Iξ}η + R*_{Iξ}η`.
    pub fn product_minus(&self) -> Algebra {
        let a = &self.base;
        let n = a.dim();
        let lr: Vec<Matrix> = (0..n)
            .map(|i| {
                let x = self.i_map.column(i);
                &a.left(&x) + &a.right(&x)
            })
            .collect();
        Algebra::from_fn(format!("{}*_-", a.name()), a.field(), n, |i, j, k| -lr[i].get(j, k))
    }

    /// `x = x₊ − x₋` with `x₊ = r₊I⁻¹x`, `x₋ = r₋I⁻¹x`.
    pub fn factorize(&self, x: &Vector) -> Result<(Vector, Vector)> {
        self.factorizer()?(x)
    }

    /// [`RMatrix::factorize`] with the factorizability check and `I⁻¹` done once.
    pub fn factorizer(&self) -> Result<impl Fn(&Vector) -> Result<(Vector, Vector)> + '_> {
        if !self.is_factorizable() {
            return Err(Error::Precondition("r is not factorizable".into()));
        }
        let i_inv = self.i_map.inverse()?;
        let n = self.base.dim();
        Ok(move |x: &Vector| {
            if x.len() != n {
                return Err(Error::dims(n, x.len()));
            }
            let xi = i_inv.apply(x);
            Ok((self.r_plus.apply(&xi), self.r_minus.apply(&xi)))
        })
    }

    /// Columns spanning `Img(r₊ ⊕ r₋) ⊂ A ⊕ A`.
    pub fn image_matrix(&self) -> Matrix {
        let n = self.base.dim();
        let f = self.base.field();
        Matrix::from_fn(f, 2 * n, n, |row, col| {
            if row < n {
                self.r_plus.get(row, col).clone()
            } else {
                self.r_minus.get(row - n, col).clone()
            }
        })
    }

    pub fn to_field(&self, field: crate::scalar::Field) -> Result<RMatrix> {
        RMatrix::new(self.base.to_field(field)?, self.r.to_field(field)?)
    }
}

/// An action of `A` on `B`: a representation `(ρ, μ)` on the underlying
/// space of `B` compatible with the product of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionData {
    acting: Algebra,
    acted: Algebra,
    rho: Vec<Matrix>,
    mu: Vec<Matrix>,
}

impl ActionData {
    pub fn new(acting: Algebra, acted: Algebra, rho: Vec<Matrix>, mu: Vec<Matrix>) -> Result<ActionData> {
        Representation::new(acting.clone(), acted.dim(), rho.clone(), mu.clone())?;
        if acting.field() != acted.field() {
            return Err(Error::FieldMismatch(acting.field().to_string(), acted.field().to_string()));
        }
        Ok(ActionData { acting, acted, rho, mu })
    }

    /// `(−L*−R*, R*)` of `A` acting on a product on `A*`.
    pub fn coregular(acting: &Algebra, acted: Algebra) -> Result<ActionData> {
        let rep = Representation::coregular(acting);
        ActionData::new(acting.clone(), acted, rep.rho().to_vec(), rep.mu().to_vec())
    }

    pub fn acting(&self) -> &Algebra {
        &self.acting
    }

    pub fn acted(&self) -> &Algebra {
        &self.acted
    }

    fn representation(&self) -> Representation {
        Representation::new(self.acting.clone(), self.acted.dim(), self.rho.clone(), self.mu.clone())
            .expect("shapes checked at construction")
    }

    pub fn check(&self) -> Report {
        let rep = self.representation();
        let mut report = Report::new(format!("action of `{}` on `{}`", self.acting.name(), self.acted.name()));
        report.absorb("rep", rep.check());
        let (n, m) = (self.acting.dim(), self.acted.dim());
        let b = &self.acted;
        let (rho, mu) = (&self.rho, &self.mu);
        let args = [("e", n), ("f", m), ("f", m)];
        let suite = Suite::new("")
            .with(Identity::new("action1", &args, Shape::vector("f"), move |t| {
                let (x, u, v) = (t[0], b.basis(t[1]), b.basis(t[2]));
                let lhs = b.mul(&u, &mu[x].apply(&v));
                let rhs = mu[x].apply(&b.star(&u, &v));
                (lhs.into_vec(), rhs.into_vec())
            }))
            .with(Identity::new("action2", &args, Shape::vector("f"), move |t| {
                let (x, u, v) = (t[0], b.basis(t[1]), b.basis(t[2]));
                let lhs = b.mul(&u, &rho[x].apply(&v));
                let rhs = b.mul(&(&mu[x].apply(&u) + &rho[x].apply(&u)), &v);
                (lhs.into_vec(), rhs.into_vec())
            }))
            .with(Identity::new("action3", &args, Shape::vector("f"), move |t| {
                let (x, u, v) = (t[0], b.basis(t[1]), b.basis(t[2]));
                let lhs = rho[x].apply(&b.mul(&u, &v));
                let rhs = b.mul(&(&mu[x].apply(&u) + &rho[x].apply(&u)), &v);
                (lhs.into_vec(), rhs.into_vec())
            }));
        report.absorb("", suite.run());
        report
    }
}

/// `(Tu)∘(Tv) = T(ρ(Tu)v + μ(Tv)u + λ u∘v)` for `T: B → A`.
pub fn check_relative_rb(t: &Matrix, action: &ActionData, lambda: &Scalar) -> Result<Report> {
    let (a, b) = (&action.acting, &action.acted);
    let (n, m) = (a.dim(), b.dim());
    if t.rows() != n || t.cols() != m {
        return Err(Error::dims(n, t.rows()));
    }
    let suite = Suite::new(format!("relative Rota-Baxter operator `{}` -> `{}`", b.name(), a.name())).with(
        Identity::new("relative-rota-baxter", &[("f", m), ("f", m)], Shape::vector("e"), |x| {
            let (u, v) = (b.basis(x[0]), b.basis(x[1]));
            let (tu, tv) = (t.column(x[0]), t.column(x[1]));
            let lhs = a.mul(&tu, &tv);
            let inner = &(&combine(&action.rho, &tu, m).apply(&v) + &combine(&action.mu, &tv, m).apply(&u))
                + &b.mul(&u, &v).scale(lambda);
            (lhs.into_vec(), t.apply(&inner).into_vec())
        }),
    );
    Ok(suite.run())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    const Q: Field = Field::Rational;

    fn n2() -> Algebra {
        Algebra::zinbiel("N2", Q, 2, [(0, 0, 1, Q.one())]).unwrap()
    }

    fn f3(c: i64, cp: i64) -> Algebra {
        Algebra::zinbiel("F3", Q, 3, [(0, 0, 1, Q.one()), (0, 1, 2, Q.int(c)), (1, 0, 2, Q.int(cp))]).unwrap()
    }

    #[test]
    fn alpha_of_e1e1_on_n2() {
        let alpha = coboundary_alpha(&n2(), &Tensor2::basis(Q, 2, 0, 0));
        // e1⊗2e2 − e2⊗e1
        assert_eq!(alpha[0], Tensor2::from_ints(Q, &[&[0, 2], &[-1, 0]]));
        assert!(alpha[1].is_zero());
    }

    #[test]
    fn zero_tensor_is_triangular() {
        let rm = RMatrix::new(n2(), Tensor2::zeros(Q, 2)).unwrap();
        assert!(rm.bracket().is_zero());
        assert_eq!(rm.classify().unwrap(), Classification::Triangular);
        assert!(rm.product_plus().is_trivial());
        let (report, b) = check_coboundary_bialgebra(&n2(), &Tensor2::zeros(Q, 2)).unwrap();
        assert!(report.passed);
        assert!(b.unwrap().dual().is_trivial());
    }

    #[test]
    fn bracket_identity_and_formula_on_samples() {
        let samples: [&[&[i64]]; 4] = [
            &[&[1, 2, 0], &[-1, 0, 3], &[2, 1, -2]],
            &[&[0, 1, 0], &[0, 0, 0], &[1, 0, 1]],
            &[&[3, 0, -1], &[0, 2, 0], &[1, 1, 1]],
            &[&[0, 0, 1], &[0, 1, 0], &[-1, 0, 0]],
        ];
        for a in [f3(2, 1), f3(4, 2)] {
            for s in samples {
                let rm = RMatrix::new(a.clone(), Tensor2::from_ints(Q, s)).unwrap();
                assert!(rm.bracket_identity_report().passed);
                assert_eq!(rm.dual_product(), rm.dual_product_by_formula());
            }
        }
    }

    #[test]
    fn j_alpha_detects_non_zinbiel_dual() {
        let a = Algebra::zero("Z0", Q, 2);
        let dual = Algebra::from_constants("idem", Q, 2, [(0, 0, 0, Q.one())]).unwrap();
        let alpha: Vec<Tensor2> = (0..2).map(|k| Bialgebra::new(a.clone(), dual.clone()).unwrap().alpha(k)).collect();
        assert!(!dual.check_zinbiel().passed);
        assert!(!j_alpha(&alpha, &a.basis(0)).is_zero());
    }

    #[test]
    fn invariance_on_zero_algebra_and_n2() {
        let z = Algebra::zero("Z0", Q, 2);
        let t = Tensor2::from_ints(Q, &[&[0, 1], &[-1, 0]]);
        let r = check_invariance(&z, &t).unwrap();
        assert!(r.passed);
        assert!(r.clause("three-way-agreement").unwrap().passed);
        let r = check_invariance(&n2(), &Tensor2::basis(Q, 2, 0, 0)).unwrap();
        // L_{e1}(e1⊗e1) = e2⊗e1 while e1⊗(L+R)_{e1}e1 = 2 e1⊗e2.
        assert!(!r.passed);
    }

    #[test]
    fn relative_rb_of_zero_map() {
        let a = n2();
        let act = ActionData::coregular(&a, Algebra::zero("N2*", Q, 2)).unwrap();
        assert!(act.check().passed);
        let t = Matrix::zeros(Q, 2, 2);
        assert!(check_relative_rb(&t, &act, &Q.int(5)).unwrap().passed);
    }
}
