//! Seeded random data. Rational samples have integer entries in `[-3, 3]`;
//! prime-field samples are uniform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::linalg::{Matrix, Vector};
use crate::representation::Representation;
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor2;

pub const BOUND: i64 = 3;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scalar<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Scalar {
    field.random(rng, BOUND)
}

pub fn vector<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize) -> Vector {
    Vector::new(field, (0..n).map(|_| scalar(rng, field)).collect()).expect("same field")
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, field: Field, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| scalar(rng, field))
}

pub fn tensor2<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize) -> Tensor2 {
    Tensor2::new(matrix(rng, field, n, n)).expect("square")
}

pub fn invertible<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize) -> Matrix {
    loop {
        let m = matrix(rng, field, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A valid representation of `base` on a space of dimension at most
/// `max_space`: trivial, regular, coregular or a direct sum of a module with
/// a trivial one, conjugated by a random change of basis.
pub fn representation<R: Rng + ?Sized>(rng: &mut R, base: &Algebra, max_space: usize) -> Representation {
    let n = base.dim();
    let f = base.field();
    let mut kinds = vec![0usize];
    if n <= max_space {
        kinds.extend([1, 2]);
    }
    if n < max_space {
        kinds.extend([3, 4]);
    }
    let kind = *kinds.choose(rng).expect("nonempty");
    let rep = match kind {
        0 => Representation::trivial(base, rng.gen_range(1..=max_space)),
        1 => Representation::regular(base),
        2 => Representation::coregular(base),
        k => {
            let inner = if k == 3 {
                Representation::regular(base)
            } else {
                Representation::coregular(base)
            };
            direct_sum_trivial(&inner, rng.gen_range(1..=max_space - n))
        }
    };
    let m = rep.space_dim();
    let phi = invertible(rng, f, m);
    let inv = phi.inverse().expect("invertible");
    let conj = |ops: &[Matrix]| ops.iter().map(|t| &(&phi * t) * &inv).collect::<Vec<_>>();
    Representation::new(base.clone(), m, conj(rep.rho()), conj(rep.mu())).expect("dimensions agree")
}

fn direct_sum_trivial(rep: &Representation, extra: usize) -> Representation {
    let m = rep.space_dim();
    let f = rep.base().field();
    let pad = |ops: &[Matrix]| {
        ops.iter()
            .map(|t| Matrix::from_fn(f, m + extra, m + extra, |r, c| if r < m && c < m { t.get(r, c).clone() } else { f.zero() }))
            .collect::<Vec<_>>()
    };
    Representation::new(rep.base().clone(), m + extra, pad(rep.rho()), pad(rep.mu())).expect("dimensions agree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_representations_are_valid() {
        let mut rng = rng(3);
        let n2 = Algebra::zinbiel("N2", Field::Rational, 2, [(0, 0, 1, Field::Rational.one())]).unwrap();
        for _ in 0..20 {
            let rep = representation(&mut rng, &n2, 3);
            assert!(rep.space_dim() <= 3);
            assert!(rep.check().passed);
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let f = Field::prime(7).unwrap();
        assert_eq!(tensor2(&mut rng(9), f, 3), tensor2(&mut rng(9), f, 3));
    }
}
