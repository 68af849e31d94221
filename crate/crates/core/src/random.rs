//! Seeded generators for randomized checks. Coefficients are drawn
//! uniformly from `−9..=9`, avoiding zero where the data requires it.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::genus2::{CoverPoint, Genus2Data, Sheet};
use crate::genus3::{PairingData, TetradData, PLANE_VARS};
use crate::matrix::PolyMatrix;
use crate::poly::{Poly, PolyRing};
use crate::rational::{self, Rational};
use crate::twistor::{Point3, TwoForm};

pub type Rng64 = ChaCha8Rng;

pub const COEFF_BOUND: i64 = 9;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for instance `index` of a suite.
pub fn instance_rng(seed: u64, index: u64) -> Rng64 {
    let mut r = rng(seed);
    r.set_stream(index);
    r
}

pub fn small(r: &mut Rng64) -> i64 {
    r.gen_range(-COEFF_BOUND..=COEFF_BOUND)
}

pub fn nonzero(r: &mut Rng64) -> i64 {
    loop {
        let v = small(r);
        if v != 0 {
            return v;
        }
    }
}

pub fn small_rational(r: &mut Rng64) -> Rational {
    rational::int(small(r))
}

/// `n/d` with `n` nonzero in `−9..=9` and `d` in `1..=9`.
pub fn nonzero_fraction(r: &mut Rng64) -> Rational {
    let n = nonzero(r);
    let d = r.gen_range(1..=COEFF_BOUND);
    rational::frac(n, d)
}

pub fn vector(r: &mut Rng64, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(r)).collect()
}

pub fn nonzero_vector(r: &mut Rng64, n: usize) -> Vec<Rational> {
    loop {
        let v = vector(r, n);
        if v.iter().any(|x| *x != rational::zero()) {
            return v;
        }
    }
}

pub fn point3(r: &mut Rng64) -> Point3 {
    let v = nonzero_vector(r, 4);
    std::array::from_fn(|i| v[i].clone())
}

pub fn linear_form(r: &mut Rng64, ring: &PolyRing) -> Poly {
    ring.linear(&vector(r, ring.nvars()))
}

/// Homogeneous quadratic with every monomial coefficient drawn.
pub fn quadratic_form(r: &mut Rng64, ring: &PolyRing) -> Poly {
    let n = ring.nvars();
    let mut p = ring.zero();
    for i in 0..n {
        for j in i..n {
            let c = small_rational(r);
            p = &p + &(&ring.var_at(i) * &ring.var_at(j)).scale(&c);
        }
    }
    p
}

pub fn pairing_data(r: &mut Rng64) -> PairingData {
    let ring = PolyRing::new(PLANE_VARS);
    let mut q = PolyMatrix::zeros(&ring, 4, 4);
    for i in 0..4 {
        for j in i..4 {
            let e = linear_form(r, &ring);
            q.set(i, j, e.clone());
            q.set(j, i, e);
        }
    }
    let p = quadratic_form(r, &ring);
    PairingData::new(q, p).expect("random data is valid")
}

pub fn tetrad(r: &mut Rng64) -> TetradData {
    loop {
        let a: [Rational; 3] = std::array::from_fn(|_| small_rational(r));
        let b: [Rational; 3] = std::array::from_fn(|_| small_rational(r));
        if let Ok(t) = TetradData::new(a, b) {
            return t;
        }
    }
}

pub fn genus2_data(r: &mut Rng64) -> Genus2Data {
    Genus2Data::new(nonzero_fraction(r), nonzero_fraction(r)).expect("nonzero")
}

pub fn sheet(r: &mut Rng64) -> Sheet {
    if r.gen_bool(0.5) {
        Sheet::Plus
    } else {
        Sheet::Minus
    }
}

pub fn cover_point(r: &mut Rng64) -> CoverPoint {
    let v = nonzero_vector(r, 2);
    CoverPoint::new((v[0].clone(), v[1].clone()), sheet(r)).expect("nonzero base")
}

pub fn two_form(r: &mut Rng64) -> TwoForm {
    let v = vector(r, 6);
    TwoForm(std::array::from_fn(|i| v[i].clone()))
}
