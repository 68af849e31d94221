//! Genus 3: the quadric on `Λ²V` built from a pairing `Q` with values in
//! conics and a conic `p`, the plane quartic `det Q − p²`, and the explicit
//! family attached to a syzygetic tetrad of bitangents.

pub mod theta;

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{PolyMatrix, RatMatrix};
use crate::poly::{Poly, PolyRing};
use crate::quadform::{QuadForm, QuadricSystem};
use crate::rational::{self, Rational};

pub use theta::{
    check_syzygetic, count_isotropic_planes, count_theta_chars, Parity, ThetaChar, ThetaCounts,
};

pub const PLANE_VARS: [&str; 3] = ["x", "y", "z"];

/// Basis `e₁∧e₂, e₁∧e₃, e₁∧e₄, e₂∧e₃, e₂∧e₄, e₃∧e₄` as index pairs.
pub const BIVECTOR_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn plane_ring() -> PolyRing {
    PolyRing::new(PLANE_VARS)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairingData {
    q: PolyMatrix,
    p: Poly,
}

impl PairingData {
    pub fn new(q: PolyMatrix, p: Poly) -> Result<Self> {
        if q.rows() != 4 || q.cols() != 4 {
            return Err(Error::NotSquare { rows: q.rows(), cols: q.cols() });
        }
        if !q.is_symmetric() {
            return Err(Error::invalid("Q is not symmetric"));
        }
        let ring = plane_ring();
        let names: Vec<String> = ring.vars().to_vec();
        let check = |f: &Poly, deg: u32| -> Result<Poly> {
            let f = f
                .with_vars(&ring)
                .map_err(|_| Error::invalid("entries may only involve x, y, z"))?;
            if !f.is_zero() && f.homogeneous_degree_in(&names) != Some(deg) {
                return Err(Error::NotHomogeneous { degree: deg });
            }
            Ok(f)
        };
        let entries = q.entries().iter().map(|e| check(e, 1)).collect::<Result<Vec<_>>>()?;
        let q = PolyMatrix::new(4, 4, entries)?;
        let p = check(&p, 2)?;
        Ok(PairingData { q, p })
    }

    pub fn q(&self) -> &PolyMatrix {
        &self.q
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }
}

/// The exterior pairing `Q₀` on the bivector basis: `α∧β = Q₀(α,β)·e₁∧e₂∧e₃∧e₄`.
pub fn q0_matrix() -> RatMatrix {
    let rows = BIVECTOR_PAIRS
        .iter()
        .map(|&(i, j)| {
            BIVECTOR_PAIRS
                .iter()
                .map(|&(k, l)| rational::int(perm_sign([i, j, k, l])))
                .collect()
        })
        .collect();
    RatMatrix::from_rows(rows).expect("6x6")
}

fn perm_sign(p: [usize; 4]) -> i64 {
    for a in 0..4 {
        for b in a + 1..4 {
            if p[a] == p[b] {
                return 0;
            }
        }
    }
    let mut inversions = 0;
    for a in 0..4 {
        for b in a + 1..4 {
            if p[a] > p[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Q₂ + p·Q₀` on the bivector basis.
pub fn lambda2_gram(d: &PairingData) -> PolyMatrix {
    lambda2_gram_with(d, &q0_matrix())
}

/// As [`lambda2_gram`] with a caller-supplied exterior pairing; used to
/// confirm that a wrong orientation breaks the determinant identity.
pub fn lambda2_gram_with(d: &PairingData, q0: &RatMatrix) -> PolyMatrix {
    let q = &d.q;
    PolyMatrix::from_fn(6, 6, |(a, b)| {
        let (i, j) = BIVECTOR_PAIRS[a];
        let (k, l) = BIVECTOR_PAIRS[b];
        let q2 = &(q.get(i, k) * q.get(j, l)) - &(q.get(i, l) * q.get(j, k));
        &q2 + &d.p.scale(&q0[(a, b)])
    })
}

/// `det Q − p²`.
pub fn curve_equation(d: &PairingData) -> Result<Poly> {
    Ok(&d.q.det()? - &d.p.pow(2))
}

/// `det(Q₂ + pQ₀) − (det Q − p²)³`; zero exactly when the identity holds.
pub fn det_identity_residual_with(d: &PairingData, q0: &RatMatrix) -> Result<Poly> {
    let lhs = lambda2_gram_with(d, q0).det()?;
    let rhs = curve_equation(d)?.pow(3);
    Ok(&lhs - &rhs)
}

pub fn det_identity_check(d: &PairingData) -> Result<bool> {
    Ok(det_identity_residual_with(d, &q0_matrix())?.is_zero())
}

/// Two vectors spanning the kernel of a nonzero linear form in `x, y, z`.
fn line_parametrization(line: &Poly) -> Result<[Vec<Rational>; 2]> {
    let l = line
        .with_vars(&plane_ring())
        .map_err(|_| Error::invalid("line may only involve x, y, z"))?;
    let names: Vec<String> = PLANE_VARS.iter().map(|s| s.to_string()).collect();
    if l.is_zero() || l.homogeneous_degree_in(&names) != Some(1) {
        return Err(Error::invalid(format!("{line} is not a nonzero linear form")));
    }
    let row: Vec<Rational> = PLANE_VARS.iter().map(|v| l.coeff_of(&[(v, 1)])).collect();
    let ker = RatMatrix::from_rows(vec![row])?.kernel();
    Ok([ker[0].clone(), ker[1].clone()])
}

/// Restriction of a form in `x, y, z` to `{line = 0}`, as a binary form in
/// `s, t`.
pub fn restrict_to_line(f: &Poly, line: &Poly) -> Result<Poly> {
    let [a, b] = line_parametrization(line)?;
    let st = PolyRing::new(["s", "t"]);
    let map: HashMap<String, Poly> = PLANE_VARS
        .iter()
        .enumerate()
        .map(|(i, v)| {
            (
                v.to_string(),
                &st.var("s").scale(&a[i]) + &st.var("t").scale(&b[i]),
            )
        })
        .collect();
    let f = f
        .with_vars(&plane_ring())
        .map_err(|_| Error::invalid("form may only involve x, y, z"))?;
    f.substitute(&map)?.with_vars(&st)
}

/// Whether `−f|ℓ` is the square of a binary form (zero counts as a square).
pub fn restriction_is_negative_square(f: &Poly, line: &Poly) -> Result<bool> {
    let r = -restrict_to_line(f, line)?;
    Ok(r.is_zero() || r.perfect_square_root().is_some())
}

/// Each line must divide `det Q`; then `det Q − p²` restricted to each
/// line must be minus a square.
pub fn tangency_check(d: &PairingData, lines: &[Poly]) -> Result<bool> {
    let det = d.q.det()?;
    for l in lines {
        if !det.is_zero() && det.div_exact(l).is_none() {
            return Err(Error::invalid(format!("line {l} does not divide det Q")));
        }
    }
    let curve = curve_equation(d)?;
    for l in lines {
        if !restriction_is_negative_square(&curve, l)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub const UV_VARS: [&str; 6] = ["u1", "u2", "u3", "v1", "v2", "v3"];
pub const XY_VARS: [&str; 6] = ["x1", "x2", "x3", "y1", "y2", "y3"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TetradData {
    a: [Rational; 3],
    b: [Rational; 3],
}

impl TetradData {
    pub fn new(a: [Rational; 3], b: [Rational; 3]) -> Result<Self> {
        if a.iter().chain(&b).all(Zero::is_zero) {
            return Err(Error::invalid(
                "all a_i, b_i vanish; the curve degenerates to four lines",
            ));
        }
        Ok(TetradData { a, b })
    }

    /// Unchecked; `a = b = 0` is allowed here for degenerate test cases.
    pub fn new_unchecked(a: [Rational; 3], b: [Rational; 3]) -> Self {
        TetradData { a, b }
    }

    pub fn a(&self) -> &[Rational; 3] {
        &self.a
    }

    pub fn b(&self) -> &[Rational; 3] {
        &self.b
    }

    /// `(tᵢaᵢ, bᵢ/tᵢ)`.
    pub fn rescale(&self, t: &[Rational; 3]) -> Result<TetradData> {
        if t.iter().any(Zero::is_zero) {
            return Err(Error::invalid("rescaling factors must be nonzero"));
        }
        Ok(TetradData {
            a: std::array::from_fn(|i| &self.a[i] * &t[i]),
            b: std::array::from_fn(|i| &self.b[i] / &t[i]),
        })
    }

    pub fn invariants(&self) -> [Rational; 3] {
        std::array::from_fn(|i| &self.a[i] * &self.b[i])
    }

    /// `p = Σ aᵢuᵢ + bᵢvᵢ`.
    pub fn p_uv(&self) -> Poly {
        let coeffs: Vec<Rational> = self.a.iter().chain(&self.b).cloned().collect();
        PolyRing::new(UV_VARS).linear(&coeffs)
    }

    /// `p` after substituting the basis quadratics for `uᵢ, vᵢ`.
    pub fn p_xyz(&self) -> Poly {
        let map = basis_quadratics();
        self.p_uv().substitute(&map).expect("u, v are variables of p_uv").with_vars(&plane_ring()).expect("x, y, z")
    }

    pub fn pairing_data(&self) -> PairingData {
        let r = plane_ring();
        let diag = [r.var("x"), r.var("y"), r.var("z"), tetrad_lines()[3].clone()];
        let q = PolyMatrix::from_fn(4, 4, |(i, j)| if i == j { diag[i].clone() } else { r.zero() });
        PairingData::new(q, self.p_xyz()).expect("valid by construction")
    }
}

/// `uᵢ ↦ xᵢ(x+y+z)`, `v₁ ↦ yz`, `v₂ ↦ zx`, `v₃ ↦ xy`.
pub fn basis_quadratics() -> HashMap<String, Poly> {
    let r = plane_ring();
    let (x, y, z) = (r.var("x"), r.var("y"), r.var("z"));
    let s = &(&x + &y) + &z;
    [
        ("u1", &x * &s),
        ("u2", &y * &s),
        ("u3", &z * &s),
        ("v1", &y * &z),
        ("v2", &z * &x),
        ("v3", &x * &y),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect()
}

/// The lines `x, y, z, x+y+z`.
pub fn tetrad_lines() -> [Poly; 4] {
    let r = plane_ring();
    let (x, y, z) = (r.var("x"), r.var("y"), r.var("z"));
    let s = &(&x + &y) + &z;
    [x, y, z, s]
}

#[derive(Clone, Debug, PartialEq)]
pub struct SyzygeticFamily {
    /// Coefficients of `u₁, u₂, u₃, v₁, v₂, v₃` in order.
    pub quadrics: Vec<QuadForm>,
    /// Gram matrix in `x₁..y₃` with entries linear in `u, v`.
    pub matrix: PolyMatrix,
}

/// `xᵢ² + 2aᵢ(x₁y₁+x₂y₂+x₃y₃)`, `yᵢ² + 2bᵢ(x₁y₁+x₂y₂+x₃y₃)` and the
/// matrix with diagonal `(u, v)` and `p` in slots `(i, i+3)`.
pub fn syzygetic_family(t: &TetradData) -> SyzygeticFamily {
    let xy = PolyRing::new(XY_VARS);
    let s = (0..3).fold(xy.zero(), |acc, i| &acc + &(&xy.var_at(i) * &xy.var_at(i + 3)));
    let two = rational::int(2);
    let quadrics = (0..6)
        .map(|k| {
            let c = if k < 3 { &t.a[k] } else { &t.b[k - 3] };
            let f = &xy.var_at(k).pow(2) + &s.scale(&(&two * c));
            QuadForm::from_poly(&f, &XY_VARS).expect("quadratic")
        })
        .collect();
    let uv = PolyRing::new(UV_VARS);
    let p = t.p_uv();
    let matrix = PolyMatrix::from_fn(6, 6, |(i, j)| {
        if i == j {
            uv.var_at(i)
        } else if j == i + 3 || i == j + 3 {
            p.clone()
        } else {
            uv.zero()
        }
    });
    SyzygeticFamily { quadrics, matrix }
}

/// The six quadrics read back off `ξᵀMξ` as coefficients of `uᵢ, vᵢ`.
pub fn family_from_matrix(m: &PolyMatrix) -> Result<Vec<QuadForm>> {
    let form = QuadForm::new(XY_VARS.iter().map(|s| s.to_string()).collect(), m.clone())?.to_poly();
    UV_VARS
        .iter()
        .map(|v| {
            let c = form.coefficient_of(v, 1)?;
            let c = c
                .with_vars(&PolyRing::new(XY_VARS))
                .map_err(|_| Error::invalid("matrix is not linear in u, v"))?;
            QuadForm::from_poly(&c, &XY_VARS)
        })
        .collect()
}

/// `Π (uᵢvᵢ − p²)`.
pub fn component_product(t: &TetradData) -> Poly {
    let uv = PolyRing::new(UV_VARS);
    let p2 = t.p_uv().pow(2);
    (0..3).fold(uv.int(1), |acc, i| &acc * &(&(&uv.var_at(i) * &uv.var_at(i + 3)) - &p2))
}

/// `det M`; equal to [`component_product`].
pub fn discriminant_components(t: &TetradData) -> Result<Poly> {
    syzygetic_family(t).matrix.det()
}

/// The three quadrics `uᵢvᵢ − p²` in `u, v`.
pub fn singular_quadrics(t: &TetradData) -> Vec<QuadForm> {
    let uv = PolyRing::new(UV_VARS);
    let p2 = t.p_uv().pow(2);
    (0..3)
        .map(|i| {
            let f = &(&uv.var_at(i) * &uv.var_at(i + 3)) - &p2;
            QuadForm::from_poly(&f, &UV_VARS).expect("quadratic")
        })
        .collect()
}

/// `det(z₁G₁ + z₂G₂ + z₃G₃)` for the Gram matrices of `uᵢvᵢ − p²`.
pub fn triple_discriminant(t: &TetradData) -> Result<Poly> {
    QuadricSystem::with_default_params(singular_quadrics(t))?.discriminant()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleFit {
    pub kappa: Rational,
    /// `None` when every `aᵢbᵢ` vanishes.
    pub mu: Option<Rational>,
}

/// `κ·z₁z₂z₃·(z₁z₂z₃ − μ·(a₁b₁z₂z₃ + a₂b₂z₃z₁ + a₃b₃z₁z₂)(z₁+z₂+z₃))`.
pub fn triple_shape(inv: &[Rational; 3], kappa: &Rational, mu: &Rational) -> Poly {
    let r = PolyRing::new(["z1", "z2", "z3"]);
    let z: Vec<Poly> = (0..3).map(|i| r.var_at(i)).collect();
    let prod = &(&z[0] * &z[1]) * &z[2];
    let pairs = &(&(&z[1] * &z[2]).scale(&inv[0]) + &(&z[2] * &z[0]).scale(&inv[1]))
        + &(&z[0] * &z[1]).scale(&inv[2]);
    let sum = &(&z[0] + &z[1]) + &z[2];
    let inner = &prod - &(&pairs * &sum).scale(mu);
    (&prod * &inner).scale(kappa)
}

/// Reads `(κ, μ)` off a triple discriminant and checks it has the shape of
/// [`triple_shape`] exactly.
pub fn fit_triple_constants(disc: &Poly, t: &TetradData) -> Result<TripleFit> {
    let r = PolyRing::new(["z1", "z2", "z3"]);
    let disc = disc
        .with_vars(&r)
        .map_err(|_| Error::invalid("expected a polynomial in z1, z2, z3"))?;
    let prod = &(&r.var("z1") * &r.var("z2")) * &r.var("z3");
    let quot = disc
        .div_exact(&prod)
        .ok_or_else(|| Error::invalid("triple discriminant is not divisible by z1*z2*z3"))?;
    let inv = t.invariants();
    let s = inv.iter().fold(Rational::zero(), |acc, x| acc + x);
    let c_all = quot.coeff(&[1, 1, 1]);
    // aᵢbᵢ multiplies zⱼzₖ(zⱼ + …); its zⱼ²zₖ coefficient is −κμ·aᵢbᵢ.
    let probes = [[0, 2, 1], [1, 0, 2], [2, 1, 0]];
    let fit = match (0..3).find(|&i| !inv[i].is_zero()) {
        Some(i) => {
            let kmu = -quot.coeff(&probes[i]) / &inv[i];
            let kappa = &c_all + &(&kmu * &s);
            if kappa.is_zero() {
                return Err(Error::invalid("fitted κ vanishes"));
            }
            let mu = &kmu / &kappa;
            TripleFit { kappa, mu: Some(mu) }
        }
        None => TripleFit {
            kappa: c_all,
            mu: None,
        },
    };
    let mu = fit.mu.clone().unwrap_or_else(Rational::zero);
    if triple_shape(&inv, &fit.kappa, &mu) != disc {
        return Err(Error::invalid("triple discriminant does not have the expected shape"));
    }
    Ok(fit)
}

/// Moves a pairing to new coordinates `(x, y, z) = T·(x', y', z')` and a
/// new basis of `V` given by the columns of `b`: `Q ↦ BᵀQ(T·)B`, `p ↦ det B·p(T·)`.
pub fn change_coordinates(d: &PairingData, t: &RatMatrix, b: &RatMatrix) -> Result<PairingData> {
    if t.rows() != 3 || t.cols() != 3 || b.rows() != 4 || b.cols() != 4 {
        return Err(Error::dim("expected a 3x3 plane change and a 4x4 basis change"));
    }
    let det_t = t.det()?;
    let det_b = b.det()?;
    if det_t.is_zero() || det_b.is_zero() {
        return Err(Error::Singular("coordinate change".into()));
    }
    let r = plane_ring();
    let map: HashMap<String, Poly> = PLANE_VARS
        .iter()
        .enumerate()
        .map(|(i, v)| (v.to_string(), r.linear(&t.row(i))))
        .collect();
    let sub = |f: &Poly| -> Poly { f.substitute_linear(&map).expect("plane vars").with_vars(&r).expect("plane vars") };
    let q = d.q.map(sub).congruence(b)?;
    let p = sub(&d.p).scale(&det_b);
    PairingData::new(q, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn zeros3() -> [Rational; 3] {
        std::array::from_fn(|_| int(0))
    }

    fn constant_diag(d: [i64; 4], p: i64) -> PairingData {
        let r = plane_ring();
        let q = PolyMatrix::from_fn(4, 4, |(i, j)| if i == j { r.int(d[i]) } else { r.zero() });
        PairingData { q, p: r.int(p) }
    }

    #[test]
    fn q0_signs() {
        let q0 = q0_matrix();
        assert_eq!(q0[(0, 5)], int(1));
        assert_eq!(q0[(1, 4)], int(-1));
        assert_eq!(q0[(2, 3)], int(1));
        assert!(q0.is_symmetric());
        let nonzero = (0..6).flat_map(|i| (0..6).map(move |j| (i, j))).filter(|&(i, j)| !q0[(i, j)].is_zero()).count();
        assert_eq!(nonzero, 6);
    }

    #[test]
    fn constant_diagonal_blocks() {
        let d = constant_diag([2, 3, 5, 7], 4);
        let m = lambda2_gram(&d);
        let r = plane_ring();
        assert_eq!(m.get(0, 0), &r.int(6));
        assert_eq!(m.get(5, 5), &r.int(35));
        assert_eq!(m.get(0, 5), &r.int(4));
        assert_eq!(m.get(1, 4), &r.int(-4));
        assert_eq!(m.get(2, 3), &r.int(4));
        assert_eq!(m.get(0, 1), &r.zero());
        let det = m.det().unwrap();
        assert_eq!(det, r.int((210 - 16) * (210 - 16) * (210 - 16)));
        assert!(det_identity_check(&d).unwrap());
    }

    #[test]
    fn identity_q_gives_identity() {
        let d = constant_diag([1, 1, 1, 1], 0);
        assert_eq!(lambda2_gram(&d).to_rational().unwrap(), RatMatrix::identity(6));
    }

    #[test]
    fn symbolic_identity_and_mutation() {
        let r = plane_ring();
        let e = |s: &str| r.parse(s).unwrap();
        let rows = [
            ["x", "y - z", "2*x + z", "0"],
            ["y - z", "3*z", "x", "y"],
            ["2*x + z", "x", "-x + y", "2*z"],
            ["0", "y", "2*z", "x + y + z"],
        ];
        let q = PolyMatrix::from_fn(4, 4, |(i, j)| e(rows[i][j]));
        let d = PairingData::new(q, e("x^2 - 3*y*z + z^2")).unwrap();
        assert!(det_identity_check(&d).unwrap());
        let mut rows_q0: Vec<Vec<Rational>> = (0..6).map(|i| q0_matrix().row(i)).collect();
        rows_q0[0][5] = int(-1);
        rows_q0[5][0] = int(-1);
        let q0_bad = RatMatrix::from_rows(rows_q0).unwrap();
        assert!(!det_identity_residual_with(&d, &q0_bad).unwrap().is_zero());
    }

    #[test]
    fn p_zero_specialization() {
        let t = TetradData::new_unchecked([int(0), int(0), int(0)], [int(0), int(0), int(0)]);
        let d = t.pairing_data();
        let m = lambda2_gram(&d);
        let r = plane_ring();
        let xyzs = r.parse("x*y*z*(x + y + z)").unwrap();
        assert_eq!(m.det().unwrap(), xyzs.pow(3));
        assert_eq!(curve_equation(&d).unwrap(), xyzs);
    }

    #[test]
    fn pairing_validation() {
        let r = plane_ring();
        let q = PolyMatrix::from_fn(4, 4, |(i, j)| if i == j { r.parse("x^2").unwrap() } else { r.zero() });
        assert!(PairingData::new(q, r.zero()).is_err());
        let q = PolyMatrix::from_fn(4, 4, |(i, j)| if i == 0 && j == 1 { r.var("x") } else { r.zero() });
        assert!(PairingData::new(q, r.zero()).is_err());
    }

    #[test]
    fn p_representations_agree() {
        let t = TetradData::new([int(1), int(-2), frac(1, 3)], [int(4), int(0), int(5)]).unwrap();
        let r = plane_ring();
        let expected = r
            .parse("(x - 2*y + 1/3*z)*(x + y + z) + 4*y*z + 5*x*y")
            .unwrap();
        assert_eq!(t.p_xyz(), expected);
        let curve = curve_equation(&t.pairing_data()).unwrap();
        assert_eq!(curve, &r.parse("x*y*z*(x + y + z)").unwrap() - &expected.pow(2));
    }

    #[test]
    fn tangency_on_tetrad() {
        let t = TetradData::new([int(3), int(-1), int(2)], [int(1), int(7), int(-4)]).unwrap();
        let d = t.pairing_data();
        assert!(tangency_check(&d, &tetrad_lines()).unwrap());
        let r = plane_ring();
        let bumped = &curve_equation(&d).unwrap() + &r.parse("x^4 + 2*y^3*z - z^4 + x*y*z^2").unwrap();
        let hits = tetrad_lines()
            .iter()
            .filter(|l| restriction_is_negative_square(&bumped, l).unwrap())
            .count();
        assert!(hits < 4);
        assert!(tangency_check(&d, &[r.parse("x + 2*y").unwrap()]).is_err());
    }

    #[test]
    fn tangency_with_zero_p() {
        let d = TetradData::new_unchecked(zeros3(), zeros3()).pairing_data();
        assert!(tangency_check(&d, &tetrad_lines()).unwrap());
    }

    #[test]
    fn family_specialization() {
        let t = TetradData::new([int(1), int(0), int(0)], zeros3()).unwrap();
        let fam = syzygetic_family(&t);
        let xy = PolyRing::new(XY_VARS);
        assert_eq!(
            fam.quadrics[0].to_poly(),
            xy.parse("x1^2 + 2*(x1*y1 + x2*y2 + x3*y3)").unwrap()
        );
        for (k, v) in XY_VARS.iter().enumerate().skip(1) {
            assert_eq!(fam.quadrics[k].to_poly(), xy.var(v).pow(2));
        }
        assert_eq!(family_from_matrix(&fam.matrix).unwrap(), fam.quadrics);
        let ones: Vec<(&str, Rational)> = UV_VARS.iter().map(|v| (*v, int(1))).collect();
        let at = |i, j| fam.matrix.get(i, j).evaluate_named(&ones).unwrap();
        assert_eq!(at(0, 3), int(1));
        assert_eq!(at(2, 5), int(1));
        assert_eq!(at(2, 2), int(1));
        assert_eq!(at(0, 1), int(0));
    }

    #[test]
    fn family_round_trip_generic() {
        let t = TetradData::new([int(2), frac(-1, 2), int(3)], [int(-5), int(1), int(9)]).unwrap();
        let fam = syzygetic_family(&t);
        assert_eq!(family_from_matrix(&fam.matrix).unwrap(), fam.quadrics);
    }

    #[test]
    fn components() {
        let t = TetradData::new([int(2), int(-3), int(1)], [int(4), int(5), int(-6)]).unwrap();
        assert_eq!(discriminant_components(&t).unwrap(), component_product(&t));
        let t0 = TetradData::new_unchecked(zeros3(), zeros3());
        assert_eq!(
            discriminant_components(&t0).unwrap(),
            Poly::parse("u1*v1*u2*v2*u3*v3").unwrap()
        );
    }

    #[test]
    fn triple_discriminant_constants() {
        let t = TetradData::new([int(2), int(-3), int(1)], [int(4), int(5), int(-6)]).unwrap();
        let disc = triple_discriminant(&t).unwrap();
        let fit = fit_triple_constants(&disc, &t).unwrap();
        assert_eq!(fit.kappa, frac(-1, 64));
        assert_eq!(fit.mu, Some(int(4)));
        let t2 = t.rescale(&[int(3), frac(-1, 2), int(7)]).unwrap();
        assert_eq!(triple_discriminant(&t2).unwrap(), disc);
        let t0 = TetradData::new_unchecked(zeros3(), zeros3());
        let fit0 = fit_triple_constants(&triple_discriminant(&t0).unwrap(), &t0).unwrap();
        assert_eq!(fit0, TripleFit { kappa: frac(-1, 64), mu: None });
    }

    #[test]
    fn coordinate_change_preserves_identity() {
        let t = TetradData::new([int(1), int(2), int(0)], [int(0), int(-1), int(3)]).unwrap();
        let tm = RatMatrix::from_ints(&[&[1, 1, 0], &[0, 1, 2], &[1, 0, 1]]);
        let bm = RatMatrix::from_ints(&[&[1, 0, 0, 1], &[0, 2, 0, 0], &[0, 1, 1, 0], &[0, 0, 0, 1]]);
        let d = change_coordinates(&t.pairing_data(), &tm, &bm).unwrap();
        assert!(det_identity_check(&d).unwrap());
    }
}
