//! Lines in P³ as points of the Klein quadric, the two families of planes on
//! it, two-component spinors, and null separation of conics lying on an
//! intersection of two quadrics in P⁵.
//!
//! Plücker coordinates are ordered `(p01, p02, p03, p23, p31, p12)`; the
//! Klein relation reads `p01·p23 + p02·p31 + p03·p12 = 0`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::poly::{Poly, PolyRing};
use crate::quadform::QuadForm;
use crate::rational::{self, Rational};

pub type Point3 = [Rational; 4];

pub const PLUCKER_LABELS: [&str; 6] = ["p01", "p02", "p03", "p23", "p31", "p12"];

/// Index pairs `(i, j)` with `p_ij = a_i b_j - a_j b_i`, in coordinate order.
const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (2, 3), (3, 1), (1, 2)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerPoint {
    coords: [Rational; 6],
}

/// `p01·p23 + p02·p31 + p03·p12`.
pub fn klein_value(c: &[Rational]) -> Rational {
    &c[0] * &c[3] + &c[1] * &c[4] + &c[2] * &c[5]
}

/// Polarization of the Klein form, without the ½: `K(a, a) = 2·klein_value(a)`.
pub fn klein_pairing(a: &[Rational], b: &[Rational]) -> Rational {
    &a[0] * &b[3] + &a[3] * &b[0] + &a[1] * &b[4] + &a[4] * &b[1] + &a[2] * &b[5] + &a[5] * &b[2]
}

/// The Klein quadric as a quadratic form on the Plücker coordinates.
pub fn klein_quadform() -> QuadForm {
    let ring = PolyRing::new(PLUCKER_LABELS);
    let q = ring.parse("p01*p23 + p02*p31 + p03*p12").expect("literal");
    QuadForm::from_poly(&q, &PLUCKER_LABELS).expect("homogeneous quadratic")
}

impl PluckerPoint {
    pub fn new(coords: [Rational; 6]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::invalid("Plücker coordinates are all zero"));
        }
        if !klein_value(&coords).is_zero() {
            return Err(Error::invalid("point does not satisfy the Klein relation"));
        }
        Ok(PluckerPoint { coords })
    }

    pub fn coords(&self) -> &[Rational; 6] {
        &self.coords
    }

    /// Projective equality.
    pub fn same_point(&self, other: &PluckerPoint) -> bool {
        let m = RatMatrix::from_rows(vec![self.coords.to_vec(), other.coords.to_vec()])
            .expect("two rows of six");
        m.rank() == 1
    }
}

fn rank_of(vectors: &[&[Rational]]) -> usize {
    RatMatrix::from_rows(vectors.iter().map(|v| v.to_vec()).collect())
        .expect("equal lengths")
        .rank()
}

/// The line through two distinct points of P³.
pub fn plucker_from_points(a: &Point3, b: &Point3) -> Result<PluckerPoint> {
    if rank_of(&[a, b]) < 2 {
        return Err(Error::invalid("points are not projectively distinct"));
    }
    let coords = PLUCKER_PAIRS.map(|(i, j)| &a[i] * &b[j] - &a[j] * &b[i]);
    PluckerPoint::new(coords)
}

/// Two lines meet iff their Plücker points are orthogonal for the Klein form.
pub fn lines_incident(l1: &PluckerPoint, l2: &PluckerPoint) -> bool {
    klein_pairing(&l1.coords, &l2.coords).is_zero()
}

/// A linear subspace of `ambient`-dimensional space, seen projectively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjSubspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl ProjSubspace {
    /// Requires linearly independent vectors.
    pub fn new(ambient: usize, basis: Vec<Vec<Rational>>) -> Result<Self> {
        if basis.iter().any(|v| v.len() != ambient) {
            return Err(Error::dim("basis vector has wrong length"));
        }
        if !basis.is_empty() {
            let refs: Vec<&[Rational]> = basis.iter().map(Vec::as_slice).collect();
            if rank_of(&refs) != basis.len() {
                return Err(Error::invalid("basis is not linearly independent"));
            }
        }
        Ok(ProjSubspace { ambient, basis })
    }

    /// Span of arbitrary vectors (dependent ones are dropped).
    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::dim("vector has wrong length"));
        }
        if vectors.is_empty() {
            return Ok(ProjSubspace {
                ambient,
                basis: Vec::new(),
            });
        }
        let (r, pivots) = RatMatrix::from_rows(vectors.to_vec())?.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Ok(ProjSubspace { ambient, basis })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn linear_dim(&self) -> usize {
        self.basis.len()
    }

    /// Projective dimension; `-1` for the empty subspace.
    pub fn proj_dim(&self) -> i64 {
        self.basis.len() as i64 - 1
    }

    /// Basis vectors as the columns of a matrix.
    pub fn basis_matrix(&self) -> RatMatrix {
        RatMatrix::from_cols(&self.basis).expect("uniform lengths")
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        let refs: Vec<&[Rational]> = rows.iter().map(Vec::as_slice).collect();
        rank_of(&refs) == self.basis.len()
    }

    pub fn intersect(&self, other: &ProjSubspace) -> Result<ProjSubspace> {
        if self.ambient != other.ambient {
            return Err(Error::dim("subspaces live in different spaces"));
        }
        if self.basis.is_empty() || other.basis.is_empty() {
            return ProjSubspace::span(self.ambient, &[]);
        }
        // Solve Σ αᵢ aᵢ − Σ βⱼ bⱼ = 0.
        let k = self.basis.len();
        let mut cols: Vec<Vec<Rational>> = self.basis.clone();
        cols.extend(other.basis.iter().map(|b| b.iter().map(|x| -x).collect()));
        let m = RatMatrix::from_cols(&cols)?;
        let vectors: Vec<Vec<Rational>> = m
            .kernel()
            .into_iter()
            .map(|coef| {
                let mut v = vec![Rational::zero(); self.ambient];
                for (a, c) in self.basis.iter().zip(&coef[..k]) {
                    for (vi, ai) in v.iter_mut().zip(a) {
                        *vi += ai * c;
                    }
                }
                v
            })
            .collect();
        ProjSubspace::span(self.ambient, &vectors)
    }

    /// Restriction of `q` in the coordinates of this basis.
    pub fn restrict(&self, q: &QuadForm) -> Result<RatMatrix> {
        if q.dim() != self.ambient {
            return Err(Error::dim("quadratic form and subspace differ in dimension"));
        }
        let g = q
            .rational_gram()
            .ok_or_else(|| Error::invalid("quadratic form has non-constant entries"))?;
        let b = self.basis_matrix();
        b.transpose().mul(&g)?.mul(&b)
    }

    /// True when `q` vanishes identically on the subspace.
    pub fn lies_on(&self, q: &QuadForm) -> Result<bool> {
        if self.basis.is_empty() {
            return Ok(true);
        }
        Ok(self.restrict(q)?.is_zero())
    }

    /// `klein_value(Σ sᵢ·bᵢ)` as a polynomial in `s1..sk`.
    pub fn klein_on_span(&self) -> Poly {
        let names: Vec<String> = (1..=self.basis.len()).map(|i| format!("s{i}")).collect();
        let ring = PolyRing::new(names);
        let coords: Vec<Poly> = (0..self.ambient)
            .map(|c| {
                let coeffs: Vec<Rational> = self.basis.iter().map(|b| b[c].clone()).collect();
                ring.linear(&coeffs)
            })
            .collect();
        &(&(&coords[0] * &coords[3]) + &(&coords[1] * &coords[4])) + &(&coords[2] * &coords[5])
    }
}

/// The lines through `x`: a plane on the Klein quadric.
pub fn alpha_plane(x: &Point3) -> Result<ProjSubspace> {
    if x.iter().all(Zero::is_zero) {
        return Err(Error::invalid("point of P³ is zero"));
    }
    let mut chosen: Vec<Vec<Rational>> = vec![x.to_vec()];
    let mut lines = Vec::new();
    for i in 0..4 {
        let mut e = vec![Rational::zero(); 4];
        e[i] = Rational::one();
        let mut trial = chosen.clone();
        trial.push(e.clone());
        let refs: Vec<&[Rational]> = trial.iter().map(Vec::as_slice).collect();
        if rank_of(&refs) == trial.len() {
            let ei: Point3 = [e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()];
            lines.push(plucker_from_points(x, &ei)?.coords.to_vec());
            chosen = trial;
        }
        if lines.len() == 3 {
            break;
        }
    }
    ProjSubspace::new(6, lines)
}

/// The lines inside the plane `{Σ cᵢ xᵢ = 0}`.
pub fn beta_plane(covector: &Point3) -> Result<ProjSubspace> {
    if covector.iter().all(Zero::is_zero) {
        return Err(Error::invalid("plane covector is zero"));
    }
    let m = RatMatrix::from_rows(vec![covector.to_vec()])?;
    let k = m.kernel();
    let pt = |v: &Vec<Rational>| -> Point3 { [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()] };
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let lines: Result<Vec<Vec<Rational>>> = pairs
        .iter()
        .map(|&(i, j)| Ok(plucker_from_points(&pt(&k[i]), &pt(&k[j]))?.coords.to_vec()))
        .collect();
    ProjSubspace::new(6, lines?)
}

pub fn point_in_plane(x: &Point3, covector: &Point3) -> bool {
    x.iter()
        .zip(covector)
        .map(|(a, b)| a * b)
        .fold(Rational::zero(), |s, t| s + t)
        .is_zero()
}

/// The pencil of lines through `x` inside `π`, when `x ∈ π`.
pub fn flag_null_geodesic(x: &Point3, covector: &Point3) -> Result<Option<ProjSubspace>> {
    let meet = alpha_plane(x)?.intersect(&beta_plane(covector)?)?;
    Ok((meet.linear_dim() == 2).then_some(meet))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneFamily {
    Same,
    Different,
}

/// Two planes on the Klein quadric lie in the same family iff their linear
/// intersection has odd dimension.
pub fn plane_family_compare(p1: &ProjSubspace, p2: &ProjSubspace) -> Result<PlaneFamily> {
    let k = klein_quadform();
    for p in [p1, p2] {
        if p.ambient() != 6 || p.linear_dim() != 3 {
            return Err(Error::invalid("expected a projective plane in P⁵"));
        }
        if !p.lies_on(&k)? {
            return Err(Error::invalid("plane does not lie on the Klein quadric"));
        }
    }
    let d = p1.intersect(p2)?.linear_dim();
    Ok(if d % 2 == 1 {
        PlaneFamily::Same
    } else {
        PlaneFamily::Different
    })
}

pub type Spinor = [Rational; 2];

/// Two 2-dimensional spaces S₊, S₋ with skew forms ε₊, ε₋.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorSpace {
    eps_plus: Rational,
    eps_minus: Rational,
}

impl SpinorSpace {
    /// ε₊ = ε₋ = [[0, 1], [-1, 0]].
    pub fn standard() -> Self {
        SpinorSpace {
            eps_plus: Rational::one(),
            eps_minus: Rational::one(),
        }
    }

    /// From 2×2 antisymmetric matrices with nonzero (0, 1) entry.
    pub fn new(eps_plus: &RatMatrix, eps_minus: &RatMatrix) -> Result<Self> {
        let read = |m: &RatMatrix| -> Result<Rational> {
            if m.rows() != 2 || m.cols() != 2 {
                return Err(Error::dim("skew form must be 2x2"));
            }
            if !m[(0, 0)].is_zero() || !m[(1, 1)].is_zero() || m[(0, 1)] != -m[(1, 0)].clone() {
                return Err(Error::invalid("skew form is not antisymmetric"));
            }
            if m[(0, 1)].is_zero() {
                return Err(Error::invalid("skew form is degenerate"));
            }
            Ok(m[(0, 1)].clone())
        };
        Ok(SpinorSpace {
            eps_plus: read(eps_plus)?,
            eps_minus: read(eps_minus)?,
        })
    }

    pub fn eps_plus(&self, a: &Spinor, b: &Spinor) -> Rational {
        &self.eps_plus * (&a[0] * &b[1] - &a[1] * &b[0])
    }

    pub fn eps_minus(&self, a: &Spinor, b: &Spinor) -> Rational {
        &self.eps_minus * (&a[0] * &b[1] - &a[1] * &b[0])
    }
}

/// Factors a null vector `v ∈ S₊⊗S₋` (a 2×2 matrix of rank one) as `φψᵀ`,
/// with the first nonzero entry of `φ` equal to 1.
pub fn spinor_factor(v: &RatMatrix) -> Result<Option<(Spinor, Spinor)>> {
    if v.rows() != 2 || v.cols() != 2 {
        return Err(Error::dim("expected a 2x2 matrix"));
    }
    if v.is_zero() {
        return Err(Error::invalid("zero vector has no spinor factorization"));
    }
    if !v.det()?.is_zero() {
        return Ok(None);
    }
    let j = (0..2).find(|&j| !v.col(j).iter().all(Zero::is_zero)).expect("v ≠ 0");
    let col = v.col(j);
    let i0 = (0..2).find(|&i| !col[i].is_zero()).expect("column is nonzero");
    let phi = [&col[0] / &col[i0], &col[1] / &col[i0]];
    let psi = [v[(i0, 0)].clone(), v[(i0, 1)].clone()];
    Ok(Some((phi, psi)))
}

/// Basis pairs `(I, J)`, `I < J`, of Λ²V where index `I = 2a + b` stands for
/// `s_a ⊗ t_b`.
pub const WEDGE_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// A 2-form on V = S₊⊗S₋, by its coefficients on `e_I ∧ e_J` in
/// [`WEDGE_PAIRS`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoForm(pub [Rational; 6]);

impl TwoForm {
    pub fn zero() -> Self {
        TwoForm(std::array::from_fn(|_| Rational::zero()))
    }

    /// `u ∧ w` for vectors of V given in the `e_I` basis.
    pub fn wedge(u: &[Rational; 4], w: &[Rational; 4]) -> Self {
        TwoForm(WEDGE_PAIRS.map(|(i, j)| &u[i] * &w[j] - &u[j] * &w[i]))
    }

    pub fn add(&self, other: &TwoForm) -> TwoForm {
        TwoForm(std::array::from_fn(|k| &self.0[k] + &other.0[k]))
    }
}

/// `a ⊗ b` in the `e_I` basis.
pub fn spinor_tensor(a: &Spinor, b: &Spinor) -> [Rational; 4] {
    [&a[0] * &b[0], &a[0] * &b[1], &a[1] * &b[0], &a[1] * &b[1]]
}

fn sym(a: &Spinor, b: &Spinor) -> [Rational; 3] {
    // (0,0), (0,1), (1,1) entries of ½(abᵀ + baᵀ).
    let half = rational::frac(1, 2);
    [
        &a[0] * &b[0],
        (&a[0] * &b[1] + &a[1] * &b[0]) * half,
        &a[1] * &b[1],
    ]
}

fn unit(k: usize) -> Spinor {
    let mut s = [Rational::zero(), Rational::zero()];
    s[k] = Rational::one();
    s
}

/// Coordinates `(sd00, sd01, sd11, asd00, asd01, asd11)` of the image of the
/// basis 2-form `e_I ∧ e_J`.
fn basis_image(spin: &SpinorSpace, i: usize, j: usize) -> [Rational; 6] {
    let (a, b) = (unit(i / 2), unit(i % 2));
    let (a2, b2) = (unit(j / 2), unit(j % 2));
    let em = spin.eps_minus(&b, &b2);
    let ep = spin.eps_plus(&a, &a2);
    let s_plus = sym(&a, &a2);
    let s_minus = sym(&b, &b2);
    [
        &s_plus[0] * &em,
        &s_plus[1] * &em,
        &s_plus[2] * &em,
        &ep * &s_minus[0],
        &ep * &s_minus[1],
        &ep * &s_minus[2],
    ]
}

/// Matrix of Λ²V → S²S₊ ⊕ S²S₋ (columns indexed by [`WEDGE_PAIRS`]).
pub fn decomposition_matrix(spin: &SpinorSpace) -> RatMatrix {
    let cols: Vec<Vec<Rational>> = WEDGE_PAIRS
        .iter()
        .map(|&(i, j)| basis_image(spin, i, j).to_vec())
        .collect();
    RatMatrix::from_cols(&cols).expect("six columns of six")
}

fn sym_matrix(c: &[Rational]) -> RatMatrix {
    RatMatrix::from_rows(vec![
        vec![c[0].clone(), c[1].clone()],
        vec![c[1].clone(), c[2].clone()],
    ])
    .expect("2x2")
}

/// Self-dual and anti-self-dual parts, each a symmetric 2×2 matrix.
pub fn sd_asd_project(omega: &TwoForm, spin: &SpinorSpace) -> (RatMatrix, RatMatrix) {
    let img = decomposition_matrix(spin).mul_vec(&omega.0);
    (sym_matrix(&img[..3]), sym_matrix(&img[3..]))
}

/// Inverse of [`sd_asd_project`].
pub fn sd_asd_reconstruct(sd: &RatMatrix, asd: &RatMatrix, spin: &SpinorSpace) -> Result<TwoForm> {
    for m in [sd, asd] {
        if m.rows() != 2 || m.cols() != 2 || !m.is_symmetric() {
            return Err(Error::invalid("expected symmetric 2x2 matrices"));
        }
    }
    let inv = decomposition_matrix(spin).inverse()?;
    let v = [
        sd[(0, 0)].clone(),
        sd[(0, 1)].clone(),
        sd[(1, 1)].clone(),
        asd[(0, 0)].clone(),
        asd[(0, 1)].clone(),
        asd[(1, 1)].clone(),
    ];
    let w = inv.mul_vec(&v);
    Ok(TwoForm(std::array::from_fn(|k| w[k].clone())))
}

/// The 2-form with the same self-dual part and zero anti-self-dual part.
pub fn self_dual_part(omega: &TwoForm, spin: &SpinorSpace) -> TwoForm {
    let (sd, _) = sd_asd_project(omega, spin);
    sd_asd_reconstruct(&sd, &RatMatrix::zeros(2, 2), spin).expect("decomposition is invertible")
}

/// A plane on `Q_z = z₁q₁ + z₂q₂` together with the conic it cuts on
/// `Q₁ ∩ Q₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicOnIntersection {
    z: (Rational, Rational),
    plane: ProjSubspace,
    q1: QuadForm,
    q2: QuadForm,
    conic: RatMatrix,
}

impl ConicOnIntersection {
    pub fn plane(&self) -> &ProjSubspace {
        &self.plane
    }

    pub fn parameter(&self) -> &(Rational, Rational) {
        &self.z
    }

    /// Gram matrix of the conic in the plane's basis coordinates.
    pub fn conic(&self) -> &RatMatrix {
        &self.conic
    }
}

/// Builds the conic cut by `plane` (lying on `Q_z`) on the base locus of
/// the pencil. Conics of rank below 3 are reported as degenerate.
pub fn conic_on_intersection(
    z: (Rational, Rational),
    plane: &ProjSubspace,
    q1: &QuadForm,
    q2: &QuadForm,
) -> Result<ConicOnIntersection> {
    if z.0.is_zero() && z.1.is_zero() {
        return Err(Error::invalid("pencil parameter is zero"));
    }
    if plane.linear_dim() != 3 {
        return Err(Error::invalid("expected a projective plane"));
    }
    let r1 = plane.restrict(q1)?;
    let r2 = plane.restrict(q2)?;
    if !r1.scale(&z.0).add(&r2.scale(&z.1))?.is_zero() {
        return Err(Error::invalid("plane does not lie on Q_z"));
    }
    let conic = if z.1.is_zero() { r2 } else { r1 };
    if conic.is_zero() {
        return Err(Error::Degenerate(
            "restriction is identically zero: the plane lies in both quadrics".into(),
        ));
    }
    let rank = conic.rank();
    if rank < 3 {
        return Err(Error::Degenerate(format!(
            "conic has rank {rank}: the plane meets the base locus in lines"
        )));
    }
    Ok(ConicOnIntersection {
        z,
        plane: plane.clone(),
        q1: q1.clone(),
        q2: q2.clone(),
        conic,
    })
}

/// True iff the two conics share a point: the planes meet in a single
/// projective point lying on both quadrics.
pub fn conics_null_separated(c1: &ConicOnIntersection, c2: &ConicOnIntersection) -> Result<bool> {
    if c1.q1 != c2.q1 || c1.q2 != c2.q2 {
        return Err(Error::invalid("conics lie on different pencils"));
    }
    let meet = c1.plane.intersect(&c2.plane)?;
    match meet.linear_dim() {
        0 => Ok(false),
        1 => {
            let x = &meet.basis()[0];
            Ok(c1.q1.evaluate(x)?.is_zero() && c1.q2.evaluate(x)?.is_zero())
        }
        _ => Err(Error::Degenerate(
            "planes share a line: common line, degenerate configuration".into(),
        )),
    }
}

/// The pencil `q₁ = Σ uᵢwᵢ`, `q₂ = Σ cᵢuᵢwᵢ` on coordinates
/// `(u₁, u₂, u₃, w₁, w₂, w₃)`. With `u = (p01, p02, p03)` and
/// `w = (p23, p31, p12)`, `q₁` is the Klein form.
pub fn split_pencil(c: &[Rational; 3]) -> (QuadForm, QuadForm) {
    let ring = PolyRing::new(["u1", "u2", "u3", "w1", "w2", "w3"]);
    let q1 = ring.parse("u1*w1 + u2*w2 + u3*w3").expect("literal");
    let mut q2 = ring.zero();
    for (i, ci) in c.iter().enumerate() {
        let t = &ring.var(&format!("u{}", i + 1)) * &ring.var(&format!("w{}", i + 1));
        q2 = &q2 + &t.scale(ci);
    }
    let vars = ["u1", "u2", "u3", "w1", "w2", "w3"];
    (
        QuadForm::from_poly(&q1, &vars).expect("quadratic"),
        QuadForm::from_poly(&q2, &vars).expect("quadratic"),
    )
}

/// The plane `{(u, K⁻¹Nu)}` with `K = diag(k)` and `N` antisymmetric with
/// upper entries `n = (n12, n13, n23)`; it is isotropic for `Σ kᵢuᵢwᵢ`.
pub fn graph_plane(k: &[Rational; 3], n: &[Rational; 3]) -> Result<ProjSubspace> {
    if k.iter().any(Zero::is_zero) {
        return Err(Error::invalid("K must be invertible"));
    }
    let z = Rational::zero();
    let nm = [
        [z.clone(), n[0].clone(), n[1].clone()],
        [-n[0].clone(), z.clone(), n[2].clone()],
        [-n[1].clone(), -n[2].clone(), z],
    ];
    let mut basis = Vec::new();
    for j in 0..3 {
        let mut v = vec![Rational::zero(); 6];
        v[j] = Rational::one();
        for i in 0..3 {
            v[3 + i] = &nm[i][j] / &k[i];
        }
        basis.push(v);
    }
    ProjSubspace::new(6, basis)
}

/// A graph plane for `K = diag(k)` through the point `(u, w)`, which must
/// satisfy `Σ kᵢuᵢwᵢ = 0`. Such planes form a line's worth; `s` picks one.
pub fn graph_plane_through(
    k: &[Rational; 3],
    u: &[Rational; 3],
    w: &[Rational; 3],
    s: &Rational,
) -> Result<ProjSubspace> {
    let r: [Rational; 3] = std::array::from_fn(|i| &k[i] * &w[i]);
    let uu = u.iter().fold(Rational::zero(), |acc, x| acc + x * x);
    if uu.is_zero() {
        return Err(Error::invalid("u must be nonzero"));
    }
    if !u.iter().zip(&r).fold(Rational::zero(), |acc, (a, b)| acc + a * b).is_zero() {
        return Err(Error::invalid("point is not on the quadric Σ kᵢuᵢwᵢ = 0"));
    }
    // N·u = ν × u with n12 = −ν₃, n13 = ν₂, n23 = −ν₁; solve ν × u = r.
    let cross = [
        &u[1] * &r[2] - &u[2] * &r[1],
        &u[2] * &r[0] - &u[0] * &r[2],
        &u[0] * &r[1] - &u[1] * &r[0],
    ];
    let nu: [Rational; 3] = std::array::from_fn(|i| &cross[i] / &uu + s * &u[i]);
    graph_plane(k, &[-nu[2].clone(), nu[1].clone(), -nu[0].clone()])
}
