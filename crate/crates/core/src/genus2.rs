//! Genus 2: pencils of quadrics in P⁵, their branch sextic, the four
//! triples of points attached to a line through a point of `Q₁ ∩ Q₂`, and
//! the net of conics `tr Φ²` for a very stable bundle together with its
//! normalization to three double lines.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::poly::{Poly, PolyRing};
use crate::quadform::{QuadForm, QuadricSystem};
use crate::rational::{self, Rational};

/// `det(z₁·gram₁ + z₂·gram₂)` for two 6×6 rational forms.
pub fn pencil_sextic(q1: &QuadForm, q2: &QuadForm) -> Result<Poly> {
    for q in [q1, q2] {
        if q.dim() != 6 || q.rational_gram().is_none() {
            return Err(Error::invalid("pencil forms must be 6x6 with rational entries"));
        }
    }
    if q1.rational_gram().expect("checked").det()?.is_zero() {
        return Err(Error::Singular("q1 is degenerate".into()));
    }
    let disc = QuadricSystem::with_default_params(vec![q1.clone(), q2.clone()])?.discriminant()?;
    disc.with_vars(&PolyRing::new(["z1", "z2"]))
}

/// A root `[z₁ : z₂]` of a binary form.
#[derive(Clone, Debug, PartialEq)]
pub enum RootValue {
    Exact(Rational, Rational),
    /// `z₁/z₂` approximated numerically, with the relative residual of the
    /// dehomogenized form at that value.
    Numeric { ratio: Complex64, residual: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct BranchPoint {
    pub root: RootValue,
    pub multiplicity: u32,
}

impl fmt::Display for BranchPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.root {
            RootValue::Exact(a, b) => write!(
                f,
                "[{} : {}] multiplicity {}",
                rational::format(a),
                rational::format(b),
                self.multiplicity
            ),
            RootValue::Numeric { ratio, residual } => write!(
                f,
                "[{:.11e} + {:.11e}i : 1] multiplicity {} residual {:.3e}",
                ratio.re, ratio.im, self.multiplicity, residual
            ),
        }
    }
}

/// Relative residual that numerically located roots must meet.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-10;

/// Roots of a binary form in its first two variables, with multiplicities.
/// Rational roots are exact; the rest come from Aberth iteration on the
/// square-free factors.
pub fn branch_points(form: &Poly) -> Result<Vec<BranchPoint>> {
    if form.is_zero() {
        return Err(Error::invalid("binary form is identically zero"));
    }
    let (a, b) = binary_vars(form)?;
    if !form.is_homogeneous() {
        return Err(Error::invalid("binary form is not homogeneous"));
    }
    let degree = form.total_degree().expect("nonzero");
    let tr = PolyRing::new(["t"]);
    // g(t) = f(t, 1)
    let mut coeffs = vec![Rational::zero(); degree as usize + 1];
    for k in 0..=degree {
        coeffs[k as usize] = form.coeff_of(&[(&a, k), (&b, degree - k)]);
    }
    let g = univariate(&tr, &coeffs);
    let deg_g = g.total_degree().unwrap_or(0);
    let mut out = Vec::new();
    if deg_g < degree {
        out.push(BranchPoint {
            root: RootValue::Exact(Rational::one(), Rational::zero()),
            multiplicity: degree - deg_g,
        });
    }
    let mut rest = g.clone();
    for r in rational_root_candidates(&coefficients(&rest)) {
        let lin = &tr.var("t") - &tr.constant(r.clone());
        let mut m = 0;
        while let Some(q) = rest.div_exact(&lin) {
            rest = q;
            m += 1;
        }
        if m > 0 {
            out.push(BranchPoint {
                root: RootValue::Exact(r, Rational::one()),
                multiplicity: m,
            });
        }
    }
    let g_f64: Vec<f64> = coefficients(&g).iter().map(rational::to_f64).collect();
    for (factor, mult) in square_free_decomposition(&rest) {
        let c: Vec<f64> = coefficients(&factor).iter().map(rational::to_f64).collect();
        for z in aberth_roots(&c) {
            let z = newton_polish(&g_f64, &c, z);
            out.push(BranchPoint {
                root: RootValue::Numeric {
                    ratio: z,
                    residual: relative_residual(&g_f64, z),
                },
                multiplicity: mult,
            });
        }
    }
    let total: u32 = out.iter().map(|p| p.multiplicity).sum();
    if total != degree {
        return Err(Error::Internal(format!(
            "found {total} roots with multiplicity for a form of degree {degree}"
        )));
    }
    Ok(out)
}

/// The two variables of a binary form: those it uses, else `z1, z2`, else
/// the ring's own two.
fn binary_vars(form: &Poly) -> Result<(String, String)> {
    let used = form.used_vars();
    let vars = form.vars();
    if used.len() > 2 {
        return Err(Error::invalid("expected a binary form in two variables"));
    }
    if used.len() == 2 {
        return Ok((used[0].clone(), used[1].clone()));
    }
    let has = |n: &str| vars.iter().any(|v| v == n);
    if has("z1") && has("z2") && used.iter().all(|v| v == "z1" || v == "z2") {
        return Ok(("z1".into(), "z2".into()));
    }
    if vars.len() == 2 {
        return Ok((vars[0].clone(), vars[1].clone()));
    }
    Err(Error::invalid("cannot tell which two variables the binary form uses"))
}

fn univariate(ring: &PolyRing, coeffs: &[Rational]) -> Poly {
    let t = ring.var("t");
    let mut p = ring.zero();
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            p = &p + &t.pow(k as u32).scale(c);
        }
    }
    p
}

/// Low-to-high coefficients of a univariate polynomial.
fn coefficients(p: &Poly) -> Vec<Rational> {
    let d = p.total_degree().unwrap_or(0);
    (0..=d).map(|k| p.coeff(&[k])).collect()
}

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.lcm(b)
}

/// Small positive divisors; `None` when the value is too large to factor by
/// trial division.
fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return Some(vec![]);
    }
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

/// Candidates `±p/q` from the rational root theorem, plus 0 when the
/// constant term vanishes.
fn rational_root_candidates(coeffs: &[Rational]) -> Vec<Rational> {
    let mut c: Vec<Rational> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    let mut out = Vec::new();
    if c.len() <= 1 {
        return out;
    }
    if c[0].is_zero() {
        out.push(Rational::zero());
    }
    let lo = c.iter().position(|x| !x.is_zero()).expect("nonzero");
    let den = c.iter().fold(BigInt::one(), |acc, x| lcm(&acc, x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect();
    let (Some(ps), Some(qs)) = (divisors(&ints[lo]), divisors(ints.last().expect("nonempty"))) else {
        return out;
    };
    let mut seen: Vec<Rational> = Vec::new();
    for p in &ps {
        for q in &qs {
            for s in [1i64, -1] {
                let r = Rational::new(BigInt::from(*p) * s, BigInt::from(*q));
                if !seen.contains(&r) {
                    seen.push(r);
                }
            }
        }
    }
    seen.sort();
    out.extend(seen);
    out
}

/// Yun's algorithm; returns `(factor, multiplicity)` with non-constant
/// square-free factors.
fn square_free_decomposition(p: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let dp = p.derivative("t");
    let a0 = p.gcd(&dp);
    let mut b = p.div_exact(&a0).expect("gcd divides");
    let mut c = dp.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative("t");
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.div_exact(&a).expect("gcd divides");
        c = d.div_exact(&a).expect("gcd divides");
        d = &c - &b.derivative("t");
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn aberth_roots(c: &[f64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    if n == 0 {
        return vec![];
    }
    let lead = c[n];
    let monic: Vec<f64> = c.iter().map(|x| x / lead).collect();
    // Cauchy bound for the initial circle.
    let radius = 1.0 + monic[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(&monic, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            z[i] -= w;
            moved = moved.max(w.norm() / (1.0 + z[i].norm()));
        }
        if moved < 1e-16 {
            break;
        }
    }
    z
}

/// A few Newton steps on the square-free factor, keeping the step only when
/// it lowers the residual of the full polynomial.
fn newton_polish(full: &[f64], factor: &[f64], mut z: Complex64) -> Complex64 {
    for _ in 0..4 {
        let (p, dp) = horner(factor, z);
        if dp.norm() == 0.0 {
            break;
        }
        let cand = z - p / dp;
        if relative_residual(full, cand) <= relative_residual(full, z) {
            z = cand;
        } else {
            break;
        }
    }
    z
}

/// `|g(z)| / Σ|aₖ||z|ᵏ`.
pub fn relative_residual(c: &[f64], z: Complex64) -> f64 {
    let (p, _) = horner(c, z);
    let scale: f64 = c
        .iter()
        .enumerate()
        .map(|(k, a)| a.abs() * z.norm().powi(k as i32))
        .sum();
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sheet {
    Plus,
    Minus,
}

impl Sheet {
    pub fn flip(self) -> Sheet {
        match self {
            Sheet::Plus => Sheet::Minus,
            Sheet::Minus => Sheet::Plus,
        }
    }
}

/// A point of the double cover `C → P¹`: a base point and a sheet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverPoint {
    base: (Rational, Rational),
    sheet: Sheet,
}

impl CoverPoint {
    /// The base point is normalized so its first nonzero coordinate is 1.
    pub fn new(base: (Rational, Rational), sheet: Sheet) -> Result<Self> {
        let (a, b) = base;
        let base = if !a.is_zero() {
            (Rational::one(), &b / &a)
        } else if !b.is_zero() {
            (Rational::zero(), Rational::one())
        } else {
            return Err(Error::invalid("base point (0, 0) is not a point of P¹"));
        };
        Ok(CoverPoint { base, sheet })
    }

    pub fn base(&self) -> &(Rational, Rational) {
        &self.base
    }

    pub fn sheet(&self) -> Sheet {
        self.sheet
    }

    /// The sheet-exchanging involution σ.
    pub fn sigma(&self) -> CoverPoint {
        CoverPoint {
            base: self.base.clone(),
            sheet: self.sheet.flip(),
        }
    }

    fn key(&self) -> (Rational, Rational, Sheet) {
        (self.base.0.clone(), self.base.1.clone(), self.sheet)
    }
}

impl fmt::Display for CoverPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sheet {
            Sheet::Plus => '+',
            Sheet::Minus => '-',
        };
        write!(
            f,
            "[{}:{}]{}",
            rational::format(&self.base.0),
            rational::format(&self.base.1),
            s
        )
    }
}

/// An unordered triple (kept sorted).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triple([CoverPoint; 3]);

impl Triple {
    pub fn new(mut pts: [CoverPoint; 3]) -> Self {
        pts.sort_by_key(CoverPoint::key);
        Triple(pts)
    }

    pub fn points(&self) -> &[CoverPoint; 3] {
        &self.0
    }

    fn key(&self) -> Vec<(Rational, Rational, Sheet)> {
        self.0.iter().map(CoverPoint::key).collect()
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// `(p,q,r), (p,σq,σr), (σp,q,σr), (σp,σq,r)`, sorted.
pub fn atiyah_triples(p: &CoverPoint, q: &CoverPoint, r: &CoverPoint) -> Vec<Triple> {
    let mut out = vec![
        Triple::new([p.clone(), q.clone(), r.clone()]),
        Triple::new([p.clone(), q.sigma(), r.sigma()]),
        Triple::new([p.sigma(), q.clone(), r.sigma()]),
        Triple::new([p.sigma(), q.sigma(), r.clone()]),
    ];
    out.sort_by(|a, b| a.key().cmp(&b.key()).then(Ordering::Equal));
    out
}

/// The two constants determining the genus-2 net; `λ₃ = λ₁λ₂/4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus2Data {
    lambda1: Rational,
    lambda2: Rational,
}

impl Genus2Data {
    pub fn new(lambda1: Rational, lambda2: Rational) -> Result<Self> {
        if lambda1.is_zero() || lambda2.is_zero() {
            return Err(Error::invalid(
                "λ₁ and λ₂ must be nonzero for a very stable bundle",
            ));
        }
        Ok(Genus2Data { lambda1, lambda2 })
    }

    pub fn lambda1(&self) -> &Rational {
        &self.lambda1
    }

    pub fn lambda2(&self) -> &Rational {
        &self.lambda2
    }

    pub fn lambda3(&self) -> Rational {
        &self.lambda1 * &self.lambda2 / rational::int(4)
    }
}

pub const NET_VARS: [&str; 3] = ["x1", "x2", "x3"];

/// `(x₁ + z·x₂)² + x₃·z·(λ₁x₁ + λ₂x₂ + λ₁λ₂x₃/4)` in `x1, x2, x3, z`.
pub fn trace_square(d: &Genus2Data) -> Poly {
    let r = PolyRing::new(["x1", "x2", "x3", "z"]);
    let (x1, x2, x3, z) = (r.var("x1"), r.var("x2"), r.var("x3"), r.var("z"));
    let inner = &(&x1.scale(d.lambda1()) + &x2.scale(d.lambda2())) + &x3.scale(&d.lambda3());
    &(&x1 + &(&z * &x2)).pow(2) + &(&(&x3 * &z) * &inner)
}

/// The net spanned by the coefficients of `1`, `z²`, `z` in
/// [`trace_square`], in that order.
pub fn higgs_net(d: &Genus2Data) -> Result<QuadricSystem> {
    let ts = trace_square(d);
    let forms = [0, 2, 1]
        .iter()
        .map(|&k| {
            let c = ts.coefficient_of("z", k)?;
            QuadForm::from_poly(&c, &NET_VARS)
        })
        .collect::<Result<Vec<_>>>()?;
    QuadricSystem::with_default_params(forms)
}

/// The net ⟨x², y², yz⟩ attached to a bundle with a nilpotent Higgs field.
pub fn higgs_net_nilpotent() -> QuadricSystem {
    let r = PolyRing::new(["x", "y", "z"]);
    let forms = ["x^2", "y^2", "y*z"]
        .iter()
        .map(|s| QuadForm::from_poly(&r.parse(s).expect("literal"), &["x", "y", "z"]).expect("quadratic"))
        .collect();
    QuadricSystem::with_default_params(forms).expect("three forms")
}

#[derive(Clone, Debug)]
pub struct NetNormalization {
    /// Variable change `x = T·y`.
    pub t: RatMatrix,
    /// Parameter change: new form `j` is `Σₖ S[j][k]·oldₖ`.
    pub s: RatMatrix,
    /// Scalars of the diagonal forms `y₁²`, `y₂²`, `(λ₁λ₂/4)·y₃²`.
    pub diagonal: [Rational; 3],
    /// Coefficients of `x₁²`, `x₂²` left after completing the square.
    pub corrections: [Rational; 2],
    /// `x₃ + (2/λ₁λ₂)(λ₁x₁ + λ₂x₂)`.
    pub completed_linear_form: Poly,
    pub normalized: QuadricSystem,
}

/// Completes the square in the third basis conic and moves the net to
/// three squares of independent linear forms.
pub fn normalize_net(net: &QuadricSystem, d: &Genus2Data) -> Result<NetNormalization> {
    if *net != higgs_net(d)? {
        return Err(Error::invalid("net does not come from the given (λ₁, λ₂)"));
    }
    let (l1, l2) = (d.lambda1(), d.lambda2());
    let l3 = d.lambda3();
    let r = PolyRing::new(NET_VARS);
    let lin = &r.var("x3")
        + &(&r.var("x1").scale(l1) + &r.var("x2").scale(l2))
            .scale(&(rational::int(2) / (l1 * l2)));
    let c1 = net.forms()[2].to_poly();
    let leftover = &c1 - &lin.pow(2).scale(&l3);
    let corrections = [
        leftover.coeff_of(&[("x1", 2)]),
        leftover.coeff_of(&[("x2", 2)]),
    ];
    let reassembled = &r.var("x1").pow(2).scale(&corrections[0]) + &r.var("x2").pow(2).scale(&corrections[1]);
    if leftover != reassembled {
        return Err(Error::Internal("completing the square left cross terms".into()));
    }
    let s = RatMatrix::from_rows(vec![
        vec![Rational::one(), Rational::zero(), Rational::zero()],
        vec![Rational::zero(), Rational::one(), Rational::zero()],
        vec![-corrections[0].clone(), -corrections[1].clone(), Rational::one()],
    ])?;
    // y₃ = x₃ + (2/λ₂)x₁ + (2/λ₁)x₂, so x₃ = y₃ − (2/λ₂)y₁ − (2/λ₁)y₂.
    let two = rational::int(2);
    let t = RatMatrix::from_rows(vec![
        vec![Rational::one(), Rational::zero(), Rational::zero()],
        vec![Rational::zero(), Rational::one(), Rational::zero()],
        vec![-(&two / l2), -(&two / l1), Rational::one()],
    ])?;
    let moved = net.apply_basis_change(&t, &s)?;
    let y_vars: Vec<String> = ["y1", "y2", "y3"].map(String::from).to_vec();
    let normalized = QuadricSystem::new(
        moved
            .forms()
            .iter()
            .map(|f| QuadForm::new(y_vars.clone(), f.gram().clone()))
            .collect::<Result<_>>()?,
        moved.params().to_vec(),
    )?;
    let mut diagonal: [Rational; 3] = std::array::from_fn(|_| Rational::zero());
    for (k, f) in normalized.forms().iter().enumerate() {
        let g = f
            .rational_gram()
            .ok_or_else(|| Error::Internal("normalized form is not rational".into()))?;
        for i in 0..3 {
            for j in 0..3 {
                let expect_nonzero = i == k && j == k;
                if g[(i, j)].is_zero() == expect_nonzero {
                    return Err(Error::Internal(format!(
                        "normalized form {k} is not a multiple of y{}²",
                        k + 1
                    )));
                }
            }
        }
        diagonal[k] = g[(k, k)].clone();
    }
    Ok(NetNormalization {
        t,
        s,
        diagonal,
        corrections,
        completed_linear_form: lin,
        normalized,
    })
}

/// Substitution map for [`NetNormalization::t`] in polynomial form
/// (`x₁ ↦ y₁`, …), used to cross-check the Gram computation.
pub fn normalization_substitution(n: &NetNormalization) -> HashMap<String, Poly> {
    let y = PolyRing::new(["y1", "y2", "y3"]);
    NET_VARS
        .iter()
        .enumerate()
        .map(|(i, v)| (v.to_string(), y.linear(&n.t.row(i))))
        .collect()
}
