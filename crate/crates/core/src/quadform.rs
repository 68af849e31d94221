//! Quadratic forms as symmetric Gram matrices and linear systems of them.
//!
//! Convention: `q(x) = Σ gram[i][j]·xᵢ·xⱼ`, so the coefficient of `xᵢxⱼ`
//! (i ≠ j) in the polynomial is `2·gram[i][j]`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{PolyMatrix, RatMatrix};
use crate::poly::{Poly, PolyRing};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadForm {
    vars: Vec<String>,
    gram: PolyMatrix,
}

impl QuadForm {
    pub fn new(vars: Vec<String>, gram: PolyMatrix) -> Result<Self> {
        if gram.rows() != vars.len() || gram.cols() != vars.len() {
            return Err(Error::dim(format!(
                "{} variables but a {}x{} Gram matrix",
                vars.len(),
                gram.rows(),
                gram.cols()
            )));
        }
        if !gram.is_symmetric() {
            return Err(Error::invalid("Gram matrix is not symmetric"));
        }
        Ok(QuadForm { vars, gram })
    }

    pub fn from_rational(vars: &[&str], gram: &RatMatrix) -> Result<Self> {
        let ring = PolyRing::new(vars.iter().copied());
        Self::new(
            vars.iter().map(|s| s.to_string()).collect(),
            gram.to_poly_matrix(&ring),
        )
    }

    /// Gram matrix of a polynomial homogeneous of degree 2 in `vars`.
    /// Other variables may occur and end up in the entries.
    pub fn from_poly(q: &Poly, vars: &[&str]) -> Result<Self> {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let ring = q.ring();
        let idx: Vec<Option<usize>> = names.iter().map(|n| ring.index(n)).collect();
        if !q.is_zero() && q.homogeneous_degree_in(&names) != Some(2) {
            return Err(Error::NotHomogeneous { degree: 2 });
        }
        let mut padded: Vec<String> = ring.vars().to_vec();
        for n in &names {
            if !padded.contains(n) {
                padded.push(n.clone());
            }
        }
        let full = PolyRing::new(padded);
        let n = names.len();
        let mut gram = PolyMatrix::zeros(&full, n, n);
        let half = rational::frac(1, 2);
        for (m, c) in q.terms() {
            let mut hit: Vec<usize> = Vec::new();
            let mut rest = m.exps().to_vec();
            for (k, id) in idx.iter().enumerate() {
                if let Some(i) = id {
                    for _ in 0..rest[*i] {
                        hit.push(k);
                    }
                    rest[*i] = 0;
                }
            }
            let aux = ring
                .monomial(crate::poly::Monomial::new(rest), c.clone())
                .with_vars(&full)?;
            let (a, b) = (hit[0], hit[1]);
            if a == b {
                let e = gram.get(a, a) + &aux;
                gram.set(a, a, e);
            } else {
                let h = aux.scale(&half);
                let e = gram.get(a, b) + &h;
                gram.set(a, b, e.clone());
                gram.set(b, a, e);
            }
        }
        Ok(QuadForm { vars: names, gram })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn gram(&self) -> &PolyMatrix {
        &self.gram
    }

    /// The gram matrix as rationals, if every entry is constant.
    pub fn rational_gram(&self) -> Option<RatMatrix> {
        self.gram.to_rational()
    }

    fn rational_or_err(&self) -> Result<RatMatrix> {
        self.rational_gram()
            .ok_or_else(|| Error::invalid("quadratic form has non-constant entries"))
    }

    /// `Σ gram[i][j]·xᵢ·xⱼ` as a polynomial.
    pub fn to_poly(&self) -> Poly {
        let base = self.gram.get(0, 0).ring();
        let mut names: Vec<String> = base.vars().to_vec();
        for v in &self.vars {
            if !names.contains(v) {
                names.push(v.clone());
            }
        }
        let ring = PolyRing::new(names);
        let x: Vec<Poly> = self.vars.iter().map(|v| ring.var(v)).collect();
        let mut acc = ring.zero();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let g = self.gram.get(i, j);
                if !g.is_zero() {
                    acc = &acc + &(&(g * &x[i]) * &x[j]);
                }
            }
        }
        acc
    }

    /// Value at a rational point (constant entries only).
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        let g = self.rational_or_err()?;
        if point.len() != self.dim() {
            return Err(Error::dim("point has wrong length"));
        }
        let gp = g.mul_vec(point);
        Ok(point
            .iter()
            .zip(&gp)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |s, t| s + t))
    }

    /// Symmetric bilinear form `B(u, v)` with `B(v, v) = q(v)`.
    pub fn bilinear(&self, u: &[Rational], v: &[Rational]) -> Result<Rational> {
        let g = self.rational_or_err()?;
        let gv = g.mul_vec(v);
        Ok(u.iter()
            .zip(&gv)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |s, t| s + t))
    }

    /// Restriction to the span of the columns of `basis`, as a form in
    /// the given new variable names.
    pub fn restrict(&self, basis: &RatMatrix, names: &[&str]) -> Result<QuadForm> {
        if basis.rows() != self.dim() || basis.cols() != names.len() {
            return Err(Error::dim("basis does not match form"));
        }
        Ok(QuadForm {
            vars: names.iter().map(|s| s.to_string()).collect(),
            gram: self.gram.congruence(basis)?,
        })
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rational_or_err()?.rank())
    }

    /// `(T, d)` with `Tᵀ·gram·T = diag(d)`, by symmetric Gaussian reduction.
    pub fn diagonalize_congruence(&self) -> Result<(RatMatrix, Vec<Rational>)> {
        diagonalize_congruence(&self.rational_or_err()?)
    }

    /// For a rank-one form returns `(c, ℓ)` with `q = c·ℓ²` and the first
    /// nonzero coefficient of `ℓ` equal to 1.
    pub fn is_rank_one(&self) -> Result<Option<(Rational, Poly)>> {
        let g = self.rational_or_err()?;
        if g.rank() != 1 {
            return Ok(None);
        }
        let n = self.dim();
        let k = (0..n)
            .find(|&i| !g[(i, i)].is_zero())
            .expect("rank-one symmetric matrix has a nonzero diagonal entry");
        let c = g[(k, k)].clone();
        let coeffs: Vec<Rational> = (0..n).map(|j| &g[(k, j)] / &c).collect();
        let lead = (0..n)
            .find(|&j| !coeffs[j].is_zero())
            .expect("row k is nonzero");
        let s = coeffs[lead].clone();
        let coeffs: Vec<Rational> = coeffs.iter().map(|a| a / &s).collect();
        let c = &c * &s * &s;
        let ring = PolyRing::new(self.vars.clone());
        Ok(Some((c, ring.linear(&coeffs))))
    }
}

/// Symmetric Gaussian reduction. At step k: keep k if row k is already
/// zero; pivot on the first nonzero diagonal entry at or after k; if every
/// remaining diagonal entry is zero, replace `e_k` by `e_k + e_j`.
pub fn diagonalize_congruence(a: &RatMatrix) -> Result<(RatMatrix, Vec<Rational>)> {
    if !a.is_symmetric() {
        return Err(Error::invalid("matrix is not symmetric"));
    }
    let n = a.rows();
    let mut m = a.clone();
    let mut t = RatMatrix::identity(n);

    // col_i += c·col_j on T, and the matching congruence on M.
    fn add_col(m: &mut RatMatrix, t: &mut RatMatrix, i: usize, j: usize, c: &Rational) {
        let n = m.rows();
        for r in 0..n {
            let v = &t[(r, j)] * c;
            t[(r, i)] += v;
        }
        for r in 0..n {
            let v = &m[(j, r)] * c;
            m[(i, r)] += v;
        }
        for r in 0..n {
            let v = &m[(r, j)] * c;
            m[(r, i)] += v;
        }
    }

    fn swap(m: &mut RatMatrix, t: &mut RatMatrix, i: usize, j: usize) {
        let n = m.rows();
        for r in 0..n {
            let (a, b) = (t[(r, i)].clone(), t[(r, j)].clone());
            t[(r, i)] = b;
            t[(r, j)] = a;
        }
        for r in 0..n {
            let (a, b) = (m[(i, r)].clone(), m[(j, r)].clone());
            m[(i, r)] = b;
            m[(j, r)] = a;
        }
        for r in 0..n {
            let (a, b) = (m[(r, i)].clone(), m[(r, j)].clone());
            m[(r, i)] = b;
            m[(r, j)] = a;
        }
    }

    for k in 0..n {
        if (k..n).all(|j| m[(k, j)].is_zero()) {
            continue;
        }
        if m[(k, k)].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !m[(i, i)].is_zero()) {
                swap(&mut m, &mut t, k, i);
            } else {
                let j = (k + 1..n)
                    .find(|&j| !m[(k, j)].is_zero())
                    .expect("row k has a nonzero entry");
                add_col(&mut m, &mut t, k, j, &Rational::one());
            }
        }
        let piv = m[(k, k)].clone();
        debug_assert!(!piv.is_zero());
        for j in k + 1..n {
            if m[(k, j)].is_zero() {
                continue;
            }
            let c = -(&m[(k, j)] / &piv);
            add_col(&mut m, &mut t, j, k, &c);
        }
    }
    let d = (0..n).map(|i| m[(i, i)].clone()).collect();
    Ok((t, d))
}

/// `z₁·q₁ + … + z_m·q_m` over shared variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricSystem {
    forms: Vec<QuadForm>,
    params: Vec<String>,
}

impl QuadricSystem {
    pub fn new(forms: Vec<QuadForm>, params: Vec<String>) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::invalid("empty system of quadrics"));
        }
        if params.len() != forms.len() {
            return Err(Error::dim(format!(
                "{} forms but {} parameters",
                forms.len(),
                params.len()
            )));
        }
        let v = forms[0].vars();
        if forms.iter().any(|f| f.vars() != v) {
            return Err(Error::dim("forms do not share variables"));
        }
        Ok(QuadricSystem { forms, params })
    }

    /// Parameters named `z1..zm`.
    pub fn with_default_params(forms: Vec<QuadForm>) -> Result<Self> {
        let params = (1..=forms.len()).map(|i| format!("z{i}")).collect();
        Self::new(forms, params)
    }

    pub fn forms(&self) -> &[QuadForm] {
        &self.forms
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn vars(&self) -> &[String] {
        self.forms[0].vars()
    }

    pub fn dim(&self) -> usize {
        self.forms[0].dim()
    }

    /// `Σ zᵢ·gramᵢ` with the parameters as polynomial variables.
    pub fn combined(&self) -> PolyMatrix {
        let ring = PolyRing::new(self.params.clone());
        let mut acc: Option<PolyMatrix> = None;
        for (f, z) in self.forms.iter().zip(&self.params) {
            let term = f.gram().scale(&ring.var(z));
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term).expect("forms have equal size"),
            });
        }
        acc.expect("non-empty system")
    }

    /// `det(Σ zᵢ·gramᵢ)`.
    pub fn discriminant(&self) -> Result<Poly> {
        self.combined().det()
    }

    pub fn combination_at(&self, point: &[Rational]) -> Result<RatMatrix> {
        if point.len() != self.forms.len() {
            return Err(Error::dim("parameter point has wrong length"));
        }
        let n = self.dim();
        let mut acc = RatMatrix::zeros(n, n);
        for (f, z) in self.forms.iter().zip(point) {
            let g = f.rational_or_err()?;
            acc = acc.add(&g.scale(z))?;
        }
        Ok(acc)
    }

    pub fn rank_at(&self, point: &[Rational]) -> Result<usize> {
        if point.iter().all(Zero::is_zero) {
            return Err(Error::invalid("parameter point is zero"));
        }
        Ok(self.combination_at(point)?.rank())
    }

    /// New forms `Tᵀ(Σₖ S[j][k]·gramₖ)T`.
    pub fn apply_basis_change(&self, t: &RatMatrix, s: &RatMatrix) -> Result<QuadricSystem> {
        let n = self.dim();
        let m = self.forms.len();
        if t.rows() != n || t.cols() != n || s.rows() != m || s.cols() != m {
            return Err(Error::dim("basis change matrices have wrong size"));
        }
        if t.det()?.is_zero() {
            return Err(Error::Singular("variable change T".into()));
        }
        if s.det()?.is_zero() {
            return Err(Error::Singular("parameter change S".into()));
        }
        let mut forms = Vec::with_capacity(m);
        for j in 0..m {
            let mut acc: Option<PolyMatrix> = None;
            for k in 0..m {
                if s[(j, k)].is_zero() {
                    continue;
                }
                let g = self.forms[k].gram();
                let ring = g.get(0, 0).ring();
                let term = g.scale(&ring.constant(s[(j, k)].clone()));
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term)?,
                });
            }
            let combined = acc.expect("invertible S has no zero row");
            forms.push(QuadForm {
                vars: self.vars().to_vec(),
                gram: combined.congruence(t)?,
            });
        }
        Ok(QuadricSystem {
            forms,
            params: self.params.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn xyz_net(polys: [&str; 3]) -> QuadricSystem {
        let r = PolyRing::new(["x", "y", "z"]);
        let forms = polys
            .iter()
            .map(|s| QuadForm::from_poly(&r.parse(s).unwrap(), &["x", "y", "z"]).unwrap())
            .collect();
        QuadricSystem::with_default_params(forms).unwrap()
    }

    #[test]
    fn gram_polarization() {
        let q = QuadForm::from_poly(&Poly::parse("x*y").unwrap(), &["x", "y"]).unwrap();
        let half = frac(1, 2);
        assert_eq!(
            q.rational_gram().unwrap(),
            RatMatrix::from_rows(vec![vec![int(0), half.clone()], vec![half, int(0)]]).unwrap()
        );
        let q = QuadForm::from_poly(&Poly::parse("x^2").unwrap(), &["x"]).unwrap();
        assert_eq!(q.rational_gram().unwrap(), RatMatrix::identity(1));
        assert!(QuadForm::from_poly(&Poly::parse("x^2 + x").unwrap(), &["x"]).is_err());
        assert!(QuadForm::from_poly(&Poly::parse("x*y*y").unwrap(), &["x", "y"]).is_err());
    }

    #[test]
    fn gram_of_bilinear_pairing_term() {
        let vars = ["x1", "x2", "x3", "y1", "y2", "y3"];
        let q = QuadForm::from_poly(&Poly::parse("x1*y1 + x2*y2 + x3*y3").unwrap(), &vars)
            .unwrap();
        let g = q.rational_gram().unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let expect = if i + 3 == j || j + 3 == i {
                    frac(1, 2)
                } else {
                    int(0)
                };
                assert_eq!(g[(i, j)], expect, "entry {i},{j}");
            }
        }
        assert_eq!(q.to_poly(), Poly::parse("x1*y1 + x2*y2 + x3*y3").unwrap());
    }

    #[test]
    fn gram_with_auxiliary_variables() {
        let r = PolyRing::new(["x", "y", "u"]);
        let q = r.parse("u*x^2 + 2*u*x*y - y^2").unwrap();
        let f = QuadForm::from_poly(&q, &["x", "y"]).unwrap();
        assert_eq!(f.gram().get(0, 1), &r.parse("u").unwrap());
        assert_eq!(f.to_poly(), q);
    }

    #[test]
    fn discriminants_of_nets() {
        let d = xyz_net(["x^2", "y^2", "z^2"]).discriminant().unwrap();
        assert_eq!(d, Poly::parse("z1*z2*z3").unwrap());
        let d = xyz_net(["x^2", "y^2", "y*z"]).discriminant().unwrap();
        assert_eq!(d, Poly::parse("-1/4*z1*z3^2").unwrap());
        assert!(QuadricSystem::with_default_params(vec![]).is_err());
    }

    #[test]
    fn diagonal_pencil_discriminant() {
        let vars = ["a", "b", "c", "d", "e", "f"];
        let cs: Vec<Rational> = [1, -2, 3, 5, -7, 11].iter().map(|&c| int(c)).collect();
        let q1 = QuadForm::from_rational(&vars, &RatMatrix::identity(6)).unwrap();
        let q2 = QuadForm::from_rational(&vars, &RatMatrix::diagonal(&cs)).unwrap();
        let sys = QuadricSystem::with_default_params(vec![q1, q2]).unwrap();
        let r = PolyRing::new(["z1", "z2"]);
        let mut expected = r.int(1);
        for c in &cs {
            expected = &expected * &(&r.var("z1") + &r.var("z2").scale(c));
        }
        assert_eq!(sys.discriminant().unwrap(), expected);
        // At the root [-c : 1] the rank drops by one.
        assert_eq!(sys.rank_at(&[int(2), int(1)]).unwrap(), 5);
        assert_eq!(sys.rank_at(&[int(1), int(1)]).unwrap(), 6);
    }

    #[test]
    fn rank_at_points() {
        let net = xyz_net(["x^2", "y^2", "z^2"]);
        assert_eq!(net.rank_at(&[int(1), int(1), int(1)]).unwrap(), 3);
        assert_eq!(net.rank_at(&[int(1), int(0), int(0)]).unwrap(), 1);
        assert!(net.rank_at(&[int(0), int(0), int(0)]).is_err());
    }

    #[test]
    fn congruence_of_hyperbolic_plane() {
        let q = QuadForm::from_poly(&Poly::parse("x*y").unwrap(), &["x", "y"]).unwrap();
        let (t, d) = q.diagonalize_congruence().unwrap();
        assert_eq!(d, vec![int(1), frac(-1, 4)]);
        let g = q.rational_gram().unwrap();
        let dd = t.transpose().mul(&g).unwrap().mul(&t).unwrap();
        assert_eq!(dd, RatMatrix::diagonal(&d));
        assert!(!t.det().unwrap().is_zero());
    }

    #[test]
    fn congruence_fixes_diagonal_input() {
        let g = RatMatrix::diagonal(&[int(0), int(3), frac(-1, 2)]);
        let (t, d) = diagonalize_congruence(&g).unwrap();
        assert_eq!(t, RatMatrix::identity(3));
        assert_eq!(d, vec![int(0), int(3), frac(-1, 2)]);
    }

    #[test]
    fn congruence_of_rank_one() {
        let q = QuadForm::from_poly(&Poly::parse("(x + y)^2").unwrap(), &["x", "y"]).unwrap();
        let (_, d) = q.diagonalize_congruence().unwrap();
        assert_eq!(d, vec![int(1), int(0)]);
    }

    #[test]
    fn rank_one_detection() {
        let q = QuadForm::from_poly(&Poly::parse("x^2 + 2*x*y + y^2").unwrap(), &["x", "y"])
            .unwrap();
        let (c, l) = q.is_rank_one().unwrap().unwrap();
        assert_eq!(c, int(1));
        assert_eq!(l, Poly::parse("x + y").unwrap());
        let q = QuadForm::from_poly(&Poly::parse("x^2 + y^2").unwrap(), &["x", "y"]).unwrap();
        assert!(q.is_rank_one().unwrap().is_none());
        let q = QuadForm::from_poly(&Poly::parse("8*y^2 - 4*x*y + 1/2*x^2").unwrap(), &["x", "y"])
            .unwrap();
        let (c, l) = q.is_rank_one().unwrap().unwrap();
        assert_eq!(c, frac(1, 2));
        assert_eq!(l, Poly::parse("x - 4*y").unwrap());
    }

    #[test]
    fn basis_change_identity_and_permutation() {
        let net = xyz_net(["x^2", "y^2", "z^2"]);
        let id = RatMatrix::identity(3);
        assert_eq!(net.apply_basis_change(&id, &id).unwrap(), net);
        let perm = RatMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let moved = net.apply_basis_change(&id, &perm).unwrap();
        assert_eq!(moved.forms()[0], net.forms()[1]);
        assert_eq!(moved.discriminant().unwrap(), net.discriminant().unwrap());
        let sing = RatMatrix::from_ints(&[&[1, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert!(matches!(
            net.apply_basis_change(&sing, &id),
            Err(Error::Singular(_))
        ));
        assert!(net.apply_basis_change(&id, &sing).is_err());
    }
}
