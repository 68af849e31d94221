//! Sparse multivariate polynomials over ℚ.
//!
//! A [`Poly`] carries its own ordered variable list. Terms are kept in a
//! `BTreeMap` keyed by [`Monomial`], whose ordering is graded lexicographic
//! with respect to that variable list, so the map is always canonical: no zero
//! coefficients, no duplicate exponents. Binary operations on polynomials with
//! different variable lists work over the union (left list first, then the
//! new names of the right operand in order).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An ordered set of variable names; a factory for polynomials over it.
#[derive(Clone, Debug)]
pub struct PolyRing {
    vars: Arc<[String]>,
}

impl PolyRing {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = names.into_iter().map(Into::into).collect();
        PolyRing { vars: vars.into() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn zero(&self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(&self, c: Rational) -> Poly {
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(self.nvars()), c);
        }
        p
    }

    pub fn int(&self, n: i64) -> Poly {
        self.constant(rational::int(n))
    }

    /// The variable `name`. Panics if `name` is not in the ring; use
    /// [`PolyRing::try_var`] for untrusted names.
    pub fn var(&self, name: &str) -> Poly {
        self.try_var(name)
            .unwrap_or_else(|_| panic!("variable `{name}` not in ring {:?}", self.vars))
    }

    pub fn try_var(&self, name: &str) -> Result<Poly> {
        let i = self
            .index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.var_at(i))
    }

    pub fn var_at(&self, i: usize) -> Poly {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial(Monomial(e), Rational::one())
    }

    pub fn monomial(&self, m: Monomial, c: Rational) -> Poly {
        assert_eq!(m.0.len(), self.nvars());
        let mut p = self.zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Linear form `Σ coeffs[i]·vars[i]`.
    pub fn linear(&self, coeffs: &[Rational]) -> Poly {
        let mut p = self.zero();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; self.nvars()];
                e[i] = 1;
                p.terms.insert(Monomial(e), c.clone());
            }
        }
        p
    }

    pub fn parse(&self, s: &str) -> Result<Poly> {
        Parser::new(s, Some(self.clone())).parse_all()
    }
}

#[derive(Clone)]
pub struct Poly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

fn same_vars(a: &Arc<[String]>, b: &Arc<[String]>) -> bool {
    Arc::ptr_eq(a, b) || a[..] == b[..]
}

fn union_vars(a: &Arc<[String]>, b: &Arc<[String]>) -> Arc<[String]> {
    let mut out: Vec<String> = a.to_vec();
    for v in b.iter() {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out.into()
}

impl Poly {
    /// Parses with variables collected in order of first appearance.
    pub fn parse(s: &str) -> Result<Poly> {
        Parser::new(s, None).parse_all()
    }

    pub fn ring(&self) -> PolyRing {
        PolyRing {
            vars: self.vars.clone(),
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            Some(i) => self.degree_at(i),
            None => 0,
        }
    }

    fn degree_at(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    fn var_index(&self, var: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == var)
    }

    /// Names of the variables that actually occur.
    pub fn used_vars(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .map(|i| self.vars[i].clone())
            .collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of every term counted only in the listed variables, if all
    /// terms agree.
    pub fn homogeneous_degree_in(&self, names: &[String]) -> Option<u32> {
        let idx: Vec<usize> = names.iter().filter_map(|n| self.var_index(n)).collect();
        let mut degs = self
            .terms
            .keys()
            .map(|m| idx.iter().map(|&i| m.0[i]).sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of a monomial given as exponents over this polynomial's
    /// variable list.
    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial `Π name^e` for the listed pairs.
    pub fn coeff_of(&self, powers: &[(&str, u32)]) -> Rational {
        let mut e = vec![0; self.vars.len()];
        for (name, k) in powers {
            match self.var_index(name) {
                Some(i) => e[i] = *k,
                None if *k == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.coeff(&e)
    }

    /// Re-expresses the polynomial over `vars`; fails if an occurring
    /// variable is missing there.
    pub fn with_vars(&self, ring: &PolyRing) -> Result<Poly> {
        self.embed(&ring.vars)
    }

    fn embed(&self, target: &Arc<[String]>) -> Result<Poly> {
        if same_vars(&self.vars, target) {
            return Ok(Poly {
                vars: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] = k,
                    None => return Err(Error::UnknownVariable(self.vars[i].clone())),
                }
            }
            terms.insert(Monomial(e), c.clone());
        }
        Ok(Poly {
            vars: target.clone(),
            terms,
        })
    }

    fn aligned(a: &Poly, b: &Poly) -> (Arc<[String]>, Poly, Poly) {
        if same_vars(&a.vars, &b.vars) {
            return (a.vars.clone(), a.clone(), b.clone());
        }
        let u = union_vars(&a.vars, &b.vars);
        let ea = a.embed(&u).expect("union contains all variables");
        let eb = b.embed(&u).expect("union contains all variables");
        (u, ea, eb)
    }

    fn add_ref(&self, other: &Poly) -> Poly {
        if !same_vars(&self.vars, &other.vars) {
            let (_, a, b) = Poly::aligned(self, other);
            return a.add_ref(&b);
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }

    fn in_ring<'a>(&'a self, ring: &PolyRing) -> std::borrow::Cow<'a, Poly> {
        if same_vars(&self.vars, &ring.vars) {
            std::borrow::Cow::Borrowed(self)
        } else {
            std::borrow::Cow::Owned(self.embed(&ring.vars).expect("ring contains the variables"))
        }
    }

    /// `Σ ±aₖ·bₖ` accumulated in one pass; `true` marks a subtracted term.
    pub fn sum_of_products(ring: &PolyRing, terms: &[(bool, &Poly, &Poly)]) -> Poly {
        let terms: Vec<(bool, std::borrow::Cow<'_, Poly>, std::borrow::Cow<'_, Poly>)> = terms
            .iter()
            .map(|&(neg, a, b)| (neg, a.in_ring(ring), b.in_ring(ring)))
            .collect();
        let integral = terms
            .iter()
            .all(|(_, a, b)| a.terms.values().chain(b.terms.values()).all(|c| c.is_integer()));
        let terms: BTreeMap<Monomial, Rational> = if integral {
            // Integer arithmetic skips the gcd normalization of every step.
            let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
            for (neg, a, b) in &terms {
                for (ma, ca) in &a.terms {
                    for (mb, cb) in &b.terms {
                        let t = ca.numer() * cb.numer();
                        let e = acc.entry(ma.mul(mb)).or_default();
                        if *neg {
                            *e -= t;
                        } else {
                            *e += t;
                        }
                    }
                }
            }
            acc.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m, Rational::from_integer(c)))
                .collect()
        } else {
            let mut acc: HashMap<Monomial, Rational> = HashMap::new();
            for (neg, a, b) in &terms {
                for (ma, ca) in &a.terms {
                    for (mb, cb) in &b.terms {
                        let t = ca * cb;
                        let e = acc.entry(ma.mul(mb)).or_insert_with(Rational::zero);
                        if *neg {
                            *e -= t;
                        } else {
                            *e += t;
                        }
                    }
                }
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        };
        Poly {
            vars: ring.vars.clone(),
            terms,
        }
    }

    fn mul_ref(&self, other: &Poly) -> Poly {
        if !same_vars(&self.vars, &other.vars) {
            let (_, a, b) = Poly::aligned(self, other);
            return a.mul_ref(&b);
        }
        Poly::sum_of_products(&self.ring(), &[(false, self, other)])
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return self.ring().zero();
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = self.ring().int(1);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Divides by the leading coefficient (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// The polynomial `q` with `self = Σ_k q_k·var^k` and `q = q_k`.
    pub fn coefficient_of(&self, var: &str, k: u32) -> Result<Poly> {
        let i = self
            .var_index(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        Ok(self.coefficient_at(i, k))
    }

    fn coefficient_at(&self, i: usize, k: u32) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] == k)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e[i] = 0;
                (Monomial(e), c.clone())
            })
            .collect();
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn derivative(&self, var: &str) -> Poly {
        let Some(i) = self.var_index(var) else {
            return self.ring().zero();
        };
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[i] > 0)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                let k = e[i];
                e[i] -= 1;
                (Monomial(e), c * rational::int(k as i64))
            })
            .collect();
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Replaces variables by polynomials. Keys must be variables of `self`.
    pub fn substitute(&self, images: &HashMap<String, Poly>) -> Result<Poly> {
        for name in images.keys() {
            if self.var_index(name).is_none() {
                return Err(Error::UnknownVariable(name.clone()));
            }
        }
        let mut target = self.vars.clone();
        for img in images.values() {
            if !same_vars(&target, &img.vars) {
                target = union_vars(&target, &img.vars);
            }
        }
        let ring = PolyRing {
            vars: target.clone(),
        };
        let base: Vec<Poly> = self
            .vars
            .iter()
            .map(|v| match images.get(v) {
                Some(p) => p.embed(&target).expect("target is a union"),
                None => ring.var(v),
            })
            .collect();
        let mut powers: HashMap<(usize, u32), Poly> = HashMap::new();
        let mut out = ring.zero();
        for (m, c) in &self.terms {
            let mut t = ring.constant(c.clone());
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = powers
                    .entry((i, k))
                    .or_insert_with(|| base[i].pow(k))
                    .clone();
                t = &t * &pw;
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Substitution where every image is constant or a homogeneous linear
    /// form.
    pub fn substitute_linear(&self, images: &HashMap<String, Poly>) -> Result<Poly> {
        for (name, img) in images {
            if img.total_degree().unwrap_or(0) > 1 || !img.is_homogeneous() {
                return Err(Error::invalid(format!(
                    "image of `{name}` is not homogeneous of degree <= 1"
                )));
            }
        }
        self.substitute(images)
    }

    /// Full evaluation; `point` is indexed like [`Poly::vars`].
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(Error::dim(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&m.0) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Evaluation at named values; every occurring variable must be given.
    pub fn evaluate_named(&self, values: &[(&str, Rational)]) -> Result<Rational> {
        let mut point = vec![Rational::zero(); self.vars.len()];
        let used = self.used_vars();
        for u in &used {
            if !values.iter().any(|(n, _)| n == u) {
                return Err(Error::invalid(format!("no value for `{u}`")));
            }
        }
        for (n, v) in values {
            if let Some(i) = self.var_index(n) {
                point[i] = v.clone();
            }
        }
        self.evaluate(&point)
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if !same_vars(&self.vars, &d.vars) {
            let (_, a, b) = Poly::aligned(self, d);
            return a.div_exact(&b);
        }
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let ring = self.ring();
        let mut r = self.clone();
        let mut q = ring.zero();
        while let Some((rm, rc)) = r.leading_term() {
            if !dm.divides(rm) {
                return None;
            }
            let t = ring.monomial(rm.div(&dm), rc / &dc);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// `q` with `q² = self`, leading coefficient positive; `None` when no
    /// such rational polynomial exists.
    pub fn perfect_square_root(&self) -> Option<Poly> {
        let ring = self.ring();
        let Some((lm, lc)) = self.leading_term() else {
            return Some(ring.zero());
        };
        if lm.0.iter().any(|e| e % 2 == 1) {
            return None;
        }
        let half = Monomial(lm.0.iter().map(|e| e / 2).collect());
        let c = rational::sqrt_exact(lc)?;
        let two_c = &c * rational::int(2);
        let mut q = ring.monomial(half.clone(), c);
        loop {
            let r = self - &(&q * &q);
            let Some((rm, rc)) = r.leading_term() else {
                return Some(q);
            };
            if !half.divides(rm) {
                return None;
            }
            let tm = rm.div(&half);
            if tm >= half {
                return None;
            }
            q = &q + &ring.monomial(tm, rc / &two_c);
        }
    }

    /// Monic greatest common divisor (zero only when both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (_, a, b) = Poly::aligned(self, other);
        gcd_rec(&a, &b).monic()
    }

    /// True when some non-constant factor occurs at least twice, detected
    /// as a non-constant `gcd(f, ∂f/∂x₁, …, ∂f/∂xₙ)`.
    pub fn has_repeated_factor(&self) -> bool {
        if self.is_constant() {
            return false;
        }
        let mut g = self.clone();
        for v in self.used_vars() {
            g = g.gcd(&self.derivative(&v));
            if g.is_constant() {
                return false;
            }
        }
        !g.is_constant()
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return a.ring().int(1);
    }
    let n = a.vars.len();
    let v = (0..n)
        .find(|&i| a.degree_at(i) > 0 || b.degree_at(i) > 0)
        .expect("non-constant polynomial has a variable");
    if a.degree_at(v) == 0 {
        return gcd_rec(a, &content(b, v));
    }
    if b.degree_at(v) == 0 {
        return gcd_rec(&content(a, v), b);
    }
    let ca = content(a, v);
    let cb = content(b, v);
    let c = gcd_rec(&ca, &cb);
    let mut f = a.div_exact(&ca).expect("content divides");
    let mut g = b.div_exact(&cb).expect("content divides");
    if f.degree_at(v) < g.degree_at(v) {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = pseudo_remainder(&f, &g, v);
        f = g;
        g = if r.is_zero() { r } else { primitive_part(&r, v) };
    }
    &c * &primitive_part(&f, v)
}

/// gcd of the coefficients of `p` viewed as a polynomial in variable `v`.
fn content(p: &Poly, v: usize) -> Poly {
    let mut g = p.ring().zero();
    for k in 0..=p.degree_at(v) {
        let ck = p.coefficient_at(v, k);
        if ck.is_zero() {
            continue;
        }
        g = gcd_rec(&g, &ck);
        if g.is_constant() {
            return p.ring().int(1);
        }
    }
    g.monic()
}

fn primitive_part(p: &Poly, v: usize) -> Poly {
    p.div_exact(&content(p, v)).expect("content divides").monic()
}

fn pseudo_remainder(f: &Poly, g: &Poly, v: usize) -> Poly {
    let n = g.degree_at(v);
    let lg = g.coefficient_at(v, n);
    let ring = f.ring();
    let mut r = f.clone();
    while !r.is_zero() && r.degree_at(v) >= n {
        let m = r.degree_at(v);
        let lr = r.coefficient_at(v, m);
        let mut e = vec![0; f.vars.len()];
        e[v] = m - n;
        let shift = ring.monomial(Monomial(e), Rational::one());
        r = &(&lg * &r) - &(&(&lr * &shift) * g);
    }
    r
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        if same_vars(&self.vars, &other.vars) {
            self.terms == other.terms
        } else {
            (self - other).is_zero()
        }
    }
}

impl Eq for Poly {}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                let f: fn(&Poly, &Poly) -> Poly = $body;
                f(self, rhs)
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_ref(b));
binop!(Sub, sub, |a, b| a.add_ref(&-b));
binop!(Mul, mul, |a, b| a.mul_ref(b));

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        self.vars[j].clone()
                    } else {
                        format!("{}^{}", self.vars[j], k)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", rational::format(&a))?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", rational::format(&a), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self} over {:?})", self.vars)
    }
}

/// Recursive-descent parser for `c*x^a*y^b + …`, with optional parentheses.
struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    ring: PolyRing,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, ring: Option<PolyRing>) -> Self {
        let ring = ring.unwrap_or_else(|| PolyRing::new(scan_identifiers(src)));
        Parser {
            src,
            bytes: src.as_bytes(),
            pos: 0,
            ring,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<Poly> {
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let p = self.sum()?;
        if self.peek().is_some() {
            return self.err(format!("unexpected `{}`", self.bytes[self.pos] as char));
        }
        Ok(p)
    }

    fn sum(&mut self) -> Result<Poly> {
        let mut acc = self.ring.zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            let t = self.product()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            first = false;
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected exponent");
        }
        self.src[start..self.pos]
            .parse()
            .or_else(|_| self.err("exponent out of range"))
    }

    fn factor(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                let k = self.exponent()?;
                Ok(inner.pow(k))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                self.digits();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    if !self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                        return self.err("expected denominator");
                    }
                    self.digits();
                }
                let text: String = self.src[start..self.pos]
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .collect();
                let at = start;
                let r = rational::parse(&text).map_err(|_| Error::Parse {
                    pos: at,
                    msg: format!("bad number `{text}`"),
                })?;
                let k = self.exponent()?;
                Ok(self.ring.constant(num_traits::pow(r, k as usize)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                let Some(i) = self.ring.index(name) else {
                    self.pos = start;
                    return self.err(format!("unknown variable `{name}`"));
                };
                let v = self.ring.var_at(i);
                let k = self.exponent()?;
                Ok(v.pow(k))
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn digits(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
    }
}

fn scan_identifiers(src: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let b = src.as_bytes();
    let mut i = 0;
    while i < b.len() {
        if b[i].is_ascii_alphabetic() || b[i] == b'_' {
            let s = i;
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            let name = &src[s..i];
            if !out.iter().any(|n| n == name) {
                out.push(name.to_string());
            }
        } else if b[i].is_ascii_digit() {
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
        } else {
            i += 1;
        }
    }
    out
}
