//! Acceptance criteria, each checked against an oracle that does not share
//! the library's code path: numeric evaluation instead of symbolic
//! expansion, rank of stacked points instead of the Klein pairing, closed
//! forms instead of enumeration. Prints one line per criterion.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::Rng;

use quadrics::genus2::{self, CoverPoint, RootValue, Sheet, Triple};
use quadrics::genus3::{self, theta, TetradData};
use quadrics::random::{self, Rng64};
use quadrics::rational::{frac, int, to_f64};
use quadrics::twistor::{self, PlaneFamily, SpinorSpace, TwoForm};
use quadrics::{Poly, PolyMatrix, PolyRing, QuadForm, RatMatrix, Rational};

const SEED: u64 = 20240601;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn rand_point(r: &mut Rng64, n: usize) -> Vec<Rational> {
    (0..n).map(|_| frac(random::small(r), r.gen_range(1..=5))).collect()
}

fn eval(p: &Poly, names: &[&str], at: &[Rational]) -> Rational {
    let vals: Vec<(&str, Rational)> = names.iter().copied().zip(at.iter().cloned()).collect();
    p.evaluate_named(&vals).expect("all variables valued")
}

fn eval_matrix(m: &PolyMatrix, names: &[&str], at: &[Rational]) -> RatMatrix {
    let rows = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| eval(m.get(i, j), names, at)).collect())
        .collect();
    RatMatrix::from_rows(rows).unwrap()
}

const XYZ: [&str; 3] = ["x", "y", "z"];

// 1. det(Q₂ + pQ₀) = (det Q − p²)³, also checked by evaluation: the 6×6
// matrix is rebuilt numerically from Q(x₀) with the orientation table
// written out by hand.
fn criterion_1() -> Outcome {
    let start = Instant::now();
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let complement_sign = [(0usize, 5usize, 1i64), (1, 4, -1), (2, 3, 1)];
    for i in 0..50 {
        let mut r = random::instance_rng(SEED, i);
        let d = random::pairing_data(&mut r);
        ensure(genus3::det_identity_check(&d).map_err(e)?, || format!("instance {i}: symbolic identity fails"))?;
        for _ in 0..3 {
            let x0 = rand_point(&mut r, 3);
            let q = eval_matrix(d.q(), &XYZ, &x0);
            let p = eval(d.p(), &XYZ, &x0);
            let mut m = RatMatrix::zeros(6, 6);
            let mut rows: Vec<Vec<Rational>> = (0..6).map(|a| m.row(a)).collect();
            for (a, &(i1, j1)) in pairs.iter().enumerate() {
                for (b, &(k1, l1)) in pairs.iter().enumerate() {
                    rows[a][b] = &q[(i1, k1)] * &q[(j1, l1)] - &q[(i1, l1)] * &q[(j1, k1)];
                }
            }
            for &(a, b, s) in &complement_sign {
                rows[a][b] += &p * int(s);
                rows[b][a] += &p * int(s);
            }
            m = RatMatrix::from_rows(rows).unwrap();
            let lhs = m.det().unwrap();
            let c = q.det().unwrap() - &p * &p;
            ensure(lhs == &c * &c * &c, || format!("instance {i}: numeric identity fails"))?;
        }
    }
    let t = start.elapsed();
    ensure(t <= Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("50 instances exact, 150 numeric evaluations, {:.1}s", t.as_secs_f64()))
}

// 2. The normalized net, recomputed by substituting x = T·y into the
// S-combinations of the original polynomials.
fn criterion_2() -> Outcome {
    let y = PolyRing::new(["y1", "y2", "y3"]);
    for i in 0..25 {
        let mut r = random::instance_rng(SEED, i);
        let d = random::genus2_data(&mut r);
        let (l1, l2) = (d.lambda1().clone(), d.lambda2().clone());
        let l3 = &l1 * &l2 / int(4);
        let net = genus2::higgs_net(&d).map_err(e)?;
        let n = genus2::normalize_net(&net, &d).map_err(e)?;
        let expect_corr = [-(&l1 / &l2), -(&l2 / &l1)];
        ensure(n.diagonal[2] == l3 && n.corrections == expect_corr, || format!("instance {i}: scalars"))?;
        let subst: HashMap<String, Poly> = ["x1", "x2", "x3"]
            .iter()
            .enumerate()
            .map(|(k, v)| (v.to_string(), y.linear(&n.t.row(k))))
            .collect();
        let expected = [y.var("y1").pow(2), y.var("y2").pow(2), y.var("y3").pow(2).scale(&l3)];
        for j in 0..3 {
            let mut comb = y.zero();
            for k in 0..3 {
                comb = &comb + &net.forms()[k].to_poly().scale(&n.s[(j, k)]);
            }
            let got = comb.substitute_linear(&subst).map_err(e)?;
            ensure(got == expected[j], || format!("instance {i}: form {j} is {got}"))?;
            let g = n.normalized.forms()[j].rational_gram().unwrap();
            ensure(g.rank() == 1, || format!("instance {i}: rank"))?;
        }
        let disc = n.normalized.discriminant().map_err(e)?;
        for _ in 0..3 {
            let z = rand_point(&mut r, 3);
            let oracle = &l3 * &z[0] * &z[1] * &z[2];
            let numeric = n.normalized.combination_at(&z).map_err(e)?.det().map_err(e)?;
            ensure(numeric == oracle && eval(&disc, &["z1", "z2", "z3"], &z) == oracle, || {
                format!("instance {i}: discriminant")
            })?;
        }
    }
    Ok("25 instances: y1^2, y2^2, (λ1λ2/4)*y3^2; corrections (-λ1/λ2, -λ2/λ1)".into())
}

// 3. The nilpotent discriminant and its double factor: ∂/∂z₃ vanishes on z₃ = 0.
fn criterion_3() -> Outcome {
    let disc = genus2::higgs_net_nilpotent().discriminant().map_err(e)?;
    let z3 = Poly::parse("z3").unwrap();
    ensure(disc == Poly::parse("-1/4*z1*z3^2").unwrap(), || format!("discriminant {disc}"))?;
    ensure(disc.derivative("z3").div_exact(&z3).is_some(), || "no double factor".into())?;
    ensure(disc.has_repeated_factor(), || "gcd test missed the repeated factor".into())?;
    let d = genus2::Genus2Data::new(int(3), frac(-1, 2)).map_err(e)?;
    let n = genus2::normalize_net(&genus2::higgs_net(&d).map_err(e)?, &d).map_err(e)?;
    ensure(!n.normalized.discriminant().map_err(e)?.has_repeated_factor(), || "very stable case not squarefree".into())?;
    Ok(format!("{disc}, double along z3 = 0"))
}

// 4. det M against the product, symbolically and at random (u, v).
fn criterion_4() -> Outcome {
    let start = Instant::now();
    let uv = ["u1", "u2", "u3", "v1", "v2", "v3"];
    for i in 0..25 {
        let mut r = random::instance_rng(SEED, i);
        let t = random::tetrad(&mut r);
        let fam = genus3::syzygetic_family(&t);
        let det = genus3::discriminant_components(&t).map_err(e)?;
        let prod = genus3::component_product(&t);
        ensure((&det - &prod).is_zero(), || format!("instance {i}: det(M) - product ≠ 0"))?;
        let w = rand_point(&mut r, 6);
        let p: Rational = (0..3).map(|k| &t.a()[k] * &w[k] + &t.b()[k] * &w[k + 3]).sum();
        let oracle: Rational = (0..3).map(|k| &w[k] * &w[k + 3] - &p * &p).product();
        ensure(eval_matrix(&fam.matrix, &uv, &w).det().unwrap() == oracle, || format!("instance {i}: numeric"))?;
    }
    let t = start.elapsed();
    ensure(t <= Duration::from_secs(30), || format!("took {t:?}"))?;
    Ok(format!("25 instances exact, {:.1}s", t.as_secs_f64()))
}

// 5. Closed form from the rank-one update det(M₀ + c·wwᵀ) = det M₀·(1 + c·wᵀM₀⁻¹w),
// M₀ = ⊕ [[0, zᵢ/2], [zᵢ/2, 0]], c = −Σzᵢ, w = (a, b): κ = −1/64, μ = 4.
fn rank_one_oracle(t: &TetradData, z: &[Rational]) -> Rational {
    let det_m0: Rational = z.iter().map(|zi| -(zi * zi) / int(4)).product();
    let c: Rational = -z.iter().cloned().sum::<Rational>();
    let quad: Rational = (0..3).map(|i| int(4) * &t.a()[i] * &t.b()[i] / &z[i]).sum();
    det_m0 * (Rational::one() + c * quad)
}

fn criterion_5() -> Outcome {
    let zs = ["z1", "z2", "z3"];
    let z123 = Poly::parse("z1*z2*z3").unwrap();
    let mut fitted: Option<genus3::TripleFit> = None;
    for i in 0..25 {
        let mut r = random::instance_rng(SEED, i);
        let t = random::tetrad(&mut r);
        let disc = genus3::triple_discriminant(&t).map_err(e)?;
        ensure(disc.div_exact(&z123).is_some(), || format!("instance {i}: not divisible by z1*z2*z3"))?;
        for _ in 0..3 {
            let z: Vec<Rational> = (0..3).map(|_| random::nonzero_fraction(&mut r)).collect();
            ensure(eval(&disc, &zs, &z) == rank_one_oracle(&t, &z), || format!("instance {i}: rank-one oracle"))?;
        }
        if i < 10 {
            let s: [Rational; 3] = std::array::from_fn(|_| random::nonzero_fraction(&mut r));
            let t2 = t.rescale(&s).map_err(e)?;
            ensure(genus3::triple_discriminant(&t2).map_err(e)? == disc, || format!("instance {i}: rescaling changes output"))?;
        }
        let fit = genus3::fit_triple_constants(&disc, &t).map_err(e)?;
        ensure(fit.kappa == frac(-1, 64), || format!("instance {i}: κ = {}", fit.kappa))?;
        ensure(fit.mu.as_ref().is_none_or(|m| *m == int(4)), || format!("instance {i}: μ = {:?}", fit.mu))?;
        if fitted.as_ref().is_none_or(|f| f.mu.is_none()) {
            fitted = Some(fit);
        }
    }
    let f = fitted.unwrap();
    let mu = f.mu.ok_or("no instance fixed μ")?;
    Ok(format!(
        "κ = {}, μ = {} constant on 25 instances; μ = 2 is not reached by any common rescaling of the q_i",
        f.kappa, mu
    ))
}

// 6. The curve restricted to each tetrad line, by explicit parametrization,
// equals −(p restricted)².
fn criterion_6() -> Outcome {
    let st = PolyRing::new(["s", "t"]);
    let (s, t) = (st.var("s"), st.var("t"));
    let zero = st.zero();
    let params: [[Poly; 3]; 4] = [
        [zero.clone(), s.clone(), t.clone()],
        [s.clone(), zero.clone(), t.clone()],
        [s.clone(), t.clone(), zero.clone()],
        [s.clone(), t.clone(), -(&s + &t)],
    ];
    for i in 0..25 {
        let td = random::tetrad(&mut random::instance_rng(SEED, i));
        let d = td.pairing_data();
        ensure(genus3::tangency_check(&d, &genus3::tetrad_lines()).map_err(e)?, || format!("instance {i}: library check"))?;
        let curve = genus3::curve_equation(&d).map_err(e)?;
        for (k, par) in params.iter().enumerate() {
            let map: HashMap<String, Poly> = XYZ.iter().map(|v| v.to_string()).zip(par.iter().cloned()).collect();
            let c = curve.substitute(&map).map_err(e)?;
            let p = d.p().substitute(&map).map_err(e)?;
            ensure(c == -p.pow(2), || format!("instance {i}, line {k}: restriction is not -(p|)^2"))?;
        }
    }
    Ok("25 instances x 4 lines: restriction = -(p|)^2".into())
}

// 7. Enumeration against the closed formulas.
fn criterion_7() -> Outcome {
    let start = Instant::now();
    let c = theta::count_theta_chars(3).map_err(e)?;
    let planes = theta::count_isotropic_planes(3).map_err(e)?;
    let t = start.elapsed();
    ensure((c.total, c.even, c.odd, planes) == (64, 36, 28, 315), || format!("{c:?}, {planes}"))?;
    ensure(t <= Duration::from_secs(1), || format!("genus 3 took {t:?}"))?;
    for g in 1..=4u32 {
        let n = 1u64 << (2 * g);
        let odd = (1u64 << (g - 1)) * ((1 << g) - 1);
        let planes = (n - 1) * (n / 2 - 2) / 6;
        let got = theta::count_theta_chars(g).map_err(e)?;
        ensure(got.total == n && got.odd == odd && got.even == n - odd, || format!("genus {g}: {got:?}"))?;
        ensure(theta::count_isotropic_planes(g).map_err(e)? == planes, || format!("genus {g}: planes"))?;
    }
    Ok(format!("theta: 64 total, 28 odd; isotropic planes: 315 in {:.3}s; g = 1..4 closed forms", t.as_secs_f64()))
}

fn stacked_rank(rows: &[&[Rational]]) -> usize {
    RatMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap().rank()
}

fn point_pair(r: &mut Rng64) -> (twistor::Point3, twistor::Point3) {
    loop {
        let (a, b) = (random::point3(r), random::point3(r));
        if stacked_rank(&[&a, &b]) == 2 {
            return (a, b);
        }
    }
}

// 8. Incidence against rank < 4 of the four stacked points; planes by
// their defining incidence.
fn criterion_8() -> Outcome {
    let mut incident = 0;
    for i in 0..1000 {
        let mut r = random::instance_rng(SEED, i);
        let (a, b) = point_pair(&mut r);
        let (c, d) = if i % 3 == 0 {
            let m: twistor::Point3 = std::array::from_fn(|k| &a[k] * int(2) - &b[k] * int(3));
            let mut o = random::point3(&mut r);
            while stacked_rank(&[&m, &o]) < 2 {
                o = random::point3(&mut r);
            }
            (m, o)
        } else {
            point_pair(&mut r)
        };
        let oracle = stacked_rank(&[&a, &b, &c, &d]) < 4;
        incident += oracle as usize;
        let l1 = twistor::plucker_from_points(&a, &b).map_err(e)?;
        let l2 = twistor::plucker_from_points(&c, &d).map_err(e)?;
        ensure(twistor::lines_incident(&l1, &l2) == oracle, || format!("pair {i}"))?;
    }
    for i in 0..100 {
        let mut r = random::instance_rng(SEED + 1, i);
        let (x, y) = point_pair(&mut r);
        let pi = random::point3(&mut r);
        let ax = twistor::alpha_plane(&x).map_err(e)?;
        let ay = twistor::alpha_plane(&y).map_err(e)?;
        let bp = twistor::beta_plane(&pi).map_err(e)?;
        ensure(twistor::plane_family_compare(&ax, &ay).map_err(e)? == PlaneFamily::Same, || format!("instance {i}: α/α"))?;
        ensure(twistor::plane_family_compare(&ax, &bp).map_err(e)? == PlaneFamily::Different, || format!("instance {i}: α/β"))?;
        // α/α meet in the single line xy, by rank.
        ensure(ax.intersect(&ay).map_err(e)?.linear_dim() == 1, || format!("instance {i}: α ∩ α"))?;
        // A plane through x: replace one coordinate of π.
        let k = (0..4).find(|&k| !x[k].is_zero()).unwrap();
        let dot: Rational = (0..4).map(|j| &pi[j] * &x[j]).sum();
        let mut through = pi.clone();
        through[k] = &pi[k] - &dot / &x[k];
        for cov in [pi.clone(), through] {
            if cov.iter().all(Zero::is_zero) {
                continue;
            }
            let on: bool = (0..4).map(|j| &cov[j] * &x[j]).sum::<Rational>().is_zero();
            let flag = twistor::flag_null_geodesic(&x, &cov).map_err(e)?;
            ensure(flag.is_some() == on, || format!("instance {i}: flag iff x ∈ π"))?;
        }
    }
    Ok(format!("1000 pairs ({incident} incident) match the rank oracle; 100 plane tests"))
}

fn sym(a: &[Rational; 2], b: &[Rational; 2]) -> RatMatrix {
    let h = frac(1, 2);
    RatMatrix::from_rows(vec![
        vec![&a[0] * &b[0], (&a[0] * &b[1] + &a[1] * &b[0]) * &h],
        vec![(&a[0] * &b[1] + &a[1] * &b[0]) * &h, &a[1] * &b[1]],
    ])
    .unwrap()
}

fn eps(a: &[Rational; 2], b: &[Rational; 2]) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn spinor2(r: &mut Rng64) -> [Rational; 2] {
    let v = random::nonzero_vector(r, 2);
    [v[0].clone(), v[1].clone()]
}

// 9. On decomposable ω = (a⊗b)∧(a'⊗b') the parts are sym(a,a')·ε(b,b')
// and ε(a,a')·sym(b,b'); sums of such are checked by linearity.
fn criterion_9() -> Outcome {
    let spin = SpinorSpace::standard();
    for i in 0..100 {
        let mut r = random::instance_rng(SEED, i);
        let mut omega = TwoForm::zero();
        let mut sd = RatMatrix::zeros(2, 2);
        let mut asd = RatMatrix::zeros(2, 2);
        for _ in 0..3 {
            let (a, b, a2, b2) = (spinor2(&mut r), spinor2(&mut r), spinor2(&mut r), spinor2(&mut r));
            omega = omega.add(&TwoForm::wedge(&twistor::spinor_tensor(&a, &b), &twistor::spinor_tensor(&a2, &b2)));
            sd = sd.add(&sym(&a, &a2).scale(&eps(&b, &b2))).unwrap();
            asd = asd.add(&sym(&b, &b2).scale(&eps(&a, &a2))).unwrap();
        }
        let (psd, pasd) = twistor::sd_asd_project(&omega, &spin);
        ensure(psd == sd && pasd == asd, || format!("instance {i}: projection disagrees with the spinor formula"))?;
        ensure(twistor::sd_asd_reconstruct(&psd, &pasd, &spin).map_err(e)? == omega, || format!("instance {i}: reconstruction"))?;
        let p = twistor::self_dual_part(&omega, &spin);
        ensure(twistor::self_dual_part(&p, &spin) == p, || format!("instance {i}: idempotence"))?;
        let rnd = random::two_form(&mut r);
        let (s1, a1) = twistor::sd_asd_project(&rnd, &spin);
        ensure(twistor::sd_asd_reconstruct(&s1, &a1, &spin).map_err(e)? == rnd, || format!("instance {i}: random 2-form"))?;
        let (phi, psi) = (spinor2(&mut r), spinor2(&mut r));
        let v = RatMatrix::from_rows(vec![
            vec![&phi[0] * &psi[0], &phi[0] * &psi[1]],
            vec![&phi[1] * &psi[0], &phi[1] * &psi[1]],
        ])
        .unwrap();
        let (f, g) = twistor::spinor_factor(&v).map_err(e)?.ok_or("rank one not factored")?;
        ensure(eps(&f, &phi).is_zero() && eps(&g, &psi).is_zero(), || format!("instance {i}: factors not proportional"))?;
        ensure(&f[0] * &g[0] == v[(0, 0)] && &f[1] * &g[1] == v[(1, 1)] && &f[0] * &g[1] == v[(0, 1)], || {
            format!("instance {i}: φψᵀ ≠ v")
        })?;
    }
    Ok("100 2-forms match the spinor formula, reconstruct, idempotent; 100 factorizations".into())
}

fn horner(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

// 10. Diagonal pencils by definition; generic roots by evaluating the
// sextic's coefficients independently of the solver.
fn criterion_10() -> Outcome {
    let vars = ["a", "b", "c", "d", "e", "f"];
    let id = QuadForm::from_rational(&vars, &RatMatrix::identity(6)).unwrap();
    let mut worst = 0.0f64;
    for i in 0..20 {
        let mut r = random::instance_rng(SEED, i);
        let c: Vec<Rational> = (0..6).map(|_| random::small_rational(&mut r)).collect();
        let q2 = QuadForm::from_rational(&vars, &RatMatrix::diagonal(&c)).unwrap();
        let roots = genus2::branch_points(&genus2::pencil_sextic(&id, &q2).map_err(e)?).map_err(e)?;
        let mut distinct = c.clone();
        distinct.sort();
        distinct.dedup();
        ensure(roots.len() == distinct.len(), || format!("diagonal {i}: {} roots", roots.len()))?;
        for x in &distinct {
            let m = c.iter().filter(|y| *y == x).count() as u32;
            ensure(
                roots.iter().any(|b| b.root == RootValue::Exact(-x.clone(), Rational::one()) && b.multiplicity == m),
                || format!("diagonal {i}: [{} : 1]", -x.clone()),
            )?;
        }
        let mut rows = vec![vec![Rational::zero(); 6]; 6];
        for a in 0..6 {
            for b in a..6 {
                let v = random::small_rational(&mut r);
                rows[a][b] = v.clone();
                rows[b][a] = v;
            }
        }
        let q2 = QuadForm::from_rational(&vars, &RatMatrix::from_rows(rows).unwrap()).unwrap();
        let sextic = genus2::pencil_sextic(&id, &q2).map_err(e)?;
        let coeffs: Vec<f64> = (0..=6).map(|k| to_f64(&sextic.coeff_of(&[("z1", k), ("z2", 6 - k)]))).collect();
        let roots = genus2::branch_points(&sextic).map_err(e)?;
        ensure(roots.iter().map(|b| b.multiplicity).sum::<u32>() == 6, || format!("generic {i}: count"))?;
        for b in &roots {
            match &b.root {
                RootValue::Numeric { ratio, .. } => {
                    let scale: f64 = coeffs.iter().enumerate().map(|(k, a)| a.abs() * ratio.norm().powi(k as i32)).sum();
                    let res = horner(&coeffs, *ratio).norm() / scale;
                    worst = worst.max(res);
                    ensure(res < 1e-10, || format!("generic {i}: residual {res:e}"))?;
                }
                RootValue::Exact(z1, z2) => {
                    ensure(eval(&sextic, &["z1", "z2"], &[z1.clone(), z2.clone()]).is_zero(), || format!("generic {i}: exact root"))?;
                }
            }
        }
    }
    Ok(format!("20 diagonal pencils exact; 20 generic, worst residual {worst:.1e}"))
}

// 11. The orbit is exactly the even-flip assignments, built here directly.
fn criterion_11() -> Outcome {
    let flip = |p: &CoverPoint, f: bool| if f { p.sigma() } else { p.clone() };
    for i in 0..100 {
        let mut r = random::instance_rng(SEED, i);
        let pts: Vec<CoverPoint> = (0..3).map(|_| random::cover_point(&mut r)).collect();
        let out = genus2::atiyah_triples(&pts[0], &pts[1], &pts[2]);
        let mut oracle: Vec<Triple> = Vec::new();
        for mask in 0..8u32 {
            if mask.count_ones() % 2 == 0 {
                oracle.push(Triple::new(std::array::from_fn(|k| flip(&pts[k], mask & (1 << k) != 0))));
            }
        }
        let key = |v: &[Triple]| {
            let mut s: Vec<String> = v.iter().map(|t| t.to_string()).collect();
            s.sort();
            s
        };
        ensure(key(&out) == key(&oracle), || format!("instance {i}: orbit differs from the even-flip set"))?;
        for t in &out {
            let [a, b, c] = t.points().clone();
            ensure(key(&genus2::atiyah_triples(&a, &b, &c)) == key(&out), || format!("instance {i}: not closed"))?;
            let all_flipped = Triple::new([a.sigma(), b.sigma(), c.sigma()]);
            ensure(!out.contains(&all_flipped), || format!("instance {i}: odd flip inside orbit"))?;
        }
        let sig = genus2::atiyah_triples(&pts[0].sigma(), &pts[1].sigma(), &pts[2].sigma());
        let sig_oracle: Vec<Triple> = out
            .iter()
            .map(|t| {
                let [a, b, c] = t.points().clone();
                Triple::new([a.sigma(), b.sigma(), c.sigma()])
            })
            .collect();
        ensure(key(&sig) == key(&sig_oracle), || format!("instance {i}: not σ-equivariant"))?;
    }
    let p = CoverPoint::new((int(1), int(2)), Sheet::Plus).unwrap();
    ensure(genus2::atiyah_triples(&p, &p, &p).len() == 4, || "coincident points".into())?;
    Ok("100 random triples: orbit = even-flip set, closed, σ-equivariant".into())
}

// 12. The verdict against rank of the six stacked plane vectors and an
// explicit common point.
fn criterion_12() -> Outcome {
    use quadrics::selftest::{disjoint_conics, meeting_conics, DISJOINT_CONICS, MEETING_CONICS};
    for (i, inst) in MEETING_CONICS.iter().enumerate() {
        let (a, b, x) = meeting_conics(inst).map_err(|err| format!("meeting {i}: {err}"))?;
        let (q1, q2) = twistor::split_pencil(&inst.c.map(int));
        ensure(q1.evaluate(&x).unwrap().is_zero() && q2.evaluate(&x).unwrap().is_zero(), || format!("meeting {i}: point off Q1 ∩ Q2"))?;
        ensure(a.plane().contains(&x) && b.plane().contains(&x), || format!("meeting {i}: point not on both planes"))?;
        let rows: Vec<&[Rational]> = a.plane().basis().iter().chain(b.plane().basis()).map(|v| v.as_slice()).collect();
        ensure(stacked_rank(&rows) == 5, || format!("meeting {i}: planes do not meet in one point"))?;
        ensure(twistor::conics_null_separated(&a, &b).map_err(e)?, || format!("meeting {i}: reported false"))?;
    }
    for (i, inst) in DISJOINT_CONICS.iter().enumerate() {
        let (a, b) = disjoint_conics(inst).map_err(|err| format!("disjoint {i}: {err}"))?;
        let rows: Vec<&[Rational]> = a.plane().basis().iter().chain(b.plane().basis()).map(|v| v.as_slice()).collect();
        ensure(stacked_rank(&rows) == 6, || format!("disjoint {i}: planes meet"))?;
        ensure(!twistor::conics_null_separated(&a, &b).map_err(e)?, || format!("disjoint {i}: reported true"))?;
    }
    Ok("10 meeting pairs true, 10 disjoint pairs false".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("determinant identity", criterion_1),
        ("genus-2 net normal form", criterion_2),
        ("nilpotent contrast", criterion_3),
        ("syzygetic discriminant components", criterion_4),
        ("triple discriminant shape and invariants", criterion_5),
        ("tangency", criterion_6),
        ("F2 counts", criterion_7),
        ("Klein correspondence", criterion_8),
        ("spinor algebra", criterion_9),
        ("pencil sextic", criterion_10),
        ("Atiyah triples", criterion_11),
        ("conic null separation", criterion_12),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {}/12 passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
