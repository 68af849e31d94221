//! Python bindings. Rationals cross the boundary as `fractions.Fraction`
//! (anything whose `str()` parses as `n` or `n/d` is accepted on input).

use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyComplex, PyDict};

use quadrics::genus2::{self, CoverPoint, RootValue, Sheet};
use quadrics::genus3::{self, theta, TetradData};
use quadrics::rational::{self, Rational};
use quadrics::{selftest, twistor, Error, RatMatrix};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Singular(_) | Error::Degenerate(_) => PyArithmeticError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    rational::parse(&obj.str()?.to_cow()?).map_err(py_err)
}

fn to_rationals(objs: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    objs.iter().map(to_rational).collect()
}

fn to_fixed<const N: usize>(objs: &[Bound<'_, PyAny>]) -> PyResult<[Rational; N]> {
    to_rationals(objs)?
        .try_into()
        .map_err(|_| PyValueError::new_err(format!("expected {N} rationals")))
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((rational::format(r),))
}

fn fractions<'py>(py: Python<'py>, v: &[Rational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    v.iter().map(|r| fraction(py, r)).collect()
}

fn matrix_rows<'py>(py: Python<'py>, m: &RatMatrix) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
    (0..m.rows()).map(|i| fractions(py, &m.row(i))).collect()
}

#[pyclass(name = "Poly", module = "quadrics_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPoly(quadrics::Poly);

#[pymethods]
impl PyPoly {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        quadrics::Poly::parse(text).map(PyPoly).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.0)
    }

    fn __add__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PyPoly) -> PyPoly {
        PyPoly(&self.0 * &other.0)
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly(-&self.0)
    }

    fn __pow__(&self, k: u32, _modulo: Option<u32>) -> PyPoly {
        PyPoly(self.0.pow(k))
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.0.vars().to_vec()
    }

    fn total_degree(&self) -> Option<u32> {
        self.0.total_degree()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn derivative(&self, var: &str) -> PyPoly {
        PyPoly(self.0.derivative(var))
    }

    fn div_exact(&self, d: &PyPoly) -> Option<PyPoly> {
        self.0.div_exact(&d.0).map(PyPoly)
    }

    fn has_repeated_factor(&self) -> bool {
        self.0.has_repeated_factor()
    }

    fn evaluate<'py>(&self, py: Python<'py>, values: &Bound<'py, PyDict>) -> PyResult<Bound<'py, PyAny>> {
        let mut vals = Vec::new();
        for (k, v) in values.iter() {
            vals.push((k.extract::<String>()?, to_rational(&v)?));
        }
        let named: Vec<(&str, Rational)> = vals.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
        fraction(py, &self.0.evaluate_named(&named).map_err(py_err)?)
    }
}

#[pyclass(name = "QuadForm", module = "quadrics_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyQuadForm(quadrics::QuadForm);

#[pymethods]
impl PyQuadForm {
    /// Symmetric Gram matrix `G` with `q(x) = xᵀGx`.
    #[new]
    fn new(vars: Vec<String>, gram: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let rows = gram.iter().map(|r| to_rationals(r)).collect::<PyResult<Vec<_>>>()?;
        let g = RatMatrix::from_rows(rows).map_err(py_err)?;
        let names: Vec<&str> = vars.iter().map(String::as_str).collect();
        quadrics::QuadForm::from_rational(&names, &g).map(PyQuadForm).map_err(py_err)
    }

    #[staticmethod]
    fn from_poly(p: &PyPoly, vars: Vec<String>) -> PyResult<Self> {
        let names: Vec<&str> = vars.iter().map(String::as_str).collect();
        quadrics::QuadForm::from_poly(&p.0, &names).map(PyQuadForm).map_err(py_err)
    }

    fn to_poly(&self) -> PyPoly {
        PyPoly(self.0.to_poly())
    }

    fn rank(&self) -> PyResult<usize> {
        self.0.rank().map_err(py_err)
    }

    fn gram<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        let g = self.0.rational_gram().ok_or_else(|| PyValueError::new_err("Gram matrix is not rational"))?;
        matrix_rows(py, &g)
    }

    fn evaluate<'py>(&self, py: Python<'py>, point: Vec<Bound<'py, PyAny>>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.0.evaluate(&to_rationals(&point)?).map_err(py_err)?)
    }

    /// `(T, d)` with `TᵀGT = diag(d)`.
    #[allow(clippy::type_complexity)]
    fn diagonalize<'py>(
        &self,
        py: Python<'py>,
    ) -> PyResult<(Vec<Vec<Bound<'py, PyAny>>>, Vec<Bound<'py, PyAny>>)> {
        let (t, d) = self.0.diagonalize_congruence().map_err(py_err)?;
        Ok((matrix_rows(py, &t)?, fractions(py, &d)?))
    }

    fn __str__(&self) -> String {
        self.0.to_poly().to_string()
    }
}

#[pyclass(name = "Tetrad", module = "quadrics_py", frozen)]
struct PyTetrad(TetradData);

#[pymethods]
impl PyTetrad {
    #[new]
    fn new(a: Vec<Bound<'_, PyAny>>, b: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        TetradData::new(to_fixed(&a)?, to_fixed(&b)?).map(PyTetrad).map_err(py_err)
    }

    fn invariants<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        fractions(py, &self.0.invariants())
    }

    fn p_uv(&self) -> PyPoly {
        PyPoly(self.0.p_uv())
    }

    fn p_xyz(&self) -> PyPoly {
        PyPoly(self.0.p_xyz())
    }

    /// The 6×6 matrix with entries linear in u, v.
    fn family_matrix(&self) -> Vec<Vec<PyPoly>> {
        let m = genus3::syzygetic_family(&self.0).matrix;
        (0..m.rows()).map(|i| (0..m.cols()).map(|j| PyPoly(m.get(i, j).clone())).collect()).collect()
    }

    fn discriminant(&self) -> PyResult<PyPoly> {
        genus3::discriminant_components(&self.0).map(PyPoly).map_err(py_err)
    }

    fn component_product(&self) -> PyPoly {
        PyPoly(genus3::component_product(&self.0))
    }

    fn triple_discriminant(&self) -> PyResult<PyPoly> {
        genus3::triple_discriminant(&self.0).map(PyPoly).map_err(py_err)
    }

    /// `(κ, μ)`; μ is `None` when every aᵢbᵢ vanishes.
    fn fit_triple<'py>(&self, py: Python<'py>) -> PyResult<(Bound<'py, PyAny>, Option<Bound<'py, PyAny>>)> {
        let disc = genus3::triple_discriminant(&self.0).map_err(py_err)?;
        let fit = genus3::fit_triple_constants(&disc, &self.0).map_err(py_err)?;
        let mu = fit.mu.as_ref().map(|m| fraction(py, m)).transpose()?;
        Ok((fraction(py, &fit.kappa)?, mu))
    }

    fn curve(&self) -> PyResult<PyPoly> {
        genus3::curve_equation(&self.0.pairing_data()).map(PyPoly).map_err(py_err)
    }

    fn tangency_check(&self) -> PyResult<bool> {
        genus3::tangency_check(&self.0.pairing_data(), &genus3::tetrad_lines()).map_err(py_err)
    }
}

/// Seeded det(Q₂ + pQ₀) = (det Q − p²)³ checks; returns the first failing
/// instance index, if any.
#[pyfunction]
#[pyo3(signature = (seed, count = 50))]
fn det_identity(seed: u64, count: u64) -> PyResult<Option<u64>> {
    for i in 0..count {
        let d = quadrics::random::pairing_data(&mut quadrics::random::instance_rng(seed, i));
        if !genus3::det_identity_check(&d).map_err(py_err)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Normal form of the genus-2 net as a dict of polynomials and scalars.
#[pyfunction]
fn net_genus2<'py>(py: Python<'py>, lambda1: Bound<'py, PyAny>, lambda2: Bound<'py, PyAny>) -> PyResult<Bound<'py, PyDict>> {
    let d = genus2::Genus2Data::new(to_rational(&lambda1)?, to_rational(&lambda2)?).map_err(py_err)?;
    let net = genus2::higgs_net(&d).map_err(py_err)?;
    let n = genus2::normalize_net(&net, &d).map_err(py_err)?;
    let out = PyDict::new(py);
    let forms = |s: &quadrics::QuadricSystem| s.forms().iter().map(|f| PyPoly(f.to_poly())).collect::<Vec<_>>();
    out.set_item("net", forms(&net))?;
    out.set_item("discriminant", PyPoly(net.discriminant().map_err(py_err)?))?;
    out.set_item("normalized", forms(&n.normalized))?;
    out.set_item("normalized_discriminant", PyPoly(n.normalized.discriminant().map_err(py_err)?))?;
    out.set_item("diagonal", fractions(py, &n.diagonal)?)?;
    out.set_item("corrections", fractions(py, &n.corrections)?)?;
    out.set_item("substitution", matrix_rows(py, &n.t)?)?;
    Ok(out)
}

#[pyfunction]
fn net_nilpotent_discriminant() -> PyResult<PyPoly> {
    genus2::higgs_net_nilpotent().discriminant().map(PyPoly).map_err(py_err)
}

#[pyfunction]
fn pencil_sextic(q1: &PyQuadForm, q2: &PyQuadForm) -> PyResult<PyPoly> {
    genus2::pencil_sextic(&q1.0, &q2.0).map(PyPoly).map_err(py_err)
}

/// Roots of a binary form as `(kind, value, multiplicity)`: exact roots
/// give `("exact", (z1, z2), m)`, numeric ones `("numeric", complex, m)`.
#[pyfunction]
fn branch_points<'py>(py: Python<'py>, form: &PyPoly) -> PyResult<Vec<(&'static str, Bound<'py, PyAny>, u32)>> {
    let mut out = Vec::new();
    for b in genus2::branch_points(&form.0).map_err(py_err)? {
        let (kind, value) = match &b.root {
            RootValue::Exact(z1, z2) => ("exact", (fraction(py, z1)?, fraction(py, z2)?).into_pyobject(py)?.into_any()),
            RootValue::Numeric { ratio, .. } => ("numeric", PyComplex::from_doubles(py, ratio.re, ratio.im).into_any()),
        };
        out.push((kind, value, b.multiplicity));
    }
    Ok(out)
}

/// Orbit of three points `(z1, z2, sheet)` with sheet `+1` or `-1`.
#[pyfunction]
fn atiyah_triples(points: Vec<(Bound<'_, PyAny>, Bound<'_, PyAny>, i32)>) -> PyResult<Vec<String>> {
    let pts = points
        .iter()
        .map(|(a, b, s)| {
            let sheet = match s {
                1 => Sheet::Plus,
                -1 => Sheet::Minus,
                _ => return Err(PyValueError::new_err("sheet must be +1 or -1")),
            };
            CoverPoint::new((to_rational(a)?, to_rational(b)?), sheet).map_err(py_err)
        })
        .collect::<PyResult<Vec<_>>>()?;
    let [p, q, r] = pts.as_slice() else {
        return Err(PyValueError::new_err("expected three points"));
    };
    Ok(genus2::atiyah_triples(p, q, r).iter().map(|t| t.to_string()).collect())
}

#[pyfunction]
fn plucker<'py>(py: Python<'py>, a: Vec<Bound<'py, PyAny>>, b: Vec<Bound<'py, PyAny>>) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let l = twistor::plucker_from_points(&to_fixed(&a)?, &to_fixed(&b)?).map_err(py_err)?;
    fractions(py, l.coords())
}

#[pyfunction]
fn lines_incident(l1: Vec<Bound<'_, PyAny>>, l2: Vec<Bound<'_, PyAny>>) -> PyResult<bool> {
    let l1 = twistor::PluckerPoint::new(to_fixed(&l1)?).map_err(py_err)?;
    let l2 = twistor::PluckerPoint::new(to_fixed(&l2)?).map_err(py_err)?;
    Ok(twistor::lines_incident(&l1, &l2))
}

#[pyfunction]
fn alpha_plane<'py>(py: Python<'py>, x: Vec<Bound<'py, PyAny>>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
    let p = twistor::alpha_plane(&to_fixed(&x)?).map_err(py_err)?;
    p.basis().iter().map(|v| fractions(py, v)).collect()
}

#[pyfunction]
fn count_theta_chars(genus: u32) -> PyResult<(u64, u64, u64)> {
    let c = theta::count_theta_chars(genus).map_err(py_err)?;
    Ok((c.total, c.even, c.odd))
}

#[pyfunction]
fn count_isotropic_planes(genus: u32) -> PyResult<u64> {
    theta::count_isotropic_planes(genus).map_err(py_err)
}

/// `(id, name, passed, detail)` for every criterion.
#[pyfunction]
fn run_selftest(py: Python<'_>, seed: u64) -> Vec<(u32, &'static str, bool, String)> {
    let reports = py.detach(|| selftest::run_all(seed));
    reports.into_iter().map(|r| (r.id, r.name, r.passed, r.detail)).collect()
}

#[pymodule]
fn quadrics_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyQuadForm>()?;
    m.add_class::<PyTetrad>()?;
    m.add_function(wrap_pyfunction!(det_identity, m)?)?;
    m.add_function(wrap_pyfunction!(net_genus2, m)?)?;
    m.add_function(wrap_pyfunction!(net_nilpotent_discriminant, m)?)?;
    m.add_function(wrap_pyfunction!(pencil_sextic, m)?)?;
    m.add_function(wrap_pyfunction!(branch_points, m)?)?;
    m.add_function(wrap_pyfunction!(atiyah_triples, m)?)?;
    m.add_function(wrap_pyfunction!(plucker, m)?)?;
    m.add_function(wrap_pyfunction!(lines_incident, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_plane, m)?)?;
    m.add_function(wrap_pyfunction!(count_theta_chars, m)?)?;
    m.add_function(wrap_pyfunction!(count_isotropic_planes, m)?)?;
    m.add_function(wrap_pyfunction!(run_selftest, m)?)?;
    Ok(())
}
