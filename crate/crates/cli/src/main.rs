use std::fmt::Write as _;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use quadrics::genus2::{self, CoverPoint, Sheet};
use quadrics::genus3::{self, theta, TetradData};
use quadrics::rational::{self, Rational};
use quadrics::text::{self, Document};
use quadrics::twistor::{self, Point3};
use quadrics::{random, selftest, Error, Poly, QuadricSystem};

#[derive(Parser)]
#[command(name = "quadrics", version, about = "Exact constructions for families of quadrics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Read the payload from a file instead of standard input.
    #[arg(long, short)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Tetrad {
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    a: [Rational; 3],
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    b: [Rational; 3],
}

#[derive(Subcommand)]
enum Command {
    /// Net of conics from tr Φ², its normal form and discriminant.
    NetGenus2 {
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        lambda1: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        lambda2: Rational,
    },
    /// The nilpotent net ⟨x², y², yz⟩.
    NetNilpotent,
    /// Sextic det(z1·q1 + z2·q2) and its roots; payload sections [q1], [q2].
    Pencil(Input),
    /// Orbit of a triple of points on the double cover; payload [points]
    /// with three `point: z1, z2, +|-` lines.
    AtiyahTriples(Input),
    /// Line geometry queries in P³.
    #[command(subcommand)]
    Klein(Klein),
    /// Whether two conics on a pencil meet; payload [q1], [q2] and two
    /// [conic] sections with `z:` and `basis:` entries.
    ConicsNull(Input),
    #[command(subcommand)]
    Genus3(Genus3),
    /// Six-quadric family of a syzygetic tetrad.
    Syzygetic(Tetrad),
    /// Discriminant of the net spanned by the three singular quadrics.
    TripleDiscriminant(Tetrad),
    /// Theta characteristics and isotropic planes over F2.
    CountF2 {
        #[arg(long)]
        genus: u32,
    },
    /// Runs every acceptance check.
    Selftest {
        #[arg(long)]
        seed: u64,
        /// Append wall-clock times (output is then no longer reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        only: Option<u32>,
    },
}

#[derive(Subcommand)]
enum Klein {
    /// Plücker coordinates of the line through two points.
    Plucker {
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        a: Point3,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        b: Point3,
    },
    /// Incidence of two lines given by Plücker coordinates.
    Incident {
        #[arg(long, value_parser = parse_plucker, allow_hyphen_values = true)]
        l1: [Rational; 6],
        #[arg(long, value_parser = parse_plucker, allow_hyphen_values = true)]
        l2: [Rational; 6],
    },
    /// α-plane of lines through a point.
    Alpha {
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: Point3,
    },
    /// β-plane of lines in a plane.
    Beta {
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        plane: Point3,
    },
    /// Null geodesic of the flag x ∈ π.
    Flag {
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        point: Point3,
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        plane: Point3,
    },
    /// Family comparison of two planes on the Klein quadric; payload with
    /// two [plane] sections.
    Family(Input),
}

#[derive(Subcommand)]
enum Genus3 {
    /// det(Q₂ + pQ₀) = (det Q − p²)³ on seeded random data.
    DetIdentity {
        #[arg(long, default_value_t = 50)]
        count: u64,
        #[arg(long)]
        seed: u64,
        /// Flip the sign of the (12, 34) entry of Q₀.
        #[arg(long)]
        corrupt_q0: bool,
    },
    /// Curve quartic restricted to the tetrad lines is minus a square.
    /// Either one tetrad by --a/--b, or --count seeded ones.
    Tangency {
        #[arg(long, value_parser = parse_triple, requires = "b", allow_hyphen_values = true)]
        a: Option<[Rational; 3]>,
        #[arg(long, value_parser = parse_triple, requires = "a", allow_hyphen_values = true)]
        b: Option<[Rational; 3]>,
        #[arg(long, default_value_t = 25)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    /// A mathematical check came out false; the message names the instance.
    Falsified(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn parse_list(s: &str) -> Result<Vec<Rational>, String> {
    rational::parse_list(s).map_err(|e| e.to_string())
}

fn parse_fixed<const N: usize>(s: &str) -> Result<[Rational; N], String> {
    let v = parse_list(s)?;
    let n = v.len();
    v.try_into().map_err(|_| format!("expected {N} comma separated rationals, got {n}"))
}

fn parse_triple(s: &str) -> Result<[Rational; 3], String> {
    parse_fixed(s)
}

fn parse_point(s: &str) -> Result<Point3, String> {
    parse_fixed(s)
}

fn parse_plucker(s: &str) -> Result<[Rational; 6], String> {
    parse_fixed(s)
}

fn read_payload(input: &Input) -> Result<String, Failure> {
    match &input.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

/// Attaches `line:column` and the offending line to byte-offset errors.
fn locate(e: Error, payload: &str) -> Failure {
    let Error::Parse { pos, msg } = &e else {
        return Failure::Input(e.to_string());
    };
    let pos = (*pos).min(payload.len());
    let line_start = payload[..pos].rfind('\n').map_or(0, |i| i + 1);
    let line_end = payload[pos..].find('\n').map_or(payload.len(), |i| pos + i);
    let line_no = payload[..pos].matches('\n').count() + 1;
    let col = payload[line_start..pos].chars().count() + 1;
    Failure::Input(format!(
        "{line_no}:{col}: {msg}\n  {}\n  {}^",
        &payload[line_start..line_end],
        " ".repeat(col - 1)
    ))
}

fn with_payload<T>(input: &Input, f: impl FnOnce(&Document) -> quadrics::Result<T>) -> Result<T, Failure> {
    let payload = read_payload(input)?;
    Document::parse(&payload)
        .and_then(|doc| f(&doc))
        .map_err(|e| locate(e, &payload))
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Falsified(what()))
    }
}

fn system_report(out: &mut String, name: &str, sys: &QuadricSystem) -> quadrics::Result<()> {
    let _ = writeln!(out, "[{name}]");
    let _ = writeln!(out, "params: {}", sys.params().join(", "));
    for f in sys.forms() {
        let _ = writeln!(out, "form: {}", f.to_poly());
    }
    let _ = writeln!(out, "discriminant: {}", sys.discriminant()?);
    Ok(())
}

fn net_genus2(l1: Rational, l2: Rational) -> Outcome {
    let d = genus2::Genus2Data::new(l1, l2)?;
    let net = genus2::higgs_net(&d)?;
    let n = genus2::normalize_net(&net, &d)?;
    let mut out = format!("[trace]\ntr_phi2: {}\n", genus2::trace_square(&d));
    system_report(&mut out, "net", &net)?;
    let _ = writeln!(out, "[substitution]");
    let mut subst: Vec<(String, Poly)> = genus2::normalization_substitution(&n).into_iter().collect();
    subst.sort_by(|a, b| a.0.cmp(&b.0));
    for (v, p) in subst {
        let _ = writeln!(out, "{v}: {p}");
    }
    let _ = writeln!(out, "completed: {}", n.completed_linear_form);
    out.push_str(&text::write_rat_matrix("parameter_change", &n.s));
    let _ = writeln!(out, "[scalars]");
    let _ = writeln!(out, "diagonal: {}", rational::format_list(&n.diagonal));
    let _ = writeln!(out, "corrections: {}", rational::format_list(&n.corrections));
    system_report(&mut out, "normalized", &n.normalized)?;
    let disc = n.normalized.discriminant()?;
    let c = disc
        .div_exact(&Poly::parse("z1*z2*z3")?)
        .and_then(|q| q.constant_value())
        .filter(|c| !num_traits::Zero::is_zero(c));
    check(c.is_some(), || format!("normalized discriminant {disc} is not c*z1*z2*z3"))?;
    let _ = writeln!(out, "factored: {} * z1 * z2 * z3", rational::format(&c.unwrap()));
    Ok(out)
}

fn net_nilpotent() -> Outcome {
    let net = genus2::higgs_net_nilpotent();
    let mut out = String::new();
    system_report(&mut out, "net", &net)?;
    let disc = net.discriminant()?;
    let _ = writeln!(out, "repeated_factor: {}", disc.has_repeated_factor());
    Ok(out)
}

fn pencil(input: &Input) -> Outcome {
    let (q1, q2) = with_payload(input, |doc| {
        Ok((text::read_quadform(doc.section("q1")?)?, text::read_quadform(doc.section("q2")?)?))
    })?;
    let sextic = genus2::pencil_sextic(&q1, &q2)?;
    let roots = genus2::branch_points(&sextic)?;
    let mut out = format!("[sextic]\nform: {sextic}\n[branch_points]\n");
    for b in &roots {
        let _ = writeln!(out, "root: {b}");
    }
    for b in &roots {
        if let genus2::RootValue::Numeric { residual, .. } = b.root {
            check(residual < genus2::ROOT_RESIDUAL_TOL, || format!("root {b} exceeds the residual tolerance"))?;
        }
    }
    Ok(out)
}

fn atiyah(input: &Input) -> Outcome {
    let pts = with_payload(input, |doc| {
        let section = doc.section("points")?;
        let mut pts = Vec::new();
        for e in section.all("point") {
            let (nums, sheet) = e.value.rsplit_once(',').ok_or_else(|| Error::Parse {
                pos: e.offset,
                msg: "expected `z1, z2, +|-`".into(),
            })?;
            let sheet = match sheet.trim() {
                "+" => Sheet::Plus,
                "-" => Sheet::Minus,
                _ => {
                    return Err(Error::Parse {
                        pos: e.offset + nums.len() + 1,
                        msg: "sheet must be + or -".into(),
                    })
                }
            };
            let v = rational::parse_list(nums).map_err(|err| match err {
                Error::Parse { pos, msg } => Error::Parse { pos: pos + e.offset, msg },
                other => other,
            })?;
            if v.len() != 2 {
                return Err(Error::Parse { pos: e.offset, msg: "expected two base coordinates".into() });
            }
            pts.push(CoverPoint::new((v[0].clone(), v[1].clone()), sheet)?);
        }
        if pts.len() != 3 {
            return Err(Error::Parse {
                pos: section.offset,
                msg: format!("[points] needs 3 points, found {}", pts.len()),
            });
        }
        Ok(pts)
    })?;
    let triples = genus2::atiyah_triples(&pts[0], &pts[1], &pts[2]);
    let mut out = String::from("[orbit]\n");
    for t in &triples {
        let _ = writeln!(out, "triple: {t}");
    }
    Ok(out)
}

fn klein(cmd: &Klein) -> Outcome {
    let out = match cmd {
        Klein::Plucker { a, b } => {
            let l = twistor::plucker_from_points(a, b)?;
            format!("plucker: {}\n", rational::format_list(l.coords()))
        }
        Klein::Incident { l1, l2 } => {
            let l1 = twistor::PluckerPoint::new(l1.clone())?;
            let l2 = twistor::PluckerPoint::new(l2.clone())?;
            format!("incident: {}\n", twistor::lines_incident(&l1, &l2))
        }
        Klein::Alpha { point } => text::write_subspace("alpha", &twistor::alpha_plane(point)?),
        Klein::Beta { plane } => text::write_subspace("beta", &twistor::beta_plane(plane)?),
        Klein::Flag { point, plane } => match twistor::flag_null_geodesic(point, plane)? {
            Some(line) => text::write_subspace("geodesic", &line),
            None => "geodesic: none (point not in plane)\n".into(),
        },
        Klein::Family(input) => {
            let planes = with_payload(input, |doc| {
                doc.sections_named("plane").map(text::read_subspace).collect::<quadrics::Result<Vec<_>>>()
            })?;
            if planes.len() != 2 {
                return Err(Failure::Input(format!("expected 2 [plane] sections, found {}", planes.len())));
            }
            let fam = twistor::plane_family_compare(&planes[0], &planes[1])?;
            format!("family: {}\n", format!("{fam:?}").to_lowercase())
        }
    };
    Ok(out)
}

fn conics_null(input: &Input) -> Outcome {
    let (c1, c2) = with_payload(input, |doc| {
        let q1 = text::read_quadform(doc.section("q1")?)?;
        let q2 = text::read_quadform(doc.section("q2")?)?;
        let mut conics = Vec::new();
        for s in doc.sections_named("conic") {
            let zs = s.get("z")?;
            let z = zs.rationals()?;
            if z.len() != 2 {
                return Err(Error::Parse { pos: zs.offset, msg: "z needs two entries".into() });
            }
            let plane = text::read_subspace(s)?;
            conics.push(twistor::conic_on_intersection((z[0].clone(), z[1].clone()), &plane, &q1, &q2)?);
        }
        if conics.len() != 2 {
            return Err(Error::Invalid(format!("expected 2 [conic] sections, found {}", conics.len())));
        }
        let c2 = conics.pop().unwrap();
        Ok((conics.pop().unwrap(), c2))
    })?;
    let mut out = String::new();
    for (i, c) in [&c1, &c2].iter().enumerate() {
        out.push_str(&text::write_rat_matrix(&format!("conic{}", i + 1), c.conic()));
    }
    let _ = writeln!(out, "null_separated: {}", twistor::conics_null_separated(&c1, &c2)?);
    Ok(out)
}

fn det_identity(count: u64, seed: u64, corrupt: bool) -> Outcome {
    let mut q0 = genus3::q0_matrix();
    if corrupt {
        q0[(0, 5)] = -q0[(0, 5)].clone();
        q0[(5, 0)] = -q0[(5, 0)].clone();
    }
    for i in 0..count {
        let d = random::pairing_data(&mut random::instance_rng(seed, i));
        let residual = genus3::det_identity_residual_with(&d, &q0)?;
        check(residual.is_zero(), || {
            format!(
                "instance {i}: det(Q2 + pQ0) - (det Q - p^2)^3 is nonzero\n{}",
                text::write_pairing("pairing", &d)
            )
        })?;
    }
    Ok(format!("det-identity: {count} instances exact (seed {seed})\n"))
}

fn tangency(a: &Option<[Rational; 3]>, b: &Option<[Rational; 3]>, count: u64, seed: u64) -> Outcome {
    let tetrads: Vec<TetradData> = match (a, b) {
        (Some(a), Some(b)) => vec![TetradData::new(a.clone(), b.clone())?],
        _ => (0..count).map(|i| random::tetrad(&mut random::instance_rng(seed, i))).collect(),
    };
    let lines = genus3::tetrad_lines();
    let mut out = String::new();
    for (i, t) in tetrads.iter().enumerate() {
        let d = t.pairing_data();
        let curve = genus3::curve_equation(&d)?;
        for l in &lines {
            let r = genus3::restrict_to_line(&curve, l)?;
            check(genus3::restriction_is_negative_square(&curve, l)?, || {
                format!("instance {i}: restriction to {l} is {r}, not minus a square")
            })?;
            if tetrads.len() == 1 {
                let _ = writeln!(out, "line: {l}\nrestriction: {r}");
            }
        }
    }
    let _ = writeln!(out, "tangency: {} tetrads x 4 lines, minus a square", tetrads.len());
    Ok(out)
}

fn tetrad(t: &Tetrad) -> quadrics::Result<TetradData> {
    TetradData::new(t.a.clone(), t.b.clone())
}

fn syzygetic(t: &Tetrad) -> Outcome {
    let t = tetrad(t)?;
    let fam = genus3::syzygetic_family(&t);
    let mut out = String::from("[family]\n");
    for (name, q) in genus3::UV_VARS.iter().zip(&fam.quadrics) {
        let _ = writeln!(out, "{name}: {}", q.to_poly());
    }
    out.push_str(&text::write_poly_matrix("matrix", &fam.matrix));
    let det = genus3::discriminant_components(&t)?;
    let product = genus3::component_product(&t);
    let _ = writeln!(out, "[discriminant]\ndet: {det}\np: {}", t.p_uv());
    check(det == product, || format!("det(M) differs from the product of u_i*v_i - p^2 for a = {:?}", t.a()))?;
    let _ = writeln!(out, "factored: (u1*v1 - p^2)*(u2*v2 - p^2)*(u3*v3 - p^2)");
    let _ = writeln!(out, "[triple]\ndiscriminant: {}", genus3::triple_discriminant(&t)?);
    let _ = writeln!(out, "[curve]\nquartic: {}", genus3::curve_equation(&t.pairing_data())?);
    Ok(out)
}

fn triple_discriminant(t: &Tetrad) -> Outcome {
    let t = tetrad(t)?;
    let disc = genus3::triple_discriminant(&t)?;
    let fit = genus3::fit_triple_constants(&disc, &t)?;
    let mut out = format!("discriminant: {disc}\ninvariants: {}\n", rational::format_list(&t.invariants()));
    let _ = writeln!(out, "kappa: {}", rational::format(&fit.kappa));
    match &fit.mu {
        Some(mu) => {
            let _ = writeln!(out, "mu: {}", rational::format(mu));
        }
        None => out.push_str("mu: undetermined (all a_i*b_i vanish)\n"),
    }
    Ok(out)
}

fn count_f2(g: u32) -> Outcome {
    let c = theta::count_theta_chars(g)?;
    let planes = theta::count_isotropic_planes(g)?;
    Ok(format!("theta: {} total, {} odd; isotropic planes: {planes}\n", c.total, c.odd))
}

fn run_selftest(seed: u64, timings: bool, only: Option<u32>) -> Outcome {
    let reports = match only {
        Some(id) => vec![selftest::run_one(id, seed)
            .ok_or_else(|| Failure::Input(format!("no criterion {id}")))?],
        None => selftest::run_all(seed),
    };
    let table = selftest::format_table(&reports, timings);
    if reports.iter().all(|r| r.passed) {
        Ok(table)
    } else {
        Err(Failure::Falsified(table))
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::NetGenus2 { lambda1, lambda2 } => net_genus2(lambda1.clone(), lambda2.clone()),
        Command::NetNilpotent => net_nilpotent(),
        Command::Pencil(input) => pencil(input),
        Command::AtiyahTriples(input) => atiyah(input),
        Command::Klein(k) => klein(k),
        Command::ConicsNull(input) => conics_null(input),
        Command::Genus3(Genus3::DetIdentity { count, seed, corrupt_q0 }) => det_identity(*count, *seed, *corrupt_q0),
        Command::Genus3(Genus3::Tangency { a, b, count, seed }) => tangency(a, b, *count, *seed),
        Command::Syzygetic(t) => syzygetic(t),
        Command::TripleDiscriminant(t) => triple_discriminant(t),
        Command::CountF2 { genus } => count_f2(*genus),
        Command::Selftest { seed, timings, only } => run_selftest(*seed, *timings, *only),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Falsified(msg)) => {
            print!("{msg}");
            if !msg.ends_with('\n') {
                println!();
            }
            eprintln!("check failed");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
