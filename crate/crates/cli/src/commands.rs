use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use clap::Parser;
use serde_json::{json, Value};

use hijac_core::groebner::{groebner_basis, standard_basis, MonomialOrder};
use hijac_core::jacobian::{jac_matrix, jacobian_ideal_with, JacobianError, MatrixVersion};
use hijac_core::motivic::{
    contact_locus_class, expand, expand_scaled, gro_equal, nearby_cycle, series_equal, zeta, GroVal,
    MotivicError, RationalSeries,
};
use hijac_core::nash::{self, ContactWitness, NashError};
use hijac_core::poly::{parse_poly, MultiIndex, PolyError, Polynomial, Substitution};
use hijac_core::report::{Report, SubCheck, Verdict};
use hijac_core::resolve::{
    compare_coverings, m_separate, resolve_curve, Locus, ResolutionGraph, ResolveError,
};

use crate::args::{Check, Cli, Command, Common, PolyArgs, Version};
use crate::rg;

/// Result of one invocation: exit status and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ABORT: i32 = 3;

enum Failure {
    Usage(String),
    Abort(String),
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<rg::RgError> for Failure {
    fn from(e: rg::RgError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<JacobianError> for Failure {
    fn from(e: JacobianError) -> Self {
        match e {
            JacobianError::OrderTooSmall => Failure::Usage(e.to_string()),
            _ => Failure::Abort(e.to_string()),
        }
    }
}

impl From<NashError> for Failure {
    fn from(e: NashError) -> Self {
        match e {
            NashError::Jacobian(j) => j.into(),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<ResolveError> for Failure {
    fn from(e: ResolveError) -> Self {
        match e {
            ResolveError::ZeroPolynomial | ResolveError::NotAtOrigin | ResolveError::NotPlaneCurve(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Abort(e.to_string()),
        }
    }
}

impl From<MotivicError> for Failure {
    fn from(e: MotivicError) -> Self {
        match e {
            MotivicError::InvalidOrder => Failure::Usage(e.to_string()),
            _ => Failure::Abort(e.to_string()),
        }
    }
}

/// What a command produced. `verdict` is set by commands that run checks.
struct Output {
    text: String,
    json: Value,
    verdict: Option<Verdict>,
    warnings: Vec<String>,
}

impl Output {
    fn plain(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            verdict: None,
            warnings: Vec::new(),
        }
    }

    fn report(r: &Report, json: Value) -> Self {
        Output {
            text: r.to_string(),
            json,
            verdict: Some(r.verdict()),
            warnings: Vec::new(),
        }
    }
}

/// Parse `argv` (including the program name) and execute it.
///
/// Exit statuses: 0 success or PASS, 1 FAIL or UNDECIDED, 2 usage or parse
/// error, 3 aborted computation.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                // --help
                Outcome {
                    status: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(out) => {
            let status = match out.verdict {
                Some(Verdict::Fail | Verdict::Undecided) => EXIT_FAIL,
                _ => EXIT_OK,
            };
            let mut stdout = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("json values serialize")
            } else {
                out.text
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            let stderr = out.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            Outcome { status, stdout, stderr }
        }
        Err(Failure::Usage(m)) => Outcome {
            status: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
        Err(Failure::Abort(m)) => Outcome {
            status: EXIT_ABORT,
            stdout: String::new(),
            stderr: format!("aborted: {m}\n"),
        },
    }
}

fn dispatch(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Jac(p) => jac(p),
        Command::Ideal { p, local } => ideal(p, *local),
        Command::NashDim(p) => nash_dim(p),
        Command::Check(c) => check(c),
        Command::Resolve { f, d, out } => resolve(f, *d, out.as_deref()),
        Command::Separate { graph, m, out } => separate(graph, *m, out.as_deref()),
        Command::Zeta { graph, expand, d } => zeta_cmd(graph, *expand, *d),
        Command::Nearby { graph } => nearby(graph),
        Command::Expand { graph, upto, d } => expand_cmd(graph, *upto, *d),
        Command::Compare { f, g, d, upto } => compare(f, g, *d, *upto),
    }
}

/// Largest `k` such that `x<k>` occurs in the expression, at least 1.
fn infer_dim(text: &str) -> usize {
    let b = text.as_bytes();
    let mut best = 1;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' && (i == 0 || !b[i - 1].is_ascii_alphanumeric()) {
            let digits: String = text[i + 1..].chars().take_while(char::is_ascii_digit).collect();
            if let Ok(k) = digits.parse::<usize>() {
                best = best.max(k);
            }
        }
        i += 1;
    }
    best
}

fn parse(text: &str, d: Option<usize>) -> Result<Polynomial, Failure> {
    let d = d.unwrap_or_else(|| infer_dim(text));
    if d == 0 {
        return Err(Failure::Usage("d must be positive".into()));
    }
    Ok(parse_poly(text, d)?)
}

fn parse_substitution(text: &str, d: usize) -> Result<Substitution, Failure> {
    let images = text
        .split(';')
        .map(|p| parse_poly(p, d))
        .collect::<Result<Vec<_>, _>>()?;
    if images.len() != d {
        return Err(Failure::Usage(format!(
            "substitution needs {d} images separated by `;`, got {}",
            images.len()
        )));
    }
    Ok(Substitution::new(images)?)
}

fn version(v: Version) -> MatrixVersion {
    match v {
        Version::Zero => MatrixVersion::ZeroDiagonal,
        Version::FDiag => MatrixVersion::FDiagonal,
        Version::JacobiTaylor => MatrixVersion::JacobiTaylor,
    }
}

fn version_name(v: Version) -> &'static str {
    match v {
        Version::Zero => "zero",
        Version::FDiag => "f-diag",
        Version::JacobiTaylor => "jacobi-taylor",
    }
}

fn index_text(a: &MultiIndex) -> String {
    let parts: Vec<String> = a.entries().iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn monomial_text(a: &MultiIndex) -> String {
    Polynomial::monomial(a.clone(), hijac_core::poly::rat(1)).to_string()
}

fn polys_json(ps: &[Polynomial]) -> Value {
    Value::from(ps.iter().map(|p| p.to_string()).collect::<Vec<_>>())
}

fn jac(p: &PolyArgs) -> Result<Output, Failure> {
    let f = parse(&p.f, p.d)?;
    let m = jac_matrix(&f, p.n, version(p.version))?;
    let mut text = format!(
        "Jac_{}(f) for f = {f} (version {}), {} x {}\n",
        p.n,
        version_name(p.version),
        m.nrows(),
        m.ncols()
    );
    let rows: Vec<String> = m.row_indices().iter().map(index_text).collect();
    let cols: Vec<String> = m.col_indices().iter().map(index_text).collect();
    let _ = writeln!(text, "rows: {}", rows.join(" "));
    let _ = writeln!(text, "columns: {}", cols.join(" "));
    let grid: Vec<Vec<String>> = m
        .grid()
        .iter()
        .map(|r| r.iter().map(|e| e.to_string()).collect())
        .collect();
    for r in &grid {
        let _ = writeln!(text, "[{}]", r.join(", "));
    }
    let json = json!({
        "command": "jac",
        "f": f.to_string(),
        "n": p.n,
        "version": version_name(p.version),
        "rows": rows,
        "columns": cols,
        "entries": grid,
    });
    Ok(Output::plain(text, json))
}

fn ideal(p: &PolyArgs, local: bool) -> Result<Output, Failure> {
    let f = parse(&p.f, p.d)?;
    let j = jacobian_ideal_with(&f, p.n, version(p.version))?;
    let (basis, kind) = if local {
        (standard_basis(&j).basis(), "minimal standard basis (local order)")
    } else {
        let gb = groebner_basis(&j, MonomialOrder::GradedLex).expect("global order");
        (gb.basis(), "reduced Groebner basis (graded lex)")
    };
    let mut text = format!("J_{}(f) for f = {f}, {kind}:\n", p.n);
    for b in &basis {
        let _ = writeln!(text, "{b}");
    }
    let json = json!({
        "command": "ideal",
        "f": f.to_string(),
        "n": p.n,
        "version": version_name(p.version),
        "local": local,
        "generators": polys_json(&basis),
    });
    Ok(Output::plain(text, json))
}

fn nash_dim(p: &PolyArgs) -> Result<Output, Failure> {
    let f = parse(&p.f, p.d)?;
    let a = nash::nash_algebra_with(&f, p.n, version(p.version))?;
    let (text, json) = match a.monomial_basis() {
        Some(basis) => {
            let names: Vec<String> = basis.iter().map(monomial_text).collect();
            (
                format!(
                    "dimension of M_{}(f) for f = {f}: {}\nbasis: {}\n",
                    p.n,
                    basis.len(),
                    names.join(", ")
                ),
                json!({
                    "command": "nash-dim",
                    "f": f.to_string(),
                    "n": p.n,
                    "dimension": basis.len(),
                    "basis": names,
                }),
            )
        }
        None => (
            format!("dimension of M_{}(f) for f = {f}: infinite\n", p.n),
            json!({
                "command": "nash-dim",
                "f": f.to_string(),
                "n": p.n,
                "dimension": Value::Null,
                "basis": Value::Null,
            }),
        ),
    };
    Ok(Output::plain(text, json))
}

fn report_json(command: &str, r: &Report) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c: &SubCheck| {
            json!({
                "name": c.name,
                "verdict": c.verdict.as_str(),
                "detail": c.detail,
                "offending": c.offending.as_ref().map(|p| p.to_string()),
            })
        })
        .collect();
    json!({
        "command": command,
        "title": r.title,
        "verdict": r.verdict().as_str(),
        "checks": checks,
        "notes": r.notes,
    })
}

fn common(c: &Common) -> Result<(Polynomial, usize), Failure> {
    let f = parse(&c.f, c.d)?;
    let d = f.nvars();
    Ok((f, d))
}

fn check(c: &Check) -> Result<Output, Failure> {
    let (name, r) = match c {
        Check::Contact {
            c,
            g,
            sigma,
            u,
            degree_bound,
        } => {
            let (f, d) = common(c)?;
            let g = parse_poly(g, d)?;
            let sigma = match sigma {
                Some(s) => parse_substitution(s, d)?,
                None => Substitution::identity(d),
            };
            let w = ContactWitness::new(sigma, parse_poly(u, d)?, *degree_bound)?;
            ("check contact", nash::check_contact_invariance(&f, &g, &w, c.n)?)
        }
        Check::Unit { c, u } => {
            let (f, d) = common(c)?;
            ("check unit", nash::check_unit_invariance(&f, &parse_poly(u, d)?, c.n)?)
        }
        Check::DetCongruence { c, u } => {
            let (f, d) = common(c)?;
            (
                "check det-congruence",
                nash::check_det_congruence(&f, &parse_poly(u, d)?, c.n)?,
            )
        }
        Check::Autoeq { c, sigma, global } => {
            let (f, d) = common(c)?;
            let s = parse_substitution(sigma, d)?;
            let order = if *global {
                MonomialOrder::GradedLex
            } else {
                MonomialOrder::LocalGraded
            };
            (
                "check autoeq",
                nash::check_automorphism_equivariance_in(&f, &s, c.n, order)?,
            )
        }
        Check::Inclusion { c } => {
            let (f, _) = common(c)?;
            ("check inclusion", nash::check_inclusion_j1_power(&f, c.n)?)
        }
        Check::Weighted { c, weights, u } => {
            let (f, d) = common(c)?;
            let w = match weights {
                Some(w) => w.clone(),
                None => nash::binomial_weights(&f).ok_or_else(|| {
                    Failure::Usage("cannot infer weights; pass --weights".into())
                })?,
            };
            (
                "check weighted",
                nash::check_weighted_homogeneous_invariance(&f, &w, &parse_poly(u, d)?, c.n)?,
            )
        }
    };
    Ok(Output::report(&r, report_json(name, &r)))
}

pub(crate) fn graph_json(g: &ResolutionGraph) -> Value {
    let divisors: Vec<Value> = g
        .divisors
        .iter()
        .map(|d| json!({"id": d.id, "N": d.n, "nu": d.nu, "kind": d.kind.as_str()}))
        .collect();
    let intersections: Vec<Value> = g
        .intersections
        .iter()
        .map(|x| {
            let (point, locus) = match &x.locus {
                Some(Locus::Point(a, b)) => (Some(vec![a.to_string(), b.to_string()]), None),
                Some(Locus::Ideal(gens)) => {
                    (None, Some(gens.iter().map(|p| p.to_text("y")).collect::<Vec<_>>()))
                }
                None => (None, None),
            };
            json!({"a": x.a, "b": x.b, "chart": x.chart, "point": point, "locus": locus})
        })
        .collect();
    let charts: Vec<Value> = g
        .charts
        .iter()
        .map(|c| {
            let visible: Vec<Value> = c
                .visible
                .iter()
                .map(|(id, eq)| json!({"divisor": id, "equation": eq.to_text("y")}))
                .collect();
            let map: Vec<String> = c.map.images().iter().map(|p| p.to_text("y")).collect();
            json!({"id": c.id, "map": map, "visible": visible})
        })
        .collect();
    let strata: Vec<Value> = g
        .strata
        .iter()
        .map(|s| {
            json!({
                "I": s.ids,
                "class": s.class,
                "cover": s.cover,
                "unit": s.unit.as_ref().map(|u| u.to_text("y")),
                "chart": s.chart,
            })
        })
        .collect();
    let blowups: Vec<Value> = g
        .blowups
        .iter()
        .map(|b| json!({"new": b.new, "through": b.through}))
        .collect();
    json!({
        "id": g.id,
        "ambient_dim": g.ambient_dim,
        "source": g.source.as_ref().map(|f| f.to_string()),
        "divisors": divisors,
        "intersections": intersections,
        "charts": charts,
        "strata": strata,
        "blowups": blowups,
        "warnings": g.warnings,
    })
}

fn load(path: &Path) -> Result<ResolutionGraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    rg::read(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit_graph(command: &str, g: &ResolutionGraph, out: Option<&Path>) -> Result<Output, Failure> {
    let text = rg::write(g);
    let stdout = match out {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            format!("wrote {}\n", path.display())
        }
        None => text,
    };
    let mut o = Output::plain(stdout, json!({"command": command, "graph": graph_json(g)}));
    o.warnings = g.warnings.clone();
    Ok(o)
}

fn resolve(f: &str, d: usize, out: Option<&Path>) -> Result<Output, Failure> {
    let f = parse(f, Some(d))?;
    let g = resolve_curve(&f)?;
    emit_graph("resolve", &g, out)
}

fn separate(path: &Path, m: u64, out: Option<&Path>) -> Result<Output, Failure> {
    let g = m_separate(&load(path)?, m)?;
    emit_graph("separate", &g, out)
}

fn series_json(z: &RationalSeries) -> Value {
    let terms: Vec<Value> = z
        .terms
        .iter()
        .map(|t| {
            let factors: Vec<Value> = t.factors.iter().map(|x| json!([x.p(), x.q()])).collect();
            json!({"coeff": t.coeff.to_string(), "factors": factors})
        })
        .collect();
    json!({"constant": z.constant.to_string(), "terms": terms})
}

fn series_text(z: &RationalSeries) -> String {
    let mut text = String::from("Z(T) = sum of\n");
    if !z.constant.is_zero() {
        let _ = writeln!(text, "  {}", z.constant);
    }
    for t in &z.terms {
        let factors: Vec<String> = t.factors.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(text, "  ({}) * {}", t.coeff, factors.join(" * "));
    }
    text.push_str("where F(p,q) = L^p T^q / (1 - L^p T^q)\n");
    text
}

/// Rows `m, coefficient of T^m, [X_m] = L^{dm} * coefficient`.
fn expansion(z: &RationalSeries, upto: usize, d: usize) -> (String, Value) {
    let raw = expand(z, upto);
    let scaled = expand_scaled(z, upto, d);
    let mut text = format!("m | coefficient of T^m | [X_m] = L^({d}m) * coefficient\n");
    let mut rows = Vec::new();
    for (i, (r, s)) in raw.iter().zip(&scaled).enumerate() {
        let _ = writeln!(text, "{} | {r} | {s}", i + 1);
        rows.push(json!({"m": i + 1, "coefficient": r.to_string(), "contact_locus": s.to_string()}));
    }
    (text, Value::from(rows))
}

fn zeta_cmd(path: &Path, upto: Option<usize>, d: Option<usize>) -> Result<Output, Failure> {
    let g = load(path)?;
    let z = zeta(&g)?;
    let mut text = series_text(&z);
    let mut json = json!({"command": "zeta", "graph": g.id, "series": series_json(&z)});
    if let Some(m) = upto {
        let (t, rows) = expansion(&z, m, d.unwrap_or(g.ambient_dim));
        text.push_str(&t);
        json["expansion"] = rows;
    }
    Ok(Output::plain(text, json))
}

fn nearby(path: &Path) -> Result<Output, Failure> {
    let g = load(path)?;
    let s = nearby_cycle(&g)?;
    let text = format!("S_f = {s}\n");
    Ok(Output::plain(
        text,
        json!({"command": "nearby", "graph": g.id, "nearby_cycle": s.to_string()}),
    ))
}

fn expand_cmd(path: &Path, upto: usize, d: Option<usize>) -> Result<Output, Failure> {
    let g = load(path)?;
    let z = zeta(&g)?;
    let (text, rows) = expansion(&z, upto, d.unwrap_or(g.ambient_dim));
    Ok(Output::plain(
        text,
        json!({"command": "expand", "graph": g.id, "expansion": rows}),
    ))
}

fn compare(f: &str, g: &str, d: usize, upto: u64) -> Result<Output, Failure> {
    let f = parse(f, Some(d))?;
    let g = parse(g, Some(d))?;
    let mut r = Report::new(format!("comparison of f = {f} and g = {g}"));

    let j2 = standard_basis(&jacobian_ideal_with(&f, 2, MatrixVersion::ZeroDiagonal)?);
    let diff = &g - &f;
    r.push(if j2.contains(&diff) {
        SubCheck::new("g - f in J_2(f)", Verdict::Pass).with_detail(format!("g - f = {diff}"))
    } else {
        SubCheck::new("g - f in J_2(f)", Verdict::Fail).with_offending(diff)
    });

    let (gf, gg) = (resolve_curve(&f)?, resolve_curve(&g)?);
    let cmp = compare_coverings(&gf, &gg)?;
    r.absorb("", cmp.report);
    let cert = cmp.certificate.as_ref();

    for m in 1..=upto {
        let (a, b) = (contact_locus_class(&gf, m, d)?, contact_locus_class(&gg, m, d)?);
        r.push(gro_check(&format!("[X_{m}(f)] = [X_{m}(g)]"), gro_equal(&a, &b, cert), &a));
    }
    let (zf, zg) = (zeta(&gf)?, zeta(&gg)?);
    r.push(gro_check("zeta series coincide", series_equal(&zf, &zg, cert), &GroVal::zero()));

    let mut out = Output::report(&r, report_json("compare", &r));
    out.json["f_graph"] = graph_json(&gf);
    out.json["g_graph"] = graph_json(&gg);
    out.warnings = gf.warnings.iter().chain(&gg.warnings).cloned().collect();
    Ok(out)
}

fn gro_check(name: &str, eq: Result<bool, MotivicError>, shown: &GroVal) -> SubCheck {
    match eq {
        Ok(true) if shown.is_zero() => SubCheck::new(name, Verdict::Pass),
        Ok(true) => SubCheck::new(name, Verdict::Pass).with_detail(shown.to_string()),
        Ok(false) => SubCheck::new(name, Verdict::Fail),
        Err(e) => SubCheck::new(name, Verdict::Undecided).with_detail(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_inference() {
        assert_eq!(infer_dim("x1^3 - x2^2"), 2);
        assert_eq!(infer_dim("3"), 1);
        assert_eq!(infer_dim("x12 + x3"), 12);
    }

    #[test]
    fn exit_codes_of_failures() {
        assert_eq!(run(["hijac", "bogus"]).status, EXIT_USAGE);
        assert_eq!(run(["hijac", "jac", "-f", "x1^"]).status, EXIT_USAGE);
        assert_eq!(run(["hijac", "--help"]).status, EXIT_OK);
        let o = run(["hijac", "resolve", "-f", "(x2^2 - 2*x1^2)^2 + x1^5"]);
        assert_eq!(o.status, EXIT_ABORT, "{o:?}");
    }
}
