//! JSON and text rendering of certificates and solver reports.

use std::fmt::Write as _;

use malmquist_core::bounds::BoundCertificate;
use malmquist_core::solver::{ChartReport, DegreeReport, Verification};
use malmquist_core::{EquationKind, REq, SolutionReport};
use serde::Serialize;

#[derive(Serialize)]
pub struct BoundsJson {
    pub degree: usize,
    /// Decimal string; the value overflows JSON numbers.
    pub count: String,
    pub height_nats: f64,
    pub height_expression: String,
    pub height_magnitude: String,
    pub height_instantiated_nats: f64,
    pub height_instantiated_expression: String,
    pub per_degree: Vec<PerDegreeBoundJson>,
}

#[derive(Serialize)]
pub struct PerDegreeBoundJson {
    pub k: usize,
    pub component_degree_bound: String,
}

impl From<&BoundCertificate> for BoundsJson {
    fn from(b: &BoundCertificate) -> Self {
        BoundsJson {
            degree: b.degree_bound,
            count: b.count_bound.to_string(),
            height_nats: b.height_bound.value(),
            height_expression: b.height_bound.expression(),
            height_magnitude: b.height_bound.magnitude_bound().to_string(),
            height_instantiated_nats: b.height_bound_instantiated.value(),
            height_instantiated_expression: b.height_bound_instantiated.expression(),
            per_degree: b
                .per_degree_bounds
                .iter()
                .map(|(&k, v)| PerDegreeBoundJson {
                    k,
                    component_degree_bound: v.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub equation: String,
    pub kind: String,
    pub d: usize,
    pub degz: usize,
    pub resultant: String,
    pub bounds: Option<BoundsJson>,
    pub hypothesis_violation: Option<String>,
}

pub fn certificate_json(r: &REq) -> CertificateJson {
    let cert = BoundCertificate::for_equation(r);
    CertificateJson {
        equation: r.to_string(),
        kind: r.kind().to_string(),
        d: r.d(),
        degz: r.degz(),
        resultant: r.resultant().to_string(),
        bounds: cert.as_ref().ok().map(BoundsJson::from),
        hypothesis_violation: cert.err().map(|e| e.to_string()),
    }
}

pub fn certificate_text(c: &CertificateJson) -> String {
    let mut s = String::new();
    writeln!(s, "equation: {} ({})", c.equation, c.kind).unwrap();
    writeln!(s, "deg_w = {}, deg_z = {}, Res(P, Q) = {}", c.d, c.degz, c.resultant).unwrap();
    match (&c.bounds, &c.hypothesis_violation) {
        (Some(b), _) => {
            writeln!(s, "degree bound: {}", b.degree).unwrap();
            writeln!(s, "count bound: {}", b.count).unwrap();
            writeln!(s, "height bound: {} = {:.6} nats", b.height_expression, b.height_nats).unwrap();
            writeln!(s, "coefficient magnitude bound: {}", b.height_magnitude).unwrap();
            writeln!(
                s,
                "height bound (computed deg Res): {} = {:.6} nats",
                b.height_instantiated_expression, b.height_instantiated_nats
            )
            .unwrap();
            for p in &b.per_degree {
                writeln!(s, "  k = {}: component degree bound {}", p.k, p.component_degree_bound).unwrap();
            }
        }
        (None, Some(msg)) => writeln!(s, "hypothesis violated: {msg}").unwrap(),
        (None, None) => {}
    }
    s
}

#[derive(Serialize)]
pub struct ChartJson {
    pub id: String,
    pub status: String,
    pub detail: Option<String>,
    pub residuals: Vec<String>,
    pub points: usize,
    pub steps: u64,
    pub seconds: f64,
}

#[derive(Serialize)]
pub struct DegreeJson {
    pub k: usize,
    pub status: String,
    pub detail: Option<String>,
    pub solutions: Vec<String>,
    pub charts: Vec<ChartJson>,
}

#[derive(Serialize)]
pub struct ChecksJson {
    pub count_within_bound: bool,
    pub degree_within_bound: bool,
    pub height_within_bound: bool,
}

#[derive(Serialize)]
pub struct TimingsJson {
    pub total_seconds: f64,
    pub per_degree_seconds: Vec<f64>,
}

#[derive(Serialize)]
pub struct SolveJson {
    pub equation: String,
    pub kind: String,
    pub status: String,
    pub bounds: Option<BoundsJson>,
    pub checks: Option<ChecksJson>,
    pub solutions: Vec<String>,
    pub per_degree: Vec<DegreeJson>,
    pub timings: TimingsJson,
}

fn chart_json(c: &ChartReport) -> ChartJson {
    ChartJson {
        id: c.id.clone(),
        status: c.status.to_string(),
        detail: c.detail.clone(),
        residuals: c.residuals.iter().map(|r| r.to_string()).collect(),
        points: c.points,
        steps: c.steps,
        seconds: c.elapsed.as_secs_f64(),
    }
}

fn degree_json(d: &DegreeReport) -> DegreeJson {
    DegreeJson {
        k: d.k,
        status: d.status.to_string(),
        detail: d.detail.clone(),
        solutions: d.solutions.iter().map(|f| f.to_string()).collect(),
        charts: d.charts.iter().map(chart_json).collect(),
    }
}

pub fn solve_json(rep: &SolutionReport) -> SolveJson {
    let status = if rep.any_unresolved() {
        "unresolved"
    } else if rep.fully_resolved() {
        "resolved"
    } else {
        "partial"
    };
    SolveJson {
        equation: rep.equation.to_string(),
        kind: rep.equation.kind().to_string(),
        status: status.to_string(),
        bounds: rep.bounds.as_ref().map(BoundsJson::from),
        checks: rep.checks.map(|c| ChecksJson {
            count_within_bound: c.count,
            degree_within_bound: c.degree,
            height_within_bound: c.height,
        }),
        solutions: rep.solutions.iter().map(|f| f.to_string()).collect(),
        per_degree: rep.per_degree.iter().map(degree_json).collect(),
        timings: TimingsJson {
            total_seconds: rep.elapsed.as_secs_f64(),
            per_degree_seconds: rep.per_degree.iter().map(|d| d.elapsed.as_secs_f64()).collect(),
        },
    }
}

pub fn solve_text(j: &SolveJson) -> String {
    let mut s = String::new();
    writeln!(s, "equation: {} ({})", j.equation, j.kind).unwrap();
    if let Some(b) = &j.bounds {
        writeln!(s, "degree bound: {}, count bound: {}", b.degree, b.count).unwrap();
        writeln!(s, "height bound: {:.6} nats", b.height_nats).unwrap();
    }
    writeln!(s, "status: {}", j.status).unwrap();
    if j.solutions.is_empty() {
        writeln!(s, "solutions: none").unwrap();
    } else {
        writeln!(s, "solutions:").unwrap();
        for f in &j.solutions {
            writeln!(s, "  {f}").unwrap();
        }
    }
    for d in &j.per_degree {
        write!(s, "k = {}: {}", d.k, d.status).unwrap();
        if let Some(detail) = &d.detail {
            write!(s, " ({detail})").unwrap();
        }
        writeln!(s).unwrap();
        for c in &d.charts {
            if c.status == "unresolved" || !c.residuals.is_empty() {
                write!(s, "    chart {}: {}", c.id, c.status).unwrap();
                if let Some(detail) = &c.detail {
                    write!(s, " ({detail})").unwrap();
                }
                writeln!(s).unwrap();
                for r in &c.residuals {
                    writeln!(s, "      algebraic residual: {r}").unwrap();
                }
            }
        }
    }
    if let Some(c) = &j.checks {
        writeln!(
            s,
            "checks: count {}, degree {}, height {}",
            ok(c.count_within_bound),
            ok(c.degree_within_bound),
            ok(c.height_within_bound)
        )
        .unwrap();
    }
    writeln!(s, "elapsed: {:.3} s", j.timings.total_seconds).unwrap();
    s
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "exceeded"
    }
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub equation: String,
    pub kind: String,
    pub f: String,
    pub valid: bool,
    pub undefined_composition: bool,
    pub lhs: String,
    pub rhs: Option<String>,
}

pub fn verify_json(r: &REq, f: &malmquist_core::RatFunc, v: &Verification) -> VerifyJson {
    VerifyJson {
        equation: r.to_string(),
        kind: r.kind().to_string(),
        f: f.to_string(),
        valid: v.is_valid(),
        undefined_composition: v.undefined_composition(),
        lhs: v.lhs.to_string(),
        rhs: v.rhs.as_ref().map(|x| x.to_string()),
    }
}

pub fn verify_text(j: &VerifyJson, kind: EquationKind) -> String {
    let lhs_name = match kind {
        EquationKind::Difference => "f(z+1)",
        EquationKind::Differential => "f'(z)",
    };
    let mut s = String::new();
    writeln!(s, "{}", if j.valid { "VALID" } else { "INVALID" }).unwrap();
    writeln!(s, "{lhs_name} = {}", j.lhs).unwrap();
    match &j.rhs {
        Some(rhs) => writeln!(s, "R(z, f(z)) = {rhs}").unwrap(),
        None => writeln!(s, "R(z, f(z)) is undefined: the denominator vanishes identically").unwrap(),
    }
    s
}
