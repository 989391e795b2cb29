use std::cell::OnceCell;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::construct::{construct_bundle, roundtrip};
use super::scenario::{Request, Scenario};
use crate::cubic_bundle::{
    chart_value, classify_fiber, curve_point, gm_coordinate, group_multiple, osculating_points, BundleDescriptor,
    DoubleSectionChart, FiberKind, GmPoint, PlanePoint,
};
use crate::error::{Error, Result};
use crate::exact_field::cyclotomic::lcm_u32;
use crate::exact_field::{CurvePoint, Scalar};
use crate::projectivity::{decide_projective, q_cartier_reduce, verify_ab_decomposition, ConstructionInput, Witness};

pub const REPORT_SCHEMA: &str = "cubic-bundles/report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RequestReport {
    /// 1-based position in the scenario.
    pub index: usize,
    pub task: String,
    pub status: Status,
    /// Human-readable lines for the text rendering.
    pub summary: Vec<String>,
    /// Invariant violations found while executing the request.
    #[serde(default)]
    pub findings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub scenario: String,
    pub validation: Vec<String>,
    pub results: Vec<RequestReport>,
}

impl Report {
    pub fn has_errors(&self) -> bool {
        self.results.iter().any(|r| r.status == Status::Error)
    }

    pub fn has_findings(&self) -> bool {
        self.results.iter().any(|r| !r.findings.is_empty())
    }

    /// `0` when every request succeeded without findings, `2` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.has_errors() || self.has_findings() {
            2
        } else {
            0
        }
    }

    pub fn result(&self, task: &str) -> Option<&Value> {
        self.results.iter().find(|r| r.task == task).and_then(|r| r.result.as_ref())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

struct Outcome {
    result: Value,
    summary: Vec<String>,
    findings: Vec<String>,
}

fn outcome<T: Serialize>(result: &T, summary: Vec<String>, findings: Vec<String>) -> Result<Outcome> {
    Ok(Outcome { result: serde_json::to_value(result)?, summary, findings })
}

/// Shared state of one scenario run; the descriptor is built at most once.
struct State<'a> {
    input: Option<&'a ConstructionInput>,
    descriptor: OnceCell<Result<BundleDescriptor>>,
}

impl State<'_> {
    fn input(&self) -> Result<&ConstructionInput> {
        self.input.ok_or_else(|| Error::Validation("this request needs a construction input".into()))
    }

    fn descriptor(&self) -> Result<&BundleDescriptor> {
        let input = self.input()?;
        self.descriptor.get_or_init(|| construct_bundle(input)).as_ref().map_err(Clone::clone)
    }

    fn execute(&self, request: &Request) -> Result<Outcome> {
        match request {
            Request::Construct => self.construct(),
            Request::Decide => self.decide(),
            Request::Roundtrip => self.roundtrip(),
            Request::Osculate { k, fiber } => self.osculate(*k, &CurvePoint::new(fiber.clone())),
            Request::Cartier { xi, k, m } => cartier(xi, *k, *m),
            Request::Classify { fiber } => self.classify(&CurvePoint::new(fiber.clone())),
        }
    }

    fn construct(&self) -> Result<Outcome> {
        #[derive(Serialize)]
        struct Constructed<'a> {
            descriptor: &'a BundleDescriptor,
            invariants: Option<String>,
        }
        let desc = self.descriptor()?;
        let invariants = desc.validate().err().map(|e| e.to_string());
        let mut summary = vec![format!("sigma0 = {}", desc.sigma0), format!("sigmaInf = {}", desc.sigma_inf)];
        for (i, s) in desc.osculating.iter().enumerate() {
            summary.push(format!("sigma{} = {s}", i + 1));
        }
        summary.push(format!("cusp divisor = {}", desc.cusp_divisor));
        summary.push(format!("k = {}", desc.relative_degree));
        summary.push(format!("invariants: {}", invariants.as_deref().unwrap_or("ok")));
        let findings = invariants.iter().cloned().collect();
        outcome(&Constructed { descriptor: desc, invariants }, summary, findings)
    }

    fn decide(&self) -> Result<Outcome> {
        let v = decide_projective(self.input()?)?;
        let ratios: Vec<String> = v.ratios.iter().map(ToString::to_string).collect();
        let mut summary =
            vec![format!("projective: {}", v.projective), format!("ratios v_i/v_1: {}", ratios.join(", "))];
        summary.push(match &v.witness {
            Witness::Orders(o) => format!("orders: {o:?}"),
            Witness::FailingIndex(i) => format!("ratio {i} is not a root of unity"),
        });
        outcome(&v, summary, vec![])
    }

    fn roundtrip(&self) -> Result<Outcome> {
        #[derive(Serialize)]
        struct Shown<'a> {
            roundtrip: bool,
            #[serde(flatten)]
            detail: &'a super::construct::RoundTrip,
        }
        let rt = roundtrip(self.input()?)?;
        let divisors: Vec<String> = rt.recovered.divisors.iter().map(ToString::to_string).collect();
        let constants: Vec<String> = rt.recovered.constants.iter().map(ToString::to_string).collect();
        let summary = vec![
            format!("roundtrip: {}", rt.ok()),
            format!("recovered divisors: {}", divisors.join(", ")),
            format!("recovered constants: {}", constants.join(", ")),
            format!(
                "divisors match: {}, constants match: {}, descriptor restored: {}",
                rt.divisors_match, rt.constants_match, rt.descriptor_restored
            ),
        ];
        let findings = if rt.ok() { vec![] } else { vec!["construction does not round-trip".to_string()] };
        outcome(&Shown { roundtrip: rt.ok(), detail: &rt }, summary, findings)
    }

    fn classify(&self, mu: &CurvePoint) -> Result<Outcome> {
        let f = classify_fiber(self.descriptor()?, mu);
        let summary = vec![format!("fiber x = {mu}: {:?}, c = {}", f.kind, f.c).to_lowercase()];
        outcome(&f, summary, vec![])
    }

    fn osculate(&self, k: u32, mu: &CurvePoint) -> Result<Outcome> {
        #[derive(Serialize)]
        struct Point {
            t: GmPoint,
            plane: PlanePoint,
            /// `k iota(t) ~ k iota(base)` by the chord-tangent construction.
            osculating: bool,
        }
        #[derive(Serialize)]
        struct Osculated {
            fiber: CurvePoint,
            h: Scalar,
            base: GmPoint,
            points: Vec<Point>,
            /// Gm coordinates of the osculating sections in this fiber.
            sections: Vec<GmPoint>,
            /// Whether each section meets the fiber in one of the points.
            on_points: Vec<bool>,
        }
        let desc = self.descriptor()?;
        if classify_fiber(desc, mu).kind == FiberKind::Cuspidal {
            return Err(Error::CuspidalFiber(mu.to_string()));
        }
        let chart = DoubleSectionChart::new(&desc.sigma0, &desc.sigma_inf, mu)?;
        let h = chart.h_at(mu);
        let sections = desc
            .osculating
            .iter()
            .map(|s| gm_coordinate(&h, &chart_value(&chart, s, mu)?))
            .collect::<Result<Vec<_>>>()?;
        let working = lcm_u32(self.input()?.conductor, sections[0].t().conductor());
        let base = GmPoint::new(sections[0].t().embed(working)?)?;
        let target = group_multiple(&h, k, &base)?;
        let mut points = Vec::with_capacity(k as usize);
        for t in osculating_points(k, &base)? {
            let osculating = group_multiple(&h, k, &t)? == target;
            points.push(Point { plane: curve_point(&h, &t), t, osculating });
        }
        let on_points: Vec<bool> = sections.iter().map(|s| points.iter().any(|p| p.t == *s)).collect();
        let mut summary = vec![format!("fiber x = {mu}, h = {h}, base t = {base}")];
        for p in &points {
            summary.push(format!("t = {} -> {} osculating: {}", p.t, p.plane, p.osculating));
        }
        let shown: Vec<String> = sections.iter().map(ToString::to_string).collect();
        summary.push(format!("sections at t = {}", shown.join(", ")));
        let findings = points
            .iter()
            .filter(|p| !p.osculating)
            .map(|p| format!("chord-tangent check fails at t = {}", p.t))
            .collect();
        outcome(&Osculated { fiber: mu.clone(), h, base, points, sections, on_points }, summary, findings)
    }
}

fn cartier(xi: &Scalar, k: u32, m: u32) -> Result<Outcome> {
    #[derive(Serialize)]
    struct Shown<'a> {
        #[serde(flatten)]
        certificate: &'a crate::projectivity::CartierCertificate,
        decomposition: Option<bool>,
    }
    let c = q_cartier_reduce(xi, k, m)?;
    let root = xi.pow(k).is_one();
    let decomposition = if root { Some(verify_ab_decomposition(xi, k, m)?) } else { None };
    let mut summary = vec![format!("xi = {xi}, k = {k}, m = {m}: member = {}", c.member)];
    if !c.member {
        summary.push(format!("odd part b(x) = {}", c.odd_part));
    }
    if let Some(d) = decomposition {
        summary.push(format!("A - B decomposition verified: {d}"));
    }
    let mut findings = vec![];
    if c.member != root {
        findings.push(format!("membership {} disagrees with xi^k = 1 being {root}", c.member));
    }
    if decomposition == Some(false) {
        findings.push("A - B decomposition fails".to_string());
    }
    outcome(&Shown { certificate: &c, decomposition }, summary, findings)
}

fn run(name: &str, input: Option<&ConstructionInput>, validation: Vec<String>, requests: &[Request]) -> Report {
    let state = State { input, descriptor: OnceCell::new() };
    let results = requests
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut rep = RequestReport {
                index: i + 1,
                task: r.tag().to_string(),
                status: Status::Ok,
                summary: vec![],
                findings: vec![],
                result: None,
                error: None,
            };
            match state.execute(r) {
                Ok(o) => {
                    rep.result = Some(o.result);
                    rep.summary = o.summary;
                    rep.findings = o.findings;
                }
                Err(e) => {
                    rep.status = Status::Error;
                    rep.error = Some(e.to_string());
                }
            }
            rep
        })
        .collect();
    Report { schema: REPORT_SCHEMA.to_string(), scenario: name.to_string(), validation, results }
}

impl Scenario {
    /// Validates the scenario and executes its requests in order.
    pub fn run(&self) -> Result<Report> {
        let log = self.validate()?;
        Ok(run(&self.name, Some(&self.input), log, &self.requests))
    }
}

pub fn run_scenario(path: &Path) -> Result<Report> {
    Scenario::load(path)?.run()
}

/// Runs requests that need no construction input, such as `cartier`.
pub fn run_standalone(name: &str, requests: &[Request]) -> Report {
    run(name, None, vec![], requests)
}

pub fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => render_text(r),
    }
}

fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "scenario: {}", r.scenario);
    let _ = writeln!(out, "schema: {}", r.schema);
    if !r.validation.is_empty() {
        let _ = writeln!(out, "validation:");
        for line in &r.validation {
            let _ = writeln!(out, "  ok: {line}");
        }
    }
    if r.results.is_empty() {
        let _ = writeln!(out, "no requests");
        return out;
    }
    for q in &r.results {
        let status = match q.status {
            Status::Ok => "ok",
            Status::Error => "error",
        };
        let _ = writeln!(out, "[{}] {}: {status}", q.index, q.task);
        for line in &q.summary {
            let _ = writeln!(out, "    {line}");
        }
        for f in &q.findings {
            let _ = writeln!(out, "    finding: {f}");
        }
        if let Some(e) = &q.error {
            let _ = writeln!(out, "    error: {e}");
        }
    }
    out
}
