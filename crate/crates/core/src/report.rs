//! Analysis reports and verification suites behind the command-line tool.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::ainfty::AInfinityNakayama;
use crate::arith::Field;
use crate::dg::{DgArrow, DgError, DgParams, DgPathAlgebra};
use crate::gamma::{assemble_gamma, brute_force_hom, default_cap, radical_layers, GammaError};
use crate::golden;
use crate::homalg::{global_dimension, self_injective_dimension, Dimension, Side};
use crate::quiver::{
    build_phi, build_quiver, choose_rs, gabriel_mismatches, kernel_relations, literal_relations, quiver_dot,
    relations_json, same_ideal, verify_presentation, Quiver, QuiverError,
};
use crate::ring::{HypersurfaceSpec, NegativeCase, SpecError, SpecFile};
use crate::semigroup::{NumericalSemigroup, SemigroupError};

pub const SCHEMA: &str = "cmtilt/1";

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Gamma(#[from] GammaError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Dg(#[from] DgError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("unknown suite '{0}' (expected golden, sweep-semigroup, ainfty or dg)")]
    UnknownSuite(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    pub reason: String,
}

impl Verdict {
    pub fn check(name: &str, ok: bool, reason: impl Into<String>) -> Verdict {
        Verdict { name: name.to_string(), status: if ok { Status::Pass } else { Status::Fail }, reason: reason.into() }
    }

    pub fn skipped(name: &str, reason: impl Into<String>) -> Verdict {
        Verdict { name: name.to_string(), status: Status::Skipped, reason: reason.into() }
    }

    fn prefixed(mut self, prefix: &str) -> Verdict {
        self.name = format!("{prefix}/{}", self.name);
        self
    }
}

pub fn all_pass(verdicts: &[Verdict]) -> bool {
    verdicts.iter().all(|v| v.status != Status::Fail)
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub rs: Option<(i64, i64)>,
    /// Resolution length bound.
    pub bound: usize,
    pub p_check: u32,
    pub p_max: Option<u32>,
    pub weight_bound: Option<u64>,
    /// Compare Hom dimensions with the truncated brute-force count.
    pub oracle: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> AnalyzeOptions {
        AnalyzeOptions { rs: None, bound: 12, p_check: 12, p_max: None, weight_bound: None, oracle: true }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaSummary {
    pub dim: usize,
    pub vertices: usize,
    pub radical_powers: Vec<usize>,
    pub nilpotency: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologicalTable {
    pub global_dimension: String,
    pub injdim_right: String,
    pub injdim_left: String,
    pub reduced: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DgSummary {
    pub n: u32,
    pub n_x: u32,
    pub m: u32,
    pub p_check: u32,
    pub p_max: u32,
    pub weight_bound: u64,
    pub removed_vertices: Vec<usize>,
    pub remaining_vertices: Vec<usize>,
    /// Arrows with `p <= 6`.
    pub arrows: Vec<DgArrow>,
    /// `d(β_{p,0})` for `p <= 6`.
    pub differentials: Vec<(u32, String)>,
    pub h0_dimension: usize,
    /// Total homology of the reduced algebra by weight, for weights `1..=4·n_x·m`.
    pub reduced_total_homology: Vec<(u64, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub spec: SpecFile,
    pub a_invariant: i64,
    pub case: &'static str,
    pub gamma: Option<GammaSummary>,
    pub quiver: Option<Quiver>,
    pub relations: Option<Value>,
    pub homological: Option<HomologicalTable>,
    pub dg: Option<DgSummary>,
    pub verdicts: Vec<Verdict>,
}

/// A report with its renderings.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub report: AnalysisReport,
    pub dot: Option<String>,
}

impl Analysis {
    pub fn json(&self) -> String {
        serde_json::to_string_pretty(&self.report).expect("report serializes") + "\n"
    }

    pub fn text(&self) -> String {
        let r = &self.report;
        let mut out = String::new();
        let name = r.spec.name.clone().unwrap_or_else(|| "spec".to_string());
        let _ = writeln!(out, "{name}: weights ({}, {}), a = {}, case {}", r.spec.m, r.spec.n, r.a_invariant, r.case);
        if let Some(g) = &r.gamma {
            let _ = writeln!(out, "Γ: dimension {}, {} vertices, Loewy length {}", g.dim, g.vertices, g.nilpotency);
        }
        if let Some(q) = &r.quiver {
            let _ = writeln!(out, "quiver: {} vertices, {} arrows", q.vertices.len(), q.arrows.len());
        }
        if let Some(rel) = &r.relations {
            if let Some(items) = rel["relations"].as_array() {
                let _ = writeln!(out, "relations for (r, s) = {}:", rel["rs"]);
                for item in items {
                    let _ = writeln!(out, "  {}", item["text"].as_str().unwrap_or(""));
                }
            }
        }
        if let Some(h) = &r.homological {
            let _ = writeln!(
                out,
                "gldim {}, injdim right {}, injdim left {}, reduced {}",
                h.global_dimension, h.injdim_right, h.injdim_left, h.reduced
            );
        }
        if let Some(d) = &r.dg {
            let _ = writeln!(out, "dg: (n, n_x, m) = ({}, {}, {}), removed vertices {:?}", d.n, d.n_x, d.m, d.removed_vertices);
            for (p, text) in &d.differentials {
                let _ = writeln!(out, "  d(β_{{{p},0}}) = {text}");
            }
            let _ = writeln!(out, "  H^0 dimension {}", d.h0_dimension);
        }
        for v in &r.verdicts {
            let _ = writeln!(out, "{} {}: {}", v.status, v.name, v.reason);
        }
        out
    }
}

/// Runs the pipeline that matches the sign of the a-invariant.
pub fn analyze(spec: &HypersurfaceSpec, opts: &AnalyzeOptions) -> Result<Analysis, ReportError> {
    let case = spec.classify_negative()?;
    let mut report = AnalysisReport {
        schema: SCHEMA,
        spec: spec.to_file(),
        a_invariant: spec.a_invariant(),
        case: match case {
            NegativeCase::NonNegative => "NonNegative",
            NegativeCase::PureXPower(_) => "PureXPower",
            NegativeCase::Regular => "Regular",
        },
        gamma: None,
        quiver: None,
        relations: None,
        homological: None,
        dg: None,
        verdicts: Vec::new(),
    };
    let dot = match case {
        NegativeCase::NonNegative => Some(analyze_tilting(spec, opts, &mut report)?),
        NegativeCase::PureXPower(_) => Some(analyze_silting(spec, opts, &mut report)?),
        NegativeCase::Regular => {
            report.verdicts.push(Verdict::skipped("stable-category", "R is regular: stable category trivial"));
            None
        }
    };
    Ok(Analysis { report, dot })
}

fn analyze_tilting(spec: &HypersurfaceSpec, opts: &AnalyzeOptions, report: &mut AnalysisReport) -> Result<String, ReportError> {
    let g = assemble_gamma(spec)?;
    let layers = radical_layers(&g.algebra);
    let l = layers.nilpotency;
    report.gamma = Some(GammaSummary {
        dim: g.dim(),
        vertices: g.algebra.vertex_count(),
        radical_powers: layers.powers.clone(),
        nilpotency: l,
    });
    let v = &mut report.verdicts;

    if opts.oracle {
        let cap = default_cap(spec);
        let mut bad = Vec::new();
        for &src in &g.summands {
            for &dst in &g.summands {
                let fast = g.ctx.hom_basis(src, dst).len();
                match brute_force_hom(&g.ctx, src, dst, cap) {
                    Ok(slow) if slow == fast => {}
                    Ok(slow) => bad.push(format!("{src:?}→{dst:?}: {fast} vs {slow}")),
                    Err(e) => bad.push(format!("{src:?}→{dst:?}: {e}")),
                }
            }
        }
        let pairs = g.summands.len() * g.summands.len();
        v.push(Verdict::check("hom-oracle", bad.is_empty(), if bad.is_empty() { format!("{pairs} summand pairs agree") } else { bad.join("; ") }));
    } else {
        v.push(Verdict::skipped("hom-oracle", "disabled"));
    }

    let quiver = build_quiver(spec);
    let mism = gabriel_mismatches(&g, &quiver);
    v.push(Verdict::check(
        "gabriel-quiver",
        mism.is_empty(),
        if mism.is_empty() { "arrow counts equal dim e_j(rad/rad²)e_i".to_string() } else { format!("{} vertex pairs differ", mism.len()) },
    ));

    let rs = choose_rs(spec.m() as u32, spec.n() as u32, opts.rs)?;
    let pm = build_phi(&g, rs, 2 * l)?;
    let kernel = kernel_relations(&pm, l);
    let pres = verify_presentation(&pm, &kernel, l);
    v.push(Verdict::check("presentation", pres.pass, pres.reason.clone()));
    let literal = literal_relations(&pm, l);
    let agree = same_ideal(&pm, &kernel, &literal, l);
    v.push(Verdict::check("literal-equals-kernel", agree, "ideal from the literal Hom map versus the kernel ideal"));
    report.relations = Some(relations_json(&pm.quiver, &kernel));

    let gldim = global_dimension(&g.algebra, opts.bound);
    let right = self_injective_dimension(&g.algebra, Side::Right, opts.bound);
    let left = self_injective_dimension(&g.algebra, Side::Left, opts.bound);
    let reduced = spec.is_reduced();
    let expected_gldim = if reduced {
        gldim.finite().is_some_and(|d| d <= 2)
    } else {
        matches!(gldim, Dimension::Infinite { .. })
    };
    v.push(Verdict::check(
        "global-dimension",
        expected_gldim,
        format!("gldim {gldim}; R is {}", if reduced { "reduced, so gldim <= 2 expected" } else { "not reduced, so infinite expected" }),
    ));
    let gorenstein = [&right, &left].iter().all(|d| d.finite().is_some_and(|x| x <= 2));
    v.push(Verdict::check("injective-dimension", gorenstein, format!("right {right}, left {left}; both <= 2 expected")));
    report.homological = Some(HomologicalTable {
        global_dimension: gldim.to_string(),
        injdim_right: right.to_string(),
        injdim_left: left.to_string(),
        reduced,
    });
    let dot = quiver_dot(&quiver);
    report.quiver = Some(quiver);
    Ok(dot)
}

fn analyze_silting(spec: &HypersurfaceSpec, opts: &AnalyzeOptions, report: &mut AnalysisReport) -> Result<String, ReportError> {
    let params = DgParams::from_spec(spec)?;
    let p_check = opts.p_check;
    let p_max = opts.p_max.unwrap_or_else(|| params.default_p_max(p_check));
    let weight_bound = opts.weight_bound.unwrap_or_else(|| params.default_weight_bound());
    let field = spec.field;
    let alg = DgPathAlgebra::new(params, p_max, field);
    let reduced = alg.remove_vertices(params.a_invariant())?;
    let v = &mut report.verdicts;

    let d2 = alg.check_d_squared(p_check)?;
    v.push(Verdict::check("d-squared", d2.pass, d2_reason(&d2, p_check)));
    let d2r = reduced.check_d_squared(p_check)?;
    v.push(Verdict::check("d-squared-reduced", d2r.pass, d2_reason(&d2r, p_check)));
    let h0 = alg.check_h0_nakayama(weight_bound);
    v.push(Verdict::check(
        "h0-nakayama",
        h0.pass(),
        format!("H^0 dimension {} (expected {}); {} mismatches", h0.dimension, h0.expected, h0.mismatches.len()),
    ));
    let vanish = alg.check_negative_vanishing(2, weight_bound);
    v.push(Verdict::check(
        "negative-homology",
        vanish.pass(),
        format!("H^-1 and H^-2 over {} components up to weight {weight_bound}, {} nonzero", vanish.components, vanish.nonzero.len()),
    ));
    let ainf = AInfinityNakayama::new(params.n, params.n_x, params.m);
    let bar = ainf.compare_with_dg(p_check, field);
    v.push(Verdict::check("bar-differential", bar.pass(), format!("{} mismatches for p <= {p_check}", bar.mismatches.len())));
    let st = ainf.check_stasheff(2 * params.n_x + 2, 2 * params.n_x as usize);
    v.push(Verdict::check("stasheff", st.pass, format!("{} degree tuples, first failure {:?}", st.tuples_checked, st.failure)));

    let properness_window = 4 * (params.n_x * params.m) as u64;
    let totals: Vec<(u64, usize)> = (1..=properness_window).map(|w| (w, reduced.total_homology(w))).collect();
    report.dg = Some(DgSummary {
        n: params.n,
        n_x: params.n_x,
        m: params.m,
        p_check,
        p_max,
        weight_bound,
        removed_vertices: reduced.removed_vertices(),
        remaining_vertices: reduced.vertices(),
        arrows: alg.arrows().into_iter().filter(|a| a.p <= 6).collect(),
        differentials: (1..=6.min(p_max)).map(|p| (p, alg.arrow_differential(p, 0).display(&params))).collect(),
        h0_dimension: h0.dimension,
        reduced_total_homology: totals,
    });
    Ok(dg_dot(&reduced, 6))
}

fn d2_reason(r: &crate::dg::DSquaredReport, p_check: u32) -> String {
    match &r.failure {
        None => format!("{} arrows with p <= {p_check}", r.arrows_checked),
        Some(f) => format!("d²(β_{{{},{}}}) = {}", f.p, f.i, f.residue),
    }
}

/// Graphviz source for the arrows with `p <= p_display` of a graded quiver.
pub fn dg_dot(alg: &DgPathAlgebra, p_display: u32) -> String {
    let mut out = String::from("digraph Q {\n");
    for v in alg.vertices() {
        let _ = writeln!(out, "  v{v} [label=\"{v}\"];");
    }
    for a in alg.arrows().into_iter().filter(|a| a.p <= p_display) {
        let _ = writeln!(out, "  v{} -> v{} [label=\"β_{{{},{}}}\"];", a.source, a.target, a.p, a.source);
    }
    out.push_str("}\n");
    out
}

/// One row of the two-generator sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub m: u32,
    pub n: u32,
    pub a: i64,
    pub dim: usize,
    pub global_dimension: String,
    pub injdim_right: String,
    pub injdim_left: String,
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("m,n,a,dim,gldim,injdim_right,injdim_left\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{},{},{}", r.m, r.n, r.a, r.dim, r.global_dimension, r.injdim_right, r.injdim_left);
    }
    out
}

/// All coprime `2 <= m < n <= max_n`, through the semigroup bridge.
pub fn semigroup_sweep(max_n: u32, bound: usize) -> Result<(Vec<SweepRow>, Vec<Verdict>), ReportError> {
    let mut rows = Vec::new();
    let mut verdicts = Vec::new();
    for n in 3..=max_n {
        for m in 2..n {
            if num_integer::gcd(m, n) != 1 {
                continue;
            }
            let spec = NumericalSemigroup::new(&[m as u64, n as u64])?.bridge(Field::Rationals)?;
            let g = assemble_gamma(&spec)?;
            let gl = global_dimension(&g.algebra, bound);
            let right = self_injective_dimension(&g.algebra, Side::Right, bound);
            let left = self_injective_dimension(&g.algebra, Side::Left, bound);
            let ok = [&gl, &right, &left].iter().all(|d| d.finite().is_some_and(|x| x <= 2));
            verdicts.push(Verdict::check(
                &format!("semigroup-{m}-{n}"),
                ok,
                format!("gldim {gl}, injdim {right}/{left}"),
            ));
            rows.push(SweepRow {
                m,
                n,
                a: spec.a_invariant(),
                dim: g.dim(),
                global_dimension: gl.to_string(),
                injdim_right: right.to_string(),
                injdim_left: left.to_string(),
            });
        }
    }
    Ok((rows, verdicts))
}

/// Stasheff identities over the small sweep and the bar comparison on the cube data.
pub fn ainfty_suite(corrupt: bool) -> Vec<Verdict> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for n_x in 2..=4 {
            let mut a = AInfinityNakayama::new(n, n_x, 1);
            if corrupt {
                a = a.with_corrupted_top();
            }
            let r = a.check_stasheff(2 * n_x + 2, 2 * n_x as usize);
            out.push(Verdict::check(&format!("stasheff-{n}-{n_x}"), r.pass, format!("{} tuples, failure {:?}", r.tuples_checked, r.failure)));
        }
    }
    let mut a = AInfinityNakayama::new(9, 3, 2);
    if corrupt {
        a = a.with_corrupted_top();
    }
    let r = a.check_stasheff(10, 6);
    out.push(Verdict::check("stasheff-9-3-2", r.pass, format!("{} tuples", r.tuples_checked)));
    let bar = a.compare_with_dg(12, Field::Rationals);
    out.push(Verdict::check("bar-differential-9-3-2", bar.pass(), format!("{} mismatches for p <= 12", bar.mismatches.len())));
    out
}

/// Golden specs through `analyze`; the dg suite is the cube alone.
pub fn golden_suite(opts: &AnalyzeOptions) -> Result<Vec<Verdict>, ReportError> {
    let mut specs = vec![golden::e7()];
    specs.extend((2..=5).map(golden::consecutive));
    specs.push(golden::quartic());
    specs.extend([golden::y_power(2), golden::y_power(3), golden::cube()]);
    let mut out = Vec::new();
    for spec in specs {
        let name = spec.name.clone().unwrap_or_default();
        out.extend(analyze(&spec, opts)?.report.verdicts.into_iter().map(|v| v.prefixed(&name)));
    }
    Ok(out)
}

pub fn dg_suite(opts: &AnalyzeOptions, corrupt: bool) -> Result<Vec<Verdict>, ReportError> {
    let spec = golden::cube();
    if !corrupt {
        return Ok(analyze(&spec, opts)?.report.verdicts);
    }
    let params = DgParams::from_spec(&spec)?;
    let alg = DgPathAlgebra::new(params, params.default_p_max(opts.p_check), spec.field).with_corrupted_sign(2);
    let d2 = alg.check_d_squared(opts.p_check)?;
    Ok(vec![Verdict::check("d-squared-corrupted", d2.pass, d2_reason(&d2, opts.p_check))])
}

/// The semigroup report: Hom poset, its Hasse diagram, and homological dimensions of Γ_S.
#[derive(Clone, Debug, Serialize)]
pub struct SemigroupReport {
    pub schema: &'static str,
    pub generators: Vec<u64>,
    pub minimal_generators: Vec<u64>,
    pub frobenius: i64,
    pub vertices: usize,
    pub dim: usize,
    pub hasse: Vec<(String, String)>,
    pub global_dimension: String,
    pub injdim_right: String,
    pub injdim_left: String,
}

pub fn semigroup_report(generators: &[u64], bound: usize) -> Result<(SemigroupReport, String), ReportError> {
    let s = NumericalSemigroup::new(generators)?;
    let poset = s.hom_poset()?;
    let alg = s.gamma(Field::Rationals)?;
    let hasse: Vec<(String, String)> =
        poset.hasse().into_iter().map(|(u, v)| (poset.labels[u].clone(), poset.labels[v].clone())).collect();
    let mut dot = String::from("digraph P {\n  rankdir=BT;\n");
    for label in &poset.labels {
        let _ = writeln!(dot, "  p{label} [label=\"{label}\"];");
    }
    for (u, v) in &hasse {
        let _ = writeln!(dot, "  p{u} -> p{v};");
    }
    dot.push_str("}\n");
    let gl = global_dimension(&alg.opposite(), bound);
    let report = SemigroupReport {
        schema: SCHEMA,
        generators: s.generators.clone(),
        minimal_generators: s.minimal_generators(),
        frobenius: s.frobenius,
        vertices: poset.len(),
        dim: alg.dim(),
        hasse,
        global_dimension: gl.to_string(),
        injdim_right: self_injective_dimension(&alg, Side::Right, bound).to_string(),
        injdim_left: self_injective_dimension(&alg, Side::Left, bound).to_string(),
    };
    Ok((report, dot))
}

pub fn semigroup_csv(r: &SemigroupReport) -> String {
    let gens: Vec<String> = r.generators.iter().map(|g| g.to_string()).collect();
    format!(
        "generators,frobenius,vertices,dim,gldim,injdim_right,injdim_left\n{},{},{},{},{},{},{}\n",
        gens.join(" "),
        r.frobenius,
        r.vertices,
        r.dim,
        r.global_dimension,
        r.injdim_right,
        r.injdim_left
    )
}
