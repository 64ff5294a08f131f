//! Report construction and rendering.
//!
//! Every renderer is deterministic: no timestamps, no hash-map iteration,
//! JSON keys in sorted order. Two runs with the same inputs produce
//! byte-identical output.

use serde_json::{json, Map, Value};

use crate::analysis::{
    class_set, oracle_ground_state_check, AnalysisError, ClassSetResult, CrossCheckSummary,
    Finding, OracleSpotCheck, PatternWitness, RunStatus, SpecRecord, VerdictReport,
};
use crate::configurations::{classify_spec, AnySpec, SpecKind, WeaklyPeriodicSpec};
use crate::group_words::SubgroupDescriptor;
use crate::model::{
    class_energy, format_exact, region_membership, region_of_classes, ClassIndex, LambdaParams,
    Rational, Region,
};

/// Bumped whenever the JSON layout changes shape.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

/// A parameter point classified: the ten class energies, the attained
/// minimum, and the classes whose energy equals it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamsReport {
    pub params: LambdaParams,
    pub minimum: Rational,
    pub energies: Vec<(ClassIndex, Rational)>,
    pub members: Vec<ClassIndex>,
}

pub fn classify_params(p: &LambdaParams) -> ParamsReport {
    let energies: Vec<_> = ClassIndex::ALL
        .iter()
        .map(|&m| (m, class_energy(m, p)))
        .collect();
    let minimum = energies
        .iter()
        .map(|(_, e)| e.clone())
        .min()
        .expect("ten classes");
    let members = ClassIndex::ALL
        .iter()
        .copied()
        .filter(|&m| region_membership(m, p))
        .collect();
    ParamsReport {
        params: p.clone(),
        minimum,
        energies,
        members,
    }
}

/// One spec analyzed symbolically: kind, realized classes with validated
/// witnesses, and the exact ground-state region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyzeReport {
    pub label: String,
    pub spec: WeaklyPeriodicSpec,
    pub kind: SpecKind,
    pub subgroup: SubgroupDescriptor,
    pub result: ClassSetResult,
    pub region: Region,
}

pub fn analyze_spec(
    spec: &AnySpec,
    a: &SubgroupDescriptor,
) -> Result<AnalyzeReport, AnalysisError> {
    let lifted = spec.lift();
    let result = class_set(&lifted, a)?;
    let region = region_of_classes(result.classes.iter().copied())?;
    Ok(AnalyzeReport {
        label: spec.to_string(),
        spec: lifted,
        kind: classify_spec(&lifted),
        subgroup: a.clone(),
        result,
        region,
    })
}

/// Re-run one oracle probe so a rendered spot check is reproducible from its
/// own row. Exposed for integration tests.
pub fn replay_spot_check(
    spec: &WeaklyPeriodicSpec,
    check: &OracleSpotCheck,
    depth: u32,
    a: &SubgroupDescriptor,
) -> Result<bool, AnalysisError> {
    Ok(oracle_ground_state_check(spec, &check.point, depth, a, check.root_rule)?.is_ground_state)
}

fn rational_str(x: &Rational) -> Value {
    Value::String(format_exact(x))
}

fn params_value(p: &LambdaParams) -> Value {
    json!({ "a": format_exact(&p.a), "b": format_exact(&p.b), "c": format_exact(&p.c) })
}

fn region_value(r: &Region) -> Value {
    json!({
        "canonical": r.canonical_label(),
        "classical": r.classical_label(),
        "constraints": r.constraint_label(),
    })
}

fn witness_value(w: &PatternWitness) -> Value {
    json!({
        "class": w.class.to_string(),
        "pattern": w.pattern.to_string(),
        "vertex": w.vertex.to_string(),
        "ball": w.ball.to_string(),
    })
}

fn spot_check_value(c: &OracleSpotCheck) -> Value {
    json!({
        "point": params_value(&c.point),
        "root_rule": c.root_rule.to_string(),
        "expected": c.expected,
        "observed": c.observed,
        "consistent": c.consistent(),
    })
}

fn record_value(r: &SpecRecord) -> Value {
    json!({
        "label": r.label,
        "spec": r.spec.to_string(),
        "kind": r.kind.to_string(),
        "classes": r.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "region": region_value(&r.region),
        "carrier": r.is_carrier,
        "catalog_index": r.catalog_index,
        "claimed_region": r.claimed_region.as_ref().map(|c| c.canonical_label()),
        "agrees": r.agrees,
        "witnesses": r.witnesses.iter().map(witness_value).collect::<Vec<_>>(),
        "spot_checks": r.spot_checks.iter().map(spot_check_value).collect::<Vec<_>>(),
    })
}

fn finding_value(f: &Finding) -> Value {
    let mut obj = match record_value(&f.record) {
        Value::Object(map) => map,
        _ => Map::new(),
    };
    obj.insert("note".to_owned(), Value::String(f.note.clone()));
    Value::Object(obj)
}

fn cross_check_value(c: &CrossCheckSummary) -> Value {
    json!({
        "depth": c.depth,
        "checks": c.checks,
        "mismatches": c
            .mismatches
            .iter()
            .map(|m| json!({
                "spec": m.spec.to_string(),
                "point": m.point_label,
                "root_rule": m.root_rule.to_string(),
                "symbolic": m.symbolic,
                "oracle": m.oracle,
            }))
            .collect::<Vec<_>>(),
    })
}

fn status_str(s: RunStatus) -> &'static str {
    match s {
        RunStatus::Pass => "pass",
        RunStatus::InternalMismatch => "internal-mismatch",
    }
}

fn finish_json(value: Value) -> String {
    let mut out = serde_json::to_string_pretty(&value).expect("serializable");
    out.push('\n');
    out
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

fn classes_compact(classes: impl IntoIterator<Item = ClassIndex>) -> String {
    classes
        .into_iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join("|")
}

fn classes_list(classes: impl IntoIterator<Item = ClassIndex>) -> String {
    classes
        .into_iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Literal pipes split GFM table cells even inside code spans.
fn md_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

pub fn render_verdict(report: &VerdictReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => finish_json(json!({
            "schema_version": SCHEMA_VERSION,
            "report": "verdict",
            "title": report.title,
            "subgroup": report.subgroup.to_string(),
            "depth": report.depth,
            "seed": report.seed,
            "status": status_str(report.status()),
            "records": report.records.iter().map(record_value).collect::<Vec<_>>(),
            "findings": report.findings.iter().map(finding_value).collect::<Vec<_>>(),
            "cross_check": report.cross_check.as_ref().map(cross_check_value),
            "summary": {
                "total": report.summary.total,
                "agree": report.summary.agree,
                "disagree": report.summary.disagree,
                "unclaimed": report.summary.unclaimed,
                "carriers": report.summary.carriers,
                "findings": report.summary.findings,
                "inconsistent_spot_checks": report.summary.inconsistent_spot_checks,
                "by_region": report.summary.by_region,
            },
        })),
        ReportFormat::Csv => {
            let mut lines = vec![csv_line(
                &[
                    "row",
                    "label",
                    "kind",
                    "classes",
                    "region",
                    "classical",
                    "carrier",
                    "catalog_index",
                    "claimed_region",
                    "agrees",
                    "spot_checks",
                    "consistent",
                ]
                .map(str::to_owned),
            )];
            let mut push = |tag: &str, r: &SpecRecord| {
                lines.push(csv_line(&[
                    tag.to_owned(),
                    r.label.clone(),
                    r.kind.to_string(),
                    classes_compact(r.classes.iter().copied()),
                    r.region.canonical_label(),
                    r.region.classical_label(),
                    r.is_carrier.to_string(),
                    r.catalog_index.map(|i| i.to_string()).unwrap_or_default(),
                    r.claimed_region
                        .as_ref()
                        .map(|c| c.canonical_label())
                        .unwrap_or_default(),
                    r.agrees.map(|a| a.to_string()).unwrap_or_default(),
                    r.spot_checks.len().to_string(),
                    r.spot_checks
                        .iter()
                        .all(OracleSpotCheck::consistent)
                        .to_string(),
                ]));
            };
            for r in &report.records {
                push("record", r);
            }
            for f in &report.findings {
                push("finding", &f.record);
            }
            lines.push(String::new());
            lines.join("\n")
        }
        ReportFormat::Markdown => {
            let mut out = String::new();
            out.push_str(&format!("# Verdict: {}\n\n", report.title));
            out.push_str(&format!(
                "- status: **{}**\n- subgroup: `{}`\n- oracle depth: {}\n- seed: {}\n",
                status_str(report.status()),
                report.subgroup,
                report.depth,
                report.seed
            ));
            let s = &report.summary;
            out.push_str(&format!(
                "- specs: {} ({} agree, {} disagree, {} unclaimed); carriers: {}; findings: {}\n\n",
                s.total, s.agree, s.disagree, s.unclaimed, s.carriers, s.findings
            ));
            out.push_str("| label | kind | classes | region | claim | agrees | checks |\n");
            out.push_str("|---|---|---|---|---|---|---|\n");
            for r in &report.records {
                out.push_str(&format!(
                    "| `{}` | {} | {} | {} ({}) | {} | {} | {}/{} ok |\n",
                    r.label,
                    r.kind,
                    classes_list(r.classes.iter().copied()),
                    md_cell(&r.region.canonical_label()),
                    r.region.classical_label(),
                    r.claimed_region
                        .as_ref()
                        .map(|c| md_cell(&c.canonical_label()))
                        .unwrap_or_else(|| "-".into()),
                    r.agrees
                        .map(|a| a.to_string())
                        .unwrap_or_else(|| "-".into()),
                    r.spot_checks.iter().filter(|c| c.consistent()).count(),
                    r.spot_checks.len(),
                ));
            }
            if !report.findings.is_empty() {
                out.push_str(&format!("\n## Findings ({})\n\n", report.findings.len()));
                for f in &report.findings {
                    out.push_str(&format!(
                        "- `{}` realizes {} on {} ({}) — {}\n",
                        f.record.label,
                        classes_list(f.record.classes.iter().copied()),
                        f.record.region.canonical_label(),
                        f.record.region.constraint_label(),
                        f.note,
                    ));
                }
            }
            if let Some(c) = &report.cross_check {
                out.push_str(&format!(
                    "\nCross-check at depth {}: {} comparisons, {} mismatches.\n",
                    c.depth,
                    c.checks,
                    c.mismatches.len()
                ));
            }
            out
        }
    }
}

pub fn render_params(report: &ParamsReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => finish_json(json!({
            "schema_version": SCHEMA_VERSION,
            "report": "params",
            "params": params_value(&report.params),
            "minimum": rational_str(&report.minimum),
            "energies": report
                .energies
                .iter()
                .map(|(m, e)| json!({ "class": m.to_string(), "energy": format_exact(e) }))
                .collect::<Vec<_>>(),
            "members": report.members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        })),
        ReportFormat::Csv => {
            let mut lines = vec![csv_line(&["class", "energy", "minimal"].map(str::to_owned))];
            for (m, e) in &report.energies {
                lines.push(csv_line(&[
                    m.to_string(),
                    format_exact(e),
                    report.members.contains(m).to_string(),
                ]));
            }
            lines.push(String::new());
            lines.join("\n")
        }
        ReportFormat::Markdown => {
            let mut out = String::new();
            out.push_str(&format!("# Parameters {}\n\n", report.params));
            out.push_str(&format!(
                "Minimum ball energy: **{}**\n\n",
                format_exact(&report.minimum)
            ));
            out.push_str("| class | energy | minimal |\n|---|---|---|\n");
            for (m, e) in &report.energies {
                out.push_str(&format!(
                    "| {} | {} | {} |\n",
                    m,
                    format_exact(e),
                    if report.members.contains(m) {
                        "yes"
                    } else {
                        "no"
                    }
                ));
            }
            out.push_str(&format!(
                "\nMinimal classes: {}\n",
                classes_list(report.members.iter().copied())
            ));
            out
        }
    }
}

pub fn render_analysis(report: &AnalyzeReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => finish_json(json!({
            "schema_version": SCHEMA_VERSION,
            "report": "analysis",
            "spec": report.label,
            "lifted": report.spec.to_string(),
            "kind": report.kind.to_string(),
            "subgroup": report.subgroup.to_string(),
            "classes": report.result.classes.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "witnesses": report.result.witnesses.values().map(witness_value).collect::<Vec<_>>(),
            "region": region_value(&report.region),
        })),
        ReportFormat::Csv => {
            let mut lines = vec![csv_line(
                &["class", "pattern", "vertex", "ball"].map(str::to_owned),
            )];
            for w in report.result.witnesses.values() {
                lines.push(csv_line(&[
                    w.class.to_string(),
                    w.pattern.to_string(),
                    w.vertex.to_string(),
                    w.ball.to_string(),
                ]));
            }
            lines.push(String::new());
            lines.join("\n")
        }
        ReportFormat::Markdown => {
            let mut out = String::new();
            out.push_str(&format!("# Spec `{}`\n\n", report.label));
            out.push_str(&format!(
                "- kind: {}\n- subgroup: `{}`\n- classes: {}\n- region: {}\n\n",
                report.kind,
                report.subgroup,
                classes_list(report.result.classes.iter().copied()),
                report.region,
            ));
            out.push_str("| class | pattern | vertex | ball |\n|---|---|---|---|\n");
            for w in report.result.witnesses.values() {
                out.push_str(&format!(
                    "| {} | `{}` | `{}` | `{}` |\n",
                    w.class,
                    md_cell(&w.pattern.to_string()),
                    w.vertex,
                    md_cell(&w.ball.to_string())
                ));
            }
            out
        }
    }
}
