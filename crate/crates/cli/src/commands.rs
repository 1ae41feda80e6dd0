//! One runner per subcommand. Each produces both a human rendering and a
//! JSON payload so the frontend can emit either; exit codes ride along.

use serde_json::{json, Map, Value};

use lpa_core::gradedk0::{k0_graded_polycephaly, HeadComponent};
use lpa_core::graph::{self, Graph};
use lpa_core::iso::{
    decide_graded_iso, decide_matrix_leavitt_iso, MatrixIsoVerdict, ShiftVector, Verdict,
};
use lpa_core::matrix::FinAbGroup;
use lpa_core::monoid::{monoid_equal, MonoidElement, MonoidEq};
use lpa_core::polycephaly::{classify, decomposition_report, HeadKind, PolycephalyDecomposition};
use lpa_core::{
    bratteli, colimit_presentation, is_strongly_graded, k0_nongraded, BratteliLevel,
    ColimitPresentation,
};

/// Exit code for malformed invocations (bad flags, bad inline arguments).
pub const EXIT_USAGE: i32 = 64;
/// Exit code for input files that do not parse.
pub const EXIT_PARSE: i32 = 65;
/// Exit code when a command needs a polycephaly graph and the input is not.
pub const EXIT_NOT_POLYCEPHALY: i32 = 3;

/// A completed command: the code is part of the answer (verdict commands
/// encode their verdict in it), not an error signal.
pub struct Outcome {
    pub code: i32,
    pub human: String,
    pub result: Value,
}

impl Outcome {
    fn ok(human: String, result: Value) -> Self {
        Outcome {
            code: 0,
            human,
            result,
        }
    }
}

/// A command that could not produce a result.
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

pub type CmdResult = Result<Outcome, Failure>;

fn vertex_names(g: &Graph, vs: &[graph::VertexId]) -> Vec<String> {
    vs.iter().map(|v| g.vertex_name(*v).to_string()).collect()
}

fn not_polycephaly(g: &Graph, reason: &lpa_core::polycephaly::RejectReason) -> Outcome {
    let mut human = format!("not polycephaly: {reason}");
    if is_strongly_graded(g) {
        human.push_str(" (the graph is sink-free; `k0gr --colimit` still applies)");
    }
    Outcome {
        code: EXIT_NOT_POLYCEPHALY,
        human,
        result: json!({ "polycephaly": false, "reason": reason.to_string() }),
    }
}

fn head_json(g: &Graph, d: &PolycephalyDecomposition) -> Vec<Value> {
    d.heads
        .iter()
        .map(|h| {
            let mut obj = Map::new();
            obj.insert("vertex".into(), json!(g.vertex_name(h.vertex)));
            match &h.kind {
                HeadKind::Sink => {
                    obj.insert("kind".into(), json!("sink"));
                }
                HeadKind::Comet { cycle } => {
                    obj.insert("kind".into(), json!("comet"));
                    obj.insert("cycle".into(), json!(vertex_names(g, cycle)));
                }
                HeadKind::Rose { petals } => {
                    obj.insert("kind".into(), json!("rose"));
                    obj.insert("petals".into(), json!(petals));
                }
            }
            obj.insert("shifts".into(), json!(h.lengths));
            Value::Object(obj)
        })
        .collect()
}

pub fn run_classify(g: &Graph) -> CmdResult {
    Ok(match classify(g) {
        Err(reason) => not_polycephaly(g, &reason),
        Ok(d) => {
            let mut lines = vec![format!("polycephaly with {} head(s)", d.heads.len())];
            for h in &d.heads {
                let kind = match &h.kind {
                    HeadKind::Sink => "sink".to_string(),
                    HeadKind::Comet { cycle } => format!("comet of cycle length {}", cycle.len()),
                    HeadKind::Rose { petals } => format!("rose with {petals} petals"),
                };
                let shifts: Vec<String> = h.lengths.iter().map(|l| l.to_string()).collect();
                lines.push(format!(
                    "head {}: {kind}, paths ({})",
                    g.vertex_name(h.vertex),
                    shifts.join(",")
                ));
            }
            Outcome::ok(
                lines.join("\n"),
                json!({ "polycephaly": true, "heads": head_json(g, &d) }),
            )
        }
    })
}

pub fn run_decompose(g: &Graph) -> CmdResult {
    Ok(match classify(g) {
        Err(reason) => not_polycephaly(g, &reason),
        Ok(d) => {
            let blocks = decomposition_report(&d);
            let human = blocks
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join(" \u{2295} ");
            let block_json: Vec<Value> = blocks
                .iter()
                .map(|b| {
                    json!({
                        "display": b.to_string(),
                        "size": b.size,
                        "coefficient": b.coefficient.to_string(),
                        "shifts": b.shifts,
                    })
                })
                .collect();
            Outcome::ok(human, json!({ "blocks": block_json }))
        }
    })
}

fn group_json(grp: &FinAbGroup) -> Value {
    json!({
        "display": grp.to_string(),
        "rank": grp.free_rank,
        "torsion": grp.torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
    })
}

pub fn run_k0(g: &Graph) -> CmdResult {
    let grp = k0_nongraded(g);
    let human = if grp.is_trivial() {
        "0 (trivial group)".to_string()
    } else {
        grp.to_string()
    };
    Ok(Outcome::ok(human, json!({ "group": group_json(&grp) })))
}

fn levels_json(levels: &[BratteliLevel]) -> Vec<Value> {
    levels
        .iter()
        .map(|l| {
            json!({
                "depth": l.depth,
                "sizes": l.sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect()
}

fn level_lines(levels: &[BratteliLevel]) -> Vec<String> {
    levels
        .iter()
        .map(|l| {
            let sizes: Vec<String> = l.sizes.iter().map(|s| s.to_string()).collect();
            format!("level {}: ({})", l.depth, sizes.join(", "))
        })
        .collect()
}

fn presentation_json(p: &ColimitPresentation) -> Value {
    match p {
        ColimitPresentation::Free { copies, det } => json!({
            "kind": "free", "copies": copies, "det": det.to_string(), "display": p.to_string(),
        }),
        ColimitPresentation::Localized { copies, det } => json!({
            "kind": "localized", "copies": copies, "det": det.to_string(),
            "display": p.to_string(),
        }),
        ColimitPresentation::Formal {
            copies,
            stable_kernel_rank,
        } => json!({
            "kind": "formal", "copies": copies, "stable_kernel_rank": stable_kernel_rank,
            "display": p.to_string(),
        }),
    }
}

pub fn run_k0gr(g: &Graph, colimit: bool, depth: usize) -> CmdResult {
    if colimit {
        let p = colimit_presentation(g).map_err(|e| Failure::new(1, e.to_string()))?;
        let levels = bratteli(g, depth);
        let mut lines = vec![format!("presentation: {p}")];
        lines.extend(level_lines(&levels));
        return Ok(Outcome::ok(
            lines.join("\n"),
            json!({ "presentation": presentation_json(&p), "bratteli": levels_json(&levels) }),
        ));
    }
    Ok(match classify(g) {
        Err(reason) => not_polycephaly(g, &reason),
        Ok(d) => {
            let m = k0_graded_polycephaly(&d);
            let mut lines = Vec::new();
            let mut comps = Vec::new();
            for c in &m.components {
                match c {
                    HeadComponent::Laurent { unit } => {
                        lines.push(format!("Z[x,x^-1] unit={unit}"));
                        comps.push(json!({ "type": "laurent", "unit": unit.to_string() }));
                    }
                    HeadComponent::Cyclic { unit } => {
                        lines.push(format!("Z^{} (comet) unit={unit}", unit.modulus()));
                        comps.push(json!({
                            "type": "comet",
                            "period": unit.modulus(),
                            "unit": unit.counts().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        }));
                    }
                    HeadComponent::Rose { base, unit } => {
                        lines.push(format!("Z[1/{base}] unit={}", unit.value()));
                        comps.push(json!({
                            "type": "rose", "base": base, "unit": unit.value().to_string(),
                        }));
                    }
                }
            }
            Outcome::ok(lines.join("\n"), json!({ "components": comps }))
        }
    })
}

pub fn run_bratteli(g: &Graph, depth: usize) -> CmdResult {
    let levels = bratteli(g, depth);
    Ok(Outcome::ok(
        level_lines(&levels).join("\n"),
        json!({ "levels": levels_json(&levels) }),
    ))
}

pub fn run_hsets(g: &Graph) -> CmdResult {
    let sets = graph::hereditary_saturated_sets(g).map_err(|e| Failure::new(1, e.to_string()))?;
    let mut lines = Vec::new();
    let mut sets_json = Vec::new();
    for s in &sets {
        let names: Vec<String> = s.iter().map(|v| g.vertex_name(v).to_string()).collect();
        lines.push(format!("{{{}}}", names.join(", ")));
        sets_json.push(json!(names));
    }
    Ok(Outcome::ok(
        lines.join("\n"),
        json!({ "count": sets.len(), "sets": sets_json }),
    ))
}

/// Graded-iso verdict for two already-loaded graphs; `names` label the
/// sides in human output when a side is rejected.
pub fn run_iso(a: &Graph, b: &Graph, names: (&str, &str), certificate: bool) -> CmdResult {
    let reject = |name: &str, g: &Graph, reason: &lpa_core::polycephaly::RejectReason| {
        let mut o = not_polycephaly(g, reason);
        o.human = format!("{name}: {}", o.human);
        o.result = json!({
            "verdict": "NotPolycephaly", "file": name, "reason": reason.to_string(),
        });
        o
    };
    let da = match classify(a) {
        Ok(d) => d,
        Err(r) => return Ok(reject(names.0, a, &r)),
    };
    let db = match classify(b) {
        Ok(d) => d,
        Err(r) => return Ok(reject(names.1, b, &r)),
    };
    let v = decide_graded_iso(&k0_graded_polycephaly(&da), &k0_graded_polycephaly(&db));
    let (code, token) = match v.verdict {
        Verdict::Iso => (0, "Iso"),
        Verdict::NotIso => (1, "NotIso"),
        Verdict::Unknown => (2, "Unknown"),
    };
    let mut human = token.to_string();
    if let Some(reason) = &v.reason {
        human.push_str(&format!(": {reason}"));
    }
    if certificate && v.verdict == Verdict::Iso {
        for m in &v.matching {
            human.push_str(&format!(
                "\nhead {} = head {} after twisting by x^{}",
                m.left, m.right, m.twist
            ));
        }
    }
    let matching: Vec<Value> = v
        .matching
        .iter()
        .map(|m| json!({ "left": m.left, "right": m.right, "twist": m.twist }))
        .collect();
    Ok(Outcome {
        code,
        human,
        result: json!({
            "verdict": token,
            "matching": matching,
            "reason": v.reason,
        }),
    })
}

fn parse_shifts(text: &str) -> Result<Vec<i64>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Failure::new(EXIT_USAGE, format!("bad shift '{}': {e}", t.trim())))
        })
        .collect()
}

fn shift_vector(base: usize, shifts: &str) -> Result<ShiftVector, Failure> {
    ShiftVector::new(base, parse_shifts(shifts)?)
        .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))
}

pub fn run_matrix_iso(base_a: usize, shifts_a: &str, base_b: usize, shifts_b: &str) -> CmdResult {
    let a = shift_vector(base_a, shifts_a)?;
    let b = shift_vector(base_b, shifts_b)?;
    let verdict =
        decide_matrix_leavitt_iso(&a, &b).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    Ok(match verdict {
        MatrixIsoVerdict::Iso { twist } => Outcome {
            code: 0,
            human: format!("Iso (twist {twist})"),
            result: json!({ "verdict": "Iso", "twist": twist }),
        },
        MatrixIsoVerdict::NotIso => Outcome {
            code: 1,
            human: "NotIso".to_string(),
            result: json!({ "verdict": "NotIso" }),
        },
    })
}

pub fn run_free_iso(base_a: usize, shifts_a: &str, base_b: usize, shifts_b: &str) -> CmdResult {
    let a = shift_vector(base_a, shifts_a)?;
    let b = shift_vector(base_b, shifts_b)?;
    let iso = lpa_core::iso::decide_free_module_iso(&a, &b)
        .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    Ok(Outcome {
        code: if iso { 0 } else { 1 },
        human: if iso {
            "isomorphic as graded free modules".to_string()
        } else {
            "not isomorphic as graded free modules".to_string()
        },
        result: json!({ "isomorphic": iso }),
    })
}

pub fn run_monoid_eq(g: &Graph, a: &MonoidElement, b: &MonoidElement, budget: u64) -> CmdResult {
    let verdict = monoid_equal(g, a, b, budget);
    let (code, token) = match verdict {
        MonoidEq::Equal => (0, "equal"),
        MonoidEq::NotEqualWithinBudget => (1, "not_equal"),
        MonoidEq::Unknown => (2, "unknown"),
    };
    let human = match verdict {
        MonoidEq::Unknown => format!("unknown (budget {budget} exhausted)"),
        _ => verdict.to_string(),
    };
    Ok(Outcome {
        code,
        human,
        result: json!({ "verdict": token, "budget": budget }),
    })
}
