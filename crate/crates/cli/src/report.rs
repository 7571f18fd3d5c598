//! Analysis reports, rendered as plain text or JSON.

use std::fmt::Write;

use serde::Serialize;
use switchlogic::analysis::PropertyVerdict;
use switchlogic::logic::{ControlAttractorReport, SetReachVerdicts};
use switchlogic::oracle::OracleVerdict;
use switchlogic::realization::{Duration, RealizationReport, TrackingReport};
use switchlogic::stp::NumericMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    /// Property holds, realizable, trackable.
    Positive,
    Negative,
    /// Nothing to decide (attractor listing, graph export).
    Informational,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Positive
        } else {
            Outcome::Negative
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Positive | Outcome::Informational => 0,
            Outcome::Negative => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignalFailures {
    pub sigma: usize,
    pub leave_fails: Vec<usize>,
    pub stay_fails: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Findings {
    Analyze {
        verdicts: Vec<PropertyVerdict>,
    },
    Attractors {
        report: ControlAttractorReport,
    },
    SetReach {
        ell: usize,
        quantitative: bool,
        /// Rows are target subsets, columns source subsets; 0/1 unless quantitative.
        matrix: Vec<Vec<u128>>,
        verdicts: SetReachVerdicts,
    },
    RealizeFot {
        durations: Vec<Duration>,
        report: RealizationReport,
    },
    RealizeDwell {
        min_dwell: Vec<usize>,
        report: RealizationReport,
    },
    Track {
        theta0: usize,
        reference: Vec<usize>,
        report: TrackingReport,
    },
    Graph {
        path: String,
        nodes: usize,
        edges: usize,
    },
    OracleKalman {
        t_max: usize,
        verdicts: Vec<OracleVerdict>,
    },
    OraclePaths {
        from: Vec<usize>,
        to: Vec<usize>,
        ell: usize,
        count: u128,
    },
    OracleFot {
        signals: Vec<SignalFailures>,
    },
    OracleTrack {
        theta0: usize,
        reference: Vec<usize>,
        witness: Option<Vec<usize>>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub input: String,
    pub input_sha256: String,
    pub numeric: NumericMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_unix: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
    pub outcome: Outcome,
    pub findings: Findings,
}

fn seq(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn set(v: &[usize]) -> String {
    format!("{{{}}}", seq(v))
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.tool, self.version);
        let _ = writeln!(out, "input: {} (sha256 {})", self.input, self.input_sha256);
        let numeric = match self.numeric {
            NumericMode::Rational => "rational",
            NumericMode::Float => "float",
        };
        let _ = writeln!(out, "numeric: {numeric}");
        if let Some(t) = self.generated_unix {
            let _ = writeln!(out, "generated: unix {t}");
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms:.3} ms");
        }
        out.push('\n');
        self.findings.write_text(&mut out);
        let outcome = match self.outcome {
            Outcome::Positive => "positive",
            Outcome::Negative => "negative",
            Outcome::Informational => "informational",
        };
        let _ = writeln!(out, "\noutcome: {outcome}");
        out
    }
}

impl Findings {
    fn write_text(&self, out: &mut String) {
        match self {
            Findings::Analyze { verdicts } => {
                for v in verdicts {
                    match &v.witness {
                        Some(w) => {
                            let _ = writeln!(out, "{}: holds, T = {}, witness ({})", v.property, v.horizon, seq(w));
                        }
                        None => {
                            let _ = writeln!(out, "{}: fails up to T = {}", v.property, v.horizon);
                        }
                    }
                    let _ = writeln!(
                        out,
                        "  checked α = {}, {} sequences tried",
                        set(&v.checked_alphas),
                        v.sequences_tried
                    );
                    for (alpha, d) in &v.per_alpha {
                        let contained = match d.contained {
                            Some(true) => ", contained",
                            Some(false) => ", not contained",
                            None => "",
                        };
                        let _ = writeln!(out, "  α = {alpha}: span rank {}{contained}, holds {}", d.span_rank, d.holds);
                    }
                }
            }
            Findings::Attractors { report } => {
                let fps: Vec<String> = report
                    .fixed_points
                    .iter()
                    .map(|f| format!("{} (γ = {})", f.state, f.input))
                    .collect();
                let _ = writeln!(out, "fixed points: {}", if fps.is_empty() { "none".into() } else { fps.join(", ") });
                let _ = writeln!(
                    out,
                    "cycles: {}{}",
                    report.cycles.len(),
                    if report.cycles_truncated { " (truncated)" } else { "" }
                );
                for c in &report.cycles {
                    let _ = writeln!(out, "  {} via inputs ({})", seq(&c.states), seq(&c.inputs));
                }
                for b in &report.basins {
                    let _ = writeln!(out, "basin of {:?}: {}", b.attractor, set(&b.members.keys().copied().collect::<Vec<_>>()));
                }
                let _ = writeln!(out, "attractor states: {}", set(&report.attractor_states));
                let _ = writeln!(out, "representatives: {}", set(&report.representatives));
            }
            Findings::SetReach {
                ell,
                quantitative,
                matrix,
                verdicts,
            } => {
                let name = if *quantitative { "counts" } else { "C" };
                let _ = writeln!(out, "{name} at ℓ = {ell}:");
                for row in matrix {
                    let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                    let _ = writeln!(out, "  [{}]", cells.join(" "));
                }
                let _ = writeln!(out, "reachable at source subsets: {:?}", verdicts.reachable_at);
                let _ = writeln!(out, "globally reachable targets: {:?}", verdicts.globally_reachable);
                let _ = writeln!(out, "fully reachable: {}", verdicts.fully_reachable);
            }
            Findings::RealizeFot { durations, report } => {
                let ds: Vec<String> = durations.iter().map(|d| d.to_string()).collect();
                let _ = writeln!(out, "operating times: {}", ds.join(","));
                write_realization(out, report);
            }
            Findings::RealizeDwell { min_dwell, report } => {
                let _ = writeln!(out, "minimum dwell times: {}", seq(min_dwell));
                write_realization(out, report);
            }
            Findings::Track {
                theta0,
                reference,
                report,
            } => {
                let _ = writeln!(out, "θ0 = {theta0}, reference ({})", seq(reference));
                let _ = writeln!(out, "trackable: {}", report.trackable);
                if let Some(t) = report.first_failure {
                    let _ = writeln!(out, "first failing step: t = {t}");
                }
                if let (Some(w), Some(s)) = (&report.witness, &report.states) {
                    let _ = writeln!(out, "inputs ({}), states ({})", seq(w), seq(s));
                }
                let _ = writeln!(out, "frontier sizes: {}", seq(&report.frontier_sizes));
            }
            Findings::Graph { path, nodes, edges } => {
                let _ = writeln!(out, "wrote {path}: {nodes} nodes, {edges} edges");
            }
            Findings::OracleKalman { t_max, verdicts } => {
                let _ = writeln!(out, "exhaustive search up to T = {t_max}");
                for v in verdicts {
                    match v.shortest {
                        Some(t) => {
                            let _ = writeln!(out, "{}: holds, T = {t}, {} passing sequences", v.property, v.passing.len());
                            for p in &v.passing {
                                let _ = writeln!(out, "  ({})", seq(p));
                            }
                        }
                        None => {
                            let _ = writeln!(out, "{}: fails", v.property);
                        }
                    }
                    let _ = writeln!(out, "  checked α = {}", set(&v.alphas));
                }
            }
            Findings::OraclePaths { from, to, ell, count } => {
                let _ = writeln!(out, "{count} paths of length {ell} from {} to {}", set(from), set(to));
            }
            Findings::OracleFot { signals } => {
                for s in signals {
                    let _ = writeln!(
                        out,
                        "signal {}: leave fails at {}, stay fails at {}",
                        s.sigma,
                        set(&s.leave_fails),
                        set(&s.stay_fails)
                    );
                }
            }
            Findings::OracleTrack {
                theta0,
                reference,
                witness,
            } => {
                let _ = writeln!(out, "θ0 = {theta0}, reference ({})", seq(reference));
                match witness {
                    Some(w) => {
                        let _ = writeln!(out, "first witness ({})", seq(w));
                    }
                    None => {
                        let _ = writeln!(out, "no input sequence emits the reference");
                    }
                }
            }
        }
    }
}

fn write_realization(out: &mut String, report: &RealizationReport) {
    let _ = writeln!(out, "realizable: {}", report.realizable);
    for s in &report.signals {
        let _ = writeln!(out, "signal {} ({:?}): pairs {}", s.sigma, s.class, set(&s.members));
        if let Some(c) = &s.leave {
            let _ = writeln!(out, "  leave: {}{}", c.holds, failing(&c.failing));
        }
        if let Some(c) = &s.stay {
            let _ = writeln!(out, "  stay: {}{}", c.holds, failing(&c.failing));
        }
    }
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
}

fn failing(pairs: &[usize]) -> String {
    if pairs.is_empty() {
        String::new()
    } else {
        format!(", fails at {}", set(pairs))
    }
}
