//! Command dispatch: each command maps a description to findings.

use std::path::PathBuf;

use switchlogic::analysis::{check_property, AlphaSelection, SearchOptions};
use switchlogic::logic::{
    control_attractors, set_reachability, set_reachability_counts, set_reachability_verdicts, to_dot,
    InputStateSubset, LogicalNetwork, SubsetClass,
};
use switchlogic::model::{merge, merge_dual, SwitchedLinearSystem};
use switchlogic::oracle::{brute_fot_failures, brute_track, count_paths, kalman_oracle, EnumerationBudget};
use switchlogic::realization::{
    check_dwell_time_realizable, check_fot_realizable, check_trackable, Duration, FotSpec, TrackingProblem,
};
use switchlogic::stp::{set_float_tolerance, Scalar};
use switchlogic::Property;

use crate::description::{Modes, SystemDescription};
use crate::error::{CliError, Result};
use crate::report::{Findings, Outcome, SignalFailures};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// `None` checks all four properties.
    Analyze {
        property: Option<Property>,
        alphas: AlphaSelection,
        t_max: Option<usize>,
        budget: Option<u128>,
    },
    Attractors,
    SetReach {
        ell: usize,
        omega0: SubsetClass,
        omega_d: SubsetClass,
        quantitative: bool,
    },
    RealizeFot {
        durations: Vec<Duration>,
    },
    RealizeDwell {
        min_dwell: Vec<usize>,
    },
    Track {
        theta0: usize,
        reference: Vec<usize>,
    },
    Graph {
        out: PathBuf,
    },
    OracleKalman {
        property: Option<Property>,
        alphas: AlphaSelection,
        t_max: Option<usize>,
    },
    OraclePaths {
        from: Vec<usize>,
        to: Vec<usize>,
        ell: usize,
    },
    OracleFot,
    OracleTrack {
        theta0: usize,
        reference: Vec<usize>,
    },
}

/// `"reachability"`, …, or `"all"`.
pub fn parse_property(s: &str) -> std::result::Result<Option<Property>, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(None);
    }
    s.parse::<Property>().map(Some).map_err(|e| e.to_string())
}

/// Comma-separated positive integers.
pub fn parse_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    let out = s
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<usize>().map_err(|_| format!("`{t}` is not a non-negative integer"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if out.is_empty() {
        return Err("empty list".into());
    }
    Ok(out)
}

/// `attractors`, `all`, or a comma-separated state list.
pub fn parse_alphas(s: &str) -> std::result::Result<AlphaSelection, String> {
    match s.trim() {
        "attractors" => Ok(AlphaSelection::Attractors),
        "all" => Ok(AlphaSelection::All),
        list => parse_list(list).map(AlphaSelection::Explicit),
    }
}

/// Subsets separated by `;`, members by `,`: `"4,6;5,7,8"`.
pub fn parse_class(s: &str) -> std::result::Result<SubsetClass, String> {
    let subsets = s
        .split(';')
        .map(|part| {
            let members = parse_list(part)?;
            InputStateSubset::new(members).map_err(|e| e.to_string())
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    SubsetClass::new(subsets).map_err(|e| e.to_string())
}

pub fn run(command: &Command, description: &SystemDescription) -> Result<(Findings, Outcome)> {
    if let Some(tol) = description.options.tolerance {
        set_float_tolerance(tol);
    }
    let net = &description.network;
    match command {
        Command::Analyze {
            property,
            alphas,
            t_max,
            budget,
        } => {
            let mut opts = SearchOptions::default().with_alphas(alphas.clone());
            opts.t_max = t_max.or(description.options.t_max);
            if let Some(b) = budget {
                opts.budget = *b;
            }
            let verdicts = match &description.modes {
                Modes::Rational(s) => analyze(s, net, *property, &opts)?,
                Modes::Float(s) => analyze(s, net, *property, &opts)?,
                Modes::None => return Err(needs_modes("analyze")),
            };
            let ok = verdicts.iter().all(|v| v.holds);
            Ok((Findings::Analyze { verdicts }, Outcome::from_bool(ok)))
        }
        Command::Attractors => Ok((
            Findings::Attractors {
                report: control_attractors(net),
            },
            Outcome::Informational,
        )),
        Command::SetReach {
            ell,
            omega0,
            omega_d,
            quantitative,
        } => {
            let (matrix, verdicts) = if *quantitative {
                let c = set_reachability_counts(net, omega0, omega_d, *ell)?;
                (c.to_rows(), set_reachability_verdicts(&c.support()))
            } else {
                let c = set_reachability(net, omega0, omega_d, *ell)?;
                let rows = (0..c.rows()).map(|i| c.row(i).iter().map(|&b| u128::from(b)).collect()).collect();
                (rows, set_reachability_verdicts(&c))
            };
            let ok = verdicts.fully_reachable;
            Ok((
                Findings::SetReach {
                    ell: *ell,
                    quantitative: *quantitative,
                    matrix,
                    verdicts,
                },
                Outcome::from_bool(ok),
            ))
        }
        Command::RealizeFot { durations } => {
            let report = check_fot_realizable(net, &FotSpec::new(durations.clone())?)?;
            let ok = report.realizable;
            Ok((
                Findings::RealizeFot {
                    durations: durations.clone(),
                    report,
                },
                Outcome::from_bool(ok),
            ))
        }
        Command::RealizeDwell { min_dwell } => {
            let report = check_dwell_time_realizable(net, min_dwell)?;
            let ok = report.realizable;
            Ok((
                Findings::RealizeDwell {
                    min_dwell: min_dwell.clone(),
                    report,
                },
                Outcome::from_bool(ok),
            ))
        }
        Command::Track { theta0, reference } => {
            let report = check_trackable(
                net,
                &TrackingProblem {
                    theta0: *theta0,
                    reference: reference.clone(),
                },
            )?;
            let ok = report.trackable;
            Ok((
                Findings::Track {
                    theta0: *theta0,
                    reference: reference.clone(),
                    report,
                },
                Outcome::from_bool(ok),
            ))
        }
        Command::Graph { out } => {
            std::fs::write(out, to_dot(net)).map_err(|source| CliError::Io {
                path: out.display().to_string(),
                source,
            })?;
            Ok((
                Findings::Graph {
                    path: out.display().to_string(),
                    nodes: net.input_state_count(),
                    edges: net.input_state_count() * net.n_inputs(),
                },
                Outcome::Informational,
            ))
        }
        Command::OracleKalman {
            property,
            alphas,
            t_max,
        } => {
            let alphas = alphas.resolve(net)?;
            let (verdicts, t) = match &description.modes {
                Modes::Rational(s) => kalman_all(s, net, *property, *t_max, description, &alphas)?,
                Modes::Float(s) => kalman_all(s, net, *property, *t_max, description, &alphas)?,
                Modes::None => return Err(needs_modes("oracle kalman")),
            };
            let ok = verdicts.iter().all(|v| v.holds);
            Ok((Findings::OracleKalman { t_max: t, verdicts }, Outcome::from_bool(ok)))
        }
        Command::OraclePaths { from, to, ell } => {
            if *ell == 0 {
                return Err(CliError::input("path length must be at least 1"));
            }
            for &i in from.iter().chain(to) {
                net.decode(i)?;
            }
            let count = count_paths(net, from, to, *ell, &EnumerationBudget::default())?;
            Ok((
                Findings::OraclePaths {
                    from: from.clone(),
                    to: to.clone(),
                    ell: *ell,
                    count,
                },
                Outcome::from_bool(count > 0),
            ))
        }
        Command::OracleFot => {
            let signals: Vec<SignalFailures> = brute_fot_failures(net)
                .into_iter()
                .enumerate()
                .map(|(i, (leave_fails, stay_fails))| SignalFailures {
                    sigma: i + 1,
                    leave_fails,
                    stay_fails,
                })
                .collect();
            Ok((Findings::OracleFot { signals }, Outcome::Informational))
        }
        Command::OracleTrack { theta0, reference } => {
            net.check_state(*theta0)?;
            for &s in reference {
                net.check_signal(s)?;
            }
            let witness = brute_track(net, *theta0, reference, &EnumerationBudget::default())?;
            let ok = witness.is_some();
            Ok((
                Findings::OracleTrack {
                    theta0: *theta0,
                    reference: reference.clone(),
                    witness,
                },
                Outcome::from_bool(ok),
            ))
        }
    }
}

fn needs_modes(command: &str) -> CliError {
    CliError::input(format!("`{command}` needs [[modes]] in the description"))
}

fn properties(selected: Option<Property>) -> Vec<Property> {
    selected.map_or_else(|| Property::ALL.to_vec(), |p| vec![p])
}

fn analyze<T: Scalar>(
    sls: &SwitchedLinearSystem<T>,
    net: &LogicalNetwork,
    property: Option<Property>,
    opts: &SearchOptions,
) -> Result<Vec<switchlogic::analysis::PropertyVerdict>> {
    let ms = merge(sls, net)?;
    let dual = merge_dual(sls, net)?;
    properties(property)
        .into_iter()
        .map(|p| Ok(check_property(&ms, &dual, p, opts)?))
        .collect()
}

fn kalman_all<T: Scalar>(
    sls: &SwitchedLinearSystem<T>,
    net: &LogicalNetwork,
    property: Option<Property>,
    t_max: Option<usize>,
    description: &SystemDescription,
    alphas: &[usize],
) -> Result<(Vec<switchlogic::oracle::OracleVerdict>, usize)> {
    let t = t_max.or(description.options.t_max).unwrap_or(sls.n());
    let budget = EnumerationBudget::default();
    let verdicts = properties(property)
        .into_iter()
        .map(|p| Ok(kalman_oracle(sls, net, p, t, alphas, &budget)?))
        .collect::<Result<Vec<_>>>()?;
    Ok((verdicts, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("1, 2,2").unwrap(), vec![1, 2, 2]);
        assert!(parse_list("1,x").is_err());
        assert!(parse_list("-1").is_err());
    }

    #[test]
    fn class_parsing() {
        let c = parse_class("4,6;5,7,8").unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.subsets()[1].contains(7));
        assert!(parse_class("4,6;").is_err());
    }

    #[test]
    fn alpha_and_property_parsing() {
        assert_eq!(parse_alphas("all").unwrap(), AlphaSelection::All);
        assert_eq!(parse_alphas("4,1").unwrap(), AlphaSelection::Explicit(vec![4, 1]));
        assert_eq!(parse_property("ALL").unwrap(), None);
        assert_eq!(parse_property("observability").unwrap(), Some(Property::Observability));
        assert!(parse_property("stability").is_err());
    }
}
