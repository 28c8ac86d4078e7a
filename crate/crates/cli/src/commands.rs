use hecke_core::kl::{build_group, structure_constants};
use hecke_core::{
    basic_set_char_p, basic_set_d_detailed, check_flotw, check_phi_identity, compute_e, irr_labels,
    Family, MultiPartition, PairOrientation, SpecializationSpec, WeightSet, WeylType,
};

use crate::args::{AfunctionArgs, Cli, Command, CycloArgs, MembershipArgs, QueryArgs};
use crate::error::CliError;
use crate::record::{AValueRow, HRow, OutputRecord, Payload, Query};
use crate::render::render;

/// A rendered command result.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub record: OutputRecord,
    pub stdout: String,
    /// Diagnostics for standard error.
    pub warnings: Vec<String>,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let (record, format, warnings) = match &cli.command {
        Command::BasicSet(args) => {
            let (record, warnings) = cmd_basic_set(args)?;
            (record, args.output.format, warnings)
        }
        Command::Count(args) => {
            let (record, warnings) = cmd_count(args)?;
            (record, args.output.format, warnings)
        }
        Command::Membership(args) => (cmd_membership(args)?, args.output.format, Vec::new()),
        Command::Afunction(args) => (cmd_afunction(args)?, args.output.format, Vec::new()),
        Command::Cyclo(args) => (cmd_cyclo(args)?, args.output.format, Vec::new()),
    };
    let stdout = render(&record, format).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(Outcome {
        record,
        stdout,
        warnings,
    })
}

fn weyl_type(args: &QueryArgs) -> Result<WeylType, CliError> {
    Ok(WeylType::new(args.family.into(), args.n as usize)?)
}

fn query_echo(args: &QueryArgs) -> Query {
    Query {
        family: Some(Family::from(args.family).to_string()),
        n: Some(args.n),
        e: args.e,
        characteristic: (!args.irr).then_some(args.characteristic),
        irr: Some(args.irr),
        ..Query::default()
    }
}

fn degenerate_warning(w: WeylType) -> Vec<String> {
    if w.is_degenerate() {
        vec![format!(
            "warning: D{} is a degenerate rank (D2 = A1 x A1, D3 = A3); labels follow the type D formulas",
            w.n()
        )]
    } else {
        Vec::new()
    }
}

type Orientations = Option<Vec<Option<String>>>;

/// Labels and, for type D at even e, the pair orientation diagnostics.
fn labels_for(args: &QueryArgs, w: WeylType) -> Result<(Vec<String>, Orientations), CliError> {
    if args.irr {
        return Ok((
            irr_labels(w).iter().map(ToString::to_string).collect(),
            None,
        ));
    }
    let e = args
        .e
        .ok_or_else(|| CliError::Usage("either --e or --irr is required".into()))?;
    let labels = basic_set_char_p(w, e, args.characteristic)?;
    let orientations = (w.family() == Family::D && e % 2 == 0)
        .then(|| basic_set_d_detailed(w.n(), e))
        .transpose()?
        .map(|entries| {
            entries
                .into_iter()
                .map(|entry| {
                    entry.orientation.map(|o| {
                        match o {
                            PairOrientation::Forward => "forward",
                            PairOrientation::Reverse => "reverse",
                            PairOrientation::Both => "both",
                        }
                        .to_string()
                    })
                })
                .collect()
        });
    Ok((
        labels.iter().map(ToString::to_string).collect(),
        orientations,
    ))
}

pub fn cmd_basic_set(args: &QueryArgs) -> Result<(OutputRecord, Vec<String>), CliError> {
    let w = weyl_type(args)?;
    let (labels, orientations) = labels_for(args, w)?;
    let record = OutputRecord::new(
        "basic-set",
        query_echo(args),
        Payload::Labels {
            labels,
            orientations,
            degenerate_rank: w.is_degenerate(),
        },
    );
    Ok((record, degenerate_warning(w)))
}

pub fn cmd_count(args: &QueryArgs) -> Result<(OutputRecord, Vec<String>), CliError> {
    let w = weyl_type(args)?;
    let (labels, _) = labels_for(args, w)?;
    let record = OutputRecord::new(
        "count",
        query_echo(args),
        Payload::Count {
            count: labels.len(),
            degenerate_rank: w.is_degenerate(),
        },
    );
    Ok((record, degenerate_warning(w)))
}

pub fn cmd_membership(args: &MembershipArgs) -> Result<OutputRecord, CliError> {
    let ws: WeightSet = args.weights.parse()?;
    let mp: MultiPartition = args.mp.parse()?;
    let violation = check_flotw(&mp, &ws)?;
    Ok(OutputRecord::new(
        "membership",
        Query {
            weights: Some(ws.to_string()),
            mp: Some(mp.to_string()),
            ..Query::default()
        },
        Payload::Membership {
            member: violation.is_none(),
            violation: violation.map(|v| v.to_string()),
        },
    ))
}

pub fn cmd_afunction(args: &AfunctionArgs) -> Result<OutputRecord, CliError> {
    let w: WeylType = args.group.parse()?;
    let group = build_group(w, args.max_order)?;
    let table = structure_constants(&group);
    let result = if args.dump_h {
        let mut h = Vec::new();
        for x in group.elements() {
            for y in group.elements() {
                for (z, poly) in table.product_terms(x, y) {
                    h.push(HRow {
                        x: group.word(x).to_string(),
                        y: group.word(y).to_string(),
                        z: group.word(*z).to_string(),
                        h: poly.to_sparse_string(),
                    });
                }
            }
        }
        Payload::HTable { h }
    } else {
        Payload::AValues {
            a_values: group
                .elements()
                .map(|z| AValueRow {
                    element: group.word(z).to_string(),
                    length: group.length(z),
                    a: table.a_value(z),
                })
                .collect(),
        }
    };
    Ok(OutputRecord::new(
        "afunction",
        Query {
            group: Some(w.to_string()),
            dump_h: Some(args.dump_h),
            ..Query::default()
        },
        result,
    ))
}

pub fn cmd_cyclo(args: &CycloArgs) -> Result<OutputRecord, CliError> {
    match (args.e, args.order, args.characteristic) {
        (Some(e), None, None) => {
            let report = check_phi_identity(e as usize)?;
            Ok(OutputRecord::new(
                "cyclo",
                Query {
                    e: Some(e),
                    ..Query::default()
                },
                Payload::PhiIdentity {
                    e: report.e,
                    factorization_holds: report.factorization_holds,
                    negation_holds: report.negation_holds,
                    sign: report.sign,
                    lhs_degree: report.lhs_degree,
                    rhs_degree: report.rhs_degree,
                },
            ))
        }
        (None, Some(order), Some(p)) => {
            let spec = SpecializationSpec::new(order, p)?;
            Ok(OutputRecord::new(
                "cyclo",
                Query {
                    order: Some(order),
                    characteristic: Some(p),
                    ..Query::default()
                },
                Payload::E { e: compute_e(spec) },
            ))
        }
        _ => Err(CliError::Usage(
            "use either --e, or --order together with --char".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run_args(args: &[&str]) -> Result<Outcome, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("hecke").chain(args.iter().copied()))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        run(&cli)
    }

    fn stdout(args: &[&str]) -> String {
        run_args(args).unwrap().stdout
    }

    #[test]
    fn basic_set_text() {
        assert_eq!(
            stdout(&[
                "basic-set",
                "--type",
                "A",
                "--n",
                "3",
                "--e",
                "2",
                "--format",
                "text"
            ]),
            "[3]\n[2,1]\n"
        );
    }

    #[test]
    fn bad_prime_is_a_domain_error() {
        let err = run_args(&[
            "basic-set",
            "--type",
            "B",
            "--n",
            "3",
            "--e",
            "2",
            "--char",
            "2",
        ])
        .unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("2 is a bad prime"));
    }

    #[test]
    fn counts() {
        assert_eq!(
            stdout(&["count", "--type", "A", "--n", "5", "--e", "2"]),
            "3\n"
        );
        assert_eq!(
            stdout(&["count", "--type", "A", "--n", "4", "--irr"]),
            "5\n"
        );
        let d3 = run_args(&["count", "--type", "D", "--n", "3", "--e", "2"]).unwrap();
        assert_eq!(d3.stdout, "2\n");
        assert_eq!(d3.warnings.len(), 1);
    }

    #[test]
    fn membership() {
        assert_eq!(
            stdout(&["membership", "--weights", "{2;0}", "--mp", "[1,1]"]),
            "false\nreason: residues at the right ends of length-1 rows cover all of Z/eZ\n"
        );
        assert_eq!(
            stdout(&["membership", "--weights", "{4;1,2}", "--mp", "[1]|[]"]),
            "true\n"
        );
        assert_eq!(
            stdout(&["membership", "--weights", "{4;1,2}", "--mp", "[]|[]"]),
            "true\n"
        );
        assert_eq!(
            run_args(&["membership", "--weights", "{4;1,2}", "--mp", "[1]"])
                .unwrap_err()
                .exit_code(),
            2
        );
        assert_eq!(
            run_args(&["membership", "--weights", "{4;2,1}", "--mp", "[]|[]"])
                .unwrap_err()
                .exit_code(),
            2
        );
    }

    #[test]
    fn afunction() {
        assert_eq!(stdout(&["afunction", "--group", "A1"]), "e → 0\ns1 → 1\n");
        let a2 = stdout(&["afunction", "--group", "A2"]);
        assert_eq!(a2.lines().count(), 6);
        assert_eq!(
            a2,
            "e → 0\ns1 → 1\ns2 → 1\ns1s2 → 1\ns2s1 → 1\ns1s2s1 → 3\n"
        );
        let err = run_args(&["afunction", "--group", "A9"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(stdout(&["afunction", "--group", "A1", "--dump-h"]).contains("s1 s1 s1 -1:1 1:1"));
    }

    #[test]
    fn cyclo() {
        assert_eq!(
            stdout(&["cyclo", "--e", "3"]),
            "e = 3\nfactorization: true\nnegation: true\nsign: +\ndegrees: 4 = 4\n"
        );
        assert_eq!(
            stdout(&["cyclo", "--order", "1", "--char", "0"]),
            "e = NONE (semisimple)\n"
        );
        assert_eq!(stdout(&["cyclo", "--order", "1", "--char", "5"]), "e = 5\n");
        assert_eq!(
            run_args(&["cyclo", "--order", "4", "--char", "4"])
                .unwrap_err()
                .exit_code(),
            2
        );
    }
}
