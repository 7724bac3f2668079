//! Command-line front end. Every command builds an [`OutputDocument`] that
//! renders either as text or as deterministic JSON.

mod commands;
mod output;

pub use commands::{cmd_basis, cmd_gw, cmd_integrate, cmd_present, cmd_verify, parse_class, parse_range, VerifyTarget};
pub use output::{scalar_json, OutputDocument, Status, SCHEMA_VERSION};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::geometry::{Coords, CurveClass};
use crate::groebner::Budget;

/// Environment variable capping the lcm degree Buchberger may reach.
pub const MAX_DEGREE_ENV: &str = "QC_MAX_DEGREE";

#[derive(Parser, Debug)]
#[command(name = "qcoh", version, about = "Quantum cohomology of blow-ups of P^m along linear subspaces")]
pub struct Cli {
    /// Emit the JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoordsArg {
    Bundle,
    Blowup,
}

impl From<CoordsArg> for Coords {
    fn from(c: CoordsArg) -> Self {
        match c {
            CoordsArg::Bundle => Coords::Bundle,
            CoordsArg::Blowup => Coords::Blowup,
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Instance {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub p: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Relations, staircase basis and rank of a presentation.
    Present {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, value_enum, default_value = "blowup")]
        coords: CoordsArg,
        /// Deformed relations with parameters q1, q2.
        #[arg(long)]
        quantum: bool,
        /// Set q1 = q2 = 1.
        #[arg(long)]
        at_q_one: bool,
    },
    /// Three-point invariant I_A(alpha, beta, gamma) with A = a A1 + b A2.
    Gw {
        #[command(flatten)]
        inst: Instance,
        /// Curve class as `a,b`.
        #[arg(long, value_parser = parse_class)]
        class: CurveClass,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        gamma: String,
        /// Coordinates the classes are written in.
        #[arg(long, value_enum, default_value = "bundle")]
        coords: CoordsArg,
    },
    /// Run every check on one instance or a grid of instances.
    Verify {
        #[arg(long, requires = "p", conflicts_with_all = ["grid_m", "grid_p"])]
        m: Option<u32>,
        #[arg(long, requires = "m")]
        p: Option<u32>,
        /// Inclusive range `a..b`.
        #[arg(long, value_parser = parse_range, requires = "grid_p")]
        grid_m: Option<(u32, u32)>,
        /// Inclusive range `a..b`.
        #[arg(long, value_parser = parse_range, requires = "grid_m")]
        grid_p: Option<(u32, u32)>,
        /// Largest multiple of A1 swept by the vanishing check.
        #[arg(long, default_value_t = 2)]
        b_max: u32,
        /// Also check permutation symmetry of all extracted invariants.
        #[arg(long)]
        symmetry: bool,
    },
    /// Degree of a class, by normal form and by the power-series oracle.
    Integrate {
        #[command(flatten)]
        inst: Instance,
        #[arg(long)]
        class: String,
        #[arg(long, value_enum, default_value = "bundle")]
        coords: CoordsArg,
    },
    /// Staircase basis with its Poincaré pairing matrix.
    Basis {
        #[command(flatten)]
        inst: Instance,
        #[arg(long, value_enum, default_value = "bundle")]
        coords: CoordsArg,
    },
}

/// Reads [`MAX_DEGREE_ENV`].
pub fn budget_from_env() -> Result<Budget, String> {
    match std::env::var(MAX_DEGREE_ENV) {
        Ok(s) => {
            let d: u32 = s.trim().parse().map_err(|_| format!("{MAX_DEGREE_ENV}=`{s}` is not a positive integer"))?;
            if d == 0 {
                return Err(format!("{MAX_DEGREE_ENV} must be positive"));
            }
            Ok(Budget { max_degree: d, ..Budget::default() })
        }
        Err(_) => Ok(Budget::default()),
    }
}

pub fn run(cli: &Cli, budget: Budget) -> OutputDocument {
    match &cli.command {
        Command::Present { inst, coords, quantum, at_q_one } => {
            cmd_present(inst.m, inst.p, (*coords).into(), *quantum, *at_q_one, budget)
        }
        Command::Gw { inst, class, alpha, beta, gamma, coords } => {
            cmd_gw(inst.m, inst.p, *class, alpha, beta, gamma, (*coords).into(), budget)
        }
        Command::Verify { m, p, grid_m, grid_p, b_max, symmetry } => {
            let target = match (m, p, grid_m, grid_p) {
                (Some(m), Some(p), _, _) => VerifyTarget::Single(*m, *p),
                (_, _, Some(gm), Some(gp)) => VerifyTarget::Grid { m: *gm, p: *gp },
                _ => {
                    return OutputDocument::usage_error(
                        "verify",
                        Default::default(),
                        "give either --m/--p or --grid-m/--grid-p",
                    )
                }
            };
            cmd_verify(target, *b_max, *symmetry, budget)
        }
        Command::Integrate { inst, class, coords } => cmd_integrate(inst.m, inst.p, class, (*coords).into(), budget),
        Command::Basis { inst, coords } => cmd_basis(inst.m, inst.p, (*coords).into(), budget),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_classes() {
        assert_eq!(parse_range("4..12"), Ok((4, 12)));
        assert_eq!(parse_range("0..=3"), Ok((0, 3)));
        assert_eq!(parse_range("5"), Ok((5, 5)));
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("a..b").is_err());
        assert_eq!(parse_class("1,0"), Ok(CurveClass::A1));
        assert_eq!(parse_class(" 2 , 3 "), Ok(CurveClass::new(2, 3)));
        assert!(parse_class("1").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn present_spec_outputs() {
        let doc = cmd_present(4, 0, Coords::Bundle, false, false, Budget::default());
        assert_eq!(doc.payload["relations"], serde_json::json!(["h^4", "xi^2 - 3*h*xi + 2*h^2"]));
        let doc = cmd_present(4, 0, Coords::Blowup, true, true, Budget::default());
        assert_eq!(doc.payload["relations_factored"], serde_json::json!(["(k-eta)^4 - eta", "k*eta - 1"]));
        assert_eq!(doc.payload["rank"], 8);
        let doc = cmd_present(5, 1, Coords::Blowup, true, false, Budget::default());
        assert_eq!(doc.status, Status::Ok);
        assert_eq!(doc.payload["in_range"], false);
        assert_eq!(doc.warnings.len(), 1);
        let doc = cmd_present(4, 0, Coords::Blowup, false, true, Budget::default());
        assert_eq!(doc.status, Status::UsageError);
        let doc = cmd_present(3, 2, Coords::Blowup, false, false, Budget::default());
        assert_eq!(doc.exit_code(), 2);
    }

    #[test]
    fn tight_budget_is_a_usage_error() {
        let doc = cmd_present(8, 1, Coords::Blowup, true, false, Budget { max_degree: 3, max_pairs: 10 });
        assert_eq!(doc.status, Status::UsageError);
    }
}
