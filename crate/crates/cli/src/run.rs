//! Command dispatch: argument semantics, library calls, exit status.

use equimatch::formulas::{
    coefficient_via_explicit, coefficient_via_recurrence, expand_product, Ambient,
};
use equimatch::matchings::coefficient_via_matchings;
use equimatch::models::{coefficient_via_puzzles, coefficient_via_tableaux};
use equimatch::newton::{polytope_lattice_points, PolytopeSpec};
use equimatch::polyring::{Family, Polynomial};
use equimatch::verify::{run_suite, Suite};

use crate::args::{
    Cli, CoeffArgs, Command, ExpandArgs, FormatArg, PolytopeArgs, RouteArg, VerifyArgs,
};
use crate::output;

/// What the process should print and how it should exit.
pub enum Outcome {
    /// Print the document, exit 0.
    Success(String),
    /// Print the report, exit 1 (a verification instance failed).
    VerifyFailed(String),
}

/// Bad input or an unsupported flag combination: exit 2.
pub struct UsageError(pub String);

impl From<equimatch::Error> for UsageError {
    fn from(err: equimatch::Error) -> Self {
        UsageError(err.to_string())
    }
}

pub fn execute(cli: Cli) -> Result<Outcome, UsageError> {
    match cli.command {
        Command::Coeff(args) => coeff(args).map(Outcome::Success),
        Command::Expand(args) => expand(args).map(Outcome::Success),
        Command::Polytope(args) => polytope(args).map(Outcome::Success),
        Command::Verify(args) => verify(args),
    }
}

impl RouteArg {
    /// Family the route computes in before any conversion.
    fn native_family(self) -> Family {
        match self {
            RouteArg::Matchings => Family::Beta,
            _ => Family::T,
        }
    }
}

fn coeff(args: CoeffArgs) -> Result<String, UsageError> {
    let family = args.family.map(Family::from).unwrap_or(args.route.native_family());
    if family == Family::Beta && args.route != RouteArg::Matchings {
        return Err(UsageError(
            "beta output requires --route matchings (the other routes compute in t)".to_string(),
        ));
    }
    if let Some(n) = args.n {
        let ambient = Ambient::Finite(n);
        for factor in [args.i, args.j] {
            if !ambient.contains_class(factor) {
                return Err(UsageError(format!(
                    "sigma_{factor} does not exist in P^{n}"
                )));
            }
        }
        // sigma_k falls out of the space: the coefficient is zero there.
        if !ambient.contains_class(args.k) {
            return Ok(output::polynomial_document(
                &Polynomial::zero(family),
                args.format,
            ));
        }
    }
    let (i, j, k) = (args.i, args.j, args.k);
    let poly = match args.route {
        RouteArg::Matchings => {
            let beta = coefficient_via_matchings(i, j, k);
            match family {
                Family::Beta => beta,
                Family::T => beta.beta_to_t().expect("beta input"),
            }
        }
        RouteArg::Explicit => coefficient_via_explicit(i, j, k),
        RouteArg::Recurrence => coefficient_via_recurrence(i, j, k),
        RouteArg::Puzzles => coefficient_via_puzzles(i, j, k),
        RouteArg::Tableaux => coefficient_via_tableaux(i, j, k),
    };
    Ok(output::polynomial_document(&poly, args.format))
}

fn expand(args: ExpandArgs) -> Result<String, UsageError> {
    let expansion = expand_product(args.i, args.j, Ambient::Finite(args.n), Family::T)?;
    Ok(output::expansion_document(&expansion, args.format))
}

fn polytope(args: PolytopeArgs) -> Result<String, UsageError> {
    let spec = PolytopeSpec::new(args.i, args.j, args.k)?;
    let points = polytope_lattice_points(&spec);
    Ok(output::polytope_document(&spec, &points, args.format))
}

fn verify(args: VerifyArgs) -> Result<Outcome, UsageError> {
    if args.format == FormatArg::Latex {
        return Err(UsageError(
            "verify reports support text and json output only".to_string(),
        ));
    }
    let suites: Vec<Suite> = match args.suite {
        Some(suite) => vec![suite.into()],
        None => Suite::ALL.to_vec(),
    };
    let reports: Vec<_> = suites
        .into_iter()
        .map(|suite| {
            let mut bounds = suite.default_bounds();
            if let Some(max_ij) = args.max_ij {
                bounds = bounds.with_max_ij(max_ij);
            }
            if let Some(max_scale) = args.max_scale {
                bounds = bounds.with_max_scale(max_scale.max(1));
            }
            run_suite(suite, bounds)
        })
        .collect();
    let document = output::verify_document(&reports, args.format);
    if reports.iter().all(|r| r.passed()) {
        Ok(Outcome::Success(document))
    } else {
        Ok(Outcome::VerifyFailed(document))
    }
}
