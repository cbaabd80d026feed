//! Command-line front end: `solve`, `sweep` and `verify`.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::band::{BandSpec, DistributionBand};
use crate::equilibria::{
    solve_all_ckne, solve_ambiguous_ckne, solve_ambiguous_cursed_uncursed, solve_bne, solve_cursed_no_uncertainty,
    solve_cursed_uncursed, solve_knight_nash_cutoff, solve_partial, solve_symmetric_ckne, EquilibriumResult,
    SolutionConcept,
};
use crate::error::Error;
use crate::oracle::{
    bruteforce_min_value, perceived_by_quadrature, simulate_game, verify_equilibrium, GeneralStrategy,
};
use crate::valuation::{value, Action, CutoffStrategy, ValueQuery};
use crate::welfare::welfare_report;

#[derive(Debug, Parser)]
#[command(
    name = "cursed-knight",
    version,
    about = "Equilibria of the trading game under cursed beliefs and band ambiguity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one configuration and print the equilibrium profiles.
    Solve(RunConfig),
    /// Sweep a band parameter or a cursedness degree.
    Sweep(RunConfig),
    /// Run the oracle checks for one configuration.
    Verify(RunConfig),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConceptName {
    Bne,
    Cursed,
    KnightNash,
    SymmetricCkne,
    AllCkne,
    CursedUncursed,
    AmbiguousCkne,
    AmbiguousCursedUncursed,
    Partial,
    Welfare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Csv,
}

/// Options shared by all subcommands. `--config` loads the same fields from
/// a JSON file; flags given on the command line take precedence.
#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunConfig {
    /// JSON file with the fields below (kebab-case keys).
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
    /// Band name: contamination, triangle, epsilon, uniform, sine-wave, steep-root, kinked-linear.
    #[arg(long)]
    pub family: Option<String>,
    /// Family parameter (κ, a or ε).
    #[arg(long)]
    pub param: Option<f64>,
    /// JSON band description.
    #[arg(long)]
    pub band_file: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub concept: Option<ConceptName>,
    #[arg(long)]
    pub chi1: Option<f64>,
    #[arg(long)]
    pub chi2: Option<f64>,
    /// Swept quantity: param, chi1 or chi2.
    #[arg(long)]
    pub sweep_param: Option<String>,
    #[arg(long)]
    pub start: Option<f64>,
    #[arg(long)]
    pub stop: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    /// Monte Carlo games for `verify`.
    #[arg(long)]
    pub games: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Type grid for equilibrium searches and certificates.
    #[arg(long)]
    pub grid_n: Option<usize>,
    /// Shift added to both thresholds before `verify` checks them.
    #[arg(long)]
    pub perturb: Option<f64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

/// Exit statuses of the binary.
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_CONVERGENCE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Convergence(_)) { EXIT_CONVERGENCE } else { EXIT_CONFIG };
        Self { code, message: e.to_string() }
    }
}

fn config_error(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_CONFIG, message: message.into() }
}

/// Rendered output plus the exit status it should be reported with.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

/// Formats `x` with 12 significant digits, in fixed notation unless the
/// magnitude is extreme.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let sci = format!("{x:.11e}");
    let exp: i32 = sci.split('e').nth(1).and_then(|e| e.parse().ok()).unwrap_or(0);
    if (-5..=11).contains(&exp) {
        format!("{x:.prec$}", prec = (11 - exp) as usize)
    } else {
        sci
    }
}

const DEFAULT_GRID: usize = 2001;
const DEFAULT_GAMES: u64 = 1_000_000;
const DEFAULT_SEED: u64 = 2024;

impl RunConfig {
    fn resolve(self) -> Result<Self, CliError> {
        let Some(path) = &self.config else {
            return Ok(self);
        };
        let text =
            std::fs::read_to_string(path).map_err(|e| config_error(format!("cannot read {}: {e}", path.display())))?;
        let file: RunConfig =
            serde_json::from_str(&text).map_err(|e| config_error(format!("bad config {}: {e}", path.display())))?;
        Ok(RunConfig {
            config: self.config,
            family: self.family.or(file.family),
            param: self.param.or(file.param),
            band_file: self.band_file.or(file.band_file),
            concept: self.concept.or(file.concept),
            chi1: self.chi1.or(file.chi1),
            chi2: self.chi2.or(file.chi2),
            sweep_param: self.sweep_param.or(file.sweep_param),
            start: self.start.or(file.start),
            stop: self.stop.or(file.stop),
            steps: self.steps.or(file.steps),
            games: self.games.or(file.games),
            seed: self.seed.or(file.seed),
            grid_n: self.grid_n.or(file.grid_n),
            perturb: self.perturb.or(file.perturb),
            output: self.output.or(file.output),
            format: self.format.or(file.format),
        })
    }

    fn concept(&self) -> Result<ConceptName, CliError> {
        self.concept.ok_or_else(|| config_error("--concept is required"))
    }

    fn band_with(&self, param: Option<f64>) -> Result<DistributionBand, CliError> {
        if let Some(path) = &self.band_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| config_error(format!("cannot read {}: {e}", path.display())))?;
            let spec: BandSpec = serde_json::from_str(&text)
                .map_err(|e| config_error(format!("bad band file {}: {e}", path.display())))?;
            return Ok(spec.build()?);
        }
        let family = self.family.clone().unwrap_or_else(|| "uniform".into());
        Ok(BandSpec::Family { family, param }.build()?)
    }

    fn band(&self) -> Result<DistributionBand, CliError> {
        self.band_with(self.param)
    }

    fn chis(&self) -> Result<(f64, f64), CliError> {
        match (self.chi1, self.chi2) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(config_error("--chi1 and --chi2 are required")),
        }
    }

    fn grid_n(&self) -> usize {
        self.grid_n.unwrap_or(DEFAULT_GRID)
    }
}

fn solve_with(
    concept: ConceptName,
    band: &DistributionBand,
    chis: Option<(f64, f64)>,
    grid_n: usize,
) -> Result<EquilibriumResult, CliError> {
    Ok(match concept {
        ConceptName::Bne => solve_bne(),
        ConceptName::Cursed => solve_cursed_no_uncertainty(band.center())?,
        ConceptName::KnightNash => solve_knight_nash_cutoff(band)?,
        ConceptName::SymmetricCkne => solve_symmetric_ckne(band)?,
        ConceptName::AllCkne => solve_all_ckne(band, grid_n)?,
        ConceptName::CursedUncursed => solve_cursed_uncursed(band)?,
        ConceptName::AmbiguousCkne => solve_ambiguous_ckne(band)?,
        ConceptName::AmbiguousCursedUncursed => solve_ambiguous_cursed_uncursed(band)?,
        ConceptName::Partial | ConceptName::Welfare => {
            let (a, b) = chis.ok_or_else(|| config_error("--chi1 and --chi2 are required"))?;
            solve_partial(a, b, band.center())?
        }
    })
}

fn render_solve(cfg: &RunConfig) -> Result<String, CliError> {
    let concept = cfg.concept()?;
    let band = cfg.band()?;
    let format = cfg.format.unwrap_or(Format::Json);
    if concept == ConceptName::Welfare {
        let (a, b) = cfg.chis()?;
        let r = welfare_report(a, b)?;
        return Ok(match format {
            Format::Json => serde_json::to_string_pretty(&r).expect("serializable") + "\n",
            Format::Csv => {
                format!("chi1,chi2,U1,U2,V1,V2\n{}\n", [r.chi1, r.chi2, r.u1, r.u2, r.v1, r.v2].map(sig12).join(","))
            }
        });
    }
    let chis = cfg.chis().ok();
    let result = solve_with(concept, &band, chis, cfg.grid_n())?;
    eprintln!("band: {}; method: {:?}", band.label(), result.method);
    for w in &result.warnings {
        eprintln!("warning: {w}");
    }
    Ok(match format {
        Format::Json => {
            let doc = json!({
                "band": band.label(),
                "concept": result.concept,
                "profiles": result.profiles,
                "residuals": result.residuals,
                "method": result.method,
                "trivial_included": result.trivial_included,
                "warnings": result.warnings,
            });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Csv => {
            let mut out = String::from("theta1,theta2,residual\n");
            for (p, r) in result.profiles.iter().zip(&result.residuals) {
                writeln!(out, "{},{},{}", sig12(p.0), sig12(p.1), sig12(*r)).unwrap();
            }
            out
        }
    })
}

fn sweep_points(cfg: &RunConfig) -> Result<Vec<f64>, CliError> {
    let (start, stop) = match (cfg.start, cfg.stop) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(config_error("--start and --stop are required")),
    };
    let steps = cfg.steps.unwrap_or(50);
    if steps < 2 {
        return Err(config_error(format!("--steps must be at least 2, got {steps}")));
    }
    Ok((0..steps).map(|i| start + (stop - start) * i as f64 / (steps - 1) as f64).collect())
}

fn render_sweep(cfg: &RunConfig) -> Result<String, CliError> {
    let concept = cfg.concept()?;
    let points = sweep_points(cfg)?;
    let swept = cfg
        .sweep_param
        .clone()
        .unwrap_or_else(|| if concept == ConceptName::Welfare { "chi1" } else { "param" }.into());
    if concept == ConceptName::Welfare {
        let mut out = String::from("chi,U,V\n");
        for x in points {
            let r = match swept.as_str() {
                "chi1" => welfare_report(x, cfg.chi2.unwrap_or(1.0))?,
                "chi2" => welfare_report(cfg.chi1.unwrap_or(1.0), x)?,
                other => return Err(config_error(format!("welfare sweeps chi1 or chi2, not `{other}`"))),
            };
            let (u, v) = if swept == "chi1" { (r.u1, r.v1) } else { (r.u2, r.v2) };
            writeln!(out, "{},{},{}", sig12(x), sig12(u), sig12(v)).unwrap();
        }
        return Ok(out);
    }
    let mut out = String::from("param,threshold\n");
    for x in points {
        let (band, chis) = match swept.as_str() {
            "param" => (cfg.band_with(Some(x))?, cfg.chis().ok()),
            "chi1" => (cfg.band()?, Some((x, cfg.chi2.unwrap_or(1.0)))),
            "chi2" => (cfg.band()?, Some((cfg.chi1.unwrap_or(1.0), x))),
            other => return Err(config_error(format!("unknown sweep parameter `{other}`"))),
        };
        let result = solve_with(concept, &band, chis, cfg.grid_n())?;
        let threshold = result.non_trivial().first().map_or(0.0, |p| p.0);
        writeln!(out, "{},{}", sig12(x), sig12(threshold)).unwrap();
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
struct Check {
    name: &'static str,
    passed: bool,
    discrepancy: f64,
    tolerance: f64,
}

/// Exact ex-ante win probability of player 1 for cut-offs at quantiles `p1`, `p2`.
fn exact_u1(p1: f64, p2: f64) -> f64 {
    0.5 + p1.min(p2) * (p2 - p1)
}

fn render_verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let concept = cfg.concept()?;
    let band = cfg.band()?;
    let chis = cfg.chis().ok();
    let result = solve_with(concept, &band, chis, cfg.grid_n())?;
    let solution = match concept {
        ConceptName::Welfare => SolutionConcept::Partial { chi1: chis.unwrap().0, chi2: chis.unwrap().1 },
        _ => result.concept,
    };
    let (c1, c2) = solution.player_concepts();
    let base = result.non_trivial().first().or(result.profiles.first()).copied().unwrap_or((0.0, 0.0));
    let shift = cfg.perturb.unwrap_or(0.0);
    let profile = ((base.0 + shift).clamp(0.0, 1.0), (base.1 + shift).clamp(0.0, 1.0));
    let s1 = GeneralStrategy::cutoff(profile.0)?;
    let s2 = GeneralStrategy::cutoff(profile.1)?;
    let mut checks = Vec::new();

    let cert = verify_equilibrium((&s1, &s2), (c1, c2), &band, cfg.grid_n())?;
    let worst = cert.max_improvement[0].max(cert.max_improvement[1]);
    checks.push(Check { name: "verify_equilibrium", passed: cert.certified, discrepancy: worst, tolerance: 1e-6 });

    let f = band.center();
    let games = cfg.games.unwrap_or(DEFAULT_GAMES);
    let sim = simulate_game(&s1, &s2, f, games, cfg.seed.unwrap_or(DEFAULT_SEED))?;
    let gap = (sim.mean - exact_u1(f.eval(profile.0), f.eval(profile.1))).abs();
    let tol = 3.0 * sim.std_error;
    checks.push(Check { name: "simulate_game", passed: gap <= tol, discrepancy: gap, tolerance: tol });

    if c1.is_maxmin() {
        let mut gap: f64 = 0.0;
        let mut sound = true;
        for t in [0.1, 0.3, 0.5, 0.7, 0.9] {
            for action in [Action::Trade, Action::NoTrade] {
                let q = ValueQuery::new(&band, t, action, CutoffStrategy::new(profile.1)?)?;
                let exact = value(c1, &q)?;
                let brute = bruteforce_min_value(c1, &q, 500, 8, cfg.seed.unwrap_or(DEFAULT_SEED))?;
                sound &= brute >= exact - 1e-12;
                gap = gap.max(brute - exact);
            }
        }
        checks.push(Check {
            name: "bruteforce_min_value",
            passed: sound && gap <= 1e-3,
            discrepancy: gap,
            tolerance: 1e-3,
        });
    }

    if let (ConceptName::Welfare | ConceptName::Partial, Some((a, b))) = (concept, chis) {
        let r = welfare_report(a, b)?;
        let (q1, q2) = perceived_by_quadrature(a, b)?;
        let gap = (q1 - r.v1).abs().max((q2 - r.v2).abs());
        checks.push(Check { name: "perceived_quadrature", passed: gap <= 1e-10, discrepancy: gap, tolerance: 1e-10 });
    }

    let passed = checks.iter().all(|c| c.passed);
    let doc = json!({
        "band": band.label(),
        "concept": solution,
        "profile": profile,
        "games": games,
        "checks": checks,
        "passed": passed,
    });
    let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
    Ok(Outcome { text, code: if passed { 0 } else { EXIT_VERIFY } })
}

/// Runs a parsed command line. Output goes to `--output` when given,
/// otherwise it is returned for printing.
pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    let (cfg, outcome) = match cli.command {
        Command::Solve(c) => {
            let c = c.resolve()?;
            let text = render_solve(&c)?;
            (c, Outcome { text, code: 0 })
        }
        Command::Sweep(c) => {
            let c = c.resolve()?;
            let text = render_sweep(&c)?;
            (c, Outcome { text, code: 0 })
        }
        Command::Verify(c) => {
            let c = c.resolve()?;
            let outcome = render_verify(&c)?;
            (c, outcome)
        }
    };
    match &cfg.output {
        Some(path) => {
            std::fs::write(path, &outcome.text)
                .map_err(|e| config_error(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome { text: String::new(), code: outcome.code })
        }
        None => Ok(outcome),
    }
}

/// Sizes the global thread pool from `CURSED_KNIGHT_THREADS` if set.
pub fn init_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("CURSED_KNIGHT_THREADS") {
        let n: usize = v.parse().map_err(|_| config_error(format!("CURSED_KNIGHT_THREADS=`{v}` is not a count")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| config_error(e.to_string()))?;
    }
    Ok(())
}
