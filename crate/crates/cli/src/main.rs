mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use gws_core::classes;
use gws_core::generator::{self, GameClass, SplitMix64};
use gws_core::instance::{self, Document, InstanceNames, NamedInstance};
use gws_core::rational::{parse_rational, ratio};
use gws_core::transform::{guarantee_transform, Procedure, TransformResult};
use gws_core::{checks, Allocation, Coalition, Game, Orientation, Rational, DEFAULT_SIZE_GUARD};

use report::{
    ChecksSection, ClassSection, CoalitionWitness, CoalitionWorth, CoreSection, GeneratedSection,
    MemberTest, PlayerValue, Report, ShapleySection, TransformSection, Verdict,
};

/// Exact solvers for TU-games with strategies: guarantee transforms,
/// Shapley values, cores, and the airport/simple special classes.
#[derive(Parser)]
#[command(name = "gws", version)]
struct Cli {
    /// Render aligned tables instead of the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a transform to a family document.
    Transform {
        #[arg(long = "proc", value_enum)]
        procedure: ProcedureArg,
        file: PathBuf,
    },
    /// Shapley value of a game, or of a family's guarantee transform.
    Shapley { file: PathBuf },
    /// Core diagnostics: balancedness, witness, vertices, membership.
    Core {
        file: PathBuf,
        /// Include a core element when the core is non-empty.
        #[arg(long)]
        witness: bool,
        /// Enumerate the core's vertices (up to 5 players).
        #[arg(long)]
        vertices: bool,
        /// Test one allocation, as comma-separated exact rationals.
        #[arg(long, value_name = "a1,a2,...")]
        member: Option<String>,
    },
    /// Verify transform properties on a family (exit 1 on failure).
    Check {
        file: PathBuf,
        /// The defining properties of the guarantee transform.
        #[arg(long)]
        axioms: bool,
        /// Transmission of superadditivity and monotonicity.
        #[arg(long)]
        inheritance: bool,
        /// Core-intersection identity, sampling this many allocations.
        #[arg(long, value_name = "N_SAMPLES")]
        core_intersection: Option<usize>,
    },
    /// Class-specific diagnostics for airport or simple families.
    Class {
        file: PathBuf,
        #[arg(value_enum)]
        class: ClassArg,
    },
    /// Generate a random instance file.
    Gen {
        #[arg(long)]
        seed: u64,
        /// Player count (at most 4).
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        class: GenClassArg,
        /// Strategies per player (at most 3).
        #[arg(long, default_value_t = 3)]
        max_strats: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProcedureArg {
    Maxmin,
    Minmax,
    Maxmax,
}

impl From<ProcedureArg> for Procedure {
    fn from(arg: ProcedureArg) -> Procedure {
        match arg {
            ProcedureArg::Maxmin => Procedure::Maxmin,
            ProcedureArg::Minmax => Procedure::Minmax,
            ProcedureArg::Maxmax => Procedure::Maxmax,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Airport,
    Simple,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenClassArg {
    General,
    Superadditive,
    Monotone,
    Simple,
    Airport,
}

impl From<GenClassArg> for GameClass {
    fn from(arg: GenClassArg) -> GameClass {
        match arg {
            GenClassArg::General => GameClass::General,
            GenClassArg::Superadditive => GameClass::Superadditive,
            GenClassArg::Monotone => GameClass::Monotone,
            GenClassArg::Simple => GameClass::Simple,
            GenClassArg::Airport => GameClass::Airport,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let pretty = cli.pretty;
    let (report, exit) = match cli.command {
        Command::Transform { procedure, file } => cmd_transform(procedure.into(), &file)?,
        Command::Shapley { file } => cmd_shapley(&file)?,
        Command::Core {
            file,
            witness,
            vertices,
            member,
        } => cmd_core(&file, witness, vertices, member.as_deref())?,
        Command::Check {
            file,
            axioms,
            inheritance,
            core_intersection,
        } => cmd_check(&file, axioms, inheritance, core_intersection)?,
        Command::Class { file, class } => cmd_class(&file, class)?,
        Command::Gen {
            seed,
            n,
            class,
            max_strats,
            output,
        } => cmd_gen(seed, n, class.into(), max_strats, &output)?,
    };
    if pretty {
        print!("{}", report.to_pretty());
    } else {
        print!("{}", report.to_json());
    }
    Ok(exit)
}

struct Loaded {
    digest: String,
    seed: u64,
    document: Document,
}

fn load(path: &Path) -> Result<Loaded> {
    let bytes =
        std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let text = std::str::from_utf8(&bytes)
        .with_context(|| format!("{} is not UTF-8", path.display()))?;
    let document = instance::load_str_with_guard(text, size_guard()?)
        .with_context(|| format!("cannot load {}", path.display()))?;
    let seed = fnv1a(&bytes);
    Ok(Loaded {
        digest: format!("fnv1a:{seed:016x}"),
        seed,
        document,
    })
}

fn require_family(document: Document) -> Result<NamedInstance> {
    match document {
        Document::Family(instance) => Ok(instance),
        Document::Single(_) => {
            bail!("this command needs a family document (one with a \"games\" table)")
        }
    }
}

fn size_guard() -> Result<usize> {
    match std::env::var("GWS_SIZE_GUARD") {
        Err(_) => Ok(DEFAULT_SIZE_GUARD),
        Ok(text) => text
            .trim()
            .parse()
            .with_context(|| format!("GWS_SIZE_GUARD must be a positive integer, got {text:?}")),
    }
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

fn orientation_name(orientation: Orientation) -> &'static str {
    match orientation {
        Orientation::Value => "value",
        Orientation::Cost => "cost",
    }
}

fn worth_rows(names: &InstanceNames, game: &Game) -> Vec<CoalitionWorth> {
    Coalition::nonempty(game.n())
        .map(|s| CoalitionWorth {
            coalition: names.coalition_key(s),
            worth: game.worth(s).to_string(),
        })
        .collect()
}

fn witness_rows(names: &InstanceNames, result: &TransformResult<Rational>) -> Vec<CoalitionWitness> {
    result
        .witnesses()
        .iter()
        .map(|(s, profile)| CoalitionWitness {
            coalition: names.coalition_key(*s),
            profile: names.profile_key(profile),
        })
        .collect()
}

fn allocation_rows(players: &[String], allocation: &Allocation<Rational>) -> Vec<PlayerValue> {
    players
        .iter()
        .zip(allocation.iter())
        .map(|(player, value)| PlayerValue {
            player: player.clone(),
            value: value.to_string(),
        })
        .collect()
}

fn transform_section(
    names: &InstanceNames,
    procedure: Procedure,
    result: &TransformResult<Rational>,
) -> TransformSection {
    TransformSection {
        procedure: procedure.name().to_string(),
        orientation: orientation_name(result.game().orientation()).to_string(),
        worths: worth_rows(names, result.game()),
        witnesses: witness_rows(names, result),
    }
}

fn guarantee_procedure(orientation: Orientation) -> Procedure {
    match orientation {
        Orientation::Value => Procedure::Maxmin,
        Orientation::Cost => Procedure::Minmax,
    }
}

fn cmd_transform(procedure: Procedure, file: &Path) -> Result<(Report, ExitCode)> {
    let loaded = load(file)?;
    let instance = require_family(loaded.document)?;
    let result = procedure.apply(&instance.family).with_context(|| {
        format!(
            "{} does not apply to a {}-oriented family",
            procedure.name(),
            orientation_name(instance.family.orientation())
        )
    })?;
    let mut report = Report::new(format!("transform --proc {} {}", procedure.name(), file.display()));
    report.input_digest = Some(loaded.digest);
    report.transform = Some(transform_section(&instance.names, procedure, &result));
    Ok((report, ExitCode::SUCCESS))
}

fn cmd_shapley(file: &Path) -> Result<(Report, ExitCode)> {
    let loaded = load(file)?;
    let mut report = Report::new(format!("shapley {}", file.display()));
    report.input_digest = Some(loaded.digest);
    match loaded.document {
        Document::Single(named) => {
            report.shapley = Some(ShapleySection {
                via: None,
                allocation: allocation_rows(&named.players, &named.game.shapley()),
            });
        }
        Document::Family(instance) => {
            let procedure = guarantee_procedure(instance.family.orientation());
            let result = guarantee_transform(&instance.family);
            report.shapley = Some(ShapleySection {
                via: Some(procedure.name().to_string()),
                allocation: allocation_rows(&instance.names.players, &result.game().shapley()),
            });
            report.transform = Some(transform_section(&instance.names, procedure, &result));
        }
    }
    Ok((report, ExitCode::SUCCESS))
}

fn cmd_core(
    file: &Path,
    witness: bool,
    vertices: bool,
    member: Option<&str>,
) -> Result<(Report, ExitCode)> {
    let loaded = load(file)?;
    let mut report = Report::new(format!("core {}", file.display()));
    report.input_digest = Some(loaded.digest);
    let (players, game, via) = match loaded.document {
        Document::Single(named) => (named.players, named.game, None),
        Document::Family(instance) => {
            let procedure = guarantee_procedure(instance.family.orientation());
            let result = guarantee_transform(&instance.family);
            report.transform = Some(transform_section(&instance.names, procedure, &result));
            (
                instance.names.players,
                result.into_game(),
                Some(procedure.name().to_string()),
            )
        }
    };
    let core_witness = game.core_witness();
    let mut section = CoreSection {
        via,
        orientation: orientation_name(game.orientation()).to_string(),
        grand_worth: game.worth(game.grand_coalition()).to_string(),
        balanced: core_witness.is_some(),
        witness: None,
        vertices: None,
        member: None,
    };
    if witness {
        section.witness = core_witness.map(|w| allocation_rows(&players, &w));
    }
    if vertices {
        let list = game.core_vertices()?;
        section.vertices = Some(
            list.iter()
                .map(|v| v.iter().map(Rational::to_string).collect())
                .collect(),
        );
    }
    if let Some(text) = member {
        let allocation = parse_allocation(text, game.n())?;
        section.member = Some(MemberTest {
            allocation: allocation.iter().map(Rational::to_string).collect(),
            is_member: game.core_contains(&allocation)?,
        });
    }
    report.core = Some(section);
    Ok((report, ExitCode::SUCCESS))
}

fn parse_allocation(text: &str, n: usize) -> Result<Allocation<Rational>> {
    let values: Vec<Rational> = text
        .split(',')
        .map(|part| parse_rational(part).map_err(anyhow::Error::from))
        .collect::<Result<_>>()?;
    if values.len() != n {
        bail!("allocation has {} entries, the game has {n} players", values.len());
    }
    Ok(Allocation::new(values))
}

/// The comparison family for the monotonicity check: every non-empty
/// coalition's worth lowered by one.
fn lowered_copy(instance: &NamedInstance) -> NamedInstance {
    let family = &instance.family;
    let games: Vec<Game> = family
        .games()
        .iter()
        .map(|g| {
            let worths: Vec<Rational> = g
                .worths()
                .map(|(s, w)| {
                    if s.is_empty() {
                        ratio(0, 1)
                    } else {
                        w.clone() - ratio(1, 1)
                    }
                })
                .collect();
            Game::from_worths(g.n(), g.orientation(), worths).expect("valid worth table")
        })
        .collect();
    NamedInstance {
        names: instance.names.clone(),
        family: gws_core::StrategicGame::new(family.strategy_counts().to_vec(), games)
            .expect("same shape"),
    }
}

fn cmd_check(
    file: &Path,
    axioms: bool,
    inheritance: bool,
    core_intersection: Option<usize>,
) -> Result<(Report, ExitCode)> {
    let modes = usize::from(axioms) + usize::from(inheritance) + usize::from(core_intersection.is_some());
    if modes != 1 {
        bail!("pick exactly one of --axioms, --inheritance, --core-intersection N");
    }
    let loaded = load(file)?;
    let instance = require_family(loaded.document)?;
    let family = &instance.family;

    let (mode, verdicts) = if axioms {
        let lowered = lowered_copy(&instance);
        let pair = checks::monotonicity_pair(family, &lowered.family)?;
        (
            "axioms".to_string(),
            vec![
                Verdict {
                    name: "individual objectivity".into(),
                    passed: checks::individual_objectivity(family),
                    hypothesis: None,
                },
                Verdict {
                    name: "monotonicity (against a lowered copy)".into(),
                    passed: pair.passes(),
                    hypothesis: Some(pair.hypothesis),
                },
                Verdict {
                    name: "irrelevance of dominated strategies".into(),
                    passed: checks::dominated_strategy_irrelevance(family),
                    hypothesis: None,
                },
                Verdict {
                    name: "irrelevance of dominated threats".into(),
                    passed: checks::dominated_threat_irrelevance(family),
                    hypothesis: None,
                },
                Verdict {
                    name: "merge invariance (all coalitions)".into(),
                    passed: checks::merge_invariance_all(family),
                    hypothesis: None,
                },
            ],
        )
    } else if inheritance {
        let superadditive = checks::superadditivity_transmission(family);
        let monotone = checks::monotonicity_transmission(family);
        (
            "inheritance".to_string(),
            vec![
                Verdict {
                    name: "superadditivity transmission".into(),
                    passed: superadditive.passes(),
                    hypothesis: Some(superadditive.hypothesis),
                },
                Verdict {
                    name: "monotonicity transmission".into(),
                    passed: monotone.passes(),
                    hypothesis: Some(monotone.hypothesis),
                },
            ],
        )
    } else {
        let count = core_intersection.unwrap_or_default();
        let samples = efficiency_samples(family, count, loaded.seed);
        let outcome = checks::core_intersection(family, &samples)?;
        (
            format!("core-intersection ({count} samples)"),
            vec![
                Verdict {
                    name: "constraint identity".into(),
                    passed: outcome.constraint_identity,
                    hypothesis: None,
                },
                Verdict {
                    name: "membership equivalence on samples".into(),
                    passed: outcome.samples_agree,
                    hypothesis: None,
                },
            ],
        )
    };

    let all_passed = verdicts.iter().all(|v| v.passed);
    let mut report = Report::new(format!("check {}", file.display()));
    report.input_digest = Some(loaded.digest);
    report.checks = Some(ChecksSection {
        mode,
        verdicts,
        all_passed,
    });
    let exit = if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };
    Ok((report, exit))
}

/// Deterministic allocations around the efficiency hyperplane of the
/// transform, seasoned with the core witness and a few inefficient points.
fn efficiency_samples(
    family: &gws_core::StrategicGame,
    count: usize,
    seed: u64,
) -> Vec<Allocation<Rational>> {
    let transform = guarantee_transform(family);
    let grand = transform
        .game()
        .worth(family.grand_coalition())
        .clone();
    let n = family.n();
    let mut rng = SplitMix64::new(seed ^ count as u64);
    let mut samples = Vec::with_capacity(count);
    if let Some(witness) = transform.game().core_witness() {
        samples.push(witness);
    }
    while samples.len() < count {
        let mut values: Vec<Rational> = (0..n)
            .map(|_| ratio(rng.below(25) as i64 - 6, 2))
            .collect();
        if rng.below(8) != 0 {
            let partial: Rational = values[..n - 1].iter().cloned().sum();
            values[n - 1] = grand.clone() - partial;
        }
        samples.push(Allocation::new(values));
    }
    samples.truncate(count);
    samples
}

fn cmd_class(file: &Path, class: ClassArg) -> Result<(Report, ExitCode)> {
    let loaded = load(file)?;
    let instance = require_family(loaded.document)?;
    let family = &instance.family;
    let names = &instance.names;
    let mut report = Report::new(format!(
        "class {} {}",
        file.display(),
        match class {
            ClassArg::Airport => "airport",
            ClassArg::Simple => "simple",
        }
    ));
    report.input_digest = Some(loaded.digest);

    let section = match class {
        ClassArg::Airport => {
            let is_family = classes::is_airport_family(family);
            let mut section = ClassSection {
                class: "airport".into(),
                is_family,
                transform: None,
                most_costly_player: None,
                pivot: None,
                minorant: None,
                balanced: None,
                concave: None,
                transform_is_simple: None,
                veto_player: None,
                veto_matches_balancedness: None,
            };
            if is_family {
                let psi = gws_core::minmax(family)?.into_game();
                section.transform = Some(worth_rows(names, &psi));
                section.most_costly_player = classes::most_costly_player(family)
                    .map(|i| names.players[i].clone());
                let condition = classes::airport_sufficient_condition(&psi);
                section.pivot = condition.pivot.map(|i| names.players[i].clone());
                section.minorant = condition.minorant.as_ref().map(|d| worth_rows(names, d));
                section.balanced = Some(psi.is_balanced());
                section.concave = Some(psi.negate().is_convex());
            }
            section
        }
        ClassArg::Simple => {
            let is_family = classes::is_simple_family(family);
            let mut section = ClassSection {
                class: "simple".into(),
                is_family,
                transform: None,
                most_costly_player: None,
                pivot: None,
                minorant: None,
                balanced: None,
                concave: None,
                transform_is_simple: None,
                veto_player: None,
                veto_matches_balancedness: None,
            };
            if is_family {
                let psi = gws_core::maxmin(family)?.into_game();
                section.transform = Some(worth_rows(names, &psi));
                section.transform_is_simple = Some(psi.is_simple());
                let veto = classes::simple_veto_player(family);
                section.veto_player = veto.map(|i| names.players[i].clone());
                let balanced = psi.is_balanced();
                section.balanced = Some(balanced);
                section.veto_matches_balancedness = Some(veto.is_some() == balanced);
            }
            section
        }
    };
    report.class = Some(section);
    Ok((report, ExitCode::SUCCESS))
}

fn cmd_gen(
    seed: u64,
    n: usize,
    class: GameClass,
    max_strats: usize,
    output: &Path,
) -> Result<(Report, ExitCode)> {
    let family = generator::generate(seed, n, max_strats, class)?;
    let names = InstanceNames::default_for(family.strategy_counts());
    let text = instance::instance_to_string(&NamedInstance {
        names,
        family,
    });
    std::fs::write(output, &text)
        .with_context(|| format!("cannot write {}", output.display()))?;
    let mut report = Report::new(format!(
        "gen --seed {seed} --n {n} --class {class} -o {}",
        output.display()
    ));
    report.generated = Some(GeneratedSection {
        seed,
        players: n,
        max_strats,
        class: class.name().to_string(),
        path: output.display().to_string(),
        digest: format!("fnv1a:{:016x}", fnv1a(text.as_bytes())),
    });
    Ok((report, ExitCode::SUCCESS))
}
