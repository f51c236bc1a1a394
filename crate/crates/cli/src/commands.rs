use std::path::Path;
use std::time::Instant;

use connwidth::corpus::CorpusSpec;
use connwidth::verify::SystemSummary;
use connwidth::{
    check_lemma1, duality_check, enumerate_families, is_linear_obstacle, is_single_ideal, linear_width,
    linear_width_bruteforce, theorem1_crosscheck, validate_symmetric_submodular, AxiomReport, ConnectivitySystem,
    FamilyFile, Guards, IhVariant, InstanceFile, Outcome, SetFamily, Subset, Verdict, VerificationReport,
};
use serde::Serialize;

use crate::output::{write_atomic, Lines};
use crate::{Cli, Command, GenArgs, KArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

type CmdResult = Result<u8, String>;

pub fn run(cli: Cli) -> CmdResult {
    let guards = load_guards(&cli)?;
    match cli.command {
        Command::Validate { instance, out } => validate(&guards, &instance, out.out.as_deref()),
        Command::Width { instance, oracle, out } => width(&guards, &instance, oracle, out.out.as_deref()),
        Command::CheckFamily {
            instance,
            family,
            k,
            ie,
            out,
        } => check_family(&guards, &instance, &family, &k, ie, out.out.as_deref()),
        Command::Theorem1 { instance, k, jobs, out } => theorem1(&guards, &instance, &k, jobs, out.out.as_deref()),
        Command::Duality { instance, k, out } => duality(&guards, &instance, &k, out.out.as_deref()),
        Command::Enumerate { instance, k, out } => enumerate(&guards, &instance, k, out.out.as_deref()),
        Command::Gen(args) => gen(&args),
    }
}

/// Defaults, then the config file, then `CONNWIDTH_GUARDS`, then `--budget`.
fn load_guards(cli: &Cli) -> Result<Guards, String> {
    let mut guards = match &cli.config {
        Some(path) => Guards::from_toml_str(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?,
        None => Guards::default(),
    };
    guards.apply_env().map_err(|e| format!("{}: {e}", Guards::ENV_VAR))?;
    for item in &cli.budget {
        guards.apply_overrides(item).map_err(|e| format!("--budget: {e}"))?;
    }
    Ok(guards)
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_system(guards: &Guards, path: &Path, validate: bool) -> Result<ConnectivitySystem, String> {
    let inst = InstanceFile::parse(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    inst.build(guards, validate)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn k_values(sys: &ConnectivitySystem, k: Option<u32>) -> Vec<u32> {
    match k {
        Some(k) => vec![k],
        None => (sys.eval(Subset::EMPTY)..=sys.max_singleton() + 1).collect(),
    }
}

fn outcome_code(outcome: Outcome) -> u8 {
    match outcome {
        Outcome::Confirmed => EXIT_OK,
        Outcome::Mismatch => EXIT_VIOLATION,
        Outcome::PreconditionFailed | Outcome::BudgetExceeded => EXIT_INCONCLUSIVE,
    }
}

/// Mismatch dominates inconclusive, which dominates success.
fn combine(codes: impl IntoIterator<Item = u8>) -> u8 {
    codes.into_iter().fold(EXIT_OK, |acc, c| match (acc, c) {
        (EXIT_VIOLATION, _) | (_, EXIT_VIOLATION) => EXIT_VIOLATION,
        (EXIT_INCONCLUSIVE, _) | (_, EXIT_INCONCLUSIVE) => EXIT_INCONCLUSIVE,
        _ => EXIT_OK,
    })
}

#[derive(Serialize)]
struct ValidateOutput {
    system: SystemSummary,
    holds: bool,
    definition: AxiomReport,
    lemma1: VerificationReport,
}

fn validate(guards: &Guards, path: &Path, out: Option<&Path>) -> CmdResult {
    let sys = load_system(guards, path, false)?;
    let definition = validate_symmetric_submodular(&sys, guards).map_err(|e| e.to_string())?;
    let lemma1 = check_lemma1(&sys, guards);
    let holds = definition.holds && lemma1.outcome == Outcome::Confirmed;
    eprintln!("{}: {definition}", sys.source());
    for r in &lemma1.reports {
        eprintln!("{}: {r}", sys.source());
    }
    let mut lines = Lines::default();
    lines.push(&ValidateOutput {
        system: SystemSummary::of(&sys),
        holds,
        definition,
        lemma1,
    });
    lines.emit(out)?;
    Ok(if holds { EXIT_OK } else { EXIT_VIOLATION })
}

fn width(guards: &Guards, path: &Path, oracle: bool, out: Option<&Path>) -> CmdResult {
    let sys = load_system(guards, path, true)?;
    let start = Instant::now();
    let result = linear_width(&sys, guards).map_err(|e| e.to_string())?;
    eprintln!(
        "{}: linear-width {} ({:?})",
        sys.source(),
        result.width,
        start.elapsed()
    );
    let mut code = EXIT_OK;
    if oracle {
        let brute = linear_width_bruteforce(&sys, guards).map_err(|e| e.to_string())?;
        if brute.width == result.width {
            eprintln!("{}: oracle agrees ({})", sys.source(), brute.width);
        } else {
            eprintln!(
                "{}: oracle DISAGREES: dp {} vs brute force {}",
                sys.source(),
                result.width,
                brute.width
            );
            code = EXIT_VIOLATION;
        }
    }
    let mut lines = Lines::default();
    lines.push(&result);
    lines.emit(out)?;
    Ok(code)
}

#[derive(Serialize)]
struct FamilyVerdicts {
    k: u32,
    variant: IhVariant,
    require_ie: bool,
    single_ideal: Verdict,
    linear_obstacle: Verdict,
}

fn check_family(guards: &Guards, path: &Path, family: &Path, k: &KArgs, ie: bool, out: Option<&Path>) -> CmdResult {
    let sys = load_system(guards, path, true)?;
    let file: FamilyFile = serde_json::from_str(&read(family)?).map_err(|e| format!("{}: {e}", family.display()))?;
    let fam = SetFamily::from_masks(sys.n(), &file.members).map_err(|e| format!("{}: {e}", family.display()))?;
    let variant = IhVariant::from(k.variant);
    let mut lines = Lines::default();
    for k in k_values(&sys, k.k) {
        let single_ideal = is_single_ideal(&sys, &fam, k, variant, ie);
        let linear_obstacle = is_linear_obstacle(&sys, &fam, k);
        eprintln!(
            "k={k}: single ideal{}: {}, linear obstacle: {}",
            if ie { " (+IE)" } else { "" },
            single_ideal.holds,
            linear_obstacle.holds
        );
        for r in single_ideal.failures.iter().chain(&linear_obstacle.failures) {
            eprintln!("  {r}");
        }
        lines.push(&FamilyVerdicts {
            k,
            variant,
            require_ie: ie,
            single_ideal,
            linear_obstacle,
        });
    }
    lines.emit(out)?;
    Ok(EXIT_OK)
}

fn summarize(sys: &ConnectivitySystem, r: &VerificationReport, started: Instant) {
    let k = r.k.map_or(String::from("-"), |k| k.to_string());
    let variant = r.variant.map_or(String::from("-"), |v| v.to_string());
    let detail = match (r.lw, r.exists_ideal) {
        (Some(lw), Some(e)) => format!("lw={lw}, ideal exists: {e}"),
        _ => format!(
            "{} families, {} mismatches",
            r.counted("families_examined"),
            r.counted("mismatches_total")
        ),
    };
    eprintln!(
        "{} k={k} {variant}: {} ({detail}) in {:?}{}",
        sys.source(),
        r.outcome,
        started.elapsed(),
        r.note.as_ref().map_or(String::new(), |n| format!(" [{n}]"))
    );
}

fn theorem1(guards: &Guards, path: &Path, k: &KArgs, jobs: usize, out: Option<&Path>) -> CmdResult {
    let sys = load_system(guards, path, true)?;
    let variant = IhVariant::from(k.variant);
    let mut lines = Lines::default();
    let mut codes = Vec::new();
    for k in k_values(&sys, k.k) {
        let started = Instant::now();
        let r = theorem1_crosscheck(&sys, k, variant, guards, jobs);
        summarize(&sys, &r, started);
        codes.push(outcome_code(r.outcome));
        lines.push(&r);
    }
    lines.emit(out)?;
    Ok(combine(codes))
}

fn duality(guards: &Guards, path: &Path, k: &KArgs, out: Option<&Path>) -> CmdResult {
    let sys = load_system(guards, path, true)?;
    let variant = IhVariant::from(k.variant);
    let mut lines = Lines::default();
    let mut codes = Vec::new();
    for k in k_values(&sys, k.k) {
        let started = Instant::now();
        let r = duality_check(&sys, k, variant, guards);
        summarize(&sys, &r, started);
        codes.push(outcome_code(r.outcome));
        lines.push(&r);
    }
    lines.emit(out)?;
    Ok(combine(codes))
}

fn enumerate(guards: &Guards, path: &Path, k: u32, out: Option<&Path>) -> CmdResult {
    let sys = load_system(guards, path, true)?;
    let families = enumerate_families(&sys, k, guards).map_err(|e| e.to_string())?;
    eprintln!(
        "{}: {} families of {} k-efficient sets",
        sys.source(),
        families.total(),
        families.efficient().len()
    );
    let mut lines = Lines::default();
    for fam in families {
        lines.push(&fam.to_file());
    }
    lines.emit(out)?;
    Ok(EXIT_OK)
}

fn gen(args: &GenArgs) -> CmdResult {
    if !args.out.is_dir() {
        return Err(format!("{}: not a directory", args.out.display()));
    }
    if !(0.0..=1.0).contains(&args.p) {
        return Err(format!("--p must lie in [0, 1], got {}", args.p));
    }
    let mut files = Vec::new();
    for i in 0..args.count {
        let spec = CorpusSpec {
            generator: args.generator.into(),
            n: args.n,
            p: args.p,
            seed: args.seed.wrapping_add(i),
            kind: args.kind.into(),
        };
        let inst = spec.instance().map_err(|e| e.to_string())?;
        inst.build(&Guards::default(), false)
            .map_err(|e| format!("{}: {e}", spec.file_name()))?;
        files.push((args.out.join(spec.file_name()), inst.to_json()));
    }
    for (path, json) in files {
        write_atomic(&path, json.as_bytes())?;
        eprintln!("wrote {}", path.display());
    }
    Ok(EXIT_OK)
}
