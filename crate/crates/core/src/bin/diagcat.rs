use clap::{Parser, Subcommand, ValueEnum};
use diagcat::category::Morphism;
use diagcat::diagram::{self, Partition};
use diagcat::free_cat::{evaluate_term, parse_term_in, Layered, LinearSemantics, Word};
use diagcat::gen::Signature;
use diagcat::presentations::{
    normalize_one_sided, normal::DEFAULT_WORD_BUDGET, Level, Presentation, Reading, Scaffold, Target,
};
use diagcat::transform::{self, PartialMap};
use diagcat::verify::axioms::AxiomScale;
use diagcat::verify::{self, JoinBudget, Report, Status};
use diagcat::with_interpretation;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "diagcat", version, about = "Diagram categories and their presentations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Lines,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Soundness,
    Shadow,
    Surjectivity,
    Joinability,
    Counts,
    Axioms,
    Interchange,
    Scaffold,
    Normalize,
    Oi,
    Hat,
    All,
}

#[derive(clap::Args)]
struct Input {
    /// Term or element text; read from --file when absent.
    text: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a term and print it with its type and layered form.
    Parse {
        #[arg(long)]
        cat: Option<Target>,
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate a term in a category.
    Eval {
        #[arg(long)]
        cat: Target,
        #[command(flatten)]
        input: Input,
    },
    /// Compose two elements, first then second.
    Compose {
        #[arg(long)]
        cat: Target,
        first: String,
        second: String,
    },
    /// Place two elements side by side.
    Tensor {
        #[arg(long)]
        cat: Target,
        left: String,
        right: String,
    },
    /// One-sided normal form of a word over a scaffold alphabet.
    Normalize {
        /// Scaffold: P, B, TL, PV, IB, V, PT, I, T, PO or O.
        #[arg(long)]
        cat: String,
        #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
        budget: usize,
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Size of a hom-set.
    Count {
        #[arg(long)]
        cat: Target,
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'n')]
        n: usize,
    },
    /// List a hom-set.
    Enumerate {
        #[arg(long)]
        cat: Target,
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Run bounded checks and print one report line each.
    Verify(VerifyArgs),
    /// Print every relation instance of a presentation.
    DumpCatalog {
        #[arg(long)]
        presentation: String,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
    },
}

#[derive(clap::Args)]
struct VerifyArgs {
    suite: Suite,
    #[arg(long)]
    presentation: Option<String>,
    /// Category, or scaffold for the scaffold and normalize suites.
    #[arg(long)]
    cat: Option<String>,
    #[arg(short = 'm')]
    m: Option<usize>,
    #[arg(short = 'n')]
    n: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Size bound: layers for surjectivity, compared terms for joinability.
    #[arg(long)]
    size: Option<usize>,
    #[arg(long, default_value_t = 12)]
    depth: usize,
    #[arg(long, default_value_t = 2)]
    slack: usize,
    #[arg(long)]
    width: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    count: usize,
    #[arg(long, default_value_t = 6)]
    max_len: usize,
    #[arg(long, default_value_t = 3)]
    max_object: usize,
    #[arg(long, default_value_t = 9)]
    max_total: usize,
    /// Seed of the randomized interchange smoke test.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, value_enum, default_value_t = Format::Lines)]
    format: Format,
}

enum Failure {
    Usage(String),
    Check,
}

impl From<String> for Failure {
    fn from(s: String) -> Failure {
        Failure::Usage(s)
    }
}

fn text_of(input: &Input) -> Result<String, String> {
    match (&input.text, &input.file) {
        (Some(t), None) => Ok(t.clone()),
        (None, Some(p)) => std::fs::read_to_string(p)
            .map(|s| s.trim().to_string())
            .map_err(|e| format!("{}: {e}", p.display())),
        _ => Err("give the input either inline or with --file".into()),
    }
}

fn parse_in(cat: Option<Target>, text: &str) -> Result<diagcat::free_cat::Term, String> {
    let sig = cat.map(Target::signature).unwrap_or(Signature::UNIT);
    parse_term_in(text, sig).map_err(|e| e.to_string())
}

fn eval(cat: Target, text: &str) -> Result<String, String> {
    let t = parse_in(Some(cat), text)?;
    match cat.reading() {
        Reading::Diagram(kind) => {
            let v = evaluate_term(&t, &LinearSemantics { kind }).map_err(|e| e.to_string())?;
            match v.as_monomial() {
                Some((k, a)) => Ok(format!("{a}\nfloating: {k}")),
                None => Ok(v.to_string()),
            }
        }
        Reading::Map(..) => with_interpretation!(cat, false, |i| evaluate_term(&t, &i)
            .map(|v| v.to_string())
            .map_err(|e| e.to_string())),
    }
}

fn binary(cat: Target, a: &str, b: &str, compose: bool) -> Result<String, String> {
    match cat.reading() {
        Reading::Diagram(kind) => {
            let (x, y) = (Partition::parse(a).map_err(|e| e.to_string())?, Partition::parse(b).map_err(|e| e.to_string())?);
            for z in [&x, &y] {
                if !kind.contains(z) {
                    return Err(format!("{z} is not in {cat}"));
                }
            }
            if compose {
                let (r, k) = x.compose(&y).map_err(|e| e.to_string())?;
                Ok(format!("{r}\nfloating: {k}"))
            } else {
                Ok(x.tensor(&y).to_string())
            }
        }
        Reading::Map(kind, _) => {
            let (x, y) = (PartialMap::parse(a).map_err(|e| e.to_string())?, PartialMap::parse(b).map_err(|e| e.to_string())?);
            for z in [&x, &y] {
                if !kind.contains(z) {
                    return Err(format!("{z} is not in {cat}"));
                }
            }
            if compose {
                x.then(&y).map(|r| r.to_string()).map_err(|e| e.to_string())
            } else {
                Ok(x.tensor(&y).to_string())
            }
        }
    }
}

fn homset(cat: Target, m: usize, n: usize) -> Result<Vec<String>, String> {
    match cat.reading() {
        Reading::Diagram(k) => diagram::enumerate_homset(k, m, n)
            .map(|v| v.iter().map(|a| a.to_string()).collect())
            .map_err(|e| e.to_string()),
        Reading::Map(k, _) => transform::enumerate_homset(k, m, n)
            .map(|v| v.iter().map(|a| a.to_string()).collect())
            .map_err(|e| e.to_string()),
    }
}

fn normalize(cat: &str, text: &str, budget: usize, trace: bool) -> Result<String, String> {
    let sc = Scaffold::by_id(cat).ok_or_else(|| format!("unknown scaffold `{cat}`"))?;
    let t = parse_term_in(text, sc.sig).map_err(|e| e.to_string())?;
    let w = Word::from_term(&t, sc.sig).map_err(|e| e.to_string())?;
    let nf = with_interpretation!(sc.target, false, |i| normalize_one_sided(&w, &sc, &i, budget))
        .map_err(|e| e.to_string())?;
    let mut out = format!("{}\nside: {:?}", nf.word(), nf.side);
    if trace {
        for step in &nf.trace {
            out.push_str(&format!("\n  {step}"));
        }
    }
    Ok(out)
}

fn presentation(a: &VerifyArgs) -> Result<Presentation, String> {
    let id = a.presentation.as_deref().ok_or("--presentation is required for this suite")?;
    Presentation::by_id(id).map_err(|e| e.to_string())
}

fn target(a: &VerifyArgs) -> Result<Target, String> {
    a.cat.as_deref().ok_or("--cat is required for this suite")?.parse()
}

fn scaffold(a: &VerifyArgs) -> Result<Scaffold, String> {
    let id = a.cat.as_deref().ok_or("--cat is required for this suite")?;
    Scaffold::by_id(id).ok_or_else(|| format!("unknown scaffold `{id}`"))
}

/// The hom-sets a sweep covers: the given one, or all up to `n_max`.
fn pairs(a: &VerifyArgs, default_max: usize) -> Vec<(usize, usize)> {
    match (a.m, a.n) {
        (Some(m), Some(n)) => vec![(m, n)],
        _ => {
            let k = a.n_max.unwrap_or(default_max);
            (0..=k).flat_map(|m| (0..=k).map(move |n| (m, n))).collect()
        }
    }
}

fn joinability(p: &Presentation, m: usize, n: usize, a: &VerifyArgs) -> Report {
    let b = JoinBudget {
        word_size: a.size.unwrap_or(6),
        depth: a.depth,
        slack: a.slack,
        width: a.width,
    };
    if p.level == Level::Tensor {
        verify::check_joinability(p, m, n, b)
    } else {
        verify::check_word_joinability(p, m, n, b)
    }
}

fn default_suite() -> Vec<Report> {
    let mut out = Vec::new();
    let shadow = |p: &Presentation| matches!(p.target, Target::ShadowPV | Target::ShadowIB | Target::ShadowV);
    for p in Presentation::all() {
        if shadow(&p) {
            out.push(verify::check_shadow(&p, 5));
        } else {
            out.push(verify::check_soundness(&p, if p.linear { 5 } else { 6 }));
        }
    }
    for p in Presentation::finite_tensor().into_iter().filter(|p| !shadow(p)) {
        let k = if matches!(p.target, Target::TL | Target::OI) { 4 } else { 3 };
        for m in 0..=k {
            for n in 0..=k {
                out.push(verify::check_surjectivity(&p, m, n, 16, None));
            }
        }
        for m in 0..=2 {
            for n in 0..=2 {
                out.push(verify::check_joinability(&p, m, n, JoinBudget::new(6, 12)));
            }
        }
    }
    for t in Target::ALL.into_iter().take(9) {
        for m in 0..=4 {
            for n in 0..=4 {
                out.push(verify::check_counts(t, m, n));
            }
        }
        out.push(verify::check_axioms(t, AxiomScale::DEFAULT));
    }
    for sc in Scaffold::all() {
        out.push(verify::check_scaffold(&sc, 5));
        out.push(verify::check_normalize(&sc, 1000, 6));
    }
    out.push(verify::check_oi_normal_form(5));
    out
}

fn run_verify(a: &VerifyArgs) -> Result<Vec<Report>, String> {
    Ok(match a.suite {
        Suite::Soundness => vec![verify::check_soundness(&presentation(a)?, a.n_max.unwrap_or(5))],
        Suite::Shadow => vec![verify::check_shadow(&presentation(a)?, a.n_max.unwrap_or(5))],
        Suite::Surjectivity => {
            let p = presentation(a)?;
            let size = a.size.unwrap_or(16);
            pairs(a, 3)
                .into_iter()
                .map(|(m, n)| verify::check_surjectivity(&p, m, n, size, a.width))
                .collect()
        }
        Suite::Joinability => {
            let p = presentation(a)?;
            pairs(a, 2).into_iter().map(|(m, n)| joinability(&p, m, n, a)).collect()
        }
        Suite::Counts => {
            let t = target(a)?;
            pairs(a, 4).into_iter().map(|(m, n)| verify::check_counts(t, m, n)).collect()
        }
        Suite::Axioms => {
            let scale = AxiomScale {
                max_object: a.max_object,
                max_total: a.max_total,
            };
            vec![verify::check_axioms(target(a)?, scale)]
        }
        Suite::Interchange => {
            let kind = match target(a)?.reading() {
                Reading::Diagram(k) => k,
                Reading::Map(..) => return Err("interchange needs a diagram category".into()),
            };
            vec![verify::check_linear_interchange(kind, a.seed, a.trials)]
        }
        Suite::Scaffold => vec![verify::check_scaffold(&scaffold(a)?, a.n_max.unwrap_or(5))],
        Suite::Normalize => vec![verify::check_normalize(&scaffold(a)?, a.count, a.max_len)],
        Suite::Oi => vec![verify::check_oi_normal_form(a.n_max.unwrap_or(5))],
        Suite::Hat => vec![verify::check_hat(&presentation(a)?, a.max_len, a.max_object)],
        Suite::All => default_suite(),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Parse { cat, input } => {
            let t = parse_in(cat, &text_of(&input)?)?;
            println!("{t}");
            println!("type: {} -> {}", t.dom(), t.cod());
            println!("layered: {}", Layered::from_term(&t));
        }
        Cmd::Eval { cat, input } => println!("{}", eval(cat, &text_of(&input)?)?),
        Cmd::Compose { cat, first, second } => println!("{}", binary(cat, &first, &second, true)?),
        Cmd::Tensor { cat, left, right } => println!("{}", binary(cat, &left, &right, false)?),
        Cmd::Normalize {
            cat,
            budget,
            trace,
            input,
        } => println!("{}", normalize(&cat, &text_of(&input)?, budget, trace)?),
        Cmd::Count { cat, m, n } => println!("{}", homset(cat, m, n)?.len()),
        Cmd::Enumerate { cat, m, n } => {
            for a in homset(cat, m, n)? {
                println!("{a}");
            }
        }
        Cmd::DumpCatalog { presentation, n_max } => {
            let p = Presentation::by_id(&presentation).map_err(|e| e.to_string())?;
            print!("{}", p.dump(n_max).map_err(|e| e.to_string())?);
        }
        Cmd::Verify(a) => {
            let mut reports = run_verify(&a)?;
            reports.sort_by(|x, y| (&x.check, &x.params).cmp(&(&y.check, &y.params)));
            for r in &reports {
                match a.format {
                    Format::Lines => println!("{}", r.line()),
                    Format::Plain => println!("{}", r.plain()),
                }
            }
            if verify::overall(&reports) == Status::Fail {
                return Err(Failure::Check);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
