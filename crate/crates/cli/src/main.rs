use clap::{Parser, Subcommand};
use tangent_core::polycore::{GroundField, MonomialOrder};
use tf::session::RunOptions;

#[derive(Parser)]
#[command(
    name = "tf",
    about = "Tangent and Rees algebras of differentials: batteries, audits, and session evaluation over exact fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Ground field characteristic: 0 for the rationals, a prime otherwise.
    #[arg(long, global = true)]
    char: Option<u32>,

    /// Monomial order: degrevlex, lex, block-<n>, or wdegrevlex.
    #[arg(long, global = true, default_value = "degrevlex")]
    order: String,

    /// Cap on term degrees; exceeding it makes an operation not-checkable.
    #[arg(long, global = true, default_value_t = 64)]
    max_degree: u32,

    /// Per-operation time budget in seconds.
    #[arg(long, global = true, default_value_t = 600)]
    timeout: u64,

    /// Opt-in stretch budget in seconds for the expensive duality checks
    /// (for example the Cohen-Macaulay probe of a tangent presentation).
    #[arg(long, global = true)]
    stretch: Option<u64>,

    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Include wall-clock timings in reports (breaks byte-identical
    /// reproducibility, off by default).
    #[arg(long, global = true)]
    timing: bool,

    /// Disable the on-disk basis cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Cache directory (default `.tf-cache`).
    #[arg(long, global = true)]
    cache_dir: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the canonical battery on a named example, or `all` for the corpus.
    Run { example: String },
    /// Audit a named criterion against a session file or example.
    Audit { theorem: String, target: String },
    /// Execute the `check` statements of a session file.
    Eval { target: String },
    /// List known examples and audit tags.
    List,
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    match s {
        "degrevlex" => Ok(MonomialOrder::DegRevLex),
        "lex" => Ok(MonomialOrder::Lex),
        "wdegrevlex" => Ok(MonomialOrder::WeightedDegRevLex),
        other => {
            if let Some(b) = other.strip_prefix("block-") {
                b.parse()
                    .map(MonomialOrder::Block)
                    .map_err(|_| format!("bad block size in `{other}`"))
            } else {
                Err(format!("unknown order `{other}`"))
            }
        }
    }
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(real_main(cli));
}

fn real_main(cli: Cli) -> i32 {
    let order = match parse_order(&cli.order) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };

    // precedence: --char flag, then a `char` statement in the file, then
    // the default working prime
    let declared = match &cli.command {
        Command::Audit { target, .. } | Command::Eval { target } => tf::load_source(target)
            .ok()
            .and_then(|src| tf::source_characteristic(&src).ok().flatten()),
        _ => None,
    };
    let characteristic = cli
        .char
        .or(declared)
        .unwrap_or(tangent_core::polycore::DEFAULT_PRIME);
    let ground = match GroundField::from_characteristic(characteristic) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };

    let opts = RunOptions {
        characteristic,
        order,
        max_degree: cli.max_degree,
        timeout_secs: cli.timeout,
        use_cache: !cli.no_cache,
        cache_dir: cli.cache_dir.clone(),
        with_timing: cli.timing,
        stretch_secs: cli.stretch,
    };

    let outcome = match &cli.command {
        Command::Run { example } => tf::run_examples(example, ground, &opts),
        Command::Audit { theorem, target } => tf::run_audit_command(theorem, target, ground, &opts),
        Command::Eval { target } => tf::run_eval_command(target, ground, &opts),
        Command::List => {
            println!("examples:");
            for n in tf::corpus::corpus_names() {
                println!("  {n}");
            }
            println!("extended examples:");
            for n in tf::corpus::extended_names() {
                println!("  {n}");
            }
            println!("audit tags:");
            for t in tf::audit::known_tags() {
                println!("  {t}");
            }
            println!("(fermat-d-n and catalecticant-r are parametric)");
            return 0;
        }
    };

    match outcome {
        Ok(out) => {
            println!("{}", tf::render(&out.reports, cli.json));
            out.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
