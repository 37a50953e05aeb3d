//! Command-line front end: matroid inspection, staircase/CSM computation,
//! identity verification over files or the builtin corpus, and corpus
//! listing/dumping.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use matroid_csm::json::{
    chow_element_terms, report_entry, weight_to_json, weight_to_tsv, MatroidJson, ReportEntry,
};
use matroid_csm::{builtin, builtin_corpus, ChowContext, Error, Identity, Matroid, Route};

#[derive(Parser)]
#[command(
    name = "matroid-csm",
    version,
    about = "Exact Chow rings, Bergman fans, and CSM cycles of matroids"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print structural data: rank, flats, loops/coloops, characteristic
    /// polynomial, Chow graded ranks.
    Info {
        /// Builtin corpus name or path to a matroid JSON file.
        input: String,
    },
    /// Compute the normalized staircase class and the CSM weights.
    Csm {
        /// Builtin corpus name or path to a matroid JSON file.
        input: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Both)]
        route: RouteArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Tsv)]
        format: FormatArg,
    },
    /// Verify the library's algebraic identities; exit code 1 on failure.
    Verify {
        /// Builtin corpus name or path to a matroid JSON file.
        input: Option<String>,
        /// Verify every builtin corpus entry.
        #[arg(long)]
        corpus: bool,
        /// Identity name or "all".
        #[arg(long, default_value = "all")]
        identity: String,
        /// Element index or "all" (per-element identities only).
        #[arg(long, default_value = "all")]
        element: String,
    },
    /// List the builtin corpus or dump it as JSON files.
    Corpus {
        #[arg(long)]
        list: bool,
        /// Directory to write one JSON file per entry.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Degree,
    Divisor,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

fn main() -> ExitCode {
    reset_sigpipe();
    configure_threads();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e @ Error::RouteMismatch { .. }) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Dying quietly on a closed pipe (e.g. piping into `head`) beats the
/// default panic from `println!`.
fn reset_sigpipe() {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn configure_threads() {
    if let Ok(v) = std::env::var("MATROID_CSM_THREADS") {
        if let Ok(k) = v.trim().parse::<usize>() {
            if k >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global();
            }
        }
    }
}

fn load_matroid(input: &str) -> Result<Matroid, Error> {
    if let Some(entry) = builtin(input) {
        return entry.matroid();
    }
    let text = std::fs::read_to_string(input).map_err(|e| Error::Io(format!("{input}: {e}")))?;
    MatroidJson::parse(&text)?.build()
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Info { input } => {
            let m = load_matroid(&input)?;
            cmd_info(&m);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Csm {
            input,
            route,
            format,
        } => {
            let m = load_matroid(&input)?;
            cmd_csm(&m, route, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            input,
            corpus,
            identity,
            element,
        } => cmd_verify(input, corpus, &identity, &element),
        Cmd::Corpus { list, dump } => cmd_corpus(list, dump),
    }
}

fn cmd_info(m: &Matroid) {
    println!("name: {}", m.name().unwrap_or("(unnamed)"));
    println!("n: {}", m.n());
    println!("rank: {}", m.full_rank());
    let lattice = m.flats_lattice();
    for (r, flats) in lattice.by_rank().iter().enumerate() {
        let labels: Vec<String> = flats.iter().map(|f| format!("{{{}}}", f.label())).collect();
        println!("flats rank {r}: {}", labels.join(" "));
    }
    println!("loops: {{{}}}", m.loops().label());
    println!("coloops: {{{}}}", m.coloops().label());
    println!("simple: {}", m.is_simple());
    println!(
        "characteristic polynomial: {}",
        m.characteristic_polynomial()
    );
    if !m.has_loops() && m.full_rank() > 0 {
        match ChowContext::new(m) {
            Ok(ctx) => {
                let ranks: Vec<String> = ctx.graded_ranks().iter().map(usize::to_string).collect();
                println!("chow graded ranks: ({})", ranks.join(", "));
            }
            Err(e) => println!("chow graded ranks: unavailable ({e})"),
        }
    } else {
        println!("chow graded ranks: none (matroid has a loop or rank zero)");
    }
}

fn cmd_csm(m: &Matroid, route: RouteArg, format: FormatArg) -> Result<(), Error> {
    let weights = match route {
        RouteArg::Degree => matroid_csm::csm_cycle(m, Route::Degree)?,
        RouteArg::Divisor => matroid_csm::csm_cycle(m, Route::Divisor)?,
        RouteArg::Both => matroid_csm::csm_cycle_checked(m)?,
    };
    let staircase_normal = if m.has_loops() || m.full_rank() == 0 {
        None
    } else {
        let ctx = ChowContext::new(m)?;
        Some(ctx.normalize(&matroid_csm::staircase(&ctx)))
    };
    match format {
        FormatArg::Tsv => {
            match &staircase_normal {
                Some(st) => println!("staircase: {st}"),
                None => println!("staircase: 0"),
            }
            for w in weights.iter().rev() {
                println!("# csm weights, dimension {}", w.dim());
                print!("{}", weight_to_tsv(w));
            }
        }
        FormatArg::Json => {
            let payload = serde_json::json!({
                "matroid": m.name(),
                "staircase": staircase_normal.as_ref().map(chow_element_terms),
                "weights": weights.iter().map(weight_to_json).collect::<Vec<_>>(),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
        }
    }
    Ok(())
}

fn parse_identities(identity: &str) -> Result<Vec<Identity>, Error> {
    if identity == "all" {
        Ok(Identity::all().to_vec())
    } else {
        Ok(vec![Identity::parse(identity)?])
    }
}

fn parse_element(element: &str) -> Result<Option<usize>, Error> {
    if element == "all" {
        Ok(None)
    } else {
        element
            .parse::<usize>()
            .map(Some)
            .map_err(|_| Error::Parse(format!("bad element '{element}'")))
    }
}

fn cmd_verify(
    input: Option<String>,
    corpus: bool,
    identity: &str,
    element: &str,
) -> Result<ExitCode, Error> {
    let identities = parse_identities(identity)?;
    let element = parse_element(element)?;
    let matroids: Vec<Matroid> = if corpus {
        builtin_corpus()
            .iter()
            .map(|e| e.matroid())
            .collect::<Result<_, _>>()?
    } else {
        let input = input
            .ok_or_else(|| Error::Parse("verify needs an input matroid or --corpus".into()))?;
        vec![load_matroid(&input)?]
    };
    let mut reports: Vec<ReportEntry> = matroids
        .par_iter()
        .map(|m| {
            let name = m.name().unwrap_or("(unnamed)").to_string();
            matroid_csm::run_verifier(m, &identities, element).map(|rows| {
                rows.into_iter()
                    .map(|(id, el, outcome)| report_entry(&name, id, el, &outcome))
                    .collect::<Vec<_>>()
            })
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    reports.sort_by(|a, b| {
        (&a.matroid, &a.identity, a.element).cmp(&(&b.matroid, &b.identity, b.element))
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&reports).expect("serializable")
    );
    let all_ok = reports.iter().all(|r| r.result != "fail");
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_corpus(list: bool, dump: Option<PathBuf>) -> Result<ExitCode, Error> {
    let entries = builtin_corpus();
    if let Some(dir) = dump {
        std::fs::create_dir_all(&dir).map_err(|e| Error::Io(e.to_string()))?;
        for entry in &entries {
            let path = dir.join(format!("{}.json", entry.name));
            let json = MatroidJson::from_entry(entry).to_pretty();
            std::fs::write(&path, json).map_err(|e| Error::Io(e.to_string()))?;
            println!("wrote {}", path.display());
        }
        return Ok(ExitCode::SUCCESS);
    }
    let _ = list;
    for entry in &entries {
        let m = entry.matroid()?;
        let mut tags = Vec::new();
        if let Some((_, p)) = &entry.expected.graded_ranks {
            tags.push(format!("graded-ranks({})", p.as_str()));
        }
        if let Some((_, p)) = &entry.expected.staircase {
            tags.push(format!("staircase({})", p.as_str()));
        }
        if let Some((_, p)) = &entry.expected.csm {
            tags.push(format!("csm({})", p.as_str()));
        }
        let tags = if tags.is_empty() {
            String::new()
        } else {
            format!("  expected: {}", tags.join(", "))
        };
        println!(
            "{:<12} n={} rank={}{}",
            entry.name,
            m.n(),
            m.full_rank(),
            tags
        );
    }
    Ok(ExitCode::SUCCESS)
}
