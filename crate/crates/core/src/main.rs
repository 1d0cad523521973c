use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use essencemap::corpus::{check_relations, parse_annotations, parse_concepts, parse_lexicon};
use essencemap::render::{render_pair_detail, render_parse_listing, render_report, OutputFormat};
use essencemap::{
    map_contexts, AnnotationTable, ConceptRef, Error, Lexicon, MappingConfig, ScoreMode, Scorer,
    SemanticContext, Threshold,
};

#[derive(Parser)]
#[command(
    name = "essencemap",
    version,
    about = "Map practice concepts onto Essence concepts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map every practice concept against every framework concept.
    Map(MapArgs),
    /// Validate a concept file and summarise it.
    Parse {
        path: PathBuf,
        /// Print the subject / predicate / object split of each attribute.
        #[arg(long)]
        show_spo: bool,
        #[arg(long)]
        lexicon: Option<PathBuf>,
    },
    /// Show the full scoring detail for one concept pair.
    Score {
        /// Concept reference, e.g. Scrum/ProductBacklog.
        #[arg(long)]
        left: String,
        /// Concept reference, e.g. EF/Requirements.
        #[arg(long)]
        right: String,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Print the version.
    Version,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long)]
    practice: PathBuf,
    #[arg(long)]
    framework: PathBuf,
    #[arg(long)]
    lexicon: Option<PathBuf>,
    #[arg(long)]
    annotations: Option<PathBuf>,
    #[arg(long, default_value = "hybrid")]
    mode: ScoreMode,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=3))]
    threshold: u32,
}

#[derive(Args)]
struct MapArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    #[arg(long, default_value = "table")]
    format: OutputFormat,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Parse(String),
    Reference(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Reference(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Reference(m) => m,
        }
    }

    fn from_error(err: Error, origin: Option<&Path>) -> Self {
        let message = match origin {
            Some(path) => format!("{}: {err}", path.display()),
            None => err.to_string(),
        };
        if err.is_reference() {
            Failure::Reference(message)
        } else {
            Failure::Parse(message)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, Error>) -> Result<T, Failure> {
    let text = read(path)?;
    parse(&text).map_err(|e| Failure::from_error(e, Some(path)))
}

struct Loaded {
    practice: SemanticContext,
    framework: SemanticContext,
    lexicon: Lexicon,
    annotations: Option<AnnotationTable>,
    mode: ScoreMode,
    threshold: Threshold,
}

impl Loaded {
    fn config(&self) -> MappingConfig<'_> {
        MappingConfig {
            scorer: Scorer::new(&self.lexicon, self.annotations.as_ref(), self.mode),
            threshold: self.threshold,
        }
    }
}

fn load_lexicon(path: Option<&Path>) -> Result<Lexicon, Failure> {
    match path {
        Some(p) => load(p, parse_lexicon),
        None => Ok(Lexicon::new()),
    }
}

fn load_corpus(args: &CorpusArgs) -> Result<Loaded, Failure> {
    if args.mode == ScoreMode::Annotated && args.annotations.is_none() {
        return Err(Failure::Usage(
            "--mode annotated requires --annotations <path>".into(),
        ));
    }
    let threshold = Threshold::new(args.threshold).map_err(|e| Failure::Usage(e.to_string()))?;
    let practice = load(&args.practice, parse_concepts)?;
    let framework = load(&args.framework, parse_concepts)?;
    check_relations(&[&practice, &framework]).map_err(|e| Failure::from_error(e, None))?;
    let lexicon = load_lexicon(args.lexicon.as_deref())?;
    let annotations = match &args.annotations {
        Some(p) => Some(load(p, |t| parse_annotations(t, &[&practice, &framework]))?),
        None => None,
    };
    Ok(Loaded {
        practice,
        framework,
        lexicon,
        annotations,
        mode: args.mode,
        threshold,
    })
}

fn emit_diagnostics(notes: impl IntoIterator<Item = String>) {
    let mut seen = std::collections::BTreeSet::new();
    for note in notes {
        if seen.insert(note.clone()) {
            eprintln!("note: {note}");
        }
    }
}

fn cmd_map(args: &MapArgs) -> Result<(), Failure> {
    let loaded = load_corpus(&args.corpus)?;
    let report = map_contexts(&loaded.practice, &loaded.framework, &loaded.config())
        .map_err(|e| Failure::from_error(e, None))?;
    emit_diagnostics(report.results.iter().flat_map(|r| r.diagnostics.clone()));
    let rendered = render_report(&report, args.format);
    match &args.out {
        Some(path) => fs::write(path, rendered)
            .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn cmd_parse(path: &Path, show_spo: bool, lexicon: Option<&Path>) -> Result<(), Failure> {
    let ctx = load(path, parse_concepts)?;
    let lexicon = load_lexicon(lexicon)?;
    print!(
        "{}",
        render_parse_listing(&ctx, show_spo.then_some(&lexicon))
    );
    Ok(())
}

fn cmd_score(left: &str, right: &str, corpus: &CorpusArgs) -> Result<(), Failure> {
    let loaded = load_corpus(corpus)?;
    let contexts = [&loaded.practice, &loaded.framework];
    let resolve = |raw: &str| {
        let reference: ConceptRef = raw
            .parse()
            .map_err(|e: Error| Failure::Reference(e.to_string()))?;
        contexts
            .iter()
            .find(|c| c.id() == reference.context)
            .and_then(|c| c.scoped(&reference.concept))
            .ok_or_else(|| Failure::Reference(format!("unknown reference {reference}")))
    };
    let (l, r) = (resolve(left)?, resolve(right)?);
    let detail =
        render_pair_detail(&l, &r, &loaded.config()).map_err(|e| Failure::from_error(e, None))?;
    print!("{detail}");
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };

    let outcome = match &cli.command {
        Command::Map(args) => cmd_map(args),
        Command::Parse {
            path,
            show_spo,
            lexicon,
        } => cmd_parse(path, *show_spo, lexicon.as_deref()),
        Command::Score {
            left,
            right,
            corpus,
        } => cmd_score(left, right, corpus),
        Command::Version => {
            println!("essencemap {}", env!("CARGO_PKG_VERSION"));
            Ok(())
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
