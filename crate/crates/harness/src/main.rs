use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cdlat_core::classify::classify_full;
use cdlat_core::constructors::builtin_corpus;
use cdlat_core::presentation::{parse_presentation_file, DEFAULT_MAX_COSETS};
use cdlat_core::{cd_result, enumerate, enumerate_subgroups, parse_presentation, Group, Presentation};
use cdlat_harness::family::{build_family, split_tokens, FAMILY_HELP};
use cdlat_harness::report::{self, Format};
use cdlat_harness::verify::parse_ids;
use cdlat_harness::{load_catalog, search_class_c, verify, CatalogEntry, HarnessError, Result, VerifyOptions};
use clap::{Args, Parser, Subcommand};

/// Chermak-Delgado measures, lattices and class C membership for finite groups.
#[derive(Parser)]
#[command(name = "cdlat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group from a family and write it as a catalog entry.
    Construct {
        /// Family name followed by its parameters.
        #[arg(required = true, num_args = 1.., help = FAMILY_HELP)]
        family: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run coset enumeration on a presentation file; writes catalog entries.
    Present {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the subgroup lattice.
    Subgroups {
        group: String,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Chermak-Delgado measure, image and lattice.
    Cd {
        group: String,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Structural flags and class C membership.
    Classify {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a statement (or `all`, or a comma list) over a corpus.
    Verify {
        id: String,
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Report elapsed_ms as 0 so the JSON is reproducible.
        #[arg(long)]
        no_timing: bool,
        /// One summary line per statement instead of JSON.
        #[arg(long)]
        text: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List class C groups grouped by (p, n).
    Search {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(short)]
        p: Option<u64>,
        #[arg(short)]
        n: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Export the builtin corpus as a catalog.
    Corpus {
        #[arg(long, default_value_t = 128)]
        max_order: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CorpusArgs {
    /// JSONL catalog(s); the builtin corpus is used when none is given.
    #[arg(long)]
    catalog: Vec<PathBuf>,
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long)]
    jobs: Option<usize>,
}

const BUILTIN_MAX_ORDER: usize = 128;

impl CorpusArgs {
    fn load(&self) -> Result<Vec<Group>> {
        if self.catalog.is_empty() {
            return Ok(builtin_corpus(self.max_order.unwrap_or(BUILTIN_MAX_ORDER))?);
        }
        let mut out = Vec::new();
        for path in &self.catalog {
            out.extend(load_catalog(path)?);
        }
        if let Some(m) = self.max_order {
            out.retain(|g| g.order() <= m);
        }
        Ok(out)
    }

    fn describe(&self) -> String {
        if self.catalog.is_empty() {
            format!("builtin corpus up to order {}", self.max_order.unwrap_or(BUILTIN_MAX_ORDER))
        } else {
            let names: Vec<String> = self.catalog.iter().map(|p| p.display().to_string()).collect();
            format!("catalog {}", names.join(", "))
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| HarnessError::Io { path: path.to_path_buf(), source: e })
}

/// Whole-file presentation first; otherwise `# name` blocks.
fn read_presentations(path: &Path) -> Result<Vec<(String, Presentation)>> {
    let text = read(path)?;
    let stem = path.file_stem().map_or("G".into(), |s| s.to_string_lossy().into_owned());
    match parse_presentation(&text) {
        Ok(p) => Ok(vec![(stem, p)]),
        Err(single) => match parse_presentation_file(&text) {
            Ok(blocks) if !blocks.is_empty() => Ok(blocks),
            _ => Err(single.into()),
        },
    }
}

/// A group argument is a catalog file (`path` or `path@name`), a `.pres`
/// file, or a family such as `dihedral:8`.
fn resolve_group(arg: &str) -> Result<Group> {
    let (path, pick) = match arg.rsplit_once('@') {
        Some((p, name)) if Path::new(p).is_file() => (p, Some(name)),
        _ => (arg, None),
    };
    let path = Path::new(path);
    if !path.is_file() {
        return build_family(&split_tokens(arg));
    }
    if path.extension().is_some_and(|e| e == "pres") {
        let blocks = read_presentations(path)?;
        let (name, p) = pick_one(blocks, pick, |b| &b.0)?;
        return Ok(enumerate(&p, DEFAULT_MAX_COSETS)?.with_label(name));
    }
    let groups = load_catalog(path)?;
    pick_one(groups, pick, |g| g.label())
}

fn pick_one<T>(items: Vec<T>, pick: Option<&str>, name: impl Fn(&T) -> &str) -> Result<T> {
    let names: Vec<String> = items.iter().map(|t| name(t).to_string()).collect();
    let mut items = items;
    match pick {
        Some(want) => match names.iter().position(|n| n == want) {
            Some(i) => Ok(items.swap_remove(i)),
            None => Err(HarnessError::Usage(format!("no entry `{want}`; entries: {}", names.join(", ")))),
        },
        None if items.len() == 1 => Ok(items.pop().unwrap()),
        None => Err(HarnessError::Usage(format!(
            "{} entries; select one with FILE@NAME from: {}",
            items.len(),
            names.join(", ")
        ))),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Construct { family, output } => {
            let tokens: Vec<String> = family.iter().flat_map(|f| split_tokens(f)).collect();
            let g = build_family(&tokens)?;
            let name = g.label().to_string();
            let line = CatalogEntry::from_group(&g, &name).to_json_line() + "\n";
            report::emit(&line, output.as_deref())?;
        }
        Command::Present { file, output } => {
            let mut text = String::new();
            for (name, p) in read_presentations(&file)? {
                let g = enumerate(&p, DEFAULT_MAX_COSETS)?;
                eprintln!("{name}: order {}", g.order());
                text.push_str(&CatalogEntry::from_group(&g, &name).to_json_line());
                text.push('\n');
            }
            report::emit(&text, output.as_deref())?;
        }
        Command::Subgroups { group, dot, json } => {
            let g = resolve_group(&group)?;
            let lat = enumerate_subgroups(&g)?;
            let fmt = if dot { Format::Dot } else if json { Format::Json } else { Format::Text };
            report::emit(&report::render_subgroups(&g, &lat, fmt)?, None)?;
        }
        Command::Cd { group, json, dot } => {
            let g = resolve_group(&group)?;
            let lat = enumerate_subgroups(&g)?;
            let cd = cd_result(&g, &lat)?;
            let fmt = if dot { Format::Dot } else if json { Format::Json } else { Format::Text };
            report::emit(&report::render_cd(&g, &lat, &cd, fmt)?, None)?;
        }
        Command::Classify { group, json } => {
            let g = resolve_group(&group)?;
            let r = classify_full(&g)?;
            let fmt = if json { Format::Json } else { Format::Text };
            report::emit(&report::render_classification(&r, fmt)?, None)?;
        }
        Command::Verify { id, corpus, no_timing, text, output } => {
            let ids = parse_ids(&id)?;
            let groups = corpus.load()?;
            eprintln!("verifying {} over {} groups ({})", id, groups.len(), corpus.describe());
            let opts = VerifyOptions { jobs: corpus.jobs, timing: !no_timing };
            let reports = verify(&ids, &groups, opts)?;
            for r in reports.iter().filter(|r| r.checked == 0) {
                eprintln!("warning: {} checked no groups (vacuous pass)", r.theorem);
            }
            let fmt = if text { Format::Text } else { Format::Json };
            report::emit(&report::render_verification(&reports, fmt)?, output.as_deref())?;
            if reports.iter().any(|r| !r.pass) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Search { corpus, p, n, json } => {
            let groups = corpus.load()?;
            let r = search_class_c(&groups, p, n, corpus.jobs)?;
            let fmt = if json { Format::Json } else { Format::Text };
            report::emit(&report::render_search(&r, fmt)?, None)?;
        }
        Command::Corpus { max_order, output } => {
            let mut text = String::new();
            for g in builtin_corpus(max_order)? {
                text.push_str(&CatalogEntry::from_group(&g, g.label()).to_json_line());
                text.push('\n');
            }
            report::emit(&text, output.as_deref())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
