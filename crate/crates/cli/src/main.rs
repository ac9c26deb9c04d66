use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use attract::{
    approx, attractor_from_collage, attractor_from_lz77, attractor_from_macro,
    attractor_from_rlbwt, build_index_with, build_tc, collage_from_attractor, families,
    known_attractor, lz77_parse, min_attractor_brute, naive_validate, rlbwt_build,
    validate_k_attractor, Alphabet, Attractor, AttractorIndex, CollageSystem, IndexParams,
    MacroScheme, SetCoverInstance, Text, Validation,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use serde_json::json;

#[derive(Parser)]
#[command(name = "attract", version, about = "String attractor toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct TextArg {
    /// Input text (raw bytes unless --tokens)
    #[arg(long)]
    text: PathBuf,
    /// Read the text as one decimal symbol per line
    #[arg(long)]
    tokens: bool,
}

#[derive(Args)]
struct OutArg {
    /// Output file (standard output if absent)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy)]
enum KArg {
    Full,
    Value(usize),
}

impl std::str::FromStr for KArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "full" => Ok(KArg::Full),
            _ => s
                .parse()
                .map(KArg::Value)
                .map_err(|_| format!("expected a positive integer or `full`, got {s:?}")),
        }
    }
}

impl KArg {
    fn resolve(self, n: usize) -> usize {
        match self {
            KArg::Full => n,
            KArg::Value(k) => k,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Greedy LZ77 parse
    Parse {
        #[arg(value_enum)]
        kind: ParseKind,
        #[command(flatten)]
        text: TextArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run-length BWT of the sentinel-terminated text
    Bwt {
        #[arg(value_enum)]
        kind: BwtKind,
        #[command(flatten)]
        text: TextArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Attractor induced by a compressed representation
    Induce {
        #[command(subcommand)]
        source: InduceSource,
    },
    /// Check that a position set is a k-attractor
    Validate {
        #[command(flatten)]
        text: TextArg,
        #[arg(long)]
        attractor: PathBuf,
        /// Substring length bound, or `full` for k = n
        #[arg(long, default_value = "full")]
        k: KArg,
        /// Use the quadratic reference validator
        #[arg(long)]
        naive: bool,
    },
    /// Approximate or bound the smallest k-attractor
    Approx {
        #[command(subcommand)]
        method: ApproxMethod,
    },
    /// Exhaustive smallest k-attractor (n <= 20)
    MinBrute {
        #[command(flatten)]
        text: TextArg,
        #[arg(long, default_value = "full")]
        k: KArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Compressed representations built from an attractor
    Reduce {
        #[arg(value_enum)]
        target: ReduceTarget,
        #[command(flatten)]
        text: TextArg,
        #[arg(long)]
        attractor: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Attractor-based random-access index
    Index {
        #[command(subcommand)]
        action: IndexAction,
    },
    /// Hardness gadget strings
    Gadget {
        #[command(subcommand)]
        action: GadgetAction,
    },
    /// JSON report of every computable measure of a text
    Stats {
        #[arg(long, conflicts_with = "random")]
        text: Option<PathBuf>,
        #[arg(long)]
        tokens: bool,
        /// Generate a uniform random text instead of reading one
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        sigma: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "full")]
        k: KArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ParseKind {
    Lz77,
}

#[derive(Clone, Copy, ValueEnum)]
enum BwtKind {
    Runs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceTarget {
    Parse,
    Collage,
}

#[derive(Subcommand)]
enum InduceSource {
    /// Last position of every LZ77 phrase
    Lz77 {
        #[command(flatten)]
        text: TextArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Positions of BWT run heads
    Rlbwt {
        #[command(flatten)]
        text: TextArg,
        /// Keep the attractor of the sentinel-terminated text
        #[arg(long)]
        with_sentinel: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Copy endpoints and literals of a macro scheme
    Macro {
        #[arg(long)]
        scheme: PathBuf,
        /// Text length, if larger than the last destination
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        out: OutArg,
    },
    /// One position per terminal, pair and power rule
    Collage {
        #[arg(long)]
        collage: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Subcommand)]
enum ApproxMethod {
    /// Greedy set cover, on a text or on a set-cover instance
    Greedy {
        #[arg(long, required_unless_present = "instance")]
        text: Option<PathBuf>,
        #[arg(long)]
        tokens: bool,
        #[arg(long, conflicts_with = "text")]
        instance: Option<PathBuf>,
        #[arg(long, default_value = "full")]
        k: KArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Leftmost occurrences of the length-k substrings of T·T
    #[command(name = "2k")]
    TwoK {
        #[command(flatten)]
        text: TextArg,
        #[arg(long, default_value = "full")]
        k: KArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Lower bound from the distinct length-k substrings of T·T
    LowerBound {
        #[command(flatten)]
        text: TextArg,
        #[arg(long, default_value = "full")]
        k: KArg,
    },
}

#[derive(Subcommand)]
enum IndexAction {
    Build {
        #[command(flatten)]
        text: TextArg,
        #[arg(long)]
        attractor: PathBuf,
        #[arg(long, default_value_t = 2)]
        tau: usize,
        /// Word width used for the extraction unit
        #[arg(long, default_value_t = 64)]
        word_bits: u32,
        #[arg(long)]
        out: PathBuf,
    },
    Extract {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        pos: usize,
        #[arg(long)]
        len: usize,
        /// Print symbol codes even when an alphabet sidecar exists
        #[arg(long)]
        tokens: bool,
    },
}

#[derive(Subcommand)]
enum GadgetAction {
    /// Emit T_C as tokens, plus a `<out>.symbols` sidecar
    Build {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// The attractor of T_C induced by a cover
    Attractor {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Comma-separated set identifiers
        #[arg(long, value_delimiter = ',', required = true)]
        cover: Vec<u32>,
        #[command(flatten)]
        out: OutArg,
    },
}

fn read_string(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_text(path: &Path, tokens: bool) -> Result<(Text, Option<Alphabet>)> {
    if tokens {
        return Ok((Text::parse_tokens(&read_string(path)?)?, None));
    }
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let (text, alphabet) =
        Text::from_bytes(&bytes).with_context(|| format!("reading {}", path.display()))?;
    Ok((text, Some(alphabet)))
}

fn load(arg: &TextArg) -> Result<Text> {
    Ok(read_text(&arg.text, arg.tokens)?.0)
}

fn read_attractor(path: &Path, n: usize) -> Result<Attractor> {
    let g = Attractor::parse(&read_string(path)?, Some(n))
        .with_context(|| format!("reading {}", path.display()))?;
    if g.n() != n {
        bail!("attractor is for n = {}, text has n = {n}", g.n());
    }
    Ok(g)
}

fn emit(out: &OutArg, content: &str) -> Result<()> {
    match &out.out {
        Some(p) => fs::write(p, content).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Parse {
            kind: ParseKind::Lz77,
            text,
            out,
        } => emit(&out, &lz77_parse(&load(&text)?).to_file_string())?,
        Command::Bwt {
            kind: BwtKind::Runs,
            text,
            out,
        } => emit(
            &out,
            &rlbwt_build(&load(&text)?.with_sentinel())?.to_file_string(),
        )?,
        Command::Induce { source } => {
            let (g, out) = match source {
                InduceSource::Lz77 { text, out } => {
                    (attractor_from_lz77(&lz77_parse(&load(&text)?))?, out)
                }
                InduceSource::Rlbwt {
                    text,
                    with_sentinel,
                    out,
                } => {
                    let g = attractor_from_rlbwt(&load(&text)?.with_sentinel())?;
                    (
                        if with_sentinel {
                            g
                        } else {
                            g.drop_sentinel_position()?
                        },
                        out,
                    )
                }
                InduceSource::Macro { scheme, n, out } => (
                    attractor_from_macro(&MacroScheme::parse(&read_string(&scheme)?, n)?)?,
                    out,
                ),
                InduceSource::Collage { collage, out } => (
                    attractor_from_collage(&CollageSystem::parse(&read_string(&collage)?)?)?,
                    out,
                ),
            };
            emit(&out, &g.to_file_string())?
        }
        Command::Validate {
            text,
            attractor,
            k,
            naive,
        } => {
            let text = load(&text)?;
            let k = k.resolve(text.len());
            let g = read_attractor(&attractor, text.len())?.with_k(k)?;
            let verdict = if naive {
                naive_validate(&text, &g, k)?
            } else {
                validate_k_attractor(&text, &g, k)?
            };
            return Ok(match verdict {
                Validation::Valid => ExitCode::SUCCESS,
                Validation::Invalid(w) => {
                    let symbols: Vec<String> = w.symbols.iter().map(u32::to_string).collect();
                    eprintln!(
                        "uncovered substring at {} of length {}: [{}]",
                        w.start,
                        w.len,
                        symbols.join(" ")
                    );
                    ExitCode::from(1)
                }
            });
        }
        Command::Approx { method } => match method {
            ApproxMethod::Greedy {
                text: Some(path),
                tokens,
                k,
                out,
                ..
            } => {
                let text = read_text(&path, tokens)?.0;
                emit(
                    &out,
                    &approx::k_attractor_greedy(&text, k.resolve(text.len()))?.to_file_string(),
                )?
            }
            ApproxMethod::Greedy {
                instance: Some(path),
                out,
                ..
            } => {
                let inst = SetCoverInstance::parse(&read_string(&path)?)?;
                let chosen = approx::greedy_set_cover(&inst)?;
                emit(
                    &out,
                    &chosen
                        .iter()
                        .map(|id| format!("{id}\n"))
                        .collect::<String>(),
                )?
            }
            ApproxMethod::Greedy { .. } => bail!("either --text or --instance is required"),
            ApproxMethod::TwoK { text, k, out } => {
                let text = load(&text)?;
                emit(
                    &out,
                    &approx::k_attractor_2k(&text, k.resolve(text.len()))?.to_file_string(),
                )?
            }
            ApproxMethod::LowerBound { text, k } => {
                let text = load(&text)?;
                let k = k.resolve(text.len());
                let bound = approx::attractor_lower_bound(&text, k)?;
                println!(
                    "{}",
                    json!({ "n": text.len(), "k": k, "lower_bound": bound })
                );
            }
        },
        Command::MinBrute { text, k, out } => {
            let text = load(&text)?;
            emit(
                &out,
                &min_attractor_brute(&text, k.resolve(text.len()))?.to_file_string(),
            )?
        }
        Command::Reduce {
            target,
            text,
            attractor,
            out,
        } => {
            let text = load(&text)?;
            let g = read_attractor(&attractor, text.len())?;
            let content = match target {
                ReduceTarget::Parse => attract::bidirectional_parse_from_attractor(&text, &g)?
                    .to_macro_scheme()
                    .to_file_string(),
                ReduceTarget::Collage => collage_from_attractor(&text, &g)?.to_file_string(),
            };
            emit(&out, &content)?
        }
        Command::Index { action } => match action {
            IndexAction::Build {
                text,
                attractor,
                tau,
                word_bits,
                out,
            } => {
                let (t, alphabet) = read_text(&text.text, text.tokens)?;
                let g = read_attractor(&attractor, t.len())?;
                let index = build_index_with(&t, &g, IndexParams { tau, word_bits })?;
                fs::write(&out, index.to_bytes())
                    .with_context(|| format!("writing {}", out.display()))?;
                let side = sidecar(&out, "alphabet");
                match alphabet {
                    Some(a) => fs::write(&side, a.bytes())?,
                    None if side.exists() => fs::remove_file(&side)?,
                    None => {}
                }
                let report = index.space_report();
                eprintln!(
                    "{}",
                    json!({
                        "n": t.len(), "tau": tau, "levels": report.levels,
                        "pointer_words": report.pointer_words, "explicit_symbols": report.explicit_symbols,
                        "total_words": report.total_words,
                    })
                );
            }
            IndexAction::Extract {
                input,
                pos,
                len,
                tokens,
            } => {
                let bytes =
                    fs::read(&input).with_context(|| format!("reading {}", input.display()))?;
                let index = AttractorIndex::from_bytes(&bytes)?;
                let symbols = index.extract(pos, len)?;
                let side = sidecar(&input, "alphabet");
                let mut stdout = std::io::stdout();
                if !tokens && side.exists() {
                    let alphabet = Alphabet::from_bytes(fs::read(&side)?);
                    stdout.write_all(&alphabet.decode(&symbols))?;
                    stdout.write_all(b"\n")?;
                } else {
                    for c in symbols {
                        writeln!(stdout, "{c}")?;
                    }
                }
            }
        },
        Command::Gadget { action } => match action {
            GadgetAction::Build { instance, k, out } => {
                let gadget = build_tc(&SetCoverInstance::parse(&read_string(&instance)?)?, k)?;
                emit(&out, &gadget.text.to_tokens())?;
                if let Some(p) = &out.out {
                    fs::write(sidecar(p, "symbols"), gadget.symbol_table_string())?;
                }
            }
            GadgetAction::Attractor {
                instance,
                k,
                cover,
                out,
            } => {
                let gadget = build_tc(&SetCoverInstance::parse(&read_string(&instance)?)?, k)?;
                emit(&out, &known_attractor(&gadget, &cover)?.to_file_string())?
            }
        },
        Command::Stats {
            text,
            tokens,
            random,
            n,
            sigma,
            seed,
            k,
        } => {
            let (t, source) = if random {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                (
                    families::random_text(&mut rng, n, sigma.max(1)),
                    format!("random:n={n},sigma={sigma},seed={seed}"),
                )
            } else {
                let Some(path) = text else {
                    bail!("either --text or --random is required")
                };
                (read_text(&path, tokens)?.0, path.display().to_string())
            };
            println!("{}", stats(&t, k.resolve(t.len()), &source)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn stats(t: &Text, k: usize, source: &str) -> Result<serde_json::Value> {
    let n = t.len();
    let lz = lz77_parse(t);
    let g_lz = attractor_from_lz77(&lz)?;
    let r = rlbwt_build(&t.with_sentinel())?.r();
    let g_bwt = attractor_from_rlbwt(&t.with_sentinel())?.drop_sentinel_position()?;
    let two_k = approx::k_attractor_2k(t, k)?.len();
    let lower = approx::attractor_lower_bound(t, k)?;
    let greedy = approx::k_attractor_greedy(t, k).ok().map(|g| g.len());
    let minimum = (n <= attract::brute::BRUTE_FORCE_LIMIT)
        .then(|| min_attractor_brute(t, k))
        .transpose()?
        .map(|g| g.len());
    let parse = attract::bidirectional_parse_from_attractor(t, &g_lz)?;
    let collage = collage_from_attractor(t, &g_lz)?;
    let index = attract::build_index(t, &g_lz, 2)?.space_report();
    Ok(json!({
        "source": source,
        "n": n,
        "sigma": t.distinct_symbols(),
        "k": k,
        "z": lz.z(),
        "r": r,
        "gamma_lz77": g_lz.len(),
        "gamma_rlbwt": g_bwt.len(),
        "approx_2k": two_k,
        "approx_greedy": greedy,
        "lower_bound": lower,
        "gamma_min": minimum,
        "bidirectional_b": parse.b(),
        "collage_c": collage.c(),
        "index_levels": index.levels,
        "index_words": index.total_words,
    }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
