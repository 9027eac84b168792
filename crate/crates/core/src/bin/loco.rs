use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use loco::families::{rate, Family};
use loco::selftest::{oracle_equivalence, oracle_max_len};
use loco::tdmr::{parse_symbol_text, FrameStatus, Grid, StreamCodec};
use loco::{ConstraintAutomaton, ForbiddenSet};

#[derive(Parser)]
#[command(name = "loco", version, about = "LOCO constrained codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Capacity of a family or a custom constraint.
    Capacity(Target),
    /// Number of codewords of length m.
    Cardinality(Target),
    /// Rate, normalized rate and adder size for each m.
    RateTable(Target),
    /// Encode message bits into a symbol stream or grid.
    Encode(Io),
    /// Decode a symbol stream or grid back to message bits.
    Decode(Io),
    /// Check a stream: frame status, forbidden patterns, SIS/PIS, runs.
    Verify(Io),
    /// List every codeword of length m with its index.
    Enumerate(Target),
    /// Closed-form codecs against brute-force enumeration.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Lorll,
    Sloco,
    Os,
    Op,
    Ns,
    Np,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Symbols,
    Grid,
}

#[derive(Args)]
struct Target {
    #[arg(long, value_enum, conflicts_with = "config")]
    family: Option<FamilyArg>,
    /// LO-RLL minimum zero run.
    #[arg(long)]
    d: Option<u32>,
    /// S-LOCO parameter.
    #[arg(long)]
    x: Option<u32>,
    /// Codeword length(s), comma separated.
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    /// JSON constraint: {"q": 8, "patterns": [[0,2,0],[7,5,7]]}.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct Io {
    #[command(flatten)]
    target: Target,
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Message as a literal 0/1 string instead of a byte file.
    #[arg(long, conflicts_with = "input")]
    bits: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

/// Error that maps to exit status 1 (bad frames) rather than 2.
#[derive(Debug)]
struct FrameErrors(String);

impl std::fmt::Display for FrameErrors {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FrameErrors {}

impl Target {
    fn family(&self) -> anyhow::Result<Family> {
        let f = self
            .family
            .ok_or_else(|| anyhow!("--family is required here"))?;
        Ok(match f {
            FamilyArg::Lorll => Family::lo_rll(self.d.unwrap_or(1))?,
            FamilyArg::Sloco => Family::s_loco(self.x.unwrap_or(1))?,
            FamilyArg::Os => Family::Os,
            FamilyArg::Op => Family::Op,
            FamilyArg::Ns => Family::Ns,
            FamilyArg::Np => Family::Np,
        })
    }

    fn constraint(&self) -> anyhow::Result<Either> {
        match (&self.config, self.family) {
            (Some(path), None) => Ok(Either::Custom(ForbiddenSet::from_config_file(path)?)),
            (None, Some(_)) => Ok(Either::Family(self.family()?)),
            _ => bail!("give exactly one of --family or --config"),
        }
    }

    fn lengths(&self) -> anyhow::Result<&[usize]> {
        if self.m.is_empty() {
            bail!("--m is required here");
        }
        Ok(&self.m)
    }

    fn single_m(&self) -> anyhow::Result<usize> {
        match self.lengths()? {
            [m] => Ok(*m),
            _ => bail!("give a single --m"),
        }
    }
}

enum Either {
    Family(Family),
    Custom(ForbiddenSet),
}

impl Either {
    fn set(&self) -> ForbiddenSet {
        match self {
            Either::Family(f) => f.forbidden_set(),
            Either::Custom(s) => s.clone(),
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::new()
        .filter_level(log::LevelFilter::Warn)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.downcast_ref::<FrameErrors>().is_some() => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> anyhow::Result<()> {
    match cmd {
        Command::Capacity(t) => capacity(&t),
        Command::Cardinality(t) => cardinality(&t),
        Command::RateTable(t) => rate_table(&t),
        Command::Encode(io) => encode(&io),
        Command::Decode(io) => decode(&io),
        Command::Verify(io) => verify(&io),
        Command::Enumerate(t) => enumerate(&t),
        Command::Selftest => selftest(),
    }
}

fn capacity(t: &Target) -> anyhow::Result<()> {
    let c = ConstraintAutomaton::build(&t.constraint()?.set()).capacity()?;
    println!("C={:.4} Cn={:.4}", c.bits, c.normalized);
    if let Either::Family(f) = t.constraint()? {
        if let Some(s) = f.scheme_capacity()? {
            println!("scheme C={:.4} Cn={:.4}", s.bits, s.normalized);
        }
    }
    Ok(())
}

fn cardinality(t: &Target) -> anyhow::Result<()> {
    let lengths = t.lengths()?;
    let constraint = t.constraint()?;
    for &m in lengths {
        let n = match &constraint {
            Either::Family(f) => loco::cardinality(*f, m as i64)?.to_string(),
            Either::Custom(set) => ConstraintAutomaton::build(set).count(m).to_string(),
        };
        if lengths.len() == 1 {
            println!("{n}");
        } else {
            println!("m={m} N={n}");
        }
    }
    Ok(())
}

fn rate_table(t: &Target) -> anyhow::Result<()> {
    let f = t.family()?;
    println!("{f}");
    println!("{:>6} {:>8} {:>8} {:>6}", "m", "R", "Rn", "adder");
    for &m in t.lengths()? {
        let r = rate(f, m)?;
        println!(
            "{:>6} {:>8.4} {:>8.4} {:>6}",
            r.m,
            r.bits,
            r.normalized,
            r.adder_bits()
        );
    }
    Ok(())
}

fn read_message(io: &Io) -> anyhow::Result<Vec<bool>> {
    if let Some(text) = &io.bits {
        return text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(anyhow!("--bits takes 0 and 1, found {other:?}")),
            })
            .collect();
    }
    let bytes = match &io.input {
        Some(p) => fs::read(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut buf = Vec::new();
            io::stdin().read_to_end(&mut buf)?;
            buf
        }
    };
    Ok(bytes
        .iter()
        .flat_map(|b| (0..8).rev().map(move |k| b >> k & 1 == 1))
        .collect())
}

fn read_text(io: &Io) -> anyhow::Result<String> {
    match &io.input {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn write_out(io: &Io, data: &[u8]) -> anyhow::Result<()> {
    match &io.out {
        Some(p) => fs::write(p, data).with_context(|| format!("writing {}", p.display())),
        None => Ok(io::stdout().write_all(data)?),
    }
}

fn stream_codec(io: &Io) -> anyhow::Result<StreamCodec> {
    Ok(StreamCodec::new(
        io.target.family()?,
        io.target.single_m()?,
    )?)
}

fn read_stream(io: &Io, sc: &StreamCodec) -> anyhow::Result<Vec<Option<u8>>> {
    let text = read_text(io)?;
    Ok(match io.format {
        Format::Symbols => parse_symbol_text(&text)?,
        Format::Grid => {
            if sc.written_q() != 8 {
                bail!("{} streams have no grid form", sc.family());
            }
            Grid::from_text(&text)?.to_symbols()
        }
    })
}

fn encode(io: &Io) -> anyhow::Result<()> {
    let sc = stream_codec(io)?;
    let bits = read_message(io)?;
    if bits.len() % sc.chunk_bits() != 0 {
        bail!(
            "message has {} bits, not a multiple of the {}-bit chunk",
            bits.len(),
            sc.chunk_bits()
        );
    }
    let text = match io.format {
        Format::Symbols => {
            let mut s = sc.render(&sc.assemble_symbols(&bits)?);
            s.push('\n');
            s
        }
        Format::Grid => sc.assemble_grid(&bits)?.to_text(),
    };
    write_out(io, text.as_bytes())
}

fn decode(io: &Io) -> anyhow::Result<()> {
    let sc = stream_codec(io)?;
    let frames = sc.parse_symbols(&read_stream(io, &sc)?)?;
    let mut bits = Vec::new();
    let mut bad = Vec::new();
    for (k, f) in frames.iter().enumerate() {
        match &f.bits {
            Some(b) => bits.extend_from_slice(b),
            None => bad.push(format!("frame {k}: {}", f.status.as_str())),
        }
    }
    if io.out.is_some() && bits.len() % 8 == 0 {
        let bytes: Vec<u8> = bits
            .chunks(8)
            .map(|c| c.iter().fold(0u8, |acc, &b| acc << 1 | u8::from(b)))
            .collect();
        write_out(io, &bytes)?;
    } else {
        let mut s: String = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
        s.push('\n');
        write_out(io, s.as_bytes())?;
    }
    if !bad.is_empty() {
        return Err(FrameErrors(bad.join("\n")).into());
    }
    Ok(())
}

fn verify(io: &Io) -> anyhow::Result<()> {
    let sc = stream_codec(io)?;
    let audit = sc.audit(&read_stream(io, &sc)?)?;
    println!("frames={}", audit.frames.len());
    for status in [
        FrameStatus::Ok,
        FrameStatus::ConstraintViolation,
        FrameStatus::IndexOverflow,
    ] {
        println!("{}={}", status.as_str(), audit.count(status));
    }
    println!("forbidden_patterns={}", audit.forbidden.len());
    if let Some(g) = &audit.grid {
        println!("sis={}", g.sis.len());
        println!("pis={}", g.pis.len());
        println!(
            "max_no_transition_run={} (bound {})",
            g.max_run, g.run_bound
        );
    }
    if !audit.is_clean() {
        return Err(FrameErrors(format!("{} problem(s) found", audit.problems())).into());
    }
    println!("stream ok");
    Ok(())
}

fn enumerate(t: &Target) -> anyhow::Result<()> {
    let m = t.single_m()?;
    let automaton = ConstraintAutomaton::build(&t.constraint()?.set());
    let words = automaton.enumerate(m)?;
    let out = io::stdout();
    let mut out = out.lock();
    for (k, w) in words.iter().enumerate() {
        writeln!(out, "{k}\t{w}")?;
    }
    Ok(())
}

fn selftest() -> anyhow::Result<()> {
    let families = [
        Family::LoRll { d: 1 },
        Family::LoRll { d: 2 },
        Family::SLoco { x: 1 },
        Family::SLoco { x: 2 },
        Family::SLoco { x: 3 },
        Family::Os,
        Family::Op,
        Family::Ns,
        Family::Np,
    ];
    let mut failed = 0;
    for f in families {
        let r = oracle_equivalence(f);
        match &r.failure {
            None => println!(
                "PASS {f}: m <= {} ({} codewords)",
                oracle_max_len(f),
                r.codewords
            ),
            Some(why) => {
                failed += 1;
                println!("FAIL {f}: {why}");
            }
        }
    }
    if failed > 0 {
        return Err(FrameErrors(format!("{failed} family check(s) failed")).into());
    }
    Ok(())
}
