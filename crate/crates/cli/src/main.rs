mod report;

use std::fs::File;
use std::io::{self, BufWriter, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use liederiv::embedding::{
    build_embedding, kernel, module_rank, tilde_subalgebra, verify_homomorphism, EmbedOptions,
    EmbeddingProblem, EmbeddingResult,
};
use liederiv::io::{algebra_from_json_unchecked, load, JsonIo};
use liederiv::lie::{validate_jacobi, LieAlgebra};
use liederiv::presets::{PresetDescriptor, PRESETS};
use liederiv::scalar::{Rational, RationalFunction};
use liederiv::variety::{
    check_family, check_point, closure_equations_iter, degeneracy_equations, CandidateMatrix,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "liederiv",
    version,
    about = "Exact embeddings of Lie algebras into derivations of rational-function fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Input {
    /// Built-in algebra or problem, e.g. sl3_paper, sl_4, heisenberg
    #[arg(long)]
    preset: Option<String>,
    /// Size parameter for sl_n and abelian
    #[arg(long)]
    n: Option<usize>,
    /// Lie algebra JSON file
    #[arg(long, value_name = "FILE")]
    algebra: Option<PathBuf>,
    /// Embedding problem JSON file
    #[arg(long, value_name = "FILE")]
    problem: Option<PathBuf>,
}

#[derive(Args, Clone, Default)]
struct Output {
    /// Write the payload here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Render LaTeX instead of JSON
    #[arg(long)]
    latex: bool,
}

#[derive(Args, Clone, Copy, Default)]
struct Engine {
    /// Work modulo J^{N+1} instead of exactly
    #[arg(long, value_name = "N")]
    jet: Option<u32>,
    /// Override the nilpotency guard of e^{ad w}
    #[arg(long, value_name = "STEPS")]
    max_steps: Option<usize>,
}

impl Engine {
    fn options(self) -> EmbedOptions {
        EmbedOptions {
            jet: self.jet,
            max_steps: self.max_steps,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity and, when a problem is given, its preconditions
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Build the embedding phi
    Embed {
        #[command(flatten)]
        input: Input,
        /// Parameterized candidate matrix whose rows are used as L1
        #[arg(long, value_name = "FILE", requires = "complement")]
        family: Option<PathBuf>,
        /// Complement basis names for --family, comma separated
        #[arg(long, value_delimiter = ',')]
        complement: Vec<String>,
        #[command(flatten)]
        engine: Engine,
        #[command(flatten)]
        output: Output,
    },
    /// Check that phi is an injective homomorphism
    Verify {
        #[command(flatten)]
        input: Input,
        /// Saved embedding result
        #[arg(long, value_name = "FILE")]
        result: Option<PathBuf>,
        #[command(flatten)]
        engine: Engine,
        #[command(flatten)]
        output: Output,
    },
    /// Compute the subalgebra L~ and its intersection with 1 ⊗ L
    Tilde {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        result: Option<PathBuf>,
        #[command(flatten)]
        engine: Engine,
        #[command(flatten)]
        output: Output,
    },
    /// Emit the closure and degeneracy equations of M_k(L)
    Variety {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        /// Plain-text equations, one per line
        #[arg(long, value_name = "FILE")]
        eqs_out: Option<PathBuf>,
        /// JSON system (default: stdout unless --eqs-out is given)
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Test whether a rational candidate matrix lies in M_k(L)
    CheckPoint {
        #[arg(long, value_name = "FILE")]
        point: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Test the embedding criterion on a parameterized family and optionally embed
    CheckFamily {
        #[arg(long, value_name = "FILE")]
        family: PathBuf,
        /// Complement basis names; builds the embedding when the test passes
        #[arg(long, value_delimiter = ',')]
        complement: Vec<String>,
        #[command(flatten)]
        engine: Engine,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// List presets or dump one as JSON
    Preset {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        list: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Render an embedding as a LaTeX report
    Render {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "FILE")]
        result: Option<PathBuf>,
        #[command(flatten)]
        engine: Engine,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

/// A computed answer that is mathematically negative (exit 1).
#[derive(Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Positive,
    Negative,
}

impl Verdict {
    fn from_ok(ok: bool) -> Self {
        if ok {
            Verdict::Positive
        } else {
            Verdict::Negative
        }
    }
}

fn read_json(path: &Path) -> anyhow::Result<Value> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{} is not valid JSON", path.display()))
}

fn load_file<T: JsonIo>(path: &Path) -> anyhow::Result<T> {
    load(path).with_context(|| format!("cannot load {}", path.display()))
}

impl Input {
    fn count(&self) -> usize {
        [
            self.preset.is_some(),
            self.algebra.is_some(),
            self.problem.is_some(),
        ]
        .iter()
        .filter(|b| **b)
        .count()
    }

    fn exactly_one(&self) -> anyhow::Result<()> {
        match self.count() {
            1 => Ok(()),
            0 => bail!("one of --preset, --algebra or --problem is required"),
            _ => bail!("--preset, --algebra and --problem are mutually exclusive"),
        }
    }

    fn descriptor(&self, name: &str) -> anyhow::Result<PresetDescriptor> {
        Ok(PresetDescriptor::parse(name, self.n)?)
    }

    fn algebra(&self) -> anyhow::Result<Arc<LieAlgebra>> {
        self.exactly_one()?;
        if let Some(name) = &self.preset {
            return Ok(self.descriptor(name)?.algebra()?);
        }
        if let Some(path) = &self.algebra {
            return Ok(Arc::new(load_file(path)?));
        }
        Ok(self.problem()?.algebra().clone())
    }

    fn problem(&self) -> anyhow::Result<EmbeddingProblem> {
        self.exactly_one()?;
        if let Some(name) = &self.preset {
            return Ok(self.descriptor(name)?.problem()?);
        }
        if let Some(path) = &self.problem {
            return load_file(path);
        }
        bail!("an embedding problem is required (--problem FILE or a --preset with a default problem)")
    }

    /// A saved result when given, otherwise the embedding of the problem.
    fn result(&self, saved: &Option<PathBuf>, engine: Engine) -> anyhow::Result<EmbeddingResult> {
        match saved {
            Some(path) if self.count() == 0 => load_file(path),
            Some(_) => bail!("--result cannot be combined with --preset, --algebra or --problem"),
            None => Ok(build_embedding(&self.problem()?, engine.options())?),
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn emit_json(out: &Option<PathBuf>, v: &Value) -> anyhow::Result<()> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    emit(out, &s)
}

fn complement_indices(alg: &LieAlgebra, names: &[String]) -> anyhow::Result<Vec<usize>> {
    names
        .iter()
        .map(|n| {
            alg.index_of(n)
                .ok_or_else(|| anyhow!("`{n}` is not a basis element"))
        })
        .collect()
}

fn validate(input: &Input, out: &Option<PathBuf>) -> anyhow::Result<Verdict> {
    input.exactly_one()?;
    let (alg, problem) = if let Some(path) = &input.algebra {
        let alg = algebra_from_json_unchecked(&read_json(path)?)
            .with_context(|| format!("cannot load {}", path.display()))?;
        (Arc::new(alg), None)
    } else if let Some(name) = &input.preset {
        let d = input.descriptor(name)?;
        (d.algebra()?, d.problem().ok())
    } else {
        let p = input.problem()?;
        (p.algebra().clone(), Some(p))
    };
    let violations = validate_jacobi(&alg);
    let mut ok = violations.is_empty();
    let mut doc = json!({
        "algebra": {"dim": alg.dim(), "basis": alg.basis_names()},
        "jacobi": report::jacobi(&alg, &violations),
    });
    if let Some(p) = problem {
        doc["problem"] = match p.validate() {
            Ok(rep) => {
                ok &= rep.nilpotency.nilpotent;
                json!({
                    "valid": true,
                    "k": rep.k,
                    "complement": p.complement().iter().map(|&c| alg.name(c)).collect::<Vec<_>>(),
                    "nilpotent": rep.nilpotency.nilpotent,
                    "nilpotency_index": rep.nilpotency.index,
                    "chain": rep.nilpotency.chain,
                })
            }
            Err(e) => {
                ok = false;
                json!({"valid": false, "reason": e.to_string()})
            }
        };
    }
    emit_json(out, &doc)?;
    Ok(Verdict::from_ok(ok))
}

fn result_verdict(r: &EmbeddingResult) -> anyhow::Result<Verdict> {
    let s = r.summary()?;
    Ok(Verdict::from_ok(s.homomorphism_ok && s.kernel_dim == 0))
}

fn write_result(r: &EmbeddingResult, output: &Output) -> anyhow::Result<()> {
    if output.latex {
        emit(&output.out, &report::result_latex(r))
    } else {
        emit_json(&output.out, &r.to_json()?)
    }
}

fn embed(
    input: &Input,
    family: &Option<PathBuf>,
    complement: &[String],
    engine: Engine,
    output: &Output,
) -> anyhow::Result<Verdict> {
    let problem = match family {
        Some(path) => {
            if input.count() != 0 {
                bail!("--family cannot be combined with --preset, --algebra or --problem");
            }
            let fam: CandidateMatrix<RationalFunction> = load_file(path)?;
            let comp = complement_indices(fam.algebra(), complement)?;
            EmbeddingProblem::from_family(&fam, comp)?
        }
        None => input.problem()?,
    };
    let r = build_embedding(&problem, engine.options())?;
    write_result(&r, output)?;
    result_verdict(&r)
}

fn verify(
    input: &Input,
    saved: &Option<PathBuf>,
    engine: Engine,
    output: &Output,
) -> anyhow::Result<Verdict> {
    let r = input.result(saved, engine)?;
    let violations = verify_homomorphism(&r.algebra, &r.phi)?;
    let ker = kernel(&r.algebra, &r.phi)?;
    let round_trip = r.check_round_trip();
    if output.latex {
        emit(
            &output.out,
            &report::homomorphism_latex(&r.algebra, &violations),
        )?;
    } else {
        emit_json(
            &output.out,
            &json!({
                "homomorphism": report::homomorphism(&r.algebra, &violations),
                "kernel_dim": ker.dim(),
                "kernel": report::subspace_basis(&ker),
                "rank": module_rank(&r.phi),
                "round_trip": round_trip,
            }),
        )?;
    }
    Ok(Verdict::from_ok(
        violations.is_empty() && ker.is_zero() && round_trip,
    ))
}

fn tilde(
    input: &Input,
    saved: &Option<PathBuf>,
    engine: Engine,
    output: &Output,
) -> anyhow::Result<Verdict> {
    let r = input.result(saved, engine)?;
    let t = tilde_subalgebra(&r.algebra, &r.phi)?;
    if output.latex {
        emit(&output.out, &report::tilde_latex(&t))?;
    } else {
        emit_json(&output.out, &report::tilde(&t))?;
    }
    Ok(Verdict::from_ok(t.constant_intersection.is_zero()))
}

fn json_string_list<W: Write>(w: &mut W, items: impl Iterator<Item = String>) -> io::Result<()> {
    let mut first = true;
    w.write_all(b"[")?;
    for s in items {
        w.write_all(if first { b"\n    " } else { b",\n    " })?;
        serde_json::to_writer(&mut *w, &s)?;
        first = false;
    }
    w.write_all(if first { b"]" } else { b"\n  ]" })
}

/// Streams the system so the closure equations never sit in memory at once.
fn variety(
    input: &Input,
    k: usize,
    eqs_out: &Option<PathBuf>,
    out: &Option<PathBuf>,
) -> anyhow::Result<Verdict> {
    let alg = input.algebra()?;
    let eqs = closure_equations_iter(&alg, k)?;
    let degeneracy = degeneracy_equations(&alg, k)?;
    let unknowns = eqs.unknowns().clone();

    let open = |p: &PathBuf| -> anyhow::Result<Box<dyn Write>> {
        Ok(Box::new(BufWriter::new(File::create(p).with_context(
            || format!("cannot write {}", p.display()),
        )?)))
    };
    let mut text: Option<Box<dyn Write>> = eqs_out.as_ref().map(open).transpose()?;
    let mut json_sink: Option<Box<dyn Write>> = match (out, eqs_out) {
        (Some(p), _) => Some(open(p)?),
        (None, None) => Some(Box::new(BufWriter::new(io::stdout().lock()))),
        (None, Some(_)) => None,
    };

    if let Some(t) = text.as_mut() {
        writeln!(t, "# unknowns: {}", unknowns.names().join(" "))?;
        writeln!(t, "# closure equations")?;
    }
    if let Some(j) = json_sink.as_mut() {
        write!(j, "{{\n  \"unknowns\": ")?;
        serde_json::to_writer(&mut *j, unknowns.names())?;
        write!(j, ",\n  \"closure_eqs\": ")?;
    }
    let mut count = 0usize;
    let mut first = true;
    if let Some(j) = json_sink.as_mut() {
        j.write_all(b"[")?;
    }
    for p in eqs {
        let s = p.to_string();
        if let Some(t) = text.as_mut() {
            writeln!(t, "{s}")?;
        }
        if let Some(j) = json_sink.as_mut() {
            j.write_all(if first { b"\n    " } else { b",\n    " })?;
            serde_json::to_writer(&mut *j, &s)?;
        }
        first = false;
        count += 1;
    }
    if let Some(j) = json_sink.as_mut() {
        j.write_all(if first { b"]" } else { b"\n  ]" })?;
        write!(j, ",\n  \"degeneracy_eqs\": ")?;
        json_string_list(j, degeneracy.iter().map(|p| p.to_string()))?;
        writeln!(j, "\n}}")?;
        j.flush()?;
    }
    if let Some(t) = text.as_mut() {
        writeln!(t, "# degeneracy equations")?;
        for p in &degeneracy {
            writeln!(t, "{p}")?;
        }
        t.flush()?;
    }
    diagnostic(
        &format!(
            "{count} closure equations, {} degeneracy equations",
            degeneracy.len()
        ),
        Level::Info,
    );
    Ok(Verdict::Positive)
}

fn check_point_cmd(point: &Path, out: &Option<PathBuf>) -> anyhow::Result<Verdict> {
    let a: CandidateMatrix<Rational> = load_file(point)?;
    let rep = check_point(a.algebra(), &a)?;
    emit_json(
        out,
        &json!({
            "full_rank": rep.full_rank,
            "closed": rep.closed,
            "in_mk": rep.in_mk,
            "in_m0k": rep.in_m0k,
        }),
    )?;
    Ok(Verdict::from_ok(rep.in_mk))
}

fn check_family_cmd(
    family: &Path,
    complement: &[String],
    engine: Engine,
    out: &Option<PathBuf>,
) -> anyhow::Result<Verdict> {
    let fam: CandidateMatrix<RationalFunction> = load_file(family)?;
    let rep = check_family(fam.algebra(), &fam)?;
    let mut doc = report::family(&rep);
    let mut ok = rep.embedding_criterion_holds;
    if ok && !complement.is_empty() {
        let comp = complement_indices(fam.algebra(), complement)?;
        let r = build_embedding(
            &EmbeddingProblem::from_family(&fam, comp)?,
            engine.options(),
        )?;
        ok &= result_verdict(&r)? == Verdict::Positive;
        doc["embedding"] = r.to_json()?;
    }
    emit_json(out, &doc)?;
    Ok(Verdict::from_ok(ok))
}

fn preset_cmd(
    name: &Option<String>,
    list: bool,
    n: Option<usize>,
    out: &Option<PathBuf>,
) -> anyhow::Result<Verdict> {
    let Some(name) = name.as_ref().filter(|_| !list) else {
        if !list {
            bail!("give a preset name or --list");
        }
        let doc: Vec<Value> = PRESETS
            .iter()
            .map(|(n, d)| json!({"name": n, "description": d}))
            .collect();
        emit_json(out, &Value::Array(doc))?;
        return Ok(Verdict::Positive);
    };
    let d = PresetDescriptor::parse(name, n)?;
    let doc = match d.problem() {
        Ok(p) => p.to_json()?,
        Err(_) => d.algebra()?.to_json()?,
    };
    emit_json(out, &doc)?;
    Ok(Verdict::Positive)
}

fn render(
    input: &Input,
    saved: &Option<PathBuf>,
    engine: Engine,
    out: &Option<PathBuf>,
) -> anyhow::Result<Verdict> {
    let r = input.result(saved, engine)?;
    emit(out, &report::result_latex(&r))?;
    Ok(Verdict::Positive)
}

fn run(cli: &Cli) -> anyhow::Result<Verdict> {
    match &cli.command {
        Command::Validate { input, out } => validate(input, out),
        Command::Embed {
            input,
            family,
            complement,
            engine,
            output,
        } => embed(input, family, complement, *engine, output),
        Command::Verify {
            input,
            result,
            engine,
            output,
        } => verify(input, result, *engine, output),
        Command::Tilde {
            input,
            result,
            engine,
            output,
        } => tilde(input, result, *engine, output),
        Command::Variety {
            input,
            k,
            eqs_out,
            out,
        } => variety(input, *k, eqs_out, out),
        Command::CheckPoint { point, out } => check_point_cmd(point, out),
        Command::CheckFamily {
            family,
            complement,
            engine,
            out,
        } => check_family_cmd(family, complement, *engine, out),
        Command::Preset { name, list, n, out } => preset_cmd(name, *list, *n, out),
        Command::Render {
            input,
            result,
            engine,
            out,
        } => render(input, result, *engine, out),
    }
}

enum Level {
    Info,
    Error,
}

fn use_color() -> bool {
    match std::env::var("LIEDERIV_COLOR").as_deref() {
        Ok("always") => true,
        Ok("never") => false,
        _ => io::stderr().is_terminal(),
    }
}

fn diagnostic(msg: &str, level: Level) {
    let (tag, code) = match level {
        Level::Info => ("note", "36"),
        Level::Error => ("error", "31;1"),
    };
    if use_color() {
        eprintln!("\x1b[{code}m{tag}:\x1b[0m {msg}");
    } else {
        eprintln!("{tag}: {msg}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Verdict::Positive) => ExitCode::SUCCESS,
        Ok(Verdict::Negative) => ExitCode::from(1),
        Err(e) => {
            let msg = e
                .chain()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(": ");
            diagnostic(&msg, Level::Error);
            // a non-nilpotent ad w is an answer about the input, not a malformed input
            let negative = e
                .chain()
                .any(|c| matches!(c.downcast_ref(), Some(liederiv::Error::NotNilpotent { .. })));
            ExitCode::from(if negative { 1 } else { 2 })
        }
    }
}
