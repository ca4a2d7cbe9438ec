//! `vk`: valence automata over finite and Rees matrix semigroups.
//!
//! Exit codes: 0 pass/equivalent, 1 rejected/inequivalent, 2 precondition
//! or parse error.

mod corpus;
mod dot;
mod format;
mod pipeline;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use vk_core::{
    equivalent, equivalent_languages, extract_component, invert_group_subset, rees_decompose,
    Acceptance, Equivalence, RationalSubset, SAutomaton, Semigroup, ValenceAutomaton,
};

#[derive(Parser)]
#[command(name = "vk", about = "valence automata toolkit", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Finite semigroups given by multiplication tables.
    #[command(subcommand)]
    Sgp(SgpCmd),
    /// Rees matrix semigroups.
    #[command(subcommand)]
    Rees(ReesCmd),
    /// Rational subsets via automata over a semigroup.
    #[command(subcommand)]
    Rat(RatCmd),
    /// Valence automata and conversion pipelines.
    #[command(subcommand)]
    Val(ValCmd),
    /// Plain regular-language operations.
    #[command(subcommand)]
    Re(ReCmd),
    /// Test corpus generation and certificate reports.
    #[command(subcommand)]
    Corpus(CorpusCmd),
}

#[derive(Subcommand)]
enum SgpCmd {
    /// Check that a file is a valid multiplication table.
    Validate { file: PathBuf },
    /// Print identity, zero, idempotents, classification and Green classes.
    Info { file: PathBuf },
}

#[derive(Subcommand)]
enum ReesCmd {
    /// Materialize a Rees description into a multiplication table.
    Build {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose a finite completely (0-)simple semigroup into Rees
    /// coordinates.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum RatCmd {
    /// Print the accepted subset of an automaton (finite owners).
    Subset { file: PathBuf },
    /// Test membership of an element (given as JSON) in the accepted subset.
    Member { file: PathBuf, elem: String },
    /// Extract the (i, j) component of an automaton over a Rees matrix
    /// semigroup, as an automaton over the base.
    Extract {
        file: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Invert the accepted subset of an automaton over a group.
    Invert {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ValCmd {
    /// Run a word through a valence automaton.
    Accept {
        file: PathBuf,
        word: String,
        /// Configuration budget for infinite register semigroups.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Emit the minimal DFA of the accepted language (finite owners).
    Lang {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Apply a transformation pipeline, such as nozero,to-group.
    Convert {
        file: PathBuf,
        #[arg(long)]
        pipeline: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also emit a language-equivalence certificate.
        #[arg(long)]
        certify: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Compare the languages of two valence automata.
    Equiv { a: PathBuf, b: PathBuf },
}

#[derive(Subcommand)]
enum ReCmd {
    /// Compare the languages of two finite automata.
    Equiv { a: PathBuf, b: PathBuf },
    /// Emit the minimal DFA of a finite automaton.
    Min {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Generate a deterministic corpus of test instances.
    Gen {
        #[arg(long)]
        out: PathBuf,
        /// Base seed; the VK_SEED environment variable takes precedence.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 204)]
        valence: usize,
        #[arg(long, default_value_t = 10)]
        semigroups: usize,
        #[arg(long, default_value_t = 2)]
        rees_per_group: usize,
        #[arg(long, default_value_t = 3)]
        max_coord: usize,
    },
    /// Summarize conversion certificates under a directory.
    Report {
        dir: PathBuf,
        /// Also write the machine-readable summary to a file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn parent_dir(path: &Path) -> PathBuf {
    path.parent()
        .filter(|p| !p.as_os_str().is_empty())
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from("."))
}

fn emit(v: &Value, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => format::write_json(path, v),
        None => {
            println!("{}", serde_json::to_string_pretty(v)?);
            Ok(())
        }
    }
}

fn emit_dot(text: String, dot: Option<&Path>) -> Result<()> {
    if let Some(path) = dot {
        std::fs::write(path, text)?;
    }
    Ok(())
}

fn load_s_automaton(file: &Path) -> Result<SAutomaton> {
    format::parse_s_automaton(&format::load_json(file)?, &parent_dir(file))
}

fn load_valence(file: &Path) -> Result<ValenceAutomaton> {
    format::parse_valence(&format::load_json(file)?, &parent_dir(file))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Sgp(SgpCmd::Validate { file }) => {
            let s = format::parse_finite_semigroup(&format::load_json(&file)?)?;
            println!("valid: {} elements", s.order());
            Ok(0)
        }
        Cmd::Sgp(SgpCmd::Info { file }) => {
            let s = format::parse_finite_semigroup(&format::load_json(&file)?)?;
            let show = |x: usize| {
                s.label_of(x)
                    .map(str::to_string)
                    .unwrap_or_else(|| x.to_string())
            };
            println!("order: {}", s.order());
            println!(
                "identity: {}",
                s.identity().map(&show).unwrap_or_else(|| "none".into())
            );
            println!(
                "zero: {}",
                s.zero().map(&show).unwrap_or_else(|| "none".into())
            );
            let idem: Vec<String> = s.idempotents().iter().map(&show).collect();
            println!("idempotents: [{}]", idem.join(", "));
            println!("classification: {:?}", s.classify());
            let green = s.green_relations();
            for (name, classes) in [
                ("R", &green.r_classes),
                ("L", &green.l_classes),
                ("H", &green.h_classes),
            ] {
                let rendered: Vec<String> = classes
                    .iter()
                    .map(|c| {
                        let elems: Vec<String> = c.iter().map(|&x| show(x)).collect();
                        format!("{{{}}}", elems.join(", "))
                    })
                    .collect();
                println!("{name}-classes: {}", rendered.join(" "));
            }
            Ok(0)
        }
        Cmd::Rees(ReesCmd::Build { file, out }) => {
            let rees = format::parse_rees(&format::load_json(&file)?, &parent_dir(&file))?;
            let (table, elems) = rees.materialize().map_err(|e| anyhow!("{e:?}"))?;
            let owner = Semigroup::Rees(rees.clone());
            let labels: Vec<String> = elems.iter().map(|e| owner.display(e)).collect();
            let table = table.with_labels(labels).map_err(|e| anyhow!("{e:?}"))?;
            eprintln!(
                "built {} elements, classification {:?}",
                table.order(),
                table.classify()
            );
            emit(&format::finite_semigroup_json(&table), out.as_deref())?;
            Ok(0)
        }
        Cmd::Rees(ReesCmd::Decompose { file, out }) => {
            let s = format::parse_finite_semigroup(&format::load_json(&file)?)?;
            let d = rees_decompose(&s).map_err(|e| anyhow!("{e:?}"))?;
            let owner = Semigroup::Rees(d.rees.clone());
            let iso: Vec<Value> = d
                .to_rees
                .iter()
                .map(|e| format::elem_json(e, &owner))
                .collect();
            emit(
                &json!({ "rees": format::rees_json(&d.rees), "iso": iso }),
                out.as_deref(),
            )?;
            Ok(0)
        }
        Cmd::Rat(RatCmd::Subset { file }) => {
            let a = load_s_automaton(&file)?;
            let accepted = a.accepted_subset().map_err(|e| anyhow!("{e:?}"))?;
            let rendered: Vec<Value> =
                accepted.iter().map(|e| format::elem_json(e, &a.owner)).collect();
            println!("{}", serde_json::to_string_pretty(&Value::Array(rendered))?);
            Ok(0)
        }
        Cmd::Rat(RatCmd::Member { file, elem }) => {
            let a = load_s_automaton(&file)?;
            let value: Value = serde_json::from_str(&elem)?;
            let e = format::parse_elem(&value, &a.owner)?;
            let member = RationalSubset::from_automaton(a)
                .contains(&e)
                .map_err(|err| anyhow!("{err:?}"))?;
            println!("{member}");
            Ok(if member { 0 } else { 1 })
        }
        Cmd::Rat(RatCmd::Extract { file, i, j, out, dot }) => {
            let a = load_s_automaton(&file)?;
            let component = extract_component(&a, i, j).map_err(|e| anyhow!("{e:?}"))?;
            emit_dot(dot::s_automaton_dot(&component), dot.as_deref())?;
            emit(&format::s_automaton_json(&component), out.as_deref())?;
            Ok(0)
        }
        Cmd::Rat(RatCmd::Invert { file, out, dot }) => {
            let a = load_s_automaton(&file)?;
            let inv = invert_group_subset(&RationalSubset::from_automaton(a))
                .map_err(|e| anyhow!("{e:?}"))?;
            let aut = inv.automaton().map_err(|e| anyhow!("{e:?}"))?;
            emit_dot(dot::s_automaton_dot(&aut), dot.as_deref())?;
            emit(&format::s_automaton_json(&aut), out.as_deref())?;
            Ok(0)
        }
        Cmd::Val(ValCmd::Accept { file, word, budget }) => {
            let v = load_valence(&file)?;
            let w = format::tokenize(&word, &v.alphabet)?;
            match v.accepts(&w, budget).map_err(|e| anyhow!("{e:?}"))? {
                Acceptance::Yes => {
                    println!("accepted");
                    Ok(0)
                }
                Acceptance::No => {
                    println!("rejected");
                    Ok(1)
                }
                Acceptance::Inconclusive => bail!("inconclusive within budget"),
            }
        }
        Cmd::Val(ValCmd::Lang { file, out, dot }) => {
            let v = load_valence(&file)?;
            let d = v.language_dfa().map_err(|e| anyhow!("{e:?}"))?;
            emit_dot(dot::dfa_dot(&d), dot.as_deref())?;
            emit(&format::dfa_json(&d), out.as_deref())?;
            Ok(0)
        }
        Cmd::Val(ValCmd::Convert {
            file,
            pipeline,
            out,
            certify,
            dot,
        }) => {
            let v = load_valence(&file)?;
            let spec = pipeline::PipelineSpec::parse(&pipeline)?;
            let converted = spec.run(&v)?;
            emit_dot(dot::valence_dot(&converted), dot.as_deref())?;
            emit(&format::valence_json(&converted), out.as_deref())?;
            if !certify {
                return Ok(0);
            }
            let cert = pipeline::certify(&v, &converted, &spec, &file.display().to_string())?;
            let cert_path = out
                .as_deref()
                .map(|p| p.with_extension("cert.json"))
                .unwrap_or_else(|| file.with_extension("cert.json"));
            format::write_json(&cert_path, &cert)?;
            match cert["verdict"].as_str() {
                Some("equivalent") => {
                    eprintln!("certificate: equivalent");
                    Ok(0)
                }
                _ => {
                    let w = cert["counterexample"]
                        .as_array()
                        .map(|w| {
                            w.iter().filter_map(Value::as_str).collect::<Vec<_>>().join("")
                        })
                        .unwrap_or_default();
                    eprintln!("certificate: inequivalent, counterexample {w:?}");
                    Ok(1)
                }
            }
        }
        Cmd::Val(ValCmd::Equiv { a, b }) => {
            let va = load_valence(&a)?;
            let vb = load_valence(&b)?;
            match equivalent_languages(&va, &vb).map_err(|e| anyhow!("{e:?}"))? {
                Equivalence::Equivalent => {
                    println!("equivalent");
                    Ok(0)
                }
                Equivalence::Counterexample(w) => {
                    println!("inequivalent: {:?}", w.join(""));
                    Ok(1)
                }
            }
        }
        Cmd::Re(ReCmd::Equiv { a, b }) => {
            let da = format::parse_nfa(&format::load_json(&a)?)?.determinize().minimize();
            let db = format::parse_nfa(&format::load_json(&b)?)?.determinize().minimize();
            match equivalent(&da, &db).map_err(|e| anyhow!("{e:?}"))? {
                Equivalence::Equivalent => {
                    println!("equivalent");
                    Ok(0)
                }
                Equivalence::Counterexample(w) => {
                    println!("inequivalent: {:?}", w.join(""));
                    Ok(1)
                }
            }
        }
        Cmd::Re(ReCmd::Min { file, out, dot }) => {
            let d = format::parse_nfa(&format::load_json(&file)?)?
                .determinize()
                .minimize();
            emit_dot(dot::dfa_dot(&d), dot.as_deref())?;
            emit(&format::dfa_json(&d), out.as_deref())?;
            Ok(0)
        }
        Cmd::Corpus(CorpusCmd::Gen {
            out,
            seed,
            valence,
            semigroups,
            rees_per_group,
            max_coord,
        }) => {
            let seed = match std::env::var("VK_SEED") {
                Ok(s) => s
                    .parse()
                    .map_err(|_| anyhow!("VK_SEED must be a 64-bit integer"))?,
                Err(_) => seed,
            };
            let sizes = corpus::Sizes {
                semigroups,
                rees_per_group,
                valence,
                max_coord,
            };
            let manifest = corpus::generate(&out, seed, &sizes)?;
            eprintln!(
                "wrote {} instances to {}",
                manifest["counts"]["valence"], out.display()
            );
            Ok(0)
        }
        Cmd::Corpus(CorpusCmd::Report { dir, json }) => {
            let (summary, failures) = corpus::report(&dir)?;
            if let Some(path) = json {
                format::write_json(&path, &summary)?;
            }
            println!(
                "{} certificates, {} failures",
                summary["certificates"], summary["failures"]
            );
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}
