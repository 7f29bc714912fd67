//! `gt`: command-line front end for genomic-tableaux.
//!
//! Exit codes: 0 on success, 1 on invalid input (error JSON on stderr),
//! 2 when two independent rules disagree.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use genomic_tableaux::json::{self as gj, AnyTableau, ToJson};
use genomic_tableaux::jdt::{rectify, Slide};
use genomic_tableaux::lr::{coefficient_a, LROptions, LRQuery, Rule};
use genomic_tableaux::puzzles::{delta_boundary, enumerate_k_puzzles, PieceSet};
use genomic_tableaux::schur::{
    expand_in_schur, genomic_schur, transition_matrix, u_structure_constants_in,
};
use genomic_tableaux::shapes::{Cell, Diagram, Partition, ShiftedSkewShape, SkewShape, StrictPartition};
use genomic_tableaux::shifted::{
    enumerate_shifted_genomic, lg_bounds, og_coefficient, Kind, OGQuery,
};
use genomic_tableaux::sweep::{sweep_grassmannian, sweep_shifted, SweepConfig};
use genomic_tableaux::tableaux::{enumerate_genomic, enumerate_increasing, enumerate_setvalued, enumerate_ssyt};
use genomic_tableaux::{kstd, Error, Result};

#[derive(Parser)]
#[command(name = "gt", version, about = "K-theoretic Littlewood-Richardson calculator")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Ascii,
}

#[derive(clap::Args)]
struct Triple {
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Grassmannian structure constant a_{λ,μ}^ν by every requested rule.
    Lr {
        #[command(flatten)]
        t: Triple,
        /// `k,n` for Gr_k(C^n); enables the puzzle rule.
        #[arg(long)]
        gr: Option<String>,
        /// Comma-separated subset of ballot,rect,buch,puzzle.
        #[arg(long)]
        rules: Option<String>,
        /// Keep up to N witnesses per rule.
        #[arg(long, num_args = 0..=1, default_missing_value = "1000000")]
        witnesses: Option<usize>,
    },
    /// Maximal orthogonal Grassmannian constant b_{λ,μ}^ν.
    Og {
        #[command(flatten)]
        t: Triple,
        /// Require all shapes to fit in the staircase δ_n.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        witnesses: bool,
    },
    /// Genomic bounds for the Lagrangian Grassmannian constant.
    Lg {
        #[command(flatten)]
        t: Triple,
    },
    /// K-puzzles with the boundary of (λ, μ, ν) on Gr_k(C^n).
    Puzzle {
        #[command(flatten)]
        t: Triple,
        #[arg(long)]
        gr: String,
    },
    /// Genomic Schur function U_{ν/λ} expanded in Schur functions.
    Schur {
        /// `outer` or `outer/inner`.
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        /// Expand U_shape · U_times in the U basis instead.
        #[arg(long)]
        times: Option<String>,
    },
    /// Matrix of U_λ in the Schur basis for all λ inside a bounding shape.
    Transition {
        #[arg(long, default_value = "3,3,3")]
        shape: String,
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
    /// List tableaux of a shape.
    Enumerate {
        #[arg(long, value_enum)]
        kind: EnumKind,
        #[arg(long)]
        shape: String,
        /// Content μ (genomic, set-valued, Pieri-filled and shifted kinds).
        #[arg(long)]
        content: Option<String>,
        /// Largest entry (ssyt and increasing kinds).
        #[arg(long)]
        max: Option<u32>,
        /// Keep only ballot tableaux where that makes sense.
        #[arg(long)]
        ballot: bool,
    },
    /// One slide of a tableau (JSON) into the given inner corners.
    Jdt {
        #[arg(long)]
        tableau: String,
        /// `r,c;r,c;…`; all inner corners when omitted.
        #[arg(long)]
        corners: Option<String>,
    },
    /// Rectify a tableau (JSON), sliding into all inner corners each step.
    Rectify {
        #[arg(long)]
        tableau: String,
    },
    /// Cross-check every rule on all triples inside a bounding shape.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        #[arg(long, default_value = "3,3,3")]
        bound: String,
        /// Puzzle rule on Gr_k(C^n) where shapes fit; `none` to skip.
        #[arg(long, default_value = "3,6")]
        gr: String,
        /// Also sweep strict triples inside δ_n; 0 to skip.
        #[arg(long, default_value_t = 4)]
        shifted: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Override the six boundary labels of the K-piece (test fixture).
        #[arg(long, hide = true)]
        k_piece_labels: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumKind {
    Ssyt,
    Increasing,
    Genomic,
    Setvalued,
    Pieri,
    ShiftedP,
    ShiftedQ,
}

enum Output {
    Json(Value),
    Text(String),
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T> {
    s.parse()
}

fn skew(s: &str) -> Result<SkewShape> {
    match s.split_once('/') {
        Some((o, i)) => SkewShape::new(parse(o)?, parse(i)?),
        None => Ok(SkewShape::straight(parse(s)?)),
    }
}

fn shifted_skew(s: &str) -> Result<ShiftedSkewShape> {
    match s.split_once('/') {
        Some((o, i)) => ShiftedSkewShape::new(parse(o)?, parse(i)?),
        None => Ok(ShiftedSkewShape::straight(parse(s)?)),
    }
}

fn pair(s: &str, what: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("{what}: expected two integers a,b, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn corners(s: &str) -> Result<Vec<Cell>> {
    s.split(';').filter(|x| !x.trim().is_empty()).map(|c| pair(c, "corner").map(|(r, c)| Cell::new(r, c))).collect()
}

fn content(s: &Option<String>) -> Result<Vec<usize>> {
    let s = s.as_deref().ok_or_else(|| Error::Parse("--content is required for this kind".into()))?;
    Ok(parse::<Partition>(s)?.parts().to_vec())
}

fn tableau_arg(s: &str) -> Result<AnyTableau> {
    let text = match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?,
        None => s.to_string(),
    };
    gj::parse_tableau_str(&text)
}

fn listing<T: ToJson + std::fmt::Display>(items: &[T], format: Format) -> Output {
    match format {
        Format::Ascii => Output::Text(items.iter().map(|t| format!("{t}\n")).collect::<Vec<_>>().join("\n")),
        _ => Output::Json(json!({ "count": items.len(), "items": items.iter().map(ToJson::to_json).collect::<Vec<_>>() })),
    }
}

fn require_increasing(t: &AnyTableau) -> Result<()> {
    let ok = match t {
        AnyTableau::Increasing(t) => t.is_increasing(),
        AnyTableau::ShiftedIncreasing(t) => t.is_increasing(),
        _ => true,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidTableau("entries must increase strictly along rows and columns".into()))
    }
}

fn slide_any(t: &AnyTableau, cs: Option<&[Cell]>) -> Result<AnyTableau> {
    require_increasing(t)?;
    fn go<T: Slide + Clone>(t: &T, cs: Option<&[Cell]>) -> Result<T> {
        let all = t.slide_shape().inner_corners();
        t.slide_into(cs.unwrap_or(&all)).map(|(t, _)| t)
    }
    Ok(match t {
        AnyTableau::Increasing(t) => AnyTableau::Increasing(go(t, cs)?),
        AnyTableau::ShiftedIncreasing(t) => AnyTableau::ShiftedIncreasing(go(t, cs)?),
        AnyTableau::Genomic(t) => AnyTableau::Genomic(go(t, cs)?),
        AnyTableau::ShiftedGenomic(t) => AnyTableau::ShiftedGenomic(go(t, cs)?),
        AnyTableau::SetValued(_) => return Err(Error::Malformed("set-valued tableaux do not slide".into())),
    })
}

fn rectify_any(t: &AnyTableau) -> Result<AnyTableau> {
    require_increasing(t)?;
    Ok(match t {
        AnyTableau::Increasing(t) => AnyTableau::Increasing(rectify(t)?),
        AnyTableau::ShiftedIncreasing(t) => AnyTableau::ShiftedIncreasing(rectify(t)?),
        AnyTableau::Genomic(t) => AnyTableau::Genomic(rectify(t)?),
        AnyTableau::ShiftedGenomic(t) => AnyTableau::ShiftedGenomic(rectify(t)?),
        AnyTableau::SetValued(_) => return Err(Error::Malformed("set-valued tableaux do not slide".into())),
    })
}

fn tableau_out(t: &AnyTableau, format: Format) -> Output {
    match (format, t) {
        (Format::Ascii, AnyTableau::Increasing(t)) => Output::Text(format!("{t}\n")),
        (Format::Ascii, AnyTableau::ShiftedIncreasing(t)) => Output::Text(format!("{t}\n")),
        (Format::Ascii, AnyTableau::Genomic(t)) => Output::Text(format!("{t}\n")),
        (Format::Ascii, AnyTableau::ShiftedGenomic(t)) => Output::Text(format!("{t}\n")),
        (Format::Ascii, AnyTableau::SetValued(t)) => Output::Text(format!("{t}\n")),
        _ => Output::Json(t.to_json()),
    }
}

fn lr_query(t: &Triple) -> Result<LRQuery> {
    Ok(LRQuery::new(parse(&t.lambda)?, parse(&t.mu)?, parse(&t.nu)?))
}

fn og_query(t: &Triple) -> Result<OGQuery> {
    Ok(OGQuery::new(parse(&t.lambda)?, parse(&t.mu)?, parse(&t.nu)?))
}

fn run(cli: Cli) -> Result<Output> {
    let format = cli.format;
    match cli.cmd {
        Cmd::Lr { t, gr, rules, witnesses } => {
            let q = lr_query(&t)?;
            let gr = gr.as_deref().map(|s| pair(s, "--gr")).transpose()?;
            let rules = match rules {
                Some(r) => r.split(',').map(parse::<Rule>).collect::<Result<Vec<_>>>()?,
                None if gr.is_some() => Rule::ALL.to_vec(),
                None => Rule::TABLEAU.to_vec(),
            };
            if rules.contains(&Rule::Puzzle) && gr.is_none() {
                return Err(Error::Parse("the puzzle rule needs --gr k,n".into()));
            }
            let r = coefficient_a(&q, &LROptions { rules, gr, witnesses, pieces: PieceSet::default() })?;
            if format == Format::Tsv {
                let mut s = String::from("rule\tcount\n");
                for (rule, n) in &r.counts {
                    s.push_str(&format!("{rule}\t{n}\n"));
                }
                s.push_str(&format!("coefficient\t{}\n", r.coefficient));
                return Ok(Output::Text(s));
            }
            Ok(Output::Json(r.to_json()))
        }
        Cmd::Og { t, n, witnesses } => {
            let q = og_query(&t)?;
            if let Some(n) = n {
                for p in [&q.lambda, &q.mu, &q.nu] {
                    if !p.fits_in_staircase(n) {
                        return Err(Error::InvalidShape(format!("({p}) does not fit in the staircase of size {n}")));
                    }
                }
            }
            Ok(Output::Json(og_coefficient(&q, witnesses)?.to_json()))
        }
        Cmd::Lg { t } => Ok(Output::Json(lg_bounds(&og_query(&t)?).to_json())),
        Cmd::Puzzle { t, gr } => {
            let q = lr_query(&t)?;
            let (k, n) = pair(&gr, "--gr")?;
            let b = delta_boundary(&q.lambda, &q.mu, &q.nu, k, n)?;
            let ps = enumerate_k_puzzles(&b, &PieceSet::default());
            match format {
                Format::Ascii => Ok(Output::Text(ps.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"))),
                _ => Ok(Output::Json(json!({
                    "query": q,
                    "boundary": b,
                    "count": ps.len(),
                    "puzzles": ps.iter().map(ToJson::to_json).collect::<Vec<_>>(),
                }))),
            }
        }
        Cmd::Schur { shape, vars, times } => {
            let sh = skew(&shape)?;
            if let Some(m) = times {
                if !sh.inner.is_empty() {
                    return Err(Error::InvalidShape("--times needs a straight shape".into()));
                }
                let c = u_structure_constants_in(&sh.outer, &parse(&m)?, vars)?;
                return Ok(Output::Json(json!({ "lambda": sh.outer, "mu": parse::<Partition>(&m)?, "nvars": vars, "expansion": gj::expansion_json(&c) })));
            }
            let (poly, tableaux) = genomic_schur(&sh, vars)?;
            let e = expand_in_schur(&poly)?;
            Ok(Output::Json(json!({ "shape": sh, "nvars": vars, "tableaux": tableaux, "expansion": gj::expansion_json(&e) })))
        }
        Cmd::Transition { shape, vars } => {
            let m = transition_matrix(&parse(&shape)?, vars)?;
            match format {
                Format::Json => Ok(Output::Json(m.to_json())),
                _ => Ok(Output::Text(m.to_tsv())),
            }
        }
        Cmd::Enumerate { kind, shape, content: mu, max, ballot } => {
            let need_max = || max.ok_or_else(|| Error::Parse("--max is required for this kind".into()));
            match kind {
                EnumKind::Ssyt => Ok(listing(&enumerate_ssyt(&skew(&shape)?, need_max()?), format)),
                EnumKind::Increasing => Ok(listing(&enumerate_increasing(&skew(&shape)?, need_max()?), format)),
                EnumKind::Genomic => {
                    let mut v = enumerate_genomic(&skew(&shape)?, &content(&mu)?);
                    if ballot {
                        v.retain(|t| t.is_ballot());
                    }
                    Ok(listing(&v, format))
                }
                EnumKind::Setvalued => Ok(listing(&enumerate_setvalued(&skew(&shape)?, &content(&mu)?, ballot), format)),
                EnumKind::Pieri => Ok(listing(&kstd::enumerate_pieri_filled(&skew(&shape)?, &content(&mu)?), format)),
                EnumKind::ShiftedP | EnumKind::ShiftedQ => {
                    let k = if kind == EnumKind::ShiftedP { Kind::P } else { Kind::Q };
                    let strict: StrictPartition = parse(mu.as_deref().unwrap_or(""))
                        .or_else(|_| content(&mu).and_then(StrictPartition::new))?;
                    let mut v = enumerate_shifted_genomic(&shifted_skew(&shape)?, k, strict.parts());
                    if ballot {
                        v.retain(|t| t.is_ballot());
                    }
                    Ok(listing(&v, format))
                }
            }
        }
        Cmd::Jdt { tableau, corners: cs } => {
            let t = tableau_arg(&tableau)?;
            let cs = cs.as_deref().map(corners).transpose()?;
            Ok(tableau_out(&slide_any(&t, cs.as_deref())?, format))
        }
        Cmd::Rectify { tableau } => Ok(tableau_out(&rectify_any(&tableau_arg(&tableau)?)?, format)),
        Cmd::Verify { max_size, bound, gr, shifted, jobs, k_piece_labels } => {
            let gr = if gr == "none" { None } else { Some(pair(&gr, "--gr")?) };
            let mut pieces = PieceSet::default();
            if let Some(labels) = k_piece_labels {
                let labels: Vec<u8> = labels
                    .split(',')
                    .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad K-piece label {x:?}"))))
                    .collect::<Result<_>>()?;
                if labels.len() != pieces.k_piece.boundary.len() || labels.iter().any(|&l| l > 1) {
                    return Err(Error::Parse("--k-piece-labels needs six labels in {0,1}".into()));
                }
                for (edge, l) in pieces.k_piece.boundary.iter_mut().zip(labels) {
                    edge.1 = l;
                }
            }
            let cfg = SweepConfig { gr, jobs, pieces, ..SweepConfig::new(parse(&bound)?, max_size) };
            let a = sweep_grassmannian(&cfg)?;
            let mut v = json!({ "grassmannian": a });
            if shifted > 0 {
                v["shifted"] = json!(sweep_shifted(shifted, jobs)?);
            }
            Ok(Output::Json(v))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{}", gj::to_string(&json!({ "error": "usage", "message": e.to_string() })));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(Output::Json(v)) => {
            println!("{}", gj::to_string(&v));
            ExitCode::SUCCESS
        }
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", gj::to_string(&gj::error_json(&e)));
            ExitCode::from(if e.is_cross_check() { 2 } else { 1 })
        }
    }
}
