//! Command-line front end for the `cdes` binary.
//!
//! Verbs: `stats`, `map`, `enum`, `orbits` and `verify`. Exit codes are 0 on
//! success, 1 when a verified identity fails and 2 on usage or domain errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bijection::{h_map, iota_hat, iota_hat_inverse, phi, q_map, ShuffleElement};
use crate::cyclic::{cdes_involution, cdes_syt, orbits, p_map_involution, p_map_syt, verify_cdes_classes};
use crate::error::{Error, Result};
use crate::matching::{enumerate_all_matchings, enumerate_matchings, Matching};
use crate::oscillating::{
    chen_iota_involution, sundaram, sundaram_inverse, verify_chen, verify_kim, verify_roby, verify_sundaram_roundtrip,
    OscillatingTableau,
};
use crate::perm::{parse_cycles, parse_one_line, Permutation};
use crate::report::VerificationReport;
use crate::symfun::{verify_gessel_all, verify_lemma_main1, verify_main0, verify_matching_identity};
use crate::tableau::{enumerate_syt_n, recording_tableau, StandardTableau};

/// `verify` refuses larger sizes unless `--force` is given.
pub const VERIFY_GUARD: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "cdes", version, about = "Geometric and cyclic descents on involutions and tableaux")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format; `verify` defaults to json, everything else to plain.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All statistics of one object.
    Stats {
        #[arg(long, group = "object")]
        perm: Option<String>,
        #[arg(long, group = "object")]
        involution: Option<String>,
        #[arg(long, group = "object")]
        matching: Option<String>,
        #[arg(long, group = "object")]
        syt: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Apply a named map and print the image.
    Map {
        name: MapName,
        #[arg(allow_hyphen_values = true)]
        object: String,
        #[arg(long)]
        n: Option<usize>,
        /// Number of fixed letters, for `q` when it cannot be inferred.
        #[arg(long)]
        k: Option<usize>,
        /// Input codec, when auto-detection is ambiguous.
        #[arg(long = "as", value_enum)]
        kind: Option<Kind>,
    },
    /// Enumerate a family with its statistics.
    Enum {
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
    },
    /// Orbits of the cyclic rotation conjugate with each element's cDes.
    Orbits {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        j: Option<usize>,
        /// Act on tableaux instead of involutions.
        #[arg(long)]
        syt: bool,
    },
    /// Check an identity exhaustively.
    Verify {
        identity: Identity,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        max: Option<usize>,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapName {
    Iota,
    IotaHat,
    IotaHatInv,
    Sundaram,
    SundaramInv,
    Transpose,
    Phi,
    Q,
    Rotate,
    P,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Perm,
    Cycles,
    Matching,
    Syt,
    Osc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Matchings,
    Involutions,
    Syt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Identity {
    Main1,
    Main11,
    Main111,
    Main0,
    Cdes,
    Gessel,
    Chen,
    SundaramRoundtrip,
    Kim,
    Roby,
}

/// A parsed object remembering its codec.
#[derive(Clone, Debug)]
enum Object {
    Perm(Permutation),
    Cycles(Permutation),
    Matching(Matching),
    Syt(StandardTableau),
    Osc(OscillatingTableau),
}

impl Object {
    fn parse(text: &str, n: Option<usize>, kind: Option<Kind>) -> Result<Object> {
        let text = text.trim();
        let kind = kind.unwrap_or_else(|| detect(text));
        let infer = |default: usize| n.unwrap_or(default);
        Ok(match kind {
            Kind::Perm => Object::Perm(parse_one_line(text)?),
            Kind::Cycles if text == "-" => Object::Cycles(Permutation::identity(infer(0))),
            Kind::Cycles => Object::Cycles(parse_cycles(text, infer(max_letter(text)))?),
            Kind::Matching => Object::Matching(Matching::parse(text, infer(max_letter(text)))?),
            Kind::Syt => Object::Syt(text.parse()?),
            Kind::Osc => Object::Osc(text.parse()?),
        })
    }

    fn involution(&self) -> Result<Permutation> {
        match self {
            Object::Perm(p) | Object::Cycles(p) if p.is_involution() => Ok(p.clone()),
            Object::Perm(_) | Object::Cycles(_) => Err(Error::NotInvolution),
            Object::Matching(m) => Ok(m.to_involution()),
            _ => Err(Error::Usage("expected an involution, a matching or a permutation".into())),
        }
    }

    /// `p` in the same codec as `self`.
    fn like(&self, p: Permutation) -> Result<Object> {
        Ok(match self {
            Object::Perm(_) => Object::Perm(p),
            Object::Matching(_) => Object::Matching(Matching::from_involution(&p)?),
            _ => Object::Cycles(p),
        })
    }
}

impl std::fmt::Display for Object {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Object::Perm(p) => p.fmt(f),
            Object::Cycles(p) => f.write_str(&cycles(p)),
            Object::Matching(m) => m.fmt(f),
            Object::Syt(t) => t.fmt(f),
            Object::Osc(o) => o.fmt(f),
        }
    }
}

fn cycles(p: &Permutation) -> String {
    let s = p.format_cycles();
    if s.is_empty() {
        "-".into()
    } else {
        s
    }
}

fn detect(text: &str) -> Kind {
    if text.starts_with('[') {
        Kind::Perm
    } else if text.starts_with('(') {
        Kind::Cycles
    } else if text.contains(';') {
        Kind::Osc
    } else if text.contains('-') {
        Kind::Matching
    } else {
        Kind::Syt
    }
}

fn max_letter(text: &str) -> usize {
    text.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse().ok()).max().unwrap_or(0)
}

/// Parses `args` (including the program name), runs the command and writes
/// its output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    let (text, code) = match execute(&cli) {
        Ok(done) => done,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string()),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    code
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    let format = cli.format.unwrap_or(match cli.command {
        Command::Verify { .. } => Format::Json,
        _ => Format::Plain,
    });
    match &cli.command {
        Command::Stats { perm, involution, matching, syt, n } => {
            let object = match (perm, involution, matching, syt) {
                (Some(t), ..) => Object::parse(t, *n, Some(Kind::Perm))?,
                (_, Some(t), ..) => Object::parse(t, *n, Some(Kind::Cycles))?,
                (_, _, Some(t), _) => Object::parse(t, *n, Some(Kind::Matching))?,
                (.., Some(t)) => Object::parse(t, *n, Some(Kind::Syt))?,
                _ => return Err(Error::Usage("one of --perm, --involution, --matching, --syt is required".into())),
            };
            let record = stats(&object)?;
            Ok((render_record(format, &record)?, 0))
        }
        Command::Map { name, object, n, k, kind } => {
            let input = Object::parse(object, *n, *kind)?;
            let image = apply(*name, &input, *k)?;
            let text = match format {
                Format::Plain => format!("{image}\n"),
                _ => {
                    let row = vec![("input".to_string(), input.to_string()), ("output".to_string(), image.to_string())];
                    render_record(format, &row)?
                }
            };
            Ok((text, 0))
        }
        Command::Enum { family, n, k, j } => Ok((render_table(format, &enumerate(*family, *n, *k, *j)?)?, 0)),
        Command::Orbits { n, k, j, syt } => Ok((render_orbits(format, *n, *k, *j, *syt)?, 0)),
        Command::Verify { identity, n, k, j, max, force } => {
            let report = verify(*identity, *n, *k, *j, *max, *force)?;
            let code = if report.ok { 0 } else { 1 };
            Ok((render_report(format, &report)?, code))
        }
    }
}

type Record = Vec<(String, String)>;

fn rec(pairs: &[(&str, String)]) -> Record {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn matching_record(m: &Matching) -> Record {
    let s = m.stats();
    rec(&[
        ("des", s.des.to_string()),
        ("mdes", s.mdes.to_string()),
        ("cmdes", s.cmdes.to_string()),
        ("cr", s.cr.to_string()),
        ("ne", s.ne.to_string()),
        ("um", s.um.to_string()),
    ])
}

fn shape_record(t: &StandardTableau) -> Record {
    let shape = t.shape();
    rec(&[("shape", shape.to_string()), ("height", shape.height().to_string()), ("oc", shape.odd_cols().to_string())])
}

fn stats(object: &Object) -> Result<Record> {
    let mut r = rec(&[("object", object.to_string())]);
    match object {
        Object::Syt(t) => {
            r.push(("des".into(), t.des()?.to_string()));
            r.extend(shape_record(t));
            r.push(("cdes".into(), cdes_syt(t)?.to_string()));
        }
        Object::Osc(o) => {
            r.push(("kim_des".into(), o.kim_des().to_string()));
        }
        _ => {
            let p = match object {
                Object::Matching(m) => m.to_involution(),
                Object::Perm(p) | Object::Cycles(p) => p.clone(),
                _ => unreachable!(),
            };
            r.push(("des".into(), p.des().to_string()));
            r.push(("cellini_cdes".into(), p.cellini_cdes().to_string()));
            if p.is_involution() {
                let m = Matching::from_involution(&p)?;
                r.extend(matching_record(&m).into_iter().filter(|(k, _)| k != "des"));
                r.extend(shape_record(&recording_tableau(&p)));
                r.push(("cdes".into(), cdes_involution(&p)?.to_string()));
            }
        }
    }
    Ok(r)
}

fn apply(name: MapName, input: &Object, k: Option<usize>) -> Result<Object> {
    match (name, input) {
        (MapName::Transpose, Object::Osc(o)) => Ok(Object::Osc(o.transpose())),
        (MapName::Transpose, Object::Syt(t)) => Ok(Object::Syt(t.transpose())),
        (MapName::Transpose, _) => Err(Error::Usage("transpose expects an oscillating tableau or a tableau".into())),
        (MapName::SundaramInv, Object::Osc(o)) => Ok(Object::Cycles(sundaram_inverse(o)?)),
        (MapName::SundaramInv, _) => Err(Error::Usage("sundaram-inv expects an oscillating tableau".into())),
        (MapName::P, Object::Syt(t)) => Ok(Object::Syt(p_map_syt(t)?)),
        (MapName::Q, Object::Perm(w)) => {
            let t = match k {
                Some(k) => ShuffleElement::new(w.clone(), k)?,
                None => infer_shuffle(w)?,
            };
            input.like(q_map(&t))
        }
        (MapName::Q, _) => Err(Error::Usage("q expects a shuffle in one-line notation".into())),
        _ => {
            let p = input.involution()?;
            match name {
                MapName::Iota => input.like(chen_iota_involution(&p)?),
                MapName::IotaHat => input.like(iota_hat(&p)?),
                MapName::IotaHatInv => input.like(iota_hat_inverse(&p)?),
                MapName::Sundaram => Ok(Object::Osc(sundaram(&p)?)),
                MapName::Phi => Ok(Object::Perm(phi(&p)?.word().clone())),
                MapName::Rotate => input.like(Matching::from_involution(&p)?.rotate().to_involution()),
                MapName::P => input.like(p_map_involution(&p)?),
                MapName::H => Ok(Object::Syt(h_map(&p)?)),
                _ => unreachable!(),
            }
        }
    }
}

fn infer_shuffle(w: &Permutation) -> Result<ShuffleElement> {
    let n = w.n();
    let valid: Vec<ShuffleElement> =
        (n % 2..=n).step_by(2).filter_map(|k| ShuffleElement::new(w.clone(), k).ok()).collect();
    match valid.len() {
        1 => Ok(valid.into_iter().next().expect("one element")),
        0 => Err(Error::InvalidShuffle(format!("{w} is not a shuffle for any k"))),
        _ => Err(Error::InvalidShuffle(format!("{w} is a shuffle for several k; pass --k"))),
    }
}

fn enumerate(family: Family, n: usize, k: Option<usize>, j: Option<usize>) -> Result<Vec<Record>> {
    if let (Some(k), Some(j)) = (k, j) {
        crate::tableau::check_nkj(n, k, j)?;
    } else if let Some(k) = k {
        crate::tableau::check_nk(n, k)?;
    }
    let mut rows = Vec::new();
    match family {
        Family::Matchings | Family::Involutions => {
            let ms = match k {
                Some(k) => enumerate_matchings(n, k)?,
                None => enumerate_all_matchings(n),
            };
            for m in ms.iter().filter(|m| j.is_none_or(|j| m.nesting_number() == j)) {
                let object = match family {
                    Family::Matchings => m.to_string(),
                    _ => cycles(&m.to_involution()),
                };
                let mut r = rec(&[("object", object)]);
                r.extend(matching_record(m));
                rows.push(r);
            }
        }
        Family::Syt => {
            for t in enumerate_syt_n(n) {
                let shape = t.shape();
                if k.is_some_and(|k| shape.odd_cols() != k) || j.is_some_and(|j| shape.height() / 2 != j) {
                    continue;
                }
                let mut r = rec(&[("object", t.to_string()), ("des", t.des()?.to_string())]);
                r.extend(shape_record(&t));
                r.push(("cdes".into(), cdes_syt(&t)?.to_string()));
                rows.push(r);
            }
        }
    }
    Ok(rows)
}

fn render_orbits(format: Format, n: usize, k: usize, j: Option<usize>, syt: bool) -> Result<String> {
    let js: Vec<usize> = match j {
        Some(j) => {
            crate::tableau::check_nkj(n, k, j)?;
            vec![j]
        }
        None => {
            crate::tableau::check_nk(n, k)?;
            (0..=(n - k) / 2).collect()
        }
    };
    // each orbit as a list of (element, cDes)
    let mut all: Vec<Vec<(String, String)>> = Vec::new();
    for j in js {
        if syt {
            let ground = crate::tableau::enumerate_syt_nkj(n, k, j)?;
            for orbit in orbits(&ground, p_map_syt)? {
                all.push(orbit.iter().map(|t| Ok((t.to_string(), cdes_syt(t)?.to_string()))).collect::<Result<_>>()?);
            }
        } else {
            let ground = crate::matching::enumerate_inkj(n, k, j)?;
            for orbit in orbits(&ground, p_map_involution)? {
                all.push(
                    orbit.iter().map(|p| Ok((cycles(p), cdes_involution(p)?.to_string()))).collect::<Result<_>>()?,
                );
            }
        }
    }
    match format {
        Format::Plain => {
            let mut s = String::new();
            for (i, orbit) in all.iter().enumerate() {
                let chain: Vec<String> = orbit.iter().map(|(x, d)| format!("{x} {d}")).collect();
                s.push_str(&format!("orbit {} (size {}): {}\n", i + 1, orbit.len(), chain.join(" -> ")));
            }
            Ok(s)
        }
        Format::Json => {
            let value: Vec<Value> = all
                .iter()
                .map(|orbit| {
                    let elems: Vec<Value> = orbit.iter().map(|(x, d)| json!({"element": x, "cdes": d})).collect();
                    json!({"size": orbit.len(), "elements": elems})
                })
                .collect();
            Ok(serde_json::to_string_pretty(&value).expect("json") + "\n")
        }
        Format::Csv => {
            let rows: Vec<Record> = all
                .iter()
                .enumerate()
                .flat_map(|(i, orbit)| {
                    orbit.iter().enumerate().map(move |(pos, (x, d))| {
                        rec(&[
                            ("orbit", (i + 1).to_string()),
                            ("position", pos.to_string()),
                            ("element", x.clone()),
                            ("cdes", d.clone()),
                        ])
                    })
                })
                .collect();
            render_table(Format::Csv, &rows)
        }
    }
}

fn verify(
    identity: Identity,
    n: Option<usize>,
    k: Option<usize>,
    j: Option<usize>,
    max: Option<usize>,
    force: bool,
) -> Result<VerificationReport> {
    let size = if identity == Identity::Gessel { max.or(n) } else { n };
    let size = size.ok_or_else(|| {
        Error::Usage(if identity == Identity::Gessel { "--max is required" } else { "--n is required" }.into())
    })?;
    if size > VERIFY_GUARD && !force {
        return Err(Error::Usage(format!("size {size} exceeds {VERIFY_GUARD}; pass --force to run anyway")));
    }
    match identity {
        Identity::Main1 => verify_lemma_main1(size),
        Identity::Main11 => verify_matching_identity("main11", size, k),
        Identity::Main111 => verify_matching_identity("main111", size, k),
        Identity::Main0 => Ok(verify_main0(size)),
        Identity::Cdes => {
            let k = k.ok_or_else(|| Error::Usage("--k is required".into()))?;
            verify_cdes_classes(size, k, j)
        }
        Identity::Gessel => verify_gessel_all(size),
        Identity::Chen => verify_chen(size),
        Identity::SundaramRoundtrip => verify_sundaram_roundtrip(size),
        Identity::Kim => verify_kim(size),
        Identity::Roby => verify_roby(size),
    }
}

fn render_report(format: Format, report: &VerificationReport) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(report).expect("json") + "\n"),
        Format::Plain => {
            let mut s =
                format!("{} {} ({} ms)\n", report.identity, if report.ok { "ok" } else { "FAILED" }, report.elapsed_ms);
            if let Some(c) = &report.classification {
                s.push_str(&format!("classification: {c}\n"));
            }
            for (key, v) in &report.counts {
                s.push_str(&format!("{key}: {v}\n"));
            }
            for w in &report.witness_diff {
                s.push_str(&format!("  {w}\n"));
            }
            Ok(s)
        }
        Format::Csv => {
            let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
            let row = rec(&[
                ("identity", report.identity.clone()),
                ("n", opt(report.params.n)),
                ("k", opt(report.params.k)),
                ("j", opt(report.params.j)),
                ("max", opt(report.params.max)),
                ("ok", report.ok.to_string()),
                ("elapsed_ms", report.elapsed_ms.to_string()),
                ("classification", report.classification.clone().unwrap_or_default()),
            ]);
            render_table(Format::Csv, &[row])
        }
    }
}

/// One record: `key: value` lines for plain output, a JSON object, or a
/// one-row CSV table.
fn render_record(format: Format, record: &Record) -> Result<String> {
    match format {
        Format::Plain => Ok(record.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()),
        Format::Json => Ok(serde_json::to_string_pretty(&record_json(record)).expect("json") + "\n"),
        Format::Csv => render_table(Format::Csv, std::slice::from_ref(record)),
    }
}

fn record_json(record: &Record) -> Value {
    Value::Object(record.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect::<Map<_, _>>())
}

/// Rows sharing one column list: CSV with a header row, tab-separated text
/// for plain output, or a JSON array of objects.
fn render_table(format: Format, rows: &[Record]) -> Result<String> {
    match format {
        Format::Json => {
            let value: Vec<Value> = rows.iter().map(record_json).collect();
            Ok(serde_json::to_string_pretty(&value).expect("json") + "\n")
        }
        Format::Csv | Format::Plain => {
            let delimiter = if format == Format::Csv { b',' } else { b'\t' };
            let mut w = csv::WriterBuilder::new().delimiter(delimiter).from_writer(Vec::new());
            let header: Vec<&str> = match rows.first() {
                Some(r) => r.iter().map(|(k, _)| k.as_str()).collect(),
                None => vec!["object"],
            };
            let csv_err = |e: csv::Error| Error::Usage(e.to_string());
            w.write_record(&header).map_err(csv_err)?;
            for r in rows {
                w.write_record(r.iter().map(|(_, v)| v.as_str())).map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Usage(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("utf-8"))
        }
    }
}
