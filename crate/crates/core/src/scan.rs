//! Batch checking of genus-2 curves `y^2 + h(x) y = f(x)` read from CSV or
//! JSON-lines exports.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::RatPoly;
use crate::error::{Error, Result};
use crate::galois::{check_theorem_hypotheses, CheckReport, EvidenceParams};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveRecord {
    pub label: String,
    /// Constant term first.
    pub f: Vec<BigInt>,
    pub h: Vec<BigInt>,
    pub conductor: Option<String>,
    pub discriminant: Option<String>,
}

fn degree(c: &[BigInt]) -> Option<usize> {
    c.iter().rposition(|x| x != &BigInt::from(0))
}

impl CurveRecord {
    pub fn new(label: &str, f: &[i64], h: &[i64]) -> Result<Self> {
        let rec = CurveRecord {
            label: label.into(),
            f: f.iter().map(|&x| x.into()).collect(),
            h: h.iter().map(|&x| x.into()).collect(),
            conductor: None,
            discriminant: None,
        };
        rec.validate()?;
        Ok(rec)
    }

    pub fn validate(&self) -> Result<()> {
        if degree(&self.f).is_some_and(|d| d > 6) {
            return Err(Error::Parse(format!("{}: deg f > 6", self.label)));
        }
        if degree(&self.h).is_some_and(|d| d > 3) {
            return Err(Error::Parse(format!("{}: deg h > 3", self.label)));
        }
        Ok(())
    }

    pub fn f_poly(&self) -> RatPoly {
        RatPoly::from_bigints(&self.f)
    }

    pub fn h_poly(&self) -> RatPoly {
        RatPoly::from_bigints(&self.h)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NotApplicable {
    /// `4f + h^2` has degree 5: a rational Weierstrass point at infinity.
    #[serde(rename = "degree5")]
    Degree5,
    #[serde(rename = "degree_below_5")]
    DegreeBelow5,
    #[serde(rename = "nonsquarefree")]
    NotSquarefree,
}

/// `g = 4f + h^2`, so that `(2y + h)^2 = g`.
pub fn simplify_model(rec: &CurveRecord) -> std::result::Result<RatPoly, NotApplicable> {
    let h = rec.h_poly();
    let g = rec.f_poly().scale(&crate::arith::int(4)) + &h * &h;
    match g.degree() {
        Some(6) if g.is_squarefree() => Ok(g),
        Some(6) => Err(NotApplicable::NotSquarefree),
        Some(5) => Err(NotApplicable::Degree5),
        _ => Err(NotApplicable::DegreeBelow5),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ingested {
    pub records: Vec<CurveRecord>,
    pub errors: Vec<RowError>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    JsonLines,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "jsonl" | "jsonlines" => Ok(Format::JsonLines),
            _ => Err(Error::Parse(format!("unknown format `{s}` (csv or jsonl)"))),
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<BigInt>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.is_empty() {
        return Ok(vec![]);
    }
    s.split([':', ','])
        .map(|x| {
            x.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("bad coefficient `{x}`")))
        })
        .collect()
}

pub fn ingest_csv<R: std::io::Read>(input: R) -> Result<Ingested> {
    let mut rdr = csv::ReaderBuilder::new()
        .flexible(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(input);
    let headers = rdr
        .headers()
        .map_err(|e| Error::Parse(e.to_string()))?
        .clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::MissingColumn(name.into()))
    };
    let (il, i_f, ih) = (col("label")?, col("f")?, col("h")?);
    let (ic, id) = (col("conductor").ok(), col("discriminant").ok());

    let mut out = Ingested::default();
    for (i, row) in rdr.records().enumerate() {
        let line = match &row {
            Ok(r) => r.position().map(|p| p.line() as usize),
            Err(e) => e.position().map(|p| p.line() as usize),
        }
        .unwrap_or(i + 2);
        let parsed = row.map_err(|e| Error::Parse(e.to_string())).and_then(|r| {
            let get = |k: usize| {
                r.get(k)
                    .ok_or_else(|| Error::Parse(format!("row has no column {k}")))
            };
            let opt = |k: Option<usize>| {
                k.and_then(|k| r.get(k))
                    .filter(|s| !s.is_empty())
                    .map(String::from)
            };
            let rec = CurveRecord {
                label: get(il)?.to_string(),
                f: parse_list(get(i_f)?)?,
                h: parse_list(get(ih)?)?,
                conductor: opt(ic),
                discriminant: opt(id),
            };
            rec.validate()?;
            Ok(rec)
        });
        match parsed {
            Ok(rec) => out.records.push(rec),
            Err(e) => out.errors.push(RowError {
                line,
                message: e.to_string(),
            }),
        }
    }
    Ok(out)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coeff {
    Int(i64),
    Str(String),
}

#[derive(Deserialize)]
struct JsonRecord {
    label: String,
    f: Vec<Coeff>,
    #[serde(default)]
    h: Vec<Coeff>,
    conductor: Option<serde_json::Value>,
    discriminant: Option<serde_json::Value>,
}

fn coeffs(v: Vec<Coeff>) -> Result<Vec<BigInt>> {
    v.into_iter()
        .map(|c| match c {
            Coeff::Int(n) => Ok(BigInt::from(n)),
            Coeff::Str(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{s}`"))),
        })
        .collect()
}

fn meta(v: Option<serde_json::Value>) -> Option<String> {
    v.map(|v| match v {
        serde_json::Value::String(s) => s,
        other => other.to_string(),
    })
}

pub fn ingest_jsonl<R: BufRead>(input: R) -> Result<Ingested> {
    let mut out = Ingested::default();
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let text = line?;
        if text.trim().is_empty() {
            continue;
        }
        let parsed = serde_json::from_str::<JsonRecord>(&text)
            .map_err(|e| Error::Parse(e.to_string()))
            .and_then(|j| {
                let rec = CurveRecord {
                    label: j.label,
                    f: coeffs(j.f)?,
                    h: coeffs(j.h)?,
                    conductor: meta(j.conductor),
                    discriminant: meta(j.discriminant),
                };
                rec.validate()?;
                Ok(rec)
            });
        match parsed {
            Ok(rec) => out.records.push(rec),
            Err(e) => out.errors.push(RowError {
                line: line_no,
                message: e.to_string(),
            }),
        }
    }
    Ok(out)
}

pub fn ingest(path: &Path, format: Format) -> Result<Ingested> {
    let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    match format {
        Format::Csv => ingest_csv(file),
        Format::JsonLines => ingest_jsonl(BufReader::new(file)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub pmax: u64,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            pmax: 500,
            seed: 0,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Checked {
        model: String,
        report: Box<CheckReport>,
    },
    NotApplicable {
        reason: NotApplicable,
    },
    Error {
        message: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecordResult {
    pub label: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl RecordResult {
    pub fn verdict(&self) -> &'static str {
        match &self.outcome {
            Outcome::Checked { report, .. } if report.pass => "pass",
            Outcome::Checked { .. } => "fail",
            Outcome::NotApplicable { .. } => "not_applicable",
            Outcome::Error { .. } => "error",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub error: usize,
}

/// Settings that determine the report. The worker count does not, so it is
/// left out to keep reports identical across machines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub pmax: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub config: ConfigEcho,
    pub summary: Summary,
    pub results: Vec<RecordResult>,
    pub row_errors: Vec<RowError>,
}

pub fn check_record(rec: &CurveRecord, cfg: &ScanConfig) -> RecordResult {
    let outcome = match simplify_model(rec) {
        Err(reason) => Outcome::NotApplicable { reason },
        Ok(g) => {
            let params = EvidenceParams {
                prime_bound: cfg.pmax,
                seed: cfg.seed,
            };
            match check_theorem_hypotheses(&g, None, params) {
                Ok(report) => Outcome::Checked {
                    model: g.to_coeff_list(),
                    report: Box::new(report),
                },
                Err(e) => Outcome::Error {
                    message: e.to_string(),
                },
            }
        }
    };
    RecordResult {
        label: rec.label.clone(),
        outcome,
    }
}

/// Checks every record on `cfg.jobs` workers; results keep input order.
pub fn scan(records: &[CurveRecord], cfg: &ScanConfig) -> Result<ScanReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let results: Vec<RecordResult> =
        pool.install(|| records.par_iter().map(|r| check_record(r, cfg)).collect());
    let mut summary = Summary::default();
    for r in &results {
        match r.verdict() {
            "pass" => summary.pass += 1,
            "fail" => summary.fail += 1,
            "not_applicable" => summary.not_applicable += 1,
            _ => summary.error += 1,
        }
    }
    Ok(ScanReport {
        config: ConfigEcho {
            pmax: cfg.pmax,
            seed: cfg.seed,
        },
        summary,
        results,
        row_errors: vec![],
    })
}

impl ScanReport {
    /// Folds ingestion failures into the report; each counts as an error.
    pub fn with_row_errors(mut self, errors: Vec<RowError>) -> Self {
        self.summary.error += errors.len();
        self.row_errors = errors;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per record: label, verdict, real_roots, galois_verdict, reasons.
    pub fn write_summary_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record([
            "label",
            "verdict",
            "real_roots",
            "galois_verdict",
            "reasons",
        ])
        .map_err(io)?;
        for r in &self.results {
            let (roots, galois, reasons) = match &r.outcome {
                Outcome::Checked { report, .. } => (
                    report.real_roots.map(|n| n.to_string()).unwrap_or_default(),
                    format!("{:?}", report.galois.verdict),
                    report.reasons.join("; "),
                ),
                Outcome::NotApplicable { reason } => (
                    String::new(),
                    String::new(),
                    serde_json::to_value(reason)
                        .ok()
                        .and_then(|v| v.as_str().map(String::from))
                        .unwrap_or_default(),
                ),
                Outcome::Error { message } => (String::new(), String::new(), message.clone()),
            };
            w.write_record([r.label.as_str(), r.verdict(), &roots, &galois, &reasons])
                .map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplify_examples() {
        let r = CurveRecord::new("a", &[0, 0, 0, 0, 0, 0, 1], &[1]).unwrap();
        assert_eq!(
            simplify_model(&r).unwrap(),
            RatPoly::from_ints(&[1, 0, 0, 0, 0, 0, 4])
        );
        let r = CurveRecord::new("b", &[0, 0, 0, 0, 0, 1], &[1, 1]).unwrap();
        assert_eq!(simplify_model(&r), Err(NotApplicable::Degree5));
        let r = CurveRecord::new("c", &[11, 64, 80, 40, 0, 4, 1], &[]).unwrap();
        assert_eq!(
            simplify_model(&r).unwrap(),
            RatPoly::from_ints(&[44, 256, 320, 160, 0, 16, 4])
        );
        let r = CurveRecord::new("d", &[1, 2, 1], &[]).unwrap();
        assert_eq!(simplify_model(&r), Err(NotApplicable::DegreeBelow5));
        // (x^3 - 1)^2 / 4 is a square
        let r = CurveRecord::new("e", &[0, 0, 0, 0, 0, 0, 0], &[-1, 0, 0, 1]).unwrap();
        assert_eq!(simplify_model(&r), Err(NotApplicable::NotSquarefree));
    }

    #[test]
    fn csv_rows() {
        let text = "label,f,h\n43e,11:64:80:40:0:4:1,0\nbig,1:0:0:0:0:0:0:1,0\nbad,1:x,0\n";
        let got = ingest_csv(text.as_bytes()).unwrap();
        assert_eq!(got.records.len(), 1);
        assert_eq!(
            got.records[0],
            CurveRecord::new("43e", &[11, 64, 80, 40, 0, 4, 1], &[0]).unwrap()
        );
        assert_eq!(
            got.errors.iter().map(|e| e.line).collect::<Vec<_>>(),
            vec![3, 4]
        );
        let commented = "# note\nlabel,f,h\n# skipped\n43e,11:64:80:40:0:4:1,0\nbad,1:x,0\n";
        let got = ingest_csv(commented.as_bytes()).unwrap();
        assert_eq!(got.records.len(), 1);
        assert_eq!(got.errors[0].line, 5);
        assert_eq!(
            ingest_csv("label,f\n1,2\n".as_bytes()),
            Err(Error::MissingColumn("h".into()))
        );
    }

    #[test]
    fn jsonl_matches_csv() {
        let j = "{\"label\":\"43e\",\"f\":[11,64,80,40,0,4,1],\"h\":[0]}\n\n";
        let a = ingest_jsonl(j.as_bytes()).unwrap();
        let b = ingest_csv("label,f,h\n43e,11:64:80:40:0:4:1,0\n".as_bytes()).unwrap();
        assert_eq!(a, b);
        let bad = ingest_jsonl("{\"label\":1}\n".as_bytes()).unwrap();
        assert_eq!(bad.errors.len(), 1);
    }

    #[test]
    fn scan_counts() {
        let recs = vec![
            CurveRecord::new("explicit", &[11, 64, 80, 40, 0, 4, 1], &[]).unwrap(),
            CurveRecord::new("x6+1", &[1, 0, 0, 0, 0, 0, 1], &[]).unwrap(),
            CurveRecord::new("deg5", &[0, 0, 0, 0, 0, 1], &[1, 1]).unwrap(),
        ];
        let rep = scan(&recs, &ScanConfig::default()).unwrap();
        assert_eq!(
            rep.summary,
            Summary {
                pass: 1,
                fail: 1,
                not_applicable: 1,
                error: 0
            }
        );
        let empty = scan(&[], &ScanConfig::default()).unwrap();
        assert_eq!(empty.summary, Summary::default());
        assert!(empty.results.is_empty());

        let mut buf = Vec::new();
        rep.write_summary_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("label,verdict,real_roots,galois_verdict,reasons\n"));
        assert!(text.contains("explicit,pass,2,ConsistentS5a,"));
        assert!(text.contains("deg5,not_applicable,,,degree5"));
    }
}
