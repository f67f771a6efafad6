//! JSON file formats. Values are exact strings (`"3/4"`, `"-2"`), words are lists
//! of 1-based letters, and only nonzero coefficients are written, in canonical
//! word order, so equal values serialize to identical bytes.
//!
//! ```json
//! {"s":2,"order":3,"ring":"rational","coeffs":[{"word":[1,2],"value":"3/4"}]}
//! ```
//!
//! Distributions replace `"s"` by `"generators"` and add `"kind"` (`"moments"` or
//! `"cumulants"`); one-variable power series are `{"ring", "coeffs": [z^0, z^1, …]}`;
//! matrices carry a `"basis"` legend and row-major `"rows"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{GenPolynomial, Monomial};
use crate::probmodel::{CumulantTable, JointDistribution};
use crate::rep::{rep_basis, RepMatrix};
use crate::ring::{Coeff, RingDescriptor};
use crate::series::{TruncSeries, Word};
use crate::wittlog::{LambdaElement, OneDimLaw, PowerSeries1d};

#[derive(Serialize, Deserialize)]
struct CoeffEntry {
    word: Vec<u8>,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesFile {
    s: usize,
    order: usize,
    ring: String,
    coeffs: Vec<CoeffEntry>,
}

#[derive(Serialize, Deserialize)]
struct DistributionFile {
    generators: Vec<String>,
    #[serde(default = "moments_kind")]
    kind: String,
    order: usize,
    ring: String,
    coeffs: Vec<CoeffEntry>,
}

fn moments_kind() -> String {
    "moments".into()
}

#[derive(Serialize, Deserialize)]
struct PowerSeriesFile {
    ring: String,
    coeffs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    s: usize,
    order: usize,
    ring: String,
    basis: Vec<String>,
    rows: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialFile {
    s: usize,
    polynomial: String,
}

#[derive(Deserialize)]
struct RingOnly {
    ring: String,
}

fn malformed(e: serde_json::Error) -> Error {
    Error::Malformed(e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// The ring named by a JSON document, so callers can pick the coefficient type.
pub fn peek_ring(json: &str) -> Result<RingDescriptor> {
    let r: RingOnly = serde_json::from_str(json).map_err(malformed)?;
    r.ring.parse()
}

fn entries<R: Coeff>(f: &TruncSeries<R>) -> Vec<CoeffEntry> {
    f.terms()
        .map(|(w, v)| CoeffEntry { word: w.letters().to_vec(), value: v.to_string() })
        .collect()
}

fn check_ring<R: Coeff>(name: &str) -> Result<RingDescriptor> {
    let ring: RingDescriptor = name.parse()?;
    if !R::supports(&ring) {
        return Err(Error::RingMismatch(format!("file ring {ring} does not match the requested coefficients")));
    }
    Ok(ring)
}

fn fill<R: Coeff>(s: usize, order: usize, ring: RingDescriptor, coeffs: &[CoeffEntry]) -> Result<TruncSeries<R>> {
    let mut f = TruncSeries::zero(s, order, ring)?;
    for e in coeffs {
        let w = Word::new(e.word.clone()).map_err(|err| Error::Malformed(err.to_string()))?;
        if w.max_letter() as usize > s {
            return Err(Error::Malformed(format!("word {w} uses a letter beyond s={s}")));
        }
        if w.len() > order {
            return Err(Error::Malformed(format!("word {w} is longer than the order {order}")));
        }
        f.set(&w, R::parse(&ring, &e.value)?)?;
    }
    Ok(f)
}

pub fn series_to_json<R: Coeff>(f: &TruncSeries<R>) -> String {
    to_json(&SeriesFile { s: f.s(), order: f.order(), ring: f.ring().to_string(), coeffs: entries(f) })
}

pub fn series_from_json<R: Coeff>(json: &str) -> Result<TruncSeries<R>> {
    let file: SeriesFile = serde_json::from_str(json).map_err(malformed)?;
    let ring = check_ring::<R>(&file.ring)?;
    fill(file.s, file.order, ring, &file.coeffs)
}

fn table_to_json<R: Coeff>(generators: &[String], kind: &str, t: &TruncSeries<R>) -> String {
    to_json(&DistributionFile {
        generators: generators.to_vec(),
        kind: kind.into(),
        order: t.order(),
        ring: t.ring().to_string(),
        coeffs: entries(t),
    })
}

fn table_from_json<R: Coeff>(json: &str, kind: &str) -> Result<(Vec<String>, TruncSeries<R>)> {
    let file: DistributionFile = serde_json::from_str(json).map_err(malformed)?;
    if file.kind != kind {
        return Err(Error::Malformed(format!("expected a {kind} table, found {}", file.kind)));
    }
    let ring = check_ring::<R>(&file.ring)?;
    let table = fill(file.generators.len(), file.order, ring, &file.coeffs)?;
    Ok((file.generators, table))
}

pub fn distribution_to_json<R: Coeff>(d: &JointDistribution<R>) -> String {
    table_to_json(d.generators(), "moments", d.table())
}

pub fn distribution_from_json<R: Coeff>(json: &str) -> Result<JointDistribution<R>> {
    let (g, t) = table_from_json(json, "moments")?;
    JointDistribution::new(g, t)
}

pub fn cumulants_to_json<R: Coeff>(c: &CumulantTable<R>) -> String {
    table_to_json(c.generators(), "cumulants", c.table())
}

pub fn cumulants_from_json<R: Coeff>(json: &str) -> Result<CumulantTable<R>> {
    let (g, t) = table_from_json(json, "cumulants")?;
    CumulantTable::new(g, t)
}

/// One-dimensional laws use the single-generator distribution format.
pub fn law_to_json<R: Coeff>(law: &OneDimLaw<R>) -> Result<String> {
    Ok(distribution_to_json(&law.to_distribution()?))
}

pub fn law_from_json<R: Coeff>(json: &str) -> Result<OneDimLaw<R>> {
    OneDimLaw::from_distribution(&distribution_from_json(json)?)
}

pub fn power_series_to_json<R: Coeff>(p: &PowerSeries1d<R>) -> String {
    to_json(&PowerSeriesFile { ring: p.ring().to_string(), coeffs: p.coeffs().iter().map(|c| c.to_string()).collect() })
}

pub fn power_series_from_json<R: Coeff>(json: &str) -> Result<PowerSeries1d<R>> {
    let file: PowerSeriesFile = serde_json::from_str(json).map_err(malformed)?;
    let ring = check_ring::<R>(&file.ring)?;
    let coeffs = file.coeffs.iter().map(|c| R::parse(&ring, c)).collect::<Result<Vec<_>>>()?;
    PowerSeries1d::new(ring, coeffs)
}

/// Elements of `Λ` are written as power series with constant term 1.
pub fn lambda_to_json<R: Coeff>(f: &LambdaElement<R>) -> String {
    power_series_to_json(&f.to_series())
}

pub fn lambda_from_json<R: Coeff>(json: &str) -> Result<LambdaElement<R>> {
    LambdaElement::from_series(&power_series_from_json(json)?)
}

pub fn matrix_to_json<R: Coeff>(m: &RepMatrix<R>, s: usize) -> String {
    to_json(&MatrixFile {
        s,
        order: m.max_weight(),
        ring: m.ring().to_string(),
        basis: m.basis().iter().map(Monomial::to_string).collect(),
        rows: m.rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect(),
    })
}

pub fn matrix_from_json<R: Coeff>(json: &str) -> Result<RepMatrix<R>> {
    let file: MatrixFile = serde_json::from_str(json).map_err(malformed)?;
    let ring = check_ring::<R>(&file.ring)?;
    let basis = rep_basis(file.s, file.order);
    let legend: Vec<String> = basis.iter().map(Monomial::to_string).collect();
    if legend != file.basis {
        return Err(Error::Malformed("basis legend does not match s and order".into()));
    }
    let rows = file
        .rows
        .iter()
        .map(|r| r.iter().map(|v| R::parse(&ring, v)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    RepMatrix::from_rows(ring, basis, rows)
}

pub fn polynomial_to_json(p: &GenPolynomial) -> String {
    to_json(&PolynomialFile { s: p.s(), polynomial: p.to_string() })
}

pub fn polynomial_from_json(json: &str) -> Result<GenPolynomial> {
    let file: PolynomialFile = serde_json::from_str(json).map_err(malformed)?;
    let p: GenPolynomial = file.polynomial.parse()?;
    if p.s() > file.s {
        return Err(Error::Malformed(format!("polynomial uses letters beyond s={}", file.s)));
    }
    Ok(p.with_s(file.s))
}
