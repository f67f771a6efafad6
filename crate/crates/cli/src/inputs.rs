//! Turning command-line arguments into kernel values: built-in literals or JSON
//! files, with the ring and shape flags checked against what the files say.

use std::path::Path;

use freeprob::io;
use freeprob::probmodel::{self, CumulantTable, JointDistribution};
use freeprob::ring::{Coeff, RingDescriptor};
use freeprob::series::{TruncSeries, Word};
use freeprob::wittlog::{LambdaElement, OneDimLaw};
use freeprob::{boxconv, Error};

use crate::Global;

#[derive(Debug)]
pub struct CliError {
    pub category: String,
    pub message: String,
    /// printed to the output before the error is reported
    pub output: Option<String>,
}

impl CliError {
    pub fn new(category: &str, message: impl Into<String>) -> Self {
        CliError { category: category.into(), message: message.into(), output: None }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new("usage", message)
    }

    pub fn exit_code(&self) -> u8 {
        if self.category == "usage" {
            2
        } else {
            1
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::new(e.category(), e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

const SERIES_LITERALS: [&str; 3] = ["zeta", "moeb", "unit"];
const LAW_PREFIXES: [&str; 3] = ["dirac:", "semicircle:", "poisson:"];

/// `name=literal` → (`name`, `literal`).
fn split_name(text: &str) -> (Option<&str>, &str) {
    match text.split_once('=') {
        Some((name, rest)) if !name.is_empty() && is_literal(rest) => (Some(name), rest),
        _ => (None, text),
    }
}

pub fn is_literal(text: &str) -> bool {
    let text = match text.split_once('=') {
        Some((_, rest)) => rest,
        None => text,
    };
    SERIES_LITERALS.contains(&text) || text.starts_with("lambda:") || LAW_PREFIXES.iter().any(|p| text.starts_with(p))
}

pub fn read_file(path: &str) -> CliResult<String> {
    std::fs::read_to_string(Path::new(path)).map_err(|e| CliError::new("io", format!("cannot read {path}: {e}")))
}

/// The ring for this invocation: from the input files, which must agree with each
/// other and with `--ring`.
pub fn detect_ring(global: &Global, inputs: &[&str]) -> CliResult<RingDescriptor> {
    let flag = global.ring.as_deref().map(str::parse::<RingDescriptor>).transpose().map_err(|e| CliError::usage(e.to_string()))?;
    let mut found: Option<RingDescriptor> = None;
    for text in inputs.iter().filter(|t| !is_literal(t)) {
        let r = io::peek_ring(&read_file(text)?)?;
        if let Some(prev) = found {
            if prev != r {
                return Err(CliError::new("ring-mismatch", format!("inputs use rings {prev} and {r}")));
            }
        }
        found = Some(r);
    }
    match (found, flag) {
        (Some(f), Some(g)) if f != g => {
            Err(CliError::new("ring-mismatch", format!("--ring {g} conflicts with input ring {f}")))
        }
        (Some(f), _) => Ok(f),
        (None, Some(g)) => Ok(g),
        (None, None) => Ok(RingDescriptor::Rational),
    }
}

pub struct Ctx<'a> {
    pub ring: RingDescriptor,
    pub global: &'a Global,
}

impl Ctx<'_> {
    pub fn order(&self, what: &str) -> CliResult<usize> {
        self.global.order.ok_or_else(|| CliError::usage(format!("{what} needs --order")))
    }

    fn check_shape(&self, s: Option<usize>, order: usize) -> CliResult<()> {
        if let (Some(flag), Some(file)) = (self.global.s, s) {
            if flag != file {
                return Err(CliError::new("shape-mismatch", format!("--s {flag} but the input has s={file}")));
            }
        }
        if let Some(flag) = self.global.order {
            if flag != order {
                return Err(CliError::new("shape-mismatch", format!("--order {flag} but the input has order {order}")));
            }
        }
        Ok(())
    }

    fn value<R: Coeff>(&self, text: &str) -> CliResult<R> {
        Ok(R::parse(&self.ring, text)?)
    }

    fn law_literal<R: Coeff>(&self, text: &str) -> CliResult<Option<JointDistribution<R>>> {
        let parts: Vec<&str> = text.split(':').collect();
        let d = match parts.as_slice() {
            ["dirac", a] => probmodel::law_dirac(&self.value::<R>(a)?, self.order("dirac")?)?,
            ["semicircle", a, r2] => {
                probmodel::law_semicircle(&self.value::<R>(a)?, &self.value::<R>(r2)?, self.order("semicircle")?)?
            }
            ["poisson", l, a] => {
                probmodel::law_free_poisson(&self.value::<R>(l)?, &self.value::<R>(a)?, self.order("poisson")?)?
            }
            _ if LAW_PREFIXES.iter().any(|p| text.starts_with(p)) => {
                return Err(CliError::usage(format!("malformed law literal `{text}`")))
            }
            _ => return Ok(None),
        };
        Ok(Some(d))
    }

    /// A series: `zeta`, `moeb`, `unit`, a law literal (its moment series), a series
    /// file or a distribution file (its moment table).
    pub fn series<R: Coeff>(&self, text: &str) -> CliResult<TruncSeries<R>> {
        let (_, body) = split_name(text);
        if SERIES_LITERALS.contains(&body) {
            let s = self.global.s.unwrap_or(1);
            let order = self.order(body)?;
            return Ok(match body {
                "zeta" => boxconv::zeta_series(s, order, self.ring)?,
                "moeb" => boxconv::moeb_series(s, order, self.ring)?,
                _ => boxconv::unit_series(s, order, self.ring)?,
            });
        }
        if let Some(d) = self.law_literal::<R>(body)? {
            return Ok(d.table().clone());
        }
        if body.starts_with("lambda:") {
            return Err(CliError::usage("a lambda literal is not a series"));
        }
        let json = read_file(body)?;
        let f = if json.contains("\"generators\"") {
            io::distribution_from_json::<R>(&json)?.table().clone()
        } else {
            io::series_from_json::<R>(&json)?
        };
        self.check_shape(Some(f.s()), f.order())?;
        Ok(f)
    }

    /// A distribution: a law literal, optionally named (`y=dirac:2`), or a file.
    pub fn distribution<R: Coeff>(&self, text: &str) -> CliResult<JointDistribution<R>> {
        let (name, body) = split_name(text);
        if let Some(d) = self.law_literal::<R>(body)? {
            return Ok(match name {
                Some(n) => probmodel::rename(&d, &[n])?,
                None => d,
            });
        }
        if is_literal(body) {
            return Err(CliError::usage(format!("`{body}` is not a distribution")));
        }
        let d = io::distribution_from_json::<R>(&read_file(body)?)?;
        self.check_shape(None, d.order())?;
        Ok(d)
    }

    pub fn cumulants<R: Coeff>(&self, text: &str) -> CliResult<CumulantTable<R>> {
        let c = io::cumulants_from_json::<R>(&read_file(text)?)?;
        self.check_shape(None, c.order())?;
        Ok(c)
    }

    pub fn law<R: Coeff>(&self, text: &str) -> CliResult<OneDimLaw<R>> {
        Ok(OneDimLaw::from_distribution(&self.distribution::<R>(text)?)?)
    }

    /// `lambda:c1,c2,…` or a power-series file with constant term 1.
    pub fn lambda<R: Coeff>(&self, text: &str) -> CliResult<LambdaElement<R>> {
        let f = if let Some(list) = text.strip_prefix("lambda:") {
            let coeffs = list.split(',').map(|c| self.value::<R>(c)).collect::<CliResult<Vec<R>>>()?;
            LambdaElement::new(self.ring, coeffs)?
        } else {
            io::lambda_from_json::<R>(&read_file(text)?)?
        };
        self.check_shape(None, f.order())?;
        Ok(f)
    }
}

/// `1,2`, `(1,2)` or `12` (single-digit letters).
pub fn parse_word(text: &str) -> CliResult<Word> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let letters: Vec<u8> = if inner.contains(',') {
        inner
            .split(',')
            .map(|l| l.trim().parse::<u8>().map_err(|_| CliError::usage(format!("bad letter in `{text}`"))))
            .collect::<CliResult<_>>()?
    } else {
        inner
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| CliError::usage(format!("bad word `{text}`"))))
            .collect::<CliResult<_>>()?
    };
    Word::new(letters).map_err(|e| CliError::usage(e.to_string()))
}

/// `a1,a2;b1` → `[["a1","a2"],["b1"]]`.
pub fn parse_groups(text: &str) -> Vec<Vec<String>> {
    text.split(';')
        .map(|g| g.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect())
        .collect()
}

pub fn parse_names(text: &str) -> Vec<String> {
    text.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()
}
