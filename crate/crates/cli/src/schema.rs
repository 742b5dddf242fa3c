//! JSON shapes shared by all subcommands.

use std::collections::BTreeMap;

use logdiff_core::arith::RatFunc;
use logdiff_core::forms::{DiffForm, IndexTuple, PBaseField};
use logdiff_core::milnor::MilnorSymbolSum;
use logdiff_core::presentation::FinAbGroup;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Debug)]
pub struct Envelope {
    pub schema_version: u32,
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct FieldJson {
    pub p: u32,
    #[serde(default)]
    pub vars: Option<Vec<String>>,
}

impl FieldJson {
    pub fn build(&self) -> Result<PBaseField, CliError> {
        let names = self.vars.clone().unwrap_or_else(|| vec!["t".to_string()]);
        PBaseField::with_names(self.p, names).map_err(CliError::usage)
    }
}

/// `{"p":2,"vars":["t","u"],"degree":1,"coeffs":{"1":"t","2":"1/u"}}`, keys
/// are one-based index tuples.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct FormJson {
    #[serde(default)]
    pub p: Option<u32>,
    #[serde(default)]
    pub vars: Option<Vec<String>>,
    pub degree: usize,
    pub coeffs: BTreeMap<String, String>,
}

/// Field from `--field` if given, else from the object's own `p`/`vars`.
pub fn resolve_field(flag: Option<&FieldJson>, p: Option<u32>, vars: Option<&Vec<String>>) -> Result<PBaseField, CliError> {
    match (flag, p) {
        (Some(f), _) => f.build(),
        (None, Some(p)) => FieldJson { p, vars: vars.cloned() }.build(),
        (None, None) => Err(CliError::usage("no field: pass --field or include \"p\" in the input")),
    }
}

pub fn parse_value(k: &PBaseField, s: &str) -> Result<RatFunc, CliError> {
    k.parse(s).map_err(CliError::usage)
}

fn parse_tuple(key: &str) -> Result<IndexTuple, CliError> {
    let key = key.trim().trim_start_matches('(').trim_end_matches(')');
    let indices = key
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| CliError::usage(format!("bad index tuple key {key:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    IndexTuple::new(&indices).map_err(CliError::usage)
}

fn tuple_key(s: IndexTuple) -> String {
    s.one_based().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}

impl FormJson {
    pub fn to_form(&self, k: &PBaseField) -> Result<DiffForm, CliError> {
        let mut coeffs = Vec::new();
        for (key, value) in &self.coeffs {
            coeffs.push((parse_tuple(key)?, parse_value(k, value)?));
        }
        DiffForm::from_coeffs(k, self.degree, coeffs).map_err(CliError::usage)
    }

    pub fn of(k: &PBaseField, a: &DiffForm) -> Self {
        let coeffs = a.coeffs().iter().map(|(s, x)| (tuple_key(*s), k.format(x))).collect();
        FormJson { p: Some(k.p()), vars: Some(k.names().to_vec()), degree: a.degree(), coeffs }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct TermJson {
    #[serde(default = "one")]
    pub coeff: u32,
    pub entries: Vec<String>,
}

fn one() -> u32 {
    1
}

/// `{"p":2,"vars":["t"],"terms":[{"coeff":1,"entries":["t","1+t"]}]}`.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SymbolJson {
    #[serde(default)]
    pub p: Option<u32>,
    #[serde(default)]
    pub vars: Option<Vec<String>>,
    #[serde(default)]
    pub degree: Option<usize>,
    pub terms: Vec<TermJson>,
}

impl SymbolJson {
    pub fn to_symbols(&self, k: &PBaseField) -> Result<MilnorSymbolSum, CliError> {
        let degree = match (self.degree, self.terms.first()) {
            (Some(n), _) => n,
            (None, Some(t)) => t.entries.len(),
            (None, None) => return Err(CliError::usage("empty symbol sum needs an explicit \"degree\"")),
        };
        let mut sigma = MilnorSymbolSum::new(degree);
        for t in &self.terms {
            let entries = t.entries.iter().map(|e| parse_value(k, e)).collect::<Result<Vec<_>, _>>()?;
            sigma.push(t.coeff % k.p(), entries).map_err(CliError::usage)?;
        }
        Ok(sigma)
    }

    pub fn of(k: &PBaseField, sigma: &MilnorSymbolSum) -> Self {
        let terms = sigma
            .terms
            .iter()
            .map(|(c, e)| TermJson { coeff: *c, entries: e.iter().map(|x| k.format(x)).collect() })
            .collect();
        SymbolJson { p: Some(k.p()), vars: Some(k.names().to_vec()), degree: Some(sigma.degree), terms }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct GroupJson {
    pub invariant_factors: Vec<u64>,
    pub free_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle_match: Option<bool>,
}

impl GroupJson {
    pub fn of(g: &FinAbGroup) -> Self {
        GroupJson { invariant_factors: g.invariant_factors.clone(), free_rank: g.free_rank, oracle_match: None }
    }
}

#[derive(Deserialize, Debug, Clone)]
pub struct RingJson {
    pub family: String,
    pub p: u32,
    pub n: u32,
}

#[derive(Deserialize, Debug, Clone)]
pub struct WittJson {
    #[serde(default)]
    pub p: Option<u32>,
    #[serde(default)]
    pub q: Option<u32>,
    pub i: usize,
    pub op: String,
    pub a: Vec<u32>,
    #[serde(default)]
    pub b: Option<Vec<u32>>,
}

#[derive(Deserialize, Debug, Clone)]
pub struct HsymJson {
    pub q: u32,
    pub i: usize,
    pub n: usize,
}

#[derive(Deserialize, Debug, Clone)]
pub struct NuBasisJson {
    #[serde(default)]
    pub p: Option<u32>,
    #[serde(default)]
    pub vars: Option<Vec<String>>,
    pub n: usize,
    pub bound: u32,
}

#[derive(Deserialize, Debug, Clone)]
pub struct SolveJson {
    #[serde(default)]
    pub p: Option<u32>,
    #[serde(default)]
    pub vars: Option<Vec<String>>,
    pub g: String,
    pub bound: u32,
}
