use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{default_names, parse_ratfunc, PrimeField, RatFunc, MAX_VARS};
use crate::{Error, Result};

/// `k = F_p(t_1..t_m)` with the p-base `t_1 < ... < t_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PBaseField {
    field: PrimeField,
    names: Vec<String>,
}

impl PBaseField {
    pub fn new(p: u32, m: usize) -> Result<Self> {
        Self::with_names(p, default_names(m))
    }

    pub fn with_names(p: u32, names: Vec<String>) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if names.is_empty() || names.len() > MAX_VARS {
            return Err(Error::UnsupportedVariables(names.len()));
        }
        Ok(PBaseField { field, names })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn m(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `t_{i+1}`.
    pub fn var(&self, i: usize) -> RatFunc {
        RatFunc::var(self.field, self.m(), i)
    }

    pub fn constant(&self, c: i64) -> RatFunc {
        RatFunc::constant(self.field, self.m(), c)
    }

    pub fn zero(&self) -> RatFunc {
        RatFunc::zero(self.field, self.m())
    }

    pub fn one(&self) -> RatFunc {
        RatFunc::one(self.field, self.m())
    }

    pub fn parse(&self, s: &str) -> Result<RatFunc> {
        let names: Vec<&str> = self.names.iter().map(|n| n.as_str()).collect();
        parse_ratfunc(s, self.field, &names)
    }

    pub fn format(&self, x: &RatFunc) -> String {
        x.to_string_with(&self.names)
    }

    pub(crate) fn check(&self, x: &RatFunc) -> Result<()> {
        if x.field() != self.field || x.nvars() != self.m() {
            return Err(Error::MismatchedParameters("element of a different field"));
        }
        Ok(())
    }
}

impl core::fmt::Display for PBaseField {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "F_{}({})", self.p(), self.names.join(","))
    }
}
