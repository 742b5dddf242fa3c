//! One function per subcommand: JSON input in, JSON payload out.

use logdiff_core::forms::{
    artin_schreier_class, nu_basis_bounded, nu_membership, normal_form_with_witness, solve_artin_schreier_bounded,
    DiffForm, PBaseField, TruncationSpec,
};
use logdiff_core::milnor::{d_k, kato_decompose};
use logdiff_core::presentation::{omega1_standard, omega_n_symbolic, FiniteLocalRing, RingFamily};
use logdiff_core::witt::{hsym_group, WittRing, WittVector};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::schema::*;
use crate::CliError;

pub struct Ctx {
    pub field: Option<FieldJson>,
}

pub fn decode<T: DeserializeOwned>(input: &Value) -> Result<T, CliError> {
    T::deserialize(input).map_err(|e| CliError::usage(format!("malformed input: {e}")))
}

fn read_form(ctx: &Ctx, input: &Value) -> Result<(PBaseField, DiffForm), CliError> {
    let f: FormJson = decode(input)?;
    let k = resolve_field(ctx.field.as_ref(), f.p, f.vars.as_ref())?;
    let a = f.to_form(&k)?;
    Ok((k, a))
}

fn form_value(k: &PBaseField, a: &DiffForm) -> Value {
    serde_json::to_value(FormJson::of(k, a)).expect("forms serialize")
}

#[derive(Deserialize)]
struct OmegaJson {
    #[serde(flatten)]
    ring: RingJson,
    #[serde(default = "default_degree")]
    degree: usize,
    #[serde(default = "default_k_max")]
    k_max: usize,
}

fn default_degree() -> usize {
    1
}

fn default_k_max() -> usize {
    3
}

fn ring_family(name: &str) -> Result<RingFamily, CliError> {
    match name {
        "truncated" => Ok(RingFamily::Truncated),
        "modpk" => Ok(RingFamily::ModPk),
        "square_zero" | "square_zero_2vars" => Ok(RingFamily::SquareZeroTwoVars),
        other => Err(CliError::usage(format!("unknown ring family {other:?}"))),
    }
}

pub fn omega(input: &Value) -> Result<Value, CliError> {
    let o: OmegaJson = decode(input)?;
    let ring = FiniteLocalRing::from_family(ring_family(&o.ring.family)?, o.ring.p, o.ring.n).map_err(CliError::usage)?;
    let g = omega_n_symbolic(&ring, o.degree, o.k_max)?;
    let mut out = GroupJson::of(&g);
    if o.degree == 1 {
        let oracle = omega1_standard(&ring)?;
        out.oracle_match = Some(oracle == g);
        if oracle != g {
            let payload = serde_json::to_value(&out).expect("groups serialize");
            return Err(CliError::domain(format!("oracle mismatch: standard presentation gives {oracle:?}")).with_payload(payload));
        }
    }
    Ok(serde_json::to_value(out).expect("groups serialize"))
}

pub fn nf(ctx: &Ctx, input: &Value) -> Result<Value, CliError> {
    let (k, a) = read_form(ctx, input)?;
    let (nf, xi) = normal_form_with_witness(&a)?;
    Ok(json!({ "normal_form": form_value(&k, &nf), "witness": form_value(&k, &xi) }))
}

pub fn nu_check(ctx: &Ctx, input: &Value) -> Result<Value, CliError> {
    let (k, a) = read_form(ctx, input)?;
    let class = artin_schreier_class(&a)?;
    Ok(json!({ "in_nu": nu_membership(&a)?, "class": form_value(&k, &class) }))
}

pub fn dsym(ctx: &Ctx, input: &Value) -> Result<Value, CliError> {
    let s: SymbolJson = decode(input)?;
    let k = resolve_field(ctx.field.as_ref(), s.p, s.vars.as_ref())?;
    let w = d_k(&k, &s.to_symbols(&k)?)?;
    Ok(form_value(&k, &w))
}

pub fn decompose(ctx: &Ctx, input: &Value) -> Result<Value, CliError> {
    let (k, w) = read_form(ctx, input)?;
    let r = kato_decompose(&k, &w)?;
    let image = &d_k(&k, &r.symbols)? + &r.residual;
    if !r.residual.is_zero() || image != w {
        return Err(CliError::domain("decomposition failed re-verification"));
    }
    Ok(json!({
        "symbols": SymbolJson::of(&k, &r.symbols),
        "residual": form_value(&k, &r.residual),
        "verified": true,
    }))
}

pub fn witt(input: &Value) -> Result<Value, CliError> {
    let w: WittJson = decode(input)?;
    let q = w.q.or(w.p).ok_or_else(|| CliError::usage("witt input needs \"p\" or \"q\""))?;
    let ring = WittRing::new(q, w.i).map_err(CliError::usage)?;
    let vector = |c: &Vec<u32>| ring.vector(c.clone()).map_err(CliError::usage);
    let a = vector(&w.a)?;
    let b = || -> Result<WittVector, CliError> {
        let b = w.b.as_ref().ok_or_else(|| CliError::usage(format!("op {:?} needs \"b\"", w.op)))?;
        vector(b)
    };
    let result = match w.op.as_str() {
        "add" => ring.add(&a, &b()?)?,
        "sub" => ring.sub(&a, &b()?)?,
        "mul" => ring.mul(&a, &b()?)?,
        "neg" => ring.neg(&a)?,
        "frobenius" => ring.frobenius(&a)?,
        "verschiebung" => ring.verschiebung(&a)?,
        "order" => return Ok(json!({ "result": ring.additive_order(&a)? })),
        other => return Err(CliError::usage(format!("unknown witt op {other:?}"))),
    };
    Ok(json!({ "result": result.components }))
}

pub fn hsym(input: &Value) -> Result<Value, CliError> {
    let h: HsymJson = decode(input)?;
    let g = hsym_group(h.q, h.i, h.n)?;
    Ok(serde_json::to_value(GroupJson::of(&g)).expect("groups serialize"))
}

pub fn nu_basis(ctx: &Ctx, input: &Value) -> Result<Value, CliError> {
    let b: NuBasisJson = decode(input)?;
    let k = resolve_field(ctx.field.as_ref(), b.p, b.vars.as_ref())?;
    let basis = nu_basis_bounded(&k, b.n, &TruncationSpec::standard(&k, b.bound))?;
    Ok(json!({ "basis": basis.iter().map(|w| form_value(&k, w)).collect::<Vec<_>>() }))
}

pub fn solve_as(ctx: &Ctx, input: &Value) -> Result<Value, CliError> {
    let s: SolveJson = decode(input)?;
    let k = resolve_field(ctx.field.as_ref(), s.p, s.vars.as_ref())?;
    let g = parse_value(&k, &s.g)?;
    let x = solve_artin_schreier_bounded(&k, &g, &TruncationSpec::standard(&k, s.bound))?;
    if let Some(x) = &x {
        if &x.pow(k.p() as i64)? - x != g {
            return Err(CliError::domain("solver returned a wrong solution"));
        }
    }
    Ok(json!({ "solution": x.map(|x| k.format(&x)) }))
}
