//! Output records and their JSON / CSV encodings.

use std::fmt::Display;
use std::io::{self, Write};

use cuspgate_core::curve::{Coeff, Curve, Point};
use cuspgate_core::gates::GateVerdict;
use cuspgate_core::search::{ModelCheck, SearchHit};
use cuspgate_core::tate::TateResult;
use cuspgate_core::CuspDivisor;
use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// What a subcommand produced. Keys serialize sorted.
#[derive(Clone, Debug, PartialEq)]
pub struct OutputRecord {
    pub subcommand: &'static str,
    pub input: Value,
    pub result: Value,
}

impl OutputRecord {
    pub fn to_value(&self) -> Value {
        json!({
            "input": self.input,
            "result": self.result,
            "subcommand": self.subcommand,
            "version": VERSION,
        })
    }

    pub fn to_json(&self) -> String {
        self.to_value().to_string()
    }
}

pub enum Output {
    Record(OutputRecord),
    Csv(Vec<u8>),
}

impl Output {
    pub fn write(&self, out: &mut dyn Write) -> io::Result<()> {
        match self {
            Output::Record(r) => writeln!(out, "{}", r.to_json()),
            Output::Csv(bytes) => out.write_all(bytes),
        }
    }
}

/// Decimal string; used for every arbitrary-precision value.
pub fn big(x: impl Display) -> Value {
    Value::String(x.to_string())
}

pub fn coeffs<R: Coeff + Display>(e: &Curve<R>) -> Value {
    Value::Array(e.coeffs().iter().map(big).collect())
}

pub fn point(p: &Point) -> Value {
    match p {
        Point::Infinity => Value::String("infinity".into()),
        Point::Affine(x, y) => json!({ "x": big(x), "y": big(y) }),
    }
}

pub fn divisor(w: &CuspDivisor) -> Value {
    w.sorted_pairs().into_iter().map(|(r, c)| json!({ "cusp": r, "coeff": big(c) })).collect()
}

pub fn verdict(v: &GateVerdict) -> Value {
    json!({
        "level": v.level,
        "status": v.status.to_string(),
        "reasons": v.reasons.iter().map(|r| json!({
            "rule": r.rule,
            "holds": r.holds,
            "detail": r.detail,
        })).collect::<Vec<_>>(),
        "orders": v.orders.iter().map(|(name, o)| json!({ "divisor": name, "order": big(o) })).collect::<Vec<_>>(),
    })
}

pub fn tate(l: &TateResult) -> Value {
    let t = &l.transform;
    json!({
        "prime": big(&l.p),
        "kodaira": l.kodaira.to_string(),
        "conductor_exponent": l.f,
        "tamagawa": l.c,
        "minimal": l.minimal,
        "discriminant_valuation": l.val_disc,
        "components": l.kodaira.components(),
        "minimal_model": coeffs(&l.model),
        "transform": { "u": big(&t.u), "r": big(&t.r), "s": big(&t.s), "t": big(&t.t) },
    })
}

fn model_check(m: &ModelCheck) -> Value {
    json!({
        "label": m.label,
        "model": coeffs(&m.model),
        "conductor": big(&m.conductor),
        "expected_conductor": m.expected_conductor.as_ref().map(big),
        "conductor_as_expected": m.conductor_as_expected(),
        "kodaira_at_2": m.kodaira_at_2.to_string(),
        "f2": m.f2,
        "two_torsion": m.two_torsion.to_string(),
        "gate": m.gate.map(|g| g.to_string()),
    })
}

pub fn hit(h: &SearchHit) -> Value {
    let params: serde_json::Map<String, Value> =
        h.params.iter().map(|(k, v)| (String::from(*k), big(v))).collect();
    json!({
        "family": h.family.name(),
        "params": params,
        "models": h.models.iter().map(model_check).collect::<Vec<_>>(),
        "notes": h.notes,
    })
}

fn params_cell(h: &SearchHit) -> String {
    h.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

/// One row per constructed model; hits without a model get a single row with
/// the model columns empty.
pub fn hits_csv(hits: &[SearchHit]) -> Result<Vec<u8>, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "family", "params", "label", "model", "conductor", "expected_conductor", "kodaira_at_2", "f2",
        "two_torsion", "gate", "notes",
    ])?;
    for h in hits {
        let notes = h.notes.join("; ");
        let family = h.family.name();
        let params = params_cell(h);
        if h.models.is_empty() {
            w.write_record([family, &params, "", "", "", "", "", "", "", "", &notes])?;
        }
        for m in &h.models {
            w.write_record([
                family,
                &params,
                &m.label,
                &m.model.to_string(),
                &m.conductor.to_string(),
                &m.expected_conductor.as_ref().map(|c| c.to_string()).unwrap_or_default(),
                &m.kodaira_at_2.to_string(),
                &m.f2.to_string(),
                &m.two_torsion.to_string(),
                &m.gate.map(|g| g.to_string()).unwrap_or_default(),
                &notes,
            ])?;
        }
    }
    w.into_inner().map_err(|e| e.into_error().into())
}
